use std::fmt;

use crate::error::{Error, Result};
use crate::numkernel::{const_pi, const_sqrt, PrecisionContext, Real};
use crate::seqcore::WeightSequence;

/// A real parameter kept as an exact label such as `pi/2`, `sqrt2` or `0.3`
/// and evaluated at whatever precision a case runs at.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RealLabel(String);

enum Atom {
    Num(String),
    Pi,
    Sqrt(i64),
}

fn atoms(tok: &str) -> Result<Vec<Atom>> {
    let bad = || Error::Parse(format!("bad real label factor `{tok}`"));
    let mut out = Vec::new();
    let mut rest = tok;
    let digits = rest.find(|c: char| !(c.is_ascii_digit() || c == '.')).unwrap_or(rest.len());
    if digits > 0 {
        out.push(Atom::Num(rest[..digits].to_string()));
        rest = &rest[digits..];
    }
    if let Some(r) = rest.strip_prefix("pi") {
        out.push(Atom::Pi);
        rest = r;
    }
    if let Some(r) = rest.strip_prefix("sqrt") {
        out.push(Atom::Sqrt(r.parse().map_err(|_| bad())?));
        rest = "";
    }
    if !rest.is_empty() || out.is_empty() {
        return Err(bad());
    }
    Ok(out)
}

impl RealLabel {
    /// Products and quotients of decimals, `pi` and `sqrtN`: `2pi`,
    /// `pi/sqrt2`, `sqrt2*pi`, `0.7`.
    pub fn new(label: &str) -> Result<RealLabel> {
        let l = RealLabel(label.trim().to_string());
        l.approx()?;
        Ok(l)
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    fn fold<T>(&self, one: T, atom: impl Fn(&Atom) -> Result<T>, mul: impl Fn(T, T) -> T, div: impl Fn(T, T) -> T) -> Result<T> {
        let mut acc = one;
        let mut num = true;
        let s = self.0.replace('/', " / ").replace('*', " * ");
        for tok in s.split_whitespace() {
            match tok {
                "/" => num = false,
                "*" => num = true,
                t => {
                    for a in atoms(t)? {
                        let v = atom(&a)?;
                        acc = if num { mul(acc, v) } else { div(acc, v) };
                    }
                    num = true;
                }
            }
        }
        Ok(acc)
    }

    /// Double-precision value, for domain checks.
    pub fn approx(&self) -> Result<f64> {
        self.fold(
            1.0,
            |a| match a {
                Atom::Num(s) => s.parse::<f64>().map_err(|_| Error::Parse(format!("bad number `{s}`"))),
                Atom::Pi => Ok(std::f64::consts::PI),
                Atom::Sqrt(n) => Ok((*n as f64).sqrt()),
            },
            |x, y| x * y,
            |x, y| x / y,
        )
    }

    pub fn eval(&self, ctx: &PrecisionContext) -> Result<Real> {
        self.fold(
            ctx.one(),
            |a| match a {
                Atom::Num(s) => ctx.parse(s),
                Atom::Pi => Ok(const_pi(ctx)),
                Atom::Sqrt(n) => Ok(const_sqrt(*n, ctx)),
            },
            |x, y| x * y,
            |x, y| x / y,
        )
    }
}

/// One parameter value.
#[derive(Clone, Debug)]
pub enum Value {
    Int(i64),
    Seq(WeightSequence),
    Real(RealLabel),
    Text(String),
}

impl Value {
    pub fn real(label: &str) -> Value {
        Value::Real(RealLabel::new(label).expect("builtin label"))
    }
}

impl PartialEq for Value {
    fn eq(&self, other: &Value) -> bool {
        self.to_string() == other.to_string()
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Int(v) => write!(f, "{v}"),
            Value::Seq(a) => write!(f, "{a}"),
            Value::Real(l) => write!(f, "{}", l.as_str()),
            Value::Text(s) => write!(f, "{s}"),
        }
    }
}

/// An ordered parameter assignment.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Params(Vec<(String, Value)>);

impl Params {
    pub fn new() -> Params {
        Params(Vec::new())
    }

    pub fn with(mut self, name: &str, v: Value) -> Params {
        self.set(name, v);
        self
    }

    pub fn int(self, name: &str, v: i64) -> Params {
        self.with(name, Value::Int(v))
    }

    pub fn seq(self, name: &str, a: WeightSequence) -> Params {
        self.with(name, Value::Seq(a))
    }

    pub fn real(self, name: &str, label: &str) -> Params {
        self.with(name, Value::real(label))
    }

    pub fn text(self, name: &str, s: &str) -> Params {
        self.with(name, Value::Text(s.to_string()))
    }

    pub fn set(&mut self, name: &str, v: Value) {
        match self.0.iter_mut().find(|(n, _)| n == name) {
            Some(slot) => slot.1 = v,
            None => self.0.push((name.to_string(), v)),
        }
    }

    pub fn get(&self, name: &str) -> Option<&Value> {
        self.0.iter().find(|(n, _)| n == name).map(|(_, v)| v)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &Value)> {
        self.0.iter().map(|(n, v)| (n.as_str(), v))
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    fn missing(name: &str) -> Error {
        Error::Domain(format!("missing parameter `{name}`"))
    }

    pub(crate) fn i(&self, name: &str) -> Result<i64> {
        match self.get(name) {
            Some(Value::Int(v)) => Ok(*v),
            Some(v) => Err(Error::Domain(format!("`{name}` = {v} is not an integer"))),
            None => Err(Self::missing(name)),
        }
    }

    pub(crate) fn s(&self, name: &str) -> Result<&WeightSequence> {
        match self.get(name) {
            Some(Value::Seq(a)) => Ok(a),
            Some(v) => Err(Error::Domain(format!("`{name}` = {v} is not a sequence"))),
            None => Err(Self::missing(name)),
        }
    }

    pub(crate) fn r(&self, name: &str, ctx: &PrecisionContext) -> Result<Real> {
        match self.get(name) {
            Some(Value::Real(l)) => l.eval(ctx),
            Some(Value::Int(v)) => Ok(ctx.int(*v)),
            Some(v) => Err(Error::Domain(format!("`{name}` = {v} is not real"))),
            None => Err(Self::missing(name)),
        }
    }

    pub(crate) fn approx(&self, name: &str) -> Result<f64> {
        match self.get(name) {
            Some(Value::Real(l)) => l.approx(),
            Some(Value::Int(v)) => Ok(*v as f64),
            Some(v) => Err(Error::Domain(format!("`{name}` = {v} is not real"))),
            None => Err(Self::missing(name)),
        }
    }

    pub(crate) fn t(&self, name: &str) -> Result<&str> {
        match self.get(name) {
            Some(Value::Text(s)) => Ok(s),
            Some(v) => Err(Error::Domain(format!("`{name}` = {v} is not text"))),
            None => Err(Self::missing(name)),
        }
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|(n, v)| format!("{n}={v}")).collect();
        write!(f, "{}", parts.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labels() {
        let ctx = PrecisionContext::new(30).unwrap();
        let pi = const_pi(&ctx);
        for (l, want) in [
            ("pi", pi.clone()),
            ("2pi", pi.clone() * 2),
            ("pi/2", pi.clone() / 2),
            ("pi/sqrt2", pi.clone() / const_sqrt(2, &ctx)),
            ("sqrt2*pi", pi.clone() * const_sqrt(2, &ctx)),
            ("0.3", ctx.ratio(3, 10)),
        ] {
            let got = RealLabel::new(l).unwrap().eval(&ctx).unwrap();
            assert!((got - want).abs() < ctx.tolerance(), "{l}");
        }
        assert!(RealLabel::new("tau").is_err());
        assert!(RealLabel::new("sqrtx").is_err());
    }

    #[test]
    fn params_accessors() {
        let p = Params::new().int("k", 2).real("alpha", "pi").int("k", 3);
        assert_eq!(p.i("k").unwrap(), 3);
        assert_eq!(p.to_string(), "k=3,alpha=pi");
        assert!(p.i("alpha").is_err());
        assert!(matches!(p.i("q"), Err(Error::Domain(_))));
    }
}
