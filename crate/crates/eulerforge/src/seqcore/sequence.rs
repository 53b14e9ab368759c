use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use rug::{Integer, Rational};

use crate::error::{Error, Result};
use crate::numkernel::{euler_gamma, Expansion, Mono, PrecisionContext, Real};

pub type TermFn = Arc<dyn Fn(i64, &PrecisionContext) -> Real + Send + Sync>;

#[derive(Clone)]
pub enum SeqKind {
    Ones,
    Alt,
    /// a_k = r^{|k|}
    Geom(Rational),
    /// a_k = H_k for k ≥ 0, 0 for k < 0
    Harmonic,
    Custom(TermFn),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Tag {
    IsOnes,
    IsAlt,
}

/// A bi-infinite real sequence {a_k} with a_k = o(k^α), α < 1.
#[derive(Clone)]
pub struct WeightSequence {
    name: String,
    kind: SeqKind,
    growth_alpha: f64,
    tags: Vec<Tag>,
}

impl fmt::Debug for WeightSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "WeightSequence({})", self.name)
    }
}

impl fmt::Display for WeightSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

impl PartialEq for WeightSequence {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name
    }
}

pub fn seq_ones() -> WeightSequence {
    WeightSequence {
        name: "ones".into(),
        kind: SeqKind::Ones,
        growth_alpha: 0.0,
        tags: vec![Tag::IsOnes],
    }
}

pub fn seq_alt() -> WeightSequence {
    WeightSequence {
        name: "alt".into(),
        kind: SeqKind::Alt,
        growth_alpha: 0.0,
        tags: vec![Tag::IsAlt],
    }
}

pub fn seq_geom(r: Rational) -> Result<WeightSequence> {
    if r.clone().abs() >= 1 {
        return Err(Error::InvalidArgument(format!("geom ratio {r} must satisfy |r| < 1")));
    }
    Ok(WeightSequence {
        name: format!("geom:{r}"),
        kind: SeqKind::Geom(r),
        growth_alpha: 0.0,
        tags: vec![],
    })
}

pub fn seq_harmonic() -> WeightSequence {
    WeightSequence {
        name: "harm".into(),
        kind: SeqKind::Harmonic,
        // H_k = O(log k)
        growth_alpha: 0.01,
        tags: vec![],
    }
}

impl WeightSequence {
    /// A user-supplied sequence. Functionals of custom sequences are summed
    /// directly with a tail bound derived from `growth_alpha`, so they only
    /// converge in reasonable time for fast-decaying sequences.
    pub fn custom<F>(name: &str, growth_alpha: f64, term: F) -> Result<WeightSequence>
    where
        F: Fn(i64, &PrecisionContext) -> Real + Send + Sync + 'static,
    {
        if growth_alpha.is_nan() || growth_alpha >= 1.0 {
            return Err(Error::InvalidArgument(format!(
                "growth exponent {growth_alpha} must be < 1"
            )));
        }
        Ok(WeightSequence {
            name: format!("custom:{name}"),
            kind: SeqKind::Custom(Arc::new(term)),
            growth_alpha,
            tags: vec![],
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn kind(&self) -> &SeqKind {
        &self.kind
    }

    pub fn growth_alpha(&self) -> f64 {
        self.growth_alpha
    }

    pub fn tags(&self) -> &[Tag] {
        &self.tags
    }

    pub fn is_harmonic(&self) -> bool {
        matches!(self.kind, SeqKind::Harmonic)
    }

    pub fn is_custom(&self) -> bool {
        matches!(self.kind, SeqKind::Custom(_))
    }

    pub fn term(&self, k: i64, ctx: &PrecisionContext) -> Real {
        match &self.kind {
            SeqKind::Ones => ctx.one(),
            SeqKind::Alt => ctx.int(if k.rem_euclid(2) == 0 { 1 } else { -1 }),
            SeqKind::Geom(r) => ctx.rational(r).powi(k.unsigned_abs() as i32),
            SeqKind::Harmonic => {
                if k <= 0 {
                    return ctx.zero();
                }
                let mut h = Rational::new();
                for i in 1..=k {
                    h += Rational::from((1, i));
                }
                ctx.rational(&h)
            }
            SeqKind::Custom(f) => f(k, ctx),
        }
    }

    /// a_0 … a_n.
    pub fn terms_upto(&self, n: u64, ctx: &PrecisionContext) -> Vec<Real> {
        match &self.kind {
            SeqKind::Harmonic => {
                let mut out = Vec::with_capacity(n as usize + 1);
                let mut h = ctx.zero();
                out.push(h.clone());
                for k in 1..=n {
                    h += ctx.ratio(1, k as i64);
                    out.push(h.clone());
                }
                out
            }
            SeqKind::Geom(r) => {
                let r = ctx.rational(r);
                let mut out = Vec::with_capacity(n as usize + 1);
                let mut p = ctx.one();
                for _ in 0..=n {
                    out.push(p.clone());
                    p *= &r;
                }
                out
            }
            _ => (0..=n as i64).map(|k| self.term(k, ctx)).collect(),
        }
    }

    /// λ with a_{k+n} = λ(n)·a_k for all k ≥ 0, n ≥ 0, when it exists.
    pub(crate) fn shift_factor(&self, n: i64, ctx: &PrecisionContext) -> Option<Real> {
        match &self.kind {
            SeqKind::Ones => Some(ctx.one()),
            SeqKind::Alt => Some(self.term(n, ctx)),
            SeqKind::Geom(r) if n >= 0 => Some(ctx.rational(r).powi(n as i32)),
            _ => None,
        }
    }

    /// Expansion of λ(n) for large n (exponentially small parts dropped).
    pub(crate) fn shift_factor_expansion(&self, ctx: &PrecisionContext, order: i32) -> Option<Expansion> {
        match &self.kind {
            SeqKind::Ones => Some(Expansion::constant(ctx, order, ctx.one())),
            SeqKind::Alt => Some(Expansion::sign(ctx, order)),
            SeqKind::Geom(_) => Some(Expansion::zero(ctx, order)),
            _ => None,
        }
    }

    /// Expansion of a_k as k → +∞.
    pub fn term_expansion(&self, ctx: &PrecisionContext, order: i32) -> Result<Expansion> {
        match &self.kind {
            SeqKind::Ones => Ok(Expansion::constant(ctx, order, ctx.one())),
            SeqKind::Alt => Ok(Expansion::sign(ctx, order)),
            SeqKind::Geom(_) => Ok(Expansion::zero(ctx, order)),
            SeqKind::Harmonic => harmonic_expansion(ctx, order),
            SeqKind::Custom(_) => Err(Error::InvalidArgument(format!(
                "{} has no asymptotic expansion",
                self.name
            ))),
        }
    }

    /// Direct-summation cutoff at which the expansions of this sequence's
    /// functionals are accurate to working precision.
    pub fn cutoff(&self, ctx: &PrecisionContext) -> u64 {
        const BASE: u64 = 1000;
        match &self.kind {
            SeqKind::Geom(r) => {
                let lr = -(r.to_f64().abs()).ln();
                let need = 3.0 * (ctx.working_digits() as f64 + 5.0) * std::f64::consts::LN_10 / lr;
                BASE.max(need.ceil() as u64)
            }
            _ => BASE,
        }
    }
}

/// H_n = log n + γ + 1/(2n) − Σ B_{2i}/(2i·n^{2i}).
pub fn harmonic_expansion(ctx: &PrecisionContext, order: i32) -> Result<Expansion> {
    let shape = Expansion::power(ctx, order, 1).partial_sum_shape()?;
    let mut e = shape;
    e.push(Mono::ONE, euler_gamma(ctx)?);
    Ok(e)
}

fn parse_ratio(s: &str) -> Result<Rational> {
    let bad = || Error::Parse(format!("bad geom ratio `{s}`"));
    if let Some((p, q)) = s.split_once('/') {
        let p: Integer = p.trim().parse().map_err(|_| bad())?;
        let q: Integer = q.trim().parse().map_err(|_| bad())?;
        if q == 0 {
            return Err(bad());
        }
        return Ok(Rational::from((p, q)));
    }
    let (neg, body) = match s.strip_prefix('-') {
        Some(b) => (true, b),
        None => (false, s),
    };
    let (int, frac) = body.split_once('.').unwrap_or((body, ""));
    if int.is_empty() && frac.is_empty() {
        return Err(bad());
    }
    if !int.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()) {
        return Err(bad());
    }
    let digits: Integer = format!("{int}{frac}0").parse().map_err(|_| bad())?;
    let den = Integer::from(Integer::u_pow_u(10, frac.len() as u32 + 1));
    let q = Rational::from((digits, den));
    Ok(if neg { -q } else { q })
}

impl FromStr for WeightSequence {
    type Err = Error;

    /// `ones`, `alt`, `geom:<r>` (r decimal or p/q), `harm`.
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "ones" => Ok(seq_ones()),
            "alt" => Ok(seq_alt()),
            "harm" => Ok(seq_harmonic()),
            other => match other.strip_prefix("geom:") {
                Some(r) => seq_geom(parse_ratio(r)?),
                None => Err(Error::Parse(format!(
                    "unknown sequence `{other}` (expected ones|alt|geom:<r>|harm)"
                ))),
            },
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_terms() {
        let ctx = PrecisionContext::new(30).unwrap();
        assert_eq!(seq_alt().term(0, &ctx), ctx.one());
        assert_eq!(seq_alt().term(-3, &ctx), ctx.int(-1));
        let g = seq_geom(Rational::from((1, 2))).unwrap();
        assert_eq!(g.term(-3, &ctx), ctx.ratio(1, 8));
        assert_eq!(seq_harmonic().term(4, &ctx), ctx.ratio(25, 12));
        assert_eq!(seq_harmonic().term(-4, &ctx), ctx.zero());
        assert!(seq_geom(Rational::from(1)).is_err());
        assert!(WeightSequence::custom("x", 1.0, |_, c| c.one()).is_err());
    }

    #[test]
    fn parse_names() {
        assert_eq!("geom:0.5".parse::<WeightSequence>().unwrap().name(), "geom:1/2");
        assert_eq!("geom:1/3".parse::<WeightSequence>().unwrap().name(), "geom:1/3");
        assert_eq!("geom:-.25".parse::<WeightSequence>().unwrap().name(), "geom:-1/4");
        assert!("geom:2".parse::<WeightSequence>().is_err());
        assert!("geom:x".parse::<WeightSequence>().is_err());
        assert!("nope".parse::<WeightSequence>().is_err());
    }

    #[test]
    fn harmonic_expansion_matches_values() {
        let ctx = PrecisionContext::new(40).unwrap();
        let e = harmonic_expansion(&ctx, 30).unwrap();
        let h = seq_harmonic().terms_upto(2000, &ctx);
        assert!((e.eval(2000) - &h[2000]).abs() < ctx.pow10(-45));
    }
}
