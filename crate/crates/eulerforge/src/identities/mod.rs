//! Registry of identities between Euler-type sums, parametric digamma data
//! and hyperbolic series, and the harness that checks each one numerically.
//!
//! Every case evaluates its two sides independently through the public
//! operations of the other modules; a report records both values and the
//! residual.

mod general;
pub mod hyper;
mod kit;
mod linear;
mod params;
mod ramanujan;
mod report;
mod values;

pub use params::{Params, RealLabel, Value};
pub use report::{SuiteSummary, Status, VerificationReport};

use std::sync::OnceLock;
use std::time::Instant;

use crate::error::{Error, Result};
use crate::numkernel::{PrecisionContext, Real};
use crate::seqcore::{seq_alt, seq_geom, seq_harmonic, seq_ones};

pub type SideFn = fn(&Params, &PrecisionContext) -> Result<Real>;
pub type RestrictFn = fn(&Params) -> Option<String>;

/// Where an identity comes from and the words that introduce it.
#[derive(Clone, Debug)]
pub struct Citation {
    pub locator: &'static str,
    pub quote: &'static str,
}

/// The values one parameter ranges over.
#[derive(Clone, Debug)]
pub struct Domain {
    pub name: &'static str,
    pub values: Vec<Value>,
}

impl Domain {
    pub fn ints(name: &'static str, lo: i64, hi: i64) -> Domain {
        Domain { name, values: (lo..=hi).map(Value::Int).collect() }
    }

    pub fn reals(name: &'static str, labels: &[&str]) -> Domain {
        Domain { name, values: labels.iter().map(|l| Value::real(l)).collect() }
    }

    pub fn texts(name: &'static str, items: &[&str]) -> Domain {
        Domain { name, values: items.iter().map(|s| Value::Text(s.to_string())).collect() }
    }

    pub fn seqs(name: &'static str, set: SeqSet) -> Domain {
        Domain { name, values: set.members().into_iter().map(Value::Seq).collect() }
    }

    fn admits(&self, v: &Value) -> bool {
        self.values.iter().any(|d| match (d, v) {
            (Value::Real(a), Value::Real(b)) => match (a.approx(), b.approx()) {
                (Ok(x), Ok(y)) => (x - y).abs() <= 1e-12 * x.abs().max(1.0),
                _ => false,
            },
            _ => d == v,
        })
    }

    fn summary(&self) -> String {
        let vals: Vec<String> = self.values.iter().map(|v| v.to_string()).collect();
        let ints: Option<Vec<i64>> = self
            .values
            .iter()
            .map(|v| if let Value::Int(i) = v { Some(*i) } else { None })
            .collect();
        match ints {
            Some(is) if is.len() > 2 && is.windows(2).all(|w| w[1] == w[0] + 1) => {
                format!("{}∈[{},{}]", self.name, is[0], is[is.len() - 1])
            }
            _ => format!("{}∈{{{}}}", self.name, vals.join(",")),
        }
    }
}

/// Sequence sets used by the parameter grids.
#[derive(Clone, Copy, Debug)]
pub enum SeqSet {
    /// ones, alt
    Signs,
    /// ones, alt, geom:1/2
    Builtin,
    /// ones, alt, geom:1/2, harm
    WithHarmonic,
}

impl SeqSet {
    fn members(self) -> Vec<crate::seqcore::WeightSequence> {
        let geom = || seq_geom(rug::Rational::from((1, 2))).expect("geom:1/2");
        match self {
            SeqSet::Signs => vec![seq_ones(), seq_alt()],
            SeqSet::Builtin => vec![seq_ones(), seq_alt(), geom()],
            SeqSet::WithHarmonic => vec![seq_ones(), seq_alt(), geom(), seq_harmonic()],
        }
    }
}

/// One registered identity: lhs(params) = rhs(params) over a grid.
#[derive(Clone)]
pub struct IdentityCase {
    pub id: &'static str,
    pub citation: Citation,
    pub domain: Vec<Domain>,
    restriction: RestrictFn,
    lhs: SideFn,
    rhs: SideFn,
}

fn unrestricted(_: &Params) -> Option<String> {
    None
}

impl IdentityCase {
    pub(crate) fn new(id: &'static str, locator: &'static str, quote: &'static str, lhs: SideFn, rhs: SideFn) -> Self {
        IdentityCase {
            id,
            citation: Citation { locator, quote },
            domain: Vec::new(),
            restriction: unrestricted,
            lhs,
            rhs,
        }
    }

    pub(crate) fn param(mut self, d: Domain) -> Self {
        self.domain.push(d);
        self
    }

    pub(crate) fn restrict(mut self, r: RestrictFn) -> Self {
        self.restriction = r;
        self
    }

    /// Why an assignment is excluded, if it is.
    pub fn restriction(&self, p: &Params) -> Option<String> {
        (self.restriction)(p)
    }

    pub fn lhs(&self, p: &Params, ctx: &PrecisionContext) -> Result<Real> {
        (self.lhs)(p, ctx)
    }

    pub fn rhs(&self, p: &Params, ctx: &PrecisionContext) -> Result<Real> {
        (self.rhs)(p, ctx)
    }

    /// Every admissible assignment, in a fixed order (last parameter
    /// varies fastest).
    pub fn grid(&self) -> Vec<Params> {
        let mut out = vec![Params::new()];
        for d in &self.domain {
            out = out
                .into_iter()
                .flat_map(|p| d.values.iter().map(move |v| p.clone().with(d.name, v.clone())))
                .collect();
        }
        out.retain(|p| self.restriction(p).is_none());
        out
    }

    pub fn domain_summary(&self) -> String {
        if self.domain.is_empty() {
            return "no parameters".to_string();
        }
        self.domain.iter().map(Domain::summary).collect::<Vec<_>>().join(" ")
    }

    fn check(&self, p: &Params) -> Result<()> {
        for (name, v) in p.iter() {
            let d = self
                .domain
                .iter()
                .find(|d| d.name == name)
                .ok_or_else(|| Error::Domain(format!("{}: unknown parameter `{name}`", self.id)))?;
            if !d.admits(v) {
                return Err(Error::Domain(format!("{}: {name} = {v} outside {}", self.id, d.summary())));
            }
        }
        if let Some(d) = self.domain.iter().find(|d| p.get(d.name).is_none()) {
            return Err(Error::Domain(format!("{}: missing parameter `{}`", self.id, d.name)));
        }
        Ok(())
    }
}

/// All registered cases, in their fixed order.
pub fn registry() -> &'static [IdentityCase] {
    static REG: OnceLock<Vec<IdentityCase>> = OnceLock::new();
    REG.get_or_init(|| {
        let mut r = Vec::new();
        r.extend(linear::cases());
        r.extend(values::quadratic_cases());
        r.extend(general::cases());
        r.extend(values::cubic_cases());
        r.extend(ramanujan::cases());
        r
    })
}

pub fn find(id: &str) -> Result<&'static IdentityCase> {
    registry()
        .iter()
        .find(|c| c.id == id)
        .ok_or_else(|| Error::UnknownIdentity(id.to_string()))
}

fn run(case: &IdentityCase, p: &Params, ctx: &PrecisionContext) -> VerificationReport {
    let start = Instant::now();
    if let Some(reason) = case.restriction(p) {
        return VerificationReport::skipped(case.id, p.clone(), reason, start.elapsed());
    }
    let c = ctx.isolated();
    let lhs = case.lhs(p, &c);
    let rhs = case.rhs(p, &c);
    VerificationReport::judge(case.id, p.clone(), lhs, rhs, &ctx.tolerance(), c.terms_consumed(), start.elapsed())
}

/// Checks one case at one assignment.
pub fn verify(id: &str, params: &Params, ctx: &PrecisionContext) -> Result<VerificationReport> {
    let case = find(id)?;
    case.check(params)?;
    Ok(run(case, params, ctx))
}

/// Runs every case whose id starts with `filter` (all when `None`) over its
/// grid, in registry order.
pub fn suite(filter: Option<&str>, ctx: &PrecisionContext) -> Vec<VerificationReport> {
    cases_matching(filter)
        .into_iter()
        .flat_map(|c| c.grid().into_iter().map(move |p| run(c, &p, ctx)))
        .collect()
}

pub fn cases_matching(filter: Option<&str>) -> Vec<&'static IdentityCase> {
    registry()
        .iter()
        .filter(|c| filter.map_or(true, |f| c.id.starts_with(f)))
        .collect()
}

#[cfg(test)]
mod tests;
