use std::fmt;
use std::time::Duration;

use serde_json::{json, Map, Value as Json};

use super::params::Params;
use crate::error::Result;
use crate::numkernel::Real;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    /// With the error message when a side could not be evaluated.
    Fail(Option<String>),
    Skipped(String),
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Status::Pass => write!(f, "PASS"),
            Status::Fail(None) => write!(f, "FAIL"),
            Status::Fail(Some(e)) => write!(f, "FAIL({e})"),
            Status::Skipped(r) => write!(f, "SKIPPED({r})"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub id: String,
    pub params: Params,
    pub lhs: Option<Real>,
    pub rhs: Option<Real>,
    pub abs_residual: Option<Real>,
    pub rel_residual: Option<Real>,
    pub status: Status,
    pub terms: u64,
    pub wall_time: Duration,
}

impl VerificationReport {
    pub(crate) fn skipped(id: &str, params: Params, reason: String, wall_time: Duration) -> Self {
        VerificationReport {
            id: id.to_string(),
            params,
            lhs: None,
            rhs: None,
            abs_residual: None,
            rel_residual: None,
            status: Status::Skipped(reason),
            terms: 0,
            wall_time,
        }
    }

    pub(crate) fn judge(
        id: &str,
        params: Params,
        lhs: Result<Real>,
        rhs: Result<Real>,
        tol: &Real,
        terms: u64,
        wall_time: Duration,
    ) -> Self {
        let mut r = VerificationReport {
            id: id.to_string(),
            params,
            lhs: None,
            rhs: None,
            abs_residual: None,
            rel_residual: None,
            status: Status::Fail(None),
            terms,
            wall_time,
        };
        match (lhs, rhs) {
            (Ok(l), Ok(rv)) => {
                let abs = (&l - &rv).abs();
                let scale = l.abs().max(rv.abs());
                let rel = if scale.is_zero() { abs.zero_like() } else { &abs / &scale };
                if &abs < tol || &rel < tol {
                    r.status = Status::Pass;
                }
                r.abs_residual = Some(abs);
                r.rel_residual = Some(rel);
                r.lhs = Some(l);
                r.rhs = Some(rv);
            }
            (l, rv) => {
                let e = l.as_ref().err().or(rv.as_ref().err()).map(|e| e.to_string());
                r.lhs = l.ok();
                r.rhs = rv.ok();
                r.status = Status::Fail(e);
            }
        }
        r
    }

    /// Re-applies the pass rule with another tolerance. Reports whose sides
    /// could not be evaluated, and skipped ones, are left alone.
    pub fn rejudge(&mut self, tol: &Real) {
        if let (Some(abs), Some(rel)) = (&self.abs_residual, &self.rel_residual) {
            self.status = if abs < tol || rel < tol { Status::Pass } else { Status::Fail(None) };
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn failed(&self) -> bool {
        matches!(self.status, Status::Fail(_))
    }

    pub fn to_json(&self) -> Json {
        let num = |x: &Option<Real>| x.as_ref().map_or(Json::Null, |v| Json::String(v.to_full_decimal()));
        let mut params = Map::new();
        for (n, v) in self.params.iter() {
            params.insert(n.to_string(), Json::String(v.to_string()));
        }
        json!({
            "id": self.id,
            "params": params,
            "lhs": num(&self.lhs),
            "rhs": num(&self.rhs),
            "abs_residual": num(&self.abs_residual),
            "rel_residual": num(&self.rel_residual),
            "status": self.status.to_string(),
            "terms": self.terms,
            "ms": self.wall_time.as_millis() as u64,
        })
    }

    pub const CSV_HEADER: &'static str = "id,params,lhs,rhs,abs_residual,rel_residual,status,terms,ms";

    pub fn to_csv(&self) -> String {
        let num = |x: &Option<Real>| x.as_ref().map_or(String::new(), |v| v.to_full_decimal());
        let quote = |s: String| {
            if s.contains([',', '"', '\n']) {
                format!("\"{}\"", s.replace('"', "\"\""))
            } else {
                s
            }
        };
        [
            quote(self.id.clone()),
            quote(self.params.to_string()),
            num(&self.lhs),
            num(&self.rhs),
            num(&self.abs_residual),
            num(&self.rel_residual),
            quote(self.status.to_string()),
            self.terms.to_string(),
            self.wall_time.as_millis().to_string(),
        ]
        .join(",")
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let res = self.abs_residual.as_ref().map_or("-".to_string(), |r| r.to_decimal(3));
        write!(f, "{:<12} {:<40} {:<8} residual {res}", self.id, self.params.to_string(), self.status)?;
        if self.failed() {
            if let (Some(l), Some(r)) = (&self.lhs, &self.rhs) {
                write!(f, "  lhs {} rhs {}", l.to_decimal(25), r.to_decimal(25))?;
            }
        }
        write!(f, "  ({} ms)", self.wall_time.as_millis())
    }
}

/// Pass/fail/skip counts over a report list.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SuiteSummary {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
}

impl SuiteSummary {
    pub fn of(reports: &[VerificationReport]) -> SuiteSummary {
        let mut s = SuiteSummary::default();
        for r in reports {
            match r.status {
                Status::Pass => s.pass += 1,
                Status::Fail(_) => s.fail += 1,
                Status::Skipped(_) => s.skipped += 1,
            }
        }
        s
    }

    pub fn total(&self) -> usize {
        self.pass + self.fail + self.skipped
    }

    pub fn all_pass(&self) -> bool {
        self.fail == 0
    }
}

impl fmt::Display for SuiteSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} cases: {} pass, {} fail, {} skipped", self.total(), self.pass, self.fail, self.skipped)
    }
}
