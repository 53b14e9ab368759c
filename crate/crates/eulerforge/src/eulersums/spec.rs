use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::seqcore::{FunctionalKind, WeightSequence};

/// S_{p₁…p_r, q}: Σ_n Π H_n^{(pᵢ)} / n^q, with barred entries alternating.
///
/// Textual form `S[1,-2;3]`: inner orders before the semicolon (negative
/// means barred), outer order after it (negative means barred outer).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SumSpec {
    pub inner: Vec<(u32, bool)>,
    pub outer_q: u32,
    pub outer_barred: bool,
}

impl SumSpec {
    pub fn new(inner: Vec<(u32, bool)>, outer_q: u32, outer_barred: bool) -> Result<SumSpec> {
        let s = SumSpec { inner, outer_q, outer_barred };
        s.validate()?;
        Ok(s)
    }

    pub fn validate(&self) -> Result<()> {
        if self.inner.iter().any(|&(p, _)| p == 0) {
            return Err(Error::InvalidArgument(format!("{self}: inner orders must be ≥ 1")));
        }
        let min_q = if self.outer_barred { 1 } else { 2 };
        if self.outer_q < min_q {
            return Err(Error::Divergent(format!("{self}: outer order must be ≥ {min_q}")));
        }
        Ok(())
    }

    pub fn weight(&self) -> u32 {
        self.inner.iter().map(|&(p, _)| p).sum::<u32>() + self.outer_q
    }

    pub fn depth(&self) -> usize {
        self.inner.len()
    }
}

fn signed(p: u32, barred: bool) -> String {
    if barred {
        format!("-{p}")
    } else {
        p.to_string()
    }
}

impl fmt::Display for SumSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let inner: Vec<String> = self.inner.iter().map(|&(p, b)| signed(p, b)).collect();
        write!(f, "S[{};{}]", inner.join(","), signed(self.outer_q, self.outer_barred))
    }
}

impl FromStr for SumSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("bad sum spec `{s}` (expected e.g. S[1,-2;3])"));
        let body = s
            .trim()
            .strip_prefix("S[")
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(bad)?;
        let (inner, outer) = body.split_once(';').ok_or_else(bad)?;
        let parse = |t: &str| -> Result<(u32, bool)> {
            let v: i64 = t.trim().parse().map_err(|_| bad())?;
            if v == 0 || v.unsigned_abs() > u32::MAX as u64 {
                return Err(bad());
            }
            Ok((v.unsigned_abs() as u32, v < 0))
        };
        let inner = if inner.trim().is_empty() {
            vec![]
        } else {
            inner.split(',').map(parse).collect::<Result<_>>()?
        };
        let (q, qb) = parse(outer)?;
        SumSpec::new(inner, q, qb)
    }
}

/// One functional factor X_n^{(A)}(j) of a weighted sum.
#[derive(Clone, Debug)]
pub struct Factor {
    pub kind: FunctionalKind,
    pub seq: WeightSequence,
    pub j: u32,
}

impl Factor {
    pub fn new(kind: FunctionalKind, seq: WeightSequence, j: u32) -> Factor {
        Factor { kind, seq, j }
    }
}

/// Σ_{n≥1} (Π envelope a_n)·(Π factors X_n(j))/n^q. An empty envelope is
/// the constant sequence.
#[derive(Clone, Debug)]
pub struct WeightedSumSpec {
    pub envelope: Vec<WeightSequence>,
    pub factors: Vec<Factor>,
    pub outer_q: u32,
}

impl WeightedSumSpec {
    pub fn new(envelope: Vec<WeightSequence>, factors: Vec<Factor>, outer_q: u32) -> Result<WeightedSumSpec> {
        let s = WeightedSumSpec { envelope, factors, outer_q };
        s.validate()?;
        Ok(s)
    }

    pub fn validate(&self) -> Result<()> {
        if self.outer_q < 2 {
            return Err(Error::Divergent(format!("{self}: outer order must be ≥ 2")));
        }
        if self.factors.iter().any(|f| f.j == 0) {
            return Err(Error::InvalidArgument(format!("{self}: factor orders must be ≥ 1")));
        }
        if let Some(a) = self.envelope.iter().chain(self.factors.iter().map(|f| &f.seq)).find(|a| a.is_custom()) {
            return Err(Error::InvalidArgument(format!("{self}: custom sequence {a} cannot enter a weighted sum")));
        }
        if super::harmonic_envelope(self)
            && self.factors.iter().any(|f| matches!(f.kind, FunctionalKind::MBar | FunctionalKind::R))
        {
            return Err(Error::InvalidArgument(format!(
                "{self}: harmonic envelope cannot be combined with MBAR or R factors"
            )));
        }
        Ok(())
    }
}

impl fmt::Display for WeightedSumSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "W[")?;
        let env: Vec<&str> = self.envelope.iter().map(|a| a.name()).collect();
        write!(f, "{}", env.join("*"))?;
        for fac in &self.factors {
            write!(f, ";{}({},{})", fac.kind, fac.seq.name(), fac.j)?;
        }
        write!(f, ";{}]", self.outer_q)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        let s: SumSpec = "S[1,-2;3]".parse().unwrap();
        assert_eq!(s.inner, vec![(1, false), (2, true)]);
        assert_eq!((s.outer_q, s.outer_barred), (3, false));
        assert_eq!(s.to_string(), "S[1,-2;3]");
        let s: SumSpec = "S[2;-3]".parse().unwrap();
        assert!(s.outer_barred);
        assert_eq!(s.weight(), 5);
        let s: SumSpec = "S[;4]".parse().unwrap();
        assert_eq!(s.depth(), 0);
        assert!("S[1;1]".parse::<SumSpec>().is_err());
        assert!("S[1;-1]".parse::<SumSpec>().is_ok());
        assert!("S[0;2]".parse::<SumSpec>().is_err());
        assert!("T[1;2]".parse::<SumSpec>().is_err());
        assert!("S[1,2]".parse::<SumSpec>().is_err());
    }
}
