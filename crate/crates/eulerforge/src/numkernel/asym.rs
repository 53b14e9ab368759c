//! Large-n asymptotic expansions in the basis (−1)^{εn}·log^j(n)·n^{−k}.
//!
//! This is the workhorse behind every slowly convergent tail: a sequence is
//! summed directly up to some cutoff N and the rest comes from its expansion,
//! either through [`Expansion::tail`] (Euler–Maclaurin for the smooth part,
//! Boole summation for the alternating part) or through
//! [`Expansion::partial_sum_shape`], which gives the n-dependence of partial
//! sums up to an additive constant that the caller fits numerically.

use std::collections::BTreeMap;

use rug::Float;

use super::bernoulli::bernoulli;
use super::context::PrecisionContext;
use super::real::Real;
use crate::error::{Error, Result};

/// (−1)^{n·alt} · log(n)^log · n^{−pow}
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Mono {
    pub alt: bool,
    pub log: u32,
    pub pow: i32,
}

impl Mono {
    pub const ONE: Mono = Mono { alt: false, log: 0, pow: 0 };

    pub fn power(pow: i32) -> Mono {
        Mono { alt: false, log: 0, pow }
    }

    pub fn alt_power(pow: i32) -> Mono {
        Mono { alt: true, log: 0, pow }
    }

    fn times(self, o: Mono) -> Mono {
        Mono {
            alt: self.alt != o.alt,
            log: self.log + o.log,
            pow: self.pow + o.pow,
        }
    }
}

/// Truncated expansion; monomials with `pow > order` are dropped.
#[derive(Clone, Debug)]
pub struct Expansion {
    terms: BTreeMap<Mono, Real>,
    order: i32,
    prec: u32,
}

impl Expansion {
    pub fn zero(ctx: &PrecisionContext, order: i32) -> Expansion {
        Expansion { terms: BTreeMap::new(), order, prec: ctx.prec_bits() }
    }

    pub fn constant(ctx: &PrecisionContext, order: i32, c: Real) -> Expansion {
        Self::mono(ctx, order, Mono::ONE, c)
    }

    pub fn mono(ctx: &PrecisionContext, order: i32, m: Mono, c: Real) -> Expansion {
        let mut e = Self::zero(ctx, order);
        e.push(m, c);
        e
    }

    /// n^{−k}
    pub fn power(ctx: &PrecisionContext, order: i32, k: i32) -> Expansion {
        Self::mono(ctx, order, Mono::power(k), ctx.one())
    }

    /// (−1)^n
    pub fn sign(ctx: &PrecisionContext, order: i32) -> Expansion {
        Self::mono(ctx, order, Mono::alt_power(0), ctx.one())
    }

    pub fn order(&self) -> i32 {
        self.order
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &Real)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: Mono) -> Option<&Real> {
        self.terms.get(&m)
    }

    fn real(&self, v: i64) -> Real {
        Real::from_float(Float::with_val(self.prec, v))
    }

    pub fn push(&mut self, m: Mono, c: Real) {
        if m.pow > self.order || c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(v) => *v += c,
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn add(&self, o: &Expansion) -> Expansion {
        let mut out = Expansion {
            terms: BTreeMap::new(),
            order: self.order.min(o.order),
            prec: self.prec,
        };
        for (m, c) in self.terms.iter().chain(o.terms.iter()) {
            out.push(*m, c.clone());
        }
        out
    }

    pub fn sub(&self, o: &Expansion) -> Expansion {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Expansion {
        self.map(|_, c| Some(-c))
    }

    pub fn scale(&self, s: &Real) -> Expansion {
        self.map(|_, c| Some(c * s))
    }

    pub fn mul(&self, o: &Expansion) -> Expansion {
        let mut out = Expansion {
            terms: BTreeMap::new(),
            order: self.order.min(o.order),
            prec: self.prec,
        };
        for (ma, ca) in &self.terms {
            for (mb, cb) in &o.terms {
                let m = ma.times(*mb);
                if m.pow <= out.order {
                    out.push(m, ca * cb);
                }
            }
        }
        out
    }

    /// Multiplies by a single monomial.
    pub fn mul_mono(&self, m: Mono, c: &Real) -> Expansion {
        let mut out = Expansion { terms: BTreeMap::new(), order: self.order, prec: self.prec };
        for (k, v) in &self.terms {
            out.push(k.times(m), v * c);
        }
        out
    }

    /// Multiplies by (−1)^n.
    pub fn alternate(&self) -> Expansion {
        let mut out = Expansion { terms: BTreeMap::new(), order: self.order, prec: self.prec };
        for (m, c) in &self.terms {
            out.push(Mono { alt: !m.alt, ..*m }, c.clone());
        }
        out
    }

    pub fn with_order(&self, order: i32) -> Expansion {
        let mut out = Expansion { terms: BTreeMap::new(), order, prec: self.prec };
        for (m, c) in &self.terms {
            out.push(*m, c.clone());
        }
        out
    }

    fn map(&self, f: impl Fn(&Mono, &Real) -> Option<Real>) -> Expansion {
        let mut out = Expansion { terms: BTreeMap::new(), order: self.order, prec: self.prec };
        for (m, c) in &self.terms {
            if let Some(v) = f(m, c) {
                out.push(*m, v);
            }
        }
        out
    }

    /// Splits into the smooth part and the smooth factor h of (−1)^n·h.
    pub fn split(&self) -> (Expansion, Expansion) {
        let mut smooth = Expansion { terms: BTreeMap::new(), order: self.order, prec: self.prec };
        let mut alt = smooth.clone();
        for (m, c) in &self.terms {
            if m.alt {
                alt.push(Mono { alt: false, ..*m }, c.clone());
            } else {
                smooth.push(*m, c.clone());
            }
        }
        (smooth, alt)
    }

    /// d/dn of the smooth factor of every monomial.
    pub fn deriv(&self) -> Expansion {
        let mut out = Expansion { terms: BTreeMap::new(), order: self.order, prec: self.prec };
        for (m, c) in &self.terms {
            if m.log > 0 {
                out.push(
                    Mono { log: m.log - 1, pow: m.pow + 1, ..*m },
                    c * (m.log as i64),
                );
            }
            if m.pow != 0 {
                out.push(Mono { pow: m.pow + 1, ..*m }, c * (-(m.pow as i64)));
            }
        }
        out
    }

    /// Antiderivative of the smooth factor (no constant).
    pub fn antiderivative(&self) -> Expansion {
        let mut out = Expansion { terms: BTreeMap::new(), order: self.order, prec: self.prec };
        for (m, c) in &self.terms {
            if m.pow == 1 {
                out.push(Mono { log: m.log + 1, pow: 0, ..*m }, c / (m.log as i64 + 1));
                continue;
            }
            // ∫ log^j x · x^{−k} dx = x^{1−k} Σ_i (−1)^i j!/(j−i)! log^{j−i}x / (1−k)^{i+1}
            let a = 1 - m.pow as i64;
            let mut coef = c / a;
            for i in 0..=m.log {
                out.push(Mono { log: m.log - i, pow: m.pow - 1, ..*m }, coef.clone());
                coef = -(coef * (m.log - i) as i64) / a;
            }
        }
        out
    }

    /// f(n+h) by Taylor expansion of the smooth factors.
    pub fn shift(&self, h: i64) -> Expansion {
        let mut out = Expansion { terms: BTreeMap::new(), order: self.order, prec: self.prec };
        let odd = h.rem_euclid(2) == 1;
        let mut d = self.clone();
        let mut fact = self.real(1);
        let mut i = 0i64;
        while !d.is_empty() {
            let f = self.real(h).powi(i as i32) / &fact;
            for (m, c) in &d.terms {
                let s = if m.alt && odd { -(c * &f) } else { c * &f };
                out.push(*m, s);
            }
            i += 1;
            fact = fact * i;
            d = d.deriv();
            if h == 0 {
                break;
            }
        }
        out
    }

    pub fn eval(&self, n: u64) -> Real {
        let mut acc = self.real(0);
        if self.terms.is_empty() {
            return acc;
        }
        let nf = Real::from_float(Float::with_val(self.prec, n));
        let ln = nf.ln();
        let inv = nf.recip();
        let mut logs = vec![self.real(1)];
        let mut pows: BTreeMap<i32, Real> = BTreeMap::new();
        let odd = n % 2 == 1;
        for (m, c) in &self.terms {
            while logs.len() <= m.log as usize {
                let next = logs.last().unwrap() * &ln;
                logs.push(next);
            }
            let p = pows
                .entry(m.pow)
                .or_insert_with(|| if m.pow >= 0 { inv.powi(m.pow) } else { nf.powi(-m.pow) })
                .clone();
            let mut t = c * &logs[m.log as usize] * p;
            if m.alt && odd {
                t = -t;
            }
            acc += t;
        }
        acc
    }

    /// P(n) such that Σ_{m≤n} f(m) = C + P(n) for some constant C.
    pub fn partial_sum_shape(&self) -> Result<Expansion> {
        let (smooth, alt) = self.split();
        let mut out = Expansion { terms: BTreeMap::new(), order: self.order, prec: self.prec };
        // Euler–Maclaurin: ∫ g + g/2 + Σ B_{2i}/(2i)! g^{(2i−1)}
        if !smooth.is_empty() {
            out = out.add(&smooth.antiderivative());
            out = out.add(&smooth.scale(&(self.real(1) / 2)));
            let mut d = smooth.deriv();
            let mut fact = self.real(2);
            let mut i = 1i64;
            while !d.is_empty() {
                let b = Real::from_float(Float::with_val(self.prec, &bernoulli(2 * i)?));
                out = out.add(&d.scale(&(b / &fact)));
                d = d.deriv().deriv();
                i += 1;
                fact = fact * ((2 * i - 1) * (2 * i));
            }
        }
        // Boole: (−1)^n [h/2 + Σ_{r odd} (2^{r+1}−1) B_{r+1}/(r+1)! · h^{(r)}]
        if !alt.is_empty() {
            let mut part = alt.scale(&(self.real(1) / 2));
            let mut d = alt.deriv();
            let mut r = 1i64;
            let mut fact = self.real(2);
            while !d.is_empty() {
                let b = Real::from_float(Float::with_val(self.prec, &bernoulli(r + 1)?));
                let w = (self.real(2).powi(r as i32 + 1) - 1) * b / &fact;
                part = part.add(&d.scale(&w));
                d = d.deriv().deriv();
                r += 2;
                fact = fact * (r * (r + 1));
            }
            out = out.add(&part.alternate());
        }
        Ok(out)
    }

    /// Σ_{n≥start} f(n). Monomials whose sum diverges are an error unless
    /// their coefficient is below `negligible` (cancellation residue).
    pub fn tail(&self, start: u64, negligible: &Real) -> Result<Real> {
        if start < 2 {
            return Err(Error::InvalidArgument("expansion tails start at n ≥ 2".into()));
        }
        let mut conv = Expansion { terms: BTreeMap::new(), order: self.order, prec: self.prec };
        for (m, c) in &self.terms {
            let ok = if m.alt { m.pow >= 1 } else { m.pow >= 2 };
            if ok {
                conv.push(*m, c.clone());
            } else if c.abs() > *negligible {
                return Err(Error::Divergent(format!(
                    "tail term {}log^{}(n)·n^-{} with coefficient {}",
                    if m.alt { "(-1)^n·" } else { "" },
                    m.log,
                    m.pow,
                    c.to_decimal(6)
                )));
            }
        }
        Ok(-conv.partial_sum_shape()?.eval(start - 1))
    }

    /// log10 of the size of the highest-order monomials at n, a proxy for
    /// the truncation error of evaluating this expansion there.
    pub fn truncation_log10(&self, n: u64) -> f64 {
        let ln = (n as f64).ln();
        let mut worst = f64::NEG_INFINITY;
        for (m, c) in &self.terms {
            if m.pow >= self.order - 2 {
                let v = c.log10_abs() + (m.log as f64) * ln.log10() - (m.pow as f64) * (n as f64).log10();
                worst = worst.max(v);
            }
        }
        worst
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx() -> PrecisionContext {
        PrecisionContext::new(40).unwrap()
    }

    #[test]
    fn antiderivative_differentiates_back() {
        let c = ctx();
        let mut e = Expansion::zero(&c, 40);
        e.push(Mono { alt: false, log: 3, pow: 4 }, c.int(2));
        e.push(Mono { alt: false, log: 2, pow: 1 }, c.int(5));
        e.push(Mono { alt: false, log: 0, pow: 7 }, c.int(-3));
        let back = e.antiderivative().deriv();
        let diff = back.sub(&e);
        for (_, v) in diff.terms() {
            assert!(v.abs() < c.pow10(-45));
        }
    }

    #[test]
    fn zeta_two_tail_from_shape() {
        let c = ctx();
        let f = Expansion::power(&c, 30, 2);
        let tail = f.tail(10_000, &c.zero()).unwrap();
        let mut partial = c.zero();
        for n in 1..10_000u64 {
            partial += c.inv_pow(n, 2);
        }
        let pi = c.parse("3.14159265358979323846264338327950288419716939937510582").unwrap();
        let z2 = &pi * &pi / 6;
        assert!((partial + tail - z2).abs() < c.pow10(-45));
    }

    #[test]
    fn alternating_tail_matches_log2() {
        let c = ctx();
        // Σ_{n≥1} (−1)^{n−1}/n = log 2
        let f = Expansion::mono(&c, 30, Mono::alt_power(1), c.int(-1));
        let mut head = c.zero();
        for n in 1..1000u64 {
            let t = c.ratio(1, n as i64);
            if n % 2 == 1 { head += t } else { head -= t }
        }
        let total = head + f.tail(1000, &c.zero()).unwrap();
        let ln2 = c.int(2).ln();
        assert!((total - ln2).abs() < c.pow10(-45));
    }

    #[test]
    fn shift_matches_direct_evaluation() {
        let c = ctx();
        let mut e = Expansion::zero(&c, 40);
        e.push(Mono { alt: true, log: 1, pow: 2 }, c.int(3));
        e.push(Mono { alt: false, log: 0, pow: 3 }, c.int(1));
        let s = e.shift(-1);
        let direct = e.eval(4999);
        let shifted = s.eval(5000);
        assert!((direct - shifted).abs() < c.pow10(-45));
    }

    #[test]
    fn divergent_tails_are_rejected() {
        let c = ctx();
        let f = Expansion::power(&c, 20, 1);
        assert!(matches!(f.tail(100, &c.zero()), Err(Error::Divergent(_))));
        let tiny = Expansion::constant(&c, 20, c.pow10(-70));
        assert!(tiny.tail(100, &c.pow10(-60)).unwrap().is_zero());
    }
}
