use crate::error::{Error, Result};
use crate::numkernel::{PrecisionContext, Real};
use crate::seqcore::functional::binom;
use crate::seqcore::{func_d, functional, FunctionalKind, WeightSequence};

/// Extra coefficients computed past the truncation to estimate its error.
const LOOKAHEAD: usize = 3;

/// principal/(s−c)^p + Σ_{i<J} regular[i]·(s−c)^i
#[derive(Clone, Debug)]
pub struct LaurentExpansion {
    pub center: i64,
    pub principal_coeff: Real,
    pub regular_coeffs: Vec<Real>,
    pub order_p: u32,
    pub truncation_j: usize,
    neglected: Vec<Real>,
}

impl LaurentExpansion {
    fn new(center: i64, principal: Real, p: u32, j: usize, mut all: Vec<Real>) -> Self {
        let neglected = all.split_off(j);
        LaurentExpansion {
            center,
            principal_coeff: principal,
            regular_coeffs: all,
            order_p: p,
            truncation_j: j,
            neglected,
        }
    }

    /// Value at s = center + h.
    pub fn eval(&self, h: &Real) -> Real {
        let mut acc = h.zero_like();
        for c in self.regular_coeffs.iter().rev() {
            acc = acc * h + c;
        }
        if !self.principal_coeff.is_zero() {
            acc += &self.principal_coeff / h.powi(self.order_p as i32);
        }
        acc
    }

    /// Truncation estimate at h: the largest |c_i·h^i| among the first few
    /// neglected coefficients. A single coefficient can nearly vanish (for
    /// A₁ at n ≥ 1 the odd ones are 1 − ζ(j)), so one look is not enough.
    pub fn first_neglected(&self, h: &Real) -> Real {
        self.neglected
            .iter()
            .enumerate()
            .map(|(k, c)| (c * h.powi((self.truncation_j + k) as i32)).abs())
            .fold(h.zero_like(), Real::max)
    }
}

fn check(j: usize) -> Result<()> {
    if j == 0 {
        return Err(Error::InvalidArgument("truncation J must be ≥ 1".into()));
    }
    Ok(())
}

/// Ψ^{(p−1)}(−s;A)/(p−1)! about s = n ≥ 0: a_n/(s−n)^p plus the regular part
/// −Σ_j (−1)^j C(j+p−2,p−1) M_n(j+p−1) (s−n)^{j−1}; at n = 0 the regular
/// coefficients are (−1)^p C(j+p−2,p−1) D(j+p−1).
pub fn laurent_pos(a: &WeightSequence, n: u64, p: u32, j: usize, ctx: &PrecisionContext) -> Result<LaurentExpansion> {
    check(j)?;
    if p == 0 {
        return Err(Error::InvalidArgument("order p must be ≥ 1".into()));
    }
    let mut all = Vec::with_capacity(j + LOOKAHEAD);
    for i in 1..=(j + LOOKAHEAD) as u32 {
        let b = binom(i + p - 2, p - 1, ctx);
        let c = if n == 0 {
            let d = func_d(a, i + p - 1, ctx)?;
            if p % 2 == 0 { b * d } else { -(b * d) }
        } else {
            let m = functional(FunctionalKind::M, a, n, i + p - 1, ctx)?;
            if i % 2 == 1 { b * m } else { -(b * m) }
        };
        all.push(c);
    }
    Ok(LaurentExpansion::new(n as i64, a.term(n as i64, ctx), p, j, all))
}

/// Ψ^{(p−1)}(−s;A)/(p−1)! about s = −n, n ≥ 1 (regular there):
/// (−1)^p Σ_j C(j+p−2,p−1) M̄_n(j+p−1) (s+n)^{j−1}.
pub fn laurent_neg(a: &WeightSequence, n: u64, p: u32, j: usize, ctx: &PrecisionContext) -> Result<LaurentExpansion> {
    check(j)?;
    if n == 0 || p == 0 {
        return Err(Error::InvalidArgument("laurent_neg needs n ≥ 1 and p ≥ 1".into()));
    }
    let mut all = Vec::with_capacity(j + LOOKAHEAD);
    for i in 1..=(j + LOOKAHEAD) as u32 {
        let c = binom(i + p - 2, p - 1, ctx) * functional(FunctionalKind::MBar, a, n, i + p - 1, ctx)?;
        all.push(if p % 2 == 0 { c } else { -c });
    }
    Ok(LaurentExpansion::new(-(n as i64), ctx.zero(), p, j, all))
}

/// π·cot(πs;A) about any integer n: a_{|n|}/(s−n) − Σ_j (−σ_n)^j R_{|n|}(j) (s−n)^{j−1}.
pub fn cot_laurent(a: &WeightSequence, n: i64, j: usize, ctx: &PrecisionContext) -> Result<LaurentExpansion> {
    check(j)?;
    let m = n.unsigned_abs();
    let mut all = Vec::with_capacity(j + LOOKAHEAD);
    for i in 1..=(j + LOOKAHEAD) as u32 {
        let r = functional(FunctionalKind::R, a, m, i, ctx)?;
        // −(−σ)^i R
        let flip = if n >= 0 { i % 2 == 0 } else { true };
        all.push(if flip { -r } else { r });
    }
    Ok(LaurentExpansion::new(n, a.term(m as i64, ctx), 1, j, all))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digamma::{cot_param, psi_param_deriv};
    use crate::numkernel::zeta;
    use crate::seqcore::{seq_alt, seq_geom, seq_harmonic, seq_ones};
    use rug::Rational;

    fn ctx() -> PrecisionContext {
        PrecisionContext::new(30).unwrap()
    }

    fn builtins() -> Vec<WeightSequence> {
        vec![seq_ones(), seq_alt(), seq_geom(Rational::from((1, 2))).unwrap()]
    }

    fn within(l: &LaurentExpansion, h: &Real, direct: Real, ctx: &PrecisionContext) -> bool {
        let err = (l.eval(h) - direct).abs();
        err <= l.first_neglected(h) * 2 + ctx.tolerance()
    }

    #[test]
    fn pos_examples() {
        let ctx = ctx();
        let l = laurent_pos(&seq_ones(), 0, 1, 3, &ctx).unwrap();
        assert!((&l.regular_coeffs[1] + zeta(2, &ctx).unwrap()).abs() < ctx.tolerance());
        for a in builtins() {
            assert_eq!(laurent_pos(&a, 4, 2, 3, &ctx).unwrap().principal_coeff, a.term(4, &ctx));
        }
        let l = laurent_pos(&seq_alt(), 2, 1, 4, &ctx).unwrap();
        let h = ctx.ratio(1, 10);
        let direct = psi_param_deriv(&(ctx.int(2) + &h), &seq_alt(), 1, &ctx).unwrap();
        assert!(within(&l, &h, direct, &ctx));
    }

    #[test]
    fn neg_examples() {
        let ctx = ctx();
        let l = laurent_neg(&seq_ones(), 1, 1, 4, &ctx).unwrap();
        for (i, c) in l.regular_coeffs.iter().enumerate() {
            let z = crate::numkernel::zeta_conv(i as i64 + 1, &ctx).unwrap();
            assert!((c + z).abs() < ctx.tolerance());
        }
        // ψ̄ expansion about −n: (−1)^n Σ (H̄^{(k+1)}_{n−1} − ζ̄(k+1)) (s+n)^k,
        // and Ψ(−s;A₂) = −log 2 − ψ̄(−s) shifts the constant term.
        let n = 3u64;
        let l = laurent_neg(&seq_alt(), n, 1, 4, &ctx).unwrap();
        let h = ctx.ratio(1, 20);
        let s = -ctx.int(n as i64) + &h;
        let direct = crate::digamma::psi_param(&s, &seq_alt(), &ctx).unwrap();
        assert!(within(&l, &h, direct, &ctx));
        assert!(laurent_neg(&seq_alt(), 0, 1, 4, &ctx).is_err());
    }

    #[test]
    fn cot_examples() {
        let ctx = ctx();
        let l = cot_laurent(&seq_ones(), 3, 4, &ctx).unwrap();
        assert!(l.regular_coeffs[0].abs() < ctx.tolerance());
        assert!((&l.regular_coeffs[1] + zeta(2, &ctx).unwrap() * 2).abs() < ctx.tolerance());
        for n in 0..6 {
            let p = cot_laurent(&seq_alt(), n, 3, &ctx).unwrap().principal_coeff;
            assert_eq!(p, ctx.int(if n % 2 == 0 { 1 } else { -1 }));
        }
        for a in builtins() {
            let l = cot_laurent(&a, -2, 8, &ctx).unwrap();
            let h = ctx.ratio(1, 10);
            let direct = cot_param(&(ctx.int(-2) + &h), &a, &ctx).unwrap();
            assert!(within(&l, &h, direct, &ctx), "{a}");
        }
    }

    #[test]
    fn consistency_grid() {
        let ctx = ctx();
        let h = ctx.ratio(1, 20);
        let mut seqs = builtins();
        seqs.push(seq_harmonic());
        for a in &seqs {
            for n in 0..=5u64 {
                for p in 1..=3u32 {
                    let l = laurent_pos(a, n, p, 8, &ctx).unwrap();
                    let d = psi_param_deriv(&(ctx.int(n as i64) + &h), a, p, &ctx).unwrap();
                    assert!(within(&l, &h, d, &ctx), "pos {a} n={n} p={p}");
                    if a.is_harmonic() {
                        continue;
                    }
                    if n >= 1 {
                        let l = laurent_neg(a, n, p, 8, &ctx).unwrap();
                        let d = psi_param_deriv(&(-ctx.int(n as i64) + &h), a, p, &ctx).unwrap();
                        assert!(within(&l, &h, d, &ctx), "neg {a} n={n} p={p}");
                    }
                }
                if !a.is_harmonic() {
                    for m in [n as i64, -(n as i64)] {
                        let l = cot_laurent(a, m, 8, &ctx).unwrap();
                        let d = cot_param(&(ctx.int(m) + &h), a, &ctx).unwrap();
                        assert!(within(&l, &h, d, &ctx), "cot {a} n={m}");
                    }
                }
            }
        }
    }
}
