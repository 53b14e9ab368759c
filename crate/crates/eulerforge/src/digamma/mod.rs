//! The parametric digamma function Ψ(−s;A), its derivatives, the sequence
//! cotangent and hyperbolic cotangent, the modified digamma ψ̄, and their
//! Laurent expansions at the integers.
//!
//! Conventions: `cot_param(s, A)` returns π·cot(πs;A) and `coth_param(s, A)`
//! returns π·coth(πs;A) = a₀/s + 2s Σ a_k/(k²+s²), so that
//! coth(x;A₁) = coth x and coth(x;A₂) = csch x after rescaling.

mod laurent;

pub use laurent::{cot_laurent, laurent_neg, laurent_pos, LaurentExpansion};

use crate::error::{Error, Result};
use crate::numkernel::{accel_alternating, Expansion, Mono, PrecisionContext, Real};
use crate::seqcore::functional::binom;
use crate::seqcore::{weighted_series, WeightSequence};

/// Radius inside which direct series are refused near a pole.
pub fn pole_radius(ctx: &PrecisionContext) -> Real {
    ctx.pow10(-(ctx.digits() as i32 / 2))
}

fn guard_pole(what: &str, s: &Real, is_pole: impl Fn(i64) -> bool, ctx: &PrecisionContext) -> Result<()> {
    let m = s
        .round_to_i64()
        .ok_or_else(|| Error::InvalidArgument(format!("{what}: argument out of range")))?;
    let r = pole_radius(ctx);
    if is_pole(m) && (s - ctx.int(m)).abs() < r {
        return Err(Error::NearPole {
            what: what.to_string(),
            arg: s.to_decimal(20),
            pole: m,
            radius: r.to_decimal(3),
        });
    }
    Ok(())
}

/// Enough direct terms that the large-k expansion in s/k converges fast.
fn min_cutoff(s: &Real) -> u64 {
    (s.abs().to_f64() * 100.0).ceil() as u64
}

fn same_ctx(s: &Real, ctx: &PrecisionContext) -> Result<Real> {
    if s.prec() != ctx.prec_bits() {
        return Err(Error::ContextMismatch(s.prec(), ctx.prec_bits()));
    }
    Ok(s.clone())
}

/// Ψ(−s;A) = a₀/s + Σ_{k≥1} a_k·(−s)/(k(k−s)).
pub fn psi_param(s: &Real, a: &WeightSequence, ctx: &PrecisionContext) -> Result<Real> {
    let s = same_ctx(s, ctx)?;
    guard_pole("psi_param", &s, |m| m >= 0, ctx)?;
    let w = |k: u64| -(&s / (ctx.int(k as i64) * (ctx.int(k as i64) - &s)));
    let series = weighted_series(
        a,
        w,
        |order| {
            // −s/k² · Σ (s/k)^i
            let mut e = Expansion::zero(ctx, order);
            let mut c = -s.clone();
            for i in 0..=(order - 2).max(0) {
                e.push(Mono::power(2 + i), c.clone());
                c *= &s;
            }
            e
        },
        min_cutoff(&s),
        ctx,
    )?;
    Ok(a.term(0, ctx) / &s + series)
}

/// Ψ^{(p−1)}(−s;A)/(p−1)! = Σ_{k≥0} a_k/(s−k)^p, the derivative taken with
/// respect to Ψ's own argument. For p = 1 this is [`psi_param`].
pub fn psi_param_deriv(s: &Real, a: &WeightSequence, p: u32, ctx: &PrecisionContext) -> Result<Real> {
    if p == 0 {
        return Err(Error::InvalidArgument("derivative order p must be ≥ 1".into()));
    }
    if p == 1 {
        return psi_param(s, a, ctx);
    }
    let s = same_ctx(s, ctx)?;
    guard_pole("psi_param_deriv", &s, |m| m >= 0, ctx)?;
    let sg = if p % 2 == 0 { 1 } else { -1 };
    let series = weighted_series(
        a,
        |k| (&s - ctx.int(k as i64)).powi(-(p as i32)),
        |order| {
            // (s−k)^{−p} = (−1)^p Σ C(p+i−1,i) s^i k^{−p−i}
            let mut e = Expansion::zero(ctx, order);
            let mut sp = ctx.int(sg);
            for i in 0..=(order - p as i32).max(0) as u32 {
                e.push(Mono::power((p + i) as i32), binom(p + i - 1, i, ctx) * &sp);
                sp *= &s;
            }
            e
        },
        min_cutoff(&s),
        ctx,
    )?;
    Ok(a.term(0, ctx) / s.powi(p as i32) + series)
}

/// π·cot(πs;A) = a₀/s − 2s Σ a_k/(k²−s²).
pub fn cot_param(s: &Real, a: &WeightSequence, ctx: &PrecisionContext) -> Result<Real> {
    let s = same_ctx(s, ctx)?;
    guard_pole("cot_param", &s, |_| true, ctx)?;
    let s2 = s.square();
    let series = weighted_series(
        a,
        |k| (ctx.int(k as i64).square() - &s2).recip(),
        |order| {
            let mut e = Expansion::zero(ctx, order);
            let mut c = ctx.one();
            for i in (2..=order.max(2)).step_by(2) {
                e.push(Mono::power(i), c.clone());
                c *= &s2;
            }
            e
        },
        min_cutoff(&s),
        ctx,
    )?;
    Ok(a.term(0, ctx) / &s - series * &s * 2)
}

/// π·coth(πs;A) = a₀/s + 2s Σ a_k/(k²+s²).
pub fn coth_param(s: &Real, a: &WeightSequence, ctx: &PrecisionContext) -> Result<Real> {
    let s = same_ctx(s, ctx)?;
    guard_pole("coth_param", &s, |m| m == 0, ctx)?;
    let s2 = s.square();
    let series = weighted_series(
        a,
        |k| (ctx.int(k as i64).square() + &s2).recip(),
        |order| {
            let mut e = Expansion::zero(ctx, order);
            let mut c = ctx.one();
            for i in (2..=order.max(2)).step_by(2) {
                e.push(Mono::power(i), c.clone());
                c *= -s2.clone();
            }
            e
        },
        min_cutoff(&s),
        ctx,
    )?;
    Ok(a.term(0, ctx) / &s + series * &s * 2)
}

/// ψ̄(s) = Σ_{k≥0} (−1)^k/(s+k).
pub fn psi_bar(s: &Real, ctx: &PrecisionContext) -> Result<Real> {
    let s = same_ctx(s, ctx)?;
    guard_pole("psi_bar", &s, |m| m <= 0, ctx)?;
    // shift until s + K > 0 so the remaining terms are totally monotone
    let k0 = if s > ctx.zero() { 0 } else { (-s.floor_to_i64().unwrap_or(0)) + 1 };
    let mut head = ctx.zero();
    for k in 0..k0 {
        let t = (&s + ctx.int(k)).recip();
        if k % 2 == 0 { head += t } else { head -= t }
    }
    let base = &s + ctx.int(k0);
    let tail = accel_alternating("psi_bar", |k| Ok((&base + ctx.int(k as i64)).recip()), ctx)?;
    Ok(if k0 % 2 == 0 { head + tail } else { head - tail })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numkernel::{const_log2, const_pi};
    use crate::seqcore::{seq_alt, seq_geom, seq_harmonic, seq_ones};
    use rug::Rational;

    fn ctx() -> PrecisionContext {
        PrecisionContext::new(30).unwrap()
    }

    fn builtins() -> Vec<WeightSequence> {
        vec![seq_ones(), seq_alt(), seq_geom(Rational::from((1, 2))).unwrap(), seq_harmonic()]
    }

    #[test]
    fn psi_examples() {
        let ctx = ctx();
        let half = ctx.ratio(1, 2);
        let v = psi_param(&half, &seq_ones(), &ctx).unwrap();
        assert!((v - (ctx.int(2) - const_log2(&ctx) * 2)).abs() < ctx.tolerance());
        assert!(psi_param(&ctx.int(-1), &seq_ones(), &ctx).unwrap().abs() < ctx.tolerance());
        // ψ(1+m)+γ = H_m
        for m in 1..6i64 {
            let h: Real = (1..=m).map(|i| ctx.ratio(1, i)).sum();
            let v = psi_param(&ctx.int(-1 - m), &seq_ones(), &ctx).unwrap();
            assert!((v - h).abs() < ctx.tolerance());
        }
        assert!(matches!(
            psi_param(&(ctx.int(3) + ctx.pow10(-20)), &seq_ones(), &ctx),
            Err(Error::NearPole { pole: 3, .. })
        ));
    }

    #[test]
    fn psi_alt_relation() {
        // Splitting the defining series at A₂: Ψ(−s;A₂) = −log 2 − ψ̄(−s).
        let ctx = ctx();
        for s in [ctx.ratio(1, 2), ctx.ratio(-7, 3), ctx.ratio(13, 4)] {
            let v = psi_param(&s, &seq_alt(), &ctx).unwrap();
            let w = -const_log2(&ctx) - psi_bar(&-s.clone(), &ctx).unwrap();
            assert!((v - w).abs() < ctx.tolerance());
        }
    }

    #[test]
    fn trigamma_reflection() {
        let ctx = ctx();
        let pi = const_pi(&ctx);
        let v = psi_param_deriv(&ctx.ratio(1, 2), &seq_ones(), 2, &ctx).unwrap();
        assert!((v - pi.powi(2) / 2 - 4).abs() < ctx.tolerance());
    }

    #[test]
    fn deriv_matches_difference_quotient() {
        // Ψ'(−s) = −d/ds Ψ(−s), checked by a 4-point central difference.
        let ctx = ctx();
        let h = ctx.pow10(-6);
        let s = ctx.ratio(-5, 7);
        for a in builtins() {
            let f = |x: Real| psi_param(&x, &a, &ctx).unwrap();
            let d = (f(&s - &h * 2) - f(&s + &h * 2) + (f(&s + &h) - f(&s - &h)) * 8) / (&h * 12);
            let v = psi_param_deriv(&s, &a, 2, &ctx).unwrap();
            assert!((v + d).abs() < ctx.pow10(-18), "{a}");
        }
    }

    #[test]
    fn deriv_alt_against_psi_bar_series() {
        // term-by-term: Σ_k (−1)^k/(s−k)^2 = Σ_k (−1)^k/(k−s)^2
        let ctx = ctx();
        let s = ctx.ratio(-1, 2);
        let v = psi_param_deriv(&s, &seq_alt(), 2, &ctx).unwrap();
        let base = -s.clone();
        let w = accel_alternating("chk", |k| Ok((&base + ctx.int(k as i64)).powi(-2)), &ctx).unwrap();
        assert!((v - w).abs() < ctx.tolerance());
    }

    #[test]
    fn cot_examples() {
        let ctx = ctx();
        let pi = const_pi(&ctx);
        assert!((cot_param(&ctx.ratio(1, 4), &seq_ones(), &ctx).unwrap() - &pi).abs() < ctx.tolerance());
        assert!((cot_param(&ctx.ratio(1, 2), &seq_alt(), &ctx).unwrap() - &pi).abs() < ctx.tolerance());
        assert!(cot_param(&ctx.ratio(1, 2), &seq_ones(), &ctx).unwrap().abs() < ctx.tolerance());
        for s in [ctx.ratio(3, 10), ctx.ratio(-17, 7), ctx.ratio(5, 4), ctx.ratio(26, 10), ctx.ratio(-1, 9)] {
            let x = &pi * &s;
            let c = cot_param(&s, &seq_ones(), &ctx).unwrap();
            assert!((c - &pi * x.cot()).abs() < ctx.tolerance());
            let c = cot_param(&s, &seq_alt(), &ctx).unwrap();
            assert!((c - &pi * x.csc()).abs() < ctx.tolerance());
        }
    }

    #[test]
    fn cot_complement_identity() {
        let ctx = ctx();
        for a in builtins() {
            for s in [ctx.ratio(3, 10), ctx.ratio(5, 4), ctx.ratio(13, 5)] {
                let lhs = cot_param(&s, &a, &ctx).unwrap();
                let rhs = psi_param(&s, &a, &ctx).unwrap() - psi_param(&-s.clone(), &a, &ctx).unwrap()
                    - a.term(0, &ctx) / &s;
                assert!((lhs - rhs).abs() < ctx.tolerance(), "{a}");
            }
        }
    }

    #[test]
    fn coth_examples() {
        let ctx = ctx();
        let pi = const_pi(&ctx);
        let one = ctx.one();
        assert!((coth_param(&one, &seq_ones(), &ctx).unwrap() - &pi * pi.coth()).abs() < ctx.tolerance());
        assert!((coth_param(&one, &seq_alt(), &ctx).unwrap() - &pi * pi.csch()).abs() < ctx.tolerance());
        let s = ctx.pow10(-8);
        let v = coth_param(&s, &seq_geom(Rational::from((1, 3))).unwrap(), &ctx).unwrap() * &s;
        assert!((v - 1).abs() < ctx.pow10(-14));
        assert!(coth_param(&ctx.zero(), &seq_ones(), &ctx).is_err());
    }

    #[test]
    fn psi_bar_values() {
        let ctx = ctx();
        let pi = const_pi(&ctx);
        assert!((psi_bar(&ctx.one(), &ctx).unwrap() - const_log2(&ctx)).abs() < ctx.tolerance());
        assert!((psi_bar(&ctx.ratio(1, 2), &ctx).unwrap() - &pi / 2).abs() < ctx.tolerance());
        // ψ̄(s) = ½ψ((s+1)/2) − ½ψ(s/2), with ψ(x) − ψ(y) from psi_param(·, ONES)
        for s in [ctx.ratio(3, 10), ctx.ratio(17, 10), ctx.ratio(5, 2)] {
            let p = |x: Real| psi_param(&-x, &seq_ones(), &ctx).unwrap();
            let rhs = (p((&s + 1) / 2) - p(&s / 2)) / 2;
            assert!((psi_bar(&s, &ctx).unwrap() - rhs).abs() < ctx.tolerance());
        }
        assert!(psi_bar(&ctx.int(-2), &ctx).is_err());
    }

    #[test]
    fn residues() {
        let ctx = PrecisionContext::new(40).unwrap();
        for a in builtins() {
            for n in 1..=10i64 {
                let ex = a.term(n, &ctx);
                let f = |d: i32| {
                    let h = ctx.pow10(-d);
                    psi_param(&(ctx.int(n) + &h), &a, &ctx).unwrap() * &h
                };
                // (s−n)Ψ = a_n + O(h); one Richardson step removes the O(h) term
                let r = (f(11) * 10 - f(10)) / 9;
                assert!((r - ex).abs() < ctx.pow10(-10), "{a} n={n}");
            }
        }
    }
}
