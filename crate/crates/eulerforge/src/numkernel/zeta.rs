use super::accel::{accel_alternating, accel_geometric_tail, euler_maclaurin_tail};
use super::asym::Expansion;
use super::constants::expansion_order;
use super::context::PrecisionContext;
use super::real::Real;
use crate::error::{Error, Result};

/// ζ(s) for integer s ≥ 2: direct sum plus Euler–Maclaurin tail.
pub fn zeta(s: i64, ctx: &PrecisionContext) -> Result<Real> {
    if s < 0 {
        return Err(Error::InvalidArgument(format!("zeta({s}): negative argument")));
    }
    if s < 2 {
        return Err(Error::Divergent(format!(
            "zeta({s}) diverges; use zeta_conv for the conventions ζ(1) ↦ 0, ζ(0) ↦ −1/2"
        )));
    }
    let v = ctx.memoize(&format!("zeta:{s}"), || {
        let n = 2 * ctx.working_digits() as u64 + 20;
        let mut head = ctx.zero();
        for k in 1..n {
            head += ctx.inv_pow(k, s as u32);
        }
        ctx.charge(n - 1);
        let order = expansion_order(ctx, n).max(s as i32 + 12);
        let tail = euler_maclaurin_tail("zeta", &Expansion::power(ctx, order, s as i32), n, ctx)?;
        Ok(head + tail)
    })?;
    Ok((*v).clone())
}

/// ζ with the conventions ζ(1) ↦ 0 and ζ(0) ↦ −1/2.
pub fn zeta_conv(s: i64, ctx: &PrecisionContext) -> Result<Real> {
    match s {
        0 => Ok(ctx.ratio(-1, 2)),
        1 => Ok(ctx.zero()),
        _ => zeta(s, ctx),
    }
}

/// η(s) = Σ (−1)^{k−1}/k^s by alternating acceleration.
pub fn eta(s: i64, ctx: &PrecisionContext) -> Result<Real> {
    if s < 1 {
        return Err(Error::InvalidArgument(format!(
            "eta({s}): argument must be ≥ 1 (eta_conv(0) gives 1/2)"
        )));
    }
    let v = ctx.memoize(&format!("eta:{s}"), || {
        accel_alternating("eta", |k| Ok(ctx.inv_pow(k + 1, s as u32)), ctx)
    })?;
    Ok((*v).clone())
}

/// η with the convention η(0) ↦ 1/2.
pub fn eta_conv(s: i64, ctx: &PrecisionContext) -> Result<Real> {
    if s == 0 {
        Ok(ctx.ratio(1, 2))
    } else {
        eta(s, ctx)
    }
}

/// Li_s(x) = Σ xⁿ/n^s for |x| ≤ 1/2.
pub fn polylog(s: i64, x: &Real, ctx: &PrecisionContext) -> Result<Real> {
    if s < 1 {
        return Err(Error::InvalidArgument(format!("polylog order {s} must be ≥ 1")));
    }
    let half = ctx.ratio(1, 2);
    if x.abs() > half {
        return Err(Error::InvalidArgument(format!(
            "polylog argument {} outside |x| ≤ 1/2",
            x.to_decimal(10)
        )));
    }
    if x.is_zero() {
        return Ok(ctx.zero());
    }
    let ratio = x.abs().to_f64();
    let mut p = ctx.one();
    let mut next = 1u64;
    accel_geometric_tail(
        "polylog",
        1,
        |n| {
            while next <= n {
                p *= x;
                next += 1;
            }
            Ok(&p * ctx.inv_pow(n, s as u32))
        },
        ratio,
        ctx,
    )
}

/// ζ(s̄,1) = Σ_{m>n≥1} (−1)^m/(m^s n) = Σ_{m≥2} (−1)^m H_{m−1}/m^s.
pub fn alt_double_zeta_s1(s: i64, ctx: &PrecisionContext) -> Result<Real> {
    if s < 2 {
        return Err(Error::InvalidArgument(format!("zeta({s}bar,1) needs s ≥ 2")));
    }
    let v = ctx.memoize(&format!("altdz:{s}"), || {
        // k-th term: H_{k+1}/(k+2)^s, sign (−1)^{k+2} = (−1)^k
        let mut h = ctx.zero();
        let mut filled = 0u64;
        accel_alternating(
            "alt_double_zeta",
            |k| {
                while filled < k + 1 {
                    filled += 1;
                    h += ctx.ratio(1, filled as i64);
                }
                Ok(&h * ctx.inv_pow(k + 2, s as u32))
            },
            ctx,
        )
    })?;
    Ok((*v).clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numkernel::constants::{const_log2, const_pi};

    #[test]
    fn zeta_even_values() {
        let ctx = PrecisionContext::new(50).unwrap();
        let pi = const_pi(&ctx);
        assert!((zeta(2, &ctx).unwrap() - pi.powi(2) / 6).abs() < ctx.tolerance());
        assert!((zeta(4, &ctx).unwrap() - pi.powi(4) / 90).abs() < ctx.tolerance());
        assert!(zeta(1, &ctx).is_err());
        assert!(zeta(-1, &ctx).is_err());
        assert_eq!(zeta_conv(1, &ctx).unwrap(), ctx.zero());
        assert_eq!(zeta_conv(0, &ctx).unwrap(), ctx.ratio(-1, 2));
    }

    #[test]
    fn eta_values() {
        let ctx = PrecisionContext::new(40).unwrap();
        let pi = const_pi(&ctx);
        assert!((eta(1, &ctx).unwrap() - const_log2(&ctx)).abs() < ctx.tolerance());
        assert!((eta(2, &ctx).unwrap() - pi.powi(2) / 12).abs() < ctx.tolerance());
        assert_eq!(eta_conv(0, &ctx).unwrap(), ctx.ratio(1, 2));
    }

    #[test]
    fn eta_zeta_relation() {
        let ctx = PrecisionContext::new(40).unwrap();
        for s in 2..=20 {
            let lhs = eta(s, &ctx).unwrap();
            let rhs = (ctx.one() - ctx.int(2).powi(1 - s as i32)) * zeta(s, &ctx).unwrap();
            assert!((lhs - rhs).abs() < ctx.tolerance(), "s = {s}");
        }
    }

    #[test]
    fn polylog_values() {
        let ctx = PrecisionContext::new(50).unwrap();
        let half = ctx.ratio(1, 2);
        let l2 = const_log2(&ctx);
        assert!((polylog(1, &half, &ctx).unwrap() - &l2).abs() < ctx.tolerance());
        let pi = const_pi(&ctx);
        let li2 = pi.powi(2) / 12 - l2.powi(2) / 2;
        assert!((polylog(2, &half, &ctx).unwrap() - li2).abs() < ctx.tolerance());
        let li4 = polylog(4, &half, &ctx).unwrap();
        assert!(li4.to_decimal(16).starts_with("0.5174790616738994"));
        assert!(polylog(2, &ctx.ratio(3, 4), &ctx).is_err());
    }

    #[test]
    fn alt_double_zeta_against_double_sum() {
        // Brute-force oracle: Σ_{m≤M} (−1)^m H_{m−1}/m^s with the alternating
        // partial sums averaged at M and M+1 to cancel the leading oscillation.
        let ctx = PrecisionContext::new(30).unwrap();
        for s in [2i64, 3, 5] {
            let mut acc = 0f64;
            let mut prev = 0f64;
            let mut h = 0f64;
            let m_max = 200_000u64;
            for m in 1..=m_max + 1 {
                let term = h / (m as f64).powi(s as i32);
                prev = acc;
                acc += if m % 2 == 0 { term } else { -term };
                h += 1.0 / m as f64;
            }
            let oracle = 0.5 * (acc + prev);
            let v = alt_double_zeta_s1(s, &ctx).unwrap().to_f64();
            assert!((v - oracle).abs() < 1e-9, "s = {s}: {v} vs {oracle}");
        }
    }

    #[test]
    fn alt_double_zeta_two_closed_form() {
        // Σ_{m>n} (−1)^m/(m² n) = ζ(3)/8 under this sign convention.
        let ctx = PrecisionContext::new(40).unwrap();
        let v = alt_double_zeta_s1(2, &ctx).unwrap();
        let z3 = zeta(3, &ctx).unwrap();
        assert!((v - z3 / 8).abs() < ctx.tolerance());
    }
}
