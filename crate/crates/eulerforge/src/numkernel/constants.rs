use super::asym::Expansion;
use super::context::PrecisionContext;
use super::real::Real;
use crate::error::Result;

/// Σ (−1)^k / ((2k+1) x^{2k+1}) for integer x ≥ 2.
fn arctan_inv(x: i64, ctx: &PrecisionContext) -> Real {
    let eps = ctx.pow10(-(ctx.working_digits() as i32) - 4);
    let x2 = x * x;
    let mut p = ctx.ratio(1, x);
    let mut acc = ctx.zero();
    let mut k = 0i64;
    loop {
        let t = &p / (2 * k + 1);
        if k % 2 == 0 { acc += &t } else { acc -= &t }
        if t < eps {
            break;
        }
        p /= x2;
        k += 1;
    }
    ctx.charge(k as u64 + 1);
    acc
}

/// π by Machin's formula.
pub fn const_pi(ctx: &PrecisionContext) -> Real {
    let v = ctx
        .memoize("const:pi", || {
            Ok(arctan_inv(5, ctx) * 16 - arctan_inv(239, ctx) * 4)
        })
        .expect("pi");
    (*v).clone()
}

/// log 2 = 2·atanh(1/3).
pub fn const_log2(ctx: &PrecisionContext) -> Real {
    let v = ctx
        .memoize("const:log2", || {
            let eps = ctx.pow10(-(ctx.working_digits() as i32) - 4);
            let mut p = ctx.ratio(1, 3);
            let mut acc = ctx.zero();
            let mut k = 0i64;
            loop {
                let t = &p / (2 * k + 1);
                acc += &t;
                if t < eps {
                    break;
                }
                p /= 9;
                k += 1;
            }
            ctx.charge(k as u64 + 1);
            Ok(acc * 2)
        })
        .expect("log2");
    (*v).clone()
}

pub fn const_sqrt(n: i64, ctx: &PrecisionContext) -> Real {
    ctx.int(n).sqrt()
}

/// Order used for expansions evaluated at cutoff `n`: enough that n^{−order}
/// sits well below the working precision, with slack for coefficient growth.
pub fn expansion_order(ctx: &PrecisionContext, n: u64) -> i32 {
    let d = ctx.working_digits() as f64 + 5.0;
    (d / (n as f64).log10()).ceil() as i32 + 12
}

pub const GAMMA_CUTOFF: u64 = 1000;

/// Euler–Mascheroni γ: H_N minus the Euler–Maclaurin shape of Σ_{m≤N} 1/m.
pub fn euler_gamma(ctx: &PrecisionContext) -> Result<Real> {
    let v = ctx.memoize("const:gamma", || {
        let n = GAMMA_CUTOFF;
        let mut h = ctx.zero();
        for m in 1..=n {
            h += ctx.ratio(1, m as i64);
        }
        ctx.charge(n);
        let shape = Expansion::power(ctx, expansion_order(ctx, n), 1).partial_sum_shape()?;
        Ok(h - shape.eval(n))
    })?;
    Ok((*v).clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use rug::float::Constant;
    use rug::Float;

    #[test]
    fn pi_against_mpfr_and_acos() {
        let ctx = PrecisionContext::new(50).unwrap();
        let pi = const_pi(&ctx);
        let mpfr = Real::from_float(Float::with_val(ctx.prec_bits(), Constant::Pi));
        let acos = ctx.int(-1);
        let acos = Real::from_float(acos.as_float().clone().acos());
        assert!((&pi - &mpfr).abs() < ctx.pow10(-55));
        assert!((&pi - &acos).abs() < ctx.pow10(-55));
        assert!(pi.to_decimal(21).starts_with("3.14159265358979323846"));
        let sq = &pi * &pi;
        assert!((sq / &pi - &pi).abs() < ctx.tolerance());
    }

    #[test]
    fn log2_against_mpfr() {
        let ctx = PrecisionContext::new(50).unwrap();
        let l = const_log2(&ctx);
        let mpfr = Real::from_float(Float::with_val(ctx.prec_bits(), Constant::Log2));
        assert!((&l - mpfr).abs() < ctx.pow10(-55));
        assert!(l.to_decimal(25).starts_with("0.69314718055994530941"));
    }

    #[test]
    fn gamma_against_mpfr() {
        let ctx = PrecisionContext::new(60).unwrap();
        let g = euler_gamma(&ctx).unwrap();
        let mpfr = Real::from_float(Float::with_val(ctx.prec_bits(), Constant::Euler));
        assert!((g - mpfr).abs() < ctx.pow10(-62));
    }
}
