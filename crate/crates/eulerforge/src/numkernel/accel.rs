//! Series acceleration primitives. Each one charges the context meter with
//! the number of terms it consumed and fails with [`Error::Truncation`] when
//! `max_terms` runs out before its error estimate clears the budget.

use super::asym::Expansion;
use super::context::PrecisionContext;
use super::real::Real;
use crate::error::{Error, Result};

const CRVZ_RATE: f64 = 5.828_427_124_746_19; // 3 + √8

/// Σ_{k≥0} (−1)^k a_k for a totally monotone a_k, by the
/// Cohen–Rodriguez Villegas–Zagier weights.
pub fn accel_alternating<F>(name: &str, mut a: F, ctx: &PrecisionContext) -> Result<Real>
where
    F: FnMut(u64) -> Result<Real>,
{
    let digits = ctx.working_digits() as f64 + 3.0;
    let n = (digits * std::f64::consts::LN_10 / CRVZ_RATE.ln()).ceil() as u64 + 2;
    if n > ctx.max_terms() {
        return Err(Error::Truncation { series: name.to_string(), terms: ctx.max_terms() });
    }
    let terms: Vec<Real> = (0..n).map(&mut a).collect::<Result<_>>()?;
    ctx.charge(n);
    let full = crvz(&terms, ctx);
    let m = n - n.div_ceil(4);
    let coarse = crvz(&terms[..m as usize], ctx);
    let scale = terms.iter().map(|t| t.abs()).fold(ctx.zero(), Real::max);
    let expect = &scale * &ctx.parse(&format!("{:e}", 200.0 * CRVZ_RATE.powi(-(m as i32))))?;
    if (&full - &coarse).abs() > expect {
        return Err(Error::Truncation { series: name.to_string(), terms: n });
    }
    Ok(full)
}

fn crvz(a: &[Real], ctx: &PrecisionContext) -> Real {
    let n = a.len() as i64;
    let rate = ctx.int(8).sqrt() + 3;
    let mut d = rate.powi(n as i32);
    d = (&d + d.recip()) / 2;
    let mut b = ctx.int(-1);
    let mut c = -d.clone();
    let mut s = ctx.zero();
    for (k, ak) in a.iter().enumerate() {
        let k = k as i64;
        c = &b - &c;
        s += &c * ak;
        // b ← (k+n)(k−n)·b / ((k+1/2)(k+1)) = 2(k+n)(k−n)·b / ((2k+1)(k+1))
        b = b * (2 * (k + n) * (k - n)) / ((2 * k + 1) * (k + 1));
    }
    s / d
}

/// Σ_{k≥start} t_k when |t_{k+1}| ≤ ratio·|t_k| eventually.
pub fn accel_geometric_tail<F>(
    name: &str,
    start: u64,
    mut t: F,
    ratio: f64,
    ctx: &PrecisionContext,
) -> Result<Real>
where
    F: FnMut(u64) -> Result<Real>,
{
    if !(0.0..1.0).contains(&ratio) {
        return Err(Error::InvalidArgument(format!("{name}: ratio bound {ratio} not in [0,1)")));
    }
    let factor = ratio / (1.0 - ratio);
    let mut acc = ctx.zero();
    let mut quiet = 0;
    let mut k = start;
    let mut used = 0u64;
    loop {
        if used >= ctx.max_terms() {
            ctx.charge(used);
            return Err(Error::Truncation { series: name.to_string(), terms: used });
        }
        let term = t(k)?;
        used += 1;
        acc += &term;
        let bound = term.log10_abs() + factor.log10();
        let budget = ctx.target_log10() + acc.log10_abs().max(0.0);
        if bound < budget || term.is_zero() {
            quiet += 1;
            if quiet >= 2 {
                break;
            }
        } else {
            quiet = 0;
        }
        k += 1;
    }
    ctx.charge(used);
    Ok(acc)
}

/// Σ_{n≥start} f(n) for f given by its large-n expansion.
pub fn euler_maclaurin_tail(
    name: &str,
    f: &Expansion,
    start: u64,
    ctx: &PrecisionContext,
) -> Result<Real> {
    if f.truncation_log10(start) > ctx.target_log10() {
        return Err(Error::Truncation { series: name.to_string(), terms: start });
    }
    let negligible = ctx.pow10(-(ctx.working_digits() as i32) - 5);
    ctx.charge(f.len() as u64);
    f.tail(start, &negligible)
}
