//! Small shared vocabulary for writing identity sides.

use crate::error::Result;
use crate::eulersums::{euler_sum, mzv_constant, weighted_sum, Factor, SumSpec, WeightedSumSpec};
use crate::numkernel::{const_log2, const_pi, eta_conv, zeta_conv, PrecisionContext, Real};
use crate::seqcore::functional::binom;
use crate::seqcore::{func_d, FunctionalKind, WeightSequence};

pub(super) use FunctionalKind::{MBar, E, M, R};

/// (−1)^e
pub(super) fn sgn(e: i64) -> i64 {
    if e.rem_euclid(2) == 0 { 1 } else { -1 }
}

pub(super) fn c(n: i64, k: i64, ctx: &PrecisionContext) -> Real {
    if n < 0 || k < 0 || k > n {
        return ctx.zero();
    }
    binom(n as u32, k as u32, ctx)
}

/// D(j) with D(1) = 0.
pub(super) fn d(a: &WeightSequence, j: i64, ctx: &PrecisionContext) -> Result<Real> {
    func_d(a, j as u32, ctx)
}

/// Σ_n (Π env a_n)(Π X_n(j))/n^q.
pub(super) fn ws(
    env: &[&WeightSequence],
    factors: &[(FunctionalKind, &WeightSequence, i64)],
    q: i64,
    ctx: &PrecisionContext,
) -> Result<Real> {
    let spec = WeightedSumSpec::new(
        env.iter().map(|a| (*a).clone()).collect(),
        factors.iter().map(|&(k, a, j)| Factor::new(k, a.clone(), j as u32)).collect(),
        q as u32,
    )?;
    weighted_sum(&spec, ctx)
}

/// a₀
pub(super) fn a0(a: &WeightSequence, ctx: &PrecisionContext) -> Real {
    a.term(0, ctx)
}

/// ζ with ζ(0) = −1/2, ζ(1) = 0.
pub(super) fn z(k: i64, ctx: &PrecisionContext) -> Result<Real> {
    zeta_conv(k, ctx)
}

/// ζ̄ with ζ̄(0) = 1/2, ζ̄(1) = log 2.
pub(super) fn zb(k: i64, ctx: &PrecisionContext) -> Result<Real> {
    eta_conv(k, ctx)
}

/// An Euler sum in `S[...]` notation.
pub(super) fn s(spec: &str, ctx: &PrecisionContext) -> Result<Real> {
    euler_sum(&spec.parse::<SumSpec>()?, ctx)
}

pub(super) fn pi(ctx: &PrecisionContext) -> Real {
    const_pi(ctx)
}

pub(super) fn log2(ctx: &PrecisionContext) -> Real {
    const_log2(ctx)
}

/// Evaluates Σ c·monomial where a monomial is a space-separated product of
/// named constants with optional powers, e.g. `pi^2 Li4_half`.
pub(super) fn closed_form(terms: &[(i64, i64, &str)], ctx: &PrecisionContext) -> Result<Real> {
    let mut acc = ctx.zero();
    for &(num, den, mono) in terms {
        let mut t = ctx.ratio(num, den);
        for f in mono.split_whitespace() {
            let (name, pow) = match f.split_once('^') {
                Some((n, p)) => (n, p.parse::<i32>().expect("power")),
                None => (f, 1),
            };
            t *= mzv_constant(name, ctx)?.powi(pow);
        }
        acc += t;
    }
    Ok(acc)
}

/// Compositions of `total` into `parts` positive integers, in lexicographic order.
pub(super) fn compositions(total: i64, parts: usize) -> Vec<Vec<i64>> {
    compositions_min(total, parts, 1)
}

/// Compositions of `total` into `parts` integers each ≥ `min`.
pub(super) fn compositions_min(total: i64, parts: usize, min: i64) -> Vec<Vec<i64>> {
    if parts == 0 {
        return if total == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in min..=total - min * (parts as i64 - 1) {
        for mut rest in compositions_min(total - first, parts - 1, min) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}
