//! Hyperbolic and trigonometric series with sequence-weighted kernels.
//!
//! `coth(x;B)` is the hyperbolic cotangent built from a weight sequence:
//! coth(x;A₁) = coth x, coth(x;A₂) = csch x, and in general
//! π·coth(x;B) = π·coth_param(x/π, B)/π. Likewise cot(x;A₁) = cot x and
//! cot(x;A₂) = csc x.

use std::cell::RefCell;

use crate::digamma::{coth_param, cot_param, pole_radius};
use crate::error::{Error, Result};
use crate::numkernel::{accel_geometric_tail, const_pi, expansion_order, Expansion, Mono, PrecisionContext, Real};
use crate::seqcore::{weighted_series, SeqKind, WeightSequence};

/// coth(x;B).
pub fn coth_seq(x: &Real, b: &WeightSequence, ctx: &PrecisionContext) -> Result<Real> {
    match b.kind() {
        SeqKind::Ones => Ok(x.coth()),
        SeqKind::Alt => Ok(x.csch()),
        _ => {
            let pi = const_pi(ctx);
            Ok(coth_param(&(x / &pi), b, ctx)? / pi)
        }
    }
}

/// cot(x;B). Refuses arguments within the pole radius of a multiple of π.
pub fn cot_seq(x: &Real, b: &WeightSequence, ctx: &PrecisionContext) -> Result<Real> {
    let pi = const_pi(ctx);
    let s = x / &pi;
    match b.kind() {
        SeqKind::Ones | SeqKind::Alt => {
            let m = s.round_to_i64().ok_or_else(|| Error::InvalidArgument("cot_seq: argument out of range".into()))?;
            let r = pole_radius(ctx);
            if (&s - ctx.int(m)).abs() < r {
                return Err(Error::NearPole {
                    what: "cot_seq".into(),
                    arg: s.to_decimal(20),
                    pole: m,
                    radius: r.to_decimal(3),
                });
            }
            Ok(if matches!(b.kind(), SeqKind::Ones) { x.cot() } else { x.csc() })
        }
        _ => Ok(cot_param(&s, b, ctx)? / pi),
    }
}

/// Σ_{k≥1} r^k k^m
fn geom_moment(r: &rug::Rational, m: u32, ctx: &PrecisionContext) -> Real {
    let rr = ctx.rational(r);
    let peak = (m as f64 / -r.to_f64().abs().ln()).ceil() as u64;
    let mut acc = ctx.zero();
    let mut pow = ctx.one();
    let mut k = 1u64;
    loop {
        pow *= &rr;
        let t = &pow * ctx.int(k as i64).powi(m as i32);
        acc += &t;
        if k > peak && (t.is_zero() || t.log10_abs() < ctx.target_log10() - 10.0 + acc.log10_abs()) {
            break;
        }
        k += 1;
    }
    acc
}

/// Large-n expansion of coth(n·t;B), exponentially small parts dropped.
pub fn coth_expansion(b: &WeightSequence, t: &Real, order: i32, ctx: &PrecisionContext) -> Result<Expansion> {
    match b.kind() {
        SeqKind::Ones => Ok(Expansion::constant(ctx, order, ctx.one())),
        SeqKind::Alt => Ok(Expansion::zero(ctx, order)),
        SeqKind::Geom(r) => {
            // π·coth(πs;B) = b₀/s + 2Σ_i (−1)^i μ_{2i} s^{−2i−1}, s = nt/π
            let pi = const_pi(ctx);
            let mut e = Expansion::zero(ctx, order);
            e.push(Mono::power(1), b.term(0, ctx) / t);
            let u = &pi / t;
            let mut up = u.clone();
            for i in 0..=(order - 1) / 2 {
                let mut c = geom_moment(r, 2 * i as u32, ctx) * &up * 2 / &pi;
                if i % 2 == 1 {
                    c = -c;
                }
                e.push(Mono::power(2 * i + 1), c);
                up *= u.square();
            }
            Ok(e)
        }
        _ => Err(Error::InvalidArgument(format!("no large-argument expansion for coth(x;{})", b.name()))),
    }
}

/// Direct terms needed before the expansion of coth(n·t;B) is exact to
/// working precision. For GEOM(r) the expansion is only asymptotic: the
/// m-th coefficient grows like m!/|log r|^{m+1}, so N must outrun it at the
/// order the series machinery will use.
fn coth_cutoff(b: &WeightSequence, t: f64, ctx: &PrecisionContext) -> u64 {
    let wd = ctx.working_digits() as f64 + 10.0;
    match b.kind() {
        SeqKind::Geom(r) => {
            let lr = -r.to_f64().abs().ln();
            let scale = (std::f64::consts::PI / t).log10() - lr.log10();
            let mut n = 100u64;
            loop {
                let m = expansion_order(ctx, n) as u64 + 1;
                let log_fact: f64 = (1..=m).map(|i| (i as f64).log10()).sum();
                if log_fact + (m + 1) as f64 * scale - m as f64 * (n as f64).log10() < -wd {
                    return n;
                }
                n = n * 3 / 2;
            }
        }
        _ => (wd * std::f64::consts::LN_10 / t).ceil() as u64 + 1,
    }
}

/// Σ_{n≥1} a_n·w(n)·Π_i coth(n·t_i; B_i), where `w_exp(order)` is the
/// large-n expansion of w.
pub fn coth_series<W, X>(
    a: &WeightSequence,
    factors: &[(Real, &WeightSequence)],
    w: W,
    w_exp: X,
    ctx: &PrecisionContext,
) -> Result<Real>
where
    W: Fn(u64) -> Real,
    X: FnOnce(i32) -> Expansion,
{
    let err = RefCell::new(None);
    let mut cutoff = 0;
    for (t, b) in factors {
        cutoff = cutoff.max(coth_cutoff(b, t.to_f64(), ctx));
    }
    let v = weighted_series(
        a,
        |n| {
            let mut x = w(n);
            for (t, b) in factors {
                match coth_seq(&(t * ctx.int(n as i64)), b, ctx) {
                    Ok(c) => x *= c,
                    Err(e) => {
                        err.borrow_mut().get_or_insert(e);
                    }
                }
            }
            x
        },
        |order| {
            let mut e = w_exp(order);
            for (t, b) in factors {
                match coth_expansion(b, t, order, ctx) {
                    Ok(c) => e = e.mul(&c),
                    Err(x) => {
                        err.borrow_mut().get_or_insert(x);
                    }
                }
            }
            e
        },
        cutoff,
        ctx,
    );
    if let Some(e) = err.into_inner() {
        return Err(e);
    }
    v
}

/// n^{−q} as an expansion.
pub fn inv_power(q: i32, order: i32, ctx: &PrecisionContext) -> Expansion {
    Expansion::power(ctx, order, q)
}

/// Σ_{n≥1} (±1)^n / (n^q (e^{2nx} − 1)), with the sign (−1)^n when
/// `alternating`. Geometric: each term shrinks by about e^{−2x}.
pub fn exp_tail(q: u32, x: &Real, alternating: bool, ctx: &PrecisionContext) -> Result<Real> {
    let two_x = x * 2;
    accel_geometric_tail(
        "exp_tail",
        1,
        |n| {
            let t = (&two_x * ctx.int(n as i64)).exp_m1() * ctx.int(n as i64).powi(q as i32);
            let t = t.recip();
            Ok(if alternating && n % 2 == 1 { -t } else { t })
        },
        (-2.0 * x.to_f64()).exp(),
        ctx,
    )
}

/// Σ_{n≥1} (±1)^{n−1} / (n^q sinh(nx)), alternating when asked.
pub fn csch_series(q: u32, x: &Real, alternating: bool, ctx: &PrecisionContext) -> Result<Real> {
    accel_geometric_tail(
        "csch_series",
        1,
        |n| {
            let t = ((x * ctx.int(n as i64)).sinh() * ctx.int(n as i64).powi(q as i32)).recip();
            Ok(if alternating && n % 2 == 0 { -t } else { t })
        },
        (-x.to_f64()).exp(),
        ctx,
    )
}

/// Σ_{n≤N} f(n) summed directly, for series with no usable tail model.
pub fn direct_sum(n_max: u64, mut f: impl FnMut(u64) -> Result<Real>, ctx: &PrecisionContext) -> Result<Real> {
    let mut acc = ctx.zero();
    for n in 1..=n_max {
        acc += f(n)?;
    }
    ctx.charge(n_max);
    Ok(acc)
}
