//! Specializations of the multi-kernel theorems: products of three
//! polygamma kernels against 1/n^q.

use super::kit::*;
use super::{Domain, IdentityCase, Params};
use crate::error::Result;
use crate::numkernel::{PrecisionContext, Real};

pub(super) fn cases() -> Vec<IdentityCase> {
    vec![
        IdentityCase::new("ex4.5", "cubic harmonic reduction", "we get the following examples", ex45_lhs, ex45_rhs)
            .param(Domain::ints("q", 2, 5)),
        IdentityCase::new(
            "ex4.6",
            "cubic alternating-harmonic reduction",
            "we get the following examples",
            ex46_lhs,
            ex46_rhs,
        )
        .param(Domain::ints("q", 2, 5)),
        IdentityCase::new(
            "ex4.7",
            "vanishing combination of harmonic sums",
            "we get the following examples",
            ex47_lhs,
            ex47_rhs,
        )
        .param(Domain::ints("q", 2, 5)),
        IdentityCase::new(
            "ex4_big1",
            "parity reduction with alternating outer sign",
            "For integer p>1",
            big1_lhs,
            big1_rhs,
        )
        .param(Domain::ints("p", 2, 4)),
        IdentityCase::new(
            "ex4_big2",
            "parity reduction with plain outer sign",
            "For integer p>1",
            big2_lhs,
            big2_rhs,
        )
        .param(Domain::ints("p", 2, 4)),
    ]
}

/// Σ over compositions of `total` into `parts` parts ≥ `min` of Π f(j_i + 1).
fn conv(
    total: i64,
    parts: usize,
    min: i64,
    f: impl Fn(i64, &PrecisionContext) -> Result<Real>,
    ctx: &PrecisionContext,
) -> Result<Real> {
    let mut acc = ctx.zero();
    for js in compositions_min(total, parts, min) {
        let mut t = ctx.one();
        for j in js {
            t *= f(j + 1, ctx)?;
        }
        acc += t;
    }
    Ok(acc)
}

fn ex45_lhs(p: &Params, ctx: &PrecisionContext) -> Result<Real> {
    let q = p.i("q")?;
    Ok(s(&format!("S[1,1;{q}]"), ctx)? - s(&format!("S[2;{q}]"), ctx)?)
}

fn ex45_rhs(p: &Params, ctx: &PrecisionContext) -> Result<Real> {
    let q = p.i("q")?;
    let mut acc = s(&format!("S[1;{}]", q + 1), ctx)? * q;
    acc -= z(q + 2, ctx)? * ctx.ratio((q - 2) * (q + 3), 6);
    acc += z(2, ctx)? * z(q, ctx)?;
    acc -= conv(q, 2, 1, z, ctx)?;
    acc += conv(q - 1, 3, 1, z, ctx)? / 3;
    Ok(acc)
}

fn ex46_lhs(p: &Params, ctx: &PrecisionContext) -> Result<Real> {
    s(&format!("S[-1,-1;-{}]", p.i("q")?), ctx)
}

fn ex46_rhs(p: &Params, ctx: &PrecisionContext) -> Result<Real> {
    let q = p.i("q")?;
    let l = log2(ctx);
    let mut acc = -s(&format!("S[-1;-{}]", q + 1), ctx)? * q;
    acc -= s(&format!("S[-2;-{q}]"), ctx)?;
    acc -= zb(q + 2, ctx)? * ctx.ratio((q - 2) * (q + 3), 6);
    acc += (z(q + 1, ctx)? + zb(q + 1, ctx)?) * &l * q;
    acc -= (z(q, ctx)? + zb(q, ctx)?) * l.square() * 2;
    acc += (s(&format!("S[-1;{q}]"), ctx)? + s(&format!("S[-1;-{q}]"), ctx)?) * &l * 2;
    acc -= z(2, ctx)? * zb(q, ctx)? / 2;
    acc += conv(q - 1, 3, 1, zb, ctx)? / 3;
    acc += conv(q, 2, 1, zb, ctx)?;
    Ok(acc)
}

fn s1(j: i64, ctx: &PrecisionContext) -> Result<Real> {
    s(&format!("S[1;{j}]"), ctx)
}

fn ex47_lhs(p: &Params, ctx: &PrecisionContext) -> Result<Real> {
    let q = p.i("q")?;
    let a = s(&format!("S[1,1,1;{}]", q + 2), ctx)? * ctx.ratio(q * (q + 1), 6);
    let b = (s(&format!("S[1,1,1,1;{}]", q + 1), ctx)? - s(&format!("S[1,1,2;{}]", q + 1), ctx)? * 3) * ctx.ratio(q, 2);
    Ok(a - b)
}

/// The remaining terms, moved across the vanishing sum.
fn ex47_rhs(p: &Params, ctx: &PrecisionContext) -> Result<Real> {
    let q = p.i("q")?;
    let mut rest = -z(3, ctx)? * s(&format!("S[1,1;{q}]"), ctx)? * 2;
    rest -= z(2, ctx)? * s(&format!("S[1,1,1;{q}]"), ctx)?;
    rest -= s(&format!("S[1,1,1,2;{q}]"), ctx)? * ctx.ratio(5, 2);
    rest += s(&format!("S[1,1,3;{q}]"), ctx)? * 2;
    rest += (s(&format!("S[1,1,1,1,1;{q}]"), ctx)? + s(&format!("S[1,2,2;{q}]"), ctx)? * 9) / 4;
    rest -= conv(q - 1, 3, 1, s1, ctx)? / 3;
    Ok(-rest)
}

fn big1_lhs(p: &Params, ctx: &PrecisionContext) -> Result<Real> {
    let p = p.i("p")?;
    let l = log2(ctx);
    let l2 = l.square();
    let z2 = z(2, ctx)?;
    let e = 1 + sgn(p);
    let tri = ctx.ratio(p * (p + 1), 2) + sgn(p);
    let mut acc = s(&format!("S[-1,-1,-1;-{p}]"), ctx)? * (sgn(p - 1) - 1);
    acc -= s(&format!("S[-1,-2;-{p}]"), ctx)? * 6;
    acc += s(&format!("S[-1,-1;-{p}]"), ctx)? * &l * (3 * e);
    acc += s(&format!("S[-2;-{p}]"), ctx)? * &l * 6;
    acc += s(&format!("S[-1;-{p}]"), ctx)? * (&z2 - &l2 * e) * 3;
    acc -= s(&format!("S[-3;-{p}]"), ctx)? * 3;
    acc += zb(p, ctx)? * l.powi(3) * sgn(p);
    acc -= s(&format!("S[-1,-1;-{}]", p + 1), ctx)? * (3 * p);
    acc -= s(&format!("S[-2;-{}]", p + 1), ctx)? * (3 * p);
    acc += s(&format!("S[-1;-{}]", p + 1), ctx)? * &l * (6 * p);
    acc -= zb(p + 1, ctx)? * (&l2 * 3 - &z2 / 2) * p;
    acc -= s(&format!("S[-1;-{}]", p + 2), ctx)? * &tri * 3;
    acc += zb(p + 2, ctx)? * &tri * &l * 3;
    acc += zb(p, ctx)? * (l.powi(3) - &l * &z2 * 3 + z(3, ctx)? * ctx.ratio(9, 4));
    acc += z(p + 3, ctx)? * sgn(p);
    acc -= zb(p + 3, ctx)? * ctx.ratio(p * (p + 1) * (p + 2), 6);
    acc += (s(&format!("S[-1,-1;{}]", p + 1), ctx)? - s(&format!("S[-1;{}]", p + 1), ctx)? * &l * 2 + z(p + 1, ctx)? * &l2)
        * (3 * sgn(p));
    Ok(acc)
}

/// Σ_{j₁+…+j_r+2t=total, j≥0, t≥1} Π ζ̄(j_i+1)·Z(2t)
fn conv_even(
    total: i64,
    parts: usize,
    even: fn(i64, &PrecisionContext) -> Result<Real>,
    ctx: &PrecisionContext,
) -> Result<Real> {
    let mut acc = ctx.zero();
    for t in 1..=total / 2 {
        acc += conv(total - 2 * t, parts, 0, zb, ctx)? * even(2 * t, ctx)?;
    }
    Ok(acc)
}

/// The residue at the origin, moved across.
fn big1_rhs(p: &Params, ctx: &PrecisionContext) -> Result<Real> {
    let p = p.i("p")?;
    let mut res = -zb(p + 3, ctx)? * 3;
    res -= conv(p + 1, 2, 0, zb, ctx)? * 3;
    res -= conv(p, 3, 0, zb, ctx)?;
    res += z(p + 3, ctx)? * (1 - sgn(p));
    res += conv_even(p + 2, 1, z, ctx)? * 6;
    res += conv_even(p + 1, 2, z, ctx)? * 6;
    res += conv_even(p, 3, z, ctx)? * 2;
    Ok(-res)
}

fn big2_lhs(p: &Params, ctx: &PrecisionContext) -> Result<Real> {
    let p = p.i("p")?;
    let l = log2(ctx);
    let l2 = l.square();
    let z2 = z(2, ctx)?;
    let e = 1 + sgn(p);
    let tri = ctx.ratio(p * (p + 1), 2) + sgn(p);
    let mut acc = s(&format!("S[-1,-1,-1;{p}]"), ctx)? * (sgn(p - 1) - 1);
    acc += s(&format!("S[-1,-2;{p}]"), ctx)? * 6;
    acc -= s(&format!("S[-1,-1;{p}]"), ctx)? * &l * (3 * e);
    acc -= s(&format!("S[-2;{p}]"), ctx)? * &l * 6;
    acc += s(&format!("S[-1;{p}]"), ctx)? * (&l2 * e + &z2 * 2) * 3;
    acc += s(&format!("S[-3;{p}]"), ctx)? * 3;
    acc -= z(p, ctx)? * l.powi(3) * sgn(p);
    acc += s(&format!("S[-1,-1;{}]", p + 1), ctx)? * (3 * p);
    acc += s(&format!("S[-2;{}]", p + 1), ctx)? * (3 * p);
    acc -= s(&format!("S[-1;{}]", p + 1), ctx)? * &l * (6 * p);
    acc += z(p + 1, ctx)? * (&l2 * 3 - &z2 * ctx.ratio(5, 2)) * p;
    acc += s(&format!("S[-1;{}]", p + 2), ctx)? * &tri * 3;
    acc -= z(p + 2, ctx)? * &tri * &l * 3;
    acc -= z(p, ctx)? * (l.powi(3) + &l * &z2 * 6 + z(3, ctx)? * ctx.ratio(9, 4));
    acc -= zb(p + 3, ctx)? * sgn(p);
    acc += z(p + 3, ctx)? * ctx.ratio(p * (p + 1) * (p + 2), 6);
    acc -= (s(&format!("S[-1,-1;-{}]", p + 1), ctx)? - s(&format!("S[-1;-{}]", p + 1), ctx)? * &l * 2
        + zb(p + 1, ctx)? * &l2)
        * (3 * sgn(p));
    Ok(acc)
}

fn big2_rhs(p: &Params, ctx: &PrecisionContext) -> Result<Real> {
    let p = p.i("p")?;
    let mut res = -zb(p + 3, ctx)? * 3;
    res -= conv(p + 1, 2, 0, zb, ctx)? * 3;
    res -= conv(p, 3, 0, zb, ctx)?;
    res -= zb(p + 3, ctx)? * (1 - sgn(p));
    res -= conv_even(p + 2, 1, zb, ctx)? * 6;
    res -= conv_even(p + 1, 2, zb, ctx)? * 6;
    res -= conv_even(p, 3, zb, ctx)? * 2;
    Ok(-res)
}
