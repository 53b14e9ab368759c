//! Linear and quadratic sums of weighted functionals, and the classical
//! linear Euler sum evaluations they specialize to.

use super::kit::*;
use super::{Domain, IdentityCase, Params, SeqSet};
use crate::error::Result;
use crate::numkernel::{PrecisionContext, Real};
use crate::seqcore::seq_geom;

pub(super) fn cases() -> Vec<IdentityCase> {
    vec![
        IdentityCase::new(
            "thm3.2",
            "linear sums of M and M̄ against a weight",
            "For positive integers p and q>1",
            thm32_lhs,
            thm32_rhs,
        )
        .param(Domain::ints("p", 1, 4))
        .param(Domain::ints("q", 2, 4))
        .param(Domain::seqs("A", SeqSet::Builtin))
        .param(Domain::seqs("B", SeqSet::Builtin)),
        IdentityCase::new(
            "ex3.2",
            "geometric-weight worked example",
            "a simple example is as follows",
            ex32_lhs,
            ex32_rhs,
        ),
        e_case("cor_e1", false, false),
        e_case("cor_e2", true, true),
        e_case("cor_e3", false, true),
        e_case("cor_e4", true, false),
        IdentityCase::new(
            "thm3.4",
            "products of two polygamma kernels",
            "For positive integers m and p",
            thm34_lhs,
            thm34_rhs,
        )
        .param(Domain::ints("m", 1, 3))
        .param(Domain::ints("p", 1, 3))
        .param(Domain::ints("q", 2, 3))
        .param(Domain::seqs("A", SeqSet::WithHarmonic))
        .param(Domain::seqs("B", SeqSet::WithHarmonic)),
        IdentityCase::new(
            "cor3.5a",
            "harmonic weight against the constant weight",
            "For integer q>1",
            cor35a_lhs,
            cor35a_rhs,
        )
        .param(Domain::ints("q", 2, 6)),
        IdentityCase::new(
            "cor3.5b",
            "harmonic weight against itself",
            "For integer q>1",
            cor35b_lhs,
            cor35b_rhs,
        )
        .param(Domain::ints("q", 2, 6)),
        IdentityCase::new(
            "thm3.6",
            "cotangent kernel times two polygamma kernels",
            "Let m,p and q>1 be positive integers",
            thm36_lhs,
            thm36_rhs,
        )
        .param(Domain::ints("m", 1, 2))
        .param(Domain::ints("p", 1, 2))
        .param(Domain::ints("q", 2, 3))
        .param(Domain::seqs("A", SeqSet::Signs))
        .param(Domain::seqs("B", SeqSet::Signs))
        .param(Domain::seqs("C", SeqSet::Signs)),
    ]
}

fn thm32_lhs(p: &Params, ctx: &PrecisionContext) -> Result<Real> {
    let (pp, q, a, b) = (p.i("p")?, p.i("q")?, p.s("A")?, p.s("B")?);
    Ok(ws(&[a], &[(MBar, b, pp)], q, ctx)? * sgn(pp + q) + ws(&[a], &[(M, b, pp)], q, ctx)?)
}

fn thm32_rhs(p: &Params, ctx: &PrecisionContext) -> Result<Real> {
    let (pp, q, a, b) = (p.i("p")?, p.i("q")?, p.s("A")?, p.s("B")?);
    let w = pp + q;
    let mut acc = ctx.zero();
    for j in 1..=pp {
        acc += c(w - j - 1, q - 1, ctx) * ws(&[b], &[(R, a, j)], w - j, ctx)?;
    }
    for j in 1..=q / 2 {
        acc += c(w - 2 * j - 1, pp - 1, ctx) * d(a, 2 * j, ctx)? * d(b, w - 2 * j, ctx)? * 2;
    }
    acc = acc * sgn(pp);
    acc += a0(b, ctx) * (1 + sgn(w)) * d(a, w, ctx)?;
    acc -= a0(a, ctx) * sgn(pp) * c(w - 1, q, ctx) * d(b, w, ctx)?;
    acc -= c(w - 1, pp, ctx) * sgn(pp) * ws(&[a, b], &[], w, ctx)?;
    Ok(acc)
}

fn ex32_lhs(_: &Params, ctx: &PrecisionContext) -> Result<Real> {
    // Σ 2^{−n}/n² Σ_{k≤n} 2^k/k² = Σ E^{(geom 1/2)}_n(2)/n²
    let g = seq_geom(rug::Rational::from((1, 2)))?;
    ws(&[], &[(E, &g, 2)], 2, ctx)
}

fn ex32_rhs(_: &Params, ctx: &PrecisionContext) -> Result<Real> {
    closed_form(
        &[(51, 16, "zeta4"), (-3, 1, "Li4_half"), (-3, 4, "zeta2 log2^2"), (-1, 8, "log2^4")],
        ctx,
    )
}

fn e_case(id: &'static str, inner_bar: bool, outer_bar: bool) -> IdentityCase {
    let (l, r): (super::SideFn, super::SideFn) = match (inner_bar, outer_bar) {
        (false, false) => (|p, ctx| e_lhs(p, false, false, ctx), |p, ctx| e_rhs(p, 1, ctx)),
        (true, true) => (|p, ctx| e_lhs(p, true, true, ctx), |p, ctx| e_rhs(p, 2, ctx)),
        (false, true) => (|p, ctx| e_lhs(p, false, true, ctx), |p, ctx| e_rhs(p, 3, ctx)),
        (true, false) => (|p, ctx| e_lhs(p, true, false, ctx), |p, ctx| e_rhs(p, 4, ctx)),
    };
    IdentityCase::new(
        id,
        "odd-weight linear Euler sums",
        "the four linear Euler sums are reducible to zeta values",
        l,
        r,
    )
    .param(Domain::ints("p", 1, 7))
    .param(Domain::ints("q", 2, 8))
    .restrict(|p| {
        let w = p.i("p").ok()? + p.i("q").ok()?;
        if w % 2 == 0 {
            Some(format!("weight {w} is even"))
        } else if w > 9 {
            Some(format!("weight {w} exceeds 9"))
        } else {
            None
        }
    })
}

fn e_lhs(p: &Params, inner_bar: bool, outer_bar: bool, ctx: &PrecisionContext) -> Result<Real> {
    let (pp, q) = (p.i("p")?, p.i("q")?);
    let sig = |v: i64, b: bool| if b { -v } else { v };
    s(&format!("S[{};{}]", sig(pp, inner_bar), sig(q, outer_bar)), ctx)
}

/// The four closed forms; `which` selects S_{p,q}, S_{p̄,q̄}, S_{p,q̄}, S_{p̄,q}.
fn e_rhs(p: &Params, which: u8, ctx: &PrecisionContext) -> Result<Real> {
    let (pp, q) = (p.i("p")?, p.i("q")?);
    let m = pp + q;
    let half = ctx.ratio(1, 2);
    let odd_p = pp % 2 != 0;
    let sp = sgn(pp);
    // (leading ζ-type, ζ-type of p, ζ-type of q, first sum [sign, left, right], second sum [...])
    type Zf = fn(i64, &PrecisionContext) -> Result<Real>;
    let (lead, zp, zq, s1, s2): (Zf, Zf, Zf, (i64, Zf, Zf), (i64, Zf, Zf)) = match which {
        1 => (z, z, z, (1, z, z), (1, z, z)),
        2 => (z, zb, zb, (-1, z, zb), (-1, z, zb)),
        3 => (zb, z, zb, (-1, zb, zb), (1, zb, z)),
        _ => (zb, zb, z, (1, zb, z), (-1, zb, zb)),
    };
    let mut acc = lead(m, ctx)? * &half;
    if odd_p {
        acc += zp(pp, ctx)? * zq(q, ctx)?;
    }
    for k in 0..=pp / 2 {
        acc += c(m - 2 * k - 1, q - 1, ctx) * s1.1(2 * k, ctx)? * s1.2(m - 2 * k, ctx)? * (sp * s1.0);
    }
    for k in 0..=q / 2 {
        acc += c(m - 2 * k - 1, pp - 1, ctx) * s2.1(2 * k, ctx)? * s2.2(m - 2 * k, ctx)? * (sp * s2.0);
    }
    Ok(acc)
}

fn thm34_lhs(p: &Params, ctx: &PrecisionContext) -> Result<Real> {
    let (m, pp, q, a, b) = (p.i("m")?, p.i("p")?, p.i("q")?, p.s("A")?, p.s("B")?);
    let mut first = ctx.zero();
    for i in 0..m {
        let j = m - 1 - i;
        first += c(pp + i - 1, i, ctx) * c(q + j - 1, j, ctx) * ws(&[a], &[(M, b, pp + i)], q + j, ctx)?;
    }
    let mut second = ctx.zero();
    for i in 0..pp {
        let j = pp - 1 - i;
        second += c(m + i - 1, i, ctx) * c(q + j - 1, j, ctx) * ws(&[b], &[(M, a, m + i)], q + j, ctx)?;
    }
    Ok(first * sgn(m) + second * sgn(pp))
}

fn thm34_rhs(p: &Params, ctx: &PrecisionContext) -> Result<Real> {
    let (m, pp, q, a, b) = (p.i("m")?, p.i("p")?, p.i("q")?, p.s("A")?, p.s("B")?);
    let w = pp + q + m - 1;
    let mut acc = c(w - 1, q - 1, ctx) * ws(&[a, b], &[], w, ctx)? * sgn(pp + m - 1);
    acc += a0(a, ctx) * sgn(pp) * c(w - 1, pp - 1, ctx) * d(b, w, ctx)?;
    acc += a0(b, ctx) * sgn(m) * c(w - 1, m - 1, ctx) * d(a, w, ctx)?;
    for js in compositions(q + 1, 2) {
        let (j1, j2) = (js[0], js[1]);
        acc += c(j1 + m - 2, j1 - 1, ctx) * c(j2 + pp - 2, j2 - 1, ctx) * d(a, j1 + m - 1, ctx)? * d(b, j2 + pp - 1, ctx)?
            * sgn(m + pp);
    }
    Ok(acc)
}

fn cor35a_lhs(p: &Params, ctx: &PrecisionContext) -> Result<Real> {
    let q = p.i("q")?;
    Ok((s(&format!("S[1,1;{q}]"), ctx)? - s(&format!("S[2;{q}]"), ctx)?) * ctx.ratio(3, 2))
}

fn cor35a_rhs(p: &Params, ctx: &PrecisionContext) -> Result<Real> {
    let q = p.i("q")?;
    let mut acc = s(&format!("S[1;{}]", q + 1), ctx)? * (q + 1);
    for js in compositions(q - 1, 2) {
        acc -= s(&format!("S[1;{}]", js[0] + 1), ctx)? * z(js[1] + 1, ctx)?;
    }
    Ok(acc)
}

fn cor35b_lhs(p: &Params, ctx: &PrecisionContext) -> Result<Real> {
    let q = p.i("q")?;
    Ok(s(&format!("S[1,1,1;{q}]"), ctx)? - s(&format!("S[1,2;{q}]"), ctx)? * 3)
}

fn cor35b_rhs(p: &Params, ctx: &PrecisionContext) -> Result<Real> {
    let q = p.i("q")?;
    let mut acc = s(&format!("S[1,1;{}]", q + 1), ctx)? * q;
    for js in compositions(q - 1, 2) {
        acc -= s(&format!("S[1;{}]", js[0] + 1), ctx)? * s(&format!("S[1;{}]", js[1] + 1), ctx)?;
    }
    Ok(acc)
}

fn thm36_lhs(p: &Params, ctx: &PrecisionContext) -> Result<Real> {
    let (m, pp, q) = (p.i("m")?, p.i("p")?, p.i("q")?);
    let (a, b, cc) = (p.s("A")?, p.s("B")?, p.s("C")?);
    Ok(ws(&[a], &[(MBar, b, m), (MBar, cc, pp)], q, ctx)? * sgn(pp + q + m)
        + ws(&[a], &[(M, b, m), (M, cc, pp)], q, ctx)?)
}

/// Minus everything else in the vanishing residue sum.
fn thm36_rhs(p: &Params, ctx: &PrecisionContext) -> Result<Real> {
    let (m, pp, q) = (p.i("m")?, p.i("p")?, p.i("q")?);
    let (a, b, cc) = (p.s("A")?, p.s("B")?, p.s("C")?);
    let w = pp + q + m;
    let (a_0, b_0, c_0) = (a0(a, ctx), a0(b, ctx), a0(cc, ctx));
    let mut acc = c(w - 1, q - 1, ctx) * ws(&[a, b, cc], &[], w, ctx)? * sgn(pp + m);
    let mut t = ctx.zero();
    for j in 1..=m + 1 {
        t += c(j + pp - 2, pp - 1, ctx) * c(m + q - j, q - 1, ctx) * ws(&[a, b], &[(M, cc, j + pp - 1)], m + q - j + 1, ctx)?;
    }
    acc += t * sgn(m);
    let mut t = ctx.zero();
    for j in 1..=pp + 1 {
        t += c(j + m - 2, m - 1, ctx) * c(pp + q - j, q - 1, ctx) * ws(&[a, cc], &[(M, b, j + m - 1)], pp + q - j + 1, ctx)?;
    }
    acc += t * sgn(pp);
    let mut t = ctx.zero();
    for j in 1..=pp + m {
        t += c(w - j - 1, q - 1, ctx) * ws(&[b, cc], &[(R, a, j)], w - j, ctx)?;
    }
    acc -= t * sgn(pp + m);
    let mut t = ctx.zero();
    for j1 in 1..=m {
        for j2 in 1..=m + 1 - j1 {
            t += c(m + q - j1 - j2, q - 1, ctx)
                * c(j2 + pp - 2, pp - 1, ctx)
                * ws(&[b], &[(R, a, j1), (M, cc, j2 + pp - 1)], m + q - j1 - j2 + 1, ctx)?;
        }
    }
    acc -= t * sgn(m);
    let mut t = ctx.zero();
    for j1 in 1..=pp {
        for j2 in 1..=pp + 1 - j1 {
            t += c(pp + q - j1 - j2, q - 1, ctx)
                * c(j2 + m - 2, m - 1, ctx)
                * ws(&[cc], &[(R, a, j1), (M, b, j2 + m - 1)], pp + q - j1 - j2 + 1, ctx)?;
        }
    }
    acc -= t * sgn(pp);

    // residue at the origin
    acc += &a_0 * &b_0 * sgn(pp) * c(w - 1, pp - 1, ctx) * d(cc, w, ctx)?;
    acc += &a_0 * &c_0 * sgn(m) * c(w - 1, m - 1, ctx) * d(b, w, ctx)?;
    acc -= &b_0 * &c_0 * (1 + sgn(w)) * d(a, w, ctx)?;
    for j1 in 1..=(m + q) / 2 {
        let j2 = m + q + 1 - 2 * j1;
        acc -= &b_0 * c(j2 + pp - 2, j2 - 1, ctx) * d(a, 2 * j1, ctx)? * d(cc, j2 + pp - 1, ctx)? * (2 * sgn(pp));
    }
    for j1 in 1..=(pp + q) / 2 {
        let j2 = pp + q + 1 - 2 * j1;
        acc -= &c_0 * c(j2 + m - 2, j2 - 1, ctx) * d(a, 2 * j1, ctx)? * d(b, j2 + m - 1, ctx)? * (2 * sgn(m));
    }
    for js in compositions(q + 2, 2) {
        let (j1, j2) = (js[0], js[1]);
        acc += &a_0
            * c(j1 + m - 2, j1 - 1, ctx)
            * c(j2 + pp - 2, j2 - 1, ctx)
            * d(b, j1 + m - 1, ctx)?
            * d(cc, j2 + pp - 1, ctx)?
            * sgn(m + pp);
    }
    for j1 in 1..=q / 2 {
        for js in compositions(q + 2 - 2 * j1, 2) {
            let (j2, j3) = (js[0], js[1]);
            acc -= c(j2 + m - 2, j2 - 1, ctx)
                * c(j3 + pp - 2, j3 - 1, ctx)
                * d(a, 2 * j1, ctx)?
                * d(b, j2 + m - 1, ctx)?
                * d(cc, j3 + pp - 1, ctx)?
                * (2 * sgn(m + pp));
        }
    }
    Ok(-acc)
}
