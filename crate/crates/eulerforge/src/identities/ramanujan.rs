//! Ramanujan-type hyperbolic series and the parametric Sitaramachandrarao
//! formula.

use super::hyper::{coth_series, cot_seq, coth_seq, csch_series, direct_sum, exp_tail, inv_power};
use super::kit::*;
use super::{Domain, IdentityCase, Params, SeqSet};
use crate::digamma::{coth_param, cot_param};
use crate::error::Result;
use crate::numkernel::{accel_geometric_tail, bernoulli, const_sqrt, zeta, Expansion, Mono, PrecisionContext, Real};
use crate::seqcore::{seq_alt, seq_ones, weighted_series, WeightSequence};

/// Cutoff for the cotangent sums, whose terms have no tail model.
pub const COT_TERMS: u64 = 10_000;

fn reciprocal(p: &Params) -> Option<String> {
    let (a, b) = (p.approx("alpha").ok()?, p.approx("beta").ok()?);
    let pi2 = std::f64::consts::PI * std::f64::consts::PI;
    if ((a * b) / pi2 - 1.0).abs() > 1e-12 {
        Some(format!("alpha*beta = {:.6} is not pi^2", a * b))
    } else {
        None
    }
}

fn ab_grid(case: IdentityCase, alphas: &[&str], betas: &[&str]) -> IdentityCase {
    case.param(Domain::reals("alpha", alphas)).param(Domain::reals("beta", betas)).restrict(reciprocal)
}

pub(super) fn cases() -> Vec<IdentityCase> {
    let k24 = || Domain::ints("k", 2, 4);
    let k14 = || Domain::ints("k", 1, 4);
    let recip = ["pi", "pi/2", "2pi"];
    let recip_b = ["pi", "2pi", "pi/2"];
    let w = || Domain::reals("w", &["0.5", "1", "2"]);
    vec![
        IdentityCase::new(
            "thm5.1",
            "hyperbolic reciprocity for weighted coth sums",
            "Let k>1 be a integer",
            thm51_lhs,
            thm51_rhs,
        )
        .param(k24())
        .param(Domain::reals("alpha", &["1", "2"]))
        .param(Domain::reals("beta", &["1", "sqrt2"]))
        .param(Domain::seqs("A", SeqSet::Builtin))
        .param(Domain::seqs("B", SeqSet::Builtin)),
        ab_grid(
            IdentityCase::new(
                "eq5.5",
                "reciprocity under alpha*beta = pi^2",
                "can be rewritten in the form",
                eq55_lhs,
                eq55_rhs,
            )
            .param(k24()),
            &["pi", "pi/sqrt2", "2pi"],
            &["pi", "sqrt2*pi", "pi/2"],
        )
        .param(Domain::seqs("A", SeqSet::Builtin))
        .param(Domain::seqs("B", SeqSet::Builtin)),
        ab_grid(
            IdentityCase::new(
                "cor5.3",
                "coth reciprocity for odd zeta values",
                "If k>1 is a positive integer number",
                cor53_lhs,
                cor53_rhs,
            )
            .param(k24()),
            &recip,
            &recip_b,
        ),
        ab_grid(
            IdentityCase::new(
                "cor5.4",
                "alternating csch reciprocity",
                "If k is a positive integer number",
                cor54_lhs,
                cor54_rhs,
            )
            .param(k14()),
            &recip,
            &recip_b,
        ),
        ab_grid(
            IdentityCase::new(
                "cor5.5",
                "mixed csch and alternating coth reciprocity",
                "If k is a positive integer number",
                cor55_lhs,
                cor55_rhs,
            )
            .param(k14()),
            &recip,
            &recip_b,
        ),
        ab_grid(
            IdentityCase::new(
                "eq5.9",
                "Ramanujan's formula for ζ(2k−1)",
                "Ramanujan's formula for ζ(2k−1)",
                eq59_lhs,
                eq59_rhs,
            )
            .param(k24()),
            &["pi", "pi/2", "2pi", "pi/sqrt2"],
            &["pi", "2pi", "pi/2", "sqrt2*pi"],
        ),
        IdentityCase::new(
            "thm5.10",
            "three-kernel coth and cot reciprocity",
            "Let α,β,γ be reals",
            thm510_lhs,
            thm510_rhs,
        )
        .param(Domain::ints("k", 1, 2))
        .param(Domain::seqs("A", SeqSet::Signs))
        .param(Domain::seqs("B", SeqSet::Signs))
        .param(Domain::seqs("C", SeqSet::Signs))
        .param(Domain::reals("alpha", &["1"]))
        .param(Domain::reals("beta", &["sqrt2"]))
        .param(Domain::reals("gamma", &["sqrt3"])),
        IdentityCase::new("ex5.10", "the sqrt 2 cotangent example", "Setting a_n=c_n=1", ex510_lhs, ex510_rhs),
        IdentityCase::new(
            "thm5.6",
            "parametric Sitaramachandrarao formula",
            "Let x and y be reals",
            thm56_lhs,
            thm56_rhs,
        )
        .param(Domain::reals("x", &["0.3", "0.7"]))
        .param(Domain::reals("y", &["0.4", "1.3"]))
        .param(Domain::seqs("A", SeqSet::Signs))
        .param(Domain::seqs("B", SeqSet::Signs)),
        IdentityCase::new(
            "eq5.16",
            "Sitaramachandrarao's formula",
            "which can also be found in",
            eq516_lhs,
            eq516_rhs,
        )
        .param(Domain::reals("x", &["0.3", "0.7"]))
        .param(Domain::reals("y", &["0.4", "1.3"])),
        ab_grid(
            IdentityCase::new(
                "thm5.17",
                "partial fractions for cot times coth",
                "such that αβ = π²",
                thm517_lhs,
                thm517_rhs,
            )
            .param(w()),
            &["pi", "2pi"],
            &["pi", "pi/2"],
        )
        .param(Domain::seqs("A", SeqSet::Signs))
        .param(Domain::seqs("B", SeqSet::Signs)),
        ab_grid(
            IdentityCase::new(
                "cor5.18",
                "partial fractions for cot(√(wα))coth(√(wβ))",
                "and using the identity",
                cor518_lhs,
                cor518_rhs,
            )
            .param(w()),
            &["pi", "2pi"],
            &["pi", "pi/2"],
        ),
        ab_grid(
            IdentityCase::new(
                "cor_final",
                "partial fractions for csc times csch",
                "Letting k=1 in (5.7) gives",
                final_lhs,
                final_rhs,
            )
            .param(w()),
            &["pi", "2pi"],
            &["pi", "pi/2"],
        ),
    ]
}

/// Σ a_n coth(n·t;B)/n^q
fn coth_sum(a: &WeightSequence, t: Real, b: &WeightSequence, q: i64, ctx: &PrecisionContext) -> Result<Real> {
    let q = q as u32;
    coth_series(a, &[(t, b)], |n| ctx.inv_pow(n, q), |o| inv_power(q as i32, o, ctx), ctx)
}

fn thm51_lhs(p: &Params, ctx: &PrecisionContext) -> Result<Real> {
    let (k, a, b) = (p.i("k")?, p.s("A")?, p.s("B")?);
    let (al, be, pi) = (p.r("alpha", ctx)?, p.r("beta", ctx)?, pi(ctx));
    let q = 2 * k - 1;
    let s1 = coth_sum(a, &be * &pi / &al, b, q, ctx)?;
    let s2 = coth_sum(b, &al * &pi / &be, a, q, ctx)?;
    Ok(al.powi(q as i32) * &be * &pi * s1 + be.powi(q as i32) * &al * &pi * s2 * sgn(k))
}

fn thm51_rhs(p: &Params, ctx: &PrecisionContext) -> Result<Real> {
    let (k, a, b) = (p.i("k")?, p.s("A")?, p.s("B")?);
    let (al, be) = (p.r("alpha", ctx)?, p.r("beta", ctx)?);
    let mut acc = a0(b, ctx) * al.powi(2 * k as i32) * d(a, 2 * k, ctx)?;
    acc += a0(a, ctx) * be.powi(2 * k as i32) * d(b, 2 * k, ctx)? * sgn(k);
    for j1 in 1..k {
        let j2 = k - j1;
        acc -= al.powi(2 * j1 as i32) * be.powi(2 * j2 as i32) * d(a, 2 * j1, ctx)? * d(b, 2 * j2, ctx)? * (2 * sgn(j2));
    }
    Ok(acc)
}

fn eq55_lhs(p: &Params, ctx: &PrecisionContext) -> Result<Real> {
    let (k, a, b) = (p.i("k")?, p.s("A")?, p.s("B")?);
    let (al, be) = (p.r("alpha", ctx)?, p.r("beta", ctx)?);
    let q = 2 * k - 1;
    let s1 = coth_sum(a, al.clone(), b, q, ctx)?;
    let s2 = coth_sum(b, be.clone(), a, q, ctx)?;
    Ok(&al * be.powi(k as i32) * s1 + al.powi(k as i32) * &be * s2 * sgn(k))
}

fn eq55_rhs(p: &Params, ctx: &PrecisionContext) -> Result<Real> {
    let (k, a, b) = (p.i("k")?, p.s("A")?, p.s("B")?);
    let (al, be) = (p.r("alpha", ctx)?, p.r("beta", ctx)?);
    let mut acc = a0(b, ctx) * be.powi(k as i32) * d(a, 2 * k, ctx)?;
    acc += a0(a, ctx) * al.powi(k as i32) * d(b, 2 * k, ctx)? * sgn(k);
    for j1 in 1..k {
        let j2 = k - j1;
        acc -= al.powi(j2 as i32) * be.powi(j1 as i32) * d(a, 2 * j1, ctx)? * d(b, 2 * j2, ctx)? * (2 * sgn(j2));
    }
    Ok(acc)
}

/// Σ coth(nx)/n^q through coth = 1 + 2/(e^{2x} − 1).
fn coth_split(q: i64, x: &Real, ctx: &PrecisionContext) -> Result<Real> {
    Ok(zeta(q, ctx)? + exp_tail(q as u32, x, false, ctx)? * 2)
}

fn ab(p: &Params, ctx: &PrecisionContext) -> Result<(i64, Real, Real)> {
    Ok((p.i("k")?, p.r("alpha", ctx)?, p.r("beta", ctx)?))
}

/// Σ_{k₁+k₂=k, k_i≥1} (−1)^{k₂} α^{k₂} β^{k₁} f(2k₁) g(2k₂)
fn mixed(
    k: i64,
    al: &Real,
    be: &Real,
    f: fn(i64, &PrecisionContext) -> Result<Real>,
    g: fn(i64, &PrecisionContext) -> Result<Real>,
    ctx: &PrecisionContext,
) -> Result<Real> {
    let mut acc = ctx.zero();
    for k1 in 1..k {
        let k2 = k - k1;
        acc += al.powi(k2 as i32) * be.powi(k1 as i32) * f(2 * k1, ctx)? * g(2 * k2, ctx)? * sgn(k2);
    }
    Ok(acc)
}

fn cor53_lhs(p: &Params, ctx: &PrecisionContext) -> Result<Real> {
    let (k, al, be) = ab(p, ctx)?;
    let q = 2 * k - 1;
    Ok(&al * be.powi(k as i32) * coth_split(q, &al, ctx)? + al.powi(k as i32) * &be * coth_split(q, &be, ctx)? * sgn(k))
}

fn cor53_rhs(p: &Params, ctx: &PrecisionContext) -> Result<Real> {
    let (k, al, be) = ab(p, ctx)?;
    Ok((be.powi(k as i32) + al.powi(k as i32) * sgn(k)) * z(2 * k, ctx)? - mixed(k, &al, &be, z, z, ctx)? * 2)
}

fn cor54_lhs(p: &Params, ctx: &PrecisionContext) -> Result<Real> {
    let (k, al, be) = ab(p, ctx)?;
    let q = (2 * k - 1) as u32;
    Ok(&al * be.powi(k as i32) * csch_series(q, &al, true, ctx)?
        + al.powi(k as i32) * &be * csch_series(q, &be, true, ctx)? * sgn(k))
}

fn cor54_rhs(p: &Params, ctx: &PrecisionContext) -> Result<Real> {
    let (k, al, be) = ab(p, ctx)?;
    Ok((be.powi(k as i32) + al.powi(k as i32) * sgn(k)) * zb(2 * k, ctx)? + mixed(k, &al, &be, zb, zb, ctx)? * 2)
}

fn cor55_lhs(p: &Params, ctx: &PrecisionContext) -> Result<Real> {
    let (k, al, be) = ab(p, ctx)?;
    let q = 2 * k - 1;
    // Σ(−1)^n coth(nβ)/n^q = −ζ̄(q) + 2Σ(−1)^n/(n^q(e^{2nβ}−1))
    let alt_coth = exp_tail(q as u32, &be, true, ctx)? * 2 - zb(q, ctx)?;
    Ok(&al * be.powi(k as i32) * csch_series(q as u32, &al, false, ctx)? + al.powi(k as i32) * &be * alt_coth * sgn(k))
}

fn cor55_rhs(p: &Params, ctx: &PrecisionContext) -> Result<Real> {
    let (k, al, be) = ab(p, ctx)?;
    let f = ctx.one() - ctx.int(2).powi(1 - 2 * k as i32);
    Ok((be.powi(k as i32) - al.powi(k as i32) * f * sgn(k)) * z(2 * k, ctx)? + mixed(k, &al, &be, z, zb, ctx)? * 2)
}

fn eq59_lhs(p: &Params, ctx: &PrecisionContext) -> Result<Real> {
    let (k, al, be) = ab(p, ctx)?;
    let q = 2 * k - 1;
    let half = zeta(q, ctx)? / 2;
    let qa = &half + exp_tail(q as u32, &al, false, ctx)?;
    let qb = &half + exp_tail(q as u32, &be, false, ctx)?;
    let e = -(k as i32 - 1);
    Ok((&al * 4).powi(e) * qa - (-&be * 4).powi(e) * qb)
}

fn eq59_rhs(p: &Params, ctx: &PrecisionContext) -> Result<Real> {
    let (k, al, be) = ab(p, ctx)?;
    let mut acc = ctx.zero();
    for j in 0..=k {
        let c = bernoulli(2 * j)? * bernoulli(2 * k - 2 * j)?
            / rug::Integer::from(rug::Integer::factorial((2 * j) as u32))
            / rug::Integer::from(rug::Integer::factorial((2 * k - 2 * j) as u32));
        acc += ctx.rational(&rug::Rational::from(c)) * al.powi((k - j) as i32) * be.powi(j as i32) * sgn(j - 1);
    }
    Ok(acc)
}

/// cot-type sum Σ_{n≤N} s_n coth(n·u;A)·cot(n·v;C)/n^{2k}, summed directly.
fn cot_sum(
    s: &WeightSequence,
    u: &Real,
    a: &WeightSequence,
    v: &Real,
    c: &WeightSequence,
    k: i64,
    ctx: &PrecisionContext,
) -> Result<Real> {
    direct_sum(
        COT_TERMS,
        |n| {
            let nn = ctx.int(n as i64);
            Ok(s.term(n as i64, ctx) * coth_seq(&(u * &nn), a, ctx)? * cot_seq(&(v * &nn), c, ctx)? * ctx.inv_pow(n, 2 * k as u32))
        },
        ctx,
    )
}

fn thm510_lhs(p: &Params, ctx: &PrecisionContext) -> Result<Real> {
    let k = p.i("k")?;
    let (a, b, c) = (p.s("A")?, p.s("B")?, p.s("C")?);
    let (al, be, ga) = (p.r("alpha", ctx)?, p.r("beta", ctx)?, p.r("gamma", ctx)?);
    let pi = pi(ctx);
    let pi2 = pi.square();
    let q = 2 * k as u32;
    let t1 = coth_series(
        a,
        &[(&pi * &be / &al, b), (&pi * &ga / &al, c)],
        |n| ctx.inv_pow(n, q),
        |o| inv_power(q as i32, o, ctx),
        ctx,
    )? * al.powi(q as i32)
        * &be
        * &ga
        * &pi2;
    let t2 = cot_sum(b, &(&pi * &al / &be), a, &(&pi * &ga / &be), c, k, ctx)? * be.powi(q as i32) * &al * &ga * &pi2 * sgn(k - 1);
    let t3 = cot_sum(c, &(&pi * &al / &ga), a, &(&pi * &be / &ga), b, k, ctx)? * ga.powi(q as i32) * &al * &be * &pi2 * sgn(k - 1);
    Ok(t1 + t2 + t3)
}

/// Minus the residue at the origin.
fn thm510_rhs(p: &Params, ctx: &PrecisionContext) -> Result<Real> {
    let k = p.i("k")?;
    let (a, b, c) = (p.s("A")?, p.s("B")?, p.s("C")?);
    let (al, be, ga) = (p.r("alpha", ctx)?, p.r("beta", ctx)?, p.r("gamma", ctx)?);
    let (a_0, b_0, c_0) = (a0(a, ctx), a0(b, ctx), a0(c, ctx));
    let pw = |x: &Real, j: i64| x.powi(2 * j as i32);
    let mut rest = ctx.zero();
    for j1 in 1..=k {
        let j2 = k + 1 - j1;
        rest -= &a_0 * d(b, 2 * j1, ctx)? * d(c, 2 * j2, ctx)? * pw(&be, j1) * pw(&ga, j2) * (2 * sgn(k));
        rest += &b_0 * d(a, 2 * j1, ctx)? * d(c, 2 * j2, ctx)? * pw(&al, j1) * pw(&ga, j2) * (2 * sgn(j2));
        rest += &c_0 * d(a, 2 * j1, ctx)? * d(b, 2 * j2, ctx)? * pw(&al, j1) * pw(&be, j2) * (2 * sgn(j2));
    }
    for js in compositions(k + 1, 3) {
        let (j1, j2, j3) = (js[0], js[1], js[2]);
        rest -= d(a, 2 * j1, ctx)? * d(b, 2 * j2, ctx)? * d(c, 2 * j3, ctx)? * pw(&al, j1) * pw(&be, j2) * pw(&ga, j3)
            * (4 * sgn(j2 + j3));
    }
    rest += &a_0 * &b_0 * pw(&ga, k + 1) * d(c, 2 * k + 2, ctx)? * sgn(k);
    rest += &a_0 * &c_0 * pw(&be, k + 1) * d(b, 2 * k + 2, ctx)? * sgn(k);
    rest -= &b_0 * &c_0 * pw(&al, k + 1) * d(a, 2 * k + 2, ctx)?;
    Ok(-rest)
}

fn ex510_lhs(_: &Params, ctx: &PrecisionContext) -> Result<Real> {
    let pi = pi(ctx);
    let r2 = const_sqrt(2, ctx);
    let s1 = coth_series(
        &seq_ones(),
        &[(&pi * 2, &seq_ones()), (&pi * &r2, &seq_alt())],
        |n| ctx.inv_pow(n, 2),
        |o| inv_power(2, o, ctx),
        ctx,
    )?;
    let s2 = cot_sum(&seq_alt(), &(&pi / &r2), &seq_ones(), &(&pi * &r2), &seq_ones(), 1, ctx)?;
    let s3 = cot_sum(&seq_ones(), &(&pi / 2), &seq_ones(), &(&pi / &r2), &seq_alt(), 1, ctx)?;
    Ok(s1 + s2 * &r2 + s3 * 2)
}

fn ex510_rhs(_: &Params, ctx: &PrecisionContext) -> Result<Real> {
    Ok(const_sqrt(2, ctx) * z(2, ctx)? * ctx.ratio(97, 120))
}

fn thm56_lhs(p: &Params, ctx: &PrecisionContext) -> Result<Real> {
    let (x, y) = (p.r("x", ctx)?, p.r("y", ctx)?);
    Ok(&x * &y * cot_param(&x, p.s("A")?, ctx)? * coth_param(&y, p.s("B")?, ctx)?)
}

/// x²Σ a_n coth(πny/x;B)/(n(n²−x²)) and y²Σ b_n coth(πnx/y;A)/(n(n²+y²)).
fn sita_sums(x: &Real, y: &Real, a: &WeightSequence, b: &WeightSequence, ctx: &PrecisionContext) -> Result<(Real, Real)> {
    let pi = pi(ctx);
    let (x2, y2) = (x.square(), y.square());
    // 1/(n(n² + c)) = Σ_i (−c)^i n^{−3−2i}
    let weight = |c: Real| {
        move |order: i32| {
            let mut e = Expansion::zero(ctx, order);
            let mut m = ctx.one();
            for i in 0..=((order - 3).max(0) / 2) {
                e.push(Mono::power(3 + 2 * i), m.clone());
                m *= -c.clone();
            }
            e
        }
    };
    let n3 = |n: u64, c: &Real| {
        let nn = ctx.int(n as i64);
        (&nn * (nn.square() + c)).recip()
    };
    let mx2 = -x2.clone();
    let s1 = coth_series(a, &[(&pi * y / x, b)], |n| n3(n, &mx2), weight(mx2.clone()), ctx)?;
    let s2 = coth_series(b, &[(&pi * x / y, a)], |n| n3(n, &y2), weight(y2.clone()), ctx)?;
    Ok((s1 * x2, s2 * y2))
}

fn thm56_rhs(p: &Params, ctx: &PrecisionContext) -> Result<Real> {
    let (x, y) = (p.r("x", ctx)?, p.r("y", ctx)?);
    let (a, b) = (p.s("A")?, p.s("B")?);
    let (a_0, b_0) = (a0(a, ctx), a0(b, ctx));
    let (s1, s2) = sita_sums(&x, &y, a, b, ctx)?;
    let mut acc = &a_0 * &b_0;
    acc += &a_0 * d(b, 2, ctx)? * y.square() * 2;
    acc -= &b_0 * d(a, 2, ctx)? * x.square() * 2;
    acc -= pi(ctx) * &x * &y * (s1 + s2) * 2;
    Ok(acc)
}

fn eq516_lhs(p: &Params, ctx: &PrecisionContext) -> Result<Real> {
    let (x, y) = (p.r("x", ctx)?, p.r("y", ctx)?);
    let pi = pi(ctx);
    Ok(pi.square() * &x * &y * (&pi * &x).cot() * (&pi * &y).coth())
}

fn eq516_rhs(p: &Params, ctx: &PrecisionContext) -> Result<Real> {
    let (x, y) = (p.r("x", ctx)?, p.r("y", ctx)?);
    let (s1, s2) = sita_sums(&x, &y, &seq_ones(), &seq_ones(), ctx)?;
    Ok(ctx.one() + z(2, ctx)? * (y.square() - x.square()) * 2 - pi(ctx) * &x * &y * (s1 + s2) * 2)
}

fn wab(p: &Params, ctx: &PrecisionContext) -> Result<(Real, Real, Real)> {
    Ok((p.r("w", ctx)?, p.r("alpha", ctx)?, p.r("beta", ctx)?))
}

fn thm517_lhs(p: &Params, ctx: &PrecisionContext) -> Result<Real> {
    let (w, al, be) = wab(p, ctx)?;
    let pi = pi(ctx);
    let c = cot_param(&((&w * &al).sqrt() / &pi), p.s("A")?, ctx)?;
    let h = coth_param(&((&w * &be).sqrt() / &pi), p.s("B")?, ctx)?;
    Ok(c * h / (pi * 2))
}

fn thm517_rhs(p: &Params, ctx: &PrecisionContext) -> Result<Real> {
    let (w, al, be) = wab(p, ctx)?;
    let (a, b) = (p.s("A")?, p.s("B")?);
    let (a_0, b_0) = (a0(a, ctx), a0(b, ctx));
    let pi2 = pi(ctx).square();
    // nα/(w+n²α) − 1/n = −(w/α)·Σ_i (−w/α)^i n^{−3−2i}, and likewise with −β
    let series = |s: &WeightSequence, t: &Real, kern: &WeightSequence, sign: i64| {
        let u = &w / t;
        let wt = |n: u64| {
            let nn = ctx.int(n as i64);
            -(&u / (&nn * (nn.square() + &u * sign)))
        };
        let exp = |order: i32| {
            let mut e = Expansion::zero(ctx, order);
            let mut m = -u.clone();
            for i in 0..=((order - 3).max(0) / 2) {
                e.push(Mono::power(3 + 2 * i), m.clone());
                m *= -(&u * sign);
            }
            e
        };
        coth_series(s, &[(t.clone(), kern)], wt, exp, ctx)
    };
    let mut acc = &a_0 * &b_0 / (&w * 2);
    acc += (&a_0 * &be * d(b, 2, ctx)? - &b_0 * &al * d(a, 2, ctx)?) / &pi2;
    acc += series(b, &al, a, 1)?;
    acc += series(a, &be, b, -1)?;
    Ok(acc)
}

fn cor518_lhs(p: &Params, ctx: &PrecisionContext) -> Result<Real> {
    let (w, al, be) = wab(p, ctx)?;
    Ok(pi(ctx) / 2 * (&w * &al).sqrt().cot() * (&w * &be).sqrt().coth())
}

fn cor518_rhs(p: &Params, ctx: &PrecisionContext) -> Result<Real> {
    let (w, al, be) = wab(p, ctx)?;
    let term = |n: u64| {
        let nn = ctx.int(n as i64);
        let n2 = nn.square();
        &nn * &al * (&nn * &al).coth() / (&w + &n2 * &al) + &nn * &be * (&nn * &be).coth() / (&w - &n2 * &be)
    };
    // Σ_{i≥1} [(−w/α)^i − (w/β)^i] n^{−1−2i}
    let exp = |order: i32| {
        let (u, v) = (-(&w / &al), &w / &be);
        let (mut up, mut vp) = (u.clone(), v.clone());
        let mut e = Expansion::zero(ctx, order);
        for i in 1..=((order - 1).max(0) / 2) {
            e.push(Mono::power(1 + 2 * i), &up - &vp);
            up *= &u;
            vp *= &v;
        }
        e
    };
    let min = (ctx.working_digits() as f64 * std::f64::consts::LN_10 / (2.0 * al.to_f64().min(be.to_f64()))).ceil() as u64 + 1;
    let series = weighted_series(&seq_ones(), term, exp, min, ctx)?;
    Ok((&w * 2).recip() + (&be / &al).ln() / 2 + series)
}

fn final_lhs(p: &Params, ctx: &PrecisionContext) -> Result<Real> {
    let (w, al, be) = wab(p, ctx)?;
    Ok(pi(ctx) / ((&w * &al).sqrt().sin() * (&w * &be).sqrt().sinh() * 2))
}

fn final_rhs(p: &Params, ctx: &PrecisionContext) -> Result<Real> {
    let (w, al, be) = wab(p, ctx)?;
    let ratio = (-al.to_f64().min(be.to_f64())).exp();
    let s = accel_geometric_tail(
        "csch partial fractions",
        1,
        |n| {
            let nn = ctx.int(n as i64);
            let n2 = nn.square();
            let t = &nn * &al / ((&nn * &al).sinh() * (&w + &n2 * &al)) + &nn * &be / ((&nn * &be).sinh() * (&w - &n2 * &be));
            Ok(if n % 2 == 1 { -t } else { t })
        },
        ratio,
        ctx,
    )?;
    Ok((&w * 2).recip() + s)
}
