//! The ten functionals D, E, Ē, F, F̄, G, L, M, M̄, R of a weight sequence.
//!
//! For builtin sequences every functional is tabulated for n = 0..=N by an
//! O(N·j) recurrence and paired with a large-n asymptotic expansion whose
//! constant is fitted against the table at N. Weighted sums query the table
//! below the cutoff and integrate the expansion above it.
//!
//! Custom sequences get direct summation with a tail bound from their
//! declared growth exponent and no tables.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use rug::{Integer, Rational};

use super::sequence::{SeqKind, WeightSequence};
use crate::error::{Error, Result};
use crate::numkernel::{euler_maclaurin_tail, expansion_order, zeta, Expansion, Mono, PrecisionContext, Real};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FunctionalKind {
    D,
    E,
    EBar,
    F,
    FBar,
    G,
    L,
    M,
    MBar,
    R,
}

impl FunctionalKind {
    pub const ALL: [FunctionalKind; 10] = [
        FunctionalKind::D,
        FunctionalKind::E,
        FunctionalKind::EBar,
        FunctionalKind::F,
        FunctionalKind::FBar,
        FunctionalKind::G,
        FunctionalKind::L,
        FunctionalKind::M,
        FunctionalKind::MBar,
        FunctionalKind::R,
    ];

    pub fn symbol(self) -> &'static str {
        match self {
            FunctionalKind::D => "D",
            FunctionalKind::E => "E",
            FunctionalKind::EBar => "EBAR",
            FunctionalKind::F => "F",
            FunctionalKind::FBar => "FBAR",
            FunctionalKind::G => "G",
            FunctionalKind::L => "L",
            FunctionalKind::M => "M",
            FunctionalKind::MBar => "MBAR",
            FunctionalKind::R => "R",
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, FunctionalKind::E | FunctionalKind::EBar | FunctionalKind::G)
    }

    /// Whether the functional only touches a_k for k ≥ 0.
    fn nonnegative_indices(self) -> bool {
        matches!(self, FunctionalKind::D | FunctionalKind::E | FunctionalKind::F | FunctionalKind::M)
    }
}

impl fmt::Display for FunctionalKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

impl FromStr for FunctionalKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let up = s.trim().to_ascii_uppercase();
        FunctionalKind::ALL
            .into_iter()
            .find(|k| k.symbol() == up)
            .ok_or_else(|| Error::Parse(format!("unknown functional `{s}`")))
    }
}

/// Values for n = 0..=N plus the expansion valid for n > N.
#[derive(Debug)]
pub struct FunctionalTable {
    pub values: Vec<Real>,
    pub expansion: Expansion,
}

impl FunctionalTable {
    pub fn cutoff(&self) -> u64 {
        self.values.len() as u64 - 1
    }

    pub fn value(&self, n: u64) -> Real {
        match self.values.get(n as usize) {
            Some(v) => v.clone(),
            None => self.expansion.eval(n),
        }
    }
}

fn sign(j: u32) -> i64 {
    if j % 2 == 0 {
        1
    } else {
        -1
    }
}

fn check_j(j: u32) -> Result<()> {
    if j == 0 {
        Err(Error::InvalidArgument("functional order j must be ≥ 1".into()))
    } else {
        Ok(())
    }
}

fn check_support(kind: FunctionalKind, a: &WeightSequence) -> Result<()> {
    if a.is_harmonic() && !kind.nonnegative_indices() {
        return Err(Error::InvalidArgument(format!(
            "{kind} touches negative indices, where harm is only a convention; use D, E, F or M"
        )));
    }
    Ok(())
}

pub(crate) fn binom(n: u32, k: u32, ctx: &PrecisionContext) -> Real {
    ctx.rational(&Rational::from(Integer::from(n).binomial(k)))
}

/// D(j) = Σ_{k≥1} a_k/k^j, with D(1) := 0.
pub fn func_d(a: &WeightSequence, j: u32, ctx: &PrecisionContext) -> Result<Real> {
    check_j(j)?;
    if j == 1 {
        return Ok(ctx.zero());
    }
    raw_sum(a, j, ctx)
}

/// E, Ē or G at n: exact finite sums.
pub fn func_finite(kind: FunctionalKind, a: &WeightSequence, n: u64, j: u32, ctx: &PrecisionContext) -> Result<Real> {
    if !kind.is_finite() {
        return Err(Error::InvalidArgument(format!("{kind} is not a finite functional")));
    }
    functional(kind, a, n, j, ctx)
}

/// F, F̄, L, M, M̄ or R at n.
pub fn func_infinite(kind: FunctionalKind, a: &WeightSequence, n: u64, j: u32, ctx: &PrecisionContext) -> Result<Real> {
    if kind.is_finite() || kind == FunctionalKind::D {
        return Err(Error::InvalidArgument(format!("{kind} is not an infinite functional")));
    }
    functional(kind, a, n, j, ctx)
}

/// Any functional at n (n is ignored for D).
pub fn functional(kind: FunctionalKind, a: &WeightSequence, n: u64, j: u32, ctx: &PrecisionContext) -> Result<Real> {
    check_j(j)?;
    check_support(kind, a)?;
    if kind == FunctionalKind::D {
        return func_d(a, j, ctx);
    }
    if kind == FunctionalKind::MBar && n == 0 {
        return Err(Error::InvalidArgument("MBAR is defined for n ≥ 1".into()));
    }
    if a.is_custom() {
        return custom::functional(kind, a, n, j, ctx);
    }
    let base = a.cutoff(ctx);
    let n_max = if n <= base { base } else { n.div_ceil(1024) * 1024 };
    Ok(functional_table(kind, a, j, n_max, ctx)?.values[n as usize].clone())
}

/// Table of a functional of a builtin sequence for n = 0..=n_max
/// (raised to the sequence's cutoff if smaller).
pub fn functional_table(
    kind: FunctionalKind,
    a: &WeightSequence,
    j: u32,
    n_max: u64,
    ctx: &PrecisionContext,
) -> Result<Arc<FunctionalTable>> {
    check_j(j)?;
    check_support(kind, a)?;
    if a.is_custom() {
        return Err(Error::InvalidArgument(format!("{} cannot be tabulated", a.name())));
    }
    if kind == FunctionalKind::D {
        return Err(Error::InvalidArgument("D does not depend on n".into()));
    }
    let n_max = n_max.max(a.cutoff(ctx));
    if n_max > ctx.max_terms() {
        return Err(Error::Truncation { series: format!("{kind}[{}]", a.name()), terms: n_max });
    }
    let key = format!("ftab:{kind}:{}:{j}:{n_max}", a.name());
    ctx.memoize(&key, || build(kind, a, j, n_max, ctx))
}

fn build(kind: FunctionalKind, a: &WeightSequence, j: u32, n: u64, ctx: &PrecisionContext) -> Result<FunctionalTable> {
    use FunctionalKind::*;
    let t = |k| functional_table(k, a, j, n, ctx);
    let s = sign(j);
    let combine = |x: &FunctionalTable, y: &FunctionalTable, c: i64| FunctionalTable {
        values: x.values.iter().zip(&y.values).map(|(u, v)| u + &(v * c)).collect(),
        expansion: x.expansion.add(&y.expansion.scale(&ctx.int(c))),
    };
    Ok(match kind {
        E => prim_e(a, j, n, ctx)?,
        EBar => prim_ebar(a, j, n, ctx)?,
        F => prim_f(a, j, n, ctx)?,
        FBar => prim_fbar(a, j, n, ctx)?,
        G => {
            let e = t(E)?;
            let eb = t(EBar)?;
            let a0 = a.term(0, ctx);
            let mut values = vec![ctx.zero()];
            for m in 1..=n {
                values.push(&e.values[m as usize] - &eb.values[m as usize - 1] - &a0 * ctx.inv_pow(m, j));
            }
            let order = e.expansion.order();
            let expansion = e
                .expansion
                .sub(&eb.expansion.shift(-1))
                .sub(&Expansion::power(ctx, order, j as i32).scale(&a0));
            FunctionalTable { values, expansion }
        }
        L => combine(&*t(F)?, &*t(FBar)?, s),
        M => combine(&*t(E)?, &*t(F)?, s),
        MBar => {
            let fb = t(FBar)?;
            let eb = t(EBar)?;
            let mut values = vec![fb.values[0].clone()];
            for m in 1..=n as usize {
                values.push(&fb.values[m] - &eb.values[m - 1]);
            }
            FunctionalTable { values, expansion: fb.expansion.sub(&eb.expansion.shift(-1)) }
        }
        R => combine(&*t(G)?, &*t(L)?, s),
        D => unreachable!(),
    })
}

/// Σ_{m≤n} f(m) = C + shape(n); C fitted from the value at n.
fn fit(value: &Real, n: u64, inc: &Expansion) -> Result<Expansion> {
    let shape = inc.partial_sum_shape()?;
    let c = value - shape.eval(n);
    let mut out = shape;
    out.push(Mono::ONE, c);
    Ok(out)
}

/// Σ_{m≥0} m^i r^m for i = 0..=imax.
fn geom_moments(r: &Real, imax: u32, ctx: &PrecisionContext) -> Vec<Real> {
    let mut out = vec![ctx.zero(); imax as usize + 1];
    out[0] = ctx.one();
    let lr = r.abs().to_f64().ln();
    let floor = -((ctx.working_digits() + 10) as f64) * std::f64::consts::LN_10;
    let mut pw = r.clone();
    let mut m = 1u64;
    loop {
        let mut mp = ctx.one();
        for slot in out.iter_mut() {
            *slot += &mp * &pw;
            mp *= m as i64;
        }
        let lnm = (m as f64).ln();
        let peak = imax as f64 / -lr;
        let worst = imax as f64 * lnm + m as f64 * lr - out[imax as usize].log10_abs().max(0.0) * std::f64::consts::LN_10;
        if m as f64 > peak && worst < floor {
            break;
        }
        pw *= r;
        m += 1;
    }
    ctx.charge(m);
    out
}

fn prim_e(a: &WeightSequence, j: u32, n: u64, ctx: &PrecisionContext) -> Result<FunctionalTable> {
    let order = expansion_order(ctx, n).max(j as i32 + 8);
    let mut values = Vec::with_capacity(n as usize + 1);
    values.push(ctx.zero());
    ctx.charge(n);
    let inc = Expansion::power(ctx, order, j as i32);
    match a.kind() {
        SeqKind::Ones => {
            let mut acc = ctx.zero();
            for m in 1..=n {
                acc += ctx.inv_pow(m, j);
                values.push(acc.clone());
            }
            let expansion = fit(&acc, n, &inc)?;
            Ok(FunctionalTable { values, expansion })
        }
        SeqKind::Alt => {
            let mut acc = ctx.zero();
            for m in 1..=n {
                acc = ctx.inv_pow(m, j) - acc;
                values.push(acc.clone());
            }
            // Q_n = (−1)^n E_n = Σ_{k≤n} (−1)^k/k^j
            let q = if n % 2 == 0 { acc.clone() } else { -acc.clone() };
            let expansion = fit(&q, n, &inc.alternate())?.alternate();
            Ok(FunctionalTable { values, expansion })
        }
        SeqKind::Geom(r) => {
            let r = ctx.rational(r);
            let mut acc = ctx.zero();
            for m in 1..=n {
                acc = &r * &acc + ctx.inv_pow(m, j);
                values.push(acc.clone());
            }
            let mu = geom_moments(&r, order as u32, ctx);
            let mut expansion = Expansion::zero(ctx, order);
            for i in 0..=(order - j as i32).max(0) as u32 {
                expansion.push(Mono::power(j as i32 + i as i32), binom(j + i - 1, i, ctx) * &mu[i as usize]);
            }
            Ok(FunctionalTable { values, expansion })
        }
        SeqKind::Harmonic => {
            // E_n − E_{n−1} = Σ_{t≤j} H^{(t)}_{n−1}/n^{j+1−t} + H_{n−1}/n^j
            let mut h = vec![ctx.zero(); j as usize + 1];
            let mut acc = ctx.zero();
            for m in 1..=n {
                let mut g = &h[1] * ctx.inv_pow(m, j);
                for t in 1..=j {
                    g += &h[t as usize] * ctx.inv_pow(m, j + 1 - t);
                }
                acc += g;
                values.push(acc.clone());
                for t in 1..=j {
                    h[t as usize] += ctx.inv_pow(m, t);
                }
            }
            let hexp = |t: u32| -> Result<Expansion> {
                // H^{(t)}_{m−1} = H^{(t)}_m − m^{−t}
                let ones = prim_e(&super::sequence::seq_ones(), t, n, ctx)?.expansion.with_order(order);
                Ok(ones.sub(&Expansion::power(ctx, order, t as i32)))
            };
            let h1 = hexp(1)?;
            let mut g = h1.mul(&Expansion::power(ctx, order, j as i32));
            for t in 1..=j {
                let ht = if t == 1 { h1.clone() } else { hexp(t)? };
                g = g.add(&ht.mul(&Expansion::power(ctx, order, (j + 1 - t) as i32)));
            }
            let expansion = fit(&acc, n, &g)?;
            Ok(FunctionalTable { values, expansion })
        }
        SeqKind::Custom(_) => unreachable!(),
    }
}

fn prim_ebar(a: &WeightSequence, j: u32, n: u64, ctx: &PrecisionContext) -> Result<FunctionalTable> {
    let e = functional_table(FunctionalKind::E, a, j, n, ctx)?;
    let factor = match a.kind() {
        SeqKind::Ones => ctx.one(),
        // Ē_n = Σ (−1)^{k−n−1}/k^j = −E_n
        SeqKind::Alt => ctx.int(-1),
        // Ē_n = Σ r^{n+1−k}/k^j = r·E_n
        SeqKind::Geom(r) => ctx.rational(r),
        _ => unreachable!(),
    };
    Ok(FunctionalTable {
        values: e.values.iter().map(|v| v * &factor).collect(),
        expansion: e.expansion.scale(&factor),
    })
}

/// T(j) = Σ_{k≥1} a_k/k^j (j = 1 only where it converges).
fn raw_sum(a: &WeightSequence, j: u32, ctx: &PrecisionContext) -> Result<Real> {
    if a.is_custom() {
        return custom::raw_sum(a, j, ctx);
    }
    let key = format!("rawsum:{}:{j}", a.name());
    let v = ctx.memoize(&key, || {
        let n = a.cutoff(ctx);
        let terms = a.terms_upto(n, ctx);
        let mut head = ctx.zero();
        for k in 1..=n {
            head += &terms[k as usize] * ctx.inv_pow(k, j);
        }
        ctx.charge(n);
        let order = expansion_order(ctx, n).max(j as i32 + 8);
        let f = a.term_expansion(ctx, order)?.mul(&Expansion::power(ctx, order, j as i32));
        let tail = euler_maclaurin_tail(&format!("D[{}]", a.name()), &f, n + 1, ctx)?;
        Ok(head + tail)
    })?;
    Ok((*v).clone())
}

fn prim_f(a: &WeightSequence, j: u32, n: u64, ctx: &PrecisionContext) -> Result<FunctionalTable> {
    let order = expansion_order(ctx, n).max(j as i32 + 8);
    if let SeqKind::Harmonic = a.kind() {
        // F_n − F_{n−1} = Σ_{t<j} (−1)^{t−1} ζ(j+1−t)/n^t + (−1)^{j−1} H_n/n^j
        let z: Vec<Real> = (1..j).map(|t| zeta((j + 1 - t) as i64, ctx)).collect::<Result<_>>()?;
        let mut acc = if j == 1 { ctx.zero() } else { raw_sum(a, j, ctx)? };
        let mut values = vec![acc.clone()];
        let mut h = ctx.zero();
        for m in 1..=n {
            h += ctx.ratio(1, m as i64);
            let mut d = &h * ctx.inv_pow(m, j) * sign(j + 1);
            for t in 1..j {
                d += &z[t as usize - 1] * ctx.inv_pow(m, t) * sign(t + 1);
            }
            acc += d;
            values.push(acc.clone());
        }
        ctx.charge(n);
        let hexp = super::sequence::harmonic_expansion(ctx, order)?;
        let mut inc = hexp.mul(&Expansion::power(ctx, order, j as i32)).scale(&ctx.int(sign(j + 1)));
        for t in 1..j {
            inc.push(Mono::power(t as i32), &z[t as usize - 1] * sign(t + 1));
        }
        let expansion = fit(&acc, n, &inc)?;
        return Ok(FunctionalTable { values, expansion });
    }
    if matches!(a.kind(), SeqKind::Ones) && j == 1 {
        return Ok(FunctionalTable {
            values: vec![ctx.zero(); n as usize + 1],
            expansion: Expansion::zero(ctx, order),
        });
    }
    // a_{k+n} = λ(n)·a_k: F_n(j) = λ(n)·T(j), F_n(1) = (λ(n) − 1)·T(1)
    let t = raw_sum(a, j, ctx)?;
    let shift = if j == 1 { 1 } else { 0 };
    let values = (0..=n as i64)
        .map(|m| (a.shift_factor(m, ctx).unwrap() - shift) * &t)
        .collect();
    let lam = a.shift_factor_expansion(ctx, order).unwrap();
    let lam = lam.sub(&Expansion::constant(ctx, order, ctx.int(shift)));
    Ok(FunctionalTable { values, expansion: lam.scale(&t) })
}

fn prim_fbar(a: &WeightSequence, j: u32, n: u64, ctx: &PrecisionContext) -> Result<FunctionalTable> {
    match a.kind() {
        // a_{k−n} = λ(n)·a_k for these two
        SeqKind::Ones | SeqKind::Alt => {
            let f = functional_table(FunctionalKind::F, a, j, n, ctx)?;
            Ok(FunctionalTable { values: f.values.clone(), expansion: f.expansion.clone() })
        }
        SeqKind::Geom(r) => {
            // Σ_k r^{|k−n|}/k^j = E_n + U_n with U_n = Σ_{m≥1} r^m/(n+m)^j
            let order = expansion_order(ctx, n).max(j as i32 + 8);
            let r = ctx.rational(r);
            let e = functional_table(FunctionalKind::E, a, j, n, ctx)?;
            let floor = ctx.target_log10() - 10.0;
            let mut u = ctx.zero();
            let mut pw = r.clone();
            let mut m = 1u64;
            while pw.log10_abs() > floor {
                u += &pw * ctx.inv_pow(n + m, j);
                pw *= &r;
                m += 1;
            }
            ctx.charge(m + n);
            let mut us = vec![ctx.zero(); n as usize + 1];
            us[n as usize] = u.clone();
            for k in (1..=n).rev() {
                u = &r * (ctx.inv_pow(k, j) + &u);
                us[k as usize - 1] = u.clone();
            }
            let t1 = if j == 1 { raw_sum(a, 1, ctx)? } else { ctx.zero() };
            let values = e.values.iter().zip(&us).map(|(x, y)| x + y - &t1).collect();
            let mu = geom_moments(&r, order as u32, ctx);
            let mut uexp = Expansion::zero(ctx, order);
            for i in 0..=(order - j as i32).max(0) as u32 {
                let mut c = binom(j + i - 1, i, ctx) * &mu[i as usize];
                if i == 0 {
                    c -= ctx.one();
                }
                uexp.push(Mono::power(j as i32 + i as i32), c * sign(i));
            }
            let expansion = e.expansion.add(&uexp).sub(&Expansion::constant(ctx, order, t1));
            Ok(FunctionalTable { values, expansion })
        }
        _ => unreachable!(),
    }
}

/// Σ_{k≥1} a_k·w(k) for a weight w whose large-k expansion `w_exp(order)`
/// is known. The direct part runs to at least `min_cutoff`.
pub fn weighted_series<W, X>(
    a: &WeightSequence,
    w: W,
    w_exp: X,
    min_cutoff: u64,
    ctx: &PrecisionContext,
) -> Result<Real>
where
    W: Fn(u64) -> Real,
    X: FnOnce(i32) -> Expansion,
{
    if a.is_custom() {
        return custom::weighted_series(a, w, &w_exp(4), min_cutoff, ctx);
    }
    if let SeqKind::Geom(r) = a.kind() {
        // |r|^k beats any polynomial growth of w long before min_cutoff
        let lr = -(r.to_f64().abs()).ln();
        let n = ((ctx.working_digits() as f64 + 10.0) * std::f64::consts::LN_10 / lr).ceil() as u64 + 20;
        let terms = a.terms_upto(n, ctx);
        let mut acc = ctx.zero();
        for k in 1..=n {
            acc += &terms[k as usize] * w(k);
        }
        ctx.charge(n);
        return Ok(acc);
    }
    let n = a.cutoff(ctx).max(min_cutoff);
    if n > ctx.max_terms() {
        return Err(Error::Truncation { series: format!("series[{}]", a.name()), terms: n });
    }
    let terms = a.terms_upto(n, ctx);
    let mut head = ctx.zero();
    for k in 1..=n {
        head += &terms[k as usize] * w(k);
    }
    ctx.charge(n);
    let order = expansion_order(ctx, n);
    let f = a.term_expansion(ctx, order)?.mul(&w_exp(order));
    let tail = euler_maclaurin_tail(&format!("series[{}]", a.name()), &f, n + 1, ctx)?;
    Ok(head + tail)
}

mod custom {
    //! Direct summation for user sequences: |a_k| ≤ C·|k|^α with C sampled
    //! over |k| ≤ 10⁴ and inflated tenfold.

    use super::*;

    const SAMPLE: i64 = 10_000;
    const SAFETY: f64 = 10.0;

    fn growth_constant(a: &WeightSequence, ctx: &PrecisionContext) -> Result<f64> {
        let key = format!("growthC:{}", a.name());
        let v = ctx.memoize(&key, || {
            let alpha = a.growth_alpha();
            let mut worst = f64::NEG_INFINITY;
            for k in (-SAMPLE..=SAMPLE).filter(|&k| k != 0) {
                let t = a.term(k, ctx);
                if !t.is_finite() {
                    return Err(Error::NonFinite(format!("{}[{k}]", a.name())));
                }
                worst = worst.max(t.log10_abs() - alpha * (k.unsigned_abs() as f64).log10());
            }
            ctx.charge(2 * SAMPLE as u64);
            Ok(worst + SAFETY.log10())
        })?;
        Ok(*v)
    }

    /// Cutoff K ≥ kmin with C·K^{α+1−p}/(p−1−α) below target; the
    /// coefficient `scale_log10` multiplies the bound.
    fn cutoff(a: &WeightSequence, p: f64, kmin: u64, scale_log10: f64, ctx: &PrecisionContext) -> Result<u64> {
        let alpha = a.growth_alpha();
        let gap = p - 1.0 - alpha;
        if gap <= 0.0 {
            return Err(Error::Divergent(format!(
                "{}: weight decay k^-{p} too slow for growth exponent {alpha}",
                a.name()
            )));
        }
        // 2^{|α|} covers shifted indices k ± n once k ≥ 2n
        let c = growth_constant(a, ctx)? + scale_log10 + alpha.abs() * 2f64.log10();
        let need = (c - gap.log10() - ctx.target_log10()) / gap;
        let k = 10f64.powf(need.max(0.0)).ceil();
        if !k.is_finite() || k > ctx.max_terms() as f64 {
            return Err(Error::Truncation { series: a.name().to_string(), terms: ctx.max_terms() });
        }
        Ok((k as u64).max(kmin).max(1))
    }

    fn direct<F: Fn(i64) -> Real>(kmax: u64, f: F, ctx: &PrecisionContext) -> Real {
        let mut acc = ctx.zero();
        for k in 1..=kmax as i64 {
            acc += f(k);
        }
        ctx.charge(kmax);
        acc
    }

    pub(super) fn raw_sum(a: &WeightSequence, j: u32, ctx: &PrecisionContext) -> Result<Real> {
        let k = cutoff(a, j as f64, 1, 0.0, ctx)?;
        Ok(direct(k, |k| a.term(k, ctx) * ctx.inv_pow(k as u64, j), ctx))
    }

    fn shifted(a: &WeightSequence, n: i64, j: u32, ctx: &PrecisionContext) -> Result<Real> {
        let two = if j == 1 { 2f64.log10() } else { 0.0 };
        let k = cutoff(a, j as f64, 2 * n.unsigned_abs(), two, ctx)?;
        Ok(direct(
            k,
            |k| {
                let t = a.term(k + n, ctx);
                let t = if j == 1 { t - a.term(k, ctx) } else { t };
                t * ctx.inv_pow(k as u64, j)
            },
            ctx,
        ))
    }

    fn finite(kind: FunctionalKind, a: &WeightSequence, n: u64, j: u32, ctx: &PrecisionContext) -> Real {
        let n = n as i64;
        let mut acc = ctx.zero();
        for k in 1..=n {
            let idx = if kind == FunctionalKind::E { n - k } else { k - n - 1 };
            acc += a.term(idx, ctx) * ctx.inv_pow(k as u64, j);
        }
        acc
    }

    pub(super) fn functional(kind: FunctionalKind, a: &WeightSequence, n: u64, j: u32, ctx: &PrecisionContext) -> Result<Real> {
        use FunctionalKind::*;
        let s = sign(j);
        let f = |k| functional(k, a, n, j, ctx);
        Ok(match kind {
            D => super::func_d(a, j, ctx)?,
            E | EBar => finite(kind, a, n, j, ctx),
            G if n == 0 => ctx.zero(),
            G => finite(E, a, n, j, ctx) - finite(EBar, a, n - 1, j, ctx) - a.term(0, ctx) * ctx.inv_pow(n, j),
            F => shifted(a, n as i64, j, ctx)?,
            FBar => shifted(a, -(n as i64), j, ctx)?,
            L => f(F)? + f(FBar)? * s,
            M => finite(E, a, n, j, ctx) + f(F)? * s,
            MBar => f(FBar)? - finite(EBar, a, n - 1, j, ctx),
            R => f(G)? + f(L)? * s,
        })
    }

    pub(super) fn weighted_series<W: Fn(u64) -> Real>(
        a: &WeightSequence,
        w: W,
        w_exp: &Expansion,
        min_cutoff: u64,
        ctx: &PrecisionContext,
    ) -> Result<Real> {
        let (p, c) = w_exp
            .terms()
            .filter(|(m, _)| !m.alt && m.log == 0)
            .map(|(m, c)| (m.pow, c.clone()))
            .min_by_key(|(p, _)| *p)
            .ok_or_else(|| Error::InvalidArgument("weight expansion is empty".into()))?;
        // factor 2 margin for the subleading terms of w
        let k = cutoff(a, p as f64, min_cutoff.max(16), c.log10_abs() + 2f64.log10(), ctx)?;
        Ok(direct(k, |k| a.term(k, ctx) * w(k as u64), ctx))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numkernel::{const_log2, const_pi, eta, zeta, zeta_conv};
    use crate::seqcore::{seq_alt, seq_geom, seq_harmonic, seq_ones};
    use FunctionalKind::*;

    fn ctx() -> PrecisionContext {
        PrecisionContext::new(30).unwrap()
    }

    fn builtins() -> Vec<WeightSequence> {
        vec![
            seq_ones(),
            seq_alt(),
            seq_geom(Rational::from((1, 2))).unwrap(),
            seq_geom(Rational::from((-1, 3))).unwrap(),
        ]
    }

    fn hp(n: u64, j: u32, ctx: &PrecisionContext) -> Real {
        (1..=n).map(|k| ctx.inv_pow(k, j)).fold(ctx.zero(), |a, b| a + b)
    }

    fn hbar(n: u64, j: u32, ctx: &PrecisionContext) -> Real {
        (1..=n)
            .map(|k| ctx.inv_pow(k, j) * if k % 2 == 1 { 1 } else { -1 })
            .fold(ctx.zero(), |a, b| a + b)
    }

    #[test]
    fn d_values() {
        let ctx = ctx();
        assert_eq!(func_d(&seq_ones(), 1, &ctx).unwrap(), ctx.zero());
        let pi = const_pi(&ctx);
        assert!((func_d(&seq_ones(), 2, &ctx).unwrap() - zeta(2, &ctx).unwrap()).abs() < ctx.tolerance());
        assert!((func_d(&seq_alt(), 2, &ctx).unwrap() + pi.powi(2) / 12).abs() < ctx.tolerance());
        let h = func_d(&seq_harmonic(), 2, &ctx).unwrap();
        assert!((h - zeta(3, &ctx).unwrap() * 2).abs() < ctx.tolerance());
    }

    #[test]
    fn finite_examples() {
        let ctx = ctx();
        assert_eq!(func_finite(E, &seq_ones(), 2, 2, &ctx).unwrap(), ctx.ratio(5, 4));
        assert_eq!(func_finite(E, &seq_alt(), 2, 2, &ctx).unwrap(), ctx.ratio(-3, 4));
        for a in builtins() {
            assert!(func_finite(G, &a, 0, 3, &ctx).unwrap().is_zero());
            assert!(func_finite(EBar, &a, 0, 3, &ctx).unwrap().is_zero());
        }
        assert!(func_finite(M, &seq_ones(), 2, 2, &ctx).is_err());
    }

    #[test]
    fn finite_tables_match_direct_sums() {
        let ctx = ctx();
        for a in builtins() {
            for j in 1..=3 {
                for n in [1u64, 2, 7, 20] {
                    let e: Real = (1..=n as i64).map(|k| a.term(n as i64 - k, &ctx) * ctx.inv_pow(k as u64, j)).sum();
                    let eb: Real = (1..=n as i64).map(|k| a.term(k - n as i64 - 1, &ctx) * ctx.inv_pow(k as u64, j)).sum();
                    assert!((func_finite(E, &a, n, j, &ctx).unwrap() - e).abs() < ctx.tolerance());
                    assert!((func_finite(EBar, &a, n, j, &ctx).unwrap() - eb).abs() < ctx.tolerance());
                }
            }
        }
    }

    #[test]
    fn spec_examples() {
        let ctx = ctx();
        let pi = const_pi(&ctx);
        let m = func_infinite(M, &seq_ones(), 3, 2, &ctx).unwrap();
        assert!((m - ctx.ratio(49, 36) - pi.powi(2) / 6).abs() < ctx.tolerance());
        let mb = func_infinite(MBar, &seq_ones(), 2, 3, &ctx).unwrap();
        assert!((mb - zeta(3, &ctx).unwrap() + 1).abs() < ctx.tolerance());
        assert!(func_infinite(R, &seq_ones(), 5, 3, &ctx).unwrap().abs() < ctx.tolerance());
        assert!(func_infinite(MBar, &seq_ones(), 0, 3, &ctx).is_err());
        assert!(func_infinite(MBar, &seq_harmonic(), 2, 3, &ctx).is_err());
    }

    #[test]
    fn compatibility_identity() {
        let ctx = ctx();
        for a in builtins() {
            let a0 = a.term(0, &ctx);
            for j in 1..=6 {
                for n in 1..=20u64 {
                    let m = func_infinite(M, &a, n, j, &ctx).unwrap();
                    let mb = func_infinite(MBar, &a, n, j, &ctx).unwrap();
                    let r = func_infinite(R, &a, n, j, &ctx).unwrap();
                    let res = m + mb - r - &a0 * ctx.inv_pow(n, j);
                    assert!(res.abs() < ctx.tolerance(), "{a} j={j} n={n}");
                }
            }
        }
    }

    #[test]
    fn closed_forms_ones_and_alt() {
        let ctx = ctx();
        let l2 = const_log2(&ctx);
        for j in 1..=6u32 {
            let s = sign(j);
            let z = zeta_conv(j as i64, &ctx).unwrap();
            let zb = eta(j as i64, &ctx).unwrap();
            for n in 1..=20u64 {
                let m1 = hp(n, j, &ctx) + &z * s;
                let mb1 = &z - hp(n - 1, j, &ctx);
                let r1 = &z * (1 + s);
                let alt_n: i64 = if n % 2 == 0 { 1 } else { -1 };
                let tail2 = if j == 1 { &l2 * (1 - alt_n) } else { &zb * -alt_n };
                let m2 = hbar(n, j, &ctx) * -alt_n + &tail2 * s;
                let mb2 = hbar(n - 1, j, &ctx) * alt_n + &tail2;
                let r2 = &zb * (-alt_n * (1 + s));
                let got = |k, a: &WeightSequence| func_infinite(k, a, n, j, &ctx).unwrap();
                if j > 1 {
                    assert!((got(M, &seq_ones()) - m1).abs() < ctx.tolerance());
                    assert!((got(MBar, &seq_ones()) - mb1).abs() < ctx.tolerance());
                    assert!((got(R, &seq_ones()) - r1).abs() < ctx.tolerance());
                    assert!((got(F, &seq_ones()) - &z).abs() < ctx.tolerance());
                }
                assert!((got(M, &seq_alt()) - m2).abs() < ctx.tolerance(), "M alt j={j} n={n}");
                assert!((got(MBar, &seq_alt()) - mb2).abs() < ctx.tolerance(), "MBAR alt j={j} n={n}");
                assert!((got(R, &seq_alt()) - r2).abs() < ctx.tolerance(), "R alt j={j} n={n}");
            }
        }
    }

    #[test]
    fn j1_difference_forms_ones() {
        // F_n(1) = Σ (a_{k+n} − a_k)/k vanishes for constant sequences.
        let ctx = ctx();
        for n in 1..=20u64 {
            assert!(func_infinite(F, &seq_ones(), n, 1, &ctx).unwrap().is_zero());
            let m = func_infinite(M, &seq_ones(), n, 1, &ctx).unwrap();
            assert!((m - hp(n, 1, &ctx)).abs() < ctx.tolerance());
        }
    }

    #[test]
    fn geom_fbar_against_brute_force() {
        let ctx = ctx();
        let a = seq_geom(Rational::from((1, 2))).unwrap();
        for j in 1..=3u32 {
            for n in [1u64, 5, 17] {
                let mut acc = ctx.zero();
                for k in 1..=400i64 {
                    let mut t = a.term(k - n as i64, &ctx);
                    if j == 1 {
                        t -= a.term(k, &ctx);
                    }
                    acc += t * ctx.inv_pow(k as u64, j);
                }
                let got = func_infinite(FBar, &a, n, j, &ctx).unwrap();
                assert!((got - acc).abs() < ctx.tolerance(), "j={j} n={n}");
            }
        }
    }

    #[test]
    fn harmonic_f_against_direct_sum() {
        // Σ_k H_{k+n}/k^3 with a long f64 partial sum plus its leading tail.
        let ctx = ctx();
        for n in [0u64, 3, 10] {
            let mut acc = 0f64;
            let mut h: f64 = (1..=n).map(|i| 1.0 / i as f64).sum();
            let kmax = 200_000u64;
            for k in 1..=kmax {
                h += 1.0 / (k + n) as f64;
                acc += h / (k as f64).powi(3);
            }
            let lk = (kmax as f64).ln();
            acc += (2.0 * lk + 1.0 + 2.0 * 0.5772156649) / (4.0 * (kmax as f64).powi(2));
            let got = func_infinite(F, &seq_harmonic(), n, 3, &ctx).unwrap().to_f64();
            assert!((got - acc).abs() < 1e-9, "n={n}: {got} vs {acc}");
        }
    }

    #[test]
    fn harmonic_e_against_direct_sum() {
        let ctx = ctx();
        let a = seq_harmonic();
        for j in 1..=3u32 {
            for n in [1u64, 4, 30] {
                let e: Real = (1..=n as i64).map(|k| a.term(n as i64 - k, &ctx) * ctx.inv_pow(k as u64, j)).sum();
                assert!((func_finite(E, &a, n, j, &ctx).unwrap() - e).abs() < ctx.tolerance());
            }
        }
    }

    #[test]
    fn table_expansions_continue_the_values() {
        let ctx = ctx();
        let mut seqs = builtins();
        seqs.push(seq_harmonic());
        for a in &seqs {
            for kind in [E, F, M] {
                for j in 1..=3u32 {
                    let small = functional_table(kind, a, j, 0, &ctx).unwrap();
                    let n = small.cutoff();
                    let big = functional_table(kind, a, j, 2 * n, &ctx).unwrap();
                    for m in [n + 1, 2 * n] {
                        let d = small.value(m) - &big.values[m as usize];
                        assert!(d.abs() < ctx.tolerance(), "{kind} {a} j={j} m={m}");
                    }
                }
            }
        }
    }

    #[test]
    fn custom_sequence_matches_geom() {
        let ctx = ctx();
        let custom = WeightSequence::custom("half", -40.0, |k, c| c.ratio(1, 2).powi(k.unsigned_abs() as i32)).unwrap();
        let geom = seq_geom(Rational::from((1, 2))).unwrap();
        for kind in [F, FBar, M, MBar, R] {
            let x = func_infinite(kind, &custom, 4, 2, &ctx).unwrap();
            let y = func_infinite(kind, &geom, 4, 2, &ctx).unwrap();
            assert!((x - y).abs() < ctx.tolerance(), "{kind}");
        }
        let slow = WeightSequence::custom("flat", 0.0, |_, c| c.one()).unwrap();
        assert!(matches!(func_d(&slow, 2, &ctx), Err(Error::Truncation { .. })));
    }
}
