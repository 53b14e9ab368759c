//! Harmonic numbers, (alternating) Euler sums and weighted functional sums.
//!
//! Every outer sum runs directly to a cutoff N (10³ by default, raised for
//! geometric weights) and takes the remainder from the product of the
//! factors' large-n expansions, summed by Euler–Maclaurin (Boole for the
//! alternating part). If the expansion is not yet accurate at N the cutoff
//! doubles, up to `max_terms`.

mod spec;

pub use spec::{Factor, SumSpec, WeightedSumSpec};

use rug::ops::Pow;
use rug::{Integer, Rational};

use crate::error::{Error, Result};
use crate::numkernel::{
    const_log2, const_pi, eta, euler_maclaurin_tail, expansion_order, polylog, zeta, alt_double_zeta_s1,
    Expansion, PrecisionContext, Real,
};
use crate::seqcore::{functional_table, seq_alt, seq_ones, FunctionalKind, SeqKind};

fn exact_sum(n: u64, p: u32, alternating: bool) -> Rational {
    let mut acc = Rational::new();
    for k in 1..=n {
        let t = Rational::from((1, Integer::from(k).pow(p)));
        if alternating && k % 2 == 0 { acc -= t } else { acc += t }
    }
    acc
}

/// H_n^{(p)} = Σ_{k≤n} 1/k^p, summed exactly and rounded once.
pub fn harmonic(n: u64, p: u32, ctx: &PrecisionContext) -> Real {
    ctx.rational(&exact_sum(n, p, false))
}

/// H̄_n^{(p)} = Σ_{k≤n} (−1)^{k−1}/k^p, summed exactly and rounded once.
pub fn alt_harmonic(n: u64, p: u32, ctx: &PrecisionContext) -> Real {
    ctx.rational(&exact_sum(n, p, true))
}

pub const DEFAULT_CUTOFF: u64 = 1000;

/// One factor of an outer summand: values for n ≤ N, expansion beyond.
struct Track {
    values: Vec<Real>,
    expansion: Expansion,
}

fn harmonic_track(p: u32, barred: bool, n: u64, ctx: &PrecisionContext) -> Result<Track> {
    if !barred {
        let t = functional_table(FunctionalKind::E, &seq_ones(), p, n, ctx)?;
        return Ok(Track { values: t.values[..=n as usize].to_vec(), expansion: t.expansion.clone() });
    }
    // E^{(A₂)}_n(p) = (−1)^n Σ_{k≤n} (−1)^k/k^p = −(−1)^n H̄_n^{(p)}
    let t = functional_table(FunctionalKind::E, &seq_alt(), p, n, ctx)?;
    let values = t.values[..=n as usize]
        .iter()
        .enumerate()
        .map(|(m, v)| if m % 2 == 0 { -v.clone() } else { v.clone() })
        .collect();
    Ok(Track { values, expansion: t.expansion.alternate().neg() })
}

/// Σ_{n≥1} sgn(n)·Π tracks(n)/n^q with sgn = (−1)^{n−1} when `alternating`.
fn outer_sum(
    name: &str,
    q: u32,
    alternating: bool,
    min_cutoff: u64,
    mut tracks: impl FnMut(u64) -> Result<Vec<Track>>,
    ctx: &PrecisionContext,
) -> Result<Real> {
    let mut n = min_cutoff.max(DEFAULT_CUTOFF);
    loop {
        let ts = tracks(n)?;
        let order = ts
            .iter()
            .map(|t| t.expansion.order())
            .min()
            .unwrap_or_else(|| expansion_order(ctx, n))
            .min(expansion_order(ctx, n) + q as i32 + 8);
        let mut head = ctx.zero();
        for m in 1..=n {
            let mut t = ctx.inv_pow(m, q);
            for tr in &ts {
                t *= &tr.values[m as usize];
            }
            if alternating && m % 2 == 0 { head -= t } else { head += t }
        }
        ctx.charge(n);
        let mut f = Expansion::power(ctx, order, q as i32);
        if alternating {
            f = f.alternate().neg();
        }
        for tr in &ts {
            f = f.mul(&tr.expansion.with_order(order));
        }
        match euler_maclaurin_tail(name, &f, n + 1, ctx) {
            Ok(tail) => return Ok(head + tail),
            Err(Error::Truncation { .. }) if 2 * n <= ctx.max_terms() => n *= 2,
            Err(e) => return Err(e),
        }
    }
}

/// Value of an (alternating) Euler sum.
pub fn euler_sum(spec: &SumSpec, ctx: &PrecisionContext) -> Result<Real> {
    spec.validate()?;
    outer_sum(
        &spec.to_string(),
        spec.outer_q,
        spec.outer_barred,
        0,
        |n| spec.inner.iter().map(|&(p, b)| harmonic_track(p, b, n, ctx)).collect(),
        ctx,
    )
}

/// Σ_{n≥1} Π_env a_n · Π_factors X_n(j) / n^q.
pub fn weighted_sum(spec: &WeightedSumSpec, ctx: &PrecisionContext) -> Result<Real> {
    spec.validate()?;
    let min_cutoff = spec
        .envelope
        .iter()
        .chain(spec.factors.iter().map(|f| &f.seq))
        .map(|a| a.cutoff(ctx))
        .max()
        .unwrap_or(0);
    outer_sum(
        &spec.to_string(),
        spec.outer_q,
        false,
        min_cutoff,
        |n| {
            let order = expansion_order(ctx, n);
            let mut ts = Vec::new();
            for a in &spec.envelope {
                ts.push(Track { values: a.terms_upto(n, ctx), expansion: a.term_expansion(ctx, order)? });
            }
            for f in &spec.factors {
                if f.kind == FunctionalKind::D {
                    let d = crate::seqcore::func_d(&f.seq, f.j, ctx)?;
                    ts.push(Track {
                        values: vec![d.clone(); n as usize + 1],
                        expansion: Expansion::constant(ctx, order, d),
                    });
                    continue;
                }
                let t = functional_table(f.kind, &f.seq, f.j, n, ctx)?;
                ts.push(Track { values: t.values[..=n as usize].to_vec(), expansion: t.expansion.clone() });
            }
            Ok(ts)
        },
        ctx,
    )
}

/// Named constants appearing in closed forms: `pi`, `log2`, `zeta<k>`,
/// `eta<k>`, `Li<k>_half`, `zeta_bar<k>_1` (ζ(k̄,1)).
pub fn mzv_constant(name: &str, ctx: &PrecisionContext) -> Result<Real> {
    let unknown = || Error::UnknownConstant(name.to_string());
    let int = |s: &str| s.trim_matches(|c| c == '(' || c == ')').parse::<i64>().map_err(|_| unknown());
    match name {
        "pi" => return Ok(const_pi(ctx)),
        "log2" => return Ok(const_log2(ctx)),
        _ => {}
    }
    if let Some(k) = name.strip_prefix("zeta_bar").and_then(|r| r.strip_suffix("_1")) {
        return alt_double_zeta_s1(int(k)?, ctx);
    }
    if let Some(k) = name.strip_prefix("zeta") {
        return zeta(int(k)?, ctx);
    }
    if let Some(k) = name.strip_prefix("eta") {
        return eta(int(k)?, ctx);
    }
    if let Some(k) = name.strip_prefix("Li").and_then(|r| r.strip_suffix("_half")) {
        return polylog(int(k)?, &ctx.ratio(1, 2), ctx);
    }
    Err(unknown())
}

/// True when a weighted sum's envelope is harmonic; such envelopes are only
/// combined with functionals that avoid negative indices.
pub(crate) fn harmonic_envelope(spec: &WeightedSumSpec) -> bool {
    spec.envelope.iter().any(|a| matches!(a.kind(), SeqKind::Harmonic))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seqcore::{seq_geom, seq_harmonic};
    use rug::Rational;

    fn ctx() -> PrecisionContext {
        PrecisionContext::new(30).unwrap()
    }

    #[test]
    fn harmonic_numbers() {
        let ctx = ctx();
        assert!(harmonic(0, 3, &ctx).is_zero());
        assert_eq!(harmonic(4, 1, &ctx), ctx.ratio(25, 12));
        assert_eq!(alt_harmonic(3, 2, &ctx), ctx.ratio(31, 36));
        assert!(alt_harmonic(0, 2, &ctx).is_zero());
    }

    #[test]
    fn classical_sums() {
        let ctx = ctx();
        let z = |k| zeta(k, &ctx).unwrap();
        let s12 = euler_sum(&"S[1;2]".parse().unwrap(), &ctx).unwrap();
        assert!((s12 - z(3) * 2).abs() < ctx.tolerance());
        let s4 = euler_sum(&"S[;4]".parse().unwrap(), &ctx).unwrap();
        assert!((s4 - z(4)).abs() < ctx.tolerance());
        // S_{1,3} = π⁴/72
        let s13 = euler_sum(&"S[1;3]".parse().unwrap(), &ctx).unwrap();
        assert!((s13 - const_pi(&ctx).powi(4) / 72).abs() < ctx.tolerance());
        // S_{1,1̄}... Σ(−1)^{n−1} H_n/n = ζ(2)/2 − log²2/2
        let v = euler_sum(&"S[1;-1]".parse().unwrap(), &ctx).unwrap();
        let l2 = const_log2(&ctx);
        assert!((v - z(2) / 2 + l2.square() / 2).abs() < ctx.tolerance());
        assert!("S[1;1]".parse::<SumSpec>().is_err());
        let raw = SumSpec { inner: vec![(1, false)], outer_q: 1, outer_barred: false };
        assert!(matches!(euler_sum(&raw, &ctx), Err(Error::Divergent(_))));
    }

    #[test]
    fn barred_inner_against_partial_sums() {
        // f64 brute force with averaged partial sums as an independent oracle
        let ctx = ctx();
        for (p, q) in [(2u32, 2u32), (2, 3), (3, 2)] {
            let spec: SumSpec = format!("S[-{p};{q}]").parse().unwrap();
            let v = euler_sum(&spec, &ctx).unwrap().to_f64();
            let mut hb = 0f64;
            let mut acc = 0f64;
            let nmax = 2_000_000u64;
            for n in 1..=nmax {
                let t = 1.0 / (n as f64).powi(p as i32);
                hb += if n % 2 == 1 { t } else { -t };
                acc += hb / (n as f64).powi(q as i32);
            }
            // tail ≈ ζ̄(p)·Σ_{n>N} n^{−q}
            let zb = eta(p as i64, &ctx).unwrap().to_f64();
            acc += zb / ((q - 1) as f64 * (nmax as f64).powi(q as i32 - 1));
            assert!((v - acc).abs() < 1e-10, "p={p} q={q}: {v} vs {acc}");
        }
    }

    #[test]
    fn weighted_examples() {
        let ctx = ctx();
        let z = |k| zeta(k, &ctx).unwrap();
        let l2 = const_log2(&ctx);
        let geom = seq_geom(Rational::from((1, 2))).unwrap();
        // Σ (1/(n²2ⁿ)) Σ_{k≤n} 2^k/k² = Σ E^{(geom)}_n(2)/n²
        let spec = WeightedSumSpec::new(vec![], vec![Factor::new(FunctionalKind::E, geom, 2)], 2).unwrap();
        let v = weighted_sum(&spec, &ctx).unwrap();
        let li4 = polylog(4, &ctx.ratio(1, 2), &ctx).unwrap();
        let rhs = z(4) * 51 / 16 - li4 * 3 - z(2) * l2.square() * 3 / 4 - l2.powi(4) / 8;
        assert!((v - rhs).abs() < ctx.tolerance());
        let spec = WeightedSumSpec::new(vec![], vec![Factor::new(FunctionalKind::R, seq_ones(), 2)], 3).unwrap();
        assert!((weighted_sum(&spec, &ctx).unwrap() - z(2) * z(3) * 2).abs() < ctx.tolerance());
        let spec = WeightedSumSpec::new(vec![seq_alt()], vec![], 2).unwrap();
        assert!((weighted_sum(&spec, &ctx).unwrap() + eta(2, &ctx).unwrap()).abs() < ctx.tolerance());
    }

    #[test]
    fn specialization_to_euler_sums() {
        let ctx = ctx();
        for p in 1..=3u32 {
            for q in 2..=3u32 {
                let spec = WeightedSumSpec::new(vec![], vec![Factor::new(FunctionalKind::M, seq_ones(), p)], q).unwrap();
                let w = weighted_sum(&spec, &ctx).unwrap();
                let s = euler_sum(&SumSpec::new(vec![(p, false)], q, false).unwrap(), &ctx).unwrap();
                let zp = crate::numkernel::zeta_conv(p as i64, &ctx).unwrap();
                let sg = if p % 2 == 0 { 1 } else { -1 };
                let rhs = s + zp * zeta(q as i64, &ctx).unwrap() * sg;
                assert!((w - rhs).abs() < ctx.tolerance(), "p={p} q={q}");
            }
        }
    }

    #[test]
    fn harmonic_envelope_rules() {
        let ctx = ctx();
        let bad = WeightedSumSpec::new(vec![seq_harmonic()], vec![Factor::new(FunctionalKind::MBar, seq_ones(), 2)], 2);
        assert!(bad.is_err());
        let ok = WeightedSumSpec::new(vec![seq_harmonic()], vec![Factor::new(FunctionalKind::M, seq_ones(), 2)], 3).unwrap();
        assert!(weighted_sum(&ok, &ctx).is_ok());
    }

    #[test]
    fn constants() {
        let ctx = ctx();
        assert_eq!(mzv_constant("pi", &ctx).unwrap(), const_pi(&ctx));
        assert_eq!(mzv_constant("zeta_bar5_1", &ctx).unwrap(), alt_double_zeta_s1(5, &ctx).unwrap());
        assert_eq!(mzv_constant("Li4_half", &ctx).unwrap(), polylog(4, &ctx.ratio(1, 2), &ctx).unwrap());
        assert_eq!(mzv_constant("zeta(3)", &ctx).unwrap(), zeta(3, &ctx).unwrap());
        assert!(matches!(mzv_constant("nope", &ctx), Err(Error::UnknownConstant(_))));
    }
}
