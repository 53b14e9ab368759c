//! Property tests for the invariants each module promises.

use eulerforge::cli;
use eulerforge::digamma::{cot_param, psi_param};
use eulerforge::eulersums::{euler_sum, SumSpec};
use eulerforge::numkernel::{bernoulli, const_pi, euler_gamma, eta, polylog, zeta};
use eulerforge::seqcore::{func_infinite, seq_alt, seq_geom, seq_ones, FunctionalKind, WeightSequence};
use eulerforge::{PrecisionContext, Real};
use proptest::prelude::*;
use rug::{Float, Integer, Rational};

fn ctx30() -> PrecisionContext {
    PrecisionContext::new(30).unwrap()
}

fn builtin() -> impl Strategy<Value = WeightSequence> {
    prop_oneof![Just(seq_ones()), Just(seq_alt()), Just(seq_geom(Rational::from((1, 2))).unwrap())]
}

/// A non-integer in (−4, 4) at least 0.05 away from every integer.
fn off_integer() -> impl Strategy<Value = (i64, i64)> {
    (-4i64..4, 5i64..96).prop_map(|(m, f)| (m, f))
}

fn real_of((m, f): (i64, i64), ctx: &PrecisionContext) -> Real {
    ctx.int(m) + ctx.ratio(f, 100)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn bernoulli_recurrence(m in 1u32..=30) {
        let mut acc = Rational::new();
        for k in 0..=m {
            acc += Rational::from(Integer::from(Integer::binomial_u(m + 1, k))) * bernoulli(k as i64).unwrap();
        }
        prop_assert_eq!(acc, Rational::new());
    }

    #[test]
    fn eta_zeta_relation(s in 2i64..=20) {
        let ctx = ctx30();
        let factor = ctx.one() - ctx.int(2).powi(1 - s as i32);
        prop_assert!(ctx.close(&eta(s, &ctx).unwrap(), &(zeta(s, &ctx).unwrap() * factor)));
    }

    #[test]
    fn more_digits_keep_the_first_25(s in 2i64..=12, x in -5i64..=5) {
        let lo = ctx30();
        let hi = PrecisionContext::new(50).unwrap();
        let arg = |c: &PrecisionContext| c.ratio(x, 10);
        for (a, b) in [
            (zeta(s, &lo).unwrap(), zeta(s, &hi).unwrap()),
            (polylog(s, &arg(&lo), &lo).unwrap(), polylog(s, &arg(&hi), &hi).unwrap()),
        ] {
            let d = (hi.adopt(&a) - &b).abs();
            prop_assert!(d <= b.abs() * hi.pow10(-25), "{} vs {}", a.to_decimal(30), b.to_decimal(50));
        }
    }

    #[test]
    fn compatibility(a in builtin(), n in 1u64..=20, j in 1u32..=6) {
        use FunctionalKind::{MBar, M, R};
        let ctx = ctx30();
        let f = |k| func_infinite(k, &a, n, j, &ctx).unwrap();
        let r = f(M) + f(MBar) - f(R) - a.term(0, &ctx) * ctx.inv_pow(n, j);
        prop_assert!(r.abs() < ctx.tolerance());
    }

    #[test]
    fn cot_alt_is_csc(s in off_integer()) {
        let ctx = ctx30();
        let pi = const_pi(&ctx);
        let s = real_of(s, &ctx);
        let v = cot_param(&s, &seq_alt(), &ctx).unwrap();
        prop_assert!(ctx.close(&v, &(&pi / (&pi * &s).sin())));
    }

    #[test]
    fn psi_ones_is_classical_digamma(s in off_integer()) {
        let ctx = ctx30();
        let s = real_of(s, &ctx);
        let neg = -s.as_float().clone();
        let classical = Float::with_val(ctx.prec_bits(), neg.digamma());
        let expect = ctx.adopt(&Real::from_float(classical)) + euler_gamma(&ctx).unwrap();
        prop_assert!(ctx.close(&psi_param(&s, &seq_ones(), &ctx).unwrap(), &expect));
    }

    #[test]
    fn malformed_eval_exits_2(word in "[a-y]{1,7}", arg in "[a-z0-9;\\[\\]]{0,5}") {
        prop_assume!(!["zeta", "eta", "li", "psi", "cot", "coth", "func", "const"].contains(&word.as_str()));
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = cli::run(["eulerforge", "eval", &format!("{word} {arg}")], &mut out, &mut err);
        prop_assert_eq!(code, cli::EXIT_USAGE);
    }

    #[test]
    fn digits_outside_range_exit_2(d in prop_oneof![0u32..20, 201u32..10_000]) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = cli::run(["eulerforge", "eval", "zeta 3", "--digits", &d.to_string()], &mut out, &mut err);
        prop_assert_eq!(code, cli::EXIT_USAGE);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(6))]

    #[test]
    fn inner_order_is_irrelevant(
        inner in prop::collection::vec(prop_oneof![-2i32..=-1, 1i32..=2], 2..=3),
        q in 2i32..=3,
        barred in any::<bool>(),
    ) {
        let ctx = ctx30();
        let spec = |v: &[i32]| -> SumSpec {
            let inner: Vec<String> = v.iter().map(|p| p.to_string()).collect();
            format!("S[{};{}{q}]", inner.join(","), if barred { "-" } else { "" }).parse().unwrap()
        };
        let mut rev = inner.clone();
        rev.reverse();
        let a = euler_sum(&spec(&inner), &ctx);
        let b = euler_sum(&spec(&rev), &ctx);
        match (a, b) {
            (Ok(a), Ok(b)) => prop_assert!(ctx.close(&a, &b)),
            (a, b) => prop_assert_eq!(a.is_err(), b.is_err()),
        }
    }
}
