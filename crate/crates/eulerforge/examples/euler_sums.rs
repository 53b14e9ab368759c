//! Euler sums from their textual spec, plus a sequence-weighted sum.
//!
//!     cargo run --example euler_sums -- "S[1,-2;3]" 50

use eulerforge::eulersums::{euler_sum, weighted_sum, Factor, SumSpec, WeightedSumSpec};
use eulerforge::numkernel::zeta;
use eulerforge::seqcore::{seq_alt, FunctionalKind};
use eulerforge::PrecisionContext;

fn main() -> eulerforge::Result<()> {
    let mut args = std::env::args().skip(1);
    let spec = args.next().unwrap_or_else(|| "S[1;2]".into());
    let digits = args.next().map_or(40, |d| d.parse().expect("digits"));
    let ctx = PrecisionContext::new(digits)?;

    let s: SumSpec = spec.parse()?;
    println!("{spec} (weight {}, depth {}) = {}", s.weight(), s.depth(), euler_sum(&s, &ctx)?.to_decimal(digits as usize));

    // Euler: S[1;2] = 2ζ(3)
    let v = euler_sum(&"S[1;2]".parse()?, &ctx)?;
    assert!(ctx.close(&v, &(zeta(3, &ctx)? * 2)));

    // Σ (−1)^n M_n(2; alt)/n^3
    let w = WeightedSumSpec::new(vec![seq_alt()], vec![Factor::new(FunctionalKind::M, seq_alt(), 2)], 3)?;
    println!("{w} = {}", weighted_sum(&w, &ctx)?.to_decimal(digits as usize));
    Ok(())
}
