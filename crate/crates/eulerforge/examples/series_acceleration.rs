//! The three summation engines: alternating (CRVZ weights), geometric tails
//! and Euler–Maclaurin tails from an asymptotic expansion.

use eulerforge::numkernel::{accel_alternating, accel_geometric_tail, const_log2, euler_maclaurin_tail, Expansion};
use eulerforge::PrecisionContext;

fn main() -> eulerforge::Result<()> {
    let ctx = PrecisionContext::new(40)?;

    // log 2 = Σ (−1)^k/(k+1), which converges far too slowly to sum directly
    let c = ctx.isolated();
    let l = accel_alternating("log2", |k| Ok(ctx.ratio(1, k as i64 + 1)), &c)?;
    println!("log 2 via CRVZ  {}  ({} terms)", l.to_decimal(40), c.terms_consumed());
    assert!(ctx.close(&l, &const_log2(&ctx)));

    // Σ_{n≥1} 1/(n 2^n) = log 2, with ratio 1/2
    let c = ctx.isolated();
    let g = accel_geometric_tail("geom", 1, |n| Ok(ctx.int(2).powi(-(n as i32)) / n as i64), 0.5, &c)?;
    println!("log 2 via geometric tail  {}  ({} terms)", g.to_decimal(40), c.terms_consumed());
    assert!(ctx.close(&g, &const_log2(&ctx)));

    // Σ_{n≥N} 1/n^3 from the expansion of n^{−3}
    let n = 50;
    let tail = euler_maclaurin_tail("zeta3", &Expansion::power(&ctx, 40, 3), n, &ctx)?;
    let head: eulerforge::Real = (1..n).map(|k| ctx.inv_pow(k, 3)).fold(ctx.zero(), |a, b| a + b);
    println!("zeta(3) = head + tail = {}", (head + tail).to_decimal(40));
    Ok(())
}
