//! Zeta values, polylogarithms and the other constants every closed form
//! is built from.

use eulerforge::eulersums::mzv_constant;
use eulerforge::numkernel::{bernoulli, const_pi, eta, euler_gamma, polylog, zeta, zeta_conv};
use eulerforge::PrecisionContext;

fn main() -> eulerforge::Result<()> {
    let ctx = PrecisionContext::new(50)?;
    let d = 50;

    for k in 2..=6 {
        println!("zeta({k}) = {}", zeta(k, &ctx)?.to_decimal(d));
    }
    println!("eta(1)  = {}", eta(1, &ctx)?.to_decimal(d));
    println!("Li4(1/2) = {}", polylog(4, &ctx.ratio(1, 2), &ctx)?.to_decimal(d));
    println!("gamma   = {}", euler_gamma(&ctx)?.to_decimal(d));
    println!("zeta(5bar,1) = {}", mzv_constant("zeta_bar5_1", &ctx)?.to_decimal(d));

    // ζ(2) = π²/6
    let pi = const_pi(&ctx);
    assert!(ctx.close(&zeta(2, &ctx)?, &(pi.square() / 6)));

    // ζ(1) diverges; the convention used in the residue computations maps it to 0
    assert!(zeta(1, &ctx).is_err());
    assert!(zeta_conv(1, &ctx)?.is_zero());

    for n in [2, 4, 12, 30] {
        println!("B_{n} = {}", bernoulli(n)?);
    }
    Ok(())
}
