//! Hyperbolic series: a coth sum with a closed form, and one Ramanujan-type
//! reciprocity checked across αβ = π².

use eulerforge::identities::hyper::exp_tail;
use eulerforge::identities::{verify, Params};
use eulerforge::numkernel::{const_pi, zeta};
use eulerforge::PrecisionContext;

fn main() -> eulerforge::Result<()> {
    let ctx = PrecisionContext::new(40)?;
    let pi = const_pi(&ctx);

    // Σ coth(πn)/n³ = ζ(3) + 2Σ 1/(n³(e^{2πn} − 1)) = 7π³/180
    let c = ctx.isolated();
    let tail = exp_tail(3, &pi, false, &c)?;
    let v = zeta(3, &ctx)? + tail * 2;
    println!("sum coth(pi n)/n^3 = {}  ({} tail terms)", v.to_decimal(40), c.terms_consumed());
    assert!(ctx.close(&v, &(pi.powi(3) * 7 / 180)));

    for (k, alpha, beta) in [(2, "pi", "pi"), (3, "pi/2", "2pi"), (4, "pi/sqrt2", "sqrt2*pi")] {
        let p = Params::new().int("k", k).real("alpha", alpha).real("beta", beta);
        println!("{}", verify("eq5.9", &p, &ctx)?);
    }
    Ok(())
}
