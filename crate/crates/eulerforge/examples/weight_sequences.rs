//! Weight sequences and the functionals built from them.
//!
//!     cargo run --example weight_sequences -- geom:1/3

use eulerforge::numkernel::const_pi;
use eulerforge::seqcore::{functional, FunctionalKind, WeightSequence};
use eulerforge::PrecisionContext;

fn main() -> eulerforge::Result<()> {
    let ctx = PrecisionContext::new(30)?;
    let name = std::env::args().nth(1).unwrap_or_else(|| "alt".into());
    let a: WeightSequence = name.parse()?;

    print!("{name}: a_k for k = -3..3:");
    for k in -3..=3 {
        print!(" {}", a.term(k, &ctx).to_decimal(6));
    }
    println!();

    for kind in FunctionalKind::ALL {
        if kind == FunctionalKind::D {
            continue;
        }
        match functional(kind, &a, 3, 2, &ctx) {
            Ok(v) => println!("{kind:>5}_3(2) = {}", v.to_decimal(30)),
            Err(e) => println!("{kind:>5}_3(2)   {e}"),
        }
    }

    // M_3(2; ones) = H_3^(2) + ζ(2) = 49/36 + π²/6
    let ones: WeightSequence = "ones".parse()?;
    let m = functional(FunctionalKind::M, &ones, 3, 2, &ctx)?;
    assert!(ctx.close(&m, &(ctx.ratio(49, 36) + const_pi(&ctx).square() / 6)));
    Ok(())
}
