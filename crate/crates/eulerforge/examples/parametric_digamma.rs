//! Ψ(−s;A), cot(πs;A) and coth(πs;A), and their Laurent expansions at an
//! integer.

use eulerforge::digamma::{cot_param, coth_param, laurent_pos, psi_param};
use eulerforge::numkernel::const_pi;
use eulerforge::seqcore::{seq_alt, seq_geom, seq_ones};
use eulerforge::PrecisionContext;
use rug::Rational;

fn main() -> eulerforge::Result<()> {
    let ctx = PrecisionContext::new(30)?;
    let pi = const_pi(&ctx);
    let s = ctx.ratio(3, 10);

    for a in [seq_ones(), seq_alt(), seq_geom(Rational::from((1, 2)))?] {
        println!(
            "{:<9} psi {:<34} cot {:<34} coth {}",
            a.name(),
            psi_param(&s, &a, &ctx)?.to_decimal(30),
            cot_param(&s, &a, &ctx)?.to_decimal(30),
            coth_param(&s, &a, &ctx)?.to_decimal(30),
        );
    }

    // the all-ones sequence gives back π cot(πs)
    let c = cot_param(&s, &seq_ones(), &ctx)?;
    assert!(ctx.close(&c, &((&pi * &s).cot() * &pi)));

    // Laurent expansion of Ψ'(−s;A) about s = 2
    let l = laurent_pos(&seq_alt(), 2, 2, 8, &ctx)?;
    let h = ctx.ratio(1, 20);
    println!("principal coefficient {}", l.principal_coeff.to_decimal(20));
    println!("value at s = 2.05 from the expansion {}", l.eval(&h).to_decimal(20));
    println!("first neglected term  {}", l.first_neglected(&h).to_decimal(3));
    Ok(())
}
