//! Runs the identity registry (or a prefix of it) and prints one line per
//! parameter assignment.
//!
//!     cargo run --release --example identity_suite -- cor5 40

use eulerforge::identities::{suite, SuiteSummary};
use eulerforge::PrecisionContext;

fn main() -> eulerforge::Result<()> {
    let mut args = std::env::args().skip(1);
    let filter = args.next().filter(|f| f != "all");
    let digits = args.next().map_or(30, |d| d.parse().expect("digits"));
    let ctx = PrecisionContext::new(digits)?;

    let reports = suite(filter.as_deref(), &ctx);
    for r in &reports {
        println!("{r}");
    }
    println!("{}", SuiteSummary::of(&reports));
    Ok(())
}
