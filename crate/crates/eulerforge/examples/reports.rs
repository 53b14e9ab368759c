//! Verification reports as JSON lines and CSV, the formats the CLI emits.

use eulerforge::identities::{suite, VerificationReport};
use eulerforge::PrecisionContext;

fn main() -> eulerforge::Result<()> {
    let ctx = PrecisionContext::new(30)?;
    let reports = suite(Some("ex4.6"), &ctx);

    for r in &reports {
        println!("{}", r.to_json());
    }
    println!();
    println!("{}", VerificationReport::CSV_HEADER);
    for r in &reports {
        println!("{}", r.to_csv());
    }
    Ok(())
}
