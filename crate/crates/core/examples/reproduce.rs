//! Run every verification case and print the reports.

use tpkit::reproduce::{verify, DEFAULT_SEED};

fn main() -> tpkit::error::Result<()> {
    let reports = verify("all", DEFAULT_SEED, 3)?;
    for r in &reports {
        println!("{}", r.to_text());
    }
    let failed = reports.iter().filter(|r| !r.passed()).count();
    println!("{} cases, {failed} failed", reports.len());
    Ok(())
}
