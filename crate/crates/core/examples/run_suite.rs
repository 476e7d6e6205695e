//! Runs the acceptance criteria by name or number, e.g.
//!
//! ```text
//! cargo run --release --example run_suite -- diameters
//! ```

use crslab::suites::{run_suite, SuiteOptions};

fn main() -> crslab::Result<()> {
    let name = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "size-identities".into());
    for result in run_suite(&name, &SuiteOptions::default())? {
        println!("{result}");
    }
    Ok(())
}
