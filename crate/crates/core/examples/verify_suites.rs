//! Run every verification suite for p = 1, 2, 3 and print the reports.
//!
//! ```bash
//! cargo run --release --example verify_suites
//! ```

use tubeke::diagnostics::{run_suite, Suite, DEFAULT_SEED};
use tubeke::potential::{solve_potential, ShootingConfig};
use tubeke::TubeParams;

fn main() -> tubeke::Result<()> {
    let mut all_pass = true;
    for p in 1..=3 {
        let sol = solve_potential(TubeParams::new(p)?, &ShootingConfig::default())?;
        for suite in Suite::INDIVIDUAL {
            let report = run_suite(suite, &sol, DEFAULT_SEED)?;
            all_pass &= report.overall;
            println!("{report}\n");
        }
    }
    println!("all suites {}", if all_pass { "pass" } else { "FAIL" });
    Ok(())
}
