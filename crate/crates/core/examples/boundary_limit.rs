//! Along the axis, bisectional curvature approaches
//! `-1 - |<v, w>|^2 / (|v|^2 |w|^2)`, the value for the complex hyperbolic
//! metric, as `x -> 1`.
//!
//! ```bash
//! cargo run --release --example boundary_limit
//! ```

use tubeke::diagnostics::boundary_gap;
use tubeke::potential::{solve_potential, ShootingConfig};
use tubeke::TubeParams;

fn main() -> tubeke::Result<()> {
    for p in 1..=3 {
        let sol = solve_potential(TubeParams::new(p)?, &ShootingConfig::default())?;
        println!("p = {p}");
        for x in [0.5, 0.9, 0.99, 0.999, 0.9999] {
            let (gap, lo, hi) = boundary_gap(&sol, x, 0, 1000)?;
            println!("  x = {x:<7} sup |Bis - limit| = {gap:.2e}, limit values in [{lo:.6}, {hi:.6}]");
        }
    }
    Ok(())
}
