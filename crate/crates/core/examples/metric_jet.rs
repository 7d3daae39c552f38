//! Metric, inverse, determinant and the third and fourth derivatives at a
//! point, with the Einstein residual `det g = e^{3g}`.
//!
//! ```bash
//! cargo run --release --example metric_jet
//! ```

use tubeke::metric::{einstein_residual, metric_jet, potential_value};
use tubeke::potential::{solve_potential, ShootingConfig};
use tubeke::{Point, TubeParams};

fn main() -> tubeke::Result<()> {
    let sol = solve_potential(TubeParams::new(3)?, &ShootingConfig::default())?;
    for z in ["0,0,0,0", "0.05,1,0.6,-3", "-2,0,1.2,0.5"] {
        let z: Point = z.parse()?;
        let jet = metric_jet(&sol, &z)?;
        println!("z = {z}, X = {:.6}", jet.x_value);
        println!("  g     = {:?}", jet.metric);
        println!("  g^-1  = {:?}", jet.inverse);
        println!("  det   = {:.10e}, e^(3g) = {:.10e}", jet.det, (3.0 * potential_value(&sol, &z)?).exp());
        println!("  g_11b1 = {:.6e}, g_11b11b = {:.6e}", jet.d3[0][0][0], jet.d4[0][0][0][0]);
        println!("  Einstein residual {:.2e}", einstein_residual(&sol, &z)?);
    }
    Ok(())
}
