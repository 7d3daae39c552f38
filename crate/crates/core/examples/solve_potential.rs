//! Solve the axis problem for p = 1, 2, 3, compare p = 1 with its closed
//! form and round-trip the solution through the JSON cache.
//!
//! ```bash
//! cargo run --release --example solve_potential
//! ```

use std::time::Instant;

use tubeke::potential::{solve_potential, PotentialSolution, ShootingConfig};
use tubeke::TubeParams;

fn main() -> tubeke::Result<()> {
    let config = ShootingConfig::default();
    for p in 1..=3 {
        let params = TubeParams::new(p)?;
        let start = Instant::now();
        let sol = solve_potential(params, &config)?;
        let d = sol.eval_f_derivs(0.0, 3)?;
        println!(
            "p = {p} (K = {}): F(0) = {:.12}, f'(0) = {:.12}, f'''(0) = {:.12}, blow-up at {:.3e} from 1, {} nodes, {:.1?}",
            params.k_string(),
            sol.f0(),
            d[1],
            d[3],
            sol.blowup_x() - 1.0,
            sol.nodes().len(),
            start.elapsed()
        );
    }

    let ball = solve_potential(TubeParams::new(1)?, &config)?;
    println!("\np = 1 against F(x) = ln(2)/3 - ln(1 - x^2):");
    for x in [0.0f64, 0.5, 0.9, 0.99, 0.999] {
        let exact = 2f64.ln() / 3.0 - (1.0 - x * x).ln();
        let got = ball.eval_big_f(x)?;
        println!("  x = {x:<6} F = {got:.12}  error {:+.2e}", got - exact);
    }

    let path = std::env::temp_dir().join("tubeke_p1.json");
    ball.save(&path)?;
    let back = PotentialSolution::load(&path)?;
    println!("\ncache {} reloaded, F(0.9) identical: {}", path.display(), back.eval_big_f(0.9)? == ball.eval_big_f(0.9)?);
    Ok(())
}
