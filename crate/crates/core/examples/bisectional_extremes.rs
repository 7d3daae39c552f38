//! Extremes of holomorphic bisectional curvature at the origin and at an
//! off-axis point, showing invariance along automorphism orbits.
//!
//! ```bash
//! cargo run --release --example bisectional_extremes
//! ```

use tubeke::curvature::{bis_extremes, origin_closed_forms, sectional_extremes, CurvatureAt};
use tubeke::geometry::x_invariant;
use tubeke::potential::{solve_potential, ShootingConfig};
use tubeke::search::SearchConfig;
use tubeke::{Point, TubeParams};

fn main() -> tubeke::Result<()> {
    let params = TubeParams::new(2)?;
    let sol = solve_potential(params, &ShootingConfig::default())?;
    let config = SearchConfig::default();

    let cf = origin_closed_forms(params);
    let e = bis_extremes(&sol, &Point::origin(), &config)?;
    println!("origin: min {:.12} (exact {}), max {:.12} (exact {})", e.min, cf.bis_min, e.max, cf.bis_max);

    let z = Point::from_parts(-1.0, 4.0, 0.9, 2.0);
    let x = x_invariant(params, &z)?;
    let here = bis_extremes(&sol, &z, &config)?;
    let axis = bis_extremes(&sol, &Point::axis(x), &config)?;
    println!("z = {z} (X = {x:.6}): min {:.12}, max {:.12}", here.min, here.max);
    println!("(0, X)            : min {:.12}, max {:.12}", axis.min, axis.max);

    let at = CurvatureAt::new(&sol, &z)?;
    println!("Bis at returned argmin {:.12}, argmax {:.12}", at.bisectional(&here.argmin), at.bisectional(&here.argmax));
    let s = sectional_extremes(&sol, &z, &config)?;
    println!("sectional curvature at z in [{:.12}, {:.12}]", s.min, s.max);
    Ok(())
}
