//! Curvature tensor at the origin against its closed forms, and the
//! vector of largest sectional curvature.
//!
//! ```bash
//! cargo run --release --example origin_curvature
//! ```

use tubeke::curvature::{origin_closed_forms, origin_sectional_argmax, CurvatureAt, TangentPair};
use tubeke::potential::{solve_potential, ShootingConfig};
use tubeke::{Point, TubeParams};

fn main() -> tubeke::Result<()> {
    for p in 1..=3 {
        let params = TubeParams::new(p)?;
        let sol = solve_potential(params, &ShootingConfig::default())?;
        let f1 = sol.eval_f_derivs(0.0, 1)?[1];
        let cf = origin_closed_forms(params);
        let expected = cf.tensor(f1);
        let at = CurvatureAt::new(&sol, &Point::origin())?;
        let t = at.tensor;
        println!("p = {p}, f'(0) = {f1:.12}");
        println!("  R_11b11b  {:>14.8} (closed form {:>14.8})", t.r1111, expected.r1111);
        println!("  R_11b22b  {:>14.8} (closed form {:>14.8})", t.r1122, expected.r1122);
        println!("  R_12b12b  {:>14.8} (closed form {:>14.8})", t.r1212, expected.r1212);
        println!("  R_22b22b  {:>14.8} (closed form {:>14.8})", t.r2222, expected.r2222);
        let e1 = TangentPair::real([1.0, 0.0], [1.0, 0.0])?;
        let e12 = TangentPair::real([1.0, 0.0], [0.0, 1.0])?;
        println!("  Bis(e1, e1) = {:.10}, Bis(e1, e2) = {:.10}", at.bisectional(&e1), at.bisectional(&e12));
        let v = origin_sectional_argmax(params, f1);
        println!("  S(v*) = {:.10} with v* = ({:.6}, {:.6}), bound {:.10}", at.sectional(&v)?, v[0].re, v[1].re, cf.sect_max);
    }
    Ok(())
}
