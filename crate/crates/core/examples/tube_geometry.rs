//! Domain membership, the orbit invariant, automorphisms and the
//! classification of boundary points and approach regions.
//!
//! ```bash
//! cargo run --example tube_geometry
//! ```

use tubeke::geometry::{
    classify_boundary, cone_inner_radius, in_cone, in_domain, normalizing_automorphism, region, x_invariant,
    TubeAutomorphism, BOUNDARY_TOL,
};
use tubeke::{Point, TubeParams};

fn main() -> tubeke::Result<()> {
    let params = TubeParams::new(2)?;
    let z: Point = "-0.4,1.5,0.9,-2".parse()?;
    println!("z = {z}, in T_2: {}", in_domain(params, &z));
    println!("X(z) = {:.12}", x_invariant(params, &z)?);

    let psi = normalizing_automorphism(params, &z)?;
    println!("psi(z) = {}  (lambda = {:.6})", psi.apply(&z), psi.lambda());

    let phi = TubeAutomorphism::new(params, 3.0, [0.5, -1.0], true)?;
    let w = phi.apply(&z);
    println!("phi(z) = {w}, X(phi(z)) = {:.12}", x_invariant(params, &w)?);
    let round_trip = phi.inverse().apply(&w);
    println!("phi^-1(phi(z)) - z = {:.2e}", round_trip.dist(&z));

    for q in ["0.125,3,0,1", "0,0,1,0", "0.1,0,0.2,0"] {
        let q: Point = q.parse()?;
        println!("{q}: {:?}", classify_boundary(params, &q, BOUNDARY_TOL));
    }

    let (theta, alpha) = (0.6, 0.1);
    let r = cone_inner_radius(params, theta, alpha);
    let near = Point::from_parts(0.125 - 0.5 * r, 0.0, 0.2 * r * theta.tan(), 0.0);
    println!(
        "cone radius for theta = {theta}, alpha = {alpha}: {r:.3e}; sample point in cone: {}, region {:?}",
        in_cone(params, &near, theta)?,
        region(params, &near, alpha)?
    );
    Ok(())
}
