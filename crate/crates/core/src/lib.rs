//! Complete Kähler-Einstein metric of the tube domains
//! `T_p = { z ∈ C² : Re(4p z₁) + Re(z₂)^{2p} < 1 }`.
//!
//! The automorphism group of `T_p` acts with orbits parametrized by a single
//! real invariant `X ∈ (-1, 1)`, so the Kähler-Einstein potential reduces to
//! an even function `F` of one variable.  This crate
//!
//! * solves the axis ODE for `F` with a blow-up boundary condition at `x = 1`
//!   by shooting on `F(0)` ([`potential`]),
//! * models the domain, the orbit invariant and the automorphism group
//!   ([`geometry`]),
//! * evaluates the metric and its complex derivatives up to order four
//!   ([`metric`]),
//! * computes the curvature tensor and holomorphic bisectional / sectional
//!   curvatures, their extremes and the boundary-limit comparison
//!   ([`curvature`]),
//! * bundles verification suites with machine-readable reports
//!   ([`diagnostics`]) and an axis sweep ([`sweep`]).
//!
//! ```no_run
//! use tubeke::{potential::{solve_potential, ShootingConfig}, TubeParams};
//!
//! let params = TubeParams::new(2).unwrap();
//! let sol = solve_potential(params, &ShootingConfig::default()).unwrap();
//! println!("F(0) = {}", sol.f0());
//! ```

pub mod cli;
pub mod curvature;
pub mod diagnostics;
pub mod error;
pub mod geometry;
pub mod metric;
mod ode;
pub mod params;
pub mod potential;
pub mod search;
pub mod sweep;

pub use error::{Error, Result};
pub use geometry::Point;
pub use params::TubeParams;
pub use potential::{PotentialSolution, ShootingConfig};
