//! The tube domain `T_p`, its orbit invariant `X` and its automorphisms.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::params::TubeParams;

/// A point `(z₁, z₂)` of `C²`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Point {
    pub z1: Complex64,
    pub z2: Complex64,
}

impl Point {
    pub fn new(z1: Complex64, z2: Complex64) -> Self {
        Self { z1, z2 }
    }

    pub fn from_parts(re1: f64, im1: f64, re2: f64, im2: f64) -> Self {
        Self::new(Complex64::new(re1, im1), Complex64::new(re2, im2))
    }

    /// The axis point `(0, x)`.
    pub fn axis(x: f64) -> Self {
        Self::from_parts(0.0, 0.0, x, 0.0)
    }

    pub fn origin() -> Self {
        Self::axis(0.0)
    }

    pub fn parts(&self) -> [f64; 4] {
        [self.z1.re, self.z1.im, self.z2.re, self.z2.im]
    }

    pub fn dist(&self, other: &Point) -> f64 {
        ((self.z1 - other.z1).norm_sqr() + (self.z2 - other.z2).norm_sqr()).sqrt()
    }
}

impl FromStr for Point {
    type Err = Error;

    /// Parses `"re1,im1,re2,im2"`.
    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<f64> = s
            .split(',')
            .map(|t| t.trim().parse::<f64>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|e| Error::InvalidInput(format!("point `{s}`: {e}")))?;
        match parts[..] {
            [a, b, c, d] if parts.iter().all(|v| v.is_finite()) => Ok(Self::from_parts(a, b, c, d)),
            _ => Err(Error::InvalidInput(format!("point `{s}` must be four finite reals re1,im1,re2,im2"))),
        }
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.parts();
        write!(f, "{a},{b},{c},{d}")
    }
}

/// `1 - Re(4p z₁)`.
pub(crate) fn defect(params: TubeParams, z: &Point) -> f64 {
    1.0 - 4.0 * params.pf() * z.z1.re
}

fn re2_pow(params: TubeParams, z: &Point) -> f64 {
    z.z2.re.powi(2 * params.p() as i32)
}

/// `Re(4p z₁) + Re(z₂)^{2p} < 1`.
pub fn in_domain(params: TubeParams, z: &Point) -> bool {
    4.0 * params.pf() * z.z1.re + re2_pow(params, z) < 1.0
}

pub(crate) fn require_domain(params: TubeParams, z: &Point) -> Result<()> {
    if in_domain(params, z) {
        Ok(())
    } else {
        Err(Error::Domain(format!("{z} is not in T_{}", params.p())))
    }
}

/// The orbit invariant `X = Re(z₂) / (1 - Re(4p z₁))^{1/(2p)}`.
pub fn x_invariant(params: TubeParams, z: &Point) -> Result<f64> {
    let u = defect(params, z);
    if !(u > 0.0) {
        return Err(Error::Domain(format!("Re(4p z1) must be < 1 at {z}")));
    }
    Ok(z.z2.re / u.powf(params.inv_2p()))
}

/// An automorphism of `T_p` in canonical form
/// `z ↦ s^flip ∘ d_λ ∘ τ_u (z)`, where `τ_u(z) = z + i u`,
/// `d_λ(z) = ((λ(4p z₁ - 1) + 1)/(4p), λ^{1/(2p)} z₂)` and `s(z) = (z₁, -z₂)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TubeAutomorphism {
    params: TubeParams,
    lambda: f64,
    u: [f64; 2],
    flip: bool,
}

impl TubeAutomorphism {
    pub fn new(params: TubeParams, lambda: f64, u: [f64; 2], flip: bool) -> Result<Self> {
        if !(lambda.is_finite() && lambda > 0.0) {
            return Err(Error::InvalidInput(format!("dilation factor must be > 0, got {lambda}")));
        }
        if !(u[0].is_finite() && u[1].is_finite()) {
            return Err(Error::InvalidInput("translation must be finite".into()));
        }
        Ok(Self { params, lambda, u, flip })
    }

    pub fn identity(params: TubeParams) -> Self {
        Self { params, lambda: 1.0, u: [0.0; 2], flip: false }
    }

    pub fn translation(params: TubeParams, u: [f64; 2]) -> Result<Self> {
        Self::new(params, 1.0, u, false)
    }

    pub fn dilation(params: TubeParams, lambda: f64) -> Result<Self> {
        Self::new(params, lambda, [0.0; 2], false)
    }

    pub fn symmetry(params: TubeParams) -> Self {
        Self { params, lambda: 1.0, u: [0.0; 2], flip: true }
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    pub fn u(&self) -> [f64; 2] {
        self.u
    }

    pub fn flip(&self) -> bool {
        self.flip
    }

    fn mu(&self) -> f64 {
        self.lambda.powf(self.params.inv_2p())
    }

    pub fn apply(&self, z: &Point) -> Point {
        let four_p = 4.0 * self.params.pf();
        let t1 = z.z1 + Complex64::new(0.0, self.u[0]);
        let t2 = z.z2 + Complex64::new(0.0, self.u[1]);
        let d1 = (self.lambda * (four_p * t1 - 1.0) + 1.0) / four_p;
        let d2 = self.mu() * t2;
        Point::new(d1, if self.flip { -d2 } else { d2 })
    }

    /// Diagonal complex Jacobian `diag(λ, ±λ^{1/(2p)})`.
    pub fn jacobian(&self) -> [[Complex64; 2]; 2] {
        let j22 = if self.flip { -self.mu() } else { self.mu() };
        [
            [Complex64::new(self.lambda, 0.0), Complex64::new(0.0, 0.0)],
            [Complex64::new(0.0, 0.0), Complex64::new(j22, 0.0)],
        ]
    }

    pub fn jacobian_det(&self) -> f64 {
        let d = self.lambda * self.mu();
        if self.flip { -d } else { d }
    }

    /// Pushes a tangent vector forward: `Jac · v`.
    pub fn push(&self, v: [Complex64; 2]) -> [Complex64; 2] {
        let j = self.jacobian();
        [j[0][0] * v[0], j[1][1] * v[1]]
    }

    /// `self ∘ other` in canonical form.
    pub fn compose(&self, other: &Self) -> Self {
        // τ_u d_λ = d_λ τ_{(u₁/λ, u₂/λ^{1/2p})} and τ_u s = s τ_{(u₁, -u₂)}.
        let u2 = if other.flip { [self.u[0], -self.u[1]] } else { self.u };
        let moved = [u2[0] / other.lambda, u2[1] / other.mu()];
        Self {
            params: self.params,
            lambda: self.lambda * other.lambda,
            u: [other.u[0] + moved[0], other.u[1] + moved[1]],
            flip: self.flip ^ other.flip,
        }
    }

    pub fn inverse(&self) -> Self {
        // (s^f d_λ τ_u)⁻¹ = τ_{-u} d_{1/λ} s^f = s^f d_{1/λ} τ_{w} with w derived below.
        let inv_l = 1.0 / self.lambda;
        let mu_inv = inv_l.powf(self.params.inv_2p());
        // τ_{-u} d_{1/λ} = d_{1/λ} τ_{(-u₁λ, -u₂λ^{1/2p})}; then move s through.
        let w = [-self.u[0] / inv_l, -self.u[1] / mu_inv];
        let w = if self.flip { [w[0], -w[1]] } else { w };
        Self { params: self.params, lambda: inv_l, u: w, flip: self.flip }
    }

    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.flip == other.flip
            && (self.lambda - other.lambda).abs() <= tol * self.lambda.max(1.0)
            && (self.u[0] - other.u[0]).abs() <= tol * self.u[0].abs().max(1.0)
            && (self.u[1] - other.u[1]).abs() <= tol * self.u[1].abs().max(1.0)
    }
}

/// `ψ^(z) = d_{1/(1 - Re 4p z₁)} ∘ τ_{-(Im z₁, Im z₂)}`, sending `z` to
/// `(0, X(z))`.
pub fn normalizing_automorphism(params: TubeParams, z: &Point) -> Result<TubeAutomorphism> {
    require_domain(params, z)?;
    TubeAutomorphism::new(params, 1.0 / defect(params, z), [-z.z1.im, -z.z2.im], false)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum BoundaryClass {
    StrictlyPseudoconvex,
    WeaklyPseudoconvex,
    NotBoundary,
}

/// Default tolerance for [`classify_boundary`].
pub const BOUNDARY_TOL: f64 = 1e-9;

/// Weakly pseudoconvex boundary points are exactly `(1/(4p), 0) + iR²`;
/// every other boundary point is strictly pseudoconvex.
pub fn classify_boundary(params: TubeParams, q: &Point, tol: f64) -> BoundaryClass {
    let rho = 4.0 * params.pf() * q.z1.re + re2_pow(params, q) - 1.0;
    if !(rho.abs() <= tol) {
        BoundaryClass::NotBoundary
    } else if re2_pow(params, q) <= tol {
        BoundaryClass::WeaklyPseudoconvex
    } else {
        BoundaryClass::StrictlyPseudoconvex
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum RegionClass {
    /// `Re(z₂)^{2p} / (1 - Re 4p z₁) ≤ α`.
    Inner(f64),
    /// `Re(z₂)^{2p} / (1 - Re 4p z₁) ≥ 1 - α`.
    Outer(f64),
    Middle(f64),
}

impl RegionClass {
    pub fn ratio(&self) -> f64 {
        match *self {
            RegionClass::Inner(r) | RegionClass::Outer(r) | RegionClass::Middle(r) => r,
        }
    }
}

/// Approach-region ratio `Re(z₂)^{2p} / (1 - Re 4p z₁)`, which equals
/// `X(z)^{2p}`.
pub fn region_ratio(params: TubeParams, z: &Point) -> Result<f64> {
    require_domain(params, z)?;
    Ok(re2_pow(params, z) / defect(params, z))
}

pub fn region(params: TubeParams, z: &Point, alpha: f64) -> Result<RegionClass> {
    if !(alpha > 0.0 && alpha < 1.0) {
        return Err(Error::InvalidInput(format!("alpha must lie in (0, 1), got {alpha}")));
    }
    let r = region_ratio(params, z)?;
    Ok(if r <= alpha {
        RegionClass::Inner(r)
    } else if r >= 1.0 - alpha {
        RegionClass::Outer(r)
    } else {
        RegionClass::Middle(r)
    })
}

/// Membership in the half cone `Λ(θ)` with vertex `(1/(4p), 0)`.
pub fn in_cone(params: TubeParams, z: &Point, theta: f64) -> Result<bool> {
    if !(theta > 0.0 && theta < std::f64::consts::FRAC_PI_2) {
        return Err(Error::InvalidInput(format!("theta must lie in (0, pi/2), got {theta}")));
    }
    let depth = 0.25 / params.pf() - z.z1.re;
    if !(depth > 0.0) {
        return Err(Error::Domain(format!("Re(z1) must be < 1/(4p) at {z}")));
    }
    let spread = (z.z1.im * z.z1.im + z.z2.norm_sqr()).sqrt();
    Ok(in_domain(params, z) && spread / depth <= theta.tan())
}

/// Radius around the vertex `(1/(4p), 0)` inside which every point of
/// `Λ(θ)` has region ratio at most `α`.
///
/// From `4p|X|(1 - Re 4p z₁)^{1/(2p) - 1} ≤ tan θ` on the cone and
/// `1 - Re 4p z₁ ≤ 4p r`.
pub fn cone_inner_radius(params: TubeParams, theta: f64, alpha: f64) -> f64 {
    let four_p = 4.0 * params.pf();
    let x_bound = alpha.powf(params.inv_2p());
    let expo = 2.0 * params.pf() / (2.0 * params.pf() - 1.0);
    if params.p() == 1 {
        // Exponent 1 - 1/(2p) = 1/2.
        return (four_p * x_bound / theta.tan()).powi(2) / four_p;
    }
    (four_p * x_bound / theta.tan()).powf(expo) / four_p
}
