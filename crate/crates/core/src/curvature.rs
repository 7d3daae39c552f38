//! Curvature tensor and holomorphic bisectional / sectional curvature of the
//! Kähler-Einstein metric on `T_p`.
//!
//! `R_{ij̄kl̄} = -g_{ij̄kl̄} + Σ_{α,β} g_{ikᾱ} g^{ᾱβ} g_{βj̄l̄}` and
//!
//! ```text
//! Bis(v, w) = Σ R_{ij̄kl̄} v_i v̄_j w_k w̄_l / (|v|²_g |w|²_g).
//! ```
//!
//! Since every derivative of `g` is real, `R_{ij̄kl̄} = R_{kj̄il̄} = R_{jīlk̄}`
//! and the tensor has six independent entries.

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::geometry::{normalizing_automorphism, x_invariant, Point, TubeAutomorphism};
use crate::metric::{adapted_basis, metric_jet, metric_jet_in_basis, Mat2, MetricJet, Tensor4};
use crate::params::TubeParams;
use crate::potential::PotentialSolution;
use crate::search::{nelder_mead, SearchConfig};

pub type Vector = [Complex64; 2];

/// Beyond this `|X|` metric and tensor are rescaled by powers of `1/f(X)`.
const RESCALE_ABOVE: f64 = 0.999;

/// The six independent real coefficients `R_{ij̄kl̄}`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CurvatureTensor {
    pub r1111: f64,
    pub r1112: f64,
    pub r1122: f64,
    pub r1212: f64,
    pub r1222: f64,
    pub r2222: f64,
}

impl CurvatureTensor {
    fn from_full(r: &Tensor4) -> Self {
        Self {
            r1111: r[0][0][0][0],
            r1112: r[0][0][0][1],
            r1122: r[0][0][1][1],
            r1212: r[0][1][0][1],
            r1222: r[0][1][1][1],
            r2222: r[1][1][1][1],
        }
    }

    /// `R_{ij̄kl̄}` for 0-based indices.
    pub fn coeff(&self, i: usize, j: usize, k: usize, l: usize) -> f64 {
        match i + j + k + l {
            0 => self.r1111,
            1 => self.r1112,
            // Two 2's in holomorphic/antiholomorphic positions (i,k) or
            // (j,l) pair up as R_{12̄12̄}; otherwise R_{11̄22̄}.
            2 if (i == 1 && k == 1) || (j == 1 && l == 1) => self.r1212,
            2 => self.r1122,
            3 => self.r1222,
            _ => self.r2222,
        }
    }

    pub fn is_finite(&self) -> bool {
        [self.r1111, self.r1112, self.r1122, self.r1212, self.r1222, self.r2222]
            .iter()
            .all(|v| v.is_finite())
    }

    fn scaled(&self, s: f64) -> Self {
        Self {
            r1111: self.r1111 * s,
            r1112: self.r1112 * s,
            r1122: self.r1122 * s,
            r1212: self.r1212 * s,
            r1222: self.r1222 * s,
            r2222: self.r2222 * s,
        }
    }

    /// Numerator of `Bis` in the tube form, for real amplitudes `a`, `b`
    /// (signed moduli) and phases `alpha = arg(v₁v̄₂)`, `beta = arg(w₁w̄₂)`.
    pub fn tube_numerator(&self, a: [f64; 2], b: [f64; 2], alpha: f64, beta: f64) -> f64 {
        let (ca, cb) = (alpha.cos(), beta.cos());
        let cross = a[0] * a[1] * b[0] * b[1];
        self.r1111 * a[0] * a[0] * b[0] * b[0]
            + 2.0 * self.r1112 * a[0] * b[0] * (a[0] * b[1] * cb + a[1] * b[0] * ca)
            + self.r1122 * (a[0] * a[0] * b[1] * b[1] + a[1] * a[1] * b[0] * b[0] + 2.0 * cross * (alpha - beta).cos())
            + 2.0 * self.r1212 * cross * (alpha + beta).cos()
            + 2.0 * self.r1222 * a[1] * b[1] * (a[0] * b[1] * ca + a[1] * b[0] * cb)
            + self.r2222 * a[1] * a[1] * b[1] * b[1]
    }
}

/// Two nonzero tangent vectors.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TangentPair {
    pub v: Vector,
    pub w: Vector,
}

fn is_zero(v: &Vector) -> bool {
    v[0].norm_sqr() + v[1].norm_sqr() == 0.0
}

impl TangentPair {
    pub fn new(v: Vector, w: Vector) -> Result<Self> {
        if is_zero(&v) || is_zero(&w) {
            return Err(Error::ZeroVector);
        }
        Ok(Self { v, w })
    }

    pub fn real(v: [f64; 2], w: [f64; 2]) -> Result<Self> {
        Self::new(
            [Complex64::new(v[0], 0.0), Complex64::new(v[1], 0.0)],
            [Complex64::new(w[0], 0.0), Complex64::new(w[1], 0.0)],
        )
    }

    /// `arg(v₁ v̄₂)` (0 when undefined).
    pub fn alpha(&self) -> f64 {
        (self.v[0] * self.v[1].conj()).arg()
    }

    /// `arg(w₁ w̄₂)` (0 when undefined).
    pub fn beta(&self) -> f64 {
        (self.w[0] * self.w[1].conj()).arg()
    }
}

fn hermitian(g: &Mat2, v: &Vector, w: &Vector) -> Complex64 {
    let mut s = Complex64::new(0.0, 0.0);
    for i in 0..2 {
        for j in 0..2 {
            s += g[i][j] * v[i] * w[j].conj();
        }
    }
    s
}

/// Curvature data at one point: the jet, the full tensor and conditioned
/// copies used for ratios.
#[derive(Debug, Clone)]
pub struct CurvatureAt {
    pub jet: MetricJet,
    pub full: Tensor4,
    pub tensor: CurvatureTensor,
    /// Metric divided by `scale`.
    metric_s: Mat2,
    /// Tensor divided by `scale²`.
    tensor_s: CurvatureTensor,
}

fn full_tensor(jet: &MetricJet) -> Tensor4 {
    let mut r = [[[[0.0; 2]; 2]; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            for k in 0..2 {
                for l in 0..2 {
                    let mut s = -jet.d4[i][j][k][l];
                    for a in 0..2 {
                        for b in 0..2 {
                            s += jet.d3[i][a][k] * jet.inverse[a][b] * jet.d3[b][j][l];
                        }
                    }
                    r[i][j][k][l] = s;
                }
            }
        }
    }
    r
}

impl CurvatureAt {
    pub fn new(sol: &PotentialSolution, z: &Point) -> Result<Self> {
        Ok(Self::from_jet(metric_jet(sol, z)?))
    }

    pub fn from_jet(jet: MetricJet) -> Self {
        let full = full_tensor(&jet);
        let tensor = CurvatureTensor::from_full(&full);
        let scale = if jet.x_value.abs() > RESCALE_ABOVE { jet.f_derivs[0].powi(2) } else { 1.0 };
        let metric_s = jet.metric.map(|row| row.map(|g| g / scale));
        let tensor_s = tensor.scaled(1.0 / (scale * scale));
        Self { jet, full, tensor, metric_s, tensor_s }
    }

    /// `Bis(v, w)` from the tube form with the six coefficients.
    pub fn bisectional(&self, pair: &TangentPair) -> f64 {
        let (v, w) = (&pair.v, &pair.w);
        let a = [v[0].norm(), v[1].norm()];
        let b = [w[0].norm(), w[1].norm()];
        let num = self.tensor_s.tube_numerator(a, b, pair.alpha(), pair.beta());
        num / (hermitian(&self.metric_s, v, v).re * hermitian(&self.metric_s, w, w).re)
    }

    /// `Bis(v, w)` by direct summation over all sixteen index tuples.
    pub fn bisectional_direct(&self, pair: &TangentPair) -> f64 {
        let (v, w) = (&pair.v, &pair.w);
        let mut num = Complex64::new(0.0, 0.0);
        for i in 0..2 {
            for j in 0..2 {
                for k in 0..2 {
                    for l in 0..2 {
                        num += self.full[i][j][k][l] * v[i] * v[j].conj() * w[k] * w[l].conj();
                    }
                }
            }
        }
        num.re / (hermitian(&self.jet.metric, v, v).re * hermitian(&self.jet.metric, w, w).re)
    }

    pub fn sectional(&self, v: &Vector) -> Result<f64> {
        Ok(self.bisectional(&TangentPair::new(*v, *v)?))
    }

    /// `-1 - |⟨v, w⟩_g|² / (|v|²_g |w|²_g)`.
    pub fn boundary_limit(&self, pair: &TangentPair) -> f64 {
        boundary_limit_ratio(&self.metric_s, pair)
    }
}

fn boundary_limit_ratio(g: &Mat2, pair: &TangentPair) -> f64 {
    let vw = hermitian(g, &pair.v, &pair.w).norm_sqr();
    let vv = hermitian(g, &pair.v, &pair.v).re;
    let ww = hermitian(g, &pair.w, &pair.w).re;
    -1.0 - vw / (vv * ww)
}

pub fn curvature_tensor(sol: &PotentialSolution, z: &Point) -> Result<CurvatureTensor> {
    Ok(CurvatureAt::new(sol, z)?.tensor)
}

pub fn bisectional(sol: &PotentialSolution, z: &Point, pair: &TangentPair) -> Result<f64> {
    Ok(CurvatureAt::new(sol, z)?.bisectional(pair))
}

pub fn sectional(sol: &PotentialSolution, z: &Point, v: &Vector) -> Result<f64> {
    CurvatureAt::new(sol, z)?.sectional(v)
}

/// Limit value of `Bis` as `|X| → 1` at the jet's metric.
pub fn boundary_limit_bis(jet: &MetricJet, pair: &TangentPair) -> Result<f64> {
    if !jet.is_positive_definite() {
        return Err(Error::Domain("metric is not positive definite".into()));
    }
    let s = jet.f_derivs[0].abs().max(1.0).powi(2);
    let g = jet.metric.map(|row| row.map(|x| x / s));
    Ok(boundary_limit_ratio(&g, pair))
}

/// Pulls `(z, v, w)` back to the axis point `(0, X(z))` with `ψ^(z)`.
pub fn pull_back_to_axis(params: TubeParams, z: &Point, pair: &TangentPair) -> Result<(Point, TangentPair)> {
    let psi = normalizing_automorphism(params, z)?;
    let axis = Point::axis(x_invariant(params, z)?);
    Ok((axis, TangentPair::new(psi.push(pair.v), psi.push(pair.w))?))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Extremes {
    pub min: f64,
    pub argmin: TangentPair,
    pub max: f64,
    pub argmax: TangentPair,
}

/// Extremes of sectional curvature `S_z(v)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SectionalExtremes {
    pub min: f64,
    pub argmin: Vector,
    pub max: f64,
    pub argmax: Vector,
}

/// Unit vector `(cos θ, sin θ e^{-iφ})`, so that `arg(u₁ū₂) = φ`.
fn unit(theta: f64, phase: f64) -> Vector {
    [Complex64::new(theta.cos(), 0.0), Complex64::from_polar(theta.sin(), -phase)]
}

/// Curvature at `(0, X(z))` expressed in a `g`-orthonormal frame, together
/// with the maps taking frame vectors back to tangent vectors at `z`.
struct OrthonormalView {
    tensor: CurvatureTensor,
    frame: Mat2,
    psi_inv: TubeAutomorphism,
}

impl OrthonormalView {
    fn new(sol: &PotentialSolution, z: &Point) -> Result<Self> {
        let params = sol.params();
        let psi = normalizing_automorphism(params, z)?;
        // Work in the adapted basis at the axis point: in coordinate
        // directions the transverse curvature comes out of a cancellation
        // between terms of size `f⁵` near the boundary.
        let axis = Point::axis(x_invariant(params, z)?);
        let basis = adapted_basis(params, &axis)?;
        let jet = metric_jet_in_basis(sol, &axis, &basis)?;
        let full = full_tensor(&jet);
        let g = &jet.metric;
        let l11 = g[0][0].sqrt();
        let l21 = g[0][1] / l11;
        let l22 = (jet.det / g[0][0]).sqrt();
        let e = [[1.0 / l11, -l21 / (l11 * l22)], [0.0, 1.0 / l22]];
        let mut rt = [[[[0.0; 2]; 2]; 2]; 2];
        for (a, b, c, d) in indices4() {
            let mut s = 0.0;
            for (i, j, k, l) in indices4() {
                s += full[i][j][k][l] * e[i][a] * e[j][b] * e[k][c] * e[l][d];
            }
            rt[a][b][c][d] = s;
        }
        let mut frame = [[0.0; 2]; 2];
        for i in 0..2 {
            for j in 0..2 {
                frame[i][j] = basis[i][0] * e[0][j] + basis[i][1] * e[1][j];
            }
        }
        Ok(Self { tensor: CurvatureTensor::from_full(&rt), frame, psi_inv: psi.inverse() })
    }

    fn value(&self, tv: f64, tw: f64, alpha: f64, beta: f64) -> f64 {
        self.tensor.tube_numerator([tv.cos(), tv.sin()], [tw.cos(), tw.sin()], alpha, beta)
    }

    fn vector(&self, theta: f64, phase: f64) -> Vector {
        let u = unit(theta, phase);
        let e = &self.frame;
        self.psi_inv.push([e[0][0] * u[0] + e[0][1] * u[1], e[1][0] * u[0] + e[1][1] * u[1]])
    }
}

fn linspace(n: usize, hi: f64) -> Vec<f64> {
    let n = n.max(2);
    (0..n).map(|i| hi * i as f64 / (n - 1) as f64).collect()
}

/// Keeps the `keep` best entries under `better`, best first.
fn insert_best<const N: usize>(list: &mut Vec<(f64, [f64; N])>, keep: usize, v: f64, q: [f64; N], better: fn(f64, f64) -> bool) {
    if list.len() < keep || better(v, list[list.len() - 1].0) {
        let pos = list.iter().position(|(u, _)| better(v, *u)).unwrap_or(list.len());
        list.insert(pos, (v, q));
        list.truncate(keep);
    }
}

/// Grid search over the product of `axes` followed by Nelder–Mead from the
/// best cells. Returns `((min, argmin), (max, argmax))`.
fn grid_extremes<const N: usize>(
    objective: impl Fn(&[f64; N]) -> f64,
    axes: [&[f64]; N],
    step: f64,
    config: &SearchConfig,
) -> ((f64, [f64; N]), (f64, [f64; N])) {
    let keep = config.refine_starts.max(1);
    let mut lows = Vec::with_capacity(keep + 1);
    let mut highs = Vec::with_capacity(keep + 1);
    let total: usize = axes.iter().map(|a| a.len()).product();
    for mut n in 0..total {
        let mut q = [0.0; N];
        for d in (0..N).rev() {
            q[d] = axes[d][n % axes[d].len()];
            n /= axes[d].len();
        }
        let v = objective(&q);
        insert_best(&mut lows, keep, v, q, |x, y| x < y);
        insert_best(&mut highs, keep, v, q, |x, y| x > y);
    }

    let mut lo = (lows[0].0, lows[0].1);
    for &(_, q) in &lows {
        let (x, v) = nelder_mead(&objective, q, step, config.max_iter, config.ftol);
        if v < lo.0 {
            lo = (v, x);
        }
    }
    let mut hi = (highs[0].0, highs[0].1);
    for &(_, q) in &highs {
        let (x, v) = nelder_mead(|q| -objective(q), q, step, config.max_iter, config.ftol);
        if -v > hi.0 {
            hi = (-v, x);
        }
    }
    (lo, hi)
}

/// Minimum and maximum of `Bis_z(v, w)` over all nonzero `v, w`.
///
/// Evaluated at `(0, X(z))` in a `g`-orthonormal frame, where the tube form
/// has unit denominator; grid search on `(θ_v, θ_w, α, β)` followed by
/// Nelder–Mead from the best cells. The returned pairs are tangent vectors
/// at `z`.
pub fn bis_extremes(sol: &PotentialSolution, z: &Point, config: &SearchConfig) -> Result<Extremes> {
    let view = OrthonormalView::new(sol, z)?;
    let thetas = linspace(config.theta_points, std::f64::consts::FRAC_PI_2);
    let phases = linspace(config.phase_points, std::f64::consts::TAU);
    let step = thetas[1];
    let ((min, qmin), (max, qmax)) =
        grid_extremes(|q: &[f64; 4]| view.value(q[0], q[1], q[2], q[3]), [&thetas, &thetas, &phases, &phases], step, config);
    let pair = |q: [f64; 4]| TangentPair::new(view.vector(q[0], q[2]), view.vector(q[1], q[3]));
    Ok(Extremes { min, argmin: pair(qmin)?, max, argmax: pair(qmax)? })
}

/// Minimum and maximum of `S_z(v)` over nonzero `v`; same scheme as
/// [`bis_extremes`] on `(θ, α)`.
pub fn sectional_extremes(sol: &PotentialSolution, z: &Point, config: &SearchConfig) -> Result<SectionalExtremes> {
    let view = OrthonormalView::new(sol, z)?;
    let thetas = linspace(config.theta_points, std::f64::consts::FRAC_PI_2);
    let phases = linspace(config.phase_points, std::f64::consts::TAU);
    let step = thetas[1];
    let ((min, qmin), (max, qmax)) =
        grid_extremes(|q: &[f64; 2]| view.value(q[0], q[0], q[1], q[1]), [&thetas, &phases], step, config);
    Ok(SectionalExtremes { min, argmin: view.vector(qmin[0], qmin[1]), max, argmax: view.vector(qmax[0], qmax[1]) })
}

fn indices4() -> impl Iterator<Item = (usize, usize, usize, usize)> {
    (0..16).map(|n| (n >> 3 & 1, n >> 2 & 1, n >> 1 & 1, n & 1))
}

/// Closed-form curvature data at the origin.
///
/// Coefficients that involve `f'(0)` are given as multipliers:
/// `R_{11̄22̄} = r1122_coeff · f'(0)`, `R_{12̄12̄} = r1212_coeff · f'(0)` and
/// `R_{22̄22̄} = r2222_coeff · f'(0)²`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct OriginClosedForms {
    pub bis_min: f64,
    pub bis_max: f64,
    pub sect_max: f64,
    pub r1111: f64,
    pub r1122_coeff: f64,
    pub r1212_coeff: f64,
    pub r2222_coeff: f64,
}

pub fn origin_closed_forms(params: TubeParams) -> OriginClosedForms {
    let p = params.pf();
    let k = params.k();
    OriginClosedForms {
        bis_min: -3.0 + 3.0 / (2.0 * p + 1.0),
        bis_max: -3.0 / (2.0 * p + 1.0),
        sect_max: -1.5 - 1.0 / (2.0 * p * k),
        r1111: -32.0 * p.powi(3) * k,
        r1122_coeff: -p,
        r1212_coeff: p - 1.0,
        r2222_coeff: (-3.0 + 1.0 / k) / 16.0,
    }
}

impl OriginClosedForms {
    pub fn tensor(&self, f1_0: f64) -> CurvatureTensor {
        CurvatureTensor {
            r1111: self.r1111,
            r1112: 0.0,
            r1122: self.r1122_coeff * f1_0,
            r1212: self.r1212_coeff * f1_0,
            r1222: 0.0,
            r2222: self.r2222_coeff * f1_0 * f1_0,
        }
    }
}

/// A vector attaining the largest sectional curvature at the origin:
/// real components with `g₁₁|v₁|² = g₂₂|v₂|²`, i.e.
/// `(1/√(4pK), 2/√f'(0))`.
pub fn origin_sectional_argmax(params: TubeParams, f1_0: f64) -> Vector {
    [
        Complex64::new(1.0 / (4.0 * params.pk()).sqrt(), 0.0),
        Complex64::new(2.0 / f1_0.sqrt(), 0.0),
    ]
}
