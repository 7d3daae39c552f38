//! The Kähler-Einstein metric `g_{ij̄}` of `T_p` and its complex derivatives.
//!
//! The potential is `g = F∘X + L` with `L = (K/p) log(1/(1 - 4p Re z₁))`.
//! Both `X` and `L` depend only on `(Re z₁, Re z₂)`, so a complex derivative
//! with `a` indices in direction 1 and `b` in direction 2 (holomorphic or
//! not) equals `2^{-(a+b)} ∂^a_{x₁} ∂^b_{x₂}` of the real function. All
//! metric derivatives are therefore real and symmetric in their indices.

use crate::error::Result;
use crate::geometry::{defect, require_domain, x_invariant, Point};
use crate::params::TubeParams;
use crate::potential::PotentialSolution;

pub type Mat2 = [[f64; 2]; 2];
pub type Tensor3 = [[[f64; 2]; 2]; 2];
pub type Tensor4 = [[[[f64; 2]; 2]; 2]; 2];

/// Complex derivatives of `X` and `L` up to total order 4 at one point.
///
/// Indices are 0 for `z₁`/`z̄₁` and 1 for `z₂`/`z̄₂`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OrbitDerivatives {
    /// `x[a][b]`: derivative with `a` indices equal to 0 and `b` equal to 1.
    x: [[f64; 5]; 5],
    /// `l[a]`: derivative of `L` with `a` indices equal to 0 (zero otherwise).
    l: [f64; 5],
    max_order: usize,
}

impl OrbitDerivatives {
    fn counts(idx: &[usize]) -> (usize, usize) {
        let b = idx.iter().filter(|&&i| i == 1).count();
        (idx.len() - b, b)
    }

    /// `X_{idx}`; `idx` of length 0 gives `X` itself.
    pub fn x(&self, idx: &[usize]) -> f64 {
        debug_assert!(idx.len() <= self.max_order);
        let (a, b) = Self::counts(idx);
        self.x[a][b]
    }

    /// `L_{idx}`.
    pub fn l(&self, idx: &[usize]) -> f64 {
        debug_assert!(idx.len() <= self.max_order);
        let (a, b) = Self::counts(idx);
        if b > 0 { 0.0 } else { self.l[a] }
    }
}

/// Closed-form derivative tables of `X = Re z₂ (1 - 4p Re z₁)^{-1/(2p)}` and
/// `L` up to `max_total_order ≤ 4`.
pub fn x_derivatives(params: TubeParams, z: &Point, max_total_order: usize) -> Result<OrbitDerivatives> {
    if max_total_order > 4 {
        return Err(crate::Error::InvalidInput(format!(
            "max_total_order must be <= 4, got {max_total_order}"
        )));
    }
    x_invariant(params, z)?;
    let u = defect(params, z);
    let four_p = 4.0 * params.pf();
    let s = params.inv_2p();
    let r2 = z.z2.re;

    let mut x = [[0.0; 5]; 5];
    let mut l = [0.0; 5];
    // ∂^a (u^{-s}) = s(s+1)...(s+a-1) (4p)^a u^{-s-a}.
    let mut rising = 1.0;
    let mut fact = 1.0;
    for a in 0..=max_total_order {
        if a > 0 {
            rising *= s + (a - 1) as f64;
        }
        let base = rising * four_p.powi(a as i32) * u.powf(-s - a as f64);
        x[a][0] = r2 * base * 0.5f64.powi(a as i32);
        if a < max_total_order {
            x[a][1] = base * 0.5f64.powi(a as i32 + 1);
        }
        l[a] = if a == 0 {
            -params.k() / params.pf() * u.ln()
        } else {
            if a > 1 {
                fact *= (a - 1) as f64;
            }
            params.k() / params.pf() * fact * (four_p / u).powi(a as i32) * 0.5f64.powi(a as i32)
        };
    }
    Ok(OrbitDerivatives { x, l, max_order: max_total_order })
}

/// Metric matrix at a point together with its third and fourth complex
/// derivatives.
#[derive(Debug, Clone, PartialEq)]
pub struct MetricJet {
    pub point: Point,
    pub x_value: f64,
    /// `[f, f', f'', f''']` at `X`.
    pub f_derivs: [f64; 4],
    pub metric: Mat2,
    pub inverse: Mat2,
    pub det: f64,
    /// `d3[i][j][k] = g_{i j̄ k}`.
    pub d3: Tensor3,
    /// `d4[i][j][k][l] = g_{i j̄ k l̄}`.
    pub d4: Tensor4,
}

/// Derivatives of `X` (orders 1 to 4) and `L` (orders 2 to 4) as symmetric
/// multilinear forms.
#[derive(Debug, Clone, Copy, Default)]
struct Forms {
    x1: [f64; 2],
    x2: Mat2,
    x3: Tensor3,
    x4: Tensor4,
    l2: Mat2,
    l3: Tensor3,
    l4: Tensor4,
}

fn indices() -> impl Iterator<Item = [usize; 4]> {
    (0..16).map(|n| [n >> 3 & 1, n >> 2 & 1, n >> 1 & 1, n & 1])
}

impl Forms {
    fn from_tables(od: &OrbitDerivatives) -> Self {
        let mut f = Forms::default();
        for [i, j, k, l] in indices() {
            f.x1[i] = od.x(&[i]);
            f.x2[i][j] = od.x(&[i, j]);
            f.x3[i][j][k] = od.x(&[i, j, k]);
            f.x4[i][j][k][l] = od.x(&[i, j, k, l]);
            f.l2[i][j] = od.l(&[i, j]);
            f.l3[i][j][k] = od.l(&[i, j, k]);
            f.l4[i][j][k][l] = od.l(&[i, j, k, l]);
        }
        f
    }

    /// The same forms evaluated on the columns of `b`.
    fn in_basis(&self, b: &Mat2) -> Self {
        let mut out = Forms::default();
        for [a, c, d, e] in indices() {
            for [i, j, k, l] in indices() {
                let w2 = b[i][a] * b[j][c];
                let w3 = w2 * b[k][d];
                let w4 = w3 * b[l][e];
                out.x4[a][c][d][e] += self.x4[i][j][k][l] * w4;
                out.l4[a][c][d][e] += self.l4[i][j][k][l] * w4;
                // Lower orders: visit each index tuple once.
                if l == 0 && e == 0 {
                    out.x3[a][c][d] += self.x3[i][j][k] * w3;
                    out.l3[a][c][d] += self.l3[i][j][k] * w3;
                    if k == 0 && d == 0 {
                        out.x2[a][c] += self.x2[i][j] * w2;
                        out.l2[a][c] += self.l2[i][j] * w2;
                        if j == 0 && c == 0 {
                            out.x1[a] += self.x1[i] * b[i][a];
                        }
                    }
                }
            }
        }
        out
    }
}

/// Chain rule for `g = F∘X + L` up to order four.
fn assemble(fd: [f64; 4], m: &Forms) -> (Mat2, Tensor3, Tensor4) {
    let [f, f1, f2, f3] = fd;
    let (x1, x2, x3) = (&m.x1, &m.x2, &m.x3);
    let mut metric = [[0.0; 2]; 2];
    let mut d3 = [[[0.0; 2]; 2]; 2];
    let mut d4 = [[[[0.0; 2]; 2]; 2]; 2];
    for [i, j, k, l] in indices() {
        metric[i][j] = f1 * x1[i] * x1[j] + f * x2[i][j] + m.l2[i][j];
        d3[i][j][k] = f2 * x1[i] * x1[j] * x1[k]
            + f1 * (x2[i][j] * x1[k] + x2[i][k] * x1[j] + x2[k][j] * x1[i])
            + f * x3[i][j][k]
            + m.l3[i][j][k];
        let pairs = x2[i][j] * x1[k] * x1[l]
            + x2[i][k] * x1[j] * x1[l]
            + x2[i][l] * x1[j] * x1[k]
            + x2[k][j] * x1[i] * x1[l]
            + x2[k][l] * x1[i] * x1[j]
            + x2[j][l] * x1[i] * x1[k];
        let first = x3[i][j][k] * x1[l]
            + x3[i][j][l] * x1[k]
            + x3[i][k][l] * x1[j]
            + x3[j][k][l] * x1[i]
            + x2[i][j] * x2[k][l]
            + x2[i][k] * x2[j][l]
            + x2[i][l] * x2[k][j];
        d4[i][j][k][l] =
            f3 * x1[i] * x1[j] * x1[k] * x1[l] + f2 * pairs + f1 * first + f * m.x4[i][j][k][l] + m.l4[i][j][k][l];
    }
    (metric, d3, d4)
}

fn jet_from_forms(sol: &PotentialSolution, z: &Point, forms: &Forms, xv: f64, basis_det: f64) -> Result<MetricJet> {
    let params = sol.params();
    let d = sol.eval_f_derivs(xv, 3)?;
    let f_derivs = [d[0], d[1], d[2], d[3]];
    let (metric, d3, d4) = assemble(f_derivs, forms);
    // det = Z(X) / (1 - 4p Re z₁)^{3K/p}; avoids the cancellation in
    // g₁₁g₂₂ - g₁₂² near |X| = 1.
    let z_val = sol.eval_z(xv, 0)?[0];
    let det = z_val / defect(params, z).powf(3.0 * params.k() / params.pf()) * basis_det * basis_det;
    let inverse = [[metric[1][1] / det, -metric[0][1] / det], [-metric[1][0] / det, metric[0][0] / det]];
    Ok(MetricJet { point: *z, x_value: xv, f_derivs, metric, inverse, det, d3, d4 })
}

/// Evaluates the metric jet at `z ∈ T_p` from closed-form chain-rule
/// expansions of `g = F∘X + L`.
pub fn metric_jet(sol: &PotentialSolution, z: &Point) -> Result<MetricJet> {
    require_domain(sol.params(), z)?;
    let od = x_derivatives(sol.params(), z, 4)?;
    jet_from_forms(sol, z, &Forms::from_tables(&od), od.x(&[]), 1.0)
}

/// Real basis `(∂/∂z₂, X₂ ∂/∂z₁ - X₁ ∂/∂z₂)` as matrix columns. `X` is
/// constant to first order along the second vector, so the large `f'`,
/// `f''`, `f'''` terms stay out of its transverse entries.
pub fn adapted_basis(params: TubeParams, z: &Point) -> Result<Mat2> {
    let od = x_derivatives(params, z, 1)?;
    let (x1, x2) = (od.x(&[0]), od.x(&[1]));
    Ok([[0.0, x2], [1.0, -x1]])
}

/// Metric jet with every index taken along the columns of `basis`, e.g.
/// `g_{ab̄} = Σ g_{ij̄} b_{ia} b_{jb}`.
pub fn metric_jet_in_basis(sol: &PotentialSolution, z: &Point, basis: &Mat2) -> Result<MetricJet> {
    require_domain(sol.params(), z)?;
    let bdet = basis[0][0] * basis[1][1] - basis[0][1] * basis[1][0];
    if !(bdet.abs() > 0.0) {
        return Err(crate::Error::InvalidInput("basis is singular".into()));
    }
    let od = x_derivatives(sol.params(), z, 4)?;
    let forms = Forms::from_tables(&od).in_basis(basis);
    jet_from_forms(sol, z, &forms, od.x(&[]), bdet)
}

/// Metric matrix from its explicit closed form in `X`, `f`, `f'` and
/// `1 - 4p Re z₁`, independent of the derivative tables.
pub fn metric_closed_form(sol: &PotentialSolution, z: &Point) -> Result<Mat2> {
    let params = sol.params();
    require_domain(params, z)?;
    let xv = x_invariant(params, z)?;
    let u = defect(params, z);
    let fd = sol.eval_f_derivs(xv, 1)?;
    let (f, f1) = (fd[0], fd[1]);
    let pf = params.pf();
    let g11 = (xv * xv * f1 + (2.0 * pf + 1.0) * xv * f + 4.0 * params.pk()) / (u * u);
    let g12 = (xv * f1 + f) / (2.0 * u.powf(1.0 + 0.5 / pf));
    let g22 = f1 / (4.0 * u.powf(1.0 / pf));
    Ok([[g11, g12], [g12, g22]])
}

/// Potential `g(z) = F(X(z)) + (K/p) log(1/(1 - 4p Re z₁))`.
pub fn potential_value(sol: &PotentialSolution, z: &Point) -> Result<f64> {
    let params = sol.params();
    require_domain(params, z)?;
    let xv = x_invariant(params, z)?;
    Ok(sol.eval_big_f(xv)? - params.k() / params.pf() * defect(params, z).ln())
}

/// `|det g - e^{3g}| / e^{3g}` with `det g` from the matrix entries.
pub fn einstein_residual(sol: &PotentialSolution, z: &Point) -> Result<f64> {
    let m = metric_jet(sol, z)?.metric;
    let det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
    let target = (3.0 * potential_value(sol, z)?).exp();
    Ok((det - target).abs() / target)
}

impl MetricJet {
    /// `metric · inverse - I`, largest entry.
    pub fn inverse_defect(&self) -> f64 {
        let mut worst = 0.0f64;
        for i in 0..2 {
            for j in 0..2 {
                let v: f64 = (0..2).map(|k| self.metric[i][k] * self.inverse[k][j]).sum();
                worst = worst.max((v - if i == j { 1.0 } else { 0.0 }).abs());
            }
        }
        worst
    }

    pub fn is_positive_definite(&self) -> bool {
        self.metric[0][0] > 0.0 && self.metric[1][1] > 0.0 && self.det > 0.0
    }
}
