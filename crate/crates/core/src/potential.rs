//! Axis potential `F(x) = g(0, x)` of the Kähler-Einstein metric.
//!
//! `F` is even and strictly convex on `(-1, 1)` and blows up at `x = ±1`.
//! With `f = F'` the Monge–Ampère equation restricted to the axis reads
//! `Z = e^{3F}`, where
//!
//! ```text
//! Z(x) = [ f'(x) ((2p-1) x f(x) + 4pK) - f(x)² ] / 4,
//! ```
//!
//! which we solve for `f'` and integrate as a first-order system in `(F, f)`
//! from `x = 0` with `f(0) = 0`. The free value `F(0)` is found by bisection
//! so that the solution blows up exactly at `x = 1`.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ode::{self, Flow, StepControl};
use crate::params::TubeParams;

/// Integration stops (no blow-up) once `x` passes this abscissa.
const X_CAP: f64 = 3.0;
/// Largest step in the smooth interior; keeps the dense output accurate.
const H_MAX: f64 = 0.01;
/// Accepted mismatch between stored nodes and re-integration between them.
const TRANSFER_TOL: f64 = 1e-6;
/// Slack allowed in the runtime monotonicity check of the blow-up map.
const MONOTONE_SLACK: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ShootingConfig {
    /// Value of `f` treated as blow-up.
    pub f_blowup_threshold: f64,
    /// Initial bracket for `F(0)`; widened geometrically if it does not
    /// straddle the root.
    pub c0_bracket: (f64, f64),
    /// Final width of the `F(0)` bracket.
    pub c0_tolerance: f64,
    /// Relative local error tolerance of the integrator.
    pub step_tolerance: f64,
    pub max_steps: usize,
    /// Number of geometric widenings tried before giving up on the bracket.
    pub max_bracket_widenings: usize,
}

impl Default for ShootingConfig {
    fn default() -> Self {
        Self {
            f_blowup_threshold: 1e8,
            c0_bracket: (-5.0, 5.0),
            c0_tolerance: 1e-12,
            step_tolerance: 1e-12,
            max_steps: 200_000,
            max_bracket_widenings: 6,
        }
    }
}

impl ShootingConfig {
    pub fn validate(&self) -> Result<()> {
        let (lo, hi) = self.c0_bracket;
        if !(lo.is_finite() && hi.is_finite() && lo < hi) {
            return Err(Error::InvalidInput(format!("bracket [{lo}, {hi}] must satisfy lo < hi")));
        }
        for (name, v) in [
            ("f_blowup_threshold", self.f_blowup_threshold),
            ("c0_tolerance", self.c0_tolerance),
            ("step_tolerance", self.step_tolerance),
        ] {
            if !(v.is_finite() && v > 0.0) {
                return Err(Error::InvalidInput(format!("{name} must be positive, got {v}")));
            }
        }
        if self.max_steps == 0 {
            return Err(Error::InvalidInput("max_steps must be positive".into()));
        }
        Ok(())
    }

    fn step_control(&self) -> StepControl {
        StepControl {
            rtol: self.step_tolerance,
            atol: self.step_tolerance * 1e-2,
            max_steps: self.max_steps,
            h_max: H_MAX,
        }
    }
}

/// One stored sample of the axis solution.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Node {
    pub x: f64,
    #[serde(rename = "F")]
    pub big_f: f64,
    pub f: f64,
}

fn check_finite(x: f64, big_f: f64, f: f64) -> Result<()> {
    if x.is_finite() && big_f.is_finite() && f.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidInput(format!("non-finite state (x={x}, F={big_f}, f={f})")))
    }
}

/// Right-hand side of the axis system: `(F', f')` with
/// `f' = (4e^{3F} + f²) / ((2p-1) x f + 4pK)`.
pub fn ode_rhs(x: f64, big_f: f64, f: f64, params: TubeParams) -> Result<(f64, f64)> {
    check_finite(x, big_f, f)?;
    let denom = (2.0 * params.pf() - 1.0) * x * f + 4.0 * params.pk();
    if denom <= 0.0 {
        return Err(Error::Domain(format!("(2p-1)xf + 4pK = {denom} <= 0 at x = {x}")));
    }
    let df = (4.0 * (3.0 * big_f).exp() + f * f) / denom;
    if !df.is_finite() {
        return Err(Error::InvalidInput(format!("f' overflows at x = {x}")));
    }
    Ok((f, df))
}

fn rhs_unchecked(params: TubeParams) -> impl Fn(f64, &[f64; 2]) -> [f64; 2] {
    let a = 2.0 * params.pf() - 1.0;
    let b = 4.0 * params.pk();
    move |x, y| {
        let f = y[1];
        [f, (4.0 * (3.0 * y[0]).exp() + f * f) / (a * x * f + b)]
    }
}

/// `[f, f', f'', f''']` at `x ≥ 0` from `(F, f)`, differentiating
/// `f' D = N` with `N = 4e^{3F} + f²`, `D = (2p-1) x f + 4pK`.
pub(crate) fn analytic_derivs(params: TubeParams, x: f64, big_f: f64, f: f64) -> [f64; 4] {
    let a = 2.0 * params.pf() - 1.0;
    let e = (3.0 * big_f).exp();
    let d = a * x * f + 4.0 * params.pk();
    let f1 = (4.0 * e + f * f) / d;
    let n1 = 12.0 * f * e + 2.0 * f * f1;
    let d1 = a * (f + x * f1);
    let f2 = (n1 - f1 * d1) / d;
    let n2 = 12.0 * f1 * e + 36.0 * f * f * e + 2.0 * f1 * f1 + 2.0 * f * f2;
    let d2 = a * (2.0 * f1 + x * f2);
    let f3 = (n2 - 2.0 * f2 * d1 - f1 * d2) / d;
    [f, f1, f2, f3]
}

/// Estimated location of the singularity for the initial value `F(0) = c`,
/// or `None` if `f` stays below the threshold up to `x = 3`.
///
/// At the first node with `f ≥ threshold` the estimate is `x + 1/f`, using
/// `f(x)(x* - x) → 1`.
pub fn blowup_location(params: TubeParams, c0: f64, config: &ShootingConfig) -> Result<Option<f64>> {
    let mut hit = None;
    integrate_axis(params, c0, config, |x, y| {
        if y[1] >= config.f_blowup_threshold {
            hit = Some(x + 1.0 / y[1]);
            Flow::Stop
        } else {
            Flow::Continue
        }
    })?;
    Ok(hit)
}

fn integrate_axis<O>(params: TubeParams, c0: f64, config: &ShootingConfig, mut observer: O) -> Result<usize>
where
    O: FnMut(f64, &[f64; 2]) -> Flow,
{
    check_finite(0.0, c0, 0.0)?;
    ode::integrate(
        rhs_unchecked(params),
        0.0,
        [c0, 0.0],
        X_CAP,
        config.step_control(),
        |x, y, _| observer(x, y),
    )
}

fn later(a: Option<f64>, b: Option<f64>) -> bool {
    // `None` means "beyond the cap", i.e. later than everything.
    match (a, b) {
        (None, _) => true,
        (Some(_), None) => false,
        (Some(a), Some(b)) => a >= b - MONOTONE_SLACK,
    }
}

fn beyond_one(b: Option<f64>) -> bool {
    b.map_or(true, |b| b > 1.0)
}

/// Shoots on `F(0)` until the axis solution blows up at `x = 1`.
pub fn solve_potential(params: TubeParams, config: &ShootingConfig) -> Result<PotentialSolution> {
    config.validate()?;
    let (mut lo, mut hi) = config.c0_bracket;
    let mut b_lo = blowup_location(params, lo, config)?;
    let mut b_hi = blowup_location(params, hi, config)?;

    let mut width = hi - lo;
    for _ in 0..config.max_bracket_widenings {
        if beyond_one(b_lo) && !beyond_one(b_hi) {
            break;
        }
        if !beyond_one(b_lo) {
            lo -= width;
            b_lo = blowup_location(params, lo, config)?;
        }
        if beyond_one(b_hi) {
            hi += width;
            b_hi = blowup_location(params, hi, config)?;
        }
        width *= 2.0;
    }
    if !(beyond_one(b_lo) && !beyond_one(b_hi)) {
        return Err(Error::BracketNotStraddling { lo, hi, lo_blowup: b_lo, hi_blowup: b_hi });
    }

    while hi - lo > config.c0_tolerance {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let b = blowup_location(params, mid, config)?;
        if !(later(b_lo, b) && later(b, b_hi)) {
            return Err(Error::NonMonotone(format!(
                "F(0) = {lo}, {mid}, {hi} blow up at {b_lo:?}, {b:?}, {b_hi:?}"
            )));
        }
        if beyond_one(b) {
            lo = mid;
            b_lo = b;
        } else {
            hi = mid;
            b_hi = b;
        }
    }

    let c0 = 0.5 * (lo + hi);
    let mut nodes = Vec::new();
    let mut blowup_x = None;
    integrate_axis(params, c0, config, |x, y| {
        if x < 1.0 {
            nodes.push(Node { x, big_f: y[0], f: y[1] });
        }
        if y[1] >= config.f_blowup_threshold {
            blowup_x = Some(x + 1.0 / y[1]);
            Flow::Stop
        } else {
            Flow::Continue
        }
    })?;
    let blowup_x = blowup_x.ok_or_else(|| {
        Error::NonMonotone(format!("final F(0) = {c0} does not blow up before x = {X_CAP}"))
    })?;

    PotentialSolution::from_parts(params, c0, hi - lo, blowup_x, nodes)
}

/// The solved axis potential with dense output.
///
/// Immutable after construction; evaluation is thread-safe.
#[derive(Debug, Clone)]
pub struct PotentialSolution {
    params: TubeParams,
    f0: f64,
    tolerance: f64,
    blowup_x: f64,
    nodes: Vec<Node>,
    /// `(f', f'')` at each node; used as Hermite slopes.
    slopes: Vec<[f64; 2]>,
}

#[derive(Serialize, Deserialize)]
struct CacheFile {
    p: u32,
    #[serde(rename = "K")]
    k: String,
    #[serde(rename = "F0")]
    f0: f64,
    tolerance: f64,
    blowup_x: f64,
    nodes: Vec<Node>,
}

impl PotentialSolution {
    fn from_parts(
        params: TubeParams,
        f0: f64,
        tolerance: f64,
        blowup_x: f64,
        nodes: Vec<Node>,
    ) -> Result<Self> {
        let slopes = nodes
            .iter()
            .map(|n| {
                let d = analytic_derivs(params, n.x, n.big_f, n.f);
                [d[1], d[2]]
            })
            .collect();
        let sol = Self { params, f0, tolerance, blowup_x, nodes, slopes };
        sol.validate()?;
        Ok(sol)
    }

    pub fn params(&self) -> TubeParams {
        self.params
    }

    /// `F(0)`.
    pub fn f0(&self) -> f64 {
        self.f0
    }

    /// Width of the final `F(0)` bracket.
    pub fn tolerance(&self) -> f64 {
        self.tolerance
    }

    /// Estimated singularity of the final trajectory.
    pub fn blowup_x(&self) -> f64 {
        self.blowup_x
    }

    pub fn nodes(&self) -> &[Node] {
        &self.nodes
    }

    /// Largest `|x|` at which the dense output is available.
    pub fn x_max(&self) -> f64 {
        self.nodes.last().map_or(0.0, |n| n.x)
    }

    fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidCache(m));
        let Some(first) = self.nodes.first() else {
            return bad("no nodes".into());
        };
        if first.x != 0.0 || first.f != 0.0 {
            return bad(format!("first node must be x = 0 with f = 0, got {first:?}"));
        }
        if first.big_f != self.f0 {
            return bad(format!("F0 = {} disagrees with node F(0) = {}", self.f0, first.big_f));
        }
        if !(self.tolerance.is_finite() && self.tolerance > 0.0) {
            return bad(format!("tolerance must be positive, got {}", self.tolerance));
        }
        let window = 10.0 * self.tolerance.sqrt();
        if !((self.blowup_x - 1.0).abs() <= window) {
            return bad(format!("blow-up at {} is not within {window} of 1", self.blowup_x));
        }
        for n in &self.nodes {
            if check_finite(n.x, n.big_f, n.f).is_err() || !(0.0..1.0).contains(&n.x) {
                return bad(format!("invalid node {n:?}"));
            }
        }
        for w in self.nodes.windows(2) {
            if !(w[1].x > w[0].x) {
                return bad(format!("nodes not strictly increasing at x = {}", w[1].x));
            }
            if !(w[1].f > w[0].f) {
                return bad(format!("f not strictly increasing at x = {}", w[1].x));
            }
        }
        let worst = self.max_z_residual();
        if !(worst <= 1e-8) {
            return bad(format!("Z residual {worst:e} exceeds 1e-8"));
        }
        // Z is consistent at every node by construction; re-integrating
        // between neighbours is what detects a corrupted node.
        let transfer = self.max_transfer_residual().map_err(|e| Error::InvalidCache(e.to_string()))?;
        if !(transfer <= TRANSFER_TOL) {
            return bad(format!("node-to-node integration mismatch {transfer:e} exceeds {TRANSFER_TOL:e}"));
        }
        Ok(())
    }

    /// Largest `|Z - e^{3F}| / e^{3F}` over the stored nodes, with `Z` from
    /// its defining formula.
    pub fn max_z_residual(&self) -> f64 {
        self.nodes
            .iter()
            .zip(&self.slopes)
            .map(|(n, s)| {
                let e = (3.0 * n.big_f).exp();
                (z_from_definition(self.params, n.x, n.f, s[0]) - e).abs() / e
            })
            .fold(0.0, f64::max)
    }

    /// Largest relative mismatch between consecutive nodes and a fresh
    /// high-accuracy integration between them.
    pub fn max_transfer_residual(&self) -> Result<f64> {
        let control = StepControl { rtol: 1e-13, atol: 1e-15, max_steps: 10_000, h_max: H_MAX };
        let mut worst = 0.0f64;
        for w in self.nodes.windows(2) {
            let mut end = [0.0; 2];
            ode::integrate(
                rhs_unchecked(self.params),
                w[0].x,
                [w[0].big_f, w[0].f],
                w[1].x,
                control,
                |_, y, _| {
                    end = *y;
                    Flow::Continue
                },
            )?;
            let e_big = (end[0] - w[1].big_f).abs() / w[1].big_f.abs().max(1.0);
            let e_small = (end[1] - w[1].f).abs() / w[1].f.abs().max(1.0);
            worst = worst.max(e_big).max(e_small);
        }
        Ok(worst)
    }

    fn locate(&self, x: f64) -> Result<(f64, f64)> {
        if !x.is_finite() || x.abs() >= 1.0 {
            return Err(Error::Domain(format!("|x| must be < 1, got {x}")));
        }
        let ax = x.abs();
        let last = self.x_max();
        if ax > last {
            return Err(Error::Domain(format!("|x| = {ax} beyond the resolved range {last}")));
        }
        let i = self.nodes.partition_point(|n| n.x <= ax).saturating_sub(1);
        let a = &self.nodes[i];
        if ax == a.x || i + 1 == self.nodes.len() {
            return Ok((a.big_f, a.f));
        }
        let b = &self.nodes[i + 1];
        let (sa, sb) = (&self.slopes[i], &self.slopes[i + 1]);
        let h = b.x - a.x;
        let t = (ax - a.x) / h;
        let big_f = quintic_hermite(t, h, [a.big_f, a.f, sa[0]], [b.big_f, b.f, sb[0]]);
        let f = quintic_hermite(t, h, [a.f, sa[0], sa[1]], [b.f, sb[0], sb[1]]);
        Ok((big_f, f))
    }

    /// `F(x)` for `|x|` within the resolved range (`F` is even).
    pub fn eval_big_f(&self, x: f64) -> Result<f64> {
        self.locate(x).map(|(big_f, _)| big_f)
    }

    /// `[f, f', f'', f''']` truncated to `max_order + 1` entries.
    ///
    /// Only `F` and `f` come from the interpolant; higher derivatives are
    /// recomputed from the ODE. Parity: `f`, `f''` odd; `f'`, `f'''` even.
    pub fn eval_f_derivs(&self, x: f64, max_order: usize) -> Result<Vec<f64>> {
        if max_order > 3 {
            return Err(Error::InvalidInput(format!("max_order must be <= 3, got {max_order}")));
        }
        let (big_f, f) = self.locate(x)?;
        let mut d = analytic_derivs(self.params, x.abs(), big_f, f);
        if x < 0.0 {
            d[0] = -d[0];
            d[2] = -d[2];
        }
        Ok(d[..=max_order].to_vec())
    }

    /// `[Z, Z', Z'']` truncated to `max_order + 1` entries, with
    /// `Z' = 3 f Z` and `Z'' = 3 (f' Z + f Z')`.
    pub fn eval_z(&self, x: f64, max_order: usize) -> Result<Vec<f64>> {
        if max_order > 2 {
            return Err(Error::InvalidInput(format!("max_order must be <= 2, got {max_order}")));
        }
        let d = self.eval_f_derivs(x, 1)?;
        let z = z_from_definition(self.params, x, d[0], d[1]);
        let z1 = 3.0 * d[0] * z;
        let z2 = 3.0 * (d[1] * z + d[0] * z1);
        Ok([z, z1, z2][..=max_order].to_vec())
    }

    pub fn to_json(&self) -> Result<String> {
        let file = CacheFile {
            p: self.params.p(),
            k: self.params.k_string(),
            f0: self.f0,
            tolerance: self.tolerance,
            blowup_x: self.blowup_x,
            nodes: self.nodes.clone(),
        };
        Ok(serde_json::to_string(&file)?)
    }

    /// Parses and validates a solution cache.
    pub fn from_json(s: &str) -> Result<Self> {
        let file: CacheFile = serde_json::from_str(s)?;
        let params = TubeParams::new(file.p).map_err(|e| Error::InvalidCache(e.to_string()))?;
        if !params.k_matches(&file.k) {
            return Err(Error::InvalidCache(format!("K = {} does not match p = {}", file.k, file.p)));
        }
        Self::from_parts(params, file.f0, file.tolerance, file.blowup_x, file.nodes)
    }

    pub fn save(&self, path: impl AsRef<Path>) -> Result<()> {
        fs::write(path, self.to_json()?)?;
        Ok(())
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        Self::from_json(&fs::read_to_string(path)?)
    }
}

/// `Z = [f' ((2p-1) x f + 4pK) - f²] / 4`.
pub fn z_from_definition(params: TubeParams, x: f64, f: f64, f1: f64) -> f64 {
    (f1 * ((2.0 * params.pf() - 1.0) * x * f + 4.0 * params.pk()) - f * f) / 4.0
}

/// Quintic Hermite interpolant on `[0, 1]` scaled to an interval of width
/// `h`, from value, first and second derivative at both ends.
fn quintic_hermite(t: f64, h: f64, a: [f64; 3], b: [f64; 3]) -> f64 {
    let t2 = t * t;
    let t3 = t2 * t;
    let t4 = t3 * t;
    let t5 = t4 * t;
    let h00 = 1.0 - 10.0 * t3 + 15.0 * t4 - 6.0 * t5;
    let h10 = t - 6.0 * t3 + 8.0 * t4 - 3.0 * t5;
    let h20 = 0.5 * (t2 - 3.0 * t3 + 3.0 * t4 - t5);
    let h01 = 10.0 * t3 - 15.0 * t4 + 6.0 * t5;
    let h11 = -4.0 * t3 + 7.0 * t4 - 3.0 * t5;
    let h21 = 0.5 * (t3 - 2.0 * t4 + t5);
    a[0] * h00 + h * a[1] * h10 + h * h * a[2] * h20 + b[0] * h01 + h * b[1] * h11 + h * h * b[2] * h21
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: u32) -> TubeParams {
        TubeParams::new(n).unwrap()
    }

    #[test]
    fn rhs_at_origin() {
        let (df_big, df) = ode_rhs(0.0, 2f64.ln() / 3.0, 0.0, p(1)).unwrap();
        assert_eq!(df_big, 0.0);
        assert!((df - 2.0).abs() < 1e-14);

        let c = 0.37;
        let (_, df) = ode_rhs(0.0, c, 0.0, p(2)).unwrap();
        assert!((df - 0.3 * (3.0 * c).exp()).abs() < 1e-14);
    }

    #[test]
    fn rhs_matches_closed_form_for_ball() {
        // p = 1: F = ln2/3 - ln(1-x²), f = 2x/(1-x²), f' = 2(1+x²)/(1-x²)².
        let x: f64 = 0.5;
        let big_f = 2f64.ln() / 3.0 - (1.0 - x * x).ln();
        let f = 2.0 * x / (1.0 - x * x);
        let (_, df) = ode_rhs(x, big_f, f, p(1)).unwrap();
        assert!((df - 2.0 * 1.25 / 0.5625).abs() < 1e-13);
    }

    #[test]
    fn rhs_rejects_non_finite() {
        assert!(matches!(ode_rhs(f64::NAN, 0.0, 0.0, p(1)), Err(Error::InvalidInput(_))));
        assert!(matches!(ode_rhs(0.0, f64::INFINITY, 0.0, p(1)), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn analytic_derivs_at_origin_for_ball() {
        let d = analytic_derivs(p(1), 0.0, 2f64.ln() / 3.0, 0.0);
        assert!((d[1] - 2.0).abs() < 1e-14);
        assert_eq!(d[2], 0.0);
        assert!((d[3] - 12.0).abs() < 1e-13);
    }

    #[test]
    fn analytic_derivs_match_ball_closed_form() {
        // f = 2x/(1-x²) = 1/(1-x) - 1/(1+x).
        for &x in &[0.1, 0.5, 0.9, 0.999] {
            let big_f = 2f64.ln() / 3.0 - (1.0f64 - x * x).ln();
            let f = 2.0 * x / (1.0 - x * x);
            let d = analytic_derivs(p(1), x, big_f, f);
            let (a, b) = (1.0 - x, 1.0 + x);
            let exact = [f, 1.0 / (a * a) + 1.0 / (b * b), 2.0 / a.powi(3) - 2.0 / b.powi(3), 6.0 / a.powi(4) + 6.0 / b.powi(4)];
            for k in 0..4 {
                assert!((d[k] - exact[k]).abs() <= 1e-10 * exact[k].abs().max(1.0), "x={x} k={k}");
            }
        }
    }

    #[test]
    fn quintic_reproduces_polynomials() {
        // y = 1 + 2t - t³ + 0.5 t⁵ on [0, h] with h = 0.3.
        let h = 0.3;
        let y = |s: f64| 1.0 + 2.0 * s - s.powi(3) + 0.5 * s.powi(5);
        let dy = |s: f64| 2.0 - 3.0 * s * s + 2.5 * s.powi(4);
        let ddy = |s: f64| -6.0 * s + 10.0 * s.powi(3);
        for i in 0..=10 {
            let t = i as f64 / 10.0;
            let v = quintic_hermite(t, h, [y(0.0), dy(0.0), ddy(0.0)], [y(h), dy(h), ddy(h)]);
            assert!((v - y(t * h)).abs() < 1e-14);
        }
    }

    #[test]
    fn config_validation() {
        let mut c = ShootingConfig::default();
        assert!(c.validate().is_ok());
        c.c0_bracket = (1.0, -1.0);
        assert!(c.validate().is_err());
        c = ShootingConfig { c0_tolerance: 0.0, ..Default::default() };
        assert!(c.validate().is_err());
    }

    #[test]
    fn non_straddling_bracket_reports_blowups() {
        let c = ShootingConfig { c0_bracket: (1.0, 2.0), max_bracket_widenings: 0, ..Default::default() };
        match solve_potential(p(1), &c) {
            Err(Error::BracketNotStraddling { lo_blowup: Some(a), hi_blowup: Some(b), .. }) => {
                assert!(a < 1.0 && b < a);
            }
            other => panic!("unexpected {other:?}"),
        }
        // Widening rescues the same bracket.
        let c = ShootingConfig { c0_bracket: (1.0, 2.0), ..Default::default() };
        assert!((solve_potential(p(1), &c).unwrap().f0() - 2f64.ln() / 3.0).abs() < 1e-6);
    }

    #[test]
    fn tiny_step_budget_fails() {
        let c = ShootingConfig { max_steps: 10, ..Default::default() };
        assert!(matches!(solve_potential(p(1), &c), Err(Error::MaxStepsExceeded(10))));
    }
}
