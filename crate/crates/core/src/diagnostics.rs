//! Verification suites that turn the analytic properties of the metric into
//! deterministic pass/fail checks.
//!
//! Every suite draws its random samples from a ChaCha stream seeded with the
//! report's `seed`, so reports are reproducible.

use std::f64::consts::{FRAC_PI_2, TAU};
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use serde::Serialize;

use crate::curvature::{
    bis_extremes, origin_closed_forms, origin_sectional_argmax, CurvatureAt, TangentPair, Vector,
};
use crate::error::{Error, Result};
use crate::geometry::{cone_inner_radius, in_cone, normalizing_automorphism, region, Point, RegionClass};
use crate::metric::{einstein_residual, metric_jet};
use crate::params::TubeParams;
use crate::potential::PotentialSolution;
use crate::search::{nelder_mead, SearchConfig};

pub const DEFAULT_SEED: u64 = 0;

/// Random pairs drawn for origin pinching and sectional sampling.
pub const ORIGIN_SAMPLES: usize = 10_000;
/// Random `(z, v, w)` triples for the invariance suite.
pub const INVARIANCE_SAMPLES: usize = 100;
/// Random points for the Einstein residual.
pub const EINSTEIN_SAMPLES: usize = 100;
/// Random unit pairs per axis point in the boundary-limit suite.
pub const BOUNDARY_SAMPLES: usize = 1_000;
/// Random points per approach region.
pub const REGION_SAMPLES: usize = 12;

/// Region threshold `α` used by the regions suite.
pub const REGION_ALPHA: f64 = 0.25;
/// Pinching window asserted for the inner and outer regions.
pub const PINCH_LOWER: f64 = -5.0;
pub const PINCH_UPPER: f64 = -0.1;

/// Boundary-limit gaps below this are solver noise. For `p = 1` the metric
/// has constant holomorphic sectional curvature and the gap vanishes
/// identically.
pub const GAP_NOISE_FLOOR: f64 = 1e-8;

/// Axis point used for asymptotic laws.
pub const ASYMPTOTIC_X: f64 = 1.0 - 1e-4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Suite {
    Asymptotics,
    Origin,
    Invariance,
    Einstein,
    BoundaryLimit,
    Regions,
    All,
}

impl Suite {
    pub const INDIVIDUAL: [Suite; 6] =
        [Suite::Asymptotics, Suite::Origin, Suite::Invariance, Suite::Einstein, Suite::BoundaryLimit, Suite::Regions];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Asymptotics => "asymptotics",
            Suite::Origin => "origin",
            Suite::Invariance => "invariance",
            Suite::Einstein => "einstein",
            Suite::BoundaryLimit => "boundary_limit",
            Suite::Regions => "regions",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::INDIVIDUAL
            .into_iter()
            .chain([Suite::All])
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::UnknownSuite(s.to_string()))
    }
}

/// How `observed` is compared with `expected`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Relation {
    /// `|observed - expected| ≤ tolerance`.
    Abs,
    /// `|observed - expected| ≤ tolerance · |expected|`.
    Rel,
    /// `observed ≤ expected + tolerance`.
    AtMost,
    /// `observed ≥ expected - tolerance`.
    AtLeast,
    /// `observed < expected`, or both at most `tolerance` (a noise floor
    /// under which two values are indistinguishable from zero).
    Decreases,
    /// Informational; always passes.
    Report,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub expected: f64,
    pub observed: f64,
    pub tolerance: f64,
    pub relation: Relation,
    /// Number of random samples behind `observed`, if any.
    pub samples: Option<usize>,
    pub pass: bool,
}

impl Check {
    pub fn new(name: impl Into<String>, relation: Relation, expected: f64, observed: f64, tolerance: f64) -> Self {
        let err = (observed - expected).abs();
        let pass = match relation {
            Relation::Abs => err <= tolerance,
            Relation::Rel => err <= tolerance * expected.abs(),
            Relation::AtMost => observed <= expected + tolerance,
            Relation::AtLeast => observed >= expected - tolerance,
            Relation::Decreases => observed < expected || (observed <= tolerance && expected <= tolerance),
            Relation::Report => true,
        };
        Self { name: name.into(), expected, observed, tolerance, relation, samples: None, pass }
    }

    fn sampled(mut self, n: usize) -> Self {
        self.samples = Some(n);
        self
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteReport {
    pub suite_name: String,
    pub p: u32,
    pub seed: u64,
    pub checks: Vec<Check>,
    pub overall: bool,
}

impl SuiteReport {
    fn new(suite: Suite, p: u32, seed: u64, checks: Vec<Check>) -> Self {
        let overall = checks.iter().all(|c| c.pass);
        Self { suite_name: suite.name().to_string(), p, seed, checks, overall }
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "suite {} (p = {}, seed = {})", self.suite_name, self.p, self.seed)?;
        for c in &self.checks {
            writeln!(
                f,
                "  [{}] {:<40} observed {:>+.10e}  expected {:>+.10e}  tol {}",
                if c.pass { "pass" } else { "FAIL" },
                c.name,
                c.observed,
                c.expected,
                if c.relation == Relation::Report { "-".to_string() } else { format!("{:.1e}", c.tolerance) }
            )?;
        }
        write!(f, "overall: {}", if self.overall { "pass" } else { "FAIL" })
    }
}

/// Runs one suite (or all of them, with check names prefixed by the suite).
pub fn run_suite(suite: Suite, sol: &PotentialSolution, seed: u64) -> Result<SuiteReport> {
    let p = sol.params().p();
    let checks = match suite {
        Suite::Asymptotics => asymptotics(sol)?,
        Suite::Origin => origin(sol, seed)?,
        Suite::Invariance => invariance(sol, seed)?,
        Suite::Einstein => einstein(sol, seed)?,
        Suite::BoundaryLimit => boundary_limit(sol, seed)?,
        Suite::Regions => regions(sol, seed)?,
        Suite::All => {
            let mut all = Vec::new();
            for s in Suite::INDIVIDUAL {
                for mut c in run_suite(s, sol, seed)?.checks {
                    c.name = format!("{}.{}", s.name(), c.name);
                    all.push(c);
                }
            }
            all
        }
    };
    Ok(SuiteReport::new(suite, p, seed, checks))
}

/// Same as [`run_suite`] with the suite given by name.
pub fn run_suite_named(name: &str, sol: &PotentialSolution, seed: u64) -> Result<SuiteReport> {
    run_suite(name.parse()?, sol, seed)
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Euclidean unit vector with independent complex Gaussian components.
pub fn random_unit_vector<R: Rng>(rng: &mut R) -> Vector {
    loop {
        let c: [f64; 4] = [0; 4].map(|_| rng.sample(StandardNormal));
        let n = c.iter().map(|x| x * x).sum::<f64>().sqrt();
        if n > 1e-12 {
            return [Complex64::new(c[0] / n, c[1] / n), Complex64::new(c[2] / n, c[3] / n)];
        }
    }
}

pub fn random_pair<R: Rng>(rng: &mut R) -> TangentPair {
    TangentPair { v: random_unit_vector(rng), w: random_unit_vector(rng) }
}

/// Random point of `T_p` with `|X| ≤ x_bound`, defect `1 - Re 4p z₁` log-uniform
/// in `[0.05, 5]` and imaginary parts uniform in `[-3, 3]`.
pub fn random_point<R: Rng>(params: TubeParams, rng: &mut R, x_bound: f64) -> Point {
    let x = rng.gen_range(-x_bound..=x_bound);
    let u = rng.gen_range(0.05f64.ln()..5f64.ln()).exp();
    let re1 = (1.0 - u) / (4.0 * params.pf());
    let re2 = x * u.powf(params.inv_2p());
    Point::from_parts(re1, rng.gen_range(-3.0..3.0), re2, rng.gen_range(-3.0..3.0))
}

fn asymptotics(sol: &PotentialSolution) -> Result<Vec<Check>> {
    let params = sol.params();
    let x = ASYMPTOTIC_X;
    let h = 1.0 - x;
    let d = sol.eval_f_derivs(x, 3)?;
    let z = sol.eval_z(x, 0)?[0];
    let z_limit = (2.0 * params.pf() - 1.0) / 4.0;
    let mut checks = vec![
        Check::new("f_unbounded", Relation::AtLeast, 1e3, d[0], 0.0),
        Check::new("f_times_gap", Relation::Abs, 1.0, d[0] * h, 1e-2),
        Check::new("z_times_gap_cubed", Relation::Abs, z_limit, z * h.powi(3), 1e-2 * z_limit),
    ];
    let mut factorial = 1.0;
    for k in 1..=3 {
        factorial *= k as f64;
        let ratio = d[k] * h.powi(k as i32 + 1) / factorial;
        checks.push(Check::new(format!("f{k}_law"), Relation::Abs, 1.0, ratio, 3e-2));
    }
    checks.push(Check::new(
        "big_f_offset",
        Relation::Abs,
        z_limit.ln() / 3.0,
        sol.eval_big_f(x)? + h.ln(),
        1e-3,
    ));
    if params.p() == 1 {
        let exact = |x: f64| 2f64.ln() / 3.0 - (1.0 - x * x).ln();
        checks.push(Check::new("ball_f0", Relation::Abs, exact(0.0), sol.f0(), 1e-6));
        let mut worst = 0.0f64;
        for i in 0..=999 {
            let x = 0.999 * i as f64 / 999.0;
            worst = worst.max((sol.eval_big_f(x)? - exact(x)).abs());
        }
        checks.push(Check::new("ball_big_f_max_error", Relation::AtMost, 0.0, worst, 1e-5).sampled(1000));
    }
    Ok(checks)
}

fn origin(sol: &PotentialSolution, seed: u64) -> Result<Vec<Check>> {
    let params = sol.params();
    let cf = origin_closed_forms(params);
    let f1 = sol.eval_f_derivs(0.0, 1)?[1];
    let at = CurvatureAt::new(sol, &Point::origin())?;
    let expected = cf.tensor(f1);
    let t = &at.tensor;
    let mut checks = vec![
        Check::new("r1111", Relation::Rel, expected.r1111, t.r1111, 1e-8),
        Check::new("r1122", Relation::Rel, expected.r1122, t.r1122, 1e-8),
        Check::new("r2222", Relation::Rel, expected.r2222, t.r2222, 1e-8),
        Check::new("r1112", Relation::Abs, 0.0, t.r1112, 1e-8),
        Check::new("r1222", Relation::Abs, 0.0, t.r1222, 1e-8),
    ];
    // R_{12̄12̄} vanishes for p = 1.
    checks.push(if params.p() == 1 {
        Check::new("r1212", Relation::Abs, 0.0, t.r1212, 1e-8)
    } else {
        Check::new("r1212", Relation::Rel, expected.r1212, t.r1212, 1e-8)
    });

    let e1 = TangentPair::real([1.0, 0.0], [1.0, 0.0])?;
    let e12 = TangentPair::real([1.0, 0.0], [0.0, 1.0])?;
    checks.push(Check::new("bis_e1_e1", Relation::Abs, cf.bis_min, at.bisectional(&e1), 1e-8));
    checks.push(Check::new("bis_e1_e2", Relation::Abs, cf.bis_max, at.bisectional(&e12), 1e-8));

    let ext = bis_extremes(sol, &Point::origin(), &SearchConfig::default())?;
    checks.push(Check::new("bis_min", Relation::Abs, cf.bis_min, ext.min, 1e-6));
    checks.push(Check::new("bis_max", Relation::Abs, cf.bis_max, ext.max, 1e-6));

    let mut rng = rng(seed);
    let (mut lo, mut hi) = (f64::INFINITY, f64::NEG_INFINITY);
    for _ in 0..ORIGIN_SAMPLES {
        let b = at.bisectional(&random_pair(&mut rng));
        lo = lo.min(b);
        hi = hi.max(b);
    }
    checks.push(Check::new("random_bis_lower", Relation::AtLeast, cf.bis_min, lo, 1e-9).sampled(ORIGIN_SAMPLES));
    checks.push(Check::new("random_bis_upper", Relation::AtMost, cf.bis_max, hi, 1e-9).sampled(ORIGIN_SAMPLES));

    let sect = sampled_sectional_max(&at, &mut rng, ORIGIN_SAMPLES)?;
    checks.push(
        Check::new("random_sect_upper", Relation::AtMost, cf.sect_max, sect.raw_max, 1e-9).sampled(ORIGIN_SAMPLES),
    );
    checks.push(
        Check::new("random_sect_max_raw", Relation::Report, cf.sect_max, sect.raw_max, f64::NAN)
            .sampled(ORIGIN_SAMPLES),
    );
    checks.push(
        Check::new("random_sect_max", Relation::Abs, cf.sect_max, sect.polished_max, 1e-4).sampled(ORIGIN_SAMPLES),
    );
    let v = origin_sectional_argmax(params, f1);
    checks.push(Check::new("sect_at_extremal_vector", Relation::Abs, cf.sect_max, at.sectional(&v)?, 1e-6));
    Ok(checks)
}

/// Largest sectional curvature over random unit vectors, raw and after
/// Nelder–Mead polishing of the best samples.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SampledMax {
    pub raw_max: f64,
    pub polished_max: f64,
}

/// Polishing runs over `(θ, φ) ↦ (cos θ, sin θ e^{-iφ})`; by scale and
/// phase invariance this covers every complex line.
pub fn sampled_sectional_max<R: Rng>(at: &CurvatureAt, rng: &mut R, n: usize) -> Result<SampledMax> {
    const POLISH: usize = 5;
    let sect = |q: &[f64; 2]| {
        let v = [Complex64::new(q[0].cos(), 0.0), Complex64::from_polar(q[0].sin(), -q[1])];
        at.bisectional(&TangentPair { v, w: v })
    };
    let mut best: Vec<(f64, [f64; 2])> = Vec::with_capacity(n);
    for _ in 0..n {
        let v = random_unit_vector(rng);
        let q = [v[1].norm().atan2(v[0].norm()), (v[0] * v[1].conj()).arg()];
        best.push((at.sectional(&v)?, q));
    }
    best.sort_by(|a, b| b.0.total_cmp(&a.0));
    let raw_max = best.first().map_or(f64::NEG_INFINITY, |b| b.0);
    let mut polished_max = raw_max;
    for &(_, q) in best.iter().take(POLISH) {
        let (_, v) = nelder_mead(|q| -sect(q), q, 0.05, 2000, 1e-15);
        polished_max = polished_max.max(-v);
    }
    Ok(SampledMax { raw_max, polished_max })
}

fn invariance(sol: &PotentialSolution, seed: u64) -> Result<Vec<Check>> {
    let params = sol.params();
    let mut rng = rng(seed);
    let (mut inv, mut tube, mut scale) = (0.0f64, 0.0f64, 0.0f64);
    for _ in 0..INVARIANCE_SAMPLES {
        let z = random_point(params, &mut rng, 0.99);
        let pair = random_pair(&mut rng);
        let at = CurvatureAt::new(sol, &z)?;
        let here = at.bisectional(&pair);

        let psi = normalizing_automorphism(params, &z)?;
        let axis = CurvatureAt::new(sol, &psi.apply(&z))?;
        let pushed = TangentPair::new(psi.push(pair.v), psi.push(pair.w))?;
        inv = inv.max((here - axis.bisectional(&pushed)).abs() / here.abs());

        tube = tube.max((here - at.bisectional_direct(&pair)).abs());

        let c = Complex64::from_polar(rng.gen_range(0.1..10.0), rng.gen_range(0.0..TAU));
        let d = Complex64::from_polar(rng.gen_range(0.1..10.0), rng.gen_range(0.0..TAU));
        let scaled = TangentPair::new(pair.v.map(|x| x * c), pair.w.map(|x| x * d))?;
        scale = scale.max((here - at.bisectional(&scaled)).abs());
    }
    Ok(vec![
        Check::new("automorphism_rel_error", Relation::AtMost, 0.0, inv, 1e-7).sampled(INVARIANCE_SAMPLES),
        Check::new("tube_vs_direct", Relation::AtMost, 0.0, tube, 1e-10).sampled(INVARIANCE_SAMPLES),
        Check::new("scale_invariance", Relation::AtMost, 0.0, scale, 1e-10).sampled(INVARIANCE_SAMPLES),
    ])
}

fn einstein(sol: &PotentialSolution, seed: u64) -> Result<Vec<Check>> {
    let params = sol.params();
    let mut rng = rng(seed);
    let (mut worst, mut inv_defect) = (0.0f64, 0.0f64);
    for _ in 0..EINSTEIN_SAMPLES {
        let z = random_point(params, &mut rng, 0.99);
        worst = worst.max(einstein_residual(sol, &z)?);
        inv_defect = inv_defect.max(metric_jet(sol, &z)?.inverse_defect());
    }
    Ok(vec![
        Check::new("max_residual", Relation::AtMost, 0.0, worst, 1e-8).sampled(EINSTEIN_SAMPLES),
        Check::new("inverse_defect", Relation::AtMost, 0.0, inv_defect, 1e-8).sampled(EINSTEIN_SAMPLES),
    ])
}

/// `sup` over `n` seeded unit pairs of `|Bis_(0,x)(v, w) - limit(v, w)|`,
/// together with the range of the limit values.
pub fn boundary_gap(sol: &PotentialSolution, x: f64, seed: u64, n: usize) -> Result<(f64, f64, f64)> {
    let at = CurvatureAt::new(sol, &Point::axis(x))?;
    let mut rng = rng(seed);
    let (mut gap, mut lo, mut hi) = (0.0f64, f64::INFINITY, f64::NEG_INFINITY);
    for _ in 0..n {
        let pair = random_pair(&mut rng);
        let limit = at.boundary_limit(&pair);
        gap = gap.max((at.bisectional(&pair) - limit).abs());
        lo = lo.min(limit);
        hi = hi.max(limit);
    }
    Ok((gap, lo, hi))
}

fn boundary_limit(sol: &PotentialSolution, seed: u64) -> Result<Vec<Check>> {
    let n = BOUNDARY_SAMPLES;
    let (e1, lo1, hi1) = boundary_gap(sol, 0.9, seed, n)?;
    let (e2, lo2, hi2) = boundary_gap(sol, 0.99, seed, n)?;
    let (e3, lo3, hi3) = boundary_gap(sol, 0.999, seed, n)?;
    Ok(vec![
        Check::new("gap_0.9", Relation::Report, 0.0, e1, f64::NAN).sampled(n),
        Check::new("gap_0.99_below_gap_0.9", Relation::Decreases, e1, e2, GAP_NOISE_FLOOR).sampled(n),
        Check::new("gap_0.999_below_gap_0.99", Relation::Decreases, e2, e3, GAP_NOISE_FLOOR).sampled(n),
        Check::new("gap_0.999", Relation::AtMost, 0.0, e3, 0.05).sampled(n),
        Check::new("limit_lower", Relation::AtLeast, -2.0, lo1.min(lo2).min(lo3), 1e-12).sampled(3 * n),
        Check::new("limit_upper", Relation::AtMost, -1.0, hi1.max(hi2).max(hi3), 1e-12).sampled(3 * n),
    ])
}

fn regions(sol: &PotentialSolution, seed: u64) -> Result<Vec<Check>> {
    let params = sol.params();
    let alpha = REGION_ALPHA;
    let x_cap = ASYMPTOTIC_X;
    let mut rng = rng(seed);
    let config = SearchConfig::default();
    let mut checks = Vec::new();

    // Ranges stay clear of the class boundaries so that rounding cannot
    // flip the classification.
    let margin = 1e-6;
    let ratio_ranges = [
        ("inner", 0.0, alpha - margin),
        ("outer", 1.0 - alpha + margin, x_cap.powi(2 * params.p() as i32)),
        ("middle", alpha + margin, 1.0 - alpha - margin),
    ];
    for (label, r_lo, r_hi) in ratio_ranges {
        let (mut lo, mut hi) = (f64::INFINITY, f64::NEG_INFINITY);
        let mut classified = true;
        for _ in 0..REGION_SAMPLES {
            let r: f64 = rng.gen_range(r_lo..=r_hi);
            let sign = if rng.gen_bool(0.5) { 1.0 } else { -1.0 };
            let mut z = random_point(params, &mut rng, 0.0);
            z.z2.re = sign * r.powf(params.inv_2p()) * (1.0 - 4.0 * params.pf() * z.z1.re).powf(params.inv_2p());
            classified &= match region(params, &z, alpha)? {
                RegionClass::Inner(_) => label == "inner",
                RegionClass::Outer(_) => label == "outer",
                RegionClass::Middle(_) => label == "middle",
            };
            let ext = bis_extremes(sol, &z, &config)?;
            lo = lo.min(ext.min);
            hi = hi.max(ext.max);
        }
        let n = REGION_SAMPLES;
        checks.push(Check::new(format!("{label}_classified"), Relation::Abs, 1.0, classified as u8 as f64, 0.0).sampled(n));
        if label == "middle" {
            checks.push(Check::new("middle_bis_min", Relation::Report, PINCH_LOWER, lo, f64::NAN).sampled(n));
            checks.push(Check::new("middle_bis_max", Relation::Report, PINCH_UPPER, hi, f64::NAN).sampled(n));
        } else {
            checks.push(Check::new(format!("{label}_bis_min"), Relation::AtLeast, PINCH_LOWER, lo, 0.0).sampled(n));
            checks.push(Check::new(format!("{label}_bis_max"), Relation::AtMost, PINCH_UPPER, hi, 0.0).sampled(n));
        }
    }

    // Non-tangential approach to the weakly pseudoconvex point lands in the
    // inner region once close enough.
    let theta = 0.25 * FRAC_PI_2;
    let radius = cone_inner_radius(params, theta, alpha);
    let mut cone_ok = true;
    let mut tested = 0;
    for _ in 0..10 * REGION_SAMPLES {
        let depth = rng.gen_range(0.0..radius).max(1e-12);
        let dir = random_unit_vector(&mut rng);
        let spread = rng.gen_range(0.0..depth * theta.tan());
        let z1 = Complex64::new(0.25 / params.pf() - depth, spread * dir[0].norm());
        let z2 = Complex64::from_polar(spread * dir[1].norm(), dir[1].arg());
        let z = Point::new(z1, z2);
        if in_cone(params, &z, theta)? {
            tested += 1;
            cone_ok &= matches!(region(params, &z, alpha)?, RegionClass::Inner(_));
        }
    }
    checks.push(Check::new("cone_inside_inner_region", Relation::Abs, 1.0, cone_ok as u8 as f64, 0.0).sampled(tested));
    Ok(checks)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::INDIVIDUAL.into_iter().chain([Suite::All]) {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!(matches!("bogus".parse::<Suite>(), Err(Error::UnknownSuite(_))));
    }

    #[test]
    fn relations() {
        assert!(Check::new("a", Relation::Abs, 1.0, 1.05, 0.1).pass);
        assert!(!Check::new("a", Relation::Abs, 1.0, 1.2, 0.1).pass);
        assert!(Check::new("r", Relation::Rel, -10.0, -10.5, 0.1).pass);
        assert!(!Check::new("m", Relation::AtMost, -1.0, -0.9, 0.01).pass);
        assert!(Check::new("l", Relation::AtLeast, -2.0, -2.005, 0.01).pass);
        assert!(Check::new("d", Relation::Decreases, 1e-3, 1e-4, 1e-8).pass);
        assert!(!Check::new("d", Relation::Decreases, 1e-4, 1e-3, 1e-8).pass);
        assert!(Check::new("d", Relation::Decreases, 1e-12, 1e-10, 1e-8).pass);
        assert!(Check::new("n", Relation::Report, 0.0, f64::NAN, f64::NAN).pass);
        assert!(!Check::new("nan", Relation::AtMost, 0.0, f64::NAN, 1.0).pass);
    }

    #[test]
    fn overall_is_conjunction() {
        let ok = Check::new("a", Relation::Abs, 0.0, 0.0, 0.0);
        let bad = Check::new("b", Relation::Abs, 0.0, 1.0, 0.0);
        assert!(SuiteReport::new(Suite::Origin, 1, 0, vec![ok.clone()]).overall);
        let r = SuiteReport::new(Suite::Origin, 1, 0, vec![ok, bad]);
        assert!(!r.overall);
        assert_eq!(r.failures().count(), 1);
    }

    #[test]
    fn random_points_stay_inside() {
        let params = TubeParams::new(3).unwrap();
        let mut r = rng(7);
        for _ in 0..1000 {
            let z = random_point(params, &mut r, 0.99);
            assert!(crate::geometry::x_invariant(params, &z).unwrap().abs() <= 0.99 + 1e-12);
            let v = random_unit_vector(&mut r);
            assert!(((v[0].norm_sqr() + v[1].norm_sqr()) - 1.0).abs() < 1e-12);
        }
    }
}
