//! Acceptance criteria. Each test prints one `criterion N [PASS|FAIL]` line.

mod common;

use std::time::{Duration, Instant};

use common::{ball_big_f, fd_d3, fd_d4, fd_steps, params, solution};
use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use tubeke::curvature::{bis_extremes, origin_closed_forms, origin_sectional_argmax, CurvatureAt, TangentPair};
use tubeke::diagnostics::{boundary_gap, random_pair, random_point, sampled_sectional_max, GAP_NOISE_FLOOR};
use tubeke::geometry::normalizing_automorphism;
use tubeke::metric::{einstein_residual, metric_jet};
use tubeke::potential::{solve_potential, ShootingConfig};
use tubeke::search::SearchConfig;
use tubeke::sweep::axis_sweep;
use tubeke::Point;

const SEED: u64 = 0;

fn report(n: u32, title: &str, pass: bool, detail: String) {
    println!("criterion {n:>2} [{}] {title}: {detail}", if pass { "PASS" } else { "FAIL" });
    assert!(pass, "criterion {n} failed: {detail}");
}

#[test]
fn criterion_01_ball_oracle() {
    let start = Instant::now();
    let sol = solve_potential(params(1), &ShootingConfig::default()).unwrap();
    let elapsed = start.elapsed();
    let f0_err = (sol.f0() - 2f64.ln() / 3.0).abs();
    let mut worst = 0.0f64;
    for i in 0..=9990 {
        let x = i as f64 * 1e-4;
        worst = worst.max((sol.eval_big_f(x).unwrap() - ball_big_f(x)).abs());
    }
    let pass = f0_err <= 1e-6 && worst <= 1e-5 && elapsed < Duration::from_secs(1);
    report(1, "p=1 closed form", pass, format!("|F0 - ln2/3| = {f0_err:.2e}, max |F - F_exact| on [0,0.999] = {worst:.2e}, solve {elapsed:.2?}"));
}

#[test]
fn criterion_02_origin_constants() {
    let mut worst = 0.0f64;
    for p in 1..=3 {
        let sol = solution(p);
        let f1 = sol.eval_f_derivs(0.0, 1).unwrap()[1];
        let expected = origin_closed_forms(params(p)).tensor(f1);
        let t = CurvatureAt::new(sol, &Point::origin()).unwrap().tensor;
        for (e, o) in [(expected.r1111, t.r1111), (expected.r1122, t.r1122), (expected.r1212, t.r1212), (expected.r2222, t.r2222)] {
            // R_{12̄12̄} vanishes for p = 1; compare absolutely there.
            let err = if e == 0.0 { o.abs() } else { (o - e).abs() / e.abs() };
            worst = worst.max(err);
        }
    }
    report(2, "origin curvature constants", worst <= 1e-8, format!("max relative error {worst:.2e} over p = 1, 2, 3"));
}

#[test]
fn criterion_03_origin_pinching() {
    let start = Instant::now();
    let (mut ext_err, mut violation) = (0.0f64, 0.0f64);
    for p in 1..=3 {
        let sol = solution(p);
        let cf = origin_closed_forms(params(p));
        let e = bis_extremes(sol, &Point::origin(), &SearchConfig::default()).unwrap();
        ext_err = ext_err.max((e.min - cf.bis_min).abs()).max((e.max - cf.bis_max).abs());
        let at = CurvatureAt::new(sol, &Point::origin()).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(SEED);
        for _ in 0..10_000 {
            let b = at.bisectional(&random_pair(&mut rng));
            violation = violation.max(cf.bis_min - b).max(b - cf.bis_max);
        }
    }
    let elapsed = start.elapsed();
    let pass = ext_err <= 1e-6 && violation <= 1e-9 && elapsed < Duration::from_secs(10);
    report(3, "origin pinching", pass, format!("extremes error {ext_err:.2e}, worst bound violation by random pairs {violation:.2e}, {elapsed:.2?}"));
}

#[test]
fn criterion_04_sectional_bound() {
    let mut detail = Vec::new();
    let mut pass = true;
    for p in 1..=3 {
        let pr = params(p);
        let sol = solution(p);
        let cf = origin_closed_forms(pr);
        let at = CurvatureAt::new(sol, &Point::origin()).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(SEED);
        let m = sampled_sectional_max(&at, &mut rng, 10_000).unwrap();
        let f1 = sol.eval_f_derivs(0.0, 1).unwrap()[1];
        let at_vec = at.sectional(&origin_sectional_argmax(pr, f1)).unwrap();
        // The vector as commonly displayed, with second component √f'(0)/2;
        // it attains the bound only when f'(0) = 4.
        let displayed = [Complex64::new(1.0 / (4.0 * pr.pk()).sqrt(), 0.0), Complex64::new(f1.sqrt() / 2.0, 0.0)];
        let at_displayed = at.sectional(&displayed).unwrap();
        let ok = (m.polished_max - cf.sect_max).abs() <= 1e-4
            && m.raw_max <= cf.sect_max + 1e-9
            && (at_vec - cf.sect_max).abs() <= 1e-6;
        pass &= ok;
        detail.push(format!(
            "p={p}: bound {:.6}, sampled max {:.6} (polished {:.10}), at extremal vector {:.10}, at displayed vector {:.6}",
            cf.sect_max, m.raw_max, m.polished_max, at_vec, at_displayed
        ));
    }
    report(4, "sectional bound at the origin", pass, detail.join("; "));
}

#[test]
fn criterion_05_asymptotics() {
    let x = 1.0 - 1e-4;
    let h = 1.0 - x;
    let mut worst = [0.0f64; 5];
    let mut pass = true;
    for p in 1..=3 {
        let sol = solution(p);
        let d = sol.eval_f_derivs(x, 3).unwrap();
        let z = sol.eval_z(x, 0).unwrap()[0];
        let limit = (2.0 * p as f64 - 1.0) / 4.0;
        let e0 = (d[0] * h - 1.0).abs();
        let ez = (z * h.powi(3) - limit).abs();
        pass &= e0 <= 1e-2 && ez <= 1e-2 * limit;
        worst[0] = worst[0].max(e0);
        worst[4] = worst[4].max(ez / limit);
        let mut fact = 1.0;
        for k in 1..=3 {
            fact *= k as f64;
            let ek = (d[k] * h.powi(k as i32 + 1) / fact - 1.0).abs();
            pass &= ek <= 3e-2;
            worst[k] = worst[k].max(ek);
        }
    }
    report(5, "boundary asymptotics at x = 1 - 1e-4", pass, format!(
        "max |f(1-x) - 1| = {:.2e}, k! laws {:.2e} / {:.2e} / {:.2e}, max relative Z error {:.2e}",
        worst[0], worst[1], worst[2], worst[3], worst[4]
    ));
}

#[test]
fn criterion_06_einstein_residual() {
    let mut worst = 0.0f64;
    for p in 1..=3 {
        let mut rng = ChaCha8Rng::seed_from_u64(SEED);
        for _ in 0..100 {
            let z = random_point(params(p), &mut rng, 0.99);
            worst = worst.max(einstein_residual(solution(p), &z).unwrap());
        }
    }
    report(6, "Einstein residual", worst <= 1e-8, format!("max residual {worst:.2e} over 100 points for each p = 1, 2, 3"));
}

#[test]
fn criterion_07_invariance() {
    let mut worst = 0.0f64;
    for p in 1..=3 {
        let pr = params(p);
        let mut rng = ChaCha8Rng::seed_from_u64(SEED);
        for _ in 0..100 {
            let z = random_point(pr, &mut rng, 0.99);
            let pair = random_pair(&mut rng);
            let here = CurvatureAt::new(solution(p), &z).unwrap().bisectional(&pair);
            let psi = normalizing_automorphism(pr, &z).unwrap();
            let pushed = TangentPair::new(psi.push(pair.v), psi.push(pair.w)).unwrap();
            let there = CurvatureAt::new(solution(p), &psi.apply(&z)).unwrap().bisectional(&pushed);
            worst = worst.max((here - there).abs() / here.abs());
        }
    }
    report(7, "automorphism invariance", worst <= 1e-7, format!("max relative difference {worst:.2e}"));
}

#[test]
fn criterion_08_boundary_limit() {
    let mut pass = true;
    let mut detail = Vec::new();
    for p in 1..=2 {
        let gap = |x| boundary_gap(solution(p), x, SEED, 1000).unwrap().0;
        let (e1, e2, e3) = (gap(0.9), gap(0.99), gap(0.999));
        // Below the noise floor a gap is zero to working precision; for p = 1
        // the gap vanishes identically and only the floor can be observed.
        let decreasing = |a: f64, b: f64| b < a || (a <= GAP_NOISE_FLOOR && b <= GAP_NOISE_FLOOR);
        let ok = decreasing(e1, e2) && decreasing(e2, e3) && e3 <= 0.05;
        pass &= ok;
        let strict = e3 < e2 && e2 < e1;
        detail.push(format!("p={p}: E(0.9) = {e1:.2e}, E(0.99) = {e2:.2e}, E(0.999) = {e3:.2e}, strictly decreasing: {strict}"));
    }
    report(8, "boundary limit of bisectional curvature", pass, detail.join("; "));
}

#[test]
fn criterion_09_axis_sweep_pinching() {
    let start = Instant::now();
    let mut pass = true;
    let mut detail = Vec::new();
    for p in 1..=3 {
        let rows = axis_sweep(solution(p), 0.0, 1.0 - 1e-4, 500, &SearchConfig::default()).unwrap();
        let hi = rows.iter().map(|r| r.bis_max).fold(f64::NEG_INFINITY, f64::max);
        let lo = rows.iter().map(|r| r.bis_min).fold(f64::INFINITY, f64::min);
        let finite = rows.iter().all(|r| r.is_finite());
        pass &= rows.len() == 500 && finite && hi <= -0.1 && lo >= -5.0;
        detail.push(format!("p={p}: bis in [{lo:.6}, {hi:.6}]"));
    }
    let elapsed = start.elapsed();
    pass &= elapsed < Duration::from_secs(60);
    report(9, "axis sweep pinching", pass, format!("{}; {elapsed:.2?}", detail.join("; ")));
}

#[test]
fn criterion_10_derivative_cross_check() {
    let mut worst = 0.0f64;
    for p in 1..=3 {
        let sol = solution(p);
        let mut rng = ChaCha8Rng::seed_from_u64(SEED);
        for _ in 0..20 {
            let z = random_point(params(p), &mut rng, 0.9);
            let jet = metric_jet(sol, &z).unwrap();
            let d3 = fd_d3(sol, &z, fd_steps(p, &z, 1e-3));
            let d4 = fd_d4(sol, &z, fd_steps(p, &z, 2e-3));
            let s3 = jet.d3.iter().flatten().flatten().fold(0.0f64, |m, v| m.max(v.abs()));
            let s4 = jet.d4.iter().flatten().flatten().flatten().fold(0.0f64, |m, v| m.max(v.abs()));
            for (a, b) in jet.d3.iter().flatten().flatten().zip(d3.iter().flatten().flatten()) {
                worst = worst.max((a - b).abs() / a.abs().max(1e-3 * s3));
            }
            for (a, b) in jet.d4.iter().flatten().flatten().flatten().zip(d4.iter().flatten().flatten().flatten()) {
                worst = worst.max((a - b).abs() / a.abs().max(1e-3 * s4));
            }
        }
    }
    report(10, "third and fourth derivatives vs finite differences", worst <= 1e-4, format!("max relative error {worst:.2e} over 20 points for each p"));
}
