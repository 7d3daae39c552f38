mod common;

use common::{ball_big_f, params, solution};
use proptest::prelude::*;
use tubeke::potential::{z_from_definition, PotentialSolution};
use tubeke::Error;

#[test]
fn ball_closed_form() {
    let sol = solution(1);
    assert!((sol.f0() - 2f64.ln() / 3.0).abs() < 1e-9);
    for i in 0..=100 {
        let x = 0.99 * i as f64 / 100.0;
        let d = sol.eval_f_derivs(x, 3).unwrap();
        let w = 1.0 - x * x;
        assert!((sol.eval_big_f(x).unwrap() - ball_big_f(x)).abs() < 1e-8, "F at {x}");
        assert!((d[0] - 2.0 * x / w).abs() < 1e-6 * (1.0 + d[0].abs()), "f at {x}");
        assert!((d[1] - 2.0 * (1.0 + x * x) / (w * w)).abs() < 1e-6 * d[1].abs(), "f' at {x}");
    }
}

#[test]
fn blowup_near_one_for_all_p() {
    for p in 1..=3 {
        let sol = solution(p);
        assert!((sol.blowup_x() - 1.0).abs() < 1e-5, "p = {p}: {}", sol.blowup_x());
        assert!(sol.max_z_residual() < 1e-8);
        assert!(sol.max_transfer_residual().unwrap() < 1e-6);
    }
}

#[test]
fn z_matches_exponential_and_definition() {
    for p in 1..=3 {
        let sol = solution(p);
        for i in 0..50 {
            let x = 0.98 * i as f64 / 50.0;
            let d = sol.eval_f_derivs(x, 1).unwrap();
            let z = sol.eval_z(x, 0).unwrap()[0];
            let e = (3.0 * sol.eval_big_f(x).unwrap()).exp();
            assert!((z - e).abs() < 1e-8 * e);
            assert!((z - z_from_definition(params(p), x, d[0], d[1])).abs() < 1e-10 * e);
        }
    }
}

/// Fourth-order central difference with step `h`.
fn fd(g: impl Fn(f64) -> f64, x: f64, h: f64) -> f64 {
    (-g(x + 2.0 * h) + 8.0 * g(x + h) - 8.0 * g(x - h) + g(x - 2.0 * h)) / (12.0 * h)
}

#[test]
fn derivatives_match_finite_differences() {
    for p in 1..=3 {
        let sol = solution(p);
        for &x in &[0.0, 0.2, 0.5, 0.8, 0.95, 0.99] {
            let h = 1e-3 * (1.0 - x);
            let d = sol.eval_f_derivs(x, 3).unwrap();
            let close = |a: f64, b: f64| (a - b).abs() <= 1e-5 * b.abs().max(1.0);
            assert!(close(fd(|t| sol.eval_big_f(t).unwrap(), x, h), d[0]), "p={p} x={x} F'");
            for k in 0..3 {
                let est = fd(|t| sol.eval_f_derivs(t, 3).unwrap()[k], x, h);
                assert!(close(est, d[k + 1]), "p={p} x={x} order {}: {est} vs {}", k + 1, d[k + 1]);
            }
            let zd = sol.eval_z(x, 2).unwrap();
            for k in 0..2 {
                let est = fd(|t| sol.eval_z(t, 2).unwrap()[k], x, h);
                assert!(close(est, zd[k + 1]), "p={p} x={x} Z order {}", k + 1);
            }
        }
    }
}

#[test]
fn cache_round_trip_is_bit_identical() {
    let dir = tempfile::tempdir().unwrap();
    for p in 1..=3 {
        let sol = solution(p);
        let path = dir.path().join(format!("sol{p}.json"));
        sol.save(&path).unwrap();
        let back = PotentialSolution::load(&path).unwrap();
        assert_eq!(back.f0().to_bits(), sol.f0().to_bits());
        assert_eq!(back.nodes(), sol.nodes());
        for (i, n) in sol.nodes().iter().enumerate().step_by(7) {
            assert_eq!(back.eval_big_f(n.x).unwrap().to_bits(), sol.eval_big_f(n.x).unwrap().to_bits(), "node {i}");
            let (a, b) = (back.eval_f_derivs(n.x, 3).unwrap(), sol.eval_f_derivs(n.x, 3).unwrap());
            assert_eq!(a.iter().map(|v| v.to_bits()).collect::<Vec<_>>(), b.iter().map(|v| v.to_bits()).collect::<Vec<_>>());
        }
    }
}

#[test]
fn cache_json_shape() {
    let v: serde_json::Value = serde_json::from_str(&solution(2).to_json().unwrap()).unwrap();
    assert_eq!(v["p"], 2);
    assert_eq!(v["K"], "5/3");
    assert!(v["F0"].is_f64() && v["tolerance"].is_f64() && v["blowup_x"].is_f64());
    let n0 = &v["nodes"][0];
    assert_eq!(n0["x"], 0.0);
    assert_eq!(n0["f"], 0.0);
    assert!(n0["F"].is_f64());
}

#[test]
fn corrupted_caches_rejected() {
    let good: serde_json::Value = serde_json::from_str(&solution(1).to_json().unwrap()).unwrap();
    let mutate = |f: &dyn Fn(&mut serde_json::Value)| {
        let mut v = good.clone();
        f(&mut v);
        PotentialSolution::from_json(&v.to_string())
    };
    assert!(matches!(mutate(&|v| v["K"] = "5/3".into()), Err(Error::InvalidCache(_))));
    assert!(matches!(mutate(&|v| v["p"] = 0.into()), Err(Error::InvalidCache(_))));
    assert!(matches!(mutate(&|v| v["blowup_x"] = 1.5.into()), Err(Error::InvalidCache(_))));
    assert!(matches!(
        mutate(&|v| {
            let nodes = v["nodes"].as_array_mut().unwrap();
            nodes.swap(3, 4);
        }),
        Err(Error::InvalidCache(_))
    ));
    assert!(matches!(mutate(&|v| v["nodes"][10]["F"] = 3.0.into()), Err(Error::InvalidCache(_))));
    assert!(PotentialSolution::from_json("{not json").is_err());
}

#[test]
fn evaluation_outside_range_is_domain_error() {
    let sol = solution(2);
    assert!(matches!(sol.eval_big_f(1.0), Err(Error::Domain(_))));
    assert!(matches!(sol.eval_f_derivs(-1.2, 1), Err(Error::Domain(_))));
    assert!(sol.eval_f_derivs(0.3, 4).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn parity(p in 1u32..=3, x in 0.0f64..0.999) {
        let sol = solution(p);
        prop_assert_eq!(sol.eval_big_f(-x).unwrap(), sol.eval_big_f(x).unwrap());
        let (a, b) = (sol.eval_f_derivs(x, 3).unwrap(), sol.eval_f_derivs(-x, 3).unwrap());
        for k in 0..4 {
            let sign = if k % 2 == 0 { -1.0 } else { 1.0 };
            prop_assert!((b[k] - sign * a[k]).abs() <= 1e-12 * a[k].abs().max(1.0));
        }
    }

    #[test]
    fn convex_and_increasing(p in 1u32..=3, x in 0.0f64..0.999, dx in 1e-4f64..1e-2) {
        let sol = solution(p);
        let y = (x + dx).min(0.9995);
        let (a, b) = (sol.eval_f_derivs(x, 1).unwrap(), sol.eval_f_derivs(y, 1).unwrap());
        prop_assert!(a[1] > 0.0);
        prop_assert!(b[0] >= a[0]);
        prop_assert!(sol.eval_big_f(y).unwrap() >= sol.eval_big_f(x).unwrap());
    }
}
