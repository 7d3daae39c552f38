#![allow(dead_code)]

use std::sync::OnceLock;

use tubeke::metric::{metric_closed_form, Mat2};
use tubeke::potential::{solve_potential, PotentialSolution, ShootingConfig};
use tubeke::{Point, TubeParams};

pub fn params(p: u32) -> TubeParams {
    TubeParams::new(p).unwrap()
}

/// Solved potentials for p = 1, 2, 3, shared across tests in one binary.
pub fn solution(p: u32) -> &'static PotentialSolution {
    static SOLS: [OnceLock<PotentialSolution>; 3] = [OnceLock::new(), OnceLock::new(), OnceLock::new()];
    SOLS[(p - 1) as usize].get_or_init(|| solve_potential(params(p), &ShootingConfig::default()).unwrap())
}

pub fn ball_big_f(x: f64) -> f64 {
    2f64.ln() / 3.0 - (1.0 - x * x).ln()
}

fn shifted(z: &Point, dir: usize, t: f64) -> Point {
    let mut q = *z;
    if dir == 0 {
        q.z1.re += t;
    } else {
        q.z2.re += t;
    }
    q
}

/// Steps in `Re z₁` and `Re z₂` proportional to the local scales of the
/// domain at `z`.
pub fn fd_steps(p: u32, z: &Point, rel: f64) -> [f64; 2] {
    let u = 1.0 - 4.0 * p as f64 * z.z1.re;
    [rel * u / (4.0 * p as f64), rel * u.powf(1.0 / (2.0 * p as f64))]
}

/// `∂_{x_k} g_{ij̄}` by the fourth-order central stencil, halved to give the
/// complex derivative.
pub fn fd_d3(sol: &PotentialSolution, z: &Point, h: [f64; 2]) -> [[[f64; 2]; 2]; 2] {
    let g = |q: Point| metric_closed_form(sol, &q).unwrap();
    let mut out = [[[0.0; 2]; 2]; 2];
    for k in 0..2 {
        let t = h[k];
        let (a, b, c, d) = (g(shifted(z, k, 2.0 * t)), g(shifted(z, k, t)), g(shifted(z, k, -t)), g(shifted(z, k, -2.0 * t)));
        for i in 0..2 {
            for j in 0..2 {
                out[i][j][k] = 0.5 * (-a[i][j] + 8.0 * b[i][j] - 8.0 * c[i][j] + d[i][j]) / (12.0 * t);
            }
        }
    }
    out
}

fn mixed(g: &dyn Fn(f64, f64) -> Mat2, hk: f64, hl: f64) -> Mat2 {
    let cross = |s: f64| {
        let (pp, pm, mp, mm) = (g(s * hk, s * hl), g(s * hk, -s * hl), g(-s * hk, s * hl), g(-s * hk, -s * hl));
        let mut m = [[0.0; 2]; 2];
        for i in 0..2 {
            for j in 0..2 {
                m[i][j] = (pp[i][j] - pm[i][j] - mp[i][j] + mm[i][j]) / (4.0 * s * s * hk * hl);
            }
        }
        m
    };
    let (one, two) = (cross(1.0), cross(2.0));
    let mut m = [[0.0; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            m[i][j] = (4.0 * one[i][j] - two[i][j]) / 3.0;
        }
    }
    m
}

/// `∂_{x_k} ∂_{x_l} g_{ij̄} / 4` with fourth-order stencils.
pub fn fd_d4(sol: &PotentialSolution, z: &Point, h: [f64; 2]) -> [[[[f64; 2]; 2]; 2]; 2] {
    let mut out = [[[[0.0; 2]; 2]; 2]; 2];
    for k in 0..2 {
        for l in 0..2 {
            let m = if k == l {
                let t = h[k];
                let g = |s: f64| metric_closed_form(sol, &shifted(z, k, s)).unwrap();
                let (a, b, c, d, e) = (g(2.0 * t), g(t), g(0.0), g(-t), g(-2.0 * t));
                let mut m = [[0.0; 2]; 2];
                for i in 0..2 {
                    for j in 0..2 {
                        m[i][j] = (-a[i][j] + 16.0 * b[i][j] - 30.0 * c[i][j] + 16.0 * d[i][j] - e[i][j]) / (12.0 * t * t);
                    }
                }
                m
            } else {
                let g = |sk: f64, sl: f64| metric_closed_form(sol, &shifted(&shifted(z, k, sk), l, sl)).unwrap();
                mixed(&g, h[k], h[l])
            };
            for i in 0..2 {
                for j in 0..2 {
                    out[i][j][k][l] = 0.25 * m[i][j];
                }
            }
        }
    }
    out
}
