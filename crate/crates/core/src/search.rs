//! Derivative-free local minimization used to polish grid extremes.

/// Settings for the grid-plus-simplex extremization of bisectional
/// curvature.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SearchConfig {
    /// Grid points for each modulus angle on `[0, π/2]`.
    pub theta_points: usize,
    /// Grid points for each phase on `[0, 2π]` (endpoints included).
    pub phase_points: usize,
    /// Number of best grid cells refined with Nelder–Mead.
    pub refine_starts: usize,
    pub max_iter: usize,
    pub ftol: f64,
}

impl Default for SearchConfig {
    fn default() -> Self {
        Self { theta_points: 17, phase_points: 25, refine_starts: 5, max_iter: 2000, ftol: 1e-15 }
    }
}

/// Nelder–Mead on `R^N` starting from `x0` with an axis-aligned initial
/// simplex of edge `step`. Returns the best vertex and its value.
pub fn nelder_mead<const N: usize, F>(f: F, x0: [f64; N], step: f64, max_iter: usize, ftol: f64) -> ([f64; N], f64)
where
    F: Fn(&[f64; N]) -> f64,
{
    let mut simplex: Vec<([f64; N], f64)> = Vec::with_capacity(N + 1);
    simplex.push((x0, f(&x0)));
    for i in 0..N {
        let mut x = x0;
        x[i] += step;
        simplex.push((x, f(&x)));
    }

    let combine = |a: &[f64; N], b: &[f64; N], t: f64| -> [f64; N] {
        let mut out = [0.0; N];
        for i in 0..N {
            out[i] = a[i] + t * (b[i] - a[i]);
        }
        out
    };

    for _ in 0..max_iter {
        simplex.sort_by(|a, b| a.1.total_cmp(&b.1));
        let best = simplex[0].1;
        let worst = simplex[N].1;
        if (worst - best).abs() <= ftol * (best.abs() + ftol) {
            break;
        }
        let mut centroid = [0.0; N];
        for (x, _) in &simplex[..N] {
            for i in 0..N {
                centroid[i] += x[i] / N as f64;
            }
        }
        let worst_x = simplex[N].0;
        let reflected = combine(&centroid, &worst_x, -1.0);
        let fr = f(&reflected);
        if fr < simplex[0].1 {
            let expanded = combine(&centroid, &worst_x, -2.0);
            let fe = f(&expanded);
            simplex[N] = if fe < fr { (expanded, fe) } else { (reflected, fr) };
        } else if fr < simplex[N - 1].1 {
            simplex[N] = (reflected, fr);
        } else {
            let contracted = if fr < worst {
                combine(&centroid, &reflected, 0.5)
            } else {
                combine(&centroid, &worst_x, 0.5)
            };
            let fc = f(&contracted);
            if fc < worst.min(fr) {
                simplex[N] = (contracted, fc);
            } else {
                let best_x = simplex[0].0;
                for v in simplex.iter_mut().skip(1) {
                    v.0 = combine(&best_x, &v.0, 0.5);
                    v.1 = f(&v.0);
                }
            }
        }
    }
    simplex.sort_by(|a, b| a.1.total_cmp(&b.1));
    simplex[0]
}
