//! Dormand–Prince 5(4) integrator for small autonomous-in-form systems
//! `y' = rhs(x, y)` with a per-step observer that may stop integration.

use crate::error::{Error, Result};

const C2: f64 = 1.0 / 5.0;
const C3: f64 = 3.0 / 10.0;
const C4: f64 = 4.0 / 5.0;
const C5: f64 = 8.0 / 9.0;

const A21: f64 = 1.0 / 5.0;
const A31: f64 = 3.0 / 40.0;
const A32: f64 = 9.0 / 40.0;
const A41: f64 = 44.0 / 45.0;
const A42: f64 = -56.0 / 15.0;
const A43: f64 = 32.0 / 9.0;
const A51: f64 = 19372.0 / 6561.0;
const A52: f64 = -25360.0 / 2187.0;
const A53: f64 = 64448.0 / 6561.0;
const A54: f64 = -212.0 / 729.0;
const A61: f64 = 9017.0 / 3168.0;
const A62: f64 = -355.0 / 33.0;
const A63: f64 = 46732.0 / 5247.0;
const A64: f64 = 49.0 / 176.0;
const A65: f64 = -5103.0 / 18656.0;
const B1: f64 = 35.0 / 384.0;
const B3: f64 = 500.0 / 1113.0;
const B4: f64 = 125.0 / 192.0;
const B5: f64 = -2187.0 / 6784.0;
const B6: f64 = 11.0 / 84.0;

// Difference between 5th- and 4th-order weights.
const E1: f64 = 71.0 / 57600.0;
const E3: f64 = -71.0 / 16695.0;
const E4: f64 = 71.0 / 1920.0;
const E5: f64 = -17253.0 / 339200.0;
const E6: f64 = 22.0 / 525.0;
const E7: f64 = -1.0 / 40.0;

pub(crate) type State = [f64; 2];

#[derive(Debug, Clone, Copy)]
pub(crate) struct StepControl {
    pub rtol: f64,
    pub atol: f64,
    pub max_steps: usize,
    /// Upper bound on any single step.
    pub h_max: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Flow {
    Continue,
    Stop,
}

fn axpy(y: &State, terms: &[(f64, &State)], h: f64) -> State {
    let mut out = *y;
    for (c, k) in terms {
        out[0] += h * c * k[0];
        out[1] += h * c * k[1];
    }
    out
}

/// Integrates from `(x0, y0)` until `observer` returns [`Flow::Stop`] or
/// `x_end` is reached. The observer sees every accepted node including the
/// initial one. Returns the number of accepted steps.
pub(crate) fn integrate<R, O>(
    rhs: R,
    x0: f64,
    y0: State,
    x_end: f64,
    control: StepControl,
    mut observer: O,
) -> Result<usize>
where
    R: Fn(f64, &State) -> State,
    O: FnMut(f64, &State, &State) -> Flow,
{
    const SAFETY: f64 = 0.9;
    const MIN_SCALE: f64 = 0.2;
    const MAX_SCALE: f64 = 5.0;

    let mut x = x0;
    let mut y = y0;
    let mut k1 = rhs(x, &y);
    if observer(x, &y, &k1) == Flow::Stop {
        return Ok(0);
    }

    // Initial step from the local scale of the solution.
    let scale = (y[0].abs() + y[1].abs() + control.atol) / (k1[0].abs() + k1[1].abs() + 1e-300);
    let mut h = (1e-3 * scale).min(control.h_max).min(x_end - x).max(1e-14);

    let mut steps = 0usize;
    while x < x_end {
        if steps >= control.max_steps {
            return Err(Error::MaxStepsExceeded(control.max_steps));
        }
        let tiny = 4.0 * f64::EPSILON * x.abs().max(1.0);
        if x_end - x <= tiny {
            break;
        }
        if h <= tiny {
            return Err(Error::StepUnderflow(x));
        }
        h = h.min(x_end - x);

        let k2 = rhs(x + C2 * h, &axpy(&y, &[(A21, &k1)], h));
        let k3 = rhs(x + C3 * h, &axpy(&y, &[(A31, &k1), (A32, &k2)], h));
        let k4 = rhs(x + C4 * h, &axpy(&y, &[(A41, &k1), (A42, &k2), (A43, &k3)], h));
        let k5 = rhs(
            x + C5 * h,
            &axpy(&y, &[(A51, &k1), (A52, &k2), (A53, &k3), (A54, &k4)], h),
        );
        let k6 = rhs(
            x + h,
            &axpy(&y, &[(A61, &k1), (A62, &k2), (A63, &k3), (A64, &k4), (A65, &k5)], h),
        );
        let y_new = axpy(&y, &[(B1, &k1), (B3, &k3), (B4, &k4), (B5, &k5), (B6, &k6)], h);
        let k7 = rhs(x + h, &y_new);

        let mut err = 0.0f64;
        for i in 0..2 {
            let e = h * (E1 * k1[i] + E3 * k3[i] + E4 * k4[i] + E5 * k5[i] + E6 * k6[i] + E7 * k7[i]);
            let sc = control.atol + control.rtol * y[i].abs().max(y_new[i].abs());
            err = err.max((e / sc).abs());
        }
        if !err.is_finite() || !y_new[0].is_finite() || !y_new[1].is_finite() {
            h *= MIN_SCALE;
            continue;
        }

        if err <= 1.0 {
            x += h;
            y = y_new;
            k1 = k7;
            steps += 1;
            if observer(x, &y, &k1) == Flow::Stop {
                return Ok(steps);
            }
            let fac = if err == 0.0 { MAX_SCALE } else { (SAFETY * err.powf(-0.2)).clamp(MIN_SCALE, MAX_SCALE) };
            h = (h * fac).min(control.h_max);
        } else {
            h *= (SAFETY * err.powf(-0.2)).clamp(MIN_SCALE, 1.0);
        }
    }
    Ok(steps)
}
