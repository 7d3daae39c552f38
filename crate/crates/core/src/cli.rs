//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 when a verification suite fails, 2 on usage,
//! input or domain errors.

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Map, Value};

use crate::curvature::{bis_extremes, CurvatureAt, CurvatureTensor, TangentPair, Vector};
use crate::diagnostics::{run_suite, Suite, DEFAULT_SEED};
use crate::error::{Error, Result};
use crate::geometry::{x_invariant, Point};
use crate::metric::{metric_jet, MetricJet};
use crate::params::TubeParams;
use crate::potential::{solve_potential, PotentialSolution, ShootingConfig};
use crate::search::SearchConfig;
use crate::sweep::{axis_sweep, write_csv, DEFAULT_X_MAX};

pub const EXIT_OK: u8 = 0;
pub const EXIT_VERIFY_FAILED: u8 = 1;
pub const EXIT_ERROR: u8 = 2;

#[derive(Debug, Parser)]
#[command(name = "tubeke", version, about = "Kähler-Einstein metric of the tube domains T_p")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Solve the axis problem for F and write the solution cache.
    Solve {
        #[arg(long)]
        p: String,
        /// Bracket width at which bisection on F(0) stops.
        #[arg(long)]
        tol: Option<f64>,
        /// Value of f taken as blow-up.
        #[arg(long = "f-max")]
        f_max: Option<f64>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Evaluate F and f (and optionally f', f'', f''', Z) at an axis point.
    Eval {
        #[arg(long)]
        sol: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        x: f64,
        #[arg(long)]
        derivs: bool,
    },
    /// Metric, determinant and third/fourth derivatives at a point.
    Metric {
        #[arg(long)]
        sol: PathBuf,
        /// re1,im1,re2,im2
        #[arg(long, allow_hyphen_values = true)]
        point: Point,
    },
    /// Curvature tensor with a bisectional value or the extremes.
    Curvature {
        #[arg(long)]
        sol: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        point: Point,
        /// First tangent vector re1,im1,re2,im2.
        #[arg(long, allow_hyphen_values = true, requires = "w")]
        v: Option<Point>,
        /// Second tangent vector re1,im1,re2,im2.
        #[arg(long, allow_hyphen_values = true, requires = "v")]
        w: Option<Point>,
        #[arg(long)]
        extremes: bool,
    },
    /// Tabulate the axis potential and curvature extremes as CSV.
    Sweep {
        #[arg(long)]
        sol: PathBuf,
        #[arg(long = "x-min", default_value_t = 0.0, allow_hyphen_values = true)]
        x_min: f64,
        #[arg(long = "x-max", default_value_t = DEFAULT_X_MAX, allow_hyphen_values = true)]
        x_max: f64,
        #[arg(long, default_value_t = 100)]
        n: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Solve and run a verification suite.
    Verify {
        #[arg(long)]
        p: String,
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long)]
        report: Option<PathBuf>,
    },
}

/// Entry point of the `tubeke` binary.
pub fn main() -> ExitCode {
    let stdout = io::stdout();
    let stderr = io::stderr();
    ExitCode::from(run(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock()))
}

/// Parses `args` (program name first), runs the command and returns the
/// exit code. Results go to `out`, diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            return if e.use_stderr() {
                let _ = write!(err, "{}", e.render());
                EXIT_ERROR
            } else {
                let _ = write!(out, "{}", e.render());
                EXIT_OK
            };
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_ERROR
        }
    }
}

fn execute(command: Command, out: &mut dyn Write) -> Result<u8> {
    match command {
        Command::Solve { p, tol, f_max, out: path } => {
            let params = TubeParams::parse(&p)?;
            let mut config = ShootingConfig::default();
            if let Some(t) = tol {
                config.c0_tolerance = t;
            }
            if let Some(m) = f_max {
                config.f_blowup_threshold = m;
            }
            let sol = solve_potential(params, &config)?;
            sol.save(&path)?;
            emit(
                out,
                &json!({
                    "p": params.p(),
                    "K": params.k_string(),
                    "F0": sol.f0(),
                    "blowup_x": sol.blowup_x(),
                    "nodes": sol.nodes().len(),
                    "out": path.display().to_string(),
                }),
            )?;
        }
        Command::Eval { sol, x, derivs } => {
            let sol = load(&sol)?;
            emit(out, &eval_json(&sol, x, derivs)?)?;
        }
        Command::Metric { sol, point } => {
            let sol = load(&sol)?;
            emit(out, &jet_json(&metric_jet(&sol, &point)?))?;
        }
        Command::Curvature { sol, point, v, w, extremes } => {
            let sol = load(&sol)?;
            let pair = match (v, w) {
                (Some(v), Some(w)) => Some(TangentPair::new(as_vector(&v), as_vector(&w))?),
                _ => None,
            };
            emit(out, &curvature_json(&sol, &point, pair.as_ref(), extremes)?)?;
        }
        Command::Sweep { sol, x_min, x_max, n, out: path } => {
            let sol = load(&sol)?;
            let rows = axis_sweep(&sol, x_min, x_max, n, &SearchConfig::default())?;
            if let Some(bad) = rows.iter().find(|r| !r.is_finite()) {
                return Err(Error::Domain(format!("non-finite sweep row at x = {}", bad.x)));
            }
            write_csv(&rows, BufWriter::new(File::create(&path)?))?;
            emit(out, &json!({ "rows": rows.len(), "out": path.display().to_string() }))?;
        }
        Command::Verify { p, suite, seed, report } => {
            let params = TubeParams::parse(&p)?;
            let suite: Suite = suite.parse()?;
            let sol = solve_potential(params, &ShootingConfig::default())?;
            let rep = run_suite(suite, &sol, seed)?;
            writeln!(out, "{rep}")?;
            if let Some(path) = report {
                std::fs::write(path, rep.to_json()?)?;
            }
            return Ok(if rep.overall { EXIT_OK } else { EXIT_VERIFY_FAILED });
        }
    }
    Ok(EXIT_OK)
}

fn load(path: &std::path::Path) -> Result<PotentialSolution> {
    PotentialSolution::load(path).map_err(|e| match e {
        Error::Io(io) => Error::InvalidInput(format!("{}: {io}", path.display())),
        other => other,
    })
}

fn emit(out: &mut dyn Write, value: &Value) -> Result<()> {
    writeln!(out, "{}", serde_json::to_string_pretty(value)?)?;
    Ok(())
}

/// Reads a `Point` argument as a tangent vector `(v₁, v₂)`.
fn as_vector(p: &Point) -> Vector {
    [p.z1, p.z2]
}

fn point_json(p: &Point) -> Value {
    json!(p.parts())
}

fn vector_json(v: &Vector) -> Value {
    json!([v[0].re, v[0].im, v[1].re, v[1].im])
}

pub fn eval_json(sol: &PotentialSolution, x: f64, derivs: bool) -> Result<Value> {
    let d = sol.eval_f_derivs(x, if derivs { 3 } else { 0 })?;
    let mut m = Map::new();
    m.insert("x".into(), json!(x));
    m.insert("F".into(), json!(sol.eval_big_f(x)?));
    m.insert("f".into(), json!(d[0]));
    if derivs {
        m.insert("f1".into(), json!(d[1]));
        m.insert("f2".into(), json!(d[2]));
        m.insert("f3".into(), json!(d[3]));
        m.insert("Z".into(), json!(sol.eval_z(x, 0)?[0]));
    }
    Ok(Value::Object(m))
}

/// Keys are 1-based index strings: `"ijk"` for `g_{i j̄ k}` and `"ijkl"` for
/// `g_{i j̄ k l̄}`.
pub fn jet_json(jet: &MetricJet) -> Value {
    let mut d3 = Map::new();
    let mut d4 = Map::new();
    for i in 0..2 {
        for j in 0..2 {
            for k in 0..2 {
                d3.insert(format!("{}{}{}", i + 1, j + 1, k + 1), json!(jet.d3[i][j][k]));
                for l in 0..2 {
                    d4.insert(format!("{}{}{}{}", i + 1, j + 1, k + 1, l + 1), json!(jet.d4[i][j][k][l]));
                }
            }
        }
    }
    json!({
        "point": point_json(&jet.point),
        "X": jet.x_value,
        "g": jet.metric,
        "det": jet.det,
        "d3": d3,
        "d4": d4,
    })
}

fn tensor_json(t: &CurvatureTensor) -> Value {
    json!({
        "R1111": t.r1111,
        "R1112": t.r1112,
        "R1122": t.r1122,
        "R1212": t.r1212,
        "R1222": t.r1222,
        "R2222": t.r2222,
    })
}

pub fn curvature_json(sol: &PotentialSolution, z: &Point, pair: Option<&TangentPair>, extremes: bool) -> Result<Value> {
    let at = CurvatureAt::new(sol, z)?;
    let mut m = Map::new();
    m.insert("point".into(), point_json(z));
    m.insert("X".into(), json!(x_invariant(sol.params(), z)?));
    m.insert("tensor".into(), tensor_json(&at.tensor));
    if let Some(pair) = pair {
        m.insert("bis".into(), json!(at.bisectional(pair)));
    }
    if extremes || pair.is_none() {
        let e = bis_extremes(sol, z, &SearchConfig::default())?;
        m.insert(
            "extremes".into(),
            json!({
                "min": e.min,
                "argmin": { "v": vector_json(&e.argmin.v), "w": vector_json(&e.argmin.w) },
                "max": e.max,
                "argmax": { "v": vector_json(&e.argmax.v), "w": vector_json(&e.argmax.w) },
            }),
        );
    }
    Ok(Value::Object(m))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;

    fn run_args(args: &[&str]) -> (u8, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(std::iter::once("tubeke").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn usage_errors_exit_2() {
        assert_eq!(run_args(&[]).0, EXIT_ERROR);
        assert_eq!(run_args(&["solve", "--p", "1"]).0, EXIT_ERROR);
        assert_eq!(run_args(&["frobnicate"]).0, EXIT_ERROR);
    }

    #[test]
    fn help_exits_0() {
        let (code, out, _) = run_args(&["--help"]);
        assert_eq!(code, EXIT_OK);
        assert!(out.contains("verify"));
    }

    #[test]
    fn bad_p_and_suite_exit_2() {
        let (code, _, err) = run_args(&["verify", "--p", "1.5"]);
        assert_eq!(code, EXIT_ERROR);
        assert!(err.contains("error"));
        assert_eq!(run_args(&["verify", "--p", "1", "--suite", "nope"]).0, EXIT_ERROR);
    }

    #[test]
    fn vector_needs_partner() {
        let (code, _, _) = run_args(&["curvature", "--sol", "x.json", "--point", "0,0,0,0", "--v", "1,0,0,0"]);
        assert_eq!(code, EXIT_ERROR);
    }

    #[test]
    fn negative_point_components_parse() {
        let cli = Cli::try_parse_from(["tubeke", "metric", "--sol", "s.json", "--point", "-0.5,1,-0.2,0"]).unwrap();
        match cli.command {
            Command::Metric { point, .. } => assert_eq!(point.parts(), [-0.5, 1.0, -0.2, 0.0]),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn vector_conversion() {
        let v = as_vector(&"1,2,3,4".parse().unwrap());
        assert_eq!(v, [Complex64::new(1.0, 2.0), Complex64::new(3.0, 4.0)]);
    }
}
