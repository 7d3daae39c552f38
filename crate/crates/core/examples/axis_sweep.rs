//! Tabulate F, its derivatives, the metric determinant and curvature
//! extremes along the axis and write them as CSV.
//!
//! ```bash
//! cargo run --release --example axis_sweep -- 2 sweep.csv
//! ```

use std::fs::File;
use std::io::BufWriter;

use tubeke::potential::{solve_potential, ShootingConfig};
use tubeke::search::SearchConfig;
use tubeke::sweep::{axis_sweep, write_csv, DEFAULT_X_MAX};
use tubeke::TubeParams;

fn main() -> tubeke::Result<()> {
    let mut args = std::env::args().skip(1);
    let params = TubeParams::parse(&args.next().unwrap_or_else(|| "2".into()))?;
    let out = args.next().unwrap_or_else(|| "sweep.csv".into());

    let sol = solve_potential(params, &ShootingConfig::default())?;
    let rows = axis_sweep(&sol, 0.0, DEFAULT_X_MAX, 200, &SearchConfig::default())?;
    write_csv(&rows, BufWriter::new(File::create(&out)?))?;

    for r in rows.iter().step_by(40).chain(rows.last()) {
        println!(
            "x = {:.6}  F = {:>12.6}  Z = {:>12.6e}  Bis in [{:.6}, {:.6}]  max S = {:.6}",
            r.x, r.big_f, r.z, r.bis_min, r.bis_max, r.sect_max
        );
    }
    println!("wrote {} rows to {out}", rows.len());
    Ok(())
}
