//! JSON reports and CSV plot data.

use std::fmt::Write as _;

use isodbt::chain::{eigenstate_wronskian, extended_potential, ChainSpec};
use isodbt::numeric::{linspace, logspace, FloatFn, GridSpec};

use crate::bundle::ReportBundle;
use crate::error::CliError;

/// Plot points used when no `--grid` is given.
pub const PLOT_POINTS: usize = 801;

/// Pretty-printed, newline-terminated. Field order is fixed by the schema
/// and floats print in shortest round-trip form, so output is reproducible.
pub fn to_json<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

pub fn from_json(text: &str) -> Result<ReportBundle, CliError> {
    serde_json::from_str(text).map_err(|e| CliError::Input(format!("malformed report: {e}")))
}

/// A quarter of the points log-spaced on `[x_min, sqrt(x_min x_max)]`, the
/// rest linear up to `x_max`. The first and last points are the grid ends.
pub fn plot_points(grid: &GridSpec) -> Vec<f64> {
    let split = (grid.x_min * grid.x_max).sqrt();
    let n_log = (grid.points / 4).max(2);
    let n_lin = grid.points.saturating_sub(n_log).max(1);
    let mut xs = logspace(grid.x_min, split, n_log);
    xs.extend(linspace(split, grid.x_max, n_lin + 1).into_iter().skip(1));
    xs
}

/// Columns `x, V, psi_0 .. psi_{levels-1}`; each eigenstate is scaled to unit
/// maximum modulus on the plotted points and is positive at the first point.
pub fn plot_csv(chain: &ChainSpec, levels: u32, grid: &GridSpec) -> Result<String, CliError> {
    let xs = plot_points(grid);
    let v = FloatFn::new(&extended_potential(chain)?.potential);
    let mut columns: Vec<Vec<f64>> = Vec::with_capacity(levels as usize);
    for k in 0..levels {
        let psi = FloatFn::new(&eigenstate_wronskian(chain, k)?.function);
        let logs: Vec<(f64, i32)> = xs.iter().map(|&x| psi.eval_log_abs(x)).collect();
        let peak = logs.iter().map(|(l, _)| *l).fold(f64::NEG_INFINITY, f64::max);
        let orient = logs.iter().map(|&(_, s)| s).find(|&s| s != 0).unwrap_or(1) as f64;
        columns.push(logs.iter().map(|&(l, s)| orient * s as f64 * (l - peak).exp()).collect());
    }
    let mut out = String::from("x,V");
    for k in 0..levels {
        write!(out, ",psi_{k}").unwrap();
    }
    out.push('\n');
    for (i, &x) in xs.iter().enumerate() {
        write!(out, "{x},{}", v.eval(x)).unwrap();
        for col in &columns {
            write!(out, ",{}", col[i]).unwrap();
        }
        out.push('\n');
    }
    Ok(out)
}
