use incgamma::hyper::{optimal_n_large_a, optimal_nm_z, stokes_scan_large_a, stokes_scan_z, ScanRow};

use super::Env;
use crate::cli::{Kind, ScanArgs};
use crate::error::{CliError, CliResult};
use crate::input;
use crate::render::Output;

const COLUMNS: [&str; 9] =
    ["theta", "exact_re", "exact_im", "terminant_re", "terminant_im", "erf_re", "erf_im", "thm_bound", "certified"];

pub fn run(args: &ScanArgs, env: &Env) -> CliResult<Output> {
    let ctx = &env.ctx;
    let grid = input::grid(args.from, args.to, args.step)?;
    let (lo, hi) = match args.kind {
        Kind::A => (0.5, 1.5),
        Kind::Z => (1.0, 2.0),
    };
    if let Some(t) = grid.iter().find(|t| !(lo < t.abs() && t.abs() < hi)) {
        return Err(CliError::usage(format!("grid point {t}π lies outside the scanned sector {lo}π < |θ| < {hi}π")));
    }
    let r = input::positive("abs", &args.modulus, ctx)?;
    let pi = std::f64::consts::PI;
    let thetas: Vec<f64> = grid.iter().map(|t| t * pi).collect();
    let rows: Vec<ScanRow> = match args.kind {
        Kind::A => {
            let lambda = input::lambda(args.lambda.as_ref(), ctx)?;
            let n = args.n.unwrap_or_else(|| optimal_n_large_a(r.to_f64(), lambda.to_f64()));
            stokes_scan_large_a(&r, &lambda, &thetas, n, args.k, ctx)?
        }
        Kind::Z => {
            let n = args.n.unwrap_or_else(|| optimal_nm_z(r.to_f64()));
            stokes_scan_z(&r, &thetas, n, args.m.unwrap_or(n), args.k, ctx)?
        }
    };
    let f = &env.fmt;
    let mut out = Output::new(COLUMNS.to_vec());
    for (t, row) in grid.iter().zip(&rows) {
        let [er, ei] = f.re_im(&row.exact);
        let [tr, ti] = f.re_im(&row.terminant);
        let [fr, fi] = f.re_im(&row.erf);
        out.push(vec![label(*t), er, ei, tr, ti, fr, fi, f.real(&row.thm_bound), row.certified.to_string()]);
    }
    Ok(out)
}

/// Grid point without binary noise such as `1.4000000000000001`.
fn label(t: f64) -> String {
    ((t * 1e12).round() / 1e12).to_string()
}
