use incgamma::coefficients::{a_coeffs_exact, b_poly_recurrence};
use incgamma::late::{a_late, a_late_optimal_k, b_late, b_late_optimal_k, LateApprox, LateBranch, LateVariant};
use incgamma::Real;

use super::Env;
use crate::cli::{CoeffKind, LateArgs};
use crate::error::{CliError, CliResult};
use crate::input;
use crate::render::{Fmt, Output};

const COLUMNS: [&str; 4] = ["quantity", "value", "error", "bound"];

fn approx_row(f: &Fmt, exact: &Real, r: &LateApprox) -> Vec<String> {
    vec![
        r.variant.tag().to_string(),
        f.real(&r.approx),
        f.real(&(exact - &r.approx)),
        r.bound.as_ref().map(|b| f.real(b)).unwrap_or_default(),
    ]
}

pub fn run(args: &LateArgs, env: &Env) -> CliResult<Output> {
    let ctx = &env.ctx;
    let f = &env.fmt;
    let mut out = Output::new(COLUMNS.to_vec());
    match args.kind {
        CoeffKind::B => {
            let n = args.n.ok_or_else(|| CliError::usage("--kind b needs --n"))?;
            let text = args.lambda.as_ref().ok_or_else(|| CliError::usage("--kind b needs --lambda"))?;
            let lambda_q = input::rational("lambda", text)?;
            let lambda = input::lambda(Some(text), ctx)?;
            let k = args.k.unwrap_or_else(|| b_late_optimal_k(lambda.to_f64(), n));
            let exact = Real::from_rational(&b_poly_recurrence(n)[n].eval_rational(&lambda_q), ctx.wp());
            out.push(vec!["K".into(), k.to_string(), String::new(), String::new()]);
            out.push(vec!["exact".into(), f.real(&exact), String::new(), String::new()]);
            out.push(approx_row(f, &exact, &b_late(&lambda, n, k, ctx)?));
        }
        CoeffKind::A => {
            let j = args.index.ok_or_else(|| CliError::usage("--kind a needs --index"))?;
            let (n, branch) = match j % 4 {
                1 => ((j - 1) / 4, LateBranch::OneMod4),
                3 => ((j - 3) / 4, LateBranch::ThreeMod4),
                _ => return Err(CliError::usage(format!("--index must be 1 or 3 mod 4, got {j}"))),
            };
            if n == 0 {
                return Err(CliError::usage("--index must be at least 5"));
            }
            let k = args.k.unwrap_or_else(|| a_late_optimal_k(n));
            let exact = a_coeffs_exact(j)[j].to_real(ctx);
            out.push(vec!["K".into(), k.to_string(), String::new(), String::new()]);
            out.push(vec!["exact".into(), f.real(&exact), String::new(), String::new()]);
            for v in [LateVariant::InverseFactorial, LateVariant::Zeta, LateVariant::Dingle, LateVariant::Xi] {
                out.push(approx_row(f, &exact, &a_late(n, branch, v, k, ctx)?));
            }
        }
    }
    Ok(out)
}
