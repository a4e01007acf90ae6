use incgamma::coefficients::{a_coeffs_exact, b_poly_recurrence};
use incgamma::Real;
use serde_json::{json, Value};

use super::Env;
use crate::cli::{CoeffKind, CoeffsArgs};
use crate::error::{CliError, CliResult};
use crate::input;
use crate::render::Output;

const COLUMNS: [&str; 7] = ["n", "lambda", "value", "num", "den", "s", "poly"];

pub fn run(args: &CoeffsArgs, env: &Env) -> CliResult<Output> {
    let ctx = &env.ctx;
    let mut out = Output::new(COLUMNS.to_vec());
    let mut records = Vec::new();
    match args.kind {
        CoeffKind::A => {
            for (n, c) in a_coeffs_exact(args.n_max).iter().enumerate() {
                let value = env.fmt.real(&c.to_real(ctx));
                let (num, den) = (c.rational.numer().to_string(), c.rational.denom().to_string());
                records.push(json!({
                    "n": n,
                    "lambda": Value::Null,
                    "value": value,
                    "exact": { "num": num, "den": den, "s": c.s },
                }));
                out.push(vec![n.to_string(), String::new(), value, num, den, c.s.to_string(), String::new()]);
            }
        }
        CoeffKind::B => {
            let text = args.lambda.as_ref().ok_or_else(|| CliError::usage("--kind b needs --lambda"))?;
            let lambda = input::rational("lambda", text)?;
            for (n, p) in b_poly_recurrence(args.n_max).iter().enumerate() {
                let value = env.fmt.real(&Real::from_rational(&p.eval_rational(&lambda), ctx.wp()));
                let poly: Vec<String> = p.coefficients().iter().map(|c| c.to_string()).collect();
                records.push(json!({
                    "n": n,
                    "lambda": text,
                    "value": value,
                    "exact": { "poly": poly },
                }));
                out.push(vec![n.to_string(), text.clone(), value, String::new(), String::new(), String::new(), poly.join(" ")]);
            }
        }
    }
    out.records = Some(records);
    Ok(out)
}
