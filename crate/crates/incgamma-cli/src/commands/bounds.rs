use incgamma::expansions::{error_bound_large_a, error_bound_z, remainder_quadratures_large_a, remainder_quadratures_z};
use incgamma::PrecisionContext;

use super::Env;
use crate::cli::{BoundsArgs, Kind};
use crate::error::{CliError, CliResult};
use crate::input;
use crate::render::Output;

const COLUMNS: [&str; 7] = ["arg_pi", "N", "remainder_abs", "quadrature_err", "bound", "regime", "holds"];

pub fn run(args: &BoundsArgs, env: &Env) -> CliResult<Output> {
    let ctx: &PrecisionContext = &env.ctx;
    let (name, reach) = match args.kind {
        Kind::A => ("a", 1.0),
        Kind::Z => ("z", 1.5),
    };
    if let Some(t) = args.args_pi.iter().find(|t| !(t.abs() < reach)) {
        return Err(CliError::usage(format!(
            "--arg {t}: remainder quadratures for {name} need |arg| < {reach}π"
        )));
    }
    let r = input::positive("abs", &args.modulus, ctx)?;
    let lambda = match args.kind {
        Kind::A => Some(input::lambda(args.lambda.as_ref(), ctx)?),
        Kind::Z => None,
    };
    let f = &env.fmt;
    let mut out = Output::new(COLUMNS.to_vec());
    for &t in &args.args_pi {
        let p = input::point(&r, &ctx.f64(t), ctx);
        let rems = match &lambda {
            Some(l) => remainder_quadratures_large_a(&p, l, &args.ns, ctx)?,
            None => remainder_quadratures_z(&p, &args.ns, ctx)?,
        };
        for (&n, rem) in args.ns.iter().zip(&rems) {
            let b = match &lambda {
                Some(l) => error_bound_large_a(&p, l, n, ctx)?,
                None => error_bound_z(&p, n, ctx)?,
            };
            let abs = rem.value.abs();
            let mut holds = &abs + &rem.abs_err <= b.bound;
            if let Some((lo, hi)) = &b.interval {
                let re = &rem.value.re;
                holds &= *lo <= re - &rem.abs_err && re + &rem.abs_err <= *hi;
            }
            out.failed |= !holds;
            out.push(vec![
                t.to_string(),
                n.to_string(),
                f.real(&abs),
                f.real(&rem.abs_err),
                f.real(&b.bound),
                b.regime.tag().to_string(),
                holds.to_string(),
            ]);
        }
    }
    Ok(out)
}
