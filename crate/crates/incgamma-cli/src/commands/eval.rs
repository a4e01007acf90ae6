use incgamma::expansions::{error_bound_large_a, error_bound_z, eval_series_large_a, eval_series_z};
use incgamma::gamma::{incomplete_gamma_large_a_normalized, incomplete_gamma_zz_normalized};
use incgamma::hyper::{hyper_large_a, hyper_z};
use incgamma::{Complex, Error, Real};

use super::Env;
use crate::cli::{EvalArgs, Method};
use crate::error::{CliError, CliResult};
use crate::input;
use crate::render::Output;

const COLUMNS: [&str; 14] = [
    "parameter", "modulus", "arg_pi", "lambda", "N", "method", "value_re", "value_im", "bound", "regime", "certified",
    "oracle_re", "oracle_im", "abs_diff",
];

struct Evaluated {
    value: Complex,
    bound: Option<Real>,
    regime: &'static str,
    certified: Option<bool>,
}

fn certified_sector(e: Error, what: &str) -> CliError {
    match e {
        Error::Sector(m) => CliError::Precondition(format!("{m}; {what}")),
        other => other.into(),
    }
}

pub fn run(args: &EvalArgs, env: &Env) -> CliResult<Output> {
    let ctx = &env.ctx;
    let (name, modulus) = match (&args.a, &args.z) {
        (Some(a), None) => ("a", a),
        (None, Some(z)) => ("z", z),
        _ => return Err(CliError::usage("exactly one of --a and --z is required")),
    };
    let r = input::positive(name, modulus, ctx)?;
    let turns = input::real("arg", &args.arg_pi, ctx)?;
    let p = input::point(&r, &turns, ctx);
    let lambda = if name == "a" { Some(input::lambda(args.lambda.as_ref(), ctx)?) } else { None };
    let need_k = || args.k.ok_or_else(|| CliError::usage("--method hyper needs --K"));

    let ev = match (lambda.as_ref(), args.method) {
        (Some(l), Method::Series) => Evaluated {
            value: eval_series_large_a(&p, l, args.n, ctx)?.partial_sum,
            bound: None,
            regime: "",
            certified: None,
        },
        (Some(l), Method::SeriesBound) => {
            let s = eval_series_large_a(&p, l, args.n, ctx)?;
            let b = error_bound_large_a(&p, l, args.n, ctx)
                .map_err(|e| certified_sector(e, "bounds for the large-a series are certified for |arg a| < 3π/2"))?;
            Evaluated { value: s.partial_sum, bound: Some(b.bound), regime: b.regime.tag(), certified: Some(true) }
        }
        (Some(l), Method::Hyper) => {
            let h = hyper_large_a(&p, l, args.n, need_k()?, ctx)
                .map_err(|e| certified_sector(e, "the re-expansion holds for |arg a| < 2π, certified for |arg a| ≤ π"))?;
            hyper_record(h)
        }
        (None, Method::Series) => Evaluated {
            value: eval_series_z(&p, args.n, ctx)?.partial_sum,
            bound: None,
            regime: "",
            certified: None,
        },
        (None, Method::SeriesBound) => {
            let s = eval_series_z(&p, args.n, ctx)?;
            let b = error_bound_z(&p, args.n, ctx)
                .map_err(|e| certified_sector(e, "bounds for the Γ(z,z) series are certified for |arg z| < 3π/2"))?;
            Evaluated { value: s.partial_sum, bound: Some(b.bound), regime: b.regime.tag(), certified: Some(true) }
        }
        (None, Method::Hyper) => {
            let k = need_k()?;
            let h = hyper_z(&p, args.n, args.m.unwrap_or(args.n), k, args.l.unwrap_or(k), ctx)
                .map_err(|e| certified_sector(e, "the re-expansion holds for |arg z| < 3π, certified for |arg z| ≤ π/2"))?;
            hyper_record(h)
        }
    };

    let f = &env.fmt;
    let [vr, vi] = f.re_im(&ev.value);
    let (or, oi, diff) = if args.check {
        let o = match lambda.as_ref() {
            Some(l) => incomplete_gamma_large_a_normalized(&p, l, ctx)?,
            None => incomplete_gamma_zz_normalized(&p, ctx)?,
        };
        let [a, b] = f.re_im(&o.value);
        (a, b, f.real(&(&o.value - &ev.value).abs()))
    } else {
        Default::default()
    };
    let method = match args.method {
        Method::Series => "series",
        Method::SeriesBound => "series+bound",
        Method::Hyper => "hyper",
    };
    let mut out = Output::new(COLUMNS.to_vec());
    out.push(vec![
        name.to_string(),
        modulus.clone(),
        args.arg_pi.clone(),
        args.lambda.clone().unwrap_or_default(),
        args.n.to_string(),
        method.to_string(),
        vr,
        vi,
        ev.bound.as_ref().map(|b| f.real(b)).unwrap_or_default(),
        ev.regime.to_string(),
        ev.certified.map(|c| c.to_string()).unwrap_or_default(),
        or,
        oi,
        diff,
    ]);
    Ok(out)
}

fn hyper_record(h: incgamma::hyper::HyperEvaluation) -> Evaluated {
    Evaluated {
        value: h.total(),
        regime: if h.certified { "HYPER_BOUND" } else { "HYPER_ORDER" },
        certified: Some(h.certified),
        bound: Some(h.residual_bound),
    }
}
