mod bounds;
mod coeffs;
mod eval;
mod late;
mod scan;
mod tables;

use incgamma::PrecisionContext;

use crate::cli::{Cli, Command};
use crate::error::CliResult;
use crate::render::{digits_for, Fmt, Output};

pub const DEFAULT_BITS: usize = 256;

pub struct Env {
    pub ctx: PrecisionContext,
    pub fmt: Fmt,
}

pub fn precision(cli: &Cli) -> usize {
    match (&cli.command, cli.precision_bits) {
        (_, Some(p)) => p,
        (Command::VerifyTables(_), None) => tables::DEFAULT_BITS,
        _ => DEFAULT_BITS,
    }
}

pub fn run(cli: &Cli, bits: usize) -> CliResult<Output> {
    let ctx = PrecisionContext::new(bits)?;
    let env = Env { ctx, fmt: Fmt { digits: digits_for(bits) } };
    match &cli.command {
        Command::Eval(a) => eval::run(a, &env),
        Command::Coeffs(a) => coeffs::run(a, &env),
        Command::Late(a) => late::run(a, &env),
        Command::Bounds(a) => bounds::run(a, &env),
        Command::StokesScan(a) => scan::run(a, &env),
        Command::VerifyTables(a) => tables::run(a, bits, &env),
    }
}
