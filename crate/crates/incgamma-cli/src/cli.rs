use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "incgamma", version, about = "Large-parameter asymptotics of the incomplete gamma function")]
pub struct Cli {
    /// Binary precision of the computation (at least 64).
    #[arg(long, global = true)]
    pub precision_bits: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    /// Write the data here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Attach run metadata (version, command line, time).
    #[arg(long, global = true)]
    pub meta: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Evaluate a truncated expansion, optionally with its bound or terminant layer.
    Eval(EvalArgs),
    /// Export exact expansion coefficients.
    Coeffs(CoeffsArgs),
    /// Late-coefficient approximations in the layout of the published tables.
    Late(LateArgs),
    /// Check remainder bounds against quadrature remainders on a grid.
    Bounds(BoundsArgs),
    /// Tabulate the transition across a Stokes line.
    StokesScan(ScanArgs),
    /// Regenerate the published tables and compare every printed digit.
    VerifyTables(TablesArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    A,
    Z,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CoeffKind {
    A,
    B,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Series,
    #[value(name = "series+bound")]
    SeriesBound,
    Hyper,
}

#[derive(Args, Debug)]
pub struct EvalArgs {
    /// Modulus of the large parameter a of Γ(a, λa).
    #[arg(long, conflicts_with = "z", required_unless_present = "z")]
    pub a: Option<String>,
    /// Modulus of z in Γ(z, z).
    #[arg(long)]
    pub z: Option<String>,
    /// Total argument in units of π (may exceed 1 to reach other sheets).
    #[arg(long = "arg", default_value = "0", allow_hyphen_values = true)]
    pub arg_pi: String,
    #[arg(long)]
    pub lambda: Option<String>,
    #[arg(long = "N")]
    pub n: usize,
    /// Odd-part truncation for Γ(z, z) (defaults to N).
    #[arg(long = "M")]
    pub m: Option<usize>,
    #[arg(long = "K")]
    pub k: Option<usize>,
    /// Odd-part re-expansion length for Γ(z, z) (defaults to K).
    #[arg(long = "L")]
    pub l: Option<usize>,
    #[arg(long, value_enum, default_value_t = Method::Series)]
    pub method: Method,
    /// Compare against the quadrature oracle.
    #[arg(long)]
    pub check: bool,
}

#[derive(Args, Debug)]
pub struct CoeffsArgs {
    #[arg(long, value_enum)]
    pub kind: CoeffKind,
    #[arg(long)]
    pub n_max: usize,
    /// Required for b_n(λ).
    #[arg(long)]
    pub lambda: Option<String>,
}

#[derive(Args, Debug)]
pub struct LateArgs {
    #[arg(long, value_enum)]
    pub kind: CoeffKind,
    /// Index of b_n.
    #[arg(long = "n")]
    pub n: Option<usize>,
    /// Index of a_j, j ≡ 1 or 3 (mod 4).
    #[arg(long)]
    pub index: Option<usize>,
    #[arg(long)]
    pub lambda: Option<String>,
    /// Truncation of the late expansion (defaults to the optimal one).
    #[arg(long = "K")]
    pub k: Option<usize>,
}

#[derive(Args, Debug)]
pub struct BoundsArgs {
    #[arg(long, value_enum)]
    pub kind: Kind,
    #[arg(long = "abs")]
    pub modulus: String,
    #[arg(long)]
    pub lambda: Option<String>,
    /// Arguments in units of π.
    #[arg(long = "arg", value_delimiter = ',', allow_hyphen_values = true, required = true)]
    pub args_pi: Vec<f64>,
    #[arg(long = "N", value_delimiter = ',', required = true)]
    pub ns: Vec<usize>,
}

#[derive(Args, Debug)]
pub struct ScanArgs {
    #[arg(long, value_enum)]
    pub kind: Kind,
    #[arg(long = "abs")]
    pub modulus: String,
    #[arg(long)]
    pub lambda: Option<String>,
    /// First argument of the grid, in units of π.
    #[arg(long, allow_hyphen_values = true)]
    pub from: f64,
    /// Last argument of the grid, in units of π.
    #[arg(long, allow_hyphen_values = true)]
    pub to: f64,
    /// Grid step in units of π.
    #[arg(long)]
    pub step: f64,
    #[arg(long = "N")]
    pub n: Option<usize>,
    #[arg(long = "M")]
    pub m: Option<usize>,
    #[arg(long = "K", default_value_t = 3)]
    pub k: usize,
}

#[derive(Args, Debug)]
pub struct TablesArgs {
    /// 1, 2 or 3; all tables when omitted.
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=3))]
    pub table: Option<u8>,
}
