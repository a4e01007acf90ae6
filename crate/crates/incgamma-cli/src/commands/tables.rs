use incgamma::coefficients::{a_coeffs_exact, b_poly_recurrence};
use incgamma::late::{a_late, b_late, b_late_optimal_k, LateBranch, LateVariant};
use incgamma::numerics::real_to_rational;
use incgamma::{PrecisionContext, Real};

use super::Env;
use crate::cli::TablesArgs;
use crate::error::{CliError, CliResult};
use crate::render::Output;

pub const DEFAULT_BITS: usize = 512;
/// The longest printed values carry 40 significant digits.
pub const MIN_BITS: usize = 136;

const COLUMNS: [&str; 5] = ["table", "quantity", "printed", "computed", "status"];

/// A printed cell `0.d₁…dₖ × 10^e`.
struct Cell {
    quantity: String,
    mantissa: &'static str,
    exp: i64,
    value: Real,
    /// Compare magnitudes only.
    unsigned: bool,
}

fn cell(quantity: impl Into<String>, mantissa: &'static str, exp: i64, value: Real) -> Cell {
    Cell { quantity: quantity.into(), mantissa, exp, value, unsigned: false }
}

type B100Row = (i64, usize, &'static str, i64, &'static str, i64, &'static str, i64, &'static str, i64);

const TABLE1: [B100Row; 3] = [
    (8, 55, "0.7688481106808590674525145642326792894187", 257, "0.7688481106808590674525145642326792893371", 257,
     "0.816", 220, "0.1582", 221),
    (10, 48, "0.2328121261355049863437924678844708059197", 266, "0.2328121261355049863437924678847160113033", 266,
     "-0.2452053836", 236, "0.4965854763", 236),
    (15, 35, "0.1363711375012746147234623654087290250956", 282, "0.1363711375012746147228683544438226390236", 282,
     "0.5940109649063860720", 261, "0.11702600900350747722", 262),
];

struct LateTable {
    index: usize,
    branch: LateBranch,
    exact: (&'static str, i64),
    inverse_factorial: [(&'static str, i64); 3],
    zeta: [(&'static str, i64); 3],
    dingle: [(&'static str, i64); 2],
    /// The printed Dingle error has the opposite sign to exact − approximation
    /// of the printed values themselves.
    dingle_sign_inconsistent: bool,
}

const TABLE2: LateTable = LateTable {
    index: 201,
    branch: LateBranch::OneMod4,
    exact: ("-0.12659638780775052710147996185410566", 77),
    inverse_factorial: [("-0.12659638780775052710147996185407205", 77), ("-0.3361", 46), ("0.12145", 47)],
    zeta: [("-0.12659638780775052710147996185414229", 77), ("0.3663", 46), ("0.12145", 47)],
    dingle: [("-0.12659638780775052710147996185410717", 77), ("-0.151", 45)],
    dingle_sign_inconsistent: true,
};

const TABLE3: LateTable = LateTable {
    index: 203,
    branch: LateBranch::ThreeMod4,
    exact: ("-0.20462395914727659153115140698806033", 78),
    inverse_factorial: [("-0.20462395914727659153115140698802838", 78), ("-0.3194", 47), ("0.9761", 47)],
    zeta: [("-0.20462395914727659153115140698808575", 78), ("0.2542", 47), ("0.9761", 47)],
    dingle: [("-0.20462395914727659153115140698805707", 78), ("-0.326", 46)],
    dingle_sign_inconsistent: false,
};

fn table1(ctx: &PrecisionContext) -> CliResult<(Vec<Cell>, Vec<(String, String, String)>)> {
    let poly = &b_poly_recurrence(100)[100];
    let mut cells = Vec::new();
    let mut ks = Vec::new();
    for (lam, k, ex, ee, ap, ae, er, ere, bd, bde) in TABLE1 {
        let lambda = ctx.int(lam);
        let opt = b_late_optimal_k(lam as f64, 100);
        ks.push((format!("lambda={lam} K"), k.to_string(), opt.to_string()));
        let exact = Real::from_rational(&poly.eval_rational(&real_to_rational(&lambda)), ctx.wp());
        let r = b_late(&lambda, 100, k, ctx)?;
        let bound = r.bound.clone().ok_or_else(|| CliError::Runtime("missing b_n bound".into()))?;
        cells.push(cell(format!("lambda={lam} exact b_100"), ex, ee, exact.clone()));
        cells.push(cell(format!("lambda={lam} approximation"), ap, ae, r.approx.clone()));
        cells.push(cell(format!("lambda={lam} error"), er, ere, &exact - &r.approx));
        cells.push(cell(format!("lambda={lam} error bound"), bd, bde, bound));
    }
    Ok((cells, ks))
}

fn late_table(t: &LateTable, exact: Real, ctx: &PrecisionContext) -> CliResult<Vec<Cell>> {
    let j = t.index;
    let run = |v| a_late(50, t.branch, v, 50, ctx);
    let plain = run(LateVariant::InverseFactorial)?;
    let zeta = run(LateVariant::Zeta)?;
    let dingle = run(LateVariant::Dingle)?;
    let bound = |r: &incgamma::late::LateApprox| r.bound.clone().ok_or_else(|| CliError::Runtime("missing bound".into()));
    let mut cells = vec![
        cell(format!("exact a_{j}"), t.exact.0, t.exact.1, exact.clone()),
        cell("inverse factorial approximation", t.inverse_factorial[0].0, t.inverse_factorial[0].1, plain.approx.clone()),
        cell("inverse factorial error", t.inverse_factorial[1].0, t.inverse_factorial[1].1, &exact - &plain.approx),
        cell("inverse factorial error bound", t.inverse_factorial[2].0, t.inverse_factorial[2].1, bound(&plain)?),
        cell("zeta approximation", t.zeta[0].0, t.zeta[0].1, zeta.approx.clone()),
        cell("zeta error", t.zeta[1].0, t.zeta[1].1, &exact - &zeta.approx),
        cell("zeta error bound", t.zeta[2].0, t.zeta[2].1, bound(&zeta)?),
        cell("Dingle approximation", t.dingle[0].0, t.dingle[0].1, dingle.approx.clone()),
    ];
    let mut err = cell("Dingle error", t.dingle[1].0, t.dingle[1].1, &exact - &dingle.approx);
    err.unsigned = t.dingle_sign_inconsistent;
    cells.push(err);
    Ok(cells)
}

/// Rounds `c.value` to the printed digit count: `(computed, status, ok)`.
fn compare(c: &Cell) -> (String, &'static str, bool) {
    let (neg, digits) = match c.mantissa.strip_prefix('-') {
        Some(m) => (true, m),
        None => (false, c.mantissa),
    };
    let digits = digits.strip_prefix("0.").expect("printed mantissa");
    let (n, ours, e10) = c.value.decimal_digits(digits.len());
    let computed = format!("{}0.{}e{}", if n { "-" } else { "" }, ours, e10 + 1);
    let ok = (c.unsigned || n == neg) && ours == digits && e10 + 1 == c.exp;
    let status = match (ok, c.unsigned) {
        (true, false) => "ok",
        (true, true) => "ok (printed sign inconsistent)",
        (false, _) => "MISMATCH",
    };
    (computed, status, ok)
}

pub fn run(args: &TablesArgs, bits: usize, env: &Env) -> CliResult<Output> {
    if bits < MIN_BITS {
        return Err(CliError::usage(format!(
            "verify-tables needs --precision-bits ≥ {MIN_BITS} to resolve the printed 40-digit values, got {bits}"
        )));
    }
    let ctx = &env.ctx;
    let wanted = |t: u8| args.table.map_or(true, |x| x == t);
    let mut out = Output::new(COLUMNS.to_vec());
    let record = |out: &mut Output, table: u8, c: &Cell| {
        let (computed, status, ok) = compare(c);
        out.failed |= !ok;
        out.push(vec![
            table.to_string(),
            c.quantity.clone(),
            format!("{}e{}", c.mantissa, c.exp),
            computed,
            status.to_string(),
        ]);
    };
    if wanted(1) {
        let (cells, ks) = table1(ctx)?;
        for (q, printed, computed) in ks {
            let ok = printed == computed;
            out.failed |= !ok;
            out.push(vec!["1".into(), q, printed, computed, if ok { "ok" } else { "MISMATCH" }.into()]);
        }
        for c in &cells {
            record(&mut out, 1, c);
        }
    }
    if wanted(2) || wanted(3) {
        let a = a_coeffs_exact(if wanted(3) { 203 } else { 201 });
        for (t, spec) in [(2u8, &TABLE2), (3u8, &TABLE3)] {
            if wanted(t) {
                for c in late_table(spec, a[spec.index].to_real(ctx), ctx)? {
                    record(&mut out, t, &c);
                }
            }
        }
    }
    Ok(out)
}
