use std::fs::File;
use std::io::{self, Write};
use std::path::Path;

use incgamma::{Complex, Real};
use serde_json::{json, Map, Value};

use crate::cli::Format;
use crate::error::CliResult;

/// Rows of decimal strings under fixed column names. `records` replaces the
/// row objects in JSON output when a command has a nested schema.
pub struct Output {
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
    pub records: Option<Vec<Value>>,
    /// Set when a verification step failed; the data is still written.
    pub failed: bool,
}

impl Output {
    pub fn new(columns: Vec<&'static str>) -> Self {
        Output { columns, rows: Vec::new(), records: None, failed: false }
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }
}

/// Significant decimal digits carried by `bits` binary digits.
pub fn digits_for(bits: usize) -> usize {
    ((bits as f64) * std::f64::consts::LOG10_2).floor() as usize
}

pub struct Fmt {
    pub digits: usize,
}

impl Fmt {
    pub fn real(&self, x: &Real) -> String {
        x.to_sci(self.digits)
    }

    pub fn re_im(&self, z: &Complex) -> [String; 2] {
        [self.real(&z.re), self.real(&z.im)]
    }
}

pub fn write(out: &Output, format: Format, path: Option<&Path>, precision_bits: usize, meta: Option<Value>) -> CliResult<()> {
    let mut sink: Box<dyn Write> = match path {
        Some(p) => Box::new(io::BufWriter::new(File::create(p)?)),
        None => Box::new(io::BufWriter::new(io::stdout().lock())),
    };
    match format {
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut sink);
            w.write_record(&out.columns)?;
            for r in &out.rows {
                w.write_record(r)?;
            }
            w.flush()?;
            drop(w);
            if let Some(m) = meta {
                let text = serde_json::to_string_pretty(&m).expect("metadata serializes");
                match path {
                    Some(p) => std::fs::write(meta_path(p), text + "\n")?,
                    None => eprintln!("{text}"),
                }
            }
        }
        Format::Json => {
            let records = match &out.records {
                Some(r) => r.clone(),
                None => out
                    .rows
                    .iter()
                    .map(|r| {
                        let obj: Map<String, Value> =
                            out.columns.iter().zip(r).map(|(c, v)| (c.to_string(), Value::String(v.clone()))).collect();
                        Value::Object(obj)
                    })
                    .collect(),
            };
            let mut doc = json!({
                "precision_bits": precision_bits,
                "digits": digits_for(precision_bits),
                "records": records,
            });
            if let Some(m) = meta {
                doc["meta"] = m;
            }
            serde_json::to_writer_pretty(&mut sink, &doc).map_err(io::Error::from)?;
            writeln!(sink)?;
        }
    }
    sink.flush()?;
    Ok(())
}

fn meta_path(p: &Path) -> std::path::PathBuf {
    let mut s = p.as_os_str().to_owned();
    s.push(".meta.json");
    s.into()
}

pub fn metadata(precision_bits: usize) -> Value {
    let secs = std::time::SystemTime::now()
        .duration_since(std::time::UNIX_EPOCH)
        .map(|d| d.as_secs())
        .unwrap_or(0);
    json!({
        "tool": "incgamma",
        "version": env!("CARGO_PKG_VERSION"),
        "command": std::env::args().collect::<Vec<_>>(),
        "precision_bits": precision_bits,
        "unix_time": secs,
    })
}
