//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 when the answer is negative (violations,
//! not spherically closed, refused system), 2 on usage or input errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::Value;

use crate::colors;
use crate::enumerate::{self, EnumOptions};
use crate::io::{self, CatalogueReport, CensusReport, ClosureReport, ColorReport, EnumerationReport};
use crate::io::{LatticeReport, LooseReport, RootsReport, SystemFile, TangentReport, ValidationOut};
use crate::rootsys::{Character, RootSystem};
use crate::sphroots::Catalogue;
use crate::system::{self, SphericalSystem};
use crate::tangent;

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Table,
}

#[derive(Debug, Parser)]
#[command(name = "sphsys", version, about = "Spherical roots and spherical systems of reductive groups")]
pub struct Cli {
    #[arg(long, value_enum, default_value = "json", global = true)]
    pub format: Format,
    /// Write the report to FILE instead of standard output.
    #[arg(long, value_name = "FILE", global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Positive roots of a Dynkin type such as "B3" or "A1xG2".
    Roots { dynkin: String },
    /// Spherical roots of a Dynkin type.
    Sroots { dynkin: String },
    /// Check the axioms of a spherical system file.
    Validate { file: PathBuf },
    /// Decide whether a spherical system is spherically closed.
    Closure { file: PathBuf },
    /// Loose spherical roots of a Dynkin type.
    Loose { dynkin: String },
    /// Colors, weights, the a-matrix and the group Xi(C).
    Colors { file: PathBuf },
    /// Whether (gamma, chi) lies in the span of the lambda_D.
    Lattice {
        file: PathBuf,
        /// gamma in simple-root coordinates, e.g. "1,1,0".
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        vector: Vec<i64>,
        /// Component in Xi(C), Smith coordinates; zero when omitted.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        chi: Option<Vec<i64>>,
    },
    /// Tangent-space window and Hilbert-scheme profile.
    Tangent { file: PathBuf },
    /// List every spherical system of a Dynkin type.
    Enumerate {
        dynkin: String,
        /// Only spherically closed systems.
        #[arg(long)]
        closed: bool,
        #[arg(long, value_name = "N")]
        max_sigma: Option<usize>,
        /// One system file per line.
        #[arg(long)]
        jsonl: bool,
        /// Report progress on stderr every N candidate (S^p, Sigma) pairs.
        #[arg(long, value_name = "N")]
        progress: Option<usize>,
    },
    /// Count the spherical systems of a Dynkin type.
    Census {
        dynkin: String,
        #[arg(long)]
        closed: bool,
        #[arg(long, value_name = "N")]
        max_sigma: Option<usize>,
    },
    /// JSON schema of the system file or of a report.
    Schema { name: String },
}

struct Failure {
    code: i32,
    message: String,
}

fn usage(message: impl ToString) -> Failure {
    Failure { code: EXIT_USAGE, message: message.to_string() }
}

fn negative(message: impl ToString) -> Failure {
    Failure { code: EXIT_NEGATIVE, message: message.to_string() }
}

struct Output {
    text: String,
    code: i32,
}

/// Runs one invocation, writing the report to `out` (or `--out`) and
/// errors to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    let result = dispatch(&cli);
    match result {
        Ok(output) => {
            let written = match &cli.out {
                Some(path) => std::fs::write(path, output.text.as_bytes()),
                None => out.write_all(output.text.as_bytes()),
            };
            if let Err(e) = written {
                let _ = writeln!(err, "error: cannot write output: {e}");
                return EXIT_USAGE;
            }
            output.code
        }
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn render<T: Serialize>(value: &T, format: Format) -> String {
    let json = serde_json::to_value(value).expect("reports serialize");
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&json).expect("reports serialize");
            s.push('\n');
            s
        }
        Format::Table => {
            let mut s = String::new();
            table(&json, 0, &mut s);
            s
        }
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn is_flat(v: &Value) -> bool {
    match v {
        Value::Array(items) => items.iter().all(|i| !i.is_object()),
        Value::Object(_) => false,
        _ => true,
    }
}

/// Plain-text rendering of a report: scalars as `key: value`, arrays of
/// flat objects as aligned columns, nested objects indented.
fn table(v: &Value, indent: usize, out: &mut String) {
    let pad = " ".repeat(indent);
    let Value::Object(map) = v else {
        out.push_str(&format!("{pad}{}\n", scalar(v)));
        return;
    };
    for (key, value) in map {
        match value {
            Value::Object(_) => {
                out.push_str(&format!("{pad}{key}:\n"));
                table(value, indent + 2, out);
            }
            Value::Array(items) if items.iter().any(|i| i.is_object()) => {
                out.push_str(&format!("{pad}{key}:\n"));
                let flat = items.iter().all(|i| i.as_object().is_some_and(|o| o.values().all(is_flat)));
                if flat {
                    columns(items, indent + 2, out);
                } else {
                    for (n, item) in items.iter().enumerate() {
                        out.push_str(&format!("{pad}  [{n}]\n"));
                        table(item, indent + 4, out);
                    }
                }
            }
            other => out.push_str(&format!("{pad}{key}: {}\n", scalar(other))),
        }
    }
}

fn columns(items: &[Value], indent: usize, out: &mut String) {
    let mut keys: Vec<String> = Vec::new();
    for item in items {
        for k in item.as_object().expect("flat objects").keys() {
            if !keys.contains(k) {
                keys.push(k.clone());
            }
        }
    }
    let cells: Vec<Vec<String>> =
        items.iter().map(|item| keys.iter().map(|k| item.get(k).map_or(String::new(), scalar)).collect()).collect();
    let widths: Vec<usize> = keys
        .iter()
        .enumerate()
        .map(|(c, k)| cells.iter().map(|r| r[c].len()).chain([k.len()]).max().unwrap_or(0))
        .collect();
    let line = |row: &[String]| -> String {
        let parts: Vec<String> = row.iter().zip(&widths).map(|(s, &w)| format!("{s:<w$}")).collect();
        format!("{}{}\n", " ".repeat(indent), parts.join("  ").trim_end())
    };
    out.push_str(&line(&keys));
    for row in &cells {
        out.push_str(&line(row));
    }
}

fn root_system(spec: &str) -> Result<RootSystem, Failure> {
    RootSystem::parse(spec).map_err(usage)
}

fn load(file: &std::path::Path) -> Result<(Catalogue, SphericalSystem), Failure> {
    io::load_system(file).map_err(usage)
}

fn dispatch(cli: &Cli) -> Result<Output, Failure> {
    let fmt = cli.format;
    let ok = |text: String| Ok(Output { text, code: EXIT_OK });
    match &cli.command {
        Command::Roots { dynkin } => ok(render(&RootsReport::new(&root_system(dynkin)?), fmt)),
        Command::Sroots { dynkin } => ok(render(&CatalogueReport::new(&Catalogue::new(&root_system(dynkin)?)), fmt)),
        Command::Loose { dynkin } => {
            let report = LooseReport::new(&Catalogue::new(&root_system(dynkin)?));
            ok(render(&report, fmt))
        }
        Command::Validate { file } => {
            let (cat, sys) = load(file)?;
            let report = system::validate(&cat, &sys).map_err(usage)?;
            let code = if report.is_valid() { EXIT_OK } else { EXIT_NEGATIVE };
            Ok(Output { text: render(&ValidationOut::from(&report), fmt), code })
        }
        Command::Closure { file } => {
            let (cat, sys) = load(file)?;
            let report = system::validate(&cat, &sys).map_err(usage)?;
            let out = if report.is_valid() {
                let witness = system::closure_witness(&cat, &sys);
                ClosureReport {
                    valid: true,
                    spherically_closed: Some(witness.is_none()),
                    witness: witness.map(|j| sys.sigma()[j].chi.0.clone()),
                }
            } else {
                ClosureReport { valid: false, spherically_closed: None, witness: None }
            };
            let code = if out.spherically_closed == Some(true) { EXIT_OK } else { EXIT_NEGATIVE };
            Ok(Output { text: render(&out, fmt), code })
        }
        Command::Colors { file } => {
            let (cat, sys) = load(file)?;
            let table = colors::lambda_weights(&cat, &sys).map_err(negative)?;
            ok(render(&ColorReport::from(&table), fmt))
        }
        Command::Lattice { file, vector, chi } => {
            let (cat, sys) = load(file)?;
            let rank = cat.root_system().rank();
            if vector.len() != rank {
                return Err(usage(format!("--vector needs {rank} coordinates, got {}", vector.len())));
            }
            let table = colors::lambda_weights(&cat, &sys).map_err(negative)?;
            let width = table.cgroup.rank + table.cgroup.torsion.len();
            let chi = chi.clone().unwrap_or_else(|| vec![0; width]);
            if chi.len() != width {
                return Err(usage(format!("--chi needs {width} coordinates, got {}", chi.len())));
            }
            let inside = tangent::in_z_delta(&cat, &table, &Character(vector.clone()), &chi).map_err(usage)?;
            ok(render(&LatticeReport { vector: vector.clone(), chi, in_lattice: inside }, fmt))
        }
        Command::Tangent { file } => {
            let (cat, sys) = load(file)?;
            let window = tangent::sigma_delta_window(&cat, &sys).map_err(negative)?;
            let profile = tangent::hilb_profile(&cat, &sys).map_err(negative)?;
            ok(render(&TangentReport::new(&window, &profile), fmt))
        }
        Command::Enumerate { dynkin, closed, max_sigma, jsonl, progress } => {
            let rs = root_system(dynkin)?;
            let opts = EnumOptions { closed_only: *closed, max_sigma: *max_sigma, progress: *progress };
            let stream = enumerate::enumerate_systems(&rs, opts).map_err(usage)?;
            if *jsonl {
                let mut text = String::new();
                for sys in stream {
                    text.push_str(&serde_json::to_string(&SystemFile::from_system(&rs, &sys)).expect("serializes"));
                    text.push('\n');
                }
                return ok(text);
            }
            let systems: Vec<SystemFile> = stream.map(|s| SystemFile::from_system(&rs, &s)).collect();
            let report = EnumerationReport { dynkin: rs.dynkin_type().to_string(), count: systems.len(), systems };
            ok(render(&report, fmt))
        }
        Command::Census { dynkin, closed, max_sigma } => {
            let rs = root_system(dynkin)?;
            let opts = EnumOptions { closed_only: *closed, max_sigma: *max_sigma, progress: None };
            let c = enumerate::census(&rs, opts).map_err(usage)?;
            ok(render(&CensusReport::new(&rs, *closed, *max_sigma, &c), fmt))
        }
        Command::Schema { name } => {
            let schemas = io::schemas();
            let schema = schemas.get(name.as_str()).ok_or_else(|| {
                usage(format!(
                    "unknown schema {name:?}; expected one of {}",
                    schemas.keys().copied().collect::<Vec<_>>().join(", ")
                ))
            })?;
            let mut text = serde_json::to_string_pretty(schema).expect("schemas serialize");
            text.push('\n');
            ok(text)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("sphsys").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn sroots_a1() {
        let (code, out, _) = call(&["sroots", "A1"]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["count"], 2);
        assert_eq!(v["roots"][1]["coeffs"], serde_json::json!([2]));
    }

    #[test]
    fn usage_errors_exit_2() {
        assert_eq!(call(&["roots", "C2"]).0, 2);
        assert_eq!(call(&["roots"]).0, 2);
        assert_eq!(call(&["roots", "A1", "--bogus"]).0, 2);
        assert_eq!(call(&["validate", "/nonexistent/file.json"]).0, 2);
        assert_eq!(call(&["schema", "nothing"]).0, 2);
    }

    #[test]
    fn help_exits_0() {
        let (code, out, _) = call(&["--help"]);
        assert_eq!(code, 0);
        assert!(out.contains("census"));
    }

    #[test]
    fn table_lists_columns() {
        let (code, out, _) = call(&["sroots", "A1", "--format", "table"]);
        assert_eq!(code, 0);
        assert!(
            out.starts_with("count: 2\ndynkin: A1\nroots:\n  coeffs  shape  support\n  [1]     A1     [1]\n"),
            "{out}"
        );
    }

    #[test]
    fn census_a1() {
        let (code, out, _) = call(&["census", "A1"]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["total"], 4);
    }
}
