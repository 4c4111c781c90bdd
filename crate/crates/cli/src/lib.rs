//! `kqh`: verification and query front end for the Chow and quantum
//! cohomology rings.
//!
//! Exit codes: 0 on success, 1 when `verify` finds a failing check, 2 on
//! usage or input errors.

pub mod golden;
pub mod verify;

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use kronecker_qh::cells::CellData;
use kronecker_qh::chow::{ChowClass, ChowRing, LABELS, RANK};
use kronecker_qh::expr::parse_poly;
use kronecker_qh::poly::Var;
use kronecker_qh::quantum::QuantumRing;
use kronecker_qh::rational::{parse_rational, Rational};
use kronecker_qh::roots::RootConfig;
use kronecker_qh::spectra::{svg_plot, FiniteAlgebra};
use serde::Serialize;

use crate::golden::Golden;
use crate::verify::{run_checks, Context};

#[derive(Debug, Parser)]
#[command(name = "kqh", version, about = "Exact Chow ring and quantum cohomology computations")]
struct Cli {
    /// Golden-value JSON file; defaults to the bundled copy.
    #[arg(long, global = true)]
    golden: Option<PathBuf>,
    /// Cell/poset JSON file; defaults to the bundled copy.
    #[arg(long, global = true)]
    cells: Option<PathBuf>,
    /// Write the output here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
    Svg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableKind {
    Classical,
    Quantum,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Diagram {
    Hasse,
    Chevalley,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Recompute every stored constant and print a pass/fail ledger.
    Verify {
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Multiplication table in the fixed basis.
    Table {
        #[arg(long, value_enum, default_value_t = TableKind::Quantum)]
        kind: TableKind,
        /// Specialize the quantum parameter.
        #[arg(long)]
        q: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// A three-point genus-zero invariant I_n(a, b, c).
    Gw {
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
        #[arg(long)]
        c: String,
        #[arg(long)]
        n: u32,
    },
    /// Eigenvalues of quantum multiplication by c1.
    Eigen {
        #[arg(long, default_value = "1")]
        q: String,
        /// Relative residual tolerance for the root finder.
        #[arg(long, default_value_t = 1e-12)]
        tol: f64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Also write the eigenvalue plot here.
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Quantum multiplication by c1 on the cell classes.
    Chevalley {
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// A polynomial representative of a class in the quantum presentation.
    Quantize {
        #[arg(long)]
        class: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// The closure order of the cells or the c1-diagram.
    Poset {
        #[arg(long, value_enum, default_value_t = Diagram::Hasse)]
        diagram: Diagram,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Verification(Vec<&'static str>),
}

impl From<kronecker_qh::Error> for Failure {
    fn from(e: kronecker_qh::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type CmdResult = Result<String, (String, Failure)>;

/// Runs `kqh` with `args` (including the program name) and returns the
/// exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                2
            } else {
                let _ = write!(out, "{text}");
                0
            };
        }
    };
    let (text, failure) = match dispatch(&cli) {
        Ok(text) => (text, None),
        Err((text, failure)) => (text, Some(failure)),
    };
    if !text.is_empty() {
        let written = match &cli.out {
            Some(path) => std::fs::write(path, &text).map_err(|e| format!("cannot write {}: {e}", path.display())),
            None => out.write_all(text.as_bytes()).map_err(|e| e.to_string()),
        };
        if let Err(msg) = written {
            let _ = writeln!(err, "error: {msg}");
            return 2;
        }
    }
    match failure {
        None => 0,
        Some(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
        Some(Failure::Verification(names)) => {
            let _ = writeln!(err, "verification failed: {}", names.join(", "));
            1
        }
    }
}

fn usage(msg: impl Into<String>) -> (String, Failure) {
    (String::new(), Failure::Usage(msg.into()))
}

fn lift<T>(r: kronecker_qh::Result<T>) -> Result<T, (String, Failure)> {
    r.map_err(|e| (String::new(), e.into()))
}

fn read_file(path: &Path) -> Result<String, (String, Failure)> {
    std::fs::read_to_string(path).map_err(|e| usage(format!("cannot read {}: {e}", path.display())))
}

fn load_cells(cli: &Cli) -> Result<CellData, (String, Failure)> {
    match &cli.cells {
        Some(path) => lift(CellData::from_json(&read_file(path)?)),
        None => lift(CellData::bundled()),
    }
}

fn load_golden(cli: &Cli) -> Result<Golden, (String, Failure)> {
    match &cli.golden {
        Some(path) => {
            let text = read_file(path)?;
            Golden::from_json(&text).map_err(|e| usage(format!("malformed golden file {}: {e}", path.display())))
        }
        None => Ok(Golden::bundled()),
    }
}

fn unsupported(format: Format, command: &str) -> (String, Failure) {
    let name = format.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default();
    usage(format!("format `{name}` is not supported by `{command}`"))
}

fn parse_q(s: &str) -> Result<Rational, (String, Failure)> {
    parse_rational(s).map_err(|e| usage(format!("bad q `{s}`: {e}")))
}

/// Reads a class from an expression in `c1, c2, d2` and the named classes,
/// or from a bracketed list of 13 rational coordinates.
fn parse_class(chow: &ChowRing, s: &str) -> Result<ChowClass, (String, Failure)> {
    let trimmed = s.trim();
    if trimmed.starts_with('[') && trimmed.contains(',') {
        let inner = trimmed
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| usage(format!("malformed coordinates `{s}`")))?;
        let coords: Vec<Rational> = inner
            .split(',')
            .map(|c| parse_rational(c.trim()))
            .collect::<kronecker_qh::Result<_>>()
            .map_err(|e| usage(format!("malformed coordinates `{s}`: {e}")))?;
        if coords.len() != RANK {
            return Err(usage(format!("malformed coordinates `{s}`: expected {RANK} entries, found {}", coords.len())));
        }
        return lift(ChowClass::from_coords(coords));
    }
    let p = lift(parse_poly(trimmed))?;
    if p.involves(Var::Q) {
        return Err(usage(format!("class `{s}` must not involve q")));
    }
    Ok(chow.class_of_poly(&p))
}

fn json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("serializable") + "\n"
}

fn dispatch(cli: &Cli) -> CmdResult {
    match &cli.command {
        Command::Verify { format } => cmd_verify(cli, *format),
        Command::Table { kind, q, format } => cmd_table(*kind, q.as_deref(), *format),
        Command::Gw { a, b, c, n } => cmd_gw(a, b, c, *n),
        Command::Eigen { q, tol, format, svg } => cmd_eigen(q, *tol, *format, svg.as_deref()),
        Command::Chevalley { format } => cmd_chevalley(*format),
        Command::Quantize { class, format } => cmd_quantize(class, *format),
        Command::Poset { diagram, format } => cmd_poset(cli, *diagram, *format),
    }
}

fn cmd_verify(cli: &Cli, format: Format) -> CmdResult {
    let golden = load_golden(cli)?;
    let cells = load_cells(cli)?;
    let ctx = lift(Context::new(cells))?;
    let results = run_checks(&ctx, &golden);
    let mut text = String::new();
    match format {
        Format::Text => {
            for r in &results {
                let status = if r.passed { "PASS" } else { "FAIL" };
                let _ = writeln!(text, "{status}  {}", r.name);
                for f in &r.failures {
                    let _ = writeln!(text, "      {f}");
                }
            }
            let passed = results.iter().filter(|r| r.passed).count();
            let _ = writeln!(text, "{passed}/{} checks passed", results.len());
        }
        Format::Json => text = json(&results),
        other => return Err(unsupported(other, "verify")),
    }
    let failed: Vec<&'static str> = results.iter().filter(|r| !r.passed).map(|r| r.name).collect();
    if failed.is_empty() {
        Ok(text)
    } else {
        Err((text, Failure::Verification(failed)))
    }
}

#[derive(Serialize)]
struct TableRow {
    left: &'static str,
    right: &'static str,
    /// One entry per basis class; quantum entries list ascending q-coefficients.
    coords: serde_json::Value,
}

fn cmd_table(kind: TableKind, q: Option<&str>, format: Format) -> CmdResult {
    let ring = lift(QuantumRing::new())?;
    let q = q.map(parse_q).transpose()?;
    if kind == TableKind::Classical && q.is_some() {
        return Err(usage("--q applies only to the quantum table"));
    }
    let specialized = match &q {
        Some(q) => Some(lift(FiniteAlgebra::specialize(&ring, q))?),
        None => None,
    };
    let entry = |i: usize, j: usize| -> (String, serde_json::Value) {
        let strings = |c: &ChowClass| serde_json::json!(c.coords().iter().map(ToString::to_string).collect::<Vec<_>>());
        match (kind, &specialized) {
            (TableKind::Classical, _) => {
                let c = ring.chow().table_entry(i, j);
                (c.to_string(), strings(c))
            }
            (TableKind::Quantum, Some(alg)) => {
                let c = alg.basis_product(i, j);
                (c.to_string(), strings(c))
            }
            (TableKind::Quantum, None) => {
                let c = ring.table_entry(i, j);
                let coords: Vec<Vec<String>> =
                    c.coords().iter().map(|p| p.coeffs().iter().map(ToString::to_string).collect()).collect();
                (c.to_string(), serde_json::json!(coords))
            }
        }
    };
    match format {
        Format::Csv => {
            let mut text = String::from("left,right,product\n");
            for i in 0..RANK {
                for j in 0..RANK {
                    let _ = writeln!(text, "{},{},{}", LABELS[i], LABELS[j], entry(i, j).0);
                }
            }
            Ok(text)
        }
        Format::Json => {
            let rows: Vec<TableRow> = (0..RANK)
                .flat_map(|i| (0..RANK).map(move |j| (i, j)))
                .map(|(i, j)| TableRow { left: LABELS[i], right: LABELS[j], coords: entry(i, j).1 })
                .collect();
            Ok(json(&serde_json::json!({ "basis": LABELS, "rows": rows })))
        }
        other => Err(unsupported(other, "table")),
    }
}

fn cmd_gw(a: &str, b: &str, c: &str, n: u32) -> CmdResult {
    let ring = lift(QuantumRing::new())?;
    let chow = ring.chow();
    let (x, y, z) = (parse_class(chow, a)?, parse_class(chow, b)?, parse_class(chow, c)?);
    let value = lift(ring.gw(&x, &y, &z, n))?;
    Ok(format!("{value}\n"))
}

fn cmd_eigen(q: &str, tol: f64, format: Format, svg: Option<&Path>) -> CmdResult {
    if !(tol.is_finite() && tol > 0.0) {
        return Err(usage(format!("bad tolerance {tol}")));
    }
    let q = parse_q(q)?;
    let ring = lift(QuantumRing::new())?;
    let alg = lift(FiniteAlgebra::specialize(&ring, &q))?;
    let report = lift(alg.c1_spectrum(RootConfig::with_tol(tol)))?;
    let plot = svg_plot(&report.roots);
    if let Some(path) = svg {
        std::fs::write(path, &plot).map_err(|e| usage(format!("cannot write {}: {e}", path.display())))?;
    }
    match format {
        Format::Json => Ok(report.to_json() + "\n"),
        Format::Svg => Ok(plot),
        Format::Text => {
            let mut text = String::new();
            let _ = writeln!(text, "q = {}", report.q);
            let _ = writeln!(text, "char poly = {}", report.char_poly);
            for (factor, mult) in &report.squarefree {
                let _ = writeln!(text, "squarefree factor (multiplicity {mult}) = {factor}");
            }
            for r in &report.roots {
                let _ = writeln!(text, "root {:+.15} {:+.15}i  multiplicity {}", r.re, r.im, r.multiplicity);
            }
            let _ = writeln!(text, "trace form det = {}", report.trace_det);
            let _ = writeln!(text, "semisimple = {}", report.semisimple);
            let _ = writeln!(text, "zero eigenvalue length = {}", report.zero_eigenvalue_length);
            Ok(text)
        }
        other => Err(unsupported(other, "eigen")),
    }
}

fn cmd_chevalley(format: Format) -> CmdResult {
    let ring = lift(QuantumRing::new())?;
    let table = lift(ring.chevalley_table())?;
    match format {
        Format::Text => Ok(table.iter().map(|(cell, p)| format!("c1 * {cell} = {}\n", ring.format_in_cells(p))).collect()),
        Format::Json => {
            let rows: Vec<_> = table
                .iter()
                .map(|(cell, p)| serde_json::json!({ "cell": cell, "product": ring.format_in_cells(p) }))
                .collect();
            Ok(json(&rows))
        }
        other => Err(unsupported(other, "chevalley")),
    }
}

fn cmd_quantize(class: &str, format: Format) -> CmdResult {
    let ring = lift(QuantumRing::new())?;
    let x = parse_class(ring.chow(), class)?;
    let rep = lift(ring.quantize(&x))?;
    match format {
        Format::Text => Ok(format!("{rep}\n")),
        Format::Json => Ok(json(&serde_json::json!({
            "class": x.to_string(),
            "representative": rep.to_string(),
            "normal_form": ring.normal_form(&rep).to_string(),
        }))),
        other => Err(unsupported(other, "quantize")),
    }
}

fn cmd_poset(cli: &Cli, diagram: Diagram, format: Format) -> CmdResult {
    let cells = load_cells(cli)?;
    match (format, diagram) {
        (Format::Text, Diagram::Hasse) => Ok(cells.render_hasse()),
        (Format::Text, Diagram::Chevalley) => Ok(cells.render_chevalley()),
        (Format::Json, _) => Ok(cells.to_json()),
        (other, _) => Err(unsupported(other, "poset")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv: Vec<&str> = std::iter::once("kqh").chain(args.iter().copied()).collect();
        let code = run(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn coordinates_and_labels() {
        let chow = ChowRing::new().unwrap();
        let x = parse_class(&chow, "[0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0]").unwrap();
        assert_eq!(x, ChowClass::basis(1));
        assert_eq!(parse_class(&chow, "[Y]").unwrap(), ChowClass::unit());
        assert!(parse_class(&chow, "[0, 1]").is_err());
        assert!(parse_class(&chow, "[0, x, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0]").is_err());
        assert!(parse_class(&chow, "q c1").is_err());
    }

    #[test]
    fn unknown_subcommand_is_usage_error() {
        let (code, _, err) = run_str(&["frobnicate"]);
        assert_eq!(code, 2);
        assert!(err.contains("frobnicate"));
    }

    #[test]
    fn help_goes_to_stdout() {
        let (code, out, _) = run_str(&["--help"]);
        assert_eq!(code, 0);
        assert!(out.contains("verify"));
    }

    #[test]
    fn unsupported_format() {
        let (code, _, err) = run_str(&["chevalley", "--format", "svg"]);
        assert_eq!(code, 2);
        assert!(err.contains("not supported"));
    }

    #[test]
    fn classical_table_rejects_q() {
        let (code, _, err) = run_str(&["table", "--kind", "classical", "--q", "1"]);
        assert_eq!(code, 2);
        assert!(err.contains("--q"));
    }
}
