//! Command-line interface.
//!
//! Subcommands: `classify` (descriptor file → group shape), `table`
//! (built-in tables), `polygon` (Hodge–Newton computation and ASCII plot),
//! `hom` (Dieudonné-module Hom solver), `check` (self-check suites), and
//! `version`. The global `--json` switches every report to machine-readable
//! output.
//!
//! Exit codes: 0 success; 1 usage or input errors; 2 internal
//! inconsistencies (including failed self-checks); 3 I/O failures.

use crate::catalog::{self, CheckOptions};
use crate::classify::{classify, BrauerShape, RuleFired, VarietyDescriptor};
use crate::dieudonne::{dmodule_hom, DieudonneModuleFp, FiniteField, FqElt};
use crate::error::{Error, Result};
use crate::polygon::{hodge_newton_polygon, polygon_from_slopes, NewtonPolygon};
use crate::slopes::{Rational, SlopeMultiset};
use clap::{Parser, Subcommand};
use serde::{Deserialize, Serialize};
use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

#[derive(Parser)]
#[command(
    name = "pbrauer",
    about = "structure of the p-primary Brauer group from discrete invariants"
)]
struct Cli {
    /// Emit machine-readable JSON instead of text
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Compute the shape of Br(X)[p^∞] from a JSON descriptor file
    Classify { file: PathBuf },
    /// Print a built-in table (available: abelian3)
    Table { name: String },
    /// Polygon tools: "hn" prints the Hodge–Newton polygon, "plot" draws it
    Polygon { mode: String, file: PathBuf },
    /// Compute Hom between two Dieudonné modules from a JSON problem file
    Hom { file: PathBuf },
    /// Run a named self-check suite, or "all"
    Check {
        name: String,
        /// Base field for the raynaud suite, written p^m (e.g. 3^1)
        #[arg(long)]
        field: Option<String>,
        /// Truncation level for the raynaud suite
        #[arg(long)]
        truncation: Option<u64>,
    },
    /// Print the package name and version
    Version,
}

/// Rendered output of one subcommand: the text for stdout plus the exit
/// code (some commands, like a failed check run, succeed at printing but
/// still exit nonzero).
struct Rendered {
    text: String,
    code: i32,
}

impl Rendered {
    fn ok(text: String) -> Rendered {
        Rendered { text, code: 0 }
    }
}

/// Parse and run; returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let to_stderr = e.use_stderr();
            let _ = e.print();
            return if to_stderr { 1 } else { 0 };
        }
    };
    match dispatch(&cli) {
        Ok(rendered) => {
            use std::io::Write;
            let mut stdout = std::io::stdout();
            if let Err(e) = stdout
                .write_all(rendered.text.as_bytes())
                .and_then(|_| stdout.flush())
            {
                // a closed pipe downstream is not our error
                if e.kind() == std::io::ErrorKind::BrokenPipe {
                    return 0;
                }
                eprintln!("error: {e}");
                return 3;
            }
            rendered.code
        }
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Io(_) => 3,
                Error::Internal(_) => 2,
                _ => 1,
            }
        }
    }
}

fn dispatch(cli: &Cli) -> Result<Rendered> {
    match &cli.cmd {
        Cmd::Classify { file } => cmd_classify(file, cli.json),
        Cmd::Table { name } => cmd_table(name, cli.json),
        Cmd::Polygon { mode, file } => cmd_polygon(mode, file, cli.json),
        Cmd::Hom { file } => cmd_hom(file, cli.json),
        Cmd::Check { name, field, truncation } => {
            cmd_check(name, field.as_deref(), *truncation)
        }
        Cmd::Version => Ok(Rendered::ok(format!(
            "pbrauer {}\n",
            env!("CARGO_PKG_VERSION")
        ))),
    }
}

fn to_json(value: &impl Serialize) -> Result<String> {
    serde_json::to_string_pretty(value).map_err(|e| Error::Internal(e.to_string()))
}

#[derive(Serialize)]
struct ClassifyOutput<'a> {
    shape: &'a BrauerShape,
    rules: &'a [RuleFired],
}

fn cmd_classify(file: &Path, json: bool) -> Result<Rendered> {
    let text = std::fs::read_to_string(file)?;
    let desc = VarietyDescriptor::from_json_str(&text)?;
    let (shape, report) = classify(&desc)?;
    let mut out = String::new();
    if json {
        let _ = writeln!(
            out,
            "{}",
            to_json(&ClassifyOutput { shape: &shape, rules: &report.rules })?
        );
    } else {
        let _ = writeln!(out, "Br[p^∞] = {}", shape.display_with_p(desc.p()));
        let _ = writeln!(out, "rules:");
        for rule in &report.rules {
            let _ = writeln!(out, "  [{}] {}: {}", rule.citation, rule.name, rule.conclusion);
        }
    }
    Ok(Rendered::ok(out))
}

fn cmd_table(name: &str, json: bool) -> Result<Rendered> {
    match name {
        "abelian3" => {
            let rows = catalog::abelian3_table()?;
            let mut out = String::new();
            if json {
                #[derive(Serialize)]
                struct Row {
                    label: String,
                    h1_slopes: Vec<(i64, i64, u64)>,
                    m02: String,
                    t02: u64,
                }
                let rows: Vec<Row> = rows
                    .iter()
                    .map(|r| Row {
                        label: r.label.to_string(),
                        h1_slopes: r.h1.to_triples(),
                        m02: r.m02.to_string(),
                        t02: r.t02,
                    })
                    .collect();
                let _ = writeln!(out, "{}", to_json(&rows)?);
            } else {
                let _ = writeln!(
                    out,
                    "{:<24} {:<28} {:>6} {:>6}",
                    "type", "H^1 slopes", "m02", "T02"
                );
                for r in &rows {
                    let _ = writeln!(
                        out,
                        "{:<24} {:<28} {:>6} {:>6}",
                        r.label,
                        r.h1.to_string(),
                        r.m02.to_string(),
                        r.t02
                    );
                }
            }
            Ok(Rendered::ok(out))
        }
        other => Err(Error::InvalidArgument(format!(
            "unknown table \"{other}\"; available: abelian3"
        ))),
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PolygonInput {
    #[serde(default)]
    slopes: Option<Vec<(i64, i64, u64)>>,
    #[serde(default)]
    vertices: Option<Vec<(i64, i64)>>,
}

fn load_polygon(file: &Path) -> Result<NewtonPolygon> {
    let text = std::fs::read_to_string(file)?;
    let input: PolygonInput = serde_json::from_str(&text)
        .map_err(|e| Error::InvalidArgument(format!("invalid polygon input: {e}")))?;
    match (input.slopes, input.vertices) {
        (Some(triples), None) => polygon_from_slopes(&SlopeMultiset::from_triples(&triples)?),
        (None, Some(vertices)) => NewtonPolygon::new(vertices),
        _ => Err(Error::InvalidArgument(
            "give exactly one of \"slopes\" or \"vertices\"".into(),
        )),
    }
}

fn fmt_vertices(vertices: &[(i64, i64)]) -> String {
    vertices
        .iter()
        .map(|(x, y)| format!("({x},{y})"))
        .collect::<Vec<_>>()
        .join(" ")
}

fn cmd_polygon(mode: &str, file: &Path, json: bool) -> Result<Rendered> {
    let np = load_polygon(file)?;
    let hn = hodge_newton_polygon(&np)?;
    match mode {
        "hn" => {
            let mut out = String::new();
            if json {
                #[derive(Serialize)]
                struct Out<'a> {
                    newton: &'a [(i64, i64)],
                    hodge_newton: &'a [(i64, i64)],
                }
                let _ = writeln!(
                    out,
                    "{}",
                    to_json(&Out { newton: np.vertices(), hodge_newton: hn.vertices() })?
                );
            } else {
                let _ = writeln!(out, "newton:       {}", fmt_vertices(np.vertices()));
                let _ = writeln!(out, "hodge-newton: {}", fmt_vertices(hn.vertices()));
            }
            Ok(Rendered::ok(out))
        }
        "plot" => Ok(Rendered::ok(render_plot(&np, &hn)?)),
        other => Err(Error::InvalidArgument(format!(
            "unknown polygon mode \"{other}\"; use \"hn\" or \"plot\""
        ))),
    }
}

/// ASCII plot of both polygons on the lattice, highest y first.
fn render_plot(np: &NewtonPolygon, hn: &NewtonPolygon) -> Result<String> {
    let width = np.width();
    let height = np.height().max(hn.height()).max(1);
    let mut grid = vec![vec!['.'; width as usize + 1]; height as usize + 1];
    for x in 0..=width {
        let xq = Rational::from_integer(x);
        let yn = np.height_at(xq)?.floor().to_integer();
        let yh = hn.height_at(xq)?.floor().to_integer();
        let col = x as usize;
        grid[yh as usize][col] = 'H';
        grid[yn as usize][col] = if yn == yh { 'B' } else { 'N' };
    }
    let mut out = String::new();
    let _ = writeln!(out, "polygon plot: width {width}, height {height}");
    for y in (0..=height as usize).rev() {
        let _ = write!(out, "{y:>4} |");
        for c in &grid[y] {
            out.push(' ');
            out.push(*c);
        }
        out.push('\n');
    }
    let _ = writeln!(out, "     +{}", "-".repeat(2 * (width as usize + 1)));
    let _ = writeln!(out, "legend: N = input polygon, H = Hodge-Newton polygon, B = both");
    Ok(out)
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct HomInput {
    field: FieldSpec,
    source: ModuleSpec,
    #[serde(default)]
    target: Option<ModuleSpec>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct FieldSpec {
    p: u64,
    m: u32,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ModuleSpec {
    dim: usize,
    #[serde(default)]
    f: Vec<(usize, usize, Vec<u64>)>,
    #[serde(default)]
    v: Vec<(usize, usize, Vec<u64>)>,
}

fn build_module(field: &FiniteField, spec: &ModuleSpec) -> Result<DieudonneModuleFp> {
    let convert = |entries: &[(usize, usize, Vec<u64>)]| -> Result<Vec<(usize, usize, FqElt)>> {
        entries
            .iter()
            .map(|(row, col, coeffs)| Ok((*row, *col, field.elt_from_coeffs(coeffs)?)))
            .collect()
    };
    DieudonneModuleFp::from_sparse(field, spec.dim, &convert(&spec.f)?, &convert(&spec.v)?)
}

fn cmd_hom(file: &Path, json: bool) -> Result<Rendered> {
    let text = std::fs::read_to_string(file)?;
    let input: HomInput = serde_json::from_str(&text)
        .map_err(|e| Error::InvalidArgument(format!("invalid hom input: {e}")))?;
    let field = FiniteField::new(input.field.p, input.field.m)?;
    let source = build_module(&field, &input.source)?;
    let target = match &input.target {
        Some(spec) => build_module(&field, spec)?,
        None => build_module(&field, &input.source)?,
    };
    let shape = dmodule_hom(&source, &target)?;
    let mut out = String::new();
    if json {
        #[derive(Serialize)]
        struct Out {
            etale_rank: u64,
            field_dim: u64,
            display: String,
        }
        let _ = writeln!(
            out,
            "{}",
            to_json(&Out {
                etale_rank: shape.etale_rank,
                field_dim: shape.field_dim,
                display: shape.display_with_p(input.field.p),
            })?
        );
    } else {
        let _ = writeln!(out, "Hom = {}", shape.display_with_p(input.field.p));
        let _ = writeln!(
            out,
            "etale rank {}, residue-field dimension {}",
            shape.etale_rank, shape.field_dim
        );
    }
    Ok(Rendered::ok(out))
}

fn parse_field_spec(spec: &str) -> Result<(u64, u32)> {
    let bad = || {
        Error::InvalidArgument(format!(
            "bad field spec \"{spec}\": expected p^m, e.g. 2^1 or 3^2"
        ))
    };
    let (p_str, m_str) = match spec.split_once('^') {
        Some((a, b)) => (a, b),
        None => (spec, "1"),
    };
    let p = p_str.trim().parse::<u64>().map_err(|_| bad())?;
    let m = m_str.trim().parse::<u32>().map_err(|_| bad())?;
    Ok((p, m))
}

fn cmd_check(name: &str, field: Option<&str>, truncation: Option<u64>) -> Result<Rendered> {
    let mut opts = CheckOptions::default();
    if let Some(spec) = field {
        opts.field = parse_field_spec(spec)?;
    }
    if let Some(level) = truncation {
        opts.truncation = level;
    }
    let results = catalog::run_checks(name, &opts)?;
    let mut out = String::new();
    let mut failed = 0usize;
    for r in &results {
        match &r.outcome {
            Ok(()) => {
                let _ = writeln!(out, "PASS {}", r.name);
            }
            Err(e) => {
                let _ = writeln!(out, "FAIL {}: {e}", r.name);
                failed += 1;
            }
        }
    }
    if failed > 0 {
        eprintln!("error: {failed} of {} checks failed", results.len());
        return Ok(Rendered { text: out, code: 2 });
    }
    Ok(Rendered::ok(out))
}
