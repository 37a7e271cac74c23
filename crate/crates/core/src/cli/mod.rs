//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 when a verification suite finds a violated
//! invariant, 2 on usage, parse or I/O errors.

pub mod parse;
pub mod verify;

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::json;
use thiserror::Error;

use crate::fusion::{tensor_basis, GreenElement};
use crate::labels::{parse_rational, ModLabel};
use crate::modring::{Params, ParamsError};
use crate::universe::{parse_kinds, Bounds, UnknownKind};
use crate::Lambda;

pub use parse::{parse_expr, parse_label, EvalError, LabelExpr, ParseError};
pub use verify::{run_suite, Check, Suite, VerifyOptions};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Caps the worker pool used for tables and verification.
pub const THREADS_ENV: &str = "GREENRING_THREADS";

#[derive(Debug, Parser)]
#[command(
    name = "greenring",
    version,
    about = "Products, tables and checks in the stable Green ring of D(Λ_{n,d})"
)]
pub struct Cli {
    /// Order of the grouplike part; must be a positive multiple of d.
    #[arg(long, global = true)]
    pub n: Option<i64>,
    /// Nilpotency degree.
    #[arg(long, global = true)]
    pub d: Option<i64>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Product expression, evaluated when no subcommand is given.
    pub expr: Option<String>,
    #[command(subcommand)]
    pub command: Option<Command>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate a product expression.
    Product { expr: String },
    /// All pairwise products over a bounded label universe.
    Table {
        /// Comma list from simple, syzygy, plus, minus, string, band, projective, all.
        #[arg(long, default_value = "all")]
        kinds: String,
        #[arg(long, default_value_t = 3)]
        max_ell: u32,
        #[arg(long, default_value_t = 3)]
        max_syzygy: u32,
        /// Comma list of nonzero rationals.
        #[arg(long, default_value = "1,2,1/2")]
        lambdas: String,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Run invariant suites.
    Verify {
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Largest ℓ, t and |m| exercised.
        #[arg(long, default_value_t = 3)]
        bounds: u32,
        #[arg(long, default_value = "1,2,1/2")]
        lambdas: String,
    },
    /// Invariants and predicates of one label.
    Classify { label: String },
    /// Dual of one label.
    Dual { label: String },
    /// Ω^k of one label.
    Syzygy {
        label: String,
        #[arg(long, short, default_value_t = 1, allow_negative_numbers = true)]
        k: i64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SuiteArg {
    Ring,
    Formulas,
    Classify,
    All,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Self {
        match s {
            SuiteArg::Ring => Suite::Ring,
            SuiteArg::Formulas => Suite::Formulas,
            SuiteArg::Classify => Suite::Classify,
            SuiteArg::All => Suite::All,
        }
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("--n and --d are required")]
    MissingParams,
    #[error("{0}")]
    Params(#[from] ParamsError),
    #[error("{0}")]
    Parse(#[from] ParseError),
    #[error("{0}")]
    Eval(#[from] EvalError),
    #[error("{0}")]
    Kinds(#[from] UnknownKind),
    #[error("bad --lambdas entry {0:?}: expected nonzero p or p/q")]
    Lambda(String),
    #[error("no expression given; pass one or use a subcommand")]
    NoCommand,
    #[error("{flag} {value} is out of range")]
    Range { flag: &'static str, value: u64 },
    #[error("{what} does not support --format {format:?}")]
    Format { what: &'static str, format: Format },
    #[error("{}: {source}", path.display())]
    Output { path: PathBuf, source: io::Error },
    #[error("{0}")]
    Io(#[from] io::Error),
    #[error("{0}")]
    Json(#[from] serde_json::Error),
    #[error("{0}")]
    Csv(#[from] csv::Error),
    #[error("{0}")]
    Label(#[from] crate::labels::LabelError),
    #[error("{0}")]
    Threads(String),
}

/// Runs the CLI on `args` (including the program name) and returns the exit
/// code; nothing here panics on user input.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK {
                write!(out, "{text}")
            } else {
                write!(err, "{text}")
            };
            return code;
        }
    };
    match dispatch(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> Result<i32, CliError> {
    let (Some(n), Some(d)) = (cli.n, cli.d) else {
        return Err(CliError::MissingParams);
    };
    let p = Params::new(n, d)?;
    match (&cli.command, &cli.expr) {
        (Some(Command::Product { expr }), _) | (None, Some(expr)) => {
            cmd_product(&p, expr, cli.format, out)
        }
        (
            Some(Command::Table {
                kinds,
                max_ell,
                max_syzygy,
                lambdas,
                output,
            }),
            _,
        ) => {
            let bounds = Bounds {
                kinds: parse_kinds(kinds)?,
                max_ell: *max_ell,
                max_syzygy: *max_syzygy,
                lambdas: parse_lambdas(lambdas)?,
            };
            if bounds.max_ell > 64 {
                return Err(CliError::Range {
                    flag: "--max-ell",
                    value: bounds.max_ell as u64,
                });
            }
            if bounds.max_syzygy > 1 << 16 {
                return Err(CliError::Range {
                    flag: "--max-syzygy",
                    value: bounds.max_syzygy as u64,
                });
            }
            let format = match cli.format {
                Format::Text | Format::Csv => Format::Csv,
                Format::Json => Format::Json,
            };
            match output {
                Some(path) => {
                    let file = File::create(path).map_err(|source| CliError::Output {
                        path: path.clone(),
                        source,
                    })?;
                    let mut file = io::BufWriter::new(file);
                    write_table(&with_pool(|| table_rows(&p, &bounds))?, format, &mut file)?;
                    file.flush().map_err(|source| CliError::Output {
                        path: path.clone(),
                        source,
                    })?;
                }
                None => write_table(&with_pool(|| table_rows(&p, &bounds))?, format, out)?,
            }
            Ok(EXIT_OK)
        }
        (
            Some(Command::Verify {
                suite,
                seed,
                bounds,
                lambdas,
            }),
            _,
        ) => {
            if *bounds > 8 {
                return Err(CliError::Range {
                    flag: "--bounds",
                    value: *bounds as u64,
                });
            }
            let opts = VerifyOptions {
                seed: *seed,
                bounds: *bounds,
                lambdas: parse_lambdas(lambdas)?,
                ..VerifyOptions::default()
            };
            let checks = with_pool(|| run_suite(&p, (*suite).into(), &opts))?;
            report_checks(&checks, out)
        }
        (Some(Command::Classify { label }), _) => cmd_classify(&p, label, cli.format, out),
        (Some(Command::Dual { label }), _) => {
            let x = parse_label(&p, label)?;
            writeln!(out, "{}", p.dual(&x))?;
            Ok(EXIT_OK)
        }
        (Some(Command::Syzygy { label, k }), _) => {
            let x = parse_label(&p, label)?;
            let y = p.syzygy_shift(&x, *k)?;
            writeln!(out, "{y}")?;
            Ok(EXIT_OK)
        }
        (None, None) => Err(CliError::NoCommand),
    }
}

pub fn parse_lambdas(text: &str) -> Result<Vec<Lambda>, CliError> {
    let mut out = Vec::new();
    for word in text.split(',').map(str::trim) {
        match parse_rational(word) {
            Some(l) if *l.numer() != 0 => {
                if !out.contains(&l) {
                    out.push(l);
                }
            }
            _ => return Err(CliError::Lambda(word.to_string())),
        }
    }
    Ok(out)
}

fn with_pool<R: Send>(f: impl FnOnce() -> R + Send) -> Result<R, CliError> {
    let threads = std::env::var(THREADS_ENV)
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .filter(|&t| t > 0);
    match threads {
        Some(t) => Ok(rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build()
            .map_err(|e| CliError::Threads(e.to_string()))?
            .install(f)),
        None => Ok(f()),
    }
}

/// A JSON number, or a decimal string beyond the `i64` range.
fn json_int(x: i128) -> serde_json::Value {
    i64::try_from(x).map_or_else(|_| json!(x.to_string()), |v| json!(v))
}

pub fn render_product(e: &GreenElement, format: Format) -> String {
    match format {
        Format::Json => json!({
            "core": e.core_list().iter().map(ToString::to_string).collect::<Vec<_>>(),
            "proj_dim": json_int(e.proj_dim),
        })
        .to_string(),
        _ => e.to_string(),
    }
}

pub fn cmd_product(
    p: &Params,
    expr: &str,
    format: Format,
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    let e = parse_expr(p, expr)?.eval(p)?;
    writeln!(out, "{}", render_product(&e, format))?;
    Ok(EXIT_OK)
}

/// One row of a product table.
pub type TableRow = (String, String, Vec<String>, i128);

/// Every product `a ⊗ b` over the universe, ordered by `a` then `b` in
/// canonical label order.
pub fn table_rows(p: &Params, bounds: &Bounds) -> Vec<TableRow> {
    let labels = bounds.labels(p);
    labels
        .par_iter()
        .flat_map_iter(|a| {
            labels.iter().map(move |b| {
                let e = tensor_basis(p, a, b);
                let core = e.core_list().iter().map(ModLabel::to_string).collect();
                (a.to_string(), b.to_string(), core, e.proj_dim)
            })
        })
        .collect()
}

pub fn write_table(rows: &[TableRow], format: Format, out: &mut dyn Write) -> Result<(), CliError> {
    match format {
        Format::Json => {
            let rows: Vec<_> = rows
                .iter()
                .map(|(a, b, core, proj)| {
                    json!({ "lhs": a, "rhs": b, "core": core, "proj_dim": json_int(*proj) })
                })
                .collect();
            serde_json::to_writer_pretty(&mut *out, &rows)?;
            writeln!(out)?;
        }
        _ => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record(["lhs", "rhs", "core", "proj_dim"])?;
            for (a, b, core, proj) in rows {
                w.write_record([
                    a.as_str(),
                    b.as_str(),
                    core.join(";").as_str(),
                    proj.to_string().as_str(),
                ])?;
            }
            w.flush()?;
        }
    }
    Ok(())
}

/// Prints one line per check; exit code 1 if any failed.
pub fn report_checks(checks: &[Check], out: &mut dyn Write) -> Result<i32, CliError> {
    let mut failed = 0;
    for c in checks {
        match &c.failure {
            None => writeln!(out, "PASS {} ({} cases)", c.name, c.cases)?,
            Some(why) => {
                failed += 1;
                writeln!(out, "FAIL {} ({} cases): {why}", c.name, c.cases)?;
            }
        }
    }
    writeln!(out, "{} passed, {failed} failed", checks.len() - failed)?;
    Ok(if failed == 0 {
        EXIT_OK
    } else {
        EXIT_VERIFY_FAILED
    })
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn cmd_classify(
    p: &Params,
    text: &str,
    format: Format,
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    let x = parse_label(p, text)?;
    let block = p.block_base(x.vertex());
    let neighbour = |k: i64| match p.syzygy_shift(&x, k) {
        Ok(y) => y.to_string(),
        Err(_) => "0".to_string(),
    };
    let fields = [
        ("label", x.to_string()),
        ("dim", p.dim_of(&x).to_string()),
        ("length", p.length_of(&x).to_string()),
        ("block", block.to_string()),
        ("dual", p.dual(&x).to_string()),
        ("omega", neighbour(1)),
        ("omega^-1", neighbour(-1)),
        (
            "splitting-trace",
            yes_no(p.is_splitting_trace(&x)).to_string(),
        ),
        ("endotrivial", yes_no(p.is_endotrivial(&x)).to_string()),
        ("algebraic", yes_no(p.is_algebraic(&x)).to_string()),
    ];
    if format == Format::Json {
        let map: serde_json::Map<String, serde_json::Value> = fields
            .iter()
            .map(|(k, v)| (k.to_string(), json!(v)))
            .collect();
        writeln!(out, "{}", serde_json::Value::Object(map))?;
    } else if format == Format::Csv {
        return Err(CliError::Format {
            what: "classify",
            format,
        });
    } else {
        for (k, v) in fields {
            writeln!(out, "{k}: {v}")?;
        }
    }
    Ok(EXIT_OK)
}
