//! Command-line verifier: construct the classified algebras, decide the
//! Berger and weak-Berger properties, decompose curvature spaces, and check
//! the holonomy realizations, over exact rational arithmetic.
//!
//! Exit status: 0 when every executed check passed, 1 when a check failed,
//! 2 on malformed input or configuration.

use clap::{Parser, Subcommand, ValueEnum};
use std::io::Read;
use std::process::ExitCode;
use std::time::Instant;
use weyl_holonomy::json::{describe_algebra, FamilySpecJson, PresetJson};
use weyl_holonomy::suites::{realize_report, run_suite, SuiteConfig, SuiteTag};

#[derive(Copy, Clone, PartialEq, Eq, Debug, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Parser)]
#[command(
    name = "weyl-holonomy",
    about = "Exact verifier for holonomy algebras of Lorentzian Weyl connections",
    version
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Seed for randomized fixtures.
    #[arg(long, global = true, default_value_t = 7)]
    seed: u64,
    /// Jet truncation order K.
    #[arg(long, global = true)]
    order: Option<u32>,
    /// Highest covariant-derivative order.
    #[arg(long = "max-deriv", global = true)]
    max_deriv: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Dimension of the first prolongation of a family.
    Prolongation { input: String },
    /// Dimension of the space of algebraic curvature tensors of a family.
    CurvatureSpace { input: String },
    /// Berger verdict for a family.
    Berger { input: String },
    /// Weak-Berger verdict for the rotation part of a family.
    WeakBerger { input: String },
    /// Dimension, basis and bracket table of a family.
    Describe { input: String },
    /// Build a realization preset and verify its holonomy.
    Realize { input: String },
    /// Run named verification suites (default: all).
    Suite { tags: Vec<String> },
}

fn read_input(path: &str) -> Result<String, String> {
    if path == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| format!("cannot read standard input: {e}"))?;
        Ok(buf)
    } else {
        std::fs::read_to_string(path).map_err(|e| format!("cannot read `{path}`: {e}"))
    }
}

fn parse_family(path: &str) -> Result<FamilySpecJson, String> {
    let text = read_input(path)?;
    serde_json::from_str(&text).map_err(|e| format!("invalid family spec: {e}"))
}

/// 0 = pass, 1 = check failed; Err carries an input/config diagnostic (2).
fn run(cli: &Cli) -> Result<u8, String> {
    match &cli.command {
        Command::Prolongation { input }
        | Command::CurvatureSpace { input }
        | Command::Berger { input }
        | Command::WeakBerger { input } => {
            let op = match &cli.command {
                Command::Prolongation { .. } => "prolongation",
                Command::CurvatureSpace { .. } => "curvature-space",
                Command::Berger { .. } => "berger",
                _ => "weak-berger",
            };
            let spec = parse_family(input)?
                .to_spec()
                .map_err(|e| format!("invalid family spec: {e}"))?;
            let report = weyl_holonomy::suites::operation_report(op, &spec)
                .map_err(|e| format!("cannot build family: {e}"))?;
            match cli.format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&report).unwrap()),
                Format::Text => {
                    println!("op: {}", report.op);
                    println!("dim: {}", report.dim);
                    if let Some(b) = report.is_berger {
                        println!("holds: {b}");
                    }
                    if let Some(w) = report.witness_dim {
                        println!("witness_dim: {w}");
                    }
                }
            }
            Ok(0)
        }
        Command::Describe { input } => {
            let spec = parse_family(input)?;
            let description =
                describe_algebra(&spec).map_err(|e| format!("cannot build family: {e}"))?;
            match cli.format {
                Format::Json => {
                    println!("{}", serde_json::to_string_pretty(&description).unwrap())
                }
                Format::Text => {
                    println!("family: {}", description.family);
                    println!("n: {}", description.n);
                    println!("dim: {}", description.dim);
                    println!("basis ({} matrices of size {}):", description.basis.len(), description.matrix_dim);
                    for (i, m) in description.basis.iter().enumerate() {
                        println!("  B{i}:");
                        for row in m {
                            println!("    [{}]", row.join(", "));
                        }
                    }
                    println!("bracket table (coordinates of [B_i, B_j]):");
                    for entry in &description.bracket_table {
                        println!("  [B{}, B{}] = [{}]", entry.i, entry.j, entry.coords.join(", "));
                    }
                }
            }
            Ok(0)
        }
        Command::Realize { input } => {
            let text = read_input(input)?;
            let preset_json: PresetJson =
                serde_json::from_str(&text).map_err(|e| format!("invalid preset: {e}"))?;
            let mut preset = preset_json
                .to_preset()
                .map_err(|e| format!("invalid preset: {e}"))?;
            if let Some(order) = cli.order {
                preset.order = order;
            }
            if let Some(m) = cli.max_deriv {
                preset.max_order = m;
                if cli.order.is_none() {
                    preset.order = m as u32 + 3;
                }
            }
            let start = Instant::now();
            let report = realize_report(&preset).map_err(|e| format!("realization failed: {e}"))?;
            match cli.format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&report).unwrap()),
                Format::Text => print!("{}", report.render_text(Some(start.elapsed()))),
            }
            Ok(if report.all_pass() { 0 } else { 1 })
        }
        Command::Suite { tags } => {
            let suites = if tags.is_empty() || tags.iter().any(|t| t == "all") {
                SuiteTag::all()
            } else {
                tags.iter()
                    .map(|t| SuiteTag::parse(t).ok_or_else(|| format!("unknown suite `{t}`")))
                    .collect::<Result<Vec<_>, _>>()?
            };
            let mut config = SuiteConfig { suites, seed: cli.seed, ..SuiteConfig::default() };
            if let Some(order) = cli.order {
                config.order = order;
            }
            if let Some(m) = cli.max_deriv {
                config.max_order = m;
            }
            let start = Instant::now();
            let report = run_suite(&config).map_err(|e| e.to_string())?;
            match cli.format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&report).unwrap()),
                Format::Text => print!("{}", report.render_text(Some(start.elapsed()))),
            }
            Ok(if report.all_pass() { 0 } else { 1 })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
