//! Batch front-end: runs the toolkit from JSON inputs and emits JSON/CSV
//! reports. Outputs are deterministic for a fixed seed and inputs.
//!
//! Exit codes: 0 success, 64 malformed input (schema), 65 computation
//! error. `localise` maps its verdict to 0 (fredholm), 2 (not fredholm or
//! withheld), 3 (inconclusive); `suite` exits 65 when a criterion fails.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use orlicz_core::error::Error;
use orlicz_core::indices::{matuszewska_orlicz_indices, IndexGridSpec};
use orlicz_core::localisation::{localise, GlobalVerdict, LocalAssignment, LocaliseConfig};
use orlicz_core::majorant::{build_phi_theta, MajorantGridSpec};
use orlicz_core::nfunction::NFunction;
use orlicz_core::operators::{build, widom_residual, OperatorRole};
use orlicz_core::orlicz_space::{luxemburg_norm_tol, FiniteSequence};
use orlicz_core::suite;
use orlicz_core::symbols::Symbol;

const EXIT_SCHEMA: u8 = 64;
const EXIT_COMPUTE: u8 = 65;

#[derive(Parser)]
#[command(
    name = "orlicz",
    about = "Toeplitz operators on Orlicz sequence spaces: indices, interpolation functions, norms, truncations, localisation",
    version
)]
struct Cli {
    /// Seed threaded through every sampler.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Tolerance knob; meaning depends on the command (see README).
    #[arg(long, global = true)]
    tol: Option<f64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Matuszewska-Orlicz indices of an N-function.
    Indices(IndicesArgs),
    /// Build the interpolation function for a given theta.
    PhiTheta(PhiThetaArgs),
    /// Luxemburg-Nakano norm of a finite sequence.
    Norm(NormArgs),
    /// Emit a dense operator truncation as CSV.
    Operator(OperatorArgs),
    /// Residual of the Toeplitz product identity on a window.
    WidomCheck(WidomArgs),
    /// Run the localisation pipeline for a symbol and an assignment.
    Localise(LocaliseArgs),
    /// Run the full acceptance battery and print a summary table.
    Suite(SuiteArgs),
}

#[derive(Args)]
struct IndicesArgs {
    /// N-function definition (JSON file).
    #[arg(long)]
    phi: PathBuf,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct PhiThetaArgs {
    #[arg(long)]
    phi: PathBuf,
    #[arg(long)]
    theta: f64,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct NormArgs {
    #[arg(long)]
    phi: PathBuf,
    /// Sequence as JSON array of [index, re, im].
    #[arg(long)]
    seq: PathBuf,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct OperatorArgs {
    /// Symbol definition (JSON file).
    #[arg(long)]
    symbol: PathBuf,
    /// laurent | toeplitz | hankel-plus | hankel-minus
    #[arg(long)]
    role: String,
    #[arg(long)]
    n: usize,
    /// CSV output path (re,im pairs per entry, row by row).
    #[arg(long)]
    emit: PathBuf,
}

#[derive(Args)]
struct WidomArgs {
    #[arg(long)]
    a: PathBuf,
    #[arg(long)]
    b: PathBuf,
    #[arg(long, default_value_t = 40)]
    n: usize,
    #[arg(long, default_value_t = 20)]
    window: usize,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct LocaliseArgs {
    #[arg(long)]
    phi: PathBuf,
    #[arg(long)]
    symbol: PathBuf,
    /// JSON array of {tau, theta?, rep, class?}.
    #[arg(long)]
    assignment: PathBuf,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SuiteArgs {
    #[arg(long)]
    out: Option<PathBuf>,
}

fn read_input(path: &Path) -> Result<String, Error> {
    fs::read_to_string(path)
        .map_err(|e| Error::schema(format!("cannot read {}: {e}", path.display())))
}

fn emit(out: &Option<PathBuf>, payload: &str) -> Result<(), Error> {
    match out {
        Some(path) => fs::write(path, payload)
            .map_err(|e| Error::schema(format!("cannot write {}: {e}", path.display()))),
        None => {
            println!("{}", payload.trim_end());
            Ok(())
        }
    }
}

fn pretty(value: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serialisable");
    s.push('\n');
    s
}

fn run(cli: Cli) -> Result<u8, Error> {
    match cli.command {
        Command::Indices(args) => {
            let phi = NFunction::from_json(&read_input(&args.phi)?)?;
            let report = matuszewska_orlicz_indices(&phi, &IndexGridSpec::default())?;
            let payload = pretty(&serde_json::to_value(&report).unwrap());
            emit(&args.out, &payload)?;
            Ok(0)
        }
        Command::PhiTheta(args) => {
            let phi = NFunction::from_json(&read_input(&args.phi)?)?;
            let pt = build_phi_theta(&phi, args.theta, &MajorantGridSpec::default())?;
            let breakpoints: Vec<(f64, f64)> = pt
                .envelope
                .breakpoints
                .iter()
                .zip(&pt.envelope.values)
                .map(|(&t, &v)| (t, v))
                .collect();
            let payload = pretty(&json!({
                "theta": pt.theta,
                "c1": pt.c1,
                "c2": pt.c2,
                "c_interp": pt.c_interp,
                "breakpoints": breakpoints,
                "index_report": pt.index_report,
            }));
            emit(&args.out, &payload)?;
            Ok(0)
        }
        Command::Norm(args) => {
            let phi = NFunction::from_json(&read_input(&args.phi)?)?;
            let seq = FiniteSequence::from_json(&read_input(&args.seq)?)?;
            let tol = cli.tol.unwrap_or(1e-14);
            let norm = luxemburg_norm_tol(&phi, &seq, tol)?;
            let payload = pretty(&json!({ "norm": norm, "support_size": seq.len() }));
            emit(&args.out, &payload)?;
            Ok(0)
        }
        Command::Operator(args) => {
            let symbol = Symbol::from_json(&read_input(&args.symbol)?)?;
            let role = match args.role.as_str() {
                "laurent" => OperatorRole::Laurent,
                "toeplitz" => OperatorRole::Toeplitz,
                "hankel-plus" => OperatorRole::HankelPlus,
                "hankel-minus" => OperatorRole::HankelMinus,
                other => {
                    return Err(Error::schema(format!(
                        "unknown role '{other}' (expected laurent|toeplitz|hankel-plus|hankel-minus)"
                    )))
                }
            };
            let tr = build(&symbol, role, args.n)?;
            let mut csv = String::new();
            for row in tr.matrix.rows() {
                let cells: Vec<String> = row
                    .iter()
                    .flat_map(|z| [format!("{:.17e}", z.re), format!("{:.17e}", z.im)])
                    .collect();
                csv.push_str(&cells.join(","));
                csv.push('\n');
            }
            fs::write(&args.emit, csv)
                .map_err(|e| Error::schema(format!("cannot write {}: {e}", args.emit.display())))?;
            Ok(0)
        }
        Command::WidomCheck(args) => {
            let a = Symbol::from_json(&read_input(&args.a)?)?;
            let b = Symbol::from_json(&read_input(&args.b)?)?;
            let residual = widom_residual(&a, &b, args.n, args.window)?;
            let tol = cli.tol.unwrap_or(1e-12);
            let payload = pretty(&json!({
                "residual": residual,
                "n": args.n,
                "window": args.window,
                "pass": residual <= tol,
            }));
            emit(&args.out, &payload)?;
            Ok(if residual <= tol { 0 } else { EXIT_COMPUTE })
        }
        Command::Localise(args) => {
            let phi = NFunction::from_json(&read_input(&args.phi)?)?;
            let symbol = Symbol::from_json(&read_input(&args.symbol)?)?;
            let assignment = LocalAssignment::from_json(&read_input(&args.assignment)?)?;
            let mut config = LocaliseConfig::default();
            if let Some(tol) = cli.tol {
                config.dist_zero_rel_tol = tol;
            }
            let report = localise(&symbol, &phi, &assignment, &config)?;
            let payload = pretty(&serde_json::to_value(&report).unwrap());
            emit(&args.out, &payload)?;
            Ok(match report.verdict {
                GlobalVerdict::Fredholm => 0,
                GlobalVerdict::Withheld => 2,
                GlobalVerdict::Inconclusive => 3,
            })
        }
        Command::Suite(args) => {
            let outcomes = suite::run_all(cli.seed);
            for o in &outcomes {
                println!("{}", o.line());
            }
            let all_pass = outcomes.iter().all(|o| o.pass);
            println!(
                "{}/{} criteria passed",
                outcomes.iter().filter(|o| o.pass).count(),
                outcomes.len()
            );
            if let Some(path) = &args.out {
                let payload = pretty(&serde_json::to_value(&outcomes).unwrap());
                fs::write(path, payload)
                    .map_err(|e| Error::schema(format!("cannot write {}: {e}", path.display())))?;
            }
            Ok(if all_pass { 0 } else { EXIT_COMPUTE })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(err @ (Error::Schema(_) | Error::Parse { .. })) => {
            eprintln!("error: {err}");
            ExitCode::from(EXIT_SCHEMA)
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(EXIT_COMPUTE)
        }
    }
}
