use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use walshkit::verify::SuiteParams;
use walshkit_cli::{
    run_lebesgue, run_norms, run_verify, run_wht, CliError, CommandOutcome, NormMode, NormsRequest,
    Order, OutputFormat,
};

/// Walsh analysis toolbox: fast transforms on dyadic grids, Dirichlet
/// kernels, exact Lebesgue tables, verification suites, and certified
/// estimation of partial-sum and martingale-transform ideal norms.
#[derive(Parser)]
#[command(name = "walshkit", version, about, long_about = None)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Fast Walsh–Hadamard transform of a data file (one sample per
    /// line, '#' comments allowed; length must be a power of two).
    Wht {
        /// Input data file.
        input: PathBuf,
        /// Coefficient enumeration: paley, natural or sequency.
        #[arg(long, default_value = "paley")]
        order: String,
        /// Read coefficients and synthesize samples instead.
        #[arg(long)]
        inverse: bool,
        /// Output file (stdout when omitted).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exact Lebesgue constants L_1 … L_{2^p} with the growth verdict.
    Lebesgue {
        /// Table depth, 1..=14.
        #[arg(long)]
        p: u32,
        /// Output format: csv, json or plot-data.
        #[arg(long, default_value = "csv")]
        format: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a verification suite; exit status is nonzero on any failed
    /// check.
    Verify {
        /// Suite: identities, kernels, theorem, corollary3 or
        /// convergence.
        #[arg(long)]
        suite: String,
        /// Grid resolution (default 6).
        #[arg(long)]
        q: Option<u32>,
        /// Depth / table parameter (default 3).
        #[arg(long)]
        p: Option<u32>,
        /// Seed for all randomized checks (default 512735605608,
        /// ASCII 'walsh').
        #[arg(long)]
        seed: Option<u64>,
        /// Relative tolerance for float comparisons (default 1e-9).
        #[arg(long)]
        tol: Option<f64>,
        /// Restart budget for norm searches (default 32).
        #[arg(long)]
        budget: Option<usize>,
        /// Output format: text, csv, json or plot-data.
        #[arg(long, default_value = "text")]
        format: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Estimate delta, delta-max or mu for an operator file.
    Norms {
        /// Operator description (JSON: dims, domain, codomain, matrix).
        #[arg(long)]
        op: PathBuf,
        /// Mode: delta, delta-max or mu.
        #[arg(long)]
        mode: String,
        /// Partial-sum order (modes delta and delta-max).
        #[arg(long)]
        n: Option<usize>,
        /// Martingale depth (mode mu).
        #[arg(long)]
        p: Option<u32>,
        /// Grid resolution override (defaults to the least that fits).
        #[arg(long)]
        q: Option<u32>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        tol: Option<f64>,
        #[arg(long)]
        budget: Option<usize>,
        /// Output format: text, csv, json or plot-data.
        #[arg(long, default_value = "text")]
        format: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn read_input(path: &PathBuf) -> Result<String, CliError> {
    fs::read_to_string(path)
        .map_err(|e| CliError::Data(format!("cannot read {}: {e}", path.display())))
}

fn emit(outcome: CommandOutcome, out: Option<PathBuf>) -> Result<bool, CliError> {
    match out {
        Some(path) => fs::write(&path, outcome.text)
            .map_err(|e| CliError::Data(format!("cannot write {}: {e}", path.display())))?,
        None => print!("{}", outcome.text),
    }
    Ok(outcome.ok)
}

fn dispatch(cli: Cli) -> Result<bool, CliError> {
    match cli.command {
        Command::Wht {
            input,
            order,
            inverse,
            out,
        } => {
            let text = read_input(&input)?;
            let outcome = run_wht(&text, Order::parse(&order)?, inverse)?;
            emit(outcome, out)
        }
        Command::Lebesgue { p, format, out } => {
            let outcome = run_lebesgue(p, OutputFormat::parse(&format)?)?;
            emit(outcome, out)
        }
        Command::Verify {
            suite,
            q,
            p,
            seed,
            tol,
            budget,
            format,
            out,
        } => {
            let defaults = SuiteParams::default();
            let params = SuiteParams {
                q: q.unwrap_or(defaults.q),
                p: p.unwrap_or(defaults.p),
                seed: seed.unwrap_or(defaults.seed),
                tol: tol.unwrap_or(defaults.tol),
                budget: budget.unwrap_or(defaults.budget),
            };
            let outcome = run_verify(&suite, &params, OutputFormat::parse(&format)?)?;
            emit(outcome, out)
        }
        Command::Norms {
            op,
            mode,
            n,
            p,
            q,
            seed,
            tol,
            budget,
            format,
            out,
        } => {
            let text = read_input(&op)?;
            let request = NormsRequest {
                mode: NormMode::parse(&mode)?,
                n,
                p,
                q,
                seed: seed.unwrap_or(walshkit::DEFAULT_SEED),
                tol: tol.unwrap_or(1e-9),
                budget: budget.unwrap_or(32),
            };
            let outcome = run_norms(&text, &request, OutputFormat::parse(&format)?)?;
            emit(outcome, out)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
