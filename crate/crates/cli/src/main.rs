//! fppcert: re-runs the verification checks for the 84 cubics and writes a JSON report.

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use algebra_core::QuadExtField;
use certify::{run_all, suites, Budget, CertConfig, CertifyError, CheckId, Context};
use clap::{Args, Parser, Subcommand};
use fpp_dataset::{expand_equations, serialize_equations, u_ring, GroupActionSpec};
use lattice_search::{enumerate_configurations, GramOptions};

const EXIT_FAIL: u8 = 1;
const EXIT_CONFIG: u8 = 2;

#[derive(Parser)]
#[command(
    name = "fppcert",
    version,
    about = "Exact verification of the 84-cubic fake projective plane"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the 84 cubics over Q(w), one canonical line each.
    Equations {
        #[arg(long)]
        emit_conjugate: bool,
    },
    /// Hilbert series at the main prime and at a second prime.
    Hilbert(RunArgs),
    /// Hilbert polynomials after adjoining the three Jacobian minors.
    Smoothness(RunArgs),
    /// Group action on the cubics and the g7-fixed points.
    Invariance(RunArgs),
    /// The curve C and its ideal.
    CurveC(RunArgs),
    /// Exact identities of the sextic model, and the embedding samples when scalings are given.
    Sextic(RunArgs),
    /// The order-three automorphism at sampled points.
    Automorphism {
        #[command(flatten)]
        run: RunArgs,
        /// Write the sampled points as JSON lines.
        #[arg(long)]
        points_jsonl: Option<PathBuf>,
    },
    /// The z-transport law at sampled points.
    Ztransport(RunArgs),
    /// Exhaustive curve-configuration search.
    Lattice {
        #[command(flatten)]
        run: RunArgs,
        /// Write one CSV line per feasible configuration.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Every check.
    All(RunArgs),
}

#[derive(Args, Clone)]
struct RunArgs {
    #[arg(long, default_value_t = 263)]
    prime: u64,
    /// Square root of -7 mod p; the smallest one when omitted.
    #[arg(long)]
    sqrt_minus7: Option<u64>,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    #[arg(long, default_value_t = 100)]
    samples: usize,
    /// Report path; the report goes to stdout when omitted.
    #[arg(long)]
    report: Option<PathBuf>,
    /// Apply w -> -w to the data first.
    #[arg(long)]
    emit_conjugate: bool,
    /// S-pair cap per Groebner basis run.
    #[arg(long)]
    max_pairs: Option<u64>,
    /// Wall-time cap per Groebner basis run, in seconds.
    #[arg(long, default_value_t = 3600)]
    time_limit: u64,
    /// Comma-separated check ids replacing the subcommand's selection.
    #[arg(long, value_delimiter = ',')]
    checks: Vec<CheckId>,
    /// Ten comma-separated scalings enabling the embedding check.
    #[arg(long, value_delimiter = ',', num_args = 10)]
    scalings: Option<Vec<u32>>,
}

impl RunArgs {
    fn config(&self, default_checks: &[CheckId]) -> CertConfig {
        CertConfig {
            prime: self.prime,
            sqrt_minus7: self.sqrt_minus7,
            seed: self.seed,
            samples: self.samples,
            conjugate: self.emit_conjugate,
            budget: Budget {
                max_pairs: self.max_pairs,
                time_limit: Some(Duration::from_secs(self.time_limit)),
            },
            checks: if self.checks.is_empty() {
                default_checks.to_vec()
            } else {
                self.checks.clone()
            },
            embedding_scalings: self
                .scalings
                .as_ref()
                .map(|s| s.as_slice().try_into().expect("clap enforces ten values")),
            ..Default::default()
        }
    }
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error(transparent)]
    Certify(#[from] CertifyError),
    #[error(transparent)]
    Dataset(#[from] fpp_dataset::DatasetError),
    #[error(transparent)]
    Lattice(#[from] lattice_search::LatticeError),
    #[error("{0}: {1}")]
    Io(PathBuf, std::io::Error),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Certify(CertifyError::Config(_)) => EXIT_CONFIG,
            _ => EXIT_FAIL,
        }
    }
}

fn write(path: &PathBuf, text: &str) -> Result<(), CliError> {
    std::fs::write(path, text).map_err(|e| CliError::Io(path.clone(), e))
}

fn run_checks(args: &RunArgs, default_checks: &[CheckId]) -> Result<bool, CliError> {
    let config = args.config(default_checks);
    let report = run_all(&config)?;
    for c in &report.checks {
        eprintln!("{:<20} {:<8} {} ms", c.id, c.status.label(), c.ms);
    }
    eprintln!("overall {}", report.overall.label());
    match &args.report {
        Some(path) => write(path, &report.to_json())?,
        None => println!("{}", report.to_json()),
    }
    Ok(report.passed())
}

fn run(cli: Cli) -> Result<bool, CliError> {
    use CheckId::*;
    match cli.command {
        Command::Equations { emit_conjugate } => {
            let eqs = expand_equations(
                &u_ring(QuadExtField),
                &GroupActionSpec::default(),
                emit_conjugate,
            )?;
            print!("{}", serialize_equations(&eqs));
            Ok(true)
        }
        Command::Hilbert(a) => run_checks(&a, &[HilbertSeries, PrimeIndependence]),
        Command::Smoothness(a) => run_checks(&a, &[Smoothness]),
        Command::Invariance(a) => run_checks(&a, &[GroupInvariance, FixedPoints]),
        Command::CurveC(a) => run_checks(&a, &[CurveC]),
        Command::Sextic(a) => run_checks(&a, &[SexticSymbolic, Embedding]),
        Command::Automorphism { run, points_jsonl } => {
            if let Some(path) = &points_jsonl {
                let ctx = Context::new(run.config(&[Automorphism]))?;
                let (_, points, _) = suites::sampled_points(&ctx)?;
                write(path, &sextic_model::to_jsonl(&points))?;
            }
            run_checks(&run, &[Automorphism])
        }
        Command::Ztransport(a) => run_checks(&a, &[ZTransport]),
        Command::Lattice { run, csv } => {
            if let Some(path) = &csv {
                write(
                    path,
                    &enumerate_configurations(&GramOptions::default())?.to_csv(),
                )?;
            }
            run_checks(&run, &[Lattice])
        }
        Command::All(a) => run_checks(&a, &CheckId::ALL),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = std::env::var("FPPCERT_THREADS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
    {
        // fails only if a pool already exists
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global();
    }
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(EXIT_FAIL),
        Err(e) => {
            eprintln!("fppcert: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
