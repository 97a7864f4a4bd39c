use clap::{Parser, Subcommand};
use copula_design_cli::commands::{self, CommonOptions, TauQuery};
use copula_design_cli::repro::Target;
use copula_design_cli::{CliError, ExitStatus};
use std::path::PathBuf;

#[derive(Parser)]
#[command(
    name = "copdesign",
    version,
    about = "Locally D-optimal designs for bivariate copula models"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args)]
struct Common {
    /// Candidate grid (optimize) or evaluation grid (check, sensitivity-profile).
    #[arg(long)]
    grid: Option<usize>,
    /// Certification tolerance on max d ≤ p (1 + tol).
    #[arg(long)]
    tol: Option<f64>,
    /// Gauss–Legendre order of the continuous-model quadrature.
    #[arg(long)]
    quad_order: Option<usize>,
}

impl From<Common> for CommonOptions {
    fn from(c: Common) -> Self {
        CommonOptions {
            grid: c.grid,
            tol: c.tol,
            quad_order: c.quad_order,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Compute and certify the locally D-optimal design.
    Optimize {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        out: PathBuf,
        /// Per-iteration trace as CSV.
        #[arg(long)]
        trace: Option<PathBuf>,
        #[command(flatten)]
        common: Common,
    },
    /// Check a design against the equivalence-theorem bound.
    Check {
        #[arg(long)]
        design: PathBuf,
        #[arg(long)]
        config: PathBuf,
        /// Write the sensitivity profile as CSV.
        #[arg(long)]
        profile: Option<PathBuf>,
        #[command(flatten)]
        common: Common,
    },
    /// D-efficiency of design A relative to design B.
    Efficiency {
        design_a: PathBuf,
        design_b: PathBuf,
        #[arg(long)]
        config: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Convert between Kendall's tau and a copula parameter.
    Tau {
        family: String,
        #[arg(
            long,
            conflicts_with = "alpha",
            required_unless_present = "alpha",
            allow_hyphen_values = true
        )]
        tau: Option<f64>,
        #[arg(long, allow_hyphen_values = true)]
        alpha: Option<f64>,
    },
    /// Sensitivity function of a design over the design space, as CSV.
    SensitivityProfile {
        #[arg(long)]
        design: PathBuf,
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        out: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Reproduce a published design or table and compare cell by cell.
    Repro {
        #[arg(value_enum)]
        target: Target,
        #[arg(long, default_value = "repro-out")]
        out: PathBuf,
        #[command(flatten)]
        common: Common,
    },
}

fn run(cli: Cli) -> Result<ExitStatus, CliError> {
    let mut stdout = std::io::stdout().lock();
    match cli.command {
        Command::Optimize {
            config,
            out,
            trace,
            common,
        } => commands::optimize(&config, &out, trace.as_deref(), &common.into(), &mut stdout),
        Command::Check {
            design,
            config,
            profile,
            common,
        } => commands::check(&design, &config, profile.as_deref(), &common.into(), &mut stdout),
        Command::Efficiency {
            design_a,
            design_b,
            config,
            common,
        } => commands::efficiency(&design_a, &design_b, &config, &common.into(), &mut stdout),
        Command::Tau { family, tau, alpha } => {
            let query = match (tau, alpha) {
                (Some(t), _) => TauQuery::Tau(t),
                (None, Some(a)) => TauQuery::Alpha(a),
                (None, None) => unreachable!("clap requires one of --tau and --alpha"),
            };
            commands::tau(&family, query, &mut stdout)
        }
        Command::SensitivityProfile {
            design,
            config,
            out,
            common,
        } => commands::sensitivity_profile(&design, &config, &out, &common.into(), &mut stdout),
        Command::Repro { target, out, common } => commands::repro(target, &out, &common.into(), &mut stdout),
    }
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() {
                ExitStatus::InputError.code()
            } else {
                0
            };
            let _ = e.print();
            std::process::exit(code);
        }
    };
    let status = run(cli).unwrap_or_else(|e| {
        eprintln!("copdesign: {e}");
        e.status()
    });
    std::process::exit(status.code());
}
