//! `exlab`: correlation-set analyses of exclusivity graphs from the shell.

mod commands;
mod error;
mod format;

use clap::{Args, Parser, Subcommand, ValueEnum};
use exlab_core::sdp::Tolerances;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser, Debug)]
#[command(name = "exlab", version, about = "Classical, quantum and exclusivity-principle bounds of exclusivity graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// α (exact), ϑ (SDP) and α* (exact LP) with the sandwich verdict.
    Invariants {
        #[command(flatten)]
        common: Common,
    },
    /// Exact NC/E1 anti-blocking dualities, optionally sampled quantum self-duality.
    Duality {
        #[command(flatten)]
        common: Common,
        /// Number of seeded random directions for the quantum check.
        #[arg(long, value_name = "N")]
        quantum_sampled: Option<usize>,
    },
    /// Quantum behavior of the complement experiment that excludes a
    /// post-quantum target behavior of this graph.
    Witness {
        #[command(flatten)]
        common: Common,
        /// Comma-separated probabilities, `uniform:<p>`, or a file holding either.
        #[arg(long)]
        behavior: String,
    },
    /// Yan's composite experiment G * complement(G) and its diagonal clique.
    Yan {
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Args, Debug, Clone)]
#[group(id = "source", required = true, multiple = false)]
pub struct Source {
    /// Edge-list file: vertex count, then "i j" per line; "#" starts a comment.
    #[arg(long, value_name = "PATH", group = "source")]
    pub edge_list: Option<PathBuf>,
    /// graph6 string.
    #[arg(long, value_name = "STR", group = "source")]
    pub graph6: Option<String>,
    /// Named graph: C<n>, K<n>, P<n>, E<n>, petersen.
    #[arg(long, value_name = "NAME", group = "source")]
    pub catalog: Option<String>,
    /// Batch mode: one graph6 string per line.
    #[arg(long, value_name = "FILE", group = "source")]
    pub each: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Table,
    Json,
}

fn positive(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(x) if x > 0.0 && x.is_finite() => Ok(x),
        _ => Err(format!("'{s}' is not a positive number")),
    }
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    #[command(flatten)]
    pub source: Source,
    /// Vertex weights: comma-separated rationals or a file of them (default all ones).
    #[arg(long)]
    pub weights: Option<String>,
    #[arg(long, env = "EXLAB_SEED", default_value_t = 42)]
    pub seed: u64,
    #[arg(long, value_enum, default_value_t = OutputFormat::Table)]
    pub format: OutputFormat,
    /// Also write the JSON report to this path.
    #[arg(long, value_name = "PATH")]
    pub json: Option<PathBuf>,
    #[arg(long, value_parser = positive)]
    pub gap_tol: Option<f64>,
    #[arg(long, value_parser = positive)]
    pub feas_tol: Option<f64>,
    #[arg(long, value_parser = positive)]
    pub mem_tol: Option<f64>,
    #[arg(long, value_parser = positive)]
    pub orth_tol: Option<f64>,
    #[arg(long, value_parser = positive)]
    pub eig_tol: Option<f64>,
    #[arg(long, value_parser = positive)]
    pub realization_tol: Option<f64>,
    #[arg(long, value_parser = positive)]
    pub degenerate_tol: Option<f64>,
}

impl Common {
    pub fn tolerances(&self) -> Tolerances {
        let mut t = Tolerances::default();
        let pairs = [
            (&mut t.gap_tol, self.gap_tol),
            (&mut t.feas_tol, self.feas_tol),
            (&mut t.mem_tol, self.mem_tol),
            (&mut t.orth_tol, self.orth_tol),
            (&mut t.eig_tol, self.eig_tol),
            (&mut t.realization_tol, self.realization_tol),
            (&mut t.degenerate_tol, self.degenerate_tol),
        ];
        for (slot, value) in pairs {
            if let Some(v) = value {
                *slot = v;
            }
        }
        t
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (common, task) = match &cli.command {
        Command::Invariants { common } => (common, commands::Task::Invariants),
        Command::Duality { common, quantum_sampled } => (common, commands::Task::Duality(*quantum_sampled)),
        Command::Witness { common, behavior } => (common, commands::Task::Witness(behavior.clone())),
        Command::Yan { common } => (common, commands::Task::Yan),
    };
    match commands::run(common, &task) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("exlab: {e}");
            ExitCode::from(e.code as u8)
        }
    }
}
