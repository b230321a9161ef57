//! `hypercell`: reproducible verification runs.

mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use report::RunReport;

/// Default for `--seed`.
pub const DEFAULT_SEED: u64 = 24;

#[derive(Parser, Debug)]
#[command(name = "hypercell", version, about = "Verify the combinatorics of ideal right-angled hyperbolic 4-polytopes")]
pub struct Cli {
    /// Print the run report as JSON.
    #[arg(long, global = true)]
    pub json: bool,
    /// Seed for every randomized step.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Worker threads (defaults to all cores).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check identities, volume, vertex figures, facets and circuits of the 24-cell.
    #[command(name = "verify-24cell")]
    Verify24Cell {
        /// Lattice file to check instead of the built-in 24-cell.
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Enumerate octahedrites and write a planar_code catalog with a manifest.
    Enumerate {
        #[arg(long, value_parser = clap::value_parser!(u64).range(6..=20))]
        max_n: u64,
        /// Output directory (default: $HYPERCELL_CATALOG_DIR, then ./catalog).
        #[arg(long)]
        out: Option<PathBuf>,
        /// Cross-check counts against the slow oracle up to this many vertices.
        #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u64).range(0..=12))]
        oracle_max: u64,
    },
    /// Check the non-embedding claims, or search one pattern.
    Patterns {
        /// Catalog directory (default: $HYPERCELL_CATALOG_DIR, then ./catalog).
        #[arg(long)]
        catalog: Option<PathBuf>,
        /// `claims`, `tau`, `sigma`, `nu`, `omega` or `file:PATH`.
        #[arg(long, default_value = "claims")]
        pattern: String,
        #[arg(long, value_enum, default_value_t = HostChoice::Catalog)]
        host: HostChoice,
        /// Auxiliary vertex placement for `nu` and `omega`.
        #[arg(long, value_enum)]
        reading: Option<ReadingChoice>,
    },
    /// Tabulate the dimension bound.
    Bounds {
        #[arg(long, default_value_t = 24)]
        min_f34: u64,
        #[arg(long, default_value_t = 64, value_parser = clap::value_parser!(u64).range(4..=128))]
        n_max: u64,
    },
    /// Spectrum of the Gram matrix of a (4,0) circuit, and circuit search.
    Circuits {
        #[arg(long, default_value_t = 1.0)]
        rho13: f64,
        #[arg(long, default_value_t = 1.0)]
        rho24: f64,
        /// Also test this many random parameter pairs in (0, 20].
        #[arg(long, default_value_t = 0)]
        samples: u64,
        /// Search this lattice for forbidden circuits.
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Volume of the polytope described by a lattice file.
    Volume {
        #[arg(long)]
        input: PathBuf,
        /// Refuse lattices that break the face-count identities.
        #[arg(long)]
        strict: bool,
    },
    /// Print the JSON schema of run reports.
    Schema,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum HostChoice {
    Catalog,
    Octahedron,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ReadingChoice {
    Separate,
    Merged,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Command::Schema = cli.command {
        print!("{}", report::SCHEMA);
        return ExitCode::SUCCESS;
    }
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(j) = cli.jobs {
        pool = pool.num_threads(j.max(1));
    }
    let pool = match pool.build() {
        Ok(p) => p,
        Err(e) => return fail(e.into()),
    };
    match pool.install(|| commands::run(&cli)) {
        Ok(report) => emit(&cli, &report),
        Err(e) => fail(e),
    }
}

fn emit(cli: &Cli, report: &RunReport) -> ExitCode {
    if cli.json {
        println!("{}", serde_json::to_string_pretty(report).expect("report serializes"));
    } else {
        print!("{}", report.render_text());
    }
    if report.passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn fail(e: anyhow::Error) -> ExitCode {
    eprintln!("error: {e:#}");
    ExitCode::from(2)
}
