//! `colorlab`: build color-code lattices and run verification scenarios.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use colorlab::scenario::Report;

#[derive(Parser, Debug)]
#[command(name = "colorlab", version, about = "Exact verification toolkit for topological color codes")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format for reports.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Seed for randomized property suites.
    #[arg(long, default_value_t = 0, global = true)]
    seed: u64,

    /// Worker threads (0 lets the runtime decide).
    #[arg(long, default_value_t = 0, global = true)]
    jobs: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Structured,
    Text,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a lattice and run its structural checks.
    BuildLattice {
        #[arg(long)]
        lattice: String,
        /// Also write the lattice in its text format.
        #[arg(long)]
        export: Option<PathBuf>,
    },
    /// Derive the color code and check its stabilizers.
    CheckCode {
        #[arg(long)]
        lattice: String,
        /// Also write the check matrices.
        #[arg(long)]
        export: Option<PathBuf>,
    },
    /// Check whether the transversal R_k pattern preserves the code space.
    TransversalCheck {
        #[arg(long)]
        lattice: String,
        #[arg(long)]
        level: u32,
        /// Restrict to a region, e.g. `C:0,1` (top cells of one color by index).
        #[arg(long)]
        region: Option<String>,
    },
    /// Excitation-basis state of a restricted phase operator.
    Excite {
        #[arg(long)]
        lattice: String,
        #[arg(long)]
        region: Option<String>,
        /// Defaults to the lattice dimension.
        #[arg(long)]
        level: Option<u32>,
    },
    /// Check the cluster (2D) or SPT (3D) structure of a boundary state.
    VerifySpt {
        #[arg(long)]
        lattice: String,
        #[arg(long)]
        region: Option<String>,
    },
    /// Enumerate transparent walls of an anyon model.
    EnumerateWalls {
        #[arg(long, value_enum, default_value_t = commands::Model::ColorCode)]
        model: commands::Model,
    },
    /// Braiding phase of two or three named processes on the 16-cell.
    Braid {
        /// Process names such as `e_A`, `m_AB`, `s_BC`; join with `*` for products.
        #[arg(required = true, num_args = 2..=3)]
        processes: Vec<String>,
        #[arg(long, default_value = "16-cell")]
        lattice: String,
    },
    /// Run bundled scenarios.
    Run {
        names: Vec<String>,
        /// Run every scenario carrying this tag.
        #[arg(long)]
        tag: Option<String>,
        /// Run the whole catalog.
        #[arg(long, conflicts_with_all = ["names", "tag"])]
        all: bool,
    },
    /// List bundled scenarios.
    List {
        #[arg(long)]
        tag: Option<String>,
    },
}

fn emit(cli: &Cli, body: String) -> std::io::Result<()> {
    match &cli.out {
        Some(path) => std::fs::write(path, body),
        None => {
            print!("{body}");
            Ok(())
        }
    }
}

fn render(format: Format, reports: &[Report], single: bool) -> String {
    match format {
        Format::Text => reports.iter().map(Report::to_text).collect(),
        Format::Structured if single && reports.len() == 1 => reports[0].to_json() + "\n",
        Format::Structured => serde_json::to_string_pretty(reports).expect("reports serialize") + "\n",
    }
}

fn execute(cli: &Cli) -> colorlab::Result<(Vec<Report>, bool)> {
    let one = |r: Report| (vec![r], true);
    Ok(match &cli.command {
        Command::BuildLattice { lattice, export } => one(commands::build_lattice(lattice, export.as_deref())?),
        Command::CheckCode { lattice, export } => one(commands::check_code(lattice, export.as_deref())?),
        Command::TransversalCheck { lattice, level, region } => {
            one(commands::transversal_check(lattice, *level, region.as_deref())?)
        }
        Command::Excite { lattice, region, level } => one(commands::excite(lattice, region.as_deref(), *level)?),
        Command::VerifySpt { lattice, region } => one(commands::verify_spt(lattice, region.as_deref())?),
        Command::EnumerateWalls { model } => one(commands::enumerate_walls(*model)?),
        Command::Braid { processes, lattice } => one(commands::braid(lattice, processes)?),
        Command::Run { names, tag, all } => {
            let reports = commands::run(names, tag.as_deref(), *all, cli.seed)?;
            let single = names.len() == 1;
            (reports, single)
        }
        Command::List { .. } => unreachable!("handled before dispatch"),
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => e.exit(),
    };
    if let Command::List { tag } = &cli.command {
        let body = commands::list(tag.as_deref(), cli.format == Format::Structured);
        return match emit(&cli, body) {
            Ok(()) => ExitCode::SUCCESS,
            Err(e) => {
                eprintln!("error: {e}");
                ExitCode::from(2)
            }
        };
    }
    if cli.jobs > 0 {
        // ignore failure: the global pool may already exist
        let _ = rayon::ThreadPoolBuilder::new().num_threads(cli.jobs).build_global();
    }
    let (reports, single) = match execute(&cli) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    if let Err(e) = emit(&cli, render(cli.format, &reports, single)) {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    if reports.iter().all(|r| r.passed) {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
