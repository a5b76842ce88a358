mod commands;
mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use codegree_core::permgrp::DEFAULT_CAP;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "codegree-lab", version, about = "Character tables and codegree classification of finite groups")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Refuse groups with more elements than this.
    #[arg(long, global = true, default_value_t = DEFAULT_CAP)]
    max_order: usize,

    /// Working prime for the modular character table computation.
    #[arg(long, global = true)]
    prime: Option<u64>,

    /// Include wall-clock timings in reports (makes output nondeterministic).
    #[arg(long, global = true)]
    timing: bool,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the character table of a group.
    Table {
        /// Group spec, e.g. `sym:4`, `frobenius:5^1:4` or `perm:FILE`.
        spec: String,
    },
    /// Classify a group by its codegree multiplicities.
    Classify { spec: String },
    /// Check every group of a theorem suite against its expected verdict.
    VerifyTheorem {
        /// JSON-lines suite file; the built-in suite is used when omitted.
        suite: Option<PathBuf>,
    },
    /// Classify every entry of a JSON-lines catalog.
    Scan { catalog: PathBuf },
    /// Run the property checks on every entry of a JSON-lines catalog.
    CheckProperties { catalog: PathBuf },
}

/// Process exit statuses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Status {
    Ok = 0,
    Mismatch = 1,
    Parse = 2,
    Cap = 3,
    Internal = 4,
    UnusableCatalog = 5,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let status = match &cli.command {
        Command::Table { spec } => commands::table(&cli, spec),
        Command::Classify { spec } => commands::classify(&cli, spec),
        Command::VerifyTheorem { suite } => commands::verify_theorem(&cli, suite.as_deref()),
        Command::Scan { catalog } => commands::scan(&cli, catalog),
        Command::CheckProperties { catalog } => commands::check_properties(&cli, catalog),
    };
    ExitCode::from(status as u8)
}
