//! `xmod`: command-line driver for finite crossed modules.
//!
//! Exit codes: 0 success, 1 validation failure (the report is still
//! written), 2 I/O or schema error, 3 when the search space exceeds
//! `XMOD_MAX_SIZE` (default 10^6).

mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use xmod::{Error, SearchLimit};

#[derive(Parser)]
#[command(name = "xmod", version, about = "Finite crossed modules, their free derivations and actors")]
struct Cli {
    /// Write the report as JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate the action and the crossed module axioms.
    Check { file: PathBuf },
    /// List free derivations.
    Fder {
        file: PathBuf,
        /// Only the invertible ones.
        #[arg(long)]
        invertible: bool,
        /// Include the Cayley table of the product.
        #[arg(long)]
        table: bool,
    },
    /// The automorphism group with its generators.
    Aut { file: PathBuf },
    /// Build and validate the actor 2-crossed module.
    Actor {
        file: PathBuf,
        /// Write the 2-crossed module document to this path.
        #[arg(long)]
        emit: Option<PathBuf>,
    },
    /// Build and validate the braided crossed module of automorphisms.
    Braided { file: PathBuf },
    /// 2-crossed module to braided crossed module and back, with an isomorphism witness.
    Roundtrip { file: PathBuf },
}

/// Failure that ends a command without a report.
pub enum Failure {
    Io(String),
    Schema(Error),
    Exceeded(Error),
    Validation(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::SearchSpaceExceeded { .. } => Failure::Exceeded(e),
            Error::Syntax { .. } | Error::Semantic { .. } | Error::MalformedTable(_) => Failure::Schema(e),
            e => Failure::Validation(e),
        }
    }
}

fn search_limit() -> Result<SearchLimit, Failure> {
    match std::env::var("XMOD_MAX_SIZE") {
        Err(std::env::VarError::NotPresent) => Ok(SearchLimit::default()),
        Ok(v) => v
            .trim()
            .parse()
            .map(SearchLimit::new)
            .map_err(|_| Failure::Io(format!("XMOD_MAX_SIZE must be a non-negative integer, got `{v}`"))),
        Err(e) => Err(Failure::Io(format!("XMOD_MAX_SIZE: {e}"))),
    }
}

fn run(cli: Cli) -> Result<report::Report, Failure> {
    let limit = search_limit()?;
    match cli.command {
        Command::Check { file } => commands::check(&file),
        Command::Fder { file, invertible, table } => commands::fder(&file, invertible, table, limit),
        Command::Aut { file } => commands::aut(&file, limit),
        Command::Actor { file, emit } => commands::actor(&file, emit.as_deref(), limit),
        Command::Braided { file } => commands::braided(&file, limit),
        Command::Roundtrip { file } => commands::roundtrip(&file, limit),
    }
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Check { .. } => "check",
            Command::Fder { .. } => "fder",
            Command::Aut { .. } => "aut",
            Command::Actor { .. } => "actor",
            Command::Braided { .. } => "braided",
            Command::Roundtrip { .. } => "roundtrip",
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let json = cli.json;
    let command = cli.command.name();
    match run(cli) {
        Ok(r) => {
            print!("{}", if json { r.to_json() } else { r.to_text() });
            ExitCode::from(if r.ok { 0 } else { 1 })
        }
        // tables that are not groups or groupoids still get a report
        Err(Failure::Validation(Error::Invalid(r))) => {
            let mut rep = report::Report::new(command, None);
            rep.absorb("input", &r);
            print!("{}", if json { rep.to_json() } else { rep.to_text() });
            ExitCode::from(1)
        }
        Err(f) => {
            let (code, msg) = match f {
                Failure::Io(m) => (2, m),
                Failure::Schema(e) => (2, e.to_string()),
                Failure::Exceeded(e) => (3, e.to_string()),
                Failure::Validation(e) => (1, e.to_string()),
            };
            eprintln!("xmod: {msg}");
            ExitCode::from(code)
        }
    }
}
