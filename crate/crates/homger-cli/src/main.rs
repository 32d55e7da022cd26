mod commands;

use std::io::{IsTerminal, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "homger", version, about = "Verify and compute with hom-Lie, hom-Gerstenhaber and hom-Lie-Rinehart structures")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Output format for the report.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Record wall-clock time in the report.
    #[arg(long, global = true)]
    pub timing: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Level {
    Lie,
    Gerstenhaber,
    Rinehart,
    Sdhga,
    Bialgebra,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Theorem {
    Corres1,
    Corres2,
    Corres3,
    Res1,
    Dgca1,
    Bialgebroid,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Direction {
    Fwd,
    Bwd,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Run the axiom checks; without --level every applicable level runs.
    Verify {
        file: PathBuf,
        #[arg(long, value_enum)]
        level: Option<Level>,
    },
    /// Homology with trivial coefficients, a module, or the top representation.
    Homology {
        file: PathBuf,
        /// `trivial`, or `module` for the module section of the file.
        #[arg(long, conflicts_with_all = ["module", "rep"])]
        coefficients: Option<String>,
        /// A module section stored in its own file.
        #[arg(long, conflicts_with = "rep")]
        module: Option<PathBuf>,
        /// `top`: the representation on top forms of the cotangent structure.
        #[arg(long)]
        rep: Option<String>,
    },
    /// Cohomology with values in a representation (default: trivial).
    Cohomology {
        file: PathBuf,
        /// `trivial`, `section` for the rep section of the file, or a path.
        #[arg(long)]
        rep: Option<String>,
    },
    /// Run one direction of a correspondence.
    Correspond {
        file: PathBuf,
        #[arg(long, value_enum)]
        theorem: Theorem,
        #[arg(long, value_enum)]
        direction: Direction,
        /// Also apply the opposite direction and require the input back.
        #[arg(long)]
        roundtrip: bool,
    },
    /// The shipped example structures.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
}

#[derive(Subcommand, Debug)]
pub enum CatalogAction {
    List,
    Emit { name: String },
}

fn color_enabled(format: Format) -> bool {
    if format != Format::Text {
        return false;
    }
    match std::env::var("HOMGER_COLOR").as_deref() {
        Ok("always") => true,
        Ok("never") => false,
        _ => std::io::stdout().is_terminal(),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let outcome = commands::run(&cli.command);
    let mut out = std::io::stdout().lock();
    match outcome {
        Ok(commands::Output::Text(t)) => {
            let _ = out.write_all(t.as_bytes());
            ExitCode::SUCCESS
        }
        Ok(commands::Output::Report(mut report)) => {
            if cli.timing {
                report.elapsed_ms = Some(start.elapsed().as_millis() as u64);
            }
            let text = match cli.format {
                Format::Json => homger::io::to_json(&report),
                Format::Text => report.render_text(color_enabled(cli.format)),
            };
            let _ = out.write_all(text.as_bytes());
            if report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
