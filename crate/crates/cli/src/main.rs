//! `unicyclic`: run job files through the Hopf-cyclic engine.
//!
//! Exit codes: 0 success, 2 invalid input structure, 3 certification or
//! oracle failure, 4 malformed job, bad configuration or usage.

mod fixtures;
mod job;
mod oracle;
mod run;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use unicyclic_core::lambda::Flavor;
use unicyclic_core::Error;

use job::{JobSpec, OutputFormat, Pipeline, TheoryArg};
use run::Options;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Core(#[from] Error),
    #[error("format error: {0}")]
    Format(String),
    #[error("{0}")]
    Io(String),
    #[error("oracle disagrees: {0}")]
    Oracle(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(e) => match e {
                Error::Validation(_)
                | Error::NotEquivariant(_)
                | Error::Restriction(_)
                | Error::Singular
                | Error::Dimension(_) => 2,
                Error::Certification(_) => 3,
                Error::Parse(_)
                | Error::Field(_)
                | Error::Composition(_)
                | Error::Range(_)
                | Error::Configuration(_)
                | Error::Truncation(_) => 4,
            },
            CliError::Oracle(_) => 3,
            CliError::Format(_) | CliError::Io(_) => 4,
        }
    }
}

#[derive(Parser)]
#[command(
    name = "unicyclic",
    version,
    about = "Exact Hopf-cyclic homology from bialgebra symmetry data"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a job file.
    Run {
        job: PathBuf,
        /// Override the pipeline (validate, build, approx, homology, hopf-hochschild, lambda-calc).
        #[arg(long, value_enum)]
        pipeline: Option<Pipeline>,
        /// Override the truncation degree N.
        #[arg(long)]
        degree: Option<usize>,
        /// Override the theory of a homology job.
        #[arg(long, value_enum)]
        theory: Option<TheoryArg>,
        /// Override the flavor of a lambda-calc job (plus, n, z, lambda).
        #[arg(long)]
        flavor: Option<String>,
        /// Report the relation instances checked on the result.
        #[arg(long)]
        certify: bool,
        /// Recompute homology with dense elimination and compare.
        #[arg(long)]
        oracle: bool,
        /// Print the report as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Normal form of a word in the generators, e.g. "d1_0 * t1_1".
    Lambda {
        expr: String,
        #[arg(long, default_value = "n")]
        flavor: String,
    },
    /// Print the canonical form of a job file.
    Emit { job: PathBuf },
    /// Write the bundled fixture jobs into a directory.
    Fixtures { dir: PathBuf },
}

fn read_job(path: &Path) -> Result<JobSpec, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    JobSpec::parse(&text)
}

fn parse_flavor(s: &str) -> Result<Flavor, CliError> {
    Ok(s.parse::<Flavor>()?)
}

fn dispatch(command: Command) -> Result<String, CliError> {
    match command {
        Command::Run {
            job,
            pipeline,
            degree,
            theory,
            flavor,
            certify,
            oracle,
            json,
        } => {
            let mut spec = read_job(&job)?;
            if let Some(p) = pipeline {
                spec.pipeline = p;
                spec.check_shape()?;
            }
            let opts = Options {
                degree,
                theory,
                flavor: flavor.as_deref().map(parse_flavor).transpose()?,
                certify,
                oracle,
                json,
            };
            let report = run::execute(&spec, &opts)?;
            let format = if opts.json {
                OutputFormat::Json
            } else {
                spec.output
            };
            Ok(report.render(format))
        }
        Command::Lambda { expr, flavor } => {
            let spec = JobSpec {
                name: None,
                field: unicyclic_core::FieldSpec::Rationals,
                pipeline: Pipeline::LambdaCalc,
                truncation: 0,
                theory: None,
                output: OutputFormat::Text,
                bialgebra: None,
                datum: None,
                coefficient: None,
                expression: Some(expr),
                flavor: Some(parse_flavor(&flavor)?),
            };
            Ok(run::execute(&spec, &Options::default())?.render(OutputFormat::Text))
        }
        Command::Emit { job } => Ok(read_job(&job)?.emit()),
        Command::Fixtures { dir } => {
            let written = fixtures::write_all(&dir)?;
            Ok(written
                .iter()
                .map(|p| format!("{}\n", p.display()))
                .collect())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(4)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match dispatch(cli.command) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
