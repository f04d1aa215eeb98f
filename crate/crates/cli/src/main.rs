use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use contactgeom_cli::commands;
use contactgeom_cli::{CliError, Report};

#[derive(Parser)]
#[command(
    name = "contactgeom",
    version,
    about = "Exact checks on contact pseudo-metric structures"
)]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Human, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Human,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Check the structure axioms and every identity that applies.
    Verify { document: PathBuf },
    /// Print the Christoffel summary, Ricci tensor and scalar curvature.
    Curvature { document: PathBuf },
    /// Report K-contact, Sasakian, η-Einstein, (κ, μ) and D-fixed status.
    Classify { document: PathBuf },
    /// Check the document's soliton data.
    Soliton {
        document: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        mu: Option<String>,
    },
    /// Check a gradient soliton with potential function `f`.
    GradientSoliton {
        document: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        potential: String,
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        mu: Option<String>,
    },
    /// Apply a D-homothetic deformation and write the result.
    Deform {
        document: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        t: String,
        #[arg(long)]
        out: PathBuf,
    },
    /// Evaluate every theorem report against the soliton data.
    Theorems {
        document: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        mu: Option<String>,
    },
    /// Emit the built-in Sasakian example on R^3 as a document.
    Example {
        #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
        epsilon: i64,
        #[arg(long, default_value = "6", allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, default_value = "0", allow_hyphen_values = true)]
        mu: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

enum Output {
    Report(Report),
    Text(String),
}

fn run(cli: Cli) -> Result<Output, CliError> {
    use Command::*;
    let report = match cli.command {
        Verify { document } => commands::verify(&commands::load(&document)?),
        Curvature { document } => commands::curvature(&commands::load(&document)?),
        Classify { document } => commands::classify_command(&commands::load(&document)?),
        Soliton {
            document,
            lambda,
            mu,
        } => commands::soliton(
            &commands::load(&document)?,
            lambda.as_deref(),
            mu.as_deref(),
        )?,
        GradientSoliton {
            document,
            potential,
            lambda,
            mu,
        } => commands::gradient_soliton(
            &commands::load(&document)?,
            &potential,
            lambda.as_deref(),
            mu.as_deref(),
        )?,
        Deform { document, t, out } => commands::deform(&commands::load(&document)?, &t, &out)?,
        Theorems {
            document,
            lambda,
            mu,
        } => commands::theorems(
            &commands::load(&document)?,
            lambda.as_deref(),
            mu.as_deref(),
        )?,
        Example {
            epsilon,
            lambda,
            mu,
            out,
        } => {
            let text = commands::example(epsilon, &lambda, &mu)?.to_json() + "\n";
            return match out {
                None => Ok(Output::Text(text)),
                Some(path) => {
                    std::fs::write(&path, text).map_err(|e| CliError::Io {
                        path: path.display().to_string(),
                        reason: e.to_string(),
                    })?;
                    Ok(Output::Text(String::new()))
                }
            };
        }
    };
    Ok(Output::Report(report))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let format = cli.format;
    match run(cli) {
        Ok(Output::Text(t)) => {
            print!("{t}");
            ExitCode::SUCCESS
        }
        Ok(Output::Report(r)) => {
            match format {
                Format::Human => print!("{}", r.human()),
                Format::Json => println!("{}", r.json()),
            }
            ExitCode::from(if r.passed { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
