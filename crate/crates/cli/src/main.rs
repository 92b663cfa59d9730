use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use tasaki_cli::commands::{self, CliError, GenerateKind};
use tasaki_cli::document::ScalarMode;
use tasaki_core::scalar::set_float_tolerance;
use tasaki_core::{Approx, Rational};

/// Verify and construct degenerate 3-(α,δ)-Sasakian structures on Lie algebras.
///
/// Exit codes: 0 pass, 1 mathematical failure, 2 usage or parse error.
#[derive(Parser)]
#[command(name = "tasaki", version)]
struct Cli {
    /// Scalar backend; defaults to the document's `scalar_mode`.
    #[arg(long, global = true, value_enum)]
    mode: Option<ScalarMode>,
    /// Comparison tolerance for float mode.
    #[arg(long, global = true)]
    tol: Option<f64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the almost 3-contact axioms and the structure equations.
    Verify {
        file: PathBuf,
        /// Only check the degenerate form of the structure equations.
        #[arg(long)]
        degenerate_only: bool,
        /// Also write the machine-readable report here (`-` for stdout only).
        #[arg(long, value_name = "PATH")]
        json: Option<PathBuf>,
    },
    /// Emit a structure document.
    Generate {
        #[arg(value_enum)]
        kind: GenerateKind,
        #[arg(long, default_value_t = 1)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        alpha: Option<String>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Apply an H-homothetic deformation with a + b = c^2.
    Deform {
        file: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
        #[arg(long, allow_hyphen_values = true)]
        c: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Recover (alpha, delta) from a structure.
    Infer { file: PathBuf },
    /// Build the isomorphism onto the quaternionic Heisenberg algebra (float mode unless --mode is given).
    Isomorphism {
        file: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

macro_rules! with_backend {
    ($mode:expr, $f:ident ( $($arg:expr),* )) => {
        match $mode {
            ScalarMode::Exact => commands::$f::<Rational>($($arg),*),
            ScalarMode::Float => commands::$f::<Approx>($($arg),*),
        }
    };
}

fn run(cli: Cli) -> Result<u8, CliError> {
    if let Some(tol) = cli.tol {
        if !(tol.is_finite() && tol >= 0.0) {
            return Err(CliError::Usage("--tol must be a non-negative number".into()));
        }
        set_float_tolerance(tol);
    }
    match cli.command {
        Command::Verify { file, degenerate_only, json } => {
            let doc = commands::read_document(&file)?;
            with_backend!(cli.mode.unwrap_or(doc.scalar_mode), cmd_verify(&doc, degenerate_only, json.as_deref()))
        }
        Command::Generate { kind, n, alpha, output } => {
            let doc = commands::generate(kind, n, alpha.as_deref())?;
            commands::write_output(output.as_deref(), &doc.to_json())?;
            Ok(0)
        }
        Command::Deform { file, a, b, c, output } => {
            let doc = commands::read_document(&file)?;
            let out = with_backend!(cli.mode.unwrap_or(doc.scalar_mode), deform(&doc, &a, &b, &c))?;
            commands::write_output(output.as_deref(), &out.to_json())?;
            Ok(0)
        }
        Command::Infer { file } => {
            let doc = commands::read_document(&file)?;
            let p = with_backend!(cli.mode.unwrap_or(doc.scalar_mode), infer(&doc))?;
            println!("{}", p.describe());
            Ok(0)
        }
        Command::Isomorphism { file, output } => {
            let doc = commands::read_document(&file)?;
            let iso = with_backend!(cli.mode.unwrap_or(ScalarMode::Float), isomorphism(&doc))?;
            let json = serde_json::to_string_pretty(&iso).expect("serializable") + "\n";
            match output {
                Some(p) if p != std::path::Path::new("-") => {
                    commands::write_output(Some(&p), &json)?;
                    print!("{}", iso.report.render());
                }
                _ => print!("{json}"),
            }
            Ok(if iso.report.passed() { 0 } else { 1 })
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
