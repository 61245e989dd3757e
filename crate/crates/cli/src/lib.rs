//! The `projcurve` command line: argument handling, reports and exit codes.
//!
//! Exit codes: 0 on success, 1 when a mathematical check fails, 2 on
//! malformed input.

pub mod document;
mod report;

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use projcurve::Error;

pub use document::{CurveDocument, GammaDocument, Model, Number};

/// Why a command did not succeed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Failure {
    Input(String),
    Math(String),
}

impl Failure {
    pub fn exit_code(&self) -> i32 {
        match self {
            Failure::Math(_) => 1,
            Failure::Input(_) => 2,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            Failure::Input(m) | Failure::Math(m) => m,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::ZeroInput
            | Error::EmptyInput
            | Error::AllZero
            | Error::WrongDimension { .. }
            | Error::IndexOutOfRange { .. }
            | Error::BadParameters(_)
            | Error::DegenerateForm => Failure::Input(e.to_string()),
            _ => Failure::Math(e.to_string()),
        }
    }
}

#[derive(Parser, Debug)]
#[command(name = "projcurve", version, about = "Exact invariants of rational curves, contact curves and null curves")]
struct Cli {
    /// Emit machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Degree, ramification and Plücker report for one or more curve documents.
    Analyze {
        #[arg(required = true)]
        files: Vec<PathBuf>,
        /// Also report the vanishing sequence at this place: `inf`, a number
        /// such as `3/2` or `1+i`, or a locus as `[c0,c1,...]`.
        #[arg(long = "place")]
        places: Vec<String>,
    },
    /// Test a curve in P^3 against a contact form, or recover the form.
    Contact {
        file: PathBuf,
        /// Six entries for the pairs 01, 02, 03, 12, 13, 23.
        #[arg(long)]
        beta: Option<String>,
    },
    /// Send a contact curve to its null curve.
    Klein {
        file: PathBuf,
        #[arg(long)]
        beta: Option<String>,
        /// Express the result in the standard quadric model.
        #[arg(long)]
        standard: bool,
    },
    /// Send a null curve back to its contact curve.
    KleinInv { file: PathBuf },
    /// Complete an affine null curve to a curve in the quadric.
    NullComplete { file: PathBuf },
    /// Run a classification verifier by name, or `all`.
    Verify { name: String },
    /// Ramification profiles compatible with a null-curve degree.
    Profiles { deg_g: i64 },
}

/// Runs the command line with `args` (program name first) and returns the
/// exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{text}");
            } else {
                let _ = write!(err, "{text}");
            }
            return code;
        }
    };
    let result = match cli.command {
        Command::Analyze { files, places } => report::analyze(&files, &places, cli.json),
        Command::Contact { file, beta } => report::contact(&file, beta.as_deref(), cli.json),
        Command::Klein { file, beta, standard } => report::klein(&file, beta.as_deref(), standard, cli.json),
        Command::KleinInv { file } => report::klein_inv(&file, cli.json),
        Command::NullComplete { file } => report::null_complete(&file, cli.json),
        Command::Verify { name } => report::verify(&name, cli.json),
        Command::Profiles { deg_g } => report::profiles(deg_g, cli.json),
    };
    let (text, failure) = match result {
        Ok(out) => (out.text, out.failure),
        Err(f) => (String::new(), Some(f)),
    };
    let _ = out.write_all(text.as_bytes());
    match failure {
        None => 0,
        Some(f) => {
            let _ = writeln!(err, "error: {}", f.message());
            f.exit_code()
        }
    }
}
