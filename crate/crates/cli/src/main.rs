//! Command-line surface: matrix parsing, dilation certification, K-theory,
//! filter banks, verification suites and norm-decay reports.
//!
//! Exit codes: 0 success, 1 usage/parse error, 2 not a dilation matrix,
//! 3 verification-suite failure.

use clap::{Args, Parser, Subcommand};
use std::process::ExitCode;

mod parse;
mod report;
mod verify;

use exelk::{
    build_filterbank, certify_dilation, kgroups, norm_decay, IntegerMatrix, NormDecay,
};

#[derive(Parser)]
#[command(
    name = "exelk",
    about = "Exact K-theory of torus crossed products by integer dilation matrices",
    version
)]
struct Cli {
    /// Emit the machine-readable JSON report instead of human output.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct MatrixInput {
    /// Matrix in row text form, e.g. "2 1; -1 2" (entries split by
    /// whitespace or commas, rows by ";").
    matrix: Option<String>,
    /// Read the matrix from a file instead: row text or {"matrix": [[...]]}.
    #[arg(long, conflicts_with = "matrix")]
    file: Option<std::path::PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Certify the eigenvalue condition |lambda| > 1 exactly.
    Check(MatrixInput),
    /// Compute K_0 and K_1 of the crossed product.
    Ktheory {
        #[command(flatten)]
        input: MatrixInput,
        /// Restrict the per-grade summand table to these grades (e.g. 0,1).
        #[arg(long, value_delimiter = ',')]
        grades: Option<Vec<usize>>,
    },
    /// Build the monomial filter bank and verify orthonormality.
    Filterbank(MatrixInput),
    /// Run the exact verification suites on one matrix or a random family.
    Verify {
        #[command(flatten)]
        input: MatrixInput,
        /// Generate random dilation matrices instead: dimension and count.
        #[arg(long, num_args = 2, value_names = ["D", "COUNT"])]
        random: Option<Vec<usize>>,
        /// RNG seed for --random (recorded in the report).
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Find the first n with ||A^-n|| below epsilon.
    Normdecay {
        #[command(flatten)]
        input: MatrixInput,
        #[arg(long, default_value_t = 1e-3)]
        epsilon: f64,
        #[arg(long, default_value_t = 64)]
        nmax: usize,
    },
}

fn load_matrix(input: &MatrixInput) -> Result<IntegerMatrix, String> {
    let text = match (&input.matrix, &input.file) {
        (Some(t), None) => t.clone(),
        (None, Some(path)) => std::fs::read_to_string(path)
            .map_err(|e| format!("cannot read {}: {e}", path.display()))?,
        _ => return Err("expected a matrix argument or --file".into()),
    };
    parse::parse_matrix(&text)
}

fn run(cli: Cli) -> Result<u8, String> {
    match cli.command {
        Command::Check(input) => {
            let a = load_matrix(&input)?;
            let cert = certify_dilation(&a).map_err(|e| e.to_string())?;
            let rep = report::check_report(&a, &cert);
            report::emit(&rep, cli.json);
            Ok(if cert.is_dilation { 0 } else { 2 })
        }
        Command::Ktheory { input, grades } => {
            let a = load_matrix(&input)?;
            let cert = certify_dilation(&a).map_err(|e| e.to_string())?;
            if !cert.is_dilation {
                let rep = report::check_report(&a, &cert);
                report::emit(&rep, cli.json);
                return Ok(2);
            }
            let result = kgroups(&a).map_err(|e| e.to_string())?;
            let rep = report::ktheory_report(&a, &cert, &result, grades.as_deref());
            report::emit(&rep, cli.json);
            Ok(0)
        }
        Command::Filterbank(input) => {
            let a = load_matrix(&input)?;
            let cert = certify_dilation(&a).map_err(|e| e.to_string())?;
            if !cert.is_dilation {
                let rep = report::check_report(&a, &cert);
                report::emit(&rep, cli.json);
                return Ok(2);
            }
            let fb = build_filterbank(&a).map_err(|e| e.to_string())?;
            let ortho = exelk::check_orthonormal(&fb).map_err(|e| e.to_string())?;
            let rep = report::filterbank_report(&a, &cert, &fb, &ortho);
            report::emit(&rep, cli.json);
            Ok(0)
        }
        Command::Verify { input, random, seed } => {
            let matrices = match random {
                Some(params) => {
                    if params.len() != 2 {
                        return Err("--random takes exactly D COUNT".into());
                    }
                    verify::random_dilations(params[0], params[1], seed)?
                }
                None => vec![load_matrix(&input)?],
            };
            let (rep, all_pass) = verify::run_suites(&matrices, seed);
            report::emit(&rep, cli.json);
            Ok(if all_pass { 0 } else { 3 })
        }
        Command::Normdecay { input, epsilon, nmax } => {
            let a = load_matrix(&input)?;
            let decay = norm_decay(&a, epsilon, nmax).map_err(|e| e.to_string());
            match decay {
                Ok(d) => {
                    let cert = certify_dilation(&a).map_err(|e| e.to_string())?;
                    let rep = report::normdecay_report(&a, &cert, epsilon, nmax, &d);
                    report::emit(&rep, cli.json);
                    match d {
                        NormDecay::Decayed { .. } | NormDecay::NotYetDecayed { .. } => Ok(0),
                    }
                }
                Err(e) if e.starts_with("not a dilation matrix") => {
                    eprintln!("error: {e}");
                    Ok(2)
                }
                Err(e) => Err(e),
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
