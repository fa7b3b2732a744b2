//! `swc`: exact Stiefel-Whitney class calculator for representations of
//! `GL_n` over finite fields (odd characteristic), the reals, and the
//! complexes.
//!
//! Exit codes: 0 success, 1 verification failure, 2 validation error,
//! 3 mathematical inconsistency in the input.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use swcalc::superchar::decompose;
use swcalc::swc::total_swc;

use swcalc_cli::descriptor::{self, build_input, parse_descriptor};
use swcalc_cli::report::{
    build_result, matrix_result, render_decompose_text, render_matrix_text, render_text,
    DecomposeResult,
};
use swcalc_cli::{tables, verify, CliError};

#[derive(Debug, Clone, Copy, Default, ValueEnum)]
enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Parser)]
#[command(name = "swc", version, about = "Exact Stiefel-Whitney classes for GL_n representations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the total class and closed forms for a job descriptor.
    Compute {
        /// Path to a JSON job descriptor.
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Override the descriptor's degree cap.
        #[arg(long)]
        max_degree: Option<u64>,
        /// Override the determinant indicator (q = 1 mod 4 only).
        #[arg(long)]
        delta: Option<u8>,
        /// Accept virtual (negative-multiplicity) inputs.
        #[arg(long)]
        allow_virtual: bool,
    },
    /// Print the supercharacter table of C_2^n.
    Matrix {
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Decompose a character vector into supercharacter multiplicities.
    Decompose {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Recompute the published parity tables and case lists.
    Tables {
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run the full theorem-verification harness.
    Verify {
        #[arg(long, default_value_t = 7)]
        seed: u64,
        /// Largest rank for the involution sweep.
        #[arg(long, default_value_t = 12)]
        max_n: usize,
        /// Randomized cases per closed-form corpus.
        #[arg(long, default_value_t = 200)]
        cases: usize,
        /// Test hook: corrupt the supercharacter table on purpose.
        #[arg(long, hide = true)]
        corrupt_involution: bool,
    },
}

fn read_descriptor(path: &PathBuf) -> Result<descriptor::JobDescriptor, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Validation(format!("cannot read {}: {e}", path.display())))?;
    parse_descriptor(&text)
}

fn to_json<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("result serializes");
    s.push('\n');
    s
}

fn run(cli: Cli) -> Result<ExitCode, CliError> {
    match cli.command {
        Command::Compute { file, format, max_degree, delta, allow_virtual } => {
            let mut desc = read_descriptor(&file)?;
            if let Some(cap) = max_degree {
                if cap > descriptor::MAX_DEGREE_LIMIT {
                    return Err(CliError::Validation(format!(
                        "--max-degree {cap} exceeds the limit {}",
                        descriptor::MAX_DEGREE_LIMIT
                    )));
                }
                desc.max_degree = cap;
            }
            desc.allow_virtual = desc.allow_virtual || allow_virtual;
            let input = build_input(&desc, delta)?;
            let swc_report =
                total_swc(&input, desc.max_degree, desc.allow_virtual).map_err(CliError::Math)?;
            let result = build_result(&desc, &input, &swc_report)?;
            match format {
                Format::Json => print!("{}", to_json(&result)),
                Format::Text => print!("{}", render_text(&result)),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Matrix { n, format } => {
            let result = matrix_result(n)?;
            match format {
                Format::Json => print!("{}", to_json(&result)),
                Format::Text => print!("{}", render_matrix_text(&result)),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Decompose { file, format } => {
            let desc = read_descriptor(&file)?;
            let input = build_input(&desc, None)?;
            let mult = decompose(&input.chars, desc.allow_virtual).map_err(CliError::Math)?;
            let result = DecomposeResult {
                schema_version: desc.schema_version,
                group: desc.group.as_str().to_string(),
                n: input.n,
                q: input.case.finite_q(),
                multiplicities: mult.values().iter().map(|c| c.to_string()).collect(),
                virtual_rep: mult.is_virtual(),
            };
            match format {
                Format::Json => print!("{}", to_json(&result)),
                Format::Text => print!("{}", render_decompose_text(&result)),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Tables { format } => {
            let result = tables::run_tables(2)?;
            match format {
                Format::Json => print!("{}", to_json(&result)),
                Format::Text => print!("{}", tables::render_text(&result)),
            }
            // mismatches are reported in the output, not fatal
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { seed, max_n, cases, corrupt_involution } => {
            if max_n == 0 || max_n > 14 {
                return Err(CliError::Validation("--max-n must be in 1..=14".into()));
            }
            if cases == 0 || cases > 100_000 {
                return Err(CliError::Validation("--cases must be in 1..=100000".into()));
            }
            let config = verify::VerifyConfig { seed, max_n, cases, corrupt_involution };
            let outcomes = verify::run_verify(&config);
            print!("{}", verify::render_report(&outcomes));
            let failed = outcomes.iter().any(|o| !o.failures.is_empty());
            if failed {
                if let Some(cx) = verify::first_counterexample(&outcomes) {
                    eprintln!("first counterexample descriptor:\n{cx}");
                }
                Ok(ExitCode::from(1))
            } else {
                Ok(ExitCode::SUCCESS)
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(e.exit_code())
        }
    }
}
