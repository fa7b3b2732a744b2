//! Library surface of the `swc` command: descriptor handling, result
//! records, the table reproductions, and the verification harness.

pub mod descriptor;
pub mod report;
pub mod tables;
pub mod verify;

use std::fmt;

use swcalc::MathError;

#[derive(Debug)]
pub enum CliError {
    Validation(String),
    Math(MathError),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Validation(msg) => write!(f, "validation: {msg}"),
            CliError::Math(e) => write!(f, "{e}"),
        }
    }
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Validation(_) => 2,
            CliError::Math(e) => {
                if e.is_mathematical() {
                    3
                } else {
                    2
                }
            }
        }
    }
}
