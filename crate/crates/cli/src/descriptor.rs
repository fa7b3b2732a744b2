//! The JSON job descriptor: schema validation and conversion into core
//! inputs.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::Signed;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use swcalc::reps::RepFamily;
use swcalc::superchar::CharacterVector;
use swcalc::swc::{FieldCase, RepInput};
use swcalc::MathError;

use crate::CliError;

pub const SCHEMA_VERSION: u32 = 1;
pub const DEFAULT_MAX_DEGREE: u64 = 12;
/// Ranks above this make the 2^n product loop unreasonable on a desktop.
pub const MAX_RANK: usize = 16;
pub const MAX_DEGREE_LIMIT: u64 = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Group {
    GlFq,
    GlR,
    GlC,
}

impl Group {
    pub fn as_str(&self) -> &'static str {
        match self {
            Group::GlFq => "gl_fq",
            Group::GlR => "gl_r",
            Group::GlC => "gl_c",
        }
    }
}

/// An integer that may arrive as a JSON number or as a decimal string
/// (arbitrary precision).
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum JsonInt {
    Num(i64),
    Str(String),
}

impl JsonInt {
    pub fn to_bigint(&self) -> Result<BigInt, CliError> {
        match self {
            JsonInt::Num(v) => Ok(BigInt::from(*v)),
            JsonInt::Str(s) => s
                .parse()
                .map_err(|_| CliError::Validation(format!("not a decimal integer: {s:?}"))),
        }
    }

    pub fn from_bigint(v: &BigInt) -> JsonInt {
        JsonInt::Str(v.to_string())
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum RepSpec {
    CharacterVector {
        values: Vec<JsonInt>,
        #[serde(default)]
        delta: u8,
    },
    PrincipalSeries {
        exponents: Vec<i64>,
    },
    Cuspidal {
        theta_minus_one: i8,
    },
    Steinberg,
    DetTwist {
        j: i64,
    },
    DirectSum {
        parts: Vec<RepSpec>,
    },
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct JobDescriptor {
    pub schema_version: u32,
    pub group: Group,
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub q: Option<u64>,
    pub rep: RepSpec,
    #[serde(default = "default_max_degree")]
    pub max_degree: u64,
    #[serde(default)]
    pub allow_virtual: bool,
}

fn default_max_degree() -> u64 {
    DEFAULT_MAX_DEGREE
}

/// Reject unknown keys anywhere in the descriptor tree before typed parsing.
fn check_keys(value: &Value) -> Result<(), CliError> {
    let top: BTreeSet<&str> =
        ["schema_version", "group", "n", "q", "rep", "max_degree", "allow_virtual"]
            .into_iter()
            .collect();
    let obj = value
        .as_object()
        .ok_or_else(|| CliError::Validation("descriptor must be a JSON object".into()))?;
    for key in obj.keys() {
        if !top.contains(key.as_str()) {
            return Err(CliError::Validation(format!("unknown field {key:?} in descriptor")));
        }
    }
    if let Some(rep) = obj.get("rep") {
        check_rep_keys(rep)?;
    }
    Ok(())
}

fn check_rep_keys(value: &Value) -> Result<(), CliError> {
    let obj = value
        .as_object()
        .ok_or_else(|| CliError::Validation("rep must be a JSON object".into()))?;
    let tag = obj
        .get("type")
        .and_then(Value::as_str)
        .ok_or_else(|| CliError::Validation("rep needs a string \"type\" tag".into()))?;
    let allowed: &[&str] = match tag {
        "character_vector" => &["type", "values", "delta"],
        "principal_series" => &["type", "exponents"],
        "cuspidal" => &["type", "theta_minus_one"],
        "steinberg" => &["type"],
        "det_twist" => &["type", "j"],
        "direct_sum" => &["type", "parts"],
        other => {
            return Err(CliError::Validation(format!("unknown rep type {other:?}")));
        }
    };
    for key in obj.keys() {
        if !allowed.contains(&key.as_str()) {
            return Err(CliError::Validation(format!(
                "unknown field {key:?} in rep of type {tag:?}"
            )));
        }
    }
    if tag == "direct_sum" {
        let parts = obj
            .get("parts")
            .and_then(Value::as_array)
            .ok_or_else(|| CliError::Validation("direct_sum needs a \"parts\" array".into()))?;
        for part in parts {
            check_rep_keys(part)?;
        }
    }
    Ok(())
}

/// Parse and schema-validate a descriptor from JSON text.
pub fn parse_descriptor(text: &str) -> Result<JobDescriptor, CliError> {
    let value: Value = serde_json::from_str(text)
        .map_err(|e| CliError::Validation(format!("invalid JSON: {e}")))?;
    check_keys(&value)?;
    let desc: JobDescriptor = serde_json::from_value(value)
        .map_err(|e| CliError::Validation(format!("descriptor does not match the schema: {e}")))?;
    if desc.schema_version != SCHEMA_VERSION {
        return Err(CliError::Validation(format!(
            "unsupported schema_version {} (expected {SCHEMA_VERSION})",
            desc.schema_version
        )));
    }
    if desc.n == 0 || desc.n > MAX_RANK {
        return Err(CliError::Validation(format!("n = {} out of range 1..={MAX_RANK}", desc.n)));
    }
    if desc.max_degree > MAX_DEGREE_LIMIT {
        return Err(CliError::Validation(format!(
            "max_degree {} exceeds the limit {MAX_DEGREE_LIMIT}",
            desc.max_degree
        )));
    }
    match desc.group {
        Group::GlFq => {
            if desc.q.is_none() {
                return Err(CliError::Validation("group gl_fq requires q".into()));
            }
        }
        Group::GlR | Group::GlC => {
            if desc.q.is_some() {
                return Err(CliError::Validation("q is only meaningful for gl_fq".into()));
            }
        }
    }
    Ok(desc)
}

fn rep_to_family(
    spec: &RepSpec,
    n: usize,
    case: FieldCase,
    q: Option<u64>,
) -> Result<RepFamily, CliError> {
    match spec {
        RepSpec::CharacterVector { values, delta } => {
            if *delta > 1 {
                return Err(CliError::Validation("delta must be 0 or 1".into()));
            }
            let values: Vec<BigInt> =
                values.iter().map(JsonInt::to_bigint).collect::<Result<_, _>>()?;
            let chars = CharacterVector::new(values).map_err(CliError::Math)?;
            let input = RepInput::new(n, case, chars, *delta).map_err(CliError::Math)?;
            Ok(RepFamily::Literal { input })
        }
        RepSpec::PrincipalSeries { exponents } => {
            let q = require_q(q)?;
            Ok(RepFamily::PrincipalSeries { n, q, exponents: exponents.clone() })
        }
        RepSpec::Cuspidal { theta_minus_one } => {
            let q = require_q(q)?;
            Ok(RepFamily::Cuspidal { n, q, theta_minus_one: *theta_minus_one })
        }
        RepSpec::Steinberg => {
            let q = require_q(q)?;
            Ok(RepFamily::Steinberg { n, q })
        }
        RepSpec::DetTwist { j } => {
            let q = require_q(q)?;
            Ok(RepFamily::DetTwist { n, q, j: *j })
        }
        RepSpec::DirectSum { parts } => {
            let parts: Vec<RepFamily> = parts
                .iter()
                .map(|p| rep_to_family(p, n, case, q))
                .collect::<Result<_, _>>()?;
            Ok(RepFamily::DirectSum { parts })
        }
    }
}

fn require_q(q: Option<u64>) -> Result<u64, CliError> {
    q.ok_or_else(|| {
        CliError::Validation("this representation family is defined over F_q; use group gl_fq".into())
    })
}

/// Resolve the descriptor into a [`RepInput`], applying the optional CLI
/// delta override.
pub fn build_input(desc: &JobDescriptor, delta_override: Option<u8>) -> Result<RepInput, CliError> {
    let case = match desc.group {
        Group::GlFq => FieldCase::for_q(desc.q.expect("validated")).map_err(CliError::Math)?,
        Group::GlR => FieldCase::Real,
        Group::GlC => FieldCase::Complex,
    };
    let family = rep_to_family(&desc.rep, desc.n, case, desc.q)?;
    let mut input = swcalc::reps::to_rep_input(&family).map_err(CliError::Math)?;
    if let Some(delta) = delta_override {
        if delta > 1 {
            return Err(CliError::Validation("--delta must be 0 or 1".into()));
        }
        input.delta = delta;
    }
    if !desc.allow_virtual && !input.chars.dim().is_positive() {
        return Err(CliError::Math(MathError::Validation(
            "dimension (first character value) must be positive for a genuine representation"
                .into(),
        )));
    }
    Ok(input)
}

/// Serialize a core input back into descriptor JSON (used to report
/// counterexamples from the verification harness).
pub fn descriptor_for_input(input: &RepInput, max_degree: u64, allow_virtual: bool) -> JobDescriptor {
    let (group, q) = match input.case {
        FieldCase::Fq1 { q } | FieldCase::Fq3 { q } => (Group::GlFq, Some(q)),
        FieldCase::Real => (Group::GlR, None),
        FieldCase::Complex => (Group::GlC, None),
    };
    JobDescriptor {
        schema_version: SCHEMA_VERSION,
        group,
        n: input.n,
        q,
        rep: RepSpec::CharacterVector {
            values: input.chars.values().iter().map(JsonInt::from_bigint).collect(),
            delta: input.delta,
        },
        max_degree,
        allow_virtual,
    }
}
