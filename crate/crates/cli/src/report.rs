//! Result records for the compute/decompose/matrix commands, in a JSON shape
//! that round-trips and a plain-text rendering on the monomial grammar.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use swcalc::swc::{self, RepInput, SWCReport};
use swcalc::MathError;

use crate::descriptor::JobDescriptor;
use crate::CliError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorInfo {
    pub name: String,
    pub degree: u64,
    pub nilpotent: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JobResult {
    pub schema_version: u32,
    pub group: String,
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub q: Option<u64>,
    pub max_degree: u64,
    pub ring: Vec<GeneratorInfo>,
    pub multiplicities: Vec<String>,
    #[serde(rename = "virtual")]
    pub virtual_rep: bool,
    pub m_pi: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n_pi: Option<String>,
    pub total_class: String,
    pub components: BTreeMap<u64, String>,
    pub w1: String,
    pub w2: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub w4: Option<String>,
    pub spinorial: bool,
    pub warnings: Vec<String>,
}

pub fn build_result(
    desc: &JobDescriptor,
    input: &RepInput,
    report: &SWCReport,
) -> Result<JobResult, CliError> {
    let ring = &report.ring;
    let w1 = swc::w1(input, ring).map_err(CliError::Math)?;
    let w2 = swc::w2(input, ring).map_err(CliError::Math)?;
    let w4 = if input.case.uses_st_ring() {
        Some(swc::w4_q1(input, ring).map_err(CliError::Math)?)
    } else {
        None
    };

    let mut warnings = Vec::new();
    if report.multiplicities.is_virtual() {
        warnings.push("virtual representation: negative multiplicities in use".to_string());
    }
    if report.total.graded_component(1) != w1 {
        warnings.push("w1 closed form differs from the degree-1 component".to_string());
    }
    if report.total.graded_component(2) != w2 {
        warnings.push(
            "w2 closed form differs from the degree-2 component at full rank; \
             the input may not be the character of a real representation"
                .to_string(),
        );
    }
    if let Some(w4) = &w4 {
        if report.cap >= 4 && &report.total.graded_component(4) != w4 {
            warnings.push("w4 closed form differs from the degree-4 component".to_string());
        }
    }

    Ok(JobResult {
        schema_version: desc.schema_version,
        group: desc.group.as_str().to_string(),
        n: input.n,
        q: input.case.finite_q(),
        max_degree: report.cap,
        ring: ring
            .generators()
            .iter()
            .map(|g| GeneratorInfo { name: g.name.clone(), degree: g.degree, nilpotent: g.nilpotent })
            .collect(),
        multiplicities: report.multiplicities.values().iter().map(|c| c.to_string()).collect(),
        virtual_rep: report.multiplicities.is_virtual(),
        m_pi: report.invariants.m_pi.to_string(),
        n_pi: report.invariants.n_pi.as_ref().map(|v| v.to_string()),
        total_class: report.total.to_string(),
        components: report.components.iter().map(|(d, c)| (*d, c.to_string())).collect(),
        w1: w1.to_string(),
        w2: w2.to_string(),
        w4: w4.map(|w| w.to_string()),
        spinorial: report.spinorial,
        warnings,
    })
}

pub fn render_text(result: &JobResult) -> String {
    let mut out = String::new();
    out.push_str(&format!("group: {}\n", result.group));
    out.push_str(&format!("n: {}\n", result.n));
    if let Some(q) = result.q {
        out.push_str(&format!("q: {q}\n"));
    }
    out.push_str(&format!("max_degree: {}\n", result.max_degree));
    let ring: Vec<String> = result
        .ring
        .iter()
        .map(|g| {
            if g.nilpotent {
                format!("{}(deg {}, sq 0)", g.name, g.degree)
            } else {
                format!("{}(deg {})", g.name, g.degree)
            }
        })
        .collect();
    out.push_str(&format!("ring: {}\n", ring.join(" ")));
    out.push_str(&format!("multiplicities: [{}]\n", result.multiplicities.join(", ")));
    if result.virtual_rep {
        out.push_str("virtual: true\n");
    }
    out.push_str(&format!("m_pi: {}\n", result.m_pi));
    if let Some(n_pi) = &result.n_pi {
        out.push_str(&format!("n_pi: {n_pi}\n"));
    }
    out.push_str(&format!("total: {}\n", result.total_class));
    for (degree, component) in &result.components {
        out.push_str(&format!("w[{degree}]: {component}\n"));
    }
    out.push_str(&format!("w1: {}\n", result.w1));
    out.push_str(&format!("w2: {}\n", result.w2));
    if let Some(w4) = &result.w4 {
        out.push_str(&format!("w4: {w4}\n"));
    }
    out.push_str(&format!("spinorial: {}\n", result.spinorial));
    for w in &result.warnings {
        out.push_str(&format!("warning: {w}\n"));
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecomposeResult {
    pub schema_version: u32,
    pub group: String,
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub q: Option<u64>,
    pub multiplicities: Vec<String>,
    #[serde(rename = "virtual")]
    pub virtual_rep: bool,
}

pub fn render_decompose_text(result: &DecomposeResult) -> String {
    let mut out = String::new();
    out.push_str(&format!("group: {}\n", result.group));
    out.push_str(&format!("n: {}\n", result.n));
    if let Some(q) = result.q {
        out.push_str(&format!("q: {q}\n"));
    }
    out.push_str(&format!("multiplicities: [{}]\n", result.multiplicities.join(", ")));
    out.push_str(&format!("virtual: {}\n", result.virtual_rep));
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixResult {
    pub n: usize,
    pub rows: Vec<Vec<String>>,
}

pub fn matrix_result(n: usize) -> Result<MatrixResult, CliError> {
    if n == 0 || n > 64 {
        return Err(CliError::Math(MathError::Validation(format!(
            "matrix rank {n} out of range 1..=64"
        ))));
    }
    let m = swcalc::superchar::build_matrix(n);
    let rows = (0..=n)
        .map(|i| m.row(i).iter().map(|x| x.to_string()).collect())
        .collect();
    Ok(MatrixResult { n, rows })
}

pub fn render_matrix_text(result: &MatrixResult) -> String {
    let mut out = String::new();
    for row in &result.rows {
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}
