//! Reproduction of the published parity tables for the fourth class of
//! cuspidal and Steinberg representations, and of the rank-3/rank-4
//! principal-series case list, with every entry recomputed from the
//! character formulas and compared against the stated value.

use serde::{Deserialize, Serialize};

use swcalc::reps::{self, is_odd_prime_power, RepFamily};
use swcalc::swc::w4_parity_pair;

use crate::CliError;

/// Stated rows of the cuspidal table (rank 2), with `q` read mod 16:
/// `(q mod 16, theta(-1), binom(m/2,2) mod 2, n/4 mod 2)`.
pub const CUSPIDAL_TABLE: &[(u64, i8, u8, u8)] = &[
    (1, 1, 0, 0),
    (1, -1, 0, 0),
    (5, 1, 0, 0),
    (5, -1, 0, 1),
    (9, 1, 1, 0),
    (9, -1, 1, 0),
    (13, 1, 1, 0),
    (13, -1, 1, 1),
];

/// Stated rows of the Steinberg table, with the residue column read mod 16
/// (the printed header says mod 8, but rows 9 and 13 only make sense mod 16):
/// `(q mod 16, n mod 4, binom(m/2,2) mod 2, n/4 mod 2)`.
pub const STEINBERG_TABLE: &[(u64, usize, u8, u8)] = &[
    (1, 0, 0, 0),
    (1, 1, 0, 0),
    (1, 2, 0, 0),
    (1, 3, 0, 0),
    (5, 0, 1, 0),
    (5, 1, 0, 1),
    (5, 2, 0, 0),
    (5, 3, 1, 1),
    (9, 0, 1, 0),
    (9, 1, 0, 0),
    (9, 2, 1, 0),
    (9, 3, 0, 0),
    (13, 0, 0, 0),
    (13, 1, 0, 1),
    (13, 2, 1, 0),
    (13, 3, 1, 1),
];

/// The smallest odd prime powers congruent to `residue` mod `modulus`.
pub fn smallest_prime_powers(residue: u64, modulus: u64, count: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(count);
    let mut q = 3;
    while out.len() < count {
        if q % modulus == residue && is_odd_prime_power(q) {
            out.push(q);
        }
        q += 2;
        assert!(q < 100_000, "ran out of prime powers");
    }
    out
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Sample {
    pub q: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    pub computed: (u8, u8),
    pub matched: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TableRow {
    pub label: String,
    pub stated: (u8, u8),
    pub samples: Vec<Sample>,
    pub all_match: bool,
    /// Populated only when the mod-16 reading fails: the same row retried
    /// with the residue interpreted mod 8.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fallback_mod8: Option<Vec<Sample>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CaseRow {
    pub q: u64,
    pub n: usize,
    pub family: String,
    pub exponents: Vec<i64>,
    pub stated: (u8, u8),
    pub computed: (u8, u8),
    pub matched: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TablesResult {
    pub cuspidal_w4: Vec<TableRow>,
    pub steinberg_w4: Vec<TableRow>,
    pub principal_series_w4_cases: Vec<CaseRow>,
}

impl TablesResult {
    pub fn all_match(&self) -> bool {
        self.cuspidal_w4.iter().all(|r| r.all_match)
            && self.steinberg_w4.iter().all(|r| r.all_match)
            && self.principal_series_w4_cases.iter().all(|r| r.matched)
    }
}

fn cuspidal_pair(q: u64, theta: i8) -> Result<(u8, u8), CliError> {
    let input =
        reps::to_rep_input(&RepFamily::Cuspidal { n: 2, q, theta_minus_one: theta }).map_err(CliError::Math)?;
    w4_parity_pair(&input).map_err(CliError::Math)
}

fn steinberg_pair(n: usize, q: u64) -> Result<(u8, u8), CliError> {
    let input = reps::to_rep_input(&RepFamily::Steinberg { n, q }).map_err(CliError::Math)?;
    w4_parity_pair(&input).map_err(CliError::Math)
}

fn cuspidal_rows(q_per_class: usize) -> Result<Vec<TableRow>, CliError> {
    let mut rows = Vec::new();
    for &(residue, theta, b, np) in CUSPIDAL_TABLE {
        let stated = (b, np);
        let mut samples = Vec::new();
        for q in smallest_prime_powers(residue, 16, q_per_class) {
            let computed = cuspidal_pair(q, theta)?;
            samples.push(Sample { q, n: Some(2), computed, matched: computed == stated });
        }
        let all_match = samples.iter().all(|s| s.matched);
        let fallback_mod8 = if all_match {
            None
        } else {
            let mut fb = Vec::new();
            for q in smallest_prime_powers(residue % 8, 8, q_per_class) {
                let computed = cuspidal_pair(q, theta)?;
                fb.push(Sample { q, n: Some(2), computed, matched: computed == stated });
            }
            Some(fb)
        };
        rows.push(TableRow {
            label: format!("q={residue} mod 16, theta(-1)={theta:+}"),
            stated,
            samples,
            all_match,
            fallback_mod8,
        });
    }
    Ok(rows)
}

fn steinberg_rows(q_per_class: usize) -> Result<Vec<TableRow>, CliError> {
    let mut rows = Vec::new();
    for &(residue, n_mod_4, b, np) in STEINBERG_TABLE {
        let stated = (b, np);
        let ranks = [
            if n_mod_4 >= 2 { n_mod_4 } else { n_mod_4 + 4 },
            if n_mod_4 >= 2 { n_mod_4 + 4 } else { n_mod_4 + 8 },
        ];
        let mut samples = Vec::new();
        for q in smallest_prime_powers(residue, 16, q_per_class) {
            for n in ranks {
                let computed = steinberg_pair(n, q)?;
                samples.push(Sample { q, n: Some(n), computed, matched: computed == stated });
            }
        }
        let all_match = samples.iter().all(|s| s.matched);
        let fallback_mod8 = if all_match {
            None
        } else {
            let mut fb = Vec::new();
            for q in smallest_prime_powers(residue % 8, 8, q_per_class) {
                for n in ranks {
                    let computed = steinberg_pair(n, q)?;
                    fb.push(Sample { q, n: Some(n), computed, matched: computed == stated });
                }
            }
            Some(fb)
        };
        rows.push(TableRow {
            label: format!("q={residue} mod 16, n={n_mod_4} mod 4"),
            stated,
            samples,
            all_match,
            fallback_mod8,
        });
    }
    Ok(rows)
}

/// The rank-3 and rank-4 principal-series case list for `q = 1 (mod 4)`.
fn case_rows() -> Result<Vec<CaseRow>, CliError> {
    let mut rows = Vec::new();
    for q in [17u64, 5, 13] {
        let residue = q % 16;
        let half = ((q - 1) / 2) as i64;
        // rank 3: {1, chi_j, chi_j^-1} and {sgn, chi_j, chi_j^-1}
        for (family, single) in [("1, chi_j, chi_j^-1", 0i64), ("sgn, chi_j, chi_j^-1", half)] {
            for j in [1i64, 2] {
                let nonzero = (matches!(residue, 1 | 9) && j % 2 == 1)
                    || (matches!(residue, 5 | 13) && j % 2 == 0);
                let stated = if nonzero { (1, 1) } else { (0, 0) };
                rows.push(case_row(q, 3, family, vec![single, j, -j], stated)?);
            }
        }
        // rank 4: {1, sgn, chi_i, chi_i^-1}
        for i in [1i64, 2] {
            let stated = if i % 2 == 1 { (1, 0) } else { (0, 0) };
            rows.push(case_row(q, 4, "1, sgn, chi_i, chi_i^-1", vec![0, half, i, -i], stated)?);
        }
        // rank 4: {chi_j, chi_j^-1, chi_k, chi_k^-1}
        for (j, k) in [(1i64, 2i64), (1, 3), (2, 4)] {
            let stated = if (j - k) % 2 != 0 { (1, 0) } else { (0, 0) };
            rows.push(case_row(
                q,
                4,
                "chi_j, chi_j^-1, chi_k, chi_k^-1",
                vec![j, -j, k, -k],
                stated,
            )?);
        }
    }
    Ok(rows)
}

fn case_row(
    q: u64,
    n: usize,
    family: &str,
    exponents: Vec<i64>,
    stated: (u8, u8),
) -> Result<CaseRow, CliError> {
    let input = reps::to_rep_input(&RepFamily::PrincipalSeries {
        n,
        q,
        exponents: exponents.clone(),
    })
    .map_err(CliError::Math)?;
    let computed = w4_parity_pair(&input).map_err(CliError::Math)?;
    Ok(CaseRow { q, n, family: family.to_string(), exponents, stated, computed, matched: computed == stated })
}

pub fn run_tables(q_per_class: usize) -> Result<TablesResult, CliError> {
    Ok(TablesResult {
        cuspidal_w4: cuspidal_rows(q_per_class)?,
        steinberg_w4: steinberg_rows(q_per_class)?,
        principal_series_w4_cases: case_rows()?,
    })
}

fn pair_str(p: (u8, u8)) -> String {
    format!("({}, {})", p.0, p.1)
}

pub fn render_text(result: &TablesResult) -> String {
    let mut out = String::new();
    out.push_str("cuspidal w4 parity table (rank 2, residues mod 16)\n");
    render_rows(&mut out, &result.cuspidal_w4);
    out.push_str("\nsteinberg w4 parity table (residues mod 16)\n");
    render_rows(&mut out, &result.steinberg_w4);
    out.push_str("\nprincipal series w4 case list (ranks 3 and 4, q = 1 mod 4)\n");
    for row in &result.principal_series_w4_cases {
        out.push_str(&format!(
            "  q={} n={} {{{}}} exps {:?}: stated {} computed {} {}\n",
            row.q,
            row.n,
            row.family,
            row.exponents,
            pair_str(row.stated),
            pair_str(row.computed),
            if row.matched { "MATCH" } else { "MISMATCH" },
        ));
    }
    out
}

fn render_rows(out: &mut String, rows: &[TableRow]) {
    for row in rows {
        let samples: Vec<String> = row
            .samples
            .iter()
            .map(|s| match s.n {
                Some(n) => format!("q={},n={}:{}", s.q, n, pair_str(s.computed)),
                None => format!("q={}:{}", s.q, pair_str(s.computed)),
            })
            .collect();
        out.push_str(&format!(
            "  {}: stated {} | {} | {}\n",
            row.label,
            pair_str(row.stated),
            samples.join("  "),
            if row.all_match { "MATCH" } else { "MISMATCH" },
        ));
        if let Some(fb) = &row.fallback_mod8 {
            let fbs: Vec<String> = fb
                .iter()
                .map(|s| match s.n {
                    Some(n) => format!("q={},n={}:{}", s.q, n, pair_str(s.computed)),
                    None => format!("q={}:{}", s.q, pair_str(s.computed)),
                })
                .collect();
            out.push_str(&format!("    mod-8 fallback: {}\n", fbs.join("  ")));
        }
    }
}
