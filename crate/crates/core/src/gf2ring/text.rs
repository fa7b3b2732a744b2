//! The textual monomial grammar.
//!
//! Terms are joined by `" + "`, factors by `"*"`, exponents print as `^k`
//! and are omitted when 1.  The empty sum prints `"0"` and the unit monomial
//! `"1"`.  Example: `1 + t1*t2 + s1*t3^2`.  Output is canonical and
//! byte-stable, so it doubles as the golden-file format.

use std::fmt;

use num_bigint::BigInt;

use super::{GradedElement, Monomial, Ring, RingError};

pub(super) fn format_monomial(ring: &Ring, m: &Monomial) -> String {
    if m.is_unit() {
        return "1".to_string();
    }
    let nil_count = ring.nilpotent_count();
    let mut factors = Vec::new();
    for i in 0..nil_count {
        if m.nilpotent_mask() >> i & 1 == 1 {
            factors.push(ring.generators()[i].name.clone());
        }
    }
    for &(slot, exp) in m.free_exponents() {
        let name = &ring.generators()[nil_count + slot as usize].name;
        if exp == 1 {
            factors.push(name.clone());
        } else {
            factors.push(format!("{name}^{exp}"));
        }
    }
    factors.join("*")
}

impl fmt::Display for GradedElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let rendered: Vec<String> =
            self.terms().iter().map(|m| format_monomial(self.ring(), m)).collect();
        write!(f, "{}", rendered.join(" + "))
    }
}

/// Parse an element in the monomial grammar back into `ring`.
///
/// Factors are multiplied out semantically, so non-canonical spellings
/// (`t1*t1`, out-of-order factors) are accepted and reduced.
pub fn parse_element(ring: &Ring, input: &str) -> Result<GradedElement, RingError> {
    let input = input.trim();
    if input.is_empty() {
        return Err(RingError::Parse("empty input".into()));
    }
    if input == "0" {
        return Ok(ring.zero());
    }
    let mut total = ring.zero();
    for term in input.split(" + ") {
        let mut value = ring.one();
        for factor in term.split('*') {
            let factor = factor.trim();
            if factor.is_empty() {
                return Err(RingError::Parse(format!("empty factor in term {term:?}")));
            }
            if factor == "1" {
                continue;
            }
            let (name, exp) = match factor.split_once('^') {
                None => (factor, 1u64),
                Some((name, e)) => {
                    let exp: u64 = e
                        .parse()
                        .map_err(|_| RingError::Parse(format!("bad exponent in {factor:?}")))?;
                    if exp == 0 {
                        return Err(RingError::Parse(format!("zero exponent in {factor:?}")));
                    }
                    (name, exp)
                }
            };
            let gen = ring.generator_by_name(name).map_err(|_| {
                RingError::Parse(format!("unknown generator {name:?} in {term:?}"))
            })?;
            value = value.mul(&gen.pow(&BigInt::from(exp))?)?;
        }
        total = total.add(&value)?;
    }
    Ok(total)
}
