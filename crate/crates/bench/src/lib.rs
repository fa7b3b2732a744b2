//! Shared fixtures for the kernel benchmarks.

use swcalc::superchar::MultiplicityVector;
use swcalc::swc::{FieldCase, RepInput};

use num_bigint::BigInt;

/// A dense rank-`n` input: every supercharacter with multiplicity 2.
pub fn dense_input(n: usize, q: u64) -> RepInput {
    let c: Vec<BigInt> = (0..=n).map(|_| BigInt::from(2)).collect();
    let mult = MultiplicityVector::new(c).expect("rank >= 1");
    let case = if q % 4 == 1 { FieldCase::Fq1 { q } } else { FieldCase::Fq3 { q } };
    RepInput::new(n, case, mult.character_vector(), 0).expect("valid input")
}
