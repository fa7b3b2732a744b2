//! Seeded random representation-like inputs for the verification harness and
//! the randomized test suites.
//!
//! "Genuine" inputs satisfy the parity facts that hold for restrictions of
//! actual real representations:
//!
//! * non-negative multiplicities;
//! * for `q = 1 (mod 4)`: every `c_i` with `i >= 1` even (the perfect-square
//!   property of the restriction);
//! * for `q = 3 (mod 4)` and the real/complex groups: `n_pi = 0 (mod 4)`,
//!   i.e. `sum_i C(n-2, i-1) c_i` even, the rank-2 evenness fact that makes
//!   the `w2` closed form symmetric.

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::Zero;
use rand::Rng;

use crate::superchar::{CharacterVector, MultiplicityVector};
use crate::swc::{FieldCase, RepInput};

/// Odd prime powers congruent to 1 mod 4, smallest first.
pub const FQ1_SAMPLES: &[u64] = &[5, 9, 13, 17, 25, 29, 37, 41];
/// Odd prime powers congruent to 3 mod 4, smallest first.
pub const FQ3_SAMPLES: &[u64] = &[3, 7, 11, 19, 23, 27, 31];

/// The group flavor to draw from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CorpusCase {
    Fq1,
    Fq3,
    Real,
    Complex,
}

impl CorpusCase {
    fn field_case(&self, rng: &mut impl Rng) -> FieldCase {
        match self {
            CorpusCase::Fq1 => FieldCase::Fq1 { q: FQ1_SAMPLES[rng.gen_range(0..FQ1_SAMPLES.len())] },
            CorpusCase::Fq3 => FieldCase::Fq3 { q: FQ3_SAMPLES[rng.gen_range(0..FQ3_SAMPLES.len())] },
            CorpusCase::Real => FieldCase::Real,
            CorpusCase::Complex => FieldCase::Complex,
        }
    }
}

/// Draw a random non-negative multiplicity vector of rank `n`; occasionally
/// one entry is scaled up to a huge value to exercise the big-exponent path.
pub fn random_multiplicities(rng: &mut impl Rng, n: usize) -> Vec<BigInt> {
    let mut c: Vec<BigInt> = (0..=n)
        .map(|_| {
            if rng.gen_bool(0.3) {
                BigInt::zero()
            } else {
                BigInt::from(rng.gen_range(0u32..=4))
            }
        })
        .collect();
    if rng.gen_bool(0.15) {
        let i = rng.gen_range(0..=n);
        c[i] += BigInt::from(rng.gen::<u64>() >> rng.gen_range(0..40)) * 2;
    }
    c
}

/// Random multiplicities with the parity constraints of the given case
/// applied.
pub fn random_genuine_multiplicities(rng: &mut impl Rng, n: usize, case: CorpusCase) -> Vec<BigInt> {
    let mut c = random_multiplicities(rng, n);
    match case {
        CorpusCase::Fq1 => {
            for ci in c.iter_mut().skip(1) {
                *ci *= 2;
            }
        }
        _ => {
            // enforce n_pi = 0 (mod 4): sum C(n-2, i-1) c_i must be even
            if n >= 2 {
                let mut acc = BigInt::zero();
                for (i, ci) in c.iter().enumerate().skip(1) {
                    acc += binomial(BigInt::from(n - 2), BigInt::from(i - 1)) * ci;
                }
                if acc % 2 != BigInt::zero() {
                    c[1] += 1;
                }
            }
        }
    }
    c
}

/// Draw a genuine input: parities adjusted to the congruence case, character
/// vector synthesized as `M * c`.
pub fn random_genuine_input(rng: &mut impl Rng, case: CorpusCase, max_n: usize) -> RepInput {
    let n = rng.gen_range(1..=max_n);
    let c = random_genuine_multiplicities(rng, n, case);
    let field_case = case.field_case(rng);
    let mult = MultiplicityVector::new(c).expect("rank >= 1");
    let chars = mult.character_vector();
    let delta = if matches!(field_case, FieldCase::Fq1 { .. }) && rng.gen_bool(0.5) { 1 } else { 0 };
    RepInput::new(n, field_case, chars, delta).expect("synthesized input is valid")
}

/// A literal character vector with prescribed `m_pi = m` (rank 1,
/// multiplicities `c = (1, m)`), for the explicit spinoriality cases.
pub fn rank_one_with_m_pi(case: FieldCase, m: u64) -> RepInput {
    let chars = CharacterVector::new(vec![BigInt::from(1 + m), BigInt::from(1) - BigInt::from(m)])
        .expect("two entries");
    RepInput::new(1, case, chars, 0).expect("valid rank-1 input")
}
