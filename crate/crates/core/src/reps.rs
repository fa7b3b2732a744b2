//! Character vectors on diagonal involutions for the named families of
//! representations of `GL_n(F_q)`: real principal series, cuspidal,
//! Steinberg, and realified determinant twists, plus direct sums and the
//! q-combinatorics behind their dimensions.
//!
//! Everything is exact; the q-factorials overflow machine words already at
//! small ranks.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::MathError;
use crate::superchar::CharacterVector;
use crate::swc::{FieldCase, RepInput};

/// True for odd prime powers `p^k`, `p` an odd prime, `k >= 1`.
pub fn is_odd_prime_power(q: u64) -> bool {
    if q < 3 || q % 2 == 0 {
        return false;
    }
    let mut p = 3;
    while p * p <= q {
        if q % p == 0 {
            break;
        }
        p += 2;
    }
    let p = if p * p > q { q } else { p };
    let mut rest = q;
    while rest % p == 0 {
        rest /= p;
    }
    rest == 1
}

/// The q-factorial `[n]_q! = prod_{i=1}^n (q^i - 1)/(q - 1)`, the dimension
/// of a principal series representation.
pub fn q_bracket_factorial(n: usize, q: u64) -> BigInt {
    let q = BigInt::from(q);
    let denom = &q - 1;
    let mut total = BigInt::one();
    for i in 1..=n {
        total *= (q.pow(i as u32) - 1u8) / &denom;
    }
    total
}

/// The geometric sum `T_i = 1 + q + ... + q^i`.
pub fn geometric_sum(i: usize, q: u64) -> BigInt {
    let q = BigInt::from(q);
    let mut total = BigInt::zero();
    for e in 0..=i {
        total += q.pow(e as u32);
    }
    total
}

/// The product `(q^1 - 1)(q^2 - 1) ... (q^m - 1)`; for `m = n - 1` this is
/// the dimension of a cuspidal representation of `GL_n(F_q)`.
pub fn q_power_product(m: usize, q: u64) -> BigInt {
    let q = BigInt::from(q);
    let mut total = BigInt::one();
    for i in 1..=m {
        total *= q.pow(i as u32) - 1u8;
    }
    total
}

fn reduce_exponent(j: i64, modulus: u64) -> u64 {
    j.rem_euclid(modulus as i64) as u64
}

/// A linear character `x -> zeta^(j * log x)` of the multiplicative group,
/// identified by its exponent mod `q - 1`.  Only the sign `chi(-1) = (-1)^j`
/// is ever evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LinearChar {
    exponent: u64,
    modulus: u64,
}

impl LinearChar {
    pub fn new(j: i64, q: u64) -> LinearChar {
        LinearChar { exponent: reduce_exponent(j, q - 1), modulus: q - 1 }
    }

    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    pub fn inverse(&self) -> LinearChar {
        LinearChar { exponent: (self.modulus - self.exponent) % self.modulus, modulus: self.modulus }
    }

    /// `chi(-1)`: +1 for even exponent, -1 for odd (q odd).
    pub fn sign_at_minus_one(&self) -> i8 {
        if self.exponent % 2 == 0 {
            1
        } else {
            -1
        }
    }
}

/// Check that an exponent multiset is closed under negation mod `q - 1`,
/// the reality condition for a principal series.
pub fn is_real_multiset(exponents: &[i64], q: u64) -> bool {
    let mut counts: HashMap<u64, i64> = HashMap::new();
    for &j in exponents {
        *counts.entry(reduce_exponent(j, q - 1)).or_default() += 1;
    }
    counts.iter().all(|(&e, &c)| {
        let neg = (q - 1 - e) % (q - 1);
        counts.get(&neg).copied().unwrap_or(0) == c
    })
}

/// Elementary symmetric polynomial values of the signs `chi_i(-1)`, all
/// degrees at once, via the generating product `prod (1 + sign_i x)`.
fn sign_elementary_symmetric(signs: &[i8]) -> Vec<BigInt> {
    let mut coeffs = vec![BigInt::one()];
    for &s in signs {
        let mut next = coeffs.clone();
        next.push(BigInt::zero());
        for (k, c) in coeffs.iter().enumerate() {
            if s == 1 {
                next[k + 1] += c;
            } else {
                next[k + 1] -= c;
            }
        }
        coeffs = next;
    }
    coeffs
}

/// `chi_pi(h_k)` for the real principal series attached to the exponent
/// multiset: `[k]_q! [n-k]_q!` times the degree-`k` elementary symmetric
/// function of the signs.
pub fn ps_character(n: usize, q: u64, exponents: &[i64], k: usize) -> Result<BigInt, MathError> {
    validate_q(q)?;
    if exponents.len() != n {
        return Err(MathError::Validation(format!(
            "principal series of rank {n} needs {n} exponents, got {}",
            exponents.len()
        )));
    }
    if k > n {
        return Err(MathError::Validation(format!("index k = {k} out of range 0..={n}")));
    }
    if !is_real_multiset(exponents, q) {
        return Err(MathError::NotReal(
            "exponent multiset is not closed under negation mod q - 1".into(),
        ));
    }
    let signs: Vec<i8> = exponents.iter().map(|&j| LinearChar::new(j, q).sign_at_minus_one()).collect();
    let e = sign_elementary_symmetric(&signs);
    Ok(q_bracket_factorial(k, q) * q_bracket_factorial(n - k, q) * &e[k])
}

/// `chi_pi(h_k)` for the Steinberg representation: `q` to the power
/// `k(k-1)/2 + (n-k)(n-k-1)/2`, the p-part of the centralizer
/// `GL_k x GL_{n-k}`.
pub fn steinberg_character(n: usize, q: u64, k: usize) -> Result<BigInt, MathError> {
    validate_q(q)?;
    if k > n {
        return Err(MathError::Validation(format!("index k = {k} out of range 0..={n}")));
    }
    let e = (k * k.saturating_sub(1)) / 2 + ((n - k) * (n - k).saturating_sub(1)) / 2;
    Ok(BigInt::from(q).pow(e as u32))
}

/// `chi_pi(h_k)` for a real cuspidal representation with central sign
/// `theta(-1)`.
///
/// Only `h_0`, `h_1` and the central `h_n` have stated values; anything else
/// with `n >= 3` is `UnsupportedCharacterValue`.
pub fn cuspidal_character(
    n: usize,
    q: u64,
    theta_minus_one: i8,
    k: usize,
) -> Result<BigInt, MathError> {
    validate_q(q)?;
    if !matches!(theta_minus_one, 1 | -1) {
        return Err(MathError::Validation("theta(-1) must be +1 or -1".into()));
    }
    if k > n {
        return Err(MathError::Validation(format!("index k = {k} out of range 0..={n}")));
    }
    let dim = q_power_product(n - 1, q);
    if k == 0 {
        Ok(dim)
    } else if k == n {
        // central element: the central character evaluates to theta(-1)
        Ok(if theta_minus_one == 1 { dim } else { -dim })
    } else if k == 1 {
        Ok(BigInt::zero())
    } else {
        Err(MathError::UnsupportedCharacterValue(format!(
            "cuspidal character at h_{k} is only determined for k in {{0, 1, {n}}} when n >= 3"
        )))
    }
}

/// `chi_pi(h_k) = 2 * (-1)^(j*k)` for the realified determinant twist
/// `(chi^j o det)_R`.
pub fn det_twist_character(q: u64, j: i64, k: usize) -> Result<BigInt, MathError> {
    validate_q(q)?;
    let sign = LinearChar::new(j, q).sign_at_minus_one();
    Ok(if k % 2 == 1 && sign == -1 { BigInt::from(-2) } else { BigInt::from(2) })
}

/// The mod-2 coefficient `(q+1) * j` of the second class restricted to the
/// anisotropic torus for the rank-2 determinant twist.  Always 0 for odd
/// `q`, which exhibits the torus's failure to detect: the class itself is
/// nonzero for odd `j`.
pub fn torus_w2_coefficient(q: u64, j: i64) -> Result<u8, MathError> {
    validate_q(q)?;
    Ok((((q + 1) as i128 * j as i128).rem_euclid(2)) as u8)
}

fn validate_q(q: u64) -> Result<(), MathError> {
    if is_odd_prime_power(q) {
        Ok(())
    } else {
        Err(MathError::Validation(format!("q = {q} is not an odd prime power")))
    }
}

/// A representation described by family and parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RepFamily {
    PrincipalSeries { n: usize, q: u64, exponents: Vec<i64> },
    Cuspidal { n: usize, q: u64, theta_minus_one: i8 },
    Steinberg { n: usize, q: u64 },
    DetTwist { n: usize, q: u64, j: i64 },
    Literal { input: RepInput },
    DirectSum { parts: Vec<RepFamily> },
}

/// Assemble the full character vector of a family into a [`RepInput`].
///
/// Families carry `delta = 0` (the determinant twist realifies to trivial
/// determinant; for the others the paper trail gives no value and the CLI
/// exposes an override).  Direct sums add character vectors and xor deltas.
pub fn to_rep_input(family: &RepFamily) -> Result<RepInput, MathError> {
    match family {
        RepFamily::Literal { input } => Ok(input.clone()),
        RepFamily::PrincipalSeries { n, q, exponents } => {
            let values = (0..=*n)
                .map(|k| ps_character(*n, *q, exponents, k))
                .collect::<Result<Vec<_>, _>>()?;
            RepInput::new(*n, FieldCase::for_q(*q)?, CharacterVector::new(values)?, 0)
        }
        RepFamily::Steinberg { n, q } => {
            let values = (0..=*n)
                .map(|k| steinberg_character(*n, *q, k))
                .collect::<Result<Vec<_>, _>>()?;
            RepInput::new(*n, FieldCase::for_q(*q)?, CharacterVector::new(values)?, 0)
        }
        RepFamily::Cuspidal { n, q, theta_minus_one } => {
            let values = (0..=*n)
                .map(|k| cuspidal_character(*n, *q, *theta_minus_one, k))
                .collect::<Result<Vec<_>, _>>()?;
            RepInput::new(*n, FieldCase::for_q(*q)?, CharacterVector::new(values)?, 0)
        }
        RepFamily::DetTwist { n, q, j } => {
            let values = (0..=*n)
                .map(|k| det_twist_character(*q, *j, k))
                .collect::<Result<Vec<_>, _>>()?;
            RepInput::new(*n, FieldCase::for_q(*q)?, CharacterVector::new(values)?, 0)
        }
        RepFamily::DirectSum { parts } => {
            if parts.is_empty() {
                return Err(MathError::Validation("direct sum needs at least one part".into()));
            }
            let inputs: Vec<RepInput> = parts.iter().map(to_rep_input).collect::<Result<_, _>>()?;
            let first = &inputs[0];
            let mut chars = first.chars.clone();
            let mut delta = first.delta;
            for input in &inputs[1..] {
                if input.n != first.n || input.case != first.case {
                    return Err(MathError::Validation(
                        "direct sum parts must share the same group and rank".into(),
                    ));
                }
                chars = chars.sum(&input.chars)?;
                delta ^= input.delta;
            }
            RepInput::new(first.n, first.case, chars, delta)
        }
    }
}

/// One exponent multiset per achievable composition of a real principal
/// series of rank `n` over `F_q` from the available real building blocks:
/// the two self-inverse characters (trivial and quadratic) and
/// inverse-closed pairs of either sign.
///
/// The character values on the `h_k` depend only on the multiset of signs
/// `chi_i(-1)`, so sweeping these multisets covers every sign pattern a real
/// principal series can realize.
pub fn real_exponent_patterns(n: usize, q: u64) -> Result<Vec<Vec<i64>>, MathError> {
    validate_q(q)?;
    let half = ((q - 1) / 2) as i64;
    // inverse-closed pairs {j, -j} need j not self-inverse
    let odd_pair_ok = q >= 5; // j = 1 is self-inverse only for q = 3
    let even_pair_ok = q >= 7; // j = 2 is self-inverse for q = 5, trivial for q = 3
    let mut out = Vec::new();
    for trivial_singles in 0..=n {
        for sgn_singles in 0..=(n - trivial_singles) {
            let rest = n - trivial_singles - sgn_singles;
            if rest % 2 != 0 {
                continue;
            }
            for odd_pairs in 0..=(rest / 2) {
                let even_pairs = rest / 2 - odd_pairs;
                if (odd_pairs > 0 && !odd_pair_ok) || (even_pairs > 0 && !even_pair_ok) {
                    continue;
                }
                let mut exps = Vec::with_capacity(n);
                exps.extend(std::iter::repeat(0i64).take(trivial_singles));
                exps.extend(std::iter::repeat(half).take(sgn_singles));
                for _ in 0..odd_pairs {
                    exps.push(1);
                    exps.push(-1);
                }
                for _ in 0..even_pairs {
                    exps.push(2);
                    exps.push(-2);
                }
                out.push(exps);
            }
        }
    }
    Ok(out)
}

/// `m_pi` for a cuspidal representation, available for every rank since it
/// needs only `h_0` and `h_1`: `dim / 2 = psi_{n-1}(q) / 2`.
pub fn cuspidal_m_pi(n: usize, q: u64) -> Result<BigInt, MathError> {
    validate_q(q)?;
    let dim = q_power_product(n - 1, q);
    let half = &dim / 2;
    if &half * 2 != dim {
        return Err(MathError::InconsistentParity("cuspidal dimension is odd".into()));
    }
    Ok(half)
}

#[cfg(test)]
mod tests {
    use num_integer::Integer;

    use super::*;

    #[test]
    fn prime_power_detection() {
        for q in [3, 5, 7, 9, 11, 13, 25, 27, 49, 81, 121] {
            assert!(is_odd_prime_power(q), "{q}");
        }
        for q in [1, 2, 4, 8, 15, 21, 33, 35, 45, 63, 100] {
            assert!(!is_odd_prime_power(q), "{q}");
        }
    }

    #[test]
    fn q_series_values() {
        assert_eq!(q_bracket_factorial(1, 7), BigInt::one());
        assert_eq!(q_bracket_factorial(2, 5), BigInt::from(6));
        assert_eq!(q_bracket_factorial(3, 3), BigInt::from(52)); // 4 * 13
        assert_eq!(geometric_sum(0, 11), BigInt::one());
        assert_eq!(geometric_sum(2, 3), BigInt::from(13));
        assert_eq!(geometric_sum(1, 5), BigInt::from(6));
        assert_eq!(q_power_product(0, 9), BigInt::one());
        assert_eq!(q_power_product(1, 5), BigInt::from(4));
        assert_eq!(q_power_product(2, 3), BigInt::from(16)); // 2 * 8
    }

    #[test]
    fn principal_series_characters() {
        // dimension: empty product of signs gives [n]_q!
        for (n, q) in [(2usize, 5u64), (3, 7), (4, 9)] {
            let exps: Vec<i64> = match n {
                2 => vec![1, -1],
                3 => vec![0, 1, -1],
                _ => vec![0, (q as i64 - 1) / 2, 2, -2],
            };
            assert_eq!(ps_character(n, q, &exps, 0).unwrap(), q_bracket_factorial(n, q));
        }
        // n=2, {j, -j}: chi(h_1) = 2 * (-1)^j
        assert_eq!(ps_character(2, 5, &[1, -1], 1).unwrap(), BigInt::from(-2));
        assert_eq!(ps_character(2, 5, &[2, -2], 1).unwrap(), BigInt::from(2));
        // n=3, {0, j, -j}: chi(h_1) = [2]_q! (1 + 2(-1)^j)
        let expected = q_bracket_factorial(2, 7) * (1 + 2 * (-1i64));
        assert_eq!(ps_character(3, 7, &[0, 1, -1], 1).unwrap(), expected);

        assert!(matches!(
            ps_character(2, 7, &[1, 2], 0).unwrap_err(),
            MathError::NotReal(_)
        ));
    }

    #[test]
    fn reality_check_handles_self_inverse_exponents() {
        assert!(is_real_multiset(&[0, 3, -3], 7));
        assert!(is_real_multiset(&[3], 7)); // sgn for q = 7
        assert!(!is_real_multiset(&[1], 7));
        assert!(is_real_multiset(&[1, 5], 7)); // 5 = -1 mod 6
        assert!(!is_real_multiset(&[1, 1, 5], 7));
    }

    #[test]
    fn steinberg_characters() {
        // dim = q^(n(n-1)/2), chi(h_1) = q^((n-1)(n-2)/2)
        assert_eq!(steinberg_character(3, 5, 0).unwrap(), BigInt::from(125));
        assert_eq!(steinberg_character(3, 5, 1).unwrap(), BigInt::from(5));
        assert_eq!(steinberg_character(2, 7, 2).unwrap(), BigInt::from(7));
        assert_eq!(steinberg_character(2, 5, 0).unwrap(), BigInt::from(5));
        assert_eq!(steinberg_character(2, 5, 1).unwrap(), BigInt::from(1));
    }

    #[test]
    fn steinberg_m_pi_factorization() {
        // (dim - chi(h_1))/2 = (q-1)/2 * q^((n-1)(n-2)/2) * T_{n-2}
        for n in 2..=6usize {
            for q in [3u64, 5, 7, 9, 13] {
                let dim = steinberg_character(n, q, 0).unwrap();
                let h1 = steinberg_character(n, q, 1).unwrap();
                let m_pi = (dim - h1) / 2;
                let factored = BigInt::from((q - 1) / 2)
                    * BigInt::from(q).pow(((n - 1) * (n - 2) / 2) as u32)
                    * geometric_sum(n - 2, q);
                assert_eq!(m_pi, factored, "n={n} q={q}");
            }
        }
    }

    #[test]
    fn cuspidal_characters() {
        assert_eq!(cuspidal_character(2, 5, 1, 0).unwrap(), BigInt::from(4));
        assert_eq!(cuspidal_character(4, 7, 1, 1).unwrap(), BigInt::zero());
        assert_eq!(cuspidal_character(2, 5, -1, 2).unwrap(), BigInt::from(-4));
        assert!(matches!(
            cuspidal_character(3, 5, 1, 2).unwrap_err(),
            MathError::UnsupportedCharacterValue(_)
        ));
        // rank 1: h_1 is central
        assert_eq!(cuspidal_character(1, 5, -1, 1).unwrap(), BigInt::from(-1));
    }

    #[test]
    fn cuspidal_m_pi_divisible_by_four_from_rank_three() {
        for n in [3usize, 4] {
            for q in [3u64, 5, 7, 9] {
                let m = cuspidal_m_pi(n, q).unwrap();
                assert!(m.mod_floor(&BigInt::from(4)).is_zero(), "n={n} q={q} m={m}");
            }
        }
    }

    #[test]
    fn det_twist_characters() {
        assert_eq!(det_twist_character(7, 1, 0).unwrap(), BigInt::from(2));
        assert_eq!(det_twist_character(7, 1, 1).unwrap(), BigInt::from(-2));
        assert_eq!(det_twist_character(7, 2, 1).unwrap(), BigInt::from(2));
        assert_eq!(det_twist_character(7, 2, 5).unwrap(), BigInt::from(2));
        assert_eq!(det_twist_character(7, 1, 2).unwrap(), BigInt::from(2));
    }

    #[test]
    fn torus_coefficient_vanishes_for_odd_q() {
        for q in [3u64, 5, 7, 9, 11, 13] {
            for j in [-3i64, 1, 2, 3, 10] {
                assert_eq!(torus_w2_coefficient(q, j).unwrap(), 0);
            }
        }
    }

    #[test]
    fn family_assembly() {
        let st = to_rep_input(&RepFamily::Steinberg { n: 2, q: 5 }).unwrap();
        assert_eq!(
            st.chars.values(),
            &[BigInt::from(5), BigInt::from(1), BigInt::from(5)]
        );
        assert!(matches!(st.case, FieldCase::Fq1 { q: 5 }));

        let tw = to_rep_input(&RepFamily::DetTwist { n: 2, q: 7, j: 1 }).unwrap();
        assert_eq!(
            tw.chars.values(),
            &[BigInt::from(2), BigInt::from(-2), BigInt::from(2)]
        );

        // trivial (+) det twist: entrywise sums
        let one = RepFamily::Literal {
            input: RepInput::new(
                2,
                FieldCase::Fq3 { q: 7 },
                CharacterVector::from_i64(&[1, 1, 1]).unwrap(),
                0,
            )
            .unwrap(),
        };
        let sum = to_rep_input(&RepFamily::DirectSum {
            parts: vec![one, RepFamily::DetTwist { n: 2, q: 7, j: 1 }],
        })
        .unwrap();
        assert_eq!(
            sum.chars.values(),
            &[BigInt::from(3), BigInt::from(-1), BigInt::from(3)]
        );

        let cusp = to_rep_input(&RepFamily::Cuspidal { n: 3, q: 5, theta_minus_one: 1 });
        assert!(matches!(cusp.unwrap_err(), MathError::UnsupportedCharacterValue(_)));
    }
}
