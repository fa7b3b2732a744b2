//! Supercharacter theory of the elementary abelian 2-group `C_2^n` under the
//! coordinate-permuting symmetric group action.
//!
//! Binary strings of length `n` index both the group elements and the sign
//! characters `sgn_l`; the orbits under `S_n` are the weight classes.  The
//! supercharacter sigma_i is the sum of the weight-`i` sign characters, and
//! the table `M = (chi_{sigma_j}(h_i))` satisfies the exact involution
//! identity `M^2 = 2^n I`, which makes inverting character vectors into
//! multiplicity vectors a single integral matrix product.
//!
//! All arithmetic is exact over arbitrary-precision integers.

use num_bigint::BigInt;
use num_integer::{binomial, Integer};
use num_traits::{One, Signed, Zero};

use crate::error::MathError;

/// A binary string of length `n`, the index set for superclasses and sign
/// characters alike.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BinaryString {
    n: usize,
    bits: u64,
}

impl BinaryString {
    pub fn new(n: usize, bits: u64) -> Result<Self, MathError> {
        if n == 0 || n > 63 {
            return Err(MathError::Validation(format!("string length {n} out of range 1..=63")));
        }
        if bits >> n != 0 {
            return Err(MathError::Validation(format!("bits {bits:#b} exceed length {n}")));
        }
        Ok(BinaryString { n, bits })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn bit(&self, i: usize) -> bool {
        self.bits >> i & 1 == 1
    }

    /// The weight: number of set coordinates.
    pub fn weight(&self) -> usize {
        self.bits.count_ones() as usize
    }

    /// Value of the sign character indexed by `self` at the group element
    /// `g`: `(-1)^(popcount of the overlap)`.
    pub fn sign_at(&self, g: &BinaryString) -> i8 {
        if (self.bits & g.bits).count_ones() % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// All strings of length `n` in ascending bit-pattern order.
    pub fn all(n: usize) -> impl Iterator<Item = BinaryString> {
        (0..(1u64 << n)).map(move |bits| BinaryString { n, bits })
    }

    /// All strings of length `n` and weight `w`, ascending bit patterns.
    pub fn of_weight(n: usize, w: usize) -> impl Iterator<Item = BinaryString> {
        Self::all(n).filter(move |s| s.weight() == w)
    }
}

/// The character values `chi_pi(h_0), ..., chi_pi(h_n)` of a representation
/// on the diagonal involutions `h_k` (k entries equal to -1).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacterVector {
    values: Vec<BigInt>,
}

impl CharacterVector {
    pub fn new(values: Vec<BigInt>) -> Result<Self, MathError> {
        if values.len() < 2 {
            return Err(MathError::Validation(
                "character vector needs at least entries for h_0 and h_1".into(),
            ));
        }
        Ok(CharacterVector { values })
    }

    pub fn from_i64(values: &[i64]) -> Result<Self, MathError> {
        Self::new(values.iter().map(|&v| BigInt::from(v)).collect())
    }

    /// Rank `n`: there are `n + 1` stored values.
    pub fn n(&self) -> usize {
        self.values.len() - 1
    }

    pub fn values(&self) -> &[BigInt] {
        &self.values
    }

    pub fn value(&self, k: usize) -> &BigInt {
        &self.values[k]
    }

    pub fn dim(&self) -> &BigInt {
        &self.values[0]
    }

    /// Entrywise sum (character of a direct sum).
    pub fn sum(&self, other: &CharacterVector) -> Result<CharacterVector, MathError> {
        if self.n() != other.n() {
            return Err(MathError::Validation("direct sum of mismatched ranks".into()));
        }
        Ok(CharacterVector {
            values: self.values.iter().zip(&other.values).map(|(a, b)| a + b).collect(),
        })
    }
}

/// Supercharacter multiplicities `c_0, ..., c_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiplicityVector {
    c: Vec<BigInt>,
    virtual_rep: bool,
}

impl MultiplicityVector {
    pub fn new(c: Vec<BigInt>) -> Result<Self, MathError> {
        if c.len() < 2 {
            return Err(MathError::Validation("multiplicity vector needs rank >= 1".into()));
        }
        let virtual_rep = c.iter().any(|x| x.is_negative());
        Ok(MultiplicityVector { c, virtual_rep })
    }

    pub fn n(&self) -> usize {
        self.c.len() - 1
    }

    pub fn values(&self) -> &[BigInt] {
        &self.c
    }

    pub fn value(&self, i: usize) -> &BigInt {
        &self.c[i]
    }

    /// True when some multiplicity is negative (a virtual representation).
    pub fn is_virtual(&self) -> bool {
        self.virtual_rep
    }

    /// The character vector of `sum c_i sigma_i`, i.e. `M * c`.
    pub fn character_vector(&self) -> CharacterVector {
        let m = build_matrix(self.n());
        CharacterVector { values: m.apply(&self.c) }
    }
}

/// `chi_{sigma_i}(h_k)`: the coefficient of `y^i` in `(1-y)^k (1+y)^(n-k)`,
/// computed as the signed binomial convolution
/// `sum_l (-1)^l C(k,l) C(n-k, i-l)`.
pub fn superchar_value(n: usize, i: usize, k: usize) -> Result<BigInt, MathError> {
    if i > n || k > n {
        return Err(MathError::Validation(format!(
            "superchar index out of range: n={n}, i={i}, k={k}"
        )));
    }
    let mut total = BigInt::zero();
    for l in 0..=k.min(i) {
        if i - l > n - k {
            continue;
        }
        let term = binomial(BigInt::from(k), BigInt::from(l))
            * binomial(BigInt::from(n - k), BigInt::from(i - l));
        if l % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    Ok(total)
}

/// The supercharacter table of `C_2^n`: entry `(i, j)` is
/// `chi_{sigma_j}(h_i)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SupercharMatrix {
    n: usize,
    entries: Vec<Vec<BigInt>>,
}

/// Build the full `(n+1) x (n+1)` supercharacter table.
pub fn build_matrix(n: usize) -> SupercharMatrix {
    assert!(n >= 1, "rank must be at least 1");
    let entries = (0..=n)
        .map(|i| {
            (0..=n)
                .map(|j| superchar_value(n, j, i).expect("indices in range"))
                .collect()
        })
        .collect();
    SupercharMatrix { n, entries }
}

impl SupercharMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entry(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i][j]
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.entries[i]
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.n + 1, "vector length mismatch");
        self.entries
            .iter()
            .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    /// Exact check of the involution identity `M * M = 2^n * I`.
    pub fn verify_involution(&self) -> bool {
        let scale = BigInt::one() << self.n;
        for i in 0..=self.n {
            for j in 0..=self.n {
                let mut acc = BigInt::zero();
                for k in 0..=self.n {
                    acc += &self.entries[i][k] * &self.entries[k][j];
                }
                let expected = if i == j { scale.clone() } else { BigInt::zero() };
                if acc != expected {
                    return false;
                }
            }
        }
        true
    }
}

/// `M^2 = 2^n I` for the rank-`n` table.
pub fn verify_involution(n: usize) -> bool {
    build_matrix(n).verify_involution()
}

/// Invert a character vector into supercharacter multiplicities:
/// `c = (1/2^n) M a`, exactly.
///
/// Fails `NonIntegral` when `2^n` does not divide the product (the input is
/// not a character vector of `C_2^n`), and `NegativeMultiplicity` when a
/// negative multiplicity appears without `allow_virtual`.
pub fn decompose(
    a: &CharacterVector,
    allow_virtual: bool,
) -> Result<MultiplicityVector, MathError> {
    let n = a.n();
    let m = build_matrix(n);
    let raw = m.apply(a.values());
    let mut c = Vec::with_capacity(n + 1);
    for (k, x) in raw.into_iter().enumerate() {
        let (q, r) = x.div_rem(&(BigInt::one() << n));
        if !r.is_zero() {
            return Err(MathError::NonIntegral(format!(
                "2^{n} does not divide entry {k} of M*a; not a character vector of C_2^{n}"
            )));
        }
        c.push(q);
    }
    let mv = MultiplicityVector::new(c)?;
    if mv.is_virtual() && !allow_virtual {
        return Err(MathError::NegativeMultiplicity(
            "decomposition has a negative multiplicity; pass allow_virtual to accept".into(),
        ));
    }
    Ok(mv)
}

/// Independent inner-product oracle for `decompose`: the multiplicity of each
/// sign character `sgn_l` in a class function on `C_2^n`, by direct summation
/// over all `2^n` group elements.
///
/// Returns one multiplicity per string, indexed by bit pattern.  For an
/// `S_n`-invariant input the value at `l` depends only on the weight of `l`.
pub fn brute_force_multiplicities(
    n: usize,
    char_fn: impl Fn(&BinaryString) -> BigInt,
) -> Result<Vec<BigInt>, MathError> {
    if n == 0 || n > 24 {
        return Err(MathError::Validation(format!("rank {n} out of range 1..=24")));
    }
    let values: Vec<BigInt> = BinaryString::all(n).map(|g| char_fn(&g)).collect();
    let mut out = Vec::with_capacity(1 << n);
    for l in BinaryString::all(n) {
        let mut acc = BigInt::zero();
        for g in BinaryString::all(n) {
            let v = &values[g.bits() as usize];
            if l.sign_at(&g) == 1 {
                acc += v;
            } else {
                acc -= v;
            }
        }
        let (q, r) = acc.div_rem(&(BigInt::one() << n));
        if !r.is_zero() {
            return Err(MathError::NonIntegral(format!(
                "inner product with sgn_{:b} is not integral",
                l.bits()
            )));
        }
        out.push(q);
    }
    Ok(out)
}
