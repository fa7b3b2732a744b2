//! Total Stiefel-Whitney classes of real representations of `GL_n` from
//! character values on diagonal involutions.
//!
//! The calculator works inside the image of the cohomology of `GL_n` in the
//! cohomology of a detecting diagonal subgroup:
//!
//! * over `F_q` with `q = 1 (mod 4)`, the diagonal torus, with ring
//!   `F2[s_1..s_n, t_1..t_n]/(s_i^2)`, and total class
//!   `(1 + delta*b_1) * prod_i prod_{weight-i strings p} (1 + p.t)^(c_i/2)`;
//! * over `F_q` with `q = 3 (mod 4)`, and over the reals and complexes, the
//!   diagonal sign subgroup `C_2^n`, with ring `F2[v_1..v_n]` and total class
//!   `prod_i prod_{weight-i strings l} (1 + l.v)^(c_i)`.
//!
//! Here `c_i` are the supercharacter multiplicities of the restriction,
//! recovered exactly from the character vector by [`superchar::decompose`].
//! Low-degree closed forms (`w1`, `w2`, `w4`) and the spinoriality criterion
//! are provided alongside, with cross-validation helpers tying them to the
//! total class, a perfect-square check for the `q = 1 (mod 4)` restriction,
//! and empirical verification of the stability/detection bounds.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::error::MathError;
use crate::gf2ring::{
    elementary_symmetric, partitions_max_part, st_ring, symmetric_invariant_basis, truncation_hom,
    v_ring, GradedElement, Ring, RingHom,
};
use crate::reps::is_odd_prime_power;
use crate::superchar::{decompose, BinaryString, CharacterVector, MultiplicityVector};

/// Which group the representation lives on; for the finite cases the residue
/// of `q` mod 4 decides the coefficient ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldCase {
    /// `GL_n(F_q)` with `q = 1 (mod 4)`.
    Fq1 { q: u64 },
    /// `GL_n(F_q)` with `q = 3 (mod 4)`.
    Fq3 { q: u64 },
    /// `GL_n(R)`.
    Real,
    /// `GL_n(C)`.
    Complex,
}

impl FieldCase {
    pub fn for_q(q: u64) -> Result<FieldCase, MathError> {
        if !is_odd_prime_power(q) {
            return Err(MathError::Validation(format!("q = {q} is not an odd prime power")));
        }
        Ok(if q % 4 == 1 { FieldCase::Fq1 { q } } else { FieldCase::Fq3 { q } })
    }

    pub fn validate(&self) -> Result<(), MathError> {
        match *self {
            FieldCase::Fq1 { q } => {
                if !is_odd_prime_power(q) || q % 4 != 1 {
                    return Err(MathError::Validation(format!(
                        "q = {q} is not a prime power congruent to 1 mod 4"
                    )));
                }
            }
            FieldCase::Fq3 { q } => {
                if !is_odd_prime_power(q) || q % 4 != 3 {
                    return Err(MathError::Validation(format!(
                        "q = {q} is not a prime power congruent to 3 mod 4"
                    )));
                }
            }
            FieldCase::Real | FieldCase::Complex => {}
        }
        Ok(())
    }

    /// True when the total class lives in the `s/t` ring of the full
    /// diagonal torus rather than in `F2[v]`.
    pub fn uses_st_ring(&self) -> bool {
        matches!(self, FieldCase::Fq1 { .. })
    }

    pub fn finite_q(&self) -> Option<u64> {
        match *self {
            FieldCase::Fq1 { q } | FieldCase::Fq3 { q } => Some(q),
            _ => None,
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            FieldCase::Fq1 { .. } => "gl_fq (q = 1 mod 4)",
            FieldCase::Fq3 { .. } => "gl_fq (q = 3 mod 4)",
            FieldCase::Real => "gl_r",
            FieldCase::Complex => "gl_c",
        }
    }
}

/// A representation given by its character values on the `h_k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepInput {
    pub n: usize,
    pub case: FieldCase,
    pub chars: CharacterVector,
    /// 0 when the determinant character is trivial, 1 otherwise.  Only
    /// consumed in the `q = 1 (mod 4)` case.
    pub delta: u8,
}

impl RepInput {
    pub fn new(
        n: usize,
        case: FieldCase,
        chars: CharacterVector,
        delta: u8,
    ) -> Result<RepInput, MathError> {
        if n == 0 {
            return Err(MathError::Validation("rank must be at least 1".into()));
        }
        if chars.n() != n {
            return Err(MathError::Validation(format!(
                "character vector has {} entries, expected n + 1 = {}",
                chars.values().len(),
                n + 1
            )));
        }
        if delta > 1 {
            return Err(MathError::Validation("delta must be 0 or 1".into()));
        }
        case.validate()?;
        Ok(RepInput { n, case, chars, delta })
    }

    /// `m_pi = (dim - chi(h_1)) / 2`, exactly.
    pub fn m_pi(&self) -> Result<BigInt, MathError> {
        half_difference(self.chars.dim(), self.chars.value(1), "m_pi")
    }

    /// `n_pi = (dim - chi(h_2)) / 2`; defined for rank at least 2.
    pub fn n_pi(&self) -> Result<Option<BigInt>, MathError> {
        if self.n < 2 {
            return Ok(None);
        }
        Ok(Some(half_difference(self.chars.dim(), self.chars.value(2), "n_pi")?))
    }
}

fn half_difference(a: &BigInt, b: &BigInt, what: &str) -> Result<BigInt, MathError> {
    let diff = a - b;
    let (q, r) = diff.div_rem(&BigInt::from(2));
    if !r.is_zero() {
        return Err(MathError::InconsistentParity(format!(
            "{what} is not an integer: dim and the character value have different parity"
        )));
    }
    Ok(q)
}

/// Character invariants driving the low-degree closed forms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacterInvariants {
    pub m_pi: BigInt,
    pub n_pi: Option<BigInt>,
}

/// The full output of a total-class computation.
#[derive(Debug, Clone)]
pub struct SWCReport {
    pub ring: Ring,
    /// The total class, truncated above `cap`.
    pub total: GradedElement,
    /// The nonzero homogeneous components (degree 0 always included).
    pub components: Vec<(u64, GradedElement)>,
    pub invariants: CharacterInvariants,
    pub multiplicities: MultiplicityVector,
    pub spinorial: bool,
    pub cap: u64,
}

fn parity(x: &BigInt) -> u8 {
    if x.mod_floor(&BigInt::from(2)).is_zero() {
        0
    } else {
        1
    }
}

fn mod4(x: &BigInt) -> u8 {
    x.mod_floor(&BigInt::from(4)).to_u8().expect("residue fits in u8")
}

/// Parity of `binomial(x, 2)`: odd exactly when `x = 2 or 3 (mod 4)`.
fn binom2_is_odd(x: &BigInt) -> bool {
    matches!(mod4(x), 2 | 3)
}

fn exact_half(x: &BigInt, what: &str) -> Result<BigInt, MathError> {
    let (q, r) = x.div_rem(&BigInt::from(2));
    if !r.is_zero() {
        return Err(MathError::InconsistentParity(format!("{what} is odd")));
    }
    Ok(q)
}

/// Keep `elem` when `coefficient` is odd, zero otherwise.
fn scale_parity(elem: GradedElement, coefficient: &BigInt) -> GradedElement {
    if parity(coefficient) == 1 {
        elem
    } else {
        elem.ring().zero()
    }
}

fn canonical_indices(ring: &Ring, nilpotent: bool) -> Vec<usize> {
    let nil = ring.nilpotent_count();
    if nilpotent {
        (0..nil).collect()
    } else {
        (nil..ring.generators().len()).collect()
    }
}

/// `b_1 = s_1 + ... + s_n` in an s/t ring.
pub fn b1(ring: &Ring) -> Result<GradedElement, MathError> {
    Ok(elementary_symmetric(ring, &canonical_indices(ring, true), 1)?)
}

/// `a_2 = t_1 + ... + t_n` in an s/t ring (the first symmetric generator).
pub fn a2(ring: &Ring) -> Result<GradedElement, MathError> {
    Ok(elementary_symmetric(ring, &canonical_indices(ring, false), 1)?)
}

/// `a_{2l}`: the degree-`2l` elementary symmetric polynomial in the `t_i`.
pub fn a_even(ring: &Ring, l: usize) -> Result<GradedElement, MathError> {
    Ok(elementary_symmetric(ring, &canonical_indices(ring, false), l)?)
}

/// `b_{2k-1}`: the odd symmetric generator
/// `sum over k-subsets S, j in S of s_j * prod of t_i for i in S minus j`.
pub fn b_odd(ring: &Ring, k: usize) -> Result<GradedElement, MathError> {
    let n = ring.nilpotent_count();
    if ring.free_count() != n {
        return Err(MathError::Validation("b generators need an s/t ring".into()));
    }
    if k == 0 || k > n {
        return Ok(ring.zero());
    }
    let mut total = ring.zero();
    // iterate over k-subsets of 1..=n as bitmasks
    let mut subset: Vec<usize> = (0..k).collect();
    loop {
        for &j in &subset {
            let mut m = ring.one();
            m = m.mul(&ring.generator(j)?).map_err(MathError::from)?;
            for &i in &subset {
                if i != j {
                    m = m.mul(&ring.generator(n + i)?).map_err(MathError::from)?;
                }
            }
            total = total.add(&m).map_err(MathError::from)?;
        }
        // next combination
        let mut pos = k;
        loop {
            if pos == 0 {
                return Ok(total);
            }
            pos -= 1;
            if subset[pos] != n - k + pos {
                subset[pos] += 1;
                for p in pos + 1..k {
                    subset[p] = subset[p - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Sum of squares of the free generators.
fn sum_of_squares(ring: &Ring) -> GradedElement {
    let nil = ring.nilpotent_count();
    let mut total = ring.zero();
    for slot in 0..ring.free_count() {
        let sq = ring.generator(nil + slot).expect("index in range").square();
        total = total.add(&sq).expect("same ring");
    }
    total
}

/// The linear form `sum of free generators picked by the string`.
fn string_form(ring: &Ring, l: &BinaryString) -> GradedElement {
    let nil = ring.nilpotent_count();
    let mut total = ring.zero();
    for i in 0..l.n() {
        if l.bit(i) {
            let gen = ring.generator(nil + i).expect("index in range");
            total = total.add(&gen).expect("same ring");
        }
    }
    total
}

/// `prod over strings l of (1 + l.gens)^(exponent of weight of l)`,
/// truncated at the ring cap.  Factor order is by ascending bit pattern,
/// grouped by weight.
fn weight_product(ring: &Ring, n: usize, exponents: &[BigInt]) -> Result<GradedElement, MathError> {
    let one = ring.one();
    let mut total = one.clone();
    for weight in 1..=n {
        let e = &exponents[weight];
        if e.is_zero() {
            continue;
        }
        for l in BinaryString::of_weight(n, weight) {
            let factor = one.add(&string_form(ring, &l)).map_err(MathError::from)?;
            total = total.mul(&factor.pow(e).map_err(MathError::from)?).map_err(MathError::from)?;
        }
    }
    Ok(total)
}

/// Halved multiplicities for the `q = 1 (mod 4)` product; fails
/// `OddMultiplicity` when some `c_i` with `i >= 1` is odd.
fn halved_multiplicities(mult: &MultiplicityVector) -> Result<Vec<BigInt>, MathError> {
    let mut halves = Vec::with_capacity(mult.values().len());
    halves.push(mult.value(0).clone()); // c_0 never enters the product
    for (i, c) in mult.values().iter().enumerate().skip(1) {
        let (q, r) = c.div_rem(&BigInt::from(2));
        if !r.is_zero() {
            return Err(MathError::OddMultiplicity(format!(
                "c_{i} = {c} is odd; for q = 1 (mod 4) every multiplicity above c_0 must be even"
            )));
        }
        halves.push(q);
    }
    Ok(halves)
}

/// Compute the total Stiefel-Whitney class of `input`, truncated at `cap`.
pub fn total_swc(input: &RepInput, cap: u64, allow_virtual: bool) -> Result<SWCReport, MathError> {
    let mult = decompose(&input.chars, allow_virtual)?;
    let n = input.n;
    let (ring, total) = if input.case.uses_st_ring() {
        let ring = st_ring(n, Some(cap)).map_err(MathError::from)?;
        let halves = halved_multiplicities(&mult)?;
        let mut total = weight_product(&ring, n, &halves)?;
        if input.delta == 1 {
            let delta_factor = ring.one().add(&b1(&ring)?).map_err(MathError::from)?;
            total = total.mul(&delta_factor).map_err(MathError::from)?;
        }
        (ring, total)
    } else {
        let ring = v_ring(n, Some(cap)).map_err(MathError::from)?;
        let total = weight_product(&ring, n, mult.values())?;
        (ring, total)
    };
    let components = (0..=cap)
        .filter_map(|d| {
            let comp = total.graded_component(d);
            (d == 0 || !comp.is_zero()).then_some((d, comp))
        })
        .collect();
    let m_pi = input.m_pi()?;
    let n_pi = input.n_pi()?;
    let spinorial = spinorial_from_m(&input.case, &m_pi);
    Ok(SWCReport {
        ring,
        total,
        components,
        invariants: CharacterInvariants { m_pi, n_pi },
        multiplicities: mult,
        spinorial,
        cap,
    })
}

/// First Stiefel-Whitney class: `delta * b_1` for `q = 1 (mod 4)`, otherwise
/// `(m_pi mod 2) * (v_1 + ... + v_n)`.
pub fn w1(input: &RepInput, ring: &Ring) -> Result<GradedElement, MathError> {
    if input.case.uses_st_ring() {
        let b = b1(ring)?;
        Ok(if input.delta == 1 { b } else { ring.zero() })
    } else {
        let e1 = elementary_symmetric(ring, &canonical_indices(ring, false), 1)?;
        Ok(scale_parity(e1, &input.m_pi()?))
    }
}

/// Second Stiefel-Whitney class closed form:
/// `(m_pi / 2) * a_2` for `q = 1 (mod 4)` (requires `m_pi` even),
/// `binomial(m_pi, 2) * sum v_i^2` otherwise.
pub fn w2(input: &RepInput, ring: &Ring) -> Result<GradedElement, MathError> {
    let m = input.m_pi()?;
    if input.case.uses_st_ring() {
        let half = exact_half(&m, "m_pi")?;
        Ok(scale_parity(a2(ring)?, &half))
    } else {
        let sq = sum_of_squares(ring);
        Ok(if binom2_is_odd(&m) { sq } else { ring.zero() })
    }
}

/// The two parity coefficients of the `w4` closed form for `q = 1 (mod 4)`:
/// `binomial(m_pi/2, 2) mod 2` and `(n_pi/4) mod 2`.
///
/// Both `m_pi / 2` and `n_pi / 4` must be integers (`InconsistentParity`
/// otherwise).  For rank 1 the pair coefficient is reported as 0.
pub fn w4_parity_pair(input: &RepInput) -> Result<(u8, u8), MathError> {
    if !input.case.uses_st_ring() {
        return Err(MathError::Validation(
            "the w4 closed form is stated for q = 1 (mod 4) only".into(),
        ));
    }
    let m_half = exact_half(&input.m_pi()?, "m_pi")?;
    let square_coeff = u8::from(binom2_is_odd(&m_half));
    let pair_coeff = match input.n_pi()? {
        Some(n_pi) => parity(&exact_half(&exact_half(&n_pi, "n_pi")?, "n_pi/2")?),
        None => 0,
    };
    Ok((square_coeff, pair_coeff))
}

/// Fourth Stiefel-Whitney class for `q = 1 (mod 4)`:
/// `binomial(m_pi/2, 2) * sum t_i^2 + (n_pi/4) * sum_{i<j} t_i t_j`.
///
/// Both `m_pi / 2` and `n_pi / 4` must be integers; the coefficients are then
/// reduced mod 2.
pub fn w4_q1(input: &RepInput, ring: &Ring) -> Result<GradedElement, MathError> {
    let (square_coeff, pair_coeff) = w4_parity_pair(input)?;
    let mut out = if square_coeff == 1 { sum_of_squares(ring) } else { ring.zero() };
    if pair_coeff == 1 {
        out = out.add(&a_even(ring, 2)?).map_err(MathError::from)?;
    }
    Ok(out)
}

/// Spinoriality from the lifting criterion: `m_pi = 0 (mod 4)` when
/// `q = 1 (mod 4)`; `m_pi = 0 or 3 (mod 4)` when `q = 3 (mod 4)`.
///
/// The real and complex groups share the total-class formula of the
/// `q = 3 (mod 4)` case, and with it the congruence.
pub fn spinorial_from_m(case: &FieldCase, m_pi: &BigInt) -> bool {
    match case {
        FieldCase::Fq1 { .. } => mod4(m_pi) == 0,
        _ => matches!(mod4(m_pi), 0 | 3),
    }
}

/// Spinoriality verdict for an input (equivalent to `w2 + w1^2 = 0`).
pub fn is_spinorial(input: &RepInput) -> Result<bool, MathError> {
    Ok(spinorial_from_m(&input.case, &input.m_pi()?))
}

/// The restriction homomorphism from the torus ring to the sign ring:
/// `t_i -> v_i^2`, `s_i -> 0`.
pub fn c2n_restriction(st: &Ring) -> Result<RingHom, MathError> {
    let n = st.nilpotent_count();
    if st.free_count() != n || n == 0 {
        return Err(MathError::Validation("restriction needs an s/t ring".into()));
    }
    let target = v_ring(n, st.degree_cap()).map_err(MathError::from)?;
    let mut images = vec![target.zero(); n];
    for i in 0..n {
        images.push(target.generator(i).map_err(MathError::from)?.square());
    }
    Ok(RingHom::new(st.clone(), target, images).map_err(MathError::from)?)
}

/// Apply the `t -> v^2, s -> 0` restriction to an element of an s/t ring.
pub fn res_to_c2n(a: &GradedElement) -> Result<GradedElement, MathError> {
    let hom = c2n_restriction(a.ring())?;
    Ok(hom.apply(a).map_err(MathError::from)?)
}

/// Check that the restriction of the total class to the sign subgroup is a
/// perfect square whose root is the half-exponent product (the unique
/// factorization argument behind the halved formula).
///
/// `delta` is forced to 0; the `s`-terms die under the restriction anyway.
pub fn verify_square_property(
    input: &RepInput,
    cap: u64,
    allow_virtual: bool,
) -> Result<bool, MathError> {
    if !input.case.uses_st_ring() {
        return Err(MathError::Validation(
            "the square property concerns the q = 1 (mod 4) case".into(),
        ));
    }
    let mut forced = input.clone();
    forced.delta = 0;
    let report = total_swc(&forced, cap, allow_virtual)?;
    let restricted = res_to_c2n(&report.total)?;
    let root = restricted.sqrt().map_err(MathError::from)?;
    if root.square() != restricted {
        return Ok(false);
    }
    // the square root carries degrees up to cap/2, so compare against the
    // half-exponent product truncated to the same range
    let halves = halved_multiplicities(&report.multiplicities)?;
    let vring = root.ring().clone();
    let expected = weight_product(&vring, input.n, &halves)?.truncated(cap / 2);
    Ok(root == expected)
}

/// Cross-validation of the closed forms against the total class.
#[derive(Debug, Clone)]
pub struct ClosedFormCheck {
    /// degree-1 component equals `w1`.
    pub w1_matches: bool,
    /// degree-2 component equals `w2` after restricting both sides to the
    /// variable subset used in the proof of the closed form.
    pub w2_restricted_matches: bool,
    /// degree-2 component equals `w2` at full rank (the symmetric reading).
    pub w2_symmetric_matches: bool,
    /// same pair for `w4`, `q = 1 (mod 4)` only.
    pub w4_restricted_matches: Option<bool>,
    pub w4_symmetric_matches: Option<bool>,
}

impl ClosedFormCheck {
    /// The comparisons the closed-form theorems actually assert.
    pub fn restricted_ok(&self) -> bool {
        self.w1_matches && self.w2_restricted_matches && self.w4_restricted_matches.unwrap_or(true)
    }

    /// The stronger symmetric readings as well.
    pub fn all_ok(&self) -> bool {
        self.restricted_ok()
            && self.w2_symmetric_matches
            && self.w4_symmetric_matches.unwrap_or(true)
    }

    pub fn ensure(&self) -> Result<(), MathError> {
        if self.restricted_ok() {
            Ok(())
        } else {
            Err(MathError::Validation(format!(
                "closed form mismatch: w1 {} w2-restricted {} w4-restricted {:?}",
                self.w1_matches, self.w2_restricted_matches, self.w4_restricted_matches
            )))
        }
    }
}

/// Compare the graded components of the total class in degrees 1, 2, 4 with
/// the closed forms, both after the proof's variable restrictions and as
/// full-rank symmetric expressions.
pub fn check_closed_forms(
    input: &RepInput,
    cap: u64,
    allow_virtual: bool,
) -> Result<ClosedFormCheck, MathError> {
    if cap < 4 {
        return Err(MathError::Validation("closed-form check needs cap >= 4".into()));
    }
    let report = total_swc(input, cap, allow_virtual)?;
    let ring = &report.ring;
    let n = input.n;

    let w1e = w1(input, ring)?;
    let w1_matches = report.total.graded_component(1) == w1e;

    let w2e = w2(input, ring)?;
    let g2 = report.total.graded_component(2);
    let w2_symmetric_matches = g2 == w2e;

    let (w2_restricted_matches, w4_restricted_matches, w4_symmetric_matches) =
        if input.case.uses_st_ring() {
            // w2 is proved through the rank-1 subtorus, w4 through rank 2
            let to1 = truncation_hom(ring, &st_ring(1, Some(cap)).map_err(MathError::from)?)
                .map_err(MathError::from)?;
            let w2r = to1.apply(&g2).map_err(MathError::from)? == to1.apply(&w2e).map_err(MathError::from)?;

            let w4e = w4_q1(input, ring)?;
            let g4 = report.total.graded_component(4);
            let w4s = g4 == w4e;
            let k = n.min(2);
            let to2 = truncation_hom(ring, &st_ring(k, Some(cap)).map_err(MathError::from)?)
                .map_err(MathError::from)?;
            let w4r = to2.apply(&g4).map_err(MathError::from)? == to2.apply(&w4e).map_err(MathError::from)?;
            (w2r, Some(w4r), Some(w4s))
        } else {
            let k = n.min(2);
            let to2 = truncation_hom(ring, &v_ring(k, Some(cap)).map_err(MathError::from)?)
                .map_err(MathError::from)?;
            let w2r = to2.apply(&g2).map_err(MathError::from)? == to2.apply(&w2e).map_err(MathError::from)?;
            (w2r, None, None)
        };

    Ok(ClosedFormCheck {
        w1_matches,
        w2_restricted_matches,
        w2_symmetric_matches,
        w4_restricted_matches,
        w4_symmetric_matches,
    })
}

/// Which detection statement to verify.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DetectionCase {
    /// `q = 1 (mod 4)`: restriction from rank `m` to rank `n - 1` is
    /// injective below degree `2n - 1`, checked on the symmetric `a/b`
    /// presentation inside the torus ring.
    Q1,
    /// `q = 3 (mod 4)`: the symmetric-invariant restriction is injective
    /// below degree `n`.
    Q3,
}

#[derive(Debug, Clone)]
pub struct DegreeDetection {
    pub degree: u64,
    pub basis_size: usize,
    pub kernel_dim: usize,
}

#[derive(Debug, Clone)]
pub struct DetectionReport {
    pub case: DetectionCase,
    pub m: usize,
    pub n: usize,
    /// Injectivity is asserted strictly below this degree.
    pub injectivity_bound: u64,
    pub degrees: Vec<DegreeDetection>,
}

impl DetectionReport {
    pub fn injective_below_bound(&self) -> bool {
        self.degrees
            .iter()
            .filter(|d| d.degree < self.injectivity_bound)
            .all(|d| d.kernel_dim == 0)
    }
}

/// The degree-`d` monomial basis of the `a/b` presentation expanded inside
/// the rank-`m` torus ring: products of `a_{2l}` powers and distinct
/// `b_{2k-1}`'s of total degree `d`.
pub fn gl_presentation_basis(ring: &Ring, d: u64) -> Result<Vec<GradedElement>, MathError> {
    let m = ring.nilpotent_count();
    let mut out = Vec::new();
    for bmask in 0u64..(1 << m) {
        let b_degree: u64 = (1..=m).filter(|k| bmask >> (k - 1) & 1 == 1).map(|k| 2 * k as u64 - 1).sum();
        if b_degree > d || (d - b_degree) % 2 != 0 {
            continue;
        }
        let mut b_part = ring.one();
        for k in 1..=m {
            if bmask >> (k - 1) & 1 == 1 {
                b_part = b_part.mul(&b_odd(ring, k)?).map_err(MathError::from)?;
            }
        }
        for partition in partitions_max_part((d - b_degree) / 2, m as u64) {
            let mut elem = b_part.clone();
            for part in partition {
                elem = elem.mul(&a_even(ring, part as usize)?).map_err(MathError::from)?;
            }
            out.push(elem);
        }
    }
    Ok(out)
}

/// Empirically verify a detection bound: build the restriction map from rank
/// `m` to rank `n - 1` and report the kernel dimension of each graded piece
/// up to `max_degree`.
pub fn verify_detection(
    case: DetectionCase,
    m: usize,
    n: usize,
    max_degree: u64,
) -> Result<DetectionReport, MathError> {
    if n < 2 || m < n {
        return Err(MathError::Validation(format!(
            "detection needs m >= n >= 2, got m = {m}, n = {n}"
        )));
    }
    if m > 12 {
        return Err(MathError::Validation("detection rank m too large to enumerate".into()));
    }
    let (hom, bound) = match case {
        DetectionCase::Q1 => {
            let src = st_ring(m, Some(max_degree)).map_err(MathError::from)?;
            let tgt = st_ring(n - 1, Some(max_degree)).map_err(MathError::from)?;
            (truncation_hom(&src, &tgt).map_err(MathError::from)?, 2 * n as u64 - 1)
        }
        DetectionCase::Q3 => {
            let src = v_ring(m, Some(max_degree)).map_err(MathError::from)?;
            let tgt = v_ring(n - 1, Some(max_degree)).map_err(MathError::from)?;
            (truncation_hom(&src, &tgt).map_err(MathError::from)?, n as u64)
        }
    };
    let mut degrees = Vec::new();
    for d in 0..=max_degree {
        let basis = match case {
            DetectionCase::Q1 => gl_presentation_basis(hom.source(), d)?,
            DetectionCase::Q3 => symmetric_invariant_basis(hom.source(), d).map_err(MathError::from)?,
        };
        let kernel_dim = hom.kernel_dimension_of_span(&basis).map_err(MathError::from)?;
        degrees.push(DegreeDetection { degree: d, basis_size: basis.len(), kernel_dim });
    }
    Ok(DetectionReport { case, m, n, injectivity_bound: bound, degrees })
}

#[cfg(test)]
mod tests;
