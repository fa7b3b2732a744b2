//! Graded-commutative polynomial algebras over GF(2).
//!
//! A ring here is `F2[x_1, ..., x_k]` with an optional square-zero relation
//! per generator and a cohomological degree per generator, truncated above an
//! optional degree cap.  This is the common home of the three coefficient
//! rings the calculator works in:
//!
//! * `F2[s_1..s_n, t_1..t_n] / (s_i^2)` with `deg s = 1`, `deg t = 2`,
//! * `F2[v_1..v_n]` with `deg v = 1`,
//! * truncated images of either under variable-killing homomorphisms.
//!
//! Elements are kept canonical: a sorted, duplicate-free set of monomials,
//! each with coefficient 1 (absence means 0), every monomial within the cap.
//! All operations are pure; values are freely shareable across threads.
//!
//! Exponents can be astronomically large multiplicities, so `pow` works on
//! `BigInt` exponents by binary exponentiation.  Squaring is the Frobenius:
//! cross terms vanish in characteristic 2 and any monomial containing a
//! square-zero generator dies, which makes even gigantic exponents cheap once
//! a degree cap is set.

mod f2linalg;
mod hom;
mod symmetric;
mod text;

pub use hom::{truncation_hom, RingHom};
pub use symmetric::{elementary_symmetric, partitions_max_part, symmetric_invariant_basis};
pub use text::parse_element;

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::{BigInt, BigUint, Sign};

use thiserror::Error;

/// Exponents above this refuse to run without a degree cap.
pub const UNCAPPED_POW_LIMIT: u64 = 64;

/// Errors raised by the ring layer.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum RingError {
    #[error("signature mismatch: {0}")]
    SignatureMismatch(String),
    #[error("invalid ring signature: {0}")]
    InvalidSignature(String),
    #[error("degree cap required: {0}")]
    CapRequired(String),
    #[error("element has no constant term 1, cannot invert")]
    NotInvertible,
    #[error("{0}")]
    NotAPerfectSquare(String),
    #[error("square root requires a ring without square-zero generators")]
    SqrtWithNilpotents,
    #[error("homomorphism image not homogeneous: {0}")]
    NonHomogeneousImage(String),
    #[error("image of square-zero generator does not square to zero: {0}")]
    NilpotentImageNotSquareZero(String),
    #[error("monomial basis too large: {0}")]
    BasisTooLarge(String),
    #[error("cannot parse element: {0}")]
    Parse(String),
}

/// One generator of a graded ring.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GeneratorSpec {
    pub name: String,
    pub degree: u64,
    /// True when the generator squares to zero.
    pub nilpotent: bool,
}

impl GeneratorSpec {
    pub fn free(name: impl Into<String>, degree: u64) -> Self {
        GeneratorSpec { name: name.into(), degree, nilpotent: false }
    }

    pub fn nilpotent(name: impl Into<String>) -> Self {
        GeneratorSpec { name: name.into(), degree: 1, nilpotent: true }
    }
}

#[derive(Debug)]
struct Signature {
    generators: Vec<GeneratorSpec>,
    degree_cap: Option<u64>,
    /// generators[0..nil_count] are the square-zero ones.
    nil_count: usize,
}

/// A graded-commutative GF(2) algebra: the shared signature of its elements.
///
/// Cheap to clone.  Two rings compare equal when their generator lists and
/// degree caps agree, so independently constructed copies are compatible.
#[derive(Clone)]
pub struct Ring {
    sig: Arc<Signature>,
}

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.sig, &other.sig)
            || (self.sig.generators == other.sig.generators
                && self.sig.degree_cap == other.sig.degree_cap)
    }
}

impl Eq for Ring {}

impl fmt::Debug for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ring[")?;
        for (i, g) in self.sig.generators.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}:{}{}", g.name, g.degree, if g.nilpotent { "~" } else { "" })?;
        }
        match self.sig.degree_cap {
            Some(c) => write!(f, " | cap {c}]"),
            None => write!(f, "]"),
        }
    }
}

fn valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic())
        && chars.all(|c| c.is_ascii_alphanumeric())
}

impl Ring {
    /// Build a ring from an ordered generator list.
    ///
    /// Square-zero generators must have degree 1 and precede the free ones;
    /// the canonical generator order is the list order and every comparison
    /// and printed form respects it.
    pub fn new(generators: Vec<GeneratorSpec>, degree_cap: Option<u64>) -> Result<Ring, RingError> {
        let nil_count = generators.iter().take_while(|g| g.nilpotent).count();
        if generators[nil_count..].iter().any(|g| g.nilpotent) {
            return Err(RingError::InvalidSignature(
                "square-zero generators must precede free generators".into(),
            ));
        }
        if nil_count > 64 {
            return Err(RingError::InvalidSignature("more than 64 square-zero generators".into()));
        }
        for g in &generators {
            if !valid_name(&g.name) {
                return Err(RingError::InvalidSignature(format!("bad generator name {:?}", g.name)));
            }
            if g.degree == 0 {
                return Err(RingError::InvalidSignature(format!("generator {} has degree 0", g.name)));
            }
            if g.nilpotent && g.degree != 1 {
                return Err(RingError::InvalidSignature(format!(
                    "square-zero generator {} must have degree 1",
                    g.name
                )));
            }
        }
        for (i, g) in generators.iter().enumerate() {
            if generators[..i].iter().any(|h| h.name == g.name) {
                return Err(RingError::InvalidSignature(format!("duplicate generator name {}", g.name)));
            }
        }
        Ok(Ring { sig: Arc::new(Signature { generators, degree_cap, nil_count }) })
    }

    pub fn generators(&self) -> &[GeneratorSpec] {
        &self.sig.generators
    }

    pub fn degree_cap(&self) -> Option<u64> {
        self.sig.degree_cap
    }

    pub fn nilpotent_count(&self) -> usize {
        self.sig.nil_count
    }

    pub fn free_count(&self) -> usize {
        self.sig.generators.len() - self.sig.nil_count
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.sig.generators.iter().position(|g| g.name == name)
    }

    /// Same generators under a different cap.
    pub fn with_cap(&self, degree_cap: Option<u64>) -> Ring {
        Ring::new(self.sig.generators.to_vec(), degree_cap).expect("signature already validated")
    }

    pub fn zero(&self) -> GradedElement {
        GradedElement { ring: self.clone(), terms: Vec::new() }
    }

    pub fn one(&self) -> GradedElement {
        GradedElement { ring: self.clone(), terms: vec![Monomial::unit()] }
    }

    /// The generator with the given canonical index, as an element.
    pub fn generator(&self, index: usize) -> Result<GradedElement, RingError> {
        let spec = self
            .sig
            .generators
            .get(index)
            .ok_or_else(|| RingError::SignatureMismatch(format!("no generator #{index}")))?;
        if let Some(cap) = self.sig.degree_cap {
            if spec.degree > cap {
                return Ok(self.zero());
            }
        }
        let m = if index < self.sig.nil_count {
            Monomial { degree: 1, nil_mask: 1u64 << index, free: Vec::new() }
        } else {
            Monomial {
                degree: spec.degree,
                nil_mask: 0,
                free: vec![((index - self.sig.nil_count) as u32, 1)],
            }
        };
        Ok(GradedElement { ring: self.clone(), terms: vec![m] })
    }

    pub fn generator_by_name(&self, name: &str) -> Result<GradedElement, RingError> {
        let idx = self
            .generator_index(name)
            .ok_or_else(|| RingError::SignatureMismatch(format!("no generator named {name}")))?;
        self.generator(idx)
    }

    /// All monomials of exact degree `d`, canonically ordered.
    ///
    /// Fails with `BasisTooLarge` once the count exceeds `limit`.
    pub fn monomials_of_degree(&self, d: u64, limit: usize) -> Result<Vec<Monomial>, RingError> {
        let mut out = Vec::new();
        let mut current = Monomial::unit();
        self.enumerate_rec(0, d, &mut current, &mut out, limit)?;
        out.sort();
        Ok(out)
    }

    fn enumerate_rec(
        &self,
        index: usize,
        remaining: u64,
        current: &mut Monomial,
        out: &mut Vec<Monomial>,
        limit: usize,
    ) -> Result<(), RingError> {
        if remaining == 0 {
            if out.len() >= limit {
                return Err(RingError::BasisTooLarge(format!(
                    "degree component exceeds {limit} monomials"
                )));
            }
            out.push(current.clone());
            return Ok(());
        }
        if index >= self.sig.generators.len() {
            return Ok(());
        }
        let spec = &self.sig.generators[index];
        // skip this generator
        self.enumerate_rec(index + 1, remaining, current, out, limit)?;
        if spec.nilpotent {
            if spec.degree <= remaining {
                current.nil_mask |= 1 << index;
                current.degree += spec.degree;
                self.enumerate_rec(index + 1, remaining - spec.degree, current, out, limit)?;
                current.nil_mask &= !(1 << index);
                current.degree -= spec.degree;
            }
        } else {
            let slot = (index - self.sig.nil_count) as u32;
            let mut exp = 1u64;
            while exp * spec.degree <= remaining {
                current.free.push((slot, exp));
                current.degree += exp * spec.degree;
                self.enumerate_rec(index + 1, remaining - exp * spec.degree, current, out, limit)?;
                current.degree -= exp * spec.degree;
                current.free.pop();
                exp += 1;
            }
        }
        Ok(())
    }

    fn pack_layout(&self) -> Option<PackLayout> {
        let cap = self.sig.degree_cap?;
        let n_free = self.free_count() as u32;
        if n_free == 0 {
            return Some(PackLayout { width: 1, n_free });
        }
        // Lanes must hold exponent sums up to 2*cap without carrying over.
        let width = 64 - (2 * cap + 1).leading_zeros();
        if (n_free * width) as u64 <= 64 {
            Some(PackLayout { width, n_free })
        } else {
            None
        }
    }
}

/// Construct `F2[s_1..s_n, t_1..t_n] / (s_i^2)` with `deg s_i = 1`,
/// `deg t_i = 2`.
pub fn st_ring(n: usize, degree_cap: Option<u64>) -> Result<Ring, RingError> {
    if n == 0 {
        return Err(RingError::InvalidSignature("rank must be at least 1".into()));
    }
    let mut gens = Vec::with_capacity(2 * n);
    for i in 1..=n {
        gens.push(GeneratorSpec::nilpotent(format!("s{i}")));
    }
    for i in 1..=n {
        gens.push(GeneratorSpec::free(format!("t{i}"), 2));
    }
    Ring::new(gens, degree_cap)
}

/// Construct `F2[v_1..v_n]` with `deg v_i = 1`.
pub fn v_ring(n: usize, degree_cap: Option<u64>) -> Result<Ring, RingError> {
    if n == 0 {
        return Err(RingError::InvalidSignature("rank must be at least 1".into()));
    }
    let gens = (1..=n).map(|i| GeneratorSpec::free(format!("v{i}"), 1)).collect();
    Ring::new(gens, degree_cap)
}

struct PackLayout {
    width: u32,
    n_free: u32,
}

/// A monomial: a subset of the square-zero generators (each with exponent 1)
/// and sparse exponents on the free generators.
///
/// Ordering is graded lexicographic by canonical generator index, with larger
/// exponents first inside a degree; equality ignores nothing, so the derived
/// `Eq`/`Hash` agree with `Ord`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    degree: u64,
    nil_mask: u64,
    /// (free slot, exponent), sorted by slot, exponents > 0.
    free: Vec<(u32, u64)>,
}

impl Monomial {
    pub fn unit() -> Self {
        Monomial { degree: 0, nil_mask: 0, free: Vec::new() }
    }

    pub fn degree(&self) -> u64 {
        self.degree
    }

    pub fn is_unit(&self) -> bool {
        self.nil_mask == 0 && self.free.is_empty()
    }

    pub fn nilpotent_mask(&self) -> u64 {
        self.nil_mask
    }

    pub fn free_exponents(&self) -> &[(u32, u64)] {
        &self.free
    }

    /// Exponent of the generator at canonical index `index` in `ring`.
    pub fn exponent(&self, ring: &Ring, index: usize) -> u64 {
        if index < ring.sig.nil_count {
            (self.nil_mask >> index) & 1
        } else {
            let slot = (index - ring.sig.nil_count) as u32;
            self.free
                .binary_search_by_key(&slot, |&(s, _)| s)
                .map(|i| self.free[i].1)
                .unwrap_or(0)
        }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree
            .cmp(&other.degree)
            .then_with(|| {
                let diff = self.nil_mask ^ other.nil_mask;
                if diff == 0 {
                    Ordering::Equal
                } else if self.nil_mask & (diff & diff.wrapping_neg()) != 0 {
                    // the lowest differing generator appears here: bigger
                    // exponent sorts first
                    Ordering::Less
                } else {
                    Ordering::Greater
                }
            })
            .then_with(|| {
                let mut ia = self.free.iter();
                let mut ib = other.free.iter();
                let (mut a, mut b) = (ia.next(), ib.next());
                loop {
                    match (a, b) {
                        (None, None) => return Ordering::Equal,
                        (Some(_), None) => return Ordering::Less,
                        (None, Some(_)) => return Ordering::Greater,
                        (Some(&(sa, ea)), Some(&(sb, eb))) => match sa.cmp(&sb) {
                            Ordering::Less => return Ordering::Less,
                            Ordering::Greater => return Ordering::Greater,
                            Ordering::Equal => {
                                match ea.cmp(&eb) {
                                    Ordering::Greater => return Ordering::Less,
                                    Ordering::Less => return Ordering::Greater,
                                    Ordering::Equal => {}
                                }
                                a = ia.next();
                                b = ib.next();
                            }
                        },
                    }
                }
            })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Product of two monomials inside `ring`: `None` when a square-zero
/// generator repeats or the degree cap is exceeded.
fn monomial_mul(ring: &Ring, a: &Monomial, b: &Monomial) -> Option<Monomial> {
    if a.nil_mask & b.nil_mask != 0 {
        return None;
    }
    let degree = a.degree + b.degree;
    if let Some(cap) = ring.sig.degree_cap {
        if degree > cap {
            return None;
        }
    }
    let mut free = Vec::with_capacity(a.free.len() + b.free.len());
    let (mut i, mut j) = (0, 0);
    while i < a.free.len() && j < b.free.len() {
        match a.free[i].0.cmp(&b.free[j].0) {
            Ordering::Less => {
                free.push(a.free[i]);
                i += 1;
            }
            Ordering::Greater => {
                free.push(b.free[j]);
                j += 1;
            }
            Ordering::Equal => {
                free.push((a.free[i].0, a.free[i].1 + b.free[j].1));
                i += 1;
                j += 1;
            }
        }
    }
    free.extend_from_slice(&a.free[i..]);
    free.extend_from_slice(&b.free[j..]);
    Some(Monomial { degree, nil_mask: a.nil_mask | b.nil_mask, free })
}

/// An element of a graded GF(2) algebra: a finite set of monomials, each with
/// coefficient 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedElement {
    ring: Ring,
    /// Strictly ascending in the canonical monomial order.
    terms: Vec<Monomial>,
}

impl GradedElement {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn terms(&self) -> &[Monomial] {
        &self.terms
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].is_unit()
    }

    /// Canonicalize an arbitrary monomial list: sort, cancel duplicate pairs
    /// (coefficients live in GF(2)), drop anything above the cap.
    pub fn from_monomials(ring: &Ring, monomials: impl IntoIterator<Item = Monomial>) -> Self {
        let cap = ring.sig.degree_cap;
        let mut terms: Vec<Monomial> = monomials
            .into_iter()
            .filter(|m| cap.map_or(true, |c| m.degree <= c))
            .collect();
        terms.sort();
        let mut out: Vec<Monomial> = Vec::with_capacity(terms.len());
        for m in terms {
            if out.last() == Some(&m) {
                out.pop();
            } else {
                out.push(m);
            }
        }
        GradedElement { ring: ring.clone(), terms: out }
    }

    fn check_ring(&self, other: &GradedElement, op: &str) -> Result<(), RingError> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(RingError::SignatureMismatch(format!(
                "{op} between {:?} and {:?}",
                self.ring, other.ring
            )))
        }
    }

    /// Sum in GF(2): the symmetric difference of the term sets.
    pub fn add(&self, other: &GradedElement) -> Result<GradedElement, RingError> {
        self.check_ring(other, "add")?;
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            match self.terms[i].cmp(&other.terms[j]) {
                Ordering::Less => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(other.terms[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&other.terms[j..]);
        Ok(GradedElement { ring: self.ring.clone(), terms: out })
    }

    /// Distributive product, reduced modulo square-zero relations and the cap.
    pub fn mul(&self, other: &GradedElement) -> Result<GradedElement, RingError> {
        self.check_ring(other, "mul")?;
        if self.is_zero() || other.is_zero() {
            return Ok(self.ring.zero());
        }
        if self.is_one() {
            return Ok(other.clone());
        }
        if other.is_one() {
            return Ok(self.clone());
        }
        if let Some(layout) = self.ring.pack_layout() {
            return Ok(self.mul_packed(other, &layout));
        }
        let mut acc: HashMap<Monomial, ()> =
            HashMap::with_capacity(self.terms.len() * other.terms.len() / 2);
        for a in &self.terms {
            for b in &other.terms {
                if let Some(m) = monomial_mul(&self.ring, a, b) {
                    if acc.remove(&m).is_none() {
                        acc.insert(m, ());
                    }
                }
            }
        }
        let mut terms: Vec<Monomial> = acc.into_keys().collect();
        terms.sort();
        Ok(GradedElement { ring: self.ring.clone(), terms })
    }

    /// Bit-packed product path: all free exponents of one monomial fit in one
    /// machine word, so a monomial product is three integer ops.
    fn mul_packed(&self, other: &GradedElement, layout: &PackLayout) -> GradedElement {
        let cap = self.ring.sig.degree_cap.expect("packed path requires a cap");
        let pack = |m: &Monomial| -> (u64, u64, u64) {
            let mut packed = 0u64;
            for &(slot, exp) in &m.free {
                packed |= exp << (slot * layout.width);
            }
            (m.nil_mask, packed, m.degree)
        };
        let pa: Vec<_> = self.terms.iter().map(pack).collect();
        let pb: Vec<_> = other.terms.iter().map(pack).collect();
        let mut acc: HashMap<(u64, u64), u64> = HashMap::with_capacity(pa.len().max(pb.len()) * 2);
        for &(na, fa, da) in &pa {
            for &(nb, fb, db) in &pb {
                if na & nb != 0 {
                    continue;
                }
                let degree = da + db;
                if degree > cap {
                    continue;
                }
                // no carry between lanes: each lane holds at most 2*cap
                let key = (na | nb, fa + fb);
                if acc.remove(&key).is_none() {
                    acc.insert(key, degree);
                }
            }
        }
        let mask = if layout.width == 64 { u64::MAX } else { (1u64 << layout.width) - 1 };
        let mut terms: Vec<Monomial> = acc
            .into_iter()
            .map(|((nil_mask, packed), degree)| {
                let mut free = Vec::new();
                for slot in 0..layout.n_free {
                    let exp = (packed >> (slot * layout.width)) & mask;
                    if exp > 0 {
                        free.push((slot, exp));
                    }
                }
                Monomial { degree, nil_mask, free }
            })
            .collect();
        terms.sort();
        GradedElement { ring: self.ring.clone(), terms }
    }

    /// The Frobenius square.  In characteristic 2 only the squares of the
    /// individual monomials survive, and a monomial containing a square-zero
    /// generator dies.
    pub fn square(&self) -> GradedElement {
        let cap = self.ring.sig.degree_cap;
        let mut terms: Vec<Monomial> = self
            .terms
            .iter()
            .filter(|m| m.nil_mask == 0)
            .filter_map(|m| {
                let degree = m.degree * 2;
                if cap.is_some_and(|c| degree > c) {
                    return None;
                }
                Some(Monomial {
                    degree,
                    nil_mask: 0,
                    free: m.free.iter().map(|&(s, e)| (s, 2 * e)).collect(),
                })
            })
            .collect();
        terms.sort();
        GradedElement { ring: self.ring.clone(), terms }
    }

    /// `self^e` by binary exponentiation over the bits of `e`.
    ///
    /// Negative exponents invert `self` first, which requires a constant term
    /// of 1 and a degree cap (geometric-series inverse).  Exponents beyond
    /// [`UNCAPPED_POW_LIMIT`] also require a cap: without truncation the
    /// result would be astronomically large.
    pub fn pow(&self, e: &BigInt) -> Result<GradedElement, RingError> {
        match e.sign() {
            Sign::NoSign => Ok(self.ring.one()),
            Sign::Plus => self.pow_magnitude(e.magnitude()),
            Sign::Minus => self.inverse()?.pow_magnitude(e.magnitude()),
        }
    }

    pub fn pow_u64(&self, e: u64) -> Result<GradedElement, RingError> {
        self.pow(&BigInt::from(e))
    }

    fn pow_magnitude(&self, e: &BigUint) -> Result<GradedElement, RingError> {
        if self.ring.sig.degree_cap.is_none() && *e > BigUint::from(UNCAPPED_POW_LIMIT) {
            return Err(RingError::CapRequired(format!(
                "exponent {e} exceeds {UNCAPPED_POW_LIMIT} and the ring has no degree cap"
            )));
        }
        let mut result = self.ring.one();
        let mut base = self.clone();
        let bits = e.bits();
        for i in 0..bits {
            if e.bit(i) {
                result = result.mul(&base)?;
            }
            if i + 1 < bits {
                base = base.square();
                if base.is_one() {
                    // all remaining squarings stay 1
                    break;
                }
            }
        }
        Ok(result)
    }

    /// Inverse as a truncated geometric series: `(1+f)^-1 = sum f^k`.
    pub fn inverse(&self) -> Result<GradedElement, RingError> {
        let cap = self.ring.sig.degree_cap.ok_or_else(|| {
            RingError::CapRequired("inversion needs a degree cap".into())
        })?;
        if self.terms.first().map_or(true, |m| !m.is_unit()) {
            return Err(RingError::NotInvertible);
        }
        let f = self.add(&self.ring.one())?;
        let one = self.ring.one();
        let mut acc = one.clone();
        for _ in 0..cap {
            acc = one.add(&f.mul(&acc)?)?;
        }
        Ok(acc)
    }

    /// The degree-`d` homogeneous part.
    pub fn graded_component(&self, d: u64) -> GradedElement {
        GradedElement {
            ring: self.ring.clone(),
            terms: self.terms.iter().filter(|m| m.degree == d).cloned().collect(),
        }
    }

    /// Everything of degree at most `d`.
    pub fn truncated(&self, d: u64) -> GradedElement {
        GradedElement {
            ring: self.ring.clone(),
            terms: self.terms.iter().filter(|m| m.degree <= d).cloned().collect(),
        }
    }

    pub fn max_degree(&self) -> Option<u64> {
        self.terms.last().map(|m| m.degree)
    }

    pub fn is_homogeneous_of(&self, d: u64) -> bool {
        self.terms.iter().all(|m| m.degree == d)
    }

    /// Exact square root in a polynomial ring without square-zero generators.
    ///
    /// In GF(2) squaring doubles every exponent, so the root exists iff every
    /// exponent is even; otherwise this is `NotAPerfectSquare`.
    pub fn sqrt(&self) -> Result<GradedElement, RingError> {
        if self.ring.sig.nil_count > 0 {
            return Err(RingError::SqrtWithNilpotents);
        }
        let mut terms = Vec::with_capacity(self.terms.len());
        for m in &self.terms {
            if m.free.iter().any(|&(_, e)| e % 2 == 1) {
                return Err(RingError::NotAPerfectSquare(format!(
                    "monomial {} has an odd exponent",
                    text::format_monomial(&self.ring, m)
                )));
            }
            terms.push(Monomial {
                degree: m.degree / 2,
                nil_mask: 0,
                free: m.free.iter().map(|&(s, e)| (s, e / 2)).collect(),
            });
        }
        terms.sort();
        Ok(GradedElement { ring: self.ring.clone(), terms })
    }
}
