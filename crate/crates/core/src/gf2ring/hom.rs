//! Graded ring homomorphisms and GF(2) kernel computations.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use super::f2linalg::F2Matrix;
use super::{GradedElement, Monomial, Ring, RingError};

/// A homomorphism of graded GF(2) algebras, given by generator images.
///
/// Every image must be homogeneous of the same degree as its source generator
/// (or zero), and the image of a square-zero generator must square to zero in
/// the target; both are checked at construction.
#[derive(Debug, Clone)]
pub struct RingHom {
    source: Ring,
    target: Ring,
    images: Vec<GradedElement>,
}

impl RingHom {
    pub fn new(
        source: Ring,
        target: Ring,
        images: Vec<GradedElement>,
    ) -> Result<RingHom, RingError> {
        if images.len() != source.generators().len() {
            return Err(RingError::SignatureMismatch(format!(
                "expected {} generator images, got {}",
                source.generators().len(),
                images.len()
            )));
        }
        for (spec, image) in source.generators().iter().zip(&images) {
            if image.ring() != &target {
                return Err(RingError::SignatureMismatch(format!(
                    "image of {} lives in the wrong ring",
                    spec.name
                )));
            }
            if !image.is_zero() && !image.is_homogeneous_of(spec.degree) {
                return Err(RingError::NonHomogeneousImage(format!(
                    "image of {} (degree {}) is {}",
                    spec.name, spec.degree, image
                )));
            }
            if spec.nilpotent && !image.square().is_zero() {
                return Err(RingError::NilpotentImageNotSquareZero(format!(
                    "image of {} is {}",
                    spec.name, image
                )));
            }
        }
        Ok(RingHom { source, target, images })
    }

    pub fn identity(ring: &Ring) -> RingHom {
        let images =
            (0..ring.generators().len()).map(|i| ring.generator(i).expect("index in range")).collect();
        RingHom { source: ring.clone(), target: ring.clone(), images }
    }

    pub fn source(&self) -> &Ring {
        &self.source
    }

    pub fn target(&self) -> &Ring {
        &self.target
    }

    pub fn image_of(&self, index: usize) -> &GradedElement {
        &self.images[index]
    }

    /// Substitute generator images, expand, and reduce.
    pub fn apply(&self, a: &GradedElement) -> Result<GradedElement, RingError> {
        if a.ring() != &self.source {
            return Err(RingError::SignatureMismatch("element not in the source ring".into()));
        }
        let mut total = self.target.zero();
        for m in a.terms() {
            total = total.add(&self.apply_monomial(m)?)?;
        }
        Ok(total)
    }

    fn apply_monomial(&self, m: &Monomial) -> Result<GradedElement, RingError> {
        let nil_count = self.source.nilpotent_count();
        let mut value = self.target.one();
        for i in 0..nil_count {
            if m.nilpotent_mask() >> i & 1 == 1 {
                value = value.mul(&self.images[i])?;
                if value.is_zero() {
                    return Ok(value);
                }
            }
        }
        for &(slot, exp) in m.free_exponents() {
            let image = &self.images[nil_count + slot as usize];
            value = value.mul(&image.pow(&BigInt::from(exp))?)?;
            if value.is_zero() {
                return Ok(value);
            }
        }
        Ok(value)
    }

    /// Dimension of the kernel on the full degree-`d` component of the
    /// source, by Gaussian elimination over GF(2) on the monomial basis.
    pub fn kernel_dimension(&self, d: u64, basis_limit: usize) -> Result<usize, RingError> {
        let basis = self.source.monomials_of_degree(d, basis_limit)?;
        let elements: Vec<GradedElement> = basis
            .into_iter()
            .map(|m| GradedElement::from_monomials(&self.source, [m]))
            .collect();
        self.kernel_dimension_of_span(&elements)
    }

    /// Dimension of the kernel of the map restricted to the span of the given
    /// elements, counted against the elements as a formal basis.
    ///
    /// If the inputs are linearly independent this is `dim span ∩ ker`; any
    /// dependence among the inputs shows up in the count as well.
    pub fn kernel_dimension_of_span(
        &self,
        span: &[GradedElement],
    ) -> Result<usize, RingError> {
        let images: Vec<GradedElement> =
            span.iter().map(|e| self.apply(e)).collect::<Result<_, _>>()?;
        let mut columns: BTreeMap<&Monomial, usize> = BTreeMap::new();
        for img in &images {
            for m in img.terms() {
                let next = columns.len();
                columns.entry(m).or_insert(next);
            }
        }
        let mut matrix = F2Matrix::new(columns.len().max(1));
        for img in &images {
            matrix.push_row(img.terms().iter().map(|m| columns[m]));
        }
        Ok(span.len() - matrix.rank())
    }
}

/// The homomorphism that keeps the first generators of each kind and kills
/// the rest: `x_i` maps to its namesake for `i <= keep`, to zero beyond.
///
/// `source` and `target` must have the same generator shape, with `target`
/// the truncation of `source` (this is how restriction to a smaller diagonal
/// subgroup acts on the cohomology presentations used here).
pub fn truncation_hom(source: &Ring, target: &Ring) -> Result<RingHom, RingError> {
    let src_nil = source.nilpotent_count();
    let tgt_nil = target.nilpotent_count();
    let src_free = source.free_count();
    let tgt_free = target.free_count();
    if tgt_nil > src_nil || tgt_free > src_free {
        return Err(RingError::SignatureMismatch(
            "truncation target is larger than the source".into(),
        ));
    }
    let mut images = Vec::with_capacity(source.generators().len());
    for i in 0..src_nil {
        if i < tgt_nil {
            images.push(target.generator(i)?);
        } else {
            images.push(target.zero());
        }
    }
    for j in 0..src_free {
        if j < tgt_free {
            images.push(target.generator(tgt_nil + j)?);
        } else {
            images.push(target.zero());
        }
    }
    RingHom::new(source.clone(), target.clone(), images)
}
