//! Property-based checks of the ring axioms, the powering oracle, and the
//! supercharacter inversion identities.

use num_bigint::BigInt;
use proptest::collection::vec;
use proptest::prelude::*;

use swcalc::gf2ring::{parse_element, st_ring, truncation_hom, v_ring, GradedElement, Ring};
use swcalc::superchar::{
    brute_force_multiplicities, build_matrix, decompose, BinaryString, MultiplicityVector,
};
use swcalc::swc::c2n_restriction;

/// A random element of `F2[s1,s2,t1,t2]/(s^2)` built from monomial data
/// through the public constructors.
fn element(ring: &Ring, data: &[(bool, bool, u8, u8)]) -> GradedElement {
    let mut total = ring.zero();
    for &(s1, s2, e1, e2) in data {
        let mut m = ring.one();
        if s1 {
            m = m.mul(&ring.generator_by_name("s1").unwrap()).unwrap();
        }
        if s2 {
            m = m.mul(&ring.generator_by_name("s2").unwrap()).unwrap();
        }
        let t1 = ring.generator_by_name("t1").unwrap();
        let t2 = ring.generator_by_name("t2").unwrap();
        m = m.mul(&t1.pow_u64(e1 as u64).unwrap()).unwrap();
        m = m.mul(&t2.pow_u64(e2 as u64).unwrap()).unwrap();
        total = total.add(&m).unwrap();
    }
    total
}

fn monomial_data() -> impl Strategy<Value = Vec<(bool, bool, u8, u8)>> {
    vec((any::<bool>(), any::<bool>(), 0u8..3, 0u8..3), 0..6)
}

proptest! {
    #[test]
    fn ring_axioms(a in monomial_data(), b in monomial_data(), c in monomial_data()) {
        let ring = st_ring(2, Some(10)).unwrap();
        let (a, b, c) = (element(&ring, &a), element(&ring, &b), element(&ring, &c));
        prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
        prop_assert_eq!(
            a.mul(&b.add(&c).unwrap()).unwrap(),
            a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap()
        );
        prop_assert!(a.add(&a).unwrap().is_zero());
    }

    #[test]
    fn pow_matches_iterated_multiplication(a in monomial_data(), e in 0u64..=16) {
        let ring = st_ring(2, Some(12)).unwrap();
        let a = element(&ring, &a);
        let mut expected = ring.one();
        for _ in 0..e {
            expected = expected.mul(&a).unwrap();
        }
        prop_assert_eq!(a.pow(&BigInt::from(e)).unwrap(), expected);
    }

    #[test]
    fn square_keeps_exactly_the_frobenius_monomials(a in monomial_data()) {
        let ring = st_ring(2, None).unwrap();
        let a = element(&ring, &a);
        let sq = a.pow_u64(2).unwrap();
        // every monomial of the square is the double of a nilpotent-free
        // monomial of a, and all of those appear
        let mut expected: Vec<String> = a
            .terms()
            .iter()
            .filter(|m| m.nilpotent_mask() == 0)
            .map(|m| {
                let mut parts: Vec<String> = Vec::new();
                for &(slot, exp) in m.free_exponents() {
                    parts.push(format!("t{}^{}", slot + 1, 2 * exp));
                }
                if parts.is_empty() { "1".into() } else { parts.join("*") }
            })
            .collect();
        expected.sort();
        expected.dedup();
        let mut got: Vec<String> = sq
            .terms()
            .iter()
            .map(|m| {
                let mut parts: Vec<String> = Vec::new();
                for &(slot, exp) in m.free_exponents() {
                    parts.push(format!("t{}^{}", slot + 1, exp));
                }
                if parts.is_empty() { "1".into() } else { parts.join("*") }
            })
            .collect();
        got.sort();
        prop_assert_eq!(expected, got);
    }

    #[test]
    fn sqrt_roundtrip_on_nilpotent_free_elements(data in vec((0u8..4, 0u8..4, 0u8..4), 0..6)) {
        let ring = v_ring(3, None).unwrap();
        let mut a = ring.zero();
        for (e1, e2, e3) in data {
            let mut m = ring.one();
            for (i, e) in [e1, e2, e3].into_iter().enumerate() {
                m = m.mul(&ring.generator(i).unwrap().pow_u64(e as u64).unwrap()).unwrap();
            }
            a = a.add(&m).unwrap();
        }
        let sq = a.pow_u64(2).unwrap();
        prop_assert_eq!(sq.sqrt().unwrap(), a);
    }

    #[test]
    fn homomorphisms_commute_with_ring_ops(a in monomial_data(), b in monomial_data()) {
        let src = st_ring(2, Some(10)).unwrap();
        let (a, b) = (element(&src, &a), element(&src, &b));
        let res = c2n_restriction(&src).unwrap();
        let trunc = truncation_hom(&src, &st_ring(1, Some(10)).unwrap()).unwrap();
        for hom in [&res, &trunc] {
            prop_assert_eq!(
                hom.apply(&a.add(&b).unwrap()).unwrap(),
                hom.apply(&a).unwrap().add(&hom.apply(&b).unwrap()).unwrap()
            );
            prop_assert_eq!(
                hom.apply(&a.mul(&b).unwrap()).unwrap(),
                hom.apply(&a).unwrap().mul(&hom.apply(&b).unwrap()).unwrap()
            );
        }
    }

    #[test]
    fn grammar_roundtrip(a in monomial_data()) {
        let ring = st_ring(2, Some(10)).unwrap();
        let a = element(&ring, &a);
        let reparsed = parse_element(&ring, &a.to_string()).unwrap();
        prop_assert_eq!(reparsed, a);
    }

    #[test]
    fn decompose_roundtrips_multiplicities(
        n in 1usize..=8,
        raw in vec(0u32..50, 9),
    ) {
        let c: Vec<BigInt> = raw[..=n].iter().map(|&x| BigInt::from(x)).collect();
        let mult = MultiplicityVector::new(c).unwrap();
        let a = mult.character_vector();
        prop_assert_eq!(decompose(&a, false).unwrap(), mult);
    }

    #[test]
    fn decompose_agrees_with_inner_product_oracle(
        n in 1usize..=6,
        raw in vec(0u32..12, 7),
    ) {
        let c: Vec<BigInt> = raw[..=n].iter().map(|&x| BigInt::from(x)).collect();
        let mult = MultiplicityVector::new(c).unwrap();
        let a = mult.character_vector();
        let values = a.values().to_vec();
        let by_string =
            brute_force_multiplicities(n, |g| values[g.weight()].clone()).unwrap();
        for l in BinaryString::all(n) {
            prop_assert_eq!(&by_string[l.bits() as usize], mult.value(l.weight()));
        }
    }

    #[test]
    fn matrix_rows_are_signed_binomial_convolutions(n in 1usize..=9) {
        // oracle: integer polynomial multiplication of (1-y)^i (1+y)^(n-i)
        let m = build_matrix(n);
        for i in 0..=n {
            let mut poly = vec![BigInt::from(1)];
            for _ in 0..i {
                poly = poly_mul(&poly, &[BigInt::from(1), BigInt::from(-1)]);
            }
            for _ in 0..(n - i) {
                poly = poly_mul(&poly, &[BigInt::from(1), BigInt::from(1)]);
            }
            prop_assert_eq!(m.row(i), &poly[..]);
        }
    }
}

fn poly_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::from(0); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}
