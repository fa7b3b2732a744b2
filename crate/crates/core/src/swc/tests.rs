use num_bigint::BigInt;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::corpus::{self, CorpusCase};
use crate::gf2ring::parse_element;
use crate::reps::{self, RepFamily};
use crate::superchar::CharacterVector;

fn fq1(q: u64) -> FieldCase {
    FieldCase::Fq1 { q }
}

fn fq3(q: u64) -> FieldCase {
    FieldCase::Fq3 { q }
}

fn literal(n: usize, case: FieldCase, values: &[i64], delta: u8) -> RepInput {
    RepInput::new(n, case, CharacterVector::from_i64(values).unwrap(), delta).unwrap()
}

#[test]
fn trivial_representation_has_total_class_one() {
    for case in [fq1(5), fq3(7), FieldCase::Real, FieldCase::Complex] {
        let input = literal(3, case, &[1, 1, 1, 1], 0);
        let report = total_swc(&input, 8, false).unwrap();
        assert!(report.total.is_one());
        assert!(report.spinorial);
        assert_eq!(report.invariants.m_pi, BigInt::zero());
    }
}

#[test]
fn rank_two_q3_product_shape() {
    // multiplicities (1, 2, 3) against the displayed product
    let c = crate::superchar::MultiplicityVector::new(
        [1, 2, 3].iter().map(|&x| BigInt::from(x)).collect(),
    )
    .unwrap();
    let input = RepInput::new(2, fq3(7), c.character_vector(), 0).unwrap();
    let report = total_swc(&input, 10, false).unwrap();
    let r = &report.ring;
    let v1 = parse_element(r, "1 + v1").unwrap();
    let v2 = parse_element(r, "1 + v2").unwrap();
    let v12 = parse_element(r, "1 + v1 + v2").unwrap();
    let expected = v1
        .pow_u64(2)
        .unwrap()
        .mul(&v2.pow_u64(2).unwrap())
        .unwrap()
        .mul(&v12.pow_u64(3).unwrap())
        .unwrap();
    assert_eq!(report.total, expected);
}

#[test]
fn steinberg_gl2_f5_worked_example() {
    let input = reps::to_rep_input(&RepFamily::Steinberg { n: 2, q: 5 }).unwrap();
    let report = total_swc(&input, 12, false).unwrap();
    assert_eq!(
        report.multiplicities.values(),
        &[BigInt::from(3), BigInt::from(0), BigInt::from(2)]
    );
    assert_eq!(report.total.to_string(), "1 + t1 + t2");
    // degree-2 part is a_2, the q = 5 (mod 8), even-rank branch of w2
    assert_eq!(report.total.graded_component(2), a2(&report.ring).unwrap());
    assert_eq!(w2(&input, &report.ring).unwrap(), a2(&report.ring).unwrap());
    assert_eq!(report.invariants.m_pi, BigInt::from(2));
    assert!(!report.spinorial); // m_pi = 2, not divisible by 4
}

#[test]
fn w1_closed_forms() {
    // realified character of GL_1(F_7): chars (2, -2), m_pi = 2
    let input = literal(1, fq3(7), &[2, -2], 0);
    let report = total_swc(&input, 6, false).unwrap();
    assert_eq!(report.total.to_string(), "1 + v1^2");
    assert!(w1(&input, &report.ring).unwrap().is_zero());

    // quadratic-character twist restricted: chars alternate, m_pi = 1
    let input = literal(3, fq3(7), &[1, -1, 1, -1], 0);
    let ring = v_ring(3, Some(6)).unwrap();
    assert_eq!(
        w1(&input, &ring).unwrap(),
        parse_element(&ring, "v1 + v2 + v3").unwrap()
    );

    // q = 1 (mod 4): w1 is delta * b1
    let input = literal(2, fq1(5), &[5, 1, 5], 1);
    let ring = st_ring(2, Some(6)).unwrap();
    assert_eq!(w1(&input, &ring).unwrap(), parse_element(&ring, "s1 + s2").unwrap());
}

#[test]
fn w2_cuspidal_branches() {
    // cuspidal rank 2: m_pi = (q-1)/2, so w2 = a2 iff q = 5 (mod 8)
    for (q, expect_a2) in [(13u64, true), (17, false), (5, true), (9, false)] {
        let input = reps::to_rep_input(&RepFamily::Cuspidal { n: 2, q, theta_minus_one: 1 }).unwrap();
        let ring = st_ring(2, Some(6)).unwrap();
        let w = w2(&input, &ring).unwrap();
        if expect_a2 {
            assert_eq!(w, a2(&ring).unwrap(), "q={q}");
        } else {
            assert!(w.is_zero(), "q={q}");
        }
    }
}

#[test]
fn w2_real_principal_series_vanishes_from_rank_three() {
    for q in [5u64, 7] {
        let exps: Vec<i64> = vec![0, 1, -1];
        let input =
            reps::to_rep_input(&RepFamily::PrincipalSeries { n: 3, q, exponents: exps }).unwrap();
        let ring = if q % 4 == 1 { st_ring(3, Some(6)) } else { v_ring(3, Some(6)) }.unwrap();
        assert!(w2(&input, &ring).unwrap().is_zero(), "q={q}");
    }
}

#[test]
fn w4_closed_form_cases() {
    // principal series rank 5, q = 1 (mod 4): w4 = 0
    let input = reps::to_rep_input(&RepFamily::PrincipalSeries {
        n: 5,
        q: 5,
        exponents: vec![0, 1, -1, 2, -2],
    })
    .unwrap();
    let ring = st_ring(5, Some(8)).unwrap();
    assert!(w4_q1(&input, &ring).unwrap().is_zero());

    // rank 4 family {1, sgn, chi_i, chi_i^-1} with i odd: w4 = sum t_i^2
    let input = reps::to_rep_input(&RepFamily::PrincipalSeries {
        n: 4,
        q: 5,
        exponents: vec![0, 2, 1, -1],
    })
    .unwrap();
    let ring = st_ring(4, Some(8)).unwrap();
    assert_eq!(
        w4_q1(&input, &ring).unwrap(),
        parse_element(&ring, "t1^2 + t2^2 + t3^2 + t4^2").unwrap()
    );

    // Steinberg with q = 1 (mod 16): both parity columns vanish
    for n in [2usize, 3] {
        let input = reps::to_rep_input(&RepFamily::Steinberg { n, q: 17 }).unwrap();
        let ring = st_ring(n, Some(8)).unwrap();
        assert!(w4_q1(&input, &ring).unwrap().is_zero(), "n={n}");
    }
}

#[test]
fn spinoriality_congruences() {
    assert!(spinorial_from_m(&fq1(5), &BigInt::from(4)));
    assert!(!spinorial_from_m(&fq1(5), &BigInt::from(2)));
    assert!(spinorial_from_m(&fq3(7), &BigInt::from(3)));
    assert!(!spinorial_from_m(&fq3(7), &BigInt::from(2)));
    assert!(spinorial_from_m(&fq3(7), &BigInt::from(0)));
    // negative (virtual) invariants reduce with floor semantics
    assert!(spinorial_from_m(&fq3(7), &BigInt::from(-1))); // -1 = 3 (mod 4)
}

#[test]
fn restriction_to_sign_ring() {
    let st = st_ring(2, Some(8)).unwrap();
    let a = parse_element(&st, "1 + t1").unwrap();
    assert_eq!(res_to_c2n(&a).unwrap().to_string(), "1 + v1^2");
    let b = parse_element(&st, "s1*t2").unwrap();
    assert!(res_to_c2n(&b).unwrap().is_zero());
    // a full delta-carrying class: the s-terms die
    let c = parse_element(&st, "1 + s1 + s2 + t1 + s1*t1").unwrap();
    assert_eq!(res_to_c2n(&c).unwrap().to_string(), "1 + v1^2");
}

#[test]
fn square_property_on_worked_examples() {
    let trivial = literal(2, fq1(5), &[1, 1, 1], 0);
    assert!(verify_square_property(&trivial, 8, false).unwrap());

    let steinberg = reps::to_rep_input(&RepFamily::Steinberg { n: 2, q: 5 }).unwrap();
    assert!(verify_square_property(&steinberg, 8, false).unwrap());
    // the restriction is (1 + v1 + v2)^2 explicitly
    let report = total_swc(&steinberg, 8, false).unwrap();
    let restricted = res_to_c2n(&report.total).unwrap();
    assert_eq!(restricted.to_string(), "1 + v1^2 + v2^2");

    // odd multiplicity: an error, not `false`
    let c = crate::superchar::MultiplicityVector::new(
        [0, 1, 0].iter().map(|&x| BigInt::from(x)).collect(),
    )
    .unwrap();
    let odd = RepInput::new(2, fq1(5), c.character_vector(), 0).unwrap();
    assert!(matches!(
        verify_square_property(&odd, 8, false).unwrap_err(),
        MathError::OddMultiplicity(_)
    ));
}

#[test]
fn closed_forms_on_literal_examples() {
    // GL_1(F_5), realified character: total 1 + t1, w2 = (m/2) a2 = t1
    let input = literal(1, fq1(5), &[2, -2], 0);
    let report = total_swc(&input, 6, false).unwrap();
    assert_eq!(report.total.to_string(), "1 + t1");
    assert_eq!(w2(&input, &report.ring).unwrap().to_string(), "t1");
    let check = check_closed_forms(&input, 6, false).unwrap();
    assert!(check.all_ok());

    let trivial = literal(4, fq3(7), &[1, 1, 1, 1, 1], 0);
    assert!(check_closed_forms(&trivial, 6, false).unwrap().all_ok());
}

#[test]
fn closed_forms_on_random_genuine_inputs() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for case in [CorpusCase::Fq1, CorpusCase::Fq3, CorpusCase::Real, CorpusCase::Complex] {
        for _ in 0..25 {
            let input = corpus::random_genuine_input(&mut rng, case, 5);
            let check = check_closed_forms(&input, 6, false).unwrap();
            assert!(check.all_ok(), "case {case:?} input {input:?}");
        }
    }
}

#[test]
fn spinoriality_matches_polynomial_identity() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for case in [CorpusCase::Fq1, CorpusCase::Fq3] {
        for _ in 0..40 {
            let input = corpus::random_genuine_input(&mut rng, case, 5);
            let ring = if input.case.uses_st_ring() {
                st_ring(input.n, Some(6)).unwrap()
            } else {
                v_ring(input.n, Some(6)).unwrap()
            };
            let lhs = w2(&input, &ring)
                .unwrap()
                .add(&w1(&input, &ring).unwrap().square())
                .unwrap();
            assert_eq!(lhs.is_zero(), is_spinorial(&input).unwrap(), "{input:?}");
        }
    }
}

#[test]
fn whitney_sum_multiplies_total_classes() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for case in [CorpusCase::Fq1, CorpusCase::Fq3] {
        for _ in 0..10 {
            let a = corpus::random_genuine_input(&mut rng, case, 4);
            let cb = corpus::random_genuine_multiplicities(&mut rng, a.n, case);
            let chars_b = crate::superchar::MultiplicityVector::new(cb)
                .unwrap()
                .character_vector();
            let delta_b = if a.case.uses_st_ring() { 1 } else { 0 };
            let b = RepInput::new(a.n, a.case, chars_b, delta_b).unwrap();
            let sum = RepInput::new(
                a.n,
                a.case,
                a.chars.sum(&b.chars).unwrap(),
                a.delta ^ b.delta,
            )
            .unwrap();
            let ta = total_swc(&a, 6, false).unwrap().total;
            let tb = total_swc(&b, 6, false).unwrap().total;
            let tsum = total_swc(&sum, 6, false).unwrap().total;
            assert_eq!(ta.mul(&tb).unwrap(), tsum);
        }
    }
}

#[test]
fn q3_total_class_is_symmetric() {
    let mut rng = ChaCha8Rng::seed_from_u64(29);
    for _ in 0..10 {
        let input = corpus::random_genuine_input(&mut rng, CorpusCase::Fq3, 4);
        let report = total_swc(&input, 6, false).unwrap();
        let ring = &report.ring;
        let n = input.n;
        if n < 2 {
            continue;
        }
        // a cyclic shift generates enough of the symmetric group with the swap
        for perm in [
            (0..n).map(|i| (i + 1) % n).collect::<Vec<_>>(),
            (0..n).map(|i| if i < 2 { 1 - i } else { i }).collect::<Vec<_>>(),
        ] {
            let images: Vec<_> =
                perm.iter().map(|&j| ring.generator(j).unwrap()).collect();
            let hom = RingHom::new(ring.clone(), ring.clone(), images).unwrap();
            assert_eq!(hom.apply(&report.total).unwrap(), report.total);
        }
    }
}

#[test]
fn detection_bounds_hold_and_are_sharp_sideways() {
    // q = 1 (mod 4): restriction from rank 4 to rank 2 (n = 3), injective
    // below degree 5, with b5-type classes in the kernel at degree 5
    let report = verify_detection(DetectionCase::Q1, 4, 3, 5).unwrap();
    assert_eq!(report.injectivity_bound, 5);
    assert!(report.injective_below_bound());
    for d in &report.degrees {
        if d.degree < 5 {
            assert_eq!(d.kernel_dim, 0, "degree {}", d.degree);
        }
    }
    assert!(report.degrees[5].kernel_dim > 0);

    // q = 3 (mod 4): symmetric invariants, rank 5 to rank 3 (n = 4)
    let report = verify_detection(DetectionCase::Q3, 5, 4, 5).unwrap();
    assert_eq!(report.injectivity_bound, 4);
    assert!(report.injective_below_bound());

    assert!(verify_detection(DetectionCase::Q1, 2, 3, 4).is_err());
}

#[test]
fn gl_presentation_basis_shapes() {
    let ring = st_ring(4, Some(6)).unwrap();
    // degree 0: the unit; degree 1: b1; degree 2: a2; degree 5 contains b5
    assert_eq!(gl_presentation_basis(&ring, 0).unwrap().len(), 1);
    let d1 = gl_presentation_basis(&ring, 1).unwrap();
    assert_eq!(d1.len(), 1);
    assert_eq!(d1[0], b1(&ring).unwrap());
    let d2 = gl_presentation_basis(&ring, 2).unwrap();
    assert_eq!(d2, vec![a2(&ring).unwrap()]);
    let d5 = gl_presentation_basis(&ring, 5).unwrap();
    assert_eq!(d5.len(), 4); // b1*a2^2, b1*a4, b3*a2, b5
}

#[test]
fn field_case_validation() {
    assert!(FieldCase::Fq1 { q: 7 }.validate().is_err());
    assert!(FieldCase::Fq3 { q: 9 }.validate().is_err());
    assert!(FieldCase::Fq1 { q: 15 }.validate().is_err());
    assert!(FieldCase::for_q(9).unwrap().uses_st_ring());
    assert!(!FieldCase::for_q(27).unwrap().uses_st_ring());
    assert!(FieldCase::for_q(2).is_err());
}

#[test]
fn virtual_inputs_use_signed_exponents() {
    // sgn - 1 on rank 1: c = (-1, 1)
    let input = literal(1, fq3(7), &[0, -2], 0);
    assert!(matches!(
        total_swc(&input, 6, false).unwrap_err(),
        MathError::NegativeMultiplicity(_)
    ));
    let report = total_swc(&input, 6, true).unwrap();
    assert!(report.multiplicities.is_virtual());
    // (1+v)^1 * 1^-1: total = (1+v1) * (1)^{-1}; c = (-1, 1) so the trivial
    // multiplicity contributes nothing and w = (1+v1)^1
    assert_eq!(report.total.to_string(), "1 + v1");

    // doubled difference with negative weight on the nontrivial string
    let input = literal(1, fq3(7), &[0, 2], 0);
    let report = total_swc(&input, 4, true).unwrap();
    // c = (1, -1): total = (1+v1)^(-1) = 1 + v1 + v1^2 + ...
    assert_eq!(report.total.to_string(), "1 + v1 + v1^2 + v1^3 + v1^4");
}
