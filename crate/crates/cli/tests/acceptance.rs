//! Acceptance suite: one test per acceptance criterion, each printing a
//! PASS line (visible with `--nocapture`) and enforcing the stated runtime
//! budget where one applies.
//!
//! Run with `cargo test -p swcalc-cli --test acceptance`.

use std::process::Command;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use swcalc::corpus::{self, CorpusCase};
use swcalc::gf2ring::{st_ring, v_ring};
use swcalc::reps::{self, RepFamily};
use swcalc::superchar::{
    brute_force_multiplicities, decompose, verify_involution, BinaryString, MultiplicityVector,
};
use swcalc::swc::{
    self, check_closed_forms, is_spinorial, spinorial_from_m, total_swc, verify_detection,
    verify_square_property, DetectionCase, FieldCase, RepInput,
};
use swcalc::MathError;

use swcalc_cli::tables;

const CORPUS_SEED: u64 = 0xACCE97;

fn genuine_corpus(case: CorpusCase, count: usize) -> Vec<RepInput> {
    // criterion 4/5/8 share this corpus: `count` seeded genuine inputs, n <= 6
    let mut rng = ChaCha8Rng::seed_from_u64(CORPUS_SEED ^ case as u64);
    (0..count).map(|_| corpus::random_genuine_input(&mut rng, case, 6)).collect()
}

fn budget(name: &str, started: Instant, limit: Duration) {
    let elapsed = started.elapsed();
    assert!(
        elapsed <= limit,
        "{name} exceeded its runtime budget: {elapsed:?} > {limit:?}"
    );
}

#[test]
fn criterion_01_involution() {
    let started = Instant::now();
    for n in 1..=12 {
        assert!(verify_involution(n), "M^2 = 2^n I fails at rank {n}");
    }
    budget("criterion 1", started, Duration::from_secs(1));
    println!("ACCEPTANCE criterion 1 (supercharacter involution, n <= 12): PASS");
}

#[test]
fn criterion_02_matrix_displays() {
    let run = |n: &str| {
        let out = Command::new(env!("CARGO_BIN_EXE_swc"))
            .args(["matrix", n])
            .output()
            .expect("binary runs");
        assert!(out.status.success());
        String::from_utf8(out.stdout).expect("utf-8")
    };
    assert_eq!(run("1"), "1 1\n1 -1\n");
    assert_eq!(run("2"), "1 2 1\n1 0 -1\n1 -2 1\n");
    println!("ACCEPTANCE criterion 2 (rank 1 and 2 table displays, bit-exact): PASS");
}

#[test]
fn criterion_03_decomposition_oracle() {
    let started = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(CORPUS_SEED + 3);
    for n in 1..=8usize {
        for _ in 0..100 {
            let c: Vec<BigInt> = (0..=n).map(|_| BigInt::from(rng.gen_range(0u32..50))).collect();
            let mult = MultiplicityVector::new(c).unwrap();
            let a = mult.character_vector();
            assert_eq!(decompose(&a, false).unwrap(), mult, "roundtrip at rank {n}");
            let values = a.values().to_vec();
            let r = brute_force_multiplicities(n, |g| values[g.weight()].clone()).unwrap();
            for l in BinaryString::all(n) {
                assert_eq!(
                    &r[l.bits() as usize],
                    mult.value(l.weight()),
                    "oracle disagrees at rank {n}, string {:#b}",
                    l.bits()
                );
            }
        }
    }
    budget("criterion 3", started, Duration::from_secs(10));
    println!("ACCEPTANCE criterion 3 (decompose roundtrip + inner-product oracle, 100/rank): PASS");
}

#[test]
fn criterion_04_closed_form_consistency() {
    let started = Instant::now();
    for case in [CorpusCase::Fq1, CorpusCase::Fq3] {
        for input in genuine_corpus(case, 200) {
            let check = check_closed_forms(&input, 6, false).unwrap();
            assert!(check.restricted_ok(), "restricted closed forms fail: {input:?}");
            assert!(check.all_ok(), "symmetric closed forms fail: {input:?}");
        }
    }
    budget("criterion 4", started, Duration::from_secs(60));
    println!("ACCEPTANCE criterion 4 (closed forms vs total class, 200/case, exact): PASS");
}

#[test]
fn criterion_05_perfect_square_property() {
    for input in genuine_corpus(CorpusCase::Fq1, 200) {
        assert!(
            verify_square_property(&input, 6, false).unwrap(),
            "square property fails: {input:?}"
        );
    }
    println!("ACCEPTANCE criterion 5 (restriction is the expected perfect square): PASS");
}

#[test]
fn criterion_06_principal_series() {
    // w2 = 0 for ranks 3..5, exhaustively over achievable sign patterns
    for n in [3usize, 4, 5] {
        for q in [5u64, 7, 9, 11, 13] {
            for exps in reps::real_exponent_patterns(n, q).unwrap() {
                let input = reps::to_rep_input(&RepFamily::PrincipalSeries {
                    n,
                    q,
                    exponents: exps.clone(),
                })
                .unwrap();
                let ring = if input.case.uses_st_ring() {
                    st_ring(n, Some(4)).unwrap()
                } else {
                    v_ring(n, Some(4)).unwrap()
                };
                assert!(
                    swc::w2(&input, &ring).unwrap().is_zero(),
                    "w2 != 0: n={n} q={q} exps={exps:?}"
                );
            }
        }
    }
    // w4 = 0 for ranks 5 and 6 over q = 1 (mod 4)
    for n in [5usize, 6] {
        for q in [5u64, 13, 17] {
            for exps in reps::real_exponent_patterns(n, q).unwrap() {
                let input = reps::to_rep_input(&RepFamily::PrincipalSeries {
                    n,
                    q,
                    exponents: exps.clone(),
                })
                .unwrap();
                let ring = st_ring(n, Some(4)).unwrap();
                assert!(
                    swc::w4_q1(&input, &ring).unwrap().is_zero(),
                    "w4 != 0: n={n} q={q} exps={exps:?}"
                );
            }
        }
    }
    // the rank-3/rank-4 case list for q in {17, 5, 13}, one branch each
    let t = tables::run_tables(1).unwrap();
    assert!(!t.principal_series_w4_cases.is_empty());
    for row in &t.principal_series_w4_cases {
        assert!(
            row.matched,
            "case list mismatch: q={} n={} exps={:?} stated={:?} computed={:?}",
            row.q, row.n, row.exponents, row.stated, row.computed
        );
    }
    println!("ACCEPTANCE criterion 6 (principal series w2/w4 vanishing + case lists): PASS");
}

#[test]
fn criterion_07_tables() {
    let t = tables::run_tables(2).unwrap();
    for row in &t.cuspidal_w4 {
        assert!(row.all_match, "cuspidal row {} mismatched: {:?}", row.label, row.samples);
        assert!(row.fallback_mod8.is_none());
    }
    for row in &t.steinberg_w4 {
        assert!(row.all_match, "steinberg row {} mismatched: {:?}", row.label, row.samples);
        assert!(row.fallback_mod8.is_none());
    }
    println!("ACCEPTANCE criterion 7 (cuspidal + steinberg parity tables, residues mod 16): PASS");
}

#[test]
fn criterion_08_spinoriality() {
    // over the criterion-4 corpus
    for case in [CorpusCase::Fq1, CorpusCase::Fq3] {
        for input in genuine_corpus(case, 200) {
            let ring = if input.case.uses_st_ring() {
                st_ring(input.n, Some(6)).unwrap()
            } else {
                v_ring(input.n, Some(6)).unwrap()
            };
            let poly = swc::w2(&input, &ring)
                .unwrap()
                .add(&swc::w1(&input, &ring).unwrap().square())
                .unwrap();
            assert_eq!(
                poly.is_zero(),
                is_spinorial(&input).unwrap(),
                "spinoriality mismatch: {input:?}"
            );
        }
    }
    // explicit m_pi = 0..7 for both congruence classes
    let fq1_expected = [true, false, false, false, true, false, false, false];
    let fq3_expected = [true, false, false, true, true, false, false, true];
    for m in 0u64..8 {
        let c1 = FieldCase::Fq1 { q: 5 };
        assert_eq!(spinorial_from_m(&c1, &BigInt::from(m)), fq1_expected[m as usize]);
        let input = corpus::rank_one_with_m_pi(c1, m);
        let ring = st_ring(1, Some(6)).unwrap();
        if m % 2 == 0 {
            let poly = swc::w2(&input, &ring)
                .unwrap()
                .add(&swc::w1(&input, &ring).unwrap().square())
                .unwrap();
            assert_eq!(poly.is_zero(), fq1_expected[m as usize], "m_pi={m}");
        } else {
            // odd m_pi is impossible for a genuine q = 1 (mod 4) input and
            // the closed form must say so
            assert!(matches!(
                swc::w2(&input, &ring),
                Err(MathError::InconsistentParity(_))
            ));
        }
        let c3 = FieldCase::Fq3 { q: 7 };
        assert_eq!(spinorial_from_m(&c3, &BigInt::from(m)), fq3_expected[m as usize]);
        let input = corpus::rank_one_with_m_pi(c3, m);
        let ring = v_ring(1, Some(6)).unwrap();
        let poly = swc::w2(&input, &ring)
            .unwrap()
            .add(&swc::w1(&input, &ring).unwrap().square())
            .unwrap();
        assert_eq!(poly.is_zero(), fq3_expected[m as usize], "m_pi={m}");
    }
    println!("ACCEPTANCE criterion 8 (spinoriality iff w2 + w1^2 = 0, plus m_pi = 0..7): PASS");
}

#[test]
fn criterion_09_detection_bounds() {
    let started = Instant::now();
    for (m, n) in [(3usize, 2usize), (4, 3), (5, 3)] {
        let report = verify_detection(DetectionCase::Q1, m, n, 2 * n as u64 - 2).unwrap();
        for d in &report.degrees {
            assert_eq!(
                d.kernel_dim, 0,
                "q=1 (mod 4) detection kernel at (m,n)=({m},{n}), degree {}",
                d.degree
            );
        }
    }
    for n in 2usize..=5 {
        for m in n..=(n + 2) {
            let report = verify_detection(DetectionCase::Q3, m, n, n as u64 - 1).unwrap();
            for d in &report.degrees {
                assert_eq!(
                    d.kernel_dim, 0,
                    "q=3 (mod 4) detection kernel at (m,n)=({m},{n}), degree {}",
                    d.degree
                );
            }
        }
    }
    budget("criterion 9", started, Duration::from_secs(60));
    println!("ACCEPTANCE criterion 9 (detection bounds, exact kernels): PASS");
}

#[test]
fn criterion_10_steinberg_worked_example() {
    let input = reps::to_rep_input(&RepFamily::Steinberg { n: 2, q: 5 }).unwrap();
    assert_eq!(input.chars.values(), [5, 1, 5].map(BigInt::from));
    let report = total_swc(&input, 12, false).unwrap();
    assert_eq!(report.multiplicities.values(), [3, 0, 2].map(BigInt::from));
    assert_eq!(report.total.to_string(), "1 + t1 + t2");
    // w2 = a_2: the q = 5 (mod 8), n even branch
    let w2 = swc::w2(&input, &report.ring).unwrap();
    assert_eq!(w2, swc::a2(&report.ring).unwrap());
    assert_eq!(w2, report.total.graded_component(2));
    println!("ACCEPTANCE criterion 10 (Steinberg GL_2(F_5) end-to-end): PASS");
}

#[test]
fn criterion_11_torus_non_detection() {
    for q in [5u64, 7, 9, 11, 13, 25, 27, 49] {
        for j in [1i64, 3, 5, 7] {
            assert_eq!(reps::torus_w2_coefficient(q, j).unwrap(), 0, "q={q} j={j}");
            let input = reps::to_rep_input(&RepFamily::DetTwist { n: 2, q, j }).unwrap();
            let ring = if input.case.uses_st_ring() {
                st_ring(2, Some(4)).unwrap()
            } else {
                v_ring(2, Some(4)).unwrap()
            };
            assert!(
                !swc::w2(&input, &ring).unwrap().is_zero(),
                "w2 of the odd det twist must be nonzero: q={q} j={j}"
            );
        }
    }
    println!("ACCEPTANCE criterion 11 (anisotropic torus non-detection): PASS");
}
