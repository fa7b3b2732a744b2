//! The one-shot verification harness: every computational theorem the
//! calculator implements, re-checked from scratch with seeded randomness.
//!
//! Output is deterministic for a fixed seed: one line per check, a summary,
//! and (on failure) the first counterexample serialized as a job descriptor
//! on stderr.

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use swcalc::corpus::{self, CorpusCase};
use swcalc::gf2ring::{st_ring, v_ring};
use swcalc::reps::{self, RepFamily};
use swcalc::superchar::{
    brute_force_multiplicities, build_matrix, decompose, BinaryString, MultiplicityVector,
};
use swcalc::swc::{
    self, a2, check_closed_forms, is_spinorial, spinorial_from_m, total_swc, verify_detection,
    verify_square_property, DetectionCase, FieldCase, RepInput,
};
use swcalc::MathError;

use crate::descriptor::{descriptor_for_input, JobDescriptor};
use crate::tables;

pub struct VerifyConfig {
    pub seed: u64,
    pub max_n: usize,
    pub cases: usize,
    pub corrupt_involution: bool,
}

pub struct Failure {
    pub detail: String,
    pub counterexample: Option<JobDescriptor>,
}

pub struct CheckOutcome {
    pub name: &'static str,
    pub cases: usize,
    pub failures: Vec<Failure>,
    pub warnings: Vec<String>,
}

impl CheckOutcome {
    fn new(name: &'static str) -> Self {
        CheckOutcome { name, cases: 0, failures: Vec::new(), warnings: Vec::new() }
    }

    fn pass(&mut self) {
        self.cases += 1;
    }

    fn fail(&mut self, detail: String, counterexample: Option<JobDescriptor>) {
        self.cases += 1;
        self.failures.push(Failure { detail, counterexample });
    }

    fn check(&mut self, ok: bool, detail: impl FnOnce() -> String, cx: Option<JobDescriptor>) {
        if ok {
            self.pass();
        } else {
            self.fail(detail(), cx);
        }
    }
}

fn rng_for(config: &VerifyConfig, stream: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(config.seed.wrapping_mul(0x9e37_79b9_7f4a_7c15).wrapping_add(stream))
}

fn cx(input: &RepInput, max_degree: u64) -> Option<JobDescriptor> {
    Some(descriptor_for_input(input, max_degree, false))
}

/// `M^2 = 2^n I`, exactly, for every rank up to the configured bound.
fn check_involution(config: &VerifyConfig) -> CheckOutcome {
    let mut out = CheckOutcome::new("M^2=2^nI");
    for n in 1..=config.max_n {
        let m = build_matrix(n);
        let mut entries: Vec<Vec<BigInt>> =
            (0..=n).map(|i| m.row(i).to_vec()).collect();
        if config.corrupt_involution {
            entries[0][0] += 1; // test hook: break the identity on purpose
        }
        let scale = BigInt::from(1) << n;
        let mut ok = true;
        for i in 0..=n {
            for j in 0..=n {
                let mut acc = BigInt::from(0);
                for k in 0..=n {
                    acc += &entries[i][k] * &entries[k][j];
                }
                let expected = if i == j { scale.clone() } else { BigInt::from(0) };
                if acc != expected {
                    ok = false;
                }
            }
        }
        if !config.corrupt_involution {
            ok = ok && swcalc::superchar::verify_involution(n);
        }
        out.check(ok, || format!("M^2=2^nI fails at rank {n}"), None);
    }
    out
}

fn check_matrix_displays() -> CheckOutcome {
    let mut out = CheckOutcome::new("matrix-displays");
    let m1 = build_matrix(1);
    out.check(
        m1.row(0) == [BigInt::from(1), BigInt::from(1)]
            && m1.row(1) == [BigInt::from(1), BigInt::from(-1)],
        || "rank-1 table differs from [[1,1],[1,-1]]".into(),
        None,
    );
    let m2 = build_matrix(2);
    out.check(
        m2.row(0) == [1, 2, 1].map(BigInt::from)
            && m2.row(1) == [1, 0, -1].map(BigInt::from)
            && m2.row(2) == [1, -2, 1].map(BigInt::from),
        || "rank-2 table differs from [[1,2,1],[1,0,-1],[1,-2,1]]".into(),
        None,
    );
    out
}

fn check_decompose(config: &VerifyConfig) -> (CheckOutcome, CheckOutcome) {
    let mut roundtrip = CheckOutcome::new("decompose-roundtrip");
    let mut brute = CheckOutcome::new("decompose-brute-force");
    let mut rng = rng_for(config, 2);
    let per_rank = (config.cases / 2).max(1);
    for n in 1..=8usize {
        for _ in 0..per_rank {
            let c: Vec<BigInt> = (0..=n).map(|_| BigInt::from(rng.gen_range(0u32..50))).collect();
            let mult = MultiplicityVector::new(c).expect("rank >= 1");
            let a = mult.character_vector();
            let got = decompose(&a, false);
            roundtrip.check(
                got.as_ref().map(|g| g == &mult).unwrap_or(false),
                || format!("decompose(M*c) != c at rank {n}: c = {:?}", mult.values()),
                None,
            );
            let values = a.values().to_vec();
            let by_string = brute_force_multiplicities(n, |g| values[g.weight()].clone());
            let agrees = match by_string {
                Ok(r) => BinaryString::all(n).all(|l| &r[l.bits() as usize] == mult.value(l.weight())),
                Err(_) => false,
            };
            brute.check(
                agrees,
                || format!("inner-product oracle disagrees at rank {n}: c = {:?}", mult.values()),
                None,
            );
        }
    }
    (roundtrip, brute)
}

fn check_closed_forms_for(
    config: &VerifyConfig,
    name: &'static str,
    case: CorpusCase,
    stream: u64,
    count: usize,
) -> CheckOutcome {
    let mut out = CheckOutcome::new(name);
    let mut rng = rng_for(config, stream);
    for _ in 0..count {
        let input = corpus::random_genuine_input(&mut rng, case, 6);
        match check_closed_forms(&input, 6, false) {
            Ok(check) => {
                if !check.w2_symmetric_matches || !check.w4_symmetric_matches.unwrap_or(true) {
                    out.warnings.push(format!(
                        "symmetric reading differs from restricted reading for {:?}",
                        descriptor_for_input(&input, 6, false).rep
                    ));
                }
                out.check(
                    check.restricted_ok(),
                    || format!("closed forms disagree with the total class: {check:?}"),
                    cx(&input, 6),
                );
            }
            Err(e) => out.fail(format!("closed-form check errored: {e}"), cx(&input, 6)),
        }
    }
    out
}

fn check_square_property(config: &VerifyConfig) -> CheckOutcome {
    let mut out = CheckOutcome::new("square-property");
    let mut rng = rng_for(config, 6);
    for _ in 0..(config.cases / 2).max(1) {
        let input = corpus::random_genuine_input(&mut rng, CorpusCase::Fq1, 6);
        match verify_square_property(&input, 8, false) {
            Ok(true) => out.pass(),
            Ok(false) => out.fail("restriction is not the expected square".into(), cx(&input, 8)),
            Err(e) => out.fail(format!("square property errored: {e}"), cx(&input, 8)),
        }
    }
    out
}

fn check_spinoriality(config: &VerifyConfig) -> CheckOutcome {
    let mut out = CheckOutcome::new("spinoriality-lift");
    let mut rng = rng_for(config, 7);
    for case in [CorpusCase::Fq1, CorpusCase::Fq3] {
        for _ in 0..(config.cases / 2).max(1) {
            let input = corpus::random_genuine_input(&mut rng, case, 6);
            let ring = if input.case.uses_st_ring() {
                st_ring(input.n, Some(6)).unwrap()
            } else {
                v_ring(input.n, Some(6)).unwrap()
            };
            let verdict = is_spinorial(&input);
            let poly = swc::w2(&input, &ring)
                .and_then(|w2| Ok(w2.add(&swc::w1(&input, &ring)?.square()).map_err(MathError::from)?));
            let ok = match (verdict, poly) {
                (Ok(v), Ok(p)) => v == p.is_zero(),
                _ => false,
            };
            out.check(
                ok,
                || "congruence verdict disagrees with w2 + w1^2".into(),
                cx(&input, 6),
            );
        }
    }
    // explicit m_pi = 0..7 for both congruence classes
    let fq1_expected = [true, false, false, false, true, false, false, false];
    let fq3_expected = [true, false, false, true, true, false, false, true];
    for m in 0u64..8 {
        let c1 = FieldCase::Fq1 { q: 5 };
        out.check(
            spinorial_from_m(&c1, &BigInt::from(m)) == fq1_expected[m as usize],
            || format!("q=1 (mod 4) verdict wrong at m_pi={m}"),
            None,
        );
        let input = corpus::rank_one_with_m_pi(c1, m);
        let ring = st_ring(1, Some(6)).unwrap();
        if m % 2 == 0 {
            let poly = swc::w2(&input, &ring)
                .unwrap()
                .add(&swc::w1(&input, &ring).unwrap().square())
                .unwrap();
            out.check(
                poly.is_zero() == fq1_expected[m as usize],
                || format!("q=1 (mod 4) polynomial check wrong at m_pi={m}"),
                cx(&input, 6),
            );
        } else {
            // odd m_pi cannot come from a genuine q=1 (mod 4) input; the
            // closed form must refuse with InconsistentParity
            out.check(
                matches!(swc::w2(&input, &ring), Err(MathError::InconsistentParity(_))),
                || format!("expected InconsistentParity for odd m_pi={m}"),
                cx(&input, 6),
            );
        }
        let c3 = FieldCase::Fq3 { q: 7 };
        out.check(
            spinorial_from_m(&c3, &BigInt::from(m)) == fq3_expected[m as usize],
            || format!("q=3 (mod 4) verdict wrong at m_pi={m}"),
            None,
        );
        let input = corpus::rank_one_with_m_pi(c3, m);
        let ring = v_ring(1, Some(6)).unwrap();
        let poly = swc::w2(&input, &ring)
            .unwrap()
            .add(&swc::w1(&input, &ring).unwrap().square())
            .unwrap();
        out.check(
            poly.is_zero() == fq3_expected[m as usize],
            || format!("q=3 (mod 4) polynomial check wrong at m_pi={m}"),
            cx(&input, 6),
        );
    }
    out
}

fn check_detection() -> (CheckOutcome, CheckOutcome) {
    let mut q1 = CheckOutcome::new("detection-q1");
    for (m, n) in [(3usize, 2usize), (4, 3), (5, 3)] {
        let max_degree = 2 * n as u64 - 2;
        match verify_detection(DetectionCase::Q1, m, n, max_degree) {
            Ok(report) => q1.check(
                report.injective_below_bound(),
                || format!("kernel below the bound for (m, n) = ({m}, {n}): {:?}", report.degrees),
                None,
            ),
            Err(e) => q1.fail(format!("detection errored for ({m}, {n}): {e}"), None),
        }
    }
    let mut q3 = CheckOutcome::new("detection-q3");
    for n in 2usize..=5 {
        for m in n..=(n + 2) {
            let max_degree = n as u64 - 1;
            match verify_detection(DetectionCase::Q3, m, n, max_degree) {
                Ok(report) => q3.check(
                    report.injective_below_bound(),
                    || format!("kernel below the bound for (m, n) = ({m}, {n}): {:?}", report.degrees),
                    None,
                ),
                Err(e) => q3.fail(format!("detection errored for ({m}, {n}): {e}"), None),
            }
        }
    }
    (q1, q3)
}

fn check_principal_series() -> (CheckOutcome, CheckOutcome, CheckOutcome) {
    let mut w2_zero = CheckOutcome::new("principal-series-w2");
    for n in [3usize, 4, 5] {
        for q in [5u64, 7, 9, 11, 13] {
            for exps in reps::real_exponent_patterns(n, q).expect("valid q") {
                let input = reps::to_rep_input(&RepFamily::PrincipalSeries {
                    n,
                    q,
                    exponents: exps.clone(),
                })
                .expect("real pattern");
                let ring = if input.case.uses_st_ring() {
                    st_ring(n, Some(4)).unwrap()
                } else {
                    v_ring(n, Some(4)).unwrap()
                };
                let w2 = swc::w2(&input, &ring);
                w2_zero.check(
                    w2.as_ref().map(|w| w.is_zero()).unwrap_or(false),
                    || format!("w2 != 0 for n={n}, q={q}, exponents {exps:?}"),
                    cx(&input, 4),
                );
            }
        }
    }
    let mut w4_zero = CheckOutcome::new("principal-series-w4");
    for n in [5usize, 6] {
        for q in [5u64, 13, 17] {
            for exps in reps::real_exponent_patterns(n, q).expect("valid q") {
                let input = reps::to_rep_input(&RepFamily::PrincipalSeries {
                    n,
                    q,
                    exponents: exps.clone(),
                })
                .expect("real pattern");
                let ring = st_ring(n, Some(4)).unwrap();
                let w4 = swc::w4_q1(&input, &ring);
                w4_zero.check(
                    w4.as_ref().map(|w| w.is_zero()).unwrap_or(false),
                    || format!("w4 != 0 for n={n}, q={q}, exponents {exps:?}"),
                    cx(&input, 4),
                );
            }
        }
    }
    let mut cases = CheckOutcome::new("principal-series-w4-cases");
    match tables::run_tables(1) {
        Ok(t) => {
            for row in &t.principal_series_w4_cases {
                cases.check(
                    row.matched,
                    || format!("case list row mismatched: q={} n={} {:?}", row.q, row.n, row.exponents),
                    None,
                );
            }
        }
        Err(e) => cases.fail(format!("case list errored: {e}"), None),
    }
    (w2_zero, w4_zero, cases)
}

fn check_tables() -> (CheckOutcome, CheckOutcome) {
    let mut cuspidal = CheckOutcome::new("cuspidal-table");
    let mut steinberg = CheckOutcome::new("steinberg-table");
    match tables::run_tables(2) {
        Ok(t) => {
            for row in &t.cuspidal_w4 {
                cuspidal.check(
                    row.all_match,
                    || format!("cuspidal table row {} mismatched", row.label),
                    None,
                );
            }
            for row in &t.steinberg_w4 {
                steinberg.check(
                    row.all_match,
                    || format!("steinberg table row {} mismatched", row.label),
                    None,
                );
            }
        }
        Err(e) => {
            cuspidal.fail(format!("tables errored: {e}"), None);
            steinberg.fail(format!("tables errored: {e}"), None);
        }
    }
    (cuspidal, steinberg)
}

fn check_steinberg_example() -> CheckOutcome {
    let mut out = CheckOutcome::new("steinberg-gl2-f5");
    let run = || -> Result<(), String> {
        let input = reps::to_rep_input(&RepFamily::Steinberg { n: 2, q: 5 })
            .map_err(|e| e.to_string())?;
        let expected_chars: Vec<BigInt> = [5, 1, 5].map(BigInt::from).to_vec();
        if input.chars.values() != expected_chars {
            return Err(format!("character vector is {:?}", input.chars.values()));
        }
        let report = total_swc(&input, 12, false).map_err(|e| e.to_string())?;
        let expected_mult: Vec<BigInt> = [3, 0, 2].map(BigInt::from).to_vec();
        if report.multiplicities.values() != expected_mult {
            return Err(format!("multiplicities are {:?}", report.multiplicities.values()));
        }
        if report.total.to_string() != "1 + t1 + t2" {
            return Err(format!("total class is {}", report.total));
        }
        let w2 = swc::w2(&input, &report.ring).map_err(|e| e.to_string())?;
        if w2 != a2(&report.ring).map_err(|e| e.to_string())? {
            return Err(format!("w2 is {w2}, expected a_2"));
        }
        if report.invariants.m_pi != BigInt::from(2) {
            return Err(format!("m_pi is {}", report.invariants.m_pi));
        }
        Ok(())
    };
    match run() {
        Ok(()) => out.pass(),
        Err(detail) => out.fail(detail, None),
    }
    out
}

fn check_torus_non_detection() -> CheckOutcome {
    let mut out = CheckOutcome::new("torus-non-detection");
    for q in [5u64, 7, 9, 11, 13, 25, 27] {
        for j in [1i64, 3, 5] {
            let coeff = reps::torus_w2_coefficient(q, j);
            let input = reps::to_rep_input(&RepFamily::DetTwist { n: 2, q, j })
                .expect("valid det twist");
            let ring = if input.case.uses_st_ring() {
                st_ring(2, Some(4)).unwrap()
            } else {
                v_ring(2, Some(4)).unwrap()
            };
            let w2 = swc::w2(&input, &ring).expect("closed form");
            // restriction coefficient vanishes while the class itself does not
            out.check(
                matches!(coeff, Ok(0)) && !w2.is_zero(),
                || format!("non-detection fails at q={q}, j={j}: coeff={coeff:?}, w2={w2}"),
                cx(&input, 4),
            );
        }
    }
    out
}

pub fn run_verify(config: &VerifyConfig) -> Vec<CheckOutcome> {
    let mut outcomes = Vec::new();
    outcomes.push(check_involution(config));
    outcomes.push(check_matrix_displays());
    let (roundtrip, brute) = check_decompose(config);
    outcomes.push(roundtrip);
    outcomes.push(brute);
    outcomes.push(check_closed_forms_for(config, "closed-forms-q1", CorpusCase::Fq1, 3, config.cases));
    outcomes.push(check_closed_forms_for(config, "closed-forms-q3", CorpusCase::Fq3, 4, config.cases));
    outcomes.push(check_closed_forms_for(
        config,
        "closed-forms-real",
        CorpusCase::Real,
        5,
        (config.cases / 4).max(1),
    ));
    outcomes.push(check_square_property(config));
    outcomes.push(check_spinoriality(config));
    let (dq1, dq3) = check_detection();
    outcomes.push(dq1);
    outcomes.push(dq3);
    let (w2z, w4z, cases) = check_principal_series();
    outcomes.push(w2z);
    outcomes.push(w4z);
    outcomes.push(cases);
    let (cusp, stein) = check_tables();
    outcomes.push(cusp);
    outcomes.push(stein);
    outcomes.push(check_steinberg_example());
    outcomes.push(check_torus_non_detection());
    outcomes
}

pub fn render_report(outcomes: &[CheckOutcome]) -> String {
    let mut out = String::new();
    for o in outcomes {
        if o.failures.is_empty() {
            out.push_str(&format!("check {}: PASS ({} cases)\n", o.name, o.cases));
        } else {
            out.push_str(&format!(
                "check {}: FAIL ({}/{} cases): {}\n",
                o.name,
                o.failures.len(),
                o.cases,
                o.failures[0].detail
            ));
        }
        for w in &o.warnings {
            out.push_str(&format!("  warning: {w}\n"));
        }
    }
    let failed: usize = outcomes.iter().filter(|o| !o.failures.is_empty()).count();
    let total_cases: usize = outcomes.iter().map(|o| o.cases).sum();
    if failed == 0 {
        out.push_str(&format!(
            "verify: all {} checks passed ({} cases)\n",
            outcomes.len(),
            total_cases
        ));
    } else {
        out.push_str(&format!("verify: {failed}/{} checks FAILED\n", outcomes.len()));
    }
    out
}

/// The first counterexample among the failures, as descriptor JSON.
pub fn first_counterexample(outcomes: &[CheckOutcome]) -> Option<String> {
    outcomes
        .iter()
        .flat_map(|o| o.failures.iter())
        .find_map(|f| f.counterexample.as_ref())
        .map(|d| serde_json::to_string_pretty(d).expect("descriptor serializes"))
}
