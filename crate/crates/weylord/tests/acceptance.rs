//! End-to-end acceptance suite: one test per identity-level guarantee,
//! each printing a single PASS/FAIL line (run with `--nocapture` to see
//! them). Every check is exact; the time budgets are asserted too.

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use weylord::arith::{rat, rat_frac, GaussianRational, Rational};
use weylord::boards::{enumerate_boards, rook_numbers, rook_numbers_naive, word_to_board};
use weylord::polys::{
    cyco_polynomial, meixner_s_explicit, meixner_s_recurrence, moments_from_recurrence,
    secant_numbers, Polynomial, DEFAULT_MAX_PERMS,
};
use weylord::verify::{
    self, all_pass, compare_elements, verify_bd1, verify_bd2, verify_cyco, verify_eq21_sweep,
    verify_eq22, verify_koornwinder, verify_moments, verify_stirling, verify_t_closed,
};
use weylord::weyl::{
    normal_form_from_rook, normal_order_rewrite, normal_order_rook, substitute_polynomial,
    symmetric_t_brute, symmetric_t_closed, undn_expand, Letter, NormalForm, Word,
    DEFAULT_MAX_WORDS,
};

fn report(name: &str, ok: bool, elapsed: Duration, budget: Duration) {
    let within = elapsed <= budget;
    println!(
        "{}: {} ({} ms, budget {} ms)",
        name,
        if ok && within { "PASS" } else { "FAIL" },
        elapsed.as_millis(),
        budget.as_millis()
    );
    assert!(ok, "{name}: exact check failed");
    assert!(within, "{name}: took {elapsed:?}, budget {budget:?}");
}

fn l_samples() -> Vec<Rational> {
    vec![rat(0), rat(1), rat(2), rat_frac(1, 2), rat_frac(5, 2)]
}

#[test]
fn koornwinder_identity_to_n6() {
    let start = Instant::now();
    let ok = (0..=6).all(|n| {
        verify_koornwinder(n, DEFAULT_MAX_WORDS).unwrap().passed()
    });
    report("eq (1.3) koornwinder n<=6", ok, start.elapsed(), Duration::from_secs(5));
}

#[test]
fn bender_dunne_binomial_rule_to_n8() {
    let start = Instant::now();
    let ok = (0..=8).all(|n| verify_bd1(n).unwrap().passed());
    report("eq (1.5) bd1 n<=8", ok, start.elapsed(), Duration::from_secs(5));
}

#[test]
fn bender_dunne_l_parameter_rule() {
    let start = Instant::now();
    let ok = l_samples()
        .iter()
        .all(|l| (0..=6).all(|n| verify_bd2(n, l).unwrap().passed()));
    report(
        "eq (1.7) bd2 n<=6, five l samples",
        ok,
        start.elapsed(),
        Duration::from_secs(20),
    );
}

#[test]
fn rewrite_rook_oracle_equivalence() {
    let start = Instant::now();
    let mut ok = (0..=12).all(|len| verify_eq21_sweep(len).unwrap().passed());
    let mut rng = ChaCha8Rng::seed_from_u64(0x57e71);
    for _ in 0..1000 {
        let len = rng.gen_range(0..=18);
        let letters: Vec<Letter> = (0..len)
            .map(|_| if rng.gen_bool(0.5) { Letter::U } else { Letter::D })
            .collect();
        let w = Word::new(letters);
        if normal_order_rewrite(&w) != normal_order_rook(&w) {
            ok = false;
            break;
        }
    }
    report(
        "eq (2.1) rewrite = rook, all words len<=12 + 1000 random len<=18",
        ok,
        start.elapsed(),
        Duration::from_secs(30),
    );
}

#[test]
fn aggregate_rook_identity_to_n7() {
    let start = Instant::now();
    let ok = (0..=7).all(|n| verify_eq22(n).unwrap().passed());
    report("eq (2.2) aggregate rook n<=7", ok, start.elapsed(), Duration::from_secs(10));
}

#[test]
fn symmetric_product_closed_form() {
    let start = Instant::now();
    let mut ok = (0..=6).all(|n| verify_t_closed(n, DEFAULT_MAX_WORDS).unwrap().passed());
    // hand-expanded T_2
    let mut t2 = NormalForm::monomial(2, 2, GaussianRational::from_int(6));
    t2.insert_add((1, 1), GaussianRational::from_int(12));
    t2.insert_add((0, 0), GaussianRational::from_int(3));
    ok &= symmetric_t_brute(2, DEFAULT_MAX_WORDS).unwrap() == t2;
    ok &= symmetric_t_closed(2) == t2;
    report("eq (2.3) T_n brute = closed n<=6", ok, start.elapsed(), Duration::from_secs(30));
}

#[test]
fn stirling_expansions_to_n10() {
    let start = Instant::now();
    let ok = (0..=10).all(|n| verify_stirling(n).unwrap().passed());
    report("eq (2.4)/(2.5) U^nD^n n<=10", ok, start.elapsed(), Duration::from_secs(30));
}

#[test]
fn meixner_polynomial_table() {
    let start = Instant::now();
    let mut ok = meixner_s_recurrence(1) == Polynomial::x();
    ok &= meixner_s_recurrence(2) == Polynomial::from_ints(&[-1, 0, 1]);
    ok &= meixner_s_recurrence(3) == Polynomial::from_ints(&[0, -5, 0, 1]);
    ok &= meixner_s_recurrence(4) == Polynomial::from_ints(&[9, 0, -14, 0, 1]);
    for n in 0..=30 {
        ok &= meixner_s_explicit(n) == meixner_s_recurrence(n);
    }
    report("S_1..S_4 table, explicit = recurrence n<=30", ok, start.elapsed(), Duration::from_secs(30));
}

#[test]
fn odd_cycle_interpretation_to_n9() {
    let start = Instant::now();
    let mut ok = (0..=9).all(|n| verify_cyco(n, DEFAULT_MAX_PERMS).unwrap().passed());
    ok &= cyco_polynomial(9, DEFAULT_MAX_PERMS).unwrap() == meixner_s_recurrence(9);
    report("cyco interpretation n<=9", ok, start.elapsed(), Duration::from_secs(30));
}

#[test]
fn secant_moments_to_12() {
    let start = Instant::now();
    let mut ok = verify_moments(12).unwrap().passed();
    ok &= moments_from_recurrence(12) == secant_numbers(12);
    report("moments = secant numbers N<=12", ok, start.elapsed(), Duration::from_secs(30));
}

#[test]
fn mutation_sensitivity() {
    let start = Instant::now();
    let mut ok = true;

    // perturb each rook number of the Figure-1 word by +1 and -1 in turn;
    // every perturbation must flip eq21 to fail with a witness
    let w: Word = "DUDDUDU".parse().unwrap();
    let reference = normal_order_rewrite(&w);
    let rook = rook_numbers(&word_to_board(&w));
    let n = w.count(Letter::U);
    let m = w.count(Letter::D);
    for idx in 0..rook.0.len().min(n.min(m) as usize + 1) {
        for delta in [1i64, -1] {
            let mut perturbed = rook.clone();
            perturbed.0[idx] += BigInt::from(delta);
            let faulty = normal_form_from_rook(n, m, &perturbed);
            let r = compare_elements("eq21", Some(w.len() as u64), None, &reference, &faulty);
            ok &= !r.passed() && r.witness.is_some();
        }
    }

    // perturb each Stirling coefficient of the n = 4 row; the substitution
    // must stop reproducing U^4 D^4
    let ud = NormalForm::monomial(1, 1, GaussianRational::one());
    let target = NormalForm::monomial(4, 4, GaussianRational::one());
    let row = undn_expand(4);
    for idx in 0..row.len() {
        for delta in [1i64, -1] {
            let mut perturbed = row.clone();
            perturbed[idx] += BigInt::from(delta);
            let poly = Polynomial::new(
                perturbed.iter().map(|c| GaussianRational::from_bigint(c.clone())).collect(),
            );
            let faulty = substitute_polynomial(&poly, &ud);
            let r = compare_elements("stirling", Some(4), None, &faulty, &target);
            ok &= !r.passed() && r.witness.is_some();
        }
    }

    report("mutation sensitivity (rook and stirling faults)", ok, start.elapsed(), Duration::from_secs(30));
}

#[test]
fn rook_dp_matches_naive_oracle_5x5() {
    let start = Instant::now();
    let ok = enumerate_boards(5)
        .unwrap()
        .iter()
        .all(|b| rook_numbers(b) == rook_numbers_naive(b).unwrap());
    report("rook DP = naive counts, all boards in 5x5", ok, start.elapsed(), Duration::from_secs(30));
}

#[test]
fn full_suite_driver_passes() {
    let start = Instant::now();
    let reports = verify::verify_all(6, &l_samples(), DEFAULT_MAX_WORDS).unwrap();
    let ok = all_pass(&reports);
    report("verify_all n_max=6, five l samples", ok, start.elapsed(), Duration::from_secs(60));
    assert!(BigInt::one() <= BigInt::from(reports.len()));
}
