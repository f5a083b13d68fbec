//! Executable checks of the operator-ordering identities. Every check is
//! exact: pass means bit-identical canonical forms, never a tolerance, and
//! a failing check carries both mismatching values as its witness.

use std::fmt;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::{
    binomial, binomial_general, double_factorial_odd, factorial, rat, GaussianRational, Rational,
};
use crate::boards;
use crate::error::{Error, Result};
use crate::polys::{
    continuous_hahn_p, cyco_polynomial, meixner_s_recurrence, moments_from_recurrence,
    secant_numbers, Polynomial,
};
use crate::weyl::{
    bd_ordering_sum, normal_order_rewrite, normal_order_rook, substitute_polynomial,
    symmetric_t_brute, symmetric_t_closed, undn_expand, CanonicalElement, Letter, NormalForm, Word,
};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Status {
    Pass,
    Fail,
}

/// The two mismatching values of a failed check, in full.
#[derive(Clone, PartialEq, Debug)]
pub enum Witness {
    Elements { left: CanonicalElement, right: CanonicalElement },
    Integers { left: BigInt, right: BigInt },
    Rationals { left: Rational, right: Rational },
    Polynomials { left: Polynomial, right: Polynomial },
    Sequences { left: Vec<BigInt>, right: Vec<BigInt> },
}

impl Witness {
    fn to_json(&self) -> serde_json::Value {
        match self {
            Witness::Elements { left, right } => {
                serde_json::json!({"left": left.to_json(), "right": right.to_json()})
            }
            Witness::Integers { left, right } => {
                serde_json::json!({"left": left.to_string(), "right": right.to_string()})
            }
            Witness::Rationals { left, right } => {
                serde_json::json!({"left": left.to_string(), "right": right.to_string()})
            }
            Witness::Polynomials { left, right } => {
                serde_json::json!({"left": left.to_json(), "right": right.to_json()})
            }
            Witness::Sequences { left, right } => serde_json::json!({
                "left": left.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
                "right": right.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
            }),
        }
    }
}

#[derive(Clone, PartialEq, Debug)]
pub struct VerificationReport {
    pub identity: String,
    pub n: Option<u64>,
    pub l: Option<Rational>,
    pub status: Status,
    pub witness: Option<Witness>,
    pub elapsed: Duration,
}

impl VerificationReport {
    fn finish(
        identity: &str,
        n: Option<u64>,
        l: Option<Rational>,
        witness: Option<Witness>,
        start: Instant,
    ) -> Self {
        VerificationReport {
            identity: identity.to_string(),
            n,
            l,
            status: if witness.is_none() { Status::Pass } else { Status::Fail },
            witness,
            elapsed: start.elapsed(),
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "identity": self.identity,
            "n": self.n,
            "l": self.l.as_ref().map(|l| l.to_string()),
            "status": if self.passed() { "pass" } else { "fail" },
            "witness": self.witness.as_ref().map(|w| w.to_json()),
            "ms": self.elapsed.as_millis() as u64,
        })
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.identity)?;
        if let Some(n) = self.n {
            write!(f, " n={n}")?;
        }
        if let Some(l) = &self.l {
            write!(f, " l={l}")?;
        }
        write!(f, ": {}", if self.passed() { "pass" } else { "fail" })?;
        if let Some(Witness::Elements { left, right }) = &self.witness {
            write!(f, "\n  left:  {left}\n  right: {right}")?;
        }
        Ok(())
    }
}

/// Builds a report from two canonical elements that should be equal.
/// Fault-injection tests feed perturbed elements through here.
pub fn compare_elements(
    identity: &str,
    n: Option<u64>,
    l: Option<Rational>,
    left: &CanonicalElement,
    right: &CanonicalElement,
) -> VerificationReport {
    let start = Instant::now();
    let witness = (left != right).then(|| Witness::Elements {
        left: left.clone(),
        right: right.clone(),
    });
    VerificationReport::finish(identity, n, l, witness, start)
}

/// Rook expansion of one word: rewriting route vs rook route.
pub fn verify_eq21(w: &Word) -> Result<VerificationReport> {
    if w.len() > 18 {
        return Err(Error::CapExceeded(format!(
            "eq21 capped at word length 18, got {}",
            w.len()
        )));
    }
    let start = Instant::now();
    let left = normal_order_rewrite(w);
    let right = normal_order_rook(w);
    let witness = (left != right).then_some(Witness::Elements { left, right });
    Ok(VerificationReport::finish("eq21", Some(w.len() as u64), None, witness, start))
}

/// Rook expansion over every word of one length.
pub fn verify_eq21_sweep(len: u32) -> Result<VerificationReport> {
    if len > 18 {
        return Err(Error::CapExceeded(format!("eq21 capped at word length 18, got {len}")));
    }
    let start = Instant::now();
    let mut witness = None;
    'outer: for mask in 0u32..(1u32 << len) {
        let letters: Vec<Letter> = (0..len)
            .map(|i| if mask >> i & 1 == 1 { Letter::U } else { Letter::D })
            .collect();
        let w = Word::new(letters);
        let left = normal_order_rewrite(&w);
        let right = normal_order_rook(&w);
        if left != right {
            witness = Some(Witness::Elements { left, right });
            break 'outer;
        }
    }
    Ok(VerificationReport::finish("eq21", Some(u64::from(len)), None, witness, start))
}

/// The aggregate rook sum over the n x n box against its
/// closed form, for every 0 <= k <= n.
pub fn verify_eq22(n: u32) -> Result<VerificationReport> {
    if n > 8 {
        return Err(Error::CapExceeded(format!("eq22 capped at n = 8, got {n}")));
    }
    let start = Instant::now();
    let mut witness = None;
    for k in 0..=n {
        let summed = boards::aggregate_rook(n, k)?;
        let closed =
            factorial(2 * n) / ((BigInt::one() << k) * factorial(k) * factorial(n - k) * factorial(n - k));
        if summed != closed {
            witness = Some(Witness::Integers { left: summed, right: closed });
            break;
        }
    }
    Ok(VerificationReport::finish("eq22", Some(u64::from(n)), None, witness, start))
}

/// Brute-force word sum vs the closed form of T_n(D, U).
pub fn verify_t_closed(n: u32, max_words: u64) -> Result<VerificationReport> {
    if n > 7 {
        return Err(Error::CapExceeded(format!("t-closed capped at n = 7, got {n}")));
    }
    let start = Instant::now();
    let left = symmetric_t_brute(n, max_words)?;
    let right = symmetric_t_closed(n);
    let witness = (left != right).then_some(Witness::Elements { left, right });
    Ok(VerificationReport::finish("t-closed", Some(u64::from(n)), None, witness, start))
}

/// The Koornwinder identity, in D,U form:
/// T_n(D, U) = (-i)^n ((2n-1)!!/n!) S_n(i x) with x = 2UD + 1.
pub fn verify_koornwinder(n: u32, max_words: u64) -> Result<VerificationReport> {
    if n > 7 {
        return Err(Error::CapExceeded(format!("koornwinder capped at n = 7, got {n}")));
    }
    let start = Instant::now();
    let left = symmetric_t_brute(n, max_words)?;
    let s_n = meixner_s_recurrence(n);
    let ix = NormalForm::x_elem().scale(&GaussianRational::i());
    let scalar = minus_i_pow(n)
        * GaussianRational::from_rational(Rational::new(double_factorial_odd(n), factorial(n)));
    let right = substitute_polynomial(&s_n, &ix).scale(&scalar);
    let witness = (left != right).then_some(Witness::Elements { left, right });
    Ok(VerificationReport::finish("koornwinder", Some(u64::from(n)), None, witness, start))
}

/// The binomial ordering rule, in D,U form:
/// i^n sum_k C(n,k) D^k U^n D^{n-k} = S_n(i x).
pub fn verify_bd1(n: u32) -> Result<VerificationReport> {
    if n > 8 {
        return Err(Error::CapExceeded(format!("bd1 capped at n = 8, got {n}")));
    }
    let start = Instant::now();
    let row: Vec<Rational> = (0..=n).map(|k| Rational::from_integer(binomial(n, k))).collect();
    let left = bd_ordering_sum(n, &row)?.scale(&GaussianRational::i_pow(n));
    let ix = NormalForm::x_elem().scale(&GaussianRational::i());
    let right = substitute_polynomial(&meixner_s_recurrence(n), &ix);
    let witness = (left != right).then_some(Witness::Elements { left, right });
    Ok(VerificationReport::finish("bd1", Some(u64::from(n)), None, witness, start))
}

/// The l-parameter ordering rule, in D,U form:
/// i^n sum_k a_k^(n) D^k U^n D^{n-k} = D_n P_n((i/2) x; l).
/// The D_n closed form is checked on the way.
pub fn verify_bd2(n: u32, l: &Rational) -> Result<VerificationReport> {
    if n > 6 {
        return Err(Error::CapExceeded(format!("bd2 capped at n = 6, got {n}")));
    }
    let start = Instant::now();
    let (a_row, d_n) = crate::polys::bd_coefficients(n, l)?;
    let n_plus_l = rat(i64::from(n)) + l;
    let closed = binomial_general(&(rat(2 * i64::from(n)) + l + l), n) / binomial_general(&n_plus_l, n);
    if d_n != closed {
        let witness = Some(Witness::Rationals { left: d_n, right: closed });
        return Ok(VerificationReport::finish(
            "bd2",
            Some(u64::from(n)),
            Some(l.clone()),
            witness,
            start,
        ));
    }
    let left = bd_ordering_sum(n, &a_row)?.scale(&GaussianRational::i_pow(n));
    let p_n = continuous_hahn_p(n, l)?;
    let half_ix = NormalForm::x_elem()
        .scale(&GaussianRational::new(Rational::zero(), crate::arith::rat_frac(1, 2)));
    let right = substitute_polynomial(&p_n, &half_ix)
        .scale(&GaussianRational::from_rational(d_n));
    let witness = (left != right).then_some(Witness::Elements { left, right });
    Ok(VerificationReport::finish("bd2", Some(u64::from(n)), Some(l.clone()), witness, start))
}

/// Both the Stirling-sum substitution and the telescoping
/// product reproduce the monomial U^n D^n.
pub fn verify_stirling(n: u32) -> Result<VerificationReport> {
    if n > 10 {
        return Err(Error::CapExceeded(format!("stirling capped at n = 10, got {n}")));
    }
    let start = Instant::now();
    let target = NormalForm::monomial(n, n, GaussianRational::one());
    let ud = NormalForm::monomial(1, 1, GaussianRational::one());
    let row = undn_expand(n);
    let row_poly = Polynomial::new(row.iter().map(|c| GaussianRational::from_bigint(c.clone())).collect());
    let via_sum = substitute_polynomial(&row_poly, &ud);
    let mut via_product = NormalForm::one();
    for j in 1..=n {
        let mut factor = ud.clone();
        factor.insert_add((0, 0), GaussianRational::from_int(1 - i64::from(j)));
        via_product = via_product.mul(&factor);
    }
    let witness = if via_sum != target {
        Some(Witness::Elements { left: via_sum, right: target })
    } else if via_product != target {
        Some(Witness::Elements { left: via_product, right: target })
    } else {
        None
    };
    Ok(VerificationReport::finish("stirling", Some(u64::from(n)), None, witness, start))
}

/// The odd-cycle interpretation: the S_n tally over all permutations
/// equals the recurrence polynomial.
pub fn verify_cyco(n: u32, max_perms: u64) -> Result<VerificationReport> {
    if n > 9 {
        return Err(Error::CapExceeded(format!("cyco capped at n = 9, got {n}")));
    }
    let start = Instant::now();
    let left = cyco_polynomial(n, max_perms)?;
    let right = meixner_s_recurrence(n);
    let witness = (left != right).then_some(Witness::Polynomials { left, right });
    Ok(VerificationReport::finish("cyco", Some(u64::from(n)), None, witness, start))
}

/// The secant-number moment remark: the weighted-path moments equal the
/// series-reciprocal secant numbers.
pub fn verify_moments(big_n: u32) -> Result<VerificationReport> {
    if big_n > 12 {
        return Err(Error::CapExceeded(format!("moments capped at N = 12, got {big_n}")));
    }
    let start = Instant::now();
    let left = moments_from_recurrence(big_n);
    let right = secant_numbers(big_n);
    let witness = (left != right).then_some(Witness::Sequences { left, right });
    Ok(VerificationReport::finish("moments", Some(u64::from(big_n)), None, witness, start))
}

fn minus_i_pow(n: u32) -> GaussianRational {
    match n % 4 {
        0 => GaussianRational::one(),
        1 => -GaussianRational::i(),
        2 => -GaussianRational::one(),
        _ => GaussianRational::i(),
    }
}

/// Runs every verifier over its admissible range clipped to `n_max`, in a
/// fixed order (identity name, then parameters). Failures are reported,
/// not raised.
pub fn verify_all(
    n_max: u32,
    l_samples: &[Rational],
    max_words: u64,
) -> Result<Vec<VerificationReport>> {
    let mut reports = Vec::new();
    for n in 0..=n_max.min(8) {
        reports.push(verify_bd1(n)?);
    }
    for n in 0..=n_max.min(6) {
        for l in l_samples {
            reports.push(verify_bd2(n, l)?);
        }
    }
    for n in 0..=n_max.min(9) {
        reports.push(verify_cyco(n, crate::polys::DEFAULT_MAX_PERMS)?);
    }
    for len in 0..=(2 * n_max).min(12) {
        reports.push(verify_eq21_sweep(len)?);
    }
    for n in 0..=n_max.min(7) {
        reports.push(verify_eq22(n)?);
    }
    for n in 0..=n_max.min(6) {
        reports.push(verify_koornwinder(n, max_words)?);
    }
    reports.push(verify_moments((2 * n_max).min(12))?);
    for n in 0..=n_max.min(10) {
        reports.push(verify_stirling(n)?);
    }
    for n in 0..=n_max.min(6) {
        reports.push(verify_t_closed(n, max_words)?);
    }
    Ok(reports)
}

pub fn all_pass(reports: &[VerificationReport]) -> bool {
    reports.iter().all(VerificationReport::passed)
}
