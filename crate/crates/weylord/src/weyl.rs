//! The Weyl algebra on two generators D, U with DU - UD = 1.
//!
//! Elements are kept in the canonical normally ordered form
//! sum c_{r,s} U^r D^s; raw words exist only as input. Normal ordering is
//! available through two independent routes: exhaustive rewriting of
//! DU -> UD + 1 and rook counting on the associated Ferrers board.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::arith::{binomial, factorial, GaussianRational, Rational};
use crate::boards::{rook_numbers, word_to_board, RookVector};
use crate::error::{Error, Result};
use crate::polys::Polynomial;

/// Default cap on the number of words a brute-force enumeration may visit.
pub const DEFAULT_MAX_WORDS: u64 = 1_000_000;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Letter {
    D,
    U,
}

/// A finite word over {D, U}; the empty word is the identity.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    pub fn new(letters: Vec<Letter>) -> Self {
        Word { letters }
    }

    pub fn empty() -> Self {
        Word { letters: Vec::new() }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn count(&self, letter: Letter) -> u32 {
        self.letters.iter().filter(|&&l| l == letter).count() as u32
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &l in &self.letters {
            f.write_str(if l == Letter::D { "D" } else { "U" })?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut letters = Vec::with_capacity(s.len());
        for c in s.trim().chars() {
            match c {
                'D' => letters.push(Letter::D),
                'U' => letters.push(Letter::U),
                _ => return Err(Error::Parse(format!("word may contain only D and U, got {c:?}"))),
            }
        }
        Ok(Word { letters })
    }
}

/// Canonical sparse normal form: (u_exp, d_exp) -> coefficient, zero
/// coefficients never stored.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct NormalForm {
    terms: BTreeMap<(u32, u32), GaussianRational>,
}

/// General algebra element; same representation as a word's normal form.
pub type CanonicalElement = NormalForm;

impl NormalForm {
    pub fn zero() -> Self {
        NormalForm::default()
    }

    pub fn one() -> Self {
        NormalForm::monomial(0, 0, GaussianRational::one())
    }

    pub fn monomial(u: u32, d: u32, coeff: GaussianRational) -> Self {
        let mut nf = NormalForm::default();
        nf.insert_add((u, d), coeff);
        nf
    }

    /// The element x = DU + UD = 2UD + 1.
    pub fn x_elem() -> Self {
        let mut nf = NormalForm::monomial(1, 1, GaussianRational::from_int(2));
        nf.insert_add((0, 0), GaussianRational::one());
        nf
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending (u, d) order.
    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &GaussianRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, u: u32, d: u32) -> GaussianRational {
        self.terms.get(&(u, d)).cloned().unwrap_or_else(GaussianRational::zero)
    }

    pub fn insert_add(&mut self, key: (u32, u32), coeff: GaussianRational) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(key).or_insert_with(GaussianRational::zero);
        *entry = entry.clone() + coeff;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn add(&self, other: &NormalForm) -> NormalForm {
        let mut out = self.clone();
        for (&key, c) in other.terms() {
            out.insert_add(key, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &NormalForm) -> NormalForm {
        self.add(&other.scale(&-GaussianRational::one()))
    }

    pub fn scale(&self, c: &GaussianRational) -> NormalForm {
        let mut out = NormalForm::default();
        for (&key, v) in self.terms() {
            out.insert_add(key, c * v);
        }
        out
    }

    pub fn mul(&self, other: &NormalForm) -> NormalForm {
        let mut out = NormalForm::default();
        for (&a, ca) in self.terms() {
            for (&b, cb) in other.terms() {
                let prod = monomial_product(a, b);
                let weight = ca * cb;
                for (&key, v) in prod.terms() {
                    out.insert_add(key, &weight * v);
                }
            }
        }
        out
    }

    /// JSON per the wire schema: array of {"u", "d", "re", "im"} sorted by
    /// descending (u, d).
    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<serde_json::Value> = self
            .terms
            .iter()
            .rev()
            .map(|(&(u, d), c)| {
                serde_json::json!({
                    "u": u,
                    "d": d,
                    "re": c.re.to_string(),
                    "im": c.im.to_string(),
                })
            })
            .collect();
        serde_json::Value::Array(terms)
    }
}

fn monomial_text(u: u32, d: u32) -> String {
    let u_str = match u {
        0 => String::new(),
        1 => "U".to_string(),
        _ => format!("U^{u}"),
    };
    let d_str = match d {
        0 => String::new(),
        1 => "D".to_string(),
        _ => format!("D^{d}"),
    };
    if u == 1 && d > 0 {
        format!("{u_str} {d_str}")
    } else {
        format!("{u_str}{d_str}")
    }
}

impl fmt::Display for NormalForm {
    /// Terms in descending (u, d) order, e.g.
    /// "U^3D^4 + 8 U^2D^3 + 14 U D^2 + 4 D".
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (&(u, d), c) in self.terms.iter().rev() {
            let (negative, mag) = if c.is_real() && c.re.is_negative() {
                (true, GaussianRational::from_rational(-&c.re))
            } else {
                (false, c.clone())
            };
            if first {
                if negative {
                    f.write_str("-")?;
                }
                first = false;
            } else if negative {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            let op = monomial_text(u, d);
            let coeff_str = if mag == GaussianRational::one() && !op.is_empty() {
                String::new()
            } else if mag.is_real() || mag.re.is_zero() {
                mag.to_string()
            } else {
                format!("({mag})")
            };
            match (coeff_str.is_empty(), op.is_empty()) {
                (false, false) => write!(f, "{coeff_str} {op}")?,
                (false, true) => f.write_str(&coeff_str)?,
                (true, _) => f.write_str(&op)?,
            }
        }
        Ok(())
    }
}

/// Normal form of (U^{a.0} D^{a.1}) (U^{b.0} D^{b.1}) by the reordering
/// formula D^k U^n = sum_j C(k,j) n^(j) U^{n-j} D^{k-j}.
pub fn monomial_product(a: (u32, u32), b: (u32, u32)) -> NormalForm {
    let (u1, d1) = a;
    let (u2, d2) = b;
    let mut out = NormalForm::default();
    for j in 0..=d1.min(u2) {
        // n^(j) for integer n is n!/(n-j)!
        let mut coeff = binomial(d1, j);
        for t in 0..j {
            coeff *= u2 - t;
        }
        out.insert_add((u1 + u2 - j, d1 + d2 - j), GaussianRational::from_bigint(coeff));
    }
    out
}

/// Normal ordering by exhaustive rewriting: replace each DU by UD or drop
/// it, carried on a weighted multiset of words deduplicated each pass.
pub fn normal_order_rewrite(w: &Word) -> NormalForm {
    let mut pending: HashMap<Vec<Letter>, BigInt> = HashMap::new();
    pending.insert(w.letters().to_vec(), BigInt::one());
    let mut out = NormalForm::default();
    while !pending.is_empty() {
        let mut next: HashMap<Vec<Letter>, BigInt> = HashMap::new();
        for (letters, weight) in pending {
            match first_du(&letters) {
                Some(pos) => {
                    let mut swapped = letters.clone();
                    swapped.swap(pos, pos + 1);
                    *next.entry(swapped).or_default() += &weight;
                    let mut dropped = letters;
                    dropped.drain(pos..pos + 2);
                    *next.entry(dropped).or_default() += weight;
                }
                None => {
                    let word = Word::new(letters);
                    let u = word.count(Letter::U);
                    let d = word.count(Letter::D);
                    out.insert_add((u, d), GaussianRational::from_bigint(weight));
                }
            }
        }
        pending = next;
    }
    out
}

fn first_du(letters: &[Letter]) -> Option<usize> {
    letters.windows(2).position(|w| w == [Letter::D, Letter::U])
}

/// Normal ordering by rook counting on the word's Ferrers board:
/// w = sum_k r_k(B_w) U^{n-k} D^{m-k}.
pub fn normal_order_rook(w: &Word) -> NormalForm {
    let n = w.count(Letter::U);
    let m = w.count(Letter::D);
    let rook = rook_numbers(&word_to_board(w));
    normal_form_from_rook(n, m, &rook)
}

/// Assembles sum_k r_k U^{n-k} D^{m-k} from an explicit rook vector.
pub fn normal_form_from_rook(n: u32, m: u32, rook: &RookVector) -> NormalForm {
    let mut out = NormalForm::default();
    for (k, r) in rook.0.iter().enumerate() {
        let k = k as u32;
        if k > n.min(m) {
            break;
        }
        out.insert_add((n - k, m - k), GaussianRational::from_bigint(r.clone()));
    }
    out
}

/// Signed Stirling numbers of the first kind s(n, 0..n), computed by the
/// recurrence s(n+1, k) = s(n, k-1) - n s(n, k). These are the
/// coefficients of U^n D^n over powers of UD.
pub fn undn_expand(n: u32) -> Vec<BigInt> {
    let mut row = vec![BigInt::one()];
    for m in 0..n {
        let mut next = vec![BigInt::zero(); row.len() + 1];
        for (k, v) in row.iter().enumerate() {
            next[k + 1] += v;
            next[k] -= BigInt::from(m) * v;
        }
        row = next;
    }
    row
}

fn words_with_balanced_letters(n: u32) -> Vec<Word> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(2 * n as usize);
    fn rec(d_left: u32, u_left: u32, current: &mut Vec<Letter>, out: &mut Vec<Word>) {
        if d_left == 0 && u_left == 0 {
            out.push(Word::new(current.clone()));
            return;
        }
        if d_left > 0 {
            current.push(Letter::D);
            rec(d_left - 1, u_left, current, out);
            current.pop();
        }
        if u_left > 0 {
            current.push(Letter::U);
            rec(d_left, u_left - 1, current, out);
            current.pop();
        }
    }
    rec(n, n, &mut current, &mut out);
    out
}

/// T_n(D, U): the sum of all C(2n, n) words with n D's and n U's, each
/// normal-ordered through the rook route.
pub fn symmetric_t_brute(n: u32, max_words: u64) -> Result<CanonicalElement> {
    let count = binomial(2 * n, n);
    if count > BigInt::from(max_words) {
        return Err(Error::CapExceeded(format!(
            "T_{n} needs {count} words, cap is {max_words} (raise --max-words to override)"
        )));
    }
    let mut out = NormalForm::default();
    for w in words_with_balanced_letters(n) {
        out = out.add(&normal_order_rook(&w));
    }
    Ok(out)
}

/// Closed form T_n(D, U) = sum_k (2n)!/(2^k k! (n-k)!^2) U^{n-k} D^{n-k}.
pub fn symmetric_t_closed(n: u32) -> CanonicalElement {
    let mut out = NormalForm::default();
    let f2n = factorial(2 * n);
    for k in 0..=n {
        let denom = (BigInt::one() << k) * factorial(k) * factorial(n - k) * factorial(n - k);
        out.insert_add((n - k, n - k), GaussianRational::from_bigint(&f2n / denom));
    }
    out
}

/// sum_k p_k e^k with powers of e memoized.
pub fn substitute_polynomial(p: &Polynomial, e: &CanonicalElement) -> CanonicalElement {
    let mut out = NormalForm::default();
    let mut power = NormalForm::one();
    for (k, c) in p.coeffs().iter().enumerate() {
        if k > 0 {
            power = power.mul(e);
        }
        out = out.add(&power.scale(c));
    }
    out
}

/// sum_k coeffs[k] D^{n-k} U^n D^k, each monomial word normal-ordered
/// through monomial products. Every weight row used by the identities is
/// symmetric, so this agrees with the k <-> n-k reading.
pub fn bd_ordering_sum(n: u32, coeffs: &[Rational]) -> Result<CanonicalElement> {
    if coeffs.len() != n as usize + 1 {
        return Err(Error::LengthMismatch { expected: n as usize + 1, got: coeffs.len() });
    }
    let mut out = NormalForm::default();
    for (k, a) in coeffs.iter().enumerate() {
        let k = k as u32;
        let term = monomial_product((0, n - k), (n, 0));
        let term = term.mul(&NormalForm::monomial(0, k, GaussianRational::one()));
        out = out.add(&term.scale(&GaussianRational::from_rational(a.clone())));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;
    use crate::polys;

    fn nf(terms: &[(u32, u32, i64)]) -> NormalForm {
        let mut out = NormalForm::default();
        for &(u, d, c) in terms {
            out.insert_add((u, d), GaussianRational::from_int(c));
        }
        out
    }

    #[test]
    fn monomial_product_examples() {
        assert_eq!(monomial_product((0, 1), (1, 0)), nf(&[(1, 1, 1), (0, 0, 1)]));
        assert_eq!(monomial_product((1, 0), (0, 1)), nf(&[(1, 1, 1)]));
        assert_eq!(
            monomial_product((0, 2), (2, 0)),
            nf(&[(2, 2, 1), (1, 1, 4), (0, 0, 2)])
        );
    }

    #[test]
    fn multiply_examples() {
        let x = NormalForm::x_elem();
        assert_eq!(NormalForm::one().mul(&x), x);
        assert_eq!(x.mul(&x), nf(&[(2, 2, 4), (1, 1, 8), (0, 0, 1)]));
        let d = NormalForm::monomial(0, 1, GaussianRational::one());
        let u = NormalForm::monomial(1, 0, GaussianRational::one());
        assert_eq!(d.mul(&u), normal_order_rewrite(&"DU".parse().unwrap()));
        // [D, U] = 1
        assert_eq!(d.mul(&u).sub(&u.mul(&d)), NormalForm::one());
    }

    #[test]
    fn add_scale_cancellation() {
        let x = NormalForm::x_elem();
        assert_eq!(x.add(&NormalForm::zero()), x);
        assert_eq!(x.scale(&GaussianRational::zero()), NormalForm::zero());
        let ud = nf(&[(1, 1, 1)]);
        assert_eq!(ud.add(&nf(&[(1, 1, -1)])), NormalForm::zero());
    }

    #[test]
    fn rewrite_examples() {
        assert_eq!(normal_order_rewrite(&Word::empty()), NormalForm::one());
        assert_eq!(normal_order_rewrite(&"DU".parse().unwrap()), nf(&[(1, 1, 1), (0, 0, 1)]));
        assert_eq!(
            normal_order_rewrite(&"DUDDUDU".parse().unwrap()),
            nf(&[(3, 4, 1), (2, 3, 8), (1, 2, 14), (0, 1, 4)])
        );
    }

    #[test]
    fn rook_route_examples() {
        assert_eq!(normal_order_rook(&"UD".parse().unwrap()), nf(&[(1, 1, 1)]));
        assert_eq!(normal_order_rook(&"DU".parse().unwrap()), nf(&[(1, 1, 1), (0, 0, 1)]));
        assert_eq!(
            normal_order_rook(&"DUDDUDU".parse().unwrap()),
            nf(&[(3, 4, 1), (2, 3, 8), (1, 2, 14), (0, 1, 4)])
        );
    }

    #[test]
    fn rewrite_equals_rook_exhaustive_len8() {
        for len in 0..=8u32 {
            for mask in 0u32..(1 << len) {
                let letters: Vec<Letter> = (0..len)
                    .map(|i| if mask >> i & 1 == 1 { Letter::U } else { Letter::D })
                    .collect();
                let w = Word::new(letters);
                assert_eq!(normal_order_rewrite(&w), normal_order_rook(&w), "word {w}");
            }
        }
    }

    #[test]
    fn undn_expand_examples() {
        let ints = |v: &[i64]| v.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>();
        assert_eq!(undn_expand(1), ints(&[0, 1]));
        assert_eq!(undn_expand(2), ints(&[0, -1, 1]));
        assert_eq!(undn_expand(4), ints(&[0, -6, 11, -6, 1]));
    }

    #[test]
    fn symmetric_t_examples() {
        assert_eq!(symmetric_t_brute(0, DEFAULT_MAX_WORDS).unwrap(), NormalForm::one());
        assert_eq!(
            symmetric_t_brute(1, DEFAULT_MAX_WORDS).unwrap(),
            nf(&[(1, 1, 2), (0, 0, 1)])
        );
        assert_eq!(
            symmetric_t_brute(2, DEFAULT_MAX_WORDS).unwrap(),
            nf(&[(2, 2, 6), (1, 1, 12), (0, 0, 3)])
        );
        assert_eq!(symmetric_t_closed(0), NormalForm::one());
        assert_eq!(symmetric_t_closed(1), nf(&[(1, 1, 2), (0, 0, 1)]));
        assert_eq!(symmetric_t_closed(2), nf(&[(2, 2, 6), (1, 1, 12), (0, 0, 3)]));
        assert!(symmetric_t_brute(12, DEFAULT_MAX_WORDS).is_err());
    }

    #[test]
    fn substitute_examples() {
        let x = NormalForm::x_elem();
        let t = polys::Polynomial::from_ints(&[0, 1]);
        assert_eq!(substitute_polynomial(&t, &x), x);
        let one = polys::Polynomial::from_ints(&[1]);
        assert_eq!(substitute_polynomial(&one, &x), NormalForm::one());
        // p = t^2 - 1 at e = i(2UD+1)
        let p = polys::Polynomial::from_ints(&[-1, 0, 1]);
        let e = x.scale(&GaussianRational::i());
        assert_eq!(
            substitute_polynomial(&p, &e),
            nf(&[(2, 2, -4), (1, 1, -8), (0, 0, -2)])
        );
    }

    #[test]
    fn bd_ordering_examples() {
        assert_eq!(
            bd_ordering_sum(1, &[rat(1), rat(1)]).unwrap(),
            nf(&[(1, 1, 2), (0, 0, 1)])
        );
        assert_eq!(
            bd_ordering_sum(2, &[rat(1), rat(2), rat(1)]).unwrap(),
            nf(&[(2, 2, 4), (1, 1, 8), (0, 0, 2)])
        );
        assert_eq!(
            bd_ordering_sum(2, &[rat(1), rat(0), rat(0)]).unwrap(),
            nf(&[(2, 2, 1), (1, 1, 4), (0, 0, 2)])
        );
        assert!(bd_ordering_sum(2, &[rat(1)]).is_err());
    }

    #[test]
    fn degree_bookkeeping_single_word() {
        let w: Word = "DUDUDDU".parse().unwrap();
        let n = w.count(Letter::U);
        let m = w.count(Letter::D);
        for (&(u, d), _) in normal_order_rewrite(&w).terms() {
            let k = n - u;
            assert_eq!(m - d, k);
        }
    }

    #[test]
    fn display_matches_expected_rendering() {
        let v = nf(&[(3, 4, 1), (2, 3, 8), (1, 2, 14), (0, 1, 4)]);
        assert_eq!(v.to_string(), "U^3D^4 + 8 U^2D^3 + 14 U D^2 + 4 D");
        assert_eq!(NormalForm::zero().to_string(), "0");
        assert_eq!(NormalForm::one().to_string(), "1");
        let neg = nf(&[(1, 1, -3), (0, 0, 5)]);
        assert_eq!(neg.to_string(), "-3 U D + 5");
    }
}
