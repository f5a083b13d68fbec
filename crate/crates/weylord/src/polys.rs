//! Exact univariate polynomials and the special families of the engine:
//! the Meixner-Pollaczek specialization S_n, the continuous Hahn P_n(.; l),
//! Stirling numbers, secant numbers, the odd-cycle permutation statistic,
//! and the lattice-path moment oracle.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::arith::{
    binomial_general, factorial, rat, rising_factorial, GaussianRational, Rational,
};
use crate::error::{Error, Result};

/// Default cap on the number of permutations an enumeration may visit (10!).
pub const DEFAULT_MAX_PERMS: u64 = 3_628_800;

/// Dense polynomial over GaussianRational, coefficients indexed by degree,
/// trailing zeros trimmed. The zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Polynomial {
    coeffs: Vec<GaussianRational>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<GaussianRational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn one() -> Self {
        Polynomial::constant(GaussianRational::one())
    }

    pub fn constant(c: GaussianRational) -> Self {
        Polynomial::new(vec![c])
    }

    /// The indeterminate x.
    pub fn x() -> Self {
        Polynomial::from_ints(&[0, 1])
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Polynomial::new(coeffs.iter().map(|&c| GaussianRational::from_int(c)).collect())
    }

    pub fn coeffs(&self) -> &[GaussianRational] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_real(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_real())
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let len = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![GaussianRational::zero(); len];
        for (k, c) in self.coeffs.iter().enumerate() {
            out[k] = out[k].clone() + c.clone();
        }
        for (k, c) in other.coeffs.iter().enumerate() {
            out[k] = out[k].clone() + c.clone();
        }
        Polynomial::new(out)
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![GaussianRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (j, a) in self.coeffs.iter().enumerate() {
            for (k, b) in other.coeffs.iter().enumerate() {
                out[j + k] = out[j + k].clone() + a * b;
            }
        }
        Polynomial::new(out)
    }

    pub fn scale(&self, c: &GaussianRational) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|v| c * v).collect())
    }

    /// Horner evaluation.
    pub fn eval(&self, at: &GaussianRational) -> GaussianRational {
        let mut acc = GaussianRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = &acc * at;
            acc = acc + c.clone();
        }
        acc
    }

    /// JSON: {"coeffs": [{"re", "im"}, ...]} ascending by degree.
    pub fn to_json(&self) -> serde_json::Value {
        let coeffs: Vec<serde_json::Value> = self
            .coeffs
            .iter()
            .map(|c| serde_json::json!({"re": c.re.to_string(), "im": c.im.to_string()}))
            .collect();
        serde_json::json!({ "coeffs": coeffs })
    }
}

impl fmt::Display for Polynomial {
    /// Descending powers with exact coefficients, e.g. "x^4 - 14*x^2 + 9".
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let (negative, mag) = if c.is_real() && c.re.is_negative() {
                (true, GaussianRational::from_rational(-c.re.clone()))
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
            let var = match k {
                0 => String::new(),
                1 => "x".to_string(),
                _ => format!("x^{k}"),
            };
            let coeff_str = if mag == GaussianRational::one() && !var.is_empty() {
                String::new()
            } else if mag.is_real() || mag.re.is_zero() {
                mag.to_string()
            } else {
                format!("({mag})")
            };
            match (coeff_str.is_empty(), var.is_empty()) {
                (false, false) => write!(f, "{coeff_str}*{var}")?,
                (false, true) => f.write_str(&coeff_str)?,
                (true, _) => f.write_str(&var)?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// S_n by the three-term recurrence S_{n+1} = x S_n - n^2 S_{n-1}, S_0 = 1.
pub fn meixner_s_recurrence(n: u32) -> Polynomial {
    let mut prev = Polynomial::one();
    if n == 0 {
        return prev;
    }
    let mut cur = Polynomial::x();
    for m in 1..n {
        let next = Polynomial::x()
            .mul(&cur)
            .add(&prev.scale(&GaussianRational::from_int(-i64::from(m) * i64::from(m))));
        prev = cur;
        cur = next;
    }
    cur
}

/// S_n by the explicit sum
/// i^n n! sum_k (-1)^k/k! C(n,k) prod_{j<k} (ix + 1 + 2j).
pub fn meixner_s_explicit(n: u32) -> Polynomial {
    let mut sum = Polynomial::zero();
    let mut product = Polynomial::one();
    for k in 0..=n {
        if k > 0 {
            // append factor (ix + 1 + 2(k-1))
            let factor = Polynomial::new(vec![
                GaussianRational::from_int(2 * i64::from(k) - 1),
                GaussianRational::i(),
            ]);
            product = product.mul(&factor);
        }
        let sign = if k % 2 == 0 { 1 } else { -1 };
        let weight = Rational::from_integer(BigInt::from(sign))
            * binomial_general(&rat(i64::from(n)), k)
            / Rational::from_integer(factorial(k));
        sum = sum.add(&product.scale(&GaussianRational::from_rational(weight)));
    }
    let prefactor = GaussianRational::i_pow(n) * GaussianRational::from_bigint(factorial(n));
    sum.scale(&prefactor)
}

/// A bijection on {1..n} in one-line notation.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn new(images: Vec<u32>) -> Result<Self> {
        let n = images.len() as u32;
        let mut seen = vec![false; images.len()];
        for &v in &images {
            if v < 1 || v > n || seen[(v - 1) as usize] {
                return Err(Error::InvalidParameter(format!(
                    "not a permutation of 1..{n}: {images:?}"
                )));
            }
            seen[(v - 1) as usize] = true;
        }
        Ok(Permutation { images })
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    /// Number of odd-length cycles.
    pub fn cyco(&self) -> u32 {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut count = 0;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0u32;
            let mut pos = start;
            while !seen[pos] {
                seen[pos] = true;
                len += 1;
                pos = (self.images[pos] - 1) as usize;
            }
            if len % 2 == 1 {
                count += 1;
            }
        }
        count
    }
}

fn next_permutation(v: &mut [u32]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// S_n recovered from the permutation statistic:
/// (-i)^n sum_{sigma} (ix)^{cyco sigma}, tallied over all of S_n.
pub fn cyco_polynomial(n: u32, max_perms: u64) -> Result<Polynomial> {
    if factorial(n) > BigInt::from(max_perms) {
        return Err(Error::CapExceeded(format!(
            "cyco needs {n}! permutations, cap is {max_perms} (raise --max-perms to override)"
        )));
    }
    let mut tally = vec![BigInt::zero(); n as usize + 1];
    let mut images: Vec<u32> = (1..=n).collect();
    loop {
        let sigma = Permutation { images: images.clone() };
        tally[sigma.cyco() as usize] += 1;
        if !next_permutation(&mut images) {
            break;
        }
    }
    // sum_c tally[c] (ix)^c, then multiply by (-i)^n
    let coeffs: Vec<GaussianRational> = tally
        .into_iter()
        .enumerate()
        .map(|(c, count)| {
            GaussianRational::i_pow(c as u32) * GaussianRational::from_bigint(count)
        })
        .collect();
    let minus_i_n = match n % 4 {
        0 => GaussianRational::one(),
        1 => -GaussianRational::i(),
        2 => -GaussianRational::one(),
        _ => GaussianRational::i(),
    };
    Ok(Polynomial::new(coeffs).scale(&minus_i_n))
}

/// Row s(n, 0..n) of signed Stirling numbers of the first kind, read off
/// the expansion of t(t-1)...(t-n+1).
pub fn stirling_row(n: u32) -> Vec<BigInt> {
    let mut poly = Polynomial::one();
    for j in 0..n {
        let factor = Polynomial::new(vec![
            GaussianRational::from_int(-i64::from(j)),
            GaussianRational::one(),
        ]);
        poly = poly.mul(&factor);
    }
    (0..=n as usize)
        .map(|k| {
            poly.coeffs()
                .get(k)
                .map(|c| c.re.to_integer())
                .unwrap_or_else(BigInt::zero)
        })
        .collect()
}

pub fn stirling_first(n: u32, k: u32) -> BigInt {
    stirling_row(n)[k as usize].clone()
}

/// Secant numbers E_0, E_2, ..., E_{2N} by exact power-series reciprocal
/// of cos x.
pub fn secant_numbers(big_n: u32) -> Vec<BigInt> {
    let n = big_n as usize;
    // cos coefficients c_m = (-1)^m / (2m)!
    let cos: Vec<Rational> = (0..=n)
        .map(|m| {
            let sign = if m % 2 == 0 { 1 } else { -1 };
            Rational::new(BigInt::from(sign), factorial(2 * m as u32))
        })
        .collect();
    let mut recip = vec![Rational::zero(); n + 1];
    recip[0] = Rational::one();
    for m in 1..=n {
        let mut acc = Rational::zero();
        for j in 0..m {
            acc += &recip[j] * &cos[m - j];
        }
        recip[m] = -acc;
    }
    recip
        .into_iter()
        .enumerate()
        .map(|(m, b)| {
            let e = b * Rational::from_integer(factorial(2 * m as u32));
            e.to_integer()
        })
        .collect()
}

/// Moments mu_0, mu_2, ..., mu_{2N} of the S_n family by the weighted
/// lattice-path count: up-steps weigh 1, a down-step from level k weighs
/// k^2. Odd moments vanish since every path has even length.
pub fn moments_from_recurrence(big_n: u32) -> Vec<BigInt> {
    let steps = 2 * big_n as usize;
    let mut level_weights = vec![BigInt::zero(); steps + 1];
    level_weights[0] = BigInt::one();
    let mut out = vec![BigInt::one()];
    for step in 1..=steps {
        let mut next = vec![BigInt::zero(); steps + 1];
        for (level, w) in level_weights.iter().enumerate() {
            if w.is_zero() {
                continue;
            }
            if level < steps {
                next[level + 1] += w;
            }
            if level >= 1 {
                let sq = BigInt::from(level * level);
                next[level - 1] += sq * w;
            }
        }
        level_weights = next;
        if step % 2 == 0 {
            out.push(level_weights[0].clone());
        }
    }
    out
}

/// The specialized continuous Hahn polynomial
/// P_n(x) = i^n C(2n+2l, n)^{-1} (l+1)_n 3F2(-n, n+2l+1, 1/2+ix; 1, l+1; 1)
/// with the terminating hypergeometric sum expanded exactly.
pub fn continuous_hahn_p(n: u32, l: &Rational) -> Result<Polynomial> {
    let two_l = l + l;
    let prefactor_binom = binomial_general(&(rat(2 * i64::from(n)) + &two_l), n);
    if prefactor_binom.is_zero() {
        return Err(Error::Pole(format!("C(2n+2l, n) vanishes at n = {n}, l = {l}")));
    }
    let mut sum = Polynomial::zero();
    let mut half_ix_poly = Polynomial::one();
    for k in 0..=n {
        if k > 0 {
            // factor (1/2 + ix + (k-1))
            let factor = Polynomial::new(vec![
                GaussianRational::from_rational(crate::arith::rat_frac(2 * i64::from(k) - 1, 2)),
                GaussianRational::i(),
            ]);
            half_ix_poly = half_ix_poly.mul(&factor);
        }
        let l_plus_1_k = rising_factorial(&(l + rat(1)), k);
        if l_plus_1_k.is_zero() {
            return Err(Error::Pole(format!("(l+1)_{k} vanishes at l = {l}")));
        }
        let minus_n_k = rising_factorial(&rat(-i64::from(n)), k);
        let top2 = rising_factorial(&(rat(i64::from(n) + 1) + &two_l), k);
        let one_k = Rational::from_integer(factorial(k));
        let k_fact = Rational::from_integer(factorial(k));
        let weight = minus_n_k * top2 / (one_k * l_plus_1_k * k_fact);
        sum = sum.add(&half_ix_poly.scale(&GaussianRational::from_rational(weight)));
    }
    let gamma_ratio = rising_factorial(&(l + rat(1)), n);
    let prefactor =
        GaussianRational::i_pow(n) * GaussianRational::from_rational(gamma_ratio / prefactor_binom);
    Ok(sum.scale(&prefactor))
}

/// The l-parameter ordering weights a_k^(n) = C(n+l,k) C(n+l,n-k) / C(n+l,n)
/// together with their sum D_n.
pub fn bd_coefficients(n: u32, l: &Rational) -> Result<(Vec<Rational>, Rational)> {
    let n_plus_l = rat(i64::from(n)) + l;
    let normalizer = binomial_general(&n_plus_l, n);
    if normalizer.is_zero() {
        return Err(Error::Pole(format!("C(n+l, n) vanishes at n = {n}, l = {l}")));
    }
    let coeffs: Vec<Rational> = (0..=n)
        .map(|k| {
            binomial_general(&n_plus_l, k) * binomial_general(&n_plus_l, n - k) / &normalizer
        })
        .collect();
    let d_n: Rational = coeffs.iter().fold(Rational::zero(), |acc, a| acc + a);
    Ok((coeffs, d_n))
}
