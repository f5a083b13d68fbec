//! Exact rational and Gaussian-rational arithmetic plus the factorial-family
//! kernels used throughout the crate.
//!
//! Everything here is exact: `Rational` is an arbitrary-precision reduced
//! fraction and `GaussianRational` is `a + b*i` over it. No floating point
//! appears anywhere in the computation path.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision reduced rational, denominator always positive.
pub type Rational = num_rational::BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn rat_frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses "p/q" or "p", optional leading minus.
pub fn parse_rational(s: &str) -> Result<Rational> {
    Rational::from_str(s.trim()).map_err(|_| Error::Parse(format!("not a rational: {s:?}")))
}

pub fn factorial(n: u32) -> BigInt {
    let mut acc = BigInt::one();
    for j in 2..=n {
        acc *= j;
    }
    acc
}

/// (2n-1)!! = 1*3*5*...*(2n-1), with value 1 at n = 0.
pub fn double_factorial_odd(n: u32) -> BigInt {
    let mut acc = BigInt::one();
    for j in 0..n {
        acc *= 2 * j + 1;
    }
    acc
}

/// Ordinary integer binomial C(n, k).
pub fn binomial(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for j in 0..k {
        acc = acc * (n - j) / (j + 1);
    }
    acc
}

/// Falling factorial a(a-1)...(a-k+1); 1 at k = 0.
pub fn falling_factorial(a: &Rational, k: u32) -> Rational {
    let mut acc = Rational::one();
    for j in 0..k {
        acc *= a - rat(i64::from(j));
    }
    acc
}

/// Rising factorial (Pochhammer) a(a+1)...(a+k-1); 1 at k = 0.
pub fn rising_factorial(a: &Rational, k: u32) -> Rational {
    let mut acc = Rational::one();
    for j in 0..k {
        acc *= a + rat(i64::from(j));
    }
    acc
}

/// Generalized binomial C(a, k) = a(a-1)...(a-k+1) / k! for rational a.
pub fn binomial_general(a: &Rational, k: u32) -> Rational {
    falling_factorial(a, k) / Rational::from_integer(factorial(k))
}

/// Exact Gaussian rational a + b*i.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct GaussianRational {
    pub re: Rational,
    pub im: Rational,
}

impl GaussianRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        GaussianRational { re, im }
    }

    pub fn from_rational(re: Rational) -> Self {
        GaussianRational { re, im: Rational::zero() }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(rat(n))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Self::from_rational(Rational::from_integer(n))
    }

    pub fn zero() -> Self {
        Self::from_int(0)
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        GaussianRational { re: Rational::zero(), im: Rational::one() }
    }

    /// i^n, reduced mod 4.
    pub fn i_pow(n: u32) -> Self {
        match n % 4 {
            0 => Self::one(),
            1 => Self::i(),
            2 => -Self::one(),
            _ => -Self::i(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }
}

impl Add for GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: Self) -> Self {
        GaussianRational { re: self.re + rhs.re, im: self.im + rhs.im }
    }
}

impl Sub for GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: Self) -> Self {
        GaussianRational { re: self.re - rhs.re, im: self.im - rhs.im }
    }
}

impl Mul for GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl Mul for &GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: Self) -> GaussianRational {
        GaussianRational {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> Self {
        GaussianRational { re: -self.re, im: -self.im }
    }
}

impl fmt::Display for GaussianRational {
    /// "a+b*i", "a", or "b*i"; pure reals drop the imaginary part and
    /// vice versa; zero prints "0".
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", self.re);
        }
        if self.re.is_zero() {
            return write!(f, "{}*i", self.im);
        }
        if self.im.is_negative() {
            write!(f, "{}-{}*i", self.re, -&self.im)
        } else {
            write!(f, "{}+{}*i", self.re, self.im)
        }
    }
}

impl FromStr for GaussianRational {
    type Err = Error;

    /// Accepts "a+b*i", "a-b*i", "a", "b*i", "i", "-i".
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty Gaussian rational".into()));
        }
        let parse_im = |part: &str| -> Result<Rational> {
            let body = part.strip_suffix('i').unwrap();
            let body = body.strip_suffix('*').unwrap_or(body);
            match body {
                "" | "+" => Ok(Rational::one()),
                "-" => Ok(-Rational::one()),
                _ => parse_rational(body),
            }
        };
        // Split at the last sign that separates the two components.
        let bytes = s.as_bytes();
        let mut split = None;
        for (idx, &b) in bytes.iter().enumerate().skip(1) {
            if (b == b'+' || b == b'-') && bytes[idx - 1] != b'/' {
                split = Some(idx);
            }
        }
        if s.ends_with('i') {
            match split {
                Some(idx) if idx > 0 && !s[..idx].ends_with('*') && !s[..idx].is_empty() => {
                    let re = parse_rational(&s[..idx])?;
                    let im_part = if bytes[idx] == b'+' { &s[idx + 1..] } else { &s[idx..] };
                    Ok(GaussianRational::new(re, parse_im(im_part)?))
                }
                _ => Ok(GaussianRational::new(Rational::zero(), parse_im(s)?)),
            }
        } else {
            Ok(GaussianRational::from_rational(parse_rational(s)?))
        }
    }
}
