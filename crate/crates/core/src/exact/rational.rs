//! Arbitrary-precision rationals.
//!
//! `num_rational::BigRational` already keeps itself reduced with a positive
//! denominator, so it is used directly as the coefficient field.

use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::ExactError;

pub type Rational = BigRational;

/// `num / den` as an exact rational. Panics on a zero denominator.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `"p/q"`, `"p"` or a terminating decimal such as `"2.5"`.
pub fn parse_rational(text: &str) -> Result<Rational, ExactError> {
    let bad = || ExactError::MalformedRational(text.to_string());
    let t = text.trim();
    if t.is_empty() {
        return Err(bad());
    }
    if let Some((p, q)) = t.split_once('/') {
        let p = BigInt::from_str(p.trim()).map_err(|_| bad())?;
        let q = BigInt::from_str(q.trim()).map_err(|_| bad())?;
        if q.is_zero() {
            return Err(bad());
        }
        return Ok(Rational::new(p, q));
    }
    if let Some((whole, frac)) = t.split_once('.') {
        if frac.is_empty() || !frac.chars().all(|c| c.is_ascii_digit()) {
            return Err(bad());
        }
        let negative = whole.trim_start().starts_with('-');
        let whole_abs = whole.trim_start_matches(['-', '+']);
        let whole_int = if whole_abs.is_empty() {
            BigInt::zero()
        } else {
            BigInt::from_str(whole_abs).map_err(|_| bad())?
        };
        let scale = num_traits::pow(BigInt::from(10), frac.len());
        let frac_int = BigInt::from_str(frac).map_err(|_| bad())?;
        let mut r = Rational::new(whole_int * &scale + frac_int, scale);
        if negative {
            r = -r;
        }
        return Ok(r);
    }
    BigInt::from_str(t).map(Rational::from_integer).map_err(|_| bad())
}

pub fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        // numerator/denominator too large for a direct conversion
        let n = r.numer().to_f64().unwrap_or(f64::INFINITY);
        let d = r.denom().to_f64().unwrap_or(f64::INFINITY);
        n / d
    })
}

/// Returns `Some(n)` when `r` is an integer that fits in `i64`.
pub fn as_integer(r: &Rational) -> Option<i64> {
    if r.is_integer() {
        r.to_integer().to_i64()
    } else {
        None
    }
}

pub fn sign(r: &Rational) -> i32 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

/// Integer power, negative exponents allowed for nonzero bases.
pub fn pow(base: &Rational, exp: i64) -> Rational {
    if exp >= 0 {
        num_traits::pow(base.clone(), exp as usize)
    } else {
        num_traits::pow(base.recip(), (-exp) as usize)
    }
}

/// Generalized binomial coefficient `binom(top, k)` for rational `top`.
pub fn binomial(top: &Rational, k: i64) -> Rational {
    if k < 0 {
        return Rational::zero();
    }
    let mut acc = Rational::one();
    for j in 0..k {
        acc = acc * (top - int(j)) / int(j + 1);
    }
    acc
}

/// Rising factorial `(x)_k = x (x+1) ... (x+k-1)`.
pub fn pochhammer(x: &Rational, k: u32) -> Rational {
    (0..k).fold(Rational::one(), |acc, j| acc * (x + int(j as i64)))
}

pub fn factorial(n: u32) -> Rational {
    (1..=n).fold(Rational::one(), |acc, j| acc * int(j as i64))
}

/// Least common multiple of the denominators of `values`.
pub fn denominator_lcm<'a>(values: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    values
        .into_iter()
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()))
}

/// Greatest common divisor of the numerators of `values` (all assumed integral).
pub fn numerator_gcd<'a>(values: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    values
        .into_iter()
        .fold(BigInt::zero(), |acc, v| acc.gcd(v.numer()))
}

/// Floor of `r` modulo 2, returned as the representative in `[0, 2)`.
pub fn mod_two(r: &Rational) -> Rational {
    let two = int(2);
    let q = (r / &two).floor();
    r - q * two
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_forms() {
        assert_eq!(parse_rational("3/2").unwrap(), rat(3, 2));
        assert_eq!(parse_rational(" -7 ").unwrap(), int(-7));
        assert_eq!(parse_rational("2.5").unwrap(), rat(5, 2));
        assert_eq!(parse_rational("-0.25").unwrap(), rat(-1, 4));
        assert_eq!(parse_rational("6/4").unwrap(), rat(3, 2));
        for bad in ["", "1/0", "a/2", "1.", "1.2.3", "--1", "3/x"] {
            assert!(parse_rational(bad).is_err(), "{bad:?} should fail");
        }
    }

    #[test]
    fn generalized_binomial() {
        assert_eq!(binomial(&rat(9, 2), 3), rat(105, 16));
        assert_eq!(binomial(&int(5), 2), int(10));
        assert_eq!(binomial(&rat(1, 2), 2), rat(-1, 8));
        assert_eq!(binomial(&int(3), -1), int(0));
    }

    #[test]
    fn mod_two_representative() {
        assert_eq!(mod_two(&rat(-1, 1)), int(1));
        assert_eq!(mod_two(&rat(7, 2)), rat(3, 2));
        assert_eq!(mod_two(&rat(-5, 2)), rat(3, 2));
        assert_eq!(mod_two(&int(4)), int(0));
    }
}
