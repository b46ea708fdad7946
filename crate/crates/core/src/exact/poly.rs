//! Dense univariate polynomials over the rationals, in the variable `z`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::intpoly;
use super::rational::{self, Rational};
use crate::error::ExactError;

/// `content * prim(z)` with `prim` an integer polynomial in ascending
/// degree, primitive and with positive leading coefficient. The zero
/// polynomial has empty `prim` and unit content. The representation is
/// unique, so structural equality is equality of polynomials.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    prim: Vec<BigInt>,
    content: Rational,
}

impl Default for Poly {
    fn default() -> Self {
        Poly::zero()
    }
}

impl Poly {
    pub fn new(coeffs: Vec<Rational>) -> Self {
        if coeffs.iter().all(Zero::is_zero) {
            return Poly::zero();
        }
        let lcm = rational::denominator_lcm(&coeffs);
        let scaled = coeffs.iter().map(|c| (c * &lcm).to_integer()).collect();
        Poly::from_ints_scaled(scaled, Rational::new(BigInt::one(), lcm))
    }

    /// `c * p` for an arbitrary integer polynomial `p`.
    fn from_ints_scaled(mut p: Vec<BigInt>, c: Rational) -> Self {
        while p.last().is_some_and(Zero::is_zero) {
            p.pop();
        }
        if p.is_empty() || c.is_zero() {
            return Poly::zero();
        }
        let mut g = p.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
        if p.last().unwrap().is_negative() {
            g = -g;
        }
        if !g.is_one() {
            for x in &mut p {
                *x /= &g;
            }
        }
        Poly { prim: p, content: c * Rational::from_integer(g) }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Poly::from_ints_scaled(coeffs.iter().map(|&c| BigInt::from(c)).collect(), Rational::one())
    }

    pub fn zero() -> Self {
        Poly { prim: Vec::new(), content: Rational::one() }
    }

    pub fn one() -> Self {
        Poly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly { prim: vec![BigInt::one()], content: c }
    }

    /// The monomial `c z^k`.
    pub fn monomial(c: Rational, k: usize) -> Self {
        Poly::constant(c).shift(k)
    }

    /// The polynomial `z`.
    pub fn z() -> Self {
        Poly::monomial(Rational::one(), 1)
    }

    pub fn coeffs(&self) -> Vec<Rational> {
        self.prim.iter().map(|a| Rational::from_integer(a.clone()) * &self.content).collect()
    }

    /// Coefficient of `z^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> Rational {
        match self.prim.get(k) {
            Some(a) => Rational::from_integer(a.clone()) * &self.content,
            None => Rational::zero(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.prim.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.prim.len() <= 1
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.prim.len().checked_sub(1)
    }

    pub fn leading(&self) -> Rational {
        self.degree().map(|d| self.coeff(d)).unwrap_or_else(Rational::zero)
    }

    /// Multiplicity of the root at `z = 0`; `None` for the zero polynomial.
    pub fn order_at_zero(&self) -> Option<usize> {
        self.prim.iter().position(|c| !c.is_zero())
    }

    /// Lowest nonzero coefficient.
    pub fn trailing(&self) -> Rational {
        self.order_at_zero().map(|k| self.coeff(k)).unwrap_or_else(Rational::zero)
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() || self.is_zero() {
            return Poly::zero();
        }
        Poly { prim: self.prim.clone(), content: &self.content * c }
    }

    /// Multiplies by `z^k`.
    pub fn shift(&self, k: usize) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut prim = vec![BigInt::zero(); k];
        prim.extend(self.prim.iter().cloned());
        Poly { prim, content: self.content.clone() }
    }

    /// Divides by `z^k`; the low coefficients must vanish.
    pub fn unshift(&self, k: usize) -> Poly {
        debug_assert!(self.prim.iter().take(k).all(Zero::is_zero));
        if self.prim.len() <= k {
            return Poly::zero();
        }
        Poly { prim: self.prim[k..].to_vec(), content: self.content.clone() }
    }

    /// `p(-z)`, by flipping the signs of odd coefficients.
    pub fn negate_arg(&self) -> Poly {
        let flip = self.prim.len() % 2 == 0;
        let prim = self
            .prim
            .iter()
            .enumerate()
            .map(|(k, c)| if (k % 2 == 1) != flip { -c } else { c.clone() })
            .collect();
        // keep the leading coefficient positive
        let content = if flip { -&self.content } else { self.content.clone() };
        Poly { prim, content }
    }

    /// d/dz.
    pub fn derivative(&self) -> Poly {
        let p = self
            .prim
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * BigInt::from(k))
            .collect();
        Poly::from_ints_scaled(p, self.content.clone())
    }

    pub fn eval(&self, z: &Rational) -> Rational {
        // integer Horner on the homogenized numerator
        let (p, q) = (z.numer(), z.denom());
        let n = self.prim.len();
        let mut acc = BigInt::zero();
        let mut qpow = BigInt::one();
        for c in self.prim.iter().rev() {
            acc = acc * p + c * &qpow;
            qpow *= q;
        }
        if n == 0 {
            return Rational::zero();
        }
        // acc = q^(n-1) p(z) / content; qpow = q^n
        Rational::new(acc * q, qpow) * &self.content
    }

    /// Horner evaluation with coefficients converted at evaluation time.
    pub fn eval_f64(&self, z: f64) -> f64 {
        self.to_f64_coeffs().iter().rev().fold(0.0, |acc, c| acc * z + c)
    }

    pub fn to_f64_coeffs(&self) -> Vec<f64> {
        self.coeffs().iter().map(rational::to_f64).collect()
    }

    /// Sign of `p(z)` as `z -> +inf`.
    pub fn sign_at_infinity(&self) -> i32 {
        rational::sign(&self.leading())
    }

    pub fn monic(&self) -> Poly {
        match self.prim.last() {
            None => Poly::zero(),
            Some(lead) => Poly { prim: self.prim.clone(), content: Rational::new(BigInt::one(), lead.clone()) },
        }
    }

    /// Scales to integer coefficients with unit content and positive leading
    /// coefficient. Returns the primitive part and the factor `c` such that
    /// `self = c * primitive`.
    pub fn primitive(&self) -> (Poly, Rational) {
        (Poly { prim: self.prim.clone(), content: Rational::one() }, self.content.clone())
    }

    pub fn div_rem(&self, divisor: &Poly) -> Result<(Poly, Poly), ExactError> {
        if divisor.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        let dd = divisor.prim.len() - 1;
        if self.prim.len() <= dd {
            return Ok((Poly::zero(), self.clone()));
        }
        // lc^e a = q b + r over Z, with e the number of division steps
        let lead = &divisor.prim[dd];
        let steps = self.prim.len() - dd;
        let mut rem = self.prim.clone();
        let mut quot = vec![BigInt::zero(); steps];
        for k in (0..steps).rev() {
            let c = rem[k + dd].clone();
            for r in rem.iter_mut() {
                *r *= lead;
            }
            for q in quot.iter_mut().skip(k + 1) {
                *q *= lead;
            }
            for (j, d) in divisor.prim.iter().enumerate() {
                rem[k + j] -= &c * d;
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        let scale = Rational::new(BigInt::one(), num_traits::pow(lead.clone(), steps));
        let q = Poly::from_ints_scaled(quot, &scale * &self.content / &divisor.content);
        let r = Poly::from_ints_scaled(rem, scale * &self.content);
        Ok((q, r))
    }

    /// Quotient of an exact division; `None` if the remainder is nonzero.
    pub fn exact_div(&self, divisor: &Poly) -> Option<Poly> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Poly::zero());
        }
        let q = intpoly::exact_div(&self.prim, &divisor.prim)?;
        Some(Poly { prim: q, content: &self.content / &divisor.content })
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Poly) -> Poly {
        match (self.is_zero(), other.is_zero()) {
            (true, true) => Poly::zero(),
            (true, false) => other.monic(),
            (false, true) => self.monic(),
            (false, false) => {
                let prim = intpoly::gcd_primitive(&self.prim, &other.prim);
                Poly { prim, content: Rational::one() }.monic()
            }
        }
    }

    /// `self / gcd(self, self')`, monic.
    pub fn square_free(&self) -> Poly {
        if self.degree().unwrap_or(0) == 0 {
            return self.monic();
        }
        let g = self.gcd(&self.derivative());
        self.exact_div(&g).expect("gcd divides").monic()
    }

    pub fn pow(&self, e: u32) -> Poly {
        (0..e).fold(Poly::one(), |acc, _| &acc * self)
    }

    pub fn integer_coeffs(&self) -> Option<Vec<BigInt>> {
        self.coeffs()
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs().iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let (sign, mag) = if c.is_negative() { ("-", -c) } else { ("+", c.clone()) };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let show_coeff = k == 0 || !mag.is_one();
            if show_coeff {
                if mag.is_integer() || k == 0 {
                    write!(f, "{mag}")?;
                } else {
                    write!(f, "({mag})")?;
                }
            }
            match k {
                0 => {}
                1 => write!(f, "{}z", if show_coeff { "*" } else { "" })?,
                _ => write!(f, "{}z^{k}", if show_coeff { "*" } else { "" })?,
            }
        }
        Ok(())
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        // a/b P + c/d Q = (ad P + cb Q) / bd
        let (a, b) = (self.content.numer(), self.content.denom());
        let (c, d) = (rhs.content.numer(), rhs.content.denom());
        let (l, r) = (a * d, c * b);
        let len = self.prim.len().max(rhs.prim.len());
        let sum = (0..len)
            .map(|k| {
                let x = self.prim.get(k).map(|p| p * &l).unwrap_or_default();
                let y = rhs.prim.get(k).map(|q| q * &r).unwrap_or_default();
                x + y
            })
            .collect();
        Poly::from_ints_scaled(sum, Rational::new(BigInt::one(), b * d))
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self + &(-rhs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly { prim: self.prim.clone(), content: -&self.content }
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        // the product of primitive polynomials is primitive
        Poly { prim: intpoly::mul(&self.prim, &rhs.prim), content: &self.content * &rhs.content }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Poly {
            type Output = Poly;
            fn $m(self, rhs: Poly) -> Poly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Poly> for Poly {
            type Output = Poly;
            fn $m(self, rhs: &Poly) -> Poly {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}
