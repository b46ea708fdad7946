use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::Zero;

use super::poly::Poly;
use super::rational::Rational;
use crate::error::ExactError;

/// `num / den` in lowest terms with a monic denominator, so structural
/// equality is equality of functions.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFn {
    num: Poly,
    den: Poly,
}

impl RationalFn {
    pub fn new(num: Poly, den: Poly) -> Result<Self, ExactError> {
        if den.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: Poly, den: Poly) -> Self {
        if num.is_zero() {
            return RationalFn::zero();
        }
        let g = num.gcd(&den);
        let (num, den) = if g.is_constant() {
            (num, den)
        } else {
            (num.exact_div(&g).expect("gcd divides"), den.exact_div(&g).expect("gcd divides"))
        };
        let lead = den.leading();
        RationalFn { num: num.scale(&lead.recip()), den: den.monic() }
    }

    pub fn zero() -> Self {
        RationalFn { num: Poly::zero(), den: Poly::one() }
    }

    pub fn one() -> Self {
        RationalFn::from_poly(Poly::one())
    }

    pub fn constant(c: Rational) -> Self {
        RationalFn::from_poly(Poly::constant(c))
    }

    pub fn from_poly(p: Poly) -> Self {
        RationalFn { num: p, den: Poly::one() }
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    pub fn scale(&self, c: &Rational) -> RationalFn {
        if c.is_zero() {
            return RationalFn::zero();
        }
        RationalFn { num: self.num.scale(c), den: self.den.clone() }
    }

    pub fn mul_poly(&self, p: &Poly) -> RationalFn {
        Self::reduce(&self.num * p, self.den.clone())
    }

    pub fn div_poly(&self, p: &Poly) -> Result<RationalFn, ExactError> {
        RationalFn::new(self.num.clone(), &self.den * p)
    }

    /// Multiplies by `z^k` for any integer `k`.
    pub fn mul_z_pow(&self, k: i64) -> RationalFn {
        if k >= 0 {
            self.mul_poly(&Poly::z().pow(k as u32))
        } else {
            self.div_poly(&Poly::z().pow((-k) as u32)).expect("z^k is nonzero")
        }
    }

    pub fn recip(&self) -> Result<RationalFn, ExactError> {
        RationalFn::new(self.den.clone(), self.num.clone())
    }

    /// d/dz.
    pub fn derivative(&self) -> RationalFn {
        let top = &(&self.num.derivative() * &self.den) - &(&self.num * &self.den.derivative());
        Self::reduce(top, &self.den * &self.den)
    }

    /// `f(-z)`.
    pub fn negate_arg(&self) -> RationalFn {
        Self::reduce(self.num.negate_arg(), self.den.negate_arg())
    }

    pub fn eval(&self, z: &Rational) -> Result<Rational, ExactError> {
        let d = self.den.eval(z);
        if d.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        Ok(self.num.eval(z) / d)
    }

    pub fn eval_f64(&self, z: f64) -> f64 {
        self.num.eval_f64(z) / self.den.eval_f64(z)
    }

    /// Order of the zero (positive) or pole (negative) at `z = 0`;
    /// `None` for the zero function.
    pub fn order_at_zero(&self) -> Option<i64> {
        let n = self.num.order_at_zero()? as i64;
        Some(n - self.den.order_at_zero().unwrap_or(0) as i64)
    }

    /// Leading coefficient of the Laurent expansion at `z = 0`.
    pub fn leading_at_zero(&self) -> Rational {
        if self.is_zero() {
            return Rational::zero();
        }
        self.num.trailing() / self.den.trailing()
    }

    /// `deg num - deg den`; `None` for the zero function.
    pub fn degree_at_infinity(&self) -> Option<i64> {
        Some(self.num.degree()? as i64 - self.den.degree().unwrap_or(0) as i64)
    }

    pub fn leading_at_infinity(&self) -> Rational {
        self.num.leading() / self.den.leading()
    }

    pub fn pow(&self, e: u32) -> RationalFn {
        RationalFn { num: self.num.pow(e), den: self.den.pow(e) }
    }
}

impl Default for RationalFn {
    fn default() -> Self {
        RationalFn::zero()
    }
}

impl From<Poly> for RationalFn {
    fn from(p: Poly) -> Self {
        RationalFn::from_poly(p)
    }
}

impl fmt::Debug for RationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalFn({self})")
    }
}

impl fmt::Display for RationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == Poly::one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl Add for &RationalFn {
    type Output = RationalFn;
    fn add(self, rhs: &RationalFn) -> RationalFn {
        if self.den == rhs.den {
            return RationalFn::reduce(&self.num + &rhs.num, self.den.clone());
        }
        let g = self.den.gcd(&rhs.den);
        let left = self.den.exact_div(&g).expect("gcd divides");
        let right = rhs.den.exact_div(&g).expect("gcd divides");
        let num = &(&self.num * &right) + &(&rhs.num * &left);
        RationalFn::reduce(num, &left * &rhs.den)
    }
}

impl Sub for &RationalFn {
    type Output = RationalFn;
    fn sub(self, rhs: &RationalFn) -> RationalFn {
        self + &(-rhs)
    }
}

impl Neg for &RationalFn {
    type Output = RationalFn;
    fn neg(self) -> RationalFn {
        RationalFn { num: -&self.num, den: self.den.clone() }
    }
}

impl Mul for &RationalFn {
    type Output = RationalFn;
    fn mul(self, rhs: &RationalFn) -> RationalFn {
        if self.is_zero() || rhs.is_zero() {
            return RationalFn::zero();
        }
        // cross-cancel first to keep the final gcd small
        let g1 = self.num.gcd(&rhs.den);
        let g2 = rhs.num.gcd(&self.den);
        let n1 = self.num.exact_div(&g1).expect("gcd divides");
        let d2 = rhs.den.exact_div(&g1).expect("gcd divides");
        let n2 = rhs.num.exact_div(&g2).expect("gcd divides");
        let d1 = self.den.exact_div(&g2).expect("gcd divides");
        let num = &n1 * &n2;
        let den = &d1 * &d2;
        let lead = den.leading();
        RationalFn { num: num.scale(&lead.recip()), den: den.monic() }
    }
}

impl Div for &RationalFn {
    type Output = Result<RationalFn, ExactError>;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &RationalFn) -> Result<RationalFn, ExactError> {
        Ok(self * &rhs.recip()?)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for RationalFn {
            type Output = RationalFn;
            fn $m(self, rhs: RationalFn) -> RationalFn {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&RationalFn> for RationalFn {
            type Output = RationalFn;
            fn $m(self, rhs: &RationalFn) -> RationalFn {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for RationalFn {
    type Output = RationalFn;
    fn neg(self) -> RationalFn {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};

    fn rf(num: &[i64], den: &[i64]) -> RationalFn {
        RationalFn::new(Poly::from_ints(num), Poly::from_ints(den)).unwrap()
    }

    #[test]
    fn reduced_and_monic() {
        let f = rf(&[-1, 0, 1], &[-2, 2]);
        assert_eq!(f.num(), &Poly::new(vec![rat(1, 2), rat(1, 2)]));
        assert_eq!(f.den(), &Poly::one());
        assert!(RationalFn::new(Poly::one(), Poly::zero()).is_err());
    }

    #[test]
    fn sum_of_partial_fractions() {
        // 1/(z-1) - 1/(z+1) = 2/(z^2-1)
        let s = &rf(&[1], &[-1, 1]) - &rf(&[1], &[1, 1]);
        assert_eq!(s, rf(&[2], &[-1, 0, 1]));
        assert!((&s - &s).is_zero());
    }

    #[test]
    fn quotient_rule() {
        // d/dz z/(1+z) = 1/(1+z)^2
        let f = rf(&[0, 1], &[1, 1]);
        assert_eq!(f.derivative(), rf(&[1], &[1, 2, 1]));
    }

    #[test]
    fn laurent_data_at_zero() {
        let f = rf(&[0, 0, 3], &[0, 2]);
        assert_eq!(f.order_at_zero(), Some(1));
        assert_eq!(f.leading_at_zero(), rat(3, 2));
        assert_eq!(rf(&[5], &[0, 0, 1]).order_at_zero(), Some(-2));
        assert_eq!(f.eval(&int(2)).unwrap(), int(3));
    }
}
