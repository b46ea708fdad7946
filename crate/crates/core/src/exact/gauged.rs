//! Closed forms `x^p e^{cz} B(z)` with `z = omega x^2 / 2`.
//!
//! Since `x^2 = 2z/omega`, the x-power is only meaningful modulo 2 once the
//! body may absorb powers of `z`. Values are kept with `p` in `[0, 2)`, which
//! makes structural equality coincide with equality of functions. Potentials
//! and RS functions are the `c = 0` members of the same type (integer `p`).

use std::fmt;

use num_traits::{One, Signed, Zero};

use super::poly::Poly;
use super::ratfn::RationalFn;
use super::rational::{self, int, Rational};
use crate::error::ExactError;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GaugedFunction {
    x_power: Rational,
    exp_coeff: Rational,
    body: RationalFn,
    omega: Rational,
}

impl GaugedFunction {
    /// `omega` must be positive.
    pub fn new(x_power: Rational, exp_coeff: Rational, body: RationalFn, omega: Rational) -> Self {
        assert!(omega.is_positive(), "omega must be positive");
        if body.is_zero() {
            return GaugedFunction::zero(omega);
        }
        let shift = (&x_power / int(2)).floor();
        let k = rational::as_integer(&shift).expect("x-power shift fits in i64");
        // x^(2k) = (2z/omega)^k
        let body = body
            .mul_z_pow(k)
            .scale(&rational::pow(&(int(2) / &omega), k));
        GaugedFunction { x_power: x_power - shift * int(2), exp_coeff, body, omega }
    }

    pub fn zero(omega: Rational) -> Self {
        GaugedFunction {
            x_power: Rational::zero(),
            exp_coeff: Rational::zero(),
            body: RationalFn::zero(),
            omega,
        }
    }

    pub fn constant(c: Rational, omega: Rational) -> Self {
        GaugedFunction::new(Rational::zero(), Rational::zero(), RationalFn::constant(c), omega)
    }

    /// A function of `z` alone.
    pub fn from_z(body: RationalFn, omega: Rational) -> Self {
        GaugedFunction::new(Rational::zero(), Rational::zero(), body, omega)
    }

    /// `x^p e^{cz} poly(z)`.
    pub fn from_poly(x_power: Rational, exp_coeff: Rational, poly: Poly, omega: Rational) -> Self {
        GaugedFunction::new(x_power, exp_coeff, RationalFn::from_poly(poly), omega)
    }

    /// `x^power`.
    pub fn x_pow(power: Rational, omega: Rational) -> Self {
        GaugedFunction::new(power, Rational::zero(), RationalFn::one(), omega)
    }

    pub fn x_power(&self) -> &Rational {
        &self.x_power
    }

    pub fn exp_coeff(&self) -> &Rational {
        &self.exp_coeff
    }

    pub fn body(&self) -> &RationalFn {
        &self.body
    }

    pub fn omega(&self) -> &Rational {
        &self.omega
    }

    pub fn is_zero(&self) -> bool {
        self.body.is_zero()
    }

    /// True when the function is a rational function of `z` (no x-gauge).
    pub fn is_even_rational(&self) -> bool {
        self.x_power.is_zero() && self.exp_coeff.is_zero()
    }

    /// The same function rewritten with x-power `p`; `p` must differ from the
    /// canonical power by an even integer.
    pub fn body_at_power(&self, p: &Rational) -> Result<RationalFn, ExactError> {
        let diff = &self.x_power - p;
        let half = &diff / int(2);
        if !half.is_integer() {
            return Err(ExactError::GaugeMismatch(format!(
                "x-power {} cannot be rewritten as {}",
                self.x_power, p
            )));
        }
        let k = rational::as_integer(&half).expect("shift fits in i64");
        Ok(self.body.mul_z_pow(k).scale(&rational::pow(&(int(2) / &self.omega), k)))
    }

    fn check_omega(&self, other: &GaugedFunction) {
        assert_eq!(self.omega, other.omega, "gauged functions built with different omega");
    }

    /// d/dx.
    pub fn derivative(&self) -> GaugedFunction {
        if self.is_zero() {
            return self.clone();
        }
        let body = raw_derivative_body(&self.x_power, &self.exp_coeff, &self.body);
        GaugedFunction::new(&self.x_power - int(1), self.exp_coeff.clone(), body, self.omega.clone())
    }

    pub fn mul(&self, other: &GaugedFunction) -> GaugedFunction {
        self.check_omega(other);
        GaugedFunction::new(
            &self.x_power + &other.x_power,
            &self.exp_coeff + &other.exp_coeff,
            &self.body * &other.body,
            self.omega.clone(),
        )
    }

    pub fn recip(&self) -> Result<GaugedFunction, ExactError> {
        Ok(GaugedFunction::new(
            -&self.x_power,
            -&self.exp_coeff,
            self.body.recip()?,
            self.omega.clone(),
        ))
    }

    pub fn div(&self, other: &GaugedFunction) -> Result<GaugedFunction, ExactError> {
        Ok(self.mul(&other.recip()?))
    }

    pub fn scale(&self, c: &Rational) -> GaugedFunction {
        GaugedFunction::new(
            self.x_power.clone(),
            self.exp_coeff.clone(),
            self.body.scale(c),
            self.omega.clone(),
        )
    }

    pub fn neg(&self) -> GaugedFunction {
        self.scale(&-Rational::one())
    }

    pub fn mul_body(&self, f: &RationalFn) -> GaugedFunction {
        GaugedFunction::new(
            self.x_power.clone(),
            self.exp_coeff.clone(),
            &self.body * f,
            self.omega.clone(),
        )
    }

    pub fn add(&self, other: &GaugedFunction) -> Result<GaugedFunction, ExactError> {
        self.check_omega(other);
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.is_zero() {
            return Ok(other.clone());
        }
        if self.x_power != other.x_power || self.exp_coeff != other.exp_coeff {
            return Err(ExactError::GaugeMismatch(format!(
                "x^{} e^({} z) + x^{} e^({} z)",
                self.x_power, self.exp_coeff, other.x_power, other.exp_coeff
            )));
        }
        Ok(GaugedFunction::new(
            self.x_power.clone(),
            self.exp_coeff.clone(),
            &self.body + &other.body,
            self.omega.clone(),
        ))
    }

    pub fn sub(&self, other: &GaugedFunction) -> Result<GaugedFunction, ExactError> {
        self.add(&other.neg())
    }

    /// `f'/f`, as an x-odd rational function.
    pub fn log_derivative(&self) -> Result<GaugedFunction, ExactError> {
        if self.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        // x^{-1} [p + 2cz + 2z B'/B]
        let z = Poly::z();
        let mut s = RationalFn::from_poly(Poly::new(vec![
            self.x_power.clone(),
            &self.exp_coeff * int(2),
        ]));
        let ratio = (&self.body.derivative() / &self.body)?;
        s = &s + &ratio.mul_poly(&z.scale(&int(2)));
        Ok(GaugedFunction::new(-Rational::one(), Rational::zero(), s, self.omega.clone()))
    }

    /// Exponent `e` of the leading behavior `x^e` as `x -> 0+`.
    pub fn origin_exponent(&self) -> Option<Rational> {
        let ord = self.body.order_at_zero()?;
        Some(&self.x_power + int(2 * ord))
    }

    /// Coefficient `C` of the leading behavior `C x^e` as `x -> 0+`.
    pub fn origin_coefficient(&self) -> Rational {
        let Some(ord) = self.body.order_at_zero() else {
            return Rational::zero();
        };
        self.body.leading_at_zero() * rational::pow(&(&self.omega / int(2)), ord)
    }

    /// Exponent of the algebraic factor `x^e` multiplying `e^{cz}` at infinity.
    pub fn infinity_exponent(&self) -> Option<Rational> {
        Some(&self.x_power + int(2 * self.body.degree_at_infinity()?))
    }

    /// Coefficient `C` in `f ~ C x^e e^{cz}` as `x -> infinity`.
    pub fn infinity_coefficient(&self) -> Rational {
        let Some(deg) = self.body.degree_at_infinity() else {
            return Rational::zero();
        };
        self.body.leading_at_infinity() * rational::pow(&(&self.omega / int(2)), deg)
    }

    pub fn z_at(&self, x: f64) -> f64 {
        rational::to_f64(&self.omega) * x * x / 2.0
    }

    /// `(ln |f(x)|, sign f(x))` for `x > 0`; the logarithm keeps large
    /// gauge factors representable. Sign 0 means `f(x) = 0`.
    pub fn eval_log_abs(&self, x: f64) -> (f64, i32) {
        let z = self.z_at(x);
        let num = self.body.num().eval_f64(z);
        let den = self.body.den().eval_f64(z);
        let sign = (num.signum() * den.signum()) as i32;
        if num == 0.0 {
            return (f64::NEG_INFINITY, 0);
        }
        let ln = rational::to_f64(&self.x_power) * x.ln()
            + rational::to_f64(&self.exp_coeff) * z
            + num.abs().ln()
            - den.abs().ln();
        (ln, sign)
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        let (ln, sign) = self.eval_log_abs(x);
        sign as f64 * ln.exp()
    }
}

/// Body of `d/dx [x^p e^{cz} B]` relative to the gauge `x^{p-1} e^{cz}`:
/// `p B + 2cz B + 2z B'`.
pub(crate) fn raw_derivative_body(p: &Rational, c: &Rational, body: &RationalFn) -> RationalFn {
    let linear = RationalFn::from_poly(Poly::new(vec![p.clone(), c * int(2)]));
    &(&linear * body) + &body.derivative().mul_poly(&Poly::monomial(int(2), 1))
}

impl fmt::Debug for GaugedFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GaugedFunction({self})")
    }
}

impl fmt::Display for GaugedFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x^({}) e^(({}) z) [{}]", self.x_power, self.exp_coeff, self.body)
    }
}
