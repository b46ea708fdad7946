//! The isotonic oscillator `V = omega^2 x^2/4 + a(a-1)/x^2 - omega(a + 1/2)`
//! on the half-line, its spectrum, RS functions, discrete parameter
//! symmetries and the regularized seed states built from them.

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{int, rat, GaugedFunction, Poly, Rational, RationalFn};
use crate::laguerre::laguerre_poly;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IsotonicParams {
    omega: Rational,
    a: Rational,
}

impl IsotonicParams {
    /// Requires `omega > 0` and `a >= 1`.
    pub fn new(omega: Rational, a: Rational) -> Result<Self> {
        if !omega.is_positive() {
            return Err(Error::InvalidParams(format!("omega must be positive, got {omega}")));
        }
        if a < Rational::one() {
            return Err(Error::InvalidParams(format!("a must be at least 1, got {a}")));
        }
        Ok(IsotonicParams { omega, a })
    }

    pub fn omega(&self) -> &Rational {
        &self.omega
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    /// `alpha = a - 1/2`.
    pub fn alpha(&self) -> Rational {
        &self.a - rat(1, 2)
    }

    /// `V0 = -omega (a + 1/2)`, which puts the ground level at zero.
    pub fn v0(&self) -> Rational {
        -(&self.omega * (&self.a + rat(1, 2)))
    }

    /// The same oscillator with `a` replaced by `a + 1`.
    pub fn shifted(&self) -> IsotonicParams {
        IsotonicParams { omega: self.omega.clone(), a: &self.a + int(1) }
    }
}

impl fmt::Display for IsotonicParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "omega={}, a={}", self.omega, self.a)
    }
}

/// Sign of a seed: `+` comes from `omega -> -omega`, `-` from `a -> 1 - a`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

/// The discrete symmetries of the potential.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Symmetry {
    /// `omega -> -omega`.
    Plus,
    /// `a -> 1 - a`.
    Minus,
    /// Both maps composed.
    Both,
}

/// Parameters after a discrete symmetry together with the energy the mapped
/// `n`-th state has in the original problem.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetryImage {
    pub omega: Rational,
    pub a: Rational,
    pub energy: Rational,
}

/// `V` as a function of `z` (no x-gauge).
pub fn potential(params: &IsotonicParams) -> GaugedFunction {
    GaugedFunction::from_z(potential_z(params), params.omega.clone())
}

/// `V(z) = omega z/2 + a(a-1) omega/(2z) + V0`.
pub fn potential_z(params: &IsotonicParams) -> RationalFn {
    let w = &params.omega;
    let a = &params.a;
    // z * V(z) as a polynomial
    let zv = Poly::new(vec![a * (a - int(1)) * w / int(2), params.v0(), w / int(2)]);
    RationalFn::new(zv, Poly::z()).expect("z is nonzero")
}

/// `E_n = 2 n omega`.
pub fn physical_energy(n: u32, params: &IsotonicParams) -> Rational {
    int(2 * n as i64) * &params.omega
}

/// `psi_n = x^a e^{-z/2} L_n^alpha(z)`.
pub fn physical_state(n: u32, params: &IsotonicParams) -> GaugedFunction {
    GaugedFunction::from_poly(
        params.a.clone(),
        rat(-1, 2),
        laguerre_poly(n, &params.alpha(), false),
        params.omega.clone(),
    )
}

/// `w_n = w0 + omega x L_{n-1}^{alpha+1}(z) / L_n^alpha(z)` with
/// `w0 = omega x/2 - a/x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RsFunction {
    pub ground: GaugedFunction,
    pub correction: GaugedFunction,
}

impl RsFunction {
    pub fn total(&self) -> GaugedFunction {
        self.ground.add(&self.correction).expect("RS parts share the x-odd gauge")
    }
}

pub fn rs_function(n: u32, params: &IsotonicParams) -> RsFunction {
    let w = params.omega.clone();
    let ground = GaugedFunction::x_pow(int(1), w.clone())
        .scale(&(&w / int(2)))
        .sub(&GaugedFunction::x_pow(int(-1), w.clone()).scale(&params.a))
        .expect("odd powers align");
    let correction = if n == 0 {
        GaugedFunction::zero(w)
    } else {
        let ratio = RationalFn::new(
            laguerre_poly(n - 1, &(params.alpha() + int(1)), false),
            laguerre_poly(n, &params.alpha(), false),
        )
        .expect("Laguerre polynomials are nonzero");
        GaugedFunction::new(int(1), Rational::zero(), ratio.scale(&w), w)
    };
    RsFunction { ground, correction }
}

/// Parameter map and transformed eigenvalue of the `n`-th state.
pub fn gamma_apply(symmetry: Symmetry, params: &IsotonicParams, n: u32) -> SymmetryImage {
    let w = &params.omega;
    let a = &params.a;
    let n_r = int(n as i64);
    let half = rat(1, 2);
    match symmetry {
        Symmetry::Plus => SymmetryImage {
            omega: -w.clone(),
            a: a.clone(),
            energy: -(int(2) * w * (a + &n_r + half)),
        },
        Symmetry::Minus => SymmetryImage {
            omega: w.clone(),
            a: int(1) - a,
            energy: -(int(2) * w * (a - &n_r - half)),
        },
        Symmetry::Both => SymmetryImage {
            omega: -w.clone(),
            a: int(1) - a,
            energy: -(int(2) * w * (n_r + int(1))),
        },
    }
}

/// A nodeless negative-energy solution used to seed a transformation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeedState {
    pub n: u32,
    pub sign: Sign,
    pub energy: Rational,
    pub function: GaugedFunction,
}

/// `phi_{n,+} = x^a e^{z/2} L_n^alpha(-z)`,
/// `phi_{n,-} = x^{1-a} e^{-z/2} L_n^{-alpha}(z)`; the latter needs
/// `alpha > n`.
pub fn seed_state(n: u32, sign: Sign, params: &IsotonicParams) -> Result<SeedState> {
    let alpha = params.alpha();
    let w = params.omega.clone();
    let (function, symmetry) = match sign {
        Sign::Plus => (
            GaugedFunction::from_poly(params.a.clone(), rat(1, 2), laguerre_poly(n, &alpha, true), w),
            Symmetry::Plus,
        ),
        Sign::Minus => {
            if alpha <= int(n as i64) {
                return Err(Error::SeedConstraint { n, alpha });
            }
            (
                GaugedFunction::from_poly(
                    int(1) - &params.a,
                    rat(-1, 2),
                    laguerre_poly(n, &-alpha, false),
                    w,
                ),
                Symmetry::Minus,
            )
        }
    };
    let energy = gamma_apply(symmetry, params, n).energy;
    Ok(SeedState { n, sign, energy, function })
}

/// `f'' + (E - V) f`, which vanishes exactly when `f` solves the Schrodinger
/// equation at energy `E`.
pub fn schrodinger_residual(
    f: &GaugedFunction,
    potential: &GaugedFunction,
    energy: &Rational,
) -> GaugedFunction {
    let w = f.omega().clone();
    let shifted = GaugedFunction::constant(energy.clone(), w)
        .sub(potential)
        .expect("potentials carry no gauge");
    f.derivative()
        .derivative()
        .add(&shifted.mul(f))
        .expect("both terms share the gauge of f")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(w: i64, a: Rational) -> IsotonicParams {
        IsotonicParams::new(int(w), a).unwrap()
    }

    fn x2(w: &Rational) -> GaugedFunction {
        GaugedFunction::x_pow(int(2), w.clone())
    }

    #[test]
    fn potential_closed_forms() {
        // omega=2, a=1: x^2 - 3
        let p = params(2, int(1));
        let expected = x2(&int(2)).sub(&GaugedFunction::constant(int(3), int(2))).unwrap();
        assert_eq!(potential(&p), expected);
        // omega=1, a=2: x^2/4 + 2/x^2 - 5/2
        let p = params(1, int(2));
        let expected = x2(&int(1))
            .scale(&rat(1, 4))
            .add(&GaugedFunction::x_pow(int(-2), int(1)).scale(&int(2)))
            .unwrap()
            .sub(&GaugedFunction::constant(rat(5, 2), int(1)))
            .unwrap();
        assert_eq!(potential(&p), expected);
    }

    #[test]
    fn base_shape_invariance() {
        let p = params(1, int(3));
        let w0 = rs_function(0, &p).ground;
        let lhs = potential(&p).add(&w0.derivative().scale(&int(2))).unwrap();
        let rhs = potential(&p.shifted())
            .add(&GaugedFunction::constant(int(2), int(1)))
            .unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn energies() {
        let p = params(2, int(1));
        assert_eq!(physical_energy(0, &p), int(0));
        assert_eq!(physical_energy(3, &p), int(12));
        let p = params(1, int(2));
        assert_eq!(gamma_apply(Symmetry::Plus, &p, 1).energy, int(-7));
        assert_eq!(gamma_apply(Symmetry::Both, &p, 0).energy, int(-2));
        assert_eq!(gamma_apply(Symmetry::Minus, &params(1, int(4)), 1).energy, int(-5));
    }

    #[test]
    fn rs_function_first_level() {
        let p = params(1, int(2));
        let w1 = rs_function(1, &p);
        // x / (5/2 - z)
        let expected = GaugedFunction::new(
            int(1),
            int(0),
            RationalFn::new(Poly::one(), Poly::new(vec![rat(5, 2), int(-1)])).unwrap(),
            int(1),
        );
        assert_eq!(w1.correction, expected);
        assert!(rs_function(0, &p).correction.is_zero());
    }

    #[test]
    fn rs_equation_holds() {
        let p = params(1, rat(5, 2));
        for n in 0..=4 {
            let w = rs_function(n, &p).total();
            let lhs = w
                .mul(&w)
                .sub(&w.derivative())
                .unwrap()
                .sub(&potential(&p))
                .unwrap()
                .add(&GaugedFunction::constant(physical_energy(n, &p), int(1)))
                .unwrap();
            assert!(lhs.is_zero(), "n={n}: {lhs}");
        }
    }

    #[test]
    fn seeds_solve_the_equation() {
        let p = params(1, int(4));
        for n in 0..=3 {
            for sign in [Sign::Plus, Sign::Minus] {
                let s = seed_state(n, sign, &p).unwrap();
                assert!(schrodinger_residual(&s.function, &potential(&p), &s.energy).is_zero());
            }
        }
        let s = seed_state(2, Sign::Minus, &p).unwrap();
        assert_eq!(s.energy, int(-3));
        assert_eq!(s.function.origin_exponent(), Some(int(-3)));
        assert!(matches!(
            seed_state(2, Sign::Minus, &params(1, int(2))),
            Err(Error::SeedConstraint { n: 2, .. })
        ));
    }
}
