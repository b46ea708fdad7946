//! Generalized Laguerre polynomials `L_n^alpha(±z)` with rational parameter.

use num_traits::One;

use crate::exact::rational::{binomial, factorial, int};
use crate::exact::{Poly, Rational};

/// Which argument the polynomial is evaluated at.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Argument {
    Z,
    NegZ,
}

/// `L_n^alpha` evaluated at `+z` or `-z`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LaguerreSpec {
    pub n: u32,
    pub alpha: Rational,
    pub argument: Argument,
}

impl LaguerreSpec {
    pub fn poly(&self) -> Poly {
        laguerre_poly(self.n, &self.alpha, self.argument == Argument::NegZ)
    }
}

/// `L_n^alpha(z)` from the explicit series
/// `sum_k binom(n + alpha, n - k) (-z)^k / k!`, or `L_n^alpha(-z)` when
/// `negate_arg` is set.
pub fn laguerre_poly(n: u32, alpha: &Rational, negate_arg: bool) -> Poly {
    let top = alpha + int(n as i64);
    let coeffs = (0..=n)
        .map(|k| {
            let c = binomial(&top, (n - k) as i64) / factorial(k);
            if k % 2 == 1 {
                -c
            } else {
                c
            }
        })
        .collect();
    let p = Poly::new(coeffs);
    if negate_arg {
        p.negate_arg()
    } else {
        p
    }
}

/// `L_n^alpha(z)` for a possibly negative index; negative degrees give 0.
pub fn laguerre_or_zero(n: i64, alpha: &Rational, negate_arg: bool) -> Poly {
    if n < 0 {
        Poly::zero()
    } else {
        laguerre_poly(n as u32, alpha, negate_arg)
    }
}

/// `L_n^alpha(z)` from the three-term recurrence
/// `(k+1) L_{k+1} = (2k + 1 + alpha - z) L_k - (k + alpha) L_{k-1}`.
pub fn laguerre_by_recurrence(n: u32, alpha: &Rational) -> Poly {
    let mut prev = Poly::zero();
    let mut cur = Poly::one();
    for k in 0..n {
        let k_r = int(k as i64);
        let lin = Poly::new(vec![&k_r * int(2) + int(1) + alpha, -Rational::one()]);
        let next = &(&lin * &cur) - &prev.scale(&(&k_r + alpha));
        prev = cur;
        cur = next.scale(&(k_r + int(1)).recip());
    }
    cur
}

/// The classical identities among neighboring Laguerre polynomials.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Identity {
    /// `L_n^a + L_{n-1}^{a+1} - L_n^{a+1}`.
    Sum,
    /// `z L_{n-1}^{a+1} - a L_{n-1}^a + n L_n^{a-1}`.
    ThreeTerm,
    /// `(L_n^a)' + L_{n-1}^{a+1}`.
    Derivative,
    /// `(z^a e^{-z} L_n^a)' - (n+1) z^{a-1} e^{-z} L_{n+1}^{a-1}` with the
    /// gauge `z^{a-1} e^{-z}` divided out.
    WeightedDerivative,
}

impl Identity {
    pub const ALL: [Identity; 4] =
        [Identity::Sum, Identity::ThreeTerm, Identity::Derivative, Identity::WeightedDerivative];
}

/// Left side minus right side of `identity` at `(n, alpha)`; identically zero.
pub fn laguerre_shift(identity: Identity, n: u32, alpha: &Rational) -> Poly {
    let lag = |k: i64, a: Rational| laguerre_or_zero(k, &a, false);
    let n_i = n as i64;
    let one = Rational::one();
    match identity {
        Identity::Sum => {
            &(&lag(n_i, alpha.clone()) + &lag(n_i - 1, alpha + &one)) - &lag(n_i, alpha + &one)
        }
        Identity::ThreeTerm => {
            let a = &(&Poly::z() * &lag(n_i - 1, alpha + &one)) - &lag(n_i - 1, alpha.clone()).scale(alpha);
            &a + &lag(n_i, alpha - &one).scale(&int(n_i))
        }
        Identity::Derivative => &lag(n_i, alpha.clone()).derivative() + &lag(n_i - 1, alpha + &one),
        Identity::WeightedDerivative => {
            let l = lag(n_i, alpha.clone());
            let lhs = &(&l.scale(alpha) - &(&Poly::z() * &l)) + &(&Poly::z() * &l.derivative());
            &lhs - &lag(n_i + 1, alpha - &one).scale(&int(n_i + 1))
        }
    }
}

/// `L_n^alpha(0) = (alpha + 1)_n / n!`.
pub fn value_at_zero(n: u32, alpha: &Rational) -> Rational {
    binomial(&(alpha + int(n as i64)), n as i64)
}

pub fn is_identity_zero(identity: Identity, n: u32, alpha: &Rational) -> bool {
    laguerre_shift(identity, n, alpha).is_zero()
}

#[cfg(test)]
mod tests {
    use num_traits::Zero;

    use super::*;
    use crate::exact::rat;

    #[test]
    fn low_degree_forms() {
        assert_eq!(laguerre_poly(0, &rat(7, 3), false), Poly::one());
        assert_eq!(
            laguerre_poly(2, &rat(1, 2), false),
            Poly::new(vec![rat(15, 8), rat(-5, 2), rat(1, 2)])
        );
        assert_eq!(laguerre_poly(3, &rat(3, 2), false).eval(&Rational::zero()), rat(105, 16));
        assert_eq!(value_at_zero(3, &rat(3, 2)), rat(105, 16));
    }

    #[test]
    fn negated_argument() {
        let p = laguerre_poly(3, &rat(1, 2), true);
        let q = laguerre_poly(3, &rat(1, 2), false);
        assert_eq!(p.eval(&int(2)), q.eval(&int(-2)));
    }

    #[test]
    fn series_and_recurrence_agree() {
        for n in 0..=8 {
            for alpha in [rat(1, 2), int(1), rat(-7, 2), int(0)] {
                assert_eq!(laguerre_poly(n, &alpha, false), laguerre_by_recurrence(n, &alpha));
            }
        }
    }

    #[test]
    fn leading_coefficient() {
        for n in 0..=6u32 {
            let sign = if n % 2 == 0 { 1 } else { -1 };
            assert_eq!(laguerre_poly(n, &rat(5, 2), false).leading(), int(sign) / factorial(n));
        }
    }

    #[test]
    fn identities_vanish() {
        assert!(is_identity_zero(Identity::Sum, 3, &rat(1, 2)));
        assert!(is_identity_zero(Identity::Derivative, 4, &int(2)));
        assert!(is_identity_zero(Identity::WeightedDerivative, 2, &rat(3, 2)));
        for n in 0..=8 {
            for alpha in [rat(1, 2), int(1), rat(3, 2), rat(5, 2), rat(7, 2)] {
                for id in Identity::ALL {
                    assert!(is_identity_zero(id, n, &alpha), "{id:?} n={n} alpha={alpha}");
                }
            }
        }
    }

    #[test]
    fn three_term_with_minus_sign_fails() {
        // with -n L_n^{a-1} the residual at n = 1 is 2z - 2a, not zero
        let alpha = rat(3, 2);
        let n = 1u32;
        let with_minus = &(&(&Poly::z() * &laguerre_poly(0, &(&alpha + int(1)), false))
            - &laguerre_poly(0, &alpha, false).scale(&alpha))
            - &laguerre_poly(1, &(&alpha - int(1)), false).scale(&int(n as i64));
        assert_eq!(with_minus, Poly::new(vec![-&alpha * int(2), int(2)]));
    }
}
