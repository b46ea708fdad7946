//! One-step exceptional Laguerre polynomials and orthogonality weights.

use super::spec::ChainSpec;
use super::transform::{seed_wronskian, zero_free_part};
use crate::error::{Error, Result};
use crate::exact::rational::int;
use crate::exact::{Poly, Rational};
use crate::isotonic::Sign;
use crate::laguerre::laguerre_or_zero;

/// Numerator of the level-`k` eigenstate after one step on the seed `(n, sign)`.
///
/// * `+`: `L_n^a(-z) L_k^{a+1}(z) + L_{n-1}^{a+1}(-z) L_k^a(z)`
/// * `-`: `(k - n + a) L_k^a L_n^{-a} - (a - n) L_k^a L_{n-1}^{-a}
///   - (k + a) L_{k-1}^a L_n^{-a}`, all at `z`, which needs `a > n`
///
/// with `a` standing for `alpha`. Both have degree `n + k`.
pub fn elp_one_step(sign: Sign, n: u32, k: u32, alpha: &Rational) -> Result<Poly> {
    let (n, k) = (n as i64, k as i64);
    let lag = |d: i64, a: &Rational, neg: bool| laguerre_or_zero(d, a, neg);
    let one = int(1);
    match sign {
        Sign::Plus => Ok(&(&lag(n, alpha, true) * &lag(k, &(alpha + &one), false))
            + &(&lag(n - 1, &(alpha + &one), true) * &lag(k, alpha, false))),
        Sign::Minus => {
            if *alpha <= int(n) {
                return Err(Error::SeedConstraint { n: n as u32, alpha: alpha.clone() });
            }
            let neg = -alpha;
            let first = (&lag(k, alpha, false) * &lag(n, &neg, false)).scale(&(int(k - n) + alpha));
            let second = (&lag(k, alpha, false) * &lag(n - 1, &neg, false)).scale(&(alpha - int(n)));
            let third = (&lag(k - 1, alpha, false) * &lag(n, &neg, false)).scale(&(int(k) + alpha));
            Ok(&(&first - &second) - &third)
        }
    }
}

/// `z^exponent e^{-z} / denominator(z)^2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightFunction {
    pub exponent: Rational,
    pub denominator: Poly,
}

impl WeightFunction {
    pub fn eval_f64(&self, z: f64) -> f64 {
        let d = self.denominator.eval_f64(z);
        crate::exact::rational::to_f64(&self.exponent).mul_add(z.ln(), -z).exp() / (d * d)
    }
}

/// Weight for the chain's eigenstate numerators: exponent `alpha + q`,
/// denominator the zero-free part of the seed Wronskian.
pub fn weight_function(chain: &ChainSpec) -> Result<WeightFunction> {
    Ok(WeightFunction {
        exponent: chain.params().alpha() + int(chain.charge().q),
        denominator: zero_free_part(&seed_wronskian(chain)?),
    })
}
