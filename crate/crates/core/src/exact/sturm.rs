//! Exact real-root counting with Sturm sequences.

use num_traits::{Signed, Zero};

use super::poly::Poly;
use super::rational::{self, Rational};
use crate::error::ExactError;

/// Upper end of a counting interval.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Bound {
    Finite(Rational),
    PosInfinity,
}

/// Sturm chain of a square-free polynomial. Members are rescaled by positive
/// constants only, which preserves every sign the count depends on.
fn sturm_chain(p: &Poly) -> Vec<Poly> {
    let mut chain = vec![positive_primitive(p), positive_primitive(&p.derivative())];
    while !chain[chain.len() - 1].is_zero() {
        let n = chain.len();
        let (_, r) = chain[n - 2].div_rem(&chain[n - 1]).expect("nonzero divisor");
        chain.push(positive_primitive(&-r));
    }
    chain.pop();
    chain
}

fn positive_primitive(p: &Poly) -> Poly {
    let (prim, c) = p.primitive();
    if c.is_negative() {
        -prim
    } else {
        prim
    }
}

fn variations(signs: impl Iterator<Item = i32>) -> usize {
    let mut last = 0;
    let mut count = 0;
    for s in signs.filter(|&s| s != 0) {
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

/// Number of distinct real roots of `p` in the open interval `(lo, hi)`.
pub fn sturm_count(p: &Poly, lo: &Rational, hi: &Bound) -> Result<usize, ExactError> {
    if p.is_zero() {
        return Err(ExactError::ZeroPolynomial);
    }
    if let Bound::Finite(h) = hi {
        if h <= lo {
            return Err(ExactError::EmptyInterval);
        }
    }
    let mut q = p.square_free();
    // Sturm's theorem needs endpoints that are not roots
    for end in std::iter::once(lo).chain(match hi {
        Bound::Finite(h) => Some(h),
        Bound::PosInfinity => None,
    }) {
        if q.eval(end).is_zero() {
            let factor = Poly::new(vec![-end.clone(), Rational::from_integer(1.into())]);
            q = q.exact_div(&factor).expect("root gives a linear factor");
        }
    }
    if q.is_constant() {
        return Ok(0);
    }
    let chain = sturm_chain(&q);
    let at_lo = variations(chain.iter().map(|s| rational::sign(&s.eval(lo))));
    let at_hi = match hi {
        Bound::Finite(h) => variations(chain.iter().map(|s| rational::sign(&s.eval(h)))),
        Bound::PosInfinity => variations(chain.iter().map(Poly::sign_at_infinity)),
    };
    Ok(at_lo - at_hi)
}

/// Distinct real roots on `(0, +inf)`.
pub fn positive_root_count(p: &Poly) -> Result<usize, ExactError> {
    sturm_count(p, &Rational::zero(), &Bound::PosInfinity)
}
