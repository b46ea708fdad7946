//! Float evaluation of exact objects. Coefficients cross into `f64` once, as
//! unevaluated `hi + lo` pairs, and polynomials are summed by compensated
//! Horner so cancellation near roots costs about twice the working precision.

use crate::exact::rational::to_f64;
use crate::exact::{GaugedFunction, Poly, Rational};

/// Polynomial with double-double coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct FloatPoly {
    hi: Vec<f64>,
    lo: Vec<f64>,
}

fn split(c: &Rational) -> (f64, f64) {
    let hi = to_f64(c);
    if !hi.is_finite() {
        return (hi, 0.0);
    }
    let rest = c - Rational::from_float(hi).expect("finite float");
    (hi, to_f64(&rest))
}

fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, a.mul_add(b, -p))
}

impl FloatPoly {
    pub fn new(p: &Poly) -> Self {
        let (hi, lo) = p.coeffs().iter().map(split).unzip();
        FloatPoly { hi, lo }
    }

    pub fn degree(&self) -> usize {
        self.hi.len().saturating_sub(1)
    }

    pub fn eval(&self, z: f64) -> f64 {
        let n = self.hi.len();
        if n == 0 {
            return 0.0;
        }
        let mut s = self.hi[n - 1];
        let mut c = self.lo[n - 1];
        for i in (0..n - 1).rev() {
            let (p, pe) = two_prod(s, z);
            let (t, se) = two_sum(p, self.hi[i]);
            s = t;
            c = c.mul_add(z, pe + se + self.lo[i]);
        }
        s + c
    }
}

/// `x^p e^{cz} N(z)/D(z)` with `z = omega x^2 / 2`, ready for float evaluation.
#[derive(Clone, Debug, PartialEq)]
pub struct FloatFn {
    x_power: f64,
    exp_coeff: f64,
    half_omega: f64,
    num: FloatPoly,
    den: FloatPoly,
}

impl FloatFn {
    pub fn new(f: &GaugedFunction) -> Self {
        FloatFn {
            x_power: to_f64(f.x_power()),
            exp_coeff: to_f64(f.exp_coeff()),
            half_omega: to_f64(f.omega()) / 2.0,
            num: FloatPoly::new(f.body().num()),
            den: FloatPoly::new(f.body().den()),
        }
    }

    pub fn z_at(&self, x: f64) -> f64 {
        self.half_omega * x * x
    }

    /// `(ln |f(x)|, sign)`, sign 0 where `f` vanishes.
    pub fn eval_log_abs(&self, x: f64) -> (f64, i32) {
        let z = self.z_at(x);
        let ratio = self.num.eval(z) / self.den.eval(z);
        if ratio == 0.0 {
            return (f64::NEG_INFINITY, 0);
        }
        let ln = self.x_power * x.ln() + self.exp_coeff * z + ratio.abs().ln();
        (ln, if ratio > 0.0 { 1 } else { -1 })
    }

    pub fn eval(&self, x: f64) -> f64 {
        if self.x_power == 0.0 && self.exp_coeff == 0.0 {
            let z = self.z_at(x);
            return self.num.eval(z) / self.den.eval(z);
        }
        let (ln, sign) = self.eval_log_abs(x);
        sign as f64 * ln.exp()
    }
}

/// Strict sign changes of `f` along `grid`, skipping exact zeros.
pub fn node_scan(f: &GaugedFunction, grid: &[f64]) -> usize {
    let f = FloatFn::new(f);
    let mut last = 0;
    let mut changes = 0;
    for &x in grid {
        let (_, s) = f.eval_log_abs(x);
        if s == 0 {
            continue;
        }
        if last != 0 && s != last {
            changes += 1;
        }
        last = s;
    }
    changes
}

/// `n` points evenly spaced on `[lo, hi]`, both ends included.
pub fn linspace(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    match n {
        0 => vec![],
        1 => vec![lo],
        _ => {
            let h = (hi - lo) / (n - 1) as f64;
            (0..n).map(|i| if i == n - 1 { hi } else { lo + h * i as f64 }).collect()
        }
    }
}

/// `n` points log-spaced on `[lo, hi]`, `lo > 0`, both ends included.
pub fn logspace(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    linspace(lo.ln(), hi.ln(), n)
        .into_iter()
        .enumerate()
        .map(|(i, l)| match i {
            0 => lo,
            i if i == n - 1 => hi,
            _ => l.exp(),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};
    use crate::isotonic::{physical_state, seed_state, IsotonicParams, Sign};
    use crate::laguerre::laguerre_poly;

    #[test]
    fn compensated_horner_beats_cancellation() {
        // (z - 1)^12 expanded, evaluated next to its root
        let p = Poly::from_ints(&[-1, 1]).pow(12);
        let z = 1.1f64;
        let exact = (z - 1.0).powi(12);
        let fp = FloatPoly::new(&p);
        assert!(((fp.eval(z) - exact) / exact).abs() < 1e-13);
        assert!(((p.eval_f64(z) - exact) / exact).abs() > 1e-6);
    }

    #[test]
    fn exact_double_double_coefficients() {
        let p = Poly::new(vec![rat(1, 3), rat(-2, 7)]);
        let fp = FloatPoly::new(&p);
        assert!((fp.eval(2.0) - (1.0 / 3.0 - 4.0 / 7.0)).abs() < 1e-16);
    }

    #[test]
    fn node_scans() {
        let params = IsotonicParams::new(int(1), int(2)).unwrap();
        let grid = linspace(1e-3, 12.0, 4000);
        let seed = seed_state(2, Sign::Plus, &params).unwrap();
        assert_eq!(node_scan(&seed.function, &grid), 0);
        for k in 0..=4 {
            assert_eq!(node_scan(&physical_state(k, &params), &grid), k as usize);
        }
        let l = GaugedFunction::from_poly(int(0), int(0), laguerre_poly(2, &rat(3, 2), false), int(2));
        // z = x^2 with omega = 2
        assert_eq!(node_scan(&l, &linspace(1e-3, 4.0, 2000)), 2);
    }

    #[test]
    fn spaced_grids_hit_endpoints() {
        let g = logspace(1e-3, 2.0, 17);
        assert_eq!((g[0], g[16]), (1e-3, 2.0));
        assert!(g.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(*linspace(0.5, 3.0, 11).last().unwrap(), 3.0);
    }
}
