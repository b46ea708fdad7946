//! Wronskians of gauged functions.
//!
//! Row `r` of the derivative matrix for `f_j = x^{p_j} e^{c_j z} B_j` is
//! `x^{p_j - r} e^{c_j z} B_j^{[r]}`, so the full gauge
//! `x^{sum p_j - m(m-1)/2} e^{(sum c_j) z}` factors out and only a
//! determinant over `Q(z)` remains. Columns are cleared to polynomials and the
//! determinant is taken by fraction-free elimination over `Q[z]`.

use num_traits::{One, Zero};

use super::gauged::{raw_derivative_body, GaugedFunction};
use super::poly::Poly;
use super::ratfn::RationalFn;
use super::rational::{int, Rational};

/// Determinant of a square polynomial matrix by Bareiss elimination with row
/// pivoting. Every division is exact.
pub fn bareiss_det(mut m: Vec<Vec<Poly>>) -> Poly {
    let n = m.len();
    if n == 0 {
        return Poly::one();
    }
    assert!(m.iter().all(|row| row.len() == n), "matrix must be square");
    let mut negate = false;
    let mut prev = Poly::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return Poly::zero();
            };
            m.swap(k, swap);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let cross = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = cross.exact_div(&prev).expect("Bareiss divisions are exact");
            }
            m[i][k] = Poly::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

/// Determinant of a square matrix over `Q(z)`.
pub fn rational_det(m: &[Vec<RationalFn>]) -> RationalFn {
    let n = m.len();
    let mut cleared: Vec<Vec<Poly>> = vec![Vec::with_capacity(n); n];
    let mut denom = Poly::one();
    for j in 0..n {
        let lcm = m.iter().fold(Poly::one(), |acc, row| {
            let d = row[j].den();
            let g = acc.gcd(d);
            (&acc * d).exact_div(&g).expect("gcd divides")
        });
        for (i, row) in m.iter().enumerate() {
            let f = &row[j];
            let factor = lcm.exact_div(f.den()).expect("lcm is a multiple");
            cleared[i].push(f.num() * &factor);
        }
        denom = &denom * &lcm;
    }
    RationalFn::new(bareiss_det(cleared), denom).expect("denominators are nonzero")
}

/// Wronskian `W(f_1, ..., f_m | x)`. An empty list gives the constant 1 and
/// linearly dependent inputs give the zero function.
pub fn wronskian(fs: &[GaugedFunction], omega: &Rational) -> GaugedFunction {
    let m = fs.len();
    if m == 0 {
        return GaugedFunction::constant(Rational::one(), omega.clone());
    }
    let mut cols = Vec::with_capacity(m);
    for f in fs {
        assert_eq!(f.omega(), omega, "gauged functions built with different omega");
        let mut col = Vec::with_capacity(m);
        let mut body = f.body().clone();
        for r in 0..m {
            if r > 0 {
                body = raw_derivative_body(&(f.x_power() - int(r as i64 - 1)), f.exp_coeff(), &body);
            }
            col.push(body.clone());
        }
        cols.push(col);
    }
    let matrix: Vec<Vec<RationalFn>> =
        (0..m).map(|r| cols.iter().map(|c| c[r].clone()).collect()).collect();
    let det = rational_det(&matrix);
    let x_power = fs.iter().fold(Rational::zero(), |acc, f| acc + f.x_power())
        - int((m * (m - 1) / 2) as i64);
    let exp_coeff = fs.iter().fold(Rational::zero(), |acc, f| acc + f.exp_coeff());
    GaugedFunction::new(x_power, exp_coeff, det, omega.clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn p(c: &[i64]) -> Poly {
        Poly::from_ints(c)
    }

    fn leibniz(m: &[Vec<Poly>]) -> Poly {
        let n = m.len();
        let mut total = Poly::zero();
        let mut perm: Vec<usize> = (0..n).collect();
        permute(&mut perm, 0, &mut |pi| {
            let inversions = (0..n)
                .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                .filter(|&(i, j)| pi[i] > pi[j])
                .count();
            let term = (0..n).fold(Poly::one(), |acc, i| &acc * &m[i][pi[i]]);
            total = if inversions % 2 == 0 { &total + &term } else { &total - &term };
        });
        total
    }

    fn permute(v: &mut Vec<usize>, k: usize, visit: &mut dyn FnMut(&[usize])) {
        if k == v.len() {
            visit(v);
            return;
        }
        for i in k..v.len() {
            v.swap(k, i);
            permute(v, k + 1, visit);
            v.swap(k, i);
        }
    }

    #[test]
    fn bareiss_matches_leibniz_expansion() {
        let m = vec![
            vec![p(&[1, 1]), p(&[0, 1]), p(&[2]), p(&[1, 0, 0, 1])],
            vec![p(&[0, 0, 1]), p(&[1]), p(&[-1, 1]), p(&[0, 3])],
            vec![p(&[3]), p(&[1, 0, 1]), p(&[0, 1]), p(&[5, -1])],
            vec![p(&[0, 2]), p(&[1, 1]), p(&[-4]), p(&[1, 1, 1])],
        ];
        assert_eq!(bareiss_det(m.clone()), leibniz(&m));
    }

    #[test]
    fn bareiss_pivots_past_zero() {
        let m = vec![vec![p(&[]), p(&[1])], vec![p(&[1]), p(&[0, 1])]];
        assert_eq!(bareiss_det(m), p(&[-1]));
    }

    #[test]
    fn single_and_repeated_entries() {
        let w = int(1);
        let f = GaugedFunction::from_poly(rat(3, 2), rat(1, 2), p(&[1, 2]), w.clone());
        assert_eq!(wronskian(std::slice::from_ref(&f), &w), f);
        assert!(wronskian(&[f.clone(), f.clone()], &w).is_zero());
        assert!(wronskian(&[f.clone(), f.scale(&int(3))], &w).is_zero());
    }

    #[test]
    fn two_by_two_matches_direct_formula() {
        let w = int(2);
        let f = GaugedFunction::from_poly(int(1), rat(1, 2), p(&[1, 1]), w.clone());
        let g = GaugedFunction::from_poly(rat(1, 2), rat(-1, 2), p(&[0, 1, 1]), w.clone());
        let direct = f.mul(&g.derivative()).sub(&f.derivative().mul(&g)).unwrap();
        assert_eq!(wronskian(&[f, g], &w), direct);
    }
}
