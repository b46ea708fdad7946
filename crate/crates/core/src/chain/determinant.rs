//! Closed determinant forms for chain eigenstates and seed Wronskians.
//!
//! With the chain reordered so that its `q+` plus-steps come first, the
//! eigenstate of level `k` is proportional to
//! `x^{a+q} e^{-z/2} det Psi / det Phi`, where both matrices hold shifted
//! Laguerre polynomials only.

use num_traits::{One, Zero};

use super::spec::{ChainSpec, Step};
use super::transform::{canonicalize, rs_of, zero_free_part, ExtendedEigenstate};
use crate::error::{Error, Result};
use crate::exact::rational::{int, pochhammer, pow};
use crate::exact::{bareiss_det, rat, rational_det, GaugedFunction, Poly, Rational, RationalFn};
use crate::isotonic::Sign;
use crate::laguerre::laguerre_or_zero;

/// The `(m+1) x (m+1)` numerator matrix for level `k`.
pub fn psi_matrix(chain: &ChainSpec, k: u32) -> Vec<Vec<Poly>> {
    let chain = chain.reordered();
    let m = chain.len();
    let q_plus = chain.charge().q_plus as usize;
    let alpha = chain.params().alpha();
    let mut rows = Vec::with_capacity(m + 1);
    for i in 1..=m + 1 {
        let shift = int(i as i64 - 1);
        let mut row = Vec::with_capacity(m + 1);
        for (j, step) in chain.steps().iter().enumerate() {
            let n = step.n as i64;
            if j < q_plus {
                row.push(laguerre_or_zero(n, &(&alpha + &shift), true));
            } else {
                let c = pochhammer(&(int(n) - &alpha - &shift + int(1)), i as u32 - 1);
                let l = laguerre_or_zero(n, &(-&alpha - &shift), false);
                row.push(l.shift(m + 1 - i).scale(&c));
            }
        }
        let sign = if i % 2 == 1 { int(1) } else { int(-1) };
        row.push(laguerre_or_zero(k as i64 - i as i64 + 1, &(&alpha + &shift), false).scale(&sign));
        rows.push(row);
    }
    rows
}

/// The `m x m` denominator matrix.
pub fn phi_matrix(chain: &ChainSpec) -> Vec<Vec<Poly>> {
    let chain = chain.reordered();
    phi_matrix_of(chain.steps(), &chain.params().alpha(), |m, i| m - i)
}

/// Denominator matrix for steps already ordered `+` first; `minus_power(m, i)`
/// is the power of `z` in row `i` (1-based) of the `-` columns.
fn phi_matrix_of(
    steps: &[Step],
    alpha: &Rational,
    minus_power: impl Fn(usize, usize) -> usize,
) -> Vec<Vec<Poly>> {
    let m = steps.len();
    (1..=m)
        .map(|i| {
            let shift = int(i as i64 - 1);
            steps
                .iter()
                .map(|step| {
                    let n = step.n as i64;
                    match step.sign {
                        Sign::Plus => laguerre_or_zero(n - i as i64 + 1, &(alpha + &shift), true),
                        Sign::Minus => {
                            let c = pochhammer(&int(n + 1), i as u32 - 1);
                            laguerre_or_zero(n + i as i64 - 1, &(-alpha - &shift), false)
                                .shift(minus_power(m, i))
                                .scale(&c)
                        }
                    }
                })
                .collect()
        })
        .collect()
}

pub fn det_phi(chain: &ChainSpec) -> Poly {
    bareiss_det(phi_matrix(chain))
}

pub fn det_psi(chain: &ChainSpec, k: u32) -> Poly {
    bareiss_det(psi_matrix(chain, k))
}

/// Level-`k` eigenstate from the determinant pair.
pub fn eigenstate_determinant(chain: &ChainSpec, k: u32) -> Result<ExtendedEigenstate> {
    let phi = det_phi(chain);
    if phi.is_zero() {
        return Err(Error::ZeroWronskian);
    }
    let params = chain.params();
    let gauge = params.a() + int(chain.charge().q);
    let denominator = zero_free_part(&GaugedFunction::from_z(
        RationalFn::from_poly(phi.clone()),
        params.omega().clone(),
    ));
    let raw = GaugedFunction::new(
        gauge,
        rat(-1, 2),
        RationalFn::new(det_psi(chain, k), phi)?,
        params.omega().clone(),
    );
    canonicalize(chain, k, &raw, &denominator)
}

/// The determinant `Delta` with `W(phi_1..phi_m) = Delta * prod phi_j`, built
/// from seed energies `E_j` and RS functions `w_j`: row `r` holds
/// `E_j^{floor(r/2)}`, times `w_j` on odd rows, with overall sign `(-1)^l`
/// when `m = 2l`.
pub fn crum_krein_delta(chain: &ChainSpec) -> Result<GaugedFunction> {
    let seeds = chain.seeds()?;
    let m = seeds.len();
    let omega = chain.params().omega().clone();
    let mut rs_bodies = Vec::with_capacity(m);
    for s in &seeds {
        // w = x^{-1} S(z)
        rs_bodies.push(rs_of(&s.function)?.body_at_power(&int(-1))?);
    }
    let matrix: Vec<Vec<RationalFn>> = (0..m)
        .map(|r| {
            seeds
                .iter()
                .zip(&rs_bodies)
                .map(|(s, w)| {
                    let e = RationalFn::constant(pow(&s.energy, (r / 2) as i64));
                    if r % 2 == 1 {
                        &e * w
                    } else {
                        e
                    }
                })
                .collect()
        })
        .collect();
    let mut det = rational_det(&matrix);
    if m % 2 == 0 && (m / 2) % 2 == 1 {
        det = -det;
    }
    let odd_rows = (m / 2) as i64;
    Ok(GaugedFunction::new(int(-odd_rows), Rational::zero(), det, omega))
}

/// Product of the chain's seed functions.
pub fn seed_product(chain: &ChainSpec) -> Result<GaugedFunction> {
    let omega = chain.params().omega().clone();
    Ok(chain
        .seeds()?
        .iter()
        .fold(GaugedFunction::constant(Rational::one(), omega), |acc, s| acc.mul(&s.function)))
}

/// Whether every `-` step of the chain has `alpha > n`.
pub fn seeds_defined(chain: &ChainSpec) -> bool {
    let alpha = chain.params().alpha();
    chain
        .steps()
        .iter()
        .all(|s| s.sign == Sign::Plus || alpha > int(s.n as i64))
}
