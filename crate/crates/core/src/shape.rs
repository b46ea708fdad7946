//! Shape invariance of extended potentials: the superpartner of the chain
//! potential at `a` is the chain potential at `a + 1` shifted by `2 omega`.

use crate::admissibility::admissible;
use crate::chain::{
    eigenstate_wronskian, extended_potential, rs_of, transported_seeds, ChainSpec,
};
use crate::error::{Error, Result};
use crate::exact::{int, GaugedFunction, Rational};
use crate::isotonic::{gamma_apply, rs_function, IsotonicParams, Symmetry};

fn require_admissible(chain: &ChainSpec) -> Result<()> {
    let report = admissible(chain);
    if report.admissible() {
        Ok(())
    } else {
        Err(Error::NotAdmissible(report.rejection_reason().unwrap_or_default()))
    }
}

/// RS function of the ground state of the chain potential.
pub fn ground_rs(chain: &ChainSpec) -> Result<GaugedFunction> {
    if chain.is_empty() {
        return Ok(rs_function(0, chain.params()).ground);
    }
    rs_of(&eigenstate_wronskian(chain, 0)?.function)
}

/// `V^(chain) + 2 (w_0^(chain))'`.
pub fn superpartner(chain: &ChainSpec) -> Result<GaugedFunction> {
    require_admissible(chain)?;
    let v = extended_potential(chain)?.potential;
    Ok(v.add(&ground_rs(chain)?.derivative().scale(&int(2)))?)
}

/// Energy of the last step's seed.
fn last_seed_energy(chain: &ChainSpec) -> Result<Rational> {
    Ok(chain.seeds()?.last().map(|s| s.energy.clone()).unwrap_or_default())
}

/// `E_m / (v_m(a) - w_0(a)) + w_0(a) + v_m(a+1)`, where `v_m` is the last
/// seed transported through the other steps and `w_0` the ground RS function
/// of the chain without its last step. Identically zero.
pub fn delta_chain(chain: &ChainSpec) -> Result<GaugedFunction> {
    let omega = chain.params().omega().clone();
    if chain.is_empty() {
        return Ok(GaugedFunction::zero(omega));
    }
    require_admissible(chain)?;
    let prefix = chain.prefix(chain.len() - 1);
    let w0 = ground_rs(&prefix)?;
    let v_here = transported_seeds(chain)?.pop().expect("chain is nonempty");
    let v_next = transported_seeds(&chain.shifted())?.pop().expect("chain is nonempty");
    let energy = GaugedFunction::constant(last_seed_energy(chain)?, omega);
    Ok(energy.div(&v_here.sub(&w0)?)?.add(&w0)?.add(&v_next)?)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SIReport {
    pub chain: ChainSpec,
    /// `delta_chain`, zero when shape invariance is inherited.
    pub delta_residual: GaugedFunction,
    /// `V~(a) - V^(chain)(a+1) - 2 omega`.
    pub si_residual: GaugedFunction,
    /// Pairwise seed-energy gaps are unchanged by `a -> a + 1`.
    pub energy_gaps_invariant: bool,
}

impl SIReport {
    pub fn passed(&self) -> bool {
        self.delta_residual.is_zero() && self.si_residual.is_zero() && self.energy_gaps_invariant
    }
}

pub fn si_check(chain: &ChainSpec) -> Result<SIReport> {
    let omega = chain.params().omega().clone();
    let tilde = superpartner(chain)?;
    let shifted = extended_potential(&chain.shifted())?.potential;
    let si_residual = tilde
        .sub(&shifted)?
        .sub(&GaugedFunction::constant(int(2) * &omega, omega))?;
    Ok(SIReport {
        chain: chain.clone(),
        delta_residual: delta_chain(chain)?,
        si_residual,
        energy_gaps_invariant: energy_gaps_invariant(chain.params(), 5),
    })
}

/// `E_{n,i}(a+1) - E_{m,j}(a+1) = E_{n,i}(a) - E_{m,j}(a)` for every pair of
/// seed energies with `n, m <= max_n`.
pub fn energy_gaps_invariant(params: &IsotonicParams, max_n: u32) -> bool {
    let shifted = params.shifted();
    let energies = |p: &IsotonicParams| -> Vec<Rational> {
        [Symmetry::Plus, Symmetry::Minus]
            .iter()
            .flat_map(|&s| (0..=max_n).map(move |n| (s, n)))
            .map(|(s, n)| gamma_apply(s, p, n).energy)
            .collect()
    };
    let here = energies(params);
    let there = energies(&shifted);
    here.iter().zip(&there).all(|(e1, f1)| {
        here.iter().zip(&there).all(|(e2, f2)| e1 - e2 == f1 - f2)
    })
}
