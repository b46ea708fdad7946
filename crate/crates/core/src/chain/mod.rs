//! Chains of Darboux-Bäcklund transformations on the isotonic oscillator.

mod determinant;
mod elp;
mod spec;
mod transform;

pub use determinant::{
    crum_krein_delta, det_phi, det_psi, eigenstate_determinant, phi_matrix, psi_matrix,
    seed_product, seeds_defined,
};
pub use elp::{elp_one_step, weight_function, WeightFunction};
pub use spec::{charge, enumerate_chains, ChainSpec, ChargeRecord, Step};
pub use transform::{
    canonicalize, crum_potential, dbt_step, eigen_residual, eigenstate_iterated,
    eigenstate_wronskian, extended_potential, iterated_potential, positive_primitive,
    proportionality, rs_of, seed_wronskian, transported_seeds, zero_free_part,
    ExtendedEigenstate, ExtendedPotential,
};
