//! Darboux-Bäcklund steps, extended potentials and eigenstates built along a
//! chain of seeds.
//!
//! RS functions are `w = -f'/f`. A step on the seed RS function `v` maps a
//! potential `V` to `V + 2v'` and a solution `psi` to `psi' + v psi`.

use num_traits::Signed;

use super::spec::ChainSpec;
use crate::error::{Error, Result};
use crate::exact::rational::int;
use crate::exact::{rat, wronskian, GaugedFunction, Poly, Rational, RationalFn};
use crate::isotonic::{physical_energy, physical_state, potential};

/// `-f'/f`.
pub fn rs_of(f: &GaugedFunction) -> Result<GaugedFunction> {
    Ok(f.log_derivative()?.neg())
}

/// Transforms the RS function `source` (energy `target_energy`) by the step
/// on `seed` (energy `seed_energy`):
/// `-seed + (target_energy - seed_energy) / (seed - source)`.
pub fn dbt_step(
    source: &GaugedFunction,
    seed: &GaugedFunction,
    seed_energy: &Rational,
    target_energy: &Rational,
) -> Result<GaugedFunction> {
    if seed_energy == target_energy {
        return Err(Error::CoincidentEnergies(seed_energy.clone()));
    }
    let gap = GaugedFunction::constant(target_energy - seed_energy, seed.omega().clone());
    let ratio = gap.div(&seed.sub(source)?)?;
    Ok(ratio.sub(seed)?)
}

/// RS function of every seed carried through the steps that precede it:
/// entry `j` is the seed of step `j` expressed in the potential obtained
/// after steps `0..j`.
pub fn transported_seeds(chain: &ChainSpec) -> Result<Vec<GaugedFunction>> {
    let seeds = chain.seeds()?;
    let mut current = seeds
        .iter()
        .map(|s| rs_of(&s.function))
        .collect::<Result<Vec<_>>>()?;
    let mut out = Vec::with_capacity(seeds.len());
    for s in 0..seeds.len() {
        let pivot = current[s].clone();
        for j in s + 1..seeds.len() {
            current[j] = dbt_step(&current[j], &pivot, &seeds[s].energy, &seeds[j].energy)?;
        }
        out.push(pivot);
    }
    Ok(out)
}

/// Wronskian of the chain's seed functions, in the given order.
pub fn seed_wronskian(chain: &ChainSpec) -> Result<GaugedFunction> {
    let fs: Vec<GaugedFunction> = chain.seeds()?.into_iter().map(|s| s.function).collect();
    let w = wronskian(&fs, chain.params().omega());
    if w.is_zero() {
        return Err(Error::ZeroWronskian);
    }
    Ok(w)
}

/// `V - 2 (W'/W)'`, equal to the iterated `V + sum 2 v_j'`.
pub fn crum_potential(chain: &ChainSpec) -> Result<GaugedFunction> {
    let w = seed_wronskian(chain)?;
    let correction = w.log_derivative()?.derivative().scale(&int(-2));
    Ok(potential(chain.params()).add(&correction)?)
}

/// `V + 2 sum_j v_j'` over the transported seeds.
pub fn iterated_potential(chain: &ChainSpec) -> Result<GaugedFunction> {
    let mut v = potential(chain.params());
    for seed in transported_seeds(chain)? {
        v = v.add(&seed.derivative().scale(&int(2)))?;
    }
    Ok(v)
}

/// Polynomial part of a Wronskian-like function with every power of `z`
/// moved into the gauge, as a primitive polynomial with positive leading
/// coefficient.
pub fn zero_free_part(f: &GaugedFunction) -> Poly {
    let num = f.body().num();
    let ord = num.order_at_zero().unwrap_or(0);
    positive_primitive(&num.unshift(ord))
}

pub fn positive_primitive(p: &Poly) -> Poly {
    let (prim, c) = p.primitive();
    if c.is_negative() {
        -prim
    } else {
        prim
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtendedPotential {
    pub chain: ChainSpec,
    /// Wronskian of the seeds.
    pub wronskian: GaugedFunction,
    /// Zero-free polynomial part `D` of the Wronskian.
    pub denominator: Poly,
    /// The added term, extended minus base potential.
    pub correction: GaugedFunction,
    pub potential: GaugedFunction,
}

impl ExtendedPotential {
    /// The potential as a rational function of `z`.
    pub fn potential_z(&self) -> &RationalFn {
        self.potential.body()
    }
}

/// Builds the extended potential by both the Crum formula and the iterated
/// steps, and fails unless the two agree exactly.
pub fn extended_potential(chain: &ChainSpec) -> Result<ExtendedPotential> {
    let wronskian = seed_wronskian(chain)?;
    let crum = crum_potential(chain)?;
    let iterated = iterated_potential(chain)?;
    if crum != iterated {
        return Err(Error::Inconsistent(format!(
            "iterated and Crum potentials differ for {chain}"
        )));
    }
    let base = potential(chain.params());
    Ok(ExtendedPotential {
        chain: chain.clone(),
        denominator: zero_free_part(&wronskian),
        correction: crum.sub(&base)?,
        potential: crum,
        wronskian,
    })
}

/// Bound state of an extended potential, normalized as
/// `x^{a+q} e^{-z/2} numerator(z) / denominator(z)` with both polynomials
/// primitive and positive leading.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtendedEigenstate {
    pub k: u32,
    pub energy: Rational,
    pub function: GaugedFunction,
    pub numerator: Poly,
    pub denominator: Poly,
}

/// Rewrites `raw` in the chain gauge `x^{a+q} e^{-z/2} / denominator`.
pub fn canonicalize(
    chain: &ChainSpec,
    k: u32,
    raw: &GaugedFunction,
    denominator: &Poly,
) -> Result<ExtendedEigenstate> {
    if raw.is_zero() {
        return Err(Error::Inconsistent(format!("eigenstate {k} of {chain} vanishes")));
    }
    if raw.exp_coeff() != &rat(-1, 2) {
        return Err(Error::Inconsistent(format!(
            "eigenstate {k} of {chain} has exponential factor e^({} z)",
            raw.exp_coeff()
        )));
    }
    let params = chain.params();
    let gauge_power = params.a() + int(chain.charge().q);
    let body = raw.body_at_power(&gauge_power)?.mul_poly(denominator);
    if !body.is_polynomial() {
        return Err(Error::Inconsistent(format!(
            "eigenstate {k} of {chain} is not polynomial over the chain gauge: {body}"
        )));
    }
    let numerator = positive_primitive(&body.num().scale(&body.den().leading().recip()));
    let function = GaugedFunction::new(
        gauge_power,
        rat(-1, 2),
        RationalFn::new(numerator.clone(), denominator.clone())?,
        params.omega().clone(),
    );
    Ok(ExtendedEigenstate {
        k,
        energy: physical_energy(k, params),
        function,
        numerator,
        denominator: denominator.clone(),
    })
}

/// `psi_k^{(chain)} = W(phi_1, ..., phi_m, psi_k) / W(phi_1, ..., phi_m)`.
pub fn eigenstate_wronskian(chain: &ChainSpec, k: u32) -> Result<ExtendedEigenstate> {
    let denominator = seed_wronskian(chain)?;
    let mut fs: Vec<GaugedFunction> = chain.seeds()?.into_iter().map(|s| s.function).collect();
    fs.push(physical_state(k, chain.params()));
    let numerator = wronskian(&fs, chain.params().omega());
    let raw = numerator.div(&denominator)?;
    canonicalize(chain, k, &raw, &zero_free_part(&denominator))
}

/// `psi_k` pushed through each step by `psi <- psi' + v psi`.
pub fn eigenstate_iterated(chain: &ChainSpec, k: u32) -> Result<ExtendedEigenstate> {
    let mut psi = physical_state(k, chain.params());
    for v in transported_seeds(chain)? {
        psi = psi.derivative().add(&v.mul(&psi))?;
    }
    canonicalize(chain, k, &psi, &zero_free_part(&seed_wronskian(chain)?))
}

/// The constant `c` with `f = c g`, if there is one.
pub fn proportionality(f: &GaugedFunction, g: &GaugedFunction) -> Option<Rational> {
    if f.is_zero() || g.is_zero() {
        return None;
    }
    let ratio = f.div(g).ok()?;
    let body = ratio.body();
    (ratio.is_even_rational() && body.num().is_constant() && body.den().is_constant())
        .then(|| body.num().leading())
}

/// `f'' + (E - V) f`, zero for an exact eigenstate of `V`.
pub fn eigen_residual(state: &ExtendedEigenstate, potential: &GaugedFunction) -> GaugedFunction {
    crate::isotonic::schrodinger_residual(&state.function, potential, &state.energy)
}

