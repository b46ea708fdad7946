//! Serialized reports. Exact quantities travel as decimal-string pairs and
//! floats sit next to the tolerance they were judged against.

use isodbt::admissibility::{AdmissibilityReport, InfinityClass};
use isodbt::chain::{ExtendedEigenstate, ExtendedPotential};
use isodbt::exact::{parse_rational, GaugedFunction, Poly, Rational};
use isodbt::numeric::{GramReport, GridSpec, SpectrumReport};
use isodbt::shape::SIReport;
use serde::{Deserialize, Serialize};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExactRational {
    pub num: String,
    pub den: String,
}

impl From<&Rational> for ExactRational {
    fn from(r: &Rational) -> Self {
        ExactRational { num: r.numer().to_string(), den: r.denom().to_string() }
    }
}

impl ExactRational {
    pub fn to_rational(&self) -> Option<Rational> {
        parse_rational(&format!("{}/{}", self.num, self.den)).ok()
    }
}

/// Coefficients in ascending powers of `z`.
pub fn coefficients(p: &Poly) -> Vec<ExactRational> {
    p.coeffs().iter().map(ExactRational::from).collect()
}

/// `x^x_power e^{exp_coeff z} numerator(z) / denominator(z)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GaugedJson {
    pub display: String,
    pub x_power: ExactRational,
    pub exp_coeff: ExactRational,
    pub numerator: Vec<ExactRational>,
    pub denominator: Vec<ExactRational>,
}

impl From<&GaugedFunction> for GaugedJson {
    fn from(f: &GaugedFunction) -> Self {
        GaugedJson {
            display: f.to_string(),
            x_power: f.x_power().into(),
            exp_coeff: f.exp_coeff().into(),
            numerator: coefficients(f.body().num()),
            denominator: coefficients(f.body().den()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GridJson {
    pub points: usize,
    pub x_min: f64,
    pub x_max: f64,
}

impl From<&GridSpec> for GridJson {
    fn from(g: &GridSpec) -> Self {
        GridJson { points: g.points, x_min: g.x_min, x_max: g.x_max }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Inputs {
    pub command: String,
    pub chain: String,
    pub omega: ExactRational,
    pub a: ExactRational,
    pub levels: u32,
    pub grid: Option<GridJson>,
    pub tolerance: f64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChargeJson {
    pub q_plus: i64,
    pub q_minus: i64,
    pub q: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrefixJson {
    pub step: String,
    pub prefix_charge: i64,
    pub threshold: ExactRational,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdmissibilityJson {
    pub admissible: bool,
    pub conditions_hold: bool,
    pub charge: ChargeJson,
    pub seed_conditions: Vec<bool>,
    /// Checks on the chain reordered with every `+` step first.
    pub prefix_checks: Vec<PrefixJson>,
    pub failing_prefix: Option<usize>,
    /// Roots of the Wronskian denominator on `(0, inf)`.
    pub nodeless_certificate: Option<usize>,
    pub origin_exponent: Option<ExactRational>,
    pub origin_exponent_exact: Option<ExactRational>,
    pub infinity_class: Option<String>,
    pub inverse_state_excluded: Option<bool>,
    /// `-` steps with `a > n` but `alpha <= n`.
    pub a_alpha_ambiguous: Vec<String>,
    pub rejection_reason: Option<String>,
}

impl From<&AdmissibilityReport> for AdmissibilityJson {
    fn from(r: &AdmissibilityReport) -> Self {
        AdmissibilityJson {
            admissible: r.admissible(),
            conditions_hold: r.conditions_hold(),
            charge: ChargeJson { q_plus: r.charge.q_plus, q_minus: r.charge.q_minus, q: r.charge.q },
            seed_conditions: r.seed_conditions.clone(),
            prefix_checks: r
                .prefix_checks
                .iter()
                .map(|p| PrefixJson {
                    step: p.step.to_string(),
                    prefix_charge: p.prefix_charge,
                    threshold: (&p.threshold).into(),
                    holds: p.holds,
                })
                .collect(),
            failing_prefix: r.failing_prefix,
            nodeless_certificate: r.nodeless_certificate,
            origin_exponent: r.origin_exponent.as_ref().map(Into::into),
            origin_exponent_exact: r.origin_exponent_exact.as_ref().map(Into::into),
            infinity_class: r.infinity_class.map(|c| {
                match c {
                    InfinityClass::Diverges => "diverges",
                    InfinityClass::Vanishes => "vanishes",
                }
                .to_string()
            }),
            inverse_state_excluded: r.inverse_state_excluded,
            a_alpha_ambiguous: r.a_alpha_ambiguous.iter().map(ToString::to_string).collect(),
            rejection_reason: r.rejection_reason(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PotentialJson {
    pub potential: GaugedJson,
    /// Extended minus base potential.
    pub correction: GaugedJson,
    /// Zero-free polynomial part of the seed Wronskian.
    pub denominator: Vec<ExactRational>,
    pub denominator_degree: usize,
}

impl From<&ExtendedPotential> for PotentialJson {
    fn from(v: &ExtendedPotential) -> Self {
        PotentialJson {
            potential: (&v.potential).into(),
            correction: (&v.correction).into(),
            denominator: coefficients(&v.denominator),
            denominator_degree: v.denominator.degree().unwrap_or(0),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EigenstateJson {
    pub k: u32,
    pub energy: ExactRational,
    pub numerator: Vec<ExactRational>,
    pub degree: usize,
    pub origin_exponent: Option<ExactRational>,
    pub function: GaugedJson,
}

impl From<&ExtendedEigenstate> for EigenstateJson {
    fn from(e: &ExtendedEigenstate) -> Self {
        EigenstateJson {
            k: e.k,
            energy: (&e.energy).into(),
            numerator: coefficients(&e.numerator),
            degree: e.numerator.degree().unwrap_or(0),
            origin_exponent: e.function.origin_exponent().as_ref().map(Into::into),
            function: (&e.function).into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShapeJson {
    pub delta_zero: bool,
    pub si_zero: bool,
    pub energy_gaps_invariant: bool,
    pub passed: bool,
    pub delta_residual: String,
    pub si_residual: String,
}

impl From<&SIReport> for ShapeJson {
    fn from(r: &SIReport) -> Self {
        ShapeJson {
            delta_zero: r.delta_residual.is_zero(),
            si_zero: r.si_residual.is_zero(),
            energy_gaps_invariant: r.energy_gaps_invariant,
            passed: r.passed(),
            delta_residual: r.delta_residual.to_string(),
            si_residual: r.si_residual.to_string(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpectrumJson {
    pub grid: GridJson,
    pub tolerance: f64,
    pub eigenvalues: Vec<f64>,
    pub targets: Vec<f64>,
    pub abs_deltas: Vec<f64>,
    pub rel_deltas: Vec<f64>,
    pub within_tolerance: bool,
    /// Deltas of the unextended oscillator on the same grid.
    pub base_abs_deltas: Vec<f64>,
    pub not_worse_than_base: bool,
}

impl SpectrumJson {
    pub fn new(chain: &SpectrumReport, base: &SpectrumReport, tolerance: f64) -> Self {
        SpectrumJson {
            grid: (&chain.grid).into(),
            tolerance,
            eigenvalues: chain.eigenvalues.clone(),
            targets: chain.targets.clone(),
            abs_deltas: chain.abs_deltas.clone(),
            rel_deltas: chain.rel_deltas.clone(),
            within_tolerance: chain.within(tolerance),
            base_abs_deltas: base.abs_deltas.clone(),
            not_worse_than_base: base.abs_deltas.iter().zip(&chain.abs_deltas).all(|(b, c)| b <= c),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OrthogonalityJson {
    pub tolerance: f64,
    /// `G_jk / sqrt(G_jj G_kk)`.
    pub normalized: Vec<Vec<f64>>,
    pub max_off_diagonal: f64,
    pub z_max: f64,
    pub within_tolerance: bool,
}

impl OrthogonalityJson {
    pub fn new(g: &GramReport, tolerance: f64) -> Self {
        OrthogonalityJson {
            tolerance,
            normalized: g.normalized.clone(),
            max_off_diagonal: g.max_off_diagonal(),
            z_max: g.z_max,
            within_tolerance: g.max_off_diagonal() < tolerance,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElpRow {
    pub k: u32,
    pub degree: usize,
    /// Primitive integer coefficients of the eigenstate numerator.
    pub coefficients: Vec<ExactRational>,
    /// Closed one-step formula, for chains of length one.
    pub explicit: Option<Vec<ExactRational>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableJson {
    /// Weight `z^exponent e^{-z} / denominator(z)^2`.
    pub weight_exponent: ExactRational,
    pub weight_denominator: Vec<ExactRational>,
    pub rows: Vec<ElpRow>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckJson {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReportBundle {
    pub format_version: u32,
    pub inputs: Inputs,
    pub admissibility: AdmissibilityJson,
    pub potential: Option<PotentialJson>,
    pub eigenstates: Vec<EigenstateJson>,
    pub shape_invariance: Option<ShapeJson>,
    pub spectrum: Option<SpectrumJson>,
    pub orthogonality: Option<OrthogonalityJson>,
    pub table: Option<TableJson>,
    pub checks: Vec<CheckJson>,
}

impl ReportBundle {
    pub fn failed_checks(&self) -> Vec<String> {
        self.checks.iter().filter(|c| !c.passed).map(|c| c.name.clone()).collect()
    }
}
