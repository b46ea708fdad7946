//! The four subcommands as pure functions from a chain to a report.

use isodbt::admissibility::admissible;
use isodbt::chain::{
    crum_potential, eigen_residual, eigenstate_determinant, eigenstate_iterated, eigenstate_wronskian,
    elp_one_step, extended_potential, iterated_potential, proportionality, weight_function, ChainSpec,
    ExtendedEigenstate,
};
use isodbt::exact::rational::to_f64;
use isodbt::isotonic::potential;
use isodbt::numeric::{grid_spectrum, orthogonality_matrix, FloatFn, GridSpec, QuadratureSpec};
use isodbt::shape::si_check;

use crate::bundle::*;
use crate::dsl::format_steps;
use crate::error::CliError;

/// Largest `--levels` accepted.
pub const MAX_LEVELS: u32 = 40;
/// Relative Gram off-diagonal bound.
pub const ORTHOGONALITY_TOL: f64 = 1e-10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Command {
    Build,
    Verify,
    Spectrum,
    Table,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Build => "build",
            Command::Verify => "verify",
            Command::Spectrum => "spectrum",
            Command::Table => "table",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Options {
    /// Eigenstates, spectrum levels and Gram size.
    pub levels: u32,
    /// Spectrum grid; the default heuristic when absent.
    pub grid: Option<GridSpec>,
    /// Absolute eigenvalue tolerance.
    pub tolerance: f64,
}

impl Default for Options {
    fn default() -> Self {
        Options { levels: 4, grid: None, tolerance: 1e-6 }
    }
}

/// A report, plus the reason the run must exit nonzero if any.
#[derive(Debug)]
pub struct Outcome {
    pub bundle: ReportBundle,
    pub failure: Option<CliError>,
}

fn check(name: &str, passed: bool, detail: impl Into<String>) -> CheckJson {
    CheckJson { name: name.to_string(), passed, detail: detail.into() }
}

pub fn run(command: Command, chain: &ChainSpec, options: &Options) -> Outcome {
    let report = admissible(chain);
    let mut bundle = ReportBundle {
        format_version: FORMAT_VERSION,
        inputs: Inputs {
            command: command.name().to_string(),
            chain: format_steps(chain.steps()),
            omega: chain.params().omega().into(),
            a: chain.params().a().into(),
            levels: options.levels,
            grid: options.grid.as_ref().map(Into::into),
            tolerance: options.tolerance,
        },
        admissibility: (&report).into(),
        potential: None,
        eigenstates: Vec::new(),
        shape_invariance: None,
        spectrum: None,
        orthogonality: None,
        table: None,
        checks: Vec::new(),
    };
    if !report.admissible() {
        let reason = report.rejection_reason().unwrap_or_else(|| "not admissible".to_string());
        return Outcome { bundle, failure: Some(CliError::Admissibility(reason)) };
    }
    let result = match command {
        Command::Build => build(chain, options, &mut bundle),
        Command::Verify => verify(chain, options, &mut bundle),
        Command::Spectrum => spectrum(chain, options, &mut bundle),
        Command::Table => table(chain, options, &mut bundle),
    };
    let failure = match result {
        Err(e) => Some(e),
        Ok(()) => {
            let failed = bundle.failed_checks();
            (!failed.is_empty()).then_some(CliError::Verification(failed))
        }
    };
    Outcome { bundle, failure }
}

fn eigenstates(chain: &ChainSpec, levels: u32) -> Result<Vec<ExtendedEigenstate>, CliError> {
    (0..levels).map(|k| eigenstate_wronskian(chain, k).map_err(CliError::from)).collect()
}

fn build(chain: &ChainSpec, options: &Options, bundle: &mut ReportBundle) -> Result<(), CliError> {
    bundle.potential = Some((&extended_potential(chain)?).into());
    bundle.eigenstates = eigenstates(chain, options.levels)?.iter().map(Into::into).collect();
    Ok(())
}

fn spectrum_section(chain: &ChainSpec, options: &Options) -> Result<SpectrumJson, CliError> {
    let params = chain.params();
    let levels = options.levels as usize;
    let grid = options.grid.clone().unwrap_or_else(|| GridSpec::default_for(params, levels));
    let omega = to_f64(params.omega());
    let extended = FloatFn::new(&extended_potential(chain)?.potential);
    let base = FloatFn::new(&potential(params));
    let chain_report = grid_spectrum(&|x| extended.eval(x), &grid, levels, omega)?;
    let base_report = grid_spectrum(&|x| base.eval(x), &grid, levels, omega)?;
    Ok(SpectrumJson::new(&chain_report, &base_report, options.tolerance))
}

fn spectrum(chain: &ChainSpec, options: &Options, bundle: &mut ReportBundle) -> Result<(), CliError> {
    let s = spectrum_section(chain, options)?;
    bundle.checks.push(check(
        "spectrum",
        s.within_tolerance,
        format!("max |E - 2k omega| = {:e}", s.abs_deltas.iter().copied().fold(0.0, f64::max)),
    ));
    bundle.spectrum = Some(s);
    Ok(())
}

fn table(chain: &ChainSpec, options: &Options, bundle: &mut ReportBundle) -> Result<(), CliError> {
    let weight = weight_function(chain)?;
    let one_step = match chain.steps() {
        [step] => Some(*step),
        _ => None,
    };
    let mut rows = Vec::new();
    let mut matches = true;
    for state in eigenstates(chain, options.levels)? {
        let explicit = match one_step {
            Some(s) => {
                let p = elp_one_step(s.sign, s.n, state.k, &chain.params().alpha())?;
                matches &= p.primitive().0 == state.numerator.primitive().0;
                Some(coefficients(&p))
            }
            None => None,
        };
        rows.push(ElpRow {
            k: state.k,
            degree: state.numerator.degree().unwrap_or(0),
            coefficients: coefficients(&state.numerator),
            explicit,
        });
    }
    if one_step.is_some() {
        bundle.checks.push(check("elp_formula", matches, "numerators proportional to the closed one-step form"));
    }
    bundle.table = Some(TableJson {
        weight_exponent: (&weight.exponent).into(),
        weight_denominator: coefficients(&weight.denominator),
        rows,
    });
    Ok(())
}

fn verify(chain: &ChainSpec, options: &Options, bundle: &mut ReportBundle) -> Result<(), CliError> {
    build(chain, options, bundle)?;
    let v = extended_potential(chain)?.potential;
    let mut checks = Vec::new();

    checks.push(check(
        "potential_paths",
        iterated_potential(chain)? == crum_potential(chain)?,
        "iterated steps against the Wronskian formula",
    ));

    let mut paths = true;
    let mut residual = true;
    let mut degrees = true;
    let mut base_degree = None;
    for k in 0..options.levels {
        let wr = eigenstate_wronskian(chain, k)?;
        paths &= proportionality(&wr.function, &eigenstate_determinant(chain, k)?.function).is_some();
        paths &= proportionality(&wr.function, &eigenstate_iterated(chain, k)?.function).is_some();
        residual &= eigen_residual(&wr, &v).is_zero();
        let d = wr.numerator.degree().unwrap_or(0);
        let base = *base_degree.get_or_insert(d);
        degrees &= d == base + k as usize;
    }
    checks.push(check("eigenstate_paths", paths, "Wronskian, determinant and iterated eigenstates proportional"));
    checks.push(check("schrodinger_residual", residual, "H psi_k - E_k psi_k vanishes identically"));
    checks.push(check("degree_bookkeeping", degrees, "numerator degree grows by one per level"));
    checks.push(check(
        "nodeless",
        bundle.admissibility.nodeless_certificate == Some(0),
        "no root of the Wronskian denominator on (0, inf)",
    ));

    let si = si_check(chain)?;
    checks.push(check("shape_invariance", si.passed(), "heredity residuals vanish"));
    bundle.shape_invariance = Some((&si).into());

    let s = spectrum_section(chain, options)?;
    checks.push(check(
        "spectrum",
        s.within_tolerance,
        format!("max |E - 2k omega| = {:e}", s.abs_deltas.iter().copied().fold(0.0, f64::max)),
    ));
    bundle.spectrum = Some(s);

    let gram = orthogonality_matrix(chain, options.levels.saturating_sub(1), &QuadratureSpec::default())?;
    let o = OrthogonalityJson::new(&gram, ORTHOGONALITY_TOL);
    checks.push(check("orthogonality", o.within_tolerance, format!("max off-diagonal {:e}", o.max_off_diagonal)));
    bundle.orthogonality = Some(o);

    bundle.checks = checks;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use isodbt::chain::Step;
    use isodbt::exact::int;
    use isodbt::isotonic::IsotonicParams;

    fn chain(steps: Vec<Step>, a: i64) -> ChainSpec {
        ChainSpec::new(steps, IsotonicParams::new(int(1), int(a)).unwrap()).unwrap()
    }

    #[test]
    fn verify_one_step() {
        let out = run(Command::Verify, &chain(vec![Step::plus(1)], 2), &Options::default());
        assert!(out.failure.is_none(), "{:?}", out.failure);
        assert_eq!(out.bundle.checks.len(), 8);
        assert!(out.bundle.checks.iter().all(|c| c.passed));
    }

    #[test]
    fn inadmissible_chain_stops_after_certificate() {
        // alpha = 3/2 does not exceed 2; the parser would refuse this chain
        let out = run(Command::Verify, &chain(vec![Step::minus(2)], 2), &Options::default());
        let failure = out.failure.expect("rejected");
        assert_eq!(failure.exit_code(), crate::error::exit::ADMISSIBILITY);
        assert!(!out.bundle.admissibility.admissible);
        assert!(out.bundle.potential.is_none());
    }

    #[test]
    fn table_matches_one_step_formula() {
        let opts = Options { levels: 5, ..Options::default() };
        let out = run(Command::Table, &chain(vec![Step::plus(1)], 2), &opts);
        assert!(out.failure.is_none());
        let t = out.bundle.table.unwrap();
        assert_eq!(t.rows.len(), 5);
        assert!(t.rows.iter().all(|r| r.degree == 1 + r.k as usize));
        assert_eq!(out.bundle.checks[0].name, "elp_formula");
    }
}
