//! Lowest Dirichlet eigenvalues of `-d^2/dx^2 + V` on `[x_min, x_max]` by the
//! three-point finite-difference discretization.
//!
//! The discrete operator is a symmetric tridiagonal matrix; eigenvalues are
//! isolated by bisection on the inertia of `T - lambda I`.

use crate::error::{Error, Result};
use crate::exact::rational::to_f64;
use crate::isotonic::IsotonicParams;

/// Uniform grid on `[x_min, x_max]` with `points` nodes including both ends,
/// where the solution is pinned to zero.
#[derive(Clone, Debug, PartialEq)]
pub struct GridSpec {
    pub points: usize,
    pub x_min: f64,
    pub x_max: f64,
}

impl GridSpec {
    pub const DEFAULT_POINTS: usize = 40_001;

    pub fn new(points: usize, x_min: f64, x_max: f64) -> Result<Self> {
        let valid = points >= 3 && x_min > 0.0 && x_max > x_min && x_max.is_finite();
        if !valid {
            return Err(Error::InvalidParams(format!(
                "grid needs at least 3 points and 0 < x_min < x_max, got {points}:{x_min}:{x_max}"
            )));
        }
        Ok(GridSpec { points, x_min, x_max })
    }

    /// `x_min = min(1e-3, 1/(10a))` and `x_max = 3 sqrt(2 (E_max + |V0|)) / omega`,
    /// with `E_max` the highest requested level.
    pub fn default_for(params: &IsotonicParams, levels: usize) -> Self {
        let omega = to_f64(params.omega());
        let a = to_f64(params.a());
        let e_max = 2.0 * omega * levels.saturating_sub(1) as f64;
        let v0 = to_f64(&params.v0()).abs();
        GridSpec {
            points: Self::DEFAULT_POINTS,
            x_min: 1e-3_f64.min(1.0 / (10.0 * a)),
            x_max: 3.0 * (2.0 * (e_max + v0)).sqrt() / omega,
        }
    }

    pub fn step(&self) -> f64 {
        (self.x_max - self.x_min) / (self.points - 1) as f64
    }

    /// The same interval with the step halved.
    pub fn refined(&self) -> Self {
        GridSpec { points: 2 * self.points - 1, ..self.clone() }
    }

    pub fn nodes(&self) -> Vec<f64> {
        super::eval::linspace(self.x_min, self.x_max, self.points)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SpectrumReport {
    pub grid: GridSpec,
    /// Ascending.
    pub eigenvalues: Vec<f64>,
    pub targets: Vec<f64>,
    pub abs_deltas: Vec<f64>,
    /// Relative to `max(|target|, 1)`.
    pub rel_deltas: Vec<f64>,
}

impl SpectrumReport {
    pub fn max_abs_delta(&self) -> f64 {
        self.abs_deltas.iter().copied().fold(0.0, f64::max)
    }

    pub fn within(&self, tol: f64) -> bool {
        self.abs_deltas.iter().all(|d| *d <= tol)
    }
}

/// Symmetric tridiagonal matrix with constant off-diagonal `off`.
struct Tridiagonal {
    diag: Vec<f64>,
    off: f64,
}

impl Tridiagonal {
    fn discretize(potential: &dyn Fn(f64) -> f64, grid: &GridSpec) -> Result<Self> {
        let h = grid.step();
        let nodes = grid.nodes();
        let inner = &nodes[1..nodes.len() - 1];
        let kinetic = 2.0 / (h * h);
        let diag = inner
            .iter()
            .map(|&x| {
                let v = potential(x);
                if v.is_finite() {
                    Ok(kinetic + v)
                } else {
                    Err(Error::Numeric(format!(
                        "potential is not finite at x = {x:e}; raise x_min"
                    )))
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Tridiagonal { diag, off: -1.0 / (h * h) })
    }

    /// Number of eigenvalues below `lambda`: negative pivots of `T - lambda I`.
    fn count_below(&self, lambda: f64) -> usize {
        let off2 = self.off * self.off;
        let mut pivot = 1.0;
        let mut count = 0;
        for (i, &d) in self.diag.iter().enumerate() {
            pivot = if i == 0 { d - lambda } else { d - lambda - off2 / pivot };
            if pivot == 0.0 {
                pivot = -f64::EPSILON * (d.abs() + lambda.abs()).max(f64::MIN_POSITIVE);
            }
            if pivot < 0.0 {
                count += 1;
            }
        }
        count
    }

    fn lower_bound(&self) -> f64 {
        // Gershgorin
        self.diag.iter().copied().fold(f64::INFINITY, f64::min) - 2.0 * self.off.abs()
    }

    /// The `j`-th eigenvalue (0-based), bisected to relative width `1e-15`.
    fn eigenvalue(&self, j: usize) -> Result<f64> {
        let mut lo = self.lower_bound();
        let mut width = 1.0_f64;
        let mut hi = lo + width;
        while self.count_below(hi) <= j {
            width *= 2.0;
            hi = lo + width;
            if !hi.is_finite() || width > 1e300 {
                return Err(Error::Numeric(format!("cannot bracket eigenvalue {j}")));
            }
        }
        while hi - lo > 1e-15 * hi.abs().max(lo.abs()).max(1.0) {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                break;
            }
            if self.count_below(mid) <= j {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        Ok(0.5 * (lo + hi))
    }
}

/// Lowest `targets.len()` eigenvalues, compared against `targets`.
pub fn grid_spectrum_with_targets(
    potential: &dyn Fn(f64) -> f64,
    grid: &GridSpec,
    targets: &[f64],
) -> Result<SpectrumReport> {
    if targets.is_empty() {
        return Err(Error::InvalidParams("at least one level is required".to_string()));
    }
    if targets.len() > grid.points - 2 {
        return Err(Error::InvalidParams(format!(
            "{} levels requested from {} unknowns",
            targets.len(),
            grid.points - 2
        )));
    }
    let matrix = Tridiagonal::discretize(potential, grid)?;
    let eigenvalues = (0..targets.len())
        .map(|j| matrix.eigenvalue(j))
        .collect::<Result<Vec<_>>>()?;
    let abs_deltas: Vec<f64> = eigenvalues.iter().zip(targets).map(|(e, t)| (e - t).abs()).collect();
    let rel_deltas = abs_deltas.iter().zip(targets).map(|(d, t)| d / t.abs().max(1.0)).collect();
    Ok(SpectrumReport {
        grid: grid.clone(),
        eigenvalues,
        targets: targets.to_vec(),
        abs_deltas,
        rel_deltas,
    })
}

/// Lowest `levels` eigenvalues against the oscillator levels `2 k omega`.
pub fn grid_spectrum(
    potential: &dyn Fn(f64) -> f64,
    grid: &GridSpec,
    levels: usize,
    omega: f64,
) -> Result<SpectrumReport> {
    let targets: Vec<f64> = (0..levels).map(|k| 2.0 * omega * k as f64).collect();
    grid_spectrum_with_targets(potential, grid, &targets)
}

/// Richardson extrapolation of a second-order scheme from step `h` and `h/2`.
pub fn richardson(coarse: &SpectrumReport, fine: &SpectrumReport) -> SpectrumReport {
    let eigenvalues: Vec<f64> = coarse
        .eigenvalues
        .iter()
        .zip(&fine.eigenvalues)
        .map(|(c, f)| (4.0 * f - c) / 3.0)
        .collect();
    let abs_deltas: Vec<f64> =
        eigenvalues.iter().zip(&fine.targets).map(|(e, t)| (e - t).abs()).collect();
    let rel_deltas = abs_deltas.iter().zip(&fine.targets).map(|(d, t)| d / t.abs().max(1.0)).collect();
    SpectrumReport {
        grid: fine.grid.clone(),
        eigenvalues,
        targets: fine.targets.clone(),
        abs_deltas,
        rel_deltas,
    }
}

/// Observed convergence order per level from the spectra on `h`, `h/2`, `h/4`:
/// `log2((l_h - l_{h/2}) / (l_{h/2} - l_{h/4}))`.
pub fn observed_orders(h: &SpectrumReport, h2: &SpectrumReport, h4: &SpectrumReport) -> Vec<f64> {
    h.eigenvalues
        .iter()
        .zip(&h2.eigenvalues)
        .zip(&h4.eigenvalues)
        .map(|((a, b), c)| ((a - b) / (b - c)).abs().log2())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn harmonic(x: f64) -> f64 {
        // 1D oscillator on the half-line with a hard wall: odd states, 4k + 3
        x * x
    }

    #[test]
    fn half_oscillator_levels() {
        let grid = GridSpec::new(4001, 1e-9, 10.0).unwrap();
        let r = grid_spectrum_with_targets(&harmonic, &grid, &[3.0, 7.0, 11.0]).unwrap();
        assert!(r.within(1e-4), "{:?}", r.abs_deltas);
        assert!(r.eigenvalues.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn second_order_convergence() {
        let g = GridSpec::new(1001, 1e-9, 10.0).unwrap();
        let t = [3.0, 7.0];
        let r1 = grid_spectrum_with_targets(&harmonic, &g, &t).unwrap();
        let r2 = grid_spectrum_with_targets(&harmonic, &g.refined(), &t).unwrap();
        let r4 = grid_spectrum_with_targets(&harmonic, &g.refined().refined(), &t).unwrap();
        for p in observed_orders(&r1, &r2, &r4) {
            assert!((p - 2.0).abs() < 0.4, "order {p}");
        }
        let extrapolated = richardson(&r2, &r4);
        assert!(extrapolated.max_abs_delta() < r4.max_abs_delta() / 10.0);
    }

    #[test]
    fn rejects_bad_grids_and_singular_potentials() {
        assert!(GridSpec::new(2, 0.1, 1.0).is_err());
        assert!(GridSpec::new(10, 0.0, 1.0).is_err());
        assert!(GridSpec::new(10, 1.0, 0.5).is_err());
        let g = GridSpec::new(11, 1e-3, 1.0).unwrap();
        let r = grid_spectrum(&|x| if x < 0.5 { f64::INFINITY } else { 0.0 }, &g, 1, 1.0);
        assert!(matches!(r, Err(Error::Numeric(_))));
    }

    #[test]
    fn default_grid_heuristic() {
        let p = IsotonicParams::new(crate::exact::int(1), crate::exact::int(4)).unwrap();
        let g = GridSpec::default_for(&p, 4);
        assert_eq!(g.x_min, 1e-3);
        assert!((g.x_max - 3.0 * 21f64.sqrt()).abs() < 1e-12);
        let p = IsotonicParams::new(crate::exact::int(1), crate::exact::int(200)).unwrap();
        assert_eq!(GridSpec::default_for(&p, 1).x_min, 1.0 / 2000.0);
    }
}
