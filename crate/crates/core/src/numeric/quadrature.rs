//! Gram matrices of chain eigenstate numerators under the exceptional weight
//! `z^{alpha+q} e^{-z} / D(z)^2` on `(0, inf)`.
//!
//! The integral is taken in `t` with `z = t^2`, which makes the integrand
//! smooth at the origin for half-integer `alpha + q`, by adaptive
//! Gauss-Kronrod (7, 15) on `[0, T]`. `T` grows until the `e^{-z}` tail is
//! negligible against the tolerance.

use std::collections::BinaryHeap;

use super::eval::FloatPoly;
use crate::admissibility::admissible;
use crate::chain::{eigenstate_wronskian, weight_function, ChainSpec};
use crate::error::{Error, Result};
use crate::exact::rational::to_f64;

const KRONROD_NODES: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_5,
    0.0,
];
const KRONROD_WEIGHTS: [f64; 8] = [
    0.022_935_322_010_529_22,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_2,
    0.140_653_259_715_525_9,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_727_8,
];
/// Gauss weights on the odd Kronrod nodes 1, 3, 5, 7.
const GAUSS_WEIGHTS: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_7,
    0.381_830_050_505_118_9,
    0.417_959_183_673_469_4,
];

#[derive(Clone, Debug, PartialEq)]
pub struct QuadratureSpec {
    /// Target error relative to `sqrt(G_jj G_kk)`.
    pub tolerance: f64,
    pub max_intervals: usize,
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        QuadratureSpec { tolerance: 1e-13, max_intervals: 20_000 }
    }
}

/// Gauss-Kronrod estimate of a vector integral on `[a, b]` with an error
/// estimate per component.
fn gk15(f: &dyn Fn(f64, &mut [f64]), a: f64, b: f64, dim: usize) -> (Vec<f64>, Vec<f64>) {
    let mid = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let mut kronrod = vec![0.0; dim];
    let mut gauss = vec![0.0; dim];
    let mut buf = vec![0.0; dim];
    for (i, (&x, &wk)) in KRONROD_NODES.iter().zip(&KRONROD_WEIGHTS).enumerate() {
        let wg = if i % 2 == 1 { GAUSS_WEIGHTS[i / 2] } else { 0.0 };
        let points: &[f64] = if x == 0.0 { &[mid] } else { &[mid - half * x, mid + half * x] };
        for &t in points {
            f(t, &mut buf);
            for d in 0..dim {
                kronrod[d] += wk * buf[d];
                gauss[d] += wg * buf[d];
            }
        }
    }
    let value: Vec<f64> = kronrod.iter().map(|k| k * half).collect();
    let error = kronrod.iter().zip(&gauss).map(|(k, g)| ((k - g) * half).abs()).collect();
    (value, error)
}

struct Piece {
    a: f64,
    b: f64,
    value: Vec<f64>,
    error: Vec<f64>,
    priority: f64,
}

impl PartialEq for Piece {
    fn eq(&self, other: &Self) -> bool {
        self.priority == other.priority
    }
}
impl Eq for Piece {}
impl PartialOrd for Piece {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Piece {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.priority.total_cmp(&other.priority)
    }
}

/// Adaptive vector integration on `[a, b]`. `scale(values)` maps each
/// component to the magnitude its error is measured against.
fn integrate(
    f: &dyn Fn(f64, &mut [f64]),
    a: f64,
    b: f64,
    dim: usize,
    spec: &QuadratureSpec,
    scale: &dyn Fn(&[f64]) -> Vec<f64>,
) -> Result<Vec<f64>> {
    let (value, error) = gk15(f, a, b, dim);
    let mut heap = BinaryHeap::new();
    heap.push(Piece { a, b, value, error, priority: f64::INFINITY });
    loop {
        let mut total = vec![0.0; dim];
        let mut err = vec![0.0; dim];
        for p in heap.iter() {
            for d in 0..dim {
                total[d] += p.value[d];
                err[d] += p.error[d];
            }
        }
        let s = scale(&total);
        let worst = err.iter().zip(&s).map(|(e, s)| e / s).fold(0.0, f64::max);
        if worst <= spec.tolerance {
            return Ok(total);
        }
        if heap.len() >= spec.max_intervals {
            return Err(Error::Numeric(format!(
                "quadrature did not converge: relative error {worst:e} after {} intervals",
                heap.len()
            )));
        }
        let piece = heap.pop().expect("heap is nonempty");
        let m = 0.5 * (piece.a + piece.b);
        for (lo, hi) in [(piece.a, m), (m, piece.b)] {
            let (value, error) = gk15(f, lo, hi, dim);
            let priority = error.iter().zip(&s).map(|(e, s)| e / s).fold(0.0, f64::max);
            heap.push(Piece { a: lo, b: hi, value, error, priority });
        }
    }
}

/// Symmetric Gram matrix with off-diagonals relative to the diagonal.
#[derive(Clone, Debug, PartialEq)]
pub struct GramReport {
    pub gram: Vec<Vec<f64>>,
    /// `G_jk / sqrt(G_jj G_kk)`.
    pub normalized: Vec<Vec<f64>>,
    /// Upper end of the integration in `z`.
    pub z_max: f64,
}

impl GramReport {
    pub fn max_off_diagonal(&self) -> f64 {
        let n = self.normalized.len();
        (0..n)
            .flat_map(|j| (0..n).filter(move |&k| k != j).map(move |k| (j, k)))
            .map(|(j, k)| self.normalized[j][k].abs())
            .fold(0.0, f64::max)
    }
}

/// `int_0^inf P_j P_k z^{alpha+q} e^{-z} / D^2 dz` for levels `0..=max_level`.
pub fn orthogonality_matrix(chain: &ChainSpec, max_level: u32, spec: &QuadratureSpec) -> Result<GramReport> {
    let report = admissible(chain);
    if !report.admissible() {
        return Err(Error::NotAdmissible(report.rejection_reason().unwrap_or_default()));
    }
    let weight = weight_function(chain)?;
    let numerators = (0..=max_level)
        .map(|k| Ok(eigenstate_wronskian(chain, k)?.numerator))
        .collect::<Result<Vec<_>>>()?;
    let polys: Vec<FloatPoly> = numerators.iter().map(FloatPoly::new).collect();
    let den = FloatPoly::new(&weight.denominator);
    let exponent = to_f64(&weight.exponent);
    let n = polys.len();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|j| (j..n).map(move |k| (j, k))).collect();
    let diag_index: Vec<usize> = (0..n).map(|j| pairs.iter().position(|&p| p == (j, j)).unwrap()).collect();

    // dz = 2t dt
    let integrand = |t: f64, out: &mut [f64]| {
        let z = t * t;
        let d = den.eval(z);
        let w = if t == 0.0 {
            0.0
        } else {
            2.0 * (exponent * z.ln() - z + t.ln()).exp() / (d * d)
        };
        let values: Vec<f64> = polys.iter().map(|p| p.eval(z)).collect();
        for (slot, &(j, k)) in out.iter_mut().zip(&pairs) {
            *slot = w * values[j] * values[k];
        }
    };
    let scale = |total: &[f64]| -> Vec<f64> {
        pairs
            .iter()
            .map(|&(j, k)| (total[diag_index[j]].abs() * total[diag_index[k]].abs()).sqrt().max(f64::MIN_POSITIVE))
            .collect()
    };

    let degree = numerators.iter().filter_map(|p| p.degree()).max().unwrap_or(0) as f64;
    let power = exponent + 2.0 * degree - 2.0 * weight.denominator.degree().unwrap_or(0) as f64;
    let mut z_max = 2.0 * degree.max(power) + 20.0;
    loop {
        let total = integrate(&integrand, 0.0, z_max.sqrt(), pairs.len(), spec, &scale)?;
        // past z > 2 power the integrand decays at least like e^{-z/2},
        // so the tail is below twice its value at z_max
        let mut at_end = vec![0.0; pairs.len()];
        integrand(z_max.sqrt(), &mut at_end);
        let s = scale(&total);
        let tail = at_end
            .iter()
            .zip(&s)
            .map(|(v, s)| 2.0 * v.abs() / (2.0 * z_max.sqrt()) / s)
            .fold(0.0, f64::max);
        if tail < 1e-2 * spec.tolerance {
            let mut gram = vec![vec![0.0; n]; n];
            for (&(j, k), v) in pairs.iter().zip(&total) {
                gram[j][k] = *v;
                gram[k][j] = *v;
            }
            let normalized = (0..n)
                .map(|j| (0..n).map(|k| gram[j][k] / (gram[j][j] * gram[k][k]).sqrt()).collect())
                .collect();
            return Ok(GramReport { gram, normalized, z_max });
        }
        z_max += 10.0;
        if z_max > 1e4 {
            return Err(Error::Numeric("quadrature tail does not decay".to_string()));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chain::Step;
    use crate::exact::{int, rat};
    use crate::isotonic::IsotonicParams;

    #[test]
    fn gauss_kronrod_is_exact_for_low_degree() {
        let f = |t: f64, out: &mut [f64]| {
            out[0] = t.powi(20);
            out[1] = t.exp();
        };
        let (v, _) = gk15(&f, 0.0, 1.0, 2);
        assert!((v[0] - 1.0 / 21.0).abs() < 1e-15);
        assert!((v[1] - (1f64.exp() - 1.0)).abs() < 1e-15);
    }

    #[test]
    fn adaptive_integration_of_a_peak() {
        let f = |t: f64, out: &mut [f64]| out[0] = 1.0 / (1e-4 + (t - 0.3).powi(2));
        let spec = QuadratureSpec { tolerance: 1e-12, max_intervals: 5000 };
        let v = integrate(&f, 0.0, 1.0, 1, &spec, &|t| t.iter().map(|x| x.abs()).collect()).unwrap();
        let exact = 100.0 * ((70.0f64).atan() + (30.0f64).atan());
        assert!(((v[0] - exact) / exact).abs() < 1e-11);
    }

    #[test]
    fn classical_laguerre_gram() {
        let p = IsotonicParams::new(int(1), int(3)).unwrap();
        let r = orthogonality_matrix(&ChainSpec::empty(p), 5, &QuadratureSpec::default()).unwrap();
        assert!(r.max_off_diagonal() < 1e-12, "{}", r.max_off_diagonal());
        // ||L_0^{5/2}||^2 = Gamma(7/2)
        assert!((r.gram[0][0] - 15.0 / 8.0 * std::f64::consts::PI.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn refuses_inadmissible_chains() {
        let p = IsotonicParams::new(int(1), rat(9, 4)).unwrap();
        let c = ChainSpec::new(vec![Step::minus(2)], p).unwrap();
        assert!(matches!(
            orthogonality_matrix(&c, 2, &QuadratureSpec::default()),
            Err(Error::NotAdmissible(_))
        ));
    }
}
