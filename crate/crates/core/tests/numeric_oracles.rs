//! Floating-point cross-checks of isospectrality and orthogonality.

use isodbt::chain::{eigenstate_wronskian, extended_potential, ChainSpec, Step};
use isodbt::exact::{int, positive_root_count};
use isodbt::isotonic::{potential, IsotonicParams};
use isodbt::numeric::*;

fn chain(steps: Vec<Step>, w: i64, a: i64) -> ChainSpec {
    ChainSpec::new(steps, IsotonicParams::new(int(w), int(a)).unwrap()).unwrap()
}

fn spectrum_of(c: &ChainSpec, grid: &GridSpec, levels: usize) -> SpectrumReport {
    let v = FloatFn::new(&extended_potential(c).unwrap().potential);
    let omega = isodbt::exact::rational::to_f64(c.params().omega());
    grid_spectrum(&|x| v.eval(x), grid, levels, omega).unwrap()
}

#[test]
fn base_levels() {
    let p = IsotonicParams::new(int(1), int(2)).unwrap();
    let v = FloatFn::new(&potential(&p));
    let r = grid_spectrum(&|x| v.eval(x), &GridSpec::default_for(&p, 4), 4, 1.0).unwrap();
    assert!(r.within(1e-6), "{:?}", r.abs_deltas);
    assert!(r.eigenvalues.windows(2).all(|w| w[0] < w[1]));
}

#[test]
fn extended_potentials_keep_the_spectrum() {
    for c in [
        chain(vec![Step::plus(1)], 2, 2),
        chain(vec![Step::plus(1), Step::minus(2)], 1, 4),
    ] {
        let r = spectrum_of(&c, &GridSpec::default_for(c.params(), 4), 4);
        assert!(r.within(1e-6), "{c}: {:?}", r.abs_deltas);
    }
}

#[test]
fn second_order_convergence() {
    let c = chain(vec![Step::plus(1), Step::minus(2)], 1, 4);
    let coarse = GridSpec::new(1001, 1e-3, GridSpec::default_for(c.params(), 4).x_max).unwrap();
    let mid = coarse.refined();
    let fine = mid.refined();
    let orders = observed_orders(&spectrum_of(&c, &coarse, 4), &spectrum_of(&c, &mid, 4), &spectrum_of(&c, &fine, 4));
    for p in orders {
        assert!((p - 2.0).abs() < 0.4, "{p}");
    }
}

#[test]
fn richardson_improves_on_the_fine_grid() {
    let c = chain(vec![Step::plus(2)], 1, 3);
    let grid = GridSpec::new(2001, 1e-3, GridSpec::default_for(c.params(), 3).x_max).unwrap();
    let fine = spectrum_of(&c, &grid.refined(), 3);
    let extrapolated = richardson(&spectrum_of(&c, &grid, 3), &fine);
    assert!(extrapolated.max_abs_delta() < 0.1 * fine.max_abs_delta());
}

#[test]
fn gram_matrices_are_diagonal() {
    let spec = QuadratureSpec::default();
    let cases = [
        (chain(vec![], 1, 2), 5, 1e-12),
        (chain(vec![Step::plus(1)], 1, 2), 5, 1e-10),
        (chain(vec![Step::plus(1), Step::minus(2)], 1, 4), 4, 1e-10),
    ];
    for (c, m, tol) in cases {
        let g = orthogonality_matrix(&c, m - 1, &spec).unwrap();
        assert_eq!(g.gram.len(), m as usize);
        assert!(g.max_off_diagonal() < tol, "{c}: {}", g.max_off_diagonal());
    }
}

#[test]
fn node_scan_agrees_with_sturm() {
    let grid = logspace(1e-3, 1.0, 2000)
        .into_iter()
        .chain(linspace(1.0, 14.0, 8000).into_iter().skip(1))
        .collect::<Vec<_>>();
    for c in [
        chain(vec![Step::plus(1)], 1, 2),
        chain(vec![Step::plus(1), Step::minus(2)], 1, 4),
        chain(vec![Step::minus(1), Step::plus(2), Step::plus(3)], 1, 4),
    ] {
        for k in 0..=4 {
            let psi = eigenstate_wronskian(&c, k).unwrap();
            let exact = positive_root_count(&psi.numerator.square_free()).unwrap();
            assert_eq!(exact, k as usize, "{c} k={k}");
            assert_eq!(node_scan(&psi.function, &grid), exact, "{c} k={k}");
        }
        let den = extended_potential(&c).unwrap().denominator;
        assert_eq!(positive_root_count(&den).unwrap(), 0);
    }
}
