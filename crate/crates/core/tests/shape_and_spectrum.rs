//! Heredity of shape invariance, checked exactly and through the spectrum.

use isodbt::admissibility::admissible;
use isodbt::chain::{enumerate_chains, ChainSpec, Step};
use isodbt::exact::int;
use isodbt::isotonic::IsotonicParams;
use isodbt::numeric::{grid_spectrum_with_targets, FloatFn, GridSpec};
use isodbt::shape::{delta_chain, energy_gaps_invariant, si_check, superpartner};

#[test]
fn heredity_on_two_step_grid() {
    for a in [2, 3, 4] {
        let p = IsotonicParams::new(int(1), int(a)).unwrap();
        for c in enumerate_chains(2, &[1, 2, 3], &p) {
            if !admissible(&c).admissible() {
                continue;
            }
            assert!(delta_chain(&c).unwrap().is_zero(), "a={a} {c}");
            assert!(si_check(&c).unwrap().passed(), "a={a} {c}");
        }
    }
}

#[test]
fn heredity_with_other_frequency() {
    let p = IsotonicParams::new(int(3), int(4)).unwrap();
    let c = ChainSpec::new(vec![Step::minus(1), Step::plus(3), Step::plus(2)], p).unwrap();
    assert!(admissible(&c).admissible());
    assert!(si_check(&c).unwrap().passed());
}

#[test]
fn gaps_are_invariant() {
    for a in [2, 3, 4] {
        assert!(energy_gaps_invariant(&IsotonicParams::new(int(2), int(a)).unwrap(), 6));
    }
}

#[test]
fn superpartner_spectrum_starts_at_two_omega() {
    let omega = 2;
    let p = IsotonicParams::new(int(omega), int(3)).unwrap();
    let c = ChainSpec::new(vec![Step::plus(1), Step::minus(2)], p.clone()).unwrap();
    let v = FloatFn::new(&superpartner(&c).unwrap());
    let targets: Vec<f64> = (1..=4).map(|k| (2 * k * omega) as f64).collect();
    let grid = GridSpec::default_for(&p, 5);
    let report = grid_spectrum_with_targets(&|x| v.eval(x), &grid, &targets).unwrap();
    assert!(report.within(1e-5), "{:?}", report.abs_deltas);
}
