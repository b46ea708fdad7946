//! Floating-point oracles for claims proven exactly elsewhere: a grid
//! eigensolver for isospectrality and quadrature for orthogonality.

pub mod eval;
pub mod quadrature;
pub mod spectrum;

pub use eval::{linspace, logspace, node_scan, FloatFn, FloatPoly};
pub use quadrature::{orthogonality_matrix, GramReport, QuadratureSpec};
pub use spectrum::{
    grid_spectrum, grid_spectrum_with_targets, observed_orders, richardson, GridSpec, SpectrumReport,
};
