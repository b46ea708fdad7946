//! Exact arithmetic in the variable `z`: rationals, polynomials, rational
//! functions, gauged closed forms, Wronskians and root counting.

pub mod gauged;
mod intpoly;
pub mod poly;
pub mod ratfn;
pub mod rational;
pub mod sturm;
pub mod wronskian;

pub use gauged::GaugedFunction;
pub use poly::Poly;
pub use ratfn::RationalFn;
pub use rational::{int, parse_rational, rat, Rational};
pub use sturm::{positive_root_count, sturm_count, Bound};
pub use wronskian::{bareiss_det, rational_det, wronskian};
