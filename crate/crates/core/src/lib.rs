pub mod error;
pub mod admissibility;
pub mod chain;
pub mod exact;
pub mod isotonic;
pub mod laguerre;
pub mod numeric;
pub mod shape;

pub use error::{Error, ExactError, Result};
