//! Command-line front end: chain parsing, the `build`, `verify`, `spectrum`
//! and `table` subcommands, and their JSON and CSV outputs.
//!
//! Exit codes: 0 success, 2 admissibility rejection, 3 verification
//! failure, 4 input error. Failures print one JSON object to stderr.

pub mod app;
pub mod bundle;
pub mod dsl;
pub mod error;
pub mod export;
pub mod run;

pub use app::execute;
pub use bundle::ReportBundle;
pub use dsl::{parse_chain, parse_params};
pub use error::{CliError, Diagnostic};
pub use run::{run, Command, Options};
