//! JSON formats, the `fillings` command line and parallel basin sampling on
//! top of [`fillings_core`].

pub mod basin;
pub mod cli;
pub mod error;
pub mod input;
pub mod report;

pub use error::CliError;

/// Environment variable read as the default for `--tol`.
pub const TOL_ENV: &str = "FILLINGS_TOL";
