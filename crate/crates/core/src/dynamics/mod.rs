//! Orbits of the projective action and empirical basin checks.

mod basin;
mod orbit;

pub use basin::{basin_check, BasinConfig, BasinProblem, BasinReport, Verdict};
pub use orbit::{converge, iterate, OrbitResult, Orbiter, Outcome};
