use fillings_core::dynamics::{BasinConfig, BasinProblem, BasinReport};
use fillings_core::su12::{GroupElement, Su12Error};
use fillings_core::Tolerances;
use rayon::prelude::*;

/// Parallel version of [`fillings_core::dynamics::basin_check`]. Every sample
/// draws from its own random stream and counts are merged by addition, so
/// the report equals the serial one for any thread count.
pub fn par_basin_check(a: &GroupElement, config: BasinConfig, tol: &Tolerances) -> Result<BasinReport, Su12Error> {
    let problem = BasinProblem::new(a, config, tol)?;
    let empty = problem.empty_report();
    Ok((0..problem.len())
        .into_par_iter()
        .fold(
            || empty,
            |mut r, i| {
                r.record(problem.verdict(i));
                r
            },
        )
        .reduce(|| empty, BasinReport::merge))
}
