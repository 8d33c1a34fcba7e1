//! JSON report shapes.

use fillings_core::dynamics::BasinReport;
use fillings_core::su12::{
    classify, conjugate_to_normal_form, derivative_eigenvalues, Classification, FixedLine, FixedPoint, GroupElement,
    NormalParams, ParabolicKind, Roles, Su12Error,
};
use fillings_core::{Tolerances, C64};
use serde::Serialize;

#[derive(Clone, Debug, Serialize)]
pub struct FixedPointReport {
    #[serde(flatten)]
    pub fixed: FixedPoint,
    /// Eigenvalues of the derivative of the projective action at the point.
    pub derivative_eigenvalues: Option<[C64; 2]>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassifyReport {
    pub kind: &'static str,
    pub subtype: Option<ParabolicKind>,
    pub eigenvalues: [C64; 3],
    pub fixed_points: Vec<FixedPointReport>,
    pub fixed_line: Option<FixedLine>,
    pub roles: Option<Roles>,
    /// Generator parameters of the normal form (non-elliptic elements).
    pub normal_form: Option<NormalParams>,
}

impl ClassifyReport {
    pub fn new(a: &GroupElement, tol: &Tolerances) -> Result<Self, Su12Error> {
        let Classification { kind, eigenvalues, fixed, roles } = classify(a, tol)?;
        let fixed_points = fixed
            .points
            .iter()
            .map(|f| FixedPointReport {
                fixed: *f,
                derivative_eigenvalues: derivative_eigenvalues(a, &f.point, tol).ok(),
            })
            .collect();
        let normal_form = roles.and_then(|_| conjugate_to_normal_form(a, tol).ok()).map(|nf| nf.params);
        Ok(ClassifyReport {
            kind: kind.name(),
            subtype: kind.subtype(),
            eigenvalues,
            fixed_points,
            fixed_line: fixed.line,
            roles,
            normal_form,
        })
    }
}

/// Basin check summary.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct BasinSummary {
    pub samples: usize,
    pub to_attractive: f64,
    pub backward_to_repulsive: f64,
    pub unresolved: usize,
    pub seed: u64,
}

impl From<BasinReport> for BasinSummary {
    fn from(r: BasinReport) -> Self {
        BasinSummary {
            samples: r.samples,
            to_attractive: r.fraction_to_attractive(),
            backward_to_repulsive: r.fraction_to_repulsive_backward(),
            unresolved: r.unresolved,
            seed: r.seed,
        }
    }
}
