//! The group SU(1,2) acting on the complex projective plane.
//!
//! Points are homogeneous vectors `[x : y : z]`, the Hermitian form is
//! `Q = -|x|² + |y|² + |z|²` and the unit ball is `{Q < 0}`.

mod algebra;
mod classify;
mod form;
mod group;
mod normal_form;

pub use algebra::AlgebraElement;
pub use classify::{
    classify, derivative_eigenvalues, fixed_points, Classification, FixedLine, FixedPoint, FixedSet, Kind,
    ParabolicKind, Roles,
};
pub use form::{locate, tangent_line, HermitianForm, Location, ProjectiveLine};
pub use group::{is_group_member, GroupElement};
pub use normal_form::{conjugate_to_normal_form, NormalForm, NormalParams};

use crate::linalg3::LinalgError;

#[derive(Clone, Copy, Debug, PartialEq, thiserror::Error)]
pub enum Su12Error {
    #[error("matrix is not in SU(1,2) (form defect {form_defect:e}, det defect {det_defect:e})")]
    NotInGroup { form_defect: f64, det_defect: f64 },
    #[error("degenerate: every point fixed")]
    EveryPointFixed,
    #[error("point is not on the boundary sphere")]
    NotOnBoundary,
    #[error("point is not fixed by the element")]
    NotFixed,
    #[error("element is elliptic")]
    NotNonElliptic,
    #[error("eigen data matches no conjugacy class at this tolerance")]
    Unresolved,
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}
