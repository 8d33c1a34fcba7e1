//! Dense complex 3×3 linear algebra.

mod cubic;
mod eigen;
mod expm;
mod mat;
mod point;

pub use cubic::{cubic_roots, cubic_roots_with_tol, root_scale, DEFAULT_MERGE_TOL};
pub use eigen::{char_poly, eig3, eig3_with_tol, jordan_shape, EigenData, EigenSpace, JordanShape};
pub use expm::mat_exp;
pub use mat::{add_vec, conj_vec, cross, dot, norm, scale_vec, sub_vec, Mat3, Vec3};
pub use point::{chordal_distance, ProjectivePoint};

#[derive(Clone, Copy, Debug, PartialEq, thiserror::Error)]
pub enum LinalgError {
    #[error("non-finite matrix or vector entry")]
    NonFinite,
    #[error("the zero vector is not a projective point")]
    ZeroVector,
    #[error("pivot tolerance cannot separate the rank of M - λI")]
    DegenerateNullSpace,
    #[error("eigenvalue clusters only {gap:e} apart; Jordan shape is tolerance-unstable")]
    AmbiguousClustering { gap: f64 },
}
