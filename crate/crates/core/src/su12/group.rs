use super::form::HermitianForm;
use super::Su12Error;
use crate::linalg3::{LinalgError, Mat3, ProjectivePoint};
use crate::C64;

fn defects(m: &Mat3) -> (f64, f64) {
    let j = HermitianForm::J;
    let form = (m.adjoint() * j * *m - j).max_abs();
    let det = (m.det() - C64::new(1.0, 0.0)).norm();
    (form, det)
}

/// `‖M†JM − J‖∞ ≤ tol` and `|det M − 1| ≤ tol`.
pub fn is_group_member(m: &Mat3, tol: f64) -> bool {
    if !m.is_finite() {
        return false;
    }
    let (form, det) = defects(m);
    form <= tol && det <= tol
}

/// An element of SU(1,2).
#[derive(Clone, Copy, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize), serde(transparent))]
pub struct GroupElement(Mat3);

impl GroupElement {
    pub const IDENTITY: GroupElement = GroupElement(Mat3::IDENTITY);

    /// Checks membership at tolerance `tol`.
    pub fn new(m: Mat3, tol: f64) -> Result<Self, Su12Error> {
        if !m.is_finite() {
            return Err(LinalgError::NonFinite.into());
        }
        let (form_defect, det_defect) = defects(&m);
        if form_defect <= tol && det_defect <= tol {
            Ok(GroupElement(m))
        } else {
            Err(Su12Error::NotInGroup { form_defect, det_defect })
        }
    }

    pub(crate) const fn new_unchecked(m: Mat3) -> Self {
        GroupElement(m)
    }

    pub fn matrix(&self) -> &Mat3 {
        &self.0
    }

    /// `J A† J`, the exact inverse for group elements.
    pub fn inverse(&self) -> GroupElement {
        let j = HermitianForm::J;
        GroupElement(j * self.0.adjoint() * j)
    }

    pub fn compose(&self, other: &GroupElement) -> GroupElement {
        GroupElement(self.0 * other.0)
    }

    pub fn conjugate_by(&self, g: &GroupElement) -> GroupElement {
        GroupElement(g.0 * self.0 * g.inverse().0)
    }

    /// The projective action.
    pub fn apply(&self, p: &ProjectivePoint) -> Result<ProjectivePoint, LinalgError> {
        ProjectivePoint::new(self.0.mul_vec(p.coords()))
    }
}
