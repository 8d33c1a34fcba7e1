use super::mat::{cross, norm, Vec3};
use super::LinalgError;
use crate::C64;

/// Relative slack under which two coordinate moduli count as tied for the
/// pivot; ties go to the smallest index.
const PIVOT_TIE: f64 = 1e-12;

/// A point of the complex projective plane, stored in canonical form: the
/// first coordinate of (numerically) maximal modulus is exactly `1`.
#[derive(Clone, Copy, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize), serde(transparent))]
pub struct ProjectivePoint([C64; 3]);

impl ProjectivePoint {
    pub fn new(coords: Vec3) -> Result<Self, LinalgError> {
        if !coords.iter().all(|z| z.re.is_finite() && z.im.is_finite()) {
            return Err(LinalgError::NonFinite);
        }
        let moduli = coords.map(|z| z.norm());
        let max = moduli.iter().copied().fold(0.0, f64::max);
        if max == 0.0 {
            return Err(LinalgError::ZeroVector);
        }
        let pivot = moduli.iter().position(|&m| m >= max * (1.0 - PIVOT_TIE)).unwrap_or(0);
        let inv = coords[pivot].inv();
        let mut out = coords.map(|z| z * inv);
        out[pivot] = C64::new(1.0, 0.0);
        Ok(ProjectivePoint(out))
    }

    pub fn from_real(coords: [f64; 3]) -> Result<Self, LinalgError> {
        Self::new(coords.map(|x| C64::new(x, 0.0)))
    }

    pub fn coords(&self) -> &Vec3 {
        &self.0
    }

    /// Sine of the Fubini–Study angle between the two lines of `C³`; zero iff
    /// the points agree. Evaluated through the wedge product so that small
    /// distances keep full relative precision.
    pub fn chordal_distance(&self, other: &ProjectivePoint) -> f64 {
        chordal_distance(&self.0, &other.0)
    }

    pub fn approx_eq(&self, other: &ProjectivePoint, tol: f64) -> bool {
        self.chordal_distance(other) <= tol
    }
}

#[cfg(feature = "serde")]
impl<'de> serde::Deserialize<'de> for ProjectivePoint {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = <[C64; 3]>::deserialize(d)?;
        ProjectivePoint::new(raw).map_err(serde::de::Error::custom)
    }
}

/// Chordal distance between two nonzero homogeneous vectors.
pub fn chordal_distance(u: &Vec3, v: &Vec3) -> f64 {
    let w = cross(u, v);
    let d = norm(&w) / (norm(u) * norm(v));
    d.min(1.0)
}
