use super::Su12Error;
use crate::linalg3::{conj_vec, cross, dot, norm, LinalgError, Mat3, ProjectivePoint, Vec3};
use crate::C64;

/// The signature-(1,2) form `Q(v, w) = -v₁w̄₁ + v₂w̄₂ + v₃w̄₃`.
#[derive(Clone, Copy, Debug, Default)]
pub struct HermitianForm;

impl HermitianForm {
    pub const J: Mat3 = Mat3::new([
        [C64::new(-1.0, 0.0), C64::new(0.0, 0.0), C64::new(0.0, 0.0)],
        [C64::new(0.0, 0.0), C64::new(1.0, 0.0), C64::new(0.0, 0.0)],
        [C64::new(0.0, 0.0), C64::new(0.0, 0.0), C64::new(1.0, 0.0)],
    ]);

    pub fn pair(v: &Vec3, w: &Vec3) -> C64 {
        -v[0] * w[0].conj() + v[1] * w[1].conj() + v[2] * w[2].conj()
    }

    pub fn value(v: &Vec3) -> f64 {
        -v[0].norm_sqr() + v[1].norm_sqr() + v[2].norm_sqr()
    }

    /// `J v̄`: the dual coordinates of the Q-orthogonal complement of `v`.
    pub fn polar(v: &Vec3) -> Vec3 {
        [-v[0].conj(), v[1].conj(), v[2].conj()]
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize), serde(rename_all = "lowercase"))]
pub enum Location {
    Inside,
    Boundary,
    Outside,
}

/// Position of `p` relative to the sphere; `|Q(p,p)| ≤ tol·|p|²` is the boundary.
pub fn locate(p: &ProjectivePoint, tol: f64) -> Location {
    let v = p.coords();
    let q = HermitianForm::value(v);
    let n2 = norm(v) * norm(v);
    if q.abs() <= tol * n2 {
        Location::Boundary
    } else if q < 0.0 {
        Location::Inside
    } else {
        Location::Outside
    }
}

/// A projective line `{v : f·v = 0}`, stored by its canonical dual coordinates `f`.
#[derive(Clone, Copy, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize), serde(transparent))]
pub struct ProjectiveLine(ProjectivePoint);

impl ProjectiveLine {
    pub fn from_dual(f: Vec3) -> Result<Self, LinalgError> {
        ProjectivePoint::new(f).map(ProjectiveLine)
    }

    /// The line through two distinct points.
    pub fn through(p: &ProjectivePoint, q: &ProjectivePoint) -> Result<Self, LinalgError> {
        Self::from_dual(cross(p.coords(), q.coords()))
    }

    pub fn dual(&self) -> &Vec3 {
        self.0.coords()
    }

    /// Sine of the angle between `p` and the plane of the line.
    pub fn distance(&self, p: &ProjectivePoint) -> f64 {
        let (f, v) = (self.dual(), p.coords());
        (dot(f, v).norm() / (norm(f) * norm(v))).min(1.0)
    }

    pub fn contains(&self, p: &ProjectivePoint, tol: f64) -> bool {
        self.distance(p) <= tol
    }

    /// The intersection point of two distinct lines.
    pub fn meet(&self, other: &ProjectiveLine) -> Result<ProjectivePoint, LinalgError> {
        ProjectivePoint::new(cross(self.dual(), other.dual()))
    }

    /// Chordal distance between the dual points.
    pub fn angle(&self, other: &ProjectiveLine) -> f64 {
        self.0.chordal_distance(&other.0)
    }

    /// Orthonormal basis (Hermitian inner product) of the plane of the line.
    pub fn frame(&self) -> [Vec3; 2] {
        let g = conj_vec(self.dual());
        let k = (0..3).min_by(|&a, &b| g[a].norm().total_cmp(&g[b].norm())).unwrap_or(0);
        let gg = norm(&g) * norm(&g);
        // Gram-Schmidt of the basis vector least aligned with g
        let u: Vec3 = core::array::from_fn(|i| {
            let e = if i == k { C64::new(1.0, 0.0) } else { C64::new(0.0, 0.0) };
            e - g[i] * (g[k].conj() / gg)
        });
        let u = unit(&u);
        let w = unit(&conj_vec(&cross(&g, &u)));
        [u, w]
    }
}

fn unit(v: &Vec3) -> Vec3 {
    let n = norm(v);
    v.map(|z| z / n)
}

/// The projective line tangent to the sphere at the boundary point `p`.
pub fn tangent_line(p: &ProjectivePoint, tol: f64) -> Result<ProjectiveLine, Su12Error> {
    if locate(p, tol) != Location::Boundary {
        return Err(Su12Error::NotOnBoundary);
    }
    Ok(ProjectiveLine::from_dual(HermitianForm::polar(p.coords()))?)
}
