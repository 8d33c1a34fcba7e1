use core::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use crate::C64;

/// A homogeneous coordinate vector.
pub type Vec3 = [C64; 3];

const ZERO: C64 = C64::new(0.0, 0.0);
const ONE: C64 = C64::new(1.0, 0.0);

/// Dense complex 3×3 matrix, row-major.
#[derive(Clone, Copy, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize), serde(transparent))]
pub struct Mat3(pub [[C64; 3]; 3]);

impl Mat3 {
    pub const ZERO: Mat3 = Mat3([[ZERO; 3]; 3]);
    pub const IDENTITY: Mat3 = Mat3([[ONE, ZERO, ZERO], [ZERO, ONE, ZERO], [ZERO, ZERO, ONE]]);

    pub const fn new(rows: [[C64; 3]; 3]) -> Self {
        Mat3(rows)
    }

    /// Builds a matrix from real entries.
    pub fn from_real(rows: [[f64; 3]; 3]) -> Self {
        let mut m = Mat3::ZERO;
        for (i, row) in rows.iter().enumerate() {
            for (j, &x) in row.iter().enumerate() {
                m.0[i][j] = C64::new(x, 0.0);
            }
        }
        m
    }

    pub fn diag(d: [C64; 3]) -> Self {
        let mut m = Mat3::ZERO;
        for (i, &x) in d.iter().enumerate() {
            m.0[i][i] = x;
        }
        m
    }

    /// The matrix whose columns are `cols`.
    pub fn from_columns(cols: [Vec3; 3]) -> Self {
        let mut m = Mat3::ZERO;
        for (j, col) in cols.iter().enumerate() {
            for i in 0..3 {
                m.0[i][j] = col[i];
            }
        }
        m
    }

    pub fn column(&self, j: usize) -> Vec3 {
        [self.0[0][j], self.0[1][j], self.0[2][j]]
    }

    pub fn is_finite(&self) -> bool {
        self.0.iter().flatten().all(|z| z.re.is_finite() && z.im.is_finite())
    }

    pub fn transpose(&self) -> Self {
        let mut t = Mat3::ZERO;
        for i in 0..3 {
            for j in 0..3 {
                t.0[j][i] = self.0[i][j];
            }
        }
        t
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        let mut t = Mat3::ZERO;
        for i in 0..3 {
            for j in 0..3 {
                t.0[j][i] = self.0[i][j].conj();
            }
        }
        t
    }

    pub fn trace(&self) -> C64 {
        self.0[0][0] + self.0[1][1] + self.0[2][2]
    }

    pub fn det(&self) -> C64 {
        let m = &self.0;
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    }

    /// Sum of the three principal 2×2 minors.
    pub fn principal_minor_sum(&self) -> C64 {
        let m = &self.0;
        m[0][0] * m[1][1] - m[0][1] * m[1][0] + m[0][0] * m[2][2] - m[0][2] * m[2][0] + m[1][1] * m[2][2]
            - m[1][2] * m[2][1]
    }

    /// Inverse through the adjugate; `None` when the determinant vanishes.
    pub fn inverse(&self) -> Option<Self> {
        let d = self.det();
        if d == ZERO || !(d.re.is_finite() && d.im.is_finite()) {
            return None;
        }
        let m = &self.0;
        let cof = |r0: usize, r1: usize, c0: usize, c1: usize| m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0];
        let adj = [
            [cof(1, 2, 1, 2), -cof(0, 2, 1, 2), cof(0, 1, 1, 2)],
            [-cof(1, 2, 0, 2), cof(0, 2, 0, 2), -cof(0, 1, 0, 2)],
            [cof(1, 2, 0, 1), -cof(0, 2, 0, 1), cof(0, 1, 0, 1)],
        ];
        let inv_d = d.inv();
        let mut out = Mat3(adj);
        for z in out.0.iter_mut().flatten() {
            *z *= inv_d;
        }
        Some(out)
    }

    pub fn mul_vec(&self, v: &Vec3) -> Vec3 {
        let m = &self.0;
        [
            m[0][0] * v[0] + m[0][1] * v[1] + m[0][2] * v[2],
            m[1][0] * v[0] + m[1][1] * v[1] + m[1][2] * v[2],
            m[2][0] * v[0] + m[2][1] * v[1] + m[2][2] * v[2],
        ]
    }

    pub fn scale(&self, s: C64) -> Self {
        let mut out = *self;
        for z in out.0.iter_mut().flatten() {
            *z *= s;
        }
        out
    }

    pub fn frobenius_norm(&self) -> f64 {
        libm::sqrt(self.0.iter().flatten().map(|z| z.norm_sqr()).sum())
    }

    /// Largest entry modulus.
    pub fn max_abs(&self) -> f64 {
        self.0.iter().flatten().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// `self - λ I`.
    pub fn shift(&self, lambda: C64) -> Self {
        let mut out = *self;
        for i in 0..3 {
            out.0[i][i] -= lambda;
        }
        out
    }
}

impl Default for Mat3 {
    fn default() -> Self {
        Mat3::ZERO
    }
}

impl Index<(usize, usize)> for Mat3 {
    type Output = C64;
    fn index(&self, (i, j): (usize, usize)) -> &C64 {
        &self.0[i][j]
    }
}

impl IndexMut<(usize, usize)> for Mat3 {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut C64 {
        &mut self.0[i][j]
    }
}

impl Mul for Mat3 {
    type Output = Mat3;
    fn mul(self, rhs: Mat3) -> Mat3 {
        let mut out = Mat3::ZERO;
        for i in 0..3 {
            for j in 0..3 {
                out.0[i][j] = self.0[i][0] * rhs.0[0][j] + self.0[i][1] * rhs.0[1][j] + self.0[i][2] * rhs.0[2][j];
            }
        }
        out
    }
}

impl Mul<C64> for Mat3 {
    type Output = Mat3;
    fn mul(self, rhs: C64) -> Mat3 {
        self.scale(rhs)
    }
}

impl Add for Mat3 {
    type Output = Mat3;
    fn add(mut self, rhs: Mat3) -> Mat3 {
        for (a, b) in self.0.iter_mut().flatten().zip(rhs.0.iter().flatten()) {
            *a += *b;
        }
        self
    }
}

impl Sub for Mat3 {
    type Output = Mat3;
    fn sub(mut self, rhs: Mat3) -> Mat3 {
        for (a, b) in self.0.iter_mut().flatten().zip(rhs.0.iter().flatten()) {
            *a -= *b;
        }
        self
    }
}

impl Neg for Mat3 {
    type Output = Mat3;
    fn neg(self) -> Mat3 {
        self.scale(-ONE)
    }
}

pub fn norm(v: &Vec3) -> f64 {
    libm::sqrt(v.iter().map(|z| z.norm_sqr()).sum())
}

/// Bilinear cross product; for `u`, `v` spanning a plane it gives the
/// functional vanishing on that plane.
pub fn cross(u: &Vec3, v: &Vec3) -> Vec3 {
    [u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]]
}

/// Bilinear pairing `Σ uᵢ vᵢ` (no conjugation).
pub fn dot(u: &Vec3, v: &Vec3) -> C64 {
    u[0] * v[0] + u[1] * v[1] + u[2] * v[2]
}

pub fn scale_vec(v: &Vec3, s: C64) -> Vec3 {
    [v[0] * s, v[1] * s, v[2] * s]
}

pub fn sub_vec(u: &Vec3, v: &Vec3) -> Vec3 {
    [u[0] - v[0], u[1] - v[1], u[2] - v[2]]
}

pub fn add_vec(u: &Vec3, v: &Vec3) -> Vec3 {
    [u[0] + v[0], u[1] + v[1], u[2] + v[2]]
}

pub fn conj_vec(v: &Vec3) -> Vec3 {
    [v[0].conj(), v[1].conj(), v[2].conj()]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    #[test]
    fn inverse_round_trip() {
        let m = Mat3([
            [c(1.0, 2.0), c(0.5, 0.0), c(0.0, -1.0)],
            [c(0.0, 0.3), c(2.0, -1.0), c(1.0, 1.0)],
            [c(-1.0, 0.0), c(0.2, 0.2), c(3.0, 0.0)],
        ]);
        let inv = m.inverse().unwrap();
        let e = (m * inv - Mat3::IDENTITY).max_abs();
        assert!(e < 1e-14, "{e}");
    }

    #[test]
    fn singular_has_no_inverse() {
        let m = Mat3::from_real([[1.0, 2.0, 3.0], [2.0, 4.0, 6.0], [0.0, 1.0, 1.0]]);
        assert!(m.inverse().is_none());
    }

    #[test]
    fn cross_is_orthogonal_under_bilinear_pairing() {
        let u = [c(1.0, 1.0), c(0.0, 2.0), c(3.0, 0.0)];
        let v = [c(0.5, 0.0), c(1.0, -1.0), c(0.0, 1.0)];
        let w = cross(&u, &v);
        assert!(dot(&w, &u).norm() < 1e-14);
        assert!(dot(&w, &v).norm() < 1e-14);
    }
}
