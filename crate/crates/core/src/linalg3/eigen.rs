use alloc::vec::Vec;

use super::cubic::cubic_roots_with_tol;
use super::mat::{Mat3, Vec3};
use super::point::ProjectivePoint;
use super::LinalgError;
use crate::C64;

/// One distinct eigenvalue with its algebraic multiplicity and a basis of
/// its eigenspace.
#[derive(Clone, Debug, PartialEq)]
pub struct EigenSpace {
    pub value: C64,
    pub multiplicity: usize,
    pub vectors: Vec<ProjectivePoint>,
}

/// Eigenvalues (with multiplicity) and eigenvectors of a 3×3 matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct EigenData {
    pub spaces: Vec<EigenSpace>,
}

impl EigenData {
    /// All three eigenvalues, repeated by multiplicity.
    pub fn eigenvalues(&self) -> [C64; 3] {
        let mut out = [C64::new(0.0, 0.0); 3];
        let mut k = 0;
        for s in &self.spaces {
            for _ in 0..s.multiplicity {
                out[k] = s.value;
                k += 1;
            }
        }
        out
    }
}

/// Jordan block sizes for each distinct eigenvalue, largest first.
#[derive(Clone, Debug, PartialEq)]
pub struct JordanShape {
    pub blocks: Vec<(C64, Vec<usize>)>,
}

impl JordanShape {
    /// Block sizes of the eigenvalue closest to `lambda`.
    pub fn blocks_near(&self, lambda: C64) -> Option<&[usize]> {
        self.blocks
            .iter()
            .min_by(|a, b| (a.0 - lambda).norm().total_cmp(&(b.0 - lambda).norm()))
            .map(|(_, b)| b.as_slice())
    }
}

/// Characteristic polynomial coefficients `(c2, c1, c0)` of
/// `λ³ + c2 λ² + c1 λ + c0`.
pub fn char_poly(m: &Mat3) -> (C64, C64, C64) {
    (-m.trace(), m.principal_minor_sum(), -m.det())
}

/// Eigen decomposition at the default merge tolerance.
pub fn eig3(m: &Mat3) -> Result<EigenData, LinalgError> {
    eig3_with_tol(m, super::cubic::DEFAULT_MERGE_TOL)
}

pub fn eig3_with_tol(m: &Mat3, tol: f64) -> Result<EigenData, LinalgError> {
    if !m.is_finite() {
        return Err(LinalgError::NonFinite);
    }
    let scale = m.frobenius_norm().max(1.0);
    let clusters = clusters(m, tol, scale);
    let rank_tol = tol * scale;
    let mut spaces = Vec::with_capacity(clusters.len());
    for (value, multiplicity) in clusters {
        let shifted = m.shift(value);
        let elim = Elimination::run(&shifted);
        let nullity = elim.nullity(multiplicity, rank_tol, scale)?;
        let vectors = elim.null_basis(nullity).into_iter().map(ProjectivePoint::new).collect::<Result<Vec<_>, _>>()?;
        spaces.push(EigenSpace { value, multiplicity, vectors });
    }
    Ok(EigenData { spaces })
}

/// Distinct eigenvalues with multiplicity; merged roots are bitwise equal.
fn clusters(m: &Mat3, tol: f64, scale: f64) -> Vec<(C64, usize)> {
    let (c2, c1, c0) = char_poly(m);
    let roots = cubic_roots_with_tol(c2, c1, c0, tol, scale);
    let mut out: Vec<(C64, usize)> = Vec::with_capacity(3);
    for r in roots {
        match out.iter_mut().find(|(v, _)| *v == r) {
            Some((_, k)) => *k += 1,
            None => out.push((r, 1)),
        }
    }
    out
}

/// Jordan block structure; eigenvalues are clustered at `tol` (relative to
/// the matrix norm) and block sizes read off from the ranks of
/// `(M - λI)` and `(M - λI)²`.
pub fn jordan_shape(m: &Mat3, tol: f64) -> Result<JordanShape, LinalgError> {
    if !m.is_finite() {
        return Err(LinalgError::NonFinite);
    }
    let scale = m.frobenius_norm().max(1.0);
    let clusters = clusters(m, tol, scale);
    for (i, a) in clusters.iter().enumerate() {
        for b in &clusters[i + 1..] {
            let gap = (a.0 - b.0).norm();
            if gap < 10.0 * tol * scale {
                return Err(LinalgError::AmbiguousClustering { gap });
            }
        }
    }
    let rank_tol = tol;
    let mut blocks = Vec::with_capacity(clusters.len());
    for (value, mult) in clusters {
        if mult == 1 {
            blocks.push((value, alloc::vec![1]));
            continue;
        }
        let n1 = m.shift(value);
        let r1 = Elimination::run(&n1).rank(rank_tol * scale)?;
        let r2 = Elimination::run(&(n1 * n1)).rank(rank_tol * scale * scale)?;
        blocks.push((value, block_sizes(mult, r1, r2)?));
    }
    Ok(JordanShape { blocks })
}

/// Block sizes for an eigenvalue of algebraic multiplicity `mult` from the
/// ranks of the first two powers of `M - λI`.
fn block_sizes(mult: usize, r1: usize, r2: usize) -> Result<Vec<usize>, LinalgError> {
    let floor = 3 - mult;
    let rank = |k: usize| -> usize {
        match k {
            0 => 3,
            _ if k >= mult => floor,
            1 => r1.clamp(floor, 3),
            _ => r2.clamp(floor, r1.clamp(floor, 3)),
        }
    };
    // number of blocks of size ≥ k is rank(k-1) - rank(k)
    let at_least = |k: usize| rank(k - 1).saturating_sub(rank(k));
    let mut sizes = Vec::new();
    for k in (1..=mult).rev() {
        let exactly = at_least(k) - if k < mult { at_least(k + 1) } else { 0 };
        for _ in 0..exactly {
            sizes.push(k);
        }
    }
    if sizes.iter().sum::<usize>() != mult {
        return Err(LinalgError::DegenerateNullSpace);
    }
    Ok(sizes)
}

/// Gaussian elimination with complete pivoting on a 3×3 matrix.
struct Elimination {
    u: [[C64; 3]; 3],
    col_perm: [usize; 3],
    pivots: [f64; 3],
}

impl Elimination {
    fn run(m: &Mat3) -> Self {
        let mut u = m.0;
        let mut col_perm = [0, 1, 2];
        let mut pivots = [0.0; 3];
        for k in 0..3 {
            let (mut pi, mut pj, mut best) = (k, k, -1.0);
            for i in k..3 {
                for j in k..3 {
                    let a = u[i][j].norm();
                    if a > best {
                        (pi, pj, best) = (i, j, a);
                    }
                }
            }
            u.swap(k, pi);
            for row in u.iter_mut() {
                row.swap(k, pj);
            }
            col_perm.swap(k, pj);
            pivots[k] = best;
            if best == 0.0 {
                continue;
            }
            for i in k + 1..3 {
                let f = u[i][k] / u[k][k];
                for j in k..3 {
                    let t = u[k][j];
                    u[i][j] -= f * t;
                }
            }
        }
        Elimination { u, col_perm, pivots }
    }

    /// Numerical rank. Pivots in the band `[zero_tol/10, zero_tol·10]` are
    /// too close to the threshold to call.
    fn rank(&self, zero_tol: f64) -> Result<usize, LinalgError> {
        let mut r = 0;
        for &p in &self.pivots {
            if p > zero_tol * 10.0 {
                r += 1;
            } else if p >= zero_tol / 10.0 {
                return Err(LinalgError::DegenerateNullSpace);
            }
        }
        Ok(r)
    }

    /// Null-space dimension for an eigenvalue of multiplicity `mult`: at least
    /// one, at most `mult`.
    fn nullity(&self, mult: usize, zero_tol: f64, scale: f64) -> Result<usize, LinalgError> {
        if mult == 1 {
            // only the last pivot may vanish
            if self.pivots[1] <= 1e-13 * scale {
                return Err(LinalgError::DegenerateNullSpace);
            }
            return Ok(1);
        }
        let rank = self.rank(zero_tol)?;
        Ok((3 - rank).clamp(1, mult))
    }

    /// Basis of the null space of dimension `nullity`, treating the last
    /// `nullity` pivots as zero.
    fn null_basis(&self, nullity: usize) -> Vec<Vec3> {
        let rank = 3 - nullity;
        let zero = C64::new(0.0, 0.0);
        let mut out = Vec::with_capacity(nullity);
        for free in rank..3 {
            // permuted unknowns y, with y[free] = 1 and other free ones zero
            let mut y = [zero; 3];
            y[free] = C64::new(1.0, 0.0);
            for i in (0..rank).rev() {
                let mut s = zero;
                for j in i + 1..3 {
                    s += self.u[i][j] * y[j];
                }
                y[i] = -s / self.u[i][i];
            }
            let mut x = [zero; 3];
            for k in 0..3 {
                x[self.col_perm[k]] = y[k];
            }
            out.push(x);
        }
        out
    }
}
