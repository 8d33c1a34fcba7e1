use alloc::vec::Vec;

use super::exact::{self, mat_vec, IntMatrix};
use super::{DivisorClass, LatticeError, PicardLattice};

/// The positive definite form `v ↦ λ² - D·D` attached to a class `C` with
/// `C·C = 1`, where `v = λC + D` and `D ∈ C⊥`.
///
/// With `λ = v·C` this equals `2λ² - v·v`, so integer vectors give integer
/// values; the form is homogeneous of degree two, so rational vectors reduce
/// to integer ones after clearing denominators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DefiniteForm {
    gram: IntMatrix,
    c: DivisorClass,
    c_dual: Vec<i64>,
}

impl DefiniteForm {
    pub fn new(lattice: &PicardLattice, c: &DivisorClass) -> Result<Self, LatticeError> {
        let sq = lattice.square(c)?;
        if sq != 1 {
            return Err(LatticeError::NotSquareOne(sq));
        }
        Ok(DefiniteForm { gram: lattice.gram.clone(), c: c.clone(), c_dual: mat_vec(&lattice.gram, c.coeffs()) })
    }

    pub fn class(&self) -> &DivisorClass {
        &self.c
    }

    /// `(λ, D·D)` for the decomposition `v = λC + D`.
    pub fn decompose(&self, v: &DivisorClass) -> Result<(i64, i64), LatticeError> {
        if v.rank() != self.c_dual.len() {
            return Err(LatticeError::RankMismatch { expected: self.c_dual.len(), got: v.rank() });
        }
        let lambda = exact::dot(v.coeffs(), &self.c_dual);
        let d = v - &self.c.scale(lambda);
        Ok((lambda, exact::bilinear(&self.gram, d.coeffs(), d.coeffs())))
    }

    pub fn value(&self, v: &DivisorClass) -> Result<i64, LatticeError> {
        let (lambda, dd) = self.decompose(v)?;
        Ok(exact::sub(exact::mul(lambda, lambda), dd))
    }
}

impl PicardLattice {
    pub fn definite_form(&self, c: &DivisorClass) -> Result<DefiniteForm, LatticeError> {
        DefiniteForm::new(self, c)
    }
}

/// An integer matrix `M` with `MᵀGM = G'`, acting on coefficient columns.
#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct LatticeIsometry {
    matrix: IntMatrix,
}

impl LatticeIsometry {
    /// An automorphism of `lattice`'s intersection form.
    pub fn new(lattice: &PicardLattice, matrix: IntMatrix) -> Result<Self, LatticeError> {
        Self::between(lattice, lattice, matrix)
    }

    /// A map from `source` onto `target` preserving the forms.
    pub fn between(source: &PicardLattice, target: &PicardLattice, matrix: IntMatrix) -> Result<Self, LatticeError> {
        let (r, s) = (source.rank(), target.rank());
        if r != s || matrix.len() != r || matrix.iter().any(|row| row.len() != r) {
            return Err(LatticeError::RankMismatch { expected: r, got: matrix.len() });
        }
        let pulled = exact::mat_mul(&exact::mat_mul(&exact::transpose(&matrix), &target.gram), &matrix);
        if pulled != source.gram || exact::determinant(&matrix).abs() != 1 {
            return Err(LatticeError::NotIsometry);
        }
        Ok(LatticeIsometry { matrix })
    }

    pub fn identity(rank: usize) -> Self {
        LatticeIsometry { matrix: exact::identity(rank) }
    }

    /// The reflection `v ↦ v + (v·r) r` in a root `r` with `r·r = -2`.
    pub fn reflection(lattice: &PicardLattice, r: &DivisorClass) -> Result<Self, LatticeError> {
        if lattice.square(r)? != -2 {
            return Err(LatticeError::NotIsometry);
        }
        let cols: Vec<Vec<i64>> = (0..lattice.rank())
            .map(|i| {
                let e = lattice.basis_class(i);
                let k = lattice.intersect(&e, r).expect("ranks checked");
                (&e + &r.scale(k)).coeffs().to_vec()
            })
            .collect();
        Self::new(lattice, exact::transpose(&cols))
    }

    /// Exchanges two basis vectors; an isometry when they have the same
    /// intersections with everything.
    pub fn swap(lattice: &PicardLattice, i: usize, j: usize) -> Result<Self, LatticeError> {
        let mut m = exact::identity(lattice.rank());
        m.swap(i, j);
        Self::new(lattice, m)
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn rank(&self) -> usize {
        self.matrix.len()
    }

    pub fn apply(&self, v: &DivisorClass) -> Result<DivisorClass, LatticeError> {
        if v.rank() != self.rank() {
            return Err(LatticeError::RankMismatch { expected: self.rank(), got: v.rank() });
        }
        Ok(DivisorClass::new(mat_vec(&self.matrix, v.coeffs())))
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &LatticeIsometry) -> LatticeIsometry {
        LatticeIsometry { matrix: exact::mat_mul(&self.matrix, &other.matrix) }
    }
}

/// Smallest `k ≤ bound` such that `iso^k` fixes every class of `set`.
pub fn isometry_order_on_classes(iso: &LatticeIsometry, set: &[DivisorClass], bound: u64) -> Result<u64, LatticeError> {
    let mut images = Vec::with_capacity(set.len());
    for s in set {
        let image = iso.apply(s)?;
        if !set.contains(&image) {
            return Err(LatticeError::SetNotInvariant);
        }
        images.push(image);
    }
    // iso permutes the set, so each orbit closes within |set| steps
    let mut k: u64 = 1;
    for (s, first) in set.iter().zip(images) {
        let mut cur = first;
        let mut len: u64 = 1;
        while cur != *s {
            cur = iso.apply(&cur)?;
            len += 1;
        }
        k = lcm(k, len);
        if k > bound {
            return Err(LatticeError::NotFoundWithinBound(bound));
        }
    }
    Ok(k)
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: u64, b: u64) -> u64 {
    (a / gcd(a, b)).checked_mul(b).expect("integer overflow in isometry order")
}
