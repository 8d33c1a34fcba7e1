use alloc::string::String;
use alloc::vec::Vec;

use super::exact::{self, bilinear, mat_vec, IntMatrix};
use super::{describe, DivisorClass, LatticeError, LatticeIsometry, PicardLattice};

/// The result of contracting an exceptional class: the lattice `E⊥` and the
/// pushforward `D ↦ D + (D·E)E` into it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Contraction {
    pub lattice: PicardLattice,
    /// Basis of `E⊥` in the source coordinates, one row per vector.
    pub basis: IntMatrix,
    pub exceptional: DivisorClass,
    /// `G·E` in the source lattice, so that `D·E` is a plain dot product.
    e_dual: Vec<i64>,
}

impl Contraction {
    /// Pushforward of a class of the source lattice.
    pub fn push(&self, d: &DivisorClass) -> Result<DivisorClass, LatticeError> {
        if d.rank() != self.e_dual.len() {
            return Err(LatticeError::RankMismatch { expected: self.e_dual.len(), got: d.rank() });
        }
        let de = exact::dot(d.coeffs(), &self.e_dual);
        let image = d + &self.exceptional.scale(de);
        // image lies in E⊥, which the basis spans over ℤ
        let coeffs =
            exact::solve_in_hnf(&self.basis, image.coeffs()).expect("pushforward lies in the orthogonal complement");
        Ok(DivisorClass::new(coeffs))
    }
}

impl PicardLattice {
    /// Contracts the exceptional class `e`.
    pub fn contract(&self, e: &DivisorClass) -> Result<Contraction, LatticeError> {
        self.check(e)?;
        let square = self.square(e)?;
        let canonical = self.intersect(e, &self.canonical)?;
        if square != -1 || canonical != -1 {
            return Err(LatticeError::NotExceptionalClass { square, canonical });
        }
        let e_dual = mat_vec(&self.gram, e.coeffs());
        let basis = exact::kernel_basis(&e_dual);
        let gram: IntMatrix =
            basis.iter().map(|u| basis.iter().map(|v| bilinear(&self.gram, u, v)).collect()).collect();
        let labels: Vec<String> = basis.iter().map(|u| describe(&self.labels, u)).collect();
        let mut out = Contraction {
            lattice: PicardLattice { labels, gram, canonical: DivisorClass::zero(basis.len()) },
            basis,
            exceptional: e.clone(),
            e_dual,
        };
        let k_plus_e = &self.canonical + e;
        out.lattice.canonical = out.push(&k_plus_e)?;
        let lat = &out.lattice;
        if lat.determinant().abs() != 1 || lat.signature() != (1, lat.rank().saturating_sub(1)) {
            return Err(LatticeError::NonUnimodularComplement);
        }
        Ok(out)
    }
}

/// Blows up `lattice` and contracts the new class again, returning the
/// resulting lattice and the verified isometry from `lattice` to it (columns
/// are the images of the original basis vectors).
pub fn blow_up_round_trip(lattice: &PicardLattice) -> Result<(PicardLattice, LatticeIsometry), LatticeError> {
    let (up, e) = lattice.blow_up();
    let down = up.contract(&e)?;
    let r = lattice.rank();
    let mut cols = Vec::with_capacity(r);
    for i in 0..r {
        cols.push(down.push(&lattice.basis_class(i).embed())?.coeffs().to_vec());
    }
    let m = exact::transpose(&cols);
    let iso = LatticeIsometry::between(lattice, &down.lattice, m)?;
    if down.push(&lattice.canonical().embed())? != *down.lattice.canonical() {
        return Err(LatticeError::NotIsometry);
    }
    Ok((down.lattice, iso))
}
