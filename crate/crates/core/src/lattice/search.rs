use alloc::vec;
use alloc::vec::Vec;

use super::exact::{bilinear, dot, mat_vec};
use super::{DivisorClass, LatticeError, PicardLattice};

/// Index of the first component `C` with `C·K < 0` and `C·C < 0`.
///
/// In a configuration `Σ aᵢCᵢ` of square zero whose members all have negative
/// square, adjunction forces such a component to exist; it is then a
/// `(-1)`-curve that can be contracted. The square-zero condition itself is
/// not checked.
pub fn find_contractible_component(
    components: &[(DivisorClass, i64)],
    lattice: &PicardLattice,
) -> Result<usize, LatticeError> {
    for (d, _) in components {
        lattice.check(d)?;
    }
    if components.iter().any(|&(_, a)| a <= 0) {
        return Err(LatticeError::NoCandidate);
    }
    for (i, (d, _)) in components.iter().enumerate() {
        if lattice.intersect(d, lattice.canonical())? < 0 && lattice.square(d)? < 0 {
            return Ok(i);
        }
    }
    Err(LatticeError::NoCandidate)
}

/// All `(a, b)` with `|a|, |b| ≤ bound` and `(aF + bB)² = 2ab - nb² = 1` on Σₙ,
/// in decreasing lexicographic order.
pub fn square_one_classes(n: u32, bound: i64) -> Vec<(i64, i64)> {
    let n = i128::from(n);
    let mut out = Vec::new();
    for b in (-bound..=bound).rev() {
        if b == 0 {
            continue;
        }
        // 2ab = 1 + nb²
        let b = i128::from(b);
        let rhs = 1 + n * b * b;
        if rhs % (2 * b) == 0 {
            let a = rhs / (2 * b);
            if a.abs() <= i128::from(bound) {
                out.push((a as i64, b as i64));
            }
        }
    }
    out.sort_unstable_by(|x, y| y.cmp(x));
    out
}

/// The subset of [`square_one_classes`] meeting both `F` and `B`
/// non-negatively, as the class of an irreducible curve distinct from them
/// must: `C·F = b ≥ 0` and `C·B = a - nb ≥ 0`.
pub fn square_one_curve_classes(n: u32, bound: i64) -> Vec<(i64, i64)> {
    square_one_classes(n, bound).into_iter().filter(|&(a, b)| b >= 0 && a - i64::from(n) * b >= 0).collect()
}

/// Every class with coefficients in `[-bound, bound]` satisfying `D·D = -1`
/// and `D·K = -1`, in decreasing lexicographic order.
pub fn enumerate_exceptional_classes(lattice: &PicardLattice, bound: i64) -> Vec<DivisorClass> {
    let r = lattice.rank();
    let k_dual = mat_vec(&lattice.gram, lattice.canonical.coeffs());
    let mut out = Vec::new();
    let mut v = vec![bound; r];
    loop {
        if dot(&v, &k_dual) == -1 && bilinear(&lattice.gram, &v, &v) == -1 {
            out.push(DivisorClass::new(v.clone()));
        }
        // odometer counting down, last coordinate fastest
        let mut i = r;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if v[i] > -bound {
                v[i] -= 1;
                break;
            }
            v[i] = bound;
        }
    }
}
