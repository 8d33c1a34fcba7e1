//! Exact intersection lattices of rational surfaces.

mod contract;
pub(crate) mod exact;
mod forms;
mod search;

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Neg, Sub};

pub use contract::{blow_up_round_trip, Contraction};
pub use exact::{determinant, hermite_normal_form, inertia, kernel_basis, solve_in_hnf, unimodular_inverse, IntMatrix};
pub use forms::{isometry_order_on_classes, DefiniteForm, LatticeIsometry};
pub use search::{
    enumerate_exceptional_classes, find_contractible_component, square_one_classes, square_one_curve_classes,
};

use exact::{add, bilinear, mul};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum LatticeError {
    #[error("class has rank {got}, lattice has rank {expected}")]
    RankMismatch { expected: usize, got: usize },
    #[error("D·D + D·K = {0} is odd")]
    ParityViolation(i64),
    #[error("not an exceptional class: D·D = {square}, D·K = {canonical}")]
    NotExceptionalClass { square: i64, canonical: i64 },
    #[error("orthogonal complement is not unimodular of signature (1, r-1)")]
    NonUnimodularComplement,
    #[error("C·C = {0}, expected 1")]
    NotSquareOne(i64),
    #[error("the isometry maps a class of the set outside it")]
    SetNotInvariant,
    #[error("no exponent up to {0} fixes the set")]
    NotFoundWithinBound(u64),
    #[error("no component has D·K < 0 and D·D < 0")]
    NoCandidate,
    #[error("gram matrix is not square and symmetric")]
    NotSymmetric,
    #[error("gram matrix has determinant {0}, expected ±1")]
    NotUnimodular(i64),
    #[error("matrix does not preserve the intersection form")]
    NotIsometry,
    #[error("classes do not form a basis of the lattice")]
    NotABasis,
    #[error("unknown basis label {0:?}")]
    UnknownLabel(String),
}

/// Integer coefficient vector in a lattice basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize), serde(transparent))]
pub struct DivisorClass(Vec<i64>);

impl DivisorClass {
    pub fn new(coeffs: Vec<i64>) -> Self {
        DivisorClass(coeffs)
    }

    pub fn zero(rank: usize) -> Self {
        DivisorClass(vec![0; rank])
    }

    pub fn basis(rank: usize, i: usize) -> Self {
        let mut v = vec![0; rank];
        v[i] = 1;
        DivisorClass(v)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn scale(&self, k: i64) -> Self {
        DivisorClass(self.0.iter().map(|&x| mul(x, k)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    /// Appends a zero coefficient for a newly adjoined basis vector.
    pub fn embed(&self) -> Self {
        let mut v = self.0.clone();
        v.push(0);
        DivisorClass(v)
    }
}

impl From<Vec<i64>> for DivisorClass {
    fn from(v: Vec<i64>) -> Self {
        DivisorClass(v)
    }
}

impl Add for &DivisorClass {
    type Output = DivisorClass;
    fn add(self, rhs: &DivisorClass) -> DivisorClass {
        assert_eq!(self.rank(), rhs.rank(), "adding classes of different rank");
        DivisorClass(self.0.iter().zip(&rhs.0).map(|(&a, &b)| add(a, b)).collect())
    }
}

impl Sub for &DivisorClass {
    type Output = DivisorClass;
    fn sub(self, rhs: &DivisorClass) -> DivisorClass {
        self + &(-rhs)
    }
}

impl Neg for &DivisorClass {
    type Output = DivisorClass;
    fn neg(self) -> DivisorClass {
        self.scale(-1)
    }
}

/// Renders `coeffs` as a combination of `labels`, e.g. `2H-E1-E2`.
pub fn describe(labels: &[String], coeffs: &[i64]) -> String {
    let mut out = String::new();
    for (label, &c) in labels.iter().zip(coeffs) {
        if c == 0 {
            continue;
        }
        let sign = if c < 0 {
            "-"
        } else if out.is_empty() {
            ""
        } else {
            "+"
        };
        let mag = c.unsigned_abs();
        if mag == 1 {
            out.push_str(&format!("{sign}{label}"));
        } else {
            out.push_str(&format!("{sign}{mag}{label}"));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// A unimodular intersection lattice with labelled basis and canonical class.
#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize), serde(try_from = "LatticeRepr"))]
pub struct PicardLattice {
    labels: Vec<String>,
    gram: IntMatrix,
    #[cfg_attr(feature = "serde", serde(rename = "K"))]
    canonical: DivisorClass,
}

#[cfg(feature = "serde")]
#[derive(serde::Deserialize)]
struct LatticeRepr {
    labels: Vec<String>,
    gram: IntMatrix,
    #[serde(rename = "K")]
    canonical: DivisorClass,
}

#[cfg(feature = "serde")]
impl TryFrom<LatticeRepr> for PicardLattice {
    type Error = LatticeError;
    fn try_from(r: LatticeRepr) -> Result<Self, LatticeError> {
        PicardLattice::new(r.labels, r.gram, r.canonical)
    }
}

impl fmt::Display for PicardLattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "lattice [{}] K = {}", self.labels.join(", "), self.describe(&self.canonical))
    }
}

impl PicardLattice {
    /// Validates shape, symmetry and unimodularity.
    pub fn new(labels: Vec<String>, gram: IntMatrix, canonical: DivisorClass) -> Result<Self, LatticeError> {
        let r = gram.len();
        if gram.iter().any(|row| row.len() != r) || (0..r).any(|i| (0..i).any(|j| gram[i][j] != gram[j][i])) {
            return Err(LatticeError::NotSymmetric);
        }
        if labels.len() != r {
            return Err(LatticeError::RankMismatch { expected: r, got: labels.len() });
        }
        if canonical.rank() != r {
            return Err(LatticeError::RankMismatch { expected: r, got: canonical.rank() });
        }
        let det = determinant(&gram);
        if det.abs() != 1 {
            return Err(LatticeError::NotUnimodular(det));
        }
        Ok(PicardLattice { labels, gram, canonical })
    }

    /// The projective plane: `H·H = 1`, `K = -3H`.
    pub fn p2() -> Self {
        PicardLattice { labels: vec!["H".into()], gram: vec![vec![1]], canonical: DivisorClass(vec![-3]) }
    }

    /// The Hirzebruch surface Σₙ on the basis `{F, B}`: `F² = 0`, `F·B = 1`,
    /// `B² = -n`, `K = -2B - (n+2)F`.
    pub fn hirzebruch(n: u32) -> Self {
        let n = i64::from(n);
        PicardLattice {
            labels: vec!["F".into(), "B".into()],
            gram: vec![vec![0, 1], vec![1, -n]],
            canonical: DivisorClass(vec![-(n + 2), -2]),
        }
    }

    /// `k` successive blow-ups of the plane.
    pub fn blown_up_plane(k: usize) -> Self {
        (0..k).fold(Self::p2(), |l, _| l.blow_up().0)
    }

    pub fn rank(&self) -> usize {
        self.gram.len()
    }

    pub fn gram(&self) -> &IntMatrix {
        &self.gram
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn canonical(&self) -> &DivisorClass {
        &self.canonical
    }

    pub fn basis_class(&self, i: usize) -> DivisorClass {
        DivisorClass::basis(self.rank(), i)
    }

    pub fn class_of(&self, label: &str) -> Result<DivisorClass, LatticeError> {
        let i =
            self.labels.iter().position(|l| l == label).ok_or_else(|| LatticeError::UnknownLabel(label.to_string()))?;
        Ok(self.basis_class(i))
    }

    /// Builds a class from `(label, coefficient)` pairs.
    pub fn combination(&self, terms: &[(&str, i64)]) -> Result<DivisorClass, LatticeError> {
        let mut v = DivisorClass::zero(self.rank());
        for &(label, c) in terms {
            v = &v + &self.class_of(label)?.scale(c);
        }
        Ok(v)
    }

    pub fn describe(&self, d: &DivisorClass) -> String {
        describe(&self.labels, d.coeffs())
    }

    pub(crate) fn check(&self, d: &DivisorClass) -> Result<(), LatticeError> {
        if d.rank() == self.rank() {
            Ok(())
        } else {
            Err(LatticeError::RankMismatch { expected: self.rank(), got: d.rank() })
        }
    }

    /// `D1ᵀ G D2`.
    pub fn intersect(&self, d1: &DivisorClass, d2: &DivisorClass) -> Result<i64, LatticeError> {
        self.check(d1)?;
        self.check(d2)?;
        Ok(bilinear(&self.gram, d1.coeffs(), d2.coeffs()))
    }

    pub fn square(&self, d: &DivisorClass) -> Result<i64, LatticeError> {
        self.intersect(d, d)
    }

    /// Arithmetic genus `(D·D + D·K)/2 + 1`.
    pub fn genus(&self, d: &DivisorClass) -> Result<i64, LatticeError> {
        let s = add(self.square(d)?, self.intersect(d, &self.canonical)?);
        if s % 2 != 0 {
            return Err(LatticeError::ParityViolation(s));
        }
        Ok(add(s / 2, 1))
    }

    /// `(positive, negative)` inertia of the gram matrix.
    pub fn signature(&self) -> (usize, usize) {
        let (p, n, _) = inertia(&self.gram);
        (p, n)
    }

    pub fn determinant(&self) -> i64 {
        determinant(&self.gram)
    }

    pub fn is_lorentzian(&self) -> bool {
        self.signature() == (1, self.rank() - 1)
    }

    /// `D·D = -1` and `D·K = -1`.
    pub fn is_exceptional(&self, d: &DivisorClass) -> Result<bool, LatticeError> {
        Ok(self.square(d)? == -1 && self.intersect(d, &self.canonical)? == -1)
    }

    fn fresh_label(&self) -> String {
        (1..).map(|i| format!("E{i}")).find(|l| !self.labels.contains(l)).unwrap_or_else(|| "E".into())
    }

    /// Adjoins an exceptional class `E` with `E² = -1`, `K ← K + E`. The new
    /// basis vector is last; its label is the first free `E1`, `E2`, ...
    pub fn blow_up(&self) -> (PicardLattice, DivisorClass) {
        let label = self.fresh_label();
        self.blow_up_labeled(&label)
    }

    pub fn blow_up_labeled(&self, label: &str) -> (PicardLattice, DivisorClass) {
        let r = self.rank();
        let mut gram: IntMatrix = self.gram.iter().map(|row| row.iter().copied().chain([0]).collect()).collect();
        let mut last = vec![0; r + 1];
        last[r] = -1;
        gram.push(last);
        let mut labels = self.labels.clone();
        labels.push(label.into());
        let e = DivisorClass::basis(r + 1, r);
        let canonical = &self.canonical.embed() + &e;
        (PicardLattice { labels, gram, canonical }, e)
    }

    /// Proper transform `D - m·E` of a class of the lattice before the most
    /// recent blow-up through a point of multiplicity `m`. `self` is the
    /// blown-up lattice.
    pub fn proper_transform(&self, d: &DivisorClass, m: i64) -> Result<DivisorClass, LatticeError> {
        let r = self.rank();
        if d.rank() + 1 != r {
            return Err(LatticeError::RankMismatch { expected: r - 1, got: d.rank() });
        }
        Ok(&d.embed() - &DivisorClass::basis(r, r - 1).scale(m))
    }

    /// Changes to the basis given by `classes` (in current coordinates),
    /// which must form a ℤ-basis. Returns the new lattice and the matrix
    /// taking old coordinates to new ones.
    pub fn rebase(
        &self,
        classes: &[DivisorClass],
        labels: Vec<String>,
    ) -> Result<(PicardLattice, IntMatrix), LatticeError> {
        if classes.len() != self.rank() || labels.len() != self.rank() {
            return Err(LatticeError::NotABasis);
        }
        for c in classes {
            self.check(c)?;
        }
        // rows of p are the new basis vectors
        let p: IntMatrix = classes.iter().map(|c| c.coeffs().to_vec()).collect();
        let pt = exact::transpose(&p);
        let to_new = unimodular_inverse(&pt).ok_or(LatticeError::NotABasis)?;
        let gram = exact::mat_mul(&exact::mat_mul(&p, &self.gram), &pt);
        let canonical = DivisorClass(exact::mat_vec(&to_new, self.canonical.coeffs()));
        Ok((PicardLattice::new(labels, gram, canonical)?, to_new))
    }
}
