/// Numerical tolerances shared by the floating-point modules.
///
/// Every threshold is absolute on unit-scale matrices and is rescaled by the
/// matrix norm where an operation says so.
#[derive(Clone, Copy, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Tolerances {
    /// Entry-wise bound on `A†JA - J` and on `det A - 1`.
    pub membership: f64,
    /// Eigenvalue coincidence (cluster) tolerance.
    pub merge: f64,
    /// `|Q(p, p)|` bound, relative to `|p|²`, under which a point is on the sphere.
    pub boundary: f64,
    /// Deviation of `|λ|` from 1 beyond which an element is hyperbolic.
    pub unit_modulus: f64,
    /// Chordal step length at which an orbit is declared converged.
    pub convergence: f64,
}

impl Tolerances {
    pub const DEFAULT: Tolerances =
        Tolerances { membership: 1e-9, merge: 1e-7, boundary: 1e-8, unit_modulus: 1e-6, convergence: 1e-8 };

    /// The same threshold everywhere.
    pub const fn uniform(tol: f64) -> Self {
        Tolerances { membership: tol, merge: tol, boundary: tol, unit_modulus: tol, convergence: tol }
    }
}

impl Default for Tolerances {
    fn default() -> Self {
        Self::DEFAULT
    }
}
