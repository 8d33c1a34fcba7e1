use crate::linalg3::{chordal_distance, dot, norm, Mat3, ProjectivePoint, Vec3};
use crate::su12::{fixed_points, FixedSet, GroupElement, ProjectiveLine, Su12Error};
use crate::Tolerances;

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Outcome {
    Converged(ProjectivePoint),
    NotConverged,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct OrbitResult {
    pub outcome: Outcome,
    /// Index `k` of the iterate `Aᵏp` at which the orbit stopped.
    pub iterations: usize,
    /// Chordal distance between the last two iterates.
    pub final_distance: f64,
}

impl OrbitResult {
    pub fn limit(&self) -> Option<&ProjectivePoint> {
        match &self.outcome {
            Outcome::Converged(p) => Some(p),
            Outcome::NotConverged => None,
        }
    }
}

fn step(m: &Mat3, p: &ProjectivePoint) -> ProjectivePoint {
    ProjectivePoint::new(m.mul_vec(p.coords())).expect("group elements are invertible and finite")
}

/// Canonical form of `Aⁿp`, one multiplication at a time.
pub fn iterate(a: &GroupElement, p: &ProjectivePoint, n: usize) -> ProjectivePoint {
    let m = a.matrix();
    let mut cur = *p;
    for _ in 0..n {
        cur = step(m, &cur);
    }
    cur
}

/// Forward iteration of one element against its precomputed fixed set.
#[derive(Clone, Debug)]
pub struct Orbiter {
    matrix: Mat3,
    fixed: Option<FixedSet>,
}

impl Orbiter {
    pub fn new(a: &GroupElement, tol: &Tolerances) -> Result<Self, Su12Error> {
        let fixed = match fixed_points(a, tol) {
            Ok(f) => Some(f),
            Err(Su12Error::EveryPointFixed) => None,
            Err(e) => return Err(e),
        };
        Ok(Orbiter { matrix: *a.matrix(), fixed })
    }

    pub(crate) fn with_fixed(a: &GroupElement, fixed: FixedSet) -> Self {
        Orbiter { matrix: *a.matrix(), fixed: Some(fixed) }
    }

    /// Iterates until two successive iterates are within `tol`, then reports
    /// the nearest fixed point: the iterate itself if it lies on a fixed
    /// line, otherwise the closest isolated fixed point.
    pub fn converge(&self, p: &ProjectivePoint, max_iter: usize, tol: f64) -> OrbitResult {
        self.run(p, max_iter, tol, None)
    }

    /// Like [`converge`](Self::converge) for the action restricted to the
    /// invariant line `line`: each iterate is projected back onto the line,
    /// so rounding cannot push the orbit off it.
    pub fn converge_on_line(
        &self,
        p: &ProjectivePoint,
        line: &ProjectiveLine,
        max_iter: usize,
        tol: f64,
    ) -> OrbitResult {
        self.run(p, max_iter, tol, Some(line))
    }

    fn run(&self, p: &ProjectivePoint, max_iter: usize, tol: f64, line: Option<&ProjectiveLine>) -> OrbitResult {
        // iterate unit-norm representatives; only the result is canonicalized
        let mut cur = unit(p.coords());
        let mut last = f64::INFINITY;
        for k in 0..max_iter {
            let mut next = unit(&self.matrix.mul_vec(&cur));
            if let Some(l) = line {
                next = unit(&project(&next, l));
            }
            last = chordal_distance(&cur, &next);
            if last <= tol {
                let at = ProjectivePoint::new(cur).expect("iterates stay finite and nonzero");
                return OrbitResult {
                    outcome: Outcome::Converged(self.snap(&at, tol)),
                    iterations: k,
                    final_distance: last,
                };
            }
            cur = next;
        }
        OrbitResult { outcome: Outcome::NotConverged, iterations: max_iter, final_distance: last }
    }

    fn snap(&self, p: &ProjectivePoint, tol: f64) -> ProjectivePoint {
        let Some(fixed) = &self.fixed else { return *p };
        if let Some(line) = &fixed.line {
            if line.line.distance(p) <= tol {
                return *p;
            }
        }
        fixed
            .points
            .iter()
            .min_by(|a, b| a.point.chordal_distance(p).total_cmp(&b.point.chordal_distance(p)))
            .map(|f| f.point)
            .unwrap_or(*p)
    }
}

fn unit(v: &Vec3) -> Vec3 {
    let s = 1.0 / norm(v);
    [v[0] * s, v[1] * s, v[2] * s]
}

/// Hermitian-orthogonal projection onto the plane of `line`.
fn project(v: &Vec3, line: &ProjectiveLine) -> Vec3 {
    let f = line.dual();
    let s = dot(f, v) / f.iter().map(|z| z.norm_sqr()).sum::<f64>();
    core::array::from_fn(|i| v[i] - f[i].conj() * s)
}

/// [`Orbiter::converge`] at default tolerances.
pub fn converge(a: &GroupElement, p: &ProjectivePoint, max_iter: usize, tol: f64) -> Result<OrbitResult, Su12Error> {
    Ok(Orbiter::new(a, &Tolerances::DEFAULT)?.converge(p, max_iter, tol))
}
