//! Roots of monic complex cubics.
//!
//! Closed-form Cardano roots get one guarded Newton step each. Nearly
//! coincident roots are then merged by a backward-error test: a cluster is
//! replaced by an exact multiple root when a coefficient perturbation of
//! size about `(tol·scale)²` (in root units) makes it one. For well separated
//! neighbours this is the same as a root distance of order `tol·scale`, and it
//! absorbs the `ε^(1/m)` splitting rounding produces at a root of
//! multiplicity `m`.

use crate::C64;

/// Default eigenvalue merge tolerance.
pub const DEFAULT_MERGE_TOL: f64 = 1e-7;

/// Roots of `x³ + c2 x² + c1 x + c0` with multiplicity, merged at
/// [`DEFAULT_MERGE_TOL`].
pub fn cubic_roots(c2: C64, c1: C64, c0: C64) -> [C64; 3] {
    cubic_roots_with_tol(c2, c1, c0, DEFAULT_MERGE_TOL, 1.0)
}

/// Like [`cubic_roots`] with an explicit merge tolerance. `scale` is the
/// magnitude the tolerance is relative to (for characteristic polynomials,
/// the matrix norm); the root magnitude bound is used when it is larger.
pub fn cubic_roots_with_tol(c2: C64, c1: C64, c0: C64, tol: f64, scale: f64) -> [C64; 3] {
    let mut roots = cardano(c2, c1, c0);
    for r in roots.iter_mut() {
        *r = newton_polish(c2, c1, c0, *r);
    }
    let sigma = root_scale(c2, c1, c0).max(scale).max(1.0);
    merge_multiple(c2, c1, c0, roots, tol * sigma, sigma)
}

/// Cauchy-style bound on root magnitude, in root units.
pub fn root_scale(c2: C64, c1: C64, c0: C64) -> f64 {
    c2.norm().max(libm::sqrt(c1.norm())).max(libm::cbrt(c0.norm()))
}

fn eval(c2: C64, c1: C64, c0: C64, x: C64) -> C64 {
    ((x + c2) * x + c1) * x + c0
}

fn eval_deriv(c2: C64, c1: C64, x: C64) -> C64 {
    (x * 3.0 + c2 * 2.0) * x + c1
}

fn cardano(c2: C64, c1: C64, c0: C64) -> [C64; 3] {
    let shift = c2 / 3.0;
    // x = t - shift turns the cubic into t³ + p t + q.
    let p = c1 - c2 * c2 / 3.0;
    let q = c2 * c2 * c2 * (2.0 / 27.0) - c2 * c1 / 3.0 + c0;
    if p == C64::new(0.0, 0.0) && q == C64::new(0.0, 0.0) {
        return [-shift; 3];
    }
    let disc = (q / 2.0) * (q / 2.0) + (p / 3.0) * (p / 3.0) * (p / 3.0);
    let s = disc.sqrt();
    let w1 = -q / 2.0 + s;
    let w2 = -q / 2.0 - s;
    let w = if w1.norm() >= w2.norm() { w1 } else { w2 };
    let u = w.cbrt();
    let v = if u.norm() == 0.0 { C64::new(0.0, 0.0) } else { -p / (u * 3.0) };
    let omega = C64::new(-0.5, libm::sqrt(3.0) / 2.0);
    let omega2 = omega.conj();
    [u + v - shift, omega * u + omega2 * v - shift, omega2 * u + omega * v - shift]
}

fn newton_polish(c2: C64, c1: C64, c0: C64, r: C64) -> C64 {
    let f = eval(c2, c1, c0, r);
    let fp = eval_deriv(c2, c1, r);
    if fp.norm() == 0.0 {
        return r;
    }
    let next = r - f / fp;
    let g = eval(c2, c1, c0, next);
    if g.re.is_finite() && g.im.is_finite() && g.norm() < f.norm() {
        next
    } else {
        r
    }
}

fn merge_multiple(c2: C64, c1: C64, c0: C64, roots: [C64; 3], tol: f64, sigma: f64) -> [C64; 3] {
    let t2 = tol * tol;
    // Triple root: Taylor coefficients at the centroid.
    let centre = -c2 / 3.0;
    let a1 = eval_deriv(c2, c1, centre);
    let a0 = eval(c2, c1, c0, centre);
    if a1.norm() <= t2 && a0.norm() <= t2 * sigma {
        return [centre; 3];
    }
    // Double root: the closest pair collapses onto the nearby critical point.
    let (i, j, k) = closest_pair(&roots);
    let mid = (roots[i] + roots[j]) / 2.0;
    let rad = (c2 * c2 - c1 * 3.0).sqrt();
    let crit_a = (-c2 + rad) / 3.0;
    let crit_b = (-c2 - rad) / 3.0;
    let crit = if (crit_a - mid).norm() <= (crit_b - mid).norm() { crit_a } else { crit_b };
    let curvature = crit * 3.0 + c2;
    let a0 = eval(c2, c1, c0, crit);
    let close = (crit - mid).norm() <= (roots[i] - roots[j]).norm() + tol;
    if close && a0.norm() <= curvature.norm() * t2 {
        let third = newton_polish(c2, c1, c0, -c2 - crit * 2.0);
        let mut out = roots;
        out[i] = crit;
        out[j] = crit;
        out[k] = third;
        return out;
    }
    roots
}

fn closest_pair(r: &[C64; 3]) -> (usize, usize, usize) {
    let d01 = (r[0] - r[1]).norm();
    let d02 = (r[0] - r[2]).norm();
    let d12 = (r[1] - r[2]).norm();
    if d01 <= d02 && d01 <= d12 {
        (0, 1, 2)
    } else if d02 <= d12 {
        (0, 2, 1)
    } else {
        (1, 2, 0)
    }
}
