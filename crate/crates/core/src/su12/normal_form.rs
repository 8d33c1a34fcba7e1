use super::algebra::AlgebraElement;
use super::classify::{classify, Kind};
use super::form::HermitianForm;
use super::group::GroupElement;
use super::Su12Error;
use crate::linalg3::{conj_vec, cross, Mat3, Vec3};
use crate::{Tolerances, C64};

#[derive(Clone, Copy, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize), serde(rename_all = "snake_case"))]
pub enum NormalParams {
    Hyperbolic { l: f64, b: f64 },
    Parabolic { d1: f64, d2: f64, c: C64 },
}

impl NormalParams {
    pub fn algebra(&self) -> AlgebraElement {
        match *self {
            NormalParams::Hyperbolic { l, b } => AlgebraElement::hyperbolic(l, b),
            NormalParams::Parabolic { d1, d2, c } => AlgebraElement::parabolic(d1, d2, c),
        }
    }
}

/// `G A G⁻¹ = central · exp(params)`, with `central` a cube root of unity.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct NormalForm {
    pub conjugator: GroupElement,
    pub params: NormalParams,
    pub central: C64,
}

impl NormalForm {
    /// Hyperbolic `b` reduced to `(-π/3, π/3]`. The central cube roots of
    /// unity shift `b` by `2π/3` without changing the projective action.
    pub fn reduced_b(&self) -> Option<f64> {
        match self.params {
            NormalParams::Hyperbolic { b, .. } => Some(reduce_b(b)),
            NormalParams::Parabolic { .. } => None,
        }
    }
}

pub(crate) fn reduce_b(b: f64) -> f64 {
    let period = 2.0 * core::f64::consts::PI / 3.0;
    let mut r = b - period * libm::round(b / period);
    if r <= -period / 2.0 {
        r += period;
    }
    r
}

/// Conjugates a hyperbolic element to the diagonal generator form (attracting
/// point at `[1:1:0]`, repelling at `[1:-1:0]`) or a parabolic one to the
/// generator form fixing `[1:1:0]`.
pub fn conjugate_to_normal_form(a: &GroupElement, tol: &Tolerances) -> Result<NormalForm, Su12Error> {
    let cl = classify(a, tol)?;
    let roles = cl.roles.ok_or(Su12Error::NotNonElliptic)?;
    let one = C64::new(1.0, 0.0);
    match cl.kind {
        Kind::Elliptic => Err(Su12Error::NotNonElliptic),
        Kind::Hyperbolic => {
            let vp = *roles.attractive.coords();
            let vm = *roles.repulsive.coords();
            let g = adapted_conjugator(vp, vm)?;
            let b = a.conjugate_by(&g);
            // eigenvalue at [1:1:0]
            let lp = b.matrix()[(0, 0)] + b.matrix()[(0, 1)];
            let params = NormalParams::Hyperbolic { l: libm::log(lp.norm()), b: lp.arg() };
            Ok(NormalForm { conjugator: g, params, central: one })
        }
        Kind::Parabolic(_) => {
            let p = *roles.attractive.coords();
            let e0 = [one, C64::new(0.0, 0.0), C64::new(0.0, 0.0)];
            let t = (HermitianForm::pair(&e0, &p).conj() * 2.0).inv();
            let second: Vec3 = core::array::from_fn(|i| e0[i] + p[i] * t);
            let g = adapted_conjugator(p, second)?;
            let b = *a.conjugate_by(&g).matrix();
            let mu = roles_eigenvalue(&cl.fixed, &roles.attractive);
            let central = nearest_cube_root_of_unity(mu);
            let b = b.scale(central.inv());
            let mu = mu / central;
            let log = parabolic_log(&b, mu, &cl.eigenvalues.map(|v| v / central));
            let params = NormalParams::Parabolic { d1: log[(1, 1)].im, d2: log[(2, 2)].im, c: log[(1, 2)] };
            Ok(NormalForm { conjugator: g, params, central })
        }
    }
}

fn roles_eigenvalue(fixed: &super::FixedSet, p: &crate::linalg3::ProjectivePoint) -> C64 {
    fixed
        .points
        .iter()
        .min_by(|a, b| a.point.chordal_distance(p).total_cmp(&b.point.chordal_distance(p)))
        .map(|f| f.eigenvalue)
        .unwrap_or(C64::new(1.0, 0.0))
}

fn nearest_cube_root_of_unity(z: C64) -> C64 {
    let k = libm::round(z.arg() * 3.0 / (2.0 * core::f64::consts::PI));
    C64::from_polar(1.0, k * 2.0 * core::f64::consts::PI / 3.0)
}

/// Logarithm of a parabolic `B` whose eigenvalue on `[1:1:0]` is `mu` with
/// `arg mu ∈ (-π/3, π/3]`, as a polynomial in `B`.
fn parabolic_log(b: &Mat3, mu: C64, eigenvalues: &[C64; 3]) -> Mat3 {
    let i = C64::new(0.0, 1.0);
    let d2 = -2.0 * mu.arg();
    let log_mu = i * (-d2 / 2.0);
    let nu = eigenvalues.iter().copied().max_by(|x, y| (x - mu).norm().total_cmp(&(y - mu).norm())).unwrap_or(mu);
    let shifted = b.shift(mu);
    if (nu - mu).norm() == 0.0 {
        // unipotent up to mu: log(mu (I + N/mu))
        let n = shifted.scale(mu.inv());
        return Mat3::IDENTITY.scale(log_mu) + n - (n * n).scale(C64::new(0.5, 0.0));
    }
    let p_nu = (shifted * shifted).scale(((nu - mu) * (nu - mu)).inv());
    let p_mu = Mat3::IDENTITY - p_nu;
    let nil = shifted * p_mu;
    p_mu.scale(log_mu) + p_nu.scale(i * d2) + nil.scale(mu.inv())
}

/// The element of SU(1,2) taking the null vectors `vp`, `vm` to `(1,1,0)`,
/// `(1,-1,0)` (up to scale) and their Q-complement to `(0,0,1)`.
fn adapted_conjugator(vp: Vec3, vm: Vec3) -> Result<GroupElement, Su12Error> {
    let one = C64::new(1.0, 0.0);
    let zero = C64::new(0.0, 0.0);
    let pm = HermitianForm::pair(&vp, &vm);
    if pm.norm() == 0.0 {
        return Err(Su12Error::Unresolved);
    }
    let sm = (C64::new(-2.0, 0.0) / pm).conj();
    let fm = vm.map(|z| z * sm);
    let r = HermitianForm::J.mul_vec(&conj_vec(&cross(&vp, &vm)));
    let rr = HermitianForm::value(&r);
    if rr <= 0.0 {
        return Err(Su12Error::Unresolved);
    }
    let fq = r.map(|z| z / libm::sqrt(rr));
    let h = Mat3::new([[one, one, zero], [one, -one, zero], [zero, zero, one]]);
    let h_inv = h.inverse().ok_or(Su12Error::Unresolved)?;
    let f = Mat3::from_columns([vp, fm, fq]) * h_inv;
    // fix det F = 1 with a phase on the Q-positive column
    let phase = f.det().conj() / f.det().norm();
    let fq = fq.map(|z| z * phase);
    let f = Mat3::from_columns([vp, fm, fq]) * h_inv;
    Ok(GroupElement::new_unchecked(f).inverse())
}
