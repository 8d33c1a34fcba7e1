use alloc::vec::Vec;

use super::form::{locate, HermitianForm, Location, ProjectiveLine};
use super::group::GroupElement;
use super::Su12Error;
use crate::linalg3::{eig3_with_tol, jordan_shape, norm, sub_vec, EigenData, ProjectivePoint, Vec3};
use crate::{Tolerances, C64};

#[derive(Clone, Copy, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct FixedPoint {
    pub point: ProjectivePoint,
    pub location: Location,
    pub eigenvalue: C64,
}

/// A projective line fixed pointwise (a two-dimensional eigenspace).
#[derive(Clone, Copy, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct FixedLine {
    pub line: ProjectiveLine,
    pub eigenvalue: C64,
}

/// Isolated fixed points plus, when present, a pointwise fixed line. The
/// points listed on a fixed line are its distinguished ones: the tangency
/// point if it touches the sphere, otherwise a Q-orthogonal pair.
#[derive(Clone, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct FixedSet {
    pub points: Vec<FixedPoint>,
    pub line: Option<FixedLine>,
}

impl FixedSet {
    pub fn boundary_points(&self) -> impl Iterator<Item = &FixedPoint> {
        self.points.iter().filter(|f| f.location == Location::Boundary)
    }

    /// Chordal distance from `p` to the nearest fixed point (fixed lines
    /// included).
    pub fn distance(&self, p: &ProjectivePoint) -> f64 {
        let d = self.points.iter().map(|f| f.point.chordal_distance(p)).fold(f64::INFINITY, f64::min);
        match &self.line {
            Some(l) => d.min(l.line.distance(p)),
            None => d,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize), serde(rename_all = "snake_case"))]
pub enum ParabolicKind {
    /// Double eigenvalue with a 2-block; rotation on the tangent line.
    Rotational,
    /// Unipotent, blocks `[2, 1]`; the tangent line is fixed pointwise.
    LineFixing,
    /// Unipotent, single 3-block.
    ThreeStep,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Kind {
    Elliptic,
    Parabolic(ParabolicKind),
    Hyperbolic,
}

impl Kind {
    pub fn name(&self) -> &'static str {
        match self {
            Kind::Elliptic => "elliptic",
            Kind::Parabolic(_) => "parabolic",
            Kind::Hyperbolic => "hyperbolic",
        }
    }

    pub fn subtype(&self) -> Option<ParabolicKind> {
        match self {
            Kind::Parabolic(s) => Some(*s),
            _ => None,
        }
    }
}

/// Dynamical roles of the fixed points of a non-elliptic element. For
/// parabolic elements `attractive == repulsive` and `exterior` is the
/// second fixed point on the tangent line, if any.
#[derive(Clone, Copy, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct Roles {
    pub attractive: ProjectivePoint,
    pub repulsive: ProjectivePoint,
    pub exterior: Option<ProjectivePoint>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Classification {
    pub kind: Kind,
    pub eigenvalues: [C64; 3],
    pub fixed: FixedSet,
    pub roles: Option<Roles>,
}

/// Fixed points of the projective action. A scalar matrix is rejected.
pub fn fixed_points(a: &GroupElement, tol: &Tolerances) -> Result<FixedSet, Su12Error> {
    let data = eig3_with_tol(a.matrix(), tol.merge)?;
    fixed_set(&data, tol)
}

fn fixed_set(data: &EigenData, tol: &Tolerances) -> Result<FixedSet, Su12Error> {
    let mut points = Vec::new();
    let mut line = None;
    for space in &data.spaces {
        match space.vectors.len() {
            1 => {
                let p = space.vectors[0];
                points.push(FixedPoint { point: p, location: locate(&p, tol.boundary), eigenvalue: space.value });
            }
            2 => {
                let l = ProjectiveLine::through(&space.vectors[0], &space.vectors[1])?;
                for p in distinguished_points(&l, tol.boundary)? {
                    points.push(FixedPoint { point: p, location: locate(&p, tol.boundary), eigenvalue: space.value });
                }
                line = Some(FixedLine { line: l, eigenvalue: space.value });
            }
            _ => return Err(Su12Error::EveryPointFixed),
        }
    }
    Ok(FixedSet { points, line })
}

/// Diagonalizes Q restricted to the line. Returns the tangency point alone
/// when the restriction is degenerate, else both principal directions.
fn distinguished_points(l: &ProjectiveLine, tol: f64) -> Result<Vec<ProjectivePoint>, Su12Error> {
    let [u, w] = l.frame();
    let h11 = HermitianForm::value(&u);
    let h22 = HermitianForm::value(&w);
    let h12 = HermitianForm::pair(&w, &u);
    let mean = (h11 + h22) / 2.0;
    let rad = libm::hypot((h11 - h22) / 2.0, h12.norm());
    let combine = |h: f64| -> Vec3 {
        // (h12, h - h11) and (h - h22, h12*) both solve the 2x2 problem
        let (a, b) = (h12, C64::new(h - h11, 0.0));
        let (c, d) = (C64::new(h - h22, 0.0), h12.conj());
        let (s, t) = if a.norm() + b.norm() >= c.norm() + d.norm() { (a, b) } else { (c, d) };
        core::array::from_fn(|i| u[i] * s + w[i] * t)
    };
    if rad <= 1e-12 * (mean.abs() + 1.0) {
        return Ok(alloc::vec![ProjectivePoint::new(u)?, ProjectivePoint::new(w)?]);
    }
    let (lo, hi) = (mean - rad, mean + rad);
    let low = ProjectivePoint::new(combine(lo))?;
    if lo.abs() <= tol {
        return Ok(alloc::vec![low]);
    }
    Ok(alloc::vec![low, ProjectivePoint::new(combine(hi))?])
}

/// Elliptic / parabolic / hyperbolic classification with fixed-point roles.
pub fn classify(a: &GroupElement, tol: &Tolerances) -> Result<Classification, Su12Error> {
    let m = a.matrix();
    let data = eig3_with_tol(m, tol.merge)?;
    let fixed = fixed_set(&data, tol)?;
    let eigenvalues = data.eigenvalues();

    if eigenvalues.iter().any(|v| (v.norm() - 1.0).abs() > tol.unit_modulus) {
        let roles = hyperbolic_roles(&fixed, &eigenvalues)?;
        return Ok(Classification { kind: Kind::Hyperbolic, eigenvalues, fixed, roles: Some(roles) });
    }
    if fixed.points.iter().any(|f| f.location == Location::Inside) {
        return Ok(Classification { kind: Kind::Elliptic, eigenvalues, fixed, roles: None });
    }

    let shape = jordan_shape(m, tol.merge)?;
    let sub = match shape.blocks.as_slice() {
        [(_, b)] if b == &[3] => ParabolicKind::ThreeStep,
        [(_, b)] if b == &[2, 1] => ParabolicKind::LineFixing,
        [(_, x), (_, y)] if (x == &[2] && y == &[1]) || (x == &[1] && y == &[2]) => ParabolicKind::Rotational,
        _ => return Err(Su12Error::Unresolved),
    };
    let p = {
        let mut boundary = fixed.boundary_points();
        match (boundary.next(), boundary.next()) {
            (Some(p), None) => p.point,
            _ => return Err(Su12Error::Unresolved),
        }
    };
    let exterior = match sub {
        ParabolicKind::Rotational => fixed.points.iter().find(|f| f.location == Location::Outside).map(|f| f.point),
        _ => None,
    };
    let roles = Roles { attractive: p, repulsive: p, exterior };
    Ok(Classification { kind: Kind::Parabolic(sub), eigenvalues, fixed, roles: Some(roles) })
}

fn hyperbolic_roles(fixed: &FixedSet, eigenvalues: &[C64; 3]) -> Result<Roles, Su12Error> {
    if fixed.points.len() != 3 || fixed.line.is_some() {
        return Err(Su12Error::Unresolved);
    }
    let (mut att, mut rep, mut ext) = (None, None, None);
    for f in &fixed.points {
        let d = ratios(eigenvalues, f.eigenvalue);
        let (m0, m1) = (d[0].norm(), d[1].norm());
        if m0 < 1.0 && m1 < 1.0 {
            att = Some(f.point);
        } else if m0 > 1.0 && m1 > 1.0 {
            rep = Some(f.point);
        } else {
            ext = Some(f.point);
        }
    }
    match (att, rep, ext) {
        (Some(attractive), Some(repulsive), Some(e)) => Ok(Roles { attractive, repulsive, exterior: Some(e) }),
        _ => Err(Su12Error::Unresolved),
    }
}

/// The two other eigenvalues (with multiplicity) divided by `lambda`.
fn ratios(eigenvalues: &[C64; 3], lambda: C64) -> [C64; 2] {
    let own = (0..3)
        .min_by(|&i, &j| (eigenvalues[i] - lambda).norm().total_cmp(&(eigenvalues[j] - lambda).norm()))
        .unwrap_or(0);
    let mut out = [C64::new(0.0, 0.0); 2];
    let mut k = 0;
    for (i, v) in eigenvalues.iter().enumerate() {
        if i != own {
            out[k] = v / lambda;
            k += 1;
        }
    }
    out
}

/// Eigenvalues of the differential of the projective action at the fixed
/// point `p`.
pub fn derivative_eigenvalues(a: &GroupElement, p: &ProjectivePoint, tol: &Tolerances) -> Result<[C64; 2], Su12Error> {
    let m = a.matrix();
    let eigenvalues = eig3_with_tol(m, tol.merge)?.eigenvalues();
    let v = p.coords();
    let av = m.mul_vec(v);
    let scale = m.frobenius_norm() * norm(v);
    let (lambda, residual) = eigenvalues
        .iter()
        .map(|&l| (l, norm(&sub_vec(&av, &v.map(|z| z * l)))))
        .min_by(|a, b| a.1.total_cmp(&b.1))
        .unwrap_or((C64::new(0.0, 0.0), f64::INFINITY));
    if residual > libm::sqrt(tol.merge) * scale {
        return Err(Su12Error::NotFixed);
    }
    Ok(ratios(&eigenvalues, lambda))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg3::Mat3;
    use crate::su12::AlgebraElement;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    fn elem(a: AlgebraElement) -> GroupElement {
        GroupElement::new(a.exp(), 1e-9).unwrap()
    }

    fn pt(x: f64, y: f64, z: f64) -> ProjectivePoint {
        ProjectivePoint::from_real([x, y, z]).unwrap()
    }

    const T: Tolerances = Tolerances::DEFAULT;

    #[test]
    fn identity_is_rejected() {
        assert_eq!(fixed_points(&GroupElement::IDENTITY, &T), Err(Su12Error::EveryPointFixed));
        assert_eq!(classify(&GroupElement::IDENTITY, &T), Err(Su12Error::EveryPointFixed));
        let w = c(-0.5, libm::sqrt(3.0) / 2.0);
        let central = GroupElement::new(Mat3::diag([w; 3]), 1e-9).unwrap();
        assert_eq!(classify(&central, &T), Err(Su12Error::EveryPointFixed));
    }

    #[test]
    fn hyperbolic_fixed_points_and_roles() {
        let a = elem(AlgebraElement::hyperbolic(1.0, 0.5));
        let fixed = fixed_points(&a, &T).unwrap();
        assert_eq!(fixed.points.len(), 3);
        for (p, loc) in [
            (pt(1.0, 1.0, 0.0), Location::Boundary),
            (pt(1.0, -1.0, 0.0), Location::Boundary),
            (pt(0.0, 0.0, 1.0), Location::Outside),
        ] {
            assert!(fixed.points.iter().any(|f| f.point.approx_eq(&p, 1e-12) && f.location == loc));
        }
        let cl = classify(&elem(AlgebraElement::hyperbolic(1.0, 0.0)), &T).unwrap();
        assert_eq!(cl.kind, Kind::Hyperbolic);
        let roles = cl.roles.unwrap();
        assert!(roles.attractive.approx_eq(&pt(1.0, 1.0, 0.0), 1e-12));
        assert!(roles.repulsive.approx_eq(&pt(1.0, -1.0, 0.0), 1e-12));
        assert!(roles.exterior.unwrap().approx_eq(&pt(0.0, 0.0, 1.0), 1e-12));
    }

    #[test]
    fn parabolic_subtypes() {
        let rot = classify(&elem(AlgebraElement::parabolic(0.0, 1.0, c(0.0, 0.0))), &T).unwrap();
        assert_eq!(rot.kind, Kind::Parabolic(ParabolicKind::Rotational));
        let roles = rot.roles.unwrap();
        assert!(roles.attractive.approx_eq(&pt(1.0, 1.0, 0.0), 1e-12));
        assert!(roles.exterior.is_some());

        let lf = classify(&elem(AlgebraElement::parabolic(0.7, 0.0, c(0.0, 0.0))), &T).unwrap();
        assert_eq!(lf.kind, Kind::Parabolic(ParabolicKind::LineFixing));
        let line = lf.fixed.line.unwrap().line;
        assert!(line.contains(&pt(1.0, 1.0, 0.0), 1e-12) && line.contains(&pt(0.0, 0.0, 1.0), 1e-12));
        assert_eq!(lf.fixed.points.len(), 1);
        assert_eq!(lf.fixed.points[0].location, Location::Boundary);

        let ts = classify(&elem(AlgebraElement::parabolic(0.0, 0.0, c(1.0, 0.0))), &T).unwrap();
        assert_eq!(ts.kind, Kind::Parabolic(ParabolicKind::ThreeStep));
        assert_eq!(ts.fixed.points.len(), 1);
        assert!(ts.fixed.points[0].point.approx_eq(&pt(1.0, 1.0, 0.0), 1e-12));
        assert_eq!(ts.fixed.points[0].location, Location::Boundary);
    }

    #[test]
    fn elliptic_rotation() {
        let th = 0.7;
        let e = |x: f64| c(0.0, x).exp();
        let a = GroupElement::new(Mat3::diag([e(th), e(-0.3), e(0.3 - th)]), 1e-9).unwrap();
        assert_eq!(classify(&a, &T).unwrap().kind, Kind::Elliptic);
        // complex reflection: the fixed line {z = 0} crosses the ball
        let r = GroupElement::new(Mat3::diag([e(th), e(th), e(-2.0 * th)]), 1e-9).unwrap();
        let cl = classify(&r, &T).unwrap();
        assert_eq!(cl.kind, Kind::Elliptic);
        assert!(cl.fixed.line.is_some());
    }

    #[test]
    fn derivative_eigenvalue_table() {
        let (l, b) = (0.8, 0.3);
        let a = elem(AlgebraElement::hyperbolic(l, b));
        let close = |got: [C64; 2], want: [C64; 2]| {
            let ok = |x: C64, y: C64| (x - y).norm() < 1e-12;
            (ok(got[0], want[0]) && ok(got[1], want[1])) || (ok(got[0], want[1]) && ok(got[1], want[0]))
        };
        let at = |p| derivative_eigenvalues(&a, &p, &T).unwrap();
        assert!(close(at(pt(1.0, 1.0, 0.0)), [c(-2.0 * l, 0.0).exp(), c(-l, -3.0 * b).exp()]));
        assert!(close(at(pt(1.0, -1.0, 0.0)), [c(2.0 * l, 0.0).exp(), c(l, -3.0 * b).exp()]));
        assert!(close(at(pt(0.0, 0.0, 1.0)), [c(-l, 3.0 * b).exp(), c(l, 3.0 * b).exp()]));
        assert_eq!(derivative_eigenvalues(&a, &pt(1.0, 0.0, 0.0), &T), Err(Su12Error::NotFixed));

        let th = 0.4;
        let e = |x: f64| c(0.0, x).exp();
        let r = GroupElement::new(Mat3::diag([e(th), e(th), e(-2.0 * th)]), 1e-9).unwrap();
        let d = derivative_eigenvalues(&r, &pt(1.0, 0.0, 0.0), &T).unwrap();
        assert!(close(d, [c(1.0, 0.0), e(-3.0 * th)]));
    }
}
