use crate::linalg3::{mat_exp, Mat3};
use crate::C64;

/// An element of su(1,2) in the five-parameter layout
///
/// ```text
/// [ -i(b1+b2)   l1    l2  ]
/// [  conj(l1)  i b1   c   ]
/// [  conj(l2) -conj(c) i b2 ]
/// ```
#[derive(Clone, Copy, Debug, PartialEq, Default)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct AlgebraElement {
    pub b1: f64,
    pub b2: f64,
    pub l1: C64,
    pub l2: C64,
    pub c: C64,
}

impl AlgebraElement {
    /// Diagonal hyperbolic generator `[[ib, l, 0], [l, ib, 0], [0, 0, -2ib]]`.
    pub fn hyperbolic(l: f64, b: f64) -> Self {
        AlgebraElement { b1: b, b2: -2.0 * b, l1: C64::new(l, 0.0), l2: C64::new(0.0, 0.0), c: C64::new(0.0, 0.0) }
    }

    /// Parabolic generator fixing `[1:1:0]`, with eigenvalues `i d2` and
    /// `-i d2/2` (twice).
    pub fn parabolic(d1: f64, d2: f64, c: C64) -> Self {
        AlgebraElement { b1: d1, b2: d2, l1: C64::new(0.0, d1 + d2 / 2.0), l2: c, c }
    }

    pub fn to_matrix(&self) -> Mat3 {
        let i = C64::new(0.0, 1.0);
        Mat3::new([
            [-i * (self.b1 + self.b2), self.l1, self.l2],
            [self.l1.conj(), i * self.b1, self.c],
            [self.l2.conj(), -self.c.conj(), i * self.b2],
        ])
    }

    pub fn exp(&self) -> Mat3 {
        mat_exp(&self.to_matrix())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg3::{cubic_roots, eig3, jordan_shape, ProjectivePoint};
    use crate::su12::HermitianForm;
    use rand::{Rng, SeedableRng};

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    #[test]
    fn zero_parameters_give_zero_matrix() {
        assert_eq!(AlgebraElement::default().to_matrix(), Mat3::ZERO);
    }

    #[test]
    fn hyperbolic_layout() {
        let (l, b) = (0.8, -0.4);
        let m = AlgebraElement::hyperbolic(l, b).to_matrix();
        let want = Mat3::new([
            [c(0.0, b), c(l, 0.0), c(0.0, 0.0)],
            [c(l, 0.0), c(0.0, b), c(0.0, 0.0)],
            [c(0.0, 0.0), c(0.0, 0.0), c(0.0, -2.0 * b)],
        ]);
        assert!((m - want).max_abs() < 1e-15);
    }

    #[test]
    fn parabolic_layout() {
        let (d1, d2, cc) = (0.3, -1.1, c(0.2, 0.7));
        let m = AlgebraElement::parabolic(d1, d2, cc).to_matrix();
        let i = c(0.0, 1.0);
        let want = Mat3::new([
            [-i * (d1 + d2), i * (d1 + d2 / 2.0), cc],
            [-i * (d1 + d2 / 2.0), i * d1, cc],
            [cc.conj(), -cc.conj(), i * d2],
        ]);
        assert!((m - want).max_abs() < 1e-15);
        // (1, 1, 0) is an eigenvector with eigenvalue -i d2 / 2
        let v = m.mul_vec(&[c(1.0, 0.0), c(1.0, 0.0), c(0.0, 0.0)]);
        let lam = c(0.0, -d2 / 2.0);
        assert!((v[0] - lam).norm() < 1e-15 && (v[1] - lam).norm() < 1e-15 && v[2].norm() < 1e-15);
    }

    #[test]
    fn realizations_are_anti_self_adjoint_and_traceless() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(1);
        let j = HermitianForm::J;
        for _ in 0..200 {
            let mut z = || c(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0));
            let a = AlgebraElement { b1: z().re, b2: z().im, l1: z(), l2: z(), c: z() };
            let m = a.to_matrix();
            assert!((m.adjoint() * j + j * m).max_abs() <= 1e-12);
            assert!(m.trace().norm() <= 1e-12);
        }
    }

    #[test]
    fn hyperbolic_exponential_spectrum() {
        let a = AlgebraElement::hyperbolic(1.0, 0.0).exp();
        let (c2, c1, c0) = crate::linalg3::char_poly(&a);
        let roots = cubic_roots(c2, c1, c0);
        let e = core::f64::consts::E;
        for want in [e, 1.0 / e, 1.0] {
            assert!(roots.iter().any(|r| (r - c(want, 0.0)).norm() < 1e-12), "{roots:?}");
        }
        let data = eig3(&a).unwrap();
        for (value, v) in [(e, [1.0, 1.0, 0.0]), (1.0 / e, [1.0, -1.0, 0.0]), (1.0, [0.0, 0.0, 1.0])] {
            let space = data.spaces.iter().find(|s| (s.value - c(value, 0.0)).norm() < 1e-9).unwrap();
            let p = ProjectivePoint::from_real(v).unwrap();
            assert!(space.vectors[0].approx_eq(&p, 1e-12));
        }
        let (l, b) = (0.9, 0.4);
        let values = eig3(&AlgebraElement::hyperbolic(l, b).exp()).unwrap().eigenvalues();
        for want in [c(l, b).exp(), c(-l, b).exp(), c(0.0, -2.0 * b).exp()] {
            assert!(values.iter().any(|v| (v - want).norm() < 1e-12));
        }
    }

    #[test]
    fn parabolic_exponential_jordan_shapes() {
        let unipotent = AlgebraElement::parabolic(0.0, 0.0, c(1.0, 0.0)).exp();
        let shape = jordan_shape(&unipotent, 1e-7).unwrap();
        assert_eq!(shape.blocks, alloc::vec![(c(1.0, 0.0), alloc::vec![3])]);

        let d2 = 1.0;
        let rot = AlgebraElement::parabolic(0.0, d2, c(0.3, 0.0)).exp();
        let shape = jordan_shape(&rot, 1e-7).unwrap();
        let mu = c(0.0, -d2 / 2.0).exp();
        let nu = c(0.0, d2).exp();
        assert!(shape.blocks.iter().any(|(v, b)| (v - mu).norm() < 1e-9 && b == &[2]));
        assert!(shape.blocks.iter().any(|(v, b)| (v - nu).norm() < 1e-9 && b == &[1]));
    }
}
