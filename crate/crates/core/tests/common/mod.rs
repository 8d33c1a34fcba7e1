//! Random elements for the integration tests.
#![allow(dead_code)]

use fillings_core::su12::{AlgebraElement, GroupElement};
use fillings_core::C64;
use rand::rngs::StdRng;
use rand::Rng;

pub fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

pub fn elem(a: AlgebraElement) -> GroupElement {
    GroupElement::new(a.exp(), 1e-9).expect("exponentials are group members")
}

pub fn random_algebra(rng: &mut StdRng, scale: f64) -> AlgebraElement {
    let mut r = || rng.gen_range(-scale..scale);
    AlgebraElement { b1: r(), b2: r(), l1: c(r(), r()), l2: c(r(), r()), c: c(r(), r()) }
}

/// A random group element: a product of two exponentials.
pub fn random_group(rng: &mut StdRng) -> GroupElement {
    let a = elem(random_algebra(rng, 1.0));
    let b = elem(random_algebra(rng, 1.0));
    a.compose(&b)
}

/// Uniform on `[lo, hi]` with a random sign.
pub fn signed(rng: &mut StdRng, lo: f64, hi: f64) -> f64 {
    let x = rng.gen_range(lo..=hi);
    if rng.gen_bool(0.5) {
        x
    } else {
        -x
    }
}

/// Parabolic generator parameters `(d1, d2, c)` from one of three strata:
/// 0 has `d2 ≠ 0`; 1 has `d2 = 0, c = 0`; 2 has `d2 = 0, c ≠ 0`.
pub fn parabolic_params(rng: &mut StdRng, stratum: usize) -> (f64, f64, C64) {
    match stratum {
        0 => {
            let d2 = signed(rng, 0.2, 2.0);
            let cc = c(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0));
            (rng.gen_range(-2.0..2.0), d2, cc)
        }
        1 => (signed(rng, 0.2, 2.0), 0.0, c(0.0, 0.0)),
        _ => {
            let r = rng.gen_range(0.2..2.0);
            let t = rng.gen_range(-core::f64::consts::PI..core::f64::consts::PI);
            (rng.gen_range(-2.0..2.0), 0.0, c(r * t.cos(), r * t.sin()))
        }
    }
}

/// Distance between two unordered lists of complex numbers under the best
/// matching.
pub fn multiset_distance(a: &[C64], b: &[C64]) -> f64 {
    assert_eq!(a.len(), b.len());
    let n = a.len();
    let mut best = f64::INFINITY;
    let mut perm: Vec<usize> = (0..n).collect();
    permute(&mut perm, 0, &mut |p| {
        let d = (0..n).map(|i| (a[i] - b[p[i]]).norm()).fold(0.0, f64::max);
        best = best.min(d);
    });
    best
}

fn permute(p: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
    if k == p.len() {
        f(p);
        return;
    }
    for i in k..p.len() {
        p.swap(k, i);
        permute(p, k + 1, f);
        p.swap(k, i);
    }
}
