use super::mat::Mat3;
use crate::C64;

const SERIES_TERMS: usize = 20;

/// Matrix exponential by scaling and squaring: `M` is scaled by `2^-s` so that
/// its Frobenius norm is at most 1/2, the Taylor series is summed through the
/// term of degree 20, and the result is squared `s` times.
pub fn mat_exp(m: &Mat3) -> Mat3 {
    let norm = m.frobenius_norm();
    let mut s = 0u32;
    let mut scaled_norm = norm;
    while scaled_norm > 0.5 {
        scaled_norm /= 2.0;
        s += 1;
    }
    let x = m.scale(C64::new(libm::ldexp(1.0, -(s as i32)), 0.0));
    // Horner: I + X(I + X/2(I + X/3(...)))
    let mut acc = Mat3::IDENTITY;
    for k in (1..=SERIES_TERMS).rev() {
        acc = Mat3::IDENTITY + (x * acc).scale(C64::new(1.0 / k as f64, 0.0));
    }
    for _ in 0..s {
        acc = acc * acc;
    }
    acc
}
