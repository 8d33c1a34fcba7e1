//! Projective dynamics of SU(1,2) on the complex projective plane and exact
//! intersection-lattice bookkeeping for rational surfaces.
//!
//! The crate is `no_std` (it needs `alloc`). File formats, the command line
//! and parallel sampling live in the `fillings` companion crate.
//!
//! Modules, bottom-up:
//!
//! * [`linalg3`]: dense complex 3×3 algebra (cubic roots, eigen data, Jordan
//!   shapes, matrix exponential, projective points).
//! * [`su12`]: the group SU(1,2) for the form `-|x|² + |y|² + |z|²`, its Lie
//!   algebra, the elliptic / parabolic / hyperbolic classification and normal
//!   forms.
//! * [`dynamics`]: orbits of the projective action and basin sampling.
//! * [`lattice`]: unimodular Lorentzian Picard lattices, blow-ups,
//!   contractions, adjunction genus and Hirzebruch surfaces.
//! * [`replay`]: scripted blow-up / contraction sequences on tracked curves.
#![cfg_attr(not(test), no_std)]
#![deny(unsafe_code)]
#![allow(clippy::needless_range_loop)]

extern crate alloc;

pub mod dynamics;
pub mod lattice;
pub mod linalg3;
pub mod replay;
pub mod su12;
mod tolerance;

pub use num_complex::Complex64 as C64;
pub use tolerance::Tolerances;
