//! Input files: group matrices and Lie algebra parameters.

use std::fs;
use std::io::Read;
use std::path::Path;

use fillings_core::linalg3::{mat_exp, Mat3};
use fillings_core::su12::{AlgebraElement, GroupElement};
use fillings_core::{Tolerances, C64};
use serde::de::DeserializeOwned;
use serde::Deserialize;

use crate::CliError;

/// Accepted element encodings. A matrix is a 3×3 row-major array of
/// `[re, im]` pairs; the object forms describe Lie algebra elements.
#[derive(Clone, Debug, PartialEq, Deserialize)]
#[serde(untagged)]
pub enum ElementInput {
    Matrix(Mat3),
    Algebra(AlgebraElement),
    Hyperbolic(HyperbolicParams),
    Parabolic(ParabolicParams),
}

#[derive(Clone, Copy, Debug, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HyperbolicParams {
    pub l: f64,
    #[serde(default)]
    pub b: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Default, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct ParabolicParams {
    pub d1: f64,
    pub d2: f64,
    pub c: C64,
}

impl ElementInput {
    /// The group element. Algebra forms require `exp`; with `exp` a matrix
    /// is read as an algebra element too.
    pub fn element(&self, exp: bool, tol: &Tolerances) -> Result<GroupElement, CliError> {
        let m = match (self, exp) {
            (ElementInput::Matrix(m), false) => *m,
            (ElementInput::Matrix(m), true) => mat_exp(m),
            (other, true) => mat_exp(&other.algebra().expect("non-matrix input").to_matrix()),
            (_, false) => return Err(CliError::Usage("algebra parameters need --exp".into())),
        };
        Ok(GroupElement::new(m, tol.membership)?)
    }

    fn algebra(&self) -> Option<AlgebraElement> {
        match *self {
            ElementInput::Matrix(_) => None,
            ElementInput::Algebra(a) => Some(a),
            ElementInput::Hyperbolic(p) => Some(AlgebraElement::hyperbolic(p.l, p.b)),
            ElementInput::Parabolic(p) => Some(AlgebraElement::parabolic(p.d1, p.d2, p.c)),
        }
    }
}

/// Reads and parses a JSON file; `-` reads standard input.
pub fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T, CliError> {
    let io = |source| CliError::Io { path: path.to_path_buf(), source };
    let text = if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(io)?;
        s
    } else {
        fs::read_to_string(path).map_err(io)?
    };
    serde_json::from_str(&text).map_err(|source| CliError::Json { path: path.to_path_buf(), source })
}
