//! Scripted blow-up and contraction sequences with tracked curve classes.
//!
//! A [`SurfaceState`] is a lattice together with named curve classes and
//! named points (incidence lists). Points carry no coordinates; scripts only
//! record which tracked curves pass through them and with what multiplicity.

mod builtins;

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::lattice::exact::dot;
use crate::lattice::{enumerate_exceptional_classes, DivisorClass, IntMatrix, LatticeError, PicardLattice};

pub use builtins::{
    builtin, builtin_sigma0_singular, builtin_sigma2_singular, builtin_sigma_step, builtin_standard_blowups,
};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ReplayError {
    #[error("unknown name {0:?}")]
    UnknownName(String),
    #[error("name {0:?} is already in use")]
    DuplicateName(String),
    #[error("curve {curve:?} is not exceptional: D·D = {square}, D·K = {canonical}")]
    NotExceptionalClass { curve: String, square: i64, canonical: i64 },
    #[error("assertion at step {step} failed: expected {expected}, got {got}")]
    AssertionFailed { step: usize, expected: String, got: String },
    #[error("unknown builtin {0:?}")]
    UnknownBuiltin(String),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

/// Starting surface of a script.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize), serde(tag = "type"))]
pub enum Initial {
    P2,
    Hirzebruch { n: u32 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Script {
    pub initial: Initial,
    pub steps: Vec<Step>,
}

/// One script step with an optional free-text note.
#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Step {
    #[cfg_attr(feature = "serde", serde(flatten))]
    pub action: Action,
    #[cfg_attr(feature = "serde", serde(default, skip_serializing_if = "Option::is_none"))]
    pub comment: Option<String>,
}

impl From<Action> for Step {
    fn from(action: Action) -> Self {
        Step { action, comment: None }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(
    feature = "serde",
    derive(serde::Serialize, serde::Deserialize),
    serde(tag = "op", rename_all = "snake_case")
)]
pub enum Action {
    /// Track a curve given as a combination of the current basis labels.
    Curve {
        name: String,
        class: Vec<(String, i64)>,
    },
    /// Blow up a new point lying on the listed curves with the given
    /// multiplicities. The exceptional curve is tracked under `exceptional`,
    /// or under the first free name `E1`, `E2`, ...
    BlowUp {
        point: String,
        #[cfg_attr(feature = "serde", serde(default))]
        on: Vec<(String, i64)>,
        #[cfg_attr(feature = "serde", serde(default, skip_serializing_if = "Option::is_none"))]
        exceptional: Option<String>,
    },
    /// Contract a tracked curve; its image point is recorded under `point`
    /// when given.
    Contract {
        curve: String,
        #[cfg_attr(feature = "serde", serde(default, skip_serializing_if = "Option::is_none"))]
        point: Option<String>,
    },
    Rename {
        from: String,
        to: String,
    },
    /// Change the lattice basis to the classes of the listed curves.
    Rebase {
        curves: Vec<String>,
    },
    Assert(Check),
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(
    feature = "serde",
    derive(serde::Serialize, serde::Deserialize),
    serde(tag = "kind", rename_all = "snake_case")
)]
pub enum Check {
    SelfIntersection {
        curve: String,
        expected: i64,
    },
    Intersection {
        curves: (String, String),
        expected: i64,
    },
    Genus {
        curve: String,
        expected: i64,
    },
    CanonicalDegree {
        curve: String,
        expected: i64,
    },
    CanonicalSquare {
        expected: i64,
    },
    Rank {
        expected: usize,
    },
    Signature {
        expected: (usize, usize),
    },
    /// Gram matrix of the listed tracked curves.
    Gram {
        curves: Vec<String>,
        expected: IntMatrix,
    },
    /// Gram matrix of the lattice basis.
    LatticeGram {
        expected: IntMatrix,
    },
    /// Exceptional classes in the coefficient box `[-bound, bound]`, rendered
    /// in the basis labels.
    ExceptionalClasses {
        bound: i64,
        expected: Vec<String>,
    },
}

/// Self-intersection of one curve before and after a step; `None` when the
/// curve did not exist on that side.
#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct SquareChange {
    pub curve: String,
    pub before: Option<i64>,
    pub after: Option<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct LogEntry {
    pub step: usize,
    pub op: String,
    pub squares: Vec<SquareChange>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct SurfaceState {
    pub lattice: PicardLattice,
    pub curves: BTreeMap<String, DivisorClass>,
    pub points: BTreeMap<String, Vec<(String, i64)>>,
    pub log: Vec<LogEntry>,
}

/// Runs `script` from its initial surface.
pub fn run(script: &Script) -> Result<SurfaceState, ReplayError> {
    let mut state = SurfaceState::new(script.initial);
    state.run_steps(&script.steps)?;
    Ok(state)
}

impl SurfaceState {
    pub fn new(initial: Initial) -> Self {
        let lattice = match initial {
            Initial::P2 => PicardLattice::p2(),
            Initial::Hirzebruch { n } => PicardLattice::hirzebruch(n),
        };
        SurfaceState { lattice, curves: BTreeMap::new(), points: BTreeMap::new(), log: Vec::new() }
    }

    pub fn class(&self, name: &str) -> Result<&DivisorClass, ReplayError> {
        self.curves.get(name).ok_or_else(|| ReplayError::UnknownName(name.into()))
    }

    pub fn square(&self, name: &str) -> Result<i64, ReplayError> {
        Ok(self.lattice.square(self.class(name)?)?)
    }

    /// Executes further steps; step numbers continue from the log.
    pub fn run_steps(&mut self, steps: &[Step]) -> Result<(), ReplayError> {
        for step in steps {
            self.apply(&step.action)?;
        }
        Ok(())
    }

    fn squares(&self) -> BTreeMap<String, i64> {
        self.curves
            .iter()
            .map(|(n, d)| (n.clone(), self.lattice.square(d).expect("tracked classes match the lattice")))
            .collect()
    }

    pub fn apply(&mut self, action: &Action) -> Result<(), ReplayError> {
        let index = self.log.len();
        let before = self.squares();
        let op = match action {
            Action::Curve { name, class } => {
                self.fresh(name)?;
                let terms: Vec<(&str, i64)> = class.iter().map(|(l, c)| (l.as_str(), *c)).collect();
                let d = self.lattice.combination(&terms).map_err(|e| match e {
                    LatticeError::UnknownLabel(l) => ReplayError::UnknownName(l),
                    e => e.into(),
                })?;
                let text = self.lattice.describe(&d);
                self.curves.insert(name.clone(), d);
                format!("curve {name} = {text}")
            }
            Action::BlowUp { point, on, exceptional } => self.blow_up(point, on, exceptional.as_deref())?,
            Action::Contract { curve, point } => self.contract(curve, point.as_deref())?,
            Action::Rename { from, to } => {
                self.fresh(to)?;
                let d = self.curves.remove(from).ok_or_else(|| ReplayError::UnknownName(from.clone()))?;
                self.curves.insert(to.clone(), d);
                for inc in self.points.values_mut() {
                    for (c, _) in inc.iter_mut() {
                        if c == from {
                            *c = to.clone();
                        }
                    }
                }
                format!("rename {from} -> {to}")
            }
            Action::Rebase { curves } => {
                let classes = curves.iter().map(|c| self.class(c).cloned()).collect::<Result<Vec<_>, _>>()?;
                let (lattice, to_new) = self.lattice.rebase(&classes, curves.clone())?;
                for d in self.curves.values_mut() {
                    *d = DivisorClass::new(to_new.iter().map(|row| dot(row, d.coeffs())).collect());
                }
                self.lattice = lattice;
                format!("rebase onto [{}]", curves.join(", "))
            }
            Action::Assert(check) => self.check(index, check)?,
        };
        let after = self.squares();
        let mut names: Vec<&String> = before.keys().chain(after.keys()).collect();
        names.sort();
        names.dedup();
        let squares = names
            .into_iter()
            .map(|n| SquareChange { curve: n.clone(), before: before.get(n).copied(), after: after.get(n).copied() })
            .collect();
        self.log.push(LogEntry { step: index, op, squares });
        Ok(())
    }

    fn fresh(&self, name: &str) -> Result<(), ReplayError> {
        if self.curves.contains_key(name) {
            Err(ReplayError::DuplicateName(name.into()))
        } else {
            Ok(())
        }
    }

    fn blow_up(&mut self, point: &str, on: &[(String, i64)], exceptional: Option<&str>) -> Result<String, ReplayError> {
        if self.points.contains_key(point) {
            return Err(ReplayError::DuplicateName(point.into()));
        }
        for (c, _) in on {
            self.class(c)?;
        }
        let name = match exceptional {
            Some(n) => {
                self.fresh(n)?;
                n.to_string()
            }
            None => (1..)
                .map(|i| format!("E{i}"))
                .find(|n| !self.curves.contains_key(n) && !self.lattice.labels().contains(n))
                .expect("unbounded name supply"),
        };
        let (up, e) = self.lattice.blow_up_labeled(&name);
        for (c, d) in self.curves.iter_mut() {
            let m = on.iter().filter(|(n, _)| n == c).map(|&(_, m)| m).sum();
            *d = up.proper_transform(d, m)?;
        }
        self.curves.insert(name.clone(), e);
        self.points.insert(point.into(), on.to_vec());
        self.lattice = up;
        Ok(format!("blow up {point} -> {name}"))
    }

    fn contract(&mut self, curve: &str, point: Option<&str>) -> Result<String, ReplayError> {
        let e = self.class(curve)?.clone();
        if let Some(p) = point {
            if self.points.contains_key(p) {
                return Err(ReplayError::DuplicateName(p.into()));
            }
        }
        let square = self.lattice.square(&e)?;
        let canonical = self.lattice.intersect(&e, self.lattice.canonical())?;
        if square != -1 || canonical != -1 {
            return Err(ReplayError::NotExceptionalClass { curve: curve.into(), square, canonical });
        }
        let down = self.lattice.contract(&e)?;
        self.curves.remove(curve);
        let mut through = Vec::new();
        for (c, d) in self.curves.iter_mut() {
            let m = self.lattice.intersect(d, &e)?;
            if m > 0 {
                through.push((c.clone(), m));
            }
            *d = down.push(d)?;
        }
        if let Some(p) = point {
            self.points.insert(p.into(), through);
        }
        self.lattice = down.lattice;
        Ok(format!("contract {curve}"))
    }

    fn check(&self, step: usize, check: &Check) -> Result<String, ReplayError> {
        let fail = |expected: String, got: String| ReplayError::AssertionFailed { step, expected, got };
        let l = &self.lattice;
        let (what, expected, got) = match check {
            Check::SelfIntersection { curve, expected } => {
                (format!("{curve}²"), expected.to_string(), self.square(curve)?.to_string())
            }
            Check::Intersection { curves: (a, b), expected } => {
                (format!("{a}·{b}"), expected.to_string(), l.intersect(self.class(a)?, self.class(b)?)?.to_string())
            }
            Check::Genus { curve, expected } => {
                (format!("genus {curve}"), expected.to_string(), l.genus(self.class(curve)?)?.to_string())
            }
            Check::CanonicalDegree { curve, expected } => (
                format!("{curve}·K"),
                expected.to_string(),
                l.intersect(self.class(curve)?, l.canonical())?.to_string(),
            ),
            Check::CanonicalSquare { expected } => {
                ("K²".into(), expected.to_string(), l.square(l.canonical())?.to_string())
            }
            Check::Rank { expected } => ("rank".into(), expected.to_string(), l.rank().to_string()),
            Check::Signature { expected } => {
                ("signature".into(), format!("{expected:?}"), format!("{:?}", l.signature()))
            }
            Check::Gram { curves, expected } => {
                let classes = curves.iter().map(|c| self.class(c)).collect::<Result<Vec<_>, _>>()?;
                let mut gram = Vec::new();
                for a in &classes {
                    let mut row = Vec::new();
                    for b in &classes {
                        row.push(l.intersect(a, b)?);
                    }
                    gram.push(row);
                }
                (format!("gram of [{}]", curves.join(", ")), format!("{expected:?}"), format!("{gram:?}"))
            }
            Check::LatticeGram { expected } => {
                ("lattice gram".into(), format!("{expected:?}"), format!("{:?}", l.gram()))
            }
            Check::ExceptionalClasses { bound, expected } => {
                let mut want = expected.clone();
                want.sort();
                let mut have: Vec<String> =
                    enumerate_exceptional_classes(l, *bound).iter().map(|d| l.describe(d)).collect();
                have.sort();
                ("exceptional classes".into(), format!("{want:?}"), format!("{have:?}"))
            }
        };
        if expected == got {
            Ok(format!("assert {what} = {got}"))
        } else {
            Err(fail(expected, got))
        }
    }
}
