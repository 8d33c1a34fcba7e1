use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use super::{Action, Check, Initial, ReplayError, Script, Step};

fn s(x: &str) -> String {
    x.to_string()
}

fn curve(name: &str, class: &[(&str, i64)]) -> Step {
    Action::Curve { name: s(name), class: class.iter().map(|&(l, c)| (s(l), c)).collect() }.into()
}

fn blow_up(point: &str, on: &[&str], exceptional: &str) -> Step {
    Action::BlowUp { point: s(point), on: on.iter().map(|&c| (s(c), 1)).collect(), exceptional: Some(s(exceptional)) }
        .into()
}

fn contract(curve: &str, point: &str) -> Step {
    Action::Contract { curve: s(curve), point: Some(s(point)) }.into()
}

fn rename(from: &str, to: &str) -> Step {
    Action::Rename { from: s(from), to: s(to) }.into()
}

fn rebase(curves: &[&str]) -> Step {
    Action::Rebase { curves: curves.iter().map(|&c| s(c)).collect() }.into()
}

fn check(c: Check) -> Step {
    Action::Assert(c).into()
}

fn square(curve: &str, expected: i64) -> Step {
    check(Check::SelfIntersection { curve: s(curve), expected })
}

fn meet(a: &str, b: &str, expected: i64) -> Step {
    check(Check::Intersection { curves: (s(a), s(b)), expected })
}

fn note(mut step: Step, text: &str) -> Step {
    step.comment = Some(s(text));
    step
}

/// `k` blow-ups of the plane at points in general position.
pub fn builtin_standard_blowups(k: usize) -> Script {
    let mut steps: Vec<Step> =
        (1..=k).map(|i| Action::BlowUp { point: format!("p{i}"), on: Vec::new(), exceptional: None }.into()).collect();
    steps.push(check(Check::Rank { expected: 1 + k }));
    steps.push(check(Check::Signature { expected: (1, k) }));
    steps.push(check(Check::CanonicalSquare { expected: 9 - k as i64 }));
    Script { initial: Initial::P2, steps }
}

/// Two points blown up on a line `L`, whose transform is then contracted;
/// the result is the quadric with the two exceptional curves as rulings.
pub fn builtin_sigma0_singular() -> Script {
    let steps = vec![
        curve("L", &[("H", 1)]),
        note(blow_up("p1", &["L"], "E1"), "p1 on L, away from the boundary sphere"),
        note(blow_up("p2", &["L"], "E2"), "p2 on L, away from the boundary sphere"),
        square("L", -1),
        contract("L", "s"),
        square("E1", 0),
        square("E2", 0),
        note(meet("E1", "E2", 1), "the two rulings through s are transverse"),
        rebase(&["E1", "E2"]),
        check(Check::LatticeGram { expected: vec![vec![0, 1], vec![1, 0]] }),
        check(Check::CanonicalSquare { expected: 8 }),
    ];
    Script { initial: Initial::P2, steps }
}

/// Blow up a point `p1` on a line `L`, then the point where `L` meets `E1`,
/// and contract `L`. The transforms of `E2` and `E1` become a fibre `F` and a
/// base `B` of Σ₂.
pub fn builtin_sigma2_singular() -> Script {
    let steps = vec![
        curve("L", &[("H", 1)]),
        blow_up("p1", &["L"], "E1"),
        square("L", 0),
        blow_up("p2", &["L", "E1"], "E2"),
        square("L", -1),
        square("E1", -2),
        contract("L", "s"),
        rename("E2", "F"),
        rename("E1", "B"),
        check(Check::Gram { curves: vec![s("F"), s("B")], expected: vec![vec![0, 1], vec![1, -2]] }),
        rebase(&["F", "B"]),
        check(Check::LatticeGram { expected: vec![vec![0, 1], vec![1, -2]] }),
        check(Check::Genus { curve: s("F"), expected: 0 }),
        check(Check::Genus { curve: s("B"), expected: 0 }),
        check(Check::CanonicalSquare { expected: 8 }),
    ];
    Script { initial: Initial::P2, steps }
}

/// One elementary transformation Σₙ → Σₙ₊₁ on a state tracking a fibre `F`
/// and a base `B`: blow up `F ∩ B`, contract the fibre transform, and take the
/// new exceptional curve as the fibre.
pub fn builtin_sigma_step(n: u32) -> Vec<Step> {
    let (q, t) = (format!("q{n}"), format!("t{n}"));
    let n = i64::from(n);
    vec![
        blow_up(&q, &["F", "B"], "E"),
        square("F", -1),
        contract("F", &t),
        rename("E", "F"),
        square("F", 0),
        square("B", -(n + 1)),
        meet("F", "B", 1),
        rebase(&["F", "B"]),
    ]
}

/// Looks up a builtin script: `sigma0`, `sigma2`, `standard K` (K generic
/// blow-ups of the plane) or `sigma-steps K` (the Σ₂ construction followed
/// by K elementary transformations).
pub fn builtin(name: &str, arg: Option<u32>) -> Result<Script, ReplayError> {
    match (name, arg) {
        ("sigma0", None) => Ok(builtin_sigma0_singular()),
        ("sigma2", None) => Ok(builtin_sigma2_singular()),
        ("standard", Some(k)) => Ok(builtin_standard_blowups(k as usize)),
        ("sigma-steps", Some(k)) => {
            let mut script = builtin_sigma2_singular();
            for n in 2..2 + k {
                script.steps.extend(builtin_sigma_step(n));
            }
            Ok(script)
        }
        (name, None) => Err(ReplayError::UnknownBuiltin(name.into())),
        (name, Some(k)) => Err(ReplayError::UnknownBuiltin(format!("{name} {k}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::super::{run, SurfaceState};
    use super::*;
    use crate::lattice::{enumerate_exceptional_classes, DivisorClass};

    fn check_log(state: &SurfaceState) {
        for entry in &state.log {
            for change in &entry.squares {
                if let (Some(_), Ok(d)) = (change.after, state.class(&change.curve)) {
                    // only the final entry can be compared against the final lattice
                    if entry.step + 1 == state.log.len() {
                        assert_eq!(change.after, Some(state.lattice.square(d).unwrap()));
                    }
                }
            }
        }
    }

    #[test]
    fn empty_script() {
        let st = run(&Script { initial: Initial::P2, steps: vec![] }).unwrap();
        assert_eq!(st.lattice.gram(), &vec![vec![1]]);
        let st = run(&Script { initial: Initial::Hirzebruch { n: 3 }, steps: vec![] }).unwrap();
        assert_eq!(st.lattice.gram(), &vec![vec![0, 1], vec![1, -3]]);
    }

    #[test]
    fn standard_blowups() {
        assert_eq!(run(&builtin_standard_blowups(0)).unwrap().lattice.gram(), &vec![vec![1]]);
        let st = run(&builtin_standard_blowups(1)).unwrap();
        assert_eq!(enumerate_exceptional_classes(&st.lattice, 3), vec![DivisorClass::new(vec![0, 1])]);
        let st = run(&builtin_standard_blowups(3)).unwrap();
        assert_eq!(st.lattice.square(st.lattice.canonical()), Ok(6));
        for k in 0..=8 {
            run(&builtin_standard_blowups(k)).unwrap();
        }
    }

    #[test]
    fn sigma0() {
        let st = run(&builtin_sigma0_singular()).unwrap();
        assert_eq!(st.lattice.gram(), &vec![vec![0, 1], vec![1, 0]]);
        assert_eq!(st.points["s"], vec![(s("E1"), 1), (s("E2"), 1)]);
        let l_entry = &st.log[3];
        assert_eq!(l_entry.squares.iter().find(|c| c.curve == "L").unwrap().after, Some(-1));
        check_log(&st);
    }

    #[test]
    fn sigma2() {
        let st = run(&builtin_sigma2_singular()).unwrap();
        assert_eq!(st.lattice.gram(), &vec![vec![0, 1], vec![1, -2]]);
        assert_eq!(st.square("B"), Ok(-2));
        assert_eq!(st.lattice.canonical().coeffs(), &[-4, -2]);
    }

    #[test]
    fn sigma_steps() {
        let mut st = run(&builtin_sigma2_singular()).unwrap();
        for k in 0..=8u32 {
            assert_eq!(st.square("B"), Ok(-(2 + i64::from(k))));
            assert_eq!(st.lattice.gram(), &vec![vec![0, 1], vec![1, -(2 + i64::from(k))]]);
            assert_eq!(st.lattice.signature(), (1, 1));
            st.run_steps(&builtin_sigma_step(2 + k)).unwrap();
        }
        let st = run(&builtin("sigma-steps", Some(2)).unwrap()).unwrap();
        assert_eq!(st.square("B"), Ok(-4));
        assert_eq!(st.lattice.canonical().coeffs(), &[-6, -2]);
    }

    #[test]
    fn builtin_names() {
        assert!(builtin("sigma0", None).is_ok());
        assert_eq!(builtin("standard", Some(4)), Ok(builtin_standard_blowups(4)));
        assert_eq!(builtin("sigma-steps", Some(0)), Ok(builtin_sigma2_singular()));
        assert_eq!(builtin("sigma0", Some(1)), Err(ReplayError::UnknownBuiltin(s("sigma0 1"))));
        assert_eq!(builtin("nope", None), Err(ReplayError::UnknownBuiltin(s("nope"))));
        assert!(builtin("standard", None).is_err());
    }
}
