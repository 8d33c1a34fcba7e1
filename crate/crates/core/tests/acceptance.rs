//! Acceptance checks, one line per criterion. Runs without the libtest
//! harness so every line is printed; exits non-zero if any criterion fails.

mod common;

use std::f64::consts::PI;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::*;
use fillings_core::dynamics::{basin_check, BasinConfig};
use fillings_core::lattice::{
    blow_up_round_trip, enumerate_exceptional_classes, isometry_order_on_classes, square_one_classes, DivisorClass,
    LatticeIsometry, PicardLattice,
};
use fillings_core::linalg3::{eig3, ProjectivePoint};
use fillings_core::replay::{builtin_sigma0_singular, builtin_sigma2_singular, builtin_sigma_step, run};
use fillings_core::su12::{classify, derivative_eigenvalues, AlgebraElement, GroupElement, Kind, ParabolicKind};
use fillings_core::{Tolerances, C64};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

const T: Tolerances = Tolerances::DEFAULT;

type Check = fn() -> Result<String, String>;

fn e(z: C64) -> C64 {
    z.exp()
}

/// `l ∈ (0, 3]`, `b ∈ (-π, π]`.
fn hyperbolic_params(rng: &mut StdRng) -> (f64, f64) {
    (3.0 - rng.gen_range(0.0..3.0), PI - rng.gen_range(0.0..2.0 * PI))
}

fn eigenvalue_formulas() -> Result<String, String> {
    let mut rng = StdRng::seed_from_u64(1);
    let mut worst: f64 = 0.0;
    for _ in 0..100 {
        let (l, b) = hyperbolic_params(&mut rng);
        let got = eig3(&AlgebraElement::hyperbolic(l, b).exp()).map_err(|e| e.to_string())?.eigenvalues();
        let want = [e(c(l, b)), e(c(-l, b)), e(c(0.0, -2.0 * b))];
        worst = worst.max(multiset_distance(&got, &want));
    }
    let line = format!("100 draws, max deviation {worst:.2e}");
    if worst <= 1e-9 {
        Ok(line)
    } else {
        Err(line)
    }
}

fn derivative_table() -> Result<String, String> {
    let mut rng = StdRng::seed_from_u64(2);
    let mut worst: f64 = 0.0;
    for _ in 0..100 {
        let (l, b) = hyperbolic_params(&mut rng);
        let a = elem(AlgebraElement::hyperbolic(l, b));
        let cl = classify(&a, &T).map_err(|e| e.to_string())?;
        let roles = cl.roles.ok_or("no roles")?;
        let q = ProjectivePoint::from_real([0.0, 0.0, 1.0]).unwrap();
        let table = [
            (roles.attractive, [e(c(-2.0 * l, 0.0)), e(c(-l, -3.0 * b))]),
            (roles.repulsive, [e(c(2.0 * l, 0.0)), e(c(l, -3.0 * b))]),
            (q, [e(c(-l, 3.0 * b)), e(c(l, 3.0 * b))]),
        ];
        for (p, want) in table {
            let got = derivative_eigenvalues(&a, &p, &T).map_err(|e| e.to_string())?;
            worst = worst.max(multiset_distance(&got, &want));
        }
    }
    let line = format!("300 fixed points, max deviation {worst:.2e}");
    if worst <= 1e-9 {
        Ok(line)
    } else {
        Err(line)
    }
}

fn parabolic_trichotomy() -> Result<String, String> {
    let mut rng = StdRng::seed_from_u64(3);
    let expected = [ParabolicKind::Rotational, ParabolicKind::LineFixing, ParabolicKind::ThreeStep];
    let mut agree = 0;
    let mut worst: f64 = 0.0;
    for i in 0..300 {
        let stratum = i % 3;
        let (d1, d2, cc) = parabolic_params(&mut rng, stratum);
        let m = AlgebraElement::parabolic(d1, d2, cc).exp();
        let a = GroupElement::new(m, 1e-9).map_err(|e| e.to_string())?;
        if classify(&a, &T).map(|cl| cl.kind) == Ok(Kind::Parabolic(expected[stratum])) {
            agree += 1;
        }
        let got = eig3(&m).map_err(|e| e.to_string())?.eigenvalues();
        let want = [e(c(0.0, d2)), e(c(0.0, -d2 / 2.0)), e(c(0.0, -d2 / 2.0))];
        worst = worst.max(multiset_distance(&got, &want));
    }
    let line = format!("{agree}/300 subtypes agree, eigenvalue deviation {worst:.2e}");
    if agree == 300 && worst <= 1e-9 {
        Ok(line)
    } else {
        Err(line)
    }
}

fn conjugation_invariance() -> Result<String, String> {
    let mut rng = StdRng::seed_from_u64(4);
    let mut mismatches = 0;
    let mut total = 0;
    for class in 0..5 {
        for _ in 0..100 {
            let a = match class {
                0 => {
                    let (t1, t2) = (rng.gen_range(0.1..2.0), rng.gen_range(0.1..2.0));
                    elem(AlgebraElement { b1: t1, b2: -t2, ..AlgebraElement::default() })
                }
                1 => {
                    let (l, b) = hyperbolic_params(&mut rng);
                    elem(AlgebraElement::hyperbolic(l, b))
                }
                s => {
                    let (d1, d2, cc) = parabolic_params(&mut rng, s - 2);
                    elem(AlgebraElement::parabolic(d1, d2, cc))
                }
            };
            let g = random_group(&mut rng);
            let before = classify(&a, &T).map(|cl| cl.kind);
            let after = classify(&a.conjugate_by(&g), &T).map(|cl| cl.kind);
            total += 1;
            if before.is_err() || before != after {
                mismatches += 1;
            }
        }
    }
    let line = format!("{mismatches} mismatches in {total} conjugations over 5 classes");
    if mismatches == 0 {
        Ok(line)
    } else {
        Err(line)
    }
}

fn basin_coverage() -> Result<String, String> {
    let mut rng = StdRng::seed_from_u64(5);
    let config = BasinConfig { ball_samples: 10_000, line_samples: 1_000, max_iter: 10_000, tol: 1e-8, seed: 0 };
    let mut hyperbolic_unresolved = 0;
    let mut parabolic_unresolved = [0usize; 3];
    for i in 0..20 {
        let g = random_group(&mut rng);
        let (a, stratum) = if i < 10 {
            let (l, b) = hyperbolic_params(&mut rng);
            (elem(AlgebraElement::hyperbolic(l, b)), None)
        } else {
            let s = i % 3;
            let (d1, d2, cc) = parabolic_params(&mut rng, s);
            (elem(AlgebraElement::parabolic(d1, d2, cc)), Some(s))
        };
        let a = a.conjugate_by(&g);
        let report = basin_check(&a, BasinConfig { seed: i as u64, ..config }, &T).map_err(|e| e.to_string())?;
        match stratum {
            None => hyperbolic_unresolved += report.unresolved,
            Some(s) => parabolic_unresolved[s] += report.unresolved,
        }
    }
    let [rot, line_fixing, three_step] = parabolic_unresolved;
    let line = format!(
        "unresolved of 11000 per element: hyperbolic {hyperbolic_unresolved}, \
         parabolic rotational {rot}, line-fixing {line_fixing}, three-step {three_step}"
    );
    if hyperbolic_unresolved + rot + line_fixing + three_step == 0 {
        Ok(line)
    } else {
        Err(line)
    }
}

fn lorentzian_signature() -> Result<String, String> {
    for k in 0..=10 {
        let l = PicardLattice::blown_up_plane(k);
        if l.signature() != (1, k) {
            return Err(format!("k = {k}: signature {:?}", l.signature()));
        }
    }
    Ok("signature (1, k) for k = 0..10".into())
}

fn definite_form() -> Result<String, String> {
    let mut rng = StdRng::seed_from_u64(7);
    let mut cases: Vec<(PicardLattice, DivisorClass)> = (1..=6)
        .map(|k| {
            let l = PicardLattice::blown_up_plane(k);
            let h = l.class_of("H").unwrap();
            (l, h)
        })
        .collect();
    let s1 = PicardLattice::hirzebruch(1);
    cases.push((s1.clone(), DivisorClass::new(vec![1, 1])));
    let mut checked = 0;
    let mut isometries = 0;
    for (l, cc) in &cases {
        let f = l.definite_form(cc).map_err(|e| e.to_string())?;
        let gens = c_fixing_isometries(l, cc);
        for _ in 0..1000 {
            let v = loop {
                let v = DivisorClass::new((0..l.rank()).map(|_| rng.gen_range(-20..=20)).collect());
                if !v.is_zero() {
                    break v;
                }
            };
            let val = f.value(&v).map_err(|e| e.to_string())?;
            if val <= 0 {
                return Err(format!("form not positive at {v:?}"));
            }
            for g in &gens {
                if f.value(&g.apply(&v).unwrap()).unwrap() != val {
                    return Err(format!("isometry {:?} changes the form at {v:?}", g.matrix()));
                }
            }
            checked += 1;
        }
        isometries += gens.len();
    }
    // orders on invariant sets of exceptional classes
    let mut orders = Vec::new();
    for k in 2..=5 {
        let l = PicardLattice::blown_up_plane(k);
        let exc = enumerate_exceptional_classes(&l, 2);
        let cycle = (1..k).fold(LatticeIsometry::identity(l.rank()), |acc, i| {
            acc.compose(&LatticeIsometry::swap(&l, i, i + 1).unwrap())
        });
        let order = isometry_order_on_classes(&cycle, &exc, 1000).map_err(|e| e.to_string())?;
        if order as usize != k {
            return Err(format!("k = {k}: cyclic permutation has order {order} on the exceptional set"));
        }
        orders.push(order);
    }
    Ok(format!("{checked} vectors positive, {isometries} isometries preserve it, orders {orders:?}"))
}

/// Isometries fixing `C`: transpositions and sign changes of the `Ei` (for
/// blow-ups of the plane with `C = H`), or `v ↦ 2(v·C)C - v` on Σ₁, plus the
/// compositions of pairs of these.
fn c_fixing_isometries(l: &PicardLattice, cc: &DivisorClass) -> Vec<LatticeIsometry> {
    let r = l.rank();
    let mut gens = Vec::new();
    if l.labels()[0] == "H" {
        for i in 1..r {
            for j in i + 1..r {
                gens.push(LatticeIsometry::swap(l, i, j).unwrap());
            }
            let mut flip: Vec<Vec<i64>> = (0..r).map(|a| (0..r).map(|b| i64::from(a == b)).collect()).collect();
            flip[i][i] = -1;
            gens.push(LatticeIsometry::new(l, flip).unwrap());
        }
    } else {
        gens.push(LatticeIsometry::new(l, vec![vec![1, 0], vec![2, -1]]).unwrap());
    }
    let pairs: Vec<LatticeIsometry> = gens.iter().flat_map(|a| gens.iter().map(move |b| a.compose(b))).collect();
    gens.extend(pairs);
    assert!(gens.iter().all(|g| g.apply(cc).unwrap() == *cc));
    gens
}

fn square_one() -> Result<String, String> {
    let mut bad = Vec::new();
    let one = square_one_classes(1, 1000);
    if one != vec![(1, 1), (-1, -1)] {
        bad.push(format!("n = 1 gives {one:?}"));
    }
    for n in (0..=20).filter(|&n| n != 1) {
        let found = square_one_classes(n, 1000);
        if !found.is_empty() {
            bad.push(format!("n = {n} gives {found:?}"));
        }
    }
    if bad.is_empty() {
        Ok("n = 1 gives ±(1, 1), all others empty".into())
    } else {
        Err(bad.join("; "))
    }
}

fn adjunction() -> Result<String, String> {
    let p2 = PicardLattice::p2();
    for d in 1..=5i64 {
        let g = p2.genus(&DivisorClass::new(vec![d])).map_err(|e| e.to_string())?;
        if g != (d - 1) * (d - 2) / 2 {
            return Err(format!("genus({d}H) = {g}"));
        }
    }
    for n in 0..=10 {
        let l = PicardLattice::hirzebruch(n);
        for name in ["F", "B"] {
            let g = l.genus(&l.class_of(name).unwrap()).map_err(|e| e.to_string())?;
            if g != 0 {
                return Err(format!("genus({name}) = {g} on Σ{n}"));
            }
        }
    }
    Ok("plane curves d = 1..5 and F, B on Σ0..Σ10".into())
}

fn replays() -> Result<String, String> {
    let s0 = run(&builtin_sigma0_singular()).map_err(|e| e.to_string())?;
    if s0.lattice.gram() != &vec![vec![0, 1], vec![1, 0]] {
        return Err(format!("sigma0 gram {:?}", s0.lattice.gram()));
    }
    let transversality = s0.lattice.intersect(s0.class("E1").unwrap(), s0.class("E2").unwrap()).unwrap();
    if transversality != 1 {
        return Err(format!("sigma0 rulings meet {transversality} times"));
    }
    let mut st = run(&builtin_sigma2_singular()).map_err(|e| e.to_string())?;
    if st.lattice.gram() != &vec![vec![0, 1], vec![1, -2]] {
        return Err(format!("sigma2 gram {:?}", st.lattice.gram()));
    }
    for k in 0..=8u32 {
        let base = st.square("B").map_err(|e| e.to_string())?;
        if base != -(2 + i64::from(k)) {
            return Err(format!("after {k} steps base² = {base}"));
        }
        st.run_steps(&builtin_sigma_step(2 + k)).map_err(|e| e.to_string())?;
    }
    Ok("sigma0 [[0,1],[1,0]] with E1·E2 = 1, sigma2 [[0,1],[1,-2]], base² = -(2+k) for k = 0..8".into())
}

fn round_trip() -> Result<String, String> {
    let lattices = (0..=5).map(PicardLattice::blown_up_plane).chain((0..=5).map(PicardLattice::hirzebruch));
    let mut count = 0;
    for l in lattices {
        let (back, iso) = blow_up_round_trip(&l).map_err(|e| format!("{l}: {e}"))?;
        // independent re-check of MᵀG'M = G
        let m = iso.matrix();
        let r = l.rank();
        for i in 0..r {
            for j in 0..r {
                let s: i64 = (0..r)
                    .flat_map(|a| (0..r).map(move |b| (a, b)))
                    .map(|(a, b)| m[a][i] * back.gram()[a][b] * m[b][j])
                    .sum();
                if s != l.gram()[i][j] {
                    return Err(format!("{l}: isometry check fails at ({i}, {j})"));
                }
            }
        }
        count += 1;
    }
    Ok(format!("{count} lattices recovered with explicit isometries"))
}

fn main() -> ExitCode {
    let criteria: [(&str, Duration, Check); 11] = [
        ("hyperbolic eigenvalue formulas", Duration::from_secs(1), eigenvalue_formulas),
        ("derivative eigenvalues at fixed points", Duration::from_secs(1), derivative_table),
        ("parabolic trichotomy", Duration::from_secs(2), parabolic_trichotomy),
        ("conjugation invariance", Duration::from_secs(2), conjugation_invariance),
        ("basin coverage of the closed ball", Duration::from_secs(60), basin_coverage),
        ("Lorentzian signature of blow-ups", Duration::from_secs(1), lorentzian_signature),
        ("definite form and isometry orders", Duration::from_secs(1), definite_form),
        ("square-one classes on Hirzebruch surfaces", Duration::from_secs(5), square_one),
        ("adjunction genus", Duration::from_secs(1), adjunction),
        ("construction replays", Duration::from_secs(1), replays),
        ("blow-up/contract round trip", Duration::from_secs(1), round_trip),
    ];
    let mut failed = Vec::new();
    for (i, (name, budget, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = check();
        let elapsed = start.elapsed();
        let in_time = elapsed <= *budget;
        let (ok, detail) = match result {
            Ok(d) => (in_time, d),
            Err(d) => (false, d),
        };
        let timing = format!(
            "{:.2}s of {}s{}",
            elapsed.as_secs_f64(),
            budget.as_secs(),
            if in_time { "" } else { ", over budget" }
        );
        println!("criterion {:>2} {}: {name}: {detail} ({timing})", i + 1, if ok { "PASS" } else { "FAIL" });
        if !ok {
            failed.push(i + 1);
        }
    }
    if failed.is_empty() {
        println!("all criteria pass");
        ExitCode::SUCCESS
    } else {
        println!("failed criteria: {failed:?}");
        ExitCode::FAILURE
    }
}
