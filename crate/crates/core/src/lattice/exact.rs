//! Overflow-checked integer linear algebra on small dense matrices.

use alloc::vec;
use alloc::vec::Vec;
use num_rational::Ratio;

pub type IntMatrix = Vec<Vec<i64>>;
type Q = Ratio<i128>;

const OVERFLOW: &str = "integer overflow in lattice arithmetic";

pub(crate) fn add(a: i64, b: i64) -> i64 {
    a.checked_add(b).expect(OVERFLOW)
}

pub(crate) fn sub(a: i64, b: i64) -> i64 {
    a.checked_sub(b).expect(OVERFLOW)
}

pub(crate) fn mul(a: i64, b: i64) -> i64 {
    a.checked_mul(b).expect(OVERFLOW)
}

pub(crate) fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).fold(0, |s, (&x, &y)| add(s, mul(x, y)))
}

/// `uᵀ G v`.
pub(crate) fn bilinear(g: &IntMatrix, u: &[i64], v: &[i64]) -> i64 {
    g.iter().zip(u).fold(0, |s, (row, &ui)| if ui == 0 { s } else { add(s, mul(ui, dot(row, v))) })
}

pub(crate) fn mat_vec(m: &IntMatrix, v: &[i64]) -> Vec<i64> {
    m.iter().map(|row| dot(row, v)).collect()
}

pub(crate) fn mat_mul(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
    let n = b.first().map_or(0, |r| r.len());
    a.iter()
        .map(|row| (0..n).map(|j| row.iter().zip(b).fold(0, |s, (&x, brow)| add(s, mul(x, brow[j])))).collect())
        .collect()
}

pub(crate) fn transpose(m: &IntMatrix) -> IntMatrix {
    let n = m.first().map_or(0, |r| r.len());
    (0..n).map(|j| m.iter().map(|row| row[j]).collect()).collect()
}

pub(crate) fn identity(n: usize) -> IntMatrix {
    (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect()
}

fn narrow(x: i128) -> i64 {
    i64::try_from(x).expect(OVERFLOW)
}

/// Determinant by fraction-free (Bareiss) elimination.
pub fn determinant(m: &IntMatrix) -> i64 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut a: Vec<Vec<i128>> = m.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&i| a[i][k] != 0) {
                Some(i) => {
                    a.swap(k, i);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = a[i][j]
                    .checked_mul(a[k][k])
                    .and_then(|x| x.checked_sub(a[i][k].checked_mul(a[k][j])?))
                    .expect(OVERFLOW);
                a[i][j] = t / prev;
            }
        }
        prev = a[k][k];
    }
    narrow(sign * a[n - 1][n - 1])
}

/// `(positive, negative, zero)` counts of the symmetric matrix `m`, by
/// rational congruence diagonalization.
pub fn inertia(m: &IntMatrix) -> (usize, usize, usize) {
    let n = m.len();
    let mut a: Vec<Vec<Q>> = m.iter().map(|r| r.iter().map(|&x| Q::from_integer(x as i128)).collect()).collect();
    let (mut pos, mut neg, mut zero) = (0, 0, 0);
    let zero_q = Q::from_integer(0);
    for k in 0..n {
        if a[k][k] == zero_q {
            if let Some(j) = (k + 1..n).find(|&j| a[j][j] != zero_q) {
                a.swap(k, j);
                for row in a.iter_mut() {
                    row.swap(k, j);
                }
            } else if let Some(j) = (k + 1..n).find(|&j| a[k][j] != zero_q) {
                // row/column k += row/column j makes the pivot 2·a[k][j]
                for c in 0..n {
                    let t = a[j][c];
                    a[k][c] += t;
                }
                for r in 0..n {
                    let t = a[r][j];
                    a[r][k] += t;
                }
            } else {
                zero += 1;
                continue;
            }
        }
        let p = a[k][k];
        if p > zero_q {
            pos += 1;
        } else {
            neg += 1;
        }
        for i in k + 1..n {
            let f = a[i][k] / p;
            if f == zero_q {
                continue;
            }
            for j in k..n {
                let t = a[k][j];
                a[i][j] -= f * t;
            }
        }
        // the trailing block is now the (symmetric) Schur complement
        for i in k + 1..n {
            a[i][k] = zero_q;
            a[k][i] = zero_q;
        }
    }
    (pos, neg, zero)
}

/// `(g, x, y)` with `g = gcd(a, b) ≥ 0` and `a·x + b·y = g`.
pub(crate) fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    let (mut r0, mut r1) = (a, b);
    let (mut s0, mut s1) = (1i64, 0i64);
    let (mut t0, mut t1) = (0i64, 1i64);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, sub(r0, mul(q, r1)));
        (s0, s1) = (s1, sub(s0, mul(q, s1)));
        (t0, t1) = (t1, sub(t0, mul(q, t1)));
    }
    if r0 < 0 {
        (-r0, -s0, -t0)
    } else {
        (r0, s0, t0)
    }
}

/// Integer basis of `{x : w·x = 0}`, as rows in Hermite normal form.
pub fn kernel_basis(w: &[i64]) -> IntMatrix {
    let n = w.len();
    // column operations on (w | U) with U unimodular, driving w to (g, 0, ..., 0)
    let mut w = w.to_vec();
    let mut u = identity(n);
    for j in 1..n {
        if w[j] == 0 {
            continue;
        }
        let (g, x, y) = ext_gcd(w[0], w[j]);
        let (a, b) = (w[0] / g, w[j] / g);
        // [c0 cj] ← [c0 cj]·[[x, -b], [y, a]] (det 1)
        for row in u.iter_mut() {
            let (c0, cj) = (row[0], row[j]);
            row[0] = add(mul(c0, x), mul(cj, y));
            row[j] = sub(mul(cj, a), mul(c0, b));
        }
        w[0] = g;
        w[j] = 0;
    }
    let start = usize::from(w.iter().any(|&x| x != 0));
    let rows: IntMatrix = (start..n).map(|j| u.iter().map(|row| row[j]).collect()).collect();
    hermite_normal_form(rows)
}

/// Row-style Hermite normal form of a full-row-rank integer matrix: echelon
/// form with positive pivots and entries above each pivot reduced into
/// `[0, pivot)`.
pub fn hermite_normal_form(mut rows: IntMatrix) -> IntMatrix {
    let m = rows.len();
    let n = rows.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..n {
        if r == m {
            break;
        }
        // Euclid down column c among rows r..m
        while let Some(p) = (r..m).filter(|&i| rows[i][c] != 0).min_by_key(|&i| rows[i][c].abs()) {
            rows.swap(r, p);
            let mut done = true;
            for i in r + 1..m {
                if rows[i][c] != 0 {
                    let q = rows[i][c] / rows[r][c];
                    let pivot = rows[r].clone();
                    for (x, &y) in rows[i].iter_mut().zip(&pivot) {
                        *x = sub(*x, mul(q, y));
                    }
                    if rows[i][c] != 0 {
                        done = false;
                    }
                }
            }
            if done {
                break;
            }
        }
        if rows[r][c] == 0 {
            continue;
        }
        if rows[r][c] < 0 {
            for x in rows[r].iter_mut() {
                *x = -*x;
            }
        }
        let pivot = rows[r].clone();
        for i in 0..r {
            let q = rows[i][c].div_euclid(pivot[c]);
            if q != 0 {
                for (x, &y) in rows[i].iter_mut().zip(&pivot) {
                    *x = sub(*x, mul(q, y));
                }
            }
        }
        r += 1;
    }
    rows.truncate(r);
    rows
}

/// Integer coefficients `c` with `v = Σ cᵢ rowsᵢ`, for `rows` in Hermite
/// normal form; `None` if `v` is not in their integer span.
pub fn solve_in_hnf(rows: &IntMatrix, v: &[i64]) -> Option<Vec<i64>> {
    let mut rest = v.to_vec();
    let mut coeffs = vec![0; rows.len()];
    for (k, row) in rows.iter().enumerate() {
        let c = row.iter().position(|&x| x != 0)?;
        if rest[c] % row[c] != 0 {
            return None;
        }
        let q = rest[c] / row[c];
        coeffs[k] = q;
        for (x, &y) in rest.iter_mut().zip(row) {
            *x = sub(*x, mul(q, y));
        }
    }
    rest.iter().all(|&x| x == 0).then_some(coeffs)
}

/// Inverse of a unimodular matrix; `None` if `m` is singular or its inverse
/// is not integral.
pub fn unimodular_inverse(m: &IntMatrix) -> Option<IntMatrix> {
    let n = m.len();
    let zero = Q::from_integer(0);
    let mut a: Vec<Vec<Q>> = m
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row: Vec<Q> = r.iter().map(|&x| Q::from_integer(x as i128)).collect();
            row.extend((0..n).map(|j| Q::from_integer(i128::from(i == j))));
            row
        })
        .collect();
    for k in 0..n {
        let p = (k..n).find(|&i| a[i][k] != zero)?;
        a.swap(k, p);
        let inv = a[k][k].recip();
        for x in a[k].iter_mut() {
            *x *= inv;
        }
        let pivot = a[k].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i != k && row[k] != zero {
                let f = row[k];
                for (x, &y) in row.iter_mut().zip(&pivot) {
                    *x -= f * y;
                }
            }
        }
    }
    a.iter()
        .map(|row| row[n..].iter().map(|x| x.is_integer().then(|| narrow(x.to_integer()))).collect::<Option<Vec<_>>>())
        .collect()
}
