//! Small exact integer kernels (determinant, rank, generalized cross product).
//!
//! All inputs are tiny (dimension at most 6), so these run fraction-free over
//! `i128`; every intermediate is a minor of the input.

use num_integer::Integer;

use crate::error::{Error, Result};

pub(crate) fn dot(a: &[i64], b: &[i64]) -> i128 {
    a.iter().zip(b).map(|(&x, &y)| x as i128 * y as i128).sum()
}

pub(crate) fn to_i64(x: i128) -> Result<i64> {
    i64::try_from(x).map_err(|_| Error::Overflow)
}

/// Fraction-free row echelon; returns the rank and the last pivot (the
/// determinant for square full-rank input, up to row-swap sign).
fn bareiss(m: &mut [Vec<i128>]) -> (usize, i128, bool) {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut prev = 1i128;
    let mut r = 0;
    let mut negate = false;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| m[i][c] != 0) else {
            continue;
        };
        if p != r {
            m.swap(p, r);
            negate = !negate;
        }
        for i in r + 1..rows {
            for j in c + 1..cols {
                m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) / prev;
            }
            m[i][c] = 0;
        }
        prev = m[r][c];
        r += 1;
    }
    (r, prev, negate)
}

pub(crate) fn rank(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    bareiss(&mut m).0
}

pub(crate) fn det(rows: &[Vec<i128>]) -> i128 {
    let n = rows.len();
    if n == 0 {
        return 1;
    }
    let mut m = rows.to_vec();
    let (r, last, negate) = bareiss(&mut m);
    if r < n {
        0
    } else if negate {
        -last
    } else {
        last
    }
}

/// Vector orthogonal to the `n-1` given vectors of length `n`; zero iff they
/// are linearly dependent.
pub(crate) fn cross(vectors: &[Vec<i64>], n: usize) -> Vec<i128> {
    debug_assert_eq!(vectors.len() + 1, n);
    (0..n)
        .map(|skip| {
            let minor: Vec<Vec<i128>> = vectors
                .iter()
                .map(|v| {
                    v.iter()
                        .enumerate()
                        .filter(|&(j, _)| j != skip)
                        .map(|(_, &x)| x as i128)
                        .collect()
                })
                .collect();
            let d = det(&minor);
            if skip % 2 == 0 {
                d
            } else {
                -d
            }
        })
        .collect()
}

pub(crate) fn primitive(v: &[i128]) -> Result<Vec<i64>> {
    let g = v.iter().fold(0i128, |acc, &x| acc.gcd(&x));
    if g == 0 {
        return Ok(v.iter().map(|_| 0).collect());
    }
    v.iter().map(|&x| to_i64(x / g)).collect()
}

/// Basis of the rational nullspace of `rows` (vectors `x` with `row·x = 0`),
/// each scaled to a primitive integer vector. Canonical for the row space:
/// computed from the reduced row echelon form.
pub(crate) fn nullspace(rows: &[Vec<i64>], n: usize) -> Result<Vec<Vec<i64>>> {
    use num_rational::Ratio;
    type Q = Ratio<i128>;
    let mut m: Vec<Vec<Q>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| Q::from_integer(x as i128)).collect())
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..n {
        let Some(p) = (r..m.len()).find(|&i| m[i][c] != Q::from_integer(0)) else {
            continue;
        };
        m.swap(p, r);
        let inv = Q::from_integer(1) / m[r][c];
        for x in m[r].iter_mut() {
            *x *= inv;
        }
        for i in 0..m.len() {
            if i != r && m[i][c] != Q::from_integer(0) {
                let f = m[i][c];
                let pivot_row = m[r].clone();
                for (x, t) in m[i].iter_mut().zip(pivot_row).take(n) {
                    *x -= f * t;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == m.len() {
            break;
        }
    }
    let mut basis = Vec::new();
    for free in (0..n).filter(|c| !pivots.contains(c)) {
        let mut v = vec![Q::from_integer(0); n];
        v[free] = Q::from_integer(1);
        for (i, &pc) in pivots.iter().enumerate() {
            v[pc] = -m[i][free];
        }
        let l = v.iter().fold(1i128, |acc, q| acc.lcm(q.denom()));
        let ints: Vec<i128> = v.iter().map(|q| q.numer() * (l / q.denom())).collect();
        basis.push(primitive(&ints)?);
    }
    Ok(basis)
}

/// Solves the square system `rows · y = rhs` by Cramer's rule.
/// Returns `(numerators, det)` with `det > 0`, or `None` when singular.
pub(crate) fn cramer(rows: &[Vec<i64>], rhs: &[i128]) -> Option<(Vec<i128>, i128)> {
    let n = rows.len();
    let a: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    let d = det(&a);
    if d == 0 {
        return None;
    }
    let mut nums: Vec<i128> = (0..n)
        .map(|col| {
            let m: Vec<Vec<i128>> = a
                .iter()
                .zip(rhs)
                .map(|(row, &b)| {
                    let mut row = row.clone();
                    row[col] = b;
                    row
                })
                .collect();
            det(&m)
        })
        .collect();
    if d < 0 {
        nums.iter_mut().for_each(|x| *x = -*x);
        Some((nums, -d))
    } else {
        Some((nums, d))
    }
}
