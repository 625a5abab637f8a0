//! Exact rational arithmetic and exact linear-system solving.
//!
//! Elimination is fraction-free (Bareiss): each row is first scaled to integer
//! entries, then eliminated over `BigInt` so every intermediate entry is a minor
//! of the scaled matrix and divisions are exact. Back substitution happens in
//! rationals on the echelon form. Free variables are set to zero.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational number, always kept in lowest terms with positive denominator.
pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Formats as `p/q`, or `p` when the denominator is one.
pub fn format_rational(q: &Rational) -> String {
    q.to_string()
}

/// Parses `p/q` or `p` (base 10, optional leading sign, no whitespace).
pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::Parse(format!("invalid rational {s:?}"));
    if s.is_empty() || s.chars().any(char::is_whitespace) {
        return Err(bad());
    }
    match s.split_once('/') {
        None => BigInt::from_str(s)
            .map(Rational::from_integer)
            .map_err(|_| bad()),
        Some((p, q)) => {
            let p = BigInt::from_str(p).map_err(|_| bad())?;
            let q = BigInt::from_str(q).map_err(|_| bad())?;
            if q.is_zero() || q.is_negative() {
                return Err(bad());
            }
            Ok(Rational::new(p, q))
        }
    }
}

/// Dense row-major rational matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RationalMatrix {}x{}", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(format_rational).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    pub fn from_entries(rows: usize, cols: usize, entries: Vec<Rational>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::Contract(format!(
                "{} entries supplied for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        Ok(RationalMatrix {
            rows,
            cols,
            entries,
        })
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch {
                expected: cols,
                got: bad.len(),
            });
        }
        let n = rows.len();
        Ok(RationalMatrix {
            rows: n,
            cols,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| rat(x)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rational) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn mul_vec(&self, x: &[Rational]) -> Result<Vec<Rational>> {
        if x.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                got: x.len(),
            });
        }
        Ok((0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(x)
                    .filter(|(a, _)| !a.is_zero())
                    .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect())
    }
}

/// Scales a rational row to a primitive integer row (same solution set).
fn integer_row(row: &[Rational]) -> Vec<BigInt> {
    let lcm = row.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    let ints: Vec<BigInt> = row.iter().map(|q| q.numer() * (&lcm / q.denom())).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() || g.is_one() {
        ints
    } else {
        ints.into_iter().map(|x| x / &g).collect()
    }
}

/// Integer echelon form produced by fraction-free elimination.
struct Echelon {
    rows: Vec<Vec<BigInt>>,
    /// `(row, column)` of each pivot, in order.
    pivots: Vec<(usize, usize)>,
}

/// Bareiss forward elimination restricted to the first `elim_cols` columns.
///
/// Pivot choice within a column: the candidate with the largest bit length,
/// ties broken by lowest row index, so output is fully deterministic.
fn bareiss(mut rows: Vec<Vec<BigInt>>, elim_cols: usize) -> Echelon {
    let nrows = rows.len();
    let width = rows.first().map_or(0, Vec::len);
    let mut prev = BigInt::one();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..elim_cols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows)
            .filter(|&i| !rows[i][c].is_zero())
            .max_by(|&a, &b| rows[a][c].bits().cmp(&rows[b][c].bits()).then(b.cmp(&a)))
        else {
            continue;
        };
        rows.swap(r, p);
        let (head, tail) = rows.split_at_mut(r + 1);
        let pivot_row = &head[r];
        let pivot = pivot_row[c].clone();
        for row in tail.iter_mut() {
            let factor = row[c].clone();
            if factor.is_zero() {
                // Entry-wise this is pivot * row / prev; keep the minors exact.
                for x in row.iter_mut().skip(c + 1) {
                    if !x.is_zero() {
                        *x = &*x * &pivot / &prev;
                    }
                }
                continue;
            }
            for j in c + 1..width {
                let v = &pivot * &row[j] - &factor * &pivot_row[j];
                row[j] = v / &prev;
            }
            row[c] = BigInt::zero();
        }
        prev = pivot;
        pivots.push((r, c));
        r += 1;
    }
    Echelon { rows, pivots }
}

/// Solves `A·x = b` exactly. Returns `None` when the system is inconsistent.
///
/// Free variables are set to zero, so the returned solution is supported on
/// pivot columns.
pub fn solve_exact(a: &RationalMatrix, b: &[Rational]) -> Result<Option<Vec<Rational>>> {
    if b.len() != a.rows {
        return Err(Error::DimensionMismatch {
            expected: a.rows,
            got: b.len(),
        });
    }
    let n = a.cols;
    let rows: Vec<Vec<BigInt>> = (0..a.rows)
        .map(|r| {
            let mut row = a.row(r).to_vec();
            row.push(b[r].clone());
            integer_row(&row)
        })
        .collect();
    let ech = bareiss(rows, n);
    let rank = ech.pivots.len();
    if ech.rows[rank..].iter().any(|row| !row[n].is_zero()) {
        return Ok(None);
    }
    let mut x = vec![Rational::zero(); n];
    for &(r, c) in ech.pivots.iter().rev() {
        let row = &ech.rows[r];
        let mut acc = Rational::from_integer(row[n].clone());
        for &(_, c2) in ech.pivots.iter().filter(|&&(_, c2)| c2 > c) {
            if !row[c2].is_zero() && !x[c2].is_zero() {
                acc -= Rational::from_integer(row[c2].clone()) * &x[c2];
            }
        }
        x[c] = acc / Rational::from_integer(row[c].clone());
    }
    debug_assert_eq!(a.mul_vec(&x)?, b);
    Ok(Some(x))
}

/// Rank over the rationals.
pub fn rank_exact(a: &RationalMatrix) -> usize {
    let rows: Vec<Vec<BigInt>> = (0..a.rows).map(|r| integer_row(a.row(r))).collect();
    bareiss(rows, a.cols).pivots.len()
}
