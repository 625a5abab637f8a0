//! Minkowski sum, erosion (Minkowski difference) and the summand test.

use num_integer::Integer;

use super::int::{cramer, dot, to_i64};
use super::{subsets, HalfSpace, LatticePoint, Polytope};
use crate::error::{Error, Result};
use crate::exec::Execution;

impl Polytope {
    /// Minimum of `⟨w, x⟩` over the polytope, as `(numerator, denominator)`.
    /// `None` for the empty polytope.
    pub fn min_value(&self, w: &[i64]) -> Option<(i128, i64)> {
        self.vertices
            .iter()
            .map(|v| dot(w, v))
            .min()
            .map(|m| (m, self.denom))
    }

    /// Vertices of `self` attaining the minimum of `⟨w, ·⟩` (scaled).
    pub fn minimizing_vertices(&self, w: &[i64]) -> Vec<&LatticePoint> {
        let Some((m, _)) = self.min_value(w) else {
            return Vec::new();
        };
        self.vertices.iter().filter(|v| dot(w, v) == m).collect()
    }

    /// `P + Q`, the hull of all pairwise vertex sums.
    pub fn minkowski_sum(&self, other: &Polytope) -> Result<Polytope> {
        self.minkowski_sum_with(Execution::default(), other)
    }

    pub fn minkowski_sum_with(&self, exec: Execution, other: &Polytope) -> Result<Polytope> {
        self.check_same_dim(other)?;
        if self.is_empty() || other.is_empty() {
            return Ok(Polytope::empty(self.dim));
        }
        let l = self.denom.lcm(&other.denom);
        let (a, b) = ((l / self.denom) as i128, (l / other.denom) as i128);
        let mut pts = Vec::with_capacity(self.vertices.len() * other.vertices.len());
        for v in &self.vertices {
            for w in &other.vertices {
                pts.push(
                    v.iter()
                        .zip(w)
                        .map(|(&x, &y)| to_i64(x as i128 * a + y as i128 * b))
                        .collect::<Result<Vec<i64>>>()?,
                );
            }
        }
        Polytope::from_scaled(exec, self.dim, l, pts)
    }

    /// The erosion `P ⊖ Q = {x : x + Q ⊆ P}`, or `None` when it is empty.
    ///
    /// Each halfspace of `P` is shifted by the minimum of its normal over `Q`;
    /// the vertices of the resulting H-polytope are enumerated exactly and may
    /// be rational.
    pub fn minkowski_diff(&self, other: &Polytope) -> Result<Option<Polytope>> {
        self.check_same_dim(other)?;
        if other.is_empty() {
            return Err(Error::Degenerate(
                "erosion by the empty polytope is unbounded".into(),
            ));
        }
        if self.is_empty() {
            return Ok(None);
        }
        let n = self.dim;
        let l = self.denom.lcm(&other.denom) as i128;
        // Constraints ⟨normal, y⟩ ≥ bound on y = l·x.
        let mut constraints: Vec<(Vec<i64>, i128)> = self
            .halfspaces()
            .into_iter()
            .map(|h: HalfSpace| {
                let (m, dq) = other.min_value(&h.normal).expect("nonempty");
                let bound = h.offset as i128 * (l / self.denom as i128) - m * (l / dq as i128);
                (h.normal, bound)
            })
            .collect();
        constraints.sort();
        constraints.dedup();

        if n == 0 {
            return Ok(Some(Polytope::origin(0)?));
        }
        let mut found: Vec<(Vec<i128>, i128)> = Vec::new();
        subsets(0, constraints.len(), n, &mut |idx| {
            let rows: Vec<Vec<i64>> = idx.iter().map(|&i| constraints[i].0.clone()).collect();
            let rhs: Vec<i128> = idx.iter().map(|&i| constraints[i].1).collect();
            let Some((num, det)) = cramer(&rows, &rhs) else {
                return;
            };
            let feasible = constraints.iter().all(|(a, b)| {
                let v: i128 = a.iter().zip(&num).map(|(&x, &y)| x as i128 * y).sum();
                v >= b * det
            });
            if feasible {
                found.push((num, det));
            }
        });
        if found.is_empty() {
            return Ok(None);
        }
        // x = num / (det·l); bring every point to one common denominator.
        let common = found.iter().fold(1i128, |acc, (_, d)| acc.lcm(&(d * l)));
        let denom = to_i64(common)?;
        let pts = found
            .iter()
            .map(|(num, d)| {
                let f = common / (d * l);
                num.iter()
                    .map(|&x| to_i64(x * f))
                    .collect::<Result<Vec<i64>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Polytope::from_scaled(Execution::Sequential, n, denom, pts).map(Some)
    }

    /// Whether `self` is a Minkowski summand of `p`, decided by `Q + (P ⊖ Q) = P`.
    pub fn is_summand_of(&self, p: &Polytope) -> Result<bool> {
        self.check_same_dim(p)?;
        match p.minkowski_diff(self)? {
            None => Ok(false),
            Some(rest) => Ok(&self.minkowski_sum(&rest)? == p),
        }
    }
}

/// Free-function form: is `q` a summand of `p`?
pub fn is_summand(q: &Polytope, p: &Polytope) -> Result<bool> {
    q.is_summand_of(p)
}
