//! Exact lattice polytopes in dimension at most [`MAX_DIM`].
//!
//! A [`Polytope`] keeps both representations: its extreme points and an
//! irredundant list of facet inequalities `⟨normal, x⟩ ≥ offset` with primitive
//! inward normals. Lower-dimensional polytopes additionally carry the equations
//! of their affine hull.
//!
//! Coordinates are stored as integers over one common positive denominator.
//! Lattice polytopes have denominator 1; erosions ([`Polytope::minkowski_diff`])
//! may produce rational vertices and are stored exactly rather than rounded.

mod faces;
pub(crate) mod int;
mod ops;

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::error::{check_dim, Error, Result};
use crate::exec::Execution;
use crate::linalg::Rational;
use int::{cross, dot, primitive, rank, to_i64};

pub use faces::{Face, FaceClassification, FaceKind};
pub use ops::is_summand;

/// Largest supported ambient dimension.
pub const MAX_DIM: usize = 6;

/// Integer exponent / coordinate vector.
pub type LatticePoint = Vec<i64>;

/// The inequality `⟨normal, x⟩ ≥ offset`.
///
/// Inside a [`Polytope`] the offset is expressed in units of
/// `1 / polytope.denominator()`; for lattice polytopes that is the plain offset.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HalfSpace {
    pub normal: Vec<i64>,
    pub offset: i64,
}

impl HalfSpace {
    pub fn value(&self, x: &[i64]) -> i128 {
        dot(&self.normal, x)
    }

    fn negated(&self) -> HalfSpace {
        HalfSpace {
            normal: self.normal.iter().map(|x| -x).collect(),
            offset: -self.offset,
        }
    }
}

#[derive(Clone)]
pub struct Polytope {
    dim: usize,
    denom: i64,
    /// Extreme points, scaled by `denom`, sorted lexicographically.
    vertices: Vec<LatticePoint>,
    facets: Vec<HalfSpace>,
    /// Affine-hull equations `⟨normal, x⟩ = offset`, empty when full-dimensional.
    equations: Vec<HalfSpace>,
    affine_dim: Option<usize>,
}

impl PartialEq for Polytope {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.denom == other.denom && self.vertices == other.vertices
    }
}

impl Eq for Polytope {}

impl fmt::Debug for Polytope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polytope(dim={}, vertices=[", self.dim)?;
        for (i, v) in self.vertices.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", format_scaled(v, self.denom))?;
        }
        write!(f, "])")
    }
}

pub fn format_point(p: &[i64]) -> String {
    let parts: Vec<String> = p.iter().map(i64::to_string).collect();
    format!("({})", parts.join(","))
}

fn format_scaled(p: &[i64], denom: i64) -> String {
    if denom == 1 {
        return format_point(p);
    }
    let parts: Vec<String> = p
        .iter()
        .map(|&x| Rational::new(BigInt::from(x), BigInt::from(denom)).to_string())
        .collect();
    format!("({})", parts.join(","))
}

fn check_supported(dim: usize) -> Result<()> {
    if dim > MAX_DIM {
        Err(Error::UnsupportedDimension(dim))
    } else {
        Ok(())
    }
}

/// Calls `f` on every increasing `size`-subset of `start..len`.
pub(crate) fn for_each_subset(start: usize, len: usize, size: usize, f: &mut impl FnMut(&[usize])) {
    fn go(
        next: usize,
        len: usize,
        size: usize,
        cur: &mut Vec<usize>,
        f: &mut impl FnMut(&[usize]),
    ) {
        if cur.len() == size {
            f(cur);
            return;
        }
        let needed = size - cur.len();
        for i in next..=len.saturating_sub(needed) {
            if i >= len {
                break;
            }
            cur.push(i);
            go(i + 1, len, size, cur, f);
            cur.pop();
        }
    }
    go(start, len, size, &mut Vec::with_capacity(size), f);
}

pub(crate) use for_each_subset as subsets;

impl Polytope {
    /// The empty polytope in dimension `dim`.
    pub fn empty(dim: usize) -> Self {
        Polytope {
            dim,
            denom: 1,
            vertices: Vec::new(),
            facets: Vec::new(),
            equations: Vec::new(),
            affine_dim: None,
        }
    }

    /// Convex hull of a nonempty point set.
    pub fn hull(points: &[LatticePoint]) -> Result<Self> {
        Self::hull_with(Execution::default(), points)
    }

    pub fn hull_with(exec: Execution, points: &[LatticePoint]) -> Result<Self> {
        let first = points
            .first()
            .ok_or_else(|| Error::Contract("hull of an empty point list".into()))?;
        Self::from_scaled(exec, first.len(), 1, points.to_vec())
    }

    /// Convex hull in an explicit dimension; an empty list gives the empty polytope.
    pub fn hull_in(dim: usize, points: &[LatticePoint]) -> Result<Self> {
        Self::from_scaled(Execution::default(), dim, 1, points.to_vec())
    }

    pub fn point(p: LatticePoint) -> Result<Self> {
        Self::hull(&[p])
    }

    pub fn origin(dim: usize) -> Result<Self> {
        Self::hull_in(dim, &[vec![0; dim]])
    }

    /// The standard simplex `Σⁿ` with vertices `0, e₁, …, eₙ`.
    pub fn simplex(dim: usize) -> Result<Self> {
        let mut pts = vec![vec![0; dim]];
        for i in 0..dim {
            let mut e = vec![0; dim];
            e[i] = 1;
            pts.push(e);
        }
        Self::hull_in(dim, &pts)
    }

    /// The unit cube `[0,1]ⁿ`.
    pub fn cube(dim: usize) -> Result<Self> {
        check_supported(dim)?;
        let pts: Vec<LatticePoint> = (0..1u32 << dim)
            .map(|mask| (0..dim).map(|i| i64::from((mask >> i) & 1)).collect())
            .collect();
        Self::hull_in(dim, &pts)
    }

    /// Hull of `points / denom` (all with the same length `dim`).
    pub(crate) fn from_scaled(
        exec: Execution,
        dim: usize,
        denom: i64,
        mut points: Vec<LatticePoint>,
    ) -> Result<Self> {
        check_supported(dim)?;
        if denom <= 0 {
            return Err(Error::Contract(
                "polytope denominator must be positive".into(),
            ));
        }
        if let Some(bad) = points.iter().find(|p| p.len() != dim) {
            return Err(Error::DimensionMismatch {
                expected: dim,
                got: bad.len(),
            });
        }
        points.sort();
        points.dedup();
        if points.is_empty() {
            return Ok(Self::empty(dim));
        }
        let (denom, points) = reduce_denominator(denom, points);
        build(exec, dim, denom, points)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Dimension of the affine hull; `None` for the empty polytope.
    pub fn affine_dim(&self) -> Option<usize> {
        self.affine_dim
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.affine_dim == Some(self.dim)
    }

    /// Common denominator of the vertex coordinates (1 for lattice polytopes).
    pub fn denominator(&self) -> i64 {
        self.denom
    }

    pub fn is_lattice(&self) -> bool {
        self.denom == 1
    }

    /// Vertices scaled by [`Self::denominator`]; for lattice polytopes these are
    /// the vertices themselves.
    pub fn vertices(&self) -> &[LatticePoint] {
        &self.vertices
    }

    /// A scaled vertex (or any scaled point) in `(p/q,…)` notation.
    pub fn format_vertex(&self, v: &[i64]) -> String {
        format_scaled(v, self.denom)
    }

    pub fn rational_vertices(&self) -> Vec<Vec<Rational>> {
        let d = BigInt::from(self.denom);
        self.vertices
            .iter()
            .map(|v| {
                v.iter()
                    .map(|&x| Rational::new(BigInt::from(x), d.clone()))
                    .collect()
            })
            .collect()
    }

    pub fn facets(&self) -> &[HalfSpace] {
        &self.facets
    }

    pub fn equations(&self) -> &[HalfSpace] {
        &self.equations
    }

    /// Facets followed by both orientations of every affine-hull equation.
    pub fn halfspaces(&self) -> Vec<HalfSpace> {
        let mut hs = self.facets.clone();
        for e in &self.equations {
            hs.push(e.clone());
            hs.push(e.negated());
        }
        hs
    }

    fn check_same_dim(&self, other: &Polytope) -> Result<()> {
        check_dim(self.dim, other.dim)
    }

    /// Exact membership of a rational point.
    pub fn contains(&self, x: &[Rational]) -> Result<bool> {
        check_dim(self.dim, x.len())?;
        if self.is_empty() {
            return Ok(false);
        }
        let d = BigInt::from(self.denom);
        let value = |normal: &[i64]| -> Rational {
            normal
                .iter()
                .zip(x)
                .fold(Rational::zero(), |acc, (&a, xi)| acc + xi * BigInt::from(a))
                * d.clone()
        };
        let off = |o: i64| Rational::from_integer(BigInt::from(o));
        Ok(self
            .facets
            .iter()
            .all(|h| value(&h.normal) >= off(h.offset))
            && self
                .equations
                .iter()
                .all(|h| value(&h.normal) == off(h.offset)))
    }

    /// Exact membership of an integer point.
    pub fn contains_point(&self, x: &[i64]) -> Result<bool> {
        check_dim(self.dim, x.len())?;
        Ok(self.contains_point_unchecked(x))
    }

    pub(crate) fn contains_point_unchecked(&self, x: &[i64]) -> bool {
        if self.is_empty() {
            return false;
        }
        let d = self.denom as i128;
        self.facets
            .iter()
            .all(|h| h.value(x) * d >= h.offset as i128)
            && self
                .equations
                .iter()
                .all(|h| h.value(x) * d == h.offset as i128)
    }

    pub fn contains_origin(&self) -> bool {
        self.contains_point_unchecked(&vec![0; self.dim])
    }

    /// All integer points of the polytope, sorted lexicographically.
    pub fn lattice_points(&self) -> Vec<LatticePoint> {
        if self.is_empty() {
            return Vec::new();
        }
        let d = self.denom;
        let lo: Vec<i64> = (0..self.dim)
            .map(|i| Integer::div_ceil(&self.vertices.iter().map(|v| v[i]).min().unwrap(), &d))
            .collect();
        let hi: Vec<i64> = (0..self.dim)
            .map(|i| Integer::div_floor(&self.vertices.iter().map(|v| v[i]).max().unwrap(), &d))
            .collect();
        let mut out = Vec::new();
        if lo.iter().zip(&hi).any(|(l, h)| l > h) {
            return out;
        }
        let mut cur = lo.clone();
        loop {
            if self.contains_point_unchecked(&cur) {
                out.push(cur.clone());
            }
            // Odometer with the last coordinate fastest gives lexicographic order.
            let mut i = self.dim;
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                if cur[i] < hi[i] {
                    cur[i] += 1;
                    cur[i + 1..].copy_from_slice(&lo[i + 1..]);
                    break;
                }
            }
            if self.dim == 0 {
                return out;
            }
        }
    }

    /// The dilation `kP`; `k = 0` gives the origin.
    pub fn dilate(&self, k: i64) -> Result<Polytope> {
        if k < 0 {
            return Err(Error::Contract(format!("negative dilation factor {k}")));
        }
        if self.is_empty() {
            return Ok(self.clone());
        }
        if k == 0 {
            return Polytope::origin(self.dim);
        }
        let scale = |v: &[i64]| -> Result<Vec<i64>> {
            v.iter().map(|&x| to_i64(x as i128 * k as i128)).collect()
        };
        let scale_h = |h: &HalfSpace| -> Result<HalfSpace> {
            Ok(HalfSpace {
                normal: h.normal.clone(),
                offset: to_i64(h.offset as i128 * k as i128)?,
            })
        };
        let mut p = Polytope {
            dim: self.dim,
            denom: self.denom,
            vertices: self
                .vertices
                .iter()
                .map(|v| scale(v))
                .collect::<Result<_>>()?,
            facets: self.facets.iter().map(scale_h).collect::<Result<_>>()?,
            equations: self.equations.iter().map(scale_h).collect::<Result<_>>()?,
            affine_dim: self.affine_dim,
        };
        p.normalize();
        Ok(p)
    }

    /// Divides out any common factor of the denominator and all coordinates.
    fn normalize(&mut self) {
        let g = self
            .vertices
            .iter()
            .flatten()
            .fold(self.denom, |acc, &x| acc.gcd(&x));
        if g > 1 {
            self.denom /= g;
            for v in &mut self.vertices {
                v.iter_mut().for_each(|x| *x /= g);
            }
            for h in self.facets.iter_mut().chain(self.equations.iter_mut()) {
                debug_assert_eq!(h.offset % g, 0);
                h.offset /= g;
            }
        }
    }

    /// Smallest integer `e ≥ 1` with every point of `s` inside `e·P`, or `None`
    /// when no integer dilation contains them all.
    pub fn min_integer_dilation(&self, s: &[LatticePoint]) -> Result<Option<i64>> {
        if self.is_empty() {
            return Ok(if s.is_empty() { Some(1) } else { None });
        }
        let mut lower: i128 = 1;
        let mut upper: Option<i128> = None;
        let d = self.denom as i128;
        for p in s {
            check_dim(self.dim, p.len())?;
            for h in self.halfspaces() {
                // e·P satisfies ⟨n, x⟩·d ≥ e·offset.
                let v = h.value(p) * d;
                let b = h.offset as i128;
                match b.cmp(&0) {
                    std::cmp::Ordering::Equal => {
                        if v < 0 {
                            return Ok(None);
                        }
                    }
                    std::cmp::Ordering::Less => lower = lower.max(Integer::div_ceil(&v, &b)),
                    std::cmp::Ordering::Greater => {
                        let u = Integer::div_floor(&v, &b);
                        upper = Some(upper.map_or(u, |x| x.min(u)));
                    }
                }
            }
        }
        match upper {
            Some(u) if u < lower => Ok(None),
            _ => Ok(Some(to_i64(lower)?)),
        }
    }
}

fn reduce_denominator(denom: i64, mut points: Vec<LatticePoint>) -> (i64, Vec<LatticePoint>) {
    let g = points.iter().flatten().fold(denom, |acc, &x| acc.gcd(&x));
    if g > 1 {
        for p in &mut points {
            p.iter_mut().for_each(|x| *x /= g);
        }
        (denom / g, points)
    } else {
        (denom, points)
    }
}

fn sub(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// Hull construction on sorted, deduplicated, nonempty scaled points.
///
/// Facets are found by an exhaustive sweep over `k`-subsets of the points
/// (`k` the affine dimension): the candidate normal is orthogonal to the
/// subset's difference vectors and to the affine-hull equations, and is kept
/// when every point lies on one side of its hyperplane.
fn build(exec: Execution, dim: usize, denom: i64, points: Vec<LatticePoint>) -> Result<Polytope> {
    let p0 = &points[0];
    let mut basis: Vec<Vec<i64>> = Vec::new();
    for p in &points[1..] {
        let d = sub(p, p0);
        basis.push(d);
        if rank(&basis) < basis.len() {
            basis.pop();
        }
        if basis.len() == dim {
            break;
        }
    }
    let k = basis.len();
    let equations: Vec<HalfSpace> = if k < dim {
        int::nullspace(&basis, dim)?
            .into_iter()
            .map(|normal| {
                let offset = to_i64(dot(&normal, p0))?;
                Ok(HalfSpace { normal, offset })
            })
            .collect::<Result<_>>()?
    } else {
        Vec::new()
    };

    let facets: Vec<HalfSpace> = if k == 0 {
        Vec::new()
    } else {
        let eq_normals: Vec<Vec<i64>> = equations.iter().map(|e| e.normal.clone()).collect();
        let found: Vec<Result<Vec<HalfSpace>>> = exec.map_range(points.len(), |first| {
            let mut out = Vec::new();
            let mut err = None;
            subsets(first + 1, points.len(), k - 1, &mut |rest| {
                if err.is_some() {
                    return;
                }
                let mut vecs: Vec<Vec<i64>> = rest
                    .iter()
                    .map(|&i| sub(&points[i], &points[first]))
                    .collect();
                vecs.extend(eq_normals.iter().cloned());
                let c = cross(&vecs, dim);
                if c.iter().all(|&x| x == 0) {
                    return;
                }
                let normal = match primitive(&c) {
                    Ok(n) => n,
                    Err(e) => {
                        err = Some(e);
                        return;
                    }
                };
                let level = dot(&normal, &points[first]);
                let (mut above, mut below) = (false, false);
                for p in &points {
                    match dot(&normal, p).cmp(&level) {
                        std::cmp::Ordering::Greater => above = true,
                        std::cmp::Ordering::Less => below = true,
                        std::cmp::Ordering::Equal => {}
                    }
                    if above && below {
                        return;
                    }
                }
                let h = HalfSpace {
                    normal,
                    offset: level as i64,
                };
                out.push(if below { h.negated() } else { h });
            });
            match err {
                Some(e) => Err(e),
                None => Ok(out),
            }
        });
        let mut set = BTreeSet::new();
        for chunk in found {
            set.extend(chunk?);
        }
        set.into_iter().collect()
    };

    let vertices: Vec<LatticePoint> = if k == 0 {
        points
    } else {
        points
            .into_iter()
            .filter(|p| {
                let tight: Vec<Vec<i64>> = facets
                    .iter()
                    .filter(|h| h.value(p) == h.offset as i128)
                    .map(|h| h.normal.clone())
                    .collect();
                tight.len() >= k && rank(&tight) == k
            })
            .collect()
    };

    let poly = Polytope {
        dim,
        denom,
        vertices,
        facets,
        equations,
        affine_dim: Some(k),
    };
    debug_assert!(
        poly.consistent(),
        "inconsistent V/H representation for {poly:?}"
    );
    Ok(poly)
}

impl Polytope {
    /// Every vertex satisfies every halfspace, and every facet is tight at a
    /// set of vertices spanning a face of codimension one.
    fn consistent(&self) -> bool {
        let Some(k) = self.affine_dim else {
            return self.vertices.is_empty();
        };
        let ok_points = self.vertices.iter().all(|v| {
            self.halfspaces()
                .iter()
                .all(|h| h.value(v) >= h.offset as i128)
        });
        let ok_facets = self.facets.iter().all(|h| {
            let tight: Vec<&LatticePoint> = self
                .vertices
                .iter()
                .filter(|v| h.value(v) == h.offset as i128)
                .collect();
            let diffs: Vec<Vec<i64>> = tight.iter().skip(1).map(|v| sub(v, tight[0])).collect();
            !tight.is_empty() && rank(&diffs) + 1 == k
        });
        ok_points && ok_facets
    }
}
