//! Sparse multivariate polynomials over exact rationals.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{check_dim, Error, Result};
use crate::linalg::Rational;
use crate::polytope::int::dot;
use crate::polytope::{Face, LatticePoint, Polytope};

/// A polynomial `Σ c_α z^α` with finitely many nonzero rational coefficients.
///
/// Exponents are nonnegative; no stored coefficient is zero, so the zero
/// polynomial is the empty map.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SparsePolynomial {
    dim: usize,
    terms: BTreeMap<LatticePoint, Rational>,
}

impl SparsePolynomial {
    pub fn zero(dim: usize) -> Self {
        SparsePolynomial {
            dim,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(dim: usize, c: Rational) -> Self {
        let mut p = Self::zero(dim);
        if !c.is_zero() {
            p.terms.insert(vec![0; dim], c);
        }
        p
    }

    pub fn one(dim: usize) -> Self {
        Self::constant(dim, Rational::one())
    }

    /// The coordinate function `z_{i+1}` (zero-based index `i`).
    pub fn var(dim: usize, i: usize) -> Self {
        let mut e = vec![0; dim];
        e[i] = 1;
        Self::monomial(e, Rational::one()).expect("nonnegative exponent")
    }

    pub fn monomial(exp: LatticePoint, c: Rational) -> Result<Self> {
        Self::from_terms(exp.len(), [(exp, c)])
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs; duplicate
    /// exponents are summed and zero results dropped.
    pub fn from_terms<I>(dim: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (LatticePoint, Rational)>,
    {
        let mut p = Self::zero(dim);
        for (exp, c) in terms {
            check_dim(dim, exp.len())?;
            if exp.iter().any(|&e| e < 0) {
                return Err(Error::Contract(format!(
                    "negative exponent {:?} in a polynomial",
                    exp
                )));
            }
            p.add_term(exp, c);
        }
        Ok(p)
    }

    /// Convenience constructor from small integer coefficients.
    pub fn from_int_terms(dim: usize, terms: &[(i64, &[i64])]) -> Result<Self> {
        Self::from_terms(
            dim,
            terms
                .iter()
                .map(|&(c, e)| (e.to_vec(), Rational::from_integer(BigInt::from(c)))),
        )
    }

    fn add_term(&mut self, exp: LatticePoint, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exp) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&x| x == 0))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in lexicographic exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (&LatticePoint, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exp: &[i64]) -> Rational {
        self.terms.get(exp).cloned().unwrap_or_else(Rational::zero)
    }

    /// Exponents with nonzero coefficient, sorted lexicographically.
    pub fn support(&self) -> Vec<LatticePoint> {
        self.terms.keys().cloned().collect()
    }

    pub fn total_degree(&self) -> Option<i64> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.dim);
        }
        SparsePolynomial {
            dim: self.dim,
            terms: self.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect(),
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        check_dim(self.dim, other.dim)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&-other)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        check_dim(self.dim, other.dim)?;
        let mut out = Self::zero(self.dim);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: LatticePoint = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        Ok(out)
    }

    /// `self^k`, with `self^0 = 1`.
    pub fn pow(&self, k: u32) -> Self {
        let mut result = Self::one(self.dim);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Multiplies by the monomial `z^shift`.
    pub fn shift(&self, shift: &[i64]) -> Result<Self> {
        check_dim(self.dim, shift.len())?;
        Self::from_terms(
            self.dim,
            self.terms
                .iter()
                .map(|(e, c)| (e.iter().zip(shift).map(|(a, b)| a + b).collect(), c.clone())),
        )
    }

    pub fn evaluate(&self, x: &[Rational]) -> Result<Rational> {
        check_dim(self.dim, x.len())?;
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (xi, &k) in x.iter().zip(e) {
                if k > 0 {
                    t *= num_traits::pow(xi.clone(), k as usize);
                }
            }
            acc += t;
        }
        Ok(acc)
    }

    /// Terms whose exponent minimizes `⟨α, w⟩` over the support.
    pub fn facial_form(&self, w: &[i64]) -> Result<Self> {
        check_dim(self.dim, w.len())?;
        let Some(level) = self.terms.keys().map(|e| dot(e, w)).min() else {
            return Err(Error::Degenerate(
                "facial form of the zero polynomial".into(),
            ));
        };
        Ok(self.terms_at_level(w, level, 1))
    }

    /// Terms with `⟨α, w⟩ · denom = level`.
    pub(crate) fn terms_at_level(&self, w: &[i64], level: i128, denom: i64) -> Self {
        SparsePolynomial {
            dim: self.dim,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| dot(e, w) * denom as i128 == level)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    /// Terms of `self` lying on the face of `p` selected by weight `w`,
    /// i.e. with `⟨α, w⟩ = min_P ⟨x, w⟩`.
    pub fn restrict_to_face(&self, p: &Polytope, w: &[i64]) -> Result<Self> {
        check_dim(self.dim, p.dim())?;
        check_dim(self.dim, w.len())?;
        match p.min_value(w) {
            Some((level, denom)) => Ok(self.terms_at_level(w, level, denom)),
            None => Ok(Self::zero(self.dim)),
        }
    }

    /// Whether every exponent of the support lies in `p`.
    pub fn support_in(&self, p: &Polytope) -> Result<bool> {
        check_dim(self.dim, p.dim())?;
        Ok(self.terms.keys().all(|e| p.contains_point_unchecked(e)))
    }

    pub fn display_with(&self, names: &[String]) -> String {
        format_poly(self, |i| {
            names
                .get(i)
                .cloned()
                .unwrap_or_else(|| format!("z{}", i + 1))
        })
    }
}

fn format_poly(p: &SparsePolynomial, name: impl Fn(usize) -> String) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (k, (e, c)) in p.terms.iter().rev().enumerate() {
        let neg = c.is_negative();
        let abs = c.abs();
        if k == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let mono: Vec<String> = e
            .iter()
            .enumerate()
            .filter(|(_, &x)| x > 0)
            .map(|(i, &x)| {
                if x == 1 {
                    name(i)
                } else {
                    format!("{}^{}", name(i), x)
                }
            })
            .collect();
        if mono.is_empty() {
            out.push_str(&abs.to_string());
        } else {
            if !abs.is_one() {
                out.push_str(&abs.to_string());
                out.push('*');
            }
            out.push_str(&mono.join("*"));
        }
    }
    out
}

impl fmt::Display for SparsePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_poly(self, |i| format!("z{}", i + 1)))
    }
}

impl fmt::Debug for SparsePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SparsePolynomial[{}]({})", self.dim, self)
    }
}

impl Neg for &SparsePolynomial {
    type Output = SparsePolynomial;
    fn neg(self) -> SparsePolynomial {
        SparsePolynomial {
            dim: self.dim,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

// Operator forms panic on dimension mismatch; use the `try_*` methods on
// untrusted input.
impl Add for &SparsePolynomial {
    type Output = SparsePolynomial;
    fn add(self, rhs: &SparsePolynomial) -> SparsePolynomial {
        self.try_add(rhs).expect("polynomial dimensions must agree")
    }
}

impl Sub for &SparsePolynomial {
    type Output = SparsePolynomial;
    fn sub(self, rhs: &SparsePolynomial) -> SparsePolynomial {
        self.try_sub(rhs).expect("polynomial dimensions must agree")
    }
}

impl Mul for &SparsePolynomial {
    type Output = SparsePolynomial;
    fn mul(self, rhs: &SparsePolynomial) -> SparsePolynomial {
        self.try_mul(rhs).expect("polynomial dimensions must agree")
    }
}

/// Convex hull of the union of the supports.
pub fn newton_polytope(polys: &[SparsePolynomial]) -> Result<Polytope> {
    let dim = common_dim(polys)?;
    let pts: Vec<LatticePoint> = polys.iter().flat_map(|p| p.terms.keys().cloned()).collect();
    if pts.is_empty() {
        return Err(Error::Degenerate(
            "Newton polytope of zero polynomials".into(),
        ));
    }
    Polytope::hull_in(dim, &pts)
}

pub(crate) fn common_dim(polys: &[SparsePolynomial]) -> Result<usize> {
    let first = polys
        .first()
        .ok_or_else(|| Error::Contract("empty polynomial list".into()))?;
    for p in polys {
        check_dim(first.dim, p.dim)?;
    }
    Ok(first.dim)
}

/// Facial system of `polys` on `face` of `p`: for each polynomial, its terms
/// at the level `min_P ⟨x, w⟩`, `w` the face weight. Polynomials with no such
/// terms contribute the zero polynomial.
pub fn facial_system(
    polys: &[SparsePolynomial],
    p: &Polytope,
    face: &Face,
) -> Result<Vec<SparsePolynomial>> {
    for (j, f) in polys.iter().enumerate() {
        if !f.support_in(p)? {
            return Err(Error::Hypothesis(format!(
                "support of generator {} is not contained in the polytope",
                j + 1
            )));
        }
    }
    let w = face.weight(p);
    polys.iter().map(|f| f.restrict_to_face(p, &w)).collect()
}

/// Σ fⱼ gⱼ.
pub fn combination(fs: &[SparsePolynomial], gs: &[SparsePolynomial]) -> Result<SparsePolynomial> {
    let dim = common_dim(fs)?;
    if fs.len() != gs.len() {
        return Err(Error::Contract(format!(
            "{} generators but {} cofactors",
            fs.len(),
            gs.len()
        )));
    }
    let mut acc = SparsePolynomial::zero(dim);
    for (f, g) in fs.iter().zip(gs) {
        acc = acc.try_add(&f.try_mul(g)?)?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rat;

    fn poly(dim: usize, terms: &[(i64, &[i64])]) -> SparsePolynomial {
        SparsePolynomial::from_int_terms(dim, terms).unwrap()
    }

    #[test]
    fn arithmetic() {
        let a = poly(2, &[(1, &[1, 0]), (1, &[0, 1])]);
        let b = poly(2, &[(1, &[1, 0]), (-1, &[0, 1])]);
        assert_eq!(&a * &b, poly(2, &[(1, &[2, 0]), (-1, &[0, 2])]));
        let c = poly(2, &[(1, &[1, 1]), (-1, &[0, 0])]);
        assert_eq!(
            c.pow(2),
            poly(2, &[(1, &[2, 2]), (-2, &[1, 1]), (1, &[0, 0])])
        );
        assert_eq!(c.pow(0), SparsePolynomial::one(2));
        assert!((&a + &(-&a)).is_zero());
        assert!(a.try_mul(&SparsePolynomial::one(3)).is_err());
    }

    #[test]
    fn construction_rules() {
        let p = poly(
            2,
            &[(2, &[1, 0]), (-2, &[1, 0]), (3, &[0, 0]), (1, &[0, 0])],
        );
        assert_eq!(p, poly(2, &[(4, &[0, 0])]));
        assert!(SparsePolynomial::from_int_terms(2, &[(1, &[-1, 0])]).is_err());
        assert!(SparsePolynomial::from_int_terms(2, &[(1, &[1])]).is_err());
    }

    #[test]
    fn supports() {
        let p = poly(2, &[(1, &[0, 0]), (1, &[1, 0]), (1, &[0, 1])]);
        assert_eq!(p.support(), vec![vec![0, 0], vec![0, 1], vec![1, 0]]);
        assert!(SparsePolynomial::zero(2).support().is_empty());
    }

    #[test]
    fn newton_polytopes() {
        let s = Polytope::simplex(2).unwrap();
        let p = poly(2, &[(1, &[0, 0]), (1, &[1, 0]), (1, &[0, 1])]);
        assert_eq!(newton_polytope(&[p]).unwrap(), s);
        let q = poly(2, &[(1, &[1, 1]), (-1, &[0, 0])]);
        assert_eq!(
            newton_polytope(&[q]).unwrap(),
            Polytope::hull(&[vec![0, 0], vec![1, 1]]).unwrap()
        );
        let sys = [
            poly(2, &[(1, &[1, 0])]),
            poly(2, &[(1, &[0, 1])]),
            poly(2, &[(1, &[0, 0]), (-1, &[1, 0]), (-1, &[0, 1])]),
        ];
        assert_eq!(newton_polytope(&sys).unwrap(), s);
        assert!(matches!(
            newton_polytope(&[SparsePolynomial::zero(2)]),
            Err(Error::Degenerate(_))
        ));
    }

    #[test]
    fn facial_forms() {
        let p = poly(2, &[(1, &[0, 0]), (1, &[1, 0]), (1, &[0, 1])]);
        assert_eq!(
            p.facial_form(&[-1, -1]).unwrap(),
            poly(2, &[(1, &[1, 0]), (1, &[0, 1])])
        );
        assert_eq!(p.facial_form(&[0, 0]).unwrap(), p);
        let q = poly(2, &[(1, &[2, 0]), (1, &[1, 3])]);
        assert_eq!(q.facial_form(&[0, -1]).unwrap(), poly(2, &[(1, &[1, 3])]));
        assert!(SparsePolynomial::zero(2).facial_form(&[1, 0]).is_err());
    }

    fn face_with_vertices(p: &Polytope, verts: &[&[i64]]) -> Face {
        let want: Vec<LatticePoint> = verts.iter().map(|v| v.to_vec()).collect();
        p.faces()
            .unwrap()
            .into_iter()
            .find(|f| f.vertex_points(p).into_iter().cloned().collect::<Vec<_>>() == want)
            .unwrap()
    }

    #[test]
    fn facial_systems() {
        let sq = Polytope::cube(2).unwrap();
        let fs = [
            poly(2, &[(1, &[1, 1]), (-1, &[0, 0])]),
            poly(2, &[(1, &[1, 0]), (-1, &[0, 1])]),
        ];
        let v11 = face_with_vertices(&sq, &[&[1, 1]]);
        assert_eq!(v11.weight(&sq), vec![-1, -1]);
        assert_eq!(
            facial_system(&fs, &sq, &v11).unwrap(),
            vec![poly(2, &[(1, &[1, 1])]), SparsePolynomial::zero(2)]
        );
        let whole = face_with_vertices(&sq, &[&[0, 0], &[0, 1], &[1, 0], &[1, 1]]);
        assert_eq!(facial_system(&fs, &sq, &whole).unwrap(), fs.to_vec());

        let s2 = Polytope::simplex(2).unwrap().dilate(2).unwrap();
        let gs = [poly(2, &[(1, &[2, 0])]), poly(2, &[(1, &[0, 2])])];
        let edge = face_with_vertices(&s2, &[&[0, 2], &[2, 0]]);
        assert_eq!(facial_system(&gs, &s2, &edge).unwrap(), gs.to_vec());

        let big = [poly(2, &[(1, &[3, 0])])];
        assert!(matches!(
            facial_system(&big, &s2, &edge),
            Err(Error::Hypothesis(_))
        ));
    }

    #[test]
    fn evaluation() {
        let p = poly(1, &[(1, &[2]), (-1, &[0])]);
        assert_eq!(p.evaluate(&[rat(3)]).unwrap(), rat(8));
        let q = poly(2, &[(5, &[0, 0]), (7, &[1, 2])]);
        assert_eq!(q.evaluate(&[rat(0), rat(0)]).unwrap(), rat(5));
    }

    #[test]
    fn display() {
        let p = poly(2, &[(1, &[2, 1]), (-3, &[1, 0]), (1, &[0, 0])]);
        assert_eq!(p.to_string(), "z1^2*z2 - 3*z1 + 1");
        assert_eq!(SparsePolynomial::zero(1).to_string(), "0");
        assert_eq!(poly(1, &[(-1, &[1])]).to_string(), "-z1");
    }
}
