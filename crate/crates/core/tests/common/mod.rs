#![allow(dead_code)]

use nsatz_core::linalg::{rat, Rational};
use nsatz_core::{LatticePoint, Polytope, SparsePolynomial};
use proptest::prelude::*;

pub fn poly(dim: usize, terms: &[(i64, &[i64])]) -> SparsePolynomial {
    SparsePolynomial::from_int_terms(dim, terms).unwrap()
}

pub fn simplex(d: i64) -> Polytope {
    Polytope::simplex(2).unwrap().dilate(d).unwrap()
}

pub fn square() -> Polytope {
    Polytope::cube(2).unwrap()
}

/// Polynomials in two variables with coefficients in `-3..=3` supported on
/// the lattice points of `support`.
pub fn poly_on(
    support: Vec<LatticePoint>,
    max_terms: usize,
) -> impl Strategy<Value = SparsePolynomial> {
    let n = support.len();
    prop::collection::vec((0..n, -3i64..=3), 1..=max_terms).prop_map(move |terms| {
        SparsePolynomial::from_terms(
            2,
            terms.into_iter().map(|(i, c)| (support[i].clone(), rat(c))),
        )
        .unwrap()
    })
}

pub fn nonzero_poly_on(
    support: Vec<LatticePoint>,
    max_terms: usize,
) -> impl Strategy<Value = SparsePolynomial> {
    poly_on(support, max_terms).prop_filter("nonzero", |p| !p.is_zero())
}

/// Evaluates at an integer point.
pub fn eval(f: &SparsePolynomial, x: &[i64]) -> Rational {
    let x: Vec<Rational> = x.iter().map(|&v| rat(v)).collect();
    f.evaluate(&x).unwrap()
}

/// `Σ F_j G_j`, computed term by term without the library's helpers.
pub fn combine(fs: &[SparsePolynomial], gs: &[SparsePolynomial]) -> SparsePolynomial {
    let mut acc = SparsePolynomial::zero(fs[0].dim());
    for (f, g) in fs.iter().zip(gs) {
        for (a, ca) in f.terms() {
            for (b, cb) in g.terms() {
                let e: Vec<i64> = a.iter().zip(b).map(|(x, y)| x + y).collect();
                let t = SparsePolynomial::monomial(e, ca * cb).unwrap();
                acc = &acc + &t;
            }
        }
    }
    acc
}
