//! Buchberger's algorithm as an independent oracle for ideal membership and
//! for affine / torus common-zero questions.
//!
//! This is deliberately a plain implementation: graded reverse lexicographic
//! order, normal pair-selection strategy, Buchberger's product and chain
//! criteria, and fraction-free reduction over `BigInt` with content removed
//! after every reduction. The reduced basis is returned with monic rational
//! generators.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Num, One, Signed, Zero};

use crate::error::{check_dim, Error, Result};
use crate::linalg::Rational;
use crate::poly::{common_dim, SparsePolynomial};

/// Graded reverse lexicographic order over a fixed variable permutation.
///
/// `permutation[k]` is the variable sitting at position `k`; the variable in
/// the last position is the cheapest one.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialOrder {
    permutation: Vec<usize>,
}

impl MonomialOrder {
    pub fn grevlex(nvars: usize) -> Self {
        MonomialOrder {
            permutation: (0..nvars).collect(),
        }
    }

    pub fn with_permutation(permutation: Vec<usize>) -> Result<Self> {
        let mut sorted = permutation.clone();
        sorted.sort_unstable();
        if sorted != (0..permutation.len()).collect::<Vec<_>>() {
            return Err(Error::Contract(format!(
                "{permutation:?} is not a permutation"
            )));
        }
        Ok(MonomialOrder { permutation })
    }

    pub fn nvars(&self) -> usize {
        self.permutation.len()
    }

    fn to_mono(&self, e: &[i64]) -> Mono {
        Mono::new(self.permutation.iter().map(|&v| e[v]).collect())
    }

    fn exponents_of(&self, m: &Mono) -> Vec<i64> {
        let mut e = vec![0; m.e.len()];
        for (k, &v) in self.permutation.iter().enumerate() {
            e[v] = m.e[k];
        }
        e
    }

    /// Compares two exponent vectors.
    pub fn cmp(&self, a: &[i64], b: &[i64]) -> Ordering {
        self.to_mono(a).cmp(&self.to_mono(b))
    }
}

/// Exponent vector in order positions, with cached total degree.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
struct Mono {
    deg: i64,
    e: Vec<i64>,
}

impl Mono {
    fn new(e: Vec<i64>) -> Self {
        Mono {
            deg: e.iter().sum(),
            e,
        }
    }

    fn divides(&self, other: &Mono) -> bool {
        self.deg <= other.deg && self.e.iter().zip(&other.e).all(|(a, b)| a <= b)
    }

    fn lcm(&self, other: &Mono) -> Mono {
        Mono::new(
            self.e
                .iter()
                .zip(&other.e)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    fn quotient(&self, divisor: &Mono) -> Mono {
        Mono::new(self.e.iter().zip(&divisor.e).map(|(a, b)| a - b).collect())
    }

    fn mul(&self, other: &Mono) -> Mono {
        Mono {
            deg: self.deg + other.deg,
            e: self.e.iter().zip(&other.e).map(|(a, b)| a + b).collect(),
        }
    }

    fn coprime(&self, other: &Mono) -> bool {
        self.e.iter().zip(&other.e).all(|(a, b)| *a == 0 || *b == 0)
    }

    fn is_one(&self) -> bool {
        self.deg == 0
    }
}

impl Ord for Mono {
    fn cmp(&self, other: &Self) -> Ordering {
        self.deg.cmp(&other.deg).then_with(|| {
            for (a, b) in self.e.iter().zip(&other.e).rev() {
                if a != b {
                    return b.cmp(a);
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

trait Coeff: Num + Clone + Signed {
    /// `(a, c)` with `a·lead − c·divisor_lead = 0`.
    fn cancel(lead: &Self, divisor_lead: &Self) -> (Self, Self);
}

impl Coeff for BigInt {
    fn cancel(lead: &Self, divisor_lead: &Self) -> (Self, Self) {
        let g = lead.gcd(divisor_lead);
        (divisor_lead / &g, lead / &g)
    }
}

impl Coeff for BigRational {
    fn cancel(lead: &Self, divisor_lead: &Self) -> (Self, Self) {
        (Self::one(), lead / divisor_lead)
    }
}

/// Terms sorted strictly decreasing in the monomial order.
type Terms<C> = Vec<(Mono, C)>;

/// `a·x^sf·f − c·x^sg·g`.
fn combine<C: Coeff>(
    a: &C,
    sf: &Mono,
    f: &[(Mono, C)],
    c: &C,
    sg: &Mono,
    g: &[(Mono, C)],
) -> Terms<C> {
    let mut out = Vec::with_capacity(f.len() + g.len());
    let (mut i, mut j) = (0, 0);
    let left = |k: usize| (f[k].0.mul(sf), f[k].1.clone() * a.clone());
    let right = |k: usize| (g[k].0.mul(sg), -(g[k].1.clone() * c.clone()));
    let mut next_l = (i < f.len()).then(|| left(i));
    let mut next_r = (j < g.len()).then(|| right(j));
    loop {
        match (next_l.take(), next_r.take()) {
            (None, None) => break,
            (Some(l), None) => {
                if !l.1.is_zero() {
                    out.push(l);
                }
                i += 1;
                next_l = (i < f.len()).then(|| left(i));
            }
            (None, Some(r)) => {
                if !r.1.is_zero() {
                    out.push(r);
                }
                j += 1;
                next_r = (j < g.len()).then(|| right(j));
            }
            (Some(l), Some(r)) => match l.0.cmp(&r.0) {
                Ordering::Greater => {
                    if !l.1.is_zero() {
                        out.push(l);
                    }
                    next_r = Some(r);
                    i += 1;
                    next_l = (i < f.len()).then(|| left(i));
                }
                Ordering::Less => {
                    if !r.1.is_zero() {
                        out.push(r);
                    }
                    next_l = Some(l);
                    j += 1;
                    next_r = (j < g.len()).then(|| right(j));
                }
                Ordering::Equal => {
                    let s = l.1 + r.1;
                    if !s.is_zero() {
                        out.push((l.0, s));
                    }
                    i += 1;
                    j += 1;
                    next_l = (i < f.len()).then(|| left(i));
                    next_r = (j < g.len()).then(|| right(j));
                }
            },
        }
    }
    out
}

/// Full reduction of `f` modulo `basis`. Over `BigInt` the remainder is only
/// determined up to a nonzero scalar.
fn reduce<C: Coeff>(f: Terms<C>, basis: &[Terms<C>]) -> Terms<C> {
    let nvars = f.first().map_or(0, |t| t.0.e.len());
    let one = Mono::new(vec![0; nvars]);
    let mut f = f;
    let mut rem: Terms<C> = Vec::new();
    while let Some((m, lead)) = f.first().cloned() {
        match basis.iter().find(|g| g[0].0.divides(&m)) {
            Some(g) => {
                let (a, c) = C::cancel(&lead, &g[0].1);
                if !a.is_one() {
                    rem.iter_mut().for_each(|t| t.1 = t.1.clone() * a.clone());
                }
                let shift = m.quotient(&g[0].0);
                f = combine(&a, &one, &f, &c, &shift, g);
            }
            None => {
                rem.push(f.remove(0));
            }
        }
    }
    rem
}

fn primitive(mut f: Terms<BigInt>) -> Terms<BigInt> {
    let g = f.iter().fold(BigInt::zero(), |acc, t| acc.gcd(&t.1));
    let flip = f.first().is_some_and(|t| t.1.is_negative());
    if !g.is_zero() && (!g.is_one() || flip) {
        let g = if flip { -g } else { g };
        f.iter_mut().for_each(|t| t.1 = &t.1 / &g);
    }
    f
}

fn spoly(f: &Terms<BigInt>, g: &Terms<BigInt>) -> Terms<BigInt> {
    let l = f[0].0.lcm(&g[0].0);
    let (a, c) = BigInt::cancel(&f[0].1, &g[0].1);
    combine(&a, &l.quotient(&f[0].0), f, &c, &l.quotient(&g[0].0), g)
}

fn to_int_terms(p: &SparsePolynomial, order: &MonomialOrder) -> Terms<BigInt> {
    let lcm = p
        .terms()
        .fold(BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()));
    let mut t: Terms<BigInt> = p
        .terms()
        .map(|(e, c)| (order.to_mono(e), c.numer() * (&lcm / c.denom())))
        .collect();
    t.sort_by(|a, b| b.0.cmp(&a.0));
    primitive(t)
}

fn to_rat_terms(p: &SparsePolynomial, order: &MonomialOrder) -> Terms<Rational> {
    let mut t: Terms<Rational> = p
        .terms()
        .map(|(e, c)| (order.to_mono(e), c.clone()))
        .collect();
    t.sort_by(|a, b| b.0.cmp(&a.0));
    t
}

fn from_terms<C>(
    t: &[(Mono, C)],
    order: &MonomialOrder,
    to_q: impl Fn(&C) -> Rational,
) -> SparsePolynomial {
    SparsePolynomial::from_terms(
        order.nvars(),
        t.iter().map(|(m, c)| (order.exponents_of(m), to_q(c))),
    )
    .expect("exponents stay nonnegative")
}

/// A reduced Gröbner basis with monic generators, sorted by increasing
/// leading monomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    generators: Vec<SparsePolynomial>,
    order: MonomialOrder,
}

impl GroebnerBasis {
    pub fn generators(&self) -> &[SparsePolynomial] {
        &self.generators
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    /// Whether the ideal is the whole ring.
    pub fn is_unit(&self) -> bool {
        self.generators.len() == 1 && self.generators[0].is_constant()
    }

    /// Leading exponent of each generator.
    pub fn leading_exponents(&self) -> Vec<Vec<i64>> {
        self.rat_terms()
            .iter()
            .map(|t| self.order.exponents_of(&t[0].0))
            .collect()
    }

    fn rat_terms(&self) -> Vec<Terms<Rational>> {
        self.generators
            .iter()
            .map(|g| to_rat_terms(g, &self.order))
            .collect()
    }

    /// Post-hoc Buchberger criterion: every S-polynomial reduces to zero.
    pub fn s_pairs_reduce_to_zero(&self) -> bool {
        let ints: Vec<Terms<BigInt>> = self
            .generators
            .iter()
            .map(|g| to_int_terms(g, &self.order))
            .collect();
        for i in 0..ints.len() {
            for j in i + 1..ints.len() {
                if !reduce(spoly(&ints[i], &ints[j]), &ints).is_empty() {
                    return false;
                }
            }
        }
        true
    }
}

/// Reduced Gröbner basis of the ideal generated by `gens`.
pub fn buchberger(gens: &[SparsePolynomial], order: &MonomialOrder) -> Result<GroebnerBasis> {
    let dim = common_dim(gens)?;
    check_dim(order.nvars(), dim)?;
    let mut basis: Vec<Terms<BigInt>> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| to_int_terms(g, order))
        .collect();
    if basis.is_empty() {
        return Err(Error::Degenerate("all generators are zero".into()));
    }
    let unit = |order: &MonomialOrder| GroebnerBasis {
        generators: vec![SparsePolynomial::one(dim)],
        order: order.clone(),
    };
    if basis.iter().any(|g| g[0].0.is_one()) {
        return Ok(unit(order));
    }

    let mut pending: BTreeSet<(usize, usize)> = BTreeSet::new();
    for j in 0..basis.len() {
        for i in 0..j {
            pending.insert((i, j));
        }
    }
    while !pending.is_empty() {
        // Normal strategy: smallest lcm first; ties by pair index.
        let &(i, j) = pending
            .iter()
            .min_by(|a, b| {
                let la = basis[a.0][0].0.lcm(&basis[a.1][0].0);
                let lb = basis[b.0][0].0.lcm(&basis[b.1][0].0);
                la.cmp(&lb).then(a.cmp(b))
            })
            .expect("nonempty");
        pending.remove(&(i, j));
        let (li, lj) = (&basis[i][0].0, &basis[j][0].0);
        if li.coprime(lj) {
            continue;
        }
        let l = li.lcm(lj);
        let key = |a: usize, b: usize| (a.min(b), a.max(b));
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k][0].0.divides(&l)
                && !pending.contains(&key(i, k))
                && !pending.contains(&key(j, k))
        });
        if chain {
            continue;
        }
        let r = primitive(reduce(spoly(&basis[i], &basis[j]), &basis));
        if r.is_empty() {
            continue;
        }
        if r[0].0.is_one() {
            return Ok(unit(order));
        }
        let new = basis.len();
        basis.push(r);
        for k in 0..new {
            pending.insert((k, new));
        }
    }

    // Minimize: drop generators whose leading monomial is divisible by another's.
    let mut keep: Vec<Terms<BigInt>> = Vec::new();
    for (idx, g) in basis.iter().enumerate() {
        let redundant = basis
            .iter()
            .enumerate()
            .any(|(k, h)| k != idx && h[0].0.divides(&g[0].0) && (h[0].0 != g[0].0 || k < idx));
        if !redundant {
            keep.push(g.clone());
        }
    }
    // Interreduce tails, then make monic.
    let mut reduced: Vec<Terms<Rational>> = Vec::new();
    for idx in 0..keep.len() {
        let others: Vec<Terms<BigInt>> = keep
            .iter()
            .enumerate()
            .filter(|&(k, _)| k != idx)
            .map(|(_, h)| h.clone())
            .collect();
        let g = primitive(reduce(keep[idx].clone(), &others));
        let lc = Rational::from_integer(g[0].1.clone());
        reduced.push(
            g.into_iter()
                .map(|(m, c)| (m, Rational::from_integer(c) / &lc))
                .collect(),
        );
    }
    reduced.sort_by(|a, b| a[0].0.cmp(&b[0].0));
    Ok(GroebnerBasis {
        generators: reduced
            .iter()
            .map(|t| from_terms(t, order, Clone::clone))
            .collect(),
        order: order.clone(),
    })
}

/// Remainder of multivariate division of `f` by the basis (exact, rational).
pub fn normal_form(f: &SparsePolynomial, gb: &GroebnerBasis) -> Result<SparsePolynomial> {
    check_dim(gb.order.nvars(), f.dim())?;
    if f.is_zero() {
        return Ok(f.clone());
    }
    let rem = reduce(to_rat_terms(f, &gb.order), &gb.rat_terms());
    Ok(from_terms(&rem, &gb.order, Clone::clone))
}

pub fn ideal_member(f: &SparsePolynomial, gens: &[SparsePolynomial]) -> Result<bool> {
    let dim = common_dim(gens)?;
    check_dim(dim, f.dim())?;
    let gb = buchberger(gens, &MonomialOrder::grevlex(dim))?;
    Ok(normal_form(f, &gb)?.is_zero())
}

/// Weak Nullstellensatz: a common zero exists iff `1` is not in the ideal.
pub fn has_common_zero_affine(gens: &[SparsePolynomial]) -> Result<bool> {
    let dim = common_dim(gens)?;
    Ok(!buchberger(gens, &MonomialOrder::grevlex(dim))?.is_unit())
}

/// Appends a trailing variable `t` to every polynomial.
fn lift(p: &SparsePolynomial) -> SparsePolynomial {
    SparsePolynomial::from_terms(
        p.dim() + 1,
        p.terms().map(|(e, c)| {
            let mut e = e.clone();
            e.push(0);
            (e, c.clone())
        }),
    )
    .expect("lifted exponents are valid")
}

/// `1 ∈ ⟨gens, 1 − t·g⟩` in one extra variable `t`, placed last in the order.
fn rabinowitsch_unit(gens: &[SparsePolynomial], g: &SparsePolynomial) -> Result<bool> {
    let n = g.dim();
    let t = SparsePolynomial::var(n + 1, n);
    let extra = &SparsePolynomial::one(n + 1) - &(&t * &lift(g));
    let mut all: Vec<SparsePolynomial> = gens.iter().map(lift).collect();
    all.push(extra);
    Ok(buchberger(&all, &MonomialOrder::grevlex(n + 1))?.is_unit())
}

/// Whether the nonzero generators share a zero with every coordinate nonzero.
/// Zero generators impose no constraint; if all are zero the answer is `true`.
pub fn has_common_zero_torus(gens: &[SparsePolynomial]) -> Result<bool> {
    let dim = common_dim(gens)?;
    let nonzero: Vec<SparsePolynomial> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    if nonzero.is_empty() {
        return Ok(true);
    }
    if nonzero.iter().any(|g| g.is_constant()) {
        return Ok(false);
    }
    let mut prod = SparsePolynomial::one(dim);
    for i in 0..dim {
        prod = &prod * &SparsePolynomial::var(dim, i);
    }
    Ok(!rabinowitsch_unit(&nonzero, &prod)?)
}

/// Whether `f` vanishes on the common zero set of `gens`.
pub fn radical_member(f: &SparsePolynomial, gens: &[SparsePolynomial]) -> Result<bool> {
    let dim = common_dim(gens)?;
    check_dim(dim, f.dim())?;
    if gens.iter().all(SparsePolynomial::is_zero) {
        return Err(Error::Degenerate("all generators are zero".into()));
    }
    rabinowitsch_unit(gens, f)
}
