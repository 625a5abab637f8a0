//! Bounded-support certificates `Σ F_j G_j = Φ^ν` by exact linear algebra
//! over the lattice points of a bound polytope.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::linalg::{format_rational, solve_exact, Rational, RationalMatrix};
use crate::poly::{common_dim, newton_polytope, SparsePolynomial};
use crate::polytope::{format_point, LatticePoint, Polytope};

/// Which statement a certificate (or plan) was produced under.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TheoremTag {
    Macaulay,
    Noether,
    BrianconSkoda,
    Tuitman,
    Custom,
}

impl TheoremTag {
    pub const ALL: [TheoremTag; 5] = [
        TheoremTag::Macaulay,
        TheoremTag::Noether,
        TheoremTag::BrianconSkoda,
        TheoremTag::Tuitman,
        TheoremTag::Custom,
    ];

    /// Tag as written in JSON.
    pub fn as_str(self) -> &'static str {
        match self {
            TheoremTag::Macaulay => "macaulay",
            TheoremTag::Noether => "noether",
            TheoremTag::BrianconSkoda => "briancon_skoda",
            TheoremTag::Tuitman => "tuitman",
            TheoremTag::Custom => "custom",
        }
    }
}

impl fmt::Display for TheoremTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TheoremTag {
    type Err = Error;

    /// Accepts the JSON spelling and the hyphenated `briancon-skoda`.
    fn from_str(s: &str) -> Result<Self> {
        let norm = s.replace('-', "_");
        TheoremTag::ALL
            .into_iter()
            .find(|t| t.as_str() == norm)
            .ok_or_else(|| Error::Parse(format!("unknown theorem tag {s:?}")))
    }
}

/// Per-generator cofactor exponents allowed by a bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SupportConstraint {
    pub bound: Polytope,
    pub per_generator_exponents: Vec<Vec<LatticePoint>>,
}

impl SupportConstraint {
    pub fn new(fs: &[SparsePolynomial], bound: &Polytope) -> Result<Self> {
        Ok(SupportConstraint {
            bound: bound.clone(),
            per_generator_exponents: fs
                .iter()
                .map(|f| allowed_exponents(f, bound))
                .collect::<Result<_>>()?,
        })
    }

    pub fn unknowns(&self) -> usize {
        self.per_generator_exponents.iter().map(Vec::len).sum()
    }
}

/// Nonnegative lattice points `β` with `β + supp F ⊆ bound`, in
/// lexicographic order.
pub fn allowed_exponents(f: &SparsePolynomial, bound: &Polytope) -> Result<Vec<LatticePoint>> {
    if f.is_zero() {
        return Err(Error::Degenerate("zero generator".into()));
    }
    let np = newton_polytope(std::slice::from_ref(f))?;
    let mut points = bound
        .minkowski_diff(&np)?
        .map(|d| d.lattice_points())
        .unwrap_or_default();
    points.retain(|b| b.iter().all(|&x| x >= 0));
    Ok(points)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub cofactors: Vec<SparsePolynomial>,
    pub power: u32,
    pub bound: Polytope,
    pub theorem: TheoremTag,
}

/// Size of the coefficient-matching system.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MatrixShape {
    pub rows: usize,
    pub cols: usize,
}

pub fn solve_membership(
    fs: &[SparsePolynomial],
    phi: &SparsePolynomial,
    nu: u32,
    bound: &Polytope,
) -> Result<Option<Certificate>> {
    Ok(solve_membership_with(Execution::default(), fs, phi, nu, bound)?.0)
}

/// Solves for cofactors with `β + supp F_j ⊆ bound` for every cofactor
/// monomial `x^β`. Rows are the lattice points of the bound in lexicographic
/// order, columns are `(j, β)` pairs in order. `None` means no certificate of
/// this support shape exists. The certificate is tagged `Custom`.
pub fn solve_membership_with(
    exec: Execution,
    fs: &[SparsePolynomial],
    phi: &SparsePolynomial,
    nu: u32,
    bound: &Polytope,
) -> Result<(Option<Certificate>, MatrixShape)> {
    let dim = common_dim(fs)?;
    crate::error::check_dim(dim, phi.dim())?;
    crate::error::check_dim(dim, bound.dim())?;
    if nu == 0 {
        return Err(Error::Contract("the power must be positive".into()));
    }
    let target = phi.pow(nu);
    if !target.support_in(bound)? {
        return Err(Error::Hypothesis(
            "the target power is not supported in the bound".into(),
        ));
    }
    let constraint = SupportConstraint::new(fs, bound)?;
    let points = bound.lattice_points();
    let row_of: BTreeMap<&LatticePoint, usize> =
        points.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let columns: Vec<(usize, &LatticePoint)> = constraint
        .per_generator_exponents
        .iter()
        .enumerate()
        .flat_map(|(j, bs)| bs.iter().map(move |b| (j, b)))
        .collect();
    let shape = MatrixShape {
        rows: points.len(),
        cols: columns.len(),
    };

    let column_entries = exec.map(&columns, |&(j, beta)| {
        fs[j]
            .terms()
            .map(|(alpha, c)| {
                let e: LatticePoint = alpha.iter().zip(beta).map(|(a, b)| a + b).collect();
                (row_of[&e], c.clone())
            })
            .collect::<Vec<_>>()
    });
    let mut a = RationalMatrix::zeros(shape.rows, shape.cols);
    for (col, entries) in column_entries.into_iter().enumerate() {
        for (row, c) in entries {
            a.set(row, col, c);
        }
    }
    let b: Vec<Rational> = points.iter().map(|p| target.coeff(p)).collect();

    let Some(x) = solve_exact(&a, &b)? else {
        return Ok((None, shape));
    };
    let mut per_gen: Vec<Vec<(LatticePoint, Rational)>> = vec![Vec::new(); fs.len()];
    for ((j, beta), v) in columns.iter().zip(x) {
        if !v.is_zero() {
            per_gen[*j].push(((*beta).clone(), v));
        }
    }
    let cofactors = per_gen
        .into_iter()
        .map(|terms| SparsePolynomial::from_terms(dim, terms))
        .collect::<Result<Vec<_>>>()?;
    let cert = Certificate {
        cofactors,
        power: nu,
        bound: bound.clone(),
        theorem: TheoremTag::Custom,
    };
    debug_assert!(verify_certificate(&cert, fs, phi).is_ok());
    Ok((Some(cert), shape))
}

/// Successful escalation step.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Escalated {
    pub certificate: Certificate,
    pub c: i64,
    pub shape: MatrixShape,
}

pub fn escalate_solve(
    fs: &[SparsePolynomial],
    phi: &SparsePolynomial,
    nu: u32,
    p: &Polytope,
    c_start: i64,
    c_max: i64,
) -> Result<Option<(Certificate, i64)>> {
    Ok(
        escalate_solve_with(Execution::default(), fs, phi, nu, p, c_start, c_max)?
            .map(|e| (e.certificate, e.c)),
    )
}

/// Tries the bounds `cP` for `c = c_start..=c_max` and returns the first success.
pub fn escalate_solve_with(
    exec: Execution,
    fs: &[SparsePolynomial],
    phi: &SparsePolynomial,
    nu: u32,
    p: &Polytope,
    c_start: i64,
    c_max: i64,
) -> Result<Option<Escalated>> {
    if c_start < 1 || c_start > c_max {
        return Err(Error::Contract(format!(
            "invalid escalation range {c_start}..={c_max}"
        )));
    }
    for c in c_start..=c_max {
        let bound = p.dilate(c)?;
        if let (Some(certificate), shape) = solve_membership_with(exec, fs, phi, nu, &bound)? {
            return Ok(Some(Escalated {
                certificate,
                c,
                shape,
            }));
        }
    }
    Ok(None)
}

/// Why a certificate was rejected.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VerifyFailure {
    DimensionMismatch {
        expected: usize,
        got: usize,
    },
    CofactorCount {
        expected: usize,
        got: usize,
    },
    IdentityMismatch {
        exponent: LatticePoint,
        expected: Rational,
        got: Rational,
    },
    SupportOutsideBound {
        generator: usize,
        exponent: LatticePoint,
    },
    ZeroPower,
}

impl fmt::Display for VerifyFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VerifyFailure::DimensionMismatch { expected, got } => {
                write!(f, "dimension mismatch: expected {expected}, got {got}")
            }
            VerifyFailure::CofactorCount { expected, got } => {
                write!(f, "cofactor count mismatch: expected {expected}, got {got}")
            }
            VerifyFailure::IdentityMismatch {
                exponent,
                expected,
                got,
            } => write!(
                f,
                "identity mismatch at exponent {}: expected {}, got {}",
                format_point(exponent),
                format_rational(expected),
                format_rational(got)
            ),
            VerifyFailure::SupportOutsideBound {
                generator,
                exponent,
            } => write!(
                f,
                "support outside bound: F_{generator}*G_{generator} has exponent {}",
                format_point(exponent)
            ),
            VerifyFailure::ZeroPower => write!(f, "power must be positive"),
        }
    }
}

impl std::error::Error for VerifyFailure {}

/// Recomputes `Σ F_j G_j` and compares it with `Φ^ν` exactly, then checks
/// that every product `F_j G_j` is supported in the bound. Only the product
/// supports are constrained, not the cofactors'.
#[allow(clippy::result_large_err)]
pub fn verify_certificate(
    cert: &Certificate,
    fs: &[SparsePolynomial],
    phi: &SparsePolynomial,
) -> std::result::Result<(), VerifyFailure> {
    let dim = phi.dim();
    let mismatch = |got: usize| VerifyFailure::DimensionMismatch { expected: dim, got };
    if let Some(bad) = fs
        .iter()
        .chain(&cert.cofactors)
        .map(SparsePolynomial::dim)
        .chain([cert.bound.dim()])
        .find(|&d| d != dim)
    {
        return Err(mismatch(bad));
    }
    if fs.len() != cert.cofactors.len() {
        return Err(VerifyFailure::CofactorCount {
            expected: fs.len(),
            got: cert.cofactors.len(),
        });
    }
    if cert.power == 0 {
        return Err(VerifyFailure::ZeroPower);
    }
    let products: Vec<SparsePolynomial> =
        fs.iter().zip(&cert.cofactors).map(|(f, g)| f * g).collect();
    let sum = products
        .iter()
        .fold(SparsePolynomial::zero(dim), |acc, p| &acc + p);
    let target = phi.pow(cert.power);
    let diff = &sum - &target;
    if let Some(e) = diff.support().into_iter().next() {
        return Err(VerifyFailure::IdentityMismatch {
            expected: target.coeff(&e),
            got: sum.coeff(&e),
            exponent: e,
        });
    }
    for (j, p) in products.iter().enumerate() {
        if let Some(e) = p
            .support()
            .into_iter()
            .find(|e| !cert.bound.contains_point(e).unwrap_or(false))
        {
            return Err(VerifyFailure::SupportOutsideBound {
                generator: j + 1,
                exponent: e,
            });
        }
    }
    Ok(())
}
