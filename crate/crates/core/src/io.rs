//! JSON shapes for polytopes, polynomials, certificates, plans and verdicts.
//!
//! Coefficients are written as exact `"p/q"` strings (`"p"` when integral);
//! plain JSON integers are also accepted on input.

use serde::{Deserialize, Serialize};

use crate::bounds::{HypothesisStatus, TheoremPlan};
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::infinity::InfinityVerdict;
use crate::linalg::{format_rational, parse_rational, Rational};
use crate::poly::SparsePolynomial;
use crate::polytope::{LatticePoint, Polytope};
use crate::solver::{Certificate, TheoremTag};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolytopeJson {
    pub dim: usize,
    /// Points whose convex hull is the polytope, scaled by `denominator`.
    pub vertices: Vec<LatticePoint>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub denominator: Option<i64>,
}

impl From<&Polytope> for PolytopeJson {
    fn from(p: &Polytope) -> Self {
        PolytopeJson {
            dim: p.dim(),
            vertices: p.vertices().to_vec(),
            denominator: (p.denominator() != 1).then_some(p.denominator()),
        }
    }
}

impl PolytopeJson {
    pub fn to_polytope(&self) -> Result<Polytope> {
        let denom = self.denominator.unwrap_or(1);
        if denom <= 0 {
            return Err(Error::Parse(format!(
                "denominator must be positive, got {denom}"
            )));
        }
        for v in &self.vertices {
            if v.len() != self.dim {
                return Err(Error::Parse(format!(
                    "vertex of length {} in a polytope of dimension {}",
                    v.len(),
                    self.dim
                )));
            }
        }
        if self.vertices.is_empty() {
            return Ok(Polytope::empty(self.dim));
        }
        Polytope::from_scaled(Execution::default(), self.dim, denom, self.vertices.clone())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CoeffJson {
    Int(i64),
    Text(String),
}

impl CoeffJson {
    pub fn to_rational(&self) -> Result<Rational> {
        match self {
            CoeffJson::Int(n) => Ok(Rational::from_integer((*n).into())),
            CoeffJson::Text(s) => parse_rational(s),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermJson {
    pub coeff: CoeffJson,
    pub exp: LatticePoint,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolynomialJson {
    pub dim: usize,
    pub terms: Vec<TermJson>,
}

impl From<&SparsePolynomial> for PolynomialJson {
    fn from(p: &SparsePolynomial) -> Self {
        PolynomialJson {
            dim: p.dim(),
            terms: p
                .terms()
                .map(|(e, c)| TermJson {
                    coeff: CoeffJson::Text(format_rational(c)),
                    exp: e.clone(),
                })
                .collect(),
        }
    }
}

impl PolynomialJson {
    /// Duplicate exponents are summed.
    pub fn to_polynomial(&self) -> Result<SparsePolynomial> {
        let terms = self
            .terms
            .iter()
            .map(|t| Ok((t.exp.clone(), t.coeff.to_rational()?)))
            .collect::<Result<Vec<_>>>()?;
        SparsePolynomial::from_terms(self.dim, terms)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CertificateJson {
    pub theorem: String,
    pub power: u32,
    pub bound: PolytopeJson,
    pub cofactors: Vec<PolynomialJson>,
}

impl From<&Certificate> for CertificateJson {
    fn from(c: &Certificate) -> Self {
        CertificateJson {
            theorem: c.theorem.as_str().to_string(),
            power: c.power,
            bound: (&c.bound).into(),
            cofactors: c.cofactors.iter().map(Into::into).collect(),
        }
    }
}

impl CertificateJson {
    pub fn to_certificate(&self) -> Result<Certificate> {
        Ok(Certificate {
            theorem: self.theorem.parse::<TheoremTag>()?,
            power: self.power,
            bound: self.bound.to_polytope()?,
            cofactors: self
                .cofactors
                .iter()
                .map(PolynomialJson::to_polynomial)
                .collect::<Result<_>>()?,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HypothesisJson {
    pub name: String,
    pub pass: bool,
    pub status: String,
    pub witness: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EscalationJson {
    pub c_start: i64,
    pub c_max: i64,
    /// The dilation at which a certificate was found, when known.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub c: Option<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlanJson {
    pub theorem: String,
    pub bound: Option<PolytopeJson>,
    pub power: u32,
    pub e: i64,
    pub hypotheses: Vec<HypothesisJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub escalation: Option<EscalationJson>,
}

impl From<&TheoremPlan> for PlanJson {
    fn from(p: &TheoremPlan) -> Self {
        PlanJson {
            theorem: p.theorem.as_str().to_string(),
            bound: p.bound.as_ref().map(Into::into),
            power: p.power,
            e: p.e,
            hypotheses: p
                .hypotheses
                .iter()
                .map(|h| HypothesisJson {
                    name: h.name.to_string(),
                    pass: h.status == HypothesisStatus::Pass,
                    status: h.status.as_str().to_string(),
                    witness: h.witness.clone(),
                })
                .collect(),
            escalation: p.escalation.map(|e| EscalationJson {
                c_start: e.c_start,
                c_max: e.c_max,
                c: None,
            }),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FaceJson {
    pub tight_facets: Vec<usize>,
    pub dim: usize,
    /// Vertex coordinates as exact rational strings.
    pub vertices: Vec<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictJson {
    pub ok: bool,
    pub witness_face: Option<FaceJson>,
    pub witness_system: Option<Vec<PolynomialJson>>,
}

impl VerdictJson {
    /// `p` is the polytope the witness face belongs to.
    pub fn new(v: &InfinityVerdict, p: &Polytope) -> Self {
        let rational = p.rational_vertices();
        VerdictJson {
            ok: v.ok,
            witness_face: v.witness_face.as_ref().map(|f| FaceJson {
                tight_facets: f.tight_facets.clone(),
                dim: f.dim,
                vertices: f
                    .vertices
                    .iter()
                    .map(|&i| rational[i].iter().map(format_rational).collect())
                    .collect(),
            }),
            witness_system: v
                .witness_system
                .as_ref()
                .map(|s| s.iter().map(Into::into).collect()),
        }
    }
}
