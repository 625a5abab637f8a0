//! Hypothesis checks and support bounds for the Macaulay, Max Noether,
//! Briançon–Skoda and Tuitman statements, plus classical reference numbers.

use std::fmt;

use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::groebner::{has_common_zero_affine, ideal_member};
use crate::infinity::{
    no_zeros_anywhere_multi, no_zeros_anywhere_with, no_zeros_at_infinity_with, InfinityVerdict,
};
use crate::poly::{common_dim, newton_polytope, SparsePolynomial};
use crate::polytope::{format_point, subsets, Polytope};
use crate::solver::{
    escalate_solve_with, solve_membership_with, Certificate, MatrixShape, TheoremTag,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum HypothesisStatus {
    Pass,
    Fail,
    /// Could not be decided (and was not asserted by the caller).
    Unverifiable,
    /// Not evaluated because a prerequisite hypothesis failed.
    Skipped,
}

impl HypothesisStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            HypothesisStatus::Pass => "pass",
            HypothesisStatus::Fail => "fail",
            HypothesisStatus::Unverifiable => "unverifiable",
            HypothesisStatus::Skipped => "skipped",
        }
    }
}

impl fmt::Display for HypothesisStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HypothesisCheck {
    pub name: &'static str,
    pub status: HypothesisStatus,
    pub witness: Option<String>,
}

impl HypothesisCheck {
    fn pass(name: &'static str) -> Self {
        HypothesisCheck {
            name,
            status: HypothesisStatus::Pass,
            witness: None,
        }
    }

    fn with(name: &'static str, status: HypothesisStatus, witness: impl Into<String>) -> Self {
        HypothesisCheck {
            name,
            status,
            witness: Some(witness.into()),
        }
    }

    fn fail(name: &'static str, witness: impl Into<String>) -> Self {
        Self::with(name, HypothesisStatus::Fail, witness)
    }

    fn skipped(name: &'static str) -> Self {
        Self::with(
            name,
            HypothesisStatus::Skipped,
            "a prerequisite hypothesis failed",
        )
    }

    fn gate(name: &'static str, witness: Option<String>) -> Self {
        match witness {
            None => Self::pass(name),
            Some(w) => Self::fail(name, w),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Escalation {
    pub c_start: i64,
    pub c_max: i64,
}

/// A bound and power licensed by a theorem, with the hypothesis report that
/// licenses them. `bound` is `None` unless every hypothesis passed. For
/// escalation plans the bound is `c_start · polytope`, the first candidate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremPlan {
    pub theorem: TheoremTag,
    /// The polytope the bound is a dilate of.
    pub polytope: Polytope,
    pub bound: Option<Polytope>,
    pub power: u32,
    pub e: i64,
    pub hypotheses: Vec<HypothesisCheck>,
    pub escalation: Option<Escalation>,
}

impl TheoremPlan {
    pub fn passed(&self) -> bool {
        self.hypotheses
            .iter()
            .all(|h| h.status == HypothesisStatus::Pass)
    }

    /// First hypothesis that did not pass (skipped entries are never first).
    pub fn first_failure(&self) -> Option<&HypothesisCheck> {
        self.hypotheses
            .iter()
            .find(|h| h.status != HypothesisStatus::Pass)
    }
}

/// Result of running the solver on a passed plan.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlanOutcome {
    /// Tagged with the plan's theorem.
    pub certificate: Option<Certificate>,
    /// Shape of the last system solved.
    pub shape: MatrixShape,
    /// Dilation at which an escalating plan succeeded.
    pub c: Option<i64>,
}

/// Solves at the planned bound, or escalates `cP` for escalation plans.
pub fn execute_plan(
    exec: Execution,
    plan: &TheoremPlan,
    fs: &[SparsePolynomial],
    phi: &SparsePolynomial,
) -> Result<PlanOutcome> {
    if !plan.passed() {
        return Err(Error::Contract(
            "the plan's hypotheses did not all pass".into(),
        ));
    }
    let (certificate, shape, c) = match plan.escalation {
        Some(Escalation { c_start, c_max }) => {
            match escalate_solve_with(exec, fs, phi, plan.power, &plan.polytope, c_start, c_max)? {
                Some(e) => (Some(e.certificate), e.shape, Some(e.c)),
                None => {
                    let last = plan.polytope.dilate(c_max)?;
                    let (_, shape) = solve_membership_with(exec, fs, phi, plan.power, &last)?;
                    (None, shape, None)
                }
            }
        }
        None => {
            let bound = plan.bound.as_ref().expect("passed plans carry a bound");
            let (cert, shape) = solve_membership_with(exec, fs, phi, plan.power, bound)?;
            (cert, shape, None)
        }
    };
    let certificate = certificate.map(|mut cert| {
        cert.theorem = plan.theorem;
        cert
    });
    Ok(PlanOutcome {
        certificate,
        shape,
        c,
    })
}

/// Knobs shared by the planners.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct PlanOptions {
    /// Raise `e` above the computed minimum.
    pub e_override: Option<i64>,
    /// Escalation ceiling; defaults to `max(n+1, e) + 8`.
    pub c_max: Option<i64>,
    pub exec: Execution,
}

fn nonzero_inputs(fs: &[SparsePolynomial], phi: &SparsePolynomial) -> Result<usize> {
    let n = common_dim(fs)?;
    crate::error::check_dim(n, phi.dim())?;
    if let Some(j) = fs.iter().position(SparsePolynomial::is_zero) {
        return Err(Error::Degenerate(format!("generator {} is zero", j + 1)));
    }
    if phi.is_zero() {
        return Err(Error::Degenerate("the target is zero".into()));
    }
    Ok(n)
}

fn choose_e(p: &Polytope, phi: &SparsePolynomial, opts: &PlanOptions) -> Result<i64> {
    let e = p.min_integer_dilation(&phi.support())?.ok_or_else(|| {
        Error::Hypothesis("the target support lies in no integer dilation of the polytope".into())
    })?;
    match opts.e_override {
        Some(o) if o < e => Err(Error::Contract(format!(
            "e override {o} is below the minimum {e}"
        ))),
        Some(o) => Ok(o),
        None => Ok(e),
    }
}

/// Human description of a face: its vertex list.
pub fn describe_face(p: &Polytope, verdict: &InfinityVerdict) -> String {
    match &verdict.witness_face {
        Some(face) => {
            let vs: Vec<String> = face
                .vertex_points(p)
                .iter()
                .map(|v| p.format_vertex(v))
                .collect();
            let sys: Vec<String> = verdict
                .witness_system
                .iter()
                .flatten()
                .map(|f| f.to_string())
                .collect();
            format!(
                "face {{{}}} with facial system [{}]",
                vs.join(", "),
                sys.join(", ")
            )
        }
        None => String::new(),
    }
}

fn sweep_check(
    name: &'static str,
    p: &Polytope,
    r: Result<InfinityVerdict>,
) -> Result<HypothesisCheck> {
    match r {
        Ok(v) if v.ok => Ok(HypothesisCheck::pass(name)),
        Ok(v) => Ok(HypothesisCheck::fail(name, describe_face(p, &v))),
        Err(Error::Degenerate(msg)) => Ok(HypothesisCheck::with(
            name,
            HypothesisStatus::Unverifiable,
            msg,
        )),
        Err(e) => Err(e),
    }
}

fn origin_check(p: &Polytope) -> HypothesisCheck {
    HypothesisCheck::gate(
        "contains_origin",
        (!p.contains_origin()).then(|| "origin".to_string()),
    )
}

fn supports_check(fs: &[SparsePolynomial], ps: &[&Polytope]) -> HypothesisCheck {
    let witness = fs.iter().zip(ps).enumerate().find_map(|(j, (f, p))| {
        f.support()
            .into_iter()
            .find(|e| !p.contains_point(e).unwrap_or(false))
            .map(|e| format!("F_{} exponent {}", j + 1, format_point(&e)))
    });
    HypothesisCheck::gate("contains_supports", witness)
}

fn infinity_check(
    fs: &[SparsePolynomial],
    p: &Polytope,
    origin: &HypothesisCheck,
    supports: &HypothesisCheck,
    opts: &PlanOptions,
) -> Result<HypothesisCheck> {
    let name = "no_zeros_at_infinity";
    if origin.status == HypothesisStatus::Pass && supports.status == HypothesisStatus::Pass {
        sweep_check(name, p, no_zeros_at_infinity_with(opts.exec, fs, p))
    } else {
        Ok(HypothesisCheck::skipped(name))
    }
}

/// Macaulay-type statement: no common zeros on the toric variety of `NP(F)`;
/// bound `max(n+1, e)·NP`, power 1.
pub fn plan_macaulay(
    fs: &[SparsePolynomial],
    phi: &SparsePolynomial,
    opts: &PlanOptions,
) -> Result<TheoremPlan> {
    let n = nonzero_inputs(fs, phi)?;
    let np = newton_polytope(fs)?;
    let e = choose_e(&np, phi, opts)?;
    let sweep = sweep_check(
        "no_common_zeros",
        &np,
        no_zeros_anywhere_with(opts.exec, fs, &np),
    )?;
    let hypotheses = vec![sweep];
    let c = (n as i64 + 1).max(e);
    let bound = hypotheses
        .iter()
        .all(|h| h.status == HypothesisStatus::Pass)
        .then(|| np.dilate(c))
        .transpose()?;
    Ok(TheoremPlan {
        theorem: TheoremTag::Macaulay,
        polytope: np,
        bound,
        power: 1,
        e,
        hypotheses,
        escalation: None,
    })
}

/// Smooth `P` containing the origin, the supports and the coordinate
/// functions, no zeros at infinity, and `Φ ∈ (F)`. The bound is found by
/// escalating `c` from `max(e, 1)`.
pub fn plan_noether(
    fs: &[SparsePolynomial],
    phi: &SparsePolynomial,
    p: &Polytope,
    opts: &PlanOptions,
) -> Result<TheoremPlan> {
    let n = nonzero_inputs(fs, phi)?;
    crate::error::check_dim(n, p.dim())?;
    let smooth = match p.smoothness_witness() {
        Ok(None) => HypothesisCheck::pass("smooth"),
        Ok(Some(v)) => HypothesisCheck::fail("smooth", format!("vertex {}", p.format_vertex(&v))),
        Err(Error::Degenerate(msg)) => HypothesisCheck::fail("smooth", msg),
        Err(e) => return Err(e),
    };
    let origin = origin_check(p);
    let supports = supports_check(fs, &vec![p; fs.len()]);
    let coords = HypothesisCheck::gate(
        "contains_coordinates",
        (0..n)
            .find(|&i| {
                let mut e = vec![0; n];
                e[i] = 1;
                !p.contains_point_unchecked(&e)
            })
            .map(|i| format!("e_{}", i + 1)),
    );
    let infinity = infinity_check(fs, p, &origin, &supports, opts)?;
    let member = HypothesisCheck::gate(
        "target_in_ideal",
        (!ideal_member(phi, fs)?).then(|| "the target has a nonzero normal form".to_string()),
    );
    let hypotheses = vec![smooth, origin, supports, coords, infinity, member];
    let e = choose_e(p, phi, opts)?;
    let c_start = e.max(1);
    let c_max = opts.c_max.unwrap_or((n as i64 + 1).max(e) + 8);
    if c_max < c_start {
        return Err(Error::Contract(format!(
            "c_max {c_max} is below the starting dilation {c_start}"
        )));
    }
    let passed = hypotheses
        .iter()
        .all(|h| h.status == HypothesisStatus::Pass);
    Ok(TheoremPlan {
        theorem: TheoremTag::Noether,
        polytope: p.clone(),
        bound: passed.then(|| p.dilate(c_start)).transpose()?,
        power: 1,
        e,
        hypotheses,
        escalation: passed.then_some(Escalation { c_start, c_max }),
    })
}

/// `P` containing the origin and the supports, no zeros at infinity, and `Φ`
/// in the integral closure of `(F)`; bound `max(n+1, n·e)·P`, power `n`.
///
/// The integral-closure condition is derived automatically when `F` has no
/// common affine zero; otherwise it must be asserted by the caller, and is
/// reported as unverifiable when it is not.
pub fn plan_briancon_skoda(
    fs: &[SparsePolynomial],
    phi: &SparsePolynomial,
    p: &Polytope,
    integral_closure_asserted: bool,
    opts: &PlanOptions,
) -> Result<TheoremPlan> {
    let n = nonzero_inputs(fs, phi)?;
    crate::error::check_dim(n, p.dim())?;
    let origin = origin_check(p);
    let supports = supports_check(fs, &vec![p; fs.len()]);
    let infinity = infinity_check(fs, p, &origin, &supports, opts)?;
    let closure = if !has_common_zero_affine(fs)? {
        HypothesisCheck::with(
            "integral_closure",
            HypothesisStatus::Pass,
            "no common affine zeros",
        )
    } else if integral_closure_asserted {
        HypothesisCheck::with(
            "integral_closure",
            HypothesisStatus::Pass,
            "asserted by the caller",
        )
    } else {
        HypothesisCheck::with(
            "integral_closure",
            HypothesisStatus::Unverifiable,
            "the generators share an affine zero and membership in the integral closure was not asserted",
        )
    };
    let hypotheses = vec![origin, supports, infinity, closure];
    let e = choose_e(p, phi, opts)?;
    let n64 = n as i64;
    let c = (n64 + 1).max(n64 * e);
    let passed = hypotheses
        .iter()
        .all(|h| h.status == HypothesisStatus::Pass);
    Ok(TheoremPlan {
        theorem: TheoremTag::BrianconSkoda,
        polytope: p.clone(),
        bound: passed.then(|| p.dilate(c)).transpose()?,
        power: n as u32,
        e,
        hypotheses,
        escalation: None,
    })
}

/// Per-generator polytopes `P_j` with no common zeros on the common
/// refinement, and every partial sum of at most `min(m, n+1)` of them a
/// summand of `P`; bound `P`, power 1.
pub fn plan_tuitman(
    fs: &[SparsePolynomial],
    pjs: &[Polytope],
    p: &Polytope,
    phi: &SparsePolynomial,
    opts: &PlanOptions,
) -> Result<TheoremPlan> {
    let n = nonzero_inputs(fs, phi)?;
    crate::error::check_dim(n, p.dim())?;
    if pjs.len() != fs.len() {
        return Err(Error::Contract(format!(
            "{} generators but {} polytopes",
            fs.len(),
            pjs.len()
        )));
    }
    for q in pjs {
        crate::error::check_dim(n, q.dim())?;
    }
    let refs: Vec<&Polytope> = pjs.iter().collect();
    let supports = supports_check(fs, &refs);
    let target = HypothesisCheck::gate(
        "target_in_polytope",
        phi.support()
            .into_iter()
            .find(|e| !p.contains_point_unchecked(e))
            .map(|e| format!("exponent {}", format_point(&e))),
    );
    let zeros = if supports.status == HypothesisStatus::Pass {
        match no_zeros_anywhere_multi(opts.exec, fs, pjs) {
            Ok((sum, v)) if !v.ok => {
                HypothesisCheck::fail("no_common_zeros", describe_face(&sum, &v))
            }
            Ok(_) => HypothesisCheck::pass("no_common_zeros"),
            Err(Error::Degenerate(msg)) => {
                HypothesisCheck::with("no_common_zeros", HypothesisStatus::Unverifiable, msg)
            }
            Err(e) => return Err(e),
        }
    } else {
        HypothesisCheck::skipped("no_common_zeros")
    };

    let mut index_sets: Vec<Vec<usize>> = Vec::new();
    for q in 1..=fs.len().min(n + 1) {
        subsets(0, fs.len(), q, &mut |idx| index_sets.push(idx.to_vec()));
    }
    let results = opts.exec.map(&index_sets, |idx| -> Result<bool> {
        let mut sum = Polytope::origin(n)?;
        for &j in idx {
            sum = sum.minkowski_sum_with(Execution::Sequential, &pjs[j])?;
        }
        sum.is_summand_of(p)
    });
    let mut summands = HypothesisCheck::pass("summands");
    for (idx, r) in index_sets.iter().zip(results) {
        if !r? {
            let names: Vec<String> = idx.iter().map(|j| (j + 1).to_string()).collect();
            summands = HypothesisCheck::fail("summands", format!("J = {{{}}}", names.join(",")));
            break;
        }
    }

    let hypotheses = vec![supports, target, zeros, summands];
    let e = choose_e(p, phi, opts)?;
    let passed = hypotheses
        .iter()
        .all(|h| h.status == HypothesisStatus::Pass);
    Ok(TheoremPlan {
        theorem: TheoremTag::Tuitman,
        polytope: p.clone(),
        bound: passed.then(|| p.clone()),
        power: 1,
        e,
        hypotheses,
        escalation: None,
    })
}

/// Escalation plan with no hypotheses at all: search `cP` from `max(e, 1)`.
pub fn plan_custom(
    fs: &[SparsePolynomial],
    phi: &SparsePolynomial,
    p: &Polytope,
    nu: u32,
    opts: &PlanOptions,
) -> Result<TheoremPlan> {
    let n = nonzero_inputs(fs, phi)?;
    crate::error::check_dim(n, p.dim())?;
    let e = choose_e(p, &phi.pow(nu), opts)?;
    let c_start = e.max(1);
    let c_max = opts.c_max.unwrap_or((n as i64 + 1).max(e) + 8);
    if c_max < c_start {
        return Err(Error::Contract(format!(
            "c_max {c_max} is below the starting dilation {c_start}"
        )));
    }
    Ok(TheoremPlan {
        theorem: TheoremTag::Custom,
        polytope: p.clone(),
        bound: Some(p.dilate(c_start)?),
        power: nu,
        e,
        hypotheses: Vec::new(),
        escalation: Some(Escalation { c_start, c_max }),
    })
}

/// Classical dense reference numbers for degree-`d` generators.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClassicalReference {
    /// `(n+1)d − n`.
    pub macaulay_degree: u64,
    /// `d^min(m,n)`.
    pub kollar_power: u64,
    /// `(1 + deg Φ)·d^min(m,n)`.
    pub kollar_degree: u64,
    /// `2^(n+1)`, present when `d = 2` and `m ≥ n+1`; replaces `d^min(m,n)`.
    pub sombra_factor: Option<u64>,
    /// `deg Φ`.
    pub noether_degree: u64,
    /// `min(m, n)`.
    pub briancon_skoda_power: u64,
}

impl ClassicalReference {
    /// The power factor in effect after the Sombra substitution.
    pub fn effective_power_factor(&self) -> u64 {
        self.sombra_factor.unwrap_or(self.kollar_power)
    }
}

pub fn classical_reference(d: u64, n: u64, m: u64, deg_phi: u64) -> Result<ClassicalReference> {
    if d == 0 || n == 0 || m == 0 {
        return Err(Error::Contract("d, n and m must be positive".into()));
    }
    let k = m.min(n);
    let kollar_power = u32::try_from(k)
        .ok()
        .and_then(|k| d.checked_pow(k))
        .ok_or(Error::Overflow)?;
    let sombra_factor = if d == 2 && m > n {
        Some(
            u32::try_from(n + 1)
                .ok()
                .and_then(|e| 2u64.checked_pow(e))
                .ok_or(Error::Overflow)?,
        )
    } else {
        None
    };
    Ok(ClassicalReference {
        macaulay_degree: (n + 1).checked_mul(d).ok_or(Error::Overflow)? - n,
        kollar_power,
        kollar_degree: (1 + deg_phi)
            .checked_mul(kollar_power)
            .ok_or(Error::Overflow)?,
        sombra_factor,
        noether_degree: deg_phi,
        briancon_skoda_power: k,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(dim: usize, terms: &[(i64, &[i64])]) -> SparsePolynomial {
        SparsePolynomial::from_int_terms(dim, terms).unwrap()
    }

    fn simplex(d: i64) -> Polytope {
        Polytope::simplex(2).unwrap().dilate(d).unwrap()
    }

    fn macaulay_system() -> Vec<SparsePolynomial> {
        vec![
            SparsePolynomial::var(2, 0),
            SparsePolynomial::var(2, 1),
            poly(2, &[(1, &[0, 0]), (-1, &[1, 0]), (-1, &[0, 1])]),
        ]
    }

    fn curve() -> Vec<SparsePolynomial> {
        vec![
            poly(2, &[(1, &[1, 1]), (-1, &[0, 0])]),
            poly(2, &[(1, &[1, 0]), (-1, &[0, 1])]),
        ]
    }

    fn names(plan: &TheoremPlan) -> Vec<&'static str> {
        plan.hypotheses.iter().map(|h| h.name).collect()
    }

    #[test]
    fn macaulay() {
        let opts = PlanOptions::default();
        let plan = plan_macaulay(&macaulay_system(), &SparsePolynomial::one(2), &opts).unwrap();
        assert!(plan.passed());
        assert_eq!((plan.e, plan.power), (1, 1));
        assert_eq!(plan.bound.unwrap(), simplex(3));
        let plan = plan_macaulay(&macaulay_system(), &poly(2, &[(1, &[5, 0])]), &opts).unwrap();
        assert_eq!(plan.e, 5);
        assert_eq!(plan.bound.unwrap(), simplex(5));
        let plan = plan_macaulay(&curve(), &SparsePolynomial::one(2), &opts).unwrap();
        assert!(!plan.passed());
        assert_eq!(plan.bound, None);
        assert!(plan.hypotheses[0]
            .witness
            .as_deref()
            .unwrap()
            .starts_with("face {(0,0), (0,1), (1,0), (1,1)}"));
        let raised = PlanOptions {
            e_override: Some(4),
            ..opts
        };
        assert_eq!(
            plan_macaulay(&macaulay_system(), &SparsePolynomial::one(2), &raised)
                .unwrap()
                .bound
                .unwrap(),
            simplex(4)
        );
        let lowered = PlanOptions {
            e_override: Some(0),
            ..opts
        };
        assert!(plan_macaulay(&macaulay_system(), &SparsePolynomial::one(2), &lowered).is_err());
    }

    #[test]
    fn macaulay_target_outside_every_dilation() {
        // NP is the segment from (1,0) to (0,1); no dilation contains the origin.
        let fs = [SparsePolynomial::var(2, 0), SparsePolynomial::var(2, 1)];
        assert!(matches!(
            plan_macaulay(&fs, &SparsePolynomial::one(2), &PlanOptions::default()),
            Err(Error::Hypothesis(_))
        ));
    }

    #[test]
    fn noether() {
        let phi = poly(2, &[(1, &[2, 2]), (-1, &[0, 0])]);
        let sq = Polytope::cube(2).unwrap();
        let plan = plan_noether(&curve(), &phi, &sq, &PlanOptions::default()).unwrap();
        assert_eq!(
            names(&plan),
            [
                "smooth",
                "contains_origin",
                "contains_supports",
                "contains_coordinates",
                "no_zeros_at_infinity",
                "target_in_ideal"
            ]
        );
        assert!(plan.passed(), "{:?}", plan.hypotheses);
        assert_eq!(plan.e, 2);
        assert_eq!(
            plan.escalation,
            Some(Escalation {
                c_start: 2,
                c_max: 11
            })
        );

        let wedge = Polytope::hull(&[vec![0, 0], vec![2, 0], vec![0, 1]]).unwrap();
        let plan = plan_noether(
            &[SparsePolynomial::var(2, 0)],
            &SparsePolynomial::var(2, 0),
            &wedge,
            &PlanOptions::default(),
        )
        .unwrap();
        assert_eq!(plan.hypotheses[0].status, HypothesisStatus::Fail);
        assert_eq!(plan.hypotheses[0].witness.as_deref(), Some("vertex (0,1)"));
        assert_eq!(plan.bound, None);

        let outside = poly(2, &[(1, &[1, 0]), (1, &[0, 0])]);
        let plan = plan_noether(&curve(), &outside, &sq, &PlanOptions::default()).unwrap();
        assert_eq!(plan.first_failure().unwrap().name, "target_in_ideal");
    }

    #[test]
    fn noether_skips_sweep_without_origin() {
        let shifted = Polytope::hull(&[vec![1, 1], vec![2, 1], vec![1, 2], vec![2, 2]]).unwrap();
        let f = [poly(2, &[(1, &[1, 1])])];
        let plan = plan_noether(&f, &f[0], &shifted, &PlanOptions::default()).unwrap();
        assert_eq!(plan.hypotheses[1].status, HypothesisStatus::Fail);
        assert_eq!(plan.hypotheses[4].status, HypothesisStatus::Skipped);
    }

    #[test]
    fn briancon_skoda() {
        let fs = [poly(2, &[(1, &[2, 0])]), poly(2, &[(1, &[0, 2])])];
        let phi = poly(2, &[(1, &[1, 1])]);
        let opts = PlanOptions::default();
        let plan = plan_briancon_skoda(&fs, &phi, &simplex(2), true, &opts).unwrap();
        assert!(plan.passed());
        assert_eq!((plan.e, plan.power), (1, 2));
        assert_eq!(plan.bound.unwrap(), simplex(6));
        let plan = plan_briancon_skoda(&fs, &phi, &simplex(2), false, &opts).unwrap();
        assert_eq!(plan.hypotheses[3].status, HypothesisStatus::Unverifiable);
        assert_eq!(plan.bound, None);

        let plan = plan_briancon_skoda(
            &macaulay_system(),
            &SparsePolynomial::one(2),
            &simplex(1),
            false,
            &opts,
        )
        .unwrap();
        assert!(plan.passed());
        assert_eq!(
            plan.hypotheses[3].witness.as_deref(),
            Some("no common affine zeros")
        );
    }

    #[test]
    fn briancon_skoda_dense_degree() {
        // On dΣⁿ with integer e = ⌈deg Φ / d⌉ the bound degree reads
        // max((n+1)d, n·d·e), which is max((n+1)d, n·deg Φ) when d | deg Φ.
        let fs = [
            poly(2, &[(1, &[2, 0]), (1, &[0, 0])]),
            poly(2, &[(1, &[0, 2]), (-1, &[1, 0])]),
        ];
        for deg_phi in 1..=6i64 {
            let phi = poly(2, &[(1, &[deg_phi, 0])]);
            let plan =
                plan_briancon_skoda(&fs, &phi, &simplex(2), true, &PlanOptions::default()).unwrap();
            let bound = plan.bound.unwrap();
            let degree = bound.vertices().iter().map(|v| v[0] + v[1]).max().unwrap();
            let e = (deg_phi + 1) / 2;
            assert_eq!(plan.e, e);
            assert_eq!(degree, (3 * 2).max(2 * 2 * e));
            if deg_phi % 2 == 0 {
                assert_eq!(degree, (3 * 2).max(2 * deg_phi));
            }
        }
    }

    #[test]
    fn tuitman() {
        let fs = macaulay_system();
        let s = simplex(1);
        let pjs = vec![s.clone(); 3];
        let opts = PlanOptions::default();
        let plan = plan_tuitman(&fs, &pjs, &simplex(3), &SparsePolynomial::one(2), &opts).unwrap();
        assert!(plan.passed(), "{:?}", plan.hypotheses);
        assert_eq!(plan.bound.unwrap(), simplex(3));
        let sq = Polytope::cube(2).unwrap();
        let plan = plan_tuitman(&fs, &pjs, &sq, &SparsePolynomial::one(2), &opts).unwrap();
        let summands = plan
            .hypotheses
            .iter()
            .find(|h| h.name == "summands")
            .unwrap();
        assert_eq!(summands.status, HypothesisStatus::Fail);
        assert_eq!(summands.witness.as_deref(), Some("J = {1}"));
    }

    #[test]
    fn custom() {
        let plan = plan_custom(
            &curve(),
            &poly(2, &[(1, &[1, 1])]),
            &Polytope::cube(2).unwrap(),
            2,
            &PlanOptions::default(),
        )
        .unwrap();
        assert!(plan.passed());
        assert_eq!(plan.escalation.unwrap().c_start, 2);
    }

    #[test]
    fn classical() {
        let r = classical_reference(2, 3, 3, 1).unwrap();
        assert_eq!(r.kollar_power, 8);
        assert_eq!(r.sombra_factor, None);
        assert_eq!(classical_reference(3, 2, 1, 1).unwrap().macaulay_degree, 7);
        let r = classical_reference(2, 2, 4, 1).unwrap();
        assert_eq!(r.sombra_factor, Some(8));
        assert_eq!(r.effective_power_factor(), 8);
        assert_eq!(r.kollar_power, 4);
        assert_eq!(r.briancon_skoda_power, 2);
        assert!(classical_reference(0, 1, 1, 1).is_err());
    }
}
