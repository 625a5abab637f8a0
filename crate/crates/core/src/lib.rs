//! Exact sparse effective Nullstellensatz toolkit.

pub mod bounds;
pub mod error;
pub mod exec;
pub mod groebner;
pub mod infinity;
pub mod infix;
pub mod io;
pub mod linalg;
pub mod poly;
pub mod polytope;
pub mod solver;

pub use bounds::{
    classical_reference, execute_plan, plan_briancon_skoda, plan_custom, plan_macaulay,
    plan_noether, plan_tuitman, ClassicalReference, HypothesisCheck, HypothesisStatus, PlanOptions,
    PlanOutcome, TheoremPlan,
};
pub use error::{Error, Result};
pub use exec::Execution;
pub use groebner::{
    buchberger, has_common_zero_affine, has_common_zero_torus, ideal_member, normal_form,
    radical_member, GroebnerBasis, MonomialOrder,
};
pub use infinity::{genericity_probe, no_zeros_anywhere, no_zeros_at_infinity, InfinityVerdict};
pub use linalg::Rational;
pub use poly::{combination, facial_system, newton_polytope, SparsePolynomial};
pub use polytope::{Face, LatticePoint, Polytope};
pub use solver::{
    allowed_exponents, escalate_solve, solve_membership, verify_certificate, Certificate,
    TheoremTag, VerifyFailure,
};
