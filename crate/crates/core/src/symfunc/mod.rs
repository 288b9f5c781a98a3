//! Exact polynomial arithmetic and the graded rank checks for the module
//! `M(ℓ,m)` spanned by the pair products `P(μ)` over the symmetric
//! polynomials `Λ_r`, `r = 2ℓ+m`.

mod conjecture;
pub mod linalg;
mod poly;

pub use conjecture::{
    basis_candidates, conjecture_report, default_dmax, independence_check, spanning_check,
    spanning_set, CheckOptions, ConjectureReport, DegreeRecord, GradedReport, SpanConvention,
    SpanOutcome, SpanStatus, WitnessTerm,
};
pub use poly::{
    compositions_of, monomial_symmetric, p_of_mu, pm_poly, symmetric_shapes, Monomial, Poly,
};
