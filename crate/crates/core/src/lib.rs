//! Orbit sets of partitions whose sizes are Catalan and ballot numbers.
//!
//! Starting from a square partition `λ` (exactly `k` parts, `λ_1 = k`,
//! `λ_k = 1`) the descendant step
//!
//! ```text
//! d(μ) = {(μ:j) : 1 ≤ j ≤ μ_ℓ} ∪ {τ_{ℓ+1}(μ:1)}
//! ```
//!
//! grows a level set `P^ℓ(λ)` of partitions with `ℓ` parts bounded by `ℓ`.
//! Those level sets partition every box `P^ℓ`, carry an ordered tree
//! structure with a root-independent labeling, and are counted by Catalan
//! numbers. Seeding the same step with single parts `{(1), …, (m)}` gives
//! ballot numbers instead.
//!
//! The crate is `no_std` (it needs `alloc`). Modules:
//!
//! * [`partitions`]: the partition type, the rectangle complement `τ_k`
//!   and box enumeration.
//! * [`orbits`]: orbit construction, root classification, the cover check
//!   and the generalised `Q`-orbits.
//! * [`trees`]: ordered orbit trees, the canonical labeled tree and the
//!   isomorphism checks between them.
//! * [`counting`]: Catalan/ballot arithmetic, the `e_{ℓ,r}` tables and the
//!   two binomial identities.
//! * [`symfunc`]: exact sparse polynomials and the graded rank checker for
//!   the module `M(ℓ,m)` over symmetric polynomials.
#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod counting;
mod error;
pub mod orbits;
pub mod partitions;
pub mod symfunc;
pub mod trees;

pub use error::{Error, Result};
pub use partitions::Partition;
