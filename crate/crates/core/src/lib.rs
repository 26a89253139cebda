//! Concordance invariants of L-space knots from semigroup data.
//!
//! An L-space knot K is encoded here by its enumerating function Γ_K(·),
//! the function listing the elements of the semigroup-like image attached
//! to the knot (for algebraic knots, the honest semigroup of the plane
//! curve singularity). From two such functions the crate computes, in
//! closed form, the invariant ν⁺(K # mirror L) and the full V-sequence of
//! the connected sum, and derives from them:
//!
//! - lower bounds for the genus of cobordisms between K and L,
//! - lower bounds for the Gordian distance and the unknotting-type
//!   invariants of K # mirror L,
//! - correction terms of positive integral surgeries,
//! - the counting-function semicontinuity obstruction to deformations of
//!   cusp singularities.
//!
//! Every closed formula is backed by an independent chain-level oracle
//! ([`oracle`]) that rebuilds the filtered tensor complex
//! reduced(K) ⊗ mirror-staircase(L) over a truncated coefficient ring and
//! reads the V-sequence off its homology by linear algebra over GF(2).

pub mod error;
mod gf2;
pub mod nu_plus;
pub mod obstructions;
pub mod oracle;
pub mod ratio;
pub mod semigroups;
pub mod staircase;

pub use error::{Error, Result};
pub use nu_plus::{
    min_index_for, nu_plus_sum, nu_plus_sum_unclamped, positive_part, surgery_d_invariants,
    v_sequence_single, v_sequence_sum, VSequence,
};
pub use obstructions::{
    check_genus_inequality, cobordism_genus_bound, concordance_bounds, counting_bound_holds,
    gordian_bound, semicontinuity, subadditivity_check, ConcordanceBounds, CountWitness,
    GenusInequalityCheck, GenusWitness, ObstructionReason, ObstructionReport, Verdict,
};
pub use oracle::{default_truncation, v_sequence_oracle, FilteredUComplex, TowerHomology};
pub use ratio::Ratio;
pub use semigroups::{AlexanderVector, CountingFunction, EnumeratingFunction, ValidationReport};
pub use staircase::{
    tower_chain, MirrorStaircaseModel, StaircaseDescriptor, TowerChain, TowerSummand,
};
