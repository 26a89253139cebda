//! Geometric bounds derived from ν⁺: cobordism genus, Gordian distance,
//! unknotting-type invariants, genus-consistency of V-sequences, and the
//! semigroup-semicontinuity obstruction to deformations of cusp
//! singularities.
//!
//! A genus-g cobordism between K and L forces ν⁺(K # mirror L) ≤ g and
//! ν⁺(L # mirror K) ≤ g, so the larger of the two is a lower bound for the
//! cobordism genus, and their sum bounds the Gordian distance and the
//! unknotting-type invariants of K # mirror L from below. A deformation of
//! the cusp with semigroup Γ_K into the cusp with semigroup Γ_L produces a
//! cobordism of genus exactly δ_K − δ_L, which yields the counting-function
//! semicontinuity R_K(n) ≤ R_L(n).

use crate::error::{Error, Result};
use crate::nu_plus::{nu_plus_sum, v_sequence_single, v_sequence_sum, VSequence};
use crate::semigroups::EnumeratingFunction;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

/// Lower bound for the genus of any cobordism between K and L:
/// max of the two directional ν⁺ values.
pub fn cobordism_genus_bound(gamma_k: &EnumeratingFunction, gamma_l: &EnumeratingFunction) -> u64 {
    nu_plus_sum(gamma_k, gamma_l).max(nu_plus_sum(gamma_l, gamma_k))
}

/// Lower bound for the Gordian distance between K and L:
/// sum of the two directional ν⁺ values.
pub fn gordian_bound(gamma_k: &EnumeratingFunction, gamma_l: &EnumeratingFunction) -> u64 {
    nu_plus_sum(gamma_k, gamma_l) + nu_plus_sum(gamma_l, gamma_k)
}

/// Common lower bound for the unknotting-type invariants of K # mirror L:
/// unknotting number, concordance unknotting number, slicing number, and
/// 4-ball crossing number are all at least ν⁺(K#mL) + ν⁺(L#mK).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ConcordanceBounds {
    pub unknotting: u64,
    pub concordance_unknotting: u64,
    pub slicing: u64,
    pub four_ball_crossing: u64,
}

pub fn concordance_bounds(
    gamma_k: &EnumeratingFunction,
    gamma_l: &EnumeratingFunction,
) -> ConcordanceBounds {
    let bound = gordian_bound(gamma_k, gamma_l);
    ConcordanceBounds {
        unknotting: bound,
        concordance_unknotting: bound,
        slicing: bound,
        four_ball_crossing: bound,
    }
}

/// Outcome of checking V_{m+g}(K) ≤ V_m(L) for all m, the V-level
/// consequence of a genus-g cobordism from K to L.
///
/// With g = 1 this is the computable shadow of crossing-change
/// monotonicity: a single crossing change spans a genus-1 cobordism, so it
/// can move ν⁺ by at most one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GenusInequalityCheck {
    pub holds: bool,
    /// First m with V_{m+g}(K) > V_m(L), when the check fails.
    pub first_violation: Option<u64>,
    /// The consequence ν⁺(K) ≤ ν⁺(L) + g.
    pub nu_consequence: bool,
}

pub fn check_genus_inequality(v_k: &VSequence, v_l: &VSequence, g: u64) -> GenusInequalityCheck {
    let top = v_k.nu_plus().max(v_l.nu_plus()) + 1;
    let first_violation = (0..=top).find(|&m| v_k.at(m + g) > v_l.at(m));
    GenusInequalityCheck {
        holds: first_violation.is_none(),
        first_violation,
        nu_consequence: v_k.nu_plus() <= v_l.nu_plus() + g,
    }
}

/// Subadditivity of ν⁺ in the computable specialization K # mirror L, where
/// every V-value of mirror L vanishes: checks ν⁺(K # mL) ≤ ν⁺(K) and
/// V_m(K # mL) ≤ V_m(K) for all m.
pub fn subadditivity_check(gamma_k: &EnumeratingFunction, gamma_l: &EnumeratingFunction) -> bool {
    let single = v_sequence_single(gamma_k);
    let sum = v_sequence_sum(gamma_k, gamma_l);
    if sum.nu_plus() > single.nu_plus() {
        return false;
    }
    (0..=sum.nu_plus()).all(|m| sum.at(m) <= single.at(m))
}

/// Whether R_K(a + δ_K) ≤ R_L(a + δ_L + g) holds for every integer a, the
/// counting-function consequence of a genus-g cobordism from K to L.
///
/// The scan range is lossless: below it both sides vanish, above it both
/// counting functions grow by one per step and the difference is the
/// constant −g.
pub fn counting_bound_holds(
    gamma_k: &EnumeratingFunction,
    gamma_l: &EnumeratingFunction,
    genus: i64,
) -> bool {
    let delta_k = gamma_k.delta() as i64;
    let delta_l = gamma_l.delta() as i64;
    let pad = delta_k + delta_l + genus.abs() + 2;
    (-pad..=pad).all(|a| gamma_k.counting(a + delta_k) <= gamma_l.counting(a + delta_l + genus))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Allowed,
    Obstructed,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ObstructionReason {
    Semicontinuity,
    GenusBound,
    None,
}

/// A point n where the counting functions cross: R_central(n) > R_perturbed(n).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CountWitness {
    pub n: u64,
    pub count_central: u64,
    pub count_perturbed: u64,
}

/// The ν⁺ cobordism bound exceeding the genus budget δ_K − δ_L.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GenusWitness {
    pub nu_bound: u64,
    pub genus_budget: u64,
}

/// Verdict and witness data for a deformation check from the cusp with
/// function Γ_K (central) to the cusp with function Γ_L (perturbed).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ObstructionReport {
    pub verdict: Verdict,
    pub reason: ObstructionReason,
    pub semicontinuity_witness: Option<CountWitness>,
    pub genus_witness: Option<GenusWitness>,
    pub delta_k: u64,
    pub delta_l: u64,
    pub genus_budget: u64,
    pub nu_kl: u64,
    pub nu_lk: u64,
}

impl Serialize for ObstructionReport {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("ObstructionReport", 8)?;
        s.serialize_field("verdict", &self.verdict)?;
        s.serialize_field("reason", &self.reason)?;
        match self.reason {
            ObstructionReason::Semicontinuity => {
                let w = self.semicontinuity_witness.expect("witness matches reason");
                s.serialize_field("witness", &w.n)?;
            }
            ObstructionReason::GenusBound => {
                let w = self.genus_witness.expect("witness matches reason");
                s.serialize_field("witness", &(w.nu_bound, w.genus_budget))?;
            }
            ObstructionReason::None => {
                s.serialize_field("witness", &Option::<u64>::None)?;
            }
        }
        s.serialize_field("delta_k", &self.delta_k)?;
        s.serialize_field("delta_l", &self.delta_l)?;
        s.serialize_field("genus_budget", &self.genus_budget)?;
        s.serialize_field("nu_kl", &self.nu_kl)?;
        s.serialize_field("nu_lk", &self.nu_lk)?;
        s.end()
    }
}

/// Decide whether a deformation of the cusp singularity with semigroup Γ_K
/// into the one with semigroup Γ_L is obstructed.
///
/// Requires δ_K ≥ δ_L (the deformation's genus budget δ_K − δ_L must be
/// non-negative). Checks R_K(n) ≤ R_L(n) on the stable range [0, 2δ_K + 1]
/// and the ν⁺ cobordism bound against the genus budget.
pub fn semicontinuity(
    gamma_k: &EnumeratingFunction,
    gamma_l: &EnumeratingFunction,
) -> Result<ObstructionReport> {
    let (delta_k, delta_l) = (gamma_k.delta(), gamma_l.delta());
    if delta_k < delta_l {
        return Err(Error::NegativeGenusBudget {
            delta_central: delta_k,
            delta_perturbed: delta_l,
        });
    }
    let genus_budget = delta_k - delta_l;
    let nu_kl = nu_plus_sum(gamma_k, gamma_l);
    let nu_lk = nu_plus_sum(gamma_l, gamma_k);

    // beyond 2δ_K both counting functions grow in lockstep, so the scan
    // range is lossless
    let semicontinuity_witness = (0..=2 * delta_k + 1).find_map(|n| {
        let count_central = gamma_k.counting(n as i64);
        let count_perturbed = gamma_l.counting(n as i64);
        (count_central > count_perturbed).then_some(CountWitness {
            n,
            count_central,
            count_perturbed,
        })
    });

    let nu_bound = nu_kl.max(nu_lk);
    let genus_witness = (nu_bound > genus_budget).then_some(GenusWitness {
        nu_bound,
        genus_budget,
    });

    let reason = if semicontinuity_witness.is_some() {
        ObstructionReason::Semicontinuity
    } else if genus_witness.is_some() {
        ObstructionReason::GenusBound
    } else {
        ObstructionReason::None
    };
    Ok(ObstructionReport {
        verdict: if reason == ObstructionReason::None {
            Verdict::Allowed
        } else {
            Verdict::Obstructed
        },
        reason,
        semicontinuity_witness,
        genus_witness,
        delta_k,
        delta_l,
        genus_budget,
        nu_kl,
        nu_lk,
    })
}
