//! Closed-form ν⁺ and V-sequences of connected sums K # mirror(L) of
//! L-space knots, plus surgery correction terms.
//!
//! The two central formulas, both evaluated over a finite lossless scan
//! range because Γ(n) = n + δ for n ≥ δ:
//!
//! ν⁺(K # mirror L) = (δ_K − δ_L + max_n {Γ_L(n) − Γ_K(n)})₊
//!
//! min{i : V_i(K # mirror L) = m} = (δ_K − δ_L + max_n {Γ_L(n) − Γ_K(n+m)})₊
//!
//! the latter valid for m ≤ V_0. The full V-sequence is recovered by
//! inverting the second formula: V_i = min{m ≥ 0 : min_index(m) ≤ i}.

use crate::error::{Error, Result};
use crate::ratio::Ratio;
use crate::semigroups::EnumeratingFunction;
use serde::Serialize;

/// max(x, 0), the clamp shared by every bound in the crate.
pub fn positive_part(x: i64) -> u64 {
    x.max(0) as u64
}

/// A finitely supported V-sequence: non-increasing with unit steps,
/// eventually zero. Stored values end at the first zero.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VSequence {
    values: Vec<u64>,
    nu_plus: u64,
}

impl VSequence {
    /// Validate the axioms V_{i+1} ≤ V_i ≤ V_{i+1} + 1 and trim the tail to
    /// the first zero. The input must contain its zero tail.
    pub fn new(values: Vec<u64>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::InvalidVSequence {
                reason: "sequence is empty".to_owned(),
            });
        }
        for (i, w) in values.windows(2).enumerate() {
            if w[1] > w[0] || w[0] > w[1] + 1 {
                return Err(Error::InvalidVSequence {
                    reason: format!("V_{} = {} followed by V_{} = {}", i, w[0], i + 1, w[1]),
                });
            }
        }
        if *values.last().expect("non-empty") != 0 {
            return Err(Error::InvalidVSequence {
                reason: "sequence must reach 0".to_owned(),
            });
        }
        let first_zero = values
            .iter()
            .position(|&v| v == 0)
            .expect("last value is zero");
        let values = values[..=first_zero].to_vec();
        Ok(VSequence {
            nu_plus: first_zero as u64,
            values,
        })
    }

    /// V_i, reading indices beyond the stored support as 0.
    pub fn at(&self, i: u64) -> u64 {
        self.values.get(i as usize).copied().unwrap_or(0)
    }

    /// Stored values V_0, …, V_{ν⁺}.
    pub fn values(&self) -> &[u64] {
        &self.values
    }

    /// The minimal index i with V_i = 0.
    pub fn nu_plus(&self) -> u64 {
        self.nu_plus
    }
}

/// δ_K − δ_L + max_n {Γ_L(n) − Γ_K(n)} before clamping. The maximum is
/// scanned on n ∈ [0, max(δ_K, δ_L)]; beyond, the objective is the constant
/// δ_L − δ_K, so the value is always at least 0.
pub fn nu_plus_sum_unclamped(gamma_k: &EnumeratingFunction, gamma_l: &EnumeratingFunction) -> i64 {
    min_index_unclamped(gamma_k, gamma_l, 0)
}

/// ν⁺(K # mirror L) from the enumerating functions of K and L.
pub fn nu_plus_sum(gamma_k: &EnumeratingFunction, gamma_l: &EnumeratingFunction) -> u64 {
    positive_part(nu_plus_sum_unclamped(gamma_k, gamma_l))
}

fn min_index_unclamped(
    gamma_k: &EnumeratingFunction,
    gamma_l: &EnumeratingFunction,
    m: u64,
) -> i64 {
    let scan_top = gamma_k.delta().max(gamma_l.delta()) + m;
    let best = (0..=scan_top)
        .map(|n| gamma_l.evaluate(n) as i64 - gamma_k.evaluate(n + m) as i64)
        .max()
        .expect("scan range is non-empty");
    gamma_k.delta() as i64 - gamma_l.delta() as i64 + best
}

/// Least m with V_m-threshold reaching zero index, i.e. V_0(K # mirror L).
fn v_zero(gamma_k: &EnumeratingFunction, gamma_l: &EnumeratingFunction) -> u64 {
    let cap = gamma_k.delta() + gamma_l.delta() + 2;
    for m in 0..=cap {
        if min_index_unclamped(gamma_k, gamma_l, m) <= 0 {
            return m;
        }
    }
    unreachable!("V_0 is bounded by the total genus");
}

/// min{i : V_i(K # mirror L) = m}, valid for m ≤ V_0(K # mirror L).
pub fn min_index_for(
    gamma_k: &EnumeratingFunction,
    gamma_l: &EnumeratingFunction,
    m: u64,
) -> Result<u64> {
    let v0 = v_zero(gamma_k, gamma_l);
    if m > v0 {
        return Err(Error::IndexAboveVZero { m, v0 });
    }
    Ok(positive_part(min_index_unclamped(gamma_k, gamma_l, m)))
}

/// The full V-sequence of K # mirror L, by inverting `min_index_for`:
/// V_i = min{m ≥ 0 : min_index(m) ≤ i}.
pub fn v_sequence_sum(gamma_k: &EnumeratingFunction, gamma_l: &EnumeratingFunction) -> VSequence {
    let v0 = v_zero(gamma_k, gamma_l);
    let first_index: Vec<u64> = (0..=v0)
        .map(|m| positive_part(min_index_unclamped(gamma_k, gamma_l, m)))
        .collect();
    let nu = first_index[0];
    let values: Vec<u64> = (0..=nu)
        .map(|i| {
            first_index
                .iter()
                .position(|&j| j <= i)
                .expect("min_index(V_0) = 0") as u64
        })
        .collect();
    VSequence::new(values).expect("the closed form satisfies the V-sequence axioms")
}

/// V-sequence of a single L-space knot K, i.e. of K # mirror(unknot);
/// here ν⁺(K) = δ_K.
pub fn v_sequence_single(gamma_k: &EnumeratingFunction) -> VSequence {
    let seq = v_sequence_sum(gamma_k, &EnumeratingFunction::unknot());
    debug_assert_eq!(seq.nu_plus(), gamma_k.delta());
    seq
}

/// Correction terms of +n surgery: for i ∈ [0, n),
/// d(S³_n(K), t_i) = −2·max{V_i, V_{n−i}} + ((n−2i)² − n) / 4n,
/// in the convention where d(S³) = 0.
pub fn surgery_d_invariants(v: &VSequence, n: u64) -> Result<Vec<Ratio>> {
    if n == 0 {
        return Err(Error::NonPositiveSurgery { n });
    }
    let n_i = n as i64;
    Ok((0..n)
        .map(|i| {
            let vmax = v.at(i).max(v.at(n - i)) as i64;
            let quad = (n_i - 2 * i as i64).pow(2) - n_i;
            Ratio::new(quad - 8 * vmax * n_i, 4 * n_i)
        })
        .collect())
}
