//! Staircase corner data of an L-space knot and its mirror model.
//!
//! The corner sequence {a_k} is the image of n ↦ Γ(n) − n, and
//! a'_k = δ − a_{d+1−k} records the U-powers at which the corners sit. The
//! mirror (dual) staircase complex has generators y*_0, …, y*_{2d−2} with
//! Alexander degrees −α_m, where α is the Alexander exponent list; the sum
//! Σ_k U^{a'_k} y_k over the even-index corner generators y_k = y*_{2(k−1)}
//! is a cycle generating the homology tower.
//!
//! Tensoring the reduced complex of a knot K against the mirror staircase of
//! L concentrates the tower in the chain z = Σ_k x_{a'_k} ⊗ y_k, whose
//! maximal Alexander degree M computes ν⁺(K # mirror L) after clamping at 0.

use crate::semigroups::EnumeratingFunction;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

/// Corner data {a_k}, {a'_k} of the staircase complex of an L-space knot.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StaircaseDescriptor {
    delta: u64,
    a: Vec<u64>,
    a_prime: Vec<u64>,
}

impl StaircaseDescriptor {
    /// Read the corner data off an enumerating function.
    pub fn from_gamma(gamma: &EnumeratingFunction) -> Self {
        let delta = gamma.delta();
        let mut a = Vec::new();
        for n in 0..=delta {
            let v = gamma.evaluate(n) - n;
            if a.last() != Some(&v) {
                a.push(v);
            }
        }
        debug_assert_eq!(a[0], 0);
        debug_assert_eq!(*a.last().expect("non-empty"), delta);
        let d = a.len();
        let a_prime: Vec<u64> = (0..d).map(|k| delta - a[d - 1 - k]).collect();
        // duality: Γ(a'_k) − a'_k = a_k
        debug_assert!((0..d).all(|k| gamma.evaluate(a_prime[k]) - a_prime[k] == a[k]));
        StaircaseDescriptor { delta, a, a_prime }
    }

    /// Number of corner generators.
    pub fn d(&self) -> usize {
        self.a.len()
    }

    pub fn a(&self) -> &[u64] {
        &self.a
    }

    pub fn a_prime(&self) -> &[u64] {
        &self.a_prime
    }

    pub fn delta(&self) -> u64 {
        self.delta
    }

    /// The dual staircase complex of the mirror knot.
    pub fn mirror_model(&self) -> MirrorStaircaseModel {
        let d = self.d();
        let delta = self.delta as i64;
        let mut alexander = vec![0i64; 2 * d - 1];
        for k in 0..d {
            alexander[2 * k] = delta - self.a[k] as i64 - self.a_prime[k] as i64;
        }
        for k in 0..d - 1 {
            alexander[2 * k + 1] =
                alexander[2 * k] - (self.a_prime[k + 1] as i64 - self.a_prime[k] as i64);
        }
        debug_assert!(alexander.windows(2).all(|w| w[0] > w[1]));
        debug_assert!((0..2 * d - 1).all(|m| alexander[m] == -alexander[2 * d - 2 - m]));
        MirrorStaircaseModel {
            delta: self.delta,
            a: self.a.clone(),
            a_prime: self.a_prime.clone(),
            alexander,
        }
    }
}

impl Serialize for StaircaseDescriptor {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("StaircaseDescriptor", 4)?;
        s.serialize_field("d", &self.d())?;
        s.serialize_field("a", &self.a)?;
        s.serialize_field("a_prime", &self.a_prime)?;
        s.serialize_field("delta", &self.delta)?;
        s.end()
    }
}

/// One term U^u_power · y*_target of a differential.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DifferentialTerm {
    pub u_power: u64,
    pub target: usize,
}

/// A corner generator y_k = y*_{2(k−1)} together with the U-power a'_k it
/// carries inside the tower cycle Σ_k U^{a'_k} y_k.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CornerGenerator {
    /// Index of the generator in the model (always even).
    pub generator: usize,
    /// U-power a'_k of this corner in the tower cycle.
    pub u_shift: u64,
    /// Alexander degree a_k + a'_k − δ of the corner generator.
    pub degree: i64,
}

/// The staircase complex of the mirror of an L-space knot: generators
/// y*_0, …, y*_{2d−2} dual to the positive staircase, with Alexander degree
/// A(y*_m) = −α_m and, for even m,
/// ∂ y*_m = U^(α_m − α_{m+1}) y*_{m+1} + y*_{m−1}
/// (terms with an out-of-range index dropped).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MirrorStaircaseModel {
    delta: u64,
    a: Vec<u64>,
    a_prime: Vec<u64>,
    alexander: Vec<i64>,
}

impl MirrorStaircaseModel {
    /// Number of generators, 2d−1.
    pub fn generator_count(&self) -> usize {
        self.alexander.len()
    }

    /// Alexander degree of y*_m, namely −α_m.
    pub fn generator_degree(&self, m: usize) -> i64 {
        -self.alexander[m]
    }

    /// Differential of y*_m; empty for odd m.
    pub fn differential(&self, m: usize) -> Vec<DifferentialTerm> {
        if m % 2 == 1 {
            return Vec::new();
        }
        let mut terms = Vec::new();
        if m + 1 < self.alexander.len() {
            terms.push(DifferentialTerm {
                u_power: (self.alexander[m] - self.alexander[m + 1]) as u64,
                target: m + 1,
            });
        }
        if m >= 1 {
            terms.push(DifferentialTerm {
                u_power: 0,
                target: m - 1,
            });
        }
        terms
    }

    /// The d even-index corner generators, in staircase order.
    pub fn corner_generators(&self) -> Vec<CornerGenerator> {
        (0..self.a.len())
            .map(|k| CornerGenerator {
                generator: 2 * k,
                u_shift: self.a_prime[k],
                degree: self.a[k] as i64 + self.a_prime[k] as i64 - self.delta as i64,
            })
            .collect()
    }

    /// Alexander exponents α of the underlying (positive) knot, recovered
    /// from the corner data.
    pub fn alexander_exponents(&self) -> &[i64] {
        &self.alexander
    }

    pub fn delta(&self) -> u64 {
        self.delta
    }
}

/// A summand x_{a'_k} ⊗ y_k of the tower chain and its Alexander degree
/// δ_K − Γ_K(a'_k) + a_k + a'_k − δ_L.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TowerSummand {
    /// Corner index k (0-based).
    pub corner: usize,
    pub degree: i64,
}

/// The chain z = Σ_k x_{a'_k} ⊗ y_k generating the tower of the tensor
/// complex of K against the mirror staircase of L.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TowerChain {
    summands: Vec<TowerSummand>,
    max_degree: i64,
}

impl TowerChain {
    pub fn summands(&self) -> &[TowerSummand] {
        &self.summands
    }

    /// M, the maximal Alexander degree in the chain; ν⁺ of the connected
    /// sum is M clamped at 0.
    pub fn max_degree(&self) -> i64 {
        self.max_degree
    }
}

/// Build the tower chain of reduced(K) ⊗ mirror-staircase(L).
pub fn tower_chain(gamma_k: &EnumeratingFunction, staircase_l: &StaircaseDescriptor) -> TowerChain {
    let delta_k = gamma_k.delta() as i64;
    let delta_l = staircase_l.delta() as i64;
    let summands: Vec<TowerSummand> = (0..staircase_l.d())
        .map(|k| {
            let a = staircase_l.a()[k] as i64;
            let a_prime = staircase_l.a_prime()[k];
            TowerSummand {
                corner: k,
                degree: delta_k - gamma_k.evaluate(a_prime) as i64 + a + a_prime as i64 - delta_l,
            }
        })
        .collect();
    let max_degree = summands
        .iter()
        .map(|s| s.degree)
        .max()
        .expect("a staircase has at least one corner");
    TowerChain {
        summands,
        max_degree,
    }
}
