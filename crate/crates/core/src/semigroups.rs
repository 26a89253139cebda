//! Enumerating functions of L-space knots.
//!
//! The enumerating function Γ(·) of an L-space knot K lists the elements of
//! a cofinite subset of ℕ in increasing order: Γ(0) = 0, and the complement
//! of the image has exactly δ elements (δ = Seifert genus), the largest
//! being 2δ−1. For an algebraic knot the image is the semigroup of the
//! corresponding plane curve singularity; for a general L-space knot the
//! image need not be closed under addition, but it is still gap-symmetric:
//! m lies in the image exactly when 2δ−1−m does not.
//!
//! Since Γ(n) − n is non-decreasing and reaches its maximum δ at n = δ, the
//! prefix Γ(0..=δ) together with the tail rule Γ(n) = n + δ determines Γ
//! everywhere, and that prefix is all we store.

use crate::error::{Error, Result};
use crate::ratio::gcd;
use serde::Serialize;

/// The enumerating function of an L-space knot, stored as the prefix
/// Γ(0..=δ) plus the tail rule Γ(n) = n + δ.
#[derive(Debug, Clone, Serialize)]
pub struct EnumeratingFunction {
    label: Option<String>,
    delta: u64,
    prefix: Vec<u64>,
    semigroup_closed: bool,
}

/// Two enumerating functions are equal when they agree as functions; the
/// display label is ignored.
impl PartialEq for EnumeratingFunction {
    fn eq(&self, other: &Self) -> bool {
        self.delta == other.delta
            && self.prefix == other.prefix
            && self.semigroup_closed == other.semigroup_closed
    }
}

impl Eq for EnumeratingFunction {}

impl EnumeratingFunction {
    /// The unknot: Γ(n) = n, δ = 0.
    pub fn unknot() -> Self {
        EnumeratingFunction {
            label: Some("U".to_owned()),
            delta: 0,
            prefix: vec![0],
            semigroup_closed: true,
        }
    }

    /// Semigroup of the torus knot T(p,q), generated by p and q.
    ///
    /// δ is computed from the generated gap set; the closed form
    /// (p−1)(q−1)/2 is kept as a cross-check only.
    pub fn torus(p: u64, q: u64) -> Result<Self> {
        if p < 2 || q < 2 {
            return Err(Error::TorusParameterTooSmall { p, q });
        }
        let g = gcd(p, q);
        if g != 1 {
            return Err(Error::GeneratorsNotCoprime { gcd: g });
        }
        let mut ef = Self::from_generators(&[p, q])?;
        assert_eq!(
            ef.delta,
            (p - 1) * (q - 1) / 2,
            "gap count of <{p},{q}> disagrees with (p-1)(q-1)/2"
        );
        ef.label = Some(format!("T({p},{q})"));
        Ok(ef)
    }

    /// Enumerating function of the numerical semigroup generated by `gens`.
    ///
    /// The generators must be positive with overall gcd 1, and the resulting
    /// semigroup must be symmetric (gap-symmetric about 2δ−1); asymmetric
    /// semigroups do not arise from L-space knots and are rejected.
    pub fn from_generators(gens: &[u64]) -> Result<Self> {
        if gens.is_empty() || gens.contains(&0) {
            return Err(Error::InvalidGenerators);
        }
        let overall = gens.iter().fold(0, |acc, &g| gcd(acc, g));
        if overall != 1 {
            return Err(Error::GeneratorsNotCoprime { gcd: overall });
        }
        let smallest = *gens.iter().min().expect("non-empty") as usize;
        let largest = *gens.iter().max().expect("non-empty") as usize;

        // Sieve reachable sums until a run of `smallest` consecutive
        // elements appears; everything past the run start is reachable.
        let mut bound = (smallest * largest + 2).max(64);
        let (reach, conductor) = loop {
            let mut reach = vec![false; bound];
            reach[0] = true;
            for i in 1..bound {
                for &g in gens {
                    let g = g as usize;
                    if g <= i && reach[i - g] {
                        reach[i] = true;
                        break;
                    }
                }
            }
            let run_start =
                (0..bound - smallest).find(|&c| reach[c..c + smallest].iter().all(|&b| b));
            match run_start {
                Some(c) => break (reach, c),
                None => bound *= 2,
            }
        };

        let in_image = |m: usize| m >= conductor || reach[m];
        let delta = (0..conductor).filter(|&m| !reach[m]).count() as u64;

        // Gap symmetry about 2δ−1 is forced for L-space knots.
        let span = 2 * delta as usize;
        for m in 0..span {
            if in_image(m) == in_image(span - 1 - m) {
                return Err(Error::NotGapSymmetric {
                    m: m as u64,
                    mirror: (span - 1 - m) as u64,
                });
            }
        }

        let prefix: Vec<u64> = (0..)
            .filter(|&m| in_image(m))
            .take(delta as usize + 1)
            .map(|m| m as u64)
            .collect();

        Ok(EnumeratingFunction {
            label: None,
            delta,
            prefix,
            // the image is generated as a semigroup, hence closed
            semigroup_closed: true,
        })
    }

    /// Enumerating function read off an Alexander exponent list: the
    /// generating series of the image equals the lowest-exponent-normalized
    /// polynomial divided by 1−t.
    pub fn from_alexander(poly: &AlexanderVector) -> Result<Self> {
        let delta = poly.delta();
        let top = 2 * delta as usize;
        let mut coeff = vec![0i64; top + 1];
        for (m, &e) in poly.exponents().iter().enumerate() {
            let degree = (e + delta as i64) as usize;
            coeff[degree] = if m % 2 == 0 { 1 } else { -1 };
        }

        let mut membership = vec![false; top + 1];
        let mut sum = 0i64;
        for (degree, &c) in coeff.iter().enumerate() {
            sum += c;
            if sum != 0 && sum != 1 {
                return Err(Error::NotStaircase { degree, sum });
            }
            membership[degree] = sum == 1;
        }

        let prefix: Vec<u64> = (0..=top)
            .filter(|&m| membership[m])
            .map(|m| m as u64)
            .collect();
        debug_assert_eq!(prefix.len(), delta as usize + 1);

        let semigroup_closed = closure_holds(&prefix, delta);
        let ef = EnumeratingFunction {
            label: None,
            delta,
            prefix,
            semigroup_closed,
        };
        debug_assert!(ef.validate().gap_symmetric);
        Ok(ef)
    }

    /// Build from raw prefix data Γ(0..=δ), validating every invariant.
    pub fn from_prefix(prefix: Vec<u64>, delta: u64) -> Result<Self> {
        if prefix.len() as u64 != delta + 1 {
            return Err(Error::InvalidPrefix {
                reason: format!(
                    "need delta+1 = {} values for Γ(0..=delta), got {}",
                    delta + 1,
                    prefix.len()
                ),
            });
        }
        if prefix[0] != 0 {
            return Err(Error::InvalidPrefix {
                reason: format!("Γ(0) must be 0, got {}", prefix[0]),
            });
        }
        if !prefix.windows(2).all(|w| w[0] < w[1]) {
            return Err(Error::InvalidPrefix {
                reason: "values must be strictly increasing".to_owned(),
            });
        }
        if prefix[delta as usize] != 2 * delta {
            return Err(Error::InvalidPrefix {
                reason: format!(
                    "Γ(delta) must equal 2*delta = {}, got {}",
                    2 * delta,
                    prefix[delta as usize]
                ),
            });
        }
        let semigroup_closed = closure_holds(&prefix, delta);
        let ef = EnumeratingFunction {
            label: None,
            delta,
            prefix,
            semigroup_closed,
        };
        // strict increase from 0 with Γ(δ) = 2δ pins the gap count at δ,
        // but symmetry of the gaps is a genuine extra condition
        for m in 0..2 * delta {
            if ef.contains(m) == ef.contains(2 * delta - 1 - m) {
                return Err(Error::NotGapSymmetric {
                    m,
                    mirror: 2 * delta - 1 - m,
                });
            }
        }
        Ok(ef)
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    /// Γ(n): the n-th smallest element of the image.
    pub fn evaluate(&self, n: u64) -> u64 {
        if n <= self.delta {
            self.prefix[n as usize]
        } else {
            n + self.delta
        }
    }

    /// R(n) = #([0,n) ∩ image), with R(n) = 0 for n ≤ 0.
    pub fn counting(&self, n: i64) -> u64 {
        if n <= 0 {
            return 0;
        }
        let n = n as u64;
        let in_prefix = self.prefix.partition_point(|&x| x < n) as u64;
        in_prefix + n.saturating_sub(2 * self.delta + 1)
    }

    /// View of this function as its counting function R.
    pub fn counting_function(&self) -> CountingFunction<'_> {
        CountingFunction { gamma: self }
    }

    /// Membership of `value` in the image of Γ.
    pub fn contains(&self, value: u64) -> bool {
        value >= 2 * self.delta || self.prefix.binary_search(&value).is_ok()
    }

    /// The δ gaps: complement of the image below 2δ.
    pub fn gaps(&self) -> Vec<u64> {
        (0..2 * self.delta).filter(|&m| !self.contains(m)).collect()
    }

    pub fn delta(&self) -> u64 {
        self.delta
    }

    /// Seifert genus; equal to δ for L-space knots.
    pub fn genus(&self) -> u64 {
        self.delta
    }

    pub fn prefix(&self) -> &[u64] {
        &self.prefix
    }

    pub fn semigroup_closed(&self) -> bool {
        self.semigroup_closed
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    /// Symmetric Alexander exponent list of the knot: the nonzero terms of
    /// (1−t)·Σ_{s in image} t^s, re-centered at δ and listed descending.
    pub fn to_alexander(&self) -> AlexanderVector {
        let top = 2 * self.delta;
        let mut exponents = Vec::new();
        for k in (0..=top).rev() {
            let here = self.contains(k);
            let below = k > 0 && self.contains(k - 1);
            if here != below {
                exponents.push(k as i64 - self.delta as i64);
            }
        }
        AlexanderVector::new(exponents)
            .expect("an enumerating function always yields a valid symmetric exponent list")
    }

    /// Re-check every structural invariant from the stored data.
    pub fn validate(&self) -> ValidationReport {
        let monotone = !self.prefix.is_empty()
            && self.prefix[0] == 0
            && self.prefix.len() as u64 == self.delta + 1
            && self.prefix.windows(2).all(|w| w[0] < w[1]);
        let tail_rule = monotone && self.prefix[self.delta as usize] == 2 * self.delta;
        let gap_symmetric = monotone
            && (0..2 * self.delta)
                .all(|m| self.contains(m) != self.contains(2 * self.delta - 1 - m));
        let semigroup_closed = closure_holds(&self.prefix, self.delta);
        ValidationReport {
            monotone,
            gap_symmetric,
            tail_rule,
            semigroup_closed,
            flag_consistent: semigroup_closed == self.semigroup_closed,
        }
    }
}

/// Exhaustive sum-closure check on [0, 2δ): beyond 2δ−1 everything is in the
/// image, so only small sums can escape.
fn closure_holds(prefix: &[u64], delta: u64) -> bool {
    let span = 2 * delta;
    let small: Vec<u64> = prefix
        .iter()
        .copied()
        .filter(|&x| x > 0 && x < span)
        .collect();
    let member = |v: u64| prefix.binary_search(&v).is_ok();
    for (i, &a) in small.iter().enumerate() {
        for &b in &small[i..] {
            let s = a + b;
            if s < span && !member(s) {
                return false;
            }
        }
    }
    true
}

/// Outcome of re-validating an [`EnumeratingFunction`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    /// Γ(0) = 0 and strictly increasing with a prefix of length δ+1.
    pub monotone: bool,
    /// m in image ⟺ 2δ−1−m not in image, for m below 2δ.
    pub gap_symmetric: bool,
    /// Γ(δ) = 2δ, so the stored prefix meets the tail rule Γ(n) = n+δ.
    pub tail_rule: bool,
    /// Recomputed sum-closure status of the image.
    pub semigroup_closed: bool,
    /// Stored closure flag agrees with the recomputed one.
    pub flag_consistent: bool,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.monotone && self.gap_symmetric && self.tail_rule && self.flag_consistent
    }
}

/// The counting function R(n) = #([0,n) ∩ image Γ) as a view.
#[derive(Debug, Clone, Copy)]
pub struct CountingFunction<'a> {
    gamma: &'a EnumeratingFunction,
}

impl CountingFunction<'_> {
    pub fn at(&self, n: i64) -> u64 {
        self.gamma.counting(n)
    }
}

/// Symmetric Alexander exponent list α_0 > α_1 > … > α_{2d−2} with
/// α_m = −α_{2d−2−m}; the coefficient of t^{α_m} is (−1)^m, so the signs are
/// implicit in the positions.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct AlexanderVector {
    exponents: Vec<i64>,
}

impl AlexanderVector {
    /// Validate shape: odd length, strictly decreasing, symmetric.
    pub fn new(exponents: Vec<i64>) -> Result<Self> {
        if exponents.is_empty() {
            return Err(Error::InvalidAlexanderVector {
                reason: "exponent list is empty".to_owned(),
            });
        }
        if exponents.len().is_multiple_of(2) {
            return Err(Error::InvalidAlexanderVector {
                reason: format!("need an odd number of exponents, got {}", exponents.len()),
            });
        }
        if !exponents.windows(2).all(|w| w[0] > w[1]) {
            return Err(Error::InvalidAlexanderVector {
                reason: "exponents must be strictly decreasing".to_owned(),
            });
        }
        let n = exponents.len();
        for m in 0..n {
            if exponents[m] != -exponents[n - 1 - m] {
                return Err(Error::InvalidAlexanderVector {
                    reason: format!(
                        "not symmetric: exponent {} at position {} vs {} at position {}",
                        exponents[m],
                        m,
                        exponents[n - 1 - m],
                        n - 1 - m
                    ),
                });
            }
        }
        Ok(AlexanderVector { exponents })
    }

    /// Dense surface form: `coeffs[k]` is the coefficient of
    /// t^(lowest_exponent + k). The running sums of the coefficients must
    /// stay in {0, 1}, which forces alternating ±1 signs; anything else is
    /// not an L-space knot polynomial.
    pub fn from_coefficients(lowest_exponent: i64, coeffs: &[i64]) -> Result<Self> {
        if coeffs.is_empty() || coeffs[0] == 0 || *coeffs.last().expect("non-empty") == 0 {
            return Err(Error::InvalidAlexanderVector {
                reason: "coefficient list must be non-empty with nonzero endpoints".to_owned(),
            });
        }
        let mut sum = 0i64;
        for (degree, &c) in coeffs.iter().enumerate() {
            sum += c;
            if sum != 0 && sum != 1 {
                return Err(Error::NotStaircase { degree, sum });
            }
        }
        if sum != 1 {
            return Err(Error::InvalidAlexanderVector {
                reason: format!("coefficients must sum to 1, got {sum}"),
            });
        }
        let exponents: Vec<i64> = coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|&(_, &c)| c != 0)
            .map(|(k, _)| lowest_exponent + k as i64)
            .collect();
        Self::new(exponents)
    }

    pub fn exponents(&self) -> &[i64] {
        &self.exponents
    }

    /// α_0, the top exponent; equals δ of the corresponding Γ.
    pub fn delta(&self) -> u64 {
        self.exponents[0] as u64
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent brute-force generation of {a1 g1 + … + ak gk}, used to
    /// freeze expected prefixes and gap counts.
    fn brute_elements(gens: &[u64], upto: u64) -> Vec<u64> {
        let mut reach = vec![false; upto as usize + 1];
        reach[0] = true;
        for i in 1..=upto as usize {
            for &g in gens {
                if g as usize <= i && reach[i - g as usize] {
                    reach[i] = true;
                }
            }
        }
        (0..=upto).filter(|&i| reach[i as usize]).collect()
    }

    fn torus(p: u64, q: u64) -> EnumeratingFunction {
        EnumeratingFunction::torus(p, q).unwrap()
    }

    #[test]
    fn torus_3_7_matches_brute_force() {
        let ef = torus(3, 7);
        assert_eq!(ef.delta(), 6);
        assert!(ef.semigroup_closed());
        assert_eq!(ef.prefix(), &[0, 3, 6, 7, 9, 10, 12]);
        let brute = brute_elements(&[3, 7], 12);
        assert_eq!(ef.prefix(), brute.as_slice());
    }

    #[test]
    fn torus_2_3_is_smallest_cusp() {
        let ef = torus(2, 3);
        assert_eq!(ef.delta(), 1);
        assert_eq!(ef.prefix(), &[0, 2]);
        assert_eq!(ef.evaluate(2), 3);
        assert_eq!(ef.gaps(), vec![1]);
    }

    #[test]
    fn torus_4_5_prefix() {
        let ef = torus(4, 5);
        assert_eq!(ef.delta(), 6);
        assert_eq!(ef.evaluate(1), 4);
        assert_eq!(ef.evaluate(2), 5);
        assert_eq!(ef.evaluate(3), 8);
        assert_eq!(ef.gaps(), vec![1, 2, 3, 6, 7, 11]);
    }

    #[test]
    fn torus_rejects_bad_parameters() {
        assert_eq!(
            EnumeratingFunction::torus(4, 6),
            Err(Error::GeneratorsNotCoprime { gcd: 2 })
        );
        assert_eq!(
            EnumeratingFunction::torus(1, 5),
            Err(Error::TorusParameterTooSmall { p: 1, q: 5 })
        );
    }

    #[test]
    fn generators_one_gives_unknot() {
        let ef = EnumeratingFunction::from_generators(&[1]).unwrap();
        assert_eq!(ef, EnumeratingFunction::unknot());
        assert_eq!(ef.delta(), 0);
        for n in 0..10 {
            assert_eq!(ef.evaluate(n), n);
        }
    }

    #[test]
    fn generators_6_7() {
        let ef = EnumeratingFunction::from_generators(&[6, 7]).unwrap();
        assert_eq!(ef.delta(), 15);
        assert_eq!(&ef.prefix()[..7], &[0, 6, 7, 12, 13, 14, 18]);
        assert_eq!(ef.prefix(), brute_elements(&[6, 7], 30).as_slice());
    }

    #[test]
    fn generators_4_9() {
        let ef = EnumeratingFunction::from_generators(&[4, 9]).unwrap();
        assert_eq!(ef.delta(), 12);
        assert_eq!(&ef.prefix()[..7], &[0, 4, 8, 9, 12, 13, 16]);
        assert_eq!(ef.prefix(), brute_elements(&[4, 9], 24).as_slice());
    }

    #[test]
    fn generators_reject_non_coprime_and_empty() {
        assert_eq!(
            EnumeratingFunction::from_generators(&[4, 6]),
            Err(Error::GeneratorsNotCoprime { gcd: 2 })
        );
        assert_eq!(
            EnumeratingFunction::from_generators(&[]),
            Err(Error::InvalidGenerators)
        );
        assert_eq!(
            EnumeratingFunction::from_generators(&[0, 3]),
            Err(Error::InvalidGenerators)
        );
    }

    #[test]
    fn generators_reject_asymmetric_semigroup() {
        // <3,5,7> has gaps {1,2,4}, largest gap 4 < 2δ−1 = 5
        let err = EnumeratingFunction::from_generators(&[3, 5, 7]).unwrap_err();
        assert!(matches!(err, Error::NotGapSymmetric { .. }));
    }

    #[test]
    fn multi_generator_semigroup_without_coprime_pair() {
        // gcd(6,10)=2, gcd(6,15)=3, gcd(10,15)=5, but overall gcd is 1;
        // <6,10,15> = {0,6,10,12,15,16,18,20,...}, 15 gaps, F = 29
        let ef = EnumeratingFunction::from_generators(&[6, 10, 15]).unwrap();
        assert_eq!(ef.delta(), 15);
        assert_eq!(ef.prefix(), brute_elements(&[6, 10, 15], 30).as_slice());
        assert!(!ef.gaps().contains(&28));
        assert!(ef.gaps().contains(&29));
    }

    #[test]
    fn pretzel_12n242_from_alexander() {
        let poly = AlexanderVector::new(vec![5, 4, 2, 1, 0, -1, -2, -4, -5]).unwrap();
        let ef = EnumeratingFunction::from_alexander(&poly).unwrap();
        assert_eq!(ef.delta(), 5);
        let values: Vec<u64> = (0..8).map(|n| ef.evaluate(n)).collect();
        assert_eq!(values, vec![0, 3, 5, 7, 8, 10, 11, 12]);
        // 3 is in the image but 3+3 = 6 is not, so the image is not a semigroup
        assert!(ef.contains(3));
        assert!(!ef.contains(6));
        assert!(!ef.semigroup_closed());
    }

    #[test]
    fn trefoil_from_alexander() {
        let poly = AlexanderVector::new(vec![1, 0, -1]).unwrap();
        let ef = EnumeratingFunction::from_alexander(&poly).unwrap();
        assert_eq!(ef, torus(2, 3));
    }

    #[test]
    fn unknot_from_alexander() {
        let poly = AlexanderVector::new(vec![0]).unwrap();
        let ef = EnumeratingFunction::from_alexander(&poly).unwrap();
        assert_eq!(ef, EnumeratingFunction::unknot());
    }

    #[test]
    fn dense_coefficients_normalize() {
        // t^-5 - t^-4 + t^-2 - t^-1 + 1 - t + t^2 - t^4 + t^5
        let poly =
            AlexanderVector::from_coefficients(-5, &[1, -1, 0, 1, -1, 1, -1, 1, 0, -1, 1]).unwrap();
        assert_eq!(poly.exponents(), &[5, 4, 2, 1, 0, -1, -2, -4, -5]);
    }

    #[test]
    fn dense_coefficients_reject_non_staircase() {
        // square of the trefoil polynomial: partial sums leave {0,1}
        let err = AlexanderVector::from_coefficients(-2, &[1, -2, 3, -2, 1]).unwrap_err();
        assert!(matches!(err, Error::NotStaircase { .. }));
    }

    #[test]
    fn alexander_vector_shape_errors() {
        assert!(AlexanderVector::new(vec![]).is_err());
        assert!(AlexanderVector::new(vec![2, 1, -1, -2]).is_err());
        assert!(AlexanderVector::new(vec![2, 1, 0]).is_err());
        assert!(AlexanderVector::new(vec![1, 2, -1, -2, 0]).is_err());
    }

    #[test]
    fn to_alexander_of_t45() {
        let poly = torus(4, 5).to_alexander();
        assert_eq!(poly.exponents(), &[6, 5, 2, 0, -2, -5, -6]);
    }

    #[test]
    fn to_alexander_of_unknot() {
        assert_eq!(
            EnumeratingFunction::unknot().to_alexander().exponents(),
            &[0]
        );
    }

    #[test]
    fn alexander_round_trips() {
        let poly = AlexanderVector::new(vec![5, 4, 2, 1, 0, -1, -2, -4, -5]).unwrap();
        let ef = EnumeratingFunction::from_alexander(&poly).unwrap();
        assert_eq!(ef.to_alexander(), poly);
        for (p, q) in [(2, 3), (3, 4), (3, 7), (4, 5), (6, 7)] {
            let ef = torus(p, q);
            assert_eq!(
                EnumeratingFunction::from_alexander(&ef.to_alexander()).unwrap(),
                ef
            );
        }
    }

    #[test]
    fn evaluate_examples() {
        assert_eq!(torus(3, 7).evaluate(3), 7);
        assert_eq!(torus(3, 7).evaluate(0), 0);
        assert_eq!(torus(26, 33).evaluate(2), 33);
        assert_eq!(torus(22, 39).evaluate(2), 39);
    }

    #[test]
    fn evaluate_tail_rule() {
        for ef in [torus(3, 7), torus(4, 5), EnumeratingFunction::unknot()] {
            for n in ef.delta()..3 * ef.delta() + 5 {
                assert_eq!(ef.evaluate(n), n + ef.delta());
            }
        }
    }

    #[test]
    fn counting_examples() {
        let g67 = EnumeratingFunction::from_generators(&[6, 7]).unwrap();
        let g49 = EnumeratingFunction::from_generators(&[4, 9]).unwrap();
        assert_eq!(g67.counting(8), 3);
        assert_eq!(g49.counting(8), 2);
        assert_eq!(g67.counting(-5), 0);
        assert_eq!(g67.counting(0), 0);
        assert_eq!(g67.counting_function().at(8), 3);
    }

    #[test]
    fn counting_inverts_evaluation() {
        for ef in [torus(3, 7), torus(4, 9), EnumeratingFunction::unknot()] {
            for m in 0..=2 * ef.delta() {
                assert_eq!(ef.counting(ef.evaluate(m) as i64), m);
                assert_eq!(ef.counting(ef.evaluate(m) as i64 + 1), m + 1);
            }
        }
    }

    #[test]
    fn validate_reports() {
        let report = torus(3, 7).validate();
        assert!(report.is_valid());
        assert!(report.semigroup_closed);
        assert!(report.flag_consistent);

        let poly = AlexanderVector::new(vec![5, 4, 2, 1, 0, -1, -2, -4, -5]).unwrap();
        let pretzel = EnumeratingFunction::from_alexander(&poly).unwrap();
        let report = pretzel.validate();
        assert!(report.is_valid());
        assert!(report.gap_symmetric);
        assert!(!report.semigroup_closed);
        assert!(report.flag_consistent);

        assert!(EnumeratingFunction::unknot().validate().is_valid());
    }

    #[test]
    fn from_prefix_round_trip_and_errors() {
        let ef = torus(3, 7);
        let rebuilt = EnumeratingFunction::from_prefix(ef.prefix().to_vec(), ef.delta()).unwrap();
        assert_eq!(rebuilt, ef);

        assert!(matches!(
            EnumeratingFunction::from_prefix(vec![0, 3], 6),
            Err(Error::InvalidPrefix { .. })
        ));
        assert!(matches!(
            EnumeratingFunction::from_prefix(vec![1, 2], 1),
            Err(Error::InvalidPrefix { .. })
        ));
        assert!(matches!(
            EnumeratingFunction::from_prefix(vec![0, 3, 2], 2),
            Err(Error::InvalidPrefix { .. })
        ));
        // correct shape but asymmetric gaps: image {0,3} with delta 2 keeps
        // both 1 and 2 out, violating symmetry about 2δ−1 = 3
        assert!(matches!(
            EnumeratingFunction::from_prefix(vec![0, 3, 4], 2),
            Err(Error::NotGapSymmetric { .. })
        ));
    }

    #[test]
    fn delta_matches_closed_form_on_small_grid() {
        for p in 2..=14u64 {
            for q in (p + 1)..=200 / p {
                if gcd(p, q) != 1 {
                    continue;
                }
                let ef = torus(p, q);
                assert_eq!(ef.delta(), (p - 1) * (q - 1) / 2, "T({p},{q})");
                let brute = brute_elements(&[p, q], 2 * ef.delta() + 1);
                let gap_count = 2 * ef.delta() + 2 - brute.len() as u64;
                assert_eq!(gap_count, ef.delta(), "gap count of T({p},{q})");
            }
        }
    }

    #[test]
    fn label_does_not_affect_equality() {
        let a = torus(2, 3);
        let b = torus(2, 3).with_label("trefoil");
        assert_eq!(a, b);
        assert_eq!(b.label(), Some("trefoil"));
    }

    #[test]
    fn serialization_schema() {
        let ef = torus(2, 3);
        let value = serde_json::to_value(&ef).unwrap();
        let obj = value.as_object().unwrap();
        let keys: Vec<&String> = obj.keys().collect();
        assert_eq!(keys, ["delta", "label", "prefix", "semigroup_closed"]);
        assert_eq!(obj["delta"], 1);
        assert_eq!(obj["prefix"], serde_json::json!([0, 2]));
        assert_eq!(obj["semigroup_closed"], true);
    }
}
