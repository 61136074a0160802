//! Vanishing and ramification sequences of linear series at a point.
//!
//! At a point p of a curve, a g^r_d has a vanishing sequence
//! `a_0 < a_1 < ... < a_r <= d` (the orders of vanishing of its sections)
//! and the associated ramification sequence `alpha_i = a_i - i`. The weight
//! of the point is the sum of the ramification sequence.
//!
//! Provided here:
//!
//! - [`VanishingSequence`] and [`RamificationSequence`] with full validation
//! - [`refined_complement`]: the sequence `(d - a_r, ..., d - a_0)` forced at
//!   the matching point of the adjacent component in a degeneration with a
//!   smoothable node
//! - [`plucker_total`]: total ramification weight `(r+1)d + (r+1)r(g-1)` of
//!   a g^r_d on a smooth genus-g curve
//! - [`ramification_budget_at_p`]: what remains of the genus-zero total at a
//!   marked point of a rational spine once each of `num_cusps` attached
//!   elliptic tails has claimed weight r
//! - subsequence and compatibility predicates used by the certifier

use num::bigint::BigInt;
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SequenceError {
    #[error("vanishing sequence must be nonempty")]
    Empty,
    #[error("vanishing sequence must be strictly increasing (entry {index})")]
    NotStrictlyIncreasing { index: usize },
    #[error("vanishing sequence entry {value} out of range [0, {bound}]")]
    OutOfRange { value: i64, bound: i64 },
}

/// Strictly increasing orders of vanishing `a_0 < ... < a_r`, bounded by the
/// degree d of the series.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct VanishingSequence {
    entries: Vec<i64>,
    d: i64,
}

impl VanishingSequence {
    pub fn new(entries: Vec<i64>, d: i64) -> Result<Self, SequenceError> {
        if entries.is_empty() {
            return Err(SequenceError::Empty);
        }
        for (i, &a) in entries.iter().enumerate() {
            if a < 0 || a > d {
                return Err(SequenceError::OutOfRange { value: a, bound: d });
            }
            if i > 0 && entries[i - 1] >= a {
                return Err(SequenceError::NotStrictlyIncreasing { index: i });
            }
        }
        Ok(VanishingSequence { entries, d })
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    /// Degree bound d of the ambient series.
    pub fn degree_bound(&self) -> i64 {
        self.d
    }

    /// Rank r: the sequence has r + 1 entries.
    pub fn r(&self) -> i64 {
        self.entries.len() as i64 - 1
    }

    /// Whether some entry equals `value`.
    pub fn contains_value(&self, value: i64) -> bool {
        self.entries.binary_search(&value).is_ok()
    }

    /// Ramification weight `sum(a_i) - r(r+1)/2`.
    pub fn weight(&self) -> i64 {
        let r = self.r();
        self.entries.iter().sum::<i64>() - r * (r + 1) / 2
    }
}

/// Nondecreasing ramification orders `alpha_i = a_i - i`, each in `[0, d-r]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct RamificationSequence {
    entries: Vec<i64>,
}

impl RamificationSequence {
    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn weight(&self) -> i64 {
        self.entries.iter().sum()
    }
}

/// Converts orders of vanishing to ramification orders `alpha_i = a_i - i`.
pub fn ramification_from_vanishing(a: &VanishingSequence) -> RamificationSequence {
    let entries = a
        .entries()
        .iter()
        .enumerate()
        .map(|(i, &ai)| ai - i as i64)
        .collect();
    RamificationSequence { entries }
}

/// Complementary vanishing sequence `(d - a_r, ..., d - a_0)` with respect to
/// the degree bound d.
///
/// When two components of a nodal curve carry aspects of one limit series and
/// the node is smoothable, the vanishing sequence on one side at the node
/// determines the other side exactly through this complement.
///
/// # Panics
///
/// Panics if `a_r > d`.
pub fn refined_complement(a: &VanishingSequence, d: i64) -> VanishingSequence {
    let last = *a.entries().last().expect("sequences are nonempty");
    assert!(
        last <= d,
        "sequence entry {last} exceeds complement bound {d}"
    );
    let entries = a.entries().iter().rev().map(|&ai| d - ai).collect();
    VanishingSequence::new(entries, d).expect("complement of a valid sequence is valid")
}

/// Total ramification weight `(r+1)d + (r+1)r(g-1)` of a g^r_d over a smooth
/// curve of genus g, summed over all points.
pub fn plucker_total(g: i64, r: i64, d: i64) -> BigInt {
    let (g, r, d) = (BigInt::from(g), BigInt::from(r), BigInt::from(d));
    (&r + 1_i64) * &d + (&r + 1_i64) * &r * (&g - 1_i64)
}

/// Weight available at a marked point p of a rational component carrying a
/// g^r_d, after `num_cusps` attached elliptic tails each consume weight r:
///
/// ```text
/// (r+1)d - r(r+1) - num_cusps * r
/// ```
///
/// # Panics
///
/// Panics if `num_cusps < 0`.
pub fn ramification_budget_at_p(r: i64, d: i64, num_cusps: i64) -> BigInt {
    assert!(num_cusps >= 0, "expected num_cusps >= 0, got {num_cusps}");
    plucker_total(0, r, d) - BigInt::from(num_cusps) * BigInt::from(r)
}

/// Whether every value of `a` occurs among the values of `b`. Both sequences
/// are strictly increasing, so one merge scan suffices.
pub fn is_subsequence_values(a: &VanishingSequence, b: &VanishingSequence) -> bool {
    let mut it = b.entries().iter().copied().peekable();
    'outer: for &want in a.entries() {
        for have in it.by_ref() {
            if have == want {
                continue 'outer;
            }
            if have > want {
                return false;
            }
        }
        return false;
    }
    true
}

/// Refined compatibility at a node: `a_i(Y) + a_{r-i}(Z) = d` for all i.
pub fn refined_compatible(a_y: &VanishingSequence, a_z: &VanishingSequence, d: i64) -> bool {
    a_y.entries().len() == a_z.entries().len() && *a_z == refined_complement(a_y, d)
}

/// Crude compatibility at a node: `a_i(Y) + a_{r-i}(Z) >= d` for all i.
pub fn crude_compatible(a_y: &VanishingSequence, a_z: &VanishingSequence, d: i64) -> bool {
    let ys = a_y.entries();
    let zs = a_z.entries();
    ys.len() == zs.len()
        && ys
            .iter()
            .zip(zs.iter().rev())
            .all(|(&ay, &az)| ay + az >= d)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(entries: &[i64], d: i64) -> VanishingSequence {
        VanishingSequence::new(entries.to_vec(), d).unwrap()
    }

    #[test]
    fn vanishing_sequence_validation() {
        assert!(VanishingSequence::new(vec![], 4).is_err());
        assert!(VanishingSequence::new(vec![0, 0], 4).is_err());
        assert!(VanishingSequence::new(vec![2, 1], 4).is_err());
        assert!(VanishingSequence::new(vec![-1, 2], 4).is_err());
        assert!(VanishingSequence::new(vec![0, 5], 4).is_err());
        assert!(VanishingSequence::new(vec![0, 4], 4).is_ok());
    }

    #[test]
    fn ramification_from_vanishing_known_values() {
        let a = seq(&[0, 2], 6);
        assert_eq!(ramification_from_vanishing(&a).entries(), &[0, 1]);

        let d1 = 8;
        let a = seq(&[4, d1], d1);
        assert_eq!(ramification_from_vanishing(&a).entries(), &[4, d1 - 1]);

        // An unramified point has the identity sequence.
        let a = seq(&[0, 1, 2, 3], 9);
        assert_eq!(ramification_from_vanishing(&a).entries(), &[0, 0, 0, 0]);
        assert_eq!(a.weight(), 0);
    }

    #[test]
    fn weight_matches_ramification_sum() {
        let a = seq(&[0, 2, 5], 6);
        assert_eq!(a.weight(), ramification_from_vanishing(&a).weight());
        assert_eq!(a.weight(), 4);
    }

    #[test]
    fn refined_complement_known_values() {
        for d1 in 6..=12 {
            let a = seq(&[0, d1 - 4], d1);
            assert_eq!(refined_complement(&a, d1), seq(&[4, d1], d1));
        }

        // The identity sequence bounded by r is self-complementary.
        let a = seq(&[0, 1, 2, 3], 3);
        assert_eq!(refined_complement(&a, 3), a);

        // Three entries against the extended bound d1 + e with e = d1 - 4.
        for d1 in 6..=10 {
            let bound = 2 * d1 - 4;
            let a = seq(&[0, d1 - 4, 2 * d1 - 8], bound);
            assert_eq!(
                refined_complement(&a, bound),
                seq(&[4, d1, 2 * d1 - 4], bound)
            );
        }
    }

    #[test]
    fn refined_complement_is_an_involution_and_reverses_nothing_but_weight() {
        // weight(a) + weight(complement) = (r+1)d - r(r+1).
        for (entries, d) in [
            (vec![0, 2], 6),
            (vec![1, 3, 7], 9),
            (vec![0, 1, 2, 8], 8),
            (vec![5], 5),
        ] {
            let a = seq(&entries, d);
            let c = refined_complement(&a, d);
            assert_eq!(refined_complement(&c, d), a);
            let r = a.r();
            assert_eq!(a.weight() + c.weight(), (r + 1) * d - r * (r + 1));
        }
    }

    #[test]
    fn plucker_total_known_values() {
        for d1 in 2..=12 {
            assert_eq!(plucker_total(0, 1, d1), BigInt::from(2 * d1 - 2));
        }
        for d1 in 6..=12 {
            assert_eq!(
                plucker_total(0, 2, 2 * d1 - 4),
                BigInt::from(6 * d1 - 18),
            );
        }
        // Genus contributes (r+1) r per unit: a pencil on a genus-g curve
        // has total weight 2d + 2g - 2.
        assert_eq!(plucker_total(3, 1, 4), BigInt::from(12));
    }

    #[test]
    fn plucker_total_of_identity_aspect_is_zero() {
        // A full g^d_d on a rational curve is unramified everywhere.
        for d in 0..=9 {
            assert_eq!(plucker_total(0, d, d), BigInt::from(0));
        }
    }

    #[test]
    fn ramification_budget_known_values() {
        for d1 in 6..=12 {
            // Pencil of degree d1 with d1 cusps charged.
            assert_eq!(
                ramification_budget_at_p(1, d1, d1),
                BigInt::from(d1 - 2)
            );
            // Pencil with only the complementary-genus cusps charged.
            let g = 2 * d1 - 3;
            assert_eq!(
                ramification_budget_at_p(1, d1, g - d1),
                BigInt::from(d1 + 1)
            );
            // Extended net of degree 2 d1 - 4 with d1 - 3 cusps charged.
            assert_eq!(
                ramification_budget_at_p(2, 2 * d1 - 4, d1 - 3),
                BigInt::from(4 * d1 - 12)
            );
            // Same net with the complementary d1 cusps charged.
            assert_eq!(
                ramification_budget_at_p(2, 2 * d1 - 4, d1),
                BigInt::from(4 * d1 - 18)
            );
        }
    }

    #[test]
    fn budgets_partition_the_genus_zero_total() {
        // Splitting g cusps between two sides spends exactly g r in total.
        for r in 1..=4 {
            for d in r..=10 {
                for g in 0..=8 {
                    for c in 0..=g {
                        let lhs = ramification_budget_at_p(r, d, c)
                            + ramification_budget_at_p(r, d, g - c);
                        let rhs = BigInt::from(2) * plucker_total(0, r, d)
                            - BigInt::from(g) * BigInt::from(r);
                        assert_eq!(lhs, rhs);
                    }
                }
            }
        }
    }

    #[test]
    fn subsequence_predicate() {
        let a = seq(&[0, 3], 5);
        let b = seq(&[0, 2, 3, 5], 5);
        assert!(is_subsequence_values(&a, &b));
        assert!(!is_subsequence_values(&b, &a));
        let c = seq(&[0, 4], 5);
        assert!(!is_subsequence_values(&c, &b));
        assert!(is_subsequence_values(&b, &b));
    }

    #[test]
    fn compatibility_predicates() {
        let d = 6;
        let a_y = seq(&[0, 2], d);
        let exact = seq(&[4, 6], d);
        let over = seq(&[5, 6], d);
        let under = seq(&[3, 6], d);
        assert!(refined_compatible(&a_y, &exact, d));
        assert!(!refined_compatible(&a_y, &over, d));
        assert!(crude_compatible(&a_y, &exact, d));
        assert!(crude_compatible(&a_y, &over, d));
        assert!(!crude_compatible(&a_y, &under, d));
    }
}
