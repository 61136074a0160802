//! Property-based invariants of the parameter algebra, the sequence
//! algebra, and the certifier search.

use num::bigint::BigInt;
use proptest::prelude::*;

use secant_varieties::certifier::{
    certify_empty, enumerate_candidates, x_sum_bounds, CertifierInstance, ConstraintFlags,
    ConstraintId, ReasonCode, Status,
};
use secant_varieties::counting::gen_binomial;
use secant_varieties::ramification::{
    is_subsequence_values, ramification_budget_at_p, refined_complement, VanishingSequence,
};
use secant_varieties::ramification::plucker_total;
use secant_varieties::series::SeriesParams;

fn vanishing_sequence() -> impl Strategy<Value = VanishingSequence> {
    (proptest::collection::btree_set(0i64..=25, 1..=7), 0i64..=10).prop_map(
        |(values, slack)| {
            let entries: Vec<i64> = values.into_iter().collect();
            let d = entries.last().copied().unwrap() + slack;
            VanishingSequence::new(entries, d).expect("constructed within bounds")
        },
    )
}

/// Small instances whose whole candidate domain fits under the witness cap,
/// so survivor lists are never truncated.
fn searchable_instance() -> impl Strategy<Value = CertifierInstance> {
    (1i64..=2, 3i64..=6, 0i64..=8, 1i64..=2)
        .prop_flat_map(|(r1, d1, extra, e)| (Just((r1, d1, extra, e)), 0..e))
        .prop_filter_map(
            "parameters must validate with g >= d1",
            |((r1, d1, extra, e), f)| {
                let g = d1 + extra;
                CertifierInstance::new(g, r1, d1, e, f).ok()
            },
        )
}

proptest! {
    #[test]
    fn complement_is_an_involution(seq in vanishing_sequence()) {
        let d = seq.degree_bound();
        let comp = refined_complement(&seq, d);
        prop_assert_eq!(refined_complement(&comp, d), seq);
    }

    #[test]
    fn complement_weights_partition_the_total(seq in vanishing_sequence()) {
        let d = seq.degree_bound();
        let r = seq.r();
        let comp = refined_complement(&seq, d);
        prop_assert_eq!(seq.weight() + comp.weight(), (r + 1) * d - r * (r + 1));
    }

    #[test]
    fn complement_preserves_value_embeddings(
        small in proptest::collection::btree_set(0i64..=25, 1..=5),
        extras in proptest::collection::btree_set(0i64..=25, 0..=4),
        slack in 0i64..=6,
    ) {
        let mut large = small.clone();
        large.extend(extras);
        let d = large.iter().max().copied().unwrap() + slack;
        let a = VanishingSequence::new(small.into_iter().collect(), d).unwrap();
        let b = VanishingSequence::new(large.into_iter().collect(), d).unwrap();
        prop_assert!(is_subsequence_values(&a, &b));
        prop_assert!(is_subsequence_values(
            &refined_complement(&a, d),
            &refined_complement(&b, d)
        ));
    }

    #[test]
    fn residuation_is_an_involution(g in 0i64..=30, r in 0i64..=6, extra in 0i64..=34) {
        let d = r + extra;
        let series = SeriesParams::new(g, r, d).unwrap();
        if let Ok(res) = series.residual() {
            prop_assert_eq!(res.rho(), series.rho());
            let back = res.residual().expect("residuation returns to a valid series");
            prop_assert_eq!(back, series);
        }
    }

    #[test]
    fn budgets_partition_the_plucker_total(
        r in 0i64..=6,
        extra in 0i64..=24,
        cusps in 0i64..=40,
    ) {
        let d = r + extra;
        prop_assert_eq!(
            ramification_budget_at_p(r, d, cusps) + BigInt::from(cusps) * BigInt::from(r),
            plucker_total(0, r, d)
        );
    }

    #[test]
    fn generalized_binomials_satisfy_pascal(n in -30i64..=30, k in 1i64..=10) {
        prop_assert_eq!(
            gen_binomial(n, k),
            gen_binomial(n - 1, k - 1) + gen_binomial(n - 1, k)
        );
        prop_assert_eq!(gen_binomial(n, 0), BigInt::from(1));
    }

    #[test]
    fn negative_binomials_reflect_to_positive_ones(n in 1i64..=20, k in 0i64..=10) {
        let sign = if k % 2 == 0 { 1 } else { -1 };
        prop_assert_eq!(
            gen_binomial(-n, k),
            BigInt::from(sign) * gen_binomial(n + k - 1, k)
        );
    }

    #[test]
    fn base_rank_plucker_constraints_cut_the_x_sum_window(inst in searchable_instance()) {
        let (lo, hi) = x_sum_bounds(inst.g(), inst.r1(), inst.d1());
        let mut plk = ConstraintFlags::none();
        plk.enable(ConstraintId::PluckerY1);
        plk.enable(ConstraintId::PluckerZ1);
        let constrained = enumerate_candidates(&inst, &plk).unwrap();
        let free = enumerate_candidates(&inst, &ConstraintFlags::none()).unwrap();
        // Small domains are never truncated, so the lists are exhaustive.
        prop_assert_eq!(free.survivors.len() as u64, free.survivor_count);

        for pair in &constrained.survivors {
            let x = BigInt::from(pair.a1_y().entries().iter().sum::<i64>());
            prop_assert!(lo <= x && x <= hi, "survivor outside window at {:?}", inst);
        }
        let inside = free
            .survivors
            .iter()
            .filter(|pair| {
                let x = BigInt::from(pair.a1_y().entries().iter().sum::<i64>());
                lo <= x && x <= hi
            })
            .count() as u64;
        prop_assert_eq!(inside, constrained.survivor_count);
    }

    #[test]
    fn certification_is_deterministic_and_well_formed(inst in searchable_instance()) {
        let first = certify_empty(&inst).unwrap();
        let second = certify_empty(&inst).unwrap();
        prop_assert_eq!(&first, &second);

        match first.status {
            Status::Empty => {
                prop_assert_eq!(first.survivor_count, 0);
                prop_assert!(first.witnesses.is_empty());
            }
            Status::Inconclusive => {
                if first.reasons.contains(&ReasonCode::CaseIISurvivors) {
                    prop_assert!(!first.witnesses.is_empty());
                    prop_assert!(first.survivor_count > 0);
                } else {
                    prop_assert!(first.witnesses.is_empty());
                }
            }
            Status::NotApplicable => {
                prop_assert_eq!(first.reasons.as_slice(), &[ReasonCode::GateFailed]);
            }
        }
    }
}
