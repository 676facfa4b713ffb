//! Property tests for folds, metrics, curves, and model selection.

use std::collections::BTreeMap;

use proptest::prelude::*;

use polarity_core::corpus::PolarityLabel;
use polarity_core::eval::{evaluate, make_folds, pr_ap, roc_auc, select_top_models, ModelId};
use polarity_core::models::Prediction;

fn label_vec(min_per_class: usize) -> impl Strategy<Value = Vec<PolarityLabel>> {
    prop::collection::vec(any::<bool>(), 0..60).prop_map(move |mut bits| {
        // force the per-class minimum, then keep the random tail
        let mut v = vec![true; min_per_class];
        v.extend(vec![false; min_per_class]);
        v.append(&mut bits);
        v.into_iter()
            .map(|b| {
                if b {
                    PolarityLabel::Positive
                } else {
                    PolarityLabel::Negative
                }
            })
            .collect()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(250))]

    #[test]
    fn folds_partition_and_stratify(
        labels in label_vec(2),
        k in 2usize..8,
        seed in any::<u64>(),
    ) {
        prop_assume!(labels.len() >= k);
        let folds = make_folds(&labels, k, seed).unwrap();

        let mut seen = vec![0usize; labels.len()];
        for fold in 0..k {
            for i in folds.test_indices(fold) {
                seen[i] += 1;
            }
        }
        prop_assert!(seen.iter().all(|&c| c == 1), "folds are not a partition");

        for class in PolarityLabel::ALL {
            let class_total = labels.iter().filter(|&&l| l == class).count() as f64;
            let ideal = class_total / k as f64;
            for fold in 0..k {
                let count = folds
                    .test_indices(fold)
                    .iter()
                    .filter(|&&i| labels[i] == class)
                    .count() as f64;
                prop_assert!(
                    (count - ideal).abs() < 1.0,
                    "fold {} class {} count {} vs ideal {}",
                    fold, class, count, ideal
                );
            }
        }
    }

    #[test]
    fn accuracy_identities_hold_on_random_confusions(
        tn in 0usize..50, fp in 0usize..50, fn_ in 0usize..50, tp in 0usize..50,
    ) {
        prop_assume!(tn + fp + fn_ + tp > 0);
        let mut y = Vec::new();
        let mut p = Vec::new();
        let mut push = |actual: PolarityLabel, predicted: PolarityLabel, n: usize| {
            for _ in 0..n {
                y.push(actual);
                p.push(Prediction {
                    label: predicted,
                    score: if predicted == PolarityLabel::Positive { 1.0 } else { -1.0 },
                });
            }
        };
        push(PolarityLabel::Negative, PolarityLabel::Negative, tn);
        push(PolarityLabel::Negative, PolarityLabel::Positive, fp);
        push(PolarityLabel::Positive, PolarityLabel::Negative, fn_);
        push(PolarityLabel::Positive, PolarityLabel::Positive, tp);

        let report = evaluate(&y, &p).unwrap();
        let total = (tn + fp + fn_ + tp) as f64;
        prop_assert!((report.accuracy - (tn + tp) as f64 / total).abs() < 1e-12);
        // for two classes, support-weighted recall equals accuracy
        prop_assert!((report.weighted_avg.recall - report.accuracy).abs() < 1e-9);
        // weighted averages are the support-weighted means by construction
        let by_hand = (report.per_class[0].precision * report.per_class[0].support as f64
            + report.per_class[1].precision * report.per_class[1].support as f64)
            / total;
        prop_assert!((report.weighted_avg.precision - by_hand).abs() < 1e-9);
    }

    #[test]
    fn trapezoid_auc_equals_concordant_pair_count(
        rows in prop::collection::vec((any::<bool>(), 0u8..6), 2..50),
    ) {
        prop_assume!(rows.iter().any(|(b, _)| *b) && rows.iter().any(|(b, _)| !*b));
        let y: Vec<PolarityLabel> = rows
            .iter()
            .map(|&(b, _)| if b { PolarityLabel::Positive } else { PolarityLabel::Negative })
            .collect();
        // coarse score grid so ties actually happen
        let scores: Vec<f64> = rows.iter().map(|&(_, s)| s as f64 / 5.0).collect();

        let auc = roc_auc(&y, &scores).unwrap().auc;

        let mut concordant = 0.0f64;
        let mut pairs = 0.0f64;
        for (i, (&yi, &si)) in y.iter().zip(&scores).enumerate() {
            for (&yj, &sj) in y.iter().zip(&scores).skip(i + 1) {
                let (pos, neg) = match (yi, yj) {
                    (PolarityLabel::Positive, PolarityLabel::Negative) => (si, sj),
                    (PolarityLabel::Negative, PolarityLabel::Positive) => (sj, si),
                    _ => continue,
                };
                pairs += 1.0;
                if pos > neg {
                    concordant += 1.0;
                } else if pos == neg {
                    concordant += 0.5;
                }
            }
        }
        prop_assert!((auc - concordant / pairs).abs() < 1e-9, "auc {} vs pairs {}", auc, concordant / pairs);
    }

    #[test]
    fn roc_endpoints_are_exact(
        rows in prop::collection::vec((any::<bool>(), -1.0f64..1.0), 2..40),
    ) {
        prop_assume!(rows.iter().any(|(b, _)| *b) && rows.iter().any(|(b, _)| !*b));
        let y: Vec<PolarityLabel> = rows
            .iter()
            .map(|&(b, _)| if b { PolarityLabel::Positive } else { PolarityLabel::Negative })
            .collect();
        let scores: Vec<f64> = rows.iter().map(|&(_, s)| s).collect();
        let curve = roc_auc(&y, &scores).unwrap();
        let first = curve.points.first().unwrap();
        let last = curve.points.last().unwrap();
        prop_assert_eq!((first.fpr, first.tpr), (0.0, 0.0));
        prop_assert_eq!((last.fpr, last.tpr), (1.0, 1.0));
        // the curve is monotone in both axes
        for pair in curve.points.windows(2) {
            prop_assert!(pair[1].fpr >= pair[0].fpr);
            prop_assert!(pair[1].tpr >= pair[0].tpr);
        }
        prop_assert!((0.0..=1.0).contains(&curve.auc));
    }

    #[test]
    fn average_precision_stays_in_range(
        rows in prop::collection::vec((any::<bool>(), -1.0f64..1.0), 1..40),
    ) {
        prop_assume!(rows.iter().any(|(b, _)| *b));
        let y: Vec<PolarityLabel> = rows
            .iter()
            .map(|&(b, _)| if b { PolarityLabel::Positive } else { PolarityLabel::Negative })
            .collect();
        let scores: Vec<f64> = rows.iter().map(|&(_, s)| s).collect();
        let pr = pr_ap(&y, &scores).unwrap();
        prop_assert!((0.0..=1.0).contains(&pr.average_precision));
        let last = pr.points.last().unwrap();
        prop_assert!((last.recall - 1.0).abs() < 1e-12);
    }

    #[test]
    fn selection_depends_only_on_score_ranks(
        raw in prop::collection::btree_map("[a-e]{1,3}", 0.0f64..1.0, 1..8),
        scale in 0.1f64..5.0,
        shift in -2.0f64..2.0,
    ) {
        let column: BTreeMap<ModelId, f64> = raw
            .iter()
            .map(|(name, &s)| (ModelId::parse(name), s))
            .collect();
        // positive monotone transform: x → scale·x + shift
        let transformed: BTreeMap<ModelId, f64> = column
            .iter()
            .map(|(m, &s)| (m.clone(), scale * s + shift))
            .collect();
        let a = select_top_models(&column, 4);
        let b = select_top_models(&transformed, 4);
        prop_assert_eq!(a.ranked, b.ranked);
        prop_assert_eq!(a.fewer_than_requested, b.fewer_than_requested);
    }
}
