//! Confusion-matrix metrics: per-class precision/recall/F1, accuracy,
//! and macro / support-weighted averages.

use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use super::curves::{pr_ap, roc_auc, CurveData};
use super::EvalError;
use crate::corpus::PolarityLabel;
use crate::models::Prediction;

/// 2×2 confusion matrix; rows are actual classes, columns predicted,
/// both in class-index order (0 = negative, 1 = positive).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConfusionMatrix {
    counts: [[usize; 2]; 2],
}

impl ConfusionMatrix {
    pub fn from_counts(counts: [[usize; 2]; 2]) -> Self {
        ConfusionMatrix { counts }
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (PolarityLabel, PolarityLabel)>) -> Self {
        let mut counts = [[0usize; 2]; 2];
        for (actual, predicted) in pairs {
            counts[actual.index()][predicted.index()] += 1;
        }
        ConfusionMatrix { counts }
    }

    pub fn counts(&self) -> [[usize; 2]; 2] {
        self.counts
    }

    pub fn total(&self) -> usize {
        self.counts.iter().flatten().sum()
    }

    /// Samples of `label` predicted as `label`.
    pub fn true_count(&self, label: PolarityLabel) -> usize {
        let i = label.index();
        self.counts[i][i]
    }

    /// Samples predicted as `label`.
    pub fn predicted_count(&self, label: PolarityLabel) -> usize {
        let i = label.index();
        self.counts[0][i] + self.counts[1][i]
    }

    /// Samples whose actual class is `label`.
    pub fn support(&self, label: PolarityLabel) -> usize {
        let i = label.index();
        self.counts[i][0] + self.counts[i][1]
    }

    pub fn accuracy(&self) -> f64 {
        let total = self.total();
        if total == 0 {
            return 0.0;
        }
        (self.counts[0][0] + self.counts[1][1]) as f64 / total as f64
    }
}

/// Precision/recall/F1 with the class's support. 0/0 ratios are 0.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ClassMetrics {
    pub precision: f64,
    pub recall: f64,
    pub f1: f64,
    pub support: usize,
}

impl ClassMetrics {
    fn from_confusion(confusion: &ConfusionMatrix, label: PolarityLabel) -> Self {
        let tp = confusion.true_count(label) as f64;
        let predicted = confusion.predicted_count(label) as f64;
        let support = confusion.support(label);
        let precision = if predicted > 0.0 { tp / predicted } else { 0.0 };
        let recall = if support > 0 { tp / support as f64 } else { 0.0 };
        let f1 = if precision + recall > 0.0 {
            2.0 * precision * recall / (precision + recall)
        } else {
            0.0
        };
        ClassMetrics {
            precision,
            recall,
            f1,
            support,
        }
    }
}

/// Averaged precision/recall/F1 across classes.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Averages {
    pub precision: f64,
    pub recall: f64,
    pub f1: f64,
}

/// Full evaluation summary: confusion matrix, per-class metrics,
/// accuracy, macro and support-weighted averages, and ranking curves
/// when they are defined for the evaluated labels.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EvalReport {
    pub confusion: ConfusionMatrix,
    /// Indexed by class: `[negative, positive]`.
    pub per_class: [ClassMetrics; 2],
    pub accuracy: f64,
    pub macro_avg: Averages,
    pub weighted_avg: Averages,
    /// ROC and PR data; absent when the truth labels are single-class.
    pub curves: Option<CurveData>,
}

/// Builds the evaluation report for predictions against ground truth.
///
/// Curves come from the predictions' decision scores and are omitted
/// (not an error) when undefined: the ROC needs both classes and the
/// PR curve needs at least one positive.
pub fn evaluate(y_true: &[PolarityLabel], predictions: &[Prediction]) -> Result<EvalReport, EvalError> {
    if y_true.len() != predictions.len() {
        return Err(EvalError::LengthMismatch {
            labels: y_true.len(),
            scores: predictions.len(),
        });
    }
    if y_true.is_empty() {
        return Err(EvalError::EmptyInput);
    }

    let confusion = ConfusionMatrix::from_pairs(
        y_true
            .iter()
            .zip(predictions)
            .map(|(&actual, p)| (actual, p.label)),
    );
    let per_class = [
        ClassMetrics::from_confusion(&confusion, PolarityLabel::Negative),
        ClassMetrics::from_confusion(&confusion, PolarityLabel::Positive),
    ];
    let total = confusion.total() as f64;
    let macro_avg = Averages {
        precision: (per_class[0].precision + per_class[1].precision) / 2.0,
        recall: (per_class[0].recall + per_class[1].recall) / 2.0,
        f1: (per_class[0].f1 + per_class[1].f1) / 2.0,
    };
    let weighted = |pick: fn(&ClassMetrics) -> f64| {
        per_class
            .iter()
            .map(|m| pick(m) * m.support as f64)
            .sum::<f64>()
            / total
    };
    let weighted_avg = Averages {
        precision: weighted(|m| m.precision),
        recall: weighted(|m| m.recall),
        f1: weighted(|m| m.f1),
    };

    let scores: Vec<f64> = predictions.iter().map(|p| p.score).collect();
    let curves = match (roc_auc(y_true, &scores), pr_ap(y_true, &scores)) {
        (Ok(roc), Ok(pr)) => Some(CurveData { roc, pr }),
        _ => None,
    };

    Ok(EvalReport {
        confusion,
        per_class,
        accuracy: confusion.accuracy(),
        macro_avg,
        weighted_avg,
        curves,
    })
}
