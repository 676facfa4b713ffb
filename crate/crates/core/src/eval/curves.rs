//! Threshold-sweep ranking curves: ROC with trapezoid AUC and
//! precision-recall with step-interpolated average precision.

use alloc::vec;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use super::EvalError;
use crate::corpus::PolarityLabel;

/// One ROC point at a decision threshold.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RocPoint {
    pub threshold: f64,
    pub fpr: f64,
    pub tpr: f64,
}

/// ROC curve and its trapezoid-rule area.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RocCurve {
    pub points: Vec<RocPoint>,
    pub auc: f64,
}

/// One precision-recall point at a decision threshold.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PrPoint {
    pub threshold: f64,
    pub recall: f64,
    pub precision: f64,
}

/// Precision-recall curve and its average precision.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PrCurve {
    pub points: Vec<PrPoint>,
    pub average_precision: f64,
}

/// ROC and PR data for one evaluated model.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CurveData {
    pub roc: RocCurve,
    pub pr: PrCurve,
}

fn check_scores(y_true: &[PolarityLabel], scores: &[f64]) -> Result<(), EvalError> {
    if y_true.len() != scores.len() {
        return Err(EvalError::LengthMismatch {
            labels: y_true.len(),
            scores: scores.len(),
        });
    }
    if y_true.is_empty() {
        return Err(EvalError::EmptyInput);
    }
    if scores.iter().any(|s| !s.is_finite()) {
        return Err(EvalError::NonFiniteScore);
    }
    Ok(())
}

/// Indices sorted by score descending; equal scores stay grouped.
fn order_by_score(scores: &[f64]) -> Vec<usize> {
    let mut order: Vec<usize> = (0..scores.len()).collect();
    order.sort_unstable_by(|&a, &b| scores[b].total_cmp(&scores[a]).then(a.cmp(&b)));
    order
}

/// ROC curve over descending score thresholds with tied scores merged
/// into a single step. The curve starts at (0,0) — threshold +∞ — and
/// ends exactly at (1,1); the AUC is the trapezoid-rule area.
/// Errors if the truth labels contain a single class.
pub fn roc_auc(y_true: &[PolarityLabel], scores: &[f64]) -> Result<RocCurve, EvalError> {
    check_scores(y_true, scores)?;
    let pos = y_true
        .iter()
        .filter(|&&l| l == PolarityLabel::Positive)
        .count();
    let neg = y_true.len() - pos;
    if pos == 0 || neg == 0 {
        return Err(EvalError::SingleClassTruth);
    }

    let order = order_by_score(scores);
    let mut points = vec![RocPoint {
        threshold: f64::INFINITY,
        fpr: 0.0,
        tpr: 0.0,
    }];
    let (mut tp, mut fp) = (0usize, 0usize);
    let mut i = 0;
    while i < order.len() {
        let threshold = scores[order[i]];
        while i < order.len() && scores[order[i]] == threshold {
            match y_true[order[i]] {
                PolarityLabel::Positive => tp += 1,
                PolarityLabel::Negative => fp += 1,
            }
            i += 1;
        }
        points.push(RocPoint {
            threshold,
            fpr: fp as f64 / neg as f64,
            tpr: tp as f64 / pos as f64,
        });
    }

    let mut auc = 0.0;
    for pair in points.windows(2) {
        auc += (pair[1].fpr - pair[0].fpr) * (pair[1].tpr + pair[0].tpr) / 2.0;
    }
    Ok(RocCurve { points, auc })
}

/// Precision-recall curve over descending score thresholds, with
/// average precision `Σ (R_i − R_{i−1})·P_i` (step-wise interpolation).
/// Errors if the truth labels contain no positives.
pub fn pr_ap(y_true: &[PolarityLabel], scores: &[f64]) -> Result<PrCurve, EvalError> {
    check_scores(y_true, scores)?;
    let pos = y_true
        .iter()
        .filter(|&&l| l == PolarityLabel::Positive)
        .count();
    if pos == 0 {
        return Err(EvalError::NoPositives);
    }

    let order = order_by_score(scores);
    let mut points = Vec::new();
    let (mut tp, mut fp) = (0usize, 0usize);
    let mut previous_recall = 0.0;
    let mut average_precision = 0.0;
    let mut i = 0;
    while i < order.len() {
        let threshold = scores[order[i]];
        while i < order.len() && scores[order[i]] == threshold {
            match y_true[order[i]] {
                PolarityLabel::Positive => tp += 1,
                PolarityLabel::Negative => fp += 1,
            }
            i += 1;
        }
        let precision = tp as f64 / (tp + fp) as f64;
        let recall = tp as f64 / pos as f64;
        average_precision += (recall - previous_recall) * precision;
        previous_recall = recall;
        points.push(PrPoint {
            threshold,
            recall,
            precision,
        });
    }
    Ok(PrCurve {
        points,
        average_precision,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const POS: PolarityLabel = PolarityLabel::Positive;
    const NEG: PolarityLabel = PolarityLabel::Negative;

    #[test]
    fn perfect_separation_has_auc_one() {
        let y = [POS, POS, NEG, NEG];
        let s = [0.9, 0.8, 0.2, 0.1];
        assert_eq!(roc_auc(&y, &s).unwrap().auc, 1.0);
        assert_eq!(pr_ap(&y, &s).unwrap().average_precision, 1.0);
    }

    #[test]
    fn inverted_separation_has_auc_zero() {
        let y = [POS, POS, NEG, NEG];
        let s = [0.1, 0.2, 0.8, 0.9];
        assert_eq!(roc_auc(&y, &s).unwrap().auc, 0.0);
    }

    #[test]
    fn hand_fixture_auc_is_three_quarters() {
        let y = [POS, POS, NEG, NEG];
        let s = [0.9, 0.4, 0.6, 0.1];
        let roc = roc_auc(&y, &s).unwrap();
        assert!((roc.auc - 0.75).abs() < 1e-15);
        let first = roc.points.first().unwrap();
        let last = roc.points.last().unwrap();
        assert_eq!((first.fpr, first.tpr), (0.0, 0.0));
        assert_eq!((last.fpr, last.tpr), (1.0, 1.0));
    }

    #[test]
    fn hand_fixture_ap_is_five_sixths() {
        let y = [POS, POS, NEG, NEG];
        let s = [0.9, 0.4, 0.6, 0.1];
        let pr = pr_ap(&y, &s).unwrap();
        let expected = 1.0 * 0.5 + (2.0 / 3.0) * 0.5;
        assert!((pr.average_precision - expected).abs() < 1e-15);
    }

    #[test]
    fn single_positive_ranked_last() {
        let y = [NEG, NEG, NEG, POS];
        let s = [0.9, 0.8, 0.7, 0.1];
        let pr = pr_ap(&y, &s).unwrap();
        assert!((pr.average_precision - 0.25).abs() < 1e-15);
    }

    #[test]
    fn tied_scores_form_one_step() {
        let y = [POS, NEG, POS, NEG];
        let s = [0.5, 0.5, 0.5, 0.5];
        let roc = roc_auc(&y, &s).unwrap();
        assert_eq!(roc.points.len(), 2);
        assert!((roc.auc - 0.5).abs() < 1e-15);
    }

    #[test]
    fn degenerate_inputs_error() {
        assert_eq!(
            roc_auc(&[POS, POS], &[0.1, 0.2]),
            Err(EvalError::SingleClassTruth)
        );
        assert_eq!(pr_ap(&[NEG, NEG], &[0.1, 0.2]), Err(EvalError::NoPositives));
        assert_eq!(
            roc_auc(&[POS, NEG], &[f64::NAN, 0.0]),
            Err(EvalError::NonFiniteScore)
        );
        assert_eq!(roc_auc(&[], &[]), Err(EvalError::EmptyInput));
    }
}
