//! Evaluation: stratified k-fold cross-validation, cross-validation
//! score tables with top-k model selection, confusion-matrix metrics,
//! ROC/PR curves, and learning curves.

use alloc::string::String;

use crate::features::FeatureError;
use crate::models::ModelError;

mod curves;
mod cv;
mod folds;
mod metrics;
mod select;

pub use curves::{pr_ap, roc_auc, CurveData, PrCurve, PrPoint, RocCurve, RocPoint};
pub use cv::{cross_validate, cross_validate_corpus, learning_curve, LearningCurve, LearningPoint};
pub use folds::{make_folds, FoldAssignment};
pub use metrics::{evaluate, Averages, ClassMetrics, ConfusionMatrix, EvalReport};
pub use select::{select_top_models, CvScoreTable, ModelId, ModelSelection};

/// Errors from evaluation routines.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum EvalError {
    #[error("fold count must be at least 2, got {0}")]
    TooFewFolds(usize),
    #[error("{n} samples cannot fill {k} folds")]
    TooFewSamples { n: usize, k: usize },
    #[error("class \"{label}\" has no members; stratified folds need both classes")]
    EmptyClass { label: String },
    #[error("labels/scores length mismatch: {labels} vs {scores}")]
    LengthMismatch { labels: usize, scores: usize },
    #[error("inputs must be non-empty")]
    EmptyInput,
    #[error("ROC needs both classes present")]
    SingleClassTruth,
    #[error("average precision needs at least one positive label")]
    NoPositives,
    #[error("scores must be finite")]
    NonFiniteScore,
    #[error("fraction {0} is outside (0, 1]")]
    InvalidFraction(f64),
    #[error("fractions must be strictly increasing")]
    NonIncreasingFractions,
    #[error(transparent)]
    Feature(#[from] FeatureError),
    #[error(transparent)]
    Model(#[from] ModelError),
}
