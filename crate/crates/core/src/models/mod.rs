//! Classifiers behind one fit/predict/score contract.
//!
//! Five kinds are available: multinomial naive Bayes, logistic
//! regression (full-batch gradient descent), a primal hinge-loss SVM,
//! configurable-loss stochastic gradient descent, and a cosine-similarity
//! KNN. Every prediction carries a decision score; the label is positive
//! exactly when the score is greater than zero, with ties resolving to
//! negative (class index 0) across all kinds.

use alloc::string::String;

use serde::{Deserialize, Serialize};

use crate::corpus::PolarityLabel;
use crate::features::FeatureVector;

mod knn;
mod linear;
mod mnb;

pub use knn::{make_knn, KnnModel, KnnParams};
pub use linear::{
    fit_linear_svm, fit_lr, fit_sgd, logistic_gradient, logistic_objective, LinearModel, LrParams,
    Schedule, SgdLoss, SgdParams, SvmParams,
};
pub use mnb::{fit_mnb, MnbModel, MnbParams};

/// Errors from classifier fitting and prediction.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum ModelError {
    #[error("training set is empty")]
    EmptyTrainingSet,
    #[error("feature/label length mismatch: {features} vectors, {labels} labels")]
    LengthMismatch { features: usize, labels: usize },
    #[error("training data contains a single class; both polarities are required")]
    SingleClass,
    #[error("feature vectors disagree on dimension: expected {expected}, found {found}")]
    InconsistentDimensions { expected: usize, found: usize },
    #[error("input dimension {found} does not match model dimension {expected}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("invalid hyperparameter: {0}")]
    InvalidHyperparam(String),
    #[error("training diverged: loss became non-finite at epoch {epoch}")]
    NonFiniteLoss { epoch: usize },
    #[error("k = {k} exceeds the number of training points ({n})")]
    KTooLarge { k: usize, n: usize },
}

/// The closed set of classifier kinds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ClassifierKind {
    Mnb,
    Lr,
    Svm,
    Sgd,
    Knn,
}

impl ClassifierKind {
    pub const ALL: [ClassifierKind; 5] = [
        ClassifierKind::Mnb,
        ClassifierKind::Lr,
        ClassifierKind::Svm,
        ClassifierKind::Sgd,
        ClassifierKind::Knn,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            ClassifierKind::Mnb => "mnb",
            ClassifierKind::Lr => "lr",
            ClassifierKind::Svm => "svm",
            ClassifierKind::Sgd => "sgd",
            ClassifierKind::Knn => "knn",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        ClassifierKind::ALL
            .into_iter()
            .find(|k| s.eq_ignore_ascii_case(k.as_str()))
    }
}

impl core::fmt::Display for ClassifierKind {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Hyperparameters for every classifier kind in one bag, so pipeline
/// code can be configured once and dispatch by kind.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize, Default)]
pub struct Hyperparams {
    pub mnb: MnbParams,
    pub lr: LrParams,
    pub svm: SvmParams,
    pub sgd: SgdParams,
    pub knn: KnnParams,
}

/// A prediction: the chosen label and the decision score behind it.
///
/// Scores are log-odds for naive Bayes, `w·x + b` for the linear
/// models, and the positive-neighbor fraction mapped to [-1, 1] for
/// KNN. `label` is positive iff `score > 0`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Prediction {
    pub label: PolarityLabel,
    pub score: f64,
}

impl Prediction {
    /// Applies the shared decision rule: positive iff score > 0.
    pub(crate) fn from_score(score: f64) -> Self {
        let label = if score > 0.0 {
            PolarityLabel::Positive
        } else {
            PolarityLabel::Negative
        };
        Prediction { label, score }
    }
}

/// A fitted classifier of any kind.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "lowercase")]
pub enum ClassifierModel {
    Mnb(MnbModel),
    Linear(LinearModel),
    Knn(KnnModel),
}

impl ClassifierModel {
    /// Fits a classifier of the requested kind.
    pub fn fit(
        kind: ClassifierKind,
        x: &[FeatureVector],
        y: &[PolarityLabel],
        hp: &Hyperparams,
    ) -> Result<Self, ModelError> {
        match kind {
            ClassifierKind::Mnb => fit_mnb(x, y, &hp.mnb),
            ClassifierKind::Lr => fit_lr(x, y, &hp.lr),
            ClassifierKind::Svm => fit_linear_svm(x, y, &hp.svm),
            ClassifierKind::Sgd => fit_sgd(x, y, &hp.sgd),
            ClassifierKind::Knn => make_knn(x, y, &hp.knn),
        }
    }

    pub fn kind(&self) -> ClassifierKind {
        match self {
            ClassifierModel::Mnb(_) => ClassifierKind::Mnb,
            ClassifierModel::Linear(m) => m.kind(),
            ClassifierModel::Knn(_) => ClassifierKind::Knn,
        }
    }

    /// Feature dimension the model was trained on.
    pub fn dimension(&self) -> usize {
        match self {
            ClassifierModel::Mnb(m) => m.dimension(),
            ClassifierModel::Linear(m) => m.dimension(),
            ClassifierModel::Knn(m) => m.dimension(),
        }
    }

    /// Scores one input and applies the shared decision rule.
    pub fn predict(&self, x: &FeatureVector) -> Result<Prediction, ModelError> {
        if x.dim() != self.dimension() {
            return Err(ModelError::DimensionMismatch {
                expected: self.dimension(),
                found: x.dim(),
            });
        }
        let score = match self {
            ClassifierModel::Mnb(m) => m.score(x),
            ClassifierModel::Linear(m) => m.score(x),
            ClassifierModel::Knn(m) => m.score(x),
        };
        Ok(Prediction::from_score(score))
    }

    /// Structural checks for models restored from storage.
    pub fn validate(&self) -> Result<(), ModelError> {
        match self {
            ClassifierModel::Mnb(m) => m.validate(),
            ClassifierModel::Linear(m) => m.validate(),
            ClassifierModel::Knn(m) => m.validate(),
        }
    }
}

/// Shared fit-input validation: equal non-zero lengths, consistent
/// dimensions, and (unless `allow_single_class`) both classes present.
fn check_training_set(
    x: &[FeatureVector],
    y: &[PolarityLabel],
) -> Result<usize, ModelError> {
    if x.len() != y.len() {
        return Err(ModelError::LengthMismatch {
            features: x.len(),
            labels: y.len(),
        });
    }
    if x.is_empty() {
        return Err(ModelError::EmptyTrainingSet);
    }
    let dim = x[0].dim();
    for v in x {
        if v.dim() != dim {
            return Err(ModelError::InconsistentDimensions {
                expected: dim,
                found: v.dim(),
            });
        }
    }
    Ok(dim)
}

fn check_both_classes(y: &[PolarityLabel]) -> Result<(), ModelError> {
    let pos = y.iter().filter(|l| **l == PolarityLabel::Positive).count();
    if pos == 0 || pos == y.len() {
        return Err(ModelError::SingleClass);
    }
    Ok(())
}
