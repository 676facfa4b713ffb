//! Linear classifiers: full-batch logistic regression and per-sample
//! stochastic gradient descent on hinge or logistic loss.
//!
//! The SVM is primal hinge-loss SGD with the step size `η_t = 1/(λ·t)`;
//! the generic SGD trainer runs the same loop with a configurable loss
//! and schedule, so an SGD configured with hinge loss and the inverse
//! scaling schedule follows the SVM's weight trajectory exactly.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::{check_both_classes, check_training_set, ClassifierKind, ClassifierModel, ModelError};
use crate::corpus::PolarityLabel;
use crate::features::FeatureVector;
use crate::float;

/// Logistic-regression hyperparameters: full-batch gradient descent on
/// the L2-regularized mean log-loss, stopping at `max_epochs` or when
/// the gradient norm drops below `tolerance`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LrParams {
    pub learning_rate: f64,
    pub l2_lambda: f64,
    pub max_epochs: usize,
    pub tolerance: f64,
}

impl Default for LrParams {
    fn default() -> Self {
        LrParams {
            learning_rate: 0.1,
            l2_lambda: 1e-4,
            max_epochs: 500,
            tolerance: 1e-6,
        }
    }
}

/// Primal SVM hyperparameters.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SvmParams {
    pub l2_lambda: f64,
    pub epochs: usize,
    pub seed: u64,
}

impl Default for SvmParams {
    fn default() -> Self {
        SvmParams {
            l2_lambda: 1e-4,
            epochs: 50,
            seed: 0,
        }
    }
}

/// Loss driven by the generic SGD trainer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SgdLoss {
    Hinge,
    Logistic,
}

/// Per-update learning-rate schedule.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Schedule {
    /// `η_t = 1 / (λ·t)` with `t` counting updates from 1.
    InvScaling,
    /// Fixed learning rate.
    Constant(f64),
}

/// Stochastic-gradient-descent hyperparameters.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SgdParams {
    pub loss: SgdLoss,
    pub schedule: Schedule,
    pub l2_lambda: f64,
    pub epochs: usize,
    pub seed: u64,
}

impl Default for SgdParams {
    fn default() -> Self {
        SgdParams {
            loss: SgdLoss::Hinge,
            schedule: Schedule::InvScaling,
            l2_lambda: 1e-4,
            epochs: 50,
            seed: 0,
        }
    }
}

/// A fitted linear decision function `w·x + b`, tagged with the kind of
/// trainer that produced it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LinearModel {
    kind: ClassifierKind,
    weights: Vec<f64>,
    bias: f64,
}

impl LinearModel {
    pub fn kind(&self) -> ClassifierKind {
        self.kind
    }

    pub fn dimension(&self) -> usize {
        self.weights.len()
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn bias(&self) -> f64 {
        self.bias
    }

    pub fn score(&self, x: &FeatureVector) -> f64 {
        let mut score = self.bias;
        for (index, value) in x.iter() {
            score += self.weights[index] * value;
        }
        score
    }

    pub fn validate(&self) -> Result<(), ModelError> {
        if !matches!(
            self.kind,
            ClassifierKind::Lr | ClassifierKind::Svm | ClassifierKind::Sgd
        ) {
            return Err(ModelError::InvalidHyperparam(
                "linear model tagged with a non-linear kind".into(),
            ));
        }
        if self.weights.iter().any(|w| !w.is_finite()) || !self.bias.is_finite() {
            return Err(ModelError::NonFiniteLoss { epoch: 0 });
        }
        Ok(())
    }
}

fn sigmoid(z: f64) -> f64 {
    if z >= 0.0 {
        1.0 / (1.0 + float::exp(-z))
    } else {
        let e = float::exp(z);
        e / (1.0 + e)
    }
}

/// `ln(1 + e^m)` computed without overflow.
fn softplus(m: f64) -> f64 {
    if m > 0.0 {
        m + float::ln_1p(float::exp(-m))
    } else {
        float::ln_1p(float::exp(m))
    }
}

/// The logistic-regression training objective: mean log-loss plus
/// `λ/2·‖w‖²` (bias unregularized). Exposed so tests can check the
/// analytic gradient against finite differences.
pub fn logistic_objective(
    weights: &[f64],
    bias: f64,
    x: &[FeatureVector],
    y: &[PolarityLabel],
    l2_lambda: f64,
) -> f64 {
    let n = x.len() as f64;
    let mut loss = 0.0;
    for (vector, label) in x.iter().zip(y) {
        let mut z = bias;
        for (index, value) in vector.iter() {
            z += weights[index] * value;
        }
        let sign = if *label == PolarityLabel::Positive {
            1.0
        } else {
            -1.0
        };
        loss += softplus(-sign * z);
    }
    loss / n + 0.5 * l2_lambda * weights.iter().map(|w| w * w).sum::<f64>()
}

/// Analytic gradient of [`logistic_objective`] with respect to the
/// weights and bias.
pub fn logistic_gradient(
    weights: &[f64],
    bias: f64,
    x: &[FeatureVector],
    y: &[PolarityLabel],
    l2_lambda: f64,
) -> (Vec<f64>, f64) {
    let n = x.len() as f64;
    let mut grad_w = vec![0.0; weights.len()];
    let mut grad_b = 0.0;
    for (vector, label) in x.iter().zip(y) {
        let mut z = bias;
        for (index, value) in vector.iter() {
            z += weights[index] * value;
        }
        let target = label.index() as f64;
        let error = sigmoid(z) - target;
        for (index, value) in vector.iter() {
            grad_w[index] += error * value / n;
        }
        grad_b += error / n;
    }
    for (g, w) in grad_w.iter_mut().zip(weights) {
        *g += l2_lambda * w;
    }
    (grad_w, grad_b)
}

/// Fits L2-regularized logistic regression by full-batch gradient
/// descent from zero initialization. Deterministic; errors if the loss
/// becomes non-finite.
pub fn fit_lr(
    x: &[FeatureVector],
    y: &[PolarityLabel],
    params: &LrParams,
) -> Result<ClassifierModel, ModelError> {
    let dim = check_training_set(x, y)?;
    check_both_classes(y)?;
    if !(params.learning_rate > 0.0) || !(params.l2_lambda > 0.0) || !(params.tolerance > 0.0) {
        return Err(ModelError::InvalidHyperparam(format!(
            "learning_rate, l2_lambda, and tolerance must be positive \
             (got {}, {}, {})",
            params.learning_rate, params.l2_lambda, params.tolerance
        )));
    }
    if params.max_epochs == 0 {
        return Err(ModelError::InvalidHyperparam("max_epochs must be at least 1".into()));
    }

    let mut weights = vec![0.0; dim];
    let mut bias = 0.0;
    for epoch in 0..params.max_epochs {
        let (grad_w, grad_b) = logistic_gradient(&weights, bias, x, y, params.l2_lambda);
        let grad_norm = float::sqrt(
            grad_w.iter().map(|g| g * g).sum::<f64>() + grad_b * grad_b,
        );
        if !grad_norm.is_finite() {
            return Err(ModelError::NonFiniteLoss { epoch });
        }
        if grad_norm < params.tolerance {
            break;
        }
        for (w, g) in weights.iter_mut().zip(&grad_w) {
            *w -= params.learning_rate * g;
        }
        bias -= params.learning_rate * grad_b;
    }
    let loss = logistic_objective(&weights, bias, x, y, params.l2_lambda);
    if !loss.is_finite() {
        return Err(ModelError::NonFiniteLoss {
            epoch: params.max_epochs,
        });
    }
    Ok(ClassifierModel::Linear(LinearModel {
        kind: ClassifierKind::Lr,
        weights,
        bias,
    }))
}

/// Primal hinge-loss SGD with the inverse-scaling schedule. Labels map
/// to ±1; epochs are seeded shuffles of the training order.
pub fn fit_linear_svm(
    x: &[FeatureVector],
    y: &[PolarityLabel],
    params: &SvmParams,
) -> Result<ClassifierModel, ModelError> {
    let model = train_sgd(
        x,
        y,
        SgdLoss::Hinge,
        Schedule::InvScaling,
        params.l2_lambda,
        params.epochs,
        params.seed,
        ClassifierKind::Svm,
    )?;
    Ok(model)
}

/// Per-sample SGD on the configured loss with L2 regularization and a
/// seeded shuffle each epoch.
pub fn fit_sgd(
    x: &[FeatureVector],
    y: &[PolarityLabel],
    params: &SgdParams,
) -> Result<ClassifierModel, ModelError> {
    train_sgd(
        x,
        y,
        params.loss,
        params.schedule,
        params.l2_lambda,
        params.epochs,
        params.seed,
        ClassifierKind::Sgd,
    )
}

#[allow(clippy::too_many_arguments)]
fn train_sgd(
    x: &[FeatureVector],
    y: &[PolarityLabel],
    loss: SgdLoss,
    schedule: Schedule,
    l2_lambda: f64,
    epochs: usize,
    seed: u64,
    kind: ClassifierKind,
) -> Result<ClassifierModel, ModelError> {
    let dim = check_training_set(x, y)?;
    check_both_classes(y)?;
    if !(l2_lambda > 0.0) {
        return Err(ModelError::InvalidHyperparam(format!(
            "l2_lambda must be positive, got {l2_lambda}"
        )));
    }
    if epochs == 0 {
        return Err(ModelError::InvalidHyperparam("epochs must be at least 1".into()));
    }
    if let Schedule::Constant(eta) = schedule {
        if !(eta > 0.0) {
            return Err(ModelError::InvalidHyperparam(format!(
                "constant learning rate must be positive, got {eta}"
            )));
        }
    }

    let mut weights = vec![0.0f64; dim];
    let mut bias = 0.0f64;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut order: Vec<usize> = (0..x.len()).collect();
    let mut t: u64 = 0;

    for epoch in 0..epochs {
        order.shuffle(&mut rng);
        for &i in &order {
            t += 1;
            let eta = match schedule {
                Schedule::InvScaling => 1.0 / (l2_lambda * t as f64),
                Schedule::Constant(eta) => eta,
            };
            let vector = &x[i];
            let sign = if y[i] == PolarityLabel::Positive {
                1.0
            } else {
                -1.0
            };
            let mut z = bias;
            for (index, value) in vector.iter() {
                z += weights[index] * value;
            }
            let decay = 1.0 - eta * l2_lambda;
            for w in weights.iter_mut() {
                *w *= decay;
            }
            match loss {
                SgdLoss::Hinge => {
                    if sign * z < 1.0 {
                        for (index, value) in vector.iter() {
                            weights[index] += eta * sign * value;
                        }
                        bias += eta * sign;
                    }
                }
                SgdLoss::Logistic => {
                    let target = if sign > 0.0 { 1.0 } else { 0.0 };
                    let error = sigmoid(z) - target;
                    for (index, value) in vector.iter() {
                        weights[index] -= eta * error * value;
                    }
                    bias -= eta * error;
                }
            }
        }
        if weights.iter().any(|w| !w.is_finite()) || !bias.is_finite() {
            return Err(ModelError::NonFiniteLoss { epoch });
        }
    }

    Ok(ClassifierModel::Linear(LinearModel {
        kind,
        weights,
        bias,
    }))
}
