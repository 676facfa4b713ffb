//! Multinomial naive Bayes over TF-IDF weights used as fractional
//! counts.
//!
//! Class priors are empirical: `P(c) = count(c) / n`. Term likelihoods
//! are Laplace-smoothed sums of feature weights:
//!
//! ```text
//! P(w | c) = (α + Σ_{i∈c} x_i[w]) / (α·V + Σ_{i∈c} Σ_w x_i[w])
//! ```
//!
//! stored in log space. The decision score is the posterior log-odds
//! `log P(pos | x) − log P(neg | x)`.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use super::{check_both_classes, check_training_set, ClassifierModel, ModelError};
use crate::corpus::PolarityLabel;
use crate::features::FeatureVector;
use crate::float;

/// Laplace smoothing strength; must be positive.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MnbParams {
    pub alpha: f64,
}

impl Default for MnbParams {
    fn default() -> Self {
        MnbParams { alpha: 1.0 }
    }
}

/// Fitted multinomial naive Bayes parameters.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MnbModel {
    log_prior: [f64; 2],
    log_likelihood: [Vec<f64>; 2],
    dim: usize,
}

impl MnbModel {
    pub fn dimension(&self) -> usize {
        self.dim
    }

    pub fn log_prior(&self, label: PolarityLabel) -> f64 {
        self.log_prior[label.index()]
    }

    /// Per-term log-likelihood table for one class.
    pub fn log_likelihood(&self, label: PolarityLabel) -> &[f64] {
        &self.log_likelihood[label.index()]
    }

    /// Posterior log-odds of the positive class.
    pub fn score(&self, x: &FeatureVector) -> f64 {
        let mut score = self.log_prior[1] - self.log_prior[0];
        for (index, weight) in x.iter() {
            score += weight * (self.log_likelihood[1][index] - self.log_likelihood[0][index]);
        }
        score
    }

    pub fn validate(&self) -> Result<(), ModelError> {
        for table in &self.log_likelihood {
            if table.len() != self.dim {
                return Err(ModelError::InconsistentDimensions {
                    expected: self.dim,
                    found: table.len(),
                });
            }
            if table.iter().any(|v| !v.is_finite()) {
                return Err(ModelError::InvalidHyperparam(
                    "log-likelihood table contains non-finite values".into(),
                ));
            }
        }
        if self.log_prior.iter().any(|v| !v.is_finite()) {
            return Err(ModelError::InvalidHyperparam(
                "log-prior contains non-finite values".into(),
            ));
        }
        Ok(())
    }
}

/// Fits multinomial naive Bayes. Requires both classes and `α > 0`.
pub fn fit_mnb(
    x: &[FeatureVector],
    y: &[PolarityLabel],
    params: &MnbParams,
) -> Result<ClassifierModel, ModelError> {
    let dim = check_training_set(x, y)?;
    check_both_classes(y)?;
    if !(params.alpha > 0.0) {
        return Err(ModelError::InvalidHyperparam(format!(
            "alpha must be positive, got {}",
            params.alpha
        )));
    }

    let n = y.len() as f64;
    let mut class_counts = [0usize; 2];
    let mut term_sums = [vec![0.0f64; dim], vec![0.0f64; dim]];
    let mut class_sums = [0.0f64; 2];
    for (vector, label) in x.iter().zip(y) {
        let c = label.index();
        class_counts[c] += 1;
        for (index, weight) in vector.iter() {
            term_sums[c][index] += weight;
            class_sums[c] += weight;
        }
    }

    let log_prior = [
        float::ln(class_counts[0] as f64 / n),
        float::ln(class_counts[1] as f64 / n),
    ];
    let alpha = params.alpha;
    let log_likelihood = [0, 1].map(|c| {
        let denominator = float::ln(alpha * dim as f64 + class_sums[c]);
        term_sums[c]
            .iter()
            .map(|&sum| float::ln(alpha + sum) - denominator)
            .collect()
    });

    Ok(ClassifierModel::Mnb(MnbModel {
        log_prior,
        log_likelihood,
        dim,
    }))
}
