//! K-nearest-neighbors by cosine similarity.
//!
//! Training just retains the vectors. Prediction takes the majority
//! label among the `k` most similar training points; similarity ties
//! break toward the lower training index, and a zero-norm vector has
//! similarity 0 to everything. The score is the positive-neighbor
//! fraction mapped to [-1, 1], so an odd `k` never produces a tie.

use alloc::format;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use super::{check_training_set, ClassifierModel, ModelError};
use crate::corpus::PolarityLabel;
use crate::features::FeatureVector;

/// Neighbor count; must be odd and no larger than the training set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct KnnParams {
    pub k: usize,
}

impl Default for KnnParams {
    fn default() -> Self {
        KnnParams { k: 5 }
    }
}

/// Retained training data for lazy KNN classification.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct KnnModel {
    train: Vec<FeatureVector>,
    labels: Vec<PolarityLabel>,
    norms: Vec<f64>,
    k: usize,
    dim: usize,
}

impl KnnModel {
    pub fn dimension(&self) -> usize {
        self.dim
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn score(&self, x: &FeatureVector) -> f64 {
        let query_norm = x.norm();
        let mut ranked: Vec<(f64, usize)> = self
            .train
            .iter()
            .enumerate()
            .map(|(index, candidate)| {
                let denominator = query_norm * self.norms[index];
                let similarity = if denominator > 0.0 {
                    x.dot(candidate) / denominator
                } else {
                    0.0
                };
                (similarity, index)
            })
            .collect();
        ranked.sort_unstable_by(|a, b| b.0.total_cmp(&a.0).then(a.1.cmp(&b.1)));
        let positives = ranked[..self.k]
            .iter()
            .filter(|&&(_, index)| self.labels[index] == PolarityLabel::Positive)
            .count();
        2.0 * positives as f64 / self.k as f64 - 1.0
    }

    pub fn validate(&self) -> Result<(), ModelError> {
        if self.train.len() != self.labels.len() || self.train.len() != self.norms.len() {
            return Err(ModelError::LengthMismatch {
                features: self.train.len(),
                labels: self.labels.len(),
            });
        }
        if self.k == 0 || self.k > self.train.len() {
            return Err(ModelError::KTooLarge {
                k: self.k,
                n: self.train.len(),
            });
        }
        for vector in &self.train {
            if vector.dim() != self.dim {
                return Err(ModelError::InconsistentDimensions {
                    expected: self.dim,
                    found: vector.dim(),
                });
            }
        }
        Ok(())
    }
}

/// Stores the training set for lazy KNN prediction. Requires an odd
/// `k` with `1 ≤ k ≤ |x|`.
pub fn make_knn(
    x: &[FeatureVector],
    y: &[PolarityLabel],
    params: &KnnParams,
) -> Result<ClassifierModel, ModelError> {
    let dim = check_training_set(x, y)?;
    if params.k == 0 || params.k % 2 == 0 {
        return Err(ModelError::InvalidHyperparam(format!(
            "k must be an odd positive integer, got {}",
            params.k
        )));
    }
    if params.k > x.len() {
        return Err(ModelError::KTooLarge {
            k: params.k,
            n: x.len(),
        });
    }
    let norms = x.iter().map(FeatureVector::norm).collect();
    Ok(ClassifierModel::Knn(KnnModel {
        train: x.to_vec(),
        labels: y.to_vec(),
        norms,
        k: params.k,
        dim,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn vector(entries: &[(usize, f64)], dim: usize) -> FeatureVector {
        FeatureVector::from_sorted(entries.to_vec(), dim)
    }

    fn toy() -> (Vec<FeatureVector>, Vec<PolarityLabel>) {
        let x = vec![
            vector(&[(0, 1.0)], 3),
            vector(&[(0, 1.0), (1, 0.2)], 3),
            vector(&[(2, 1.0)], 3),
        ];
        let y = vec![
            PolarityLabel::Positive,
            PolarityLabel::Positive,
            PolarityLabel::Negative,
        ];
        (x, y)
    }

    #[test]
    fn identity_neighbor_wins_at_k1() {
        let (x, y) = toy();
        let model = make_knn(&x, &y, &KnnParams { k: 1 }).unwrap();
        assert_eq!(model.predict(&x[2]).unwrap().label, PolarityLabel::Negative);
        assert_eq!(model.predict(&x[0]).unwrap().label, PolarityLabel::Positive);
    }

    #[test]
    fn majority_of_three_neighbors() {
        let (x, y) = toy();
        let model = make_knn(&x, &y, &KnnParams { k: 3 }).unwrap();
        let prediction = model.predict(&vector(&[(0, 0.5)], 3)).unwrap();
        assert_eq!(prediction.label, PolarityLabel::Positive);
        // two of the three neighbors are positive
        assert!((prediction.score - (2.0 / 3.0 * 2.0 - 1.0)).abs() < 1e-15);
    }

    #[test]
    fn k_limits_are_enforced() {
        let (x, y) = toy();
        assert_eq!(
            make_knn(&x, &y, &KnnParams { k: 5 }),
            Err(ModelError::KTooLarge { k: 5, n: 3 })
        );
        assert!(matches!(
            make_knn(&x, &y, &KnnParams { k: 2 }),
            Err(ModelError::InvalidHyperparam(_))
        ));
        assert!(matches!(
            make_knn(&x, &y, &KnnParams { k: 0 }),
            Err(ModelError::InvalidHyperparam(_))
        ));
    }

    #[test]
    fn zero_norm_query_uses_index_order() {
        let (x, y) = toy();
        let model = make_knn(&x, &y, &KnnParams { k: 1 }).unwrap();
        // all similarities are 0, so the lowest index (positive) wins
        let prediction = model.predict(&FeatureVector::empty(3)).unwrap();
        assert_eq!(prediction.label, PolarityLabel::Positive);
    }
}
