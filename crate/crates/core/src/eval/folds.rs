//! Stratified fold assignment for k-fold cross-validation.

use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::EvalError;
use crate::corpus::PolarityLabel;

/// A per-sample fold index in `0..k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FoldAssignment {
    fold_of: Vec<usize>,
    k: usize,
    seed: u64,
}

impl FoldAssignment {
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    /// Fold index of every sample, in input order.
    pub fn fold_of(&self) -> &[usize] {
        &self.fold_of
    }

    /// Sample indices held out by `fold`.
    pub fn test_indices(&self, fold: usize) -> Vec<usize> {
        self.fold_of
            .iter()
            .enumerate()
            .filter(|&(_, &f)| f == fold)
            .map(|(i, _)| i)
            .collect()
    }

    /// Sample indices trained on when `fold` is held out.
    pub fn train_indices(&self, fold: usize) -> Vec<usize> {
        self.fold_of
            .iter()
            .enumerate()
            .filter(|&(_, &f)| f != fold)
            .map(|(i, _)| i)
            .collect()
    }
}

/// Stratified fold assignment: each class is shuffled with the seed and
/// dealt round-robin, with the dealing position carried from one class
/// to the next so fold sizes stay balanced overall (every fold within
/// one of `n/k`, and within one of `n_c/k` per class).
pub fn make_folds(
    labels: &[PolarityLabel],
    k: usize,
    seed: u64,
) -> Result<FoldAssignment, EvalError> {
    if k < 2 {
        return Err(EvalError::TooFewFolds(k));
    }
    if labels.len() < k {
        return Err(EvalError::TooFewSamples {
            n: labels.len(),
            k,
        });
    }
    for label in PolarityLabel::ALL {
        if !labels.contains(&label) {
            return Err(EvalError::EmptyClass {
                label: label.as_str().to_string(),
            });
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut fold_of = vec![0usize; labels.len()];
    let mut next_fold = 0usize;
    for label in PolarityLabel::ALL {
        let mut members: Vec<usize> = labels
            .iter()
            .enumerate()
            .filter(|&(_, &l)| l == label)
            .map(|(i, _)| i)
            .collect();
        members.shuffle(&mut rng);
        for index in members {
            fold_of[index] = next_fold;
            next_fold = (next_fold + 1) % k;
        }
    }
    Ok(FoldAssignment { fold_of, k, seed })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn labels(neg: usize, pos: usize) -> Vec<PolarityLabel> {
        let mut v = vec![PolarityLabel::Negative; neg];
        v.extend(vec![PolarityLabel::Positive; pos]);
        v
    }

    #[test]
    fn ten_of_ten_gives_singleton_folds() {
        let folds = make_folds(&labels(5, 5), 10, 0).unwrap();
        for fold in 0..10 {
            assert_eq!(folds.test_indices(fold).len(), 1);
        }
    }

    #[test]
    fn paper_shaped_test_split_balances_folds() {
        // 89 negative, 111 positive in 10 folds: every fold holds 20
        // samples with 8-9 negatives and 11-12 positives
        let y = labels(89, 111);
        let folds = make_folds(&y, 10, 7).unwrap();
        for fold in 0..10 {
            let test = folds.test_indices(fold);
            assert_eq!(test.len(), 20);
            let neg = test
                .iter()
                .filter(|&&i| y[i] == PolarityLabel::Negative)
                .count();
            let pos = test.len() - neg;
            assert!((8..=9).contains(&neg), "fold {fold} has {neg} negatives");
            assert!((11..=12).contains(&pos), "fold {fold} has {pos} positives");
        }
    }

    #[test]
    fn assignment_is_deterministic() {
        let y = labels(13, 17);
        assert_eq!(make_folds(&y, 5, 3).unwrap(), make_folds(&y, 5, 3).unwrap());
        assert_ne!(
            make_folds(&y, 5, 3).unwrap().fold_of(),
            make_folds(&y, 5, 4).unwrap().fold_of()
        );
    }

    #[test]
    fn preconditions_are_enforced() {
        assert_eq!(make_folds(&labels(3, 3), 1, 0), Err(EvalError::TooFewFolds(1)));
        assert_eq!(
            make_folds(&labels(1, 1), 5, 0),
            Err(EvalError::TooFewSamples { n: 2, k: 5 })
        );
        assert_eq!(
            make_folds(&labels(0, 10), 5, 0),
            Err(EvalError::EmptyClass {
                label: "negative".to_string()
            })
        );
    }

    #[test]
    fn minority_class_smaller_than_k_still_stratifies() {
        let y = labels(2, 10);
        let folds = make_folds(&y, 5, 0).unwrap();
        for fold in 0..5 {
            let test = folds.test_indices(fold);
            let neg = test
                .iter()
                .filter(|&&i| y[i] == PolarityLabel::Negative)
                .count();
            assert!(neg <= 1, "fold {fold} holds {neg} negatives");
            assert!(!test.is_empty());
        }
    }

    #[test]
    fn train_and_test_partition_the_indices() {
        let y = labels(12, 9);
        let folds = make_folds(&y, 4, 1).unwrap();
        for fold in 0..4 {
            let mut all = folds.test_indices(fold);
            all.extend(folds.train_indices(fold));
            all.sort_unstable();
            assert_eq!(all, (0..y.len()).collect::<Vec<_>>());
        }
    }
}
