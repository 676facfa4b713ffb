//! Cross-validation and learning curves over tokenized documents.

use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::folds::{make_folds, FoldAssignment};
use super::EvalError;
use crate::corpus::{LabeledCorpus, PolarityLabel};
use crate::features::{NgramConfig, TfidfModel};
use crate::float;
use crate::models::{ClassifierKind, ClassifierModel, Hyperparams};
use crate::preprocess::{preprocess_review, StopwordList};

fn fit_and_score(
    train_docs: &[Vec<alloc::string::String>],
    train_labels: &[PolarityLabel],
    test_docs: &[Vec<alloc::string::String>],
    test_labels: &[PolarityLabel],
    config: &NgramConfig,
    kind: ClassifierKind,
    hp: &Hyperparams,
) -> Result<(TfidfModel, ClassifierModel, f64), EvalError> {
    let tfidf = TfidfModel::fit(train_docs, config.clone())?;
    let x_train = tfidf.vectorize_corpus(train_docs);
    let model = ClassifierModel::fit(kind, &x_train, train_labels, hp)?;
    let mut correct = 0usize;
    for (doc, &label) in test_docs.iter().zip(test_labels) {
        let prediction = model.predict(&tfidf.vectorize(doc))?;
        if prediction.label == label {
            correct += 1;
        }
    }
    let accuracy = if test_docs.is_empty() {
        0.0
    } else {
        correct as f64 / test_docs.len() as f64
    };
    Ok((tfidf, model, accuracy))
}

fn gather<'a, T: Clone>(items: &'a [T], indices: &[usize]) -> Vec<T> {
    indices.iter().map(|&i| items[i].clone()).collect()
}

/// Fits the TF-IDF model and classifier for one held-out fold and
/// scores accuracy on that fold. Split out so tests can inspect the
/// per-fold vocabulary for leakage.
pub(crate) fn run_fold(
    docs: &[Vec<alloc::string::String>],
    labels: &[PolarityLabel],
    config: &NgramConfig,
    kind: ClassifierKind,
    hp: &Hyperparams,
    folds: &FoldAssignment,
    fold: usize,
) -> Result<(TfidfModel, ClassifierModel, f64), EvalError> {
    let train_idx = folds.train_indices(fold);
    let test_idx = folds.test_indices(fold);
    fit_and_score(
        &gather(docs, &train_idx),
        &gather(labels, &train_idx),
        &gather(docs, &test_idx),
        &gather(labels, &test_idx),
        config,
        kind,
        hp,
    )
}

/// Stratified k-fold cross-validation over tokenized documents,
/// returning the unweighted mean of the per-fold accuracies.
///
/// The vocabulary is re-fit on the training folds of every split, so
/// nothing from a held-out fold can leak into the features.
pub fn cross_validate(
    docs: &[Vec<alloc::string::String>],
    labels: &[PolarityLabel],
    config: &NgramConfig,
    kind: ClassifierKind,
    hp: &Hyperparams,
    k: usize,
    seed: u64,
) -> Result<f64, EvalError> {
    if docs.len() != labels.len() {
        return Err(EvalError::LengthMismatch {
            labels: labels.len(),
            scores: docs.len(),
        });
    }
    let folds = make_folds(labels, k, seed)?;
    let mut total = 0.0;
    for fold in 0..k {
        let (_, _, accuracy) = run_fold(docs, labels, config, kind, hp, &folds, fold)?;
        total += accuracy;
    }
    Ok(total / k as f64)
}

/// [`cross_validate`] over raw reviews: each text runs through the
/// cleaning pipeline with `stops` first.
pub fn cross_validate_corpus(
    corpus: &LabeledCorpus,
    stops: &StopwordList,
    config: &NgramConfig,
    kind: ClassifierKind,
    hp: &Hyperparams,
    k: usize,
    seed: u64,
) -> Result<f64, EvalError> {
    let docs: Vec<Vec<alloc::string::String>> = corpus
        .reviews()
        .iter()
        .map(|r| preprocess_review(&r.text, stops))
        .collect();
    cross_validate(&docs, &corpus.labels(), config, kind, hp, k, seed)
}

/// One learning-curve sample: accuracy after training on a fraction of
/// the training set.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LearningPoint {
    pub fraction: f64,
    pub accuracy: f64,
}

/// Accuracy as a function of training-set fraction.
#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct LearningCurve {
    pub points: Vec<LearningPoint>,
}

/// For each fraction `f`, trains on the first `⌈f·n⌉` documents of one
/// seeded shuffle of the training set and scores accuracy on the fixed
/// held-out set. Fractions must lie in (0, 1] and increase strictly.
#[allow(clippy::too_many_arguments)]
pub fn learning_curve(
    train_docs: &[Vec<alloc::string::String>],
    train_labels: &[PolarityLabel],
    eval_docs: &[Vec<alloc::string::String>],
    eval_labels: &[PolarityLabel],
    config: &NgramConfig,
    kind: ClassifierKind,
    hp: &Hyperparams,
    fractions: &[f64],
    seed: u64,
) -> Result<LearningCurve, EvalError> {
    if train_docs.len() != train_labels.len() || eval_docs.len() != eval_labels.len() {
        return Err(EvalError::LengthMismatch {
            labels: train_labels.len(),
            scores: train_docs.len(),
        });
    }
    for pair in fractions.windows(2) {
        if pair[1] <= pair[0] {
            return Err(EvalError::NonIncreasingFractions);
        }
    }
    for &fraction in fractions {
        if !(fraction > 0.0 && fraction <= 1.0) {
            return Err(EvalError::InvalidFraction(fraction));
        }
    }

    let mut order: Vec<usize> = (0..train_docs.len()).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    order.shuffle(&mut rng);

    let mut points = Vec::with_capacity(fractions.len());
    for &fraction in fractions {
        let take = (float::ceil(fraction * train_docs.len() as f64) as usize)
            .clamp(1, train_docs.len());
        let subset = &order[..take];
        let (_, _, accuracy) = fit_and_score(
            &gather(train_docs, subset),
            &gather(train_labels, subset),
            eval_docs,
            eval_labels,
            config,
            kind,
            hp,
        )?;
        points.push(LearningPoint { fraction, accuracy });
    }
    Ok(LearningCurve { points })
}
