//! N-gram vocabulary construction and sparse TF-IDF vectorization.
//!
//! A term's weight in a document is `tf(w, d) · ln(N / df(w))`, where
//! `tf` is the raw occurrence count of the n-gram among the document's
//! extracted n-grams, `N` is the number of training documents, and
//! `df(w)` counts training documents containing the term at least once.
//! No smoothing is applied: the vocabulary is built from the same
//! documents that define `df`, so `df ≥ 1` always holds, and a term
//! present in every document gets weight 0 and is simply not stored.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::float;

/// Errors from feature extraction and vocabulary fitting.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum FeatureError {
    #[error("n-gram order {0} is outside 1..=3")]
    OrderOutOfRange(usize),
    #[error("cannot fit a vocabulary on an empty document list")]
    EmptyTrainingSet,
    #[error("invalid n-gram config: {0}")]
    InvalidConfig(String),
}

/// Which n-gram orders feed the vocabulary, plus vectorizer knobs.
///
/// N-grams are space-joined token windows. When several orders are
/// listed their vocabularies share one index space; the usual
/// experiment configs keep a single order per run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NgramConfig {
    /// Sorted, deduplicated orders, each in 1..=3.
    pub orders: Vec<usize>,
    /// Drop terms seen in fewer than this many training documents.
    pub min_df: usize,
    /// Multiply term counts by `ln(N / df)`; raw counts when false.
    pub use_idf: bool,
    /// L2-normalize each produced vector. Off by default.
    pub l2_normalize: bool,
}

impl NgramConfig {
    /// Config for a single n-gram order with default knobs.
    pub fn single(order: usize) -> Result<Self, FeatureError> {
        NgramConfig::with_orders(&[order])
    }

    pub fn unigram() -> Self {
        NgramConfig::single(1).expect("order 1 is valid")
    }

    pub fn with_orders(orders: &[usize]) -> Result<Self, FeatureError> {
        let mut sorted: Vec<usize> = orders.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let config = NgramConfig {
            orders: sorted,
            min_df: 1,
            use_idf: true,
            l2_normalize: false,
        };
        config.validate()?;
        Ok(config)
    }

    pub fn validate(&self) -> Result<(), FeatureError> {
        if self.orders.is_empty() {
            return Err(FeatureError::InvalidConfig("orders is empty".into()));
        }
        for &n in &self.orders {
            if !(1..=3).contains(&n) {
                return Err(FeatureError::OrderOutOfRange(n));
            }
        }
        if self.min_df < 1 {
            return Err(FeatureError::InvalidConfig("min_df must be at least 1".into()));
        }
        Ok(())
    }
}

impl Default for NgramConfig {
    fn default() -> Self {
        NgramConfig::unigram()
    }
}

/// All contiguous token windows of length `n`, space-joined, in order.
/// A document shorter than `n` yields no n-grams.
pub fn extract_ngrams(tokens: &[String], n: usize) -> Result<Vec<String>, FeatureError> {
    if !(1..=3).contains(&n) {
        return Err(FeatureError::OrderOutOfRange(n));
    }
    Ok(tokens.windows(n).map(|w| w.join(" ")).collect())
}

/// Term-to-index map with per-term document frequencies.
///
/// Indices are assigned in lexicographic term order (by code point), so
/// fitting the same documents always yields the same layout. Iterating
/// the map visits terms in index order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Vocabulary {
    term_to_index: BTreeMap<String, usize>,
    doc_frequency: Vec<usize>,
    num_train_docs: usize,
}

impl Vocabulary {
    pub fn len(&self) -> usize {
        self.term_to_index.len()
    }

    pub fn is_empty(&self) -> bool {
        self.term_to_index.is_empty()
    }

    pub fn num_train_docs(&self) -> usize {
        self.num_train_docs
    }

    pub fn index_of(&self, term: &str) -> Option<usize> {
        self.term_to_index.get(term).copied()
    }

    /// Document frequency of the term at `index`.
    pub fn doc_frequency(&self, index: usize) -> usize {
        self.doc_frequency[index]
    }

    /// Terms with their indices and document frequencies, in index order.
    pub fn terms(&self) -> impl Iterator<Item = (&str, usize, usize)> {
        self.term_to_index
            .iter()
            .map(|(term, &index)| (term.as_str(), index, self.doc_frequency[index]))
    }

    /// Internal consistency check, used after deserialization.
    pub fn validate(&self) -> Result<(), FeatureError> {
        if self.doc_frequency.len() != self.term_to_index.len() {
            return Err(FeatureError::InvalidConfig(
                "doc_frequency length differs from vocabulary size".into(),
            ));
        }
        for (i, (_, &index)) in self.term_to_index.iter().enumerate() {
            if index != i {
                return Err(FeatureError::InvalidConfig(
                    "indices are not lexicographically assigned".into(),
                ));
            }
        }
        for &df in &self.doc_frequency {
            if df < 1 || df > self.num_train_docs {
                return Err(FeatureError::InvalidConfig(
                    "document frequency outside 1..=N".into(),
                ));
            }
        }
        Ok(())
    }
}

/// Sparse feature vector: strictly increasing indices with non-zero,
/// finite weights.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FeatureVector {
    entries: Vec<(usize, f64)>,
    dim: usize,
}

impl FeatureVector {
    /// Builds a vector from entries sorted by index. Zero weights are
    /// dropped; non-finite weights and out-of-range indices panic.
    pub fn from_sorted(entries: Vec<(usize, f64)>, dim: usize) -> Self {
        let mut last: Option<usize> = None;
        for &(index, weight) in &entries {
            assert!(index < dim, "index {index} out of dimension {dim}");
            assert!(weight.is_finite(), "weight at {index} is not finite");
            assert!(last.map_or(true, |p| p < index), "indices not strictly increasing");
            last = Some(index);
        }
        let entries = entries.into_iter().filter(|&(_, w)| w != 0.0).collect();
        FeatureVector { entries, dim }
    }

    pub fn empty(dim: usize) -> Self {
        FeatureVector {
            entries: Vec::new(),
            dim,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Number of stored (non-zero) entries.
    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, f64)> + '_ {
        self.entries.iter().copied()
    }

    pub fn get(&self, index: usize) -> f64 {
        match self.entries.binary_search_by_key(&index, |e| e.0) {
            Ok(pos) => self.entries[pos].1,
            Err(_) => 0.0,
        }
    }

    /// Sparse dot product by merging the two index lists.
    pub fn dot(&self, other: &FeatureVector) -> f64 {
        let mut sum = 0.0;
        let (mut i, mut j) = (0, 0);
        while i < self.entries.len() && j < other.entries.len() {
            let (ia, va) = self.entries[i];
            let (ib, vb) = other.entries[j];
            match ia.cmp(&ib) {
                core::cmp::Ordering::Less => i += 1,
                core::cmp::Ordering::Greater => j += 1,
                core::cmp::Ordering::Equal => {
                    sum += va * vb;
                    i += 1;
                    j += 1;
                }
            }
        }
        sum
    }

    pub fn norm(&self) -> f64 {
        float::sqrt(self.entries.iter().map(|&(_, w)| w * w).sum())
    }
}

/// A fitted TF-IDF vectorizer: vocabulary plus the n-gram config it was
/// built with.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TfidfModel {
    vocabulary: Vocabulary,
    config: NgramConfig,
}

impl TfidfModel {
    /// Fits the vocabulary and document frequencies on tokenized
    /// training documents.
    pub fn fit(train_docs: &[Vec<String>], config: NgramConfig) -> Result<Self, FeatureError> {
        config.validate()?;
        if train_docs.is_empty() {
            return Err(FeatureError::EmptyTrainingSet);
        }
        let mut df: BTreeMap<String, usize> = BTreeMap::new();
        for doc in train_docs {
            let mut seen: BTreeSet<String> = BTreeSet::new();
            for &n in &config.orders {
                for gram in extract_ngrams(doc, n)? {
                    seen.insert(gram);
                }
            }
            for gram in seen {
                *df.entry(gram).or_insert(0) += 1;
            }
        }
        let mut term_to_index = BTreeMap::new();
        let mut doc_frequency = Vec::new();
        for (term, count) in df {
            if count >= config.min_df {
                term_to_index.insert(term, doc_frequency.len());
                doc_frequency.push(count);
            }
        }
        Ok(TfidfModel {
            vocabulary: Vocabulary {
                term_to_index,
                doc_frequency,
                num_train_docs: train_docs.len(),
            },
            config,
        })
    }

    pub fn vocabulary(&self) -> &Vocabulary {
        &self.vocabulary
    }

    pub fn config(&self) -> &NgramConfig {
        &self.config
    }

    /// Feature-space dimension (vocabulary size).
    pub fn dimension(&self) -> usize {
        self.vocabulary.len()
    }

    /// Maps a tokenized document to its sparse TF-IDF vector.
    /// Out-of-vocabulary n-grams contribute nothing.
    pub fn vectorize(&self, doc: &[String]) -> FeatureVector {
        let mut counts: BTreeMap<usize, f64> = BTreeMap::new();
        for &n in &self.config.orders {
            let grams = extract_ngrams(doc, n).expect("config orders are validated");
            for gram in grams {
                if let Some(index) = self.vocabulary.index_of(&gram) {
                    *counts.entry(index).or_insert(0.0) += 1.0;
                }
            }
        }
        let n_docs = self.vocabulary.num_train_docs as f64;
        let mut entries: Vec<(usize, f64)> = counts
            .into_iter()
            .map(|(index, tf)| {
                let weight = if self.config.use_idf {
                    tf * float::ln(n_docs / self.vocabulary.doc_frequency[index] as f64)
                } else {
                    tf
                };
                (index, weight)
            })
            .filter(|&(_, w)| w != 0.0)
            .collect();
        if self.config.l2_normalize {
            let norm = float::sqrt(entries.iter().map(|&(_, w)| w * w).sum());
            if norm > 0.0 {
                for entry in &mut entries {
                    entry.1 /= norm;
                }
            }
        }
        FeatureVector::from_sorted(entries, self.vocabulary.len())
    }

    /// Element-wise [`vectorize`](Self::vectorize), order preserved.
    pub fn vectorize_corpus(&self, docs: &[Vec<String>]) -> Vec<FeatureVector> {
        docs.iter().map(|doc| self.vectorize(doc)).collect()
    }

    pub fn validate(&self) -> Result<(), FeatureError> {
        self.config.validate()?;
        self.vocabulary.validate()
    }
}
