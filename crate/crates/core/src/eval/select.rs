//! Cross-validation score tables and best-k model selection.
//!
//! Selection sorts a score column descending and returns the first
//! `top_k` entries. The printed procedure this reproduces sorts its
//! score list ascending and walks five entries off it, which cannot
//! return the intended best four; the evident intent — the four
//! highest cross-validation scores — is implemented instead.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::models::ClassifierKind;

/// A row key in the score table: one of the built-in classifiers or an
/// externally scored model known only by name.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ModelId {
    Builtin(ClassifierKind),
    External(String),
}

impl ModelId {
    /// Parses a builtin kind name, falling back to an external entry.
    pub fn parse(s: &str) -> Self {
        match ClassifierKind::parse(s) {
            Some(kind) => ModelId::Builtin(kind),
            None => ModelId::External(s.to_string()),
        }
    }

    pub fn name(&self) -> &str {
        match self {
            ModelId::Builtin(kind) => kind.as_str(),
            ModelId::External(name) => name.as_str(),
        }
    }

    /// Canonical tie-break rank: LR, KNN, MNB, SVM, SGD, then external
    /// entries by name.
    fn tie_rank(&self) -> (u8, &str) {
        match self {
            ModelId::Builtin(ClassifierKind::Lr) => (0, ""),
            ModelId::Builtin(ClassifierKind::Knn) => (1, ""),
            ModelId::Builtin(ClassifierKind::Mnb) => (2, ""),
            ModelId::Builtin(ClassifierKind::Svm) => (3, ""),
            ModelId::Builtin(ClassifierKind::Sgd) => (4, ""),
            ModelId::External(name) => (5, name.as_str()),
        }
    }
}

impl Ord for ModelId {
    fn cmp(&self, other: &Self) -> core::cmp::Ordering {
        self.tie_rank().cmp(&other.tie_rank())
    }
}

impl PartialOrd for ModelId {
    fn partial_cmp(&self, other: &Self) -> Option<core::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl core::fmt::Display for ModelId {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(self.name())
    }
}

impl Serialize for ModelId {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.name())
    }
}

impl<'de> Deserialize<'de> for ModelId {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = <&str>::deserialize(deserializer)?;
        if s.is_empty() {
            return Err(D::Error::custom("model name must be non-empty"));
        }
        Ok(ModelId::parse(s))
    }
}

/// Mean cross-validation accuracy per (model, n-gram order) cell.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct CvScoreTable {
    entries: BTreeMap<ModelId, BTreeMap<usize, f64>>,
}

impl CvScoreTable {
    pub fn new() -> Self {
        CvScoreTable::default()
    }

    pub fn insert(&mut self, model: ModelId, order: usize, accuracy: f64) {
        self.entries.entry(model).or_default().insert(order, accuracy);
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, model: &ModelId, order: usize) -> Option<f64> {
        self.entries.get(model).and_then(|row| row.get(&order)).copied()
    }

    /// All n-gram orders with at least one score.
    pub fn orders(&self) -> Vec<usize> {
        let mut orders: Vec<usize> = self
            .entries
            .values()
            .flat_map(|row| row.keys().copied())
            .collect();
        orders.sort_unstable();
        orders.dedup();
        orders
    }

    /// The score column for one n-gram order.
    pub fn column(&self, order: usize) -> BTreeMap<ModelId, f64> {
        self.entries
            .iter()
            .filter_map(|(model, row)| row.get(&order).map(|&acc| (model.clone(), acc)))
            .collect()
    }

    pub fn rows(&self) -> impl Iterator<Item = (&ModelId, &BTreeMap<usize, f64>)> {
        self.entries.iter()
    }
}

/// Result of best-k selection over one score column.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ModelSelection {
    /// Selected models, best cross-validation accuracy first.
    pub ranked: Vec<ModelId>,
    /// Set when the column held fewer models than requested.
    pub fewer_than_requested: bool,
}

/// Picks the `top_k` models of a score column by descending accuracy;
/// ties break in the canonical order (LR, KNN, MNB, SVM, SGD, then
/// external names). A short column returns everything it has, flagged.
pub fn select_top_models(scores: &BTreeMap<ModelId, f64>, top_k: usize) -> ModelSelection {
    let mut ranked: Vec<(&ModelId, f64)> = scores.iter().map(|(m, &s)| (m, s)).collect();
    ranked.sort_by(|a, b| b.1.total_cmp(&a.1).then_with(|| a.0.cmp(b.0)));
    let take = top_k.min(ranked.len());
    ModelSelection {
        ranked: ranked[..take].iter().map(|(m, _)| (*m).clone()).collect(),
        fewer_than_requested: scores.len() < top_k,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn id(name: &str) -> ModelId {
        ModelId::parse(name)
    }

    fn table5_unigram() -> BTreeMap<ModelId, f64> {
        [
            ("lr", 0.83),
            ("knn", 0.58),
            ("dt", 0.69),
            ("rf", 0.73),
            ("mnb", 0.88),
            ("svm", 0.81),
            ("sgd", 0.77),
        ]
        .into_iter()
        .map(|(name, score)| (id(name), score))
        .collect()
    }

    #[test]
    fn selects_the_published_best_four() {
        let selection = select_top_models(&table5_unigram(), 4);
        assert!(!selection.fewer_than_requested);
        assert_eq!(
            selection.ranked,
            vec![id("mnb"), id("lr"), id("svm"), id("sgd")]
        );
    }

    #[test]
    fn equal_scores_fall_back_to_canonical_order() {
        let scores: BTreeMap<ModelId, f64> = ClassifierKind::ALL
            .into_iter()
            .map(|kind| (ModelId::Builtin(kind), 0.5))
            .collect();
        let selection = select_top_models(&scores, 4);
        assert_eq!(
            selection.ranked,
            vec![id("lr"), id("knn"), id("mnb"), id("svm")]
        );
    }

    #[test]
    fn short_columns_return_everything_with_a_flag() {
        let scores: BTreeMap<ModelId, f64> =
            [(id("mnb"), 0.9), (id("lr"), 0.8)].into_iter().collect();
        let selection = select_top_models(&scores, 4);
        assert!(selection.fewer_than_requested);
        assert_eq!(selection.ranked, vec![id("mnb"), id("lr")]);
    }

    #[test]
    fn external_ids_parse_and_order_after_builtins() {
        assert_eq!(id("dt"), ModelId::External("dt".into()));
        assert_eq!(id("SVM"), ModelId::Builtin(ClassifierKind::Svm));
        assert!(ModelId::Builtin(ClassifierKind::Sgd) < id("aardvark"));
        assert!(id("dt") < id("rf"));
    }

    #[test]
    fn score_table_columns() {
        let mut table = CvScoreTable::new();
        table.insert(id("mnb"), 1, 0.9);
        table.insert(id("mnb"), 3, 0.6);
        table.insert(id("lr"), 1, 0.8);
        assert_eq!(table.orders(), vec![1, 3]);
        let column = table.column(1);
        assert_eq!(column.len(), 2);
        assert_eq!(column[&id("mnb")], 0.9);
        assert_eq!(table.get(&id("mnb"), 3), Some(0.6));
        assert_eq!(table.get(&id("lr"), 3), None);
    }
}
