//! Labeled review corpora: polarity labels, deterministic splits,
//! dataset statistics, and seeded synthetic corpus generation.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::float;

/// Errors from corpus construction, splitting, and synthesis.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum CorpusError {
    #[error("review text is empty after trimming whitespace")]
    EmptyText,
    #[error("invalid split spec: {0}")]
    InvalidSplitSpec(String),
    #[error("invalid synthetic spec: {0}")]
    InvalidSyntheticSpec(String),
    #[error("lexicons overlap on word \"{0}\"")]
    LexiconOverlap(String),
}

/// Binary sentiment polarity. The integer codes are fixed:
/// negative = 0, positive = 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PolarityLabel {
    Negative,
    Positive,
}

impl PolarityLabel {
    /// Both labels in class-index order.
    pub const ALL: [PolarityLabel; 2] = [PolarityLabel::Negative, PolarityLabel::Positive];

    /// Class index: 0 for negative, 1 for positive.
    pub fn index(self) -> usize {
        match self {
            PolarityLabel::Negative => 0,
            PolarityLabel::Positive => 1,
        }
    }

    pub fn from_index(index: usize) -> Option<Self> {
        match index {
            0 => Some(PolarityLabel::Negative),
            1 => Some(PolarityLabel::Positive),
            _ => None,
        }
    }

    /// Lowercase ASCII serialization form.
    pub fn as_str(self) -> &'static str {
        match self {
            PolarityLabel::Negative => "negative",
            PolarityLabel::Positive => "positive",
        }
    }

    /// Case-insensitive parse of "positive"/"negative".
    pub fn parse(s: &str) -> Option<Self> {
        if s.eq_ignore_ascii_case("positive") {
            Some(PolarityLabel::Positive)
        } else if s.eq_ignore_ascii_case("negative") {
            Some(PolarityLabel::Negative)
        } else {
            None
        }
    }
}

impl core::fmt::Display for PolarityLabel {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Serialize for PolarityLabel {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.as_str())
    }
}

impl<'de> Deserialize<'de> for PolarityLabel {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = <&str>::deserialize(deserializer)?;
        PolarityLabel::parse(s).ok_or_else(|| {
            D::Error::custom(format!(
                "unknown label \"{s}\" (expected \"positive\" or \"negative\")"
            ))
        })
    }
}

/// One raw review with its polarity label.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Review {
    pub text: String,
    pub label: PolarityLabel,
}

impl Review {
    /// Builds a review, rejecting text that is empty after trimming.
    /// The text itself is stored verbatim.
    pub fn new(text: impl Into<String>, label: PolarityLabel) -> Result<Self, CorpusError> {
        let text = text.into();
        if text.trim().is_empty() {
            return Err(CorpusError::EmptyText);
        }
        Ok(Review { text, label })
    }
}

/// An ordered, immutable collection of labeled reviews.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledCorpus {
    reviews: Vec<Review>,
    source: String,
}

impl LabeledCorpus {
    pub fn new(reviews: Vec<Review>, source: impl Into<String>) -> Self {
        LabeledCorpus {
            reviews,
            source: source.into(),
        }
    }

    pub fn reviews(&self) -> &[Review] {
        &self.reviews
    }

    pub fn source(&self) -> &str {
        &self.source
    }

    pub fn len(&self) -> usize {
        self.reviews.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reviews.is_empty()
    }

    pub fn labels(&self) -> Vec<PolarityLabel> {
        self.reviews.iter().map(|r| r.label).collect()
    }

    /// Seeded shuffle followed by a contiguous three-way cut. Sizes are
    /// floor(n·train), floor(n·valid), remainder to test, so the parts
    /// always partition the corpus.
    pub fn split(
        &self,
        spec: &SplitSpec,
    ) -> Result<(LabeledCorpus, LabeledCorpus, LabeledCorpus), CorpusError> {
        spec.validate()?;
        let n = self.reviews.len();
        let mut order: Vec<usize> = (0..n).collect();
        let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
        order.shuffle(&mut rng);

        let n_train = float::floor(n as f64 * spec.train_frac) as usize;
        let n_valid = float::floor(n as f64 * spec.valid_frac) as usize;
        let take = |range: &[usize], part: &str| {
            LabeledCorpus::new(
                range.iter().map(|&i| self.reviews[i].clone()).collect(),
                format!("{}/{part}", self.source),
            )
        };
        Ok((
            take(&order[..n_train], "train"),
            take(&order[n_train..n_train + n_valid], "valid"),
            take(&order[n_train + n_valid..], "test"),
        ))
    }

    /// Summary statistics over the raw (uncleaned) review texts.
    pub fn stats(&self) -> CorpusStats {
        let mut num_words = 0usize;
        let mut num_sentences = 0usize;
        let mut size_bytes = 0usize;
        let mut unique: BTreeSet<String> = BTreeSet::new();
        for review in &self.reviews {
            size_bytes += review.text.len();
            for token in review.text.split_whitespace() {
                num_words += 1;
                let bare: String = token.chars().filter(|c| !is_sentence_terminator(*c)).collect();
                if !bare.is_empty() {
                    unique.insert(bare);
                }
            }
            num_sentences += count_sentences(&review.text);
        }
        CorpusStats {
            num_documents: self.reviews.len(),
            num_words,
            num_unique_words: unique.len(),
            num_sentences,
            size_bytes,
        }
    }
}

fn is_sentence_terminator(c: char) -> bool {
    c == '\u{0964}' || c == '?' || c == '!'
}

/// Counts segments ended by danda, "?", "!", or end-of-text with
/// pending content. Consecutive terminators collapse into one boundary.
fn count_sentences(text: &str) -> usize {
    let mut count = 0usize;
    let mut pending = false;
    for c in text.chars() {
        if is_sentence_terminator(c) {
            if pending {
                count += 1;
                pending = false;
            }
        } else if !c.is_whitespace() {
            pending = true;
        }
    }
    if pending {
        count += 1;
    }
    count
}

/// Fractions for a three-way train/valid/test split plus the seed that
/// fully determines the permutation.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SplitSpec {
    pub train_frac: f64,
    pub valid_frac: f64,
    pub test_frac: f64,
    pub seed: u64,
}

impl SplitSpec {
    pub fn new(train_frac: f64, valid_frac: f64, test_frac: f64, seed: u64) -> Self {
        SplitSpec {
            train_frac,
            valid_frac,
            test_frac,
            seed,
        }
    }

    pub fn validate(&self) -> Result<(), CorpusError> {
        for (name, f) in [
            ("train_frac", self.train_frac),
            ("valid_frac", self.valid_frac),
            ("test_frac", self.test_frac),
        ] {
            if !(0.0..=1.0).contains(&f) {
                return Err(CorpusError::InvalidSplitSpec(format!(
                    "{name} = {f} is outside [0, 1]"
                )));
            }
        }
        let sum = self.train_frac + self.valid_frac + self.test_frac;
        if float::abs(sum - 1.0) > 1e-9 {
            return Err(CorpusError::InvalidSplitSpec(format!(
                "fractions sum to {sum}, expected 1"
            )));
        }
        Ok(())
    }
}

/// Corpus-level counts over raw text.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusStats {
    pub num_documents: usize,
    pub num_words: usize,
    pub num_unique_words: usize,
    pub num_sentences: usize,
    pub size_bytes: usize,
}

/// Recipe for a seeded synthetic corpus with planted sentiment signal.
///
/// Every review starts with one sentiment word and mixes further
/// sentiment and neutral words; `noise_rate` is the probability that a
/// sentiment word is drawn from the wrong lexicon.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SyntheticSpec {
    pub num_reviews: usize,
    pub positive_frac: f64,
    pub positive_lexicon: Vec<String>,
    pub negative_lexicon: Vec<String>,
    pub neutral_lexicon: Vec<String>,
    pub min_words: usize,
    pub max_words: usize,
    pub noise_rate: f64,
    pub seed: u64,
}

/// Built-in positive lexicon used when no word lists are supplied.
pub const DEFAULT_POSITIVE_LEXICON: &[&str] = &[
    "অসাধারণ",
    "চমৎকার",
    "ভালো",
    "দারুণ",
    "সুন্দর",
    "অনবদ্য",
    "মুগ্ধ",
    "সেরা",
    "উপভোগ্য",
    "প্রিয়",
    "সার্থক",
    "হৃদয়গ্রাহী",
];

/// Built-in negative lexicon used when no word lists are supplied.
pub const DEFAULT_NEGATIVE_LEXICON: &[&str] = &[
    "বাজে",
    "খারাপ",
    "জঘন্য",
    "বিরক্তিকর",
    "অখাদ্য",
    "হতাশ",
    "দুর্বল",
    "ব্যর্থ",
    "একঘেয়ে",
    "নিম্নমানের",
    "ত্রুটিপূর্ণ",
    "অসহ্য",
];

/// Built-in neutral lexicon used when no word lists are supplied.
pub const DEFAULT_NEUTRAL_LEXICON: &[&str] = &[
    "বই",
    "লেখক",
    "গল্প",
    "কাহিনী",
    "চরিত্র",
    "পাঠক",
    "লেখা",
    "অধ্যায়",
    "প্রকাশনী",
    "অনুবাদ",
    "ভাষা",
    "পৃষ্ঠা",
    "উপন্যাস",
    "কবিতা",
    "প্রচ্ছদ",
    "সংস্করণ",
    "দাম",
    "বিষয়",
    "শুরু",
    "শেষ",
];

impl SyntheticSpec {
    /// Spec with the built-in lexicons and a 5..=12 words-per-review range.
    pub fn with_defaults(num_reviews: usize, positive_frac: f64, noise_rate: f64, seed: u64) -> Self {
        let owned = |words: &[&str]| words.iter().map(|w| w.to_string()).collect();
        SyntheticSpec {
            num_reviews,
            positive_frac,
            positive_lexicon: owned(DEFAULT_POSITIVE_LEXICON),
            negative_lexicon: owned(DEFAULT_NEGATIVE_LEXICON),
            neutral_lexicon: owned(DEFAULT_NEUTRAL_LEXICON),
            min_words: 5,
            max_words: 12,
            noise_rate,
            seed,
        }
    }

    pub fn validate(&self) -> Result<(), CorpusError> {
        if self.num_reviews == 0 {
            return Err(CorpusError::InvalidSyntheticSpec(
                "num_reviews must be at least 1".to_string(),
            ));
        }
        if !(self.positive_frac > 0.0 && self.positive_frac < 1.0) {
            return Err(CorpusError::InvalidSyntheticSpec(format!(
                "positive_frac = {} is outside (0, 1)",
                self.positive_frac
            )));
        }
        if !(0.0..=1.0).contains(&self.noise_rate) {
            return Err(CorpusError::InvalidSyntheticSpec(format!(
                "noise_rate = {} is outside [0, 1]",
                self.noise_rate
            )));
        }
        if self.min_words < 1 || self.min_words > self.max_words {
            return Err(CorpusError::InvalidSyntheticSpec(format!(
                "words-per-review range {}..={} is invalid",
                self.min_words, self.max_words
            )));
        }
        if self.positive_lexicon.is_empty() || self.negative_lexicon.is_empty() {
            return Err(CorpusError::InvalidSyntheticSpec(
                "positive and negative lexicons must be non-empty".to_string(),
            ));
        }
        let sets: [(&str, BTreeSet<&str>); 3] = [
            ("positive", self.positive_lexicon.iter().map(String::as_str).collect()),
            ("negative", self.negative_lexicon.iter().map(String::as_str).collect()),
            ("neutral", self.neutral_lexicon.iter().map(String::as_str).collect()),
        ];
        for i in 0..sets.len() {
            for j in i + 1..sets.len() {
                if let Some(word) = sets[i].1.intersection(&sets[j].1).next() {
                    return Err(CorpusError::LexiconOverlap(word.to_string()));
                }
            }
        }
        Ok(())
    }
}

/// Generates a corpus according to `spec`. The same spec always yields
/// a byte-identical corpus.
pub fn generate_synthetic_corpus(spec: &SyntheticSpec) -> Result<LabeledCorpus, CorpusError> {
    spec.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);

    let n_pos =
        (float::round(spec.num_reviews as f64 * spec.positive_frac) as usize).min(spec.num_reviews);
    let mut labels = vec![PolarityLabel::Positive; n_pos];
    labels.resize(spec.num_reviews, PolarityLabel::Negative);
    labels.shuffle(&mut rng);

    let mut reviews = Vec::with_capacity(spec.num_reviews);
    for label in labels {
        let len = rng.gen_range(spec.min_words..=spec.max_words);
        let mut words: Vec<&str> = Vec::with_capacity(len);
        for slot in 0..len {
            let sentiment_slot =
                slot == 0 || self_or_neutral(&mut rng, spec.neutral_lexicon.is_empty());
            let word = if sentiment_slot {
                let wrong = rng.gen::<f64>() < spec.noise_rate;
                let lexicon = match (label, wrong) {
                    (PolarityLabel::Positive, false) | (PolarityLabel::Negative, true) => {
                        &spec.positive_lexicon
                    }
                    _ => &spec.negative_lexicon,
                };
                &lexicon[rng.gen_range(0..lexicon.len())]
            } else {
                &spec.neutral_lexicon[rng.gen_range(0..spec.neutral_lexicon.len())]
            };
            words.push(word);
        }
        let review = Review::new(words.join(" "), label).expect("generated text is non-empty");
        reviews.push(review);
    }
    Ok(LabeledCorpus::new(
        reviews,
        format!("synthetic(seed={})", spec.seed),
    ))
}

fn self_or_neutral(rng: &mut ChaCha8Rng, neutral_empty: bool) -> bool {
    if neutral_empty {
        // no neutral words to draw from; every slot is a sentiment slot
        let _ = rng.gen::<f64>();
        return true;
    }
    rng.gen::<f64>() < 0.5
}
