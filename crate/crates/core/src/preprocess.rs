//! Text cleaning pipeline: redundant-character removal, whitespace
//! tokenization, and stopword filtering.
//!
//! Cleaning keeps Unicode letters and the combining marks that carry
//! word structure in Bengali (vowel signs, hasanta, nukta), so conjunct
//! consonants survive intact. Everything else — punctuation, symbols,
//! digits of any script — becomes a word boundary.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;

use unicode_normalization::char::canonical_combining_class;
use unicode_normalization::UnicodeNormalization;

/// Errors from stopword-list construction.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum PreprocessError {
    #[error("stopword \"{0}\" contains whitespace")]
    StopwordHasWhitespace(String),
    #[error("stopword entries must be non-empty")]
    EmptyStopword,
}

/// A set of words removed verbatim during preprocessing.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct StopwordList {
    words: BTreeSet<String>,
}

impl StopwordList {
    /// Builds a list from any word iterator, deduplicating entries.
    /// Entries must be non-empty and whitespace-free; they are stored
    /// NFC-normalized so they match the tokens the cleaner emits.
    pub fn new<I>(words: I) -> Result<Self, PreprocessError>
    where
        I: IntoIterator,
        I::Item: Into<String>,
    {
        let mut set = BTreeSet::new();
        for word in words {
            let word = word.into();
            if word.is_empty() {
                return Err(PreprocessError::EmptyStopword);
            }
            if word.chars().any(char::is_whitespace) {
                return Err(PreprocessError::StopwordHasWhitespace(word));
            }
            set.insert(word.nfc().collect());
        }
        Ok(StopwordList { words: set })
    }

    pub fn empty() -> Self {
        StopwordList::default()
    }

    pub fn contains(&self, word: &str) -> bool {
        self.words.contains(word)
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &str> {
        self.words.iter().map(String::as_str)
    }
}

fn keep_in_word(c: char) -> bool {
    c.is_alphabetic() || canonical_combining_class(c) > 0
}

/// Removes punctuation, symbols, and digits from `text`.
///
/// The input is NFC-normalized; every character that is neither a
/// letter nor a word-internal combining mark is treated as whitespace,
/// runs of whitespace collapse to a single space, and the result is
/// trimmed. Latin letters are lowercased so case variants share one
/// vocabulary entry; zero-width joiners are dropped rather than spaced
/// so they never split a word. The function is idempotent.
pub fn strip_redundant(text: &str) -> String {
    let mut cleaned = String::with_capacity(text.len());
    let mut boundary = false;
    for c in text.nfc() {
        if c == '\u{200C}' || c == '\u{200D}' {
            continue;
        }
        if keep_in_word(c) {
            if boundary && !cleaned.is_empty() {
                cleaned.push(' ');
            }
            boundary = false;
            cleaned.extend(c.to_lowercase());
        } else {
            boundary = true;
        }
    }
    // removals can leave a mark next to a new base; recompose
    cleaned.nfc().collect()
}

/// Splits on Unicode whitespace, preserving token order.
pub fn tokenize(text: &str) -> Vec<String> {
    text.split_whitespace().map(String::from).collect()
}

/// Drops tokens that match a stopword exactly, keeping the rest in order.
pub fn remove_stopwords(mut tokens: Vec<String>, stops: &StopwordList) -> Vec<String> {
    tokens.retain(|t| !stops.contains(t));
    tokens
}

/// The full cleaning pipeline:
/// `remove_stopwords(tokenize(strip_redundant(text)), stops)`.
pub fn preprocess_review(text: &str, stops: &StopwordList) -> Vec<String> {
    remove_stopwords(tokenize(&strip_redundant(text)), stops)
}
