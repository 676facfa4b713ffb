//! Corpus and word-list file formats.
//!
//! Corpora load from JSONL (one `{"text": ..., "label": ...}` object
//! per line, unknown fields ignored) or TSV (`text<TAB>label`, no
//! header). Files must be UTF-8; a leading byte-order mark is
//! stripped. Word lists (stopwords, lexicons) are one word per line
//! with `#` comments.

use std::fmt;
use std::fs;
use std::path::Path;
use std::str::FromStr;

use serde::Deserialize;

use polarity_core::corpus::{LabeledCorpus, PolarityLabel, Review};
use polarity_core::preprocess::StopwordList;

use crate::error::AppError;

/// Supported corpus file formats.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Jsonl,
    Tsv,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "jsonl" => Ok(Format::Jsonl),
            "tsv" => Ok(Format::Tsv),
            other => Err(format!("unknown format \"{other}\" (expected jsonl or tsv)")),
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Jsonl => "jsonl",
            Format::Tsv => "tsv",
        })
    }
}

/// The built-in Bengali stopword list shipped with the binary.
pub const DEFAULT_STOPWORDS: &str = include_str!("../data/stopwords_bn.txt");

pub fn default_stopword_list() -> StopwordList {
    let words = parse_word_list(DEFAULT_STOPWORDS, "<built-in>")
        .expect("built-in stopword list is well-formed");
    StopwordList::new(words).expect("built-in stopword entries are valid")
}

fn read_text(path: &Path) -> Result<String, AppError> {
    let bytes = fs::read(path)
        .map_err(|e| AppError::input(format!("cannot read {}: {e}", path.display())))?;
    let text = String::from_utf8(bytes)
        .map_err(|_| AppError::input(format!("{} is not valid UTF-8", path.display())))?;
    Ok(text.strip_prefix('\u{FEFF}').map(str::to_owned).unwrap_or(text))
}

#[derive(Deserialize)]
struct JsonlRecord {
    text: String,
    label: PolarityLabel,
}

/// Loads a labeled corpus, preserving record order. Errors carry the
/// 1-based line number; an empty corpus is its own error, distinct
/// from any parse failure.
pub fn load_corpus(path: &Path, format: Format) -> Result<LabeledCorpus, AppError> {
    let text = read_text(path)?;
    let source = path.display().to_string();
    let corpus = match format {
        Format::Jsonl => parse_jsonl(&text, &source)?,
        Format::Tsv => parse_tsv(&text, &source)?,
    };
    if corpus.is_empty() {
        return Err(AppError::input(format!("empty corpus: {source}")));
    }
    Ok(corpus)
}

pub fn parse_jsonl(text: &str, source: &str) -> Result<LabeledCorpus, AppError> {
    let mut reviews = Vec::new();
    for (line_no, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let record: JsonlRecord = serde_json::from_str(line).map_err(|e| {
            AppError::input(format!("{source}:{}: {e}", line_no + 1))
        })?;
        let review = Review::new(record.text, record.label)
            .map_err(|e| AppError::input(format!("{source}:{}: {e}", line_no + 1)))?;
        reviews.push(review);
    }
    Ok(LabeledCorpus::new(reviews, source))
}

pub fn parse_tsv(text: &str, source: &str) -> Result<LabeledCorpus, AppError> {
    let mut reviews = Vec::new();
    for (line_no, raw_line) in text.lines().enumerate() {
        let line = raw_line.strip_suffix('\r').unwrap_or(raw_line);
        if line.is_empty() {
            continue;
        }
        let mut fields = line.split('\t');
        let (Some(review_text), Some(label_text), None) =
            (fields.next(), fields.next(), fields.next())
        else {
            return Err(AppError::input(format!(
                "{source}:{}: expected exactly two tab-separated fields",
                line_no + 1
            )));
        };
        let label = PolarityLabel::parse(label_text).ok_or_else(|| {
            AppError::input(format!(
                "{source}:{}: unknown label \"{label_text}\" \
                 (expected \"positive\" or \"negative\")",
                line_no + 1
            ))
        })?;
        let review = Review::new(review_text, label)
            .map_err(|e| AppError::input(format!("{source}:{}: {e}", line_no + 1)))?;
        reviews.push(review);
    }
    Ok(LabeledCorpus::new(reviews, source))
}

/// Writes a corpus as JSONL; reloading reproduces the reviews exactly.
pub fn write_jsonl(corpus: &LabeledCorpus, path: &Path) -> Result<(), AppError> {
    let mut out = String::new();
    for review in corpus.reviews() {
        let line = serde_json::to_string(review)
            .map_err(|e| AppError::input(format!("cannot serialize review: {e}")))?;
        out.push_str(&line);
        out.push('\n');
    }
    fs::write(path, out)
        .map_err(|e| AppError::input(format!("cannot write {}: {e}", path.display())))
}

/// Parses a word-list file: one word per line, blank lines and `#`
/// comments ignored, duplicates dropped (first occurrence kept).
pub fn parse_word_list(text: &str, source: &str) -> Result<Vec<String>, AppError> {
    let mut words = Vec::new();
    for (line_no, raw_line) in text.lines().enumerate() {
        let line = raw_line.strip_suffix('\r').unwrap_or(raw_line);
        if line.trim().is_empty() || line.starts_with('#') {
            continue;
        }
        if line.trim() != line || line.chars().any(char::is_whitespace) {
            return Err(AppError::input(format!(
                "{source}:{}: word \"{line}\" contains whitespace",
                line_no + 1
            )));
        }
        if !words.iter().any(|w| w == line) {
            words.push(line.to_string());
        }
    }
    Ok(words)
}

pub fn load_stopwords(path: &Path) -> Result<StopwordList, AppError> {
    let text = read_text(path)?;
    let words = parse_word_list(&text, &path.display().to_string())?;
    Ok(StopwordList::new(words)?)
}

pub fn load_lexicon(path: &Path) -> Result<Vec<String>, AppError> {
    let text = read_text(path)?;
    parse_word_list(&text, &path.display().to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn jsonl_parses_in_order_and_ignores_unknown_fields() {
        let text = "{\"text\":\"ভাল বই\",\"label\":\"positive\",\"id\":7}\n\
                    {\"text\":\"বাজে\",\"label\":\"Negative\"}\n";
        let corpus = parse_jsonl(text, "test").unwrap();
        assert_eq!(corpus.len(), 2);
        assert_eq!(corpus.reviews()[0].text, "ভাল বই");
        assert_eq!(corpus.reviews()[0].label, PolarityLabel::Positive);
        assert_eq!(corpus.reviews()[1].label, PolarityLabel::Negative);
    }

    #[test]
    fn jsonl_errors_name_the_line_and_value() {
        let text = "{\"text\":\"x\",\"label\":\"positive\"}\n{\"text\":\"y\",\"label\":\"neutral\"}\n";
        let err = parse_jsonl(text, "reviews.jsonl").unwrap_err();
        let message = err.to_string();
        assert!(message.contains("reviews.jsonl:2"), "{message}");
        assert!(message.contains("neutral"), "{message}");
        assert_eq!(err.exit_code(), 2);
    }

    #[test]
    fn tsv_parses_the_grammar() {
        let corpus = parse_tsv("অসাধারণ বই\tpositive\n", "t").unwrap();
        assert_eq!(corpus.reviews()[0].text, "অসাধারণ বই");
        assert_eq!(corpus.reviews()[0].label, PolarityLabel::Positive);

        let err = parse_tsv("a\tb\tc\n", "t").unwrap_err();
        assert!(err.to_string().contains("t:1"));
        let err = parse_tsv("ভাল\tmaybe\n", "t").unwrap_err();
        assert!(err.to_string().contains("maybe"));
    }

    #[test]
    fn word_list_grammar() {
        let words = parse_word_list("ইহা\n# comment\n\nএক\nএক\n", "w").unwrap();
        assert_eq!(words, vec!["ইহা", "এক"]);
        assert!(parse_word_list("", "w").unwrap().is_empty());
        let err = parse_word_list("ok\nbad word\n", "w").unwrap_err();
        assert!(err.to_string().contains("w:2"));
    }

    #[test]
    fn built_in_stopwords_cover_the_worked_example() {
        let stops = default_stopword_list();
        assert!(stops.len() >= 50);
        assert!(stops.contains("ইহা"));
        assert!(stops.contains("এক"));
    }
}
