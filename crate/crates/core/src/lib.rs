//! Sentiment polarity classification for Bengali book reviews.
//!
//! This crate holds the full modelling pipeline: labeled corpora and
//! deterministic splits, Bengali-aware text cleaning, n-gram TF-IDF
//! features, five classifiers behind one fit/predict contract, and the
//! evaluation suite (stratified cross-validation, model selection,
//! confusion-matrix metrics, ROC/PR curves, learning curves).
//!
//! The crate is `no_std` (with `alloc`); file formats, model
//! persistence, and the command line live in the companion
//! `polarity-cli` crate.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(test)]
#[macro_use]
extern crate std;

pub mod corpus;
pub mod eval;
pub mod features;
pub mod models;
pub mod preprocess;

mod float;
