//! Property tests for the cleaning pipeline.

use proptest::prelude::*;

use polarity_core::preprocess::{
    preprocess_review, remove_stopwords, strip_redundant, tokenize, StopwordList,
};

/// Strings biased toward the hard cases: Bengali clusters, combining
/// marks, digits of both scripts, punctuation, zero-width joiners, and
/// case-folding oddities.
fn tricky_text() -> impl Strategy<Value = String> {
    let fragment = prop_oneof![
        Just("ভাল".to_string()),
        Just("বিশ্ব".to_string()),
        Just("উপস্থাপনা".to_string()),
        Just("র\u{200D}্যাব".to_string()),
        Just("İstanbul".to_string()),
        Just("Good".to_string()),
        Just("e\u{0301}tude".to_string()),
        Just("১২৩".to_string()),
        Just("42".to_string()),
        Just("।।".to_string()),
        Just("?!...,;".to_string()),
        Just("\u{00AD}\u{0301}".to_string()),
        Just(" ".to_string()),
        Just("\t\n".to_string()),
        "[a-zA-Z]{1,4}",
        any::<char>().prop_map(|c| c.to_string()),
    ];
    prop::collection::vec(fragment, 0..12).prop_map(|v| v.concat())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn strip_redundant_is_idempotent(text in tricky_text()) {
        let once = strip_redundant(&text);
        prop_assert_eq!(strip_redundant(&once), once);
    }

    #[test]
    fn strip_redundant_is_idempotent_on_arbitrary_unicode(text in ".*") {
        let once = strip_redundant(&text);
        prop_assert_eq!(strip_redundant(&once), once);
    }

    #[test]
    fn pipeline_equals_its_three_step_composition(text in tricky_text()) {
        let stops = StopwordList::new(["এক", "good", "ভাল"]).unwrap();
        let composed = remove_stopwords(tokenize(&strip_redundant(&text)), &stops);
        prop_assert_eq!(preprocess_review(&text, &stops), composed);
    }

    #[test]
    fn emitted_tokens_survive_stripping(text in tricky_text()) {
        // no token may contain a character the cleaner removes
        let tokens = preprocess_review(&text, &StopwordList::empty());
        for token in &tokens {
            let restripped = strip_redundant(token);
            prop_assert_eq!(&restripped, token, "token {:?} was not clean", token);
        }
    }

    #[test]
    fn stopword_removal_never_grows_the_token_list(
        text in tricky_text(),
        stop_subset in prop::collection::vec("[a-z]{1,3}", 0..5),
    ) {
        let tokens = tokenize(&strip_redundant(&text));
        let stops = StopwordList::new(stop_subset).unwrap();
        let filtered = remove_stopwords(tokens.clone(), &stops);
        prop_assert!(filtered.len() <= tokens.len());
        let refiltered = remove_stopwords(filtered.clone(), &stops);
        prop_assert_eq!(refiltered, filtered);
    }

    #[test]
    fn tokens_are_never_empty_and_have_no_whitespace(text in ".*") {
        for token in preprocess_review(&text, &StopwordList::empty()) {
            prop_assert!(!token.is_empty());
            prop_assert!(!token.chars().any(char::is_whitespace));
        }
    }
}
