//! Paragraph splitting and sentence counting.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// An elementary segment: one paragraph of the input document.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Paragraph {
    /// 1-based position in the document.
    pub ordinal: usize,
    /// Naive sentence count, used for rendering axes.
    pub sentence_count: usize,
    /// Stem frequencies over the paragraph's open-class tokens.
    pub freqs: BTreeMap<String, u64>,
}

/// Splits a document on runs of blank (empty or whitespace-only)
/// lines. Each paragraph is trimmed; empty paragraphs are dropped.
///
/// Errors with [`Error::NoParagraphs`] when nothing remains.
pub fn split_paragraphs(text: &str) -> Result<Vec<String>> {
    let mut paragraphs = Vec::new();
    let mut current = String::new();
    let mut flush = |current: &mut String| {
        let trimmed = current.trim();
        if !trimmed.is_empty() {
            paragraphs.push(String::from(trimmed));
        }
        current.clear();
    };
    for line in text.lines() {
        if line.trim().is_empty() {
            flush(&mut current);
        } else {
            if !current.is_empty() {
                current.push('\n');
            }
            current.push_str(line);
        }
    }
    flush(&mut current);
    if paragraphs.is_empty() {
        return Err(Error::NoParagraphs);
    }
    Ok(paragraphs)
}

/// Counts sentences in a paragraph: one per `.`/`!`/`?` that is
/// followed by whitespace or the end of the paragraph, plus one for
/// trailing unterminated content. Always at least 1. Deliberately
/// naive about abbreviations.
pub fn count_sentences(paragraph: &str) -> usize {
    let chars: Vec<char> = paragraph.chars().collect();
    let mut count = 0;
    let mut pending = false;
    for i in 0..chars.len() {
        let c = chars[i];
        let terminator = matches!(c, '.' | '!' | '?');
        if terminator && (i + 1 == chars.len() || chars[i + 1].is_whitespace()) {
            count += 1;
            pending = false;
        } else if !c.is_whitespace() {
            pending = true;
        }
    }
    if pending || count == 0 {
        count += 1;
    }
    count
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn splits_on_single_blank_line() {
        assert_eq!(split_paragraphs("A\n\nB").unwrap(), vec!["A", "B"]);
    }

    #[test]
    fn collapses_blank_runs_and_trailing_newline() {
        assert_eq!(split_paragraphs("A\n\n\n\nB\n").unwrap(), vec!["A", "B"]);
    }

    #[test]
    fn single_paragraph() {
        assert_eq!(split_paragraphs("A").unwrap(), vec!["A"]);
    }

    #[test]
    fn whitespace_only_lines_count_as_blank() {
        assert_eq!(split_paragraphs("A\n \t \nB").unwrap(), vec!["A", "B"]);
    }

    #[test]
    fn multi_line_paragraphs_keep_internal_newlines() {
        assert_eq!(
            split_paragraphs("line one\nline two\n\nnext").unwrap(),
            vec!["line one\nline two", "next"]
        );
    }

    #[test]
    fn no_content_is_an_error() {
        assert_eq!(split_paragraphs("").unwrap_err(), Error::NoParagraphs);
        assert_eq!(split_paragraphs("\n  \n\t\n").unwrap_err(), Error::NoParagraphs);
    }

    #[test]
    fn counts_terminated_sentences() {
        assert_eq!(count_sentences("A b. C d?"), 2);
    }

    #[test]
    fn unterminated_paragraph_is_one_sentence() {
        assert_eq!(count_sentences("no terminator"), 1);
    }

    #[test]
    fn internal_dots_do_not_terminate() {
        assert_eq!(count_sentences("e.g. cats. dogs."), 3);
    }

    #[test]
    fn trailing_content_after_terminator_adds_one() {
        assert_eq!(count_sentences("Done. And then"), 2);
    }

    #[test]
    fn stacked_terminators_count_once() {
        assert_eq!(count_sentences("What?!"), 1);
        assert_eq!(count_sentences("Really?! Yes."), 2);
    }

    #[test]
    fn minimum_is_one() {
        assert_eq!(count_sentences(""), 1);
    }
}
