//! Closed-class word list used to keep only content words.

use alloc::collections::BTreeSet;
use alloc::string::String;

use crate::error::{Error, Result};

/// A set of lowercased words to exclude from content terms.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Stoplist {
    words: BTreeSet<String>,
}

impl Stoplist {
    /// An empty stoplist (filters nothing).
    pub fn new() -> Self {
        Self::default()
    }

    /// The bundled English closed-class list (~300 entries).
    pub fn english() -> Self {
        Self::parse(include_str!("../assets/english_stoplist.txt"))
            .expect("bundled stoplist is well-formed")
    }

    /// Parses a stoplist file: one word per line, `#` starts a
    /// comment, blank lines ignored. Words are lowercased on read.
    pub fn parse(text: &str) -> Result<Self> {
        let mut words = BTreeSet::new();
        for (idx, line) in text.lines().enumerate() {
            let line = match line.find('#') {
                Some(pos) => &line[..pos],
                None => line,
            };
            let word = line.trim();
            if word.is_empty() {
                continue;
            }
            if word.chars().any(char::is_whitespace) {
                return Err(Error::parse(idx + 1, "expected one word per line"));
            }
            words.insert(word.to_ascii_lowercase());
        }
        Ok(Stoplist { words })
    }

    /// Builds a stoplist from an iterator of words (lowercased on
    /// insert).
    pub fn from_words<I, S>(words: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut list = Self::new();
        for w in words {
            list.insert(w.as_ref());
        }
        list
    }

    pub fn insert(&mut self, word: &str) {
        self.words.insert(word.to_ascii_lowercase());
    }

    /// Membership test; the query must already be lowercased.
    pub fn contains(&self, word: &str) -> bool {
        self.words.contains(word)
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }
}
