//! Corpus document-frequency table and word significance.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::{String, ToString};
use core::fmt::Write as _;

use crate::error::{Error, Result};
use crate::token::{tokenize, TokenKind};

/// Document-frequency statistics over a corpus.
///
/// For every lowercased word the table records in how many corpus
/// documents it appears. A word's general significance is
/// `ln(N / N_w)`: rare words score high, and a word present in every
/// document scores zero. Immutable once built.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdfTable {
    n_files: u64,
    doc_freq: BTreeMap<String, u64>,
}

impl IdfTable {
    /// Builds the table from raw document texts. Each document
    /// contributes each of its distinct lowercased word tokens once,
    /// however often the word repeats.
    ///
    /// Errors with [`Error::EmptyCorpus`] when `documents` is empty.
    pub fn build<'a, I>(documents: I) -> Result<Self>
    where
        I: IntoIterator<Item = &'a str>,
    {
        let mut n_files = 0u64;
        let mut doc_freq: BTreeMap<String, u64> = BTreeMap::new();
        for text in documents {
            n_files += 1;
            let mut seen = BTreeSet::new();
            for token in tokenize(text) {
                if token.kind == TokenKind::Word {
                    seen.insert(token.surface.to_ascii_lowercase());
                }
            }
            for word in seen {
                *doc_freq.entry(word).or_insert(0) += 1;
            }
        }
        if n_files == 0 {
            return Err(Error::EmptyCorpus);
        }
        Ok(IdfTable { n_files, doc_freq })
    }

    /// Number of corpus documents (N).
    pub fn n_files(&self) -> u64 {
        self.n_files
    }

    /// Number of documents containing `word`, if recorded.
    pub fn doc_freq(&self, word: &str) -> Option<u64> {
        self.doc_freq.get(word).copied()
    }

    /// Number of distinct recorded words.
    pub fn len(&self) -> usize {
        self.doc_freq.len()
    }

    pub fn is_empty(&self) -> bool {
        self.doc_freq.is_empty()
    }

    /// Iterates `(word, document count)` pairs in lexicographic order.
    pub fn terms(&self) -> impl Iterator<Item = (&str, u64)> {
        self.doc_freq.iter().map(|(w, c)| (w.as_str(), *c))
    }

    /// General significance of a lowercased word: `ln(N / N_w)`.
    /// Unseen words are treated as occurring in one document, the
    /// maximally significant case. Always ≥ 0.
    pub fn gsig(&self, word: &str) -> f64 {
        let n_w = self.doc_freq.get(word).copied().unwrap_or(1);
        libm::log(self.n_files as f64 / n_w as f64)
    }

    /// Serializes the table: a `#N <count>` header, then one
    /// `word<TAB>count` line per term in lexicographic order, with a
    /// trailing newline.
    pub fn to_tsv(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "#N {}", self.n_files);
        for (word, count) in &self.doc_freq {
            let _ = writeln!(out, "{word}\t{count}");
        }
        out
    }

    /// Parses the format written by [`IdfTable::to_tsv`]. Errors carry
    /// 1-based line numbers.
    pub fn from_tsv(text: &str) -> Result<Self> {
        let mut lines = text.lines().enumerate();
        let header = match lines.next() {
            Some((_, line)) => line,
            None => return Err(Error::parse(1, "missing #N header")),
        };
        let n_files = match header.strip_prefix("#N ") {
            Some(rest) => rest
                .trim()
                .parse::<u64>()
                .map_err(|_| Error::parse(1, "header count is not an integer"))?,
            None => return Err(Error::parse(1, "missing #N header")),
        };
        if n_files == 0 {
            return Err(Error::parse(1, "n_files must be at least 1"));
        }
        let mut doc_freq = BTreeMap::new();
        for (idx, line) in lines {
            let lineno = idx + 1;
            if line.trim().is_empty() {
                return Err(Error::parse(lineno, "blank line"));
            }
            let (word, count) = line
                .split_once('\t')
                .ok_or_else(|| Error::parse(lineno, "expected word<TAB>count"))?;
            if word.is_empty() {
                return Err(Error::parse(lineno, "empty word"));
            }
            let count: u64 = count
                .parse()
                .map_err(|_| Error::parse(lineno, "count is not an integer"))?;
            if count < 1 {
                return Err(Error::parse(lineno, "count below 1"));
            }
            if count > n_files {
                return Err(Error::parse(lineno, "count exceeds n_files"));
            }
            if doc_freq.insert(word.to_string(), count).is_some() {
                return Err(Error::parse(lineno, "duplicate word"));
            }
        }
        Ok(IdfTable { n_files, doc_freq })
    }
}
