//! Open-class filtering, stemming, and per-paragraph term statistics.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::idf::IdfTable;
use crate::paragraph::{count_sentences, Paragraph};
use crate::porter;
use crate::stoplist::Stoplist;
use crate::token::{tokenize, tokenize_pretagged, TaggedToken, Token, TokenKind};

/// Stem → general-significance map consumed by vector building and
/// clustering.
pub type GsigMap = BTreeMap<String, f64>;

/// One stem observed in the analyzed text.
#[derive(Debug, Clone, PartialEq)]
pub struct StemEntry {
    pub stem: String,
    /// Minimum significance over all witnesses.
    pub gsig: f64,
    /// Lowercased surface forms that mapped to this stem.
    pub witnesses: BTreeSet<String>,
}

/// Whole-text stem totals feeding the in-text weight factor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TextStats {
    /// Occurrences of each stem across all paragraphs.
    pub total_freq: BTreeMap<String, u64>,
    /// Maximum of `total_freq`, 0 for a text with no content terms.
    pub f_max: u64,
}

impl TextStats {
    pub fn from_paragraphs(paragraphs: &[Paragraph]) -> Self {
        let mut total_freq: BTreeMap<String, u64> = BTreeMap::new();
        for p in paragraphs {
            for (stem, f) in &p.freqs {
                *total_freq.entry(stem.clone()).or_insert(0) += f;
            }
        }
        let f_max = total_freq.values().copied().max().unwrap_or(0);
        TextStats { total_freq, f_max }
    }
}

/// Keeps word tokens whose lowercased surface is not stoplisted.
pub fn filter_open_class(tokens: &[Token], stoplist: &Stoplist) -> Vec<Token> {
    tokens
        .iter()
        .filter(|t| {
            t.kind == TokenKind::Word && !stoplist.contains(&t.surface.to_ascii_lowercase())
        })
        .cloned()
        .collect()
}

const OPEN_CLASS_TAG_PREFIXES: [&str; 4] = ["JJ", "VB", "RB", "NN"];

/// Keeps pre-tagged tokens whose tag marks an adjective, verb,
/// adverb, or noun.
pub fn filter_open_class_tagged(tokens: &[TaggedToken]) -> Vec<TaggedToken> {
    tokens
        .iter()
        .filter(|t| {
            !t.surface.is_empty()
                && OPEN_CLASS_TAG_PREFIXES
                    .iter()
                    .any(|p| t.tag.starts_with(p))
        })
        .cloned()
        .collect()
}

/// Extracts `(lowercased surface, stem)` pairs for the content words
/// of one paragraph, in reading order. Apostrophes are dropped before
/// stemming (`star's` stems like `stars`); surfaces keep them so
/// significance lookups match the corpus table.
pub fn content_terms(
    text: &str,
    stoplist: &Stoplist,
    pretagged: bool,
) -> Result<Vec<(String, String)>> {
    let surfaces: Vec<String> = if pretagged {
        filter_open_class_tagged(&tokenize_pretagged(text))
            .into_iter()
            .map(|t| t.surface)
            .collect()
    } else {
        filter_open_class(&tokenize(text), stoplist)
            .into_iter()
            .map(|t| t.surface)
            .collect()
    };
    let mut terms = Vec::with_capacity(surfaces.len());
    for surface in surfaces {
        let lower = surface.to_ascii_lowercase();
        let bare: String = lower.chars().filter(|c| *c != '\'').collect();
        if bare.is_empty() {
            continue;
        }
        let stem = porter::stem(&bare)?;
        terms.push((lower, stem));
    }
    Ok(terms)
}

/// Runs the full morphological pass over a document's paragraphs:
/// tokenize, keep open-class words, stem, and count.
///
/// Returns one [`Paragraph`] per input text plus an entry for every
/// stem observed anywhere, whose significance is the minimum over its
/// witnesses' table lookups. Errors are wrapped with the offending
/// 1-based paragraph ordinal.
pub fn analyze<S: AsRef<str>>(
    paragraph_texts: &[S],
    table: &IdfTable,
    stoplist: &Stoplist,
    pretagged: bool,
) -> Result<(Vec<Paragraph>, BTreeMap<String, StemEntry>)> {
    let mut paragraphs = Vec::with_capacity(paragraph_texts.len());
    let mut stems: BTreeMap<String, StemEntry> = BTreeMap::new();
    for (idx, text) in paragraph_texts.iter().enumerate() {
        let text = text.as_ref();
        let terms = content_terms(text, stoplist, pretagged)
            .map_err(|e| Error::in_paragraph(idx + 1, e))?;
        let mut freqs: BTreeMap<String, u64> = BTreeMap::new();
        for (lower, stem) in terms {
            *freqs.entry(stem.clone()).or_insert(0) += 1;
            let gsig = table.gsig(&lower);
            let entry = stems.entry(stem.clone()).or_insert_with(|| StemEntry {
                stem,
                gsig,
                witnesses: BTreeSet::new(),
            });
            if gsig < entry.gsig {
                entry.gsig = gsig;
            }
            entry.witnesses.insert(lower);
        }
        paragraphs.push(Paragraph {
            ordinal: idx + 1,
            sentence_count: count_sentences(text),
            freqs,
        });
    }
    Ok((paragraphs, stems))
}

/// Projects stem entries down to the significance map used by
/// clustering.
pub fn stem_gsig_map(stems: &BTreeMap<String, StemEntry>) -> GsigMap {
    stems.iter().map(|(k, e)| (k.clone(), e.gsig)).collect()
}
