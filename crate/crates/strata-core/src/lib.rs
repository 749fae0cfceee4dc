//! Discourse segmentation by order-preserving agglomerative clustering.
//!
//! The pipeline turns a paragraph-structured text into a binary merge
//! tree whose shape exposes topical structure:
//!
//! 1. [`split_paragraphs`] cuts the text on blank lines.
//! 2. [`analyze`] tokenizes each paragraph, drops closed-class words
//!    via a [`Stoplist`], stems the rest ([`porter::stem`]), and
//!    gathers per-paragraph and whole-text term statistics.
//! 3. [`IdfTable`] supplies corpus-level term significance.
//! 4. [`TermVector`]s weight each stem by within-paragraph frequency,
//!    whole-text frequency, and corpus significance; proximity between
//!    adjacent segments is the cosine of their vectors.
//! 5. [`cluster`] repeatedly merges the closest pair of *adjacent*
//!    segments, producing a [`Dendrogram`] whose leaves stay in
//!    reading order.
//! 6. [`find_boundaries`] walks the tree and keeps the merge points
//!    whose shape says "topic shift": a deep notch between two large
//!    groups, or a cliff where a small shallow group abuts a large
//!    deep one.
//!
//! A sliding-window segmenter ([`tile`]), exact-match scoring
//! ([`evaluate`]), and text/SVG/CSV renderings ([`render_outline`])
//! round out the toolkit. The crate is `no_std` (with `alloc`); all
//! file and terminal concerns live in the companion CLI crate.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

mod analyze;
mod boundary;
mod dendrogram;
mod error;
mod eval;
mod idf;
mod paragraph;
pub mod porter;
pub mod reference;
mod render;
mod stoplist;
mod tiling;
mod token;
mod vector;

pub use analyze::{
    analyze, content_terms, filter_open_class, filter_open_class_tagged, stem_gsig_map, GsigMap,
    StemEntry, TextStats,
};
pub use boundary::{
    cliff_rule, find_boundaries, notch_rule, outline_depths, Boundary, BoundaryConfig,
    BoundaryRule, BoundarySet,
};
pub use dendrogram::{cluster, cluster_with_stats, merge_segments, ClusterStats, Dendrogram};
pub use error::{Error, Result};
pub use eval::{evaluate, parse_boundary_file, EvalResult};
pub use idf::IdfTable;
pub use paragraph::{count_sentences, split_paragraphs, Paragraph};
pub use render::{
    export_dendrogram_json, parse_dendrogram_json, render_outline, OutlineFormat, OutlineView,
};
pub use stoplist::Stoplist;
pub use tiling::{
    cohesion_curve, curve_boundaries, threshold_value, tile, Threshold, TileConfig, TileTrace,
};
pub use token::{tokenize, tokenize_pretagged, TaggedToken, Token, TokenKind};
pub use vector::{proximity, TermVector};
