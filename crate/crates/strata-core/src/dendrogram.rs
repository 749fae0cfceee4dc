//! Order-preserving agglomerative clustering of paragraphs.

use alloc::boxed::Box;
use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use crate::analyze::{GsigMap, TextStats};
use crate::error::{Error, Result};
use crate::paragraph::Paragraph;
use crate::vector::{proximity, TermVector};

/// Binary merge tree over a document's paragraphs.
///
/// Leaves carry 1-based paragraph ordinals and read left to right in
/// document order. Every merge node records the proximity at which
/// its children were joined, its leaf count, and its height (longest
/// path down to a leaf).
#[derive(Debug, Clone, PartialEq)]
pub enum Dendrogram {
    Leaf {
        paragraph: usize,
    },
    Merge {
        proximity: f64,
        size: usize,
        depth: usize,
        left: Box<Dendrogram>,
        right: Box<Dendrogram>,
    },
}

impl Dendrogram {
    /// Joins two adjacent subtrees, deriving size and depth.
    pub fn merge(left: Dendrogram, right: Dendrogram, proximity: f64) -> Dendrogram {
        let size = left.size() + right.size();
        let depth = 1 + left.depth().max(right.depth());
        Dendrogram::Merge {
            proximity,
            size,
            depth,
            left: Box::new(left),
            right: Box::new(right),
        }
    }

    /// Number of leaves under this node.
    pub fn size(&self) -> usize {
        match self {
            Dendrogram::Leaf { .. } => 1,
            Dendrogram::Merge { size, .. } => *size,
        }
    }

    /// Longest path from this node down to a leaf.
    pub fn depth(&self) -> usize {
        match self {
            Dendrogram::Leaf { .. } => 0,
            Dendrogram::Merge { depth, .. } => *depth,
        }
    }

    /// Ordinal of the leftmost leaf.
    pub fn first_leaf(&self) -> usize {
        let mut node = self;
        loop {
            match node {
                Dendrogram::Leaf { paragraph } => return *paragraph,
                Dendrogram::Merge { left, .. } => node = left,
            }
        }
    }

    /// Ordinal of the rightmost leaf.
    pub fn last_leaf(&self) -> usize {
        let mut node = self;
        loop {
            match node {
                Dendrogram::Leaf { paragraph } => return *paragraph,
                Dendrogram::Merge { right, .. } => node = right,
            }
        }
    }

    /// Leaf ordinals in left-to-right order.
    pub fn leaves(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.size());
        let mut stack = Vec::new();
        stack.push(self);
        while let Some(node) = stack.pop() {
            match node {
                Dendrogram::Leaf { paragraph } => out.push(*paragraph),
                Dendrogram::Merge { left, right, .. } => {
                    stack.push(right);
                    stack.push(left);
                }
            }
        }
        out
    }

    /// Structural equality with merge proximities compared within
    /// `tolerance`.
    pub fn approx_eq(&self, other: &Dendrogram, tolerance: f64) -> bool {
        match (self, other) {
            (
                Dendrogram::Leaf { paragraph: a },
                Dendrogram::Leaf { paragraph: b },
            ) => a == b,
            (
                Dendrogram::Merge {
                    proximity: pa,
                    size: sa,
                    depth: da,
                    left: la,
                    right: ra,
                },
                Dendrogram::Merge {
                    proximity: pb,
                    size: sb,
                    depth: db,
                    left: lb,
                    right: rb,
                },
            ) => {
                sa == sb
                    && da == db
                    && (pa - pb).abs() <= tolerance
                    && la.approx_eq(lb, tolerance)
                    && ra.approx_eq(rb, tolerance)
            }
            _ => false,
        }
    }
}

/// Pointwise sum of two segments' stem frequencies.
pub fn merge_segments(
    a: &BTreeMap<String, u64>,
    b: &BTreeMap<String, u64>,
) -> BTreeMap<String, u64> {
    let mut out = a.clone();
    for (stem, f) in b {
        *out.entry(stem.clone()).or_insert(0) += f;
    }
    out
}

/// Instrumentation from one clustering run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClusterStats {
    /// Number of cosine evaluations performed. Bounded by `3P - 3`
    /// for `P ≥ 2` paragraphs: after a merge only the pairs touching
    /// the new segment are recomputed.
    pub proximity_evals: usize,
}

/// Clusters paragraphs by repeatedly merging the most similar pair of
/// *adjacent* segments, so leaf order always matches document order.
///
/// Performs exactly `P - 1` merges. Ties go to the leftmost pair.
pub fn cluster(
    paragraphs: &[Paragraph],
    stats: &TextStats,
    gsig: &GsigMap,
) -> Result<Dendrogram> {
    cluster_with_stats(paragraphs, stats, gsig).map(|(tree, _)| tree)
}

/// [`cluster`], also returning evaluation-count instrumentation.
pub fn cluster_with_stats(
    paragraphs: &[Paragraph],
    stats: &TextStats,
    gsig: &GsigMap,
) -> Result<(Dendrogram, ClusterStats)> {
    if paragraphs.is_empty() {
        return Err(Error::NoParagraphs);
    }
    struct Segment {
        node: Dendrogram,
        freqs: BTreeMap<String, u64>,
        vector: TermVector,
    }
    let mut segments: Vec<Segment> = Vec::with_capacity(paragraphs.len());
    for p in paragraphs {
        segments.push(Segment {
            node: Dendrogram::Leaf {
                paragraph: p.ordinal,
            },
            freqs: p.freqs.clone(),
            vector: TermVector::build(&p.freqs, stats, gsig)?,
        });
    }
    let mut evals = 0usize;
    let mut prox: Vec<f64> = Vec::with_capacity(segments.len().saturating_sub(1));
    for i in 0..segments.len().saturating_sub(1) {
        prox.push(proximity(&segments[i].vector, &segments[i + 1].vector));
        evals += 1;
    }
    while segments.len() > 1 {
        let mut best = 0;
        for i in 1..prox.len() {
            if prox[i] > prox[best] {
                best = i;
            }
        }
        let right = segments.remove(best + 1);
        let left = segments.remove(best);
        let freqs = merge_segments(&left.freqs, &right.freqs);
        let vector = TermVector::build(&freqs, stats, gsig)?;
        let node = Dendrogram::merge(left.node, right.node, prox[best]);
        segments.insert(
            best,
            Segment {
                node,
                freqs,
                vector,
            },
        );
        prox.remove(best);
        if best > 0 {
            prox[best - 1] = proximity(&segments[best - 1].vector, &segments[best].vector);
            evals += 1;
        }
        if best + 1 < segments.len() {
            prox[best] = proximity(&segments[best].vector, &segments[best + 1].vector);
            evals += 1;
        }
    }
    let root = segments.pop().expect("one segment remains").node;
    Ok((
        root,
        ClusterStats {
            proximity_evals: evals,
        },
    ))
}
