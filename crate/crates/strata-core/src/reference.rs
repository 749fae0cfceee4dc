//! Brute-force clustering oracle for differential testing.
//!
//! Same contract as [`crate::cluster`], but every consecutive-pair
//! proximity is recomputed from the raw merged frequencies at every
//! iteration, with its own straight-line weight and cosine
//! arithmetic. Nothing here shares code with the incremental
//! implementation, so a regression there cannot hide in a shared
//! helper. Quadratic and meant for small inputs.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use crate::analyze::{GsigMap, TextStats};
use crate::dendrogram::Dendrogram;
use crate::error::{Error, Result};
use crate::paragraph::Paragraph;

fn weights_of(
    freqs: &BTreeMap<String, u64>,
    stats: &TextStats,
    gsig: &GsigMap,
) -> Result<BTreeMap<String, f64>> {
    let mut out = BTreeMap::new();
    for (stem, &f_seg) in freqs {
        let f_text = *stats
            .total_freq
            .get(stem)
            .ok_or_else(|| Error::MissingStem(stem.clone()))?;
        let sig = *gsig
            .get(stem)
            .ok_or_else(|| Error::MissingStem(stem.clone()))?;
        out.insert(
            stem.clone(),
            f_seg as f64 * (f_text as f64 / stats.f_max as f64) * sig,
        );
    }
    Ok(out)
}

fn pair_cosine(
    a: &BTreeMap<String, u64>,
    b: &BTreeMap<String, u64>,
    stats: &TextStats,
    gsig: &GsigMap,
) -> Result<f64> {
    let wa = weights_of(a, stats, gsig)?;
    let wb = weights_of(b, stats, gsig)?;
    let na = libm::sqrt(wa.values().map(|w| w * w).sum());
    let nb = libm::sqrt(wb.values().map(|w| w * w).sum());
    if na == 0.0 || nb == 0.0 {
        return Ok(0.0);
    }
    let mut dot = 0.0;
    for (stem, w) in &wa {
        if let Some(v) = wb.get(stem) {
            dot += w * v;
        }
    }
    let cos = dot / (na * nb);
    Ok(if cos > 1.0 { 1.0 } else { cos })
}

/// Clusters by full recomputation each round; merges the most similar
/// adjacent pair, leftmost on ties.
pub fn cluster_brute_force(
    paragraphs: &[Paragraph],
    stats: &TextStats,
    gsig: &GsigMap,
) -> Result<Dendrogram> {
    if paragraphs.is_empty() {
        return Err(Error::NoParagraphs);
    }
    let mut nodes: Vec<Dendrogram> = paragraphs
        .iter()
        .map(|p| Dendrogram::Leaf {
            paragraph: p.ordinal,
        })
        .collect();
    let mut freqs: Vec<BTreeMap<String, u64>> =
        paragraphs.iter().map(|p| p.freqs.clone()).collect();
    while nodes.len() > 1 {
        let mut best = 0;
        let mut best_prox = pair_cosine(&freqs[0], &freqs[1], stats, gsig)?;
        for i in 1..nodes.len() - 1 {
            let p = pair_cosine(&freqs[i], &freqs[i + 1], stats, gsig)?;
            if p > best_prox {
                best_prox = p;
                best = i;
            }
        }
        let right_node = nodes.remove(best + 1);
        let left_node = nodes.remove(best);
        nodes.insert(best, Dendrogram::merge(left_node, right_node, best_prox));
        let right_freqs = freqs.remove(best + 1);
        for (stem, f) in right_freqs {
            *freqs[best].entry(stem).or_insert(0) += f;
        }
    }
    Ok(nodes.pop().expect("one node remains"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dendrogram::cluster;
    use alloc::string::ToString;
    use alloc::vec;

    fn paragraph(ordinal: usize, pairs: &[(&str, u64)]) -> Paragraph {
        Paragraph {
            ordinal,
            sentence_count: 1,
            freqs: pairs.iter().map(|(s, f)| (s.to_string(), *f)).collect(),
        }
    }

    #[test]
    fn matches_incremental_on_a_small_document() {
        let ps = vec![
            paragraph(1, &[("star", 2), ("sky", 1)]),
            paragraph(2, &[("star", 1), ("moon", 2)]),
            paragraph(3, &[("moon", 1), ("glow", 2)]),
            paragraph(4, &[("glow", 1), ("sky", 3)]),
        ];
        let stats = TextStats::from_paragraphs(&ps);
        let gsig: GsigMap = stats
            .total_freq
            .keys()
            .enumerate()
            .map(|(i, k)| (k.clone(), 0.5 + i as f64 * 0.3))
            .collect();
        let fast = cluster(&ps, &stats, &gsig).unwrap();
        let slow = cluster_brute_force(&ps, &stats, &gsig).unwrap();
        assert_eq!(fast, slow);
    }

    #[test]
    fn empty_input_is_an_error() {
        let stats = TextStats::from_paragraphs(&[]);
        assert_eq!(
            cluster_brute_force(&[], &stats, &GsigMap::new()).unwrap_err(),
            Error::NoParagraphs
        );
    }
}
