//! Weighted term vectors and their cosine proximity.

use alloc::collections::BTreeMap;
use alloc::string::String;

use crate::analyze::{GsigMap, TextStats};
use crate::error::{Error, Result};

/// Sparse stem → weight map with a cached Euclidean norm.
///
/// A segment's weight for stem `k` is the product of its in-segment
/// frequency, the stem's relative whole-text frequency, and the
/// stem's general significance. All weights are non-negative.
#[derive(Debug, Clone, PartialEq)]
pub struct TermVector {
    weights: BTreeMap<String, f64>,
    norm: f64,
}

impl TermVector {
    /// Builds the vector for a segment's stem frequencies.
    ///
    /// Errors with [`Error::MissingStem`] when a stem is absent from
    /// the text totals or the significance map.
    pub fn build(
        freqs: &BTreeMap<String, u64>,
        stats: &TextStats,
        gsig: &GsigMap,
    ) -> Result<TermVector> {
        let mut weights = BTreeMap::new();
        for (stem, &f_seg) in freqs {
            let f_text = *stats
                .total_freq
                .get(stem)
                .ok_or_else(|| Error::MissingStem(stem.clone()))?;
            let sig = *gsig
                .get(stem)
                .ok_or_else(|| Error::MissingStem(stem.clone()))?;
            let weight = f_seg as f64 * (f_text as f64 / stats.f_max as f64) * sig;
            weights.insert(stem.clone(), weight);
        }
        Ok(Self::from_weights(weights))
    }

    /// Wraps an explicit weight map, computing the norm.
    pub fn from_weights(weights: BTreeMap<String, f64>) -> TermVector {
        let sumsq: f64 = weights.values().map(|w| w * w).sum();
        // an empty sum is IEEE -0.0; keep the zero norm positive
        let norm = if sumsq == 0.0 { 0.0 } else { libm::sqrt(sumsq) };
        TermVector { weights, norm }
    }

    pub fn weights(&self) -> &BTreeMap<String, f64> {
        &self.weights
    }

    pub fn norm(&self) -> f64 {
        self.norm
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }
}

/// Cosine of the angle between two vectors, in `[0, 1]`.
///
/// Defined as 0 when either vector has zero norm: a segment with no
/// weighted content has no lexical cohesion with anything.
pub fn proximity(a: &TermVector, b: &TermVector) -> f64 {
    if a.norm == 0.0 || b.norm == 0.0 {
        return 0.0;
    }
    let (small, large) = if a.weights.len() <= b.weights.len() {
        (a, b)
    } else {
        (b, a)
    };
    let mut dot = 0.0;
    for (stem, wa) in &small.weights {
        if let Some(wb) = large.weights.get(stem) {
            dot += wa * wb;
        }
    }
    let cos = dot / (a.norm * b.norm);
    if cos > 1.0 {
        1.0
    } else {
        cos
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn vec_of(pairs: &[(&str, f64)]) -> TermVector {
        TermVector::from_weights(
            pairs
                .iter()
                .map(|(s, w)| (s.to_string(), *w))
                .collect(),
        )
    }

    fn freqs_of(pairs: &[(&str, u64)]) -> BTreeMap<String, u64> {
        pairs.iter().map(|(s, f)| (s.to_string(), *f)).collect()
    }

    #[test]
    fn weight_is_product_of_three_factors() {
        let freqs = freqs_of(&[("star", 2)]);
        let stats = TextStats {
            total_freq: freqs_of(&[("star", 4), ("moon", 10)]),
            f_max: 10,
        };
        let gsig: GsigMap = [("star".to_string(), 2.0)].into_iter().collect();
        let v = TermVector::build(&freqs, &stats, &gsig).unwrap();
        assert!((v.weights()["star"] - 1.6).abs() < 1e-12);
    }

    #[test]
    fn empty_freqs_make_a_zero_vector() {
        let stats = TextStats {
            total_freq: BTreeMap::new(),
            f_max: 0,
        };
        let v = TermVector::build(&BTreeMap::new(), &stats, &GsigMap::new()).unwrap();
        assert!(v.is_empty());
        assert_eq!(v.norm(), 0.0);
    }

    #[test]
    fn zero_significance_zeroes_the_weight() {
        let freqs = freqs_of(&[("the", 9)]);
        let stats = TextStats {
            total_freq: freqs_of(&[("the", 9)]),
            f_max: 9,
        };
        let gsig: GsigMap = [("the".to_string(), 0.0)].into_iter().collect();
        let v = TermVector::build(&freqs, &stats, &gsig).unwrap();
        assert_eq!(v.weights()["the"], 0.0);
        assert_eq!(v.norm(), 0.0);
    }

    #[test]
    fn missing_stem_is_an_error() {
        let freqs = freqs_of(&[("star", 1)]);
        let stats = TextStats {
            total_freq: BTreeMap::new(),
            f_max: 1,
        };
        let err = TermVector::build(&freqs, &stats, &GsigMap::new()).unwrap_err();
        assert_eq!(err, Error::MissingStem("star".to_string()));
    }

    #[test]
    fn norm_squares_sum() {
        let v = vec_of(&[("a", 3.0), ("b", 4.0)]);
        assert!((v.norm() - 5.0).abs() < 1e-12);
        let n2: f64 = v.weights().values().map(|w| w * w).sum();
        assert!((v.norm() * v.norm() - n2).abs() <= 1e-9 * n2);
    }

    #[test]
    fn self_cosine_is_one() {
        let v = vec_of(&[("a", 1.2), ("b", 0.4), ("c", 2.5)]);
        assert!((proximity(&v, &v) - 1.0).abs() < 1e-9);
    }

    #[test]
    fn disjoint_supports_are_orthogonal() {
        let a = vec_of(&[("a", 1.0), ("b", 2.0)]);
        let b = vec_of(&[("c", 3.0)]);
        assert_eq!(proximity(&a, &b), 0.0);
    }

    #[test]
    fn worked_cosine_example() {
        let a = vec_of(&[("x", 1.0), ("y", 1.0)]);
        let b = vec_of(&[("x", 1.0)]);
        assert!((proximity(&a, &b) - core::f64::consts::FRAC_1_SQRT_2).abs() < 1e-9);
    }

    #[test]
    fn zero_norm_proximity_is_zero() {
        let zero = vec_of(&[]);
        let v = vec_of(&[("a", 1.0)]);
        assert_eq!(proximity(&zero, &v), 0.0);
        assert_eq!(proximity(&zero, &zero), 0.0);
    }

    #[test]
    fn proximity_is_symmetric_and_bounded() {
        let a = vec_of(&[("a", 0.3), ("b", 1.7), ("c", 0.2)]);
        let b = vec_of(&[("b", 0.9), ("c", 2.2), ("d", 1.1)]);
        let p = proximity(&a, &b);
        assert_eq!(p, proximity(&b, &a));
        assert!((0.0..=1.0).contains(&p));
    }
}
