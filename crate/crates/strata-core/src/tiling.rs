//! Moving-window cohesion baseline: slide a fixed window over the
//! content-token stream, score the cosine between its halves, and cut
//! at sub-threshold dips. Raw counts, no smoothing.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::boundary::{BoundaryRule, BoundarySet};
use crate::error::{Error, Result};

/// How the cut-off under the cohesion curve is chosen.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Threshold {
    /// A fixed value.
    Absolute(f64),
    /// Curve mean minus this many (population) standard deviations.
    MeanMinusSd(f64),
}

/// Window geometry and threshold for the baseline.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TileConfig {
    /// Content tokens per window; split into two equal halves.
    pub window: usize,
    /// Token stride between successive windows.
    pub step: usize,
    pub threshold: Threshold,
}

impl Default for TileConfig {
    fn default() -> Self {
        TileConfig {
            window: 120,
            step: 20,
            threshold: Threshold::MeanMinusSd(1.0),
        }
    }
}

impl TileConfig {
    fn validate(&self) -> Result<()> {
        if self.window == 0 || !self.window.is_multiple_of(2) {
            return Err(Error::BadTileConfig(
                "window must be even and positive".into(),
            ));
        }
        if self.step == 0 {
            return Err(Error::BadTileConfig("step must be positive".into()));
        }
        Ok(())
    }
}

/// Everything needed to plot a run: the curve, the threshold actually
/// applied, and the token position of each paragraph gap.
#[derive(Debug, Clone, PartialEq)]
pub struct TileTrace {
    /// `(center token position, cohesion)` per window.
    pub curve: Vec<(usize, f64)>,
    pub threshold: f64,
    /// `gap_positions[g - 1]` = content tokens before paragraph `g+1`.
    pub gap_positions: Vec<usize>,
}

fn counts<S: AsRef<str>>(stems: &[S]) -> BTreeMap<&str, u64> {
    let mut map = BTreeMap::new();
    for s in stems {
        *map.entry(s.as_ref()).or_insert(0) += 1;
    }
    map
}

fn raw_cosine(a: &BTreeMap<&str, u64>, b: &BTreeMap<&str, u64>) -> f64 {
    let squares = |m: &BTreeMap<&str, u64>| m.values().map(|&c| (c * c) as f64).sum::<f64>();
    let (sa, sb) = (squares(a), squares(b));
    if sa == 0.0 || sb == 0.0 {
        return 0.0;
    }
    let (small, large) = if a.len() <= b.len() { (a, b) } else { (b, a) };
    let dot: f64 = small
        .iter()
        .filter_map(|(k, &c)| large.get(k).map(|&d| (c * d) as f64))
        .sum();
    // an empty sum is IEEE -0.0, which would render as "-0"
    if dot == 0.0 {
        return 0.0;
    }
    // a single square root keeps the identical-halves case at exactly 1
    let value = dot / libm::sqrt(sa * sb);
    if value > 1.0 {
        1.0
    } else {
        value
    }
}

/// Cosine between the half-windows at each stride position; entries
/// are `(window center, cohesion)` with cohesion in `[0, 1]`.
pub fn cohesion_curve<S: AsRef<str>>(
    stems: &[S],
    cfg: &TileConfig,
) -> Result<Vec<(usize, f64)>> {
    cfg.validate()?;
    if stems.len() < cfg.window {
        return Err(Error::TextShorterThanWindow {
            tokens: stems.len(),
            window: cfg.window,
        });
    }
    let half = cfg.window / 2;
    let mut curve = Vec::new();
    let mut start = 0;
    while start + cfg.window <= stems.len() {
        let center = start + half;
        let left = counts(&stems[start..center]);
        let right = counts(&stems[center..start + cfg.window]);
        curve.push((center, raw_cosine(&left, &right)));
        start += cfg.step;
    }
    Ok(curve)
}

/// Resolves a threshold against the observed curve values.
pub fn threshold_value(values: &[f64], threshold: Threshold) -> f64 {
    match threshold {
        Threshold::Absolute(t) => t,
        Threshold::MeanMinusSd(c) => {
            if values.is_empty() {
                return 0.0;
            }
            let n = values.len() as f64;
            let mean = values.iter().sum::<f64>() / n;
            let var = values.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>() / n;
            mean - c * libm::sqrt(var)
        }
    }
}

/// Cuts at local minima of the curve that fall strictly below the
/// threshold, each snapped to the nearest paragraph gap by token
/// position (ties toward the earlier gap, one boundary per gap).
pub fn curve_boundaries(
    curve: &[(usize, f64)],
    gap_positions: &[usize],
    cfg: &TileConfig,
) -> BoundarySet {
    let mut set = BoundarySet::new();
    if gap_positions.is_empty() {
        return set;
    }
    let values: Vec<f64> = curve.iter().map(|&(_, v)| v).collect();
    let threshold = threshold_value(&values, cfg.threshold);
    for (j, &(pos, v)) in curve.iter().enumerate() {
        if v < threshold && is_local_min(&values, j) {
            let mut gap = 1;
            let mut best = pos.abs_diff(gap_positions[0]);
            for (k, &gp) in gap_positions.iter().enumerate().skip(1) {
                let d = pos.abs_diff(gp);
                if d < best {
                    best = d;
                    gap = k + 1;
                }
            }
            set.insert(gap, Some(BoundaryRule::Dip));
        }
    }
    set
}

fn is_local_min(values: &[f64], j: usize) -> bool {
    if values.len() == 1 {
        return true;
    }
    let left = (j > 0).then(|| values[j - 1]);
    let right = (j + 1 < values.len()).then(|| values[j + 1]);
    let no_higher_side = left.is_none_or(|l| values[j] <= l)
        && right.is_none_or(|r| values[j] <= r);
    let strictly_below_one = left.is_some_and(|l| values[j] < l)
        || right.is_some_and(|r| values[j] < r);
    no_higher_side && strictly_below_one
}

/// Runs the whole baseline over per-paragraph stem sequences and
/// returns the boundaries with the trace behind them.
pub fn tile(
    paragraph_stems: &[Vec<alloc::string::String>],
    cfg: &TileConfig,
) -> Result<(BoundarySet, TileTrace)> {
    let mut flat: Vec<&str> = Vec::new();
    let mut gap_positions = Vec::new();
    for (i, stems) in paragraph_stems.iter().enumerate() {
        flat.extend(stems.iter().map(|s| s.as_str()));
        if i + 1 < paragraph_stems.len() {
            gap_positions.push(flat.len());
        }
    }
    let curve = cohesion_curve(&flat, cfg)?;
    let values: Vec<f64> = curve.iter().map(|&(_, v)| v).collect();
    let threshold = threshold_value(&values, cfg.threshold);
    let set = curve_boundaries(&curve, &gap_positions, cfg);
    Ok((
        set,
        TileTrace {
            curve,
            threshold,
            gap_positions,
        },
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;

    fn cfg(window: usize, step: usize, threshold: Threshold) -> TileConfig {
        TileConfig {
            window,
            step,
            threshold,
        }
    }

    #[test]
    fn identical_halves_cohere_fully() {
        let curve =
            cohesion_curve(&["a", "b", "a", "b"], &cfg(4, 1, Threshold::Absolute(0.5)))
                .unwrap();
        assert_eq!(curve, vec![(2, 1.0)]);
    }

    #[test]
    fn disjoint_halves_score_positive_zero() {
        let curve =
            cohesion_curve(&["a", "a", "b", "b"], &cfg(4, 1, Threshold::Absolute(0.5)))
                .unwrap();
        assert_eq!(curve, vec![(2, 0.0)]);
        // -0.0 would also pass the equality above but prints as "-0"
        assert!(curve[0].1.is_sign_positive());
    }

    #[test]
    fn half_overlap_scores_one_over_root_two() {
        // {a:2} against {a:1, b:1}: 2 / (2·√2)
        let curve =
            cohesion_curve(&["a", "a", "a", "b"], &cfg(4, 1, Threshold::Absolute(0.5)))
                .unwrap();
        assert_eq!(curve.len(), 1);
        assert!((curve[0].1 - core::f64::consts::FRAC_1_SQRT_2).abs() < 1e-12);
    }

    #[test]
    fn stride_places_window_centers() {
        let stems = ["a", "a", "a", "a", "b", "b", "b", "b"];
        let curve = cohesion_curve(&stems, &cfg(4, 2, Threshold::Absolute(0.5))).unwrap();
        let centers: Vec<usize> = curve.iter().map(|&(p, _)| p).collect();
        assert_eq!(centers, vec![2, 4, 6]);
    }

    #[test]
    fn short_text_is_an_error() {
        let err = cohesion_curve(&["a", "b", "c"], &cfg(4, 1, Threshold::Absolute(0.5)))
            .unwrap_err();
        assert_eq!(
            err,
            Error::TextShorterThanWindow {
                tokens: 3,
                window: 4
            }
        );
    }

    #[test]
    fn config_validation() {
        let stems = ["a", "b", "c", "d"];
        for bad in [cfg(0, 1, Threshold::Absolute(0.5)), cfg(5, 1, Threshold::Absolute(0.5))] {
            assert_eq!(
                cohesion_curve(&stems, &bad).unwrap_err(),
                Error::BadTileConfig("window must be even and positive".into())
            );
        }
        assert_eq!(
            cohesion_curve(&stems, &cfg(4, 0, Threshold::Absolute(0.5))).unwrap_err(),
            Error::BadTileConfig("step must be positive".into())
        );
    }

    #[test]
    fn threshold_resolution() {
        assert_eq!(threshold_value(&[0.9, 0.1], Threshold::Absolute(0.4)), 0.4);
        // mean 0.5, population sd 0.5
        let t = threshold_value(&[0.0, 1.0], Threshold::MeanMinusSd(1.0));
        assert!((t - 0.0).abs() < 1e-12);
        let t = threshold_value(&[0.0, 1.0], Threshold::MeanMinusSd(2.0));
        assert!((t - -0.5).abs() < 1e-12);
    }

    #[test]
    fn flat_curve_yields_nothing() {
        let curve = [(2, 0.9), (4, 0.9), (6, 0.9)];
        let set = curve_boundaries(&curve, &[3, 5], &cfg(4, 2, Threshold::Absolute(0.95)));
        assert!(set.is_empty());
    }

    #[test]
    fn dip_snaps_to_nearest_gap() {
        let curve = [(2, 0.9), (4, 0.1), (6, 0.9)];
        let set = curve_boundaries(&curve, &[5, 10], &cfg(4, 2, Threshold::Absolute(0.5)));
        assert_eq!(set.gaps().collect::<Vec<_>>(), vec![1]);
        assert_eq!(set.rule_at(1), Some(BoundaryRule::Dip));
    }

    #[test]
    fn two_minima_share_one_gap() {
        let curve = [(2, 0.1), (4, 0.8), (6, 0.2)];
        let set = curve_boundaries(&curve, &[4], &cfg(4, 2, Threshold::Absolute(0.5)));
        assert_eq!(set.len(), 1);
        assert!(set.contains(1));
    }

    #[test]
    fn equidistant_dip_takes_the_earlier_gap() {
        let curve = [(5, 0.1)];
        let set = curve_boundaries(&curve, &[4, 6], &cfg(4, 2, Threshold::Absolute(0.5)));
        assert_eq!(set.gaps().collect::<Vec<_>>(), vec![1]);
    }

    #[test]
    fn no_gaps_no_boundaries() {
        let curve = [(5, 0.1)];
        let set = curve_boundaries(&curve, &[], &cfg(4, 2, Threshold::Absolute(0.5)));
        assert!(set.is_empty());
    }

    #[test]
    fn raising_the_absolute_threshold_only_adds_boundaries() {
        let curve = [(2, 0.3), (4, 0.9), (6, 0.05), (8, 0.9), (10, 0.5)];
        let gaps = [2, 6, 10];
        let mut seen: Vec<usize> = Vec::new();
        for t in [0.1, 0.4, 0.95] {
            let set = curve_boundaries(&curve, &gaps, &cfg(4, 2, Threshold::Absolute(t)));
            let now: Vec<usize> = set.gaps().collect();
            assert!(seen.iter().all(|g| now.contains(g)));
            seen = now;
        }
        assert_eq!(seen, vec![1, 2, 3]);
    }

    #[test]
    fn tile_cuts_where_vocabulary_turns_over() {
        let paras: Vec<Vec<_>> = [["a", "a"], ["a", "a"], ["b", "b"], ["b", "b"]]
            .iter()
            .map(|p| p.iter().map(|s| s.to_string()).collect())
            .collect();
        let (set, trace) = tile(&paras, &cfg(4, 2, Threshold::MeanMinusSd(1.0))).unwrap();
        assert_eq!(trace.gap_positions, vec![2, 4, 6]);
        assert_eq!(
            trace.curve,
            vec![(2, 1.0), (4, 0.0), (6, 1.0)]
        );
        // mean 2/3, sd √2/3
        let expected = (2.0 - libm::sqrt(2.0)) / 3.0;
        assert!((trace.threshold - expected).abs() < 1e-12);
        assert_eq!(set.gaps().collect::<Vec<_>>(), vec![2]);
        assert_eq!(set.rule_at(2), Some(BoundaryRule::Dip));
    }
}
