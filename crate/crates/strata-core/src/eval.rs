//! Precision/recall scoring of hypothesis boundaries against gold
//! annotations, under exact gap matching.

use alloc::string::String;

use crate::boundary::BoundarySet;
use crate::error::{Error, Result};

/// Scores for one hypothesis/gold comparison.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalResult {
    pub precision: f64,
    pub recall: f64,
    pub hits: usize,
    pub hyp_count: usize,
    pub gold_count: usize,
}

impl EvalResult {
    /// True when precision is 1.0 only because nothing was proposed.
    pub fn vacuous_precision(&self) -> bool {
        self.hyp_count == 0
    }

    /// Precision as a half-up-rounded integer percentage.
    pub fn precision_percent(&self) -> u32 {
        percent(self.precision)
    }

    /// Recall as a half-up-rounded integer percentage.
    pub fn recall_percent(&self) -> u32 {
        percent(self.recall)
    }
}

fn percent(fraction: f64) -> u32 {
    libm::floor(fraction * 100.0 + 0.5) as u32
}

/// Compares two boundary sets: precision = hits/|hyp| (1.0 when the
/// hypothesis is empty), recall = hits/|gold|.
pub fn evaluate(hyp: &BoundarySet, gold: &BoundarySet) -> Result<EvalResult> {
    if gold.is_empty() {
        return Err(Error::EmptyGold);
    }
    let hits = hyp.gaps().filter(|&g| gold.contains(g)).count();
    let hyp_count = hyp.len();
    let gold_count = gold.len();
    let precision = if hyp_count == 0 {
        1.0
    } else {
        hits as f64 / hyp_count as f64
    };
    Ok(EvalResult {
        precision,
        recall: hits as f64 / gold_count as f64,
        hits,
        hyp_count,
        gold_count,
    })
}

/// Parses a boundary file: whitespace-separated 1-based gap indices,
/// `#` starting a comment that runs to end of line.
pub fn parse_boundary_file(source: &str) -> Result<BoundarySet> {
    let mut set = BoundarySet::new();
    for (i, line) in source.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("");
        for token in line.split_whitespace() {
            let gap: usize = token.parse().map_err(|_| {
                Error::parse(i + 1, alloc::format!("`{token}` is not a gap index"))
            })?;
            if gap < 1 {
                return Err(Error::parse(
                    i + 1,
                    String::from("gap index must be at least 1"),
                ));
            }
            set.insert(gap, None);
        }
    }
    Ok(set)
}
