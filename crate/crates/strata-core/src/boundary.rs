//! Boundary extraction from the merge tree, plus outline depths.

use alloc::vec::Vec;

use crate::dendrogram::Dendrogram;

/// Thresholds for the two boundary tests.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundaryConfig {
    /// Segment-size threshold shared by both rules.
    pub n: usize,
    /// The depth-difference threshold is this fraction of the whole
    /// tree's depth, kept real-valued.
    pub m_fraction: f64,
}

impl Default for BoundaryConfig {
    fn default() -> Self {
        BoundaryConfig {
            n: 1,
            m_fraction: 0.2,
        }
    }
}

/// Which test placed a boundary.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundaryRule {
    /// Two sufficiently large groups met: a notch in the outline.
    Notch,
    /// A small, shallow group abuts a large, deep one.
    Cliff,
    /// A below-threshold minimum of the sliding-window cohesion curve.
    Dip,
}

/// One boundary: the text is cut between paragraphs `gap` and
/// `gap + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Boundary {
    pub gap: usize,
    /// The rule that fired, when known; parsed boundary files carry
    /// no rule information.
    pub rule: Option<BoundaryRule>,
}

/// Sorted, duplicate-free set of boundaries.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BoundarySet {
    entries: Vec<Boundary>,
}

impl BoundarySet {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds a set from bare gap indices (deduplicated, no rules).
    pub fn from_gaps<I>(gaps: I) -> Self
    where
        I: IntoIterator<Item = usize>,
    {
        let mut set = Self::new();
        for gap in gaps {
            set.insert(gap, None);
        }
        set
    }

    /// Inserts a boundary, keeping the set sorted. When the gap is
    /// already present the first insertion wins; returns whether the
    /// set changed.
    pub fn insert(&mut self, gap: usize, rule: Option<BoundaryRule>) -> bool {
        match self.entries.binary_search_by_key(&gap, |b| b.gap) {
            Ok(_) => false,
            Err(pos) => {
                self.entries.insert(pos, Boundary { gap, rule });
                true
            }
        }
    }

    pub fn contains(&self, gap: usize) -> bool {
        self.entries
            .binary_search_by_key(&gap, |b| b.gap)
            .is_ok()
    }

    /// The rule recorded at `gap`, if the boundary exists and has one.
    pub fn rule_at(&self, gap: usize) -> Option<BoundaryRule> {
        self.entries
            .binary_search_by_key(&gap, |b| b.gap)
            .ok()
            .and_then(|i| self.entries[i].rule)
    }

    /// Gap indices in ascending order.
    pub fn gaps(&self) -> impl Iterator<Item = usize> + '_ {
        self.entries.iter().map(|b| b.gap)
    }

    pub fn iter(&self) -> core::slice::Iter<'_, Boundary> {
        self.entries.iter()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

impl<'a> IntoIterator for &'a BoundarySet {
    type Item = &'a Boundary;
    type IntoIter = core::slice::Iter<'a, Boundary>;

    fn into_iter(self) -> Self::IntoIter {
        self.entries.iter()
    }
}

/// The notch test: both groups strictly outgrow `n`.
pub fn notch_rule(s1: &Dendrogram, s2: &Dendrogram, n: usize) -> bool {
    s1.size() > n && s2.size() > n
}

/// The cliff test: a large group (size > `n`) meets a small one
/// (size ≤ `n`) across a depth drop strictly greater than `m`.
/// Callers pass `s1` as the larger-or-equal child.
pub fn cliff_rule(s1: &Dendrogram, s2: &Dendrogram, n: usize, m: f64) -> bool {
    s1.size() > n && s2.size() <= n && (s1.depth() as f64 - s2.depth() as f64) > m
}

/// Walks every merge node and records a boundary at the gap between
/// its children when the notch or cliff test fires. `s1`/`s2` are the
/// children ordered by size (ties keep the left child as `s1`); the
/// gap itself always falls after the left child's last paragraph.
pub fn find_boundaries(tree: &Dendrogram, cfg: &BoundaryConfig) -> BoundarySet {
    let m = cfg.m_fraction * tree.depth() as f64;
    let mut set = BoundarySet::new();
    walk(tree, cfg.n, m, &mut set);
    set
}

fn walk(node: &Dendrogram, n: usize, m: f64, set: &mut BoundarySet) {
    if let Dendrogram::Merge { left, right, .. } = node {
        let (s1, s2) = if left.size() >= right.size() {
            (&**left, &**right)
        } else {
            (&**right, &**left)
        };
        if notch_rule(s1, s2, n) {
            set.insert(left.last_leaf(), Some(BoundaryRule::Notch));
        } else if cliff_rule(s1, s2, n, m) {
            set.insert(left.last_leaf(), Some(BoundaryRule::Cliff));
        }
        walk(left, n, m, set);
        walk(right, n, m, set);
    }
}

/// Path length from each leaf up to the root, indexed by paragraph.
/// Leaves must be numbered `1..=size`, as produced by clustering.
pub fn outline_depths(tree: &Dendrogram) -> Vec<usize> {
    let mut out = alloc::vec![0; tree.size()];
    fn go(node: &Dendrogram, level: usize, out: &mut [usize]) {
        match node {
            Dendrogram::Leaf { paragraph } => out[*paragraph - 1] = level,
            Dendrogram::Merge { left, right, .. } => {
                go(left, level + 1, out);
                go(right, level + 1, out);
            }
        }
    }
    go(tree, 0, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn leaf(p: usize) -> Dendrogram {
        Dendrogram::Leaf { paragraph: p }
    }

    /// ((1,2),(3,4)) with arbitrary proximities.
    fn balanced_4() -> Dendrogram {
        Dendrogram::merge(
            Dendrogram::merge(leaf(1), leaf(2), 0.9),
            Dendrogram::merge(leaf(3), leaf(4), 0.8),
            0.1,
        )
    }

    /// (((1,2),3),4)
    fn chain_4() -> Dendrogram {
        Dendrogram::merge(
            Dendrogram::merge(Dendrogram::merge(leaf(1), leaf(2), 0.9), leaf(3), 0.5),
            leaf(4),
            0.2,
        )
    }

    #[test]
    fn rule_predicates() {
        let two = Dendrogram::merge(leaf(1), leaf(2), 0.5);
        let five = Dendrogram::merge(
            Dendrogram::merge(leaf(3), leaf(4), 0.5),
            Dendrogram::merge(leaf(5), Dendrogram::merge(leaf(6), leaf(7), 0.5), 0.5),
            0.5,
        );
        assert!(notch_rule(&two, &two, 1));
        assert!(!notch_rule(&five, &leaf(8), 1));
        assert!(!notch_rule(&two, &two, 2));
        assert!(cliff_rule(&five, &leaf(8), 1, 1.0));
        assert!(!cliff_rule(&five, &leaf(8), 1, 4.0));
        assert!(!cliff_rule(&two, &two, 1, 0.0));
    }

    #[test]
    fn notch_at_the_root_of_a_balanced_tree() {
        let set = find_boundaries(&balanced_4(), &BoundaryConfig::default());
        assert_eq!(set.len(), 1);
        assert!(set.contains(2));
        assert_eq!(set.rule_at(2), Some(BoundaryRule::Notch));
    }

    #[test]
    fn chain_tree_cliffs_at_default_thresholds() {
        // depth(T)=3 so m=0.6; every merge pairs a group with a single
        // leaf, and the depth drops (2 at the root, 1 at ((1,2),3))
        // both exceed m
        let set = find_boundaries(&chain_4(), &BoundaryConfig::default());
        assert_eq!(set.rule_at(3), Some(BoundaryRule::Cliff));
        assert_eq!(set.rule_at(2), Some(BoundaryRule::Cliff));
        assert!(!set.contains(1));
        assert_eq!(set.len(), 2);
    }

    #[test]
    fn chain_tree_thresholds() {
        // m = 1.5 keeps only the root's drop of 2
        let set = find_boundaries(
            &chain_4(),
            &BoundaryConfig {
                n: 1,
                m_fraction: 0.5,
            },
        );
        assert_eq!(set.len(), 1);
        assert_eq!(set.rule_at(3), Some(BoundaryRule::Cliff));
        // m ≥ 2 suppresses every cliff; the notch never fires here
        let none = find_boundaries(
            &chain_4(),
            &BoundaryConfig {
                n: 1,
                m_fraction: 0.7,
            },
        );
        assert!(none.is_empty());
    }

    #[test]
    fn cliff_fires_on_deep_versus_leaf() {
        // size-5 chain of depth 4 merged with a single leaf
        let deep = Dendrogram::merge(
            Dendrogram::merge(
                Dendrogram::merge(Dendrogram::merge(leaf(1), leaf(2), 0.9), leaf(3), 0.8),
                leaf(4),
                0.7,
            ),
            leaf(5),
            0.6,
        );
        let tree = Dendrogram::merge(deep, leaf(6), 0.1);
        assert_eq!(tree.depth(), 5);
        let set = find_boundaries(
            &tree,
            &BoundaryConfig {
                n: 1,
                m_fraction: 0.2,
            },
        );
        // m = 1; at the root size(S1)=5 > 1, size(S2)=1 ≤ 1,
        // depth difference 4 > 1 → cliff at gap 5
        assert_eq!(set.rule_at(5), Some(BoundaryRule::Cliff));
    }

    #[test]
    fn gap_follows_the_left_child_even_when_smaller() {
        // left child is the single leaf: the boundary still lands after
        // paragraph 1, between the children
        let deep_right = Dendrogram::merge(
            Dendrogram::merge(
                Dendrogram::merge(Dendrogram::merge(leaf(2), leaf(3), 0.9), leaf(4), 0.8),
                leaf(5),
                0.7,
            ),
            leaf(6),
            0.6,
        );
        let tree = Dendrogram::merge(leaf(1), deep_right, 0.1);
        let set = find_boundaries(&tree, &BoundaryConfig::default());
        assert_eq!(set.rule_at(1), Some(BoundaryRule::Cliff));
    }

    #[test]
    fn rules_are_mutually_exclusive_per_node() {
        // exhaustive over small size/depth combinations: the size
        // conditions cannot both hold
        for s1 in 1..6usize {
            for s2 in 1..=s1 {
                for n in 0..4usize {
                    let notch = s1 > n && s2 > n;
                    let cliff_sizes = s1 > n && s2 <= n;
                    assert!(!(notch && cliff_sizes));
                }
            }
        }
    }

    #[test]
    fn boundary_set_sorts_dedups_and_keeps_first_rule() {
        let mut set = BoundarySet::new();
        assert!(set.insert(5, Some(BoundaryRule::Notch)));
        assert!(set.insert(2, Some(BoundaryRule::Cliff)));
        assert!(!set.insert(5, Some(BoundaryRule::Cliff)));
        assert_eq!(set.gaps().collect::<Vec<_>>(), vec![2, 5]);
        assert_eq!(set.rule_at(5), Some(BoundaryRule::Notch));
        assert_eq!(set.len(), 2);
    }

    #[test]
    fn outline_depth_examples() {
        assert_eq!(outline_depths(&leaf(1)), vec![0]);
        assert_eq!(
            outline_depths(&Dendrogram::merge(leaf(1), leaf(2), 0.5)),
            vec![1, 1]
        );
        assert_eq!(
            outline_depths(&Dendrogram::merge(
                Dendrogram::merge(leaf(1), leaf(2), 0.5),
                leaf(3),
                0.2
            )),
            vec![2, 2, 1]
        );
        let depths = outline_depths(&balanced_4());
        assert_eq!(depths, vec![2, 2, 2, 2]);
        assert_eq!(
            *depths.iter().max().unwrap(),
            balanced_4().depth()
        );
    }
}
