use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::CombinatError;
use crate::exactpoly::factorial;

/// A finite set of positive integers, kept strictly increasing.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct GroundSet(Vec<u32>);

impl GroundSet {
    pub fn new(elems: Vec<u32>) -> Result<Self, CombinatError> {
        if elems.first() == Some(&0) {
            return Err(CombinatError::NonPositiveElement);
        }
        if elems.windows(2).any(|w| w[0] >= w[1]) {
            return Err(CombinatError::NotIncreasing);
        }
        Ok(GroundSet(elems))
    }

    /// `{1, ..., n}`.
    pub fn range(n: usize) -> Self {
        GroundSet((1..=n as u32).collect())
    }

    pub fn elems(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn min(&self) -> Option<u32> {
        self.0.first().copied()
    }

    /// Rank of `x` in the ground set.
    pub fn position(&self, x: u32) -> Option<usize> {
        self.0.binary_search(&x).ok()
    }
}

/// A set partition in canonical form: every block sorted, blocks sorted by
/// their minimum.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetPartition {
    ground: GroundSet,
    blocks: Vec<Vec<u32>>,
}

impl SetPartition {
    /// Canonicalizes and validates a list of blocks; the ground set is their union.
    pub fn from_blocks(mut blocks: Vec<Vec<u32>>) -> Result<Self, CombinatError> {
        for b in &mut blocks {
            if b.is_empty() {
                return Err(CombinatError::EmptyBlock);
            }
            b.sort_unstable();
        }
        blocks.sort_unstable_by_key(|b| b[0]);
        let mut all: Vec<u32> = blocks.iter().flatten().copied().collect();
        all.sort_unstable();
        if let Some(w) = all.windows(2).find(|w| w[0] == w[1]) {
            return Err(CombinatError::Overlap(w[0]));
        }
        let ground = GroundSet::new(all)?;
        Ok(SetPartition { ground, blocks })
    }

    /// Builds a partition from one block label per ground element. Labels must
    /// be a restricted growth string (first occurrences in increasing order).
    pub(crate) fn from_labels(ground: &GroundSet, labels: &[u8]) -> Self {
        let nblocks = labels.iter().map(|&l| l as usize + 1).max().unwrap_or(0);
        let mut blocks = vec![Vec::new(); nblocks];
        for (&x, &l) in ground.elems().iter().zip(labels) {
            blocks[l as usize].push(x);
        }
        SetPartition {
            ground: ground.clone(),
            blocks,
        }
    }

    /// The one-block partition `1̂` of a ground set.
    pub fn top(ground: &GroundSet) -> Self {
        SetPartition {
            ground: ground.clone(),
            blocks: if ground.is_empty() {
                Vec::new()
            } else {
                vec![ground.elems().to_vec()]
            },
        }
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn blocks(&self) -> &[Vec<u32>] {
        &self.blocks
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    /// Index of the block containing `x`.
    pub fn block_of(&self, x: u32) -> Option<usize> {
        self.blocks.iter().position(|b| b.binary_search(&x).is_ok())
    }

    /// Block label of each ground element, in ground order.
    pub fn labels(&self) -> Vec<usize> {
        let mut out = vec![0; self.ground.len()];
        for (i, b) in self.blocks.iter().enumerate() {
            for &x in b {
                out[self.ground.position(x).expect("block element in ground")] = i;
            }
        }
        out
    }

    /// `self <= other` in the refinement order: every block of `self` lies in
    /// a block of `other` (and the ground sets agree).
    pub fn refines(&self, other: &SetPartition) -> bool {
        self.ground == other.ground
            && self.blocks.iter().all(|b| {
                other
                    .block_of(b[0])
                    .is_some_and(|j| b.iter().all(|x| other.blocks[j].binary_search(x).is_ok()))
            })
    }

    /// Blocks of `self` contained in `subset`, as a partition of `subset`.
    /// Fails when some block straddles the boundary of `subset`.
    pub fn restrict(&self, subset: &[u32]) -> Result<SetPartition, CombinatError> {
        let inside = |x: &u32| subset.binary_search(x).is_ok();
        let mut blocks = Vec::new();
        for b in &self.blocks {
            let n_in = b.iter().filter(|x| inside(x)).count();
            if n_in == b.len() {
                blocks.push(b.clone());
            } else if n_in != 0 {
                return Err(CombinatError::NotRefinement);
            }
        }
        SetPartition::from_blocks(blocks)
    }

    /// No `a < b < c < d` with `a, c` in one block and `b, d` in another.
    pub fn is_noncrossing(&self) -> bool {
        for i in 0..self.blocks.len() {
            for j in i + 1..self.blocks.len() {
                if blocks_cross(&self.blocks[i], &self.blocks[j]) {
                    return false;
                }
            }
        }
        true
    }

    /// No proper nonempty interval of the (ordered) ground set is a union of
    /// blocks. The empty partition is not connected.
    pub fn is_connected(&self) -> bool {
        let n = self.ground.len();
        if n == 0 {
            return false;
        }
        let labels = self.labels();
        let mut lo = vec![usize::MAX; self.blocks.len()];
        let mut hi = vec![0; self.blocks.len()];
        for (p, &l) in labels.iter().enumerate() {
            lo[l] = lo[l].min(p);
            hi[l] = hi[l].max(p);
        }
        for start in 0..n {
            let mut min_lo = usize::MAX;
            let mut max_hi = 0;
            for end in start..n {
                if start == 0 && end == n - 1 {
                    break;
                }
                min_lo = min_lo.min(lo[labels[end]]);
                max_hi = max_hi.max(hi[labels[end]]);
                if min_lo >= start && max_hi <= end {
                    return false;
                }
            }
        }
        true
    }

    /// `μ(π, 1̂) = (-1)^{#π-1} (#π-1)!` in the partition lattice.
    pub fn mobius_to_top(&self) -> BigInt {
        mobius_to_top(self.num_blocks())
    }
}

/// Möbius value `μ(π, 1̂)` for a partition with `num_blocks` blocks.
pub fn mobius_to_top(num_blocks: usize) -> BigInt {
    assert!(
        num_blocks > 0,
        "partition of an empty set has no top interval"
    );
    let f = factorial(num_blocks - 1);
    if num_blocks % 2 == 1 {
        f
    } else {
        -f
    }
}

/// Whether two disjoint sorted blocks form a crossing two-block partition.
/// Walking the merged order, the block labels alternate `A B A B` somewhere
/// exactly when the run-compressed label sequence has length at least 4.
pub fn blocks_cross(a: &[u32], b: &[u32]) -> bool {
    let (mut i, mut j) = (0, 0);
    let mut runs = 0;
    let mut last: Option<bool> = None;
    while i < a.len() || j < b.len() {
        let from_a = j == b.len() || (i < a.len() && a[i] < b[j]);
        if from_a {
            i += 1;
        } else {
            j += 1;
        }
        if last != Some(from_a) {
            runs += 1;
            if runs >= 4 {
                return true;
            }
            last = Some(from_a);
        }
    }
    false
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in &self.blocks {
            f.write_str("{")?;
            for (i, x) in b.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{x}")?;
            }
            f.write_str("}")?;
        }
        Ok(())
    }
}

impl Serialize for SetPartition {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.blocks.serialize(s)
    }
}

impl<'de> Deserialize<'de> for SetPartition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let blocks = Vec::<Vec<u32>>::deserialize(d)?;
        SetPartition::from_blocks(blocks).map_err(serde::de::Error::custom)
    }
}

/// A perfect matching: a set partition whose blocks ("arches") all have size 2.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matching(SetPartition);

impl Matching {
    pub fn new(part: SetPartition) -> Result<Self, CombinatError> {
        if part.blocks.iter().any(|b| b.len() != 2) {
            return Err(CombinatError::NotMatching);
        }
        Ok(Matching(part))
    }

    pub fn from_arches(arches: &[(u32, u32)]) -> Result<Self, CombinatError> {
        Self::new(SetPartition::from_blocks(
            arches.iter().map(|&(a, b)| vec![a, b]).collect(),
        )?)
    }

    /// Arches as `(i, j)` with `i < j`, ordered by `i`.
    pub(crate) fn from_sorted_arches_unchecked(ground: GroundSet, arches: &[(u32, u32)]) -> Self {
        Matching(SetPartition {
            ground,
            blocks: arches.iter().map(|&(a, b)| vec![a, b]).collect(),
        })
    }

    pub fn partition(&self) -> &SetPartition {
        &self.0
    }

    pub fn ground(&self) -> &GroundSet {
        self.0.ground()
    }

    pub fn num_arches(&self) -> usize {
        self.0.num_blocks()
    }

    pub fn arch(&self, i: usize) -> (u32, u32) {
        let b = &self.0.blocks[i];
        (b[0], b[1])
    }

    pub fn arches(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.0.blocks.iter().map(|b| (b[0], b[1]))
    }

    /// Index of the arch containing `x`.
    pub fn arch_of(&self, x: u32) -> Option<usize> {
        self.0.block_of(x)
    }

    pub fn is_connected(&self) -> bool {
        self.0.is_connected()
    }
}

impl fmt::Display for Matching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl Serialize for Matching {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Matching {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        Matching::new(SetPartition::deserialize(d)?).map_err(serde::de::Error::custom)
    }
}
