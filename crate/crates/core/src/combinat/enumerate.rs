//! Lazy enumeration of set partitions, noncrossing partitions and perfect
//! matchings. Every enumerator keeps O(n) state.

use super::{CombinatError, GroundSet, Matching, SetPartition};

/// Restricted growth strings of length `n`, in lexicographic order.
///
/// `labels[0] = 0` and `labels[i] <= 1 + max(labels[..i])`; each string is
/// the block-label sequence of exactly one set partition of an `n`-set.
#[derive(Clone, Debug)]
pub struct RestrictedGrowth {
    labels: Vec<u8>,
    // prefix_max[i] = max(labels[..=i])
    prefix_max: Vec<u8>,
    started: bool,
    done: bool,
}

impl RestrictedGrowth {
    pub fn new(n: usize) -> Self {
        assert!(n <= u8::MAX as usize, "ground set too large");
        RestrictedGrowth {
            labels: vec![0; n],
            prefix_max: vec![0; n],
            started: false,
            done: false,
        }
    }

    /// Moves to the next string; returns `false` once exhausted. The empty
    /// string (n = 0) is produced once.
    pub fn advance(&mut self) -> bool {
        if self.done {
            return false;
        }
        if !self.started {
            self.started = true;
            return true;
        }
        let n = self.labels.len();
        for i in (1..n).rev() {
            if self.labels[i] <= self.prefix_max[i - 1] {
                self.labels[i] += 1;
                self.prefix_max[i] = self.prefix_max[i - 1].max(self.labels[i]);
                for j in i + 1..n {
                    self.labels[j] = 0;
                    self.prefix_max[j] = self.prefix_max[i];
                }
                return true;
            }
        }
        self.done = true;
        false
    }

    pub fn labels(&self) -> &[u8] {
        &self.labels
    }

    pub fn num_blocks(&self) -> usize {
        self.prefix_max.last().map_or(0, |&m| m as usize + 1)
    }
}

/// Iterator over all set partitions of a ground set (Bell-many).
#[derive(Clone, Debug)]
pub struct SetPartitions {
    ground: GroundSet,
    rgs: RestrictedGrowth,
}

impl Iterator for SetPartitions {
    type Item = SetPartition;

    fn next(&mut self) -> Option<SetPartition> {
        self.rgs
            .advance()
            .then(|| SetPartition::from_labels(&self.ground, self.rgs.labels()))
    }
}

pub fn enumerate_set_partitions(ground: &GroundSet) -> SetPartitions {
    SetPartitions {
        ground: ground.clone(),
        rgs: RestrictedGrowth::new(ground.len()),
    }
}

/// Noncrossing partitions of an `n`-set as restricted growth strings.
///
/// Elements are placed left to right. Open blocks sit on a stack; an element
/// either opens a new block or joins an open block, which closes every block
/// opened above it for good. This yields each noncrossing partition once.
#[derive(Clone, Debug)]
pub struct NoncrossingGrowth {
    n: usize,
    labels: Vec<u8>,
    choice: Vec<usize>,
    // stacks[i] = open blocks before element i is placed
    stacks: Vec<Vec<u8>>,
    next_label: Vec<u8>,
    started: bool,
    done: bool,
}

impl NoncrossingGrowth {
    pub fn new(n: usize) -> Self {
        assert!(n <= u8::MAX as usize, "ground set too large");
        let mut g = NoncrossingGrowth {
            n,
            labels: vec![0; n],
            choice: vec![0; n],
            stacks: vec![Vec::new(); n],
            next_label: vec![0; n],
            started: false,
            done: false,
        };
        g.fill_from(0);
        g
    }

    /// Places elements `from..n` with their current choices, taking the stack
    /// state at `from` as given.
    fn fill_from(&mut self, from: usize) {
        for i in from..self.n {
            let mut stack = self.stacks[i].clone();
            let mut next = self.next_label[i];
            let c = self.choice[i];
            if c < stack.len() {
                self.labels[i] = stack[c];
                stack.truncate(c + 1);
            } else {
                self.labels[i] = next;
                stack.push(next);
                next += 1;
            }
            if i + 1 < self.n {
                self.stacks[i + 1] = stack;
                self.next_label[i + 1] = next;
            }
        }
    }

    pub fn advance(&mut self) -> bool {
        if self.done {
            return false;
        }
        if !self.started {
            self.started = true;
            return true;
        }
        for i in (0..self.n).rev() {
            if self.choice[i] < self.stacks[i].len() {
                self.choice[i] += 1;
                for c in &mut self.choice[i + 1..] {
                    *c = 0;
                }
                self.fill_from(i);
                return true;
            }
        }
        self.done = true;
        false
    }

    pub fn labels(&self) -> &[u8] {
        &self.labels
    }
}

/// Iterator over the noncrossing partitions of a ground set (Catalan-many).
#[derive(Clone, Debug)]
pub struct NoncrossingPartitions {
    ground: GroundSet,
    gen: NoncrossingGrowth,
}

impl Iterator for NoncrossingPartitions {
    type Item = SetPartition;

    fn next(&mut self) -> Option<SetPartition> {
        self.gen
            .advance()
            .then(|| SetPartition::from_labels(&self.ground, self.gen.labels()))
    }
}

pub fn enumerate_noncrossing_partitions(ground: &GroundSet) -> NoncrossingPartitions {
    NoncrossingPartitions {
        ground: ground.clone(),
        gen: NoncrossingGrowth::new(ground.len()),
    }
}

/// Perfect matchings of a ground set.
///
/// The smallest unmatched element is paired with each larger unmatched
/// element in turn; `choice[k]` indexes that partner among the free elements
/// at depth `k`, so the state is an odometer with radices `m-1, m-3, ..., 1`.
#[derive(Clone, Debug)]
pub struct Matchings {
    ground: GroundSet,
    choice: Vec<usize>,
    started: bool,
    done: bool,
}

impl Matchings {
    fn decode(&self) -> Matching {
        let mut free: Vec<u32> = self.ground.elems().to_vec();
        let mut arches = Vec::with_capacity(self.choice.len());
        for &c in &self.choice {
            let a = free.remove(0);
            let b = free.remove(c);
            arches.push((a, b));
        }
        Matching::from_sorted_arches_unchecked(self.ground.clone(), &arches)
    }
}

impl Iterator for Matchings {
    type Item = Matching;

    fn next(&mut self) -> Option<Matching> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(self.decode());
        }
        let m = self.ground.len();
        for k in (0..self.choice.len()).rev() {
            let radix = m - 2 * k - 1;
            if self.choice[k] + 1 < radix {
                self.choice[k] += 1;
                for c in &mut self.choice[k + 1..] {
                    *c = 0;
                }
                return Some(self.decode());
            }
        }
        self.done = true;
        None
    }
}

/// All perfect matchings of an even-sized ground set.
pub fn matchings_of(ground: &GroundSet) -> Result<Matchings, CombinatError> {
    if ground.len() % 2 == 1 {
        return Err(CombinatError::OddGroundSet(ground.len()));
    }
    Ok(Matchings {
        ground: ground.clone(),
        choice: vec![0; ground.len() / 2],
        started: false,
        done: false,
    })
}

/// All `(n2 - 1)!!` perfect matchings of `{1, ..., n2}`.
pub fn enumerate_matchings(n2: usize) -> Result<Matchings, CombinatError> {
    matchings_of(&GroundSet::range(n2))
}

/// Matchings of `{1, ..., n2}` in which 1 is paired with `partner`, built by
/// prefixing the arch `{1, partner}` to every matching of the rest. Splitting
/// by `partner` partitions `enumerate_matchings(n2)` into independent slices.
pub fn matchings_with_first_arch(
    n2: usize,
    partner: u32,
) -> Result<impl Iterator<Item = Matching>, CombinatError> {
    if n2 % 2 == 1 {
        return Err(CombinatError::OddGroundSet(n2));
    }
    let ground = GroundSet::range(n2);
    let rest = GroundSet::new(
        ground
            .elems()
            .iter()
            .copied()
            .filter(|&x| x != 1 && x != partner)
            .collect(),
    )?;
    Ok(matchings_of(&rest)?.map(move |m| {
        let mut arches = vec![(1, partner)];
        arches.extend(m.arches());
        arches.sort_unstable();
        Matching::from_sorted_arches_unchecked(ground.clone(), &arches)
    }))
}

/// Every partition `π >= σ`, obtained by partitioning the arches of `σ` and
/// merging each group of arches into one block.
pub fn partitions_above(sigma: &Matching) -> impl Iterator<Item = SetPartition> + '_ {
    partitions_above_blocks(sigma.partition())
}

/// Every partition coarser than `rho`.
pub fn partitions_above_blocks(rho: &SetPartition) -> impl Iterator<Item = SetPartition> + '_ {
    let mut rgs = RestrictedGrowth::new(rho.num_blocks());
    std::iter::from_fn(move || {
        if !rgs.advance() {
            return None;
        }
        let mut merged = vec![Vec::new(); rgs.num_blocks()];
        for (b, &l) in rho.blocks().iter().zip(rgs.labels()) {
            merged[l as usize].extend_from_slice(b);
        }
        Some(SetPartition::from_blocks(merged).expect("merging blocks keeps a partition"))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    /// Independent oracle: Bell numbers via the Bell triangle.
    fn bell(n: usize) -> u64 {
        let mut row = vec![1u64];
        for _ in 0..n {
            let mut next = vec![*row.last().unwrap()];
            for &x in &row {
                next.push(next.last().unwrap() + x);
            }
            row = next;
        }
        row[0]
    }

    /// Independent oracle: (m-1)!! by the recursion M(m) = (m-1) M(m-2).
    fn double_factorial_count(m: usize) -> u64 {
        if m == 0 {
            1
        } else {
            (m as u64 - 1) * double_factorial_count(m - 2)
        }
    }

    fn catalan(n: usize) -> u64 {
        (0..n).fold(1u64, |c, i| c * 2 * (2 * i as u64 + 1) / (i as u64 + 2))
    }

    #[test]
    fn bell_counts() {
        assert_eq!(enumerate_set_partitions(&GroundSet::range(0)).count(), 1);
        assert_eq!(enumerate_set_partitions(&GroundSet::range(1)).count(), 1);
        assert_eq!(enumerate_set_partitions(&GroundSet::range(3)).count(), 5);
        assert_eq!(enumerate_set_partitions(&GroundSet::range(4)).count(), 15);
        for n in 0..=8 {
            let all: HashSet<_> = enumerate_set_partitions(&GroundSet::range(n)).collect();
            assert_eq!(all.len() as u64, bell(n), "n = {n}");
        }
    }

    #[test]
    fn matching_counts() {
        let two: Vec<_> = enumerate_matchings(2).unwrap().collect();
        assert_eq!(two.len(), 1);
        assert_eq!(two[0].to_string(), "{1,2}");
        assert_eq!(enumerate_matchings(0).unwrap().count(), 1);
        assert_eq!(enumerate_matchings(4).unwrap().count(), 3);
        assert_eq!(enumerate_matchings(6).unwrap().count(), 15);
        for m in (0..=12).step_by(2) {
            let all: HashSet<_> = enumerate_matchings(m).unwrap().collect();
            assert_eq!(all.len() as u64, double_factorial_count(m));
            assert!(all.iter().all(|s| s.num_arches() == m / 2));
        }
        assert_eq!(
            enumerate_matchings(5).err(),
            Some(CombinatError::OddGroundSet(5))
        );
    }

    #[test]
    fn first_arch_slices_cover_everything() {
        for m in [2usize, 4, 6, 8] {
            let mut sliced = HashSet::new();
            for partner in 2..=m as u32 {
                sliced.extend(matchings_with_first_arch(m, partner).unwrap());
            }
            let all: HashSet<_> = enumerate_matchings(m).unwrap().collect();
            assert_eq!(sliced, all);
        }
    }

    #[test]
    fn noncrossing_matches_filter() {
        for n in 0..=9 {
            let g = GroundSet::range(n);
            let direct: HashSet<_> = enumerate_noncrossing_partitions(&g).collect();
            let filtered: HashSet<_> = enumerate_set_partitions(&g)
                .filter(SetPartition::is_noncrossing)
                .collect();
            assert_eq!(direct, filtered, "n = {n}");
            assert_eq!(direct.len() as u64, catalan(n));
        }
    }

    #[test]
    fn partitions_above_counts() {
        let one = Matching::from_arches(&[(1, 2)]).unwrap();
        assert_eq!(partitions_above(&one).count(), 1);
        let two = Matching::from_arches(&[(1, 3), (2, 4)]).unwrap();
        assert_eq!(partitions_above(&two).count(), 2);
        let three = Matching::from_arches(&[(1, 2), (3, 5), (4, 6)]).unwrap();
        let above: Vec<_> = partitions_above(&three).collect();
        assert_eq!(above.len(), 5);
        assert!(above.iter().all(|p| three.partition().refines(p)));
    }
}
