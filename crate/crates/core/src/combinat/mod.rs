//! Set partitions, perfect matchings and their crossings; the Möbius function
//! of the partition lattice toward its top element.

mod enumerate;
mod partition;

pub use enumerate::{
    enumerate_matchings, enumerate_noncrossing_partitions, enumerate_set_partitions, matchings_of,
    matchings_with_first_arch, partitions_above, partitions_above_blocks, Matchings,
    NoncrossingGrowth, NoncrossingPartitions, RestrictedGrowth, SetPartitions,
};
pub use partition::{blocks_cross, mobius_to_top, GroundSet, Matching, SetPartition};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CombinatError {
    #[error("perfect matchings need an even ground set, got {0} points")]
    OddGroundSet(usize),
    #[error("ground set elements must be positive")]
    NonPositiveElement,
    #[error("ground set must be strictly increasing")]
    NotIncreasing,
    #[error("blocks must be nonempty")]
    EmptyBlock,
    #[error("element {0} appears in two blocks")]
    Overlap(u32),
    #[error("every block of a matching must have exactly two elements")]
    NotMatching,
    #[error("the first partition does not refine the second")]
    NotRefinement,
}

/// All crossings of `sigma`: pairs of arch indices `(a, b)`, `a < b`, whose
/// arches `{i,j}`, `{k,l}` satisfy `i < k < j < l`. Listed in lexicographic
/// order of `(a, b)`; this order is the canonical edge order of the crossing
/// graph.
pub fn crossings(sigma: &Matching) -> Vec<(usize, usize)> {
    let arches: Vec<(u32, u32)> = sigma.arches().collect();
    let mut out = Vec::new();
    for (a, &(_, j)) in arches.iter().enumerate() {
        // arches are sorted by left endpoint, so later arches start after this one
        for (b, &(k, l)) in arches.iter().enumerate().skip(a + 1) {
            if k < j && j < l {
                out.push((a, b));
            }
        }
    }
    out
}

/// Number of crossings of `sigma`.
pub fn cro(sigma: &Matching) -> usize {
    crossings(sigma).len()
}

/// Crossings of `sigma` whose four endpoints lie in a single block of `pi`.
pub fn cro_within(sigma: &Matching, pi: &SetPartition) -> Result<usize, CombinatError> {
    if !sigma.partition().refines(pi) {
        return Err(CombinatError::NotRefinement);
    }
    let block: Vec<usize> = sigma
        .arches()
        .map(|(i, _)| pi.block_of(i).expect("refinement checked"))
        .collect();
    Ok(crossings(sigma)
        .into_iter()
        .filter(|&(a, b)| block[a] == block[b])
        .count())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn six_arch_matching() -> Matching {
        Matching::from_arches(&[(1, 6), (2, 8), (3, 5), (4, 11), (7, 9), (10, 12)]).unwrap()
    }

    #[test]
    fn crossing_examples() {
        assert!(crossings(&Matching::from_arches(&[(1, 2), (3, 4)]).unwrap()).is_empty());
        assert_eq!(
            crossings(&Matching::from_arches(&[(1, 3), (2, 4)]).unwrap()),
            vec![(0, 1)]
        );
        let sigma = six_arch_matching();
        assert_eq!(cro(&sigma), 6);
        // {1,6}-{2,8}, {1,6}-{4,11}, {2,8}-{4,11}, {2,8}-{7,9}, {3,5}-{4,11}, {4,11}-{10,12}
        assert_eq!(
            crossings(&sigma),
            vec![(0, 1), (0, 3), (1, 3), (1, 4), (2, 3), (3, 5)]
        );
    }

    #[test]
    fn crossing_count_matches_four_point_brute_force() {
        for sigma in enumerate_matchings(8).unwrap() {
            let arches: Vec<_> = sigma.arches().collect();
            let mut brute = 0;
            for &(i, j) in &arches {
                for &(k, l) in &arches {
                    if i < k && k < j && j < l {
                        brute += 1;
                    }
                }
            }
            assert_eq!(cro(&sigma), brute);
        }
    }

    #[test]
    fn cro_within_examples() {
        let sigma = Matching::from_arches(&[(1, 3), (2, 4)]).unwrap();
        let top = SetPartition::top(sigma.ground());
        assert_eq!(cro_within(&sigma, &top).unwrap(), 1);
        assert_eq!(cro_within(&sigma, sigma.partition()).unwrap(), 0);
        let six = six_arch_matching();
        assert_eq!(
            cro_within(&six, &SetPartition::top(six.ground())).unwrap(),
            6
        );
        assert_eq!(cro_within(&six, six.partition()).unwrap(), 0);
        let bad = SetPartition::from_blocks(vec![vec![1, 2], vec![3, 4]]).unwrap();
        assert_eq!(cro_within(&sigma, &bad), Err(CombinatError::NotRefinement));
    }

    #[test]
    fn mobius_sums_to_delta() {
        for n in 1..=6 {
            let total: num_bigint::BigInt = enumerate_set_partitions(&GroundSet::range(n))
                .map(|p| p.mobius_to_top())
                .sum();
            assert_eq!(total, num_bigint::BigInt::from((n == 1) as i32), "n = {n}");
        }
    }
}
