//! The q-semicircular law: moments, classical and free cumulants, and the
//! identities linking them to Tutte polynomials of crossing graphs, including
//! the specializations at `q = 0` (acyclic orientations) and `q = 2`
//! (augmented matchings).

mod augmented;
mod cumulants;
mod heaps;
mod moments;

pub use augmented::{
    decompose_augmented, recompose_augmented, verify_q2, verify_q2_with, AugmentedMatching,
};
pub use cumulants::{
    cumulants_log, cumulants_mobius, cumulants_tutte, cumulants_tutte_with,
    free_cumulants_connected, free_cumulants_recursion, w_of_matching, CumulantTable,
};
pub use heaps::{lassalle_sequence, pyramid_count};
pub use moments::{moments_cf, moments_matchings, MomentTable};

pub(crate) use cumulants::log_of_moments;
pub(crate) use moments::par_sum_matchings;

use std::collections::BTreeMap;

use crate::combinat::{NoncrossingGrowth, RestrictedGrowth};

/// Partitions of an `n`-set tallied by their sorted block sizes, restricted to
/// noncrossing ones when `noncrossing` is set.
pub(crate) fn block_size_tally(n: usize, noncrossing: bool) -> BTreeMap<Vec<usize>, u64> {
    let mut tally = BTreeMap::new();
    let mut record = |labels: &[u8]| {
        let k = labels.iter().map(|&l| l as usize + 1).max().unwrap_or(0);
        let mut sizes = vec![0usize; k];
        for &l in labels {
            sizes[l as usize] += 1;
        }
        sizes.sort_unstable();
        *tally.entry(sizes).or_insert(0u64) += 1;
    };
    if noncrossing {
        let mut gen = NoncrossingGrowth::new(n);
        while gen.advance() {
            record(gen.labels());
        }
    } else {
        let mut rgs = RestrictedGrowth::new(n);
        while rgs.advance() {
            record(rgs.labels());
        }
    }
    tally
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tallies_count_bell_and_catalan() {
        let bell: u64 = block_size_tally(6, false).values().sum();
        let catalan: u64 = block_size_tally(6, true).values().sum();
        assert_eq!(bell, 203);
        assert_eq!(catalan, 132);
        // {1,2,3,4}: three ways to split into two pairs, two of them noncrossing
        assert_eq!(block_size_tally(4, false)[&vec![2, 2]], 3);
        assert_eq!(block_size_tally(4, true)[&vec![2, 2]], 2);
    }
}
