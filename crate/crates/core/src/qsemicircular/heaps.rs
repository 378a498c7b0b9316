//! The `q = 0` specialization: `k̃_{2n}(0)` counts connected matchings
//! together with an acyclic orientation of the crossing graph whose unique
//! source is the arch containing 1.

use rayon::prelude::*;

use crate::combinat::{matchings_with_first_arch, Matching};
use crate::graphs::{
    count_single_source_acyclic, count_uniquesource_acyclic, crossing_graph, RootedMultigraph,
};
use crate::{Error, Result};

/// `Σ f(σ)` over connected matchings of `{1..n2}`, in parallel over the
/// partner of 1.
fn par_count_connected<F>(n2: usize, f: F) -> Result<u64>
where
    F: Fn(&Matching) -> Result<u64> + Sync,
{
    if n2 == 0 {
        return Ok(0);
    }
    let parts: Vec<Result<u64>> = (2..=n2 as u32)
        .into_par_iter()
        .map(|partner| {
            let mut total = 0;
            for s in matchings_with_first_arch(n2, partner)? {
                if s.is_connected() {
                    total += f(&s)?;
                }
            }
            Ok(total)
        })
        .collect();
    parts.into_iter().sum()
}

/// `k̃_{2n}(0)` for `n = 1..=n_max`, counted as unique-source acyclic
/// orientations rooted at the arch containing 1.
pub fn lassalle_sequence(n_max: usize) -> Result<Vec<u64>> {
    if n_max < 1 {
        return Err(Error::OrderTooSmall { min: 1, got: n_max });
    }
    (1..=n_max)
        .map(|n| {
            par_count_connected(2 * n, |s| {
                let g = RootedMultigraph::new(crossing_graph(s).graph, 0)?;
                Ok(count_uniquesource_acyclic(&g)?)
            })
        })
        .collect()
}

/// Pairs `(σ, o)` with `σ` a connected matching of `{1..2n}` and `o` an
/// acyclic orientation of its crossing graph with exactly one source.
pub fn pyramid_count(n: usize) -> Result<u64> {
    if n < 1 {
        return Err(Error::OrderTooSmall { min: 1, got: n });
    }
    par_count_connected(2 * n, |s| {
        Ok(count_single_source_acyclic(&crossing_graph(s).graph)?)
    })
}

#[cfg(test)]
fn connected_matchings(n2: usize) -> impl Iterator<Item = Matching> {
    crate::combinat::enumerate_matchings(n2)
        .expect("even ground set")
        .filter(Matching::is_connected)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::tutte_1q;
    use crate::qsemicircular::cumulants_log;
    use num_bigint::BigInt;

    #[test]
    fn first_terms() {
        assert_eq!(lassalle_sequence(4).unwrap(), vec![1, 1, 5, 56]);
    }

    #[test]
    fn six_point_breakdown() {
        let mut per: Vec<u64> = connected_matchings(6)
            .map(|s| {
                let g = RootedMultigraph::new(crossing_graph(&s).graph, 0).unwrap();
                count_uniquesource_acyclic(&g).unwrap()
            })
            .collect();
        per.sort_unstable();
        // three path graphs and one triangle
        assert_eq!(per, vec![1, 1, 1, 2]);
        for s in connected_matchings(6) {
            let g = crossing_graph(&s).graph;
            let root = RootedMultigraph::new(g.clone(), 0).unwrap();
            assert_eq!(
                BigInt::from(count_uniquesource_acyclic(&root).unwrap()),
                tutte_1q(&g).unwrap().eval_int(0)
            );
        }
    }

    #[test]
    fn agrees_with_polynomials_and_increases() {
        let seq = lassalle_sequence(5).unwrap();
        let t = cumulants_log(10).unwrap();
        for (i, &x) in seq.iter().enumerate() {
            assert_eq!(BigInt::from(x), t.k_tilde(2 * (i + 1)).eval_int(0));
        }
        assert_eq!(seq[4], 1092);
        assert!(seq.windows(2).all(|w| w[0] <= w[1]));
    }

    #[test]
    fn pyramids() {
        assert_eq!(pyramid_count(1).unwrap(), 1);
        assert_eq!(pyramid_count(3).unwrap(), 15);
        assert_eq!(pyramid_count(4).unwrap(), 224);
    }
}
