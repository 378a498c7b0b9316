//! The `q = 2` specialization. An augmented matching is a matching together
//! with an orientation of its crossing graph; it is primitive when the
//! matching is connected and every arch is reachable from the arch holding
//! the smallest point. Every augmented matching splits uniquely into
//! primitive pieces on the blocks of a set partition.

use std::collections::HashMap;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{block_size_tally, cumulants_log, moments_cf};
use crate::combinat::{crossings, enumerate_matchings, Matching};
use crate::graphs::{
    crossing_graph, enumerate_orientations, reachable_from, GraphError, Orientation, TutteEngine,
    TutteEvaluator,
};
use crate::report::CheckRow;
use crate::{Error, Result};

/// A matching with an orientation of its crossing graph. Directions follow
/// the edge order of [`crossings`]: for the crossing `(a, b)`, `false` means
/// arch `a` points to arch `b`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawAugmented", into = "RawAugmented")]
pub struct AugmentedMatching {
    sigma: Matching,
    orient: Orientation,
}

#[derive(Serialize, Deserialize)]
struct RawAugmented {
    sigma: Matching,
    orient: Orientation,
}

impl TryFrom<RawAugmented> for AugmentedMatching {
    type Error = GraphError;
    fn try_from(raw: RawAugmented) -> Result<Self, GraphError> {
        AugmentedMatching::new(raw.sigma, raw.orient)
    }
}

impl From<AugmentedMatching> for RawAugmented {
    fn from(am: AugmentedMatching) -> Self {
        RawAugmented {
            sigma: am.sigma,
            orient: am.orient,
        }
    }
}

impl AugmentedMatching {
    pub fn new(sigma: Matching, orient: Orientation) -> Result<Self, GraphError> {
        let expected = crossings(&sigma).len();
        if orient.len() != expected {
            return Err(GraphError::OrientationLength {
                expected,
                got: orient.len(),
            });
        }
        Ok(AugmentedMatching { sigma, orient })
    }

    pub fn sigma(&self) -> &Matching {
        &self.sigma
    }

    pub fn orient(&self) -> &Orientation {
        &self.orient
    }

    /// Arch indices reachable from arch 0 along oriented crossings.
    fn reachable_from_root(&self) -> Vec<usize> {
        if self.sigma.num_arches() == 0 {
            return Vec::new();
        }
        reachable_from(&crossing_graph(&self.sigma).graph, &self.orient, 0)
            .expect("orientation length checked on construction")
    }

    pub fn is_primitive(&self) -> bool {
        self.sigma.is_connected() && self.reachable_from_root().len() == self.sigma.num_arches()
    }

    /// The sub-matching on the given arches (sorted indices) with the
    /// induced orientation.
    fn restrict(&self, keep: &[usize]) -> AugmentedMatching {
        let mut inside = vec![false; self.sigma.num_arches()];
        for &a in keep {
            inside[a] = true;
        }
        let arches: Vec<(u32, u32)> = keep.iter().map(|&a| self.sigma.arch(a)).collect();
        let sigma = Matching::from_arches(&arches).expect("subset of a matching");
        // crossings among kept arches keep their relative lexicographic order
        let dirs = crossings(&self.sigma)
            .into_iter()
            .zip(self.orient.dirs())
            .filter(|&((a, b), _)| inside[a] && inside[b])
            .map(|(_, &d)| d)
            .collect();
        AugmentedMatching::new(sigma, Orientation::new(dirs)).expect("induced orientation")
    }
}

/// Splits `am` into primitive pieces: the arches reachable from the root form
/// the first piece, and the rest is decomposed recursively. Pieces come out
/// in increasing order of their smallest point.
pub fn decompose_augmented(am: &AugmentedMatching) -> Vec<AugmentedMatching> {
    let mut pieces = Vec::new();
    let mut rest = am.clone();
    while rest.sigma.num_arches() > 0 {
        let reach = rest.reachable_from_root();
        let mut inside = vec![false; rest.sigma.num_arches()];
        for &a in &reach {
            inside[a] = true;
        }
        let outside: Vec<usize> = (0..inside.len()).filter(|&a| !inside[a]).collect();
        pieces.push(rest.restrict(&reach));
        rest = rest.restrict(&outside);
    }
    pieces
}

/// Inverse of [`decompose_augmented`]. Pieces are taken in order of their
/// smallest point; a crossing between two pieces points from the later piece
/// to the earlier one.
pub fn recompose_augmented(pieces: &[AugmentedMatching]) -> Result<AugmentedMatching> {
    let mut points: Vec<u32> = pieces
        .iter()
        .flat_map(|p| p.sigma.ground().elems().iter().copied())
        .collect();
    points.sort_unstable();
    if points.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::OverlappingGroundSets);
    }
    if let Some(i) = pieces.iter().position(|p| !p.is_primitive()) {
        return Err(Error::NotPrimitive(i));
    }
    let mut order: Vec<usize> = (0..pieces.len()).collect();
    order.sort_by_key(|&i| pieces[i].sigma.ground().min());
    let mut rank = vec![0; pieces.len()];
    for (r, &i) in order.iter().enumerate() {
        rank[i] = r;
    }

    // piece rank of each arch, and directions of crossings inside pieces
    let mut arch_rank: HashMap<(u32, u32), usize> = HashMap::new();
    let mut inner: HashMap<[(u32, u32); 2], bool> = HashMap::new();
    let mut arches = Vec::new();
    for (i, p) in pieces.iter().enumerate() {
        for arch in p.sigma.arches() {
            arch_rank.insert(arch, rank[i]);
            arches.push(arch);
        }
        for (&(a, b), &d) in crossings(&p.sigma).iter().zip(p.orient.dirs()) {
            inner.insert([p.sigma.arch(a), p.sigma.arch(b)], d);
        }
    }
    arches.sort_unstable();
    let sigma = Matching::from_arches(&arches)?;
    let dirs = crossings(&sigma)
        .into_iter()
        .map(|(a, b)| {
            let (x, y) = (sigma.arch(a), sigma.arch(b));
            match inner.get(&[x, y]) {
                Some(&d) => d,
                // false points x -> y: only when x sits in the later piece
                None => arch_rank[&x] < arch_rank[&y],
            }
        })
        .collect();
    Ok(AugmentedMatching::new(sigma, Orientation::new(dirs))?)
}

/// Per-matching tallies for the `q = 2` checks.
#[derive(Default)]
struct Q2Tally {
    augmented: u64,
    primitive: u64,
    round_trips: u64,
    tutte_at_2: BigInt,
}

fn tally_matching(sigma: &Matching, tutte: &dyn TutteEvaluator) -> Result<Q2Tally> {
    let g = crossing_graph(sigma).graph;
    let mut t = Q2Tally::default();
    if sigma.is_connected() {
        t.tutte_at_2 = tutte.tutte_1q(&g)?.eval_int(2);
    }
    for o in enumerate_orientations(&g)? {
        let am = AugmentedMatching::new(sigma.clone(), o)?;
        t.augmented += 1;
        if am.is_primitive() {
            t.primitive += 1;
        }
        let pieces = decompose_augmented(&am);
        if recompose_augmented(&pieces).as_ref() == Ok(&am) {
            t.round_trips += 1;
        }
    }
    Ok(t)
}

/// Checks the `q = 2` identities for `2n` points, `n = 1..=n_max`:
/// primitive augmented matchings are counted by `k_{2n}(2)` and by
/// `Σ T(1, 2)`, all augmented matchings by `m_{2n}(2)`, and decomposition
/// is a bijection onto partitions with a primitive piece on each block.
pub fn verify_q2(n_max: usize) -> Result<Vec<CheckRow>> {
    verify_q2_with(n_max, &TutteEngine::new())
}

pub fn verify_q2_with(n_max: usize, tutte: &dyn TutteEvaluator) -> Result<Vec<CheckRow>> {
    if n_max < 1 {
        return Err(Error::OrderTooSmall { min: 1, got: n_max });
    }
    let order = 2 * n_max;
    let m = moments_cf(order);
    let k = cumulants_log(order)?;
    // primitive[s] = brute-force count of primitive augmented matchings on s points
    let mut primitive = vec![0u64; order + 1];
    let mut rows = Vec::new();
    for n in 1..=n_max {
        let n2 = 2 * n;
        let matchings: Vec<Matching> = enumerate_matchings(n2)?.collect();
        let parts: Vec<Q2Tally> = matchings
            .par_iter()
            .map(|s| tally_matching(s, tutte))
            .collect::<Result<_>>()?;
        let mut total = Q2Tally::default();
        for p in parts {
            total.augmented += p.augmented;
            total.primitive += p.primitive;
            total.round_trips += p.round_trips;
            total.tutte_at_2 += p.tutte_at_2;
        }
        primitive[n2] = total.primitive;
        let prim = BigInt::from(total.primitive);
        let aug = BigInt::from(total.augmented);
        rows.push(CheckRow::compare(
            "q2-primitive-vs-k",
            n2,
            &prim,
            &k.k(n2).eval_int(2),
        ));
        rows.push(CheckRow::compare(
            "q2-primitive-vs-tutte",
            n2,
            &prim,
            &total.tutte_at_2,
        ));
        rows.push(CheckRow::compare(
            "q2-augmented-vs-m",
            n2,
            &aug,
            &m.get(n2).eval_int(2),
        ));
        rows.push(CheckRow::compare(
            "q2-bijection",
            n2,
            &total.round_trips,
            &total.augmented,
        ));
        let by_partitions: BigInt = block_size_tally(n2, false)
            .into_iter()
            .map(|(sizes, count)| {
                sizes
                    .iter()
                    .map(|&s| BigInt::from(primitive[s]))
                    .product::<BigInt>()
                    * BigInt::from(count)
            })
            .sum();
        rows.push(CheckRow::compare(
            "q2-exponential-formula",
            n2,
            &by_partitions,
            &aug,
        ));
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn six_arch_example() -> AugmentedMatching {
        let sigma =
            Matching::from_arches(&[(1, 6), (2, 8), (3, 5), (4, 11), (7, 9), (10, 12)]).unwrap();
        // {1,6}->{2,8}, {4,11}->{1,6}, {4,11}->{2,8}, {7,9}->{2,8}, {3,5}->{4,11}, {4,11}->{10,12}
        let dirs = vec![false, true, true, true, false, false];
        AugmentedMatching::new(sigma, Orientation::new(dirs)).unwrap()
    }

    fn grounds(pieces: &[AugmentedMatching]) -> Vec<Vec<u32>> {
        pieces
            .iter()
            .map(|p| p.sigma().ground().elems().to_vec())
            .collect()
    }

    #[test]
    fn six_arch_decomposition() {
        let am = six_arch_example();
        assert!(!am.is_primitive());
        let pieces = decompose_augmented(&am);
        assert_eq!(
            grounds(&pieces),
            vec![vec![1, 2, 6, 8], vec![3, 4, 5, 10, 11, 12], vec![7, 9]]
        );
        assert!(pieces.iter().all(AugmentedMatching::is_primitive));
        assert_eq!(recompose_augmented(&pieces).unwrap(), am);
        // order of the input list does not matter
        let shuffled = vec![pieces[2].clone(), pieces[0].clone(), pieces[1].clone()];
        assert_eq!(recompose_augmented(&shuffled).unwrap(), am);
    }

    #[test]
    fn primitive_and_noncrossing_cases() {
        let sigma = Matching::from_arches(&[(1, 3), (2, 4)]).unwrap();
        let am = AugmentedMatching::new(sigma, Orientation::new(vec![false])).unwrap();
        assert!(am.is_primitive());
        assert_eq!(decompose_augmented(&am), vec![am.clone()]);
        assert_eq!(recompose_augmented(std::slice::from_ref(&am)).unwrap(), am);

        let nested = Matching::from_arches(&[(1, 6), (2, 3), (4, 5)]).unwrap();
        let am = AugmentedMatching::new(nested, Orientation::new(vec![])).unwrap();
        assert_eq!(
            grounds(&decompose_augmented(&am)),
            vec![vec![1, 6], vec![2, 3], vec![4, 5]]
        );
    }

    #[test]
    fn recompose_errors() {
        let a = AugmentedMatching::new(
            Matching::from_arches(&[(1, 2)]).unwrap(),
            Orientation::new(vec![]),
        )
        .unwrap();
        let b = AugmentedMatching::new(
            Matching::from_arches(&[(2, 3)]).unwrap(),
            Orientation::new(vec![]),
        )
        .unwrap();
        assert_eq!(
            recompose_augmented(&[a.clone(), b]),
            Err(Error::OverlappingGroundSets)
        );
        let reversed = AugmentedMatching::new(
            Matching::from_arches(&[(1, 3), (2, 4)]).unwrap(),
            Orientation::new(vec![true]),
        )
        .unwrap();
        assert_eq!(
            recompose_augmented(&[reversed]),
            Err(Error::NotPrimitive(0))
        );
    }

    #[test]
    fn orientation_length_checked() {
        let sigma = Matching::from_arches(&[(1, 3), (2, 4)]).unwrap();
        assert_eq!(
            AugmentedMatching::new(sigma, Orientation::new(vec![])),
            Err(GraphError::OrientationLength {
                expected: 1,
                got: 0
            })
        );
    }

    #[test]
    fn json_round_trip() {
        let am = six_arch_example();
        let json = serde_json::to_string(&am).unwrap();
        assert_eq!(
            json,
            r#"{"sigma":[[1,6],[2,8],[3,5],[4,11],[7,9],[10,12]],"orient":{"dirs":[0,1,1,1,0,0]}}"#
        );
        assert_eq!(
            serde_json::from_str::<AugmentedMatching>(&json).unwrap(),
            am
        );
        assert!(serde_json::from_str::<AugmentedMatching>(
            r#"{"sigma":[[1,3],[2,4]],"orient":{"dirs":[]}}"#
        )
        .is_err());
    }

    #[test]
    fn q2_identities() {
        let rows = verify_q2(4).unwrap();
        assert_eq!(rows.len(), 20);
        for r in &rows {
            assert!(r.passed(), "{r}");
        }
        let six = rows
            .iter()
            .find(|r| r.check == "q2-primitive-vs-k" && r.n == 6)
            .unwrap();
        assert_eq!(six.lhs, "7");
        let four = rows
            .iter()
            .find(|r| r.check == "q2-augmented-vs-m" && r.n == 4)
            .unwrap();
        assert_eq!(four.lhs, "4");
    }
}
