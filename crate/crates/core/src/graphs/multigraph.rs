use std::collections::HashMap;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::GraphError;
use crate::combinat::{
    blocks_cross, crossings, mobius_to_top, Matching, RestrictedGrowth, SetPartition,
};
use crate::exactpoly::{IntPoly, PolyError};

/// Undirected multigraph on vertices `0..n`. Edge slots are distinct even
/// when they join the same pair; `(u, u)` is a loop.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawGraph", into = "RawGraph")]
pub struct Multigraph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

#[derive(Serialize, Deserialize)]
struct RawGraph {
    n: usize,
    edges: Vec<[usize; 2]>,
}

impl TryFrom<RawGraph> for Multigraph {
    type Error = GraphError;
    fn try_from(raw: RawGraph) -> Result<Self, GraphError> {
        Multigraph::new(raw.n, raw.edges.into_iter().map(|[u, v]| (u, v)).collect())
    }
}

impl From<Multigraph> for RawGraph {
    fn from(g: Multigraph) -> Self {
        RawGraph {
            n: g.n,
            edges: g.edges.into_iter().map(|(u, v)| [u, v]).collect(),
        }
    }
}

impl Multigraph {
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<Self, GraphError> {
        if let Some(&(u, v)) = edges.iter().find(|&&(u, v)| u >= n || v >= n) {
            return Err(GraphError::VertexOutOfRange { u, v, n });
        }
        Ok(Multigraph { n, edges })
    }

    pub fn edgeless(n: usize) -> Self {
        Multigraph {
            n,
            edges: Vec::new(),
        }
    }

    /// Complete simple graph `K_n`.
    pub fn complete(n: usize) -> Self {
        let edges = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        Multigraph { n, edges }
    }

    pub fn n_vertices(&self) -> usize {
        self.n
    }

    pub fn n_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Same graph with the edge slots listed in reverse.
    pub fn reversed_edges(&self) -> Self {
        let mut edges = self.edges.clone();
        edges.reverse();
        Multigraph { n: self.n, edges }
    }

    /// Connected-component label per vertex, numbered in order of the
    /// smallest vertex of each component.
    pub fn components(&self) -> Vec<usize> {
        let mut uf = UnionFind::new(self.n);
        for &(u, v) in &self.edges {
            uf.union(u, v);
        }
        let mut label = HashMap::new();
        (0..self.n)
            .map(|v| {
                let r = uf.find(v);
                let next = label.len();
                *label.entry(r).or_insert(next)
            })
            .collect()
    }

    /// Connected in the usual sense; the graph with no vertices is not.
    pub fn is_connected(&self) -> bool {
        self.n > 0 && self.components().iter().all(|&c| c == 0)
    }

    /// The subgraph induced on `vertices` (relabeled `0..k` in the given order).
    pub fn induced(&self, vertices: &[usize]) -> Multigraph {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| index[u] != usize::MAX && index[v] != usize::MAX)
            .map(|&(u, v)| (index[u], index[v]))
            .collect();
        Multigraph {
            n: vertices.len(),
            edges,
        }
    }

    /// Number of edge slots inside blocks of the vertex partition given by
    /// `labels`; loops always count.
    pub fn internal_edges(&self, labels: &[u8]) -> usize {
        self.edges
            .iter()
            .filter(|&&(u, v)| labels[u] == labels[v])
            .count()
    }
}

/// Checks `is_connected` as a free function.
pub fn is_connected_graph(g: &Multigraph) -> bool {
    g.is_connected()
}

/// A multigraph with a distinguished root vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootedMultigraph {
    graph: Multigraph,
    root: usize,
}

impl RootedMultigraph {
    pub fn new(graph: Multigraph, root: usize) -> Result<Self, GraphError> {
        if root >= graph.n {
            return Err(GraphError::RootOutOfRange { root, n: graph.n });
        }
        Ok(RootedMultigraph { graph, root })
    }

    pub fn graph(&self) -> &Multigraph {
        &self.graph
    }

    pub fn root(&self) -> usize {
        self.root
    }
}

/// Crossing graph of a matching: one vertex per arch (in arch order), one
/// edge per crossing (in the order of [`crossings`]).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossingGraph {
    pub graph: Multigraph,
    pub arches: Vec<(u32, u32)>,
}

impl CrossingGraph {
    /// Vertex label in the form `[i,j]`.
    pub fn label(&self, v: usize) -> String {
        let (i, j) = self.arches[v];
        format!("[{i},{j}]")
    }
}

pub fn crossing_graph(sigma: &Matching) -> CrossingGraph {
    CrossingGraph {
        graph: Multigraph {
            n: sigma.num_arches(),
            edges: crossings(sigma),
        },
        arches: sigma.arches().collect(),
    }
}

/// Crossing graph of a set partition: one vertex per block, an edge between
/// two blocks iff together they form a crossing partition.
pub fn crossing_graph_partition(rho: &SetPartition) -> Multigraph {
    let blocks = rho.blocks();
    let mut edges = Vec::new();
    for a in 0..blocks.len() {
        for b in a + 1..blocks.len() {
            if blocks_cross(&blocks[a], &blocks[b]) {
                edges.push((a, b));
            }
        }
    }
    Multigraph {
        n: blocks.len(),
        edges,
    }
}

/// `Σ_{π ∈ P(V)} q^{i(E,π)} μ(π, 1̂)` where `i(E,π)` counts edge slots with
/// both endpoints in one block of `π` (loops always count).
pub fn partition_sum_u(g: &Multigraph) -> Result<IntPoly, GraphError> {
    if g.n == 0 {
        return Err(GraphError::NoVertices);
    }
    // tally[(internal edges, blocks)] = number of partitions
    let mut tally: HashMap<(usize, usize), u64> = HashMap::new();
    let mut rgs = RestrictedGrowth::new(g.n);
    while rgs.advance() {
        *tally
            .entry((g.internal_edges(rgs.labels()), rgs.num_blocks()))
            .or_default() += 1;
    }
    let mut coeffs = vec![BigInt::from(0); g.n_edges() + 1];
    for ((i, k), count) in tally {
        coeffs[i] += mobius_to_top(k) * BigInt::from(count);
    }
    Ok(IntPoly::from_coeffs(coeffs))
}

/// `partition_sum_u(g) / (q - 1)^{n-1}`; `T_g(1, q)` when `g` is connected and
/// zero otherwise. A failing division means the identity is broken.
pub fn normalized_partition_sum(g: &Multigraph) -> Result<IntPoly, GraphError> {
    let w = partition_sum_u(g)?;
    let qm1 = IntPoly::from_i64s(&[-1, 1]).pow(g.n as u32 - 1);
    w.divide_exact(&qm1).map_err(|e: PolyError| e.into())
}

/// Number of spanning trees, by enumerating `(n-1)`-subsets of the non-loop
/// edge slots and keeping the acyclic ones.
pub fn spanning_tree_count(g: &Multigraph) -> u64 {
    if g.n == 0 {
        return 0;
    }
    let edges: Vec<(usize, usize)> = g.edges.iter().copied().filter(|&(u, v)| u != v).collect();
    let need = g.n - 1;
    let mut count = 0;
    let mut chosen = Vec::with_capacity(need);
    fn rec(
        edges: &[(usize, usize)],
        start: usize,
        need: usize,
        n: usize,
        chosen: &mut Vec<(usize, usize)>,
        count: &mut u64,
    ) {
        if chosen.len() == need {
            let mut uf = UnionFind::new(n);
            if chosen.iter().all(|&(u, v)| uf.union(u, v)) {
                *count += 1;
            }
            return;
        }
        let remaining = need - chosen.len();
        for i in start..edges.len() {
            if edges.len() - i < remaining {
                break;
            }
            chosen.push(edges[i]);
            rec(edges, i + 1, need, n, chosen, count);
            chosen.pop();
        }
    }
    rec(&edges, 0, need, g.n, &mut chosen, &mut count);
    count
}

#[derive(Clone, Debug)]
pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns `false` if `u` and `v` were already joined.
    pub(crate) fn union(&mut self, u: usize, v: usize) -> bool {
        let (a, b) = (self.find(u), self.find(v));
        if a == b {
            return false;
        }
        self.parent[a.max(b)] = a.min(b);
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::{cro, enumerate_matchings};

    fn six_arch_matching() -> Matching {
        Matching::from_arches(&[(1, 6), (2, 8), (3, 5), (4, 11), (7, 9), (10, 12)]).unwrap()
    }

    fn poly(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn crossing_graph_examples() {
        let g = crossing_graph(&Matching::from_arches(&[(1, 2), (3, 4)]).unwrap());
        assert_eq!((g.graph.n_vertices(), g.graph.n_edges()), (2, 0));
        let g = crossing_graph(&Matching::from_arches(&[(1, 3), (2, 4)]).unwrap());
        assert_eq!(g.graph.edges(), &[(0, 1)]);
        let g = crossing_graph(&six_arch_matching());
        assert_eq!(g.graph.n_vertices(), 6);
        assert_eq!(g.graph.n_edges(), 6);
        assert!(g.graph.is_connected());
        assert_eq!(g.label(3), "[4,11]");
        let deg: Vec<usize> = (0..6)
            .map(|v| {
                g.graph
                    .edges()
                    .iter()
                    .filter(|e| e.0 == v || e.1 == v)
                    .count()
            })
            .collect();
        // {1,6}:2, {2,8}:3, {3,5}:1, {4,11}:4, {7,9}:1, {10,12}:1
        assert_eq!(deg, vec![2, 3, 1, 4, 1, 1]);
    }

    #[test]
    fn crossing_graph_edges_count_crossings_and_detect_connectivity() {
        for n2 in (2..=10).step_by(2) {
            for sigma in enumerate_matchings(n2).unwrap() {
                let g = crossing_graph(&sigma);
                assert_eq!(g.graph.n_edges(), cro(&sigma));
                assert_eq!(g.graph.is_connected(), sigma.is_connected(), "{sigma}");
            }
        }
    }

    #[test]
    fn partition_crossing_graph() {
        let sp = |b: Vec<Vec<u32>>| SetPartition::from_blocks(b).unwrap();
        assert_eq!(
            crossing_graph_partition(&sp(vec![vec![1, 3], vec![2, 4]])).edges(),
            &[(0, 1)]
        );
        assert!(crossing_graph_partition(&sp(vec![vec![1, 2], vec![3, 4]]))
            .edges()
            .is_empty());
        let tri = crossing_graph_partition(&sp(vec![vec![1, 4, 7], vec![2, 5], vec![3, 6]]));
        assert_eq!(tri.edges(), &[(0, 1), (0, 2), (1, 2)]);
    }

    #[test]
    fn connectivity() {
        assert!(Multigraph::edgeless(1).is_connected());
        assert!(!Multigraph::edgeless(2).is_connected());
        assert!(!Multigraph::edgeless(0).is_connected());
        let loops_only = Multigraph::new(2, vec![(0, 0), (1, 1)]).unwrap();
        assert!(!is_connected_graph(&loops_only));
    }

    #[test]
    fn partition_sum_examples() {
        let edge = Multigraph::new(2, vec![(0, 1)]).unwrap();
        assert_eq!(partition_sum_u(&edge).unwrap(), poly(&[-1, 1]));
        assert_eq!(normalized_partition_sum(&edge).unwrap(), IntPoly::one());
        assert!(partition_sum_u(&Multigraph::edgeless(2)).unwrap().is_zero());
        let k3 = Multigraph::complete(3);
        let expected = &poly(&[-1, 1]).pow(2) * &poly(&[2, 1]);
        assert_eq!(partition_sum_u(&k3).unwrap(), expected);
        assert_eq!(
            partition_sum_u(&Multigraph::edgeless(0)),
            Err(GraphError::NoVertices)
        );
    }

    #[test]
    fn spanning_trees() {
        assert_eq!(spanning_tree_count(&Multigraph::edgeless(1)), 1);
        assert_eq!(spanning_tree_count(&Multigraph::edgeless(2)), 0);
        assert_eq!(spanning_tree_count(&Multigraph::complete(3)), 3);
        assert_eq!(spanning_tree_count(&Multigraph::complete(4)), 16);
        let doubled = Multigraph::new(2, vec![(0, 1), (0, 1), (1, 1)]).unwrap();
        assert_eq!(spanning_tree_count(&doubled), 2);
    }

    #[test]
    fn json_round_trip() {
        let g = Multigraph::new(3, vec![(0, 1), (1, 1), (2, 0)]).unwrap();
        let js = serde_json::to_string(&g).unwrap();
        assert_eq!(js, r#"{"n":3,"edges":[[0,1],[1,1],[2,0]]}"#);
        assert_eq!(serde_json::from_str::<Multigraph>(&js).unwrap(), g);
        assert!(serde_json::from_str::<Multigraph>(r#"{"n":2,"edges":[[0,2]]}"#).is_err());
    }
}
