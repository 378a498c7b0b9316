//! `T_G(1, q)` by deletion–contraction specialized at `x = 1`.
//!
//! At `x = 1` a bridge contributes a factor 1, so after stripping loops
//! (each a factor `q`) a graph whose every edge is a bridge evaluates to 1.
//! Otherwise the last non-bridge edge `e` gives `T(G) = T(G/e) + T(G\e)`;
//! both minors stay connected.

use std::collections::{HashMap, VecDeque};
use std::sync::RwLock;

use super::multigraph::UnionFind;
use super::{GraphError, Multigraph};
use crate::exactpoly::IntPoly;

/// Anything that can evaluate `T_G(1, q)` on connected multigraphs.
pub trait TutteEvaluator: Sync {
    fn tutte_1q(&self, g: &Multigraph) -> Result<IntPoly, GraphError>;
}

/// Canonical form used as a memo key: vertices relabeled in BFS order from a
/// lowest-degree vertex, edges sorted. Not an isomorphism invariant, but two
/// graphs with the same key are isomorphic, so a hit is always correct.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct GraphKey {
    n: u8,
    edges: Vec<(u8, u8)>,
}

/// Deletion–contraction engine with an optional shared memo table.
///
/// Cache entries are inserted only once fully computed, so concurrent callers
/// never observe a partial value.
#[derive(Debug, Default)]
pub struct TutteEngine {
    cache: Option<RwLock<HashMap<GraphKey, IntPoly>>>,
}

impl TutteEngine {
    pub fn new() -> Self {
        TutteEngine {
            cache: Some(RwLock::new(HashMap::new())),
        }
    }

    /// An engine that recomputes everything; its recursion follows the edge
    /// order of the input exactly.
    pub fn uncached() -> Self {
        TutteEngine { cache: None }
    }

    pub fn cache_len(&self) -> usize {
        self.cache
            .as_ref()
            .map_or(0, |c| c.read().expect("tutte cache poisoned").len())
    }

    /// `T(1, q)` for any multigraph: the product over connected components.
    pub fn tutte_1q_components(&self, g: &Multigraph) -> Result<IntPoly, GraphError> {
        let comp = g.components();
        let k = comp.iter().copied().max().map_or(0, |m| m + 1);
        let mut acc = IntPoly::one();
        for c in 0..k {
            let verts: Vec<usize> = (0..g.n_vertices()).filter(|&v| comp[v] == c).collect();
            acc = &acc * &self.tutte_1q(&g.induced(&verts))?;
        }
        Ok(acc)
    }

    fn eval(&self, n: usize, mut edges: Vec<(usize, usize)>) -> IntPoly {
        let before = edges.len();
        edges.retain(|&(u, v)| u != v);
        let loops = before - edges.len();
        let rest = self.eval_loopless(n, edges);
        if loops == 0 {
            rest
        } else {
            rest.shift(loops)
        }
    }

    fn eval_loopless(&self, n: usize, edges: Vec<(usize, usize)>) -> IntPoly {
        if edges.len() < n {
            // connected with at most n-1 edges: a tree, every edge a bridge
            return IntPoly::one();
        }
        let key = self.cache.as_ref().map(|_| canonical_key(n, &edges));
        if let (Some(cache), Some(key)) = (&self.cache, &key) {
            if let Some(hit) = cache.read().expect("tutte cache poisoned").get(key) {
                return hit.clone();
            }
        }
        let e = (0..edges.len())
            .rev()
            .find(|&i| !is_bridge(n, &edges, i))
            .expect("a connected graph with a cycle has a non-bridge edge");
        let (u, v) = edges[e];
        let mut deleted = edges.clone();
        deleted.remove(e);
        let contracted = contract(&deleted, u, v);
        let value = &self.eval(n - 1, contracted) + &self.eval_loopless(n, deleted);
        if let (Some(cache), Some(key)) = (&self.cache, key) {
            cache
                .write()
                .expect("tutte cache poisoned")
                .insert(key, value.clone());
        }
        value
    }
}

impl TutteEvaluator for TutteEngine {
    fn tutte_1q(&self, g: &Multigraph) -> Result<IntPoly, GraphError> {
        if !g.is_connected() {
            return Err(GraphError::DisconnectedInput);
        }
        if g.n_vertices() > u8::MAX as usize {
            return Err(GraphError::TooLarge);
        }
        Ok(self.eval(g.n_vertices(), g.edges().to_vec()))
    }
}

/// `T_g(1, q)` with a fresh memo table.
pub fn tutte_1q(g: &Multigraph) -> Result<IntPoly, GraphError> {
    TutteEngine::new().tutte_1q(g)
}

/// Merges `v` into `u` and closes the gap left by `v`.
fn contract(edges: &[(usize, usize)], u: usize, v: usize) -> Vec<(usize, usize)> {
    let (keep, gone) = (u.min(v), u.max(v));
    let relabel = |x: usize| {
        if x == gone {
            keep
        } else if x > gone {
            x - 1
        } else {
            x
        }
    };
    edges
        .iter()
        .map(|&(a, b)| (relabel(a), relabel(b)))
        .collect()
}

fn is_bridge(n: usize, edges: &[(usize, usize)], skip: usize) -> bool {
    let mut uf = UnionFind::new(n);
    for (i, &(a, b)) in edges.iter().enumerate() {
        if i != skip {
            uf.union(a, b);
        }
    }
    let (u, v) = edges[skip];
    uf.find(u) != uf.find(v)
}

fn canonical_key(n: usize, edges: &[(usize, usize)]) -> GraphKey {
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    let degree: Vec<usize> = adj.iter().map(Vec::len).collect();
    for list in &mut adj {
        list.sort_unstable_by_key(|&w| (degree[w], w));
        list.dedup();
    }
    let start = (0..n).min_by_key(|&v| (degree[v], v)).unwrap_or(0);
    let mut order = vec![usize::MAX; n];
    let mut next = 0;
    let mut queue = VecDeque::new();
    // loop over all vertices so disconnected inputs still get a full labeling
    for s in std::iter::once(start).chain(0..n) {
        if order[s] != usize::MAX {
            continue;
        }
        order[s] = next;
        next += 1;
        queue.push_back(s);
        while let Some(x) = queue.pop_front() {
            for &w in &adj[x] {
                if order[w] == usize::MAX {
                    order[w] = next;
                    next += 1;
                    queue.push_back(w);
                }
            }
        }
    }
    let mut key_edges: Vec<(u8, u8)> = edges
        .iter()
        .map(|&(a, b)| {
            let (x, y) = (order[a] as u8, order[b] as u8);
            (x.min(y), x.max(y))
        })
        .collect();
    key_edges.sort_unstable();
    GraphKey {
        n: n as u8,
        edges: key_edges,
    }
}
