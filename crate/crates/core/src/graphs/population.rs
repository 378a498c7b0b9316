//! Test populations of small multigraphs for the graph identities.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::Multigraph;

/// Every multigraph on `1..=max_vertices` vertices with at most `max_edges`
/// edge slots, loops and parallel edges included, up to the order of slots.
/// Edge slots are listed in nondecreasing order of their vertex pair.
pub fn exhaustive(max_vertices: usize, max_edges: usize) -> Vec<Multigraph> {
    let mut out = Vec::new();
    for n in 1..=max_vertices {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u..n).map(move |v| (u, v))).collect();
        let mut current = Vec::new();
        multisets(&pairs, 0, max_edges, &mut current, &mut |edges| {
            out.push(Multigraph::new(n, edges.to_vec()).expect("pairs are in range"));
        });
    }
    out
}

type Emit<'a> = dyn FnMut(&[(usize, usize)]) + 'a;

fn multisets(
    pairs: &[(usize, usize)],
    start: usize,
    budget: usize,
    current: &mut Vec<(usize, usize)>,
    emit: &mut Emit,
) {
    emit(current);
    if budget == 0 {
        return;
    }
    for i in start..pairs.len() {
        current.push(pairs[i]);
        multisets(pairs, i, budget - 1, current, emit);
        current.pop();
    }
}

/// `count` random multigraphs with `1..=max_vertices` vertices and up to
/// `max_edges` slots. Roughly one slot in six is a loop and one in four
/// repeats an earlier slot, so parallel edges are common.
pub fn random(seed: u64, count: usize, max_vertices: usize, max_edges: usize) -> Vec<Multigraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(1..=max_vertices);
            let m = rng.gen_range(0..=max_edges);
            let mut edges: Vec<(usize, usize)> = Vec::with_capacity(m);
            for _ in 0..m {
                let roll = rng.gen_range(0..12);
                let e = if roll < 3 && !edges.is_empty() {
                    edges[rng.gen_range(0..edges.len())]
                } else if roll < 5 {
                    let u = rng.gen_range(0..n);
                    (u, u)
                } else {
                    (rng.gen_range(0..n), rng.gen_range(0..n))
                };
                edges.push(e);
            }
            Multigraph::new(n, edges).expect("endpoints drawn in range")
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exhaustive_counts() {
        // one vertex: 0..=k loops
        assert_eq!(exhaustive(1, 3).len(), 4);
        // two vertices: multisets of size <= 2 over 3 pair types: 1 + 3 + 6
        assert_eq!(exhaustive(2, 2).len() - exhaustive(1, 2).len(), 10);
    }

    #[test]
    fn random_is_seeded_and_has_loops_and_parallels() {
        let a = random(7, 200, 6, 9);
        assert_eq!(a, random(7, 200, 6, 9));
        assert_ne!(a, random(8, 200, 6, 9));
        assert!(a.iter().all(|g| g.n_vertices() <= 6 && g.n_edges() <= 9));
        assert!(a.iter().any(|g| g.edges().iter().any(|&(u, v)| u == v)));
        assert!(a.iter().any(|g| {
            let e = g.edges();
            (0..e.len()).any(|i| (i + 1..e.len()).any(|j| e[i] == e[j] && e[i].0 != e[i].1))
        }));
    }
}
