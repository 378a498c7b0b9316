use serde::{Deserialize, Serialize};

use super::{GraphError, Multigraph, RootedMultigraph};

/// Direction per edge slot. For the slot `(u, v)`, `false` means `u -> v`
/// and `true` means `v -> u`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawOrientation", into = "RawOrientation")]
pub struct Orientation {
    dirs: Vec<bool>,
}

#[derive(Serialize, Deserialize)]
struct RawOrientation {
    dirs: Vec<u8>,
}

impl TryFrom<RawOrientation> for Orientation {
    type Error = String;
    fn try_from(raw: RawOrientation) -> Result<Self, String> {
        raw.dirs
            .into_iter()
            .map(|d| match d {
                0 => Ok(false),
                1 => Ok(true),
                other => Err(format!("direction must be 0 or 1, got {other}")),
            })
            .collect::<Result<Vec<_>, _>>()
            .map(Orientation::new)
    }
}

impl From<Orientation> for RawOrientation {
    fn from(o: Orientation) -> Self {
        RawOrientation {
            dirs: o.dirs.into_iter().map(u8::from).collect(),
        }
    }
}

impl Orientation {
    pub fn new(dirs: Vec<bool>) -> Self {
        Orientation { dirs }
    }

    /// Low bit first: bit `i` of `mask` is the direction of slot `i`.
    pub fn from_mask(mask: u64, n_edges: usize) -> Self {
        Orientation {
            dirs: (0..n_edges).map(|i| mask >> i & 1 == 1).collect(),
        }
    }

    pub fn dirs(&self) -> &[bool] {
        &self.dirs
    }

    pub fn len(&self) -> usize {
        self.dirs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dirs.is_empty()
    }

    /// `(tail, head)` of slot `i` of `g`.
    pub fn arc(&self, g: &Multigraph, i: usize) -> (usize, usize) {
        let (u, v) = g.edges()[i];
        if self.dirs[i] {
            (v, u)
        } else {
            (u, v)
        }
    }

    fn check(&self, g: &Multigraph) -> Result<(), GraphError> {
        if self.dirs.len() == g.n_edges() {
            Ok(())
        } else {
            Err(GraphError::OrientationLength {
                expected: g.n_edges(),
                got: self.dirs.len(),
            })
        }
    }
}

/// All `2^{#edges}` orientations, in mask order.
pub fn enumerate_orientations(
    g: &Multigraph,
) -> Result<impl Iterator<Item = Orientation>, GraphError> {
    let m = g.n_edges();
    if m >= 64 {
        return Err(GraphError::TooLarge);
    }
    Ok((0..1u64 << m).map(move |mask| Orientation::from_mask(mask, m)))
}

/// Out-neighbor bitsets for vertex count <= 64.
fn out_masks(g: &Multigraph, o: &Orientation) -> Vec<u64> {
    let mut out = vec![0u64; g.n_vertices()];
    for i in 0..g.n_edges() {
        let (t, h) = o.arc(g, i);
        out[t] |= 1 << h;
    }
    out
}

/// No directed cycle. A loop is a directed cycle of length one.
pub fn is_acyclic(g: &Multigraph, o: &Orientation) -> Result<bool, GraphError> {
    o.check(g)?;
    if g.edges().iter().any(|&(u, v)| u == v) {
        return Ok(false);
    }
    let n = g.n_vertices();
    let mut indeg = vec![0usize; n];
    let mut out = vec![Vec::new(); n];
    for i in 0..g.n_edges() {
        let (t, h) = o.arc(g, i);
        indeg[h] += 1;
        out[t].push(h);
    }
    let mut ready: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
    let mut seen = 0;
    while let Some(v) = ready.pop() {
        seen += 1;
        for &w in &out[v] {
            indeg[w] -= 1;
            if indeg[w] == 0 {
                ready.push(w);
            }
        }
    }
    Ok(seen == n)
}

/// Vertices with no incoming arc.
pub fn sources(g: &Multigraph, o: &Orientation) -> Result<Vec<usize>, GraphError> {
    o.check(g)?;
    let mut has_in = vec![false; g.n_vertices()];
    for i in 0..g.n_edges() {
        has_in[o.arc(g, i).1] = true;
    }
    Ok((0..g.n_vertices()).filter(|&v| !has_in[v]).collect())
}

/// Every vertex is reachable from the root along directed paths.
pub fn is_root_connected(g: &RootedMultigraph, o: &Orientation) -> Result<bool, GraphError> {
    o.check(g.graph())?;
    let n = g.graph().n_vertices();
    if n > 64 {
        return Err(GraphError::TooLarge);
    }
    Ok(reach_mask(&out_masks(g.graph(), o), g.root()) == full_mask(n))
}

fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

fn reach_mask(out: &[u64], root: usize) -> u64 {
    let mut seen = 1u64 << root;
    let mut frontier = seen;
    while frontier != 0 {
        let v = frontier.trailing_zeros() as usize;
        frontier &= frontier - 1;
        let fresh = out[v] & !seen;
        seen |= fresh;
        frontier |= fresh;
    }
    seen
}

/// Vertices reachable from `root` under `o`, as a sorted list.
pub fn reachable_from(
    g: &Multigraph,
    o: &Orientation,
    root: usize,
) -> Result<Vec<usize>, GraphError> {
    o.check(g)?;
    if g.n_vertices() > 64 {
        return Err(GraphError::TooLarge);
    }
    let seen = reach_mask(&out_masks(g, o), root);
    Ok((0..g.n_vertices())
        .filter(|&v| seen >> v & 1 == 1)
        .collect())
}

fn require_connected(g: &RootedMultigraph) -> Result<(), GraphError> {
    if !g.graph().is_connected() {
        return Err(GraphError::DisconnectedInput);
    }
    if g.graph().n_vertices() > 64 || g.graph().n_edges() >= 64 {
        return Err(GraphError::TooLarge);
    }
    Ok(())
}

/// Bitset view of one orientation, for the counting loops.
struct ArcMasks {
    // in_from[v] = vertices with an arc into v
    in_from: Vec<u64>,
    out_to: Vec<u64>,
    full: u64,
}

impl ArcMasks {
    fn new(n: usize) -> Self {
        ArcMasks {
            in_from: vec![0; n],
            out_to: vec![0; n],
            full: full_mask(n),
        }
    }

    fn load(&mut self, edges: &[(usize, usize)], mask: u64) {
        self.in_from.iter_mut().for_each(|m| *m = 0);
        self.out_to.iter_mut().for_each(|m| *m = 0);
        for (i, &(u, v)) in edges.iter().enumerate() {
            let (t, h) = if mask >> i & 1 == 1 { (v, u) } else { (u, v) };
            self.in_from[h] |= 1 << t;
            self.out_to[t] |= 1 << h;
        }
    }

    fn sources(&self) -> u64 {
        let mut s = 0;
        for (v, &m) in self.in_from.iter().enumerate() {
            if m == 0 {
                s |= 1 << v;
            }
        }
        s
    }

    /// Peels sources until nothing or only cycles remain.
    fn is_acyclic(&self) -> bool {
        let mut remaining = self.full;
        loop {
            let mut peel = 0;
            let mut rest = remaining;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                if self.in_from[v] & remaining == 0 {
                    peel |= 1 << v;
                }
            }
            if peel == 0 {
                return remaining == 0;
            }
            remaining &= !peel;
        }
    }
}

fn has_loop(g: &Multigraph) -> bool {
    g.edges().iter().any(|&(u, v)| u == v)
}

/// Acyclic orientations whose only source is the root.
pub fn count_uniquesource_acyclic(g: &RootedMultigraph) -> Result<u64, GraphError> {
    require_connected(g)?;
    let graph = g.graph();
    if has_loop(graph) {
        return Ok(0);
    }
    let mut arcs = ArcMasks::new(graph.n_vertices());
    let want = 1u64 << g.root();
    let mut count = 0;
    for mask in 0..1u64 << graph.n_edges() {
        arcs.load(graph.edges(), mask);
        if arcs.sources() == want && arcs.is_acyclic() {
            count += 1;
        }
    }
    Ok(count)
}

/// Orientations (cycles allowed) in which every vertex is reachable from the root.
pub fn count_root_connected(g: &RootedMultigraph) -> Result<u64, GraphError> {
    require_connected(g)?;
    let graph = g.graph();
    let mut arcs = ArcMasks::new(graph.n_vertices());
    let mut count = 0;
    for mask in 0..1u64 << graph.n_edges() {
        arcs.load(graph.edges(), mask);
        if reach_mask(&arcs.out_to, g.root()) == arcs.full {
            count += 1;
        }
    }
    Ok(count)
}

/// Acyclic orientations with exactly one source, wherever it is.
pub fn count_single_source_acyclic(g: &Multigraph) -> Result<u64, GraphError> {
    if g.n_vertices() > 64 || g.n_edges() >= 64 {
        return Err(GraphError::TooLarge);
    }
    if has_loop(g) {
        return Ok(0);
    }
    let mut arcs = ArcMasks::new(g.n_vertices());
    let mut count = 0;
    for mask in 0..1u64 << g.n_edges() {
        arcs.load(g.edges(), mask);
        if arcs.sources().count_ones() == 1 && arcs.is_acyclic() {
            count += 1;
        }
    }
    Ok(count)
}
