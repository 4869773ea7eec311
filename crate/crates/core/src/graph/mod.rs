//! Bounded-degree graphs with ordered incidence lists.
//!
//! Vertices are the integers `1..=n`. The position of a neighbor inside a
//! vertex's list is significant: it is the slot an oracle probe `(v, i)`
//! reads, so every constructor documents the order it produces.

mod ball;
mod centroid;
mod expansion;
mod girth;
mod ilg;

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use crate::error::{domain, Error, Result};

pub use ball::{ball, explore_ball, Ball, Probe};
pub use centroid::tree_centroid;
pub use expansion::{
    check_non_expanding, check_non_expanding_with, edge_boundary, expansion, expansion_with,
    exceeds_bound, CutScore, Expansion,
    ExpansionWitness, LocalMasks, NonExpansion, Ratio, EXPANSION_CAP, NON_EXPANSION_CAP,
};
pub use girth::{girth, girth_with, Girth};
pub use ilg::{parse_ilg, read_ilg, to_ilg, write_ilg};

pub type Vertex = u32;

#[inline]
pub(crate) fn idx(v: Vertex) -> usize {
    v as usize - 1
}

/// Canonical undirected edge `lo < hi`.
///
/// The derived `Ord` is the edge ranking: lexicographic on `(lo, hi)`, i.e.
/// first by the smaller endpoint id and then by the larger one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeKey {
    lo: Vertex,
    hi: Vertex,
}

impl EdgeKey {
    pub fn new(a: Vertex, b: Vertex) -> Result<Self> {
        if a == b {
            return domain(format!("edge ({a},{b}) is a self-loop"));
        }
        if a == 0 || b == 0 {
            return domain("vertex ids start at 1");
        }
        Ok(Self { lo: a.min(b), hi: a.max(b) })
    }

    pub(crate) fn ordered(a: Vertex, b: Vertex) -> Self {
        debug_assert!(a != b);
        Self { lo: a.min(b), hi: a.max(b) }
    }

    pub fn lo(self) -> Vertex {
        self.lo
    }

    pub fn hi(self) -> Vertex {
        self.hi
    }

    pub fn other(self, v: Vertex) -> Option<Vertex> {
        if v == self.lo {
            Some(self.hi)
        } else if v == self.hi {
            Some(self.lo)
        } else {
            None
        }
    }
}

impl fmt::Display for EdgeKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.lo, self.hi)
    }
}

/// Strict rank order on edges.
pub fn rank_less(e1: EdgeKey, e2: EdgeKey) -> bool {
    e1 < e2
}

/// Immutable graph on vertices `1..=n` with a declared degree bound.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    d_max: usize,
    adj: Vec<Vec<Vertex>>,
}

impl Graph {
    /// Builds a graph from ordered incidence lists (`lists[v - 1]` is the list
    /// of `v`), validating every invariant.
    pub fn from_adjacency(d_max: usize, lists: Vec<Vec<Vertex>>) -> Result<Self> {
        let g = Self { d_max, adj: lists };
        g.validate()?;
        Ok(g)
    }

    /// Builds a graph from an edge list. Each list receives its neighbors in
    /// the order the edges are given; `d_max` is the realized maximum degree
    /// (at least 1).
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut adj = vec![Vec::new(); n];
        for (a, b) in edges {
            if a == 0 || b == 0 || a as usize > n || b as usize > n {
                return Err(Error::InvalidGraph(format!("edge ({a},{b}) outside 1..={n}")));
            }
            adj[idx(a)].push(b);
            adj[idx(b)].push(a);
        }
        let d_max = adj.iter().map(Vec::len).max().unwrap_or(0).max(1);
        Self::from_adjacency(d_max, adj)
    }

    /// Same as [`Graph::from_edges`] but every list sorted by increasing id.
    pub fn from_edges_sorted<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut g = Self::from_edges(n, edges)?;
        for list in &mut g.adj {
            list.sort_unstable();
        }
        Ok(g)
    }

    fn validate(&self) -> Result<()> {
        let n = self.adj.len();
        if n == 0 {
            return Err(Error::InvalidGraph("a graph needs at least one vertex".into()));
        }
        if self.d_max == 0 {
            return Err(Error::InvalidGraph("degree bound must be positive".into()));
        }
        if n > Vertex::MAX as usize {
            return Err(Error::InvalidGraph(format!("too many vertices: {n}")));
        }
        for (i, list) in self.adj.iter().enumerate() {
            let v = (i + 1) as Vertex;
            if list.len() > self.d_max {
                return Err(Error::InvalidGraph(format!(
                    "vertex {v} has degree {} > d = {}",
                    list.len(),
                    self.d_max
                )));
            }
            let mut seen = BTreeSet::new();
            for &u in list {
                if u == 0 || u as usize > n {
                    return Err(Error::InvalidGraph(format!("vertex {v}: neighbor {u} outside 1..={n}")));
                }
                if u == v {
                    return Err(Error::InvalidGraph(format!("vertex {v}: self-loop")));
                }
                if !seen.insert(u) {
                    return Err(Error::InvalidGraph(format!("vertex {v}: duplicate neighbor {u}")));
                }
                if !self.adj[idx(u)].contains(&v) {
                    return Err(Error::InvalidGraph(format!(
                        "asymmetric adjacency: {u} in list of {v} but not vice versa"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn d_max(&self) -> usize {
        self.d_max
    }

    pub fn contains(&self, v: Vertex) -> bool {
        v >= 1 && v as usize <= self.n()
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        1..=self.n() as Vertex
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[idx(v)]
    }

    /// The `slot`-th neighbor of `v` (1-based), or `None` when `v` has fewer
    /// than `slot` neighbors.
    pub fn neighbor(&self, v: Vertex, slot: usize) -> Option<Vertex> {
        slot.checked_sub(1).and_then(|s| self.adj[idx(v)].get(s).copied())
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[idx(v)].len()
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn is_regular(&self, d: usize) -> bool {
        self.adj.iter().all(|l| l.len() == d)
    }

    pub fn has_edge(&self, a: Vertex, b: Vertex) -> bool {
        self.contains(a) && self.contains(b) && self.adj[idx(a)].contains(&b)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// All edges in rank order.
    pub fn edges(&self) -> Vec<EdgeKey> {
        let mut out: Vec<EdgeKey> = self
            .vertices()
            .flat_map(|v| {
                self.neighbors(v)
                    .iter()
                    .filter(move |&&u| u > v)
                    .map(move |&u| EdgeKey::ordered(v, u))
            })
            .collect();
        out.sort_unstable();
        out
    }

    pub fn edge_key(&self, a: Vertex, b: Vertex) -> Result<EdgeKey> {
        let e = EdgeKey::new(a, b)?;
        if !self.has_edge(a, b) {
            return domain(format!("{e} is not an edge"));
        }
        Ok(e)
    }

    /// Connected components, each sorted, listed by smallest member.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        components_avoiding(self, |_| false)
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// BFS distances from `src` (`None` for unreachable vertices).
    pub fn distances(&self, src: Vertex) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n()];
        dist[idx(src)] = Some(0);
        let mut queue = VecDeque::from([src]);
        while let Some(v) = queue.pop_front() {
            let dv = dist[idx(v)].unwrap();
            for &u in self.neighbors(v) {
                if dist[idx(u)].is_none() {
                    dist[idx(u)] = Some(dv + 1);
                    queue.push_back(u);
                }
            }
        }
        dist
    }

    /// Largest eccentricity over all vertices; `None` if disconnected.
    pub fn diameter(&self) -> Option<usize> {
        let mut best = 0;
        for v in self.vertices() {
            for d in self.distances(v) {
                best = best.max(d?);
            }
        }
        Some(best)
    }

    /// Edges whose removal disconnects their component, in rank order.
    pub fn bridges(&self) -> Vec<EdgeKey> {
        // Iterative lowpoint DFS.
        let n = self.n();
        let mut disc = vec![0usize; n];
        let mut low = vec![0usize; n];
        let mut timer = 1;
        let mut out = Vec::new();
        for root in self.vertices() {
            if disc[idx(root)] != 0 {
                continue;
            }
            disc[idx(root)] = timer;
            low[idx(root)] = timer;
            timer += 1;
            // (vertex, parent, next slot)
            let mut stack: Vec<(Vertex, Vertex, usize)> = vec![(root, 0, 0)];
            while let Some(&mut (v, parent, ref mut slot)) = stack.last_mut() {
                if let Some(&u) = self.neighbors(v).get(*slot) {
                    *slot += 1;
                    if u == parent {
                        continue;
                    }
                    if disc[idx(u)] == 0 {
                        disc[idx(u)] = timer;
                        low[idx(u)] = timer;
                        timer += 1;
                        stack.push((u, v, 0));
                    } else {
                        low[idx(v)] = low[idx(v)].min(disc[idx(u)]);
                    }
                } else {
                    stack.pop();
                    if parent != 0 {
                        low[idx(parent)] = low[idx(parent)].min(low[idx(v)]);
                        if low[idx(v)] > disc[idx(parent)] {
                            out.push(EdgeKey::ordered(v, parent));
                        }
                    }
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Graph on the same vertices with `removed` deleted; list order kept.
    pub fn without_edges(&self, removed: &[EdgeKey]) -> Graph {
        let cut: BTreeSet<EdgeKey> = removed.iter().copied().collect();
        let adj = self
            .vertices()
            .map(|v| {
                self.neighbors(v)
                    .iter()
                    .copied()
                    .filter(|&u| !cut.contains(&EdgeKey::ordered(u, v)))
                    .collect()
            })
            .collect();
        Graph { d_max: self.d_max, adj }
    }

    /// Spanning subgraph containing exactly `kept`; list order kept.
    pub fn with_edges(&self, kept: &[EdgeKey]) -> Graph {
        let keep: BTreeSet<EdgeKey> = kept.iter().copied().collect();
        let adj = self
            .vertices()
            .map(|v| {
                self.neighbors(v)
                    .iter()
                    .copied()
                    .filter(|&u| keep.contains(&EdgeKey::ordered(u, v)))
                    .collect()
            })
            .collect();
        Graph { d_max: self.d_max, adj }
    }

    /// Subgraph induced by `members`, relabeled to `1..=members.len()` in the
    /// order given. List order is inherited.
    pub fn induced(&self, members: &[Vertex]) -> Result<Graph> {
        let mut local = vec![0 as Vertex; self.n()];
        for (i, &v) in members.iter().enumerate() {
            if !self.contains(v) {
                return domain(format!("vertex {v} not in graph"));
            }
            if local[idx(v)] != 0 {
                return domain(format!("vertex {v} listed twice"));
            }
            local[idx(v)] = (i + 1) as Vertex;
        }
        let adj = members
            .iter()
            .map(|&v| {
                self.neighbors(v)
                    .iter()
                    .filter_map(|&u| Some(local[idx(u)]).filter(|&l| l != 0))
                    .collect()
            })
            .collect();
        Ok(Graph { d_max: self.d_max, adj })
    }
}

pub(crate) fn components_avoiding<F>(g: &Graph, skip: F) -> Vec<Vec<Vertex>>
where
    F: Fn(EdgeKey) -> bool,
{
    let mut seen = vec![false; g.n()];
    let mut out = Vec::new();
    for s in g.vertices() {
        if seen[idx(s)] {
            continue;
        }
        seen[idx(s)] = true;
        let mut comp = vec![s];
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            for &u in g.neighbors(v) {
                if !seen[idx(u)] && !skip(EdgeKey::ordered(u, v)) {
                    seen[idx(u)] = true;
                    comp.push(u);
                    stack.push(u);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// Nonempty set of vertices of some graph, kept sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSubset {
    members: Vec<Vertex>,
}

impl VertexSubset {
    pub fn new(g: &Graph, members: impl IntoIterator<Item = Vertex>) -> Result<Self> {
        let set: BTreeSet<Vertex> = members.into_iter().collect();
        if let Some(&v) = set.iter().find(|&&v| !g.contains(v)) {
            return domain(format!("vertex {v} not in graph"));
        }
        Ok(Self { members: set.into_iter().collect() })
    }

    pub(crate) fn from_sorted(members: Vec<Vertex>) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        Self { members }
    }

    pub fn members(&self) -> &[Vertex] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.members.binary_search(&v).is_ok()
    }

    pub fn complement(&self, g: &Graph) -> VertexSubset {
        Self {
            members: g.vertices().filter(|&v| !self.contains(v)).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n as Vertex).map(|i| (i, i + 1))).unwrap()
    }

    #[test]
    fn rank_examples() {
        let e = |a, b| EdgeKey::new(a, b).unwrap();
        assert!(rank_less(e(1, 5), e(2, 3)));
        assert!(rank_less(e(2, 5), e(2, 7)));
        assert!(!rank_less(e(4, 9), e(4, 9)));
        assert_eq!(e(9, 4), e(4, 9));
    }

    #[test]
    fn rejects_broken_lists() {
        assert!(matches!(
            Graph::from_adjacency(2, vec![vec![2], vec![]]),
            Err(Error::InvalidGraph(_))
        ));
        assert!(Graph::from_adjacency(2, vec![vec![1]]).is_err());
        assert!(Graph::from_adjacency(2, vec![vec![2, 2], vec![1, 1]]).is_err());
        assert!(Graph::from_adjacency(1, vec![vec![2, 3], vec![1], vec![1]]).is_err());
        assert!(Graph::from_adjacency(1, vec![]).is_err());
    }

    #[test]
    fn neighbor_slots_are_one_based() {
        let g = path(3);
        assert_eq!(g.neighbor(2, 1), Some(1));
        assert_eq!(g.neighbor(2, 2), Some(3));
        assert_eq!(g.neighbor(1, 2), None);
        assert_eq!(g.neighbor(1, 0), None);
    }

    #[test]
    fn components_and_bridges() {
        // two triangles joined by (3,4)
        let g = Graph::from_edges(6, [(1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (4, 6), (3, 4)]).unwrap();
        assert_eq!(g.bridges(), vec![EdgeKey::new(3, 4).unwrap()]);
        let cut = g.without_edges(&[EdgeKey::new(3, 4).unwrap()]);
        assert_eq!(cut.components(), vec![vec![1, 2, 3], vec![4, 5, 6]]);
        assert_eq!(path(5).bridges().len(), 4);
        assert_eq!(path(5).diameter(), Some(4));
    }

    #[test]
    fn induced_relabels_in_given_order() {
        let g = path(5);
        let h = g.induced(&[4, 3, 5]).unwrap();
        assert_eq!(h.neighbors(1), &[2, 3]);
        assert_eq!(h.edge_count(), 2);
    }
}
