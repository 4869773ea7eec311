use crate::error::{domain, Error, Result};
use crate::graph::{girth, idx, EdgeKey, Girth, Graph, Vertex};

/// Inserts a new vertex `n + 1` in the middle of edge `e = (lo, hi)`. It takes
/// over the slot `e` occupied at both endpoints; its own list is `[lo, hi]`.
pub fn subdivide(g: &Graph, e: EdgeKey) -> Result<Graph> {
    if !g.has_edge(e.lo(), e.hi()) {
        return domain(format!("{e} is not an edge"));
    }
    let w = g.n() as Vertex + 1;
    let mut lists: Vec<Vec<Vertex>> = g.vertices().map(|v| g.neighbors(v).to_vec()).collect();
    for (a, b) in [(e.lo(), e.hi()), (e.hi(), e.lo())] {
        for x in &mut lists[idx(a)] {
            if *x == b {
                *x = w;
            }
        }
    }
    lists.push(vec![e.lo(), e.hi()]);
    Graph::from_adjacency(g.d_max().max(2), lists)
}

/// Two subdivided copies of a graph joined by a bridge between the
/// subdivision vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BridgeArtifact {
    pub graph: Graph,
    /// Always `(1, 2)`.
    pub bridge: EdgeKey,
    /// `copy1[v - 1]` is the id of `v` in the first copy.
    pub copy1: Vec<Vertex>,
    pub copy2: Vec<Vertex>,
    pub e1: EdgeKey,
    pub e2: EdgeKey,
    /// Girth of `graph`, computed once.
    pub girth: Girth,
}

impl BridgeArtifact {
    /// Wraps a 3-regular graph in which `(u, v)` is a bridge, relabeling it
    /// so the bridge becomes `(1, 2)`: `u` and `1` swap ids, then `v` and `2`.
    /// Slot orders are kept. Also returns `relabel[old - 1] = new`.
    ///
    /// The copy maps are empty and `e1 = e2 = (1, 2)`: nothing is known about
    /// how the graph was built.
    pub fn from_bridged(g: &Graph, u: Vertex, v: Vertex) -> Result<(Self, Vec<Vertex>)> {
        let bridge = g.edge_key(u, v)?;
        if !g.is_regular(3) {
            return domain("target must be 3-regular");
        }
        if !g.bridges().contains(&bridge) {
            return domain(format!("({u},{v}) is not a bridge"));
        }
        let mut relabel: Vec<Vertex> = g.vertices().collect();
        relabel.swap(idx(u), 0);
        let at = relabel.iter().position(|&x| x == 2).expect("2 is a vertex");
        let vi = idx(v);
        relabel.swap(vi, at);
        let mut lists = vec![Vec::new(); g.n()];
        for a in g.vertices() {
            lists[idx(relabel[idx(a)])] = g.neighbors(a).iter().map(|&b| relabel[idx(b)]).collect();
        }
        let graph = Graph::from_adjacency(g.d_max(), lists)?;
        let bridge = EdgeKey::ordered(1, 2);
        let girth = girth(&graph);
        Ok((Self { graph, bridge, copy1: Vec::new(), copy2: Vec::new(), e1: bridge, e2: bridge, girth }, relabel))
    }
}

/// Subdivides `e1` in one copy of a connected 3-regular `g` and `e2` in
/// another, then joins the two new vertices. The subdivision vertices get
/// ids 1 and 2, so the bridge is `(1, 2)`; vertex `v` of the first copy
/// becomes `v + 2` and of the second `n + v + 2`.
///
/// Copies keep `g`'s slot order. The list of a subdivision vertex is
/// `[lo, hi, other]`. The result is 3-regular with girth at least `girth(g)`.
pub fn bridge_join(g: &Graph, e1: EdgeKey, e2: EdgeKey) -> Result<BridgeArtifact> {
    if !g.is_regular(3) || !g.is_connected() {
        return domain("bridge join needs a connected 3-regular graph");
    }
    for e in [e1, e2] {
        if !g.has_edge(e.lo(), e.hi()) {
            return domain(format!("{e} is not an edge"));
        }
    }
    let n = g.n() as Vertex;
    let copy1: Vec<Vertex> = g.vertices().map(|v| v + 2).collect();
    let copy2: Vec<Vertex> = g.vertices().map(|v| n + v + 2).collect();
    let mut lists = vec![Vec::new(); 2 * g.n() + 2];
    for (w, other, map, e) in [(1, 2, &copy1, e1), (2, 1, &copy2, e2)] {
        for v in g.vertices() {
            lists[idx(map[idx(v)])] = g
                .neighbors(v)
                .iter()
                .map(|&u| if EdgeKey::ordered(u, v) == e { w } else { map[idx(u)] })
                .collect();
        }
        lists[idx(w)] = vec![map[idx(e.lo())], map[idx(e.hi())], other];
    }
    let graph = Graph::from_adjacency(3, lists).map_err(|err| Error::Internal(format!("bridge join: {err}")))?;
    let girth = girth(&graph);
    Ok(BridgeArtifact { graph, bridge: EdgeKey::ordered(1, 2), copy1, copy2, e1, e2, girth })
}
