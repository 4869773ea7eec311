use std::collections::BTreeMap;

use crate::error::{domain, Result};
use crate::graph::{idx, EdgeKey, Graph, Vertex};

/// Where each original vertex and edge went in a replacement product.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CloudMap {
    /// `clouds[v - 1][i - 1]` is the product vertex for slot `i` of `v`.
    pub clouds: Vec<Vec<Vertex>>,
    /// Original edge to the product edge that replaced it.
    pub cross: BTreeMap<EdgeKey, EdgeKey>,
}

impl CloudMap {
    pub fn cloud_of(&self, v: Vertex) -> &[Vertex] {
        &self.clouds[idx(v)]
    }
}

/// Replaces every vertex `v` of degree `deg(v)` by a cycle of `deg(v)`
/// vertices, one per slot. Slot `i` of `v` pointing at `u` becomes an edge
/// from cloud vertex `(v, i)` to `(u, j)`, where `j` is the slot of `v` in
/// `u`'s list. The result is 3-regular.
///
/// Ids are assigned cloud by cloud in vertex order, slot order inside a
/// cloud. Incidence lists are sorted.
pub fn replacement_product(g: &Graph) -> Result<(Graph, CloudMap)> {
    if g.min_degree() < 3 {
        return domain(format!("replacement product needs minimum degree >= 3, got {}", g.min_degree()));
    }
    let mut clouds = Vec::with_capacity(g.n());
    let mut next: Vertex = 1;
    for v in g.vertices() {
        let deg = g.degree(v) as Vertex;
        clouds.push((next..next + deg).collect::<Vec<_>>());
        next += deg;
    }
    let total = (next - 1) as usize;
    let mut edges = Vec::with_capacity(total * 3 / 2);
    let mut cross = BTreeMap::new();
    for v in g.vertices() {
        let cloud = &clouds[idx(v)];
        for i in 0..cloud.len() {
            edges.push((cloud[i], cloud[(i + 1) % cloud.len()]));
        }
        for (i, &u) in g.neighbors(v).iter().enumerate() {
            if v < u {
                let j = g.neighbors(u).iter().position(|&x| x == v).expect("symmetric adjacency");
                let (a, b) = (cloud[i], clouds[idx(u)][j]);
                edges.push((a, b));
                cross.insert(EdgeKey::ordered(v, u), EdgeKey::ordered(a, b));
            }
        }
    }
    let product = Graph::from_edges_sorted(total, edges)?;
    Ok((product, CloudMap { clouds, cross }))
}
