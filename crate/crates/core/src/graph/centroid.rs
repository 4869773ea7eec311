use super::{idx, Graph, Vertex};
use crate::error::{domain, Result};

/// A vertex whose removal leaves components of weight at most `w(V)/2`.
///
/// Walks from vertex 1, stepping to the (unique) neighbor whose side of the
/// tree weighs strictly more than half, smallest id first.
pub fn tree_centroid(t: &Graph, weights: &[u64]) -> Result<Vertex> {
    let n = t.n();
    if weights.len() != n {
        return domain(format!("expected {n} weights, got {}", weights.len()));
    }
    if t.edge_count() != n - 1 || !t.is_connected() {
        return domain("centroid needs a tree");
    }
    let total: u128 = weights.iter().map(|&w| w as u128).sum();

    // Subtree weights for the tree rooted at 1; the side of edge (u, c)
    // containing c weighs sub[c] when c is a child of u and total - sub[u]
    // when c is u's parent.
    let mut parent = vec![0 as Vertex; n];
    let mut order = Vec::with_capacity(n);
    let mut stack = vec![1 as Vertex];
    let mut seen = vec![false; n];
    seen[0] = true;
    while let Some(v) = stack.pop() {
        order.push(v);
        for &u in t.neighbors(v) {
            if !seen[idx(u)] {
                seen[idx(u)] = true;
                parent[idx(u)] = v;
                stack.push(u);
            }
        }
    }
    let mut sub: Vec<u128> = weights.iter().map(|&w| w as u128).collect();
    for &v in order.iter().rev() {
        if v != 1 {
            let p = parent[idx(v)];
            sub[idx(p)] += sub[idx(v)];
        }
    }
    let side = |from: Vertex, to: Vertex| {
        if parent[idx(to)] == from {
            sub[idx(to)]
        } else {
            total - sub[idx(from)]
        }
    };

    let mut at: Vertex = 1;
    for _ in 0..n {
        let mut nbrs = t.neighbors(at).to_vec();
        nbrs.sort_unstable();
        match nbrs.into_iter().find(|&u| 2 * side(at, u) > total) {
            Some(next) => at = next,
            None => return Ok(at),
        }
    }
    unreachable!("walk on a tree moves toward the heavy side at most n times")
}
