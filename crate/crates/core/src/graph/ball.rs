use std::collections::{BTreeSet, HashMap};

use super::{EdgeKey, Graph, Vertex};
use crate::error::{domain, Result};

/// One neighbor probe `(vertex, slot)` and its answer.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Probe {
    pub vertex: Vertex,
    pub slot: usize,
    pub answer: Option<Vertex>,
}

/// The induced subgraph on all vertices within distance `radius` of
/// `center`, with original ids, as discovered through probes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ball {
    pub center: Vertex,
    pub radius: usize,
    /// Discovered vertices in BFS order.
    pub vertices: Vec<Vertex>,
    pub distance: HashMap<Vertex, usize>,
    /// Induced edges in rank order.
    pub edges: Vec<EdgeKey>,
    pub probes: Vec<Probe>,
    /// False when the probe source stopped the exploration early; `edges`
    /// then holds only what was seen.
    pub complete: bool,
}

impl Ball {
    pub fn contains(&self, v: Vertex) -> bool {
        self.distance.contains_key(&v)
    }
}

/// Explores the radius-`k` ball around `center` through a probe function.
///
/// Vertices are expanded in BFS order; each expanded vertex has its slots
/// `1..=d` read until the first empty answer. A vertex with `d` incident
/// edges already seen is skipped: its list holds nothing new. Every vertex at distance
/// `< k` is expanded. Of the vertices at distance exactly `k` all but the
/// last one in BFS order are expanded: that recovers every edge inside the
/// outer layer while keeping the probe count at most `d * (|ball| - 1)`,
/// which never exceeds `d^(k+1)`.
///
/// `probe` returns `None` to stop the exploration (budget exhausted).
pub fn explore_ball<F>(center: Vertex, k: usize, d: usize, mut probe: F) -> Ball
where
    F: FnMut(Vertex, usize) -> Option<Option<Vertex>>,
{
    let mut ball = Ball {
        center,
        radius: k,
        vertices: vec![center],
        distance: HashMap::from([(center, 0)]),
        edges: Vec::new(),
        probes: Vec::new(),
        complete: true,
    };
    let mut edges = BTreeSet::new();
    let mut known: HashMap<Vertex, usize> = HashMap::new();
    let mut head = 0;
    'bfs: while head < ball.vertices.len() {
        let v = ball.vertices[head];
        head += 1;
        let dv = ball.distance[&v];
        if dv == k && head == ball.vertices.len() {
            // last vertex of the outer layer
            break;
        }
        if known.get(&v).copied().unwrap_or(0) >= d {
            continue;
        }
        for slot in 1..=d {
            let Some(answer) = probe(v, slot) else {
                ball.complete = false;
                break 'bfs;
            };
            ball.probes.push(Probe { vertex: v, slot, answer });
            let Some(u) = answer else { break };
            let inside = ball.distance.contains_key(&u);
            if !inside && dv < k {
                ball.distance.insert(u, dv + 1);
                ball.vertices.push(u);
            }
            if (inside || dv < k) && edges.insert(EdgeKey::ordered(u, v)) {
                *known.entry(u).or_default() += 1;
                *known.entry(v).or_default() += 1;
            }
        }
    }
    ball.edges = edges.into_iter().collect();
    ball
}

/// `C_k(v, G)` read directly from the adjacency lists, together with the
/// probe sequence an oracle-driven exploration performs.
pub fn ball(g: &Graph, v: Vertex, k: usize) -> Result<Ball> {
    if !g.contains(v) {
        return domain(format!("vertex {v} not in 1..={}", g.n()));
    }
    Ok(explore_ball(v, k, g.d_max(), |x, i| Some(g.neighbor(x, i))))
}
