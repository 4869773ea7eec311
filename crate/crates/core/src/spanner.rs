//! The rank-Kruskal local algorithm.
//!
//! For a queried edge `(x, y)` the algorithm explores the radius-`k` ball
//! around the smaller endpoint and answers NO exactly when the two
//! endpoints are joined inside the ball by a path of strictly lower-ranked
//! edges, i.e. when `(x, y)` is the top-ranked edge of a cycle in the ball.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;

use crate::error::{domain, Error, Result};
use crate::exec::Execution;
use crate::graph::{explore_ball, EdgeKey, Graph, Vertex};
use crate::oracle::{probe_budget, OracleHandle};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Answer {
    Yes,
    No,
}

impl Answer {
    pub fn is_yes(self) -> bool {
        self == Answer::Yes
    }
}

impl fmt::Display for Answer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Answer::Yes => "YES",
            Answer::No => "NO",
        })
    }
}

/// Radius `k` ≥ 1, optionally remembering the `(epsilon, C)` it came from.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SpannerParams {
    pub k: usize,
    pub epsilon: Option<f64>,
    pub c: Option<f64>,
}

impl SpannerParams {
    pub fn with_k(k: usize) -> Result<Self> {
        if k == 0 {
            return domain("radius k must be at least 1");
        }
        Ok(Self { k, epsilon: None, c: None })
    }

    /// Radius from the double-exponential formula. Fails with
    /// [`Error::Overflow`] for every input where the value does not fit.
    pub fn theoretical(epsilon: f64, c: f64) -> Result<Self> {
        match compute_k(epsilon, c)? {
            TheoreticalK::Exact(k) => {
                let k = usize::try_from(k).map_err(|_| Error::Overflow(format!("k = {k} exceeds usize")))?;
                Ok(Self { k, epsilon: Some(epsilon), c: Some(c) })
            }
            over => Err(Error::Overflow(format!("theoretical k = {over} is unrepresentable"))),
        }
    }
}

/// `k = 2^(2^(2C/ε + 3))`, rounded up to an integer when the inner exponent
/// is fractional.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum TheoreticalK {
    Exact(u64),
    /// The value `2^(2^exponent)` does not fit in 64 bits.
    Overflow { exponent: f64 },
}

impl fmt::Display for TheoreticalK {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TheoreticalK::Exact(k) => write!(f, "{k}"),
            TheoreticalK::Overflow { exponent } => write!(f, "2^(2^{exponent})"),
        }
    }
}

pub fn compute_k(epsilon: f64, c: f64) -> Result<TheoreticalK> {
    if !(epsilon > 0.0 && epsilon.is_finite()) || !(c > 0.0 && c.is_finite()) {
        return domain(format!("epsilon and C must be positive and finite (got {epsilon}, {c})"));
    }
    let exponent = 2.0 * (c / epsilon) + 3.0;
    let outer = exponent.exp2();
    if outer >= 64.0 || !outer.is_finite() {
        return Ok(TheoreticalK::Overflow { exponent });
    }
    let k = outer.exp2().ceil();
    if k >= 2f64.powi(64) {
        return Ok(TheoreticalK::Overflow { exponent });
    }
    Ok(TheoreticalK::Exact(k as u64))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpannerDecision {
    pub edge: EdgeKey,
    pub answer: Answer,
    pub probes_used: usize,
    /// On NO: a path from `edge.lo()` to `edge.hi()` through lower-ranked
    /// ball edges.
    pub certificate: Option<Vec<Vertex>>,
}

/// Decides membership of `(x, y)` in the spanning subgraph.
pub fn edge_in_spanner(h: &mut OracleHandle<'_>, x: Vertex, y: Vertex, k: usize) -> Result<SpannerDecision> {
    if k == 0 {
        return domain("radius k must be at least 1");
    }
    let n = h.n();
    for v in [x, y] {
        if v == 0 || v as usize > n {
            return domain(format!("vertex {v} outside 1..={n}"));
        }
    }
    let edge = EdgeKey::new(x, y)?;
    let d = h.d();
    let mut failure = None;
    let ball = explore_ball(edge.lo(), k, d, |v, i| match h.query(v, i) {
        Ok(a) => Some(a),
        Err(e) => {
            failure = Some(e);
            None
        }
    });
    if let Some(e) = failure {
        return Err(e);
    }
    if ball.edges.binary_search(&edge).is_err() {
        return domain(format!("{edge} is not an edge"));
    }
    let probes_used = ball.probes.len();
    if let Ok(budget) = probe_budget(d, k) {
        debug_assert!(probes_used as u64 <= budget, "{probes_used} probes > budget {budget}");
    }
    let certificate = lower_rank_path(&ball.edges, edge);
    Ok(SpannerDecision {
        edge,
        answer: if certificate.is_some() { Answer::No } else { Answer::Yes },
        probes_used,
        certificate,
    })
}

/// Shortest path from `edge.lo()` to `edge.hi()` using only edges of rank
/// below `edge`; neighbors visited in id order.
pub fn lower_rank_path(edges: &[EdgeKey], edge: EdgeKey) -> Option<Vec<Vertex>> {
    let mut adj: BTreeMap<Vertex, Vec<Vertex>> = BTreeMap::new();
    for e in edges.iter().take_while(|&&e| e < edge) {
        adj.entry(e.lo()).or_default().push(e.hi());
        adj.entry(e.hi()).or_default().push(e.lo());
    }
    for list in adj.values_mut() {
        list.sort_unstable();
    }
    let (src, dst) = (edge.lo(), edge.hi());
    let mut parent = BTreeMap::from([(src, src)]);
    let mut queue = VecDeque::from([src]);
    while let Some(v) = queue.pop_front() {
        if v == dst {
            let mut path = vec![dst];
            let mut at = dst;
            while at != src {
                at = parent[&at];
                path.push(at);
            }
            path.reverse();
            return Some(path);
        }
        for &u in adj.get(&v).map_or(&[][..], Vec::as_slice) {
            if let std::collections::btree_map::Entry::Vacant(slot) = parent.entry(u) {
                slot.insert(v);
                queue.push_back(u);
            }
        }
    }
    None
}

#[derive(Clone, Debug, PartialEq)]
pub struct ProbeStats {
    pub edges: usize,
    pub max: usize,
    pub mean: f64,
    pub total: u64,
    /// `d^(k+1)`, `None` when unrepresentable.
    pub budget: Option<u64>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SpanResult {
    pub k: usize,
    /// Edges answered YES, in rank order.
    pub kept: Vec<EdgeKey>,
    /// One decision per edge of the input, in rank order.
    pub decisions: Vec<SpannerDecision>,
    pub stats: ProbeStats,
}

pub fn span_all(g: &Graph, k: usize) -> Result<SpanResult> {
    span_all_with(g, k, Execution::default())
}

/// Runs every per-edge decision, each through its own oracle handle.
pub fn span_all_with(g: &Graph, k: usize, exec: Execution) -> Result<SpanResult> {
    if !g.is_connected() {
        return domain("spanning subgraphs need a connected input graph");
    }
    let edges = g.edges();
    let decisions = exec
        .map(&edges, |e| edge_in_spanner(&mut OracleHandle::new(g), e.lo(), e.hi(), k))
        .into_iter()
        .collect::<Result<Vec<_>>>()?;
    let kept = decisions.iter().filter(|d| d.answer.is_yes()).map(|d| d.edge).collect();
    let total: u64 = decisions.iter().map(|d| d.probes_used as u64).sum();
    let stats = ProbeStats {
        edges: decisions.len(),
        max: decisions.iter().map(|d| d.probes_used).max().unwrap_or(0),
        mean: if decisions.is_empty() { 0.0 } else { total as f64 / decisions.len() as f64 },
        total,
        budget: probe_budget(g.d_max(), k).ok(),
    };
    Ok(SpanResult { k, kept, decisions, stats })
}
