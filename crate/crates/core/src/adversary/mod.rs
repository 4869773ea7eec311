//! Indistinguishability harness for bounded-probe per-edge algorithms.
//!
//! A run records what an algorithm sees around an edge `(u, v)`, turns the
//! probed edges into a tree, embeds that tree into a bridged 3-regular
//! target so that `(u, v)` lands on the bridge `(1, 2)`, and replays the
//! algorithm on the relabeled target. Identical transcripts force identical
//! answers, so an algorithm that could say NO would say NO on a bridge.

mod algorithms;

pub use algorithms::{AlwaysYes, LocalAlgorithm, LocalKruskal, ProbeCappedKruskal, RandomProbeStrategy};

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use crate::constructions::BridgeArtifact;
use crate::error::{Error, Result};
use crate::graph::{idx, EdgeKey, Girth, Graph, Vertex};
use crate::oracle::{OracleHandle, Transcript};
use crate::reference::UnionFind;
use crate::spanner::Answer;

/// Runs `alg` on `(g, edge)` through a recording oracle. The run is repeated
/// and must reproduce the same answer and transcript.
pub fn record<A: LocalAlgorithm + ?Sized>(alg: &A, g: &Graph, edge: EdgeKey) -> Result<(Answer, Transcript)> {
    let once = || -> Result<(Answer, Transcript)> {
        let mut h = OracleHandle::recording(g, edge);
        let answer = alg.decide(&mut h, edge)?;
        Ok((answer, h.take_transcript().expect("recording handle")))
    };
    let first = once()?;
    if once()? != first {
        return Err(Error::Precondition(format!("{} is not deterministic on {edge}", alg.name())));
    }
    Ok(first)
}

/// The probed edges plus the input edge, and the tree obtained by chaining
/// its components through one leaf each.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QueryForest {
    pub transcript: Transcript,
    /// `E(F)`, de-duplicated.
    pub edges: BTreeSet<EdgeKey>,
    /// Components of `F`, each sorted, ordered by smallest id.
    pub components: Vec<Vec<Vertex>>,
    /// Link vertex of each component: its smallest-id leaf.
    pub links: Vec<Vertex>,
    /// `E(F)` plus the chain `links[i] – links[i+1]`.
    pub tree: BTreeSet<EdgeKey>,
}

impl QueryForest {
    pub fn tree_degree(&self, v: Vertex) -> usize {
        self.tree.iter().filter(|e| e.lo() == v || e.hi() == v).count()
    }

    pub fn max_tree_degree(&self) -> usize {
        self.tree.iter().flat_map(|e| [e.lo(), e.hi()]).map(|v| self.tree_degree(v)).max().unwrap_or(0)
    }

    fn tree_adjacency(&self) -> BTreeMap<Vertex, Vec<Vertex>> {
        let mut adj: BTreeMap<Vertex, Vec<Vertex>> = BTreeMap::new();
        for e in &self.tree {
            adj.entry(e.lo()).or_default().push(e.hi());
            adj.entry(e.hi()).or_default().push(e.lo());
        }
        for list in adj.values_mut() {
            list.sort_unstable();
        }
        adj
    }
}

/// Builds `F` from a transcript and links its components into one tree.
///
/// Linking through leaves keeps every tree degree at most 3 whenever `F`
/// has maximum degree 3. Errors if the probed edges contain a cycle.
pub fn build_linked_tree(t: &Transcript) -> Result<QueryForest> {
    let mut edges = BTreeSet::from([t.input_edge]);
    for e in &t.entries {
        if let Some(y) = e.answer {
            edges.insert(EdgeKey::ordered(e.vertex, y));
        }
    }
    let vertices: BTreeSet<Vertex> = edges.iter().flat_map(|e| [e.lo(), e.hi()]).collect();
    let local: BTreeMap<Vertex, usize> = vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut uf = UnionFind::new(vertices.len());
    for e in &edges {
        if !uf.union(local[&e.lo()], local[&e.hi()]) {
            return Err(Error::Precondition(format!("probed edges contain a cycle through {e}")));
        }
    }
    let mut groups: BTreeMap<usize, Vec<Vertex>> = BTreeMap::new();
    for &v in &vertices {
        groups.entry(uf.find(local[&v])).or_default().push(v);
    }
    let mut components: Vec<Vec<Vertex>> = groups.into_values().collect();
    components.sort_by_key(|c| c[0]);
    let degree = |v: Vertex| edges.iter().filter(|e| e.lo() == v || e.hi() == v).count();
    let links: Vec<Vertex> = components
        .iter()
        .map(|c| c.iter().copied().find(|&v| degree(v) == 1).expect("a finite tree with an edge has a leaf"))
        .collect();
    let mut tree = edges.clone();
    tree.extend(links.windows(2).map(|w| EdgeKey::ordered(w[0], w[1])));
    Ok(QueryForest { transcript: t.clone(), edges, components, links, tree })
}

/// Relabeling `σ` of a bridged target, plus the slot orders it must carry.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmbeddingResult {
    /// `sigma[a - 1] = σ(a)`.
    pub sigma: Vec<Vertex>,
    /// `(x, i) → y`: slot `i` of `x` in `σ(G)` must hold `y`.
    pub order_constraints: BTreeMap<(Vertex, usize), Vertex>,
    pub replay_ok: bool,
    pub bridge_hit: bool,
}

impl EmbeddingResult {
    pub fn sigma_of(&self, a: Vertex) -> Vertex {
        self.sigma[idx(a)]
    }

    pub fn inverse(&self) -> Vec<Vertex> {
        let mut inv = vec![0; self.sigma.len()];
        for (a, &s) in self.sigma.iter().enumerate() {
            inv[idx(s)] = a as Vertex + 1;
        }
        inv
    }

    pub fn is_permutation(&self) -> bool {
        let mut seen = vec![false; self.sigma.len()];
        self.sigma.iter().all(|&s| {
            (1..=seen.len()).contains(&(s as usize)) && !std::mem::replace(&mut seen[idx(s)], true)
        })
    }
}

impl fmt::Display for EmbeddingResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "sigma:")?;
        for (a, s) in self.sigma.iter().enumerate() {
            writeln!(f, "{} {}", a + 1, s)?;
        }
        writeln!(f, "constraints:")?;
        for ((x, i), y) in &self.order_constraints {
            writeln!(f, "{x} {i} {y}")?;
        }
        writeln!(f, "replay_ok: {}", self.replay_ok)?;
        write!(f, "bridge_hit: {}", self.bridge_hit)
    }
}

/// Greedy embedding of the linked tree into `target` with `σ(u) = 1` and
/// `σ(v) = 2`.
///
/// The tree is walked breadth-first from `u`, children in id order; each
/// child is sent to the smallest-id neighbor of its parent's image not yet
/// used. Vertices outside the tree are matched to the unused target ids in
/// increasing order.
pub fn embed(forest: &QueryForest, target: &BridgeArtifact, u: Vertex, v: Vertex) -> Result<EmbeddingResult> {
    let g = &target.graph;
    let n = g.n();
    if EdgeKey::new(u, v)? != forest.transcript.input_edge {
        return Err(Error::Precondition(format!("({u},{v}) is not the recorded input edge")));
    }
    if !g.is_regular(3) || target.bridge != EdgeKey::ordered(1, 2) || !g.has_edge(1, 2) {
        return Err(Error::Precondition("target must be 3-regular with bridge (1,2)".into()));
    }
    if let Girth::Finite(gg) = target.girth {
        if forest.tree.len() >= gg {
            return Err(Error::Precondition(format!(
                "linked tree has {} edges, target girth is {gg}",
                forest.tree.len()
            )));
        }
    }
    if let Some(&big) = forest.tree.iter().map(|e| e.hi()).collect::<Vec<_>>().iter().max() {
        if big as usize > n {
            return Err(Error::Precondition(format!("tree vertex {big} outside the target's 1..={n}")));
        }
    }
    if forest.max_tree_degree() > 3 {
        return Err(Error::Precondition("linked tree has a vertex of degree > 3".into()));
    }

    let adj = forest.tree_adjacency();
    let mut sigma: BTreeMap<Vertex, Vertex> = BTreeMap::from([(u, 1), (v, 2)]);
    let mut used: BTreeSet<Vertex> = BTreeSet::from([1, 2]);
    let mut queue = VecDeque::from([u]);
    let mut visited = BTreeSet::from([u]);
    while let Some(p) = queue.pop_front() {
        for &c in adj.get(&p).map_or(&[][..], Vec::as_slice) {
            if !visited.insert(c) {
                continue;
            }
            queue.push_back(c);
            if c == v {
                continue;
            }
            let image = sigma[&p];
            let mut free: Vec<Vertex> = g.neighbors(image).iter().copied().filter(|w| !used.contains(w)).collect();
            free.sort_unstable();
            let Some(&w) = free.first() else {
                return Err(Error::EmbeddingFailed(format!(
                    "no unused neighbor of σ({p}) = {image} for child {c}; tree {:?}; partial σ {:?}",
                    forest.tree, sigma
                )));
            };
            sigma.insert(c, w);
            used.insert(w);
        }
    }

    let mut spare = (1..=n as Vertex).filter(|w| !used.contains(w));
    let sigma: Vec<Vertex> = (1..=n as Vertex)
        .map(|a| sigma.get(&a).copied().unwrap_or_else(|| spare.next().expect("counts match")))
        .collect();

    let mut order_constraints = BTreeMap::new();
    for e in &forest.transcript.entries {
        if let Some(y) = e.answer {
            if let Some(prev) = order_constraints.insert((e.vertex, e.slot), y) {
                if prev != y {
                    return Err(Error::Internal(format!("slot ({}, {}) answered {prev} and {y}", e.vertex, e.slot)));
                }
            }
        }
    }
    let result = EmbeddingResult { sigma, order_constraints, replay_ok: false, bridge_hit: false };
    let bridge_hit = result.sigma_of(u) == 1 && result.sigma_of(v) == 2;
    Ok(EmbeddingResult { bridge_hit, ..result })
}

/// `σ(G)`: `a ~ b` iff `σ(a) ~ σ(b)` in `g`. Slot orders honor the
/// constraints and are otherwise by increasing id; they are not copied
/// from `g`.
pub fn apply_sigma(g: &Graph, r: &EmbeddingResult) -> Result<Graph> {
    if r.sigma.len() != g.n() || !r.is_permutation() {
        return Err(Error::Precondition("σ is not a permutation of the target's vertices".into()));
    }
    let inv = r.inverse();
    let mut lists = Vec::with_capacity(g.n());
    for a in 1..=g.n() as Vertex {
        let mut free: Vec<Vertex> = g.neighbors(r.sigma_of(a)).iter().map(|&w| inv[idx(w)]).collect();
        free.sort_unstable();
        let mut slots = vec![None; free.len()];
        for (&(x, i), &y) in r.order_constraints.range((a, 0)..=(a, usize::MAX)) {
            debug_assert_eq!(x, a);
            let pos = free.iter().position(|&z| z == y);
            match (pos, slots.get(i.wrapping_sub(1))) {
                (Some(p), Some(None)) => {
                    free.remove(p);
                    slots[i - 1] = Some(y);
                }
                _ => {
                    return Err(Error::Internal(format!("constraint: slot {i} of {a} = {y} cannot be honored")));
                }
            }
        }
        let mut rest = free.into_iter();
        lists.push(slots.into_iter().map(|s| s.unwrap_or_else(|| rest.next().expect("counts match"))).collect());
    }
    Graph::from_adjacency(g.d_max(), lists)
}

/// Reruns `alg` on `sigma_g` and compares transcript and answer with the
/// recorded ones.
pub fn replay_verify<A: LocalAlgorithm + ?Sized>(
    alg: &A,
    sigma_g: &Graph,
    edge: EdgeKey,
    expected: &Transcript,
    expected_answer: Answer,
) -> Result<bool> {
    let (answer, transcript) = record(alg, sigma_g, edge)?;
    Ok(answer == expected_answer && &transcript == expected)
}

/// Everything one pipeline run produced.
#[derive(Clone, Debug)]
pub struct PipelineRun {
    pub edge: EdgeKey,
    pub answer: Answer,
    pub forest: QueryForest,
    pub embedding: EmbeddingResult,
    pub sigma_graph: Graph,
    /// Whether `edge` is a bridge of `σ(G)`.
    pub edge_is_bridge: bool,
}

impl PipelineRun {
    /// Replay matched, the edge sits on the bridge and the answer is YES.
    pub fn indistinguishable(&self) -> bool {
        self.embedding.replay_ok && self.embedding.bridge_hit && self.answer.is_yes()
    }
}

/// record → build_linked_tree → embed → apply_sigma → replay_verify for
/// `edge` of `hidden`, with `u = edge.lo()` and `v = edge.hi()`.
pub fn run_pipeline<A: LocalAlgorithm + ?Sized>(
    alg: &A,
    hidden: &Graph,
    target: &BridgeArtifact,
    edge: EdgeKey,
) -> Result<PipelineRun> {
    if hidden.n() != target.graph.n() {
        return Err(Error::Precondition(format!(
            "hidden graph has {} vertices, target {}",
            hidden.n(),
            target.graph.n()
        )));
    }
    let (answer, transcript) = record(alg, hidden, edge)?;
    let forest = build_linked_tree(&transcript)?;
    let mut embedding = embed(&forest, target, edge.lo(), edge.hi())?;
    let sigma_graph = apply_sigma(&target.graph, &embedding)?;
    embedding.replay_ok = replay_verify(alg, &sigma_graph, edge, &transcript, answer)?;
    let edge_is_bridge = sigma_graph.bridges().contains(&edge);
    Ok(PipelineRun { edge, answer, forest, embedding, sigma_graph, edge_is_bridge })
}
