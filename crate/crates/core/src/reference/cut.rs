//! Balanced sparse cuts: the sparsest `S` with `n/3 ≤ |S| ≤ n/2`.

use std::cmp::Ordering;
use std::collections::VecDeque;
use std::fmt;

use crate::error::{domain, Error, Result};
use crate::exec::Execution;
use crate::graph::{idx, EdgeKey, Graph, LocalMasks, Ratio, Vertex, VertexSubset, EXPANSION_CAP};

/// Size window `⌈m/3⌉..=⌊m/2⌋`.
pub fn window(m: usize) -> (usize, usize) {
    (m.div_ceil(3), m / 2)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CutMethod {
    /// Exact minimizer over every subset in the window.
    Exhaustive,
    /// Best BFS sweep prefix followed by single-vertex and swap refinement.
    Sweep,
}

impl fmt::Display for CutMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CutMethod::Exhaustive => "exhaustive",
            CutMethod::Sweep => "sweep",
        })
    }
}

/// How cuts are found for a vertex set of size `m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CutStrategy {
    /// Exhaustive up to `cap`, refuse above.
    Exhaustive { cap: usize },
    /// Exhaustive up to `cap`, sweep above.
    Auto { cap: usize },
}

impl Default for CutStrategy {
    fn default() -> Self {
        CutStrategy::Auto { cap: EXPANSION_CAP }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BalancedCut {
    pub side: VertexSubset,
    /// Cut edges, in rank order.
    pub edges: Vec<EdgeKey>,
    pub method: CutMethod,
}

impl BalancedCut {
    pub fn ratio(&self) -> Ratio {
        Ratio::new(self.edges.len() as u64, self.side.len() as u64)
    }

    /// Whether the ratio is at most `2 f(n/3)` for an `n`-vertex host.
    pub fn within_bound<F: Fn(f64) -> f64>(&self, n: usize, f: F) -> bool {
        let bound = 2.0 * f(n as f64 / 3.0);
        !crate::graph::exceeds_bound(self.ratio(), bound)
    }
}

/// Exact balanced sparse cut of the whole graph (`n ≤ 24`).
pub fn balanced_sparse_cut(g: &Graph) -> Result<BalancedCut> {
    let members: Vec<Vertex> = g.vertices().collect();
    cut_of(g, &members, CutStrategy::Exhaustive { cap: EXPANSION_CAP }, Execution::default())
}

/// Balanced sparse cut of the subgraph induced by `members` (sorted).
pub fn cut_of(g: &Graph, members: &[Vertex], strategy: CutStrategy, exec: Execution) -> Result<BalancedCut> {
    let m = members.len();
    if m < 2 {
        return domain("a balanced cut needs at least two vertices");
    }
    let (exhaustive, cap) = match strategy {
        CutStrategy::Exhaustive { cap } => (m <= cap, Some(cap)),
        CutStrategy::Auto { cap } => (m <= cap, None),
    };
    let side = if exhaustive {
        let masks = LocalMasks::new(g, members)?;
        let (lo, hi) = window(m);
        let best = masks
            .min_cut(masks.all(), lo..=hi, exec)
            .ok_or_else(|| Error::Internal("empty cut window".into()))?;
        masks.to_vertices(best.mask)
    } else if let Some(cap) = cap {
        return Err(Error::ExhaustiveOnly { what: "balanced sparse cut", n: m, cap });
    } else {
        sweep_cut(g, members, exec)
    };
    let side = VertexSubset::from_sorted(side);
    let mut inside = vec![false; g.n()];
    for &v in members {
        inside[idx(v)] = true;
    }
    let mut edges: Vec<EdgeKey> = side
        .members()
        .iter()
        .flat_map(|&v| {
            g.neighbors(v)
                .iter()
                .filter(|&&u| inside[idx(u)] && !side.contains(u))
                .map(move |&u| EdgeKey::ordered(u, v))
        })
        .collect();
    edges.sort_unstable();
    let method = if exhaustive { CutMethod::Exhaustive } else { CutMethod::Sweep };
    Ok(BalancedCut { side, edges, method })
}

struct Local {
    adj: Vec<Vec<usize>>,
}

#[derive(Clone, Debug)]
struct Candidate {
    boundary: u64,
    members: Vec<usize>,
}

impl Candidate {
    fn better_than(&self, other: &Candidate) -> bool {
        let lhs = self.boundary as u128 * other.members.len() as u128;
        let rhs = other.boundary as u128 * self.members.len() as u128;
        match lhs.cmp(&rhs) {
            Ordering::Less => true,
            Ordering::Greater => false,
            Ordering::Equal => match self.members.len().cmp(&other.members.len()) {
                Ordering::Less => true,
                Ordering::Greater => false,
                Ordering::Equal => self.members < other.members,
            },
        }
    }
}

fn sweep_cut(g: &Graph, members: &[Vertex], exec: Execution) -> Vec<Vertex> {
    let m = members.len();
    let mut local_id = vec![usize::MAX; g.n()];
    for (i, &v) in members.iter().enumerate() {
        local_id[idx(v)] = i;
    }
    let local = Local {
        adj: members
            .iter()
            .map(|&v| {
                let mut l: Vec<usize> =
                    g.neighbors(v).iter().map(|&u| local_id[idx(u)]).filter(|&l| l != usize::MAX).collect();
                l.sort_unstable();
                l
            })
            .collect(),
    };
    let (lo, hi) = window(m);
    let seed = exec
        .min_range(0..m, |s| Some(local.best_prefix(s, lo, hi)), Candidate::better_than)
        .expect("m >= 2");
    let refined = local.refine(seed, lo, hi);
    refined.members.iter().map(|&i| members[i]).collect()
}

impl Local {
    /// Best prefix of the BFS order from `start` (restarting at the smallest
    /// unvisited index if the graph is disconnected).
    fn best_prefix(&self, start: usize, lo: usize, hi: usize) -> Candidate {
        let m = self.adj.len();
        let mut seen = vec![false; m];
        let mut inside = vec![false; m];
        let mut order = Vec::with_capacity(hi);
        let mut boundary: u64 = 0;
        let mut best: Option<(u64, usize)> = None;
        let mut queue = VecDeque::from([start]);
        seen[start] = true;
        let mut next_root = 0;
        while order.len() < hi {
            let v = match queue.pop_front() {
                Some(v) => v,
                None => {
                    while seen[next_root] {
                        next_root += 1;
                    }
                    seen[next_root] = true;
                    next_root
                }
            };
            let in_nbrs = self.adj[v].iter().filter(|&&u| inside[u]).count() as u64;
            boundary = boundary + self.adj[v].len() as u64 - 2 * in_nbrs;
            inside[v] = true;
            order.push(v);
            let size = order.len();
            if size >= lo {
                let better = match best {
                    None => true,
                    Some((b, s)) => (boundary as u128 * s as u128) < (b as u128 * size as u128),
                };
                if better {
                    best = Some((boundary, size));
                }
            }
            for &u in &self.adj[v] {
                if !seen[u] {
                    seen[u] = true;
                    queue.push_back(u);
                }
            }
        }
        let (boundary, size) = best.expect("window is nonempty");
        let mut members = order[..size].to_vec();
        members.sort_unstable();
        Candidate { boundary, members }
    }

    fn boundary_delta_add(&self, inside: &[bool], v: usize) -> i64 {
        let d = self.adj[v].len() as i64;
        let in_nbrs = self.adj[v].iter().filter(|&&u| inside[u]).count() as i64;
        d - 2 * in_nbrs
    }

    /// Greedy improvement by single moves and swaps until a local optimum.
    fn refine(&self, start: Candidate, lo: usize, hi: usize) -> Candidate {
        let m = self.adj.len();
        let mut inside = vec![false; m];
        for &v in &start.members {
            inside[v] = true;
        }
        let mut best = start;
        let snapshot = |inside: &[bool], boundary: i64| Candidate {
            boundary: boundary as u64,
            members: (0..m).filter(|&i| inside[i]).collect(),
        };
        loop {
            let size = best.members.len();
            let boundary = best.boundary as i64;
            let mut improved: Option<Candidate> = None;
            // single moves
            for v in 0..m {
                let new_size = if inside[v] { size - 1 } else { size + 1 };
                if new_size < lo || new_size > hi {
                    continue;
                }
                let delta = if inside[v] {
                    inside[v] = false;
                    -self.boundary_delta_add(&inside, v)
                } else {
                    let d = self.boundary_delta_add(&inside, v);
                    inside[v] = true;
                    d
                };
                let cand = snapshot(&inside, boundary + delta);
                inside[v] = !inside[v];
                if cand.better_than(improved.as_ref().unwrap_or(&best)) {
                    improved = Some(cand);
                }
            }
            // swaps
            if improved.is_none() {
                let (ins, outs): (Vec<usize>, Vec<usize>) = (0..m).partition(|&v| inside[v]);
                for &a in &ins {
                    for &b in &outs {
                        inside[a] = false;
                        let da = -self.boundary_delta_add(&inside, a);
                        let db = self.boundary_delta_add(&inside, b);
                        inside[b] = true;
                        let cand = snapshot(&inside, boundary + da + db);
                        inside[a] = true;
                        inside[b] = false;
                        if cand.better_than(improved.as_ref().unwrap_or(&best)) {
                            improved = Some(cand);
                        }
                    }
                }
            }
            match improved {
                Some(c) if c.better_than(&best) => {
                    inside.iter_mut().for_each(|x| *x = false);
                    for &v in &c.members {
                        inside[v] = true;
                    }
                    best = c;
                }
                _ => return best,
            }
        }
    }
}
