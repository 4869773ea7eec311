//! Recursive sparse-cut decomposition: cut every component larger than
//! `k_stop` along a balanced sparse cut and recurse on both sides.

use std::fmt;
use std::str::FromStr;

use super::budget::{BudgetFns, MIN_STOP};
use super::cut::{cut_of, CutMethod, CutStrategy};
use crate::error::{domain, Error, Result};
use crate::exec::Execution;
use crate::graph::{EdgeKey, Graph, Vertex};

#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct DecomposeOptions {
    pub strategy: CutStrategy,
    /// The caller asserts the input is `f`-non-expanding for the `C` passed
    /// to [`decompose_with`]; the removal count is then checked against β.
    pub claim_non_expanding: bool,
    pub exec: Execution,
}

/// One recursion node that was split.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CutRecord {
    pub node_size: usize,
    pub node_min: Vertex,
    pub side_size: usize,
    pub cut_edges: usize,
    pub method: CutMethod,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Decomposition {
    /// The removal set, node by node with the smaller side explored first.
    pub removed: Vec<EdgeKey>,
    /// Components of the graph without `removed`, sorted, by smallest member.
    pub components: Vec<Vec<Vertex>>,
    pub k_stop: usize,
    /// β(n) when defined for `(n, k_stop)`.
    pub budget: Option<f64>,
    pub cuts: Vec<CutRecord>,
}

impl Decomposition {
    /// Recomputes the components of `g` minus `removed` from scratch and
    /// checks them against `components` and the size limit.
    pub fn verify(&self, g: &Graph) -> Result<()> {
        let fresh = g.without_edges(&self.removed).components();
        if fresh != self.components {
            return Err(Error::Internal("removal set does not induce the reported components".into()));
        }
        if let Some(c) = fresh.iter().find(|c| c.len() > self.k_stop) {
            return Err(Error::Internal(format!("component of size {} > k_stop {}", c.len(), self.k_stop)));
        }
        Ok(())
    }
}

impl fmt::Display for Decomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "removed {}", self.removed.len())?;
        for e in &self.removed {
            writeln!(f, "{} {}", e.lo(), e.hi())?;
        }
        writeln!(f, "components {}", self.components.len())?;
        for c in &self.components {
            let line: Vec<String> = c.iter().map(u32::to_string).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

/// The removal set and components read back from the text form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionFile {
    pub removed: Vec<EdgeKey>,
    pub components: Vec<Vec<Vertex>>,
}

impl FromStr for DecompositionFile {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let perr = |line: usize, message: String| Error::Parse { line, message };
        let lines: Vec<&str> = text.lines().collect();
        let count = |line: usize, key: &str| -> Result<usize> {
            let l = lines.get(line - 1).ok_or_else(|| perr(line, format!("missing `{key} <count>`")))?;
            l.strip_prefix(key)
                .and_then(|r| r.strip_prefix(' '))
                .and_then(|r| r.parse().ok())
                .ok_or_else(|| perr(line, format!("expected `{key} <count>`, got {l:?}")))
        };
        let verts = |line: usize| -> Result<Vec<Vertex>> {
            let l = lines.get(line - 1).ok_or_else(|| perr(line, "unexpected end of file".into()))?;
            l.split(' ')
                .filter(|t| !t.is_empty())
                .map(|t| t.parse().map_err(|_| perr(line, format!("bad vertex {t:?}"))))
                .collect()
        };
        let m = count(1, "removed")?;
        let mut removed = Vec::with_capacity(m);
        for line in 2..2 + m {
            match verts(line)?.as_slice() {
                &[u, v] => removed.push(EdgeKey::new(u, v).map_err(|e| perr(line, e.to_string()))?),
                _ => return Err(perr(line, "expected `u v`".into())),
            }
        }
        let c = count(2 + m, "components")?;
        let components = (3 + m..3 + m + c).map(verts).collect::<Result<_>>()?;
        Ok(Self { removed, components })
    }
}

/// Decomposes with default options (exhaustive cuts up to 24 vertices,
/// sweep cuts above).
pub fn decompose(g: &Graph, k_stop: usize, c: f64) -> Result<Decomposition> {
    decompose_with(g, k_stop, c, &DecomposeOptions::default())
}

pub fn decompose_with(g: &Graph, k_stop: usize, c: f64, opts: &DecomposeOptions) -> Result<Decomposition> {
    if k_stop == 0 {
        return domain("k_stop must be at least 1");
    }
    let fns = BudgetFns::new(c)?;
    let all: Vec<Vertex> = g.vertices().collect();
    let mut node = solve(g, all, k_stop, opts)?;
    node.components.sort_unstable_by_key(|c| c[0]);
    let n = g.n();
    let budget = fns.beta(n, k_stop).ok();
    if opts.claim_non_expanding && k_stop >= MIN_STOP && n >= k_stop {
        let beta = budget.expect("in domain");
        if node.removed.len() as f64 > beta {
            return Err(Error::BudgetExceeded { removed: node.removed.len(), budget: beta });
        }
    }
    Ok(Decomposition { removed: node.removed, components: node.components, k_stop, budget, cuts: node.cuts })
}

#[derive(Default)]
struct Node {
    removed: Vec<EdgeKey>,
    components: Vec<Vec<Vertex>>,
    cuts: Vec<CutRecord>,
}

impl Node {
    fn append(&mut self, other: Node) {
        self.removed.extend(other.removed);
        self.components.extend(other.components);
        self.cuts.extend(other.cuts);
    }
}

fn solve(g: &Graph, members: Vec<Vertex>, k_stop: usize, opts: &DecomposeOptions) -> Result<Node> {
    let pieces = induced_components(g, &members);
    if pieces.len() > 1 {
        let mut out = Node::default();
        for piece in pieces {
            out.append(solve(g, piece, k_stop, opts)?);
        }
        return Ok(out);
    }
    if members.len() <= k_stop {
        return Ok(Node { components: vec![members], ..Node::default() });
    }
    let cut = cut_of(g, &members, opts.strategy, opts.exec)
        .map_err(|e| Error::Decomposition { node: members.clone(), source: Box::new(e) })?;
    let rest: Vec<Vertex> = members.iter().copied().filter(|&v| !cut.side.contains(v)).collect();
    let side = cut.side.members().to_vec();
    let record = CutRecord {
        node_size: members.len(),
        node_min: members[0],
        side_size: side.len(),
        cut_edges: cut.edges.len(),
        method: cut.method,
    };
    // side has at most half the vertices, so it goes first
    let (a, b) = opts.exec.join(|| solve(g, side, k_stop, opts), || solve(g, rest, k_stop, opts));
    let mut out = Node { removed: cut.edges, components: Vec::new(), cuts: vec![record] };
    out.append(a?);
    out.append(b?);
    Ok(out)
}

/// Components of the subgraph induced by sorted `members`.
fn induced_components(g: &Graph, members: &[Vertex]) -> Vec<Vec<Vertex>> {
    let h = g.induced(members).expect("members are vertices of g");
    h.components()
        .into_iter()
        .map(|c| c.into_iter().map(|l| members[l as usize - 1]).collect())
        .collect()
}
