//! Exact edge expansion by exhaustive subset enumeration.
//!
//! Subsets are bitmasks over a local index space (members sorted by id, so
//! lexicographic order on member lists is "lowest differing bit wins").
//! Enumeration walks a Gray code, updating the boundary size in O(1) per
//! step, and is split into independent chunks for parallel evaluation.

use std::cmp::Ordering;
use std::ops::RangeInclusive;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::FromPrimitive;

use super::{idx, EdgeKey, Graph, Vertex, VertexSubset};
use crate::error::{domain, Error, Result};
use crate::exec::Execution;

pub const EXPANSION_CAP: usize = 24;
pub const NON_EXPANSION_CAP: usize = 16;
const MASK_BITS: usize = 63;
const CHUNK_BITS: usize = 12;

pub type Ratio = num_rational::Ratio<u64>;

/// Candidate cut: `boundary / size` with the member mask for tie-breaking.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CutScore {
    pub boundary: u64,
    pub size: u32,
    pub mask: u64,
}

impl CutScore {
    pub fn ratio(&self) -> Ratio {
        Ratio::new(self.boundary, self.size as u64)
    }

    /// Strict total order: smaller ratio, then smaller set, then
    /// lexicographically smaller member list.
    pub fn better_than(&self, other: &CutScore) -> bool {
        let lhs = self.boundary as u128 * other.size as u128;
        let rhs = other.boundary as u128 * self.size as u128;
        match lhs.cmp(&rhs) {
            Ordering::Less => true,
            Ordering::Greater => false,
            Ordering::Equal => match self.size.cmp(&other.size) {
                Ordering::Less => true,
                Ordering::Greater => false,
                Ordering::Equal => lex_less(self.mask, other.mask),
            },
        }
    }
}

/// Lexicographic comparison of two equal-size member sets.
fn lex_less(a: u64, b: u64) -> bool {
    let diff = a ^ b;
    diff != 0 && a & (diff & diff.wrapping_neg()) != 0
}

/// Adjacency bitmasks of an induced subgraph in local indices.
#[derive(Clone, Debug)]
pub struct LocalMasks {
    members: Vec<Vertex>,
    adj: Vec<u64>,
}

impl LocalMasks {
    pub fn new(g: &Graph, members: &[Vertex]) -> Result<Self> {
        let mut members = members.to_vec();
        members.sort_unstable();
        members.dedup();
        if members.len() > MASK_BITS {
            return Err(Error::ExhaustiveOnly { what: "bitmask enumeration", n: members.len(), cap: MASK_BITS });
        }
        let mut local = vec![usize::MAX; g.n()];
        for (i, &v) in members.iter().enumerate() {
            if !g.contains(v) {
                return domain(format!("vertex {v} not in graph"));
            }
            local[idx(v)] = i;
        }
        let adj = members
            .iter()
            .map(|&v| {
                g.neighbors(v)
                    .iter()
                    .map(|&u| local[idx(u)])
                    .filter(|&l| l != usize::MAX)
                    .fold(0u64, |m, l| m | 1 << l)
            })
            .collect();
        Ok(Self { members, adj })
    }

    pub fn full(g: &Graph) -> Result<Self> {
        Self::new(g, &g.vertices().collect::<Vec<_>>())
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn all(&self) -> u64 {
        low_bits(self.len())
    }

    pub fn members(&self) -> &[Vertex] {
        &self.members
    }

    pub fn to_vertices(&self, set: u64) -> Vec<Vertex> {
        bits(set).map(|i| self.members[i]).collect()
    }

    /// Number of edges of the subgraph induced by `universe` with exactly one
    /// endpoint in `set ⊆ universe`.
    pub fn boundary(&self, set: u64, universe: u64) -> u64 {
        bits(set).map(|i| (self.adj[i] & universe & !set).count_ones() as u64).sum()
    }

    pub fn is_connected(&self, set: u64) -> bool {
        if set == 0 {
            return false;
        }
        let mut reached = set & set.wrapping_neg();
        let mut frontier = reached;
        while frontier != 0 {
            let mut next = 0;
            for i in bits(frontier) {
                next |= self.adj[i];
            }
            next &= set & !reached;
            reached |= next;
            frontier = next;
        }
        reached == set
    }

    /// Best cut `S ⊆ universe` with `|S|` in `sizes`, boundary measured in
    /// the subgraph induced by `universe`.
    pub fn min_cut(&self, universe: u64, sizes: RangeInclusive<usize>, exec: Execution) -> Option<CutScore> {
        let positions: Vec<usize> = bits(universe).collect();
        let m = positions.len();
        if sizes.is_empty() || *sizes.start() > m {
            return None;
        }
        let degrees: Vec<u64> = self.adj.iter().map(|a| (a & universe).count_ones() as u64).collect();
        let chunk_bits = m.min(CHUNK_BITS);
        let chunks = 1usize << (m - chunk_bits);
        let scan = |chunk: usize| {
            let start = (chunk as u64) << chunk_bits;
            let end = start + (1u64 << chunk_bits);
            let mut set = expand(gray(start), &positions);
            let mut size = set.count_ones() as usize;
            let mut boundary = self.boundary(set, universe);
            let mut best: Option<CutScore> = None;
            let mut i = start;
            loop {
                if sizes.contains(&size) {
                    let cand = CutScore { boundary, size: size as u32, mask: set };
                    if best.is_none_or(|b| cand.better_than(&b)) {
                        best = Some(cand);
                    }
                }
                i += 1;
                if i == end {
                    break;
                }
                let v = positions[i.trailing_zeros() as usize];
                let bit = 1u64 << v;
                if set & bit == 0 {
                    boundary = boundary + degrees[v] - 2 * (self.adj[v] & set).count_ones() as u64;
                    set |= bit;
                    size += 1;
                } else {
                    set &= !bit;
                    boundary = boundary + 2 * (self.adj[v] & set).count_ones() as u64 - degrees[v];
                    size -= 1;
                }
            }
            best
        };
        exec.min_range(0..chunks, scan, CutScore::better_than)
    }
}

fn low_bits(m: usize) -> u64 {
    if m >= 64 {
        u64::MAX
    } else {
        (1u64 << m) - 1
    }
}

fn gray(i: u64) -> u64 {
    i ^ (i >> 1)
}

fn expand(index_set: u64, positions: &[usize]) -> u64 {
    bits(index_set).fold(0, |m, j| m | 1 << positions[j])
}

fn bits(mut set: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if set == 0 {
            return None;
        }
        let i = set.trailing_zeros() as usize;
        set &= set - 1;
        Some(i)
    })
}

/// Edges with exactly one endpoint in `s`, in rank order.
pub fn edge_boundary(g: &Graph, s: &VertexSubset) -> Result<Vec<EdgeKey>> {
    if s.is_empty() || s.len() == g.n() {
        return domain("edge boundary needs a nonempty proper subset");
    }
    let mut out: Vec<EdgeKey> = s
        .members()
        .iter()
        .flat_map(|&v| g.neighbors(v).iter().filter(|&&u| !s.contains(u)).map(move |&u| EdgeKey::ordered(u, v)))
        .collect();
    out.sort_unstable();
    Ok(out)
}

/// `φ_G` with a minimizing cut.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expansion {
    pub ratio: Ratio,
    pub boundary: u64,
    pub cut: VertexSubset,
}

pub fn expansion(g: &Graph) -> Result<Expansion> {
    expansion_with(g, EXPANSION_CAP, Execution::default())
}

pub fn expansion_with(g: &Graph, cap: usize, exec: Execution) -> Result<Expansion> {
    let n = g.n();
    if n < 2 {
        return domain("expansion needs at least two vertices");
    }
    if n > cap {
        return Err(Error::ExhaustiveOnly { what: "expansion", n, cap });
    }
    let masks = LocalMasks::full(g)?;
    let best = masks
        .min_cut(masks.all(), 1..=n / 2, exec)
        .ok_or_else(|| Error::Internal("no eligible subset".into()))?;
    Ok(Expansion {
        ratio: best.ratio(),
        boundary: best.boundary,
        cut: VertexSubset::from_sorted(masks.to_vertices(best.mask)),
    })
}

/// True iff `ratio > bound`, comparing against the exact value of the `f64`.
/// NaN bounds are never satisfied; `+inf` always is.
pub fn exceeds_bound(ratio: Ratio, bound: f64) -> bool {
    if bound.is_nan() {
        return true;
    }
    if bound.is_infinite() {
        return bound < 0.0;
    }
    let exact = BigRational::from_f64(bound).expect("finite");
    let r = BigRational::new(BigInt::from(*ratio.numer()), BigInt::from(*ratio.denom()));
    r > exact
}

/// A `t`-vertex induced subgraph whose expansion beats the bound `f(t)`.
#[derive(Clone, Debug, PartialEq)]
pub struct ExpansionWitness {
    pub subgraph_vertices: VertexSubset,
    pub cut: VertexSubset,
    pub ratio: Ratio,
    pub bound: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub enum NonExpansion {
    Pass,
    Fail(ExpansionWitness),
}

impl NonExpansion {
    pub fn passed(&self) -> bool {
        matches!(self, NonExpansion::Pass)
    }
}

/// Decides whether every subgraph on `t > 2` vertices has `φ ≤ f(t)`.
///
/// Only connected induced subgraphs are examined: deleting edges at a fixed
/// vertex set cannot increase any boundary, and disconnected subgraphs have
/// `φ = 0`. The reported witness is the violating vertex set with the most
/// vertices, ties broken lexicographically.
pub fn check_non_expanding<F>(g: &Graph, f: F) -> Result<NonExpansion>
where
    F: Fn(usize) -> f64 + Sync,
{
    check_non_expanding_with(g, f, NON_EXPANSION_CAP, Execution::default())
}

pub fn check_non_expanding_with<F>(g: &Graph, f: F, cap: usize, exec: Execution) -> Result<NonExpansion>
where
    F: Fn(usize) -> f64 + Sync,
{
    let n = g.n();
    if n > cap {
        return Err(Error::ExhaustiveOnly { what: "non-expansion check", n, cap });
    }
    let masks = LocalMasks::full(g)?;
    let bounds: Vec<f64> = (0..=n).map(|t| if t > 2 { f(t) } else { f64::INFINITY }).collect();
    let chunk_bits = n.min(CHUNK_BITS);
    let chunks = 1usize << (n - chunk_bits);

    // (t, W, cut) ordered: larger t first, then lexicographically smaller W.
    let first = |a: &(u64, CutScore), b: &(u64, CutScore)| {
        let (ta, tb) = (a.0.count_ones(), b.0.count_ones());
        ta > tb || (ta == tb && lex_less(a.0, b.0))
    };
    let scan = |chunk: usize| {
        let start = (chunk as u64) << chunk_bits;
        let mut found: Option<(u64, CutScore)> = None;
        for w in start..start + (1u64 << chunk_bits) {
            let t = w.count_ones() as usize;
            if t <= 2 || !masks.is_connected(w) {
                continue;
            }
            if let Some((fw, _)) = &found {
                let ft = fw.count_ones() as usize;
                if ft > t || (ft == t && lex_less(*fw, w)) {
                    continue;
                }
            }
            let phi = masks
                .min_cut(w, 1..=t / 2, Execution::Sequential)
                .expect("t > 2 has eligible cuts");
            if exceeds_bound(phi.ratio(), bounds[t]) {
                found = Some((w, phi));
            }
        }
        found
    };
    Ok(match exec.min_range(0..chunks, scan, first) {
        None => NonExpansion::Pass,
        Some((w, cut)) => NonExpansion::Fail(ExpansionWitness {
            subgraph_vertices: VertexSubset::from_sorted(masks.to_vertices(w)),
            cut: VertexSubset::from_sorted(masks.to_vertices(cut.mask)),
            ratio: cut.ratio(),
            bound: bounds[w.count_ones() as usize],
        }),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: usize, edges: &[(Vertex, Vertex)]) -> Graph {
        Graph::from_edges(n, edges.iter().copied()).unwrap()
    }

    fn k4() -> Graph {
        g(4, &[(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)])
    }

    fn subset(gr: &Graph, v: &[Vertex]) -> VertexSubset {
        VertexSubset::new(gr, v.iter().copied()).unwrap()
    }

    /// Straight enumeration of every eligible subset, no Gray code.
    fn brute_phi(gr: &Graph) -> Ratio {
        let n = gr.n();
        let mut best: Option<Ratio> = None;
        for mask in 1u64..(1 << n) {
            let s = mask.count_ones() as usize;
            if s > n / 2 {
                continue;
            }
            let members: Vec<Vertex> = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| i as Vertex + 1).collect();
            let b = edge_boundary(gr, &subset(gr, &members)).unwrap().len() as u64;
            let r = Ratio::new(b, s as u64);
            best = Some(best.map_or(r, |x| x.min(r)));
        }
        best.unwrap()
    }

    #[test]
    fn boundary_examples() {
        let p3 = g(3, &[(1, 2), (2, 3)]);
        assert_eq!(edge_boundary(&p3, &subset(&p3, &[1])).unwrap(), vec![EdgeKey::new(1, 2).unwrap()]);
        let c4 = g(4, &[(1, 2), (2, 3), (3, 4), (4, 1)]);
        assert_eq!(
            edge_boundary(&c4, &subset(&c4, &[1, 2])).unwrap(),
            vec![EdgeKey::new(1, 4).unwrap(), EdgeKey::new(2, 3).unwrap()]
        );
        let two = g(6, &[(1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (4, 6)]);
        assert!(edge_boundary(&two, &subset(&two, &[1, 2, 3])).unwrap().is_empty());
        assert!(edge_boundary(&two, &subset(&two, &[])).is_err());
        assert!(edge_boundary(&two, &subset(&two, &[1, 2, 3, 4, 5, 6])).is_err());
    }

    #[test]
    fn expansion_examples() {
        let two_edges = g(4, &[(1, 2), (3, 4)]);
        assert_eq!(expansion(&two_edges).unwrap().ratio, Ratio::from_integer(0));
        let c4 = g(4, &[(1, 2), (2, 3), (3, 4), (4, 1)]);
        let e = expansion(&c4).unwrap();
        assert_eq!(e.ratio, Ratio::from_integer(1));
        assert_eq!(e.cut.members(), &[1, 2]);
        let e = expansion(&k4()).unwrap();
        assert_eq!(e.ratio, Ratio::from_integer(2));
        assert_eq!(e.cut.members(), &[1, 2]);
        assert_eq!(brute_phi(&c4), Ratio::from_integer(1));
        assert_eq!(brute_phi(&k4()), Ratio::from_integer(2));
    }

    #[test]
    fn expansion_refuses_above_cap() {
        let big = Graph::from_edges(25, (1..25).map(|i| (i, i + 1))).unwrap();
        assert!(matches!(expansion(&big), Err(Error::ExhaustiveOnly { n: 25, cap: 24, .. })));
        assert_eq!(expansion_with(&big, 25, Execution::default()).unwrap().ratio, Ratio::new(1, 12));
    }

    #[test]
    fn gray_enumeration_matches_brute_force() {
        // 3x4 grid and a wheel-ish graph
        let grid = g(
            12,
            &[
                (1, 2), (2, 3), (3, 4), (5, 6), (6, 7), (7, 8), (9, 10), (10, 11), (11, 12),
                (1, 5), (2, 6), (3, 7), (4, 8), (5, 9), (6, 10), (7, 11), (8, 12),
            ],
        );
        assert_eq!(expansion(&grid).unwrap().ratio, brute_phi(&grid));
        let seq = expansion_with(&grid, 24, Execution::Sequential).unwrap();
        let par = expansion_with(&grid, 24, Execution::Parallel).unwrap();
        assert_eq!(seq, par);
    }

    #[test]
    fn lexicographic_tie_break() {
        assert!(lex_less(0b1001, 0b0110)); // {1,4} < {2,3}
        assert!(!lex_less(0b0110, 0b1001));
        assert!(!lex_less(0b11, 0b11));
    }

    #[test]
    fn exact_bound_comparison() {
        assert!(!exceeds_bound(Ratio::new(2, 1), 2.0));
        assert!(exceeds_bound(Ratio::new(1, 3), 0.3333333333333333));
        assert!(!exceeds_bound(Ratio::new(1, 3), 0.33333333333333337));
        assert!(!exceeds_bound(Ratio::new(5, 1), f64::INFINITY));
        assert!(exceeds_bound(Ratio::new(0, 1), -1.0));
        assert!(exceeds_bound(Ratio::new(0, 1), f64::NAN));
    }

    #[test]
    fn non_expansion_examples() {
        let p6 = g(6, &[(1, 2), (2, 3), (3, 4), (4, 5), (5, 6)]);
        // 2/(t-1) holds everywhere on a path
        assert!(check_non_expanding(&p6, |t| 2.0 / (t as f64 - 1.0)).unwrap().passed());
        // 2/t fails on odd subpaths (φ(P3) = 1 > 2/3), and already on the
        // whole path because the f64 nearest to 2/6 lies below 1/3
        match check_non_expanding(&p6, |t| 2.0 / t as f64).unwrap() {
            NonExpansion::Fail(w) => {
                assert_eq!(w.subgraph_vertices.len(), 6);
                assert_eq!(w.ratio, Ratio::new(1, 3));
                assert_eq!(w.cut.members(), &[1, 2, 3]);
            }
            NonExpansion::Pass => panic!("expected a witness"),
        }

        match check_non_expanding(&k4(), |t| 1.0 / (t as f64).log2()).unwrap() {
            NonExpansion::Fail(w) => {
                assert_eq!(w.subgraph_vertices.members(), &[1, 2, 3, 4]);
                assert_eq!(w.ratio, Ratio::from_integer(2));
                assert_eq!(w.bound, 0.5);
            }
            NonExpansion::Pass => panic!("expected a witness"),
        }

        let tri = g(3, &[(1, 2), (2, 3), (1, 3)]);
        assert!(!check_non_expanding(&tri, |_| 1.99).unwrap().passed());
        assert!(check_non_expanding(&tri, |_| 2.0).unwrap().passed());
    }

    #[test]
    fn non_expansion_refuses_above_cap() {
        let big = Graph::from_edges(17, (1..17).map(|i| (i, i + 1))).unwrap();
        assert!(matches!(
            check_non_expanding(&big, |_| 1.0),
            Err(Error::ExhaustiveOnly { cap: 16, .. })
        ));
    }
}
