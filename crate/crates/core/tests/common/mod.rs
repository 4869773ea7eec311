//! Independent brute-force oracles shared by the integration tests. None of
//! them call the analyzers they are used to check.

#![allow(dead_code)]

use std::collections::{BTreeSet, VecDeque};

use lssg_core::constructions::{generate, random_regular, Family, DEFAULT_ATTEMPTS};
use lssg_core::{EdgeKey, Graph, Vertex};

pub fn key(a: Vertex, b: Vertex) -> EdgeKey {
    EdgeKey::new(a, b).unwrap()
}

/// All edges as sorted `(lo, hi)` pairs, read straight from the lists.
pub fn edge_pairs(g: &Graph) -> Vec<(Vertex, Vertex)> {
    let mut out = Vec::new();
    for v in g.vertices() {
        for &u in g.neighbors(v) {
            if v < u {
                out.push((v, u));
            }
        }
    }
    out.sort_unstable();
    out
}

/// Vertices reachable from `src` using only the edges `keep` accepts.
pub fn reach(g: &Graph, src: Vertex, keep: impl Fn(Vertex, Vertex) -> bool) -> BTreeSet<Vertex> {
    let mut seen = BTreeSet::from([src]);
    let mut queue = VecDeque::from([src]);
    while let Some(v) = queue.pop_front() {
        for &u in g.neighbors(v) {
            if keep(v, u) && seen.insert(u) {
                queue.push_back(u);
            }
        }
    }
    seen
}

/// Global rank-Kruskal: scan edges in `(lo, hi)` order, keep an edge iff it
/// joins two different label classes; classes merge by relabeling.
pub fn kruskal_oracle(g: &Graph) -> Vec<(Vertex, Vertex)> {
    let mut label: Vec<usize> = (0..=g.n()).collect();
    let mut kept = Vec::new();
    for (a, b) in edge_pairs(g) {
        let (la, lb) = (label[a as usize], label[b as usize]);
        if la != lb {
            for l in label.iter_mut() {
                if *l == lb {
                    *l = la;
                }
            }
            kept.push((a, b));
        }
    }
    kept
}

/// Shortest cycle: for every edge, shortest detour between its endpoints.
pub fn girth_oracle(g: &Graph) -> Option<usize> {
    let mut best: Option<usize> = None;
    for (a, b) in edge_pairs(g) {
        let mut dist = vec![usize::MAX; g.n() + 1];
        dist[a as usize] = 0;
        let mut queue = VecDeque::from([a]);
        while let Some(v) = queue.pop_front() {
            for &u in g.neighbors(v) {
                if (v, u) == (a, b) || (v, u) == (b, a) {
                    continue;
                }
                if dist[u as usize] == usize::MAX {
                    dist[u as usize] = dist[v as usize] + 1;
                    queue.push_back(u);
                }
            }
        }
        if dist[b as usize] != usize::MAX {
            let c = dist[b as usize] + 1;
            best = Some(best.map_or(c, |x| x.min(c)));
        }
    }
    best
}

/// Edges whose removal disconnects their endpoints.
pub fn bridges_oracle(g: &Graph) -> Vec<(Vertex, Vertex)> {
    edge_pairs(g)
        .into_iter()
        .filter(|&(a, b)| !reach(g, a, |x, y| (x, y) != (a, b) && (x, y) != (b, a)).contains(&b))
        .collect()
}

pub fn is_connected_oracle(g: &Graph) -> bool {
    reach(g, 1, |_, _| true).len() == g.n()
}

/// Connected test graphs across the families, labeled by name.
pub fn corpus() -> Vec<(String, Graph)> {
    let mut out = Vec::new();
    let mut add = |f: Family| {
        let g = generate(&f).unwrap();
        out.push((f.to_string(), g));
    };
    for n in 2..=24 {
        add(Family::Path(n));
    }
    for n in 3..=24 {
        add(Family::Cycle(n));
    }
    for r in [1, 2, 3, 4, 6, 8, 12] {
        for c in [2, 5, 9, 12] {
            if r <= c {
                add(Family::Grid(r, c));
            }
        }
    }
    for r in 3..=6 {
        for c in r..=6 {
            add(Family::Torus(r, c));
        }
    }
    add(Family::Petersen);
    add(Family::Heawood);
    add(Family::Complete(4));
    add(Family::CompleteBipartite(3, 3));
    for n in (8..=64).step_by(2) {
        let g = (0..)
            .map(|s| random_regular(n, 3, 1000 * n as u64 + s, 3, DEFAULT_ATTEMPTS).unwrap())
            .find(is_connected_oracle)
            .unwrap();
        out.push((format!("random-regular:{n}:3"), g));
    }
    out
}

/// Unlabeled trees on `n` vertices, one representative each, as edge lists
/// on `1..=n`.
pub fn unlabeled_trees(n: usize) -> Vec<Vec<(Vertex, Vertex)>> {
    fn canon(adj: &[Vec<usize>], v: usize, parent: usize) -> String {
        let mut kids: Vec<String> = adj[v].iter().filter(|&&u| u != parent).map(|&u| canon(adj, u, v)).collect();
        kids.sort();
        format!("({})", kids.concat())
    }
    fn form(n: usize, edges: &[(usize, usize)]) -> String {
        let mut adj = vec![Vec::new(); n];
        for &(a, b) in edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        (0..n).map(|r| canon(&adj, r, usize::MAX)).min().unwrap()
    }
    let mut level: Vec<Vec<(usize, usize)>> = vec![Vec::new()];
    for m in 2..=n {
        let mut seen = BTreeSet::new();
        let mut next = Vec::new();
        for t in &level {
            for attach in 0..m - 1 {
                let mut e = t.clone();
                e.push((attach, m - 1));
                if seen.insert(form(m, &e)) {
                    next.push(e);
                }
            }
        }
        level = next;
    }
    if n == 0 {
        return Vec::new();
    }
    level.into_iter().map(|e| e.into_iter().map(|(a, b)| (a as Vertex + 1, b as Vertex + 1)).collect()).collect()
}

/// Labeled tree from a Prüfer sequence over `0..n`.
pub fn prufer_tree(n: usize, seq: &[usize]) -> Vec<(Vertex, Vertex)> {
    let mut degree = vec![1; n];
    for &x in seq {
        degree[x] += 1;
    }
    let mut edges = Vec::new();
    for &x in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
        edges.push((leaf as Vertex + 1, x as Vertex + 1));
        degree[leaf] -= 1;
        degree[x] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    if n >= 2 {
        edges.push((rest[0] as Vertex + 1, rest[1] as Vertex + 1));
    }
    edges
}
