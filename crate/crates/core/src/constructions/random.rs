use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{domain, Error, Result};
use crate::graph::{girth, Girth, Graph, Vertex};

pub const DEFAULT_ATTEMPTS: usize = 64;

/// Switch steps per attempt before it is abandoned, per vertex.
const SWITCHES_PER_VERTEX: usize = 400;

/// Seeded `d`-regular graph on `n` vertices with girth at least `min_girth`.
///
/// Each attempt pairs free stubs greedily under the girth constraint, then
/// repairs leftover stubs by switching: an existing edge `ab` is removed and
/// `ua`, `wb` are added when both keep the girth. Same seed, same graph.
pub fn random_regular(n: usize, d: usize, seed: u64, min_girth: usize, attempts: usize) -> Result<Graph> {
    if d == 0 || n <= d {
        return domain(format!("need 1 <= d < n, got n = {n}, d = {d}"));
    }
    if n * d % 2 == 1 {
        return domain(format!("n·d must be even, got n = {n}, d = {d}"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..attempts.max(1) {
        if let Some(adj) = attempt(n, d, min_girth.max(3), &mut rng) {
            let edges = adj
                .iter()
                .enumerate()
                .flat_map(|(a, list)| list.iter().filter(move |&&b| a < b).map(move |&b| (a as Vertex + 1, b as Vertex + 1)))
                .collect::<Vec<_>>();
            let g = Graph::from_edges_sorted(n, edges)?;
            let ok = g.is_regular(d)
                && match girth(&g) {
                    Girth::Finite(c) => c >= min_girth,
                    Girth::Infinite => true,
                };
            if !ok {
                return Err(Error::Internal("random regular generator produced an invalid graph".into()));
            }
            return Ok(g);
        }
    }
    Err(Error::Generation(format!(
        "no {d}-regular graph on {n} vertices with girth >= {min_girth} found in {attempts} attempts (seed {seed})"
    )))
}

struct Partial {
    adj: Vec<Vec<usize>>,
    d: usize,
    g: usize,
    mark: Vec<usize>,
    stamp: usize,
}

impl Partial {
    /// True when the edge `ab` can be added without creating a cycle shorter
    /// than the girth bound, i.e. `dist(a, b) >= g - 1`.
    fn addable(&mut self, a: usize, b: usize) -> bool {
        if a == b || self.adj[a].contains(&b) || self.adj[a].len() >= self.d || self.adj[b].len() >= self.d {
            return false;
        }
        self.stamp += 1;
        let stamp = self.stamp;
        self.mark[a] = stamp;
        let mut frontier = vec![a];
        for _ in 0..self.g - 2 {
            let mut next = Vec::new();
            for &x in &frontier {
                for &y in &self.adj[x] {
                    if y == b {
                        return false;
                    }
                    if self.mark[y] != stamp {
                        self.mark[y] = stamp;
                        next.push(y);
                    }
                }
            }
            frontier = next;
        }
        true
    }

    fn link(&mut self, a: usize, b: usize) {
        self.adj[a].push(b);
        self.adj[b].push(a);
    }

    fn unlink(&mut self, a: usize, b: usize) {
        self.adj[a].retain(|&x| x != b);
        self.adj[b].retain(|&x| x != a);
    }

    fn deficient(&self) -> Vec<usize> {
        (0..self.adj.len()).filter(|&v| self.adj[v].len() < self.d).collect()
    }
}

fn attempt(n: usize, d: usize, g: usize, rng: &mut ChaCha8Rng) -> Option<Vec<Vec<usize>>> {
    let mut p = Partial { adj: vec![Vec::with_capacity(d); n], d, g, mark: vec![0; n], stamp: 0 };

    let mut stubs: Vec<usize> = (0..n).flat_map(|v| std::iter::repeat_n(v, d)).collect();
    stubs.shuffle(rng);
    for &a in &stubs {
        if p.adj[a].len() >= d {
            continue;
        }
        let mut candidates: Vec<usize> = (0..n).filter(|&b| b != a && p.adj[b].len() < d).collect();
        candidates.shuffle(rng);
        if let Some(&b) = candidates.iter().find(|&&b| p.addable(a, b)) {
            p.link(a, b);
        }
    }

    for _ in 0..SWITCHES_PER_VERTEX * n {
        let open = p.deficient();
        let Some(&u) = open.first() else {
            return Some(p.adj);
        };
        let others: Vec<usize> = open.iter().copied().filter(|&w| w != u).collect();
        if let Some(&w) = others.iter().find(|&&w| p.addable(u, w)) {
            p.link(u, w);
            continue;
        }
        let w = match others.choose(rng) {
            Some(&w) => w,
            None => u,
        };
        let a = rng.gen_range(0..n);
        if p.adj[a].is_empty() {
            continue;
        }
        let b = p.adj[a][rng.gen_range(0..p.adj[a].len())];
        if [a, b].contains(&u) || [a, b].contains(&w) {
            continue;
        }
        p.unlink(a, b);
        if p.addable(u, a) {
            p.link(u, a);
            if p.addable(w, b) {
                p.link(w, b);
                continue;
            }
            p.unlink(u, a);
        }
        p.link(a, b);
    }
    None
}
