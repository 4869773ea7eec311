use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::graph::{explore_ball, EdgeKey, Vertex};
use crate::oracle::OracleHandle;
use crate::spanner::{edge_in_spanner, lower_rank_path, Answer};

/// A deterministic per-edge algorithm that sees the graph only through an
/// oracle handle.
pub trait LocalAlgorithm: Sync {
    fn name(&self) -> String;

    fn decide(&self, oracle: &mut OracleHandle<'_>, edge: EdgeKey) -> Result<Answer>;
}

/// The ball-based Kruskal decision at radius `k`.
#[derive(Clone, Copy, Debug)]
pub struct LocalKruskal {
    pub k: usize,
}

impl LocalAlgorithm for LocalKruskal {
    fn name(&self) -> String {
        format!("local-spanner(k={})", self.k)
    }

    fn decide(&self, oracle: &mut OracleHandle<'_>, edge: EdgeKey) -> Result<Answer> {
        Ok(edge_in_spanner(oracle, edge.lo(), edge.hi(), self.k)?.answer)
    }
}

/// The Kruskal decision on whatever part of the radius-`k` ball the first
/// `max_probes` probes reveal.
#[derive(Clone, Copy, Debug)]
pub struct ProbeCappedKruskal {
    pub k: usize,
    pub max_probes: usize,
}

impl LocalAlgorithm for ProbeCappedKruskal {
    fn name(&self) -> String {
        format!("local-spanner(k={}, probes<={})", self.k, self.max_probes)
    }

    fn decide(&self, oracle: &mut OracleHandle<'_>, edge: EdgeKey) -> Result<Answer> {
        let d = oracle.d();
        let mut used = 0;
        let mut failure = None;
        let ball = explore_ball(edge.lo(), self.k, d, |v, i| {
            if used == self.max_probes {
                return None;
            }
            used += 1;
            oracle.query(v, i).map_err(|e| failure = Some(e)).ok()
        });
        if let Some(e) = failure {
            return Err(e);
        }
        Ok(if lower_rank_path(&ball.edges, edge).is_some() { Answer::No } else { Answer::Yes })
    }
}

/// Probes `probes` random `(vertex, slot)` pairs among the vertices seen so
/// far, seeded only by `seed`, and answers NO iff the edges it saw connect
/// the endpoints through lower-ranked edges.
#[derive(Clone, Copy, Debug)]
pub struct RandomProbeStrategy {
    pub seed: u64,
    pub probes: usize,
}

impl LocalAlgorithm for RandomProbeStrategy {
    fn name(&self) -> String {
        format!("random-probes(seed={}, probes={})", self.seed, self.probes)
    }

    fn decide(&self, oracle: &mut OracleHandle<'_>, edge: EdgeKey) -> Result<Answer> {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        let mut seen: Vec<Vertex> = vec![edge.lo(), edge.hi()];
        let mut edges = vec![edge];
        for _ in 0..self.probes {
            let x = seen[rng.gen_range(0..seen.len())];
            let slot = rng.gen_range(1..=oracle.d());
            if let Some(y) = oracle.query(x, slot)? {
                if !seen.contains(&y) {
                    seen.push(y);
                }
                edges.push(EdgeKey::ordered(x, y));
            }
        }
        edges.sort_unstable();
        edges.dedup();
        Ok(if lower_rank_path(&edges, edge).is_some() { Answer::No } else { Answer::Yes })
    }
}

/// Zero probes, always YES.
#[derive(Clone, Copy, Debug)]
pub struct AlwaysYes;

impl LocalAlgorithm for AlwaysYes {
    fn name(&self) -> String {
        "always-yes".into()
    }

    fn decide(&self, _: &mut OracleHandle<'_>, _: EdgeKey) -> Result<Answer> {
        Ok(Answer::Yes)
    }
}
