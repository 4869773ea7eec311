//! Graph families and the extremal constructions.
//!
//! Every generator here emits incidence lists sorted by increasing id,
//! except where a function documents its own slot order.

mod bridge;
mod product;
mod random;

pub use bridge::{bridge_join, subdivide, BridgeArtifact};
pub use product::{replacement_product, CloudMap};
pub use random::{random_regular, DEFAULT_ATTEMPTS};

use std::fmt;
use std::str::FromStr;

use crate::error::{domain, Error, Result};
use crate::graph::{Graph, Vertex};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    Path(usize),
    Cycle(usize),
    /// `rows × cols`, vertex `(i, j)` has id `i·cols + j + 1`.
    Grid(usize, usize),
    /// Grid with wrap-around; both sides at least 3.
    Torus(usize, usize),
    Complete(usize),
    /// Parts `1..=a` and `a+1..=a+b`.
    CompleteBipartite(usize, usize),
    /// Outer cycle 1..5, spokes `i – i+5`, inner pentagram on 6..10.
    Petersen,
    /// LCF `[5,-5]^7` on the 14-cycle.
    Heawood,
    RandomRegular { n: usize, d: usize, seed: u64, min_girth: usize },
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Path(n) => write!(f, "path:{n}"),
            Family::Cycle(n) => write!(f, "cycle:{n}"),
            Family::Grid(r, c) => write!(f, "grid:{r}x{c}"),
            Family::Torus(r, c) => write!(f, "torus:{r}x{c}"),
            Family::Complete(n) => write!(f, "complete:{n}"),
            Family::CompleteBipartite(a, b) => write!(f, "bipartite:{a}x{b}"),
            Family::Petersen => f.write_str("petersen"),
            Family::Heawood => f.write_str("heawood"),
            Family::RandomRegular { n, d, seed, min_girth } => write!(f, "random-regular:{n}:{d}:{seed}:{min_girth}"),
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    /// Parses the `Display` form, e.g. `grid:12x12` or `random-regular:34:3:1:8`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Domain(format!("unrecognized family {s:?}"));
        let num = |t: &str| t.parse::<usize>().map_err(|_| bad());
        let pair = |t: &str| -> Result<(usize, usize)> {
            let (a, b) = t.split_once('x').ok_or_else(bad)?;
            Ok((num(a)?, num(b)?))
        };
        let (name, rest) = s.split_once(':').unwrap_or((s, ""));
        Ok(match name {
            "path" => Family::Path(num(rest)?),
            "cycle" => Family::Cycle(num(rest)?),
            "grid" => pair(rest).map(|(r, c)| Family::Grid(r, c))?,
            "torus" => pair(rest).map(|(r, c)| Family::Torus(r, c))?,
            "complete" => Family::Complete(num(rest)?),
            "bipartite" => pair(rest).map(|(a, b)| Family::CompleteBipartite(a, b))?,
            "petersen" if rest.is_empty() => Family::Petersen,
            "heawood" if rest.is_empty() => Family::Heawood,
            "random-regular" => match rest.split(':').collect::<Vec<_>>().as_slice() {
                [n, d, seed, g] => Family::RandomRegular {
                    n: num(n)?,
                    d: num(d)?,
                    seed: seed.parse().map_err(|_| bad())?,
                    min_girth: num(g)?,
                },
                _ => return Err(bad()),
            },
            _ => return Err(bad()),
        })
    }
}

pub fn generate(family: &Family) -> Result<Graph> {
    let sorted = |n: usize, edges: Vec<(Vertex, Vertex)>| Graph::from_edges_sorted(n, edges);
    match *family {
        Family::Path(n) => {
            if n == 0 {
                return domain("path needs n >= 1");
            }
            sorted(n, (1..n as Vertex).map(|i| (i, i + 1)).collect())
        }
        Family::Cycle(n) => {
            if n < 3 {
                return domain("cycle needs n >= 3");
            }
            let n32 = n as Vertex;
            sorted(n, (1..=n32).map(|i| (i, i % n32 + 1)).collect())
        }
        Family::Grid(r, c) => {
            if r == 0 || c == 0 {
                return domain("grid sides must be positive");
            }
            sorted(r * c, lattice_edges(r, c, false))
        }
        Family::Torus(r, c) => {
            if r < 3 || c < 3 {
                return domain("torus sides must be at least 3");
            }
            sorted(r * c, lattice_edges(r, c, true))
        }
        Family::Complete(n) => {
            if n == 0 {
                return domain("complete graph needs n >= 1");
            }
            let n32 = n as Vertex;
            sorted(n, (1..=n32).flat_map(|a| (a + 1..=n32).map(move |b| (a, b))).collect())
        }
        Family::CompleteBipartite(a, b) => {
            if a == 0 || b == 0 {
                return domain("bipartite sides must be positive");
            }
            let (a32, b32) = (a as Vertex, b as Vertex);
            sorted(a + b, (1..=a32).flat_map(|x| (a32 + 1..=a32 + b32).map(move |y| (x, y))).collect())
        }
        Family::Petersen => {
            let mut edges = Vec::new();
            for i in 1..=5 {
                edges.push((i, i % 5 + 1));
                edges.push((i, i + 5));
                edges.push((i + 5, (i + 1) % 5 + 6));
            }
            sorted(10, edges)
        }
        Family::Heawood => {
            let mut edges: Vec<(Vertex, Vertex)> = (0..14).map(|i| (i + 1, (i + 1) % 14 + 1)).collect();
            edges.extend((0..14).step_by(2).map(|i| (i + 1, (i + 5) % 14 + 1)));
            sorted(14, edges)
        }
        Family::RandomRegular { n, d, seed, min_girth } => random_regular(n, d, seed, min_girth, DEFAULT_ATTEMPTS),
    }
}

fn lattice_edges(r: usize, c: usize, wrap: bool) -> Vec<(Vertex, Vertex)> {
    let id = |i: usize, j: usize| (i * c + j + 1) as Vertex;
    let mut edges = Vec::new();
    for i in 0..r {
        for j in 0..c {
            if j + 1 < c || wrap {
                edges.push((id(i, j), id(i, (j + 1) % c)));
            }
            if i + 1 < r || wrap {
                edges.push((id(i, j), id((i + 1) % r, j)));
            }
        }
    }
    edges
}
