use std::collections::VecDeque;
use std::fmt;

use super::{idx, Graph, Vertex};
use crate::exec::Execution;

/// Length of a shortest cycle. `Infinite` (forests) compares greater than
/// every finite value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Girth {
    Finite(usize),
    Infinite,
}

impl Girth {
    pub fn finite(self) -> Option<usize> {
        match self {
            Girth::Finite(g) => Some(g),
            Girth::Infinite => None,
        }
    }
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Girth::Finite(g) => write!(f, "{g}"),
            Girth::Infinite => f.write_str("inf"),
        }
    }
}

pub fn girth(g: &Graph) -> Girth {
    girth_with(g, Execution::default())
}

/// Shortest cycle through BFS from every root: a non-tree edge `(v, u)`
/// closes a closed walk of length `dist(v) + dist(u) + 1`, which is a cycle
/// for the root on it that minimizes the value.
pub fn girth_with(g: &Graph, exec: Execution) -> Girth {
    exec.min_range(
        1..g.n() + 1,
        |r| shortest_cycle_from(g, r as Vertex),
        |a, b| a < b,
    )
    .map_or(Girth::Infinite, Girth::Finite)
}

fn shortest_cycle_from(g: &Graph, root: Vertex) -> Option<usize> {
    let mut dist = vec![usize::MAX; g.n()];
    let mut parent = vec![0 as Vertex; g.n()];
    dist[idx(root)] = 0;
    let mut queue = VecDeque::from([root]);
    let mut best: Option<usize> = None;
    while let Some(v) = queue.pop_front() {
        let dv = dist[idx(v)];
        if best.is_some_and(|b| b <= 2 * dv) {
            break;
        }
        for &u in g.neighbors(v) {
            if dist[idx(u)] == usize::MAX {
                dist[idx(u)] = dv + 1;
                parent[idx(u)] = v;
                queue.push_back(u);
            } else if parent[idx(v)] != u {
                let len = dv + dist[idx(u)] + 1;
                best = Some(best.map_or(len, |b| b.min(len)));
            }
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_graph_has_triangles() {
        let g = Graph::from_edges(4, [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]).unwrap();
        assert_eq!(girth(&g), Girth::Finite(3));
    }

    #[test]
    fn trees_are_infinite() {
        let g = Graph::from_edges(6, [(1, 2), (1, 3), (3, 4), (3, 5), (5, 6)]).unwrap();
        assert_eq!(girth(&g), Girth::Infinite);
        assert_eq!(girth(&Graph::from_edges(1, []).unwrap()), Girth::Infinite);
    }

    #[test]
    fn cycles_have_their_length() {
        for n in 3..12u32 {
            let g = Graph::from_edges(n as usize, (1..=n).map(|i| (i, i % n + 1))).unwrap();
            assert_eq!(girth(&g), Girth::Finite(n as usize));
        }
    }

    #[test]
    fn infinite_orders_last() {
        assert!(Girth::Finite(1_000_000) < Girth::Infinite);
        assert!(Girth::Finite(3) < Girth::Finite(4));
    }

    #[test]
    fn even_cycle_with_chord_sets() {
        // 6-cycle plus chord (1,4): two 4-cycles
        let g = Graph::from_edges(6, [(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 1), (1, 4)]).unwrap();
        assert_eq!(girth_with(&g, Execution::Sequential), Girth::Finite(4));
    }
}
