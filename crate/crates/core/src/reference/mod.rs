//! Global baselines: the rank-Kruskal spanning tree and the sparse-cut
//! decomposition with its edge budget.

mod budget;
mod cut;
mod decompose;
mod union_find;

pub use budget::{beta_budget, BudgetFns, MIN_STOP};
pub use cut::{balanced_sparse_cut, cut_of, window, BalancedCut, CutMethod, CutStrategy};
pub use decompose::{decompose, decompose_with, CutRecord, DecomposeOptions, Decomposition, DecompositionFile};
pub use union_find::UnionFind;

use crate::error::{domain, Result};
use crate::graph::{idx, EdgeKey, Graph};

/// The minimum spanning tree under the rank order, as `n - 1` edges in rank
/// order.
pub fn kruskal_tree(g: &Graph) -> Result<Vec<EdgeKey>> {
    let mut uf = UnionFind::new(g.n());
    let tree: Vec<EdgeKey> = g.edges().into_iter().filter(|e| uf.union(idx(e.lo()), idx(e.hi()))).collect();
    if tree.len() + 1 != g.n() {
        return domain("kruskal_tree needs a connected graph");
    }
    Ok(tree)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(a: u32, b: u32) -> EdgeKey {
        EdgeKey::new(a, b).unwrap()
    }

    #[test]
    fn examples() {
        let c5 = Graph::from_edges(5, (1..=5).map(|i| (i, i % 5 + 1))).unwrap();
        assert_eq!(kruskal_tree(&c5).unwrap(), vec![e(1, 2), e(1, 5), e(2, 3), e(3, 4)]);
        let k4 = Graph::from_edges(4, [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]).unwrap();
        assert_eq!(kruskal_tree(&k4).unwrap(), vec![e(1, 2), e(1, 3), e(1, 4)]);
        let tree = Graph::from_edges(5, [(5, 1), (1, 2), (2, 4), (4, 3)]).unwrap();
        assert_eq!(kruskal_tree(&tree).unwrap(), tree.edges());
    }

    #[test]
    fn disconnected_is_rejected() {
        let g = Graph::from_edges(4, [(1, 2), (3, 4)]).unwrap();
        assert!(kruskal_tree(&g).is_err());
    }
}
