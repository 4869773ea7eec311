mod common;

use std::collections::BTreeSet;

use lssg_core::adversary::{build_linked_tree, record, run_pipeline, RandomProbeStrategy};
use lssg_core::constructions::{bridge_join, random_regular, replacement_product, subdivide};
use lssg_core::graph::{
    ball, check_non_expanding_with, edge_boundary, expansion, expansion_with, girth, parse_ilg, to_ilg,
    tree_centroid, Girth,
};
use lssg_core::oracle::{OracleHandle, Transcript};
use lssg_core::reference::{balanced_sparse_cut, beta_budget, decompose, kruskal_tree, window};
use lssg_core::spanner::{edge_in_spanner, span_all_with};
use lssg_core::{EdgeKey, Execution, Graph, Vertex, VertexSubset};
use proptest::prelude::*;

use common::*;

/// Simple graph on `1..=n` with maximum degree at most `d`.
fn arb_graph(max_n: usize, max_d: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n, 1..=max_d, prop::collection::vec((0..max_n, 0..max_n), 0..3 * max_n)).prop_map(|(n, d, pairs)| {
        let mut deg = vec![0; n];
        let mut seen = BTreeSet::new();
        let mut edges = Vec::new();
        for (a, b) in pairs {
            let (a, b) = (a % n, b % n);
            if a != b && deg[a] < d && deg[b] < d && seen.insert((a.min(b), a.max(b))) {
                deg[a] += 1;
                deg[b] += 1;
                edges.push((a as Vertex + 1, b as Vertex + 1));
            }
        }
        Graph::from_adjacency(d, lists(n, &edges)).unwrap()
    })
}

fn lists(n: usize, edges: &[(Vertex, Vertex)]) -> Vec<Vec<Vertex>> {
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in edges {
        adj[a as usize - 1].push(b);
        adj[b as usize - 1].push(a);
    }
    adj
}

/// Connected graph: a random tree hung off earlier vertices, plus extra edges,
/// degree at most `d >= 2`.
fn arb_connected(max_n: usize, max_d: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n, 2..=max_d, prop::collection::vec(any::<prop::sample::Index>(), max_n), prop::collection::vec((0..max_n, 0..max_n), 0..2 * max_n))
        .prop_map(|(n, d, parents, extra)| {
            let mut deg = vec![0; n];
            let mut seen = BTreeSet::new();
            let mut edges = Vec::new();
            let mut add = |a: usize, b: usize, deg: &mut Vec<usize>| {
                if a != b && deg[a] < d && deg[b] < d && seen.insert((a.min(b), a.max(b))) {
                    deg[a] += 1;
                    deg[b] += 1;
                    edges.push((a as Vertex + 1, b as Vertex + 1));
                    true
                } else {
                    false
                }
            };
            for (i, parent) in parents.iter().enumerate().take(n).skip(1) {
                let p = parent.index(i);
                if !add(p, i, &mut deg) {
                    assert!(add(i - 1, i, &mut deg), "previous vertex has a free slot");
                }
            }
            for (a, b) in extra {
                add(a % n, b % n, &mut deg);
            }
            Graph::from_adjacency(d, lists(n, &edges)).unwrap()
        })
}

fn arb_subset(g: &Graph, mask: u64) -> VertexSubset {
    VertexSubset::new(g, g.vertices().filter(|&v| mask >> (v - 1) & 1 == 1)).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn rank_order_is_total(a in 1u32..50, b in 1u32..50, c in 1u32..50, e in 1u32..50) {
        prop_assume!(a != b && c != e);
        let (x, y) = (key(a, b), key(c, e));
        let less = [x < y, y < x];
        if x == y {
            prop_assert_eq!(less, [false, false]);
        } else {
            prop_assert_eq!(less.iter().filter(|&&l| l).count(), 1);
            prop_assert_eq!(x < y, (x.lo(), x.hi()) < (y.lo(), y.hi()));
        }
    }

    #[test]
    fn balls_grow_with_radius_and_match_distances(g in arb_graph(14, 4), v in 1u32..15, k in 0usize..6) {
        prop_assume!(g.contains(v));
        let small = ball(&g, v, k).unwrap();
        let big = ball(&g, v, k + 1).unwrap();
        let sv: BTreeSet<_> = small.vertices.iter().copied().collect();
        let bv: BTreeSet<_> = big.vertices.iter().copied().collect();
        prop_assert!(sv.is_subset(&bv));
        let inside = reach(&g, v, |_, _| true);
        let dist = g.distances(v);
        let want: BTreeSet<Vertex> = inside.iter().copied().filter(|&u| dist[u as usize - 1].unwrap() <= k).collect();
        prop_assert_eq!(&sv, &want);
        let want_edges: Vec<EdgeKey> = edge_pairs(&g)
            .into_iter()
            .filter(|(a, b)| want.contains(a) && want.contains(b))
            .map(|(a, b)| key(a, b))
            .collect();
        prop_assert_eq!(&small.edges, &want_edges);
        let budget = (g.d_max() as u128).pow(k as u32 + 1);
        prop_assert!(small.probes.len() as u128 <= budget);
    }

    #[test]
    fn whole_component_at_large_radius(g in arb_connected(14, 4), v in 1u32..15) {
        prop_assume!(g.contains(v));
        let b = ball(&g, v, g.diameter().unwrap()).unwrap();
        prop_assert_eq!(b.vertices.len(), g.n());
        prop_assert_eq!(b.edges, g.edges());
    }

    #[test]
    fn boundary_is_symmetric(g in arb_graph(12, 4), mask in any::<u64>()) {
        let s = arb_subset(&g, mask);
        prop_assume!(!s.is_empty() && s.len() < g.n());
        let mut a = edge_boundary(&g, &s).unwrap();
        let mut b = edge_boundary(&g, &s.complement(&g)).unwrap();
        a.sort();
        b.sort();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn expansion_is_zero_iff_disconnected(g in arb_graph(10, 4)) {
        prop_assume!(g.n() >= 2);
        let x = expansion(&g).unwrap();
        prop_assert_eq!(*x.ratio.numer() == 0, !is_connected_oracle(&g));
    }

    #[test]
    fn deleting_edges_never_raises_expansion(g in arb_graph(10, 4), drop in prop::collection::vec(any::<prop::sample::Index>(), 1..4)) {
        prop_assume!(g.n() >= 2 && g.edge_count() > 0);
        let edges = g.edges();
        let removed: Vec<EdgeKey> = drop.iter().map(|i| edges[i.index(edges.len())]).collect();
        let h = g.without_edges(&removed);
        prop_assert!(expansion(&h).unwrap().ratio <= expansion(&g).unwrap().ratio);
        let f = |t: usize| 1.5 / (t as f64).log2();
        let before = check_non_expanding_with(&g, f, 16, Execution::Sequential).unwrap().passed();
        let after = check_non_expanding_with(&h, f, 16, Execution::Sequential).unwrap().passed();
        prop_assert!(!before || after);
    }

    #[test]
    fn centroid_splits_weight(n in 1usize..40, seed in prop::collection::vec(any::<prop::sample::Index>(), 40), w in prop::collection::vec(1u64..100, 40)) {
        let code: Vec<usize> = (0..n.saturating_sub(2)).map(|i| seed[i].index(n)).collect();
        let t = Graph::from_edges(n, prufer_tree(n, &code)).unwrap();
        let w = &w[..n];
        let c = tree_centroid(&t, w).unwrap();
        let total: u64 = w.iter().sum();
        for v in t.vertices().filter(|&v| v != c) {
            let comp = reach(&t, v, |x, y| x != c && y != c);
            let weight: u64 = comp.iter().map(|&u| w[u as usize - 1]).sum();
            prop_assert!(2 * weight <= total);
        }
    }

    #[test]
    fn probe_accounting_and_replay(g in arb_graph(12, 4), probes in prop::collection::vec((any::<prop::sample::Index>(), any::<prop::sample::Index>()), 0..30)) {
        prop_assume!(g.edge_count() > 0);
        let e = g.edges()[0];
        let mut h = OracleHandle::recording(&g, e);
        for (i, (v, s)) in probes.iter().enumerate() {
            let v = v.index(g.n()) as Vertex + 1;
            let slot = s.index(g.d_max()) + 1;
            prop_assert_eq!(h.query(v, slot).unwrap(), g.neighbor(v, slot));
            prop_assert_eq!(h.probe_count(), i + 1);
        }
        prop_assert!(h.query(1, g.d_max() + 1).is_err());
        prop_assert_eq!(h.probe_count(), probes.len());
        let t = h.take_transcript().unwrap();
        prop_assert!(t.replays_on(&g));
        prop_assert_eq!(t.to_string().parse::<Transcript>().unwrap(), t);
    }

    #[test]
    fn spanner_properties(g in arb_connected(16, 4), k in 1usize..5) {
        let tree: BTreeSet<(Vertex, Vertex)> = kruskal_oracle(&g).into_iter().collect();
        let mut kept = BTreeSet::new();
        let mut kept_next = BTreeSet::new();
        for (a, b) in edge_pairs(&g) {
            let mut h = OracleHandle::new(&g);
            let d = edge_in_spanner(&mut h, a, b, k).unwrap();
            prop_assert!((h.probe_count() as u128) <= (g.d_max() as u128).pow(k as u32 + 1));
            let flipped = edge_in_spanner(&mut OracleHandle::new(&g), b, a, k).unwrap();
            prop_assert_eq!(d.answer, flipped.answer);
            if tree.contains(&(a, b)) {
                prop_assert!(d.answer.is_yes());
            }
            if d.answer.is_yes() {
                kept.insert((a, b));
            } else {
                // The certificate is a lower-ranked path inside the ball.
                let path = d.certificate.unwrap();
                prop_assert_eq!((path[0], *path.last().unwrap()), (a, b));
                for w in path.windows(2) {
                    prop_assert!(g.has_edge(w[0], w[1]) && key(w[0], w[1]) < key(a, b));
                }
            }
            if edge_in_spanner(&mut OracleHandle::new(&g), a, b, k + 1).unwrap().answer.is_yes() {
                kept_next.insert((a, b));
            }
        }
        prop_assert!(kept_next.is_subset(&kept));
        prop_assert!(reach(&g, 1, |x, y| kept.contains(&(x.min(y), x.max(y)))).len() == g.n());
    }

    #[test]
    fn sequential_and_parallel_agree(g in arb_connected(14, 4), k in 1usize..4) {
        prop_assert_eq!(span_all_with(&g, k, Execution::Sequential).unwrap(), span_all_with(&g, k, Execution::Parallel).unwrap());
        prop_assert_eq!(expansion_with(&g, 24, Execution::Sequential).unwrap(), expansion_with(&g, 24, Execution::Parallel).unwrap());
        let f = |t: usize| 2.0 / t as f64;
        prop_assert_eq!(
            check_non_expanding_with(&g, f, 16, Execution::Sequential).unwrap(),
            check_non_expanding_with(&g, f, 16, Execution::Parallel).unwrap()
        );
    }

    #[test]
    fn kruskal_tree_spans(g in arb_connected(20, 4)) {
        let t = kruskal_tree(&g).unwrap();
        prop_assert_eq!(t.len(), g.n() - 1);
        let mine: Vec<EdgeKey> = kruskal_oracle(&g).into_iter().map(|(a, b)| key(a, b)).collect();
        prop_assert_eq!(&t, &mine);
        prop_assert!(is_connected_oracle(&g.with_edges(&t)));
    }

    #[test]
    fn cuts_and_decompositions_are_sound(g in arb_connected(20, 4), k_stop in 1usize..12) {
        let cut = balanced_sparse_cut(&g).unwrap();
        let (lo, hi) = window(g.n());
        prop_assert!((lo..=hi).contains(&cut.side.len()));
        prop_assert_eq!(cut.edges.len(), edge_boundary(&g, &cut.side).unwrap().len());
        let dec = decompose(&g, k_stop, 1.0).unwrap();
        let rest = g.without_edges(&dec.removed);
        let mut comps: Vec<Vec<Vertex>> = Vec::new();
        let mut done = BTreeSet::new();
        for v in rest.vertices() {
            if done.insert(v) {
                let c: Vec<Vertex> = reach(&rest, v, |_, _| true).into_iter().collect();
                done.extend(c.iter().copied());
                comps.push(c);
            }
        }
        prop_assert_eq!(&comps, &dec.components);
        prop_assert!(comps.iter().all(|c| c.len() <= k_stop.max(1)));
    }

    #[test]
    fn ilg_round_trip(g in arb_graph(15, 5)) {
        let text = to_ilg(&g);
        let back = parse_ilg(&text).unwrap();
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(to_ilg(&back), text);
    }

    #[test]
    fn beta_increases(c in 0.1f64..5.0, k in 50usize..2000, n in 0usize..100_000, step in 1usize..10_000) {
        let n = k.div_ceil(3) + n;
        prop_assert!(beta_budget(n + step, k, c).unwrap() > beta_budget(n, k, c).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn product_laws(n in 3usize..9, d in 3usize..5, seed in any::<u64>()) {
        prop_assume!(n > d && n * d % 2 == 0);
        let g = random_regular(n, d, seed, 3, 64).unwrap();
        let (p, map) = replacement_product(&g).unwrap();
        prop_assert!(p.vertices().all(|v| p.neighbors(v).len() == 3));
        prop_assert_eq!(p.n(), 2 * g.edge_count());
        prop_assert_eq!(map.cross.len(), g.edge_count());
        // Clouds are d-cycles. A cycle through cross edges follows a
        // non-backtracking closed walk of G and spends at least one cloud
        // edge per cloud it crosses, so it has length >= 2 girth(G).
        let got = girth_oracle(&p).unwrap();
        prop_assert!(got <= d);
        match girth_oracle(&g) {
            Some(c) => {
                prop_assert!(got >= d.min(2 * c));
                if d <= c {
                    prop_assert_eq!(got, d.min(c));
                }
            }
            None => prop_assert_eq!(got, d),
        }
    }

    #[test]
    fn subdivision_and_join_keep_girth(n in 4usize..16, seed in any::<u64>(), i in any::<prop::sample::Index>(), j in any::<prop::sample::Index>()) {
        prop_assume!(n % 2 == 0);
        let g = random_regular(n, 3, seed, 3, 64).unwrap();
        prop_assume!(is_connected_oracle(&g) && bridges_oracle(&g).is_empty());
        let edges = g.edges();
        let (e1, e2) = (edges[i.index(edges.len())], edges[j.index(edges.len())]);
        let s = subdivide(&g, e1).unwrap();
        prop_assert!(girth_oracle(&s) >= girth_oracle(&g));
        let art = bridge_join(&g, e1, e2).unwrap();
        prop_assert_eq!(bridges_oracle(&art.graph), vec![(1, 2)]);
        prop_assert!(girth_oracle(&art.graph) >= girth_oracle(&g));
        prop_assert_eq!(art.girth, girth(&art.graph));
    }

    #[test]
    fn short_probe_runs_are_indistinguishable(seed in any::<u64>(), strategy in any::<u64>(), q in 0usize..4, e in any::<prop::sample::Index>()) {
        let base = random_regular(16, 3, seed, 5, 64).unwrap();
        prop_assume!(is_connected_oracle(&base));
        let first = base.edges()[0];
        let target = bridge_join(&base, first, first).unwrap();
        let Girth::Finite(gg) = target.girth else { unreachable!() };
        prop_assume!(q + 2 <= gg);
        let edges = target.graph.edges();
        let edge = edges[e.index(edges.len())];
        let alg = RandomProbeStrategy { seed: strategy, probes: q };
        let (_, t) = record(&alg, &target.graph, edge).unwrap();
        let forest = build_linked_tree(&t).unwrap();
        prop_assert!(forest.edges.len() <= q + 1);
        let run = run_pipeline(&alg, &target.graph, &target, edge).unwrap();
        prop_assert!(run.embedding.is_permutation());
        prop_assert!(run.indistinguishable());
        for x in &t.entries {
            prop_assert_eq!(run.sigma_graph.neighbor(x.vertex, x.slot), x.answer);
        }
    }
}
