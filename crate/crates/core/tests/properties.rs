//! Randomized invariants.

use proptest::prelude::*;

use thetabar::enumerate::canonical_graph6;
use thetabar::{
    bfs_all_pairs, builtin_claims, classify, closure_classes, delta_set, emit_graph6, is_isomorphic, parse_graph6,
    realize_theta_bar, run_property_suite, theta_bar_classes_distance_free, theta_related, Dist, EdgeRelation, Graph,
    SuiteOptions, Which,
};

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let edges = (0..n)
                .flat_map(|v| (0..v).map(move |u| (u, v)))
                .zip(bits)
                .filter(|(_, b)| *b)
                .map(|(e, _)| e);
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

fn with_permutation(max_n: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    graph_strategy(max_n).prop_flat_map(|g| {
        let n = g.n();
        (Just(g), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
    })
}

fn multipartite_strategy() -> impl Strategy<Value = (Vec<usize>, Vec<usize>)> {
    prop_oneof![
        proptest::collection::vec(1usize..=4, 3),
        proptest::collection::vec(1usize..=3, 4),
        proptest::collection::vec(1usize..=3, 1..=6),
    ]
    .prop_flat_map(|parts| {
        let n: usize = parts.iter().sum();
        (Just(parts), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn every_claim_holds_on_random_graphs(g in graph_strategy(9)) {
        let report = run_property_suite(&[g], &builtin_claims(), &SuiteOptions { threads: Some(1), max_counterexamples: 1 });
        let failed: Vec<_> = report.failed_claims().map(|c| (c.id.clone(), c.counterexamples.clone())).collect();
        prop_assert!(failed.is_empty(), "{:?}", failed);
    }

    #[test]
    fn graph6_round_trip(g in graph_strategy(70)) {
        let s = emit_graph6(&g);
        prop_assert_eq!(parse_graph6(&s).unwrap(), g);
    }

    #[test]
    fn graph6_parser_never_panics(s in "\\PC{0,12}") {
        let _ = parse_graph6(&s);
    }

    #[test]
    fn distances_form_a_metric(g in graph_strategy(10)) {
        let d = bfs_all_pairs(&g);
        for u in 0..g.n() {
            prop_assert_eq!(d.get(u, u), Dist::Fin(0));
            for v in 0..g.n() {
                prop_assert_eq!(d.get(u, v), d.get(v, u));
                prop_assert_eq!(d.get(u, v) == Dist::Fin(1), g.has_edge(u, v));
                for w in 0..g.n() {
                    prop_assert!(d.get(u, w) <= d.get(u, v) + d.get(v, w));
                }
            }
        }
    }

    #[test]
    fn relabelling_preserves_everything((g, perm) in with_permutation(8)) {
        let h = g.relabel(&perm);
        prop_assert!(is_isomorphic(&g, &h));
        prop_assert_eq!(canonical_graph6(&g), canonical_graph6(&h));
        let (rg, rh) = (classify(&g), classify(&h));
        prop_assert_eq!(rg.theta_bar_class_sizes, rh.theta_bar_class_sizes);
        prop_assert_eq!(rg.part_sizes, rh.part_sizes);
        prop_assert_eq!((rg.is_tree, rg.is_block_graph, rg.is_paw_free, rg.diameter_le_2), (rh.is_tree, rh.is_block_graph, rh.is_paw_free, rh.diameter_le_2));
        let theta = |x: &Graph| closure_classes(&EdgeRelation::of_graph(x, Which::Theta)).class_sizes();
        prop_assert_eq!(theta(&g), theta(&h));
    }

    #[test]
    fn theta_matches_delta_shape(g in graph_strategy(9)) {
        let d = bfs_all_pairs(&g);
        for e in 0..g.m() {
            for f in 0..g.m() {
                let delta = delta_set(&g, &d, e, f).unwrap();
                if theta_related(&g, &d, e, f).unwrap() {
                    prop_assert!(delta.len() == 2 && delta.is_consecutive());
                }
                prop_assert_eq!(theta_related(&g, &d, e, f).unwrap(), theta_related(&g, &d, f, e).unwrap());
            }
        }
    }

    #[test]
    fn distance_free_agrees_on_multipartite((parts, perm) in multipartite_strategy()) {
        let g = Graph::complete_multipartite(&parts).unwrap().relabel(&perm);
        let slow = closure_classes(&EdgeRelation::of_graph(&g, Which::ThetaBar));
        prop_assert!(theta_bar_classes_distance_free(&g).same_partition(&slow));
        let expect = if parts.len() == 3 || parts.len() == 4 { 3 } else { 1 };
        if g.m() > 0 {
            prop_assert_eq!(slow.class_count(), expect);
        }
    }

    #[test]
    fn realize_round_trip((parts, perm) in multipartite_strategy()) {
        prop_assume!(parts.len() == 3 || parts.len() == 4);
        let g = Graph::complete_multipartite(&parts).unwrap();
        let w = EdgeRelation::of_graph(&g, Which::ThetaBar).into_graph();
        let m = w.n();
        let shuffle: Vec<usize> = (0..m).map(|i| perm[i % perm.len()] * m + i).collect();
        let mut order: Vec<usize> = (0..m).collect();
        order.sort_by_key(|&i| shuffle[i]);
        let mut map = vec![0; m];
        for (new, &old) in order.iter().enumerate() {
            map[old] = new;
        }
        let w = w.relabel(&map);
        let r = realize_theta_bar(&w);
        prop_assert!(r.realizable, "{:?}", r.reason);
        let h = r.graph.unwrap();
        prop_assert!(is_isomorphic(EdgeRelation::of_graph(&h, Which::ThetaBar).graph(), &w));
    }
}
