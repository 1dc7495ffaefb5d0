//! Realizability decisions checked against brute-force search.

use std::collections::BTreeMap;

use thetabar::enumerate::canonical_graph6;
use thetabar::realize::Case;
use thetabar::{enumerate_graphs, is_isomorphic, realize_theta_bar, CorpusSpec, EdgeRelation, Graph, Which};

fn relation_graph(g: &Graph) -> Graph {
    EdgeRelation::of_graph(g, Which::ThetaBar).into_graph()
}

/// Relation graphs of all connected graphs on at most `n` vertices, keyed by
/// edge count.
fn relation_graphs_by_m(n: usize) -> BTreeMap<usize, Vec<Graph>> {
    let mut out: BTreeMap<usize, Vec<Graph>> = BTreeMap::new();
    for g in enumerate_graphs(&CorpusSpec::connected(n)).unwrap() {
        out.entry(g.m()).or_default().push(relation_graph(&g));
    }
    out
}

#[test]
fn three_component_graphs_match_brute_force() {
    // A realizing graph has a triangle, so it has at most as many vertices as
    // edges; every W on <= 7 vertices is covered by the connected corpus.
    let pool = relation_graphs_by_m(7);
    let mut checked = 0;
    let mut realizable = 0;
    for w in enumerate_graphs(&CorpusSpec::all(7)).unwrap() {
        if w.connected_components().len() != 3 {
            continue;
        }
        let brute = pool.get(&w.n()).is_some_and(|rs| rs.iter().any(|r| is_isomorphic(r, &w)));
        let r = realize_theta_bar(&w);
        assert_eq!(r.realizable, brute, "W = {}", thetabar::emit_graph6(&w));
        checked += 1;
        realizable += brute as usize;
    }
    // frozen from this run; the realizable ones come from K3, the diamond,
    // K4 and K_{1,1,3}
    assert_eq!((checked, realizable), (46, 4));
}

fn rook(p: usize, q: usize) -> Graph {
    Graph::cartesian_product(&Graph::complete(p), &Graph::complete(q))
}

/// Rook graphs and joins of two rook graphs with at most `max` vertices, one
/// per isomorphism class.
fn building_blocks(max: usize) -> Vec<Graph> {
    let mut rooks = Vec::new();
    for p in 1..=max {
        for q in p..=max {
            if p * q <= max {
                rooks.push(rook(p, q));
            }
        }
    }
    let mut seen = BTreeMap::new();
    for r in &rooks {
        seen.entry(canonical_graph6(r)).or_insert_with(|| r.clone());
    }
    for a in &rooks {
        for b in &rooks {
            if a.n() + b.n() <= max {
                let j = Graph::join(a, b);
                seen.entry(canonical_graph6(&j)).or_insert(j);
            }
        }
    }
    seen.into_values().collect()
}

/// All part-size lists with 3 or 4 parts whose complete multipartite graph
/// has exactly `m` edges.
fn multipartite_with_edges(m: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let edges = |p: &[usize]| -> usize {
        (0..p.len()).flat_map(|i| (i + 1..p.len()).map(move |j| (i, j))).map(|(i, j)| p[i] * p[j]).sum()
    };
    for a in 1..=m {
        for b in a..=m {
            for c in b..=m {
                if edges(&[a, b, c]) == m {
                    out.push(vec![a, b, c]);
                }
                for d in c..=m {
                    if edges(&[a, b, c, d]) == m {
                        out.push(vec![a, b, c, d]);
                    }
                }
            }
        }
    }
    out
}

#[test]
fn assembled_components_match_multipartite_search() {
    // Components of up to 8 vertices; triples limited to 14 vertices in total.
    // Only complete multipartite graphs with 3 or 4 parts can realize three
    // components, so those are searched exhaustively by edge count.
    let blocks = building_blocks(8);
    let mut cache: BTreeMap<usize, Vec<Graph>> = BTreeMap::new();
    let mut checked = 0;
    let mut agree_realizable = 0;
    for i in 0..blocks.len() {
        for j in i..blocks.len() {
            for k in j..blocks.len() {
                let total = blocks[i].n() + blocks[j].n() + blocks[k].n();
                if total > 14 {
                    continue;
                }
                let w = Graph::disjoint_union(&Graph::disjoint_union(&blocks[i], &blocks[j]), &blocks[k]);
                let candidates = cache.entry(total).or_insert_with(|| {
                    multipartite_with_edges(total)
                        .iter()
                        .map(|p| relation_graph(&Graph::complete_multipartite(p).unwrap()))
                        .collect()
                });
                let brute = candidates.iter().any(|r| is_isomorphic(r, &w));
                let r = realize_theta_bar(&w);
                assert_eq!(r.realizable, brute, "W = {}", thetabar::emit_graph6(&w));
                checked += 1;
                agree_realizable += brute as usize;
            }
        }
    }
    assert_eq!((checked, agree_realizable), (272, 14));
}

#[test]
fn worked_instances() {
    let r = realize_theta_bar(&relation_graph(&Graph::complete_multipartite(&[1, 2, 4]).unwrap()));
    assert_eq!((r.realizable, r.case), (true, Some(Case::ThreeParts)));
    let mut parts = r.parts.clone().unwrap();
    parts.sort_unstable();
    assert_eq!(parts, vec![1, 2, 4]);

    let r = realize_theta_bar(&relation_graph(&Graph::complete_multipartite(&[1, 1, 2, 3]).unwrap()));
    assert_eq!((r.realizable, r.case), (true, Some(Case::FourParts)));
    let mut parts = r.parts.clone().unwrap();
    parts.sort_unstable();
    assert_eq!(parts, vec![1, 1, 2, 3]);

    let json = serde_json::to_value(&r).unwrap();
    assert_eq!(json["schema"], 1);
    assert_eq!(json["case"], "l4");
    assert_eq!(json["bijection"].as_array().unwrap().len(), 17);
}

#[test]
fn c5_relation_graph_is_rejected() {
    let r = realize_theta_bar(&relation_graph(&Graph::cycle(5).unwrap()));
    assert!(!r.realizable);
    assert!(r.reason.unwrap().contains("1 components"));
}
