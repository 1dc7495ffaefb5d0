//! Graph-class recognizers built on Θ, Θ̄ and Δ, and the distance-free
//! computation of the Θ̄* classes.

use serde::Serialize;

use crate::distance::{bfs_all_pairs, Dist, DistanceMatrix};
use crate::graph::{EdgeId, Graph};
use crate::graph6::emit_graph6;
use crate::patterns::{contains_induced, find_clique, Pattern};
use crate::relations::{closure_classes, delta_set, DeltaSet, EdgePartition, EdgeRelation, Which};

/// Sizes of the independent sets of a complete multipartite graph, largest
/// first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct PartSizes(Vec<usize>);

impl PartSizes {
    pub fn new(mut sizes: Vec<usize>) -> Option<Self> {
        if sizes.is_empty() || sizes.contains(&0) {
            return None;
        }
        sizes.sort_unstable_by(|a, b| b.cmp(a));
        Some(PartSizes(sizes))
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    /// Number of parts, ℓ.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

pub fn is_tree(g: &Graph) -> bool {
    g.n() >= 1 && g.m() + 1 == g.n() && g.is_connected()
}

/// Vertex sets of the biconnected components (blocks). Isolated vertices
/// form no block.
pub fn blocks(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut timer = 0;
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();
    let mut out = Vec::new();
    // frames: (vertex, parent edge id, next neighbour index)
    let mut stack: Vec<(usize, usize, usize)> = Vec::new();

    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        stack.push((root, usize::MAX, 0));
        while let Some(&mut (v, pe, ref mut i)) = stack.last_mut() {
            if *i < g.degree(v) {
                let w = g.neighbors(v)[*i];
                let eid = g.incident_edges(v)[*i];
                *i += 1;
                if eid == pe {
                    continue;
                }
                if disc[w] == usize::MAX {
                    edge_stack.push((v, w));
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    stack.push((w, eid, 0));
                } else if disc[w] < disc[v] {
                    edge_stack.push((v, w));
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&(p, _, _)) = stack.last() {
                    low[p] = low[p].min(low[v]);
                    if low[v] >= disc[p] {
                        let mut verts = Vec::new();
                        while let Some((a, b)) = edge_stack.pop() {
                            verts.push(a);
                            verts.push(b);
                            if (a, b) == (p, v) {
                                break;
                            }
                        }
                        verts.sort_unstable();
                        verts.dedup();
                        out.push(verts);
                    }
                }
            }
        }
    }
    out.sort();
    out
}

/// A block that is not a clique, if any.
pub fn non_clique_block(g: &Graph) -> Option<Vec<usize>> {
    blocks(g).into_iter().find(|b| !g.is_clique(b))
}

/// Every block is a clique. Disconnected graphs are judged per component.
pub fn is_block_graph(g: &Graph) -> bool {
    non_clique_block(g).is_none()
}

fn nonadjacent_pairs(g: &Graph) -> impl Iterator<Item = (EdgeId, EdgeId)> + '_ {
    let m = g.m();
    (0..m).flat_map(move |e| (e + 1..m).map(move |f| (e, f))).filter(move |&(e, f)| !g.edges_adjacent(e, f))
}

fn sums_equal(g: &Graph, d: &DistanceMatrix, e: EdgeId, f: EdgeId) -> bool {
    let (a, b) = g.edge(e);
    let (x, y) = g.edge(f);
    d.get(a, x) + d.get(b, y) == d.get(a, y) + d.get(b, x)
}

/// All non-adjacent edge pairs are Θ̄-related.
pub fn block_graph_via_theta_bar(g: &Graph) -> bool {
    let d = bfs_all_pairs(g);
    nonadjacent_pairs(g).all(|(e, f)| sums_equal(g, &d, e, f))
}

/// Outcome of the Δ-based diameter test.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DiameterByDelta {
    pub diameter_le_2: bool,
    /// A non-adjacent pair with `|Δ| = 3` when the diameter exceeds 2.
    pub witness: Option<(EdgeId, EdgeId, DeltaSet)>,
    /// Set when the graph had no non-adjacent pair and the diameter was read
    /// off the distance matrix instead.
    pub direct: bool,
}

/// `diam <= 2` iff no non-adjacent pair has `|Δ| = 3`. Falls back to the
/// distance matrix when there are no non-adjacent pairs.
pub fn diameter_le_2_via_delta(g: &Graph) -> DiameterByDelta {
    let d = bfs_all_pairs(g);
    let mut any = false;
    for (e, f) in nonadjacent_pairs(g) {
        any = true;
        let delta = delta_set(g, &d, e, f).expect("valid edge ids");
        if delta.len() == 3 {
            return DiameterByDelta { diameter_le_2: false, witness: Some((e, f, delta)), direct: false };
        }
    }
    if any {
        DiameterByDelta { diameter_le_2: true, witness: None, direct: false }
    } else {
        DiameterByDelta { diameter_le_2: d.max() <= Dist::Fin(2), witness: None, direct: true }
    }
}

/// All non-adjacent edge pairs are Θ-related.
pub fn all_nonadjacent_theta(g: &Graph) -> bool {
    let d = bfs_all_pairs(g);
    nonadjacent_pairs(g).all(|(e, f)| !sums_equal(g, &d, e, f))
}

/// `diam <= 2` and no induced `K4`, `2K2` or paw.
pub fn diameter_2_and_k4_2k2_paw_free(g: &Graph) -> bool {
    g.diameter() <= Dist::Fin(2)
        && [Pattern::K4, Pattern::TwoK2, Pattern::Paw]
            .iter()
            .all(|&p| contains_induced(g, p).is_none())
}

/// Independent sets of a complete multipartite graph, ordered by smallest
/// vertex; `None` if `g` is not complete multipartite. The non-adjacency
/// relation must be transitive, i.e. the complement a disjoint union of
/// cliques.
pub fn multipartite_parts(g: &Graph) -> Option<Vec<Vec<usize>>> {
    if g.n() == 0 {
        return None;
    }
    let parts = g.complement().connected_components();
    parts
        .iter()
        .all(|p| p.iter().enumerate().all(|(i, &u)| p[i + 1..].iter().all(|&v| !g.has_edge(u, v))))
        .then_some(parts)
}

pub fn is_complete_multipartite(g: &Graph) -> Option<PartSizes> {
    multipartite_parts(g).and_then(|p| PartSizes::new(p.iter().map(Vec::len).collect()))
}

/// Components containing at least one edge.
fn edge_components(g: &Graph) -> Vec<Vec<usize>> {
    g.connected_components().into_iter().filter(|c| c.len() > 1).collect()
}

/// Whether Θ̄* has a single class, decided from forbidden and enforced induced
/// subgraphs without computing distances.
///
/// Connected graphs on at most four vertices: anything but `K3`, the diamond
/// and `K4`. On five or more: `K3`-free, or containing a `K5`, an induced paw
/// or an induced `P4`. With several edge-bearing components the answer is
/// always yes; an edgeless graph has no classes and yields `false`.
pub fn theta_bar_star_is_1trivial(g: &Graph) -> bool {
    let comps = edge_components(g);
    match comps.len() {
        0 => false,
        1 if comps[0].len() == g.n() => one_trivial_connected(g),
        1 => one_trivial_connected(&g.induced_subgraph(&comps[0])),
        _ => true,
    }
}

fn one_trivial_connected(g: &Graph) -> bool {
    if g.n() <= 4 {
        let k3 = g.n() == 3 && g.m() == 3;
        let k4 = g.n() == 4 && g.m() == 6;
        // the only 4-vertex graph with 5 edges is the diamond
        let diamond = g.n() == 4 && g.m() == 5;
        return !(k3 || diamond || k4);
    }
    find_clique(g, 3).is_none()
        || find_clique(g, 5).is_some()
        || contains_induced(g, Pattern::Paw).is_some()
        || contains_induced(g, Pattern::P4).is_some()
}

/// Θ̄* classes from the multipartite structure alone.
///
/// For `K_{n1,n2,n3}` the classes are the edge sets between part pairs
/// `V1V2 | V1V3 | V2V3`; for four parts they are the perfect-matching
/// unions `V1V2 ∪ V3V4 | V1V3 ∪ V2V4 | V1V4 ∪ V2V3`. Parts are numbered by
/// smallest vertex. Everything else has a single class.
pub fn theta_bar_classes_distance_free(g: &Graph) -> EdgePartition {
    let m = g.m();
    let comps = edge_components(g);
    if comps.len() != 1 {
        return EdgePartition::from_labels(&vec![0; m]);
    }
    let comp = &comps[0];
    let sub = g.induced_subgraph(comp);
    let parts = match multipartite_parts(&sub) {
        Some(p) if p.len() == 3 || p.len() == 4 => p,
        _ => return EdgePartition::from_labels(&vec![0; m]),
    };
    let mut part_of = vec![usize::MAX; g.n()];
    for (i, p) in parts.iter().enumerate() {
        for &local in p {
            part_of[comp[local]] = i;
        }
    }
    let class = |i: usize, j: usize| -> usize {
        let (i, j) = (i.min(j), i.max(j));
        match (parts.len(), i, j) {
            (3, 0, 1) => 0,
            (3, 0, 2) => 1,
            (3, 1, 2) => 2,
            (4, 0, 1) | (4, 2, 3) => 0,
            (4, 0, 2) | (4, 1, 3) => 1,
            (4, 0, 3) | (4, 1, 2) => 2,
            _ => unreachable!("part pair ({i}, {j})"),
        }
    };
    let mut classes = vec![Vec::new(); 3];
    for (id, &(u, v)) in g.edges().iter().enumerate() {
        classes[class(part_of[u], part_of[v])].push(id);
    }
    EdgePartition::from_classes(m, &classes)
}

/// Summary of class memberships for one graph, with evidence for each flag.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RecognitionReport {
    pub schema: u32,
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    pub connected: bool,
    pub components: usize,
    /// `null` when disconnected.
    pub diameter: Dist,
    pub is_tree: bool,
    pub is_block_graph: bool,
    /// A biconnected component that is not a clique.
    pub non_clique_block: Option<Vec<usize>>,
    pub is_complete_multipartite: bool,
    pub part_sizes: Option<PartSizes>,
    pub parts: Option<Vec<Vec<usize>>>,
    pub is_paw_free: bool,
    pub induced_paw: Option<Vec<usize>>,
    #[serde(rename = "is_K3_free")]
    pub is_k3_free: bool,
    pub triangle: Option<Vec<usize>>,
    pub diameter_le_2: bool,
    /// Non-adjacent edge pair with `|Δ| = 3`, as `[e, f, Δ]`.
    pub long_delta_pair: Option<(EdgeId, EdgeId, DeltaSet)>,
    pub theta_bar_star_trivial: bool,
    pub theta_bar_class_count: usize,
    pub theta_bar_class_sizes: Vec<usize>,
}

pub fn classify(g: &Graph) -> RecognitionReport {
    let comps = g.connected_components();
    let d = bfs_all_pairs(g);
    let parts = multipartite_parts(g);
    let induced_paw = contains_induced(g, Pattern::Paw);
    let triangle = find_clique(g, 3);
    let diam = diameter_le_2_via_delta(g);
    let non_clique_block = non_clique_block(g);
    let classes = closure_classes(&EdgeRelation::of_graph_with(g, &d, Which::ThetaBar));
    RecognitionReport {
        schema: 1,
        graph6: emit_graph6(g),
        n: g.n(),
        m: g.m(),
        connected: comps.len() <= 1,
        components: comps.len(),
        diameter: d.max(),
        is_tree: is_tree(g),
        is_block_graph: non_clique_block.is_none(),
        non_clique_block,
        is_complete_multipartite: parts.is_some(),
        part_sizes: parts.as_ref().and_then(|p| PartSizes::new(p.iter().map(Vec::len).collect())),
        parts,
        is_paw_free: induced_paw.is_none(),
        induced_paw,
        is_k3_free: triangle.is_none(),
        triangle,
        diameter_le_2: diam.diameter_le_2,
        long_delta_pair: diam.witness,
        theta_bar_star_trivial: theta_bar_star_is_1trivial(g),
        theta_bar_class_count: classes.class_count(),
        theta_bar_class_sizes: classes.class_sizes(),
    }
}

/// Slow cross-checks for [`is_block_graph`] straight from the metric
/// characterizations. Cost grows with all vertex quadruples and subsets; meant
/// for small graphs in tests and the property suite.
pub mod oracles {
    use super::*;

    /// For all distinct `x, y, u, v` the two largest of the three pair sums
    /// `d(x,y)+d(u,v)`, `d(x,u)+d(y,v)`, `d(x,v)+d(y,u)` are equal.
    pub fn four_point_condition(g: &Graph) -> bool {
        let d = bfs_all_pairs(g);
        let n = g.n();
        for x in 0..n {
            for y in x + 1..n {
                for u in y + 1..n {
                    for v in u + 1..n {
                        let mut s = [
                            d.get(x, y) + d.get(u, v),
                            d.get(x, u) + d.get(y, v),
                            d.get(x, v) + d.get(y, u),
                        ];
                        s.sort();
                        if s[1] != s[2] {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// No isometric cycle of length at least 4 and no isometric diamond.
    /// Enumerates vertex subsets, so only for small graphs.
    pub fn no_isometric_long_cycle_or_diamond(g: &Graph) -> bool {
        let n = g.n();
        assert!(n <= 20, "subset enumeration limited to 20 vertices");
        let d = bfs_all_pairs(g);
        for mask in 0u32..(1 << n) {
            let k = mask.count_ones() as usize;
            if k < 4 {
                continue;
            }
            let vs: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            let sub = g.induced_subgraph(&vs);
            let is_cycle = sub.m() == k && (0..k).all(|v| sub.degree(v) == 2) && sub.is_connected();
            let is_diamond = k == 4 && sub.m() == 5;
            if is_cycle || is_diamond {
                let ds = bfs_all_pairs(&sub);
                let iso = (0..k).all(|i| (0..k).all(|j| ds.get(i, j) == d.get(vs[i], vs[j])));
                if iso {
                    return false;
                }
            }
        }
        true
    }
}
