//! Isomorphism testing for small graphs.
//!
//! Backtracking over a colour-refined vertex order. Intended for graphs up to a
//! few dozen vertices; highly symmetric non-isomorphic pairs that colour
//! refinement cannot tell apart may take exponential time.

use std::collections::BTreeMap;

use crate::graph::Graph;

pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    find_isomorphism(g, h).is_some()
}

/// Returns `map` with `map[v]` the image in `h` of vertex `v` of `g`.
pub fn find_isomorphism(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    if g.n() != h.n() || g.m() != h.m() || g.degree_sequence() != h.degree_sequence() {
        return None;
    }
    let gc = g.connected_components();
    let hc = h.connected_components();
    if gc.len() != hc.len() {
        return None;
    }
    if gc.len() == 1 {
        return connected_isomorphism(g, h);
    }
    // Isomorphism is an equivalence relation, so greedy matching of
    // components is complete.
    let gs: Vec<Graph> = gc.iter().map(|c| g.induced_subgraph(c)).collect();
    let hs: Vec<Graph> = hc.iter().map(|c| h.induced_subgraph(c)).collect();
    let mut used = vec![false; hs.len()];
    let mut map = vec![usize::MAX; g.n()];
    for (i, gi) in gs.iter().enumerate() {
        let mut found = false;
        for (j, hj) in hs.iter().enumerate() {
            if used[j] || gi.n() != hj.n() || gi.m() != hj.m() {
                continue;
            }
            if let Some(sub) = connected_isomorphism(gi, hj) {
                for (a, &b) in sub.iter().enumerate() {
                    map[gc[i][a]] = hc[j][b];
                }
                used[j] = true;
                found = true;
                break;
            }
        }
        if !found {
            return None;
        }
    }
    Some(map)
}

/// Stable colours of the two graphs under joint colour refinement, or `None`
/// if the colour histograms diverge.
fn refine_jointly(g: &Graph, h: &Graph) -> Option<(Vec<usize>, Vec<usize>)> {
    let n = g.n();
    let mut cg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut ch: Vec<usize> = (0..n).map(|v| h.degree(v)).collect();
    let mut classes = 0;
    loop {
        let sig = |gr: &Graph, c: &[usize], v: usize| {
            let mut ns: Vec<usize> = gr.neighbors(v).iter().map(|&w| c[w]).collect();
            ns.sort_unstable();
            (c[v], ns)
        };
        let sg: Vec<_> = (0..n).map(|v| sig(g, &cg, v)).collect();
        let sh: Vec<_> = (0..n).map(|v| sig(h, &ch, v)).collect();
        let mut ids = BTreeMap::new();
        for s in sg.iter().chain(sh.iter()) {
            let next = ids.len();
            ids.entry(s.clone()).or_insert(next);
        }
        cg = sg.iter().map(|s| ids[s]).collect();
        ch = sh.iter().map(|s| ids[s]).collect();
        let mut hist_g = cg.clone();
        let mut hist_h = ch.clone();
        hist_g.sort_unstable();
        hist_h.sort_unstable();
        if hist_g != hist_h {
            return None;
        }
        if ids.len() == classes {
            return Some((cg, ch));
        }
        classes = ids.len();
    }
}

fn connected_isomorphism(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    let n = g.n();
    if n == 0 {
        return Some(Vec::new());
    }
    let (cg, ch) = refine_jointly(g, h)?;
    let mut class_size = vec![0usize; n * 2 + 1];
    for &c in &cg {
        if c >= class_size.len() {
            class_size.resize(c + 1, 0);
        }
        class_size[c] += 1;
    }

    // Order: rarest colour first, then always the vertex with most
    // already-ordered neighbours.
    let mut order = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    let mut links = vec![0usize; n];
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !placed[v])
            .min_by_key(|&v| (std::cmp::Reverse(links[v]), class_size[cg[v]], v))
            .unwrap();
        placed[v] = true;
        order.push(v);
        for &w in g.neighbors(v) {
            links[w] += 1;
        }
    }

    let adj_g = dense(g);
    let adj_h = dense(h);
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    if extend(0, &order, &cg, &ch, &adj_g, &adj_h, n, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}

fn dense(g: &Graph) -> Vec<bool> {
    let n = g.n();
    let mut m = vec![false; n * n];
    for &(u, v) in g.edges() {
        m[u * n + v] = true;
        m[v * n + u] = true;
    }
    m
}

#[allow(clippy::too_many_arguments)]
fn extend(
    depth: usize,
    order: &[usize],
    cg: &[usize],
    ch: &[usize],
    adj_g: &[bool],
    adj_h: &[bool],
    n: usize,
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    if depth == order.len() {
        return true;
    }
    let v = order[depth];
    for w in 0..n {
        if used[w] || ch[w] != cg[v] {
            continue;
        }
        let consistent = order[..depth]
            .iter()
            .all(|&u| adj_g[v * n + u] == adj_h[w * n + map[u]]);
        if !consistent {
            continue;
        }
        map[v] = w;
        used[w] = true;
        if extend(depth + 1, order, cg, ch, adj_g, adj_h, n, map, used) {
            return true;
        }
        used[w] = false;
        map[v] = usize::MAX;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check_witness(g: &Graph, h: &Graph, map: &[usize]) {
        for u in 0..g.n() {
            for v in 0..g.n() {
                if u != v {
                    assert_eq!(g.has_edge(u, v), h.has_edge(map[u], map[v]));
                }
            }
        }
    }

    #[test]
    fn c4_is_k2_box_k2() {
        let k2 = Graph::complete(2);
        let p = Graph::cartesian_product(&k2, &k2);
        let c4 = Graph::cycle(4).unwrap();
        let map = find_isomorphism(&c4, &p).unwrap();
        check_witness(&c4, &p, &map);
    }

    #[test]
    fn k3_vs_p3() {
        assert!(!is_isomorphic(&Graph::complete(3), &Graph::path(3)));
    }

    #[test]
    fn k122_is_c4_join_k1() {
        // K_{1,2,2}: the two parts of size 2 form a C4 = K_{2,2}; the
        // singleton part is universal.
        let lhs = Graph::complete_multipartite(&[1, 2, 2]).unwrap();
        let rhs = Graph::join(&Graph::cycle(4).unwrap(), &Graph::complete(1));
        let map = find_isomorphism(&lhs, &rhs).unwrap();
        check_witness(&lhs, &rhs, &map);
    }

    #[test]
    fn same_degrees_different_graphs() {
        // C6 and two triangles are both 2-regular on 6 vertices
        let c6 = Graph::cycle(6).unwrap();
        let two_k3 = Graph::disjoint_union(&Graph::complete(3), &Graph::complete(3));
        assert!(!is_isomorphic(&c6, &two_k3));
        // K3,3 and the prism are both 3-regular on 6 vertices
        let k33 = Graph::complete_multipartite(&[3, 3]).unwrap();
        let prism = Graph::cartesian_product(&Graph::complete(3), &Graph::complete(2));
        assert!(!is_isomorphic(&k33, &prism));
    }

    #[test]
    fn disconnected_witness() {
        let g = Graph::disjoint_union(&Graph::path(3), &Graph::complete(3));
        let h = Graph::disjoint_union(&Graph::complete(3), &Graph::path(3)).relabel(&[5, 0, 3, 1, 4, 2]);
        let map = find_isomorphism(&g, &h).unwrap();
        check_witness(&g, &h, &map);
    }

    #[test]
    fn rook_graph_relabelled() {
        let k3 = Graph::complete(3);
        let r = Graph::cartesian_product(&k3, &k3);
        let perm = [4, 7, 1, 0, 8, 2, 6, 3, 5];
        let s = r.relabel(&perm);
        let map = find_isomorphism(&r, &s).unwrap();
        check_witness(&r, &s, &map);
    }
}
