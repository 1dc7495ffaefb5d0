//! Reconstruction of a graph `G` from an abstract graph `W` such that
//! 𝒢_Θ̄(G) ≅ W, for the case where Θ̄* has three classes.
//!
//! Such `G` are the complete multipartite graphs with three or four parts.
//! With parts of sizes `n1, n2, n3` the three components of 𝒢_Θ̄ are the rook
//! graphs `K_{n_i} □ K_{n_j}`; with four parts they are joins
//! `(K_{n_a} □ K_{n_b}) ▷◁ (K_{n_c} □ K_{n_d})`, one per perfect matching of
//! the parts. The search below factors each component accordingly, solves for
//! part sizes, and accepts only after checking the relation graph of the
//! candidate is isomorphic to the input.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph};
use crate::graph6::emit_graph6;
use crate::iso::find_isomorphism;
use crate::relations::{EdgeRelation, Which};

/// `g ≅ K_p □ K_q`, with `coords[v] = (i, j)`, `i < p`, `j < q`; two vertices
/// are adjacent iff they agree in exactly one coordinate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RookFactorization {
    pub p: usize,
    pub q: usize,
    pub coords: Vec<(usize, usize)>,
}

impl RookFactorization {
    /// `(min(p,q), max(p,q))`.
    pub fn sizes(&self) -> (usize, usize) {
        (self.p.min(self.q), self.p.max(self.q))
    }
}

pub fn factor_as_rook(g: &Graph) -> Option<RookFactorization> {
    let n = g.n();
    if n == 0 || !g.is_connected() {
        return None;
    }
    if 2 * g.m() == n * (n - 1) {
        return Some(RookFactorization { p: n, q: 1, coords: (0..n).map(|i| (i, 0)).collect() });
    }
    // N(v0) must be the disjoint union of its row and its column
    let nb = g.neighbors(0);
    let local = g.induced_subgraph(nb);
    let comps = local.connected_components();
    if comps.len() != 2 {
        return None;
    }
    let row: Vec<usize> = comps[0].iter().map(|&i| nb[i]).collect();
    let col: Vec<usize> = comps[1].iter().map(|&i| nb[i]).collect();
    if !g.is_clique(&row) || !g.is_clique(&col) {
        return None;
    }
    let (p, q) = (col.len() + 1, row.len() + 1);
    if p * q != n {
        return None;
    }
    let mut coords = vec![None; n];
    coords[0] = Some((0, 0));
    for (j, &v) in row.iter().enumerate() {
        coords[v] = Some((0, j + 1));
    }
    for (i, &v) in col.iter().enumerate() {
        coords[v] = Some((i + 1, 0));
    }
    for (i, &b) in col.iter().enumerate() {
        for (j, &a) in row.iter().enumerate() {
            let mut common = g.neighbors(a).iter().filter(|&&w| w != 0 && g.has_edge(b, w));
            let cell = *common.next()?;
            if common.next().is_some() || coords[cell].is_some() {
                return None;
            }
            coords[cell] = Some((i + 1, j + 1));
        }
    }
    let coords: Vec<(usize, usize)> = coords.into_iter().collect::<Option<_>>()?;
    for u in 0..n {
        for v in u + 1..n {
            let (a, b) = (coords[u], coords[v]);
            if g.has_edge(u, v) != ((a.0 == b.0) != (a.1 == b.1)) {
                return None;
            }
        }
    }
    Some(RookFactorization { p, q, coords })
}

/// One side of a join: the vertices (of the joined graph) and their rook
/// coordinates, parallel to `vertices`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RookSide {
    pub vertices: Vec<usize>,
    pub p: usize,
    pub q: usize,
    pub coords: Vec<(usize, usize)>,
}

impl RookSide {
    pub fn sizes(&self) -> (usize, usize) {
        (self.p.min(self.q), self.p.max(self.q))
    }
}

/// `g ≅ (K_p □ K_q) ▷◁ (K_r □ K_s)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct JoinOfRooks {
    pub left: RookSide,
    pub right: RookSide,
}

impl JoinOfRooks {
    /// The two sides' sorted sizes, smaller side first.
    pub fn sizes(&self) -> [(usize, usize); 2] {
        let (a, b) = (self.left.sizes(), self.right.sizes());
        [a.min(b), a.max(b)]
    }
}

pub fn factor_as_join_of_rooks(g: &Graph) -> Option<JoinOfRooks> {
    join_of_rooks_options(g).into_iter().next()
}

/// Every way to split `g` into two joined rook graphs, up to exchanging
/// vertices that are universal in `g` (those are interchangeable).
pub fn join_of_rooks_options(g: &Graph) -> Vec<JoinOfRooks> {
    let n = g.n();
    let mut out = Vec::new();
    if n < 2 {
        return out;
    }
    // sides of a join are unions of co-components; a rook graph contributes
    // isolated co-vertices when complete, else one or two co-components
    let cocomps = g.complement().connected_components();
    let (singles, big): (Vec<_>, Vec<_>) = cocomps.into_iter().partition(|c| c.len() == 1);
    let singles: Vec<usize> = singles.into_iter().map(|c| c[0]).collect();
    if big.len() > 4 {
        return out;
    }
    let mut seen = BTreeSet::new();
    for mask in 0u32..(1 << big.len()) {
        for t in 0..=singles.len() {
            let mut left: Vec<usize> = singles[..t].to_vec();
            let mut right: Vec<usize> = singles[t..].to_vec();
            for (i, c) in big.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    left.extend(c);
                } else {
                    right.extend(c);
                }
            }
            if left.is_empty() || right.is_empty() {
                continue;
            }
            left.sort_unstable();
            right.sort_unstable();
            if left > right || !seen.insert((left.clone(), right.clone())) {
                continue;
            }
            let side = |vs: Vec<usize>| {
                factor_as_rook(&g.induced_subgraph(&vs)).map(|r| RookSide { vertices: vs, p: r.p, q: r.q, coords: r.coords })
            };
            if let (Some(l), Some(r)) = (side(left), side(right)) {
                out.push(JoinOfRooks { left: l, right: r });
            }
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Case {
    #[serde(rename = "l3")]
    ThreeParts,
    #[serde(rename = "l4")]
    FourParts,
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Case::ThreeParts => "l3",
            Case::FourParts => "l4",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ComponentStructure {
    /// Coordinates are parallel to the component's vertex list.
    Rook { p: usize, q: usize, coords: Vec<(usize, usize)> },
    /// Side vertex lists refer to input vertices.
    JoinOfRooks { left: RookSide, right: RookSide },
    Unrecognized,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComponentReport {
    pub vertices: Vec<usize>,
    pub structure: ComponentStructure,
}

/// Where an input vertex lands: an edge of the reconstructed graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct EdgeImage {
    pub vertex: usize,
    pub edge: EdgeId,
    pub endpoints: (usize, usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Realization {
    pub schema: u32,
    pub realizable: bool,
    pub case: Option<Case>,
    /// Part sizes of the reconstructed complete multipartite graph, whose
    /// parts occupy consecutive vertex ranges in this order.
    pub parts: Option<Vec<usize>>,
    pub graph6: Option<String>,
    pub input_vertices: usize,
    pub components: Vec<ComponentReport>,
    pub bijection: Option<Vec<EdgeImage>>,
    pub reason: Option<String>,
    #[serde(skip)]
    pub graph: Option<Graph>,
}

impl Realization {
    fn reject(w: &Graph, components: Vec<ComponentReport>, reason: String) -> Self {
        Realization {
            schema: 1,
            realizable: false,
            case: None,
            parts: None,
            graph6: None,
            input_vertices: w.n(),
            components,
            bijection: None,
            reason: Some(reason),
            graph: None,
        }
    }
}

fn parts_label(parts: &[usize]) -> String {
    let s: Vec<String> = parts.iter().map(usize::to_string).collect();
    format!("K_{{{}}}", s.join(","))
}

/// Non-decreasing tuples of length `k` over `values`.
fn tuples(values: &[usize], k: usize) -> Vec<Vec<usize>> {
    fn go(values: &[usize], k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..values.len() {
            cur.push(values[i]);
            go(values, k, i, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(values, k, 0, &mut Vec::new(), &mut out);
    out
}

fn sorted_pair(a: usize, b: usize) -> (usize, usize) {
    (a.min(b), a.max(b))
}

fn edge_count(parts: &[usize]) -> usize {
    let mut m = 0;
    for i in 0..parts.len() {
        for j in i + 1..parts.len() {
            m += parts[i] * parts[j];
        }
    }
    m
}

/// Part sizes consistent with three rook components.
fn l3_candidates(rooks: &[(usize, usize)], w: usize) -> Vec<Vec<usize>> {
    let values: Vec<usize> = rooks.iter().flat_map(|&(a, b)| [a, b]).collect::<BTreeSet<_>>().into_iter().collect();
    let mut want = rooks.to_vec();
    want.sort_unstable();
    tuples(&values, 3)
        .into_iter()
        .filter(|t| {
            let mut got = vec![sorted_pair(t[0], t[1]), sorted_pair(t[0], t[2]), sorted_pair(t[1], t[2])];
            got.sort_unstable();
            got == want && edge_count(t) == w
        })
        .collect()
}

/// Part sizes consistent with three join-of-rooks components, each given by
/// its list of admissible splits.
fn l4_candidates(options: &[Vec<[(usize, usize); 2]>], w: usize) -> Vec<Vec<usize>> {
    let values: Vec<usize> = options
        .iter()
        .flatten()
        .flat_map(|s| [s[0].0, s[0].1, s[1].0, s[1].1])
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let split = |a: (usize, usize), b: (usize, usize)| if a <= b { [a, b] } else { [b, a] };
    let perms = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    tuples(&values, 4)
        .into_iter()
        .filter(|t| edge_count(t) == w)
        .filter(|t| {
            let need = [
                split(sorted_pair(t[0], t[1]), sorted_pair(t[2], t[3])),
                split(sorted_pair(t[0], t[2]), sorted_pair(t[1], t[3])),
                split(sorted_pair(t[0], t[3]), sorted_pair(t[1], t[2])),
            ];
            perms.iter().any(|p| (0..3).all(|c| options[c].contains(&need[p[c]])))
        })
        .collect()
}

/// Decides whether `w` is the Θ̄ relation graph of some graph whose Θ̄* has
/// three classes, and if so reconstructs it.
pub fn realize_theta_bar(w: &Graph) -> Realization {
    let comps = w.connected_components();
    if comps.len() != 3 {
        return Realization::reject(
            w,
            Vec::new(),
            format!("relation graph has {} components; exactly 3 are required", comps.len()),
        );
    }
    let subs: Vec<Graph> = comps.iter().map(|c| w.induced_subgraph(c)).collect();
    let rooks: Vec<Option<RookFactorization>> = subs.iter().map(factor_as_rook).collect();
    let joins: Vec<Vec<JoinOfRooks>> = subs.iter().map(join_of_rooks_options).collect();

    let rook_report = |i: usize, r: &RookFactorization| ComponentReport {
        vertices: comps[i].clone(),
        structure: ComponentStructure::Rook { p: r.p, q: r.q, coords: r.coords.clone() },
    };
    let join_report = |i: usize, j: &JoinOfRooks| {
        let lift = |s: &RookSide| RookSide {
            vertices: s.vertices.iter().map(|&v| comps[i][v]).collect(),
            p: s.p,
            q: s.q,
            coords: s.coords.clone(),
        };
        ComponentReport {
            vertices: comps[i].clone(),
            structure: ComponentStructure::JoinOfRooks { left: lift(&j.left), right: lift(&j.right) },
        }
    };

    let mut attempts: Vec<(Case, Vec<usize>)> = Vec::new();
    if rooks.iter().all(Option::is_some) {
        let pairs: Vec<(usize, usize)> = rooks.iter().map(|r| r.as_ref().unwrap().sizes()).collect();
        attempts.extend(l3_candidates(&pairs, w.n()).into_iter().map(|t| (Case::ThreeParts, t)));
    }
    if joins.iter().all(|o| !o.is_empty()) {
        let opts: Vec<Vec<[(usize, usize); 2]>> = joins.iter().map(|o| o.iter().map(JoinOfRooks::sizes).collect()).collect();
        attempts.extend(l4_candidates(&opts, w.n()).into_iter().map(|t| (Case::FourParts, t)));
    }

    for (case, parts) in &attempts {
        let g = Graph::complete_multipartite(parts).expect("positive part sizes");
        let rel = EdgeRelation::of_graph(&g, Which::ThetaBar);
        let Some(map) = find_isomorphism(w, rel.graph()) else {
            continue;
        };
        let components = (0..3)
            .map(|i| match case {
                Case::ThreeParts => rook_report(i, rooks[i].as_ref().unwrap()),
                Case::FourParts => join_report(i, &joins[i][0]),
            })
            .collect();
        let bijection = map
            .iter()
            .enumerate()
            .map(|(vertex, &edge)| EdgeImage { vertex, edge, endpoints: g.edge(edge) })
            .collect();
        return Realization {
            schema: 1,
            realizable: true,
            case: Some(*case),
            parts: Some(parts.clone()),
            graph6: Some(emit_graph6(&g)),
            input_vertices: w.n(),
            components,
            bijection: Some(bijection),
            reason: None,
            graph: Some(g),
        };
    }

    let components: Vec<ComponentReport> = (0..3)
        .map(|i| {
            if let Some(r) = &rooks[i] {
                rook_report(i, r)
            } else if let Some(j) = joins[i].first() {
                join_report(i, j)
            } else {
                ComponentReport { vertices: comps[i].clone(), structure: ComponentStructure::Unrecognized }
            }
        })
        .collect();
    let reason = if let Some((_, parts)) = attempts.first() {
        format!("relation graph of {} is not isomorphic to the input", parts_label(parts))
    } else if let Some(i) = (0..3).find(|&i| rooks[i].is_none() && joins[i].is_empty()) {
        format!("component {i} is neither a rook graph nor a join of two rook graphs")
    } else {
        "no part sizes are consistent with the component factorizations".to_string()
    };
    Realization::reject(w, components, reason)
}

/// A relation given as `{"vertices": m, "pairs": [[i, j], ...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairList {
    pub vertices: usize,
    pub pairs: Vec<(usize, usize)>,
}

impl PairList {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Relation(e.to_string()))
    }

    pub fn to_graph(&self) -> Result<Graph> {
        Ok(EdgeRelation::from_pairs(self.vertices, self.pairs.iter().copied())?.into_graph())
    }
}
