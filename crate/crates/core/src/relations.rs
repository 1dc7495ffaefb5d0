//! The Djoković–Winkler relation Θ, its reflexive complement Θ̄, and the
//! equivalence classes of their transitive closures.
//!
//! For edges `e = {a, b}` and `f = {x, y}`, `(e, f) ∈ Θ` iff
//! `d(a,x) + d(b,y) != d(a,y) + d(b,x)`. Θ is treated as reflexive; Θ̄ holds for
//! `e = f` and for distinct pairs where the two sums agree. Sums are taken over
//! extended naturals, so distinct edges in different components are always
//! Θ̄-related.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::distance::{bfs_all_pairs, Dist, DistanceMatrix};
use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph};

/// Δ_ef: the set of the four endpoint distances of two edges.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct DeltaSet(BTreeSet<Dist>);

impl DeltaSet {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, d: Dist) -> bool {
        self.0.contains(&d)
    }

    pub fn iter(&self) -> impl Iterator<Item = Dist> + '_ {
        self.0.iter().copied()
    }

    pub fn min(&self) -> Option<Dist> {
        self.0.first().copied()
    }

    /// Whether the finite members are exactly `{k, k+1, ..., k+len-1}`.
    pub fn is_consecutive(&self) -> bool {
        let vals: Option<Vec<u32>> = self.iter().map(Dist::finite).collect();
        match vals {
            Some(v) => v.windows(2).all(|w| w[1] == w[0] + 1),
            None => false,
        }
    }

    pub fn from_values(values: impl IntoIterator<Item = u32>) -> Self {
        DeltaSet(values.into_iter().map(Dist::Fin).collect())
    }
}

impl fmt::Display for DeltaSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, d) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{d}")?;
        }
        f.write_str("}")
    }
}

pub fn delta_set(g: &Graph, d: &DistanceMatrix, e: EdgeId, f: EdgeId) -> Result<DeltaSet> {
    let (a, b) = g.check_edge(e)?;
    let (x, y) = g.check_edge(f)?;
    Ok(DeltaSet([d.get(a, x), d.get(b, y), d.get(a, y), d.get(b, x)].into_iter().collect()))
}

#[inline]
fn sums_differ(g: &Graph, d: &DistanceMatrix, e: EdgeId, f: EdgeId) -> bool {
    let (a, b) = g.edge(e);
    let (x, y) = g.edge(f);
    d.get(a, x) + d.get(b, y) != d.get(a, y) + d.get(b, x)
}

/// `(e, f) ∈ Θ`, evaluated with the stored endpoint order of each edge.
pub fn theta_related(g: &Graph, d: &DistanceMatrix, e: EdgeId, f: EdgeId) -> Result<bool> {
    g.check_edge(e)?;
    g.check_edge(f)?;
    Ok(e == f || sums_differ(g, d, e, f))
}

/// `(e, f) ∈ Θ̄`.
pub fn theta_bar_related(g: &Graph, d: &DistanceMatrix, e: EdgeId, f: EdgeId) -> Result<bool> {
    g.check_edge(e)?;
    g.check_edge(f)?;
    Ok(e == f || !sums_differ(g, d, e, f))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Which {
    Theta,
    ThetaBar,
}

impl fmt::Display for Which {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Which::Theta => "theta",
            Which::ThetaBar => "thetabar",
        })
    }
}

impl FromStr for Which {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "theta" => Ok(Which::Theta),
            "thetabar" | "theta-bar" | "theta_bar" => Ok(Which::ThetaBar),
            _ => Err(Error::Relation(format!("unknown relation `{s}` (expected theta or thetabar)"))),
        }
    }
}

/// A symmetric, reflexive relation on `0..m`, stored as its graph
/// representation: vertices are the ground elements, edges the related
/// distinct pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeRelation {
    graph: Graph,
    /// Host-graph endpoints of each element, when the relation lives on the
    /// edges of a known graph.
    endpoints: Option<Vec<(usize, usize)>>,
}

impl EdgeRelation {
    pub fn from_graph(graph: Graph) -> Self {
        EdgeRelation { graph, endpoints: None }
    }

    /// Relation on `0..m` from a list of related pairs. Self-pairs are
    /// implied and ignored; repeated or mirrored pairs are merged.
    pub fn from_pairs(m: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for (i, j) in pairs {
            if i >= m || j >= m {
                return Err(Error::VertexOutOfRange { vertex: i.max(j), n: m });
            }
            if i != j {
                set.insert((i.min(j), i.max(j)));
            }
        }
        Ok(Self::from_graph(Graph::from_sorted(m, set.into_iter().collect())))
    }

    /// 𝒢_Θ or 𝒢_Θ̄ of `g`.
    pub fn of_graph(g: &Graph, which: Which) -> Self {
        Self::of_graph_with(g, &bfs_all_pairs(g), which)
    }

    pub fn of_graph_with(g: &Graph, d: &DistanceMatrix, which: Which) -> Self {
        let m = g.m();
        let mut pairs = Vec::new();
        for e in 0..m {
            for f in e + 1..m {
                let theta = sums_differ(g, d, e, f);
                if theta == (which == Which::Theta) {
                    pairs.push((e, f));
                }
            }
        }
        EdgeRelation {
            graph: Graph::from_sorted(m, pairs),
            endpoints: Some(g.edges().to_vec()),
        }
    }

    /// Ground set size.
    pub fn m(&self) -> usize {
        self.graph.n()
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }

    pub fn endpoints(&self) -> Option<&[(usize, usize)]> {
        self.endpoints.as_deref()
    }

    pub fn related(&self, e: usize, f: usize) -> bool {
        e == f || self.graph.has_edge(e, f)
    }

    /// Related distinct pairs `(e, f)`, `e < f`, in lexicographic order.
    pub fn pairs(&self) -> &[(usize, usize)] {
        self.graph.edges()
    }

    /// The reflexive complement: distinct pairs swap membership.
    pub fn complement(&self) -> Self {
        EdgeRelation {
            graph: self.graph.complement(),
            endpoints: self.endpoints.clone(),
        }
    }

    /// `R = R*`: every component of the relation graph is a clique.
    pub fn is_closed(&self) -> bool {
        self.graph
            .connected_components()
            .iter()
            .all(|c| c.iter().map(|&v| self.graph.degree(v)).all(|d| d + 1 == c.len()))
    }

    /// Vertex labels for DOT output: `uv` from the host edge `{u, v}`.
    pub fn labels(&self) -> Vec<String> {
        match &self.endpoints {
            Some(ep) => {
                let wide = ep.iter().any(|&(_, v)| v >= 10);
                ep.iter()
                    .map(|&(u, v)| if wide { format!("{u},{v}") } else { format!("{u}{v}") })
                    .collect()
            }
            None => (0..self.m()).map(|i| i.to_string()).collect(),
        }
    }

    pub fn to_dot(&self) -> String {
        self.graph.to_dot_labeled(&self.labels())
    }
}

/// Classes of a transitive closure.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EdgePartition {
    class_of: Vec<usize>,
    count: usize,
}

impl EdgePartition {
    /// Builds from any class labelling; ids are renumbered densely.
    pub fn from_labels(labels: &[usize]) -> Self {
        let mut seen = std::collections::HashMap::new();
        let class_of = labels
            .iter()
            .map(|&l| {
                let next = seen.len();
                *seen.entry(l).or_insert(next)
            })
            .collect();
        EdgePartition { class_of, count: seen.len() }
    }

    /// Builds from explicit classes, keeping their order as class ids.
    pub fn from_classes(m: usize, classes: &[Vec<EdgeId>]) -> Self {
        let mut class_of = vec![usize::MAX; m];
        for (id, c) in classes.iter().enumerate() {
            for &e in c {
                class_of[e] = id;
            }
        }
        debug_assert!(class_of.iter().all(|&c| c != usize::MAX));
        EdgePartition { class_of, count: classes.len() }
    }

    pub fn class_of(&self, e: EdgeId) -> usize {
        self.class_of[e]
    }

    pub fn labels(&self) -> &[usize] {
        &self.class_of
    }

    pub fn class_count(&self) -> usize {
        self.count
    }

    pub fn len(&self) -> usize {
        self.class_of.len()
    }

    pub fn is_empty(&self) -> bool {
        self.class_of.is_empty()
    }

    pub fn classes(&self) -> Vec<Vec<EdgeId>> {
        let mut out = vec![Vec::new(); self.count];
        for (e, &c) in self.class_of.iter().enumerate() {
            out[c].push(e);
        }
        out
    }

    pub fn class_sizes(&self) -> Vec<usize> {
        let mut s: Vec<usize> = self.classes().iter().map(Vec::len).collect();
        s.sort_unstable();
        s
    }

    /// Equality up to renaming of class ids.
    pub fn same_partition(&self, other: &EdgePartition) -> bool {
        self.len() == other.len()
            && Self::from_labels(&self.class_of).class_of == Self::from_labels(&other.class_of).class_of
    }
}

/// Connected components of the relation graph, ids by first occurrence.
pub fn closure_classes(r: &EdgeRelation) -> EdgePartition {
    let m = r.m();
    let mut uf = UnionFind::new(m);
    for &(e, f) in r.pairs() {
        uf.union(e, f);
    }
    let roots: Vec<usize> = (0..m).map(|e| uf.find(e)).collect();
    EdgePartition::from_labels(&roots)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "classes", rename_all = "kebab-case")]
pub enum Triviality {
    OneTrivial,
    EdgeTrivial,
    Neither(usize),
}

/// `OneTrivial` when there is a single class (checked first, so a one-edge
/// graph is `OneTrivial`), `EdgeTrivial` when every element is its own class.
pub fn triviality(r: &EdgeRelation, p: &EdgePartition) -> Triviality {
    let k = p.class_count();
    if k == 1 {
        Triviality::OneTrivial
    } else if k == r.m() {
        Triviality::EdgeTrivial
    } else {
        Triviality::Neither(k)
    }
}

pub fn is_closed(r: &EdgeRelation) -> bool {
    r.is_closed()
}

struct UnionFind {
    parent: Vec<usize>,
    rank: Vec<u8>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect(), rank: vec![0; n] }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return;
        }
        match self.rank[ra].cmp(&self.rank[rb]) {
            std::cmp::Ordering::Less => self.parent[ra] = rb,
            std::cmp::Ordering::Greater => self.parent[rb] = ra,
            std::cmp::Ordering::Equal => {
                self.parent[rb] = ra;
                self.rank[ra] += 1;
            }
        }
    }
}
