//! Simple undirected graphs with dense, stable vertex and edge ids.

use std::collections::VecDeque;
use std::fmt::Write as _;

use crate::distance::{bfs_all_pairs, Dist};
use crate::error::{Error, Result};

/// Position of an edge in [`Graph::edges`].
pub type EdgeId = usize;

/// A simple undirected graph on vertices `0..n`.
///
/// Edges are stored as `(u, v)` with `u < v`, sorted lexicographically, so the
/// `EdgeId` of an edge depends only on the edge set. Adjacency lists are sorted
/// and carry the id of the connecting edge.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<usize>>,
    adj_edge: Vec<Vec<EdgeId>>,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            adj: vec![Vec::new(); n],
            adj_edge: vec![Vec::new(); n],
            edges: Vec::new(),
        }
    }

    /// Builds a graph, rejecting self-loops, duplicate edges and out-of-range
    /// endpoints. Edge order in the input does not matter.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut list = Vec::new();
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            list.push((u.min(v), u.max(v)));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge(w[0].0, w[0].1));
        }
        Ok(Self::from_sorted(n, list))
    }

    /// `list` must be sorted, normalized and free of duplicates.
    pub(crate) fn from_sorted(n: usize, list: Vec<(usize, usize)>) -> Self {
        let mut adj = vec![Vec::new(); n];
        let mut adj_edge = vec![Vec::new(); n];
        for (id, &(u, v)) in list.iter().enumerate() {
            adj[u].push(v);
            adj_edge[u].push(id);
            adj[v].push(u);
            adj_edge[v].push(id);
        }
        // Lists for `u` are filled in increasing `v` already; the reverse
        // direction needs a sort.
        for v in 0..n {
            let mut pairs: Vec<(usize, EdgeId)> =
                adj[v].iter().copied().zip(adj_edge[v].iter().copied()).collect();
            pairs.sort_unstable();
            adj[v] = pairs.iter().map(|p| p.0).collect();
            adj_edge[v] = pairs.iter().map(|p| p.1).collect();
        }
        Graph {
            n,
            adj,
            adj_edge,
            edges: list,
        }
    }

    /// Normalizes and sorts, then builds. Caller guarantees no loops/duplicates.
    pub(crate) fn from_edges_trusted(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut list: Vec<(usize, usize)> = edges.into_iter().map(|(u, v)| (u.min(v), u.max(v))).collect();
        list.sort_unstable();
        debug_assert!(list.windows(2).all(|w| w[0] != w[1]));
        debug_assert!(list.iter().all(|&(u, v)| u != v && v < n));
        Self::from_sorted(n, list)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, id: EdgeId) -> (usize, usize) {
        self.edges[id]
    }

    pub fn check_edge(&self, id: EdgeId) -> Result<(usize, usize)> {
        self.edges.get(id).copied().ok_or(Error::EdgeOutOfRange { id, m: self.m() })
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    /// Ids of the edges incident to `v`, parallel to [`Graph::neighbors`].
    pub fn incident_edges(&self, v: usize) -> &[EdgeId] {
        &self.adj_edge[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn edge_id(&self, u: usize, v: usize) -> Option<EdgeId> {
        self.adj[u].binary_search(&v).ok().map(|i| self.adj_edge[u][i])
    }

    /// Whether two edges share an endpoint. An edge is adjacent to itself.
    pub fn edges_adjacent(&self, e: EdgeId, f: EdgeId) -> bool {
        let (a, b) = self.edges[e];
        let (x, y) = self.edges[f];
        a == x || a == y || b == x || b == y
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable();
        d
    }

    // ---- generators ----

    pub fn complete(n: usize) -> Self {
        Self::from_sorted(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect())
    }

    pub fn path(n: usize) -> Self {
        Self::from_sorted(n, (1..n).map(|v| (v - 1, v)).collect())
    }

    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::CycleTooSmall(n));
        }
        Ok(Self::from_edges_trusted(n, (0..n).map(|v| (v, (v + 1) % n))))
    }

    /// The star-tree `S_n`: centre `0` joined to `n` leaves, so `n + 1` vertices.
    pub fn star(n: usize) -> Self {
        Self::from_sorted(n + 1, (1..=n).map(|v| (0, v)).collect())
    }

    /// `K_{n_1,...,n_l}`; parts occupy consecutive vertex ranges in the given order.
    pub fn complete_multipartite(parts: &[usize]) -> Result<Self> {
        if parts.is_empty() || parts.contains(&0) {
            return Err(Error::InvalidPartSizes);
        }
        let n: usize = parts.iter().sum();
        let mut part_of = Vec::with_capacity(n);
        for (i, &s) in parts.iter().enumerate() {
            part_of.extend(std::iter::repeat_n(i, s));
        }
        let list = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|&(u, v)| part_of[u] != part_of[v])
            .collect();
        Ok(Self::from_sorted(n, list))
    }

    pub fn cartesian_product(g: &Graph, h: &Graph) -> Self {
        Self::cartesian_product_with_coords(g, h).0
    }

    /// Vertex `(a, x)` of `g □ h` gets index `a * h.n() + x`; the returned
    /// vector lists each vertex's factor coordinates.
    pub fn cartesian_product_with_coords(g: &Graph, h: &Graph) -> (Self, Vec<(usize, usize)>) {
        let hn = h.n;
        let idx = |a: usize, x: usize| a * hn + x;
        let mut list = Vec::with_capacity(g.n * h.m() + h.n * g.m());
        for a in 0..g.n {
            for &(x, y) in &h.edges {
                list.push((idx(a, x), idx(a, y)));
            }
        }
        for &(a, b) in &g.edges {
            for x in 0..hn {
                list.push((idx(a, x), idx(b, x)));
            }
        }
        let coords = (0..g.n).flat_map(|a| (0..hn).map(move |x| (a, x))).collect();
        (Self::from_edges_trusted(g.n * hn, list), coords)
    }

    /// Disjoint union plus every edge between the two sides. Vertices of `h`
    /// follow those of `g`.
    pub fn join(g: &Graph, h: &Graph) -> Self {
        let off = g.n;
        let mut list: Vec<(usize, usize)> = g.edges.clone();
        list.extend(h.edges.iter().map(|&(u, v)| (u + off, v + off)));
        for u in 0..g.n {
            for v in 0..h.n {
                list.push((u, v + off));
            }
        }
        Self::from_edges_trusted(g.n + h.n, list)
    }

    pub fn disjoint_union(g: &Graph, h: &Graph) -> Self {
        let off = g.n;
        let mut list: Vec<(usize, usize)> = g.edges.clone();
        list.extend(h.edges.iter().map(|&(u, v)| (u + off, v + off)));
        Self::from_sorted(g.n + h.n, list)
    }

    pub fn complement(&self) -> Self {
        let n = self.n;
        let list = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|&(u, v)| !self.has_edge(u, v))
            .collect();
        Self::from_sorted(n, list)
    }

    /// Subgraph induced by `vertices`; vertex `vertices[i]` becomes `i`.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Self {
        let k = vertices.len();
        let mut list = Vec::new();
        for i in 0..k {
            for j in i + 1..k {
                if self.has_edge(vertices[i], vertices[j]) {
                    list.push((i, j));
                }
            }
        }
        Self::from_sorted(k, list)
    }

    /// Relabels vertex `v` as `map[v]`. `map` must be a permutation of `0..n`.
    pub fn relabel(&self, map: &[usize]) -> Self {
        assert_eq!(map.len(), self.n, "relabel map has wrong length");
        Self::from_edges_trusted(self.n, self.edges.iter().map(|&(u, v)| (map[u], map[v])))
    }

    // ---- structure ----

    /// Components as sorted vertex lists, ordered by smallest vertex.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let mut comp = vec![usize::MAX; self.n];
        let mut out = Vec::new();
        let mut queue = VecDeque::new();
        for s in 0..self.n {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![s];
            comp[s] = id;
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if comp[w] == usize::MAX {
                        comp[w] = id;
                        members.push(w);
                        queue.push_back(w);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    pub fn diameter(&self) -> Dist {
        bfs_all_pairs(self).max()
    }

    /// Whether the subgraph induced by `subset` preserves all host distances.
    pub fn is_isometric_subgraph(&self, subset: &[usize]) -> Result<bool> {
        if subset.is_empty() {
            return Err(Error::EmptySubset);
        }
        if let Some(&v) = subset.iter().find(|&&v| v >= self.n) {
            return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
        }
        let host = bfs_all_pairs(self);
        let sub = bfs_all_pairs(&self.induced_subgraph(subset));
        Ok(subset.iter().enumerate().all(|(i, &u)| {
            subset.iter().enumerate().all(|(j, &v)| sub.get(i, j) == host.get(u, v))
        }))
    }

    pub fn is_clique(&self, vertices: &[usize]) -> bool {
        vertices
            .iter()
            .enumerate()
            .all(|(i, &u)| vertices[i + 1..].iter().all(|&v| self.has_edge(u, v)))
    }

    // ---- output ----

    pub fn to_dot(&self) -> String {
        let labels: Vec<String> = (0..self.n).map(|v| v.to_string()).collect();
        self.to_dot_labeled(&labels)
    }

    pub fn to_dot_labeled(&self, labels: &[String]) -> String {
        let mut s = String::from("graph G {\n");
        for (v, label) in labels.iter().enumerate().take(self.n) {
            if *label == v.to_string() {
                let _ = writeln!(s, "  {v};");
            } else {
                let _ = writeln!(s, "  {v} [label=\"{label}\"];");
            }
        }
        for &(u, v) in &self.edges {
            let _ = writeln!(s, "  {u} -- {v};");
        }
        s.push_str("}\n");
        s
    }
}
