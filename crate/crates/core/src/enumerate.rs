//! Exhaustive generation of small graphs up to isomorphism.
//!
//! Graphs on `n` vertices come from those on `n - 1` by adding a vertex with
//! every possible neighbourhood; duplicates are removed by canonical form.
//! For the connected corpus only connected parents and non-empty
//! neighbourhoods are used, which suffices since every connected graph has a
//! vertex whose removal leaves it connected.

use std::collections::HashSet;
use std::fs;
use std::path::PathBuf;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6::{emit_graph6, parse_graph6};

/// Largest vertex count the built-in generator accepts.
pub const BUILTIN_MAX_N: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CorpusSource {
    Builtin,
    /// One graph6 string per line; blank lines and an optional `>>graph6<<`
    /// prefix are ignored.
    Graph6File(PathBuf),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusSpec {
    pub n_max: usize,
    pub connected_only: bool,
    pub source: CorpusSource,
}

impl CorpusSpec {
    pub fn connected(n_max: usize) -> Self {
        CorpusSpec { n_max, connected_only: true, source: CorpusSource::Builtin }
    }

    pub fn all(n_max: usize) -> Self {
        CorpusSpec { n_max, connected_only: false, source: CorpusSource::Builtin }
    }
}

/// Graphs on `1..=n_max` vertices, ordered by vertex count and then by
/// graph6 string. Built-in graphs are canonically labelled and pairwise
/// non-isomorphic; file graphs are kept as given.
pub fn enumerate_graphs(spec: &CorpusSpec) -> Result<Vec<Graph>> {
    let mut graphs = match &spec.source {
        CorpusSource::Builtin => builtin(spec.n_max, spec.connected_only)?,
        CorpusSource::Graph6File(path) => {
            let text = fs::read_to_string(path).map_err(|e| Error::Corpus(format!("{}: {e}", path.display())))?;
            parse_graph6_lines(&text)?
                .into_iter()
                .filter(|g| g.n() >= 1 && g.n() <= spec.n_max && (!spec.connected_only || g.is_connected()))
                .collect()
        }
    };
    graphs.sort_by_cached_key(|g| (g.n(), emit_graph6(g)));
    Ok(graphs)
}

pub fn parse_graph6_lines(text: &str) -> Result<Vec<Graph>> {
    text.lines()
        .enumerate()
        .filter_map(|(i, line)| {
            let line = line.trim();
            let line = line.strip_prefix(">>graph6<<").unwrap_or(line);
            (!line.is_empty()).then(|| {
                parse_graph6(line).map_err(|e| Error::Corpus(format!("line {}: {e}", i + 1)))
            })
        })
        .collect()
}

fn builtin(n_max: usize, connected_only: bool) -> Result<Vec<Graph>> {
    if n_max > BUILTIN_MAX_N {
        return Err(Error::CorpusTooLarge { requested: n_max, max: BUILTIN_MAX_N });
    }
    let mut out = Vec::new();
    if n_max == 0 {
        return Ok(out);
    }
    let mut level = vec![Graph::empty(1)];
    out.extend(level.iter().cloned());
    for n in 2..=n_max {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for parent in &level {
            let first = if connected_only { 1 } else { 0 };
            for mask in first..1u32 << (n - 1) {
                let mut edges = parent.edges().to_vec();
                edges.extend((0..n - 1).filter(|&u| mask >> u & 1 == 1).map(|u| (u, n - 1)));
                let child = canonical_form(&Graph::from_edges_trusted(n, edges));
                if seen.insert(emit_graph6(&child)) {
                    next.push(child);
                }
            }
        }
        out.extend(next.iter().cloned());
        level = next;
    }
    Ok(out)
}

/// The relabelling of `g` with the smallest graph6 body among those reachable
/// by individualization and refinement. Two graphs are isomorphic iff their
/// canonical forms are equal.
pub fn canonical_form(g: &Graph) -> Graph {
    let n = g.n();
    let adj = dense(g);
    let cells = refine(&adj, n, vec![(0..n).collect()]);
    let mut best: Option<(Vec<bool>, Vec<usize>)> = None;
    search(&adj, n, cells, &mut best);
    let order = best.map(|(_, o)| o).unwrap_or_default();
    let mut map = vec![0; n];
    for (pos, &v) in order.iter().enumerate() {
        map[v] = pos;
    }
    g.relabel(&map)
}

pub fn canonical_graph6(g: &Graph) -> String {
    emit_graph6(&canonical_form(g))
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

/// Splits cells by counts of neighbours in every cell until stable. Split
/// pieces are ordered by their signature, so the result is invariant.
fn refine(adj: &[bool], n: usize, mut cells: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    loop {
        let mut cell_of = vec![0; n];
        for (i, c) in cells.iter().enumerate() {
            for &v in c {
                cell_of[v] = i;
            }
        }
        let k = cells.len();
        let mut next = Vec::with_capacity(n);
        for c in &cells {
            if c.len() == 1 {
                next.push(c.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<usize>, usize)> = c
                .iter()
                .map(|&v| {
                    let mut counts = vec![0; k];
                    for w in 0..n {
                        if adj[v * n + w] {
                            counts[cell_of[w]] += 1;
                        }
                    }
                    (counts, v)
                })
                .collect();
            keyed.sort();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    next.push(keyed[start..i].iter().map(|x| x.1).collect());
                    start = i;
                }
            }
        }
        if next.len() == k {
            return next;
        }
        cells = next;
    }
}

fn search(adj: &[bool], n: usize, cells: Vec<Vec<usize>>, best: &mut Option<(Vec<bool>, Vec<usize>)>) {
    let Some(target) = cells.iter().position(|c| c.len() > 1) else {
        let order: Vec<usize> = cells.into_iter().map(|c| c[0]).collect();
        // graph6 bit order: column by column over the upper triangle
        let mut code = Vec::with_capacity(n * n.saturating_sub(1) / 2);
        for j in 1..n {
            for i in 0..j {
                code.push(adj[order[i] * n + order[j]]);
            }
        }
        // same order as comparing graph6 bodies
        if best.as_ref().is_none_or(|(b, _)| code < *b) {
            *best = Some((code, order));
        }
        return;
    };
    for &v in &cells[target] {
        let mut split = cells[..target].to_vec();
        split.push(vec![v]);
        split.push(cells[target].iter().copied().filter(|&w| w != v).collect());
        split.extend(cells[target + 1..].iter().cloned());
        search(adj, n, refine(adj, n, split), best);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::iso::is_isomorphic;

    fn counts(graphs: &[Graph], n_max: usize) -> Vec<usize> {
        (1..=n_max).map(|n| graphs.iter().filter(|g| g.n() == n).count()).collect()
    }

    #[test]
    fn small_counts() {
        let c = enumerate_graphs(&CorpusSpec::connected(6)).unwrap();
        assert_eq!(counts(&c, 6), vec![1, 1, 2, 6, 21, 112]);
        let a = enumerate_graphs(&CorpusSpec::all(5)).unwrap();
        assert_eq!(counts(&a, 5), vec![1, 2, 4, 11, 34]);
    }

    #[test]
    fn canonical_form_is_invariant() {
        let g = Graph::from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (4, 5)]).unwrap();
        let h = g.relabel(&[3, 5, 0, 2, 1, 4]);
        assert_eq!(canonical_graph6(&g), canonical_graph6(&h));
        assert!(is_isomorphic(&canonical_form(&g), &g));
        assert_ne!(canonical_graph6(&Graph::cycle(6).unwrap()), canonical_graph6(&Graph::disjoint_union(&Graph::complete(3), &Graph::complete(3))));
    }

    #[test]
    fn builtin_limit() {
        assert_eq!(
            enumerate_graphs(&CorpusSpec::connected(9)),
            Err(Error::CorpusTooLarge { requested: 9, max: 8 })
        );
        assert!(enumerate_graphs(&CorpusSpec::connected(0)).unwrap().is_empty());
    }

    #[test]
    fn graph6_lines() {
        let gs = parse_graph6_lines(">>graph6<<Bw\n\nDQc\n").unwrap();
        assert_eq!(gs.len(), 2);
        assert!(parse_graph6_lines("Bw\nzz\n").is_err());
    }
}
