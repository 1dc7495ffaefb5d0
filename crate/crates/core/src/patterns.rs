//! Named small graphs and induced-subgraph search.

use std::fmt;
use std::str::FromStr;

use crate::error::Error;
use crate::graph::Graph;
use crate::iso::is_isomorphic;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Pattern {
    K2,
    K3,
    TwoK2,
    /// Triangle with a pendant edge.
    Paw,
    C4,
    /// House (square with a roof) plus both diagonals of the square.
    XHouse,
    /// `P4` joined to a dominating vertex.
    Gem,
    /// `K4` minus an edge, `K_{1,1,2}`.
    Diamond,
    P4,
    K4,
    K5,
    K23,
}

impl Pattern {
    pub const ALL: [Pattern; 12] = [
        Pattern::K2,
        Pattern::K3,
        Pattern::TwoK2,
        Pattern::Paw,
        Pattern::C4,
        Pattern::XHouse,
        Pattern::Gem,
        Pattern::Diamond,
        Pattern::P4,
        Pattern::K4,
        Pattern::K5,
        Pattern::K23,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Pattern::K2 => "K2",
            Pattern::K3 => "K3",
            Pattern::TwoK2 => "2K2",
            Pattern::Paw => "paw",
            Pattern::C4 => "C4",
            Pattern::XHouse => "X-house",
            Pattern::Gem => "gem",
            Pattern::Diamond => "diamond",
            Pattern::P4 => "P4",
            Pattern::K4 => "K4",
            Pattern::K5 => "K5",
            Pattern::K23 => "K2,3",
        }
    }

    pub fn graph(self) -> Graph {
        let edges: &[(usize, usize)] = match self {
            Pattern::K2 => &[(0, 1)],
            Pattern::K3 => &[(0, 1), (0, 2), (1, 2)],
            Pattern::TwoK2 => &[(0, 1), (2, 3)],
            Pattern::Paw => &[(0, 1), (0, 2), (1, 2), (2, 3)],
            Pattern::C4 => &[(0, 1), (1, 2), (2, 3), (0, 3)],
            // square 0-1-2-3, roof 4 on {0,1}, diagonals {0,2} and {1,3}
            Pattern::XHouse => &[(0, 1), (1, 2), (2, 3), (0, 3), (0, 4), (1, 4), (0, 2), (1, 3)],
            // path 0-1-2-3 dominated by 4
            Pattern::Gem => &[(0, 1), (1, 2), (2, 3), (0, 4), (1, 4), (2, 4), (3, 4)],
            Pattern::Diamond => &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)],
            Pattern::P4 => &[(0, 1), (1, 2), (2, 3)],
            Pattern::K4 => return Graph::complete(4),
            Pattern::K5 => return Graph::complete(5),
            Pattern::K23 => return Graph::complete_multipartite(&[2, 3]).unwrap(),
        };
        let n = edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap();
        Graph::from_edges(n, edges.iter().copied()).unwrap()
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Pattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let key: String = s
            .chars()
            .filter(|c| !matches!(c, '-' | '_' | ',' | ' '))
            .collect::<String>()
            .to_ascii_lowercase();
        Ok(match key.as_str() {
            "k2" => Pattern::K2,
            "k3" | "triangle" => Pattern::K3,
            "2k2" => Pattern::TwoK2,
            "paw" => Pattern::Paw,
            "c4" => Pattern::C4,
            "xhouse" => Pattern::XHouse,
            "gem" => Pattern::Gem,
            "diamond" => Pattern::Diamond,
            "p4" => Pattern::P4,
            "k4" => Pattern::K4,
            "k5" => Pattern::K5,
            "k23" => Pattern::K23,
            _ => return Err(Error::UnknownPattern(s.to_string())),
        })
    }
}

/// Some vertex set (sorted) inducing `pattern` in `g`, if any.
pub fn contains_induced(g: &Graph, pattern: Pattern) -> Option<Vec<usize>> {
    find_induced(g, &pattern.graph())
}

/// Some vertex set (sorted) inducing a copy of `h` in `g`, if any.
pub fn find_induced(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    let k = h.n();
    if k > g.n() {
        return None;
    }
    let target_degrees = h.degree_sequence();
    let max_deg = target_degrees.last().copied().unwrap_or(0);
    let min_deg = target_degrees.first().copied().unwrap_or(0);
    // a vertex of the copy keeps at least its pattern degree
    let eligible: Vec<usize> = (0..g.n()).filter(|&v| g.degree(v) >= min_deg).collect();
    let mut chosen = Vec::with_capacity(k);
    let mut found = None;
    search(g, h, &eligible, 0, k, max_deg, &target_degrees, &mut chosen, &mut found);
    found
}

#[allow(clippy::too_many_arguments)]
fn search(
    g: &Graph,
    h: &Graph,
    pool: &[usize],
    start: usize,
    k: usize,
    max_deg: usize,
    target: &[usize],
    chosen: &mut Vec<usize>,
    found: &mut Option<Vec<usize>>,
) {
    if found.is_some() {
        return;
    }
    if chosen.len() == k {
        let sub = g.induced_subgraph(chosen);
        if sub.m() == h.m() && sub.degree_sequence() == target && is_isomorphic(&sub, h) {
            *found = Some(chosen.clone());
        }
        return;
    }
    for i in start..pool.len() {
        if pool.len() - i < k - chosen.len() {
            break;
        }
        let v = pool[i];
        // prune: no chosen vertex may exceed the largest pattern degree
        let over = chosen.iter().any(|&u| {
            g.has_edge(u, v) && chosen.iter().filter(|&&w| g.has_edge(u, w)).count() + 1 > max_deg
        });
        if over {
            continue;
        }
        chosen.push(v);
        search(g, h, pool, i + 1, k, max_deg, target, chosen, found);
        chosen.pop();
        if found.is_some() {
            return;
        }
    }
}

/// A clique of the given size, if any.
pub fn find_clique(g: &Graph, size: usize) -> Option<Vec<usize>> {
    fn grow(g: &Graph, cand: &[usize], size: usize, cur: &mut Vec<usize>) -> bool {
        if cur.len() == size {
            return true;
        }
        for (i, &v) in cand.iter().enumerate() {
            if cand.len() - i < size - cur.len() {
                break;
            }
            let next: Vec<usize> = cand[i + 1..].iter().copied().filter(|&w| g.has_edge(v, w)).collect();
            cur.push(v);
            if grow(g, &next, size, cur) {
                return true;
            }
            cur.pop();
        }
        false
    }
    let all: Vec<usize> = (0..g.n()).collect();
    let mut cur = Vec::new();
    grow(g, &all, size, &mut cur).then_some(cur)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pattern_shapes() {
        let counts: Vec<(usize, usize)> = Pattern::ALL.iter().map(|p| (p.graph().n(), p.graph().m())).collect();
        assert_eq!(
            counts,
            vec![(2, 1), (3, 3), (4, 2), (4, 4), (4, 4), (5, 8), (5, 7), (4, 5), (4, 3), (4, 6), (5, 10), (5, 6)]
        );
        // X-house misses exactly a P3 of K5, the gem misses a P4
        let xc = Pattern::XHouse.graph().complement();
        assert!(is_isomorphic(&xc, &Graph::disjoint_union(&Graph::path(3), &Graph::empty(2))));
        let gc = Pattern::Gem.graph().complement();
        assert!(is_isomorphic(&gc, &Graph::disjoint_union(&Graph::path(4), &Graph::empty(1))));
    }

    #[test]
    fn names_round_trip() {
        for p in Pattern::ALL {
            assert_eq!(p.name().parse::<Pattern>().unwrap(), p);
        }
        assert!(matches!("bull".parse::<Pattern>(), Err(Error::UnknownPattern(_))));
    }

    #[test]
    fn paw_free_multipartite() {
        let g = Graph::complete_multipartite(&[1, 2, 4]).unwrap();
        assert_eq!(contains_induced(&g, Pattern::Paw), None);
    }

    #[test]
    fn p4_in_c5() {
        let c5 = Graph::cycle(5).unwrap();
        let s = contains_induced(&c5, Pattern::P4).unwrap();
        assert!(is_isomorphic(&c5.induced_subgraph(&s), &Graph::path(4)));
    }

    #[test]
    fn diamond_not_induced_in_k4() {
        assert_eq!(contains_induced(&Graph::complete(4), Pattern::Diamond), None);
        assert_eq!(contains_induced(&Graph::complete(4), Pattern::K4), Some(vec![0, 1, 2, 3]));
    }

    #[test]
    fn cliques() {
        assert_eq!(find_clique(&Graph::complete(5), 5), Some(vec![0, 1, 2, 3, 4]));
        assert_eq!(find_clique(&Graph::cycle(5).unwrap(), 3), None);
        assert_eq!(find_clique(&Graph::empty(3), 0), Some(vec![]));
    }
}
