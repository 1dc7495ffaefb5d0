//! Shortest-path distances over the extended naturals.

use std::collections::VecDeque;
use std::fmt;
use std::ops::Add;

use serde::{Serialize, Serializer};

use crate::graph::Graph;

/// A hop count, or infinity for vertices in different components.
///
/// `Inf + x = Inf` and `Inf == Inf`, so distance-sum comparisons across
/// components evaluate as equalities.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Dist {
    Fin(u32),
    Inf,
}

impl Dist {
    pub fn finite(self) -> Option<u32> {
        match self {
            Dist::Fin(d) => Some(d),
            Dist::Inf => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Dist::Fin(_))
    }
}

impl Add for Dist {
    type Output = Dist;

    fn add(self, rhs: Dist) -> Dist {
        match (self, rhs) {
            (Dist::Fin(a), Dist::Fin(b)) => Dist::Fin(a + b),
            _ => Dist::Inf,
        }
    }
}

impl fmt::Display for Dist {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Dist::Fin(d) => write!(f, "{d}"),
            Dist::Inf => f.write_str("inf"),
        }
    }
}

impl Serialize for Dist {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Dist::Fin(d) => s.serialize_u32(*d),
            Dist::Inf => s.serialize_none(),
        }
    }
}

/// All-pairs shortest-path table, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    table: Vec<Dist>,
}

impl DistanceMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, u: usize, v: usize) -> Dist {
        self.table[u * self.n + v]
    }

    pub fn row(&self, u: usize) -> &[Dist] {
        &self.table[u * self.n..(u + 1) * self.n]
    }

    /// Largest entry; `Fin(0)` for the empty and one-vertex graphs.
    pub fn max(&self) -> Dist {
        self.table.iter().copied().max().unwrap_or(Dist::Fin(0))
    }
}

/// One BFS per vertex.
pub fn bfs_all_pairs(g: &Graph) -> DistanceMatrix {
    let n = g.n();
    let mut table = vec![Dist::Inf; n * n];
    let mut queue = VecDeque::with_capacity(n);
    for s in 0..n {
        let row = &mut table[s * n..(s + 1) * n];
        row[s] = Dist::Fin(0);
        queue.clear();
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            let Dist::Fin(du) = row[u] else { unreachable!() };
            for &w in g.neighbors(u) {
                if row[w] == Dist::Inf {
                    row[w] = Dist::Fin(du + 1);
                    queue.push_back(w);
                }
            }
        }
    }
    DistanceMatrix { n, table }
}
