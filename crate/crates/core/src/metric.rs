//! Shortest-path metric, diameter and the betweenness relation.

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// All-pairs hop distances. Unreachable pairs hold [`DistanceMatrix::inf`],
/// which equals `n` and so exceeds every finite distance.
#[derive(Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    dist: Vec<u32>,
}

/// An ordered triple of pairwise distinct vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Triple {
    pub a: usize,
    pub b: usize,
    pub c: usize,
}

impl Triple {
    pub fn new(a: usize, b: usize, c: usize) -> Result<Triple> {
        if a == b || b == c || a == c {
            return Err(Error::DegenerateTriple(a, b, c));
        }
        Ok(Triple { a, b, c })
    }
}

/// BFS from every vertex, expanding whole frontiers with bitset unions.
pub fn apsp(g: &Graph) -> DistanceMatrix {
    let n = g.n();
    let inf = n as u32;
    let mut dist = vec![inf; n * n];
    for s in 0..n {
        let row = &mut dist[s * n..(s + 1) * n];
        let mut seen = VertexSet::singleton(s);
        let mut frontier = seen;
        let mut depth = 0u32;
        while !frontier.is_empty() {
            for v in frontier.iter() {
                row[v] = depth;
            }
            let mut next = VertexSet::new();
            for v in frontier.iter() {
                next = next.union(g.neighbors(v));
            }
            frontier = next.difference(&seen);
            seen = seen.union(&frontier);
            depth += 1;
        }
    }
    DistanceMatrix { n, dist }
}

impl DistanceMatrix {
    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// Sentinel for unreachable pairs.
    #[inline]
    pub fn inf(&self) -> u32 {
        self.n as u32
    }

    #[inline]
    pub fn get(&self, u: usize, v: usize) -> u32 {
        self.dist[u * self.n + v]
    }

    pub fn row(&self, u: usize) -> &[u32] {
        &self.dist[u * self.n..(u + 1) * self.n]
    }

    pub fn is_connected(&self) -> bool {
        let inf = self.inf();
        self.dist.iter().all(|&d| d < inf)
    }

    /// `d(a, c) = d(a, b) + d(b, c)`, for distinct vertices with finite
    /// distances. Distinctness is the caller's obligation; see [`between`].
    #[inline]
    pub fn is_between(&self, a: usize, b: usize, c: usize) -> bool {
        debug_assert!(
            self.get(a, b) < self.inf() && self.get(b, c) < self.inf(),
            "betweenness on unreachable pair"
        );
        self.get(a, c) == self.get(a, b) + self.get(b, c)
    }
}

impl std::fmt::Debug for DistanceMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "DistanceMatrix(n={})", self.n)?;
        for u in 0..self.n {
            writeln!(f, "  {:?}", self.row(u))?;
        }
        Ok(())
    }
}

pub fn diameter(d: &DistanceMatrix) -> Result<u32> {
    if !d.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(d.dist.iter().copied().max().unwrap_or(0))
}

/// Membership of `t` in the betweenness relation.
pub fn between(d: &DistanceMatrix, t: Triple) -> Result<bool> {
    let Triple { a, b, c } = t;
    if a == b || b == c || a == c {
        return Err(Error::DegenerateTriple(a, b, c));
    }
    if d.get(a, b) >= d.inf() || d.get(b, c) >= d.inf() || d.get(a, c) >= d.inf() {
        return Err(Error::Disconnected);
    }
    Ok(d.is_between(a, b, c))
}
