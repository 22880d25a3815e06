//! Simple undirected graphs stored as per-vertex adjacency bitsets.

pub(crate) mod canon;
mod families;
mod graph6;

pub use canon::{canonical_form, canonical_labeling, is_isomorphic, CanonicalForm, MAX_CANONICAL_N};
pub use families::{
    complete, complete_multipartite, cycle, matched_cliques, matched_cliques_minus_edge, named_graph,
    path, wheel, Family, NamedGraph, PartSizes,
};
pub use graph6::{parse_edge_list, parse_graph, parse_graph6, to_graph6};

use crate::bitset::{VertexSet, MAX_VERTICES};
use crate::error::{Error, Result};

/// Immutable simple graph on vertices `0..n`.
///
/// Adjacency is symmetric and loop-free; every constructor enforces this.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<VertexSet>,
}

impl Graph {
    /// Builds a graph from an edge list. Loops and repeated edges are rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut b = GraphBuilder::new(n)?;
        for &(u, v) in edges {
            b.add_edge(u, v)?;
        }
        Ok(b.build())
    }

    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Graph> {
        Ok(GraphBuilder::new(n)?.build())
    }

    /// Builds a graph on `n ≤ 64` vertices from adjacency words.
    ///
    /// The caller guarantees symmetry and the absence of loops.
    pub(crate) fn from_masks(masks: &[u64]) -> Graph {
        debug_assert!(masks.len() <= 64);
        debug_assert!(masks
            .iter()
            .enumerate()
            .all(|(v, m)| m >> v & 1 == 0
                && (0..masks.len()).all(|u| (m >> u & 1) == (masks[u] >> v & 1))));
        Graph {
            adj: masks.iter().map(|&m| VertexSet::from_word(m)).collect(),
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n()).flat_map(move |u| {
            self.adj[u]
                .iter()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n()).map(|v| self.degree(v)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    /// Adjacency as one word per vertex. Requires `n ≤ 64`.
    pub(crate) fn masks(&self) -> Vec<u64> {
        assert!(self.n() <= 64);
        self.adj.iter().map(VertexSet::low_word).collect()
    }

    /// Relabels vertex `v` as `pi[v]`.
    pub fn permute(&self, pi: &[usize]) -> Result<Graph> {
        let n = self.n();
        if pi.len() != n {
            return Err(Error::SizeMismatch {
                expected: n,
                got: pi.len(),
            });
        }
        let mut seen = vec![false; n];
        for &p in pi {
            if p >= n || std::mem::replace(&mut seen[p], true) {
                return Err(Error::NotAPermutation(n));
            }
        }
        let mut adj = vec![VertexSet::new(); n];
        for (u, v) in self.edges() {
            adj[pi[u]].insert(pi[v]);
            adj[pi[v]].insert(pi[u]);
        }
        Ok(Graph { adj })
    }

    /// Subgraph induced on `keep`, relabelled in increasing order.
    pub fn induced(&self, keep: &VertexSet) -> Graph {
        let verts = keep.to_vec();
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in verts.iter().enumerate() {
            index[v] = i;
        }
        let adj = verts
            .iter()
            .map(|&v| {
                self.adj[v]
                    .intersection(keep)
                    .iter()
                    .map(|u| index[u])
                    .collect()
            })
            .collect();
        Graph { adj }
    }

    /// Copy of the graph without the edge `uv`.
    pub fn without_edge(&self, u: usize, v: usize) -> Result<Graph> {
        if u >= self.n() || v >= self.n() {
            return Err(Error::VertexOutOfRange(u.max(v), self.n()));
        }
        let mut adj = self.adj.clone();
        adj[u].remove(v);
        adj[v].remove(u);
        Ok(Graph { adj })
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges=", self.n())?;
        f.debug_list().entries(self.edges()).finish()?;
        write!(f, ")")
    }
}

/// Incremental construction with loop and duplicate-edge checks.
pub struct GraphBuilder {
    adj: Vec<VertexSet>,
}

impl GraphBuilder {
    pub fn new(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n, MAX_VERTICES));
        }
        Ok(GraphBuilder {
            adj: vec![VertexSet::new(); n],
        })
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.adj.len();
        if u >= n || v >= n {
            return Err(Error::VertexOutOfRange(u.max(v), n));
        }
        if u == v {
            return Err(Error::Loop(u));
        }
        if self.adj[u].contains(v) {
            return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    /// Adds the edge unless it is already present.
    pub(crate) fn join(&mut self, u: usize, v: usize) {
        debug_assert_ne!(u, v);
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    pub fn build(self) -> Graph {
        Graph { adj: self.adj }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_loops_and_multi_edges() {
        assert_eq!(Graph::from_edges(3, &[(1, 1)]), Err(Error::Loop(1)));
        assert_eq!(
            Graph::from_edges(3, &[(0, 1), (1, 0)]),
            Err(Error::DuplicateEdge(0, 1))
        );
        assert!(matches!(
            Graph::from_edges(3, &[(0, 3)]),
            Err(Error::VertexOutOfRange(3, 3))
        ));
        assert!(Graph::empty(MAX_VERTICES + 1).is_err());
    }

    #[test]
    fn degree_and_neighbors() {
        let g = path(3).unwrap();
        assert_eq!(g.degree(1), 2);
        assert_eq!(g.neighbors(1).to_vec(), vec![0, 2]);
        assert_eq!(g.degree_sequence(), vec![2, 1, 1]);
    }

    #[test]
    fn permute_then_inverse_is_identity() {
        let g = named_graph(NamedGraph::H8DoublePrime);
        let pi = [3, 7, 0, 5, 1, 6, 2, 4];
        let mut inv = [0; 8];
        for (i, &p) in pi.iter().enumerate() {
            inv[p] = i;
        }
        let back = g.permute(&pi).unwrap().permute(&inv).unwrap();
        assert_eq!(back, g);
    }

    #[test]
    fn permute_rejects_bad_input() {
        let g = cycle(4).unwrap();
        assert_eq!(
            g.permute(&[0, 1, 2]),
            Err(Error::SizeMismatch {
                expected: 4,
                got: 3
            })
        );
        assert_eq!(g.permute(&[0, 1, 1, 2]), Err(Error::NotAPermutation(4)));
    }

    #[test]
    fn large_graphs_are_supported() {
        let g = cycle(300).unwrap();
        assert_eq!(g.edge_count(), 300);
        assert!(g.has_edge(299, 0));
    }
}
