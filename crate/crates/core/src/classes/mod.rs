//! Graph-class predicates.

mod embedding;

pub use embedding::{
    embedded_corpus, locally_connected_by_embedding, trace_faces, EmbeddedGraph, FaceSet,
    RotationSystem,
};

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Vertices of `within` reachable from `start` without leaving `within`.
fn reach_within(g: &Graph, start: usize, within: &VertexSet) -> VertexSet {
    let mut seen = VertexSet::singleton(start);
    let mut frontier = seen;
    while !frontier.is_empty() {
        let mut next = VertexSet::new();
        for v in frontier.iter() {
            next = next.union(g.neighbors(v));
        }
        frontier = next.intersection(within).difference(&seen);
        seen = seen.union(&frontier);
    }
    seen
}

/// Whether `s` induces a connected subgraph. The empty set does not.
pub fn induces_connected(g: &Graph, s: &VertexSet) -> bool {
    match s.first() {
        None => false,
        Some(v) => reach_within(g, v, s) == *s,
    }
}

pub fn is_connected(g: &Graph) -> bool {
    g.n() > 0 && induces_connected(g, &g.vertices())
}

struct DfsResult {
    cut_vertices: VertexSet,
    bridges: Vec<(usize, usize)>,
}

/// Iterative lowpoint DFS over every component.
fn lowpoint_dfs(g: &Graph) -> DfsResult {
    let n = g.n();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut cut_vertices = VertexSet::new();
    let mut bridges = Vec::new();
    let mut time = 0;

    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        let mut root_children = 0;
        // (vertex, parent, remaining neighbours)
        let mut stack: Vec<(usize, usize, Vec<usize>)> =
            vec![(root, usize::MAX, g.neighbors(root).to_vec())];
        while let Some(top) = stack.last_mut() {
            let (v, parent) = (top.0, top.1);
            if let Some(w) = top.2.pop() {
                if w == parent {
                    continue;
                }
                if disc[w] == usize::MAX {
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    if v == root {
                        root_children += 1;
                    }
                    stack.push((w, v, g.neighbors(w).to_vec()));
                } else {
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if parent != usize::MAX {
                    low[parent] = low[parent].min(low[v]);
                    if low[v] > disc[parent] {
                        bridges.push((parent.min(v), parent.max(v)));
                    }
                    if parent != root && low[v] >= disc[parent] {
                        cut_vertices.insert(parent);
                    }
                }
            }
        }
        if root_children > 1 {
            cut_vertices.insert(root);
        }
    }
    bridges.sort_unstable();
    DfsResult { cut_vertices, bridges }
}

pub fn cut_vertices(g: &Graph) -> VertexSet {
    lowpoint_dfs(g).cut_vertices
}

/// Connected, at least three vertices, no cut vertex.
pub fn is_biconnected(g: &Graph) -> bool {
    g.n() >= 3 && is_connected(g) && lowpoint_dfs(g).cut_vertices.is_empty()
}

/// Bridges as `(u, v)` with `u < v`, sorted.
pub fn bridges(g: &Graph) -> Vec<(usize, usize)> {
    lowpoint_dfs(g).bridges
}

/// First vertex whose open neighbourhood does not induce a connected graph.
pub fn locally_disconnected_vertex(g: &Graph) -> Option<usize> {
    (0..g.n()).find(|&v| !induces_connected(g, g.neighbors(v)))
}

/// Every open neighbourhood induces a connected subgraph. An isolated
/// vertex fails.
pub fn is_locally_connected(g: &Graph) -> bool {
    locally_disconnected_vertex(g).is_none()
}

pub fn is_lc_member(g: &Graph) -> bool {
    is_connected(g) && is_locally_connected(g)
}

/// Maximum cardinality search. Returns vertices in visit order; its
/// reverse is a perfect elimination ordering iff the graph is chordal.
pub fn maximum_cardinality_search(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut weight = vec![0usize; n];
    let mut visited = VertexSet::new();
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !visited.contains(v))
            .max_by_key(|&v| (weight[v], std::cmp::Reverse(v)))
            .unwrap();
        visited.insert(v);
        order.push(v);
        for w in g.neighbors(v).difference(&visited).iter() {
            weight[w] += 1;
        }
    }
    order
}

/// Checks the ordering produced by MCS rather than trusting it.
pub fn is_chordal(g: &Graph) -> bool {
    let order = maximum_cardinality_search(g);
    // Elimination runs backwards through the visit order: when v is
    // eliminated, its remaining neighbours are those visited before it.
    let mut earlier = VertexSet::new();
    for &v in &order {
        let later = g.neighbors(v).intersection(&earlier);
        let members = later.to_vec();
        for (i, &a) in members.iter().enumerate() {
            if members[i + 1..].iter().any(|&b| !g.has_edge(a, b)) {
                return false;
            }
        }
        earlier.insert(v);
    }
    true
}

/// Every vertex outside `s` sees all of `s` or none of it.
pub fn is_module(g: &Graph, s: &VertexSet) -> Result<bool> {
    if s.is_empty() {
        return Err(Error::EmptySet);
    }
    if let Some(v) = s.iter().find(|&v| v >= g.n()) {
        return Err(Error::VertexOutOfRange(v, g.n()));
    }
    Ok(g.vertices().difference(s).iter().all(|z| {
        let seen = g.neighbors(z).intersection(s);
        seen.is_empty() || seen == *s
    }))
}

pub fn is_independent(g: &Graph, s: &VertexSet) -> bool {
    s.iter().all(|v| g.neighbors(v).is_disjoint(s))
}
