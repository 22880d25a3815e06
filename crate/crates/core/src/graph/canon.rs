//! Exact canonical labeling for small graphs.
//!
//! Search tree over ordered partitions: refine to an equitable partition
//! (cells split by neighbour counts into every cell, split order by those
//! counts), then individualize each vertex of the first non-singleton cell in
//! turn. The canonical code is the largest upper-triangle adjacency word over
//! all leaves. Vertices of the target cell that are twins of an already tried
//! vertex are skipped, since swapping twins is an automorphism fixing the
//! partition.

use super::Graph;
use crate::error::{Error, Result};

/// Largest vertex count accepted by [`canonical_form`].
pub const MAX_CANONICAL_N: usize = 10;

/// Relabeling-invariant encoding: equal forms iff isomorphic graphs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    n: u8,
    code: u64,
}

impl CanonicalForm {
    pub fn n(&self) -> usize {
        self.n as usize
    }

    /// Vertex count followed by the adjacency code, big-endian.
    pub fn bytes(&self) -> Vec<u8> {
        let mut out = vec![self.n];
        out.extend_from_slice(&self.code.to_be_bytes());
        out
    }

    /// The graph under its canonical labeling.
    pub fn to_graph(&self) -> Graph {
        let n = self.n();
        let bits = n * n.saturating_sub(1) / 2;
        let mut masks = vec![0u64; n];
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                if self.code >> (bits - 1 - k) & 1 == 1 {
                    masks[i] |= 1 << j;
                    masks[j] |= 1 << i;
                }
                k += 1;
            }
        }
        Graph::from_masks(&masks)
    }
}

#[derive(Clone, Copy)]
struct Partition {
    order: [u8; MAX_CANONICAL_N],
    /// Bit `p` set iff a cell starts at position `p`.
    starts: u32,
    n: usize,
}

impl Partition {
    fn unit(n: usize) -> Self {
        let mut order = [0u8; MAX_CANONICAL_N];
        for (i, o) in order.iter_mut().enumerate().take(n) {
            *o = i as u8;
        }
        Partition {
            order,
            starts: if n > 0 { 1 } else { 0 },
            n,
        }
    }

    fn is_discrete(&self) -> bool {
        self.starts.count_ones() as usize == self.n
    }

    fn cell_end(&self, start: usize) -> usize {
        let rest = self.starts >> (start + 1);
        if rest == 0 {
            self.n
        } else {
            start + 1 + rest.trailing_zeros() as usize
        }
    }

    /// `(start, end)` of every cell in order.
    fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let mut s = self.starts;
        std::iter::from_fn(move || {
            if s == 0 {
                return None;
            }
            let start = s.trailing_zeros() as usize;
            s &= s - 1;
            Some((start, self.cell_end(start)))
        })
    }
}

fn refine(adj: &[u64], p: &mut Partition) {
    loop {
        let mut masks = [0u64; MAX_CANONICAL_N];
        let mut ncells = 0;
        for (start, end) in p.cells() {
            masks[ncells] = p.order[start..end].iter().fold(0, |m, &v| m | 1 << v);
            ncells += 1;
        }
        if ncells == p.n {
            return;
        }
        let mut split = false;
        let mut new_starts = p.starts;
        let mut cells = [(0usize, 0usize); MAX_CANONICAL_N];
        for (i, c) in p.cells().enumerate() {
            cells[i] = c;
        }
        for &(start, end) in &cells[..ncells] {
            if end - start < 2 {
                continue;
            }
            let mut keyed = [(0u64, 0u8); MAX_CANONICAL_N];
            for (slot, &v) in keyed.iter_mut().zip(&p.order[start..end]) {
                let row = adj[v as usize];
                let sig = masks[..ncells]
                    .iter()
                    .fold(0u64, |acc, &m| acc << 4 | (row & m).count_ones() as u64);
                *slot = (sig, v);
            }
            let keyed = &mut keyed[..end - start];
            keyed.sort_unstable();
            for (i, &(_, v)) in keyed.iter().enumerate() {
                p.order[start + i] = v;
                if i > 0 && keyed[i - 1].0 != keyed[i].0 {
                    new_starts |= 1 << (start + i);
                    split = true;
                }
            }
        }
        p.starts = new_starts;
        if !split {
            return;
        }
    }
}

fn leaf_code(adj: &[u64], order: &[u8]) -> u64 {
    let mut code = 0u64;
    for j in 1..order.len() {
        let row = adj[order[j] as usize];
        for &oi in &order[..j] {
            code = code << 1 | (row >> oi & 1);
        }
    }
    code
}

fn search(adj: &[u64], mut p: Partition, best: &mut Option<(u64, Partition)>) {
    refine(adj, &mut p);
    if p.is_discrete() {
        let code = leaf_code(adj, &p.order[..p.n]);
        if best.is_none_or(|(b, _)| code > b) {
            *best = Some((code, p));
        }
        return;
    }
    let (start, end) = p
        .cells()
        .find(|&(s, e)| e - s > 1)
        .expect("non-discrete partition has a non-singleton cell");
    let mut tried = 0u64;
    for i in start..end {
        let v = p.order[i] as usize;
        let is_twin_of_tried = (0..p.n).filter(|&u| tried >> u & 1 == 1).any(|u| {
            let strip = !(1u64 << u | 1u64 << v);
            adj[u] & strip == adj[v] & strip
        });
        if is_twin_of_tried {
            continue;
        }
        tried |= 1 << v;
        let mut child = p;
        child.order.swap(start, i);
        child.starts |= 1 << (start + 1);
        search(adj, child, best);
    }
}

/// Canonical code and ordering (`order[label] = vertex`) for adjacency words.
pub(crate) fn canonical_masks(adj: &[u64]) -> (u64, [u8; MAX_CANONICAL_N]) {
    debug_assert!(adj.len() <= MAX_CANONICAL_N);
    let mut best = None;
    search(adj, Partition::unit(adj.len()), &mut best);
    let (code, p) = best.expect("search visits at least one leaf");
    (code, p.order)
}

fn check_size(g: &Graph) -> Result<()> {
    if g.n() > MAX_CANONICAL_N {
        return Err(Error::CanonicalTooLarge {
            n: g.n(),
            max: MAX_CANONICAL_N,
        });
    }
    Ok(())
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    check_size(g)?;
    let (code, _) = canonical_masks(&g.masks());
    Ok(CanonicalForm {
        n: g.n() as u8,
        code,
    })
}

/// Canonical form together with `perm`, where `perm[v]` is the canonical
/// label of vertex `v`; `g.permute(&perm)` equals `form.to_graph()`.
pub fn canonical_labeling(g: &Graph) -> Result<(CanonicalForm, Vec<usize>)> {
    check_size(g)?;
    let (code, order) = canonical_masks(&g.masks());
    let mut perm = vec![0; g.n()];
    for (label, &v) in order[..g.n()].iter().enumerate() {
        perm[v as usize] = label;
    }
    Ok((
        CanonicalForm {
            n: g.n() as u8,
            code,
        },
        perm,
    ))
}

pub(crate) fn form_from_code(n: usize, code: u64) -> CanonicalForm {
    CanonicalForm { n: n as u8, code }
}

/// Isomorphism test via canonical forms, after cheap invariant checks.
pub fn is_isomorphic(g: &Graph, h: &Graph) -> Result<bool> {
    if g.n() != h.n() || g.edge_count() != h.edge_count() || g.degree_sequence() != h.degree_sequence() {
        return Ok(false);
    }
    Ok(canonical_form(g)? == canonical_form(h)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, named_graph, path, NamedGraph};
    use proptest::prelude::*;

    /// Brute force over all n! labelings.
    fn brute_force_code(g: &Graph) -> u64 {
        let n = g.n();
        let adj = g.masks();
        let mut order: Vec<u8> = (0..n as u8).collect();
        let mut best = 0;
        permute_all(&mut order, 0, &mut |o| best = best.max(leaf_code(&adj, o)));
        best
    }

    fn permute_all(v: &mut Vec<u8>, k: usize, f: &mut impl FnMut(&[u8])) {
        if k == v.len() {
            f(v);
            return;
        }
        for i in k..v.len() {
            v.swap(k, i);
            permute_all(v, k + 1, f);
            v.swap(k, i);
        }
    }

    fn graph_from_bits(n: usize, bits: u64) -> Graph {
        let mut edges = Vec::new();
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                if bits >> k & 1 == 1 {
                    edges.push((i, j));
                }
                k += 1;
            }
        }
        Graph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn agrees_with_brute_force_on_all_five_vertex_graphs() {
        // The search maximizes over its own leaves, so codes differ from the
        // n! maximum; the two must induce the same classes.
        use std::collections::HashMap;
        let mut forward: HashMap<u64, u64> = HashMap::new();
        let mut backward: HashMap<u64, u64> = HashMap::new();
        for bits in 0..1u64 << 10 {
            let g = graph_from_bits(5, bits);
            let ours = canonical_form(&g).unwrap().code;
            let brute = brute_force_code(&g);
            assert_eq!(*forward.entry(brute).or_insert(ours), ours, "{g:?}");
            assert_eq!(*backward.entry(ours).or_insert(brute), brute, "{g:?}");
        }
        assert_eq!(forward.len(), 34);
    }

    #[test]
    fn labeling_reproduces_canonical_graph() {
        for name in NamedGraph::ALL {
            let g = named_graph(name);
            let (form, perm) = canonical_labeling(&g).unwrap();
            assert_eq!(g.permute(&perm).unwrap(), form.to_graph(), "{name:?}");
        }
    }

    #[test]
    fn relabeled_cycles_agree() {
        let c4 = cycle(4).unwrap();
        let relabeled = Graph::from_edges(4, &[(0, 2), (2, 1), (1, 3), (3, 0)]).unwrap();
        assert_eq!(canonical_form(&c4).unwrap(), canonical_form(&relabeled).unwrap());
        assert!(is_isomorphic(&c4, &relabeled).unwrap());
    }

    #[test]
    fn distinguishes_near_misses() {
        let k122 = named_graph(NamedGraph::K122);
        let k122p = named_graph(NamedGraph::K122Prime);
        assert_ne!(canonical_form(&k122).unwrap(), canonical_form(&k122p).unwrap());
        assert!(!is_isomorphic(&named_graph(NamedGraph::K222), &named_graph(NamedGraph::H6)).unwrap());
        // Same degree sequence, not isomorphic: C6 vs two triangles.
        let two_triangles = Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert!(!is_isomorphic(&cycle(6).unwrap(), &two_triangles).unwrap());
        assert!(!is_isomorphic(&path(3).unwrap(), &path(4).unwrap()).unwrap());
    }

    #[test]
    fn size_limit() {
        assert!(canonical_form(&complete(10).unwrap()).is_ok());
        assert!(matches!(
            canonical_form(&cycle(11).unwrap()),
            Err(Error::CanonicalTooLarge { n: 11, .. })
        ));
    }

    #[test]
    fn petersen_is_fast_and_invariant() {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((i + 5, (i + 2) % 5 + 5));
        }
        let g = Graph::from_edges(10, &edges).unwrap();
        let h = g.permute(&[9, 3, 0, 7, 1, 8, 2, 6, 5, 4]).unwrap();
        assert_eq!(canonical_form(&g).unwrap(), canonical_form(&h).unwrap());
    }

    fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (1..=max_n).prop_flat_map(|n| {
            let pairs = n * (n - 1) / 2;
            (Just(n), any::<u64>().prop_map(move |b| if pairs == 64 { b } else { b & ((1u64 << pairs) - 1) }))
                .prop_map(|(n, bits)| graph_from_bits(n, bits))
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn invariant_under_thousand_relabelings(g in arb_graph(8), seed in any::<u64>()) {
            use rand::seq::SliceRandom;
            use rand::SeedableRng;
            let base = canonical_form(&g).unwrap();
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let mut pi: Vec<usize> = (0..g.n()).collect();
            for _ in 0..1000 {
                pi.shuffle(&mut rng);
                prop_assert_eq!(canonical_form(&g.permute(&pi).unwrap()).unwrap(), base);
            }
        }
    }
}
