//! Enumeration counts against a brute-force isomorphism dedup and the
//! known counts of connected graphs.

use std::collections::BTreeSet;

use metric_lines::graph::{parse_graph6, to_graph6};
use metric_lines::verify::{enumerate_connected, sample_lc};

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

fn connected(n: usize, adj: &[u32]) -> bool {
    let mut seen = 1u32;
    let mut stack = vec![0];
    while let Some(u) = stack.pop() {
        for w in 0..n {
            if adj[u] >> w & 1 == 1 && seen >> w & 1 == 0 {
                seen |= 1 << w;
                stack.push(w);
            }
        }
    }
    seen.count_ones() as usize == n
}

/// Number of isomorphism classes of connected graphs, by minimizing the
/// edge mask over all n! relabelings.
fn brute_force_classes(n: usize) -> usize {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let perms = permutations(n);
    let mut classes = BTreeSet::new();
    for mask in 0u32..1 << pairs.len() {
        let mut adj = vec![0u32; n];
        for (i, &(u, v)) in pairs.iter().enumerate() {
            if mask >> i & 1 == 1 {
                adj[u] |= 1 << v;
                adj[v] |= 1 << u;
            }
        }
        if !connected(n, &adj) {
            continue;
        }
        let min = perms
            .iter()
            .map(|p| {
                pairs
                    .iter()
                    .enumerate()
                    .filter(|&(_, &(u, v))| adj[p[u]] >> p[v] & 1 == 1)
                    .fold(0u32, |m, (i, _)| m | 1 << i)
            })
            .min()
            .unwrap();
        classes.insert(min);
    }
    classes.len()
}

#[test]
fn matches_brute_force_up_to_five_vertices() {
    for n in 1..=5 {
        assert_eq!(enumerate_connected(n).unwrap().len(), brute_force_classes(n), "n={n}");
    }
}

#[test]
fn known_counts() {
    let known = [1, 1, 2, 6, 21, 112, 853];
    for (i, &count) in known.iter().enumerate() {
        assert_eq!(enumerate_connected(i + 1).unwrap().len(), count);
    }
}

#[test]
fn output_round_trips_through_graph6() {
    for g in enumerate_connected(6).unwrap() {
        let text = to_graph6(&g);
        assert_eq!(to_graph6(&parse_graph6(&text).unwrap()), text);
    }
}

#[test]
fn golden_random_sample() {
    let golden = include_str!("golden/sample_n8_p07_seed1.g6");
    let got: Vec<String> = sample_lc(8, 0.7, 1, 100).unwrap().iter().map(to_graph6).collect();
    let want: Vec<&str> = golden.lines().collect();
    assert_eq!(got, want);
}
