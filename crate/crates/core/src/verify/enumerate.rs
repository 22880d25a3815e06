//! Connected graphs on up to seven vertices, one per isomorphism class.

use std::collections::HashSet;
use std::sync::OnceLock;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::canon::{canonical_masks, form_from_code};
use crate::graph::{to_graph6, Graph};

pub const MAX_ENUMERATION_N: usize = 7;

static CACHE: [OnceLock<Vec<Graph>>; MAX_ENUMERATION_N + 1] = [const { OnceLock::new() }; MAX_ENUMERATION_N + 1];

/// Adjacency words from the upper-triangle bits in graph6 order.
fn masks_from_bits(n: usize, bits: u64, out: &mut [u64]) {
    out[..n].fill(0);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bits >> k & 1 == 1 {
                out[i] |= 1 << j;
                out[j] |= 1 << i;
            }
            k += 1;
        }
    }
}

fn masks_connected(masks: &[u64]) -> bool {
    let n = masks.len();
    let all = (1u64 << n) - 1;
    let mut seen = 1u64;
    let mut frontier = 1u64;
    while frontier != 0 {
        let mut next = 0;
        let mut f = frontier;
        while f != 0 {
            next |= masks[f.trailing_zeros() as usize];
            f &= f - 1;
        }
        frontier = next & !seen;
        seen |= frontier;
    }
    seen == all
}

fn enumerate_uncached(n: usize) -> Vec<Graph> {
    let pairs = n * n.saturating_sub(1) / 2;
    let codes: HashSet<u64> = (0..1u64 << pairs)
        .into_par_iter()
        .fold(HashSet::new, |mut acc, bits| {
            let mut masks = [0u64; MAX_ENUMERATION_N];
            masks_from_bits(n, bits, &mut masks);
            if masks_connected(&masks[..n]) {
                acc.insert(canonical_masks(&masks[..n]).0);
            }
            acc
        })
        .reduce(HashSet::new, |mut a, b| {
            a.extend(b);
            a
        });
    let mut graphs: Vec<(String, Graph)> = codes
        .into_iter()
        .map(|code| {
            let g = form_from_code(n, code).to_graph();
            (to_graph6(&g), g)
        })
        .collect();
    graphs.sort_by(|a, b| a.0.cmp(&b.0));
    graphs.into_iter().map(|(_, g)| g).collect()
}

/// Every connected graph on `n` vertices up to isomorphism, in canonical
/// labeling, sorted by graph6 string. Results are cached per `n`.
pub fn enumerate_connected(n: usize) -> Result<Vec<Graph>> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be at least 1".into()));
    }
    if n > MAX_ENUMERATION_N {
        return Err(Error::EnumerationTooLarge {
            n,
            max: MAX_ENUMERATION_N,
        });
    }
    Ok(CACHE[n].get_or_init(|| enumerate_uncached(n)).clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classes::is_connected;
    use crate::graph::canonical_form;

    #[test]
    fn small_counts() {
        let counts: Vec<usize> = (1..=5).map(|n| enumerate_connected(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 6, 21]);
        assert_eq!(to_graph6(&enumerate_connected(1).unwrap()[0]), "@");
    }

    #[test]
    fn limits() {
        assert!(matches!(enumerate_connected(8), Err(Error::EnumerationTooLarge { n: 8, max: 7 })));
        assert!(enumerate_connected(0).is_err());
    }

    #[test]
    fn sound_and_deterministic() {
        let a = enumerate_connected(6).unwrap();
        let b = enumerate_uncached(6);
        assert_eq!(a, b);
        assert!(a.iter().all(is_connected));
        let forms: HashSet<_> = a.iter().map(|g| canonical_form(g).unwrap()).collect();
        assert_eq!(forms.len(), a.len());
        let ids: Vec<String> = a.iter().map(to_graph6).collect();
        let mut sorted = ids.clone();
        sorted.sort();
        assert_eq!(ids, sorted);
    }
}
