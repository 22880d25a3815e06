//! Rejection sampling of connected locally connected graphs from G(n, p).

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bitset::MAX_VERTICES;
use crate::classes::is_lc_member;
use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder};

/// Rejections allowed per requested sample before giving up.
pub const RETRY_BUDGET: u64 = 1_000_000;

fn gnp(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut b = GraphBuilder::new(n).expect("n checked by caller");
    for j in 1..n {
        for i in 0..j {
            if rng.gen_bool(p) {
                b.add_edge(i, j).expect("fresh pair");
            }
        }
    }
    b.build()
}

/// Up to `count` graphs in ℓC, reproducible for a fixed seed. Stops early
/// with what it has if one sample exhausts the retry budget.
pub fn sample_lc(n: usize, p: f64, seed: u64, count: usize) -> Result<Vec<Graph>> {
    sample_lc_with_budget(n, p, seed, count, RETRY_BUDGET)
}

pub fn sample_lc_with_budget(n: usize, p: f64, seed: u64, count: usize, budget: u64) -> Result<Vec<Graph>> {
    if !(p > 0.0 && p < 1.0) {
        return Err(Error::InvalidProbability(p.to_string()));
    }
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices(n, MAX_VERTICES));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    'samples: while out.len() < count {
        for _ in 0..=budget {
            let g = gnp(&mut rng, n, p);
            if is_lc_member(&g) {
                out.push(g);
                continue 'samples;
            }
        }
        break;
    }
    if out.is_empty() && count > 0 {
        return Err(Error::NoSamples);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn emitted_graphs_are_lc() {
        for seed in 0..5 {
            let gs = sample_lc(6, 0.8, seed, 20).unwrap();
            assert_eq!(gs.len(), 20);
            assert!(gs.iter().all(is_lc_member));
        }
    }

    #[test]
    fn reproducible() {
        assert_eq!(sample_lc(8, 0.7, 1, 10).unwrap(), sample_lc(8, 0.7, 1, 10).unwrap());
        assert_ne!(sample_lc(8, 0.7, 1, 10).unwrap(), sample_lc(8, 0.7, 2, 10).unwrap());
    }

    #[test]
    fn bad_probability() {
        for p in [0.0, 1.0, -0.5, 2.0, f64::NAN] {
            assert!(matches!(sample_lc(5, p, 0, 1), Err(Error::InvalidProbability(_))));
        }
    }

    #[test]
    fn exhausted_budget_reports_no_samples() {
        // A sparse 12-vertex G(n, p) is essentially never locally connected.
        assert_eq!(sample_lc_with_budget(12, 0.01, 3, 1, 200), Err(Error::NoSamples));
    }
}
