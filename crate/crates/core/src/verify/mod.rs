//! Exhaustive enumeration, random sampling and the verification suites.

mod enumerate;
mod properties;
mod sample;
mod suites;

use std::path::PathBuf;

pub use enumerate::{enumerate_connected, MAX_ENUMERATION_N};
pub use properties::{
    check_properties, exceptional_graph, graph_id, precondition_error, PropertyResult, Status,
    VerificationReport, PROPERTIES,
};
pub use sample::{sample_lc, sample_lc_with_budget, RETRY_BUDGET};
pub use suites::{
    exceptional_forms, verify_claims, verify_conclusion_families, verify_prop_diam3,
    verify_theorem_class_examples, verify_theorem_main, ClaimsVerdict, ClassExample, Diam3Verdict,
    FamilyCheck, FirstFailure, GraphSummary, TheoremVerdict,
};

use crate::error::{Error, Result};
use crate::graph::{parse_graph6, Graph};

/// Where a verification run takes its graphs from.
#[derive(Debug, Clone)]
pub enum GraphStream {
    Exhaustive(usize),
    Graph6File(PathBuf),
    Generated(Vec<Graph>),
    Random { n: usize, p: f64, seed: u64, count: usize },
}

impl GraphStream {
    pub fn load(&self) -> Result<Vec<Graph>> {
        match self {
            GraphStream::Exhaustive(n) => enumerate_connected(*n),
            GraphStream::Graph6File(path) => read_graph6_file(path),
            GraphStream::Generated(gs) => Ok(gs.clone()),
            GraphStream::Random { n, p, seed, count } => sample_lc(*n, *p, *seed, *count),
        }
    }
}

/// One graph6 record per non-empty line.
pub fn parse_graph6_lines(text: &str) -> Result<Vec<Graph>> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| {
            parse_graph6(l.trim()).map_err(|e| match e {
                Error::Graph6(msg) => Error::Graph6(format!("line {}: {msg}", i + 1)),
                other => other,
            })
        })
        .collect()
}

pub fn read_graph6_file(path: &std::path::Path) -> Result<Vec<Graph>> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    parse_graph6_lines(&text)
}

/// Runs `f` on a pool of `jobs` threads; 0 uses the global pool.
pub(crate) fn with_jobs<R: Send>(jobs: usize, f: impl FnOnce() -> R + Send) -> R {
    if jobs == 0 {
        return f();
    }
    match rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
        Ok(pool) => pool.install(f),
        Err(_) => f(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::to_graph6;

    #[test]
    fn graph6_lines() {
        let gs = parse_graph6_lines("@\n\nA_\nBw\n").unwrap();
        assert_eq!(gs.iter().map(to_graph6).collect::<Vec<_>>(), ["@", "A_", "Bw"]);
        let err = parse_graph6_lines("A_\n!!\n").unwrap_err();
        assert!(matches!(err, Error::Graph6(ref m) if m.starts_with("line 2")), "{err:?}");
    }

    #[test]
    fn streams() {
        let file = tempfile::NamedTempFile::new().unwrap();
        std::fs::write(file.path(), "Bw\nCF\n").unwrap();
        assert_eq!(GraphStream::Graph6File(file.path().into()).load().unwrap().len(), 2);
        assert_eq!(GraphStream::Exhaustive(4).load().unwrap().len(), 6);
        assert!(matches!(
            GraphStream::Graph6File("/nonexistent/x.g6".into()).load(),
            Err(Error::Io(_))
        ));
        let r = GraphStream::Random { n: 6, p: 0.8, seed: 4, count: 3 }.load().unwrap();
        assert_eq!(r.len(), 3);
    }
}
