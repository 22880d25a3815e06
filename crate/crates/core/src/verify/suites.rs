//! Verification suites over graph streams and fixed graph lists.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::Serialize;

use super::properties::{check_properties, exceptional_graph, graph_id, VerificationReport};
use super::with_jobs;
use crate::classes::{bridges, is_connected, is_lc_member};
use crate::graph::{canonical_form, named_graph, Graph, NamedGraph};
use crate::lines::line_system_from;
use crate::metric::{apsp, diameter};
use crate::SCHEMA;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GraphSummary {
    pub id: String,
    pub n: usize,
    pub diameter: u32,
    pub lines: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub name: Option<&'static str>,
    pub expected: bool,
}

/// Outcome of scanning a stream for ℓC graphs with fewer lines than vertices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremVerdict {
    pub schema: &'static str,
    pub scanned: usize,
    /// Disconnected or single-vertex inputs.
    pub skipped: usize,
    pub lc_members: usize,
    /// ℓC graphs on fewer than three vertices, outside the theorem's range.
    pub out_of_scope: usize,
    pub exceptions: Vec<GraphSummary>,
    /// Expected exceptions of a scanned size that did not show up.
    pub missing: Vec<&'static str>,
    pub expected_matched: bool,
}

struct Scan {
    g: Graph,
    id: String,
    n: usize,
    diameter: u32,
    lines: usize,
    lc: bool,
}

fn scan(graphs: &[Graph], jobs: usize) -> (Vec<Scan>, usize) {
    let scanned: Vec<Option<Scan>> = with_jobs(jobs, || {
        graphs
            .par_iter()
            .map(|g| {
                if g.n() < 2 || !is_connected(g) {
                    return None;
                }
                let d = apsp(g);
                Some(Scan {
                    g: g.clone(),
                    id: graph_id(g),
                    n: g.n(),
                    diameter: diameter(&d).ok()?,
                    lines: line_system_from(&d).ok()?.count(),
                    lc: is_lc_member(g),
                })
            })
            .collect()
    });
    let skipped = scanned.iter().filter(|s| s.is_none()).count();
    let mut out: Vec<Scan> = scanned.into_iter().flatten().collect();
    out.sort_by(|a, b| a.id.cmp(&b.id));
    (out, skipped)
}

const EXCEPTIONS: [NamedGraph; 3] = [NamedGraph::K122, NamedGraph::K222, NamedGraph::K2222];

pub fn verify_theorem_main(graphs: &[Graph], jobs: usize) -> TheoremVerdict {
    let (scans, skipped) = scan(graphs, jobs);
    let sizes: BTreeSet<usize> = graphs.iter().map(Graph::n).filter(|&n| n >= 3).collect();
    let lc: Vec<&Scan> = scans.iter().filter(|s| s.lc).collect();
    let out_of_scope = lc.iter().filter(|s| s.n < 3).count();

    let exceptions: Vec<GraphSummary> = lc
        .iter()
        .filter(|s| s.n >= 3 && s.lines < s.n)
        .map(|s| {
            let name = exceptional_graph(&s.g);
            GraphSummary {
                id: s.id.clone(),
                n: s.n,
                diameter: s.diameter,
                lines: s.lines,
                name: name.map(NamedGraph::display_name),
                expected: name.is_some(),
            }
        })
        .collect();

    let found: BTreeSet<&str> = exceptions.iter().filter_map(|e| e.name).collect();
    let missing: Vec<&'static str> = EXCEPTIONS
        .iter()
        .filter(|&&e| sizes.contains(&named_graph(e).n()))
        .map(|e| e.display_name())
        .filter(|name| !found.contains(name))
        .collect();
    let expected_matched = missing.is_empty() && exceptions.iter().all(|e| e.expected);

    TheoremVerdict {
        schema: SCHEMA,
        scanned: scans.len(),
        skipped,
        lc_members: lc.len(),
        out_of_scope,
        exceptions,
        missing,
        expected_matched,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Diam3Verdict {
    pub schema: &'static str,
    pub scanned: usize,
    /// ℓC graphs of diameter ≥ 3 on at least three vertices.
    pub lc_diam3: usize,
    /// Diameter ≥ 3 graphs outside ℓC with fewer lines than vertices.
    pub excluded: Vec<GraphSummary>,
    pub violators: Vec<GraphSummary>,
    pub passed: bool,
}

/// Every ℓC graph of diameter at least three has at least `n` lines.
pub fn verify_prop_diam3(graphs: &[Graph], jobs: usize) -> Diam3Verdict {
    let (scans, _) = scan(graphs, jobs);
    let summary = |s: &Scan| GraphSummary {
        id: s.id.clone(),
        n: s.n,
        diameter: s.diameter,
        lines: s.lines,
        name: None,
        expected: false,
    };
    let deep: Vec<&Scan> = scans.iter().filter(|s| s.diameter >= 3).collect();
    let lc_diam3 = deep.iter().filter(|s| s.lc).count();
    let violators: Vec<GraphSummary> = deep
        .iter()
        .filter(|s| s.lc && s.lines < s.n)
        .map(|s| summary(s))
        .collect();
    let excluded = deep
        .iter()
        .filter(|s| !s.lc && s.lines < s.n)
        .map(|s| summary(s))
        .collect();
    Diam3Verdict {
        schema: SCHEMA,
        scanned: scans.len(),
        lc_diam3,
        excluded,
        passed: violators.is_empty(),
        violators,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FirstFailure {
    pub id: String,
    pub property: &'static str,
    pub witness: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClaimsVerdict {
    pub schema: &'static str,
    pub scanned: usize,
    pub skipped: usize,
    pub lc_members: usize,
    pub failures: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_failure: Option<FirstFailure>,
    #[serde(skip)]
    pub reports: Vec<VerificationReport>,
}

impl ClaimsVerdict {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

/// Runs every property check on every connected graph, reports sorted by id.
pub fn verify_claims(graphs: &[Graph], jobs: usize) -> ClaimsVerdict {
    let results: Vec<Option<VerificationReport>> =
        with_jobs(jobs, || graphs.par_iter().map(|g| check_properties(g).ok()).collect());
    let skipped = results.iter().filter(|r| r.is_none()).count();
    let mut reports: Vec<VerificationReport> = results.into_iter().flatten().collect();
    reports.sort_by(|a, b| a.id.cmp(&b.id));
    let failures = reports.iter().filter(|r| !r.passed()).count();
    let first_failure = reports.iter().find_map(|r| {
        r.failures().next().map(|p| FirstFailure {
            id: r.id.clone(),
            property: p.name,
            witness: p.witness.clone().unwrap_or_default(),
        })
    });
    ClaimsVerdict {
        schema: SCHEMA,
        scanned: reports.len(),
        skipped,
        lc_members: reports.iter().filter(|r| r.lc).count(),
        failures,
        first_failure,
        reports,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassExample {
    pub name: &'static str,
    pub n: usize,
    pub lines: usize,
    pub bridges: usize,
    pub holds: bool,
}

/// Lines plus bridges is below `n` for each graph of the listed class.
pub fn verify_theorem_class_examples() -> Vec<ClassExample> {
    [
        NamedGraph::K22,
        NamedGraph::K23,
        NamedGraph::K122Prime,
        NamedGraph::K122,
        NamedGraph::K222,
        NamedGraph::K2222,
    ]
    .into_iter()
    .map(|name| {
        let g = named_graph(name);
        let lines = line_system_from(&apsp(&g)).expect("connected").count();
        let bridges = bridges(&g).len();
        ClassExample {
            name: name.display_name(),
            n: g.n(),
            lines,
            bridges,
            holds: lines + bridges < g.n(),
        }
    })
    .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilyCheck {
    pub name: &'static str,
    pub n: usize,
    pub diameter: u32,
    pub lines: usize,
    pub expected: String,
    pub holds: bool,
}

enum Expect {
    Exact { diameter: u32, lines: usize },
    FewerThanN,
}

/// Line counts of the 2-connected graphs with few lines outside ℓC.
pub fn verify_conclusion_families() -> Vec<FamilyCheck> {
    let k5 = crate::graph::matched_cliques(5).expect("k ≥ 2");
    let cases: Vec<(&'static str, Graph, Expect)> = vec![
        ("H_6", named_graph(NamedGraph::H6), Expect::Exact { diameter: 2, lines: 4 }),
        ("H_8", named_graph(NamedGraph::H8), Expect::Exact { diameter: 2, lines: 7 }),
        ("H'_6", named_graph(NamedGraph::H6Prime), Expect::Exact { diameter: 3, lines: 4 }),
        ("H'_8", named_graph(NamedGraph::H8Prime), Expect::Exact { diameter: 3, lines: 7 }),
        ("H''_8", named_graph(NamedGraph::H8DoublePrime), Expect::Exact { diameter: 3, lines: 7 }),
        ("H_5", named_graph(NamedGraph::H5House), Expect::FewerThanN),
        ("H_10", k5, Expect::Exact { diameter: 2, lines: 11 }),
    ];
    cases
        .into_iter()
        .map(|(name, g, expect)| {
            let d = apsp(&g);
            let diam = diameter(&d).expect("connected");
            let lines = line_system_from(&d).expect("connected").count();
            let (expected, holds) = match expect {
                Expect::Exact { diameter, lines: l } => {
                    (format!("diameter {diameter}, {l} lines"), diam == diameter && lines == l)
                }
                Expect::FewerThanN => (format!("fewer than {} lines", g.n()), lines < g.n()),
            };
            FamilyCheck {
                name,
                n: g.n(),
                diameter: diam,
                lines,
                expected,
                holds,
            }
        })
        .collect()
}

/// Canonical forms of the three exceptional graphs, for callers matching
/// streams by form.
pub fn exceptional_forms() -> Vec<(NamedGraph, crate::graph::CanonicalForm)> {
    EXCEPTIONS
        .iter()
        .map(|&e| (e, canonical_form(&named_graph(e)).expect("small")))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle};

    #[test]
    fn class_examples_hold() {
        let ex = verify_theorem_class_examples();
        assert_eq!(ex.len(), 6);
        assert!(ex.iter().all(|e| e.holds), "{ex:?}");
        assert_eq!(ex[0].lines, 1);
        assert_eq!(ex[0].bridges, 0);
    }

    #[test]
    fn families_hold() {
        let fam = verify_conclusion_families();
        assert!(fam.iter().all(|f| f.holds), "{fam:?}");
        let h10 = fam.iter().find(|f| f.name == "H_10").unwrap();
        assert!(h10.lines >= h10.n);
    }

    #[test]
    fn theorem_on_named_stream() {
        let stream = vec![
            named_graph(NamedGraph::K122),
            named_graph(NamedGraph::K222),
            named_graph(NamedGraph::K113),
            complete(2).unwrap(),
            cycle(4).unwrap(),
            Graph::empty(3).unwrap(),
        ];
        let v = verify_theorem_main(&stream, 1);
        assert_eq!(v.skipped, 1);
        assert_eq!(v.out_of_scope, 1);
        assert_eq!(v.exceptions.len(), 2);
        // Sizes 3..6 are present but K_{2,2,2,2} needs 8 vertices.
        assert!(v.expected_matched, "{v:?}");

        let without = verify_theorem_main(&[named_graph(NamedGraph::K113)], 1);
        assert_eq!(without.missing, vec!["K_{1,2,2}"]);
        assert!(!without.expected_matched);
    }

    #[test]
    fn diam3_excludes_non_lc() {
        let v = verify_prop_diam3(&[named_graph(NamedGraph::H8DoublePrime), cycle(7).unwrap()], 1);
        assert!(v.passed);
        assert_eq!(v.excluded.len(), 1);
        assert_eq!(v.excluded[0].lines, 7);
        assert!(verify_prop_diam3(&[], 1).passed);
    }

    #[test]
    fn claims_on_exceptions() {
        let gs: Vec<Graph> = EXCEPTIONS.iter().map(|&e| named_graph(e)).collect();
        let v = verify_claims(&gs, 2);
        assert!(v.passed(), "{:?}", v.first_failure);
        assert_eq!(v.lc_members, 3);
        assert_eq!(exceptional_forms().len(), 3);
    }
}
