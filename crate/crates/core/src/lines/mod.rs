//! Lines, line systems and pencils of lines through a fixed vertex.
//!
//! The line through distinct vertices `a`, `b` consists of `a`, `b` and every
//! `c` for which one of `cab`, `acb`, `abc` is in the betweenness relation.

pub(crate) mod partition;

pub use partition::{diam2_partition, diam3_partition, Diam2Partition, Diam3Partition};

use std::collections::HashMap;

use serde::Serialize;

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::metric::{apsp, DistanceMatrix};

/// A line, identified by its member set, with one generating pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Line {
    pub members: VertexSet,
    pub a: usize,
    pub b: usize,
}

/// Member set of the line through `a` and `b`, without argument checks.
#[inline]
pub fn line_members(d: &DistanceMatrix, a: usize, b: usize) -> VertexSet {
    let ab = d.get(a, b);
    let (ra, rb) = (d.row(a), d.row(b));
    let mut members = VertexSet::new();
    for c in 0..d.n() {
        let (ac, bc) = (ra[c], rb[c]);
        // cab: bc = ac + ab; acb: ab = ac + cb; abc: ac = ab + bc.
        if bc == ac + ab || ab == ac + bc || ac == ab + bc {
            members.insert(c);
        }
    }
    members
}

pub fn line(d: &DistanceMatrix, a: usize, b: usize) -> Result<Line> {
    let n = d.n();
    if a >= n || b >= n {
        return Err(Error::VertexOutOfRange(a.max(b), n));
    }
    if a == b {
        return Err(Error::SameEndpoints(a));
    }
    if !d.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(Line {
        members: line_members(d, a, b),
        a,
        b,
    })
}

/// Distinct lines of a connected graph, sorted by member list, with every
/// generating pair `(a, b)`, `a < b`, recorded under its line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LineSystem {
    n: usize,
    lines: Vec<VertexSet>,
    generators: Vec<Vec<(usize, usize)>>,
}

#[derive(Serialize)]
struct LineSystemJson<'a> {
    schema: &'a str,
    n: usize,
    lines: Vec<Vec<usize>>,
    count: usize,
    universal: bool,
}

impl LineSystem {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn count(&self) -> usize {
        self.lines.len()
    }

    pub fn lines(&self) -> &[VertexSet] {
        &self.lines
    }

    pub fn generators(&self, index: usize) -> &[(usize, usize)] {
        &self.generators[index]
    }

    pub fn index_of(&self, members: &VertexSet) -> Option<usize> {
        self.lines.binary_search(members).ok()
    }

    pub fn contains(&self, members: &VertexSet) -> bool {
        self.index_of(members).is_some()
    }

    /// Whether some line contains every vertex.
    pub fn has_universal(&self) -> bool {
        let all = VertexSet::full(self.n);
        self.lines.contains(&all)
    }

    pub fn universal_lines(&self) -> impl Iterator<Item = &VertexSet> {
        let all = VertexSet::full(self.n);
        self.lines.iter().filter(move |l| **l == all)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(LineSystemJson {
            schema: crate::SCHEMA,
            n: self.n,
            lines: self.lines.iter().map(VertexSet::to_vec).collect(),
            count: self.count(),
            universal: self.has_universal(),
        })
        .expect("plain data serializes")
    }
}

fn require_lines(d: &DistanceMatrix) -> Result<()> {
    if d.n() < 2 {
        return Err(Error::TooFewVertices);
    }
    if !d.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(())
}

pub fn line_system(g: &Graph) -> Result<LineSystem> {
    line_system_from(&apsp(g))
}

pub fn line_system_from(d: &DistanceMatrix) -> Result<LineSystem> {
    require_lines(d)?;
    let n = d.n();
    let mut by_members: HashMap<VertexSet, Vec<(usize, usize)>> = HashMap::new();
    for a in 0..n {
        for b in a + 1..n {
            by_members.entry(line_members(d, a, b)).or_default().push((a, b));
        }
    }
    let mut entries: Vec<_> = by_members.into_iter().collect();
    entries.sort_unstable_by_key(|x| x.0);
    let (lines, generators) = entries.into_iter().unzip();
    Ok(LineSystem { n, lines, generators })
}

pub fn is_universal(g: &Graph, l: &Line) -> bool {
    l.members == g.vertices()
}

pub fn has_universal_line(g: &Graph) -> Result<bool> {
    Ok(line_system(g)?.has_universal())
}

/// A universal line exists or there are at least `n` distinct lines.
pub fn chen_chvatal_holds(g: &Graph) -> Result<bool> {
    let ls = line_system(g)?;
    Ok(ls.has_universal() || ls.count() >= g.n())
}

/// One class of the relation "same line through the apex".
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PencilClass {
    /// The common line through the apex and any class member.
    pub line: VertexSet,
    pub members: VertexSet,
}

/// Lines through a fixed apex, grouped by the vertices generating them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pencil {
    pub apex: usize,
    /// Sorted by least member.
    pub classes: Vec<PencilClass>,
    class_of: Vec<usize>,
}

impl Pencil {
    /// Number of distinct lines through the apex.
    pub fn line_count(&self) -> usize {
        self.classes.len()
    }

    /// Class of `u`; `u` must differ from the apex.
    pub fn class_of(&self, u: usize) -> &PencilClass {
        assert_ne!(u, self.apex, "the apex has no class");
        &self.classes[self.class_of[u]]
    }

    pub fn class_index(&self, u: usize) -> usize {
        assert_ne!(u, self.apex, "the apex has no class");
        self.class_of[u]
    }

    pub fn same_class(&self, u: usize, v: usize) -> bool {
        self.class_index(u) == self.class_index(v)
    }

    pub fn contains_line(&self, line: &VertexSet) -> bool {
        self.classes.iter().any(|c| c.line == *line)
    }
}

pub fn pencil(g: &Graph, z: usize) -> Result<Pencil> {
    let d = apsp(g);
    require_lines(&d)?;
    if z >= g.n() {
        return Err(Error::VertexOutOfRange(z, g.n()));
    }
    Ok(pencil_from(&d, z))
}

/// Pencil at `z` from a connected distance matrix on at least 2 vertices.
pub fn pencil_from(d: &DistanceMatrix, z: usize) -> Pencil {
    let n = d.n();
    let mut index: HashMap<VertexSet, usize> = HashMap::new();
    let mut classes: Vec<PencilClass> = Vec::new();
    let mut class_of = vec![usize::MAX; n];
    // Vertices are visited in increasing order, so classes come out sorted by
    // least member.
    for u in (0..n).filter(|&u| u != z) {
        let members = line_members(d, z, u);
        let idx = *index.entry(members).or_insert_with(|| {
            classes.push(PencilClass {
                line: members,
                members: VertexSet::new(),
            });
            classes.len() - 1
        });
        classes[idx].members.insert(u);
        class_of[u] = idx;
    }
    Pencil {
        apex: z,
        classes,
        class_of,
    }
}
