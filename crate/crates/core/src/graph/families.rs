//! Generators for the graph families that appear in the verification suites.

use std::fmt;
use std::str::FromStr;

use super::{Graph, GraphBuilder};
use crate::bitset::MAX_VERTICES;
use crate::error::{Error, Result};

/// Part sizes of a complete multipartite graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartSizes {
    parts: Vec<usize>,
}

impl PartSizes {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidParts("empty part list".into()));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidParts("zero part size".into()));
        }
        let total: usize = parts.iter().sum();
        if total > MAX_VERTICES {
            return Err(Error::TooManyVertices(total, MAX_VERTICES));
        }
        Ok(PartSizes { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }
}

impl FromStr for PartSizes {
    type Err = Error;

    /// Parses `"1,2,2"`.
    fn from_str(s: &str) -> Result<Self> {
        let parts = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidParts(format!("bad part size '{p}'")))
            })
            .collect::<Result<Vec<_>>>()?;
        PartSizes::new(parts)
    }
}

/// Parts are laid out consecutively; vertices in different parts are adjacent.
pub fn complete_multipartite(parts: &PartSizes) -> Graph {
    let n = parts.total();
    let mut part_of = Vec::with_capacity(n);
    for (i, &size) in parts.parts().iter().enumerate() {
        part_of.extend(std::iter::repeat_n(i, size));
    }
    let mut b = GraphBuilder::new(n).expect("PartSizes caps the total");
    for u in 0..n {
        for v in u + 1..n {
            if part_of[u] != part_of[v] {
                b.join(u, v);
            }
        }
    }
    b.build()
}

pub fn complete(n: usize) -> Result<Graph> {
    let mut b = GraphBuilder::new(n)?;
    for u in 0..n {
        for v in u + 1..n {
            b.join(u, v);
        }
    }
    Ok(b.build())
}

pub fn path(n: usize) -> Result<Graph> {
    let mut b = GraphBuilder::new(n)?;
    for v in 1..n {
        b.join(v - 1, v);
    }
    Ok(b.build())
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!("cycle needs n ≥ 3, got {n}")));
    }
    let mut b = GraphBuilder::new(n)?;
    for v in 0..n {
        b.join(v, (v + 1) % n);
    }
    Ok(b.build())
}

/// Wheel with `rim` rim vertices: hub 0, rim `1..=rim` in cyclic order.
pub fn wheel(rim: usize) -> Result<Graph> {
    if rim < 3 {
        return Err(Error::InvalidParameter(format!("wheel needs ≥ 3 rim vertices, got {rim}")));
    }
    let mut b = GraphBuilder::new(rim + 1)?;
    for i in 0..rim {
        b.join(0, i + 1);
        b.join(i + 1, (i + 1) % rim + 1);
    }
    Ok(b.build())
}

/// Two `k`-cliques on `0..k` and `k..2k` with `i` matched to `i + k`.
pub fn matched_cliques(k: usize) -> Result<Graph> {
    if k < 2 {
        return Err(Error::InvalidParameter(format!("matched cliques need k ≥ 2, got {k}")));
    }
    let mut b = GraphBuilder::new(2 * k)?;
    for side in [0, k] {
        for i in 0..k {
            for j in i + 1..k {
                b.join(side + i, side + j);
            }
        }
    }
    for i in 0..k {
        b.join(i, i + k);
    }
    Ok(b.build())
}

/// [`matched_cliques`] with the matching edge `0 – k` removed.
pub fn matched_cliques_minus_edge(k: usize) -> Result<Graph> {
    matched_cliques(k)?.without_edge(0, k)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NamedGraph {
    /// 4-cycle `0-1-4-3` with the triangle `0-1-2` on top.
    H5House,
    H6,
    H8,
    H6Prime,
    H8Prime,
    /// `K_4` on `0..4`, disjoint edges `4-5` and `6-7`, matching `i – i+4`.
    H8DoublePrime,
    /// `K_{1,2,2}` without the edge between the degree-4 vertex 0 and vertex 1.
    K122Prime,
    K22,
    K23,
    K122,
    K222,
    K2222,
    K113,
}

impl NamedGraph {
    pub const ALL: [NamedGraph; 13] = [
        NamedGraph::H5House,
        NamedGraph::H6,
        NamedGraph::H8,
        NamedGraph::H6Prime,
        NamedGraph::H8Prime,
        NamedGraph::H8DoublePrime,
        NamedGraph::K122Prime,
        NamedGraph::K22,
        NamedGraph::K23,
        NamedGraph::K122,
        NamedGraph::K222,
        NamedGraph::K2222,
        NamedGraph::K113,
    ];

    pub fn name(self) -> &'static str {
        match self {
            NamedGraph::H5House => "H5_house",
            NamedGraph::H6 => "H6",
            NamedGraph::H8 => "H8",
            NamedGraph::H6Prime => "H6_prime",
            NamedGraph::H8Prime => "H8_prime",
            NamedGraph::H8DoublePrime => "H8_doubleprime",
            NamedGraph::K122Prime => "K122_prime",
            NamedGraph::K22 => "K22",
            NamedGraph::K23 => "K23",
            NamedGraph::K122 => "K122",
            NamedGraph::K222 => "K222",
            NamedGraph::K2222 => "K2222",
            NamedGraph::K113 => "K113",
        }
    }

    /// Typeset name, e.g. `K_{1,2,2}` or `H'_6`.
    pub fn display_name(self) -> &'static str {
        match self {
            NamedGraph::H5House => "H_5",
            NamedGraph::H6 => "H_6",
            NamedGraph::H8 => "H_8",
            NamedGraph::H6Prime => "H'_6",
            NamedGraph::H8Prime => "H'_8",
            NamedGraph::H8DoublePrime => "H''_8",
            NamedGraph::K122Prime => "K'_{1,2,2}",
            NamedGraph::K22 => "K_{2,2}",
            NamedGraph::K23 => "K_{2,3}",
            NamedGraph::K122 => "K_{1,2,2}",
            NamedGraph::K222 => "K_{2,2,2}",
            NamedGraph::K2222 => "K_{2,2,2,2}",
            NamedGraph::K113 => "K_{1,1,3}",
        }
    }
}

impl fmt::Display for NamedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for NamedGraph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut key: String = s
            .chars()
            .filter(|c| !matches!(c, '_' | '-' | ',' | '{' | '}' | '\''))
            .collect::<String>()
            .to_ascii_lowercase();
        match s.matches('\'').count() {
            0 => {}
            1 => key.push_str("prime"),
            2 => key.push_str("doubleprime"),
            _ => return Err(Error::UnknownFamily(s.to_string())),
        }
        let named = match key.as_str() {
            "h5house" | "h5" | "house" => NamedGraph::H5House,
            "h6" => NamedGraph::H6,
            "h8" => NamedGraph::H8,
            "h6prime" => NamedGraph::H6Prime,
            "h8prime" => NamedGraph::H8Prime,
            "h8doubleprime" => NamedGraph::H8DoublePrime,
            "k122prime" => NamedGraph::K122Prime,
            "k22" => NamedGraph::K22,
            "k23" => NamedGraph::K23,
            "k122" => NamedGraph::K122,
            "k222" => NamedGraph::K222,
            "k2222" => NamedGraph::K2222,
            "k113" => NamedGraph::K113,
            _ => return Err(Error::UnknownFamily(s.to_string())),
        };
        Ok(named)
    }
}

fn multipartite(parts: &[usize]) -> Graph {
    complete_multipartite(&PartSizes::new(parts.to_vec()).expect("static part sizes"))
}

pub fn named_graph(name: NamedGraph) -> Graph {
    match name {
        NamedGraph::H5House => Graph::from_edges(5, &[(0, 1), (0, 2), (1, 2), (0, 3), (1, 4), (3, 4)])
            .expect("static edge list"),
        NamedGraph::H6 => matched_cliques(3).expect("k = 3"),
        NamedGraph::H8 => matched_cliques(4).expect("k = 4"),
        NamedGraph::H6Prime => matched_cliques_minus_edge(3).expect("k = 3"),
        NamedGraph::H8Prime => matched_cliques_minus_edge(4).expect("k = 4"),
        NamedGraph::H8DoublePrime => {
            let mut b = GraphBuilder::new(8).expect("n = 8");
            for i in 0..4 {
                for j in i + 1..4 {
                    b.join(i, j);
                }
                b.join(i, i + 4);
            }
            b.join(4, 5);
            b.join(6, 7);
            b.build()
        }
        NamedGraph::K122Prime => multipartite(&[1, 2, 2])
            .without_edge(0, 1)
            .expect("vertices exist"),
        NamedGraph::K22 => multipartite(&[2, 2]),
        NamedGraph::K23 => multipartite(&[2, 3]),
        NamedGraph::K122 => multipartite(&[1, 2, 2]),
        NamedGraph::K222 => multipartite(&[2, 2, 2]),
        NamedGraph::K2222 => multipartite(&[2, 2, 2, 2]),
        NamedGraph::K113 => multipartite(&[1, 1, 3]),
    }
}

/// A graph family as named on the command line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    Named(NamedGraph),
    Complete(usize),
    Path(usize),
    Cycle(usize),
    Wheel(usize),
    /// `H_{2k}`; `k` comes from `--k`.
    MatchedCliques(Option<usize>),
    /// `K_{a,b,...}`; sizes come from `--parts`.
    Multipartite(Option<PartSizes>),
}

impl Family {
    /// Parses a family name. Named graphs win over the parametric `K<n>`
    /// form, so `K222` is the octahedron rather than `K_222`.
    pub fn parse(name: &str) -> Result<Family> {
        if let Ok(named) = name.parse::<NamedGraph>() {
            return Ok(Family::Named(named));
        }
        let lower = name.to_ascii_lowercase();
        match lower.as_str() {
            "matched-cliques" | "matched_cliques" | "h" => return Ok(Family::MatchedCliques(None)),
            "multipartite" | "complete-multipartite" | "k" => return Ok(Family::Multipartite(None)),
            _ => {}
        }
        let (prefix, digits) = lower.split_at(lower.find(|c: char| c.is_ascii_digit()).unwrap_or(lower.len()));
        let size: Option<usize> = digits.parse().ok();
        match (prefix, size) {
            ("k", Some(n)) => Ok(Family::Complete(n)),
            ("p", Some(n)) => Ok(Family::Path(n)),
            ("c", Some(n)) => Ok(Family::Cycle(n)),
            ("w", Some(n)) => Ok(Family::Wheel(n)),
            ("h", Some(n)) if n % 2 == 0 => Ok(Family::MatchedCliques(Some(n / 2))),
            _ => Err(Error::UnknownFamily(name.to_string())),
        }
    }

    /// Instantiates the family. `k` and `parts` fill in parametric families
    /// and are rejected when they conflict with the name.
    pub fn build(&self, k: Option<usize>, parts: Option<&PartSizes>) -> Result<Graph> {
        match self {
            Family::Named(named) => Ok(named_graph(*named)),
            Family::Complete(n) => complete(*n),
            Family::Path(n) => path(*n),
            Family::Cycle(n) => cycle(*n),
            Family::Wheel(n) => wheel(*n),
            Family::MatchedCliques(fixed) => {
                let k = match (fixed, k) {
                    (Some(a), Some(b)) if *a != b => {
                        return Err(Error::InvalidParameter(format!("--k {b} conflicts with H{}", 2 * a)))
                    }
                    (Some(a), _) => *a,
                    (None, Some(b)) => b,
                    (None, None) => return Err(Error::InvalidParameter("matched cliques need --k".into())),
                };
                matched_cliques(k)
            }
            Family::Multipartite(fixed) => {
                let parts = fixed
                    .as_ref()
                    .or(parts)
                    .ok_or_else(|| Error::InvalidParameter("multipartite needs --parts".into()))?;
                Ok(complete_multipartite(parts))
            }
        }
    }
}
