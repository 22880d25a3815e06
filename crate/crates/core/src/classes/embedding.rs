//! Rotation systems, face tracing and the face criterion for local
//! connectivity of plane graphs.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::{complete, complete_multipartite, cycle, named_graph, wheel, Graph, GraphBuilder, NamedGraph, PartSizes};

/// Cyclic order of neighbours around each vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RotationSystem {
    rot: Vec<Vec<usize>>,
}

impl RotationSystem {
    pub fn new(rot: Vec<Vec<usize>>) -> RotationSystem {
        RotationSystem { rot }
    }

    /// Sorts neighbours by angle around straight-line coordinates.
    pub fn from_coordinates(g: &Graph, coords: &[(f64, f64)]) -> Result<RotationSystem> {
        if coords.len() != g.n() {
            return Err(Error::SizeMismatch {
                expected: g.n(),
                got: coords.len(),
            });
        }
        let rot = (0..g.n())
            .map(|v| {
                let (x, y) = coords[v];
                let mut nb = g.neighbors(v).to_vec();
                nb.sort_by(|&a, &b| {
                    let ta = (coords[a].1 - y).atan2(coords[a].0 - x);
                    let tb = (coords[b].1 - y).atan2(coords[b].0 - x);
                    ta.total_cmp(&tb)
                });
                nb
            })
            .collect();
        Ok(RotationSystem { rot })
    }

    pub fn n(&self) -> usize {
        self.rot.len()
    }

    pub fn around(&self, v: usize) -> &[usize] {
        &self.rot[v]
    }

    /// Each `rot[v]` must list the neighbours of `v` exactly once.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        if self.rot.len() != g.n() {
            return Err(Error::Rotation(format!(
                "rotation covers {} vertices, graph has {}",
                self.rot.len(),
                g.n()
            )));
        }
        for (v, order) in self.rot.iter().enumerate() {
            let listed: VertexSet = order.iter().copied().filter(|&w| w < g.n()).collect();
            if listed.len() != order.len() || listed != *g.neighbors(v) {
                return Err(Error::Rotation(format!(
                    "rotation at {v} is not a permutation of its neighbours"
                )));
            }
        }
        Ok(())
    }
}

impl FromStr for RotationSystem {
    type Err = Error;

    /// One line per vertex, `v: n1 n2 …`, in any vertex order.
    fn from_str(s: &str) -> Result<Self> {
        let mut rows: Vec<Option<Vec<usize>>> = Vec::new();
        for (lineno, raw) in s.lines().enumerate() {
            let line = raw.split('#').next().unwrap().trim();
            if line.is_empty() {
                continue;
            }
            let bad = |msg: &str| Error::Rotation(format!("line {}: {msg}", lineno + 1));
            let (head, tail) = line.split_once(':').ok_or_else(|| bad("expected 'v: neighbours'"))?;
            let v: usize = head.trim().parse().map_err(|_| bad("bad vertex"))?;
            let nb = tail
                .split_whitespace()
                .map(|t| t.parse::<usize>().map_err(|_| bad("bad neighbour")))
                .collect::<Result<Vec<_>>>()?;
            if v >= crate::bitset::MAX_VERTICES {
                return Err(bad("vertex too large"));
            }
            if rows.len() <= v {
                rows.resize(v + 1, None);
            }
            if rows[v].replace(nb).is_some() {
                return Err(bad("vertex listed twice"));
            }
        }
        let rot = rows
            .into_iter()
            .enumerate()
            .map(|(v, r)| r.ok_or_else(|| Error::Rotation(format!("vertex {v} missing"))))
            .collect::<Result<Vec<_>>>()?;
        Ok(RotationSystem { rot })
    }
}

impl fmt::Display for RotationSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (v, order) in self.rot.iter().enumerate() {
            write!(f, "{v}:")?;
            for w in order {
                write!(f, " {w}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Closed walks traced from a rotation system. Each walk lists the tail of
/// every dart in order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceSet {
    pub faces: Vec<Vec<usize>>,
}

impl FaceSet {
    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn satisfies_euler(&self, g: &Graph) -> bool {
        g.n() as i64 - g.edge_count() as i64 + self.faces.len() as i64 == 2
    }
}

/// Traces faces with the rule: after dart `(u, v)` take `(v, w)` where `w`
/// follows `u` in the rotation at `v`.
pub fn trace_faces(g: &Graph, r: &RotationSystem) -> Result<FaceSet> {
    r.validate(g)?;
    if g.edge_count() == 0 {
        return Ok(FaceSet {
            faces: if g.n() > 0 { vec![Vec::new()] } else { Vec::new() },
        });
    }
    let mut pos: HashMap<(usize, usize), usize> = HashMap::new();
    for v in 0..g.n() {
        for (i, &w) in r.around(v).iter().enumerate() {
            pos.insert((v, w), i);
        }
    }
    let mut used: HashMap<(usize, usize), bool> = HashMap::new();
    let mut faces = Vec::new();
    for (u, v) in g.edges().flat_map(|(u, v)| [(u, v), (v, u)]) {
        if used.contains_key(&(u, v)) {
            continue;
        }
        let mut walk = Vec::new();
        let (mut a, mut b) = (u, v);
        while !used.contains_key(&(a, b)) {
            used.insert((a, b), true);
            walk.push(a);
            let around = r.around(b);
            let next = around[(pos[&(b, a)] + 1) % around.len()];
            a = b;
            b = next;
        }
        faces.push(walk);
    }
    Ok(FaceSet { faces })
}

/// Every vertex lies on at most one face whose boundary is not a triangle.
pub fn locally_connected_by_embedding(g: &Graph, r: &RotationSystem) -> Result<bool> {
    let faces = trace_faces(g, r)?;
    if !faces.satisfies_euler(g) {
        return Err(Error::NotPlane(format!(
            "n - e + f = {} - {} + {} != 2",
            g.n(),
            g.edge_count(),
            faces.len()
        )));
    }
    let mut bad_faces = vec![0usize; g.n()];
    for face in faces.faces.iter().filter(|f| f.len() != 3) {
        let on: VertexSet = face.iter().copied().collect();
        for v in on.iter() {
            bad_faces[v] += 1;
        }
    }
    Ok(bad_faces.iter().all(|&c| c <= 1))
}

#[derive(Debug, Clone)]
pub struct EmbeddedGraph {
    pub name: String,
    pub graph: Graph,
    pub rotation: RotationSystem,
}

fn on_circle(k: usize, radius: f64, phase: f64) -> impl Iterator<Item = (f64, f64)> {
    (0..k).map(move |i| {
        let t = phase + std::f64::consts::TAU * i as f64 / k as f64;
        (radius * t.cos(), radius * t.sin())
    })
}

fn embedded(name: &str, graph: Graph, coords: &[(f64, f64)]) -> EmbeddedGraph {
    let rotation = RotationSystem::from_coordinates(&graph, coords).expect("coordinate count");
    EmbeddedGraph {
        name: name.to_string(),
        graph,
        rotation,
    }
}

/// Triangle 0,1,2 with each later vertex placed at the centroid of the
/// listed face.
fn stacked(name: &str, inserts: &[(usize, usize, usize)]) -> EmbeddedGraph {
    let n = 3 + inserts.len();
    let mut coords: Vec<(f64, f64)> = on_circle(3, 10.0, 0.3).collect();
    let mut b = GraphBuilder::new(n).unwrap();
    for (u, v) in [(0, 1), (1, 2), (0, 2)] {
        b.add_edge(u, v).unwrap();
    }
    for (i, &(p, q, r)) in inserts.iter().enumerate() {
        let v = 3 + i;
        let c = (
            (coords[p].0 + coords[q].0 + coords[r].0) / 3.0,
            (coords[p].1 + coords[q].1 + coords[r].1) / 3.0,
        );
        coords.push(c);
        for w in [p, q, r] {
            b.add_edge(v, w).unwrap();
        }
    }
    embedded(name, b.build(), &coords)
}

/// Plane graphs with straight-line embeddings: cycles, K4, wheels, the
/// octahedron, stacked triangulations and a few non-triangulated extras.
pub fn embedded_corpus() -> Vec<EmbeddedGraph> {
    let mut out = Vec::new();
    for n in 4..=8 {
        let coords: Vec<_> = on_circle(n, 1.0, 0.0).collect();
        out.push(embedded(&format!("C{n}"), cycle(n).unwrap(), &coords));
    }
    let mut k4 = vec![(0.0, 0.0)];
    k4.extend(on_circle(3, 1.0, 0.0));
    out.push(embedded("K4", complete(4).unwrap(), &k4));
    for rim in 4..=7 {
        let mut coords = vec![(0.0, 0.0)];
        coords.extend(on_circle(rim, 1.0, 0.0));
        out.push(embedded(&format!("W{rim}"), wheel(rim).unwrap(), &coords));
    }

    // Parts {0,1}, {2,3}, {4,5}: outer triangle 0,2,4, each partner opposite.
    let oct = complete_multipartite(&PartSizes::new(vec![2, 2, 2]).unwrap());
    let outer: Vec<_> = on_circle(3, 3.0, 0.5).collect();
    let inner: Vec<_> = on_circle(3, 1.0, 0.5 + std::f64::consts::PI).collect();
    let coords = [outer[0], inner[0], outer[1], inner[1], outer[2], inner[2]];
    out.push(embedded("octahedron", oct, &coords));

    out.push(stacked("stacked-a", &[(0, 1, 2), (0, 1, 3), (1, 2, 3), (0, 2, 3)]));
    out.push(stacked(
        "stacked-b",
        &[(0, 1, 2), (0, 1, 3), (0, 1, 4), (1, 3, 4), (0, 3, 4)],
    ));

    // Not locally connected: every vertex sees two quadrilaterals.
    let cube = Graph::from_edges(
        8,
        &[(0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (5, 6), (6, 7), (7, 4), (0, 4), (1, 5), (2, 6), (3, 7)],
    )
    .unwrap();
    let mut coords: Vec<_> = on_circle(4, 3.0, 0.0).collect();
    coords.extend(on_circle(4, 1.0, 0.0));
    out.push(embedded("cube", cube, &coords));

    // Triangles 0,1,2 and 3,4,5 matched i to i+3.
    let prism = named_graph(NamedGraph::H6);
    let mut coords: Vec<_> = on_circle(3, 3.0, 0.0).collect();
    coords.extend(on_circle(3, 1.0, 0.0));
    out.push(embedded("prism", prism, &coords));

    let house = named_graph(NamedGraph::H5House);
    let coords = [(0.0, 1.0), (1.0, 1.0), (0.5, 2.0), (0.0, 0.0), (1.0, 0.0)];
    out.push(embedded("house", house, &coords));

    // Hub 0 over the path 1..5.
    let mut b = GraphBuilder::new(6).unwrap();
    for i in 1..6 {
        b.add_edge(0, i).unwrap();
        if i < 5 {
            b.add_edge(i, i + 1).unwrap();
        }
    }
    let mut coords = vec![(0.0, 0.0)];
    coords.extend((0..5).map(|i| {
        let t = 0.3 + 0.5 * i as f64;
        (t.cos(), t.sin())
    }));
    out.push(embedded("fan", b.build(), &coords));
    out
}
