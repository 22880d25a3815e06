//! Diagnostic decompositions of a pencil used by the line-counting arguments
//! for diameter ≥ 3 and diameter 2.

use std::collections::BTreeSet;

use super::{line_members, pencil_from, Pencil, PencilClass};
use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::metric::{apsp, diameter, DistanceMatrix};

/// Split of the pencil at `x` for a diametral pair `(x, y)`, diameter ≥ 3.
#[derive(Debug, Clone)]
pub struct Diam3Partition {
    pub x: usize,
    pub y: usize,
    pub diameter: u32,
    pub pencil: Pencil,
    /// Classes of size 1.
    pub l0: Vec<PencilClass>,
    /// Classes of size ≥ 2 inside `N(x)`.
    pub c1: Vec<PencilClass>,
    /// Classes of size ≥ 2 not inside `N(x)`.
    pub c2: Vec<PencilClass>,
    /// Union of the `c1` classes.
    pub v1: VertexSet,
    /// Members of `c2` classes with `2·d(x,u) ≤ diam`.
    pub v2: VertexSet,
    /// Distinct lines `ȳu` for `u ∈ v1 ∪ v2`.
    pub cy12: BTreeSet<VertexSet>,
}

pub fn diam3_partition(g: &Graph, x: usize, y: usize) -> Result<Diam3Partition> {
    let d = apsp(g);
    diam3_partition_from(g, &d, x, y)
}

pub(crate) fn diam3_partition_from(
    g: &Graph,
    d: &DistanceMatrix,
    x: usize,
    y: usize,
) -> Result<Diam3Partition> {
    let n = g.n();
    if x >= n || y >= n {
        return Err(Error::VertexOutOfRange(x.max(y), n));
    }
    let diam = diameter(d)?;
    if diam < 3 {
        return Err(Error::DiameterPrecondition {
            found: diam,
            required: "diameter ≥ 3",
        });
    }
    if d.get(x, y) != diam {
        return Err(Error::NotDiametral(x, y));
    }

    let pencil = pencil_from(d, x);
    let nx = g.neighbors(x);
    let (mut l0, mut c1, mut c2) = (Vec::new(), Vec::new(), Vec::new());
    let (mut v1, mut v2) = (VertexSet::new(), VertexSet::new());
    for class in &pencil.classes {
        if class.members.len() == 1 {
            l0.push(*class);
        } else if class.members.is_subset(nx) {
            c1.push(*class);
            v1 = v1.union(&class.members);
        } else {
            c2.push(*class);
            for u in class.members.iter() {
                if 2 * d.get(x, u) <= diam {
                    v2.insert(u);
                }
            }
        }
    }
    let cy12 = v1
        .union(&v2)
        .iter()
        .map(|u| line_members(d, y, u))
        .collect();
    Ok(Diam3Partition {
        x,
        y,
        diameter: diam,
        pencil,
        l0,
        c1,
        c2,
        v1,
        v2,
        cy12,
    })
}

/// Decomposition of `N(x)` and the associated line families, diameter 2.
#[derive(Debug, Clone)]
pub struct Diam2Partition {
    pub x: usize,
    pub pencil: Pencil,
    /// `N(x)`.
    pub n1: VertexSet,
    /// Vertices at distance 2 from `x`.
    pub n2: VertexSet,
    /// Lines `x̄u`, `u ∈ N(x)`.
    pub l1: BTreeSet<VertexSet>,
    /// Lines `x̄u`, `u ∈ N²(x)`.
    pub l2: BTreeSet<VertexSet>,
    /// Neighbours whose class has size 1, 2 and ≥ 3.
    pub a1: VertexSet,
    pub a2: VertexSet,
    pub a3: VertexSet,
    /// `u ∈ A2` with a non-neighbour in `N(x) ∖ [u]`.
    pub a2p: VertexSet,
    pub a2pp: VertexSet,
    /// Number of distinct lines `x̄u` with `u ∈ A3`.
    pub a3_lines: usize,
    /// `𝒜_u` for each class of size ≥ 3, keyed by the class.
    pub a3_classes: Vec<(VertexSet, BTreeSet<VertexSet>)>,
    /// Union of the `𝒜_u`.
    pub a3_family: BTreeSet<VertexSet>,
    /// Union of the `𝒜_{u,v}` over `u ∈ A'_2`, `v ∈ N(x) ∖ [u]`, `uv ∉ E`.
    pub a2p_family: BTreeSet<VertexSet>,
    /// Lines `ūv` with `u, v ∈ A''_2` in different classes.
    pub a2pp_family: BTreeSet<VertexSet>,
    /// Lines `ūv` with `u ∈ N(x) ∖ A''_2`, `v ∈ A''_2`.
    pub a2ppp_family: BTreeSet<VertexSet>,
}

pub fn diam2_partition(g: &Graph, x: usize) -> Result<Diam2Partition> {
    let d = apsp(g);
    diam2_partition_from(g, &d, x)
}

pub(crate) fn diam2_partition_from(g: &Graph, d: &DistanceMatrix, x: usize) -> Result<Diam2Partition> {
    let n = g.n();
    if x >= n {
        return Err(Error::VertexOutOfRange(x, n));
    }
    let diam = diameter(d)?;
    if diam != 2 {
        return Err(Error::DiameterPrecondition {
            found: diam,
            required: "diameter = 2",
        });
    }

    let pencil = pencil_from(d, x);
    let n1 = *g.neighbors(x);
    let mut n2 = g.vertices().difference(&n1);
    n2.remove(x);

    let l1 = n1.iter().map(|u| pencil.class_of(u).line).collect();
    let l2 = n2.iter().map(|u| pencil.class_of(u).line).collect();

    let (mut a1, mut a2, mut a3) = (VertexSet::new(), VertexSet::new(), VertexSet::new());
    for u in n1.iter() {
        match pencil.class_of(u).members.len() {
            1 => a1.insert(u),
            2 => a2.insert(u),
            _ => a3.insert(u),
        }
    }
    let a2p: VertexSet = a2
        .iter()
        .filter(|&u| {
            let class = pencil.class_of(u).members;
            n1.difference(&class)
                .iter()
                .any(|v| !g.has_edge(u, v))
        })
        .collect();
    let a2pp = a2.difference(&a2p);

    let mut a3_class_sets: Vec<VertexSet> = a3.iter().map(|u| pencil.class_of(u).members).collect();
    a3_class_sets.sort_unstable();
    a3_class_sets.dedup();
    let a3_lines = a3_class_sets.len();

    let pair_lines = |s: &VertexSet, t: &VertexSet| -> Vec<VertexSet> {
        let mut out = Vec::new();
        for a in s.iter() {
            for b in t.iter() {
                if a != b {
                    out.push(line_members(d, a, b));
                }
            }
        }
        out
    };

    let a3_classes: Vec<(VertexSet, BTreeSet<VertexSet>)> = a3_class_sets
        .iter()
        .map(|class| (*class, pair_lines(class, class).into_iter().collect()))
        .collect();
    let a3_family = a3_classes.iter().flat_map(|(_, f)| f.iter().copied()).collect();

    let mut a2p_family = BTreeSet::new();
    for u in a2p.iter() {
        let cu = pencil.class_of(u).members;
        for v in n1.difference(&cu).iter().filter(|&v| !g.has_edge(u, v)) {
            let cv = pencil.class_of(v).members;
            a2p_family.extend(pair_lines(&cu, &cv));
        }
    }

    let mut a2pp_family = BTreeSet::new();
    for u in a2pp.iter() {
        for v in a2pp.iter().filter(|&v| v > u && !pencil.same_class(u, v)) {
            a2pp_family.insert(line_members(d, u, v));
        }
    }
    let outside = n1.difference(&a2pp);
    let a2ppp_family = pair_lines(&outside, &a2pp).into_iter().collect();

    Ok(Diam2Partition {
        x,
        pencil,
        n1,
        n2,
        l1,
        l2,
        a1,
        a2,
        a3,
        a2p,
        a2pp,
        a3_lines,
        a3_classes,
        a3_family,
        a2p_family,
        a2pp_family,
        a2ppp_family,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, named_graph, NamedGraph};

    #[test]
    fn octahedron_neighbourhood_is_all_a2pp() {
        let g = named_graph(NamedGraph::K222);
        for x in 0..6 {
            let p = diam2_partition(&g, x).unwrap();
            assert_eq!(p.n1, *g.neighbors(x));
            assert_eq!(p.a2, p.n1);
            assert_eq!(p.a2pp, p.n1);
            assert!(p.a1.is_empty() && p.a3.is_empty() && p.a2p.is_empty());
            assert_eq!(p.n2.len(), 1);
            // Two partner pairs in N(x) give one cross line.
            assert_eq!(p.a2pp_family.len(), 1);
            assert!(p.a2ppp_family.is_empty());
        }
    }

    #[test]
    fn k122_apex() {
        let g = named_graph(NamedGraph::K122);
        let p = diam2_partition(&g, 0).unwrap();
        assert_eq!(p.a2pp.len(), 4);
        assert_eq!(p.a2pp, p.n1);
        assert!(p.n2.is_empty());
        assert_eq!(p.l1.len(), 2);
    }

    #[test]
    fn diam2_precondition() {
        assert!(matches!(
            diam2_partition(&complete(4).unwrap(), 0),
            Err(Error::DiameterPrecondition { found: 1, .. })
        ));
        assert!(matches!(
            diam2_partition(&cycle(6).unwrap(), 0),
            Err(Error::DiameterPrecondition { found: 3, .. })
        ));
    }

    #[test]
    fn diam3_on_h8_doubleprime() {
        let g = named_graph(NamedGraph::H8DoublePrime);
        let d = apsp(&g);
        let mut pairs = 0;
        for x in 0..8 {
            for y in 0..8 {
                if d.get(x, y) == 3 {
                    pairs += 1;
                    let p = diam3_partition(&g, x, y).unwrap();
                    assert_eq!(p.l0.len() + p.c1.len() + p.c2.len(), p.pencil.line_count());
                    assert!(p.v2.iter().all(|u| 2 * d.get(x, u) <= 3));
                }
            }
        }
        assert!(pairs > 0);
    }

    #[test]
    fn six_cycle_opposite_vertices() {
        let g = cycle(6).unwrap();
        let p = diam3_partition(&g, 0, 3).unwrap();
        // 0̄1, 0̄3 and 0̄5 are all the whole cycle.
        let s = |v: &[usize]| v.iter().copied().collect::<VertexSet>();
        assert!(p.c1.is_empty());
        assert_eq!(p.c2.len(), 1);
        assert_eq!(p.c2[0].members, s(&[1, 3, 5]));
        assert_eq!(p.l0.len(), 2);
        assert!(p.v1.is_empty());
        assert_eq!(p.v2, s(&[1, 5]));
        let expected: BTreeSet<VertexSet> = [s(&[0, 1, 2, 3, 4]), s(&[0, 2, 3, 4, 5])].into();
        assert_eq!(p.cy12, expected);
    }

    #[test]
    fn diam3_preconditions() {
        let g = cycle(6).unwrap();
        assert_eq!(diam3_partition(&g, 0, 2).unwrap_err(), Error::NotDiametral(0, 2));
        assert!(matches!(
            diam3_partition(&cycle(5).unwrap(), 0, 2),
            Err(Error::DiameterPrecondition { found: 2, .. })
        ));
    }
}
