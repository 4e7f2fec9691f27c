//! Canonical constructions of the pseudofractal scale-free web and the
//! Sierpiński gasket.
//!
//! Both builders are fully deterministic: vertex ids and edge order are part
//! of the contract, so witnesses and exports are reproducible.

mod export;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use export::{export_graph, write_graph, EdgeListDocument, ExportFormat};

pub type VertexId = u32;

/// Default largest generation a builder accepts without an explicit override.
pub const DEFAULT_GENERATION_CAP: u32 = 16;

/// Hard ceiling: generation 20 has about 1.7e9 vertices, the last that fits
/// 32-bit ids.
pub const MAX_SUPPORTED_GENERATION: u32 = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    #[serde(rename = "psw")]
    ScaleFreeWeb,
    #[serde(rename = "gasket")]
    SierpinskiGasket,
}

impl Family {
    pub const ALL: [Family; 2] = [Family::ScaleFreeWeb, Family::SierpinskiGasket];

    /// Short tag used in exports and on the command line.
    pub fn tag(self) -> &'static str {
        match self {
            Family::ScaleFreeWeb => "psw",
            Family::SierpinskiGasket => "gasket",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "psw" => Ok(Family::ScaleFreeWeb),
            "gasket" => Ok(Family::SierpinskiGasket),
            other => Err(Error::InvalidArgument(format!(
                "unknown family {other:?} (expected psw or gasket)"
            ))),
        }
    }
}

/// Read-only view of a simple undirected graph, enough for the oracle.
pub trait UndirectedGraph {
    fn vertex_count(&self) -> usize;

    /// Edges as `(u, v)` with `u < v`.
    fn edge_list(&self) -> &[(VertexId, VertexId)];

    fn adjacency(&self) -> Vec<Vec<VertexId>> {
        let mut adj = vec![Vec::new(); self.vertex_count()];
        for &(u, v) in self.edge_list() {
            adj[u as usize].push(v);
            adj[v as usize].push(u);
        }
        adj
    }
}

/// An arbitrary simple graph without family metadata.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlainGraph {
    num_vertices: usize,
    edges: Vec<(VertexId, VertexId)>,
}

impl PlainGraph {
    /// Normalizes every pair to `u < v` and drops duplicates.
    pub fn new(num_vertices: usize, edges: impl IntoIterator<Item = (VertexId, VertexId)>) -> Result<Self> {
        let mut out: Vec<(VertexId, VertexId)> = Vec::new();
        for (u, v) in edges {
            if u == v {
                return Err(Error::InvalidArgument(format!("self-loop on vertex {u}")));
            }
            if u as usize >= num_vertices || v as usize >= num_vertices {
                return Err(Error::InvalidArgument(format!(
                    "edge ({u}, {v}) out of range for {num_vertices} vertices"
                )));
            }
            out.push((u.min(v), u.max(v)));
        }
        out.sort_unstable();
        out.dedup();
        Ok(PlainGraph {
            num_vertices,
            edges: out,
        })
    }
}

impl UndirectedGraph for PlainGraph {
    fn vertex_count(&self) -> usize {
        self.num_vertices
    }

    fn edge_list(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }
}

/// One generation of either family, with the canonical labeling.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    family: Family,
    generation: u32,
    edges: Vec<(VertexId, VertexId)>,
    birth: Vec<u8>,
    boundary: [VertexId; 3],
}

impl Graph {
    pub fn family(&self) -> Family {
        self.family
    }

    pub fn generation(&self) -> u32 {
        self.generation
    }

    pub fn num_vertices(&self) -> usize {
        self.birth.len()
    }

    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    /// Generation at which each vertex id first appeared.
    pub fn birth(&self) -> &[u8] {
        &self.birth
    }

    /// Hub vertices `(A, B, C)` of the web, outmost vertices of the gasket.
    pub fn boundary(&self) -> [VertexId; 3] {
        self.boundary
    }

    pub fn degrees(&self) -> Vec<u32> {
        let mut deg = vec![0u32; self.num_vertices()];
        for &(u, v) in &self.edges {
            deg[u as usize] += 1;
            deg[v as usize] += 1;
        }
        deg
    }

    pub fn degree_multiset(&self) -> DegreeMultiset {
        let mut entries = BTreeMap::new();
        for d in self.degrees() {
            *entries.entry(u64::from(d)).or_insert(0u64) += 1;
        }
        DegreeMultiset { entries }
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        let key = (u.min(v), u.max(v));
        self.edges.contains(&key)
    }
}

impl UndirectedGraph for Graph {
    fn vertex_count(&self) -> usize {
        self.num_vertices()
    }

    fn edge_list(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }
}

/// Histogram of vertex degrees: degree -> number of vertices.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeMultiset {
    pub entries: BTreeMap<u64, u64>,
}

impl DegreeMultiset {
    pub fn from_pairs(pairs: impl IntoIterator<Item = (u64, u64)>) -> Self {
        let mut entries = BTreeMap::new();
        for (d, c) in pairs {
            if c > 0 {
                *entries.entry(d).or_insert(0) += c;
            }
        }
        DegreeMultiset { entries }
    }

    pub fn degree_sum(&self) -> u64 {
        self.entries.iter().map(|(d, c)| d * c).sum()
    }

    /// The exact degree histogram each family must have at generation `n`.
    ///
    /// Web: the three hubs have degree `2^n`; the `3^(i-1)` vertices born at
    /// iteration `i >= 2` have degree `2^(n-i+1)`. Gasket: three corners of
    /// degree 2, everything else degree 4.
    pub fn expected(family: Family, n: u32) -> Self {
        match family {
            Family::ScaleFreeWeb => {
                let mut pairs = vec![(1u64 << n, 3u64)];
                for i in 2..=n {
                    pairs.push((1u64 << (n - i + 1), 3u64.pow(i - 1)));
                }
                DegreeMultiset::from_pairs(pairs)
            }
            Family::SierpinskiGasket => {
                if n == 1 {
                    DegreeMultiset::from_pairs([(2, 3)])
                } else {
                    let total = (3u64.pow(n) + 3) / 2;
                    DegreeMultiset::from_pairs([(2, 3), (4, total - 3)])
                }
            }
        }
    }
}

/// `N_n = (3^n + 3) / 2`, shared by both families.
pub fn vertex_count(n: u32) -> BigUint {
    (BigUint::from(3u32).pow(n) + 3u32) / 2u32
}

/// `E_n = 3^n`, shared by both families.
pub fn edge_count(n: u32) -> BigUint {
    BigUint::from(3u32).pow(n)
}

fn check_generation(n: u32, cap: u32) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidArgument("generation must be at least 1".into()));
    }
    let cap = cap.min(MAX_SUPPORTED_GENERATION);
    if n > cap {
        return Err(Error::GenerationCap { requested: n, cap });
    }
    Ok(())
}

pub fn build(family: Family, n: u32) -> Result<Graph> {
    build_with_cap(family, n, DEFAULT_GENERATION_CAP)
}

pub fn build_with_cap(family: Family, n: u32, cap: u32) -> Result<Graph> {
    check_generation(n, cap)?;
    Ok(match family {
        Family::ScaleFreeWeb => psw_unchecked(n),
        Family::SierpinskiGasket => gasket_unchecked(n),
    })
}

pub fn build_psw(n: u32) -> Result<Graph> {
    build(Family::ScaleFreeWeb, n)
}

pub fn build_gasket(n: u32) -> Result<Graph> {
    build(Family::SierpinskiGasket, n)
}

fn psw_unchecked(n: u32) -> Graph {
    let edges_total = 3usize.pow(n);
    let mut edges: Vec<(VertexId, VertexId)> = Vec::with_capacity(edges_total);
    let mut birth: Vec<u8> = Vec::with_capacity(edges_total / 2 + 2);
    edges.extend([(0, 1), (0, 2), (1, 2)]);
    birth.extend([1, 1, 1]);
    for iteration in 2..=n {
        let existing = edges.len();
        for e in 0..existing {
            let (u, v) = edges[e];
            let w = birth.len() as VertexId;
            birth.push(iteration as u8);
            edges.push((u, w));
            edges.push((v, w));
        }
    }
    Graph {
        family: Family::ScaleFreeWeb,
        generation: n,
        edges,
        birth,
        boundary: [0, 1, 2],
    }
}

/// Id maps for the three copies glued into the next gasket generation.
///
/// Copy 1 keeps its ids. Copies 2 and 3 receive fresh ids in scan order,
/// except for the identified corners `B1 = A2`, `C1 = A3` and `C2 = B3`,
/// which reuse the id of the earlier copy.
pub(crate) fn gasket_copy_maps(boundary: [VertexId; 3], num_vertices: usize) -> [Vec<VertexId>; 3] {
    let [a, b, c] = boundary.map(|x| x as usize);
    let first: Vec<VertexId> = (0..num_vertices as VertexId).collect();
    let mut next = num_vertices as VertexId;
    let mut fresh = || {
        let id = next;
        next += 1;
        id
    };

    let second: Vec<VertexId> = (0..num_vertices)
        .map(|v| if v == a { first[b] } else { fresh() })
        .collect();
    let third: Vec<VertexId> = (0..num_vertices)
        .map(|v| {
            if v == a {
                first[c]
            } else if v == b {
                second[c]
            } else {
                fresh()
            }
        })
        .collect();
    [first, second, third]
}

fn gasket_unchecked(n: u32) -> Graph {
    let mut edges: Vec<(VertexId, VertexId)> = vec![(0, 1), (0, 2), (1, 2)];
    let mut birth: Vec<u8> = vec![1, 1, 1];
    let mut boundary: [VertexId; 3] = [0, 1, 2];
    for generation in 2..=n {
        let maps = gasket_copy_maps(boundary, birth.len());
        let mut next_edges = Vec::with_capacity(edges.len() * 3);
        for map in &maps {
            for &(u, v) in &edges {
                let (x, y) = (map[u as usize], map[v as usize]);
                next_edges.push((x.min(y), x.max(y)));
            }
        }
        let total = birth.len() * 3 - 3;
        birth.resize(total, generation as u8);
        boundary = [
            maps[0][boundary[0] as usize],
            maps[1][boundary[1] as usize],
            maps[2][boundary[2] as usize],
        ];
        edges = next_edges;
    }
    Graph {
        family: Family::SierpinskiGasket,
        generation: n,
        edges,
        birth,
        boundary,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn multiset(pairs: &[(u64, u64)]) -> DegreeMultiset {
        DegreeMultiset::from_pairs(pairs.iter().copied())
    }

    #[test]
    fn psw_small_generations() {
        let g1 = build_psw(1).unwrap();
        assert_eq!(g1.num_vertices(), 3);
        assert_eq!(g1.edges(), &[(0, 1), (0, 2), (1, 2)]);
        assert_eq!(g1.degree_multiset(), multiset(&[(2, 3)]));

        let g2 = build_psw(2).unwrap();
        assert_eq!(g2.num_vertices(), 6);
        assert_eq!(g2.edges().len(), 9);
        assert_eq!(g2.edges()[3], (0, 3));
        assert_eq!(g2.degree_multiset(), multiset(&[(4, 3), (2, 3)]));
        assert_eq!(g2.birth(), &[1, 1, 1, 2, 2, 2]);

        let g3 = build_psw(3).unwrap();
        assert_eq!(g3.degree_multiset(), multiset(&[(8, 3), (4, 3), (2, 9)]));

        let g5 = build_psw(5).unwrap();
        assert_eq!((g5.num_vertices(), g5.edges().len()), (123, 243));
    }

    #[test]
    fn gasket_small_generations() {
        let s1 = build_gasket(1).unwrap();
        assert_eq!((s1.num_vertices(), s1.edges().len()), (3, 3));

        let s2 = build_gasket(2).unwrap();
        assert_eq!((s2.num_vertices(), s2.edges().len()), (6, 9));
        assert_eq!(s2.degree_multiset(), multiset(&[(2, 3), (4, 3)]));
        assert_eq!(s2.boundary(), [0, 3, 5]);

        let s3 = build_gasket(3).unwrap();
        assert_eq!((s3.num_vertices(), s3.edges().len()), (15, 27));
        assert_eq!(s3.degree_multiset(), multiset(&[(2, 3), (4, 12)]));

        let s4 = build_gasket(4).unwrap();
        assert_eq!(s4.degree_multiset(), multiset(&[(2, 3), (4, 39)]));
    }

    #[test]
    fn boundary_adjacency_differs_between_families() {
        for n in 1..=5 {
            let g = build_psw(n).unwrap();
            let [a, b, c] = g.boundary();
            assert!(g.has_edge(a, b) && g.has_edge(a, c) && g.has_edge(b, c));
        }
        for n in 2..=5 {
            let s = build_gasket(n).unwrap();
            let [a, b, c] = s.boundary();
            assert!(!s.has_edge(a, b) && !s.has_edge(a, c) && !s.has_edge(b, c));
        }
    }

    #[test]
    fn caps_and_zero_generation() {
        assert!(matches!(
            build_psw(17),
            Err(Error::GenerationCap { requested: 17, cap: 16 })
        ));
        assert!(matches!(
            build_with_cap(Family::SierpinskiGasket, 21, 40),
            Err(Error::GenerationCap { requested: 21, cap: 20 })
        ));
        assert!(matches!(build_gasket(0), Err(Error::InvalidArgument(_))));
        assert!(build_with_cap(Family::ScaleFreeWeb, 3, 3).is_ok());
    }

    #[test]
    fn family_tags_round_trip() {
        for f in Family::ALL {
            assert_eq!(f.tag().parse::<Family>().unwrap(), f);
        }
        assert!("tree".parse::<Family>().is_err());
    }

    #[test]
    fn plain_graph_validation() {
        let g = PlainGraph::new(3, [(1, 0), (0, 1), (2, 1)]).unwrap();
        assert_eq!(g.edge_list(), &[(0, 1), (1, 2)]);
        assert!(PlainGraph::new(3, [(1, 1)]).is_err());
        assert!(PlainGraph::new(3, [(0, 3)]).is_err());
    }
}
