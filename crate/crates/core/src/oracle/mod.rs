//! Exact brute-force machinery used as ground truth: independence checks,
//! maximum independent sets, MIS counting and enumeration, boundary-class
//! restricted searches and minimum vertex covers.
//!
//! Everything here works on any [`UndirectedGraph`] below the vertex cap.

mod bits;
mod search;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{UndirectedGraph, VertexId};
use crate::score::Score;
use bits::Bits;
use search::{Outcome, Query, Search};

/// Default vertex cap; covers generation 4 of both families (42 vertices).
pub const DEFAULT_ORACLE_CAP: usize = 60;

/// Widest bitset the search is compiled for.
pub const MAX_ORACLE_VERTICES: usize = Bits::<16>::CAPACITY;

/// Sorted, duplicate-free vertex ids.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet(Vec<VertexId>);

impl VertexSet {
    pub fn new(mut ids: Vec<VertexId>) -> Self {
        ids.sort_unstable();
        ids.dedup();
        VertexSet(ids)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn as_slice(&self) -> &[VertexId] {
        &self.0
    }

    pub fn iter(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.0.iter().copied()
    }

    /// All ids in `0..num_vertices` not in `self`.
    pub fn complement(&self, num_vertices: usize) -> VertexSet {
        let mut out = Vec::with_capacity(num_vertices.saturating_sub(self.len()));
        let mut members = self.0.iter().peekable();
        for v in 0..num_vertices as VertexId {
            if members.peek() == Some(&&v) {
                members.next();
            } else {
                out.push(v);
            }
        }
        VertexSet(out)
    }

    pub fn into_vec(self) -> Vec<VertexId> {
        self.0
    }
}

impl FromIterator<VertexId> for VertexSet {
    fn from_iter<I: IntoIterator<Item = VertexId>>(iter: I) -> Self {
        VertexSet::new(iter.into_iter().collect())
    }
}

/// A boundary class as constraints: `required` must be in the set,
/// `forbidden` must stay out.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RestrictedQuery {
    pub required: VertexSet,
    pub forbidden: VertexSet,
}

impl RestrictedQuery {
    pub fn new(required: impl IntoIterator<Item = VertexId>, forbidden: impl IntoIterator<Item = VertexId>) -> Self {
        RestrictedQuery {
            required: required.into_iter().collect(),
            forbidden: forbidden.into_iter().collect(),
        }
    }

    /// Exactly the boundary vertices selected by `mask` (bit `i` is
    /// `boundary[i]`), the rest of the boundary excluded.
    pub fn boundary_pattern(boundary: [VertexId; 3], mask: u8) -> Self {
        let (inside, outside): (Vec<_>, Vec<_>) = (0..3).partition(|i| mask >> i & 1 == 1);
        RestrictedQuery::new(
            inside.into_iter().map(|i| boundary[i]),
            outside.into_iter().map(|i| boundary[i]),
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MisReport {
    pub alpha: BigUint,
    /// Lexicographically smallest maximum independent set.
    pub witness: VertexSet,
    pub count: Option<BigUint>,
    pub enumeration: Option<Vec<VertexSet>>,
    /// Set when the enumeration stopped at its limit.
    pub truncated: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RestrictedCount {
    pub alpha: Score,
    /// Number of sets of size `alpha` inside the class; zero if infeasible.
    pub count: BigUint,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexCover {
    pub size: BigUint,
    pub witness: VertexSet,
}

fn check_ids<G: UndirectedGraph + ?Sized>(g: &G, s: &VertexSet) -> Result<()> {
    match s.as_slice().last() {
        Some(&v) if v as usize >= g.vertex_count() => Err(Error::InvalidArgument(format!(
            "vertex {v} out of range for a graph with {} vertices",
            g.vertex_count()
        ))),
        _ => Ok(()),
    }
}

pub fn is_independent<G: UndirectedGraph + ?Sized>(g: &G, s: &VertexSet) -> Result<bool> {
    check_ids(g, s)?;
    Ok(!g.edge_list().iter().any(|&(u, v)| s.contains(u) && s.contains(v)))
}

pub fn is_maximal_independent<G: UndirectedGraph + ?Sized>(g: &G, s: &VertexSet) -> Result<bool> {
    if !is_independent(g, s)? {
        return Ok(false);
    }
    let mut dominated = vec![false; g.vertex_count()];
    for v in s.iter() {
        dominated[v as usize] = true;
    }
    for &(u, v) in g.edge_list() {
        if s.contains(u) {
            dominated[v as usize] = true;
        }
        if s.contains(v) {
            dominated[u as usize] = true;
        }
    }
    Ok(dominated.into_iter().all(|d| d))
}

/// True when every edge has an endpoint in `s`.
pub fn covers_all_edges<G: UndirectedGraph + ?Sized>(g: &G, s: &VertexSet) -> Result<bool> {
    check_ids(g, s)?;
    Ok(g.edge_list().iter().all(|&(u, v)| s.contains(u) || s.contains(v)))
}

/// Exact solver with a vertex cap.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Oracle {
    max_vertices: usize,
}

impl Default for Oracle {
    fn default() -> Self {
        Oracle {
            max_vertices: DEFAULT_ORACLE_CAP,
        }
    }
}

impl Oracle {
    pub fn new() -> Self {
        Self::default()
    }

    /// Caps above [`MAX_ORACLE_VERTICES`] are clamped.
    pub fn with_cap(max_vertices: usize) -> Self {
        Oracle {
            max_vertices: max_vertices.min(MAX_ORACLE_VERTICES),
        }
    }

    pub fn cap(&self) -> usize {
        self.max_vertices
    }

    pub fn accepts<G: UndirectedGraph + ?Sized>(&self, g: &G) -> bool {
        g.vertex_count() <= self.max_vertices
    }

    fn run<G: UndirectedGraph + ?Sized>(&self, g: &G, q: &Query<'_>) -> Result<Outcome> {
        let n = g.vertex_count();
        if n > self.max_vertices {
            return Err(Error::OracleCap {
                vertices: n,
                cap: self.max_vertices,
            });
        }
        let edges = g.edge_list();
        Ok(match n.div_ceil(64) {
            0 | 1 => Search::<1>::new(n, edges).run(q),
            2 => Search::<2>::new(n, edges).run(q),
            3 | 4 => Search::<4>::new(n, edges).run(q),
            5..=8 => Search::<8>::new(n, edges).run(q),
            _ => Search::<16>::new(n, edges).run(q),
        })
    }

    fn validated<'a, G: UndirectedGraph + ?Sized>(&self, g: &G, q: &'a RestrictedQuery) -> Result<(&'a [u32], &'a [u32])> {
        check_ids(g, &q.required)?;
        check_ids(g, &q.forbidden)?;
        if let Some(v) = q.required.iter().find(|&v| q.forbidden.contains(v)) {
            return Err(Error::InvalidArgument(format!(
                "vertex {v} is both required and forbidden"
            )));
        }
        Ok((q.required.as_slice(), q.forbidden.as_slice()))
    }

    pub fn max_independent_set<G: UndirectedGraph + ?Sized>(&self, g: &G) -> Result<MisReport> {
        let out = self.run(
            g,
            &Query {
                required: &[],
                forbidden: &[],
                count: false,
                enumerate: 1,
            },
        )?;
        let witness = VertexSet::new(out.sets.into_iter().next().unwrap_or_default());
        Ok(MisReport {
            alpha: BigUint::from(out.alpha.unwrap_or(0)),
            witness,
            count: None,
            enumeration: None,
            truncated: false,
        })
    }

    pub fn alpha<G: UndirectedGraph + ?Sized>(&self, g: &G) -> Result<BigUint> {
        self.restricted_alpha(g, &RestrictedQuery::default())
            .map(|s| s.as_size().and_then(|v| v.to_biguint()).unwrap_or_default())
    }

    pub fn count_maximum_independent_sets<G: UndirectedGraph + ?Sized>(&self, g: &G) -> Result<BigUint> {
        Ok(self.restricted_count(g, &RestrictedQuery::default())?.count)
    }

    pub fn enumerate_maximum_independent_sets<G: UndirectedGraph + ?Sized>(
        &self,
        g: &G,
        limit: usize,
    ) -> Result<MisReport> {
        if limit == 0 {
            return Err(Error::InvalidArgument("enumeration limit must be positive".into()));
        }
        let out = self.run(
            g,
            &Query {
                required: &[],
                forbidden: &[],
                count: true,
                enumerate: limit,
            },
        )?;
        let truncated = out.sets.len() > limit;
        let sets: Vec<VertexSet> = out.sets.into_iter().take(limit).map(VertexSet::new).collect();
        Ok(MisReport {
            alpha: BigUint::from(out.alpha.unwrap_or(0)),
            witness: sets.first().cloned().unwrap_or_default(),
            count: out.count.map(BigUint::from),
            enumeration: Some(sets),
            truncated,
        })
    }

    /// Largest independent set inside the class, or `Score::Infeasible` when
    /// the required vertices are themselves adjacent.
    pub fn restricted_alpha<G: UndirectedGraph + ?Sized>(&self, g: &G, q: &RestrictedQuery) -> Result<Score> {
        let (required, forbidden) = self.validated(g, q)?;
        let out = self.run(
            g,
            &Query {
                required,
                forbidden,
                count: false,
                enumerate: 0,
            },
        )?;
        Ok(out.alpha.map_or(Score::Infeasible, |a| Score::size(a as u64)))
    }

    pub fn restricted_count<G: UndirectedGraph + ?Sized>(&self, g: &G, q: &RestrictedQuery) -> Result<RestrictedCount> {
        let (required, forbidden) = self.validated(g, q)?;
        let out = self.run(
            g,
            &Query {
                required,
                forbidden,
                count: true,
                enumerate: 0,
            },
        )?;
        Ok(RestrictedCount {
            alpha: out.alpha.map_or(Score::Infeasible, |a| Score::size(a as u64)),
            count: BigUint::from(out.count.unwrap_or(0)),
        })
    }

    /// Complement of the lexicographically smallest MIS.
    pub fn min_vertex_cover<G: UndirectedGraph + ?Sized>(&self, g: &G) -> Result<VertexCover> {
        let mis = self.max_independent_set(g)?;
        let witness = mis.witness.complement(g.vertex_count());
        assert!(
            covers_all_edges(g, &witness)?,
            "complement of an independent set must cover every edge"
        );
        Ok(VertexCover {
            size: BigUint::from(witness.len()),
            witness,
        })
    }
}
