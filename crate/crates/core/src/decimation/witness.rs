//! Explicit maximum independent sets and vertex covers under the canonical
//! labeling of [`crate::graph`].

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::graph::{self, gasket_copy_maps, Family, VertexId, DEFAULT_GENERATION_CAP, MAX_SUPPORTED_GENERATION};
use crate::oracle::{covers_all_edges, VertexSet};

use super::merge::BoundaryMask;
use super::tables::{mask_tables, MaskTable};

fn check_cap(n: u32, cap: u32) -> Result<()> {
    let cap = cap.min(MAX_SUPPORTED_GENERATION);
    if n > cap {
        return Err(Error::GenerationCap { requested: n, cap });
    }
    Ok(())
}

fn small_vertex_count(n: u32) -> usize {
    (3usize.pow(n) + 3) / 2
}

pub fn psw_mis_witness(n: u32) -> Result<VertexSet> {
    psw_mis_witness_with_cap(n, DEFAULT_GENERATION_CAP)
}

/// The vertices created in the last iteration. They attach only to older
/// vertices, so they are pairwise non-adjacent, and there are `3^(n-1)` of
/// them.
pub fn psw_mis_witness_with_cap(n: u32, cap: u32) -> Result<VertexSet> {
    if n < 2 {
        return Err(Error::OutOfRange {
            formula: "web unique MIS witness",
            min: 2,
            n,
        });
    }
    check_cap(n, cap)?;
    let start = small_vertex_count(n - 1) as VertexId;
    let end = small_vertex_count(n) as VertexId;
    Ok((start..end).collect())
}

pub fn gasket_mis_witness(n: u32) -> Result<VertexSet> {
    gasket_mis_witness_with_cap(n, DEFAULT_GENERATION_CAP)
}

/// One maximum independent set of `S_n`, built bottom-up: for every
/// boundary pattern of every generation, the first best merge
/// configuration picks which pattern each copy contributes.
pub fn gasket_mis_witness_with_cap(n: u32, cap: u32) -> Result<VertexSet> {
    if n == 0 {
        return Err(Error::InvalidArgument("generation must be at least 1".into()));
    }
    check_cap(n, cap)?;
    let tables = mask_tables(Family::SierpinskiGasket, n)?;

    // sets[mask] for the current generation, in that generation's ids
    let mut sets: Vec<Option<Vec<VertexId>>> = BoundaryMask::all()
        .map(|m| match m.class() {
            0 => Some(Vec::new()),
            1 => Some((0..3).filter(|&i| m.contains(i as usize)).collect()),
            _ => None,
        })
        .collect();
    let mut boundary: [VertexId; 3] = [0, 1, 2];
    let mut num_vertices = 3usize;

    for table in &tables[..tables.len() - 1] {
        let maps = gasket_copy_maps(boundary, num_vertices);
        let next = glue_sets(table, &sets, &maps)?;
        boundary = [
            maps[0][boundary[0] as usize],
            maps[1][boundary[1] as usize],
            maps[2][boundary[2] as usize],
        ];
        num_vertices = num_vertices * 3 - 3;
        sets = next;
    }

    let last: &MaskTable = tables.last().expect("n >= 1");
    let best = last.best_mask();
    let ids = sets[best.index()].clone().expect("best pattern has a witness");
    Ok(VertexSet::new(ids))
}

fn glue_sets(
    table: &MaskTable,
    sets: &[Option<Vec<VertexId>>],
    maps: &[Vec<VertexId>; 3],
) -> Result<Vec<Option<Vec<VertexId>>>> {
    let mut next = Vec::with_capacity(8);
    for target in BoundaryMask::all() {
        let Some(cfg) = table.best_config(target)? else {
            next.push(None);
            continue;
        };
        let mut ids = Vec::new();
        for (copy, mask) in cfg.per_copy.iter().enumerate() {
            let part = sets[mask.index()].as_ref().expect("best configuration uses feasible patterns");
            ids.extend(part.iter().map(|&v| maps[copy][v as usize]));
        }
        ids.sort_unstable();
        ids.dedup();
        next.push(Some(ids));
    }
    Ok(next)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverWitness {
    pub size: BigUint,
    /// Present when the generation is within the build cap.
    pub witness: Option<VertexSet>,
    /// True once the witness was checked against the built graph.
    pub verified: bool,
}

pub fn vertex_cover_witness(family: Family, n: u32) -> Result<CoverWitness> {
    vertex_cover_witness_with_cap(family, n, DEFAULT_GENERATION_CAP)
}

/// Complement of the family's MIS witness. Above the cap only the exact
/// size is returned.
pub fn vertex_cover_witness_with_cap(family: Family, n: u32, cap: u32) -> Result<CoverWitness> {
    if n < 2 {
        return Err(Error::OutOfRange {
            formula: "vertex cover witness",
            min: 2,
            n,
        });
    }
    let alpha = super::alpha(family, n)?;
    let size = graph::vertex_count(n) - alpha;
    if n > cap.min(MAX_SUPPORTED_GENERATION) {
        return Ok(CoverWitness {
            size,
            witness: None,
            verified: false,
        });
    }
    let mis = match family {
        Family::ScaleFreeWeb => psw_mis_witness_with_cap(n, cap)?,
        Family::SierpinskiGasket => gasket_mis_witness_with_cap(n, cap)?,
    };
    let g = graph::build_with_cap(family, n, cap)?;
    let cover = mis.complement(g.num_vertices());
    if !covers_all_edges(&g, &cover)? || BigUint::from(cover.len()) != size {
        return Err(Error::InvalidArgument(format!(
            "complement of the {family} witness at n = {n} is not a minimum vertex cover"
        )));
    }
    Ok(CoverWitness {
        size,
        witness: Some(cover),
        verified: true,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_gasket, build_psw};
    use crate::oracle::{is_independent, is_maximal_independent};

    #[test]
    fn web_witnesses() {
        assert_eq!(psw_mis_witness(2).unwrap(), VertexSet::new(vec![3, 4, 5]));
        let w3 = psw_mis_witness(3).unwrap();
        assert_eq!(w3, (6..15).collect());
        assert_eq!(psw_mis_witness(6).unwrap().len(), 243);
        assert!(matches!(psw_mis_witness(1), Err(Error::OutOfRange { .. })));
        assert!(matches!(psw_mis_witness(17), Err(Error::GenerationCap { .. })));
    }

    #[test]
    fn gasket_witnesses() {
        assert_eq!(gasket_mis_witness(1).unwrap(), VertexSet::new(vec![0]));
        let s2 = build_gasket(2).unwrap();
        assert_eq!(gasket_mis_witness(2).unwrap(), s2.boundary().into_iter().collect());
        for n in 3..=6 {
            let g = build_gasket(n).unwrap();
            let w = gasket_mis_witness(n).unwrap();
            assert_eq!(w.len(), (3usize.pow(n - 1) + 3) / 2);
            assert!(is_maximal_independent(&g, &w).unwrap());
            for b in g.boundary() {
                assert!(w.contains(b));
            }
        }
    }

    #[test]
    fn cover_witnesses() {
        let c = vertex_cover_witness(Family::ScaleFreeWeb, 2).unwrap();
        assert_eq!(c.size, BigUint::from(3u32));
        assert_eq!(c.witness, Some(VertexSet::new(vec![0, 1, 2])));
        assert!(c.verified);

        let g = vertex_cover_witness(Family::SierpinskiGasket, 2).unwrap();
        assert_eq!(g.witness, Some(VertexSet::new(vec![1, 2, 4])));

        let c3 = vertex_cover_witness(Family::ScaleFreeWeb, 3).unwrap();
        let g3 = build_psw(3).unwrap();
        let older: VertexSet = (0..g3.num_vertices() as u32).filter(|&v| g3.birth()[v as usize] <= 2).collect();
        assert_eq!(c3.witness.unwrap(), older);

        let big = vertex_cover_witness(Family::SierpinskiGasket, 30).unwrap();
        assert_eq!(big.size, BigUint::from(3u32).pow(29));
        assert!(big.witness.is_none() && !big.verified);
        assert!(vertex_cover_witness(Family::ScaleFreeWeb, 1).is_err());
    }

    #[test]
    fn witness_is_independent_in_built_graph() {
        let g = build_psw(5).unwrap();
        assert!(is_independent(&g, &psw_mis_witness(5).unwrap()).unwrap());
    }
}
