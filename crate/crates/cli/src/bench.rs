//! Wall-clock timings for one family and generation.

use std::time::Instant;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use fractal_mis::decimation::mask_table;
use fractal_mis::graph::{self, vertex_count, Family};
use fractal_mis::{Oracle, Result};

use crate::args::Caps;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BenchReport {
    pub family: Family,
    pub n: u32,
    pub num_vertices: String,
    /// Absent above the generation cap.
    pub generation_us: Option<u64>,
    pub dp_us: u64,
    /// Absent above the oracle cap.
    pub oracle_us: Option<u64>,
    pub alpha: String,
}

impl BenchReport {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

fn micros(start: Instant) -> u64 {
    start.elapsed().as_micros() as u64
}

pub fn bench(family: Family, n: u32, caps: &Caps) -> Result<BenchReport> {
    let start = Instant::now();
    let table = mask_table(family, n)?;
    let dp_us = micros(start);

    let built = if n <= caps.generation {
        let start = Instant::now();
        let g = graph::build_with_cap(family, n, caps.generation)?;
        Some((g, micros(start)))
    } else {
        None
    };

    let oracle = Oracle::with_cap(caps.vertices);
    let oracle_us = match &built {
        Some((g, _)) if vertex_count(n) <= BigUint::from(oracle.cap()) => {
            let start = Instant::now();
            oracle.alpha(g)?;
            Some(micros(start))
        }
        _ => None,
    };

    Ok(BenchReport {
        family,
        n,
        num_vertices: vertex_count(n).to_string(),
        generation_us: built.map(|(_, t)| t),
        dp_us,
        oracle_us,
        alpha: table.alpha().to_string(),
    })
}
