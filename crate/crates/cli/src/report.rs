//! Serialized results. Every number is an exact decimal string so no value
//! ever passes through floating point.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use fractal_mis::graph::{edge_count, vertex_count, Family};
use fractal_mis::{ExactCount, Score, VertexSet};

/// Counts wider than this are reported by exponent only.
pub const MAX_DECIMAL_BITS: u64 = 1 << 20;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResultReport {
    pub family: Family,
    pub n: u32,
    pub num_vertices: String,
    pub num_edges: String,
    pub method: String,
    pub alpha: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub classes: Option<BTreeMap<String, String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub count: Option<CountField>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cover: Option<CoverField>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub enumeration: Option<EnumerationField>,
    pub elapsed_ms: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountField {
    /// Omitted when the count is wider than [`MAX_DECIMAL_BITS`].
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub decimal: Option<String>,
    /// Present when the count is an exact power of two.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pow2_exponent: Option<String>,
}

impl CountField {
    pub fn from_count(c: &ExactCount) -> Self {
        CountField {
            decimal: c.to_biguint(MAX_DECIMAL_BITS).map(|v| v.to_string()),
            pow2_exponent: c.pow2_exponent().map(|e| e.to_string()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverField {
    pub size: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<u32>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerationField {
    pub sets: Vec<Vec<u32>>,
    pub truncated: bool,
}

impl ResultReport {
    pub fn new(family: Family, n: u32, method: &str, alpha: &BigUint) -> Self {
        ResultReport {
            family,
            n,
            num_vertices: vertex_count(n).to_string(),
            num_edges: edge_count(n).to_string(),
            method: method.to_string(),
            alpha: alpha.to_string(),
            classes: None,
            count: None,
            witness: None,
            cover: None,
            enumeration: None,
            elapsed_ms: 0,
        }
    }

    pub fn set_classes<'a>(&mut self, values: impl IntoIterator<Item = &'a Score>) {
        self.classes = Some(
            values
                .into_iter()
                .enumerate()
                .map(|(k, v)| (k.to_string(), v.to_string()))
                .collect(),
        );
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

pub fn ids(set: &VertexSet) -> Vec<u32> {
    set.as_slice().to_vec()
}
