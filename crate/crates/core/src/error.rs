use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("generation {requested} exceeds the size cap of {cap} (raise the cap explicitly to build it)")]
    GenerationCap { requested: u32, cap: u32 },

    #[error(
        "graph has {vertices} vertices, above the oracle cap of {cap}; \
         use the decimation solver for larger generations"
    )]
    OracleCap { vertices: usize, cap: usize },

    #[error("{formula} requires n >= {min}, got n = {n}")]
    OutOfRange {
        formula: &'static str,
        min: u32,
        n: u32,
    },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("{equation} disagrees with the configuration DP at n = {n}: {detail}")]
    RecurrenceMismatch {
        equation: String,
        n: u32,
        detail: String,
    },

    #[error("{equation} does not match the merge configurations: {detail}")]
    RecurrenceStructure { equation: String, detail: String },

    #[error("count does not fit the odd-times-power-of-two representation: {0}")]
    CountRepresentation(String),

    #[error("malformed edge list at line {line}: {reason}")]
    Parse { line: usize, reason: String },

    #[error("I/O error on {}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}
