//! Exact independence numbers, maximum independent sets, MIS counts and
//! minimum vertex covers for two self-similar graph families: the
//! pseudofractal scale-free web `G_n` and the Sierpiński gasket `S_n`.
//!
//! The crate is split into three layers:
//!
//! * [`graph`] builds both families with a fixed canonical labeling and
//!   serializes them (edge list, DOT, JSON).
//! * [`oracle`] is a family-agnostic branch-and-bound solver used as ground
//!   truth on graphs with a few dozen vertices.
//! * [`decimation`] computes boundary-class values and counts for any
//!   generation by gluing three copies of the previous one, cross-checked
//!   against the hand-transcribed recurrences and closed forms.

pub mod count;
pub mod decimation;
pub mod error;
pub mod graph;
pub mod oracle;
pub mod score;

pub use count::ExactCount;
pub use error::{Error, Result};
pub use graph::{Family, Graph, VertexId};
pub use oracle::{Oracle, VertexSet};
pub use score::Score;
