//! Class values with an explicit bottom element.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;

/// Size of the best independent set in some class, or `Infeasible` when the
/// class is empty.
///
/// `Infeasible` absorbs under addition and loses every comparison, so a max
/// over candidate values simply ignores it.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Score {
    Infeasible,
    Size(BigInt),
}

impl Score {
    pub fn size(value: impl Into<BigInt>) -> Self {
        Score::Size(value.into())
    }

    pub fn is_feasible(&self) -> bool {
        matches!(self, Score::Size(_))
    }

    pub fn as_size(&self) -> Option<&BigInt> {
        match self {
            Score::Infeasible => None,
            Score::Size(v) => Some(v),
        }
    }

    pub fn plus(&self, other: &Score) -> Score {
        match (self, other) {
            (Score::Size(a), Score::Size(b)) => Score::Size(a + b),
            _ => Score::Infeasible,
        }
    }

    pub fn offset(&self, delta: i64) -> Score {
        match self {
            Score::Size(a) => Score::Size(a + delta),
            Score::Infeasible => Score::Infeasible,
        }
    }

    pub fn scaled(&self, factor: u32) -> Score {
        match self {
            Score::Size(a) => Score::Size(a * factor),
            Score::Infeasible => Score::Infeasible,
        }
    }
}

impl Ord for Score {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Score::Infeasible, Score::Infeasible) => Ordering::Equal,
            (Score::Infeasible, Score::Size(_)) => Ordering::Less,
            (Score::Size(_), Score::Infeasible) => Ordering::Greater,
            (Score::Size(a), Score::Size(b)) => a.cmp(b),
        }
    }
}

impl PartialOrd for Score {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Score {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Score::Infeasible => f.write_str("infeasible"),
            Score::Size(v) => write!(f, "{v}"),
        }
    }
}

impl From<i64> for Score {
    fn from(v: i64) -> Self {
        Score::Size(v.into())
    }
}
