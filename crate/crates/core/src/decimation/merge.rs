//! Three-copy gluing: which boundary vertices are identified, and every
//! in/out assignment to them.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::Family;
use crate::score::Score;

/// Which of the three boundary vertices `(A, B, C)` an independent set
/// contains. Bit `i` stands for boundary vertex `i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BoundaryMask(u8);

impl BoundaryMask {
    pub const EMPTY: BoundaryMask = BoundaryMask(0);
    pub const FULL: BoundaryMask = BoundaryMask(0b111);

    pub fn new(bits: u8) -> Result<Self> {
        if bits > 0b111 {
            return Err(Error::InvalidArgument(format!("boundary mask {bits:#b} has more than three bits")));
        }
        Ok(BoundaryMask(bits))
    }

    pub fn all() -> impl Iterator<Item = BoundaryMask> {
        (0..8).map(BoundaryMask)
    }

    pub fn bits(self) -> u8 {
        self.0
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }

    /// Number of boundary vertices in the set, i.e. the class `k`.
    pub fn class(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn contains(self, slot: usize) -> bool {
        self.0 >> slot & 1 == 1
    }

    /// The pattern drawn for class `k`: nothing, `{A}`, `{B, C}`, everything.
    pub fn representative(class: usize) -> Result<Self> {
        match class {
            0 => Ok(BoundaryMask(0b000)),
            1 => Ok(BoundaryMask(0b001)),
            2 => Ok(BoundaryMask(0b110)),
            3 => Ok(BoundaryMask(0b111)),
            k => Err(Error::InvalidArgument(format!("boundary class {k} out of range 0..=3"))),
        }
    }

    /// Patterns that can occur in the family at some generation. Web hubs
    /// form a triangle, so at most one can be in an independent set.
    pub fn allowed_in(self, family: Family) -> bool {
        family == Family::SierpinskiGasket || self.class() <= 1
    }
}

/// A candidate value `sum_k coefficients[k] * alpha^k + constant`, where
/// `alpha^k` is the best size with exactly `k` boundary vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ClassTerm {
    pub coefficients: [u32; 4],
    pub constant: i64,
}

impl ClassTerm {
    pub const fn new(coefficients: [u32; 4], constant: i64) -> Self {
        ClassTerm {
            coefficients,
            constant,
        }
    }

    /// Evaluates against per-class values; classes beyond `values` must
    /// have zero coefficient.
    pub fn eval(&self, values: &[Score]) -> Score {
        let mut total = Score::from(self.constant);
        for (k, &c) in self.coefficients.iter().enumerate() {
            if c == 0 {
                continue;
            }
            match values.get(k) {
                Some(v) => total = total.plus(&v.scaled(c)),
                None => return Score::Infeasible,
            }
        }
        total
    }
}

impl fmt::Display for ClassTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, &c) in self.coefficients.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            if c == 1 {
                write!(f, "a{k}")?;
            } else {
                write!(f, "{c}*a{k}")?;
            }
        }
        if first {
            write!(f, "{}", self.constant)
        } else if self.constant < 0 {
            write!(f, " - {}", -self.constant)
        } else if self.constant > 0 {
            write!(f, " + {}", self.constant)
        } else {
            Ok(())
        }
    }
}

/// Positions 0..3 of the merged graph are its own boundary `(A, B, C)`;
/// positions 3..6 are the other vertices where copy boundaries land.
pub const MERGED_POSITIONS: usize = 6;

/// `LAYOUT[copy][slot]` is the merged position of boundary vertex `slot`
/// of that copy.
pub fn layout(family: Family) -> [[usize; 3]; 3] {
    match family {
        // A = A1 = B3, B = C1 = B2, C = A2 = C3; B1, C2, A3 stay internal.
        Family::ScaleFreeWeb => [[0, 3, 1], [2, 1, 4], [5, 0, 2]],
        // A = A1, B = B2, C = C3; glue vertices B1 = A2, C1 = A3, C2 = B3.
        Family::SierpinskiGasket => [[0, 3, 4], [3, 1, 5], [4, 5, 2]],
    }
}

/// How many copies share each merged position.
pub fn multiplicity(family: Family) -> [u32; MERGED_POSITIONS] {
    let mut mult = [0; MERGED_POSITIONS];
    for copy in layout(family) {
        for pos in copy {
            mult[pos] += 1;
        }
    }
    mult
}

/// One in/out assignment to the merged positions.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MergeConfig {
    pub family: Family,
    pub membership: [bool; MERGED_POSITIONS],
    /// Boundary pattern induced on copy `θ`.
    pub per_copy: [BoundaryMask; 3],
    /// In-set vertices counted by two copies; subtracted once each.
    pub overlap_correction: u32,
}

impl MergeConfig {
    /// The candidate value this configuration contributes, in terms of
    /// per-class values of the previous generation.
    pub fn expression(&self) -> ClassTerm {
        let mut coefficients = [0u32; 4];
        for mask in self.per_copy {
            coefficients[mask.class()] += 1;
        }
        ClassTerm::new(coefficients, -i64::from(self.overlap_correction))
    }
}

/// Every configuration of the three-copy merge whose new boundary pattern
/// is `target`, in a fixed order: the free positions 3..6 count up in
/// binary, position 3 as the lowest bit.
pub fn enumerate_merge_configs(family: Family, target: BoundaryMask) -> Result<Vec<MergeConfig>> {
    if !target.allowed_in(family) {
        return Err(Error::InvalidArgument(format!(
            "boundary pattern {:#05b} cannot occur in the {family} family",
            target.bits()
        )));
    }
    let slots = layout(family);
    let mult = multiplicity(family);
    let mut out = Vec::with_capacity(8);
    for free in 0u8..8 {
        let mut membership = [false; MERGED_POSITIONS];
        for (i, m) in membership.iter_mut().enumerate() {
            *m = if i < 3 { target.contains(i) } else { free >> (i - 3) & 1 == 1 };
        }
        let per_copy = slots.map(|copy| {
            let bits = copy
                .iter()
                .enumerate()
                .filter(|(_, &pos)| membership[pos])
                .fold(0u8, |acc, (slot, _)| acc | 1 << slot);
            BoundaryMask(bits)
        });
        if per_copy.iter().any(|m| !m.allowed_in(family)) {
            continue;
        }
        let overlap_correction = (0..MERGED_POSITIONS)
            .filter(|&p| membership[p])
            .map(|p| mult[p] - 1)
            .sum();
        out.push(MergeConfig {
            family,
            membership,
            per_copy,
            overlap_correction,
        });
    }
    Ok(out)
}

/// Distinct candidate expressions for a target pattern, sorted.
pub fn candidate_expressions(family: Family, target: BoundaryMask) -> Result<Vec<ClassTerm>> {
    let mut terms: Vec<ClassTerm> = enumerate_merge_configs(family, target)?
        .iter()
        .map(MergeConfig::expression)
        .collect();
    terms.sort();
    terms.dedup();
    Ok(terms)
}
