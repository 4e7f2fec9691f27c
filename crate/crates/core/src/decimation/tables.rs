//! The configuration DP over boundary patterns.
//!
//! For every generation we keep, per boundary pattern, the best size of an
//! independent set meeting the boundary in exactly that pattern and the
//! number of sets reaching it. Gluing three copies combines these through
//! [`enumerate_merge_configs`]; distinct configurations differ on some
//! identified vertex, so their set families are disjoint and the counts add.

use crate::count::ExactCount;
use crate::error::Result;
use crate::graph::Family;
use crate::score::Score;

use super::merge::{enumerate_merge_configs, BoundaryMask, MergeConfig};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaskEntry {
    pub value: Score,
    /// Sets of size `value` with this exact boundary pattern.
    pub count: ExactCount,
}

/// Per-pattern values and counts of one generation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaskTable {
    pub family: Family,
    pub generation: u32,
    pub entries: [MaskEntry; 8],
}

impl MaskTable {
    /// Generation 1 of both families is a triangle whose vertices are the
    /// whole boundary.
    pub fn triangle(family: Family) -> Self {
        let entries = std::array::from_fn(|m| match (m as u8).count_ones() {
            0 => MaskEntry {
                value: Score::from(0),
                count: ExactCount::one(),
            },
            1 => MaskEntry {
                value: Score::from(1),
                count: ExactCount::one(),
            },
            _ => MaskEntry {
                value: Score::Infeasible,
                count: ExactCount::zero(),
            },
        });
        MaskTable {
            family,
            generation: 1,
            entries,
        }
    }

    pub fn entry(&self, mask: BoundaryMask) -> &MaskEntry {
        &self.entries[mask.index()]
    }

    /// First configuration reaching the best value for `target`.
    pub fn best_config(&self, target: BoundaryMask) -> Result<Option<MergeConfig>> {
        if !target.allowed_in(self.family) {
            return Ok(None);
        }
        let mut best: Option<(Score, MergeConfig)> = None;
        for cfg in enumerate_merge_configs(self.family, target)? {
            let value = self.config_value(&cfg);
            if !value.is_feasible() {
                continue;
            }
            if best.as_ref().is_none_or(|(b, _)| value > *b) {
                best = Some((value, cfg));
            }
        }
        Ok(best.map(|(_, c)| c))
    }

    fn config_value(&self, cfg: &MergeConfig) -> Score {
        cfg.per_copy
            .iter()
            .fold(Score::from(0), |acc, m| acc.plus(&self.entry(*m).value))
            .offset(-i64::from(cfg.overlap_correction))
    }

    /// The table of the next generation.
    pub fn glue(&self) -> Result<MaskTable> {
        let mut entries: [MaskEntry; 8] = std::array::from_fn(|_| MaskEntry {
            value: Score::Infeasible,
            count: ExactCount::zero(),
        });
        for target in BoundaryMask::all().filter(|m| m.allowed_in(self.family)) {
            let slot = &mut entries[target.index()];
            for cfg in enumerate_merge_configs(self.family, target)? {
                let value = self.config_value(&cfg);
                if !value.is_feasible() || value < slot.value {
                    continue;
                }
                let ways = cfg
                    .per_copy
                    .iter()
                    .fold(ExactCount::one(), |acc, m| acc.mul(&self.entry(*m).count));
                if value > slot.value {
                    *slot = MaskEntry { value, count: ways };
                } else {
                    slot.count = slot.count.checked_add(&ways)?;
                }
            }
        }
        Ok(MaskTable {
            family: self.family,
            generation: self.generation + 1,
            entries,
        })
    }

    /// Best value over patterns with exactly `k` boundary vertices.
    pub fn class_value(&self, k: usize) -> Score {
        BoundaryMask::all()
            .filter(|m| m.class() == k)
            .map(|m| self.entry(m).value.clone())
            .max()
            .unwrap_or(Score::Infeasible)
    }

    pub fn class_values(&self) -> Vec<Score> {
        let classes = match self.family {
            Family::ScaleFreeWeb => 2,
            Family::SierpinskiGasket => 4,
        };
        (0..classes).map(|k| self.class_value(k)).collect()
    }

    /// The independence number.
    pub fn alpha(&self) -> Score {
        self.entries.iter().map(|e| e.value.clone()).max().unwrap_or(Score::Infeasible)
    }

    /// Number of maximum independent sets, summed over every pattern that
    /// reaches the independence number.
    pub fn mis_count(&self) -> Result<ExactCount> {
        let alpha = self.alpha();
        let mut total = ExactCount::zero();
        for e in self.entries.iter().filter(|e| e.value == alpha) {
            total = total.checked_add(&e.count)?;
        }
        Ok(total)
    }

    /// First pattern (in mask order) attaining the independence number.
    pub fn best_mask(&self) -> BoundaryMask {
        let alpha = self.alpha();
        BoundaryMask::all()
            .find(|m| self.entry(*m).value == alpha)
            .expect("some pattern attains the maximum")
    }

    /// Patterns with the same number of boundary vertices have equal values
    /// and counts.
    pub fn is_symmetric(&self) -> bool {
        BoundaryMask::all().all(|m| {
            let rep = BoundaryMask::all().find(|r| r.class() == m.class()).unwrap();
            self.entry(m) == self.entry(rep)
        })
    }
}

/// Generations `1..=n_max` of the configuration DP.
pub fn mask_tables(family: Family, n_max: u32) -> Result<Vec<MaskTable>> {
    let mut tables = vec![MaskTable::triangle(family)];
    for _ in 1..n_max {
        let next = tables.last().expect("non-empty").glue()?;
        tables.push(next);
    }
    Ok(tables)
}

pub fn mask_table(family: Family, n: u32) -> Result<MaskTable> {
    let mut table = MaskTable::triangle(family);
    for _ in 1..n {
        table = table.glue()?;
    }
    Ok(table)
}
