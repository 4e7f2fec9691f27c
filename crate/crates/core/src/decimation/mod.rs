//! Exact values for any generation by decimation: the graph of generation
//! `n + 1` is three copies of generation `n` glued at boundary vertices, so
//! boundary-classified values of one generation determine the next.
//!
//! The configuration DP in [`tables`] is the primary computation. The
//! hand-transcribed recurrences in [`recurrences`] run alongside it and
//! every public table function fails with
//! [`Error::RecurrenceMismatch`] if the two ever disagree.

pub mod closed;
pub mod merge;
pub mod recurrences;
pub mod tables;
mod witness;

use num_bigint::BigUint;

use crate::count::ExactCount;
use crate::error::{Error, Result};
use crate::graph::Family;
use crate::score::Score;

pub use closed::{closed_forms, ClosedForms};
pub use merge::{enumerate_merge_configs, BoundaryMask, ClassTerm, MergeConfig};
pub use recurrences::{Monomial, RecurrenceSet};
pub use tables::{mask_table, mask_tables, MaskEntry, MaskTable};
pub use witness::{
    gasket_mis_witness, gasket_mis_witness_with_cap, psw_mis_witness, psw_mis_witness_with_cap,
    vertex_cover_witness, vertex_cover_witness_with_cap, CoverWitness,
};

/// Web class values: best size with no hub, and with exactly one hub.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassTablePsw {
    pub generation: u32,
    pub alpha0: BigUint,
    pub alpha1: BigUint,
}

impl ClassTablePsw {
    pub fn alpha(&self) -> &BigUint {
        (&self.alpha0).max(&self.alpha1)
    }
}

/// Gasket class values `alpha[k]`: best size with exactly `k` outmost
/// vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassTableGasket {
    pub generation: u32,
    pub alpha: [Score; 4],
}

impl ClassTableGasket {
    pub fn independence_number(&self) -> Score {
        self.alpha.iter().max().cloned().unwrap_or(Score::Infeasible)
    }
}

/// Gasket counts: `x` maximum sets with all three outmost vertices, `y`
/// best-size sets holding the outmost vertex `A` alone.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountPair {
    pub generation: u32,
    pub x: ExactCount,
    pub y: ExactCount,
}

/// Base values the gasket recurrences start from at generation 2.
const GASKET_BASE: [i64; 4] = [1, 2, 2, 3];

fn mismatch(equation: &str, n: u32, transcribed: impl std::fmt::Display, dp: impl std::fmt::Display) -> Error {
    Error::RecurrenceMismatch {
        equation: equation.to_string(),
        n,
        detail: format!("transcribed gives {transcribed}, configuration DP gives {dp}"),
    }
}

fn to_unsigned(s: &Score) -> BigUint {
    s.as_size()
        .and_then(|v| v.to_biguint())
        .expect("web class values are feasible and non-negative")
}

fn require_generation(what: &'static str, min: u32, n: u32) -> Result<()> {
    if n < min {
        return Err(Error::OutOfRange { formula: what, min, n });
    }
    Ok(())
}

/// Runs the configuration DP with a given set of transcribed recurrences
/// as the parallel check.
#[derive(Clone, Debug, Default)]
pub struct Decimator {
    recurrences: RecurrenceSet,
}

impl Decimator {
    pub fn new(recurrences: RecurrenceSet) -> Self {
        Decimator { recurrences }
    }

    pub fn recurrences(&self) -> &RecurrenceSet {
        &self.recurrences
    }

    /// Each transcribed max-recurrence must list exactly the distinct
    /// candidate expressions of its class's merge configurations.
    pub fn check_structure(&self) -> Result<()> {
        let families = [
            (Family::ScaleFreeWeb, &self.recurrences.psw[..]),
            (Family::SierpinskiGasket, &self.recurrences.gasket[..]),
        ];
        for (family, equations) in families {
            for eq in equations {
                let target = BoundaryMask::representative(eq.target_class)?;
                let expected = merge::candidate_expressions(family, target)?;
                let mut written = eq.terms.clone();
                written.sort();
                if written != expected {
                    let show = |v: &[ClassTerm]| v.iter().map(|t| t.to_string()).collect::<Vec<_>>().join(", ");
                    return Err(Error::RecurrenceStructure {
                        equation: eq.label.clone(),
                        detail: format!("transcribed max({}), configurations give max({})", show(&written), show(&expected)),
                    });
                }
            }
        }
        let counts = [
            (&self.recurrences.count_x, BoundaryMask::FULL),
            (&self.recurrences.count_y, BoundaryMask::representative(1)?),
        ];
        for (eq, target) in counts {
            let expected = optimal_count_monomials(target)?;
            let written = merged_monomials(eq.terms.iter().copied());
            if written != expected {
                let show = |v: &[Monomial]| {
                    v.iter()
                        .map(|m| format!("{}*x^{}*y^{}", m.coefficient, m.x_power, m.y_power))
                        .collect::<Vec<_>>()
                        .join(" + ")
                };
                return Err(Error::RecurrenceStructure {
                    equation: eq.label.clone(),
                    detail: format!("transcribed {}, optimal configurations give {}", show(&written), show(&expected)),
                });
            }
        }
        Ok(())
    }

    /// Web class tables for generations `1..=n_max`.
    pub fn psw_class_tables(&self, n_max: u32) -> Result<Vec<ClassTablePsw>> {
        self.check_structure()?;
        self.psw_chain(n_max)
    }

    /// Level-by-level value comparison only, without the structural check.
    pub fn psw_chain(&self, n_max: u32) -> Result<Vec<ClassTablePsw>> {
        require_generation("web class table", 1, n_max)?;
        let mut transcribed = vec![Score::from(0), Score::from(1)];
        let mut out = Vec::with_capacity(n_max as usize);
        for table in mask_tables(Family::ScaleFreeWeb, n_max)? {
            let n = table.generation;
            if n > 1 {
                transcribed = self.recurrences.psw.iter().map(|eq| eq.apply(&transcribed)).collect();
            }
            let generic = table.class_values();
            for k in 0..2 {
                if generic[k] != transcribed[k] {
                    let label = if n == 1 { "web base values" } else { self.recurrences.psw[k].label.as_str() };
                    return Err(mismatch(label, n, &transcribed[k], &generic[k]));
                }
            }
            out.push(ClassTablePsw {
                generation: n,
                alpha0: to_unsigned(&generic[0]),
                alpha1: to_unsigned(&generic[1]),
            });
        }
        Ok(out)
    }

    pub fn psw_class_table(&self, n: u32) -> Result<ClassTablePsw> {
        Ok(self.psw_class_tables(n)?.pop().expect("n >= 1"))
    }

    /// Gasket class tables for generations `1..=n_max`. The transcribed
    /// recurrences start from the published generation-2 values.
    pub fn gasket_class_tables(&self, n_max: u32) -> Result<Vec<ClassTableGasket>> {
        self.check_structure()?;
        self.gasket_chain(n_max)
    }

    /// Level-by-level value comparison only, without the structural check.
    pub fn gasket_chain(&self, n_max: u32) -> Result<Vec<ClassTableGasket>> {
        require_generation("gasket class table", 1, n_max)?;
        let mut transcribed: Vec<Score> = GASKET_BASE.iter().map(|&v| Score::from(v)).collect();
        let mut out = Vec::with_capacity(n_max as usize);
        for table in mask_tables(Family::SierpinskiGasket, n_max)? {
            let n = table.generation;
            let generic = table.class_values();
            if n > 2 {
                transcribed = self.recurrences.gasket.iter().map(|eq| eq.apply(&transcribed)).collect();
            }
            if n >= 2 {
                for k in 0..4 {
                    if generic[k] != transcribed[k] {
                        let label = if n == 2 { "gasket base values" } else { self.recurrences.gasket[k].label.as_str() };
                        return Err(mismatch(label, n, &transcribed[k], &generic[k]));
                    }
                }
            }
            out.push(ClassTableGasket {
                generation: n,
                alpha: std::array::from_fn(|k| generic[k].clone()),
            });
        }
        Ok(out)
    }

    pub fn gasket_class_table(&self, n: u32) -> Result<ClassTableGasket> {
        Ok(self.gasket_class_tables(n)?.pop().expect("n >= 1"))
    }

    /// Gasket count pairs for generations `2..=n_max`.
    pub fn gasket_count_pairs(&self, n_max: u32) -> Result<Vec<CountPair>> {
        require_generation("gasket count pair", 2, n_max)?;
        let a_only = BoundaryMask::representative(1)?;
        let mut transcribed = (ExactCount::one(), ExactCount::one());
        let mut out = Vec::with_capacity(n_max as usize - 1);
        for table in mask_tables(Family::SierpinskiGasket, n_max)?.into_iter().skip(1) {
            let n = table.generation;
            if n > 2 {
                let (x, y) = &transcribed;
                transcribed = (
                    self.recurrences.count_x.apply(x, y)?,
                    self.recurrences.count_y.apply(x, y)?,
                );
            }
            let x = table.entry(BoundaryMask::FULL).count.clone();
            let y = table.entry(a_only).count.clone();
            let total = table.mis_count()?;
            if total != x {
                return Err(mismatch("gasket maximum sets hold all outmost vertices", n, &x, &total));
            }
            let singles: Vec<&ExactCount> = BoundaryMask::all()
                .filter(|m| m.class() == 1)
                .map(|m| &table.entry(m).count)
                .collect();
            if singles.iter().any(|c| **c != y) {
                return Err(mismatch("gasket single-corner count symmetry", n, &y, singles.iter().map(|c| c.to_string()).collect::<Vec<_>>().join("/")));
            }
            if transcribed.0 != x {
                let label = if n == 2 { "gasket count base" } else { self.recurrences.count_x.label.as_str() };
                return Err(mismatch(label, n, &transcribed.0, &x));
            }
            if transcribed.1 != y {
                let label = if n == 2 { "gasket count base" } else { self.recurrences.count_y.label.as_str() };
                return Err(mismatch(label, n, &transcribed.1, &y));
            }
            out.push(CountPair { generation: n, x, y });
        }
        Ok(out)
    }

    pub fn gasket_count_pair(&self, n: u32) -> Result<CountPair> {
        Ok(self.gasket_count_pairs(n)?.pop().expect("n >= 2"))
    }
}

/// Class offsets above `alpha^0` that hold for every gasket generation from
/// 2 on; the value chain confirms them level by level.
const GASKET_CLASS_OFFSETS: [i64; 4] = [0, 1, 1, 2];

fn merged_monomials(terms: impl IntoIterator<Item = Monomial>) -> Vec<Monomial> {
    let mut by_power: std::collections::BTreeMap<(u32, u32), u32> = Default::default();
    for m in terms {
        *by_power.entry((m.x_power, m.y_power)).or_default() += m.coefficient;
    }
    by_power
        .into_iter()
        .filter(|&(_, c)| c > 0)
        .map(|((x_power, y_power), coefficient)| Monomial {
            coefficient,
            x_power,
            y_power,
        })
        .collect()
}

/// Count polynomial implied by the gasket merge configurations that reach
/// the best value for `target`: each copy contributes `x` (all three outmost
/// vertices) or `y` (one outmost vertex).
fn optimal_count_monomials(target: BoundaryMask) -> Result<Vec<Monomial>> {
    let configs = merge::enumerate_merge_configs(Family::SierpinskiGasket, target)?;
    let offset = |c: &MergeConfig| {
        let t = c.expression();
        t.coefficients
            .iter()
            .zip(GASKET_CLASS_OFFSETS)
            .map(|(&k, d)| i64::from(k) * d)
            .sum::<i64>()
            + t.constant
    };
    let best = configs.iter().map(offset).max().unwrap_or(i64::MIN);
    let mut monomials = Vec::new();
    for cfg in configs.iter().filter(|c| offset(c) == best) {
        let mut m = Monomial {
            coefficient: 1,
            x_power: 0,
            y_power: 0,
        };
        for mask in cfg.per_copy {
            match mask.class() {
                3 => m.x_power += 1,
                1 => m.y_power += 1,
                k => {
                    return Err(Error::RecurrenceStructure {
                        equation: format!("gasket count for pattern {:03b}", target.bits()),
                        detail: format!("an optimal configuration uses an untracked class-{k} copy"),
                    })
                }
            }
        }
        monomials.push(m);
    }
    Ok(merged_monomials(monomials))
}

pub fn psw_class_table(n: u32) -> Result<ClassTablePsw> {
    Decimator::default().psw_class_table(n)
}

pub fn gasket_class_table(n: u32) -> Result<ClassTableGasket> {
    Decimator::default().gasket_class_table(n)
}

pub fn gasket_count_pair(n: u32) -> Result<CountPair> {
    Decimator::default().gasket_count_pair(n)
}

/// Per-class values from the configuration DP (two classes for the web,
/// four for the gasket).
pub fn class_values(family: Family, n: u32) -> Result<Vec<Score>> {
    require_generation("class values", 1, n)?;
    Ok(mask_table(family, n)?.class_values())
}

pub fn alpha(family: Family, n: u32) -> Result<BigUint> {
    require_generation("independence number", 1, n)?;
    Ok(to_unsigned(&mask_table(family, n)?.alpha()))
}

/// Number of maximum independent sets from the configuration DP.
pub fn mis_count(family: Family, n: u32) -> Result<ExactCount> {
    require_generation("MIS count", 1, n)?;
    mask_table(family, n)?.mis_count()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn scores(v: &[i64]) -> [Score; 4] {
        std::array::from_fn(|k| Score::from(v[k]))
    }

    #[test]
    fn web_tables() {
        let t1 = psw_class_table(1).unwrap();
        assert_eq!((t1.alpha0, t1.alpha1), (BigUint::from(0u32), BigUint::from(1u32)));
        let t2 = psw_class_table(2).unwrap();
        assert_eq!((t2.alpha0, t2.alpha1), (BigUint::from(3u32), BigUint::from(2u32)));
        assert_eq!(psw_class_table(4).unwrap().alpha1, BigUint::from(20u32));
    }

    #[test]
    fn gasket_tables() {
        let t1 = gasket_class_table(1).unwrap();
        assert_eq!(t1.alpha[0], Score::from(0));
        assert_eq!(t1.alpha[1], Score::from(1));
        assert_eq!(t1.alpha[2], Score::Infeasible);
        assert_eq!(t1.alpha[3], Score::Infeasible);
        assert_eq!(gasket_class_table(2).unwrap().alpha, scores(&[1, 2, 2, 3]));
        assert_eq!(gasket_class_table(3).unwrap().alpha, scores(&[4, 5, 5, 6]));
    }

    #[test]
    fn gasket_counts() {
        let p2 = gasket_count_pair(2).unwrap();
        assert_eq!((p2.x, p2.y), (ExactCount::one(), ExactCount::one()));
        assert_eq!(gasket_count_pair(3).unwrap().x, ExactCount::from(2u64));
        assert_eq!(gasket_count_pair(6).unwrap().x, ExactCount::from(1_099_511_627_776u64));
        assert!(matches!(gasket_count_pair(1), Err(Error::OutOfRange { .. })));
    }

    #[test]
    fn totals_from_the_dp() {
        assert_eq!(mis_count(Family::SierpinskiGasket, 1).unwrap(), ExactCount::from(3u64));
        assert_eq!(mis_count(Family::ScaleFreeWeb, 1).unwrap(), ExactCount::from(3u64));
        assert_eq!(mis_count(Family::ScaleFreeWeb, 7).unwrap(), ExactCount::one());
        assert_eq!(alpha(Family::ScaleFreeWeb, 6).unwrap(), BigUint::from(243u32));
        assert_eq!(alpha(Family::SierpinskiGasket, 5).unwrap(), BigUint::from(42u32));
        assert!(alpha(Family::ScaleFreeWeb, 0).is_err());
    }

    #[test]
    fn mutated_recurrence_is_caught() {
        let mut rs = RecurrenceSet::published();
        rs.gasket[3].terms[3].constant = -2;
        let d = Decimator::new(rs);
        assert!(matches!(d.check_structure(), Err(Error::RecurrenceStructure { .. })));
        assert!(d.gasket_class_table(3).is_err());
        let err = d.gasket_chain(3).unwrap_err();
        assert!(matches!(err, Error::RecurrenceMismatch { n: 3, .. }), "{err}");
    }
}
