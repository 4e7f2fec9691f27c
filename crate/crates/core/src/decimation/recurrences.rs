//! The published max-recurrences and counting recurrences, written down as
//! data so they can be checked term by term against the configuration
//! enumeration and mutated in tests.

use crate::count::ExactCount;
use crate::error::Result;
use crate::score::Score;

use super::merge::ClassTerm;

/// `alpha^target_{n+1} = max(terms)` evaluated on generation-`n` classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Recurrence {
    pub label: String,
    pub target_class: usize,
    pub terms: Vec<ClassTerm>,
}

impl Recurrence {
    fn new(label: &str, target_class: usize, terms: &[([u32; 4], i64)]) -> Self {
        Recurrence {
            label: label.to_string(),
            target_class,
            terms: terms.iter().map(|&(c, k)| ClassTerm::new(c, k)).collect(),
        }
    }

    pub fn apply(&self, classes: &[Score]) -> Score {
        self.terms
            .iter()
            .map(|t| t.eval(classes))
            .max()
            .unwrap_or(Score::Infeasible)
    }
}

/// `coefficient * x^x_power * y^y_power`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Monomial {
    pub coefficient: u32,
    pub x_power: u32,
    pub y_power: u32,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountRecurrence {
    pub label: String,
    pub terms: Vec<Monomial>,
}

impl CountRecurrence {
    fn new(label: &str, terms: &[(u32, u32, u32)]) -> Self {
        CountRecurrence {
            label: label.to_string(),
            terms: terms
                .iter()
                .map(|&(coefficient, x_power, y_power)| Monomial {
                    coefficient,
                    x_power,
                    y_power,
                })
                .collect(),
        }
    }

    pub fn apply(&self, x: &ExactCount, y: &ExactCount) -> Result<ExactCount> {
        let mut total = ExactCount::zero();
        for m in &self.terms {
            let mut term = ExactCount::from(u64::from(m.coefficient));
            for _ in 0..m.x_power {
                term = term.mul(x);
            }
            for _ in 0..m.y_power {
                term = term.mul(y);
            }
            total = total.checked_add(&term)?;
        }
        Ok(total)
    }
}

/// All transcribed recurrences used for double-entry checking.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RecurrenceSet {
    /// Web classes 0 and 1.
    pub psw: [Recurrence; 2],
    /// Gasket classes 0 through 3.
    pub gasket: [Recurrence; 4],
    /// `x_{n+1}` from `(x_n, y_n)`.
    pub count_x: CountRecurrence,
    /// `y_{n+1}` from `(x_n, y_n)`.
    pub count_y: CountRecurrence,
}

impl Default for RecurrenceSet {
    fn default() -> Self {
        Self::published()
    }
}

impl RecurrenceSet {
    pub fn published() -> Self {
        RecurrenceSet {
            psw: [
                Recurrence::new(
                    "web alpha^0",
                    0,
                    &[([3, 0, 0, 0], 0), ([2, 1, 0, 0], 0), ([1, 2, 0, 0], 0), ([0, 3, 0, 0], 0)],
                ),
                Recurrence::new("web alpha^1", 1, &[([1, 2, 0, 0], -1), ([0, 3, 0, 0], -1)]),
            ],
            gasket: [
                Recurrence::new(
                    "gasket alpha^0",
                    0,
                    &[([3, 0, 0, 0], 0), ([1, 2, 0, 0], -1), ([0, 2, 1, 0], -2), ([0, 0, 3, 0], -3)],
                ),
                Recurrence::new(
                    "gasket alpha^1",
                    1,
                    &[
                        ([2, 1, 0, 0], 0),
                        ([1, 1, 1, 0], -1),
                        ([0, 3, 0, 0], -1),
                        ([0, 2, 0, 1], -2),
                        ([0, 1, 2, 0], -2),
                        ([0, 0, 2, 1], -3),
                    ],
                ),
                Recurrence::new(
                    "gasket alpha^2",
                    2,
                    &[
                        ([1, 2, 0, 0], 0),
                        ([1, 0, 2, 0], -1),
                        ([0, 2, 1, 0], -1),
                        ([0, 0, 3, 0], -2),
                        ([0, 1, 1, 1], -2),
                        ([0, 0, 1, 2], -3),
                    ],
                ),
                Recurrence::new(
                    "gasket alpha^3",
                    3,
                    &[([0, 3, 0, 0], 0), ([0, 1, 2, 0], -1), ([0, 0, 2, 1], -2), ([0, 0, 0, 3], -3)],
                ),
            ],
            count_x: CountRecurrence::new("gasket count x", &[(1, 0, 3), (1, 3, 0)]),
            count_y: CountRecurrence::new("gasket count y", &[(1, 0, 3), (1, 1, 2)]),
        }
    }

    /// Every variant differing from `self` in exactly one constant: each
    /// additive correction and each coefficient moved by one in either
    /// direction, and each counting power moved by one.
    pub fn single_constant_mutations(&self) -> Vec<(String, RecurrenceSet)> {
        let mut out = Vec::new();
        let class_eqs = self.psw.len() + self.gasket.len();
        for eq in 0..class_eqs {
            let rec = |s: &RecurrenceSet| -> Recurrence {
                if eq < 2 { s.psw[eq].clone() } else { s.gasket[eq - 2].clone() }
            };
            let original = rec(self);
            for (t, term) in original.terms.iter().enumerate() {
                let mut variants: Vec<(String, ClassTerm)> = Vec::new();
                for delta in [-1i64, 1] {
                    let mut m = *term;
                    m.constant += delta;
                    variants.push((format!("constant {} -> {}", term.constant, m.constant), m));
                }
                for k in 0..4 {
                    for delta in [-1i64, 1] {
                        let c = i64::from(term.coefficients[k]) + delta;
                        if c < 0 {
                            continue;
                        }
                        let mut m = *term;
                        m.coefficients[k] = c as u32;
                        variants.push((format!("coefficient of a{k} {} -> {c}", term.coefficients[k]), m));
                    }
                }
                for (what, mutated) in variants {
                    let mut set = self.clone();
                    let target = if eq < 2 { &mut set.psw[eq] } else { &mut set.gasket[eq - 2] };
                    target.terms[t] = mutated;
                    out.push((format!("{}, term {}: {what}", original.label, t + 1), set));
                }
            }
        }
        for which in 0..2 {
            let original = if which == 0 { &self.count_x } else { &self.count_y };
            for (t, m) in original.terms.iter().enumerate() {
                let fields: [(&str, u32); 3] = [
                    ("coefficient", m.coefficient),
                    ("x power", m.x_power),
                    ("y power", m.y_power),
                ];
                for (f, (name, value)) in fields.iter().enumerate() {
                    for delta in [-1i64, 1] {
                        let v = i64::from(*value) + delta;
                        if v < 0 {
                            continue;
                        }
                        let mut set = self.clone();
                        let target = if which == 0 { &mut set.count_x } else { &mut set.count_y };
                        let slot = &mut target.terms[t];
                        match f {
                            0 => slot.coefficient = v as u32,
                            1 => slot.x_power = v as u32,
                            _ => slot.y_power = v as u32,
                        }
                        out.push((
                            format!("{}, term {}: {name} {value} -> {v}", original.label, t + 1),
                            set,
                        ));
                    }
                }
            }
        }
        out
    }
}
