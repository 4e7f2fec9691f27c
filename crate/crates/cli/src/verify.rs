//! The cross-check suite behind `fractal-mis verify`. Checks never abort the
//! run; each one records pass or fail with a detail line, in a fixed order.

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};

use fractal_mis::decimation::{self, closed, mask_tables, BoundaryMask, Decimator, MaskTable};
use fractal_mis::graph::{self, edge_count, vertex_count, DegreeMultiset, Family};
use fractal_mis::oracle::{covers_all_edges, is_independent, is_maximal_independent, RestrictedQuery};
use fractal_mis::{ExactCount, Oracle, Result, Score};

use crate::args::Caps;

/// Oracle-free checks always run up to at least this generation.
pub const CLOSED_FORM_HORIZON: u32 = 64;
/// Oracle checks stop here regardless of `--max-n`.
pub const ORACLE_HORIZON: u32 = 4;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub max_n: u32,
    pub passed: bool,
    pub checks: Vec<Check>,
}

impl VerifyReport {
    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

/// Outcome of one check: `Ok(detail)` passes, `Err(detail)` fails.
type Verdict = std::result::Result<String, String>;

struct Suite {
    checks: Vec<Check>,
}

impl Suite {
    fn record(&mut self, name: impl Into<String>, verdict: Verdict) {
        let (passed, detail) = match verdict {
            Ok(d) => (true, d),
            Err(d) => (false, d),
        };
        self.checks.push(Check {
            name: name.into(),
            passed,
            detail,
        });
    }

    /// Records a check whose body may also fail with a library error.
    fn run(&mut self, name: impl Into<String>, body: impl FnOnce() -> Result<Verdict>) {
        let verdict = body().unwrap_or_else(|e| Err(e.to_string()));
        self.record(name, verdict);
    }
}

fn expect_eq<T: PartialEq + std::fmt::Display>(what: &str, got: T, want: T) -> Verdict {
    if got == want {
        Ok(format!("{what} = {got}"))
    } else {
        Err(format!("{what}: got {got}, expected {want}"))
    }
}

fn pow3(e: u32) -> BigUint {
    BigUint::from(3u32).pow(e)
}

fn unsigned(s: &Score) -> Option<BigUint> {
    s.as_size().and_then(|v| v.to_biguint())
}

pub fn verify_suite(max_n: u32) -> Result<VerifyReport> {
    verify_suite_with(max_n, &Decimator::default(), &Caps::default())
}

/// Runs every check up to `max_n` (at least 2). Transcribed-recurrence
/// checks use `decimator`, so a deliberately broken recurrence set can be
/// passed in to confirm it is caught.
pub fn verify_suite_with(max_n: u32, decimator: &Decimator, caps: &Caps) -> Result<VerifyReport> {
    if max_n < 2 {
        return Err(fractal_mis::Error::OutOfRange {
            formula: "verify --max-n",
            min: 2,
            n: max_n,
        });
    }
    let horizon = max_n.max(CLOSED_FORM_HORIZON);
    let mut suite = Suite { checks: Vec::new() };

    structural(&mut suite, max_n, caps);

    let psw = mask_tables(Family::ScaleFreeWeb, horizon)?;
    let gasket = mask_tables(Family::SierpinskiGasket, horizon)?;

    transcribed(&mut suite, decimator, horizon);
    closed_forms(&mut suite, &psw, &gasket);
    class_properties(&mut suite, &psw, &gasket);
    gallai_closed(&mut suite, &psw, &gasket);
    named_values(&mut suite, &psw, &gasket);
    oracle_checks(&mut suite, max_n.min(ORACLE_HORIZON), &psw, &gasket, caps);

    let passed = suite.checks.iter().all(|c| c.passed);
    Ok(VerifyReport {
        max_n,
        passed,
        checks: suite.checks,
    })
}

fn structural(suite: &mut Suite, max_n: u32, caps: &Caps) {
    for family in Family::ALL {
        for n in 1..=max_n {
            suite.run(format!("structure {family} n={n}"), || {
                if n > caps.generation {
                    return Ok(Err(format!(
                        "n = {n} is above the generation cap {}; raise --cap-generation",
                        caps.generation
                    )));
                }
                let g = graph::build_with_cap(family, n, caps.generation)?;
                if BigUint::from(g.num_vertices()) != vertex_count(n) {
                    return Ok(expect_eq("vertices", BigUint::from(g.num_vertices()), vertex_count(n)));
                }
                if BigUint::from(g.edges().len()) != edge_count(n) {
                    return Ok(expect_eq("edges", BigUint::from(g.edges().len()), edge_count(n)));
                }
                if g.degree_multiset() != DegreeMultiset::expected(family, n) {
                    return Ok(Err(format!(
                        "degree multiset {:?}, expected {:?}",
                        g.degree_multiset(),
                        DegreeMultiset::expected(family, n)
                    )));
                }
                if family == Family::ScaleFreeWeb {
                    let birth = g.birth();
                    if let Some(&(u, v)) = g.edges().iter().find(|&&(u, v)| birth[u as usize] >= 2 && birth[u as usize] == birth[v as usize]) {
                        return Ok(Err(format!("vertices {u} and {v} share birth generation and are adjacent")));
                    }
                }
                Ok(Ok(format!(
                    "{} vertices, {} edges, degree multiset matches",
                    g.num_vertices(),
                    g.edges().len()
                )))
            });
        }
    }
}

fn transcribed(suite: &mut Suite, d: &Decimator, horizon: u32) {
    suite.run("transcribed recurrences match merge configurations", || {
        d.check_structure()?;
        Ok(Ok("every equation lists exactly the optimal configuration terms".into()))
    });
    suite.run(format!("web transcribed recurrences equal DP n<={horizon}"), || {
        d.psw_chain(horizon)?;
        Ok(Ok("all levels agree".into()))
    });
    suite.run(format!("gasket transcribed recurrences equal DP n<={horizon}"), || {
        d.gasket_chain(horizon)?;
        Ok(Ok("all levels agree".into()))
    });
    suite.run(format!("gasket transcribed count recurrences equal DP n<={horizon}"), || {
        d.gasket_count_pairs(horizon)?;
        Ok(Ok("all levels agree".into()))
    });
}

fn closed_forms(suite: &mut Suite, psw: &[MaskTable], gasket: &[MaskTable]) {
    let horizon = psw.len() as u32;
    suite.run(format!("web alpha closed form n<={horizon}"), || {
        for t in psw {
            let n = t.generation;
            let (a0, a1) = (t.class_value(0), t.class_value(1));
            // At n = 1 every vertex is a hub, so only the overall alpha is 3^0.
            if unsigned(&t.alpha()) != Some(closed::psw_alpha(n)?) || (n >= 2 && unsigned(&a0) != Some(pow3(n - 1))) {
                return Ok(Err(format!("n = {n}: DP alpha0 {a0}, alpha {}, closed {}", t.alpha(), closed::psw_alpha(n)?)));
            }
            if n >= 2 && unsigned(&a1) != Some(closed::psw_alpha_one_hub(n)?) {
                return Ok(Err(format!("n = {n}: DP alpha1 {a1}, closed {}", closed::psw_alpha_one_hub(n)?)));
            }
        }
        Ok(Ok("alpha = 3^(n-1) at every level, alpha0 = 3^(n-1) and alpha1 = 3^(n-1) - 2^(n-1) + 1 from n = 2".into()))
    });
    suite.run(format!("gasket class closed forms n<={horizon}"), || {
        for t in gasket.iter().skip(1) {
            let n = t.generation;
            let want = closed::gasket_class_values(n)?;
            let got = t.class_values();
            for k in 0..4 {
                if unsigned(&got[k]).as_ref() != Some(&want[k]) {
                    return Ok(Err(format!("n = {n}, class {k}: DP {}, closed {}", got[k], want[k])));
                }
            }
            if unsigned(&t.alpha()) != Some(closed::gasket_alpha(n)?) {
                return Ok(Err(format!("n = {n}: DP alpha {}", t.alpha())));
            }
        }
        Ok(Ok("alpha = (3^(n-1) + 3)/2 and all class values match for n >= 2".into()))
    });
    suite.run(format!("web unique maximum independent set n<={horizon}"), || {
        for t in psw.iter().skip(1) {
            let c = t.mis_count()?;
            if c != closed::psw_mis_count(t.generation)? {
                return Ok(Err(format!("n = {}: DP count {c}", t.generation)));
            }
        }
        Ok(Ok("count is 1 for every n >= 2".into()))
    });
    suite.run(format!("gasket count closed form n<={horizon}"), || {
        for t in gasket.iter().skip(1) {
            let n = t.generation;
            let c = t.mis_count()?;
            let want = closed::gasket_mis_count_exponent(n)?;
            if c.pow2_exponent() != Some(&want) {
                return Ok(Err(format!("n = {n}: DP count {c}, expected 2^{want}")));
            }
        }
        Ok(Ok("count = 2^((3^(n-2) - 1)/2) for every n >= 2, compared by exponent".into()))
    });
}

fn class_properties(suite: &mut Suite, psw: &[MaskTable], gasket: &[MaskTable]) {
    let horizon = psw.len() as u32;
    suite.run(format!("web one-hub class below no-hub class n=2..{horizon}"), || {
        for t in psw.iter().skip(1) {
            if t.class_value(1) >= t.class_value(0) {
                return Ok(Err(format!(
                    "n = {}: alpha1 {} is not below alpha0 {}",
                    t.generation,
                    t.class_value(1),
                    t.class_value(0)
                )));
            }
        }
        Ok(Ok("alpha1 < alpha0 at every level".into()))
    });
    suite.run(format!("gasket class chain n=2..{horizon}"), || {
        for t in gasket.iter().skip(1) {
            let v = t.class_values();
            if v[0].offset(1) != v[1] || v[1] != v[2] || v[2].offset(1) != v[3] {
                return Ok(Err(format!(
                    "n = {}: classes ({}, {}, {}, {}) break alpha0 + 1 = alpha1 = alpha2 = alpha3 - 1",
                    t.generation, v[0], v[1], v[2], v[3]
                )));
            }
        }
        Ok(Ok("alpha0 + 1 = alpha1 = alpha2 = alpha3 - 1 at every level".into()))
    });
    suite.run("tables symmetric under boundary permutation", || {
        match psw.iter().chain(gasket).find(|t| !t.is_symmetric()) {
            Some(t) => Ok(Err(format!("{} n = {} differs between patterns of one class", t.family, t.generation))),
            None => Ok(Ok("patterns with equal boundary size agree in value and count".into())),
        }
    });
}

fn gallai_closed(suite: &mut Suite, psw: &[MaskTable], gasket: &[MaskTable]) {
    for (family, tables) in [(Family::ScaleFreeWeb, psw), (Family::SierpinskiGasket, gasket)] {
        let horizon = tables.len() as u32;
        suite.run(format!("{family} cover size equals N - alpha n<={horizon}"), || {
            for t in tables.iter().skip(1) {
                let n = t.generation;
                let alpha = unsigned(&t.alpha()).expect("feasible");
                let cover = match family {
                    Family::ScaleFreeWeb => closed::psw_vertex_cover(n)?,
                    Family::SierpinskiGasket => closed::gasket_vertex_cover(n)?,
                };
                if cover.clone() + &alpha != vertex_count(n) {
                    return Ok(Err(format!("n = {n}: cover {cover} + alpha {alpha} != {}", vertex_count(n))));
                }
            }
            Ok(Ok("closed-form cover sizes complement the DP alpha".into()))
        });
    }
}

fn named_values(suite: &mut Suite, psw: &[MaskTable], gasket: &[MaskTable]) {
    suite.run("gasket count n=2 equals 1", || {
        Ok(expect_eq("x_2", gasket[1].mis_count()?, ExactCount::one()))
    });
    suite.run("gasket count n=3 equals 2", || {
        Ok(expect_eq("x_3", gasket[2].mis_count()?, ExactCount::from(2u64)))
    });
    suite.run("web count n=2 equals 1", || Ok(expect_eq("count", psw[1].mis_count()?, ExactCount::one())));
    suite.run("gasket base classes at n=2", || {
        let got: Vec<String> = gasket[1].class_values().iter().map(|s| s.to_string()).collect();
        Ok(expect_eq("classes", got.join(","), "1,2,2,3".to_string()))
    });
}

fn oracle_checks(suite: &mut Suite, last: u32, psw: &[MaskTable], gasket: &[MaskTable], caps: &Caps) {
    // Oracle checks are about correctness, not capacity, so the cap is
    // raised to cover every generation they visit.
    let oracle = Oracle::with_cap(caps.vertices.max(usize::try_from(vertex_count(ORACLE_HORIZON)).unwrap()));
    for (family, tables) in [(Family::ScaleFreeWeb, psw), (Family::SierpinskiGasket, gasket)] {
        for n in 1..=last {
            let table = &tables[n as usize - 1];
            let g = match graph::build_with_cap(family, n, caps.generation.max(ORACLE_HORIZON)) {
                Ok(g) => g,
                Err(e) => {
                    suite.record(format!("oracle {family} n={n}"), Err(e.to_string()));
                    continue;
                }
            };

            suite.run(format!("oracle {family} n={n} pattern values"), || {
                for mask in BoundaryMask::all() {
                    let q = RestrictedQuery::boundary_pattern(g.boundary(), mask.bits());
                    let got = oracle.restricted_alpha(&g, &q)?;
                    let want = &table.entry(mask).value;
                    if &got != want {
                        return Ok(Err(format!("pattern {:03b}: oracle {got}, DP {want}", mask.bits())));
                    }
                }
                let got = oracle.alpha(&g)?;
                let want = unsigned(&table.alpha()).expect("feasible");
                if got != want {
                    return Ok(Err(format!("alpha: oracle {got}, DP {want}")));
                }
                Ok(Ok(format!("alpha {got} and all eight boundary patterns agree")))
            });

            suite.run(format!("oracle {family} n={n} counts"), || {
                for mask in BoundaryMask::all() {
                    let q = RestrictedQuery::boundary_pattern(g.boundary(), mask.bits());
                    let got = oracle.restricted_count(&g, &q)?;
                    let entry = table.entry(mask);
                    if got.alpha != entry.value || (entry.value.is_feasible() && ExactCount::from(got.count.clone()) != entry.count) {
                        return Ok(Err(format!(
                            "pattern {:03b}: oracle {} sets of size {}, DP {} of size {}",
                            mask.bits(),
                            got.count,
                            got.alpha,
                            entry.count,
                            entry.value
                        )));
                    }
                }
                let total = oracle.count_maximum_independent_sets(&g)?;
                Ok(expect_eq("maximum set count", ExactCount::from(total), table.mis_count()?))
            });

            suite.run(format!("oracle {family} n={n} witness"), || {
                let alpha = oracle.alpha(&g)?;
                let witness = match family {
                    Family::ScaleFreeWeb if n < 2 => oracle.max_independent_set(&g)?.witness,
                    Family::ScaleFreeWeb => decimation::psw_mis_witness(n)?,
                    Family::SierpinskiGasket => decimation::gasket_mis_witness(n)?,
                };
                if !is_independent(&g, &witness)? || !is_maximal_independent(&g, &witness)? {
                    return Ok(Err(format!("witness {:?} is not a maximal independent set", witness.as_slice())));
                }
                if BigUint::from(witness.len()) != alpha {
                    return Ok(Err(format!("witness has {} vertices, alpha is {alpha}", witness.len())));
                }
                if family == Family::ScaleFreeWeb && n >= 2 {
                    let all = oracle.enumerate_maximum_independent_sets(&g, 2)?;
                    let sets = all.enumeration.unwrap_or_default();
                    if all.count != Some(BigUint::one()) || sets != [witness.clone()] {
                        return Ok(Err(format!("oracle finds {:?} maximum sets, expected only the witness", all.count)));
                    }
                    return Ok(Ok("the witness is the only maximum independent set".into()));
                }
                Ok(Ok(format!("witness of size {alpha} is maximal and maximum")))
            });

            suite.run(format!("oracle {family} n={n} vertex cover"), || {
                let cover = oracle.min_vertex_cover(&g)?;
                let alpha = unsigned(&table.alpha()).expect("feasible");
                if !covers_all_edges(&g, &cover.witness)? {
                    return Ok(Err("oracle cover misses an edge".into()));
                }
                if cover.size.clone() + &alpha != vertex_count(n) {
                    return Ok(Err(format!("cover {} + alpha {alpha} != {}", cover.size, vertex_count(n))));
                }
                if n >= 2 {
                    let dp = decimation::vertex_cover_witness(family, n)?;
                    if dp.size != cover.size || !dp.verified {
                        return Ok(Err(format!("DP cover size {} vs oracle {}", dp.size, cover.size)));
                    }
                }
                Ok(Ok(format!("minimum cover {} = N - alpha", cover.size)))
            });
        }
    }
}
