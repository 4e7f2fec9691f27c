use std::io::Write;
use std::path::Path;
use std::time::Instant;

use num_bigint::BigUint;
use thiserror::Error;

use fractal_mis::decimation::{self, closed, mask_table, BoundaryMask};
use fractal_mis::graph::{self, export_graph, Family, Graph};
use fractal_mis::oracle::RestrictedQuery;
use fractal_mis::{Error, ExactCount, Oracle, Score};

use crate::args::{Caps, Command, Method, Subcommand};
use crate::bench::{bench, BenchReport};
use crate::report::{ids, CountField, CoverField, EnumerationField, ResultReport};
use crate::verify::{verify_suite_with, VerifyReport};

/// Enumeration stops here unless `--limit` says otherwise.
pub const DEFAULT_ENUMERATION_LIMIT: usize = 100;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] Error),

    #[error("--method closed has no formula for {0}")]
    NoClosedForm(String),

    #[error("{0}")]
    Usage(String),

    #[error("cannot write {path}: {source}")]
    Write {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl CliError {
    /// 2 for anything the caller can fix by changing the arguments, 1 for
    /// failures of the run itself.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::NoClosedForm(_) => 2,
            CliError::Core(e) => match e {
                Error::GenerationCap { .. }
                | Error::OracleCap { .. }
                | Error::OutOfRange { .. }
                | Error::InvalidArgument(_) => 2,
                _ => 1,
            },
            CliError::Write { .. } => 1,
        }
    }
}

#[derive(Clone, Debug)]
pub enum Output {
    Report(ResultReport),
    Verify(VerifyReport),
    Bench(BenchReport),
    Export(Vec<u8>),
}

impl Output {
    pub fn to_bytes(&self) -> Vec<u8> {
        match self {
            Output::Report(r) => r.to_json().into_bytes(),
            Output::Verify(v) => v.to_json().into_bytes(),
            Output::Bench(b) => b.to_json().into_bytes(),
            Output::Export(bytes) => bytes.clone(),
        }
    }

    /// Writes to `path`, or to standard output when absent.
    pub fn emit(&self, path: Option<&Path>) -> Result<(), CliError> {
        let bytes = self.to_bytes();
        match path {
            Some(p) => std::fs::write(p, &bytes).map_err(|source| CliError::Write {
                path: p.display().to_string(),
                source,
            }),
            None => std::io::stdout().write_all(&bytes).map_err(|source| CliError::Write {
                path: "<stdout>".into(),
                source,
            }),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Outcome {
    pub output: Output,
    pub exit_code: i32,
}

pub fn run(cmd: &Command) -> Result<Outcome, CliError> {
    let start = Instant::now();
    let output = match cmd.subcommand {
        Subcommand::Verify => {
            let report = verify_suite_with(cmd.max_n, &decimation::Decimator::default(), &cmd.caps)?;
            let exit_code = if report.passed { 0 } else { 1 };
            return Ok(Outcome {
                output: Output::Verify(report),
                exit_code,
            });
        }
        Subcommand::Bench => {
            let (family, n) = target(cmd)?;
            Output::Bench(bench(family, n, &cmd.caps)?)
        }
        Subcommand::Generate => {
            let (family, n) = target(cmd)?;
            let g = graph::build_with_cap(family, n, cmd.caps.generation)?;
            Output::Export(export_graph(&g, cmd.format))
        }
        _ => {
            let mut report = query(cmd)?;
            report.elapsed_ms = start.elapsed().as_millis() as u64;
            Output::Report(report)
        }
    };
    Ok(Outcome { output, exit_code: 0 })
}

fn target(cmd: &Command) -> Result<(Family, u32), CliError> {
    match (cmd.family, cmd.n) {
        (Some(f), Some(n)) => Ok((f, n)),
        _ => Err(CliError::Usage("--family and --n are required".into())),
    }
}

fn query(cmd: &Command) -> Result<ResultReport, CliError> {
    let (family, n) = target(cmd)?;
    match cmd.method {
        Method::Dp => query_dp(cmd, family, n),
        Method::Closed => query_closed(cmd, family, n),
        Method::Oracle => query_oracle(cmd, family, n),
    }
}

fn query_dp(cmd: &Command, family: Family, n: u32) -> Result<ResultReport, CliError> {
    let table = mask_table(family, n)?;
    let alpha = unsigned(&table.alpha());
    let mut report = ResultReport::new(family, n, "dp", &alpha);
    match cmd.subcommand {
        Subcommand::Alpha => {
            if cmd.classes {
                report.set_classes(&table.class_values());
            }
        }
        Subcommand::Count => report.count = Some(CountField::from_count(&table.mis_count()?)),
        Subcommand::Witness => {
            let w = match family {
                Family::ScaleFreeWeb => decimation::psw_mis_witness_with_cap(n, cmd.caps.generation)?,
                Family::SierpinskiGasket => decimation::gasket_mis_witness_with_cap(n, cmd.caps.generation)?,
            };
            report.witness = Some(ids(&w));
        }
        Subcommand::Cover => {
            let c = decimation::vertex_cover_witness_with_cap(family, n, cmd.caps.generation)?;
            report.cover = Some(CoverField {
                size: c.size.to_string(),
                witness: c.witness.as_ref().map(ids),
            });
        }
        _ => unreachable!("dispatched elsewhere"),
    }
    Ok(report)
}

fn query_closed(cmd: &Command, family: Family, n: u32) -> Result<ResultReport, CliError> {
    let alpha = match family {
        Family::ScaleFreeWeb => closed::psw_alpha(n)?,
        Family::SierpinskiGasket => closed::gasket_alpha(n)?,
    };
    let mut report = ResultReport::new(family, n, "closed", &alpha);
    match cmd.subcommand {
        Subcommand::Alpha => {
            if cmd.classes {
                let values: Vec<Score> = match family {
                    Family::ScaleFreeWeb => vec![alpha.clone(), closed::psw_alpha_one_hub(n)?],
                    Family::SierpinskiGasket => closed::gasket_class_values(n)?.to_vec(),
                }
                .into_iter()
                .map(|v| Score::size(num_bigint::BigInt::from(v)))
                .collect();
                report.set_classes(&values);
            }
        }
        Subcommand::Count => {
            let c = match family {
                Family::ScaleFreeWeb => closed::psw_mis_count(n)?,
                Family::SierpinskiGasket => closed::gasket_mis_count(n)?,
            };
            report.count = Some(CountField::from_count(&c));
        }
        Subcommand::Witness => match family {
            Family::ScaleFreeWeb => {
                report.witness = Some(ids(&decimation::psw_mis_witness_with_cap(n, cmd.caps.generation)?));
            }
            Family::SierpinskiGasket => {
                return Err(CliError::NoClosedForm(
                    "a gasket witness (use --method dp or --method oracle)".into(),
                ))
            }
        },
        Subcommand::Cover => {
            let size = match family {
                Family::ScaleFreeWeb => closed::psw_vertex_cover(n)?,
                Family::SierpinskiGasket => closed::gasket_vertex_cover(n)?,
            };
            let witness = match family {
                Family::ScaleFreeWeb if n >= 2 => {
                    let w = decimation::psw_mis_witness_with_cap(n, cmd.caps.generation)?;
                    let num_vertices = usize::try_from(graph::vertex_count(n)).expect("within the generation cap");
                    Some(ids(&w.complement(num_vertices)))
                }
                _ => None,
            };
            report.cover = Some(CoverField {
                size: size.to_string(),
                witness,
            });
        }
        _ => unreachable!("dispatched elsewhere"),
    }
    Ok(report)
}

fn build_for_oracle(family: Family, n: u32, caps: &Caps) -> Result<(Graph, Oracle), CliError> {
    let oracle = Oracle::with_cap(caps.vertices);
    // Refuse before building anything large.
    if graph::vertex_count(n) > BigUint::from(oracle.cap()) {
        return Err(Error::OracleCap {
            vertices: usize::try_from(graph::vertex_count(n)).unwrap_or(usize::MAX),
            cap: oracle.cap(),
        }
        .into());
    }
    let g = graph::build_with_cap(family, n, caps.generation)?;
    Ok((g, oracle))
}

fn query_oracle(cmd: &Command, family: Family, n: u32) -> Result<ResultReport, CliError> {
    let (g, oracle) = build_for_oracle(family, n, &cmd.caps)?;
    if cmd.subcommand == Subcommand::Enumerate {
        let limit = cmd.limit.unwrap_or(DEFAULT_ENUMERATION_LIMIT);
        let mis = oracle.enumerate_maximum_independent_sets(&g, limit)?;
        let mut report = ResultReport::new(family, n, "oracle", &mis.alpha);
        if let Some(c) = &mis.count {
            report.count = Some(CountField::from_count(&ExactCount::from(c.clone())));
        }
        report.enumeration = Some(EnumerationField {
            sets: mis.enumeration.unwrap_or_default().iter().map(ids).collect(),
            truncated: mis.truncated,
        });
        return Ok(report);
    }
    let mis = oracle.max_independent_set(&g)?;
    let mut report = ResultReport::new(family, n, "oracle", &mis.alpha);
    match cmd.subcommand {
        Subcommand::Alpha => {
            if cmd.classes {
                let classes = match family {
                    Family::ScaleFreeWeb => 2,
                    Family::SierpinskiGasket => 4,
                };
                let mut values = vec![Score::Infeasible; classes];
                for mask in BoundaryMask::all().filter(|m| m.class() < classes) {
                    let q = RestrictedQuery::boundary_pattern(g.boundary(), mask.bits());
                    let v = oracle.restricted_alpha(&g, &q)?;
                    values[mask.class()] = values[mask.class()].clone().max(v);
                }
                report.set_classes(&values);
            }
        }
        Subcommand::Count => {
            let c = oracle.count_maximum_independent_sets(&g)?;
            report.count = Some(CountField::from_count(&ExactCount::from(c)));
        }
        Subcommand::Witness => report.witness = Some(ids(&mis.witness)),
        Subcommand::Cover => {
            let c = oracle.min_vertex_cover(&g)?;
            report.cover = Some(CoverField {
                size: c.size.to_string(),
                witness: Some(ids(&c.witness)),
            });
        }
        _ => unreachable!("dispatched elsewhere"),
    }
    Ok(report)
}

fn unsigned(s: &Score) -> BigUint {
    s.as_size()
        .and_then(|v| v.to_biguint())
        .expect("the empty set is always feasible")
}
