//! Command-line surface for `fractal-mis`: argument parsing, dispatch to
//! the solvers, the verification suite and the benchmark runner.

pub mod args;
pub mod bench;
pub mod report;
pub mod run;
pub mod verify;

pub use args::{parse_args, Caps, Command, Method, Subcommand};
pub use run::{run, CliError, Outcome, Output};
