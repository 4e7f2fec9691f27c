use std::path::PathBuf;

use clap::{Args, Parser, ValueEnum};

use fractal_mis::graph::{ExportFormat, Family, DEFAULT_GENERATION_CAP};
use fractal_mis::oracle::DEFAULT_ORACLE_CAP;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Subcommand {
    Generate,
    Alpha,
    Count,
    Enumerate,
    Witness,
    Cover,
    Verify,
    Bench,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Dp,
    Closed,
    Oracle,
}

impl Method {
    pub fn tag(self) -> &'static str {
        match self {
            Method::Dp => "dp",
            Method::Closed => "closed",
            Method::Oracle => "oracle",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    /// Largest graph the oracle will search.
    pub vertices: usize,
    /// Largest generation that will be materialized.
    pub generation: u32,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            vertices: DEFAULT_ORACLE_CAP,
            generation: DEFAULT_GENERATION_CAP,
        }
    }
}

/// A validated invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Command {
    pub subcommand: Subcommand,
    /// Absent only for `verify`.
    pub family: Option<Family>,
    pub n: Option<u32>,
    pub method: Method,
    pub format: ExportFormat,
    pub classes: bool,
    pub limit: Option<usize>,
    pub out: Option<PathBuf>,
    pub max_n: u32,
    pub caps: Caps,
}

impl Command {
    fn new(subcommand: Subcommand) -> Self {
        Command {
            subcommand,
            family: None,
            n: None,
            method: Method::Dp,
            format: ExportFormat::EdgeList,
            classes: false,
            limit: None,
            out: None,
            max_n: 4,
            caps: Caps::default(),
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FamilyArg {
    Psw,
    Gasket,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Self {
        match f {
            FamilyArg::Psw => Family::ScaleFreeWeb,
            FamilyArg::Gasket => Family::SierpinskiGasket,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FormatArg {
    Edges,
    Dot,
    Json,
}

#[derive(Parser)]
#[command(name = "fractal-mis", version, about = "Exact maximum independent sets of the pseudofractal scale-free web and the Sierpinski gasket")]
struct Cli {
    #[command(subcommand)]
    command: Sub,
}

#[derive(clap::Subcommand)]
enum Sub {
    /// Write the graph as an edge list, DOT or JSON
    Generate {
        #[command(flatten)]
        target: Target,
        #[arg(long, value_enum, default_value = "edges")]
        format: FormatArg,
        #[command(flatten)]
        common: Common,
    },
    /// Independence number (and per-class values with --classes)
    Alpha {
        #[command(flatten)]
        target: Target,
        #[arg(long, value_enum, default_value = "dp")]
        method: Method,
        /// Also report the best size for each boundary class
        #[arg(long)]
        classes: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Number of maximum independent sets
    Count(Query),
    /// List maximum independent sets in lexicographic order (oracle only)
    Enumerate {
        #[command(flatten)]
        target: Target,
        #[arg(long, value_enum)]
        method: Option<Method>,
        /// Stop after this many sets
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        limit: Option<u64>,
        #[command(flatten)]
        common: Common,
    },
    /// One explicit maximum independent set
    Witness(Query),
    /// Minimum vertex cover size and witness
    Cover(Query),
    /// Run every cross-check and report pass/fail per check
    Verify {
        /// Largest generation for structural and oracle checks
        #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u32).range(2..))]
        max_n: u32,
        #[command(flatten)]
        common: Common,
    },
    /// Time generation, the DP and (within the cap) the oracle
    Bench {
        #[command(flatten)]
        target: Target,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Args)]
struct Target {
    #[arg(long, value_enum)]
    family: FamilyArg,
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    n: u32,
}

#[derive(Args)]
struct Query {
    #[command(flatten)]
    target: Target,
    #[arg(long, value_enum, default_value = "dp")]
    method: Method,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct Common {
    /// Write the output here instead of standard output
    #[arg(long)]
    out: Option<PathBuf>,
    /// Largest graph (in vertices) the oracle will search
    #[arg(long, default_value_t = DEFAULT_ORACLE_CAP)]
    cap_vertices: usize,
    /// Largest generation that will be built explicitly
    #[arg(long, default_value_t = DEFAULT_GENERATION_CAP)]
    cap_generation: u32,
}

impl Command {
    fn apply_target(&mut self, t: Target) {
        self.family = Some(t.family.into());
        self.n = Some(t.n);
    }

    fn apply_common(&mut self, c: Common) {
        self.out = c.out;
        self.caps = Caps {
            vertices: c.cap_vertices,
            generation: c.cap_generation,
        };
    }
}

/// Parses arguments without the program name, e.g.
/// `["alpha", "--family", "psw", "--n", "5"]`.
pub fn parse_args<I, S>(argv: I) -> Result<Command, clap::Error>
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let args = std::iter::once(std::ffi::OsString::from("fractal-mis")).chain(argv.into_iter().map(Into::into));
    let cli = Cli::try_parse_from(args)?;
    let cmd = match cli.command {
        Sub::Generate { target, format, common } => {
            let mut cmd = Command::new(Subcommand::Generate);
            cmd.apply_target(target);
            cmd.apply_common(common);
            cmd.format = match format {
                FormatArg::Edges => ExportFormat::EdgeList,
                FormatArg::Dot => ExportFormat::Dot,
                FormatArg::Json => ExportFormat::Json,
            };
            cmd
        }
        Sub::Alpha {
            target,
            method,
            classes,
            common,
        } => {
            let mut cmd = Command::new(Subcommand::Alpha);
            cmd.apply_target(target);
            cmd.apply_common(common);
            cmd.method = method;
            cmd.classes = classes;
            cmd
        }
        Sub::Count(q) => query(Subcommand::Count, q),
        Sub::Witness(q) => query(Subcommand::Witness, q),
        Sub::Cover(q) => query(Subcommand::Cover, q),
        Sub::Enumerate {
            target,
            method,
            limit,
            common,
        } => {
            if let Some(m) = method.filter(|m| *m != Method::Oracle) {
                return Err(clap::Error::raw(
                    clap::error::ErrorKind::InvalidValue,
                    format!("enumerate only supports --method oracle, got {}\n", m.tag()),
                ));
            }
            let mut cmd = Command::new(Subcommand::Enumerate);
            cmd.apply_target(target);
            cmd.apply_common(common);
            cmd.method = Method::Oracle;
            cmd.limit = limit.map(|l| l as usize);
            cmd
        }
        Sub::Verify { max_n, common } => {
            let mut cmd = Command::new(Subcommand::Verify);
            cmd.apply_common(common);
            cmd.max_n = max_n;
            cmd
        }
        Sub::Bench { target, common } => {
            let mut cmd = Command::new(Subcommand::Bench);
            cmd.apply_target(target);
            cmd.apply_common(common);
            cmd
        }
    };
    Ok(cmd)
}

fn query(sub: Subcommand, q: Query) -> Command {
    let mut cmd = Command::new(sub);
    cmd.apply_target(q.target);
    cmd.apply_common(q.common);
    cmd.method = q.method;
    cmd
}
