//! Command-line front end for `permgraph`.
//!
//! Every subcommand builds a [`Report`], a JSON value plus a plain-text
//! rendering, and [`run`] prints whichever `--format` asks for. Exit codes:
//! 0 success, 1 domain error or failed check, 2 usage error, 3 size cap.

pub mod acceptance;
mod commands;
pub mod experiment;
mod input;

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use permgraph::Error;
use serde_json::Value;

#[derive(Parser, Debug)]
#[command(name = "permgraph", version, about = "Permutations, inversion graphs, letter graphs and edge reflections")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Global {
    /// Seed for every random choice.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Size parameter for commands that generate their own input.
    #[arg(long, global = true)]
    pub n: Option<usize>,
    /// Number of Monte Carlo samples.
    #[arg(long, global = true)]
    pub samples: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    pub format: Format,
    /// Raise (or lower) the size cap of the expensive searches. Values above
    /// the library's hard cap are refused.
    #[arg(long, global = true)]
    pub cap_override: Option<usize>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Table,
}

/// Graph operands take JSON (`{"n":3,"edges":[[1,2]]}`), a family name
/// (`P6`, `C5`, `K4`, `K3,3`, `N2`, `M3`, `E4`, `spikes`) or graph6.
#[derive(Subcommand, Debug)]
pub enum Command {
    /// Permutations: Lehmer codes, inversions, patterns, symmetries, statistics.
    #[command(subcommand)]
    Perm(PermCmd),
    /// Graphs: graph6, isomorphism, the small-graph catalog, perfection.
    #[command(subcommand)]
    Graph(GraphCmd),
    /// Inversion graphs and their recognition.
    #[command(subcommand)]
    Invgraph(InvgraphCmd),
    /// Modules, chains, edge classes and transitive orientations.
    #[command(subcommand)]
    Prime(PrimeCmd),
    /// Letter graphs and lettericity.
    #[command(subcommand)]
    Letters(LettersCmd),
    /// Grid matrices, drawings and monotone runs.
    #[command(subcommand)]
    Grid(GridCmd),
    /// Letter graphs over a host permutation.
    #[command(subcommand)]
    Permletters(PermlettersCmd),
    /// Edge reflections.
    #[command(subcommand)]
    Reflect(ReflectCmd),
    /// Run the acceptance checks; exits 1 if any fails.
    Verify {
        /// Criterion numbers to run; all of them when omitted.
        ids: Vec<usize>,
    },
    /// Convert between text and JSON forms.
    Convert {
        #[arg(long, value_enum)]
        from: Form,
        #[arg(long, value_enum)]
        to: Form,
        payload: String,
    },
    /// Seeded Monte Carlo reports (uses --n, --samples, --seed).
    Experiment {
        #[arg(value_enum)]
        kind: ExperimentKind,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Form {
    /// One-line permutation, digits or comma separated.
    Perm,
    /// Permutation as a JSON array.
    PermJson,
    Graph6,
    /// Graph as `{"n":…,"edges":…}`.
    GraphJson,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExperimentKind {
    /// Exact lettericity of random graphs.
    RandomLettericity,
    /// Whether three vertices can share a letter.
    ThreeSameLetter,
    /// Whether two separated pairs can each share a letter.
    SeparatedPairs,
    /// Fewest monotone runs of a random permutation.
    MonotoneRuns,
}

#[derive(Subcommand, Debug)]
pub enum PermCmd {
    /// Lehmer code and lexicographic rank.
    Code { perm: String },
    /// Permutation from a Lehmer code such as `(2,5,0,3,3,0,1,0)`.
    Decode { code: String },
    /// Inversion pairs, length and absolute length.
    Inversions { perm: String },
    /// First occurrence of a pattern.
    Patterns { perm: String, pattern: String },
    /// Inverse, reverse, complement, and the images sharing an inversion graph.
    Symmetries { perm: String },
    /// Descents, intervals, cycles and monotone runs.
    Stats { perm: String },
}

#[derive(Subcommand, Debug)]
pub enum GraphCmd {
    /// graph6 string and edge list.
    Graph6 { graph: String },
    /// Isomorphism test with a witness map.
    Iso { g: String, h: String },
    /// All graphs on --n vertices up to isomorphism.
    Catalog,
    /// Clique number, chromatic number, perfection.
    Perfect { graph: String },
}

#[derive(Subcommand, Debug)]
pub enum InvgraphCmd {
    /// The inversion graph of a permutation.
    Build { perm: String },
    /// A permutation whose inversion graph is the input, if any.
    Recognize { graph: String },
    /// Every permutation with the same inversion graph.
    Equivalents { perm: String },
    /// Interval containment realisation.
    Intervals { perm: String },
}

#[derive(Subcommand, Debug)]
pub enum PrimeCmd {
    /// Primality and a nontrivial module.
    Modules { graph: String },
    /// A chain starting `u, v` and ending at `w`.
    Chains { graph: String, u: usize, v: usize, w: usize },
    /// Classes of the edge forcing relation.
    EdgeClasses { graph: String },
    /// Transitive orientations.
    Orientations { graph: String },
}

#[derive(Subcommand, Debug)]
pub enum LettersCmd {
    /// Decode a lettering `{"k":…,"word":…,"decoder":…}`.
    Decode { lettering: String },
    /// Exact lettericity with a witness.
    Lettericity { graph: String },
    /// Palindromic encoding with repeated letters.
    Savings { graph: String },
}

#[derive(Subcommand, Debug)]
pub enum GridCmd {
    /// Sign vectors for a matrix, given as printed rows `[[1,0],[-1,1]]`.
    Pmm { matrix: String },
    /// The monotone-run drawing of a permutation.
    Draw { perm: String },
    /// The lettering read off the monotone-run drawing.
    Lettering { perm: String },
    /// Fewest monotone runs and the descent-count bound.
    Runs { perm: String },
    /// Exact descent-statistic means for --n.
    Expectations,
}

#[derive(Subcommand, Debug)]
pub enum PermlettersCmd {
    /// Decode `{"k","word","host","I","N"}`.
    Decode { lettering: String },
    /// Exact permutation lettericity with a witness.
    Ellperm { graph: String },
    /// The ⌈n/2⌉-letter encoding every graph has.
    Universal { graph: String },
}

#[derive(Subcommand, Debug)]
pub enum ReflectCmd {
    /// Apply a reflection `{"u","v","X","kind"}`.
    Apply { graph: String, reflection: String },
    /// Shortest sequence to the edgeless graph.
    Bfs {
        graph: String,
        /// Allow nonedge reflections too.
        #[arg(long)]
        mixed: bool,
    },
    /// Isolate vertices one at a time.
    Greedy { graph: String },
    /// Emptying through an induced cycle.
    Cyclic { graph: String },
    /// Fewest edge-edge pairs covering the edges (a lower bound).
    Cover { graph: String },
    /// Partition into nested-triangle blocks (an upper bound).
    Nested { graph: String },
}

/// What a command produced.
pub struct Report {
    pub json: Value,
    pub table: String,
    pub code: i32,
}

impl Report {
    pub fn new(json: Value, table: impl Into<String>) -> Self {
        Report { json, table: table.into(), code: 0 }
    }
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Lib(Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Lib(e)
    }
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Lib(Error::Parse(_)) => 2,
            CliError::Lib(Error::SizeCap { .. }) => 3,
            CliError::Lib(_) => 1,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "usage error: {m}"),
            CliError::Lib(e) => write!(f, "{e}"),
        }
    }
}

/// Parse `args` (program name first), run, and write to `out` / `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            let code = e.exit_code();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    match commands::dispatch(&cli) {
        Ok(report) => {
            let text = match cli.global.format {
                Format::Json => serde_json::to_string_pretty(&report.json).expect("reports serialise"),
                Format::Table => report.table.trim_end().to_string(),
            };
            let _ = writeln!(out, "{text}");
            report.code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
