use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "erq", version, about = "Classify polynomials as expanders over the rationals and probe the results")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Clone, Args)]
pub struct Common {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Append results to this JSON-lines file (default: $ERQ_LOG).
    #[arg(long, global = true, env = "ERQ_LOG")]
    pub log: Option<PathBuf>,
    /// Seed recorded with results and used by randomized commands.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Clone, Args)]
pub struct PolyArgs {
    /// Polynomial text, e.g. "x^2+x*y+z".
    pub polynomial: String,
    /// Comma-separated variable names (default: x,y,z up to the last one used).
    #[arg(long, value_delimiter = ',')]
    pub vars: Option<Vec<String>>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Parse and print the canonical form.
    Parse(PolyArgs),
    /// Expander verdicts over Q and R with a certificate and diagnostics.
    Classify(PolyArgs),
    /// Run every decomposition detector.
    Decompose(PolyArgs),
    /// Image size on given sets, or a growth sweep with --sizes.
    Expand(ExpandArgs),
    /// Low-expansion witness sets with the measured image size.
    Witness(WitnessArgs),
    /// Diophantine and progression probes.
    Probe(ProbeArgs),
}

#[derive(Debug, Clone, Args)]
pub struct ExpandArgs {
    #[command(flatten)]
    pub poly: PolyArgs,
    /// JSON array with one set spec per variable.
    #[arg(long)]
    pub sets: String,
    /// Sizes for a growth sweep; every progression in --sets is resized.
    #[arg(long, value_delimiter = ',')]
    pub sizes: Option<Vec<usize>>,
}

#[derive(Debug, Clone, Args)]
pub struct WitnessArgs {
    /// Polynomial whose rational certificate supplies the witness.
    #[arg(long, conflicts_with_all = ["example1", "chang"], required_unless_present_any = ["example1", "chang"])]
    pub form: Option<String>,
    #[arg(long, value_delimiter = ',')]
    pub vars: Option<Vec<String>>,
    /// Set size.
    #[arg(long)]
    pub n: usize,
    /// Square-root witness sets for (x^2-1)(y^2+1)(z+1).
    #[arg(long, conflicts_with = "chang")]
    pub example1: bool,
    /// Use the published set for y instead of the corrected one.
    #[arg(long, requires = "example1")]
    pub literal_paper_sets: bool,
    /// x^2+y^2 on square roots of 1..n.
    #[arg(long)]
    pub chang: bool,
}

#[derive(Debug, Clone, Args)]
pub struct ProbeArgs {
    #[command(subcommand)]
    pub probe: Probe,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Arithmetic,
    Geometric,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Probe {
    /// Rationals of height at most H.
    Heights {
        #[arg(long)]
        height: u64,
    },
    /// Points on g(x) = c y^w with x of height at most H.
    Curve {
        g: String,
        #[arg(long)]
        w: u32,
        #[arg(long, default_value = "1")]
        c: String,
        #[arg(long)]
        height: u64,
    },
    /// Exponent w and genus for the curve g(x) = y^w.
    Genus { g: String },
    /// Whether r lies in the group generated by --generators.
    Membership {
        r: String,
        #[arg(long, value_delimiter = ',', required = true)]
        generators: Vec<String>,
    },
    /// Points of height at most H where g lands in the group.
    Intersection {
        g: String,
        #[arg(long, value_delimiter = ',', required = true)]
        generators: Vec<String>,
        #[arg(long)]
        height: u64,
    },
    /// Most popular residue class of exponent vectors modulo w.
    Congruence {
        /// JSON array of integer vectors.
        vectors: String,
        #[arg(long)]
        w: i64,
    },
    /// Longest progression in the range of g.
    Progression {
        g: String,
        #[arg(long, value_enum, default_value_t = Kind::Arithmetic)]
        kind: Kind,
        /// Integers in [-n, n].
        #[arg(long, conflicts_with = "height", required_unless_present = "height")]
        n: Option<u64>,
        /// Rationals of height at most H.
        #[arg(long)]
        height: Option<u64>,
        /// Use g(x+a) - g(a).
        #[arg(long, allow_hyphen_values = true)]
        shift: Option<String>,
    },
    /// Four-term progressions among 1^2, ..., N^2.
    Squares {
        #[arg(long)]
        n: u64,
    },
}
