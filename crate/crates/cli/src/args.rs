use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "reltak",
    version,
    about = "Local cohomology of monomial ideal quotients via degree complexes"
)]
pub struct Cli {
    /// Characteristic of the coefficient field.
    #[arg(long = "char", global = true, env = "RELTAK_CHAR", default_value_t = 2)]
    pub characteristic: u32,

    /// Largest power `t` examined.
    #[arg(long, global = true, env = "RELTAK_MAX_T", default_value_t = 5)]
    pub max_t: u32,

    /// Seed for randomized checks.
    #[arg(long, global = true, env = "RELTAK_SEED", default_value_t = 20240601)]
    pub seed: u64,

    /// Emit JSON instead of a table.
    #[arg(long, global = true, env = "RELTAK_JSON")]
    pub json: bool,

    /// Worker threads; defaults to the number of CPUs.
    #[arg(long, global = true, env = "RELTAK_PARALLEL")]
    pub parallel: Option<usize>,

    /// Warn when a symbolic-power intersection exceeds this many generators.
    #[arg(long, global = true, env = "RELTAK_GEN_CAP", default_value_t = reltak::symbolic::DEFAULT_GENERATOR_CAP)]
    pub gen_cap: usize,

    /// Skip the link-based depth cross-check and the box frontier certificate.
    #[arg(long, global = true)]
    pub no_crosscheck: bool,

    #[arg(long, global = true, hide = true, value_enum)]
    pub inject_fault: Option<FaultArg>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FaultArg {
    Ses,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Reduced cohomology of a complex or a relative pair.
    Homology {
        /// File with `complex on n: ...;` or `big: ... small: ...;`.
        input: PathBuf,
    },
    /// The degree complex of an ideal at a multidegree.
    DegreeComplex {
        #[arg(long)]
        ideal: PathBuf,
        /// Comma-separated integers, e.g. `-1,0,2`.
        #[arg(long, allow_hyphen_values = true)]
        multidegree: String,
    },
    /// Local cohomology of `I/J`.
    Lc(LcArgs),
    /// Depth, dimension and Cohen-Macaulayness of `I/J` or of a Stanley-Reisner quotient.
    CmCheck(QuotientArgs),
    /// Symbolic powers of a squarefree ideal, a graph, or the quotients `I^(t)/I^(t+1)` of a complex.
    Symbolic { input: PathBuf },
    /// Dimensions of `I^(t)/I^t` for an edge ideal.
    Discrepancy {
        graph: PathBuf,
        /// Also decide CM-ness of each quotient.
        #[arg(long)]
        with_cm: bool,
    },
    /// The odd-cycle neighbourhood criterion for CM discrepancy modules.
    CmEdge {
        graph: PathBuf,
        /// Check the colon-radical identities at this excess `s`.
        #[arg(long)]
        colon: Option<u32>,
        /// Run the localization test for generalized CM at this `t`.
        #[arg(long)]
        gcm: Option<u32>,
    },
    /// Matroid test for a complex.
    Matroid {
        input: PathBuf,
        /// Also decide CM-ness of `I^(t)/I^(t+1)` for `t ≤ max-t`.
        #[arg(long)]
        cm: bool,
    },
    /// Randomized self-check of the exactness and reduction properties.
    Fuzz {
        #[arg(long, default_value_t = 50)]
        cases: usize,
    },
}

#[derive(Debug, Args)]
pub struct QuotientArgs {
    /// Ideal file for the denominator `J`.
    #[arg(
        long = "J",
        value_name = "FILE",
        requires = "numerator",
        conflicts_with = "complex"
    )]
    pub denominator: Option<PathBuf>,
    /// Ideal file for the numerator `I`.
    #[arg(long = "I", value_name = "FILE", requires = "denominator")]
    pub numerator: Option<PathBuf>,
    /// Complex (`S/I_Δ`) or pair (`I_Γ/I_Δ`) instead of ideals.
    #[arg(long, value_name = "FILE")]
    pub complex: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct LcArgs {
    #[command(flatten)]
    pub quotient: QuotientArgs,
    /// A single piece: cohomological index and multidegree.
    #[arg(long, num_args = 2, value_names = ["I", "A"], allow_hyphen_values = true, conflicts_with = "profile")]
    pub piece: Option<Vec<String>>,
    /// The full table over the enumeration box.
    #[arg(long)]
    pub profile: bool,
    /// Map `·x^b` from the piece at `A`; needs `--piece`.
    #[arg(long, requires = "piece", allow_hyphen_values = true)]
    pub multiply: Option<String>,
}
