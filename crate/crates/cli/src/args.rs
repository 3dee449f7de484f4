use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "tnnflag", version, about = "Twisted Bruhat orders and totally nonnegative flag cells")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Generalized Cartan matrices.
    #[command(subcommand)]
    Cartan(CartanCmd),
    /// Weyl group elements and Bruhat order.
    #[command(subcommand)]
    Weyl(WeylCmd),
    /// Twisted orders and cell posets.
    #[command(subcommand)]
    Orders(OrdersCmd),
    /// Poset topology checks.
    #[command(subcommand)]
    Topo(TopoCmd),
    /// The SL(n) matrix model.
    #[command(subcommand)]
    Sl(SlCmd),
    /// Totally positive cells.
    #[command(subcommand)]
    Tp(TpCmd),
    /// Run a fixed verification profile.
    Verify(VerifyArgs),
}

#[derive(Args, Debug, Clone)]
pub struct CartanArg {
    /// Builtin name (a1, a2, a3, a4, affine_a1, hyperbolic_2_3) or a JSON file.
    #[arg(long, default_value = "a2")]
    pub cartan: String,
}

#[derive(Args, Debug, Clone)]
pub struct OutArg {
    /// Write the JSON report here (`-` for stdout).
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum CartanCmd {
    /// Check the matrix axioms and symmetrizability.
    Validate {
        #[command(flatten)]
        cartan: CartanArg,
        #[command(flatten)]
        out: OutArg,
    },
    /// Glue two copies of the diagram along K and print the result.
    Glue {
        #[command(flatten)]
        cartan: CartanArg,
        /// Node labels, comma separated.
        #[arg(long, default_value = "")]
        k: String,
    },
    /// Adjoin a node joined to every node by -2 and print the result.
    Shriek {
        #[command(flatten)]
        cartan: CartanArg,
    },
}

#[derive(Subcommand, Debug)]
pub enum WeylCmd {
    /// List elements up to a length, one per line.
    Enum {
        #[command(flatten)]
        cartan: CartanArg,
        #[arg(long)]
        maxlen: usize,
        /// Only elements of the parabolic subgroup W_J.
        #[arg(long)]
        j: Option<String>,
    },
    /// Bruhat comparison `v ≤ w`.
    Leq {
        #[command(flatten)]
        cartan: CartanArg,
        #[arg(long)]
        v: String,
        #[arg(long)]
        w: String,
    },
}

#[derive(Subcommand, Debug)]
pub enum OrdersCmd {
    /// Twisted comparison `v ^J≤ w`.
    Tleq {
        #[command(flatten)]
        cartan: CartanArg,
        #[arg(long, default_value = "")]
        j: String,
        #[arg(long)]
        v: String,
        #[arg(long)]
        w: String,
    },
    /// The twisted interval `[v, w]`, one element per line.
    Interval {
        #[command(flatten)]
        cartan: CartanArg,
        #[arg(long, default_value = "")]
        j: String,
        #[arg(long)]
        v: String,
        #[arg(long)]
        w: String,
    },
    /// The cell poset below `(v, w)`: twisted (`--j`) or projected (`--k`).
    Poset {
        #[command(flatten)]
        cartan: CartanArg,
        #[arg(long, conflicts_with = "k")]
        j: Option<String>,
        #[arg(long)]
        k: Option<String>,
        #[arg(long)]
        v: String,
        #[arg(long)]
        w: String,
        #[arg(long, value_enum, default_value_t = PosetFormat::Json)]
        format: PosetFormat,
    },
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum PosetFormat {
    Json,
    Dot,
}

#[derive(Subcommand, Debug)]
pub enum TopoCmd {
    /// Graded / thin / Eulerian checks (after adjoining a minimum), plus the
    /// ball Euler check with `--ball`.
    Check {
        /// Poset JSON file.
        #[arg(long, required_unless_present = "chain", conflicts_with = "chain")]
        poset: Option<PathBuf>,
        /// Use the chain `0 < 1 < … < N` instead of a file.
        #[arg(long)]
        chain: Option<usize>,
        #[arg(long)]
        ball: bool,
        /// Top dimension for `--ball` (default: the largest rank).
        #[arg(long)]
        top_dim: Option<i64>,
        #[command(flatten)]
        out: OutArg,
    },
}

#[derive(Subcommand, Debug)]
pub enum SlCmd {
    /// Richardson (or `J`-twisted) cell of the flag `gB^+`.
    Cell {
        /// Matrix size.
        #[arg(long, default_value_t = 3)]
        n: usize,
        /// JSON rows of rationals, e.g. `[["1","0"],["1/2","1"]]`, or a file.
        #[arg(long)]
        matrix: String,
        #[arg(long)]
        j: Option<String>,
    },
    /// Whether `gB^+` lies in the chart `u̇U^−B^+`.
    Chart {
        #[arg(long, default_value_t = 3)]
        n: usize,
        #[arg(long)]
        u: String,
        #[arg(long)]
        matrix: String,
    },
}

#[derive(Subcommand, Debug)]
pub enum TpCmd {
    /// Run one verification suite.
    Suite(SuiteArgs),
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Which {
    Chart,
    Product,
    Closure,
    Identities,
    Gkl,
    Glue,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilyArg {
    Positive,
    Negative,
    Twisted,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum MutationArg {
    None,
    NegateParameter,
    FlipIota,
    PerturbGlued,
}

#[derive(Args, Debug)]
pub struct SuiteArgs {
    #[arg(long, value_enum)]
    pub which: Which,
    /// Matrix size of SL(n).
    #[arg(long, default_value_t = 3)]
    pub n: usize,
    /// Twisting set; implies `--family twisted` unless a family is given.
    #[arg(long)]
    pub j: Option<String>,
    /// Projection set for `closure` (projected cells) and `glue`.
    #[arg(long)]
    pub k: Option<String>,
    #[arg(long, value_enum)]
    pub family: Option<FamilyArg>,
    #[arg(long, default_value = "e")]
    pub v: String,
    /// Middle element for `product`.
    #[arg(long)]
    pub u: Option<String>,
    /// Top element (default: the longest element).
    #[arg(long)]
    pub w: Option<String>,
    /// Left factor for `gkl`.
    #[arg(long)]
    pub w1: Option<String>,
    /// Diagram for `glue`.
    #[arg(long, default_value = "a2")]
    pub cartan: String,
    /// Largest cell rank visited by `glue`.
    #[arg(long, default_value_t = 4)]
    pub max_rank: usize,
    #[arg(long, default_value_t = 100)]
    pub samples: usize,
    #[arg(long, default_value_t = 7)]
    pub seed: u64,
    /// Inject a deliberate fault (for checking the suites themselves).
    #[arg(long, value_enum, default_value_t = MutationArg::None)]
    pub mutation: MutationArg,
    #[command(flatten)]
    pub out: OutArg,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Profile {
    Quick,
    Full,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    pub profile: Profile,
    #[arg(long, default_value_t = 7)]
    pub seed: u64,
    /// Record wall-clock time per suite in the report (the report is then
    /// no longer byte-stable).
    #[arg(long)]
    pub timings: bool,
    #[arg(long, value_enum, default_value_t = MutationArg::None)]
    pub mutation: MutationArg,
    #[command(flatten)]
    pub out: OutArg,
}
