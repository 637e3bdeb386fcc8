//! Command-line front end.
//!
//! Every subcommand builds a [`Report`] of ordered data fields and named
//! checks, printed as text or JSON. Exit codes: 0 when every check passes,
//! 1 when a mathematical check fails, 2 on input errors.

mod commands;
pub mod input;
pub mod report;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

pub use input::CliError;
pub use report::Report;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "coxglue", version, about = "Exact checks for gluing over finite Coxeter groups")]
pub struct RunConfig {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Seed for every randomized step (MeatAxe, fuzz instances).
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Coxeter group combinatorics.
    #[command(subcommand)]
    Coxeter(CoxeterCmd),
    /// Braid group representations and their K_W spaces.
    #[command(subcommand)]
    Rep(RepCmd),
    /// Random acyclicity checks for coefficient systems on simplices.
    HomlemFuzz(FuzzArgs),
    /// Glued algebras over F_p.
    #[command(subcommand)]
    Glue(GlueCmd),
    /// Determinant obstruction for M E = p_G I.
    Counterexample(CounterArgs),
}

#[derive(Debug, Clone, Args)]
pub struct SystemArgs {
    /// Type label such as A2, B3, D4 or I2(6).
    #[arg(long = "type")]
    pub ty: Option<String>,
    /// Coxeter matrix, `1,3;3,1` or `[[1,3],[3,1]]`.
    #[arg(long)]
    pub matrix: Option<String>,
    /// Largest group order accepted.
    #[arg(long, default_value_t = crate::coxeter::DEFAULT_CAP)]
    pub cap_group: usize,
}

#[derive(Debug, Subcommand)]
pub enum CoxeterCmd {
    /// Order, lengths, longest element and basic sanity checks.
    Info(SystemArgs),
    /// Half-set convexity, the coset criterion for simple supports, and the
    /// geodesic obstruction, all exhaustively.
    Convexity(SystemArgs),
    /// Rank-two factorizations `w = w(s, s2) w'` for every valid `(s, w)`.
    Sizig3(SystemArgs),
}

#[derive(Debug, Clone, Args)]
pub struct RepArgs {
    #[command(flatten)]
    pub system: SystemArgs,
    /// Representation file.
    #[arg(long)]
    pub file: Option<PathBuf>,
    /// Built-in representation: trivial, sign, scalar or hecke.
    #[arg(long)]
    pub builtin: Option<String>,
    /// rational, rational_function or prime:P; overrides the file.
    #[arg(long)]
    pub field: Option<String>,
    /// Parameter for built-ins and relation checks, a literal in the field.
    #[arg(long, allow_hyphen_values = true)]
    pub q: Option<String>,
    /// For rational-function representations: also decide goodness at
    /// u = this rational number.
    #[arg(long, allow_hyphen_values = true)]
    pub specialize: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum RepCmd {
    /// Braid relations, well-definedness of V_w and the augmentation image.
    Validate(RepArgs),
    /// Whether the sections i_y span K_W(V).
    Goodness(RepArgs),
    /// The Euler-characteristic identity on K_W(V).
    Euler(RepArgs),
    /// The half-set identity for each generator.
    Half {
        #[command(flatten)]
        rep: RepArgs,
        /// Generator, 1-based; all generators when omitted.
        #[arg(long)]
        index: Option<usize>,
    },
    /// The pairing between K_W(V) and K_W(V*) for the transpose dual.
    Chi(RepArgs),
    /// Induce from a parabolic subgroup; the input describes a
    /// representation of the subgroup.
    Induce {
        #[command(flatten)]
        rep: RepArgs,
        /// Generators of the parabolic subgroup, 1-based, comma separated.
        #[arg(long, value_delimiter = ',', required = true)]
        subset: Vec<usize>,
    },
}

#[derive(Debug, Clone, Args)]
pub struct FuzzArgs {
    /// Number of instances satisfying the hypothesis.
    #[arg(long, default_value_t = 200)]
    pub count: usize,
    /// Number of instances with the hypothesis broken.
    #[arg(long, default_value_t = 5)]
    pub negatives: usize,
    /// rational or prime:P.
    #[arg(long)]
    pub field: Option<String>,
}

#[derive(Debug, Clone, Args)]
pub struct GlueArgs {
    /// Built-in datum name.
    #[arg(long)]
    pub builtin: Option<String>,
    /// Datum file.
    #[arg(long)]
    pub file: Option<PathBuf>,
    /// prime:P; selects the prime for built-ins and must match files.
    #[arg(long)]
    pub field: Option<String>,
    /// Largest dim Γ for which simple modules are computed.
    #[arg(long, default_value_t = crate::gluedalg::DEFAULT_CAP)]
    pub cap_gamma: usize,
}

#[derive(Debug, Subcommand)]
pub enum GlueCmd {
    /// Assemble Γ and check associativity, the unit and W-gluing.
    Assemble(GlueArgs),
    /// Simple Γ-modules and their multiplicities in Γ.
    Simples(GlueArgs),
    /// Classes of simples against the lattice K(Φ).
    K0(GlueArgs),
    /// Supports of simples for a gluing indexed by W.
    Supports(GlueArgs),
}

#[derive(Debug, Clone, Args)]
pub struct CounterArgs {
    #[command(flatten)]
    pub system: SystemArgs,
    /// Largest group order for the determinant.
    #[arg(long, default_value_t = crate::counterexample::DEFAULT_ORDER_CAP)]
    pub cap_order: usize,
    /// p_G as a Laurent polynomial in u; defaults to the table for A1, A2.
    #[arg(long, allow_hyphen_values = true)]
    pub p_g: Option<String>,
}

/// Exit code and rendered output of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Run a parsed configuration to a report.
pub fn execute(config: &RunConfig) -> Result<Report, CliError> {
    commands::execute(config)
}

pub fn run(config: &RunConfig) -> Outcome {
    match execute(config) {
        Ok(report) => Outcome {
            code: if report.ok() { 0 } else { 1 },
            stdout: match config.format {
                Format::Text => report.to_text(),
                Format::Json => report.to_json(),
            },
            stderr: String::new(),
        },
        Err(e) => Outcome {
            code: e.exit_code(),
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

/// Parse arguments (including the program name) and run.
pub fn run_args<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match RunConfig::try_parse_from(args) {
        Ok(config) => run(&config),
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            if code == 0 {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            }
        }
    }
}
