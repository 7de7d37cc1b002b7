use clap::{Args, Parser, Subcommand, ValueEnum};

use ucl_core::algorithms::PmcMode;

/// Exact reasoning about circuits built from unreliable gates.
///
/// Formulas use prefix syntax, e.g. `(and? (or? x1 (not? x2)) x3)`, where a
/// trailing `?` marks an unreliable gate. Rationals are written `p/q` or as
/// finite decimals.
#[derive(Debug, Parser)]
#[command(name = "ucl", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Emit one JSON object instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    /// Precision of decimal annotations and of certified optimum pairs.
    #[arg(long, global = true, default_value = "1/1000000")]
    pub eps: String,

    /// Largest number of unreliable gates a formula may have.
    #[arg(long, global = true, env = "UCL_MAX_GATES", default_value_t = ucl_core::formula::DEFAULT_MAX_GATES)]
    pub max_gates: usize,
}

#[derive(Debug, Args)]
pub struct FormulaArg {
    /// The circuit formula.
    #[arg(short = 'f', long = "formula")]
    pub formula: String,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide whether ambition premises entail the formula.
    Entails {
        #[command(flatten)]
        formula: FormulaArg,
        /// Premise of the form `mu <= P`; repeatable.
        #[arg(long = "gamma")]
        gamma: Vec<String>,
    },
    /// Find an interpretation satisfying the formula.
    Witness {
        #[command(flatten)]
        formula: FormulaArg,
        #[arg(long, value_enum, default_value_t = Mode::Faithful)]
        mode: Mode,
        /// Valuation to examine first, e.g. `x=1,y=0`.
        #[arg(long)]
        start: Option<String>,
    },
    /// Decide whether the formula is satisfiable.
    Sat {
        #[command(flatten)]
        formula: FormulaArg,
    },
    /// Grid cells of gate reliability guaranteeing success rate `mu`.
    Abduce {
        #[command(flatten)]
        formula: FormulaArg,
        #[arg(long)]
        mu: String,
        /// Number of grid cells on (1/2, 1].
        #[arg(long)]
        k: usize,
    },
    /// Decide whether one gate reliability achieves success rate `mu` under every valuation.
    DecideRate {
        #[command(flatten)]
        formula: FormulaArg,
        #[arg(long)]
        mu: String,
    },
    /// Best success rate achievable under every valuation.
    Optimize {
        #[command(flatten)]
        formula: FormulaArg,
    },
    /// Check the formula under one interpretation.
    Eval {
        #[command(flatten)]
        formula: FormulaArg,
        /// Truth assignment, e.g. `x1=1,x2=0`.
        #[arg(long)]
        assign: String,
        #[arg(long)]
        nu: String,
        #[arg(long)]
        mu: String,
    },
    /// List every outcome with its probability.
    Outcomes {
        #[command(flatten)]
        formula: FormulaArg,
    },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Entails { .. } => "entails",
            Command::Witness { .. } => "witness",
            Command::Sat { .. } => "sat",
            Command::Abduce { .. } => "abduce",
            Command::DecideRate { .. } => "decide-rate",
            Command::Optimize { .. } => "optimize",
            Command::Eval { .. } => "eval",
            Command::Outcomes { .. } => "outcomes",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Faithful,
    Fast,
}

impl From<Mode> for PmcMode {
    fn from(m: Mode) -> PmcMode {
        match m {
            Mode::Faithful => PmcMode::Faithful,
            Mode::Fast => PmcMode::Fast,
        }
    }
}
