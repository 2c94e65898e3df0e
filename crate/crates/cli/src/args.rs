use std::path::PathBuf;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use theta_lambda::{rational, CurveCase, Rational};

#[derive(Debug, Parser)]
#[command(
    name = "theta-lambda",
    version,
    about = "Exact Chern-Mather class calculus for theta divisors"
)]
pub struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Write to this file instead of standard output
    #[arg(long, global = true, value_name = "PATH")]
    pub output: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CaseArg {
    Nonhyp,
    Hyp,
}

impl From<CaseArg> for CurveCase {
    fn from(c: CaseArg) -> Self {
        match c {
            CaseArg::Nonhyp => CurveCase::NonHyperelliptic,
            CaseArg::Hyp => CurveCase::Hyperelliptic,
        }
    }
}

fn parse_rational(s: &str) -> Result<Rational, String> {
    rational::parse(s).map_err(|e| e.to_string())
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Eulerian polynomial P_n
    Eulerian {
        #[arg(long)]
        n: usize,
        /// Also check sum k^n x^k = x P_n / (1-x)^(n+1) up to x^K
        #[arg(long, value_name = "K")]
        check: Option<usize>,
    },
    /// Universal coefficient E^n_k(i)
    Ecoef {
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
        #[arg(long)]
        g: usize,
        #[arg(long)]
        k: usize,
        /// Multi-index i_1,...,i_{g-1}
        #[arg(long, value_delimiter = ',')]
        index: Vec<u32>,
    },
    /// Chern-Mather classes of a Jacobian theta divisor
    JacobianClasses {
        #[arg(long)]
        g: usize,
        #[arg(long, value_enum)]
        case: CaseArg,
    },
    /// Jacobian-detection criterion on observed multipliers of w_0, w_1, w_2
    Criterion(CriterionArgs),
    /// Euler characteristic on the bielliptic Prym stratification
    PrymChi(PrymChiArgs),
    /// Chern-Mather classes on E'_{g,t}
    PrymClasses {
        #[arg(long)]
        g: usize,
        #[arg(long)]
        t: usize,
    },
    /// Divisibility report excluding hyperelliptic data in dimension 5
    Genus5,
}

#[derive(Debug, Args)]
pub struct CriterionArgs {
    #[arg(long)]
    pub g: usize,
    #[arg(long, value_enum)]
    pub case: CaseArg,
    #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
    pub c0: Rational,
    #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
    pub c1: Rational,
    #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
    pub c2: Rational,
    /// Codimension of the problematic locus
    #[arg(long, allow_hyphen_values = true)]
    pub codim: i64,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("stratum").args(["t", "partition", "sweep"]).required(true)))]
pub struct PrymChiArgs {
    /// Genus; the upper bound of the grid with --sweep
    #[arg(long)]
    pub g: usize,
    #[arg(long)]
    pub t: Option<usize>,
    #[arg(long, value_delimiter = ',')]
    pub partition: Option<Vec<usize>>,
    /// Number of extra singular points; the upper bound with --sweep
    #[arg(long)]
    pub k: u64,
    /// Every E'_{g,t}, S_(g) and S_(1,g-1) for 4 <= g <= G and 0 <= k <= K
    #[arg(long)]
    pub sweep: bool,
}
