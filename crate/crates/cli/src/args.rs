use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use fade_core::fractional::FracOrder;
use fade_core::verification::{CaseParams, Example, MAX_HORIZON};

#[derive(Debug, Parser)]
#[command(
    name = "fade",
    version,
    about = "Space-time fractional advection-dispersion solver"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Solve one manufactured case and write nodal values at T.
    Solve(SolveArgs),
    /// Refinement study in space (vary N) or time (vary M).
    Convergence(ConvergenceArgs),
    /// Reproduce one of the error tables (1-4).
    Table(TableArgs),
    /// Dump product-integration weights for one fractional order.
    Weights(WeightsArgs),
    /// Run the built-in consistency suites.
    Selftest,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CaseName {
    Example1,
    Example2,
}

impl From<CaseName> for Example {
    fn from(c: CaseName) -> Self {
        match c {
            CaseName::Example1 => Example::Example1,
            CaseName::Example2 => Example::Example2,
        }
    }
}

/// Problem parameters; unset values fall back to the chosen case.
#[derive(Debug, Clone, Args)]
pub struct ProblemArgs {
    #[arg(long, value_enum, default_value = "example1")]
    pub case: CaseName,
    /// Temporal order, 0 < alpha < 1.
    #[arg(long, value_parser = parse_alpha)]
    pub alpha: Option<f64>,
    /// Dispersive order, 1 < beta < 2.
    #[arg(long, value_parser = parse_beta)]
    pub beta: Option<f64>,
    /// Advective order, 0 < gamma < 1.
    #[arg(long, value_parser = parse_gamma)]
    pub gamma: Option<f64>,
    #[arg(long, value_parser = parse_coefficient)]
    pub kappa1: Option<f64>,
    #[arg(long, value_parser = parse_coefficient)]
    pub kappa2: Option<f64>,
    /// Final time.
    #[arg(long = "T", value_parser = parse_horizon)]
    pub horizon: Option<f64>,
}

impl ProblemArgs {
    pub fn params(&self) -> CaseParams {
        let base = CaseParams::defaults_for(self.case.into());
        CaseParams {
            alpha: self.alpha.unwrap_or(base.alpha),
            beta: self.beta.unwrap_or(base.beta),
            gamma: self.gamma.unwrap_or(base.gamma),
            kappa1: self.kappa1.unwrap_or(base.kappa1),
            kappa2: self.kappa2.unwrap_or(base.kappa2),
            horizon: self.horizon.unwrap_or(base.horizon),
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct OutArgs {
    /// Output path, `-` for stdout.
    #[arg(long, default_value = "-")]
    pub out: PathBuf,
}

#[derive(Debug, Clone, Args)]
pub struct SolveArgs {
    #[command(flatten)]
    pub problem: ProblemArgs,
    /// Spatial cells.
    #[arg(long = "N", default_value_t = 8, value_parser = clap::value_parser!(u32).range(2..))]
    pub cells: u32,
    /// Time steps.
    #[arg(long = "M", default_value_t = 20, value_parser = clap::value_parser!(u32).range(1..))]
    pub steps: u32,
    #[command(flatten)]
    pub out: OutArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Study {
    Space,
    Time,
}

#[derive(Debug, Clone, Args)]
pub struct ConvergenceArgs {
    #[command(flatten)]
    pub problem: ProblemArgs,
    /// Which resolution `--vary` refines.
    #[arg(long, value_enum, default_value = "space")]
    pub study: Study,
    /// Resolutions, each double the previous (N for space, M for time).
    #[arg(long, value_delimiter = ',', default_value = "4,8,16")]
    pub vary: Vec<usize>,
    /// Fixed cells for a time study.
    #[arg(long = "N", default_value_t = 8, value_parser = clap::value_parser!(u32).range(2..))]
    pub cells: u32,
    /// Fixed steps for a space study.
    #[arg(long = "M", default_value_t = 20, value_parser = clap::value_parser!(u32).range(1..))]
    pub steps: u32,
    #[command(flatten)]
    pub out: OutArgs,
}

#[derive(Debug, Clone, Args)]
pub struct TableArgs {
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=4))]
    pub table: u8,
    #[command(flatten)]
    pub out: OutArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Operator {
    Beta,
    Gamma,
}

#[derive(Debug, Clone, Args)]
pub struct WeightsArgs {
    /// Which order's table to dump.
    #[arg(long, value_enum, default_value = "beta")]
    pub operator: Operator,
    #[arg(long, value_parser = parse_beta, default_value_t = 1.5)]
    pub beta: f64,
    #[arg(long, value_parser = parse_gamma, default_value_t = 0.5)]
    pub gamma: f64,
    #[arg(long = "N", default_value_t = 8, value_parser = clap::value_parser!(u32).range(2..))]
    pub cells: u32,
    #[command(flatten)]
    pub out: OutArgs,
}

fn parse_real(s: &str) -> Result<f64, String> {
    let v: f64 = s.parse().map_err(|_| format!("`{s}` is not a number"))?;
    if v.is_finite() {
        Ok(v)
    } else {
        Err(format!("`{s}` is not finite"))
    }
}

fn parse_order(s: &str, make: fn(f64) -> fade_core::Result<FracOrder>) -> Result<f64, String> {
    let v = parse_real(s)?;
    make(v).map(|o| o.value()).map_err(|e| e.to_string())
}

fn parse_alpha(s: &str) -> Result<f64, String> {
    parse_order(s, FracOrder::temporal)
}

fn parse_beta(s: &str) -> Result<f64, String> {
    parse_order(s, FracOrder::dispersive)
}

fn parse_gamma(s: &str) -> Result<f64, String> {
    parse_order(s, FracOrder::advective)
}

fn parse_coefficient(s: &str) -> Result<f64, String> {
    let v = parse_real(s)?;
    if v >= 0.0 {
        Ok(v)
    } else {
        Err(format!("coefficient must be nonnegative, got {v}"))
    }
}

fn parse_horizon(s: &str) -> Result<f64, String> {
    let v = parse_real(s)?;
    if v > 0.0 && v <= MAX_HORIZON {
        Ok(v)
    } else {
        Err(format!("T must lie in (0, {MAX_HORIZON}], got {v}"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;

    #[test]
    fn command_definition_is_consistent() {
        Cli::command().debug_assert();
    }

    #[test]
    fn case_defaults_fill_unset_values() {
        let cli =
            Cli::try_parse_from(["fade", "solve", "--case", "example2", "--kappa2", "3"]).unwrap();
        let Command::Solve(a) = cli.command else {
            panic!("wrong subcommand")
        };
        let p = a.problem.params();
        assert_eq!(
            p,
            CaseParams {
                kappa2: 3.0,
                ..CaseParams::example2()
            }
        );
        assert_eq!((a.cells, a.steps), (8, 20));
    }

    #[test]
    fn order_ranges_checked_while_parsing() {
        assert!(parse_beta("1.5").is_ok());
        assert!(parse_beta("1").is_err());
        assert!(parse_alpha("1.0").is_err());
        assert!(parse_gamma("abc").is_err());
        assert!(parse_horizon("11").is_err());
        assert!(parse_coefficient("inf").is_err());
    }

    #[test]
    fn vary_splits_on_commas() {
        let cli = Cli::try_parse_from([
            "fade",
            "convergence",
            "--study",
            "time",
            "--vary",
            "10,20,40",
        ])
        .unwrap();
        let Command::Convergence(a) = cli.command else {
            panic!("wrong subcommand")
        };
        assert_eq!(a.vary, vec![10, 20, 40]);
        assert_eq!(a.study, Study::Time);
    }
}
