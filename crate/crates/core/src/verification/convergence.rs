//! Refinement studies and the table sweeps.

use rayon::prelude::*;

use crate::error::{FadeError, Result};
use crate::solver::{error_norms, solve, ErrorNorms, Grid};
use crate::verification::{build_case, CaseParams, Example, ManufacturedCase};

/// One row of a convergence report.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReportRow {
    /// Value of the swept parameter, when the report covers a sweep.
    pub param: Option<f64>,
    pub h: f64,
    pub tau: f64,
    pub e2: f64,
    pub rate2: Option<f64>,
    pub einf: f64,
    pub rate_inf: Option<f64>,
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct ConvergenceReport {
    pub rows: Vec<ReportRow>,
}

impl ConvergenceReport {
    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    /// Rows whose `param` equals `value`.
    pub fn block(&self, value: f64) -> Vec<ReportRow> {
        self.rows
            .iter()
            .filter(|r| r.param == Some(value))
            .copied()
            .collect()
    }

    fn extend_block(&mut self, param: Option<f64>, mut rows: Vec<ReportRow>) {
        for r in &mut rows {
            r.param = param;
        }
        self.rows.extend(rows);
    }
}

/// `log₂(coarse / fine)`.
pub fn observed_rate(coarse: f64, fine: f64) -> f64 {
    (coarse / fine).log2()
}

/// Which resolution a study refines.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Refinement {
    /// Fixed `M`, successive `N`.
    Space { steps: usize, cells: Vec<usize> },
    /// Fixed `N`, successive `M`.
    Time { cells: usize, steps: Vec<usize> },
}

impl Refinement {
    fn grids(&self) -> Vec<(usize, usize)> {
        match self {
            Refinement::Space { steps, cells } => cells.iter().map(|&n| (n, *steps)).collect(),
            Refinement::Time { cells, steps } => steps.iter().map(|&m| (*cells, m)).collect(),
        }
    }

    fn varying(&self) -> &[usize] {
        match self {
            Refinement::Space { cells, .. } => cells,
            Refinement::Time { steps, .. } => steps,
        }
    }

    /// At least two resolutions, each double the previous.
    pub fn validate(&self) -> Result<()> {
        let v = self.varying();
        if v.len() < 2 {
            return Err(FadeError::Config(format!(
                "a convergence study needs at least 2 resolutions, got {}",
                v.len()
            )));
        }
        if let Some(w) = v.windows(2).find(|w| w[1] != 2 * w[0]) {
            return Err(FadeError::Config(format!(
                "each resolution must double the previous one ({} -> {})",
                w[0], w[1]
            )));
        }
        Ok(())
    }
}

/// Solves `case` on one grid and measures the error at `T`.
pub fn measure(case: &ManufacturedCase, cells: usize, steps: usize) -> Result<ErrorNorms> {
    let grid = Grid::new(cells, steps, case.params().horizon)?;
    let history = solve(case.spec(), &grid).map_err(|e| FadeError::Study {
        cell: format!("{} ({}), N={cells}, M={steps}", case.example(), case.spec()),
        source: Box::new(e),
    })?;
    Ok(error_norms(&history, |x, t| case.exact(x, t), &grid))
}

fn rows_for(
    case: &ManufacturedCase,
    grids: &[(usize, usize)],
    with_rates: bool,
) -> Result<Vec<ReportRow>> {
    let horizon = case.params().horizon;
    let norms: Vec<ErrorNorms> = grids
        .par_iter()
        .map(|&(n, m)| measure(case, n, m))
        .collect::<Result<_>>()?;
    let mut rows: Vec<ReportRow> = grids
        .iter()
        .zip(&norms)
        .map(|(&(n, m), e)| ReportRow {
            param: None,
            h: 1.0 / n as f64,
            tau: horizon / m as f64,
            e2: e.l2,
            rate2: None,
            einf: e.linf,
            rate_inf: None,
        })
        .collect();
    if with_rates {
        for i in 1..rows.len() {
            let (prev, cur) = (rows[i - 1], rows[i]);
            rows[i].rate2 = Some(observed_rate(prev.e2, cur.e2));
            rows[i].rate_inf = Some(observed_rate(prev.einf, cur.einf));
        }
    }
    Ok(rows)
}

/// One solve per resolution, with rates from the second row on.
pub fn run_convergence(
    case: &ManufacturedCase,
    refinement: &Refinement,
) -> Result<ConvergenceReport> {
    refinement.validate()?;
    let mut report = ConvergenceReport::default();
    report.extend_block(None, rows_for(case, &refinement.grids(), true)?);
    Ok(report)
}

/// Paired `(N, M)` refinements; no rates since the pairs are not dyadic.
pub fn run_table4(case: &ManufacturedCase, pairs: &[(usize, usize)]) -> Result<ConvergenceReport> {
    let mut report = ConvergenceReport::default();
    report.extend_block(None, rows_for(case, pairs, false)?);
    Ok(report)
}

/// The published error tables.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Table {
    /// Example 1, β ∈ {1.2, 1.4, 1.6, 1.8}.
    VaryBeta,
    /// Example 1 with β = 1.5, α ∈ {0.2, 0.4, 0.6, 0.8}.
    VaryAlpha,
    /// Example 1 with α = 0.5, β = 1.5, γ ∈ {0.2, 0.4, 0.6, 0.8}.
    VaryGamma,
    /// Example 2 with paired space and time refinement.
    SpaceTime,
}

impl Table {
    pub fn from_number(n: u8) -> Result<Self> {
        match n {
            1 => Ok(Table::VaryBeta),
            2 => Ok(Table::VaryAlpha),
            3 => Ok(Table::VaryGamma),
            4 => Ok(Table::SpaceTime),
            _ => Err(FadeError::Config(format!("no table {n}; expected 1-4"))),
        }
    }
}

/// Cells used by the spatial tables.
pub const TABLE_CELLS: [usize; 3] = [4, 8, 16];
/// Time steps for τ = 0.05 at T = 1.
pub const TABLE_STEPS: usize = 20;
/// Swept values for tables 1-3.
pub const TABLE1_BETAS: [f64; 4] = [1.2, 1.4, 1.6, 1.8];
pub const TABLE2_ALPHAS: [f64; 4] = [0.2, 0.4, 0.6, 0.8];
pub const TABLE3_GAMMAS: [f64; 4] = [0.2, 0.4, 0.6, 0.8];
/// `(N, M)` pairs for h ∈ {1/4, 1/6, 1/8, 1/10}, τ ∈ {1/10, 1/20, 1/30, 1/40}.
pub const TABLE4_PAIRS: [(usize, usize); 4] = [(4, 10), (6, 20), (8, 30), (10, 40)];

/// Parameter sets of a table sweep, each tagged with the swept value.
pub fn table_cases(table: Table) -> Vec<(Option<f64>, Example, CaseParams)> {
    let base = CaseParams::example1();
    match table {
        Table::VaryBeta => TABLE1_BETAS
            .iter()
            .map(|&beta| (Some(beta), Example::Example1, CaseParams { beta, ..base }))
            .collect(),
        Table::VaryAlpha => TABLE2_ALPHAS
            .iter()
            .map(|&alpha| (Some(alpha), Example::Example1, CaseParams { alpha, ..base }))
            .collect(),
        Table::VaryGamma => TABLE3_GAMMAS
            .iter()
            .map(|&gamma| {
                (
                    Some(gamma),
                    Example::Example1,
                    CaseParams {
                        alpha: 0.5,
                        gamma,
                        ..base
                    },
                )
            })
            .collect(),
        Table::SpaceTime => vec![(None, Example::Example2, CaseParams::example2())],
    }
}

/// Runs a complete table sweep.
pub fn run_table(table: Table) -> Result<ConvergenceReport> {
    let cases = table_cases(table)
        .into_iter()
        .map(|(param, example, params)| Ok((param, build_case(example, params)?)))
        .collect::<Result<Vec<_>>>()?;
    let mut report = ConvergenceReport::default();
    for (param, case) in &cases {
        let block = match table {
            Table::SpaceTime => run_table4(case, &TABLE4_PAIRS)?,
            _ => run_convergence(
                case,
                &Refinement::Space {
                    steps: TABLE_STEPS,
                    cells: TABLE_CELLS.to_vec(),
                },
            )?,
        };
        report.extend_block(*param, block.rows);
    }
    Ok(report)
}
