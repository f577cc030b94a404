mod args;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::error::ErrorKind;
use clap::{CommandFactory, Parser};
use fade_core::pi::pi_weights;
use fade_core::prelude::*;
use fade_core::selftest;
use fade_core::verification::{run_table, write_csv, ManufacturedCase, Table};

use args::{
    Cli, Command, ConvergenceArgs, Operator, ProblemArgs, SolveArgs, Study, TableArgs, WeightsArgs,
};

const THREADS_VAR: &str = "FADE_THREADS";

fn usage_error(msg: impl std::fmt::Display) -> ! {
    Cli::command().error(ErrorKind::ValueValidation, msg).exit()
}

fn open_out(path: &Path) -> Result<Box<dyn Write>> {
    if path.as_os_str() == "-" {
        Ok(Box::new(BufWriter::new(io::stdout().lock())))
    } else {
        let file =
            File::create(path).with_context(|| format!("cannot create {}", path.display()))?;
        Ok(Box::new(BufWriter::new(file)))
    }
}

fn configure_threads() {
    let Ok(raw) = std::env::var(THREADS_VAR) else {
        return;
    };
    let threads = match raw.trim().parse::<usize>() {
        Ok(n) if n > 0 => n,
        _ => usage_error(format!(
            "{THREADS_VAR} must be a positive integer, got `{raw}`"
        )),
    };
    // the pool can only be built once per process; a second build is harmless
    let _ = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global();
}

/// Builds the manufactured case, turning invalid combinations into usage errors.
fn case_from(problem: &ProblemArgs) -> ManufacturedCase {
    build_case(problem.case.into(), problem.params()).unwrap_or_else(|e| match e {
        FadeError::Config(_) | FadeError::Domain(_) => usage_error(e),
        other => {
            eprintln!("error: {other}");
            std::process::exit(1)
        }
    })
}

fn grid_from(cells: u32, steps: u32, horizon: f64) -> Grid {
    Grid::new(cells as usize, steps as usize, horizon).unwrap_or_else(|e| usage_error(e))
}

fn run_solve(a: &SolveArgs) -> Result<()> {
    let case = case_from(&a.problem);
    let grid = grid_from(a.cells, a.steps, case.params().horizon);
    let history = solve(case.spec(), &grid)?;
    let t = grid.horizon();
    let mut out = open_out(&a.out.out)?;
    writeln!(out, "x,numerical,exact,error")?;
    let interior = history.final_node_values();
    for r in 0..=grid.cells() {
        let x = grid.node(r);
        let u = if r == 0 || r == grid.cells() {
            0.0
        } else {
            interior[r - 1]
        };
        let exact = case.exact(x, t);
        writeln!(out, "{x:.16e},{u:.16e},{exact:.16e},{:.16e}", exact - u)?;
    }
    out.flush()?;
    let norms = error_norms(&history, |x, t| case.exact(x, t), &grid);
    eprintln!(
        "{} N={} M={}: E2={:.6e} Einf={:.6e}",
        case.example(),
        grid.cells(),
        grid.steps(),
        norms.l2,
        norms.linf
    );
    Ok(())
}

fn run_convergence_study(a: &ConvergenceArgs) -> Result<()> {
    let case = case_from(&a.problem);
    let refinement = match a.study {
        Study::Space => Refinement::Space {
            steps: a.steps as usize,
            cells: a.vary.clone(),
        },
        Study::Time => Refinement::Time {
            cells: a.cells as usize,
            steps: a.vary.clone(),
        },
    };
    if a.vary.contains(&0) {
        usage_error("--vary entries must be positive");
    }
    if a.study == Study::Space && a.vary.first().is_some_and(|&n| n < 2) {
        usage_error("a space study needs N >= 2");
    }
    if let Err(e) = refinement.validate() {
        usage_error(e);
    }
    let report = run_convergence(&case, &refinement)?;
    let mut out = open_out(&a.out.out)?;
    write_csv(&report, &mut out)?;
    out.flush()?;
    Ok(())
}

fn run_table_sweep(a: &TableArgs) -> Result<()> {
    let table = Table::from_number(a.table).unwrap_or_else(|e| usage_error(e));
    let report = run_table(table)?;
    let mut out = open_out(&a.out.out)?;
    write_csv(&report, &mut out)?;
    out.flush()?;
    Ok(())
}

fn run_weights(a: &WeightsArgs) -> Result<()> {
    let order = match a.operator {
        Operator::Beta => FracOrder::dispersive(a.beta)?,
        Operator::Gamma => FracOrder::advective(a.gamma)?,
    };
    let table = pi_weights(order, a.cells as usize)?;
    let mut out = open_out(&a.out.out)?;
    writeln!(out, "r,j,w")?;
    for (r, j, w) in table.entries() {
        writeln!(out, "{r},{j},{w:.16e}")?;
    }
    out.flush()?;
    eprintln!("{order} N={}: nu={:.16e}", a.cells, table.nu());
    Ok(())
}

fn run_selftest() -> bool {
    let outcomes = selftest::run_all();
    for o in &outcomes {
        println!(
            "{} {}: {}",
            if o.passed { "PASS" } else { "FAIL" },
            o.name,
            o.detail
        );
    }
    outcomes.iter().all(|o| o.passed)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    configure_threads();
    let result = match &cli.command {
        Command::Solve(a) => run_solve(a),
        Command::Convergence(a) => run_convergence_study(a),
        Command::Table(a) => run_table_sweep(a),
        Command::Weights(a) => run_weights(a),
        Command::Selftest => {
            return if run_selftest() {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            };
        }
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
