//! Manufactured-solution verification: exact cases, refinement studies
//! and report output.

mod cases;
mod convergence;
mod report;

pub use cases::{
    build_case, build_case_unchecked, CaseParams, Example, ManufacturedCase, MAX_HORIZON,
    RESIDUAL_SAMPLES, RESIDUAL_TOL,
};
pub use convergence::{
    measure, observed_rate, run_convergence, run_table, run_table4, table_cases, ConvergenceReport,
    Refinement, ReportRow, Table, TABLE1_BETAS, TABLE2_ALPHAS, TABLE3_GAMMAS, TABLE4_PAIRS,
    TABLE_CELLS, TABLE_STEPS,
};
pub use report::{format_sci, to_csv_string, write_csv, CSV_HEADER};
