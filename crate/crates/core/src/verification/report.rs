//! CSV encoding of convergence reports.

use std::io::{self, Write};

use crate::verification::ConvergenceReport;

pub const CSV_HEADER: &str = "param,h,tau,E2,rate2,Einf,rateInf";

/// Scientific notation with six significant digits.
pub fn format_sci(v: f64) -> String {
    format!("{v:.5e}")
}

fn opt(v: Option<f64>) -> String {
    v.map(format_sci).unwrap_or_default()
}

pub fn write_csv<W: Write>(report: &ConvergenceReport, mut out: W) -> io::Result<()> {
    writeln!(out, "{CSV_HEADER}")?;
    for row in &report.rows {
        writeln!(
            out,
            "{},{},{},{},{},{},{}",
            opt(row.param),
            format_sci(row.h),
            format_sci(row.tau),
            format_sci(row.e2),
            opt(row.rate2),
            format_sci(row.einf),
            opt(row.rate_inf),
        )?;
    }
    out.flush()
}

pub fn to_csv_string(report: &ConvergenceReport) -> String {
    let mut buf = Vec::new();
    write_csv(report, &mut buf).expect("writing to a Vec cannot fail");
    String::from_utf8(buf).expect("CSV is ASCII")
}
