//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any
//! failure.

use std::f64::consts::PI;
use std::process::ExitCode;
use std::time::Instant;

use fade_core::fractional::{
    caputo_exp_decay, caputo_monomial, caputo_oracle, caputo_sin_pi, FracOrder,
};
use fade_core::pi::{apply_pi, pi_weights};
use fade_core::prelude::*;
use fade_core::selftest::random_problem;
use fade_core::solver::assemble_entrywise;
use fade_core::verification::{run_table, table_cases, ReportRow, Table};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Published `(Rate₂, Rate∞)` at h = 1/8 and h = 1/16, per swept value.
type PublishedRates = [(f64, [(f64, f64); 2]); 4];

type Criterion = (&'static str, fn() -> fade_core::Result<Verdict>);

const TABLE1_EINF: [(f64, [f64; 3]); 4] = [
    (1.2, [4.927313e-3, 1.257808e-3, 3.278200e-4]),
    (1.4, [4.927401e-3, 1.257786e-3, 3.211054e-4]),
    (1.6, [4.924700e-3, 1.257504e-3, 3.028411e-4]),
    (1.8, [4.924700e-3, 1.256610e-3, 2.994302e-4]),
];
const TABLE1_RATES: PublishedRates = [
    (1.2, [(2.0022, 1.9698), (1.9501, 1.9399)]),
    (1.4, [(2.0022, 1.9699), (1.9908, 1.9697)]),
    (1.6, [(2.0021, 1.9694), (2.0842, 2.0539)]),
    (1.8, [(2.0023, 1.9704), (2.1147, 2.0692)]),
];
const TABLE2_RATES: PublishedRates = [
    (0.2, [(2.0059, 1.9795), (1.9084, 1.9209)]),
    (0.4, [(2.0020, 1.9700), (1.7894, 1.8254)]),
    (0.6, [(1.9899, 1.9538), (1.6794, 1.7334)]),
    (0.8, [(1.9600, 1.9241), (1.9567, 1.8944)]),
];
const TABLE3_RATES: PublishedRates = [
    (0.2, [(1.9950, 1.9901), (1.9234, 1.9075)]),
    (0.4, [(1.9976, 1.9792), (1.9113, 1.9158)]),
    (0.6, [(2.0068, 1.9498), (1.9099, 1.9154)]),
    (0.8, [(2.1259, 2.0387), (1.9355, 1.9022)]),
];
const TABLE4_E2: [f64; 4] = [3.4898e-2, 1.3529e-2, 7.5908e-3, 4.8497e-3];

struct Verdict {
    passed: bool,
    detail: String,
}

fn verdict(passed: bool, detail: String) -> Verdict {
    Verdict { passed, detail }
}

fn block(rows: &[ReportRow], value: f64) -> Vec<ReportRow> {
    rows.iter()
        .filter(|r| r.param == Some(value))
        .copied()
        .collect()
}

/// Every published rate within `tol`; lists each miss.
fn compare_rates(table: Table, published: &PublishedRates, tol: f64) -> fade_core::Result<Verdict> {
    let report = run_table(table)?;
    let mut misses = Vec::new();
    let mut worst: f64 = 0.0;
    for (value, rates) in published {
        let rows = block(&report.rows, *value);
        for (row, (p2, pinf)) in rows[1..].iter().zip(rates) {
            for (name, got, want) in [("Rate2", row.rate2, *p2), ("RateInf", row.rate_inf, *pinf)] {
                let got = got.unwrap_or(f64::NAN);
                let diff = (got - want).abs();
                worst = worst.max(diff);
                if diff.is_nan() || diff > tol {
                    misses.push(format!(
                        "param={value} h=1/{:.0} {name} {got:.4} vs {want:.4} (diff {diff:.3})",
                        1.0 / row.h
                    ));
                }
            }
        }
    }
    let detail = if misses.is_empty() {
        format!("16 rate entries within {tol}, worst diff {worst:.3}")
    } else {
        format!(
            "{} of 16 rate entries off by more than {tol}: {}",
            misses.len(),
            misses.join("; ")
        )
    };
    Ok(verdict(misses.is_empty(), detail))
}

fn criterion1() -> fade_core::Result<Verdict> {
    let start = Instant::now();
    let report = run_table(Table::VaryBeta)?;
    let elapsed = start.elapsed().as_secs_f64();
    let mut ok = elapsed < 10.0;
    let (mut worst_rate, mut worst_mag): (f64, f64) = (0.0, 0.0);
    for ((beta, einf), (_, rates)) in TABLE1_EINF.iter().zip(&TABLE1_RATES) {
        let rows = block(&report.rows, *beta);
        for (row, published) in rows.iter().zip(einf) {
            let rel = (row.einf / published - 1.0).abs();
            worst_mag = worst_mag.max(rel);
            ok &= rel <= 0.25;
        }
        let diff = (rows[1].rate_inf.unwrap_or(f64::NAN) - rates[0].1).abs();
        worst_rate = worst_rate.max(diff);
        ok &= diff <= 0.15;
    }
    Ok(verdict(
        ok,
        format!(
            "RateInf(h=1/8) worst diff {worst_rate:.4} (tol 0.15), Einf worst rel diff {:.2}% (tol 25%), runtime {elapsed:.2}s (limit 10s)",
            worst_mag * 100.0
        ),
    ))
}

fn criterion4() -> fade_core::Result<Verdict> {
    let report = run_table(Table::SpaceTime)?;
    let e2: Vec<f64> = report.rows.iter().map(|r| r.e2).collect();
    let within = e2
        .iter()
        .zip(TABLE4_E2)
        .all(|(g, p)| g / p < 2.0 && p / g < 2.0);
    let monotone = e2.windows(2).all(|w| w[1] < w[0]);
    let listing: Vec<String> = e2
        .iter()
        .zip(TABLE4_E2)
        .map(|(g, p)| format!("{g:.4e}/{p:.4e}"))
        .collect();
    Ok(verdict(
        within && monotone,
        format!(
            "E2 computed/published {}; factor-2 {}, monotone {}",
            listing.join(", "),
            within,
            monotone
        ),
    ))
}

fn max_diff(a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max)
}

fn fitted_slope(xs: &[f64], ys: &[f64]) -> f64 {
    let n = xs.len() as f64;
    let xm = xs.iter().sum::<f64>() / n;
    let ym = ys.iter().sum::<f64>() / n;
    let num: f64 = xs.iter().zip(ys).map(|(x, y)| (x - xm) * (y - ym)).sum();
    let den: f64 = xs.iter().map(|x| (x - xm) * (x - xm)).sum();
    num / den
}

fn criterion5() -> fade_core::Result<Verdict> {
    const CELLS: usize = 32;
    const STEPS: [usize; 4] = [10, 20, 40, 80];
    const REFERENCE_STEPS: usize = 2560;
    let log_steps: Vec<f64> = STEPS.iter().map(|&m| (m as f64).log2()).collect();
    let mut ok = true;
    let mut parts = Vec::new();
    for alpha in [0.3, 0.5, 0.8] {
        let case = build_case(
            Example::Example2,
            CaseParams {
                alpha,
                ..CaseParams::example2()
            },
        )?;
        let reference = solve(case.spec(), &Grid::new(CELLS, REFERENCE_STEPS, 1.0)?)?;
        let mut self_err = Vec::new();
        let mut exact_err = Vec::new();
        for &m in &STEPS {
            let grid = Grid::new(CELLS, m, 1.0)?;
            let h = solve(case.spec(), &grid)?;
            self_err.push(max_diff(
                h.final_node_values(),
                reference.final_node_values(),
            ));
            exact_err.push(error_norms(&h, |x, t| case.exact(x, t), &grid).linf);
        }
        let order = -fitted_slope(
            &log_steps,
            &self_err.iter().map(|e| e.log2()).collect::<Vec<_>>(),
        );
        let exact_order = -fitted_slope(
            &log_steps,
            &exact_err.iter().map(|e| e.log2()).collect::<Vec<_>>(),
        );
        let target = 2.0 - alpha;
        ok &= (order - target).abs() <= 0.25;
        parts.push(format!(
            "alpha={alpha}: order {order:.3} vs {target:.1} (vs exact solution, spatial floor included: {exact_order:.3})"
        ));
    }
    Ok(verdict(
        ok,
        format!(
            "N=32, tau=1/10..1/80 against tau=1/2560: {}",
            parts.join("; ")
        ),
    ))
}

fn criterion6() -> fade_core::Result<Verdict> {
    let mut worst_moment: f64 = 0.0;
    let mut worst_exact: f64 = 0.0;
    let orders = [
        FracOrder::dispersive(1.1)?,
        FracOrder::dispersive(1.5)?,
        FracOrder::dispersive(1.9)?,
        FracOrder::advective(0.1)?,
        FracOrder::advective(0.5)?,
        FracOrder::advective(0.9)?,
    ];
    for eta in orders {
        for n in (2..=128).step_by(7).chain([128]) {
            let t = pi_weights(eta, n)?;
            let xs: Vec<f64> = (0..=n).map(|j| j as f64 / n as f64).collect();
            let ones = vec![1.0; n + 1];
            let m = eta.ceil();
            for r in 1..n {
                let s: f64 = t.row(r).iter().sum();
                worst_moment =
                    worst_moment.max(((s - t.expected_row_sum(r)) / t.expected_row_sum(r)).abs());
                let x = xs[r];
                // m-th derivative 1 and x: u = x^m/m! and x^(m+1)/(m+1)!
                let (p0, p1) = if m == 1 { (1.0, 2.0) } else { (2.0, 6.0) };
                let c = apply_pi(&t, &ones, r)? - caputo_monomial(m, eta, x) / p0;
                let l = apply_pi(&t, &xs, r)? - caputo_monomial(m + 1, eta, x) / p1;
                worst_exact = worst_exact.max(c.abs()).max(l.abs());
            }
        }
    }
    Ok(verdict(
        worst_moment <= 1e-12 && worst_exact <= 1e-12,
        format!("row-sum rel err {worst_moment:.2e}, constant/linear exactness err {worst_exact:.2e} (tol 1e-12, N<=128, both kinds)"),
    ))
}

fn criterion7() -> fade_core::Result<Verdict> {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let (mut w_mono, mut w_exp, mut w_sin): (f64, f64, f64) = (0.0, 0.0, 0.0);
    for _ in 0..20 {
        let x: f64 = rng.gen_range(1e-3..=1.0);
        let beta = FracOrder::dispersive(rng.gen_range(1.05..1.95))?;
        let gamma = FracOrder::advective(rng.gen_range(0.05..0.95))?;
        let alpha = FracOrder::temporal(rng.gen_range(0.05..0.95))?;
        for eta in [beta, gamma] {
            let m = eta.ceil();
            for p in m..=6 {
                let coef: f64 = ((p - m + 1)..=p).map(|k| k as f64).product();
                let oracle = caputo_oracle(|s| coef * s.powi((p - m) as i32), eta, x)?;
                w_mono = w_mono.max((caputo_monomial(p, eta, x) - oracle).abs());
            }
        }
        let t = rng.gen_range(1e-3..=2.0);
        let oracle = caputo_oracle(|s| -(-s).exp(), alpha, t)?;
        w_exp = w_exp.max((caputo_exp_decay(alpha, t)? - oracle).abs());
        let ob = caputo_oracle(|s| -PI * PI * (PI * s).sin(), beta, x)?;
        let og = caputo_oracle(|s| PI * (PI * s).cos(), gamma, x)?;
        w_sin = w_sin
            .max((caputo_sin_pi(beta, x)? - ob).abs())
            .max((caputo_sin_pi(gamma, x)? - og).abs());
    }
    Ok(verdict(
        w_mono <= 1e-10 && w_exp <= 1e-10 && w_sin <= 1e-10,
        format!("20 random points: monomial {w_mono:.2e}, exp decay {w_exp:.2e}, sin(pi x) {w_sin:.2e} (tol 1e-10)"),
    ))
}

fn criterion8() -> fade_core::Result<Verdict> {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut worst: f64 = 0.0;
    for _ in 0..10 {
        let (spec, grid) = random_problem(&mut rng)?;
        let a = assemble(&spec, &grid)?;
        let b = assemble_entrywise(&spec, &grid)?;
        worst = worst.max((a.system() - b).amax());
    }
    Ok(verdict(
        worst <= 1e-12,
        format!("10 random sets, max |A - A_entrywise| = {worst:.2e} (tol 1e-12)"),
    ))
}

fn criterion9() -> fade_core::Result<Verdict> {
    let mut worst: f64 = 0.0;
    let mut count = 0;
    for table in [
        Table::VaryBeta,
        Table::VaryAlpha,
        Table::VaryGamma,
        Table::SpaceTime,
    ] {
        for (_, example, params) in table_cases(table) {
            worst = worst.max(build_case(example, params)?.max_forcing_residual(50)?);
            count += 1;
        }
    }
    Ok(verdict(
        worst <= 1e-8,
        format!("{count} parameter sets, max residual {worst:.2e} (tol 1e-8)"),
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("1 vary-beta table", criterion1),
        ("2 vary-alpha rates", || {
            compare_rates(Table::VaryAlpha, &TABLE2_RATES, 0.2)
        }),
        ("3 vary-gamma rates", || {
            compare_rates(Table::VaryGamma, &TABLE3_RATES, 0.2)
        }),
        ("4 space-time E2", criterion4),
        ("5 temporal order", criterion5),
        ("6 quadrature exactness", criterion6),
        ("7 oracle equivalence", criterion7),
        ("8 dual-path assembly", criterion8),
        ("9 residual closure", criterion9),
    ];
    let mut failures = 0;
    for (name, run) in criteria {
        let v = run().unwrap_or_else(|e| verdict(false, format!("error: {e}")));
        if !v.passed {
            failures += 1;
        }
        println!(
            "{} criterion {name}: {}",
            if v.passed { "PASS" } else { "FAIL" },
            v.detail
        );
    }
    println!("acceptance: {} passed, {failures} failed", 9 - failures);
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
