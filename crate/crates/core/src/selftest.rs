//! Built-in consistency suites run by `fade selftest`.
//!
//! Each suite returns one [`CheckOutcome`]; thresholds are the ones the
//! individual modules promise.

use std::f64::consts::PI;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bernstein::{deriv_coeffs, eval_all, eval_basis};
use crate::error::Result;
use crate::fractional::{l1_weights, FracOrder};
use crate::gamma::gamma_real;
use crate::pi::pi_weights;
use crate::solver::{assemble, assemble_entrywise, Grid, ProblemSpec};
use crate::verification::{build_case, table_cases, CaseParams, Example, Table};

#[derive(Debug, Clone, PartialEq)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl CheckOutcome {
    fn from_worst(name: &'static str, worst: f64, tol: f64) -> Self {
        Self {
            name,
            passed: worst <= tol,
            detail: format!("worst deviation {worst:.3e} (tolerance {tol:.0e})"),
        }
    }

    fn from_result(name: &'static str, r: Result<CheckOutcome>) -> Self {
        r.unwrap_or_else(|e| Self {
            name,
            passed: false,
            detail: format!("error: {e}"),
        })
    }
}

const SEED: u64 = 20_240_601;

pub fn check_gamma() -> CheckOutcome {
    let mut worst = 0.0_f64;
    let mut fact = 1.0;
    for n in 1..=50u32 {
        if n > 1 {
            fact *= (n - 1) as f64;
        }
        let g = gamma_real(n as f64).unwrap_or(f64::NAN);
        worst = worst.max(((g - fact) / fact).abs());
    }
    let rt = PI.sqrt();
    for (x, exact) in [(0.5, rt), (1.5, rt / 2.0), (2.5, 0.75 * rt)] {
        let g = gamma_real(x).unwrap_or(f64::NAN);
        worst = worst.max(((g - exact) / exact).abs());
    }
    CheckOutcome::from_worst("gamma spot values", worst, 1e-12)
}

pub fn check_l1_telescoping() -> CheckOutcome {
    CheckOutcome::from_result(
        "L1 telescoping",
        (|| {
            let mut worst = 0.0_f64;
            let mut monotone = true;
            for a10 in 1..=9 {
                let alpha = FracOrder::temporal(a10 as f64 / 10.0)?;
                for k in 0..=200 {
                    let w = l1_weights(alpha, k, 0.01)?;
                    let sum: f64 = w.a().iter().sum();
                    let exact = ((k + 1) as f64).powf(1.0 - alpha.value());
                    worst = worst.max(((sum - exact) / exact).abs());
                    monotone &= w.a().windows(2).all(|p| p[0] < p[1]) && w.a()[k] == 1.0;
                }
            }
            let mut out = CheckOutcome::from_worst("L1 telescoping", worst, 1e-12);
            if !monotone {
                out.passed = false;
                out.detail.push_str("; weights not strictly increasing");
            }
            Ok(out)
        })(),
    )
}

pub fn check_pi_moments() -> CheckOutcome {
    CheckOutcome::from_result(
        "PI moment identities",
        (|| {
            let mut worst = 0.0_f64;
            let orders = [
                FracOrder::dispersive(1.1)?,
                FracOrder::dispersive(1.5)?,
                FracOrder::dispersive(1.9)?,
                FracOrder::advective(0.1)?,
                FracOrder::advective(0.5)?,
                FracOrder::advective(0.9)?,
            ];
            for eta in orders {
                for n in [2, 3, 7, 16, 33, 64, 128] {
                    let t = pi_weights(eta, n)?;
                    for r in 1..n {
                        let s: f64 = t.row(r).iter().sum();
                        let e = t.expected_row_sum(r);
                        worst = worst.max(((s - e) / e).abs());
                    }
                }
            }
            Ok(CheckOutcome::from_worst(
                "PI moment identities",
                worst,
                1e-12,
            ))
        })(),
    )
}

pub fn check_bernstein() -> CheckOutcome {
    CheckOutcome::from_result(
        "Bernstein identities",
        (|| {
            let mut rng = ChaCha8Rng::seed_from_u64(SEED);
            let mut worst = 0.0_f64;
            for _ in 0..100 {
                let x: f64 = rng.gen_range(0.0..=1.0);
                let n = rng.gen_range(2..=32usize);
                let b = eval_all(n, x)?;
                worst = worst.max((b.iter().sum::<f64>() - 1.0).abs());
                if b.iter().any(|&v| !(-1e-14..=1.0 + 1e-14).contains(&v)) {
                    worst = worst.max(1.0);
                }
            }
            // derivative identities against the degree-lowering formulas
            let mut worst_deriv = 0.0_f64;
            for n in 2..=32usize {
                let d = deriv_coeffs(n)?;
                let nf = n as f64;
                for _ in 0..4 {
                    let x: f64 = rng.gen_range(0.0..=1.0);
                    for i in 0..=n as i64 {
                        let b = |j: i64, deg: usize| eval_basis(deg, j, x);
                        let first: f64 = (-1..=1)
                            .map(|s| d.d1(s, i as usize) * b(i + s, n).unwrap())
                            .sum();
                        let exact1 = nf * (b(i - 1, n - 1)? - b(i, n - 1)?);
                        let second: f64 = (-2..=2)
                            .map(|s| d.d2(s, i as usize) * b(i + s, n).unwrap())
                            .sum();
                        let exact2 = nf
                            * (nf - 1.0)
                            * (b(i - 2, n - 2)? - 2.0 * b(i - 1, n - 2)? + b(i, n - 2)?);
                        let scale = nf * nf;
                        worst_deriv = worst_deriv
                            .max((first - exact1).abs() / scale)
                            .max((second - exact2).abs() / (scale * scale));
                    }
                }
            }
            let mut out =
                CheckOutcome::from_worst("Bernstein identities", worst.max(worst_deriv), 1e-10);
            out.detail = format!(
            "partition/range {worst:.3e}, derivative identities {worst_deriv:.3e} (tolerance 1e-10)"
        );
            Ok(out)
        })(),
    )
}

/// Random parameter set for assembly checks.
pub fn random_problem(rng: &mut ChaCha8Rng) -> Result<(ProblemSpec, Grid)> {
    let spec = ProblemSpec::new(
        FracOrder::temporal(rng.gen_range(0.05..0.95))?,
        FracOrder::dispersive(rng.gen_range(1.05..1.95))?,
        FracOrder::advective(rng.gen_range(0.05..0.95))?,
        rng.gen_range(0.0..2.0),
        rng.gen_range(0.0..5.0),
        rng.gen_range(0.5..2.0),
        |_| 0.0,
    )?;
    let grid = Grid::new(rng.gen_range(2..=12), rng.gen_range(1..=50), spec.horizon())?;
    Ok((spec, grid))
}

pub fn check_dual_assembly() -> CheckOutcome {
    CheckOutcome::from_result(
        "dual-path assembly",
        (|| {
            let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 0xa55e);
            let mut worst = 0.0_f64;
            for _ in 0..10 {
                let (spec, grid) = random_problem(&mut rng)?;
                let a = assemble(&spec, &grid)?;
                let b = assemble_entrywise(&spec, &grid)?;
                worst = worst.max((a.system() - b).amax());
            }
            Ok(CheckOutcome::from_worst("dual-path assembly", worst, 1e-12))
        })(),
    )
}

pub fn check_manufactured_residuals() -> CheckOutcome {
    CheckOutcome::from_result(
        "manufactured residuals",
        (|| {
            let mut sets: Vec<(Example, CaseParams)> = Vec::new();
            for table in [
                Table::VaryBeta,
                Table::VaryAlpha,
                Table::VaryGamma,
                Table::SpaceTime,
            ] {
                sets.extend(table_cases(table).into_iter().map(|(_, e, p)| (e, p)));
            }
            for (example, params) in &sets {
                build_case(*example, *params)?;
            }
            Ok(CheckOutcome {
                name: "manufactured residuals",
                passed: true,
                detail: format!("{} parameter sets close to 1e-8", sets.len()),
            })
        })(),
    )
}

/// Runs every suite in a fixed order.
pub fn run_all() -> Vec<CheckOutcome> {
    vec![
        check_gamma(),
        check_l1_telescoping(),
        check_pi_moments(),
        check_bernstein(),
        check_dual_assembly(),
        check_manufactured_residuals(),
    ]
}
