//! Bernstein polynomials of degree `N` on `[0, 1]`.
//!
//! `B_{i,N}(x) = C(N,i) x^i (1-x)^(N-i)`, taken to be zero for `i < 0`
//! or `i > N`.

use nalgebra::DMatrix;

use crate::error::{FadeError, Result};

fn check_unit(x: f64) -> Result<()> {
    if (0.0..=1.0).contains(&x) {
        Ok(())
    } else {
        Err(FadeError::Domain(format!(
            "Bernstein argument {x} outside [0, 1]"
        )))
    }
}

/// `C(n, i)` as a float; exact for every `n` used here.
fn binomial(n: usize, i: usize) -> f64 {
    let i = i.min(n - i);
    (1..=i).fold(1.0, |acc, k| acc * (n - i + k) as f64 / k as f64)
}

/// Evaluates a single basis function. Indices outside `0..=n` give 0.
pub fn eval_basis(n: usize, i: i64, x: f64) -> Result<f64> {
    check_unit(x)?;
    if i < 0 || i as usize > n {
        return Ok(0.0);
    }
    let i = i as usize;
    Ok(binomial(n, i) * x.powi(i as i32) * (1.0 - x).powi((n - i) as i32))
}

/// All `N+1` basis values at `x` via the triangular recurrence
/// `B_{i,k} = (1-x) B_{i,k-1} + x B_{i-1,k-1}`.
pub fn eval_all(n: usize, x: f64) -> Result<Vec<f64>> {
    check_unit(x)?;
    Ok(eval_all_unchecked(n, x))
}

fn eval_all_unchecked(n: usize, x: f64) -> Vec<f64> {
    let mut b = vec![0.0; n + 1];
    b[0] = 1.0;
    let y = 1.0 - x;
    for k in 1..=n {
        for i in (1..=k).rev() {
            b[i] = y * b[i] + x * b[i - 1];
        }
        b[0] *= y;
    }
    b
}

/// Degree-`N` Bernstein basis with the zero-extension convention.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BernsteinBasis {
    degree: usize,
}

impl BernsteinBasis {
    pub fn new(degree: usize) -> Result<Self> {
        if degree < 2 {
            return Err(FadeError::Config(format!(
                "Bernstein degree must be at least 2, got {degree}"
            )));
        }
        Ok(Self { degree })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn eval(&self, i: i64, x: f64) -> Result<f64> {
        eval_basis(self.degree, i, x)
    }

    pub fn eval_all(&self, x: f64) -> Result<Vec<f64>> {
        eval_all(self.degree, x)
    }
}

/// Coefficients of the three-term first-derivative and five-term
/// second-derivative identities
///
/// `B'_{i,N}  = Σ_{k=-1}^{1} d1_{k,i} B_{i+k,N}`
/// `B''_{i,N} = Σ_{k=-2}^{2} d2_{k,i} B_{i+k,N}`.
#[derive(Debug, Clone, PartialEq)]
pub struct DerivCoeffs {
    degree: usize,
    d1: Vec<[f64; 3]>,
    d2: Vec<[f64; 5]>,
}

impl DerivCoeffs {
    pub fn degree(&self) -> usize {
        self.degree
    }

    /// `d^{(1)}_{k,i}` for `k ∈ {-1, 0, 1}`.
    pub fn d1(&self, k: i64, i: usize) -> f64 {
        assert!((-1..=1).contains(&k), "first-derivative offset {k}");
        self.d1[i][(k + 1) as usize]
    }

    /// `d^{(2)}_{k,i}` for `k ∈ {-2, .., 2}`.
    pub fn d2(&self, k: i64, i: usize) -> f64 {
        assert!((-2..=2).contains(&k), "second-derivative offset {k}");
        self.d2[i][(k + 2) as usize]
    }

    /// Coefficients for derivative order `p ∈ {1, 2}` at offset `k`.
    pub fn get(&self, p: usize, k: i64, i: usize) -> f64 {
        match p {
            1 => self.d1(k, i),
            2 => self.d2(k, i),
            _ => panic!("derivative order {p} not supported"),
        }
    }
}

pub fn deriv_coeffs(n: usize) -> Result<DerivCoeffs> {
    BernsteinBasis::new(n)?;
    let nf = n as f64;
    let d1 = (0..=n)
        .map(|i| {
            let i = i as f64;
            [nf - i + 1.0, -(nf - 2.0 * i), -(i + 1.0)]
        })
        .collect();
    let d2 = (0..=n)
        .map(|i| {
            let i = i as f64;
            [
                (nf - i + 2.0) * (nf - i + 1.0),
                -2.0 * (nf - i + 1.0) * (nf - 2.0 * i + 1.0),
                nf * nf - 6.0 * nf * i + 6.0 * i * i - nf,
                2.0 * (i + 1.0) * (nf - 2.0 * i - 1.0),
                (i + 2.0) * (i + 1.0),
            ]
        })
        .collect();
    Ok(DerivCoeffs { degree: n, d1, d2 })
}

/// `(N-1)×(N-1)` matrix with entry `(r, i) = B_{i+1,N}(x_{r+1})` for the
/// interior nodes `x_1 < .. < x_{N-1}`.
pub fn collocation_matrix(n: usize, nodes: &[f64]) -> Result<DMatrix<f64>> {
    BernsteinBasis::new(n)?;
    if nodes.len() != n - 1 {
        return Err(FadeError::Config(format!(
            "degree {n} collocation needs {} interior nodes, got {}",
            n - 1,
            nodes.len()
        )));
    }
    for w in nodes.windows(2) {
        if w[1].partial_cmp(&w[0]) != Some(std::cmp::Ordering::Greater) {
            return Err(FadeError::Config(format!(
                "collocation nodes must be strictly increasing ({} then {})",
                w[0], w[1]
            )));
        }
    }
    if let (Some(&first), Some(&last)) = (nodes.first(), nodes.last()) {
        if !(first > 0.0 && last < 1.0) {
            return Err(FadeError::Config(
                "collocation nodes must lie in (0, 1)".into(),
            ));
        }
    }
    let mut m = DMatrix::zeros(n - 1, n - 1);
    for (r, &x) in nodes.iter().enumerate() {
        let b = eval_all_unchecked(n, x);
        for i in 1..n {
            m[(r, i - 1)] = b[i];
        }
    }
    Ok(m)
}

/// Derivative matrices `D1`, `D2` with `rows = nodes.len()` and `N-1`
/// columns; entry `(j, i-1) = Σ_s d^{(p)}_{s,i} B_{i+s,N}(x_j)`.
pub fn derivative_matrices(
    n: usize,
    nodes: &[f64],
    coeffs: &DerivCoeffs,
) -> Result<(DMatrix<f64>, DMatrix<f64>)> {
    if coeffs.degree() != n {
        return Err(FadeError::Contract(format!(
            "derivative coefficients are for degree {}, basis has degree {n}",
            coeffs.degree()
        )));
    }
    let mut d1 = DMatrix::zeros(nodes.len(), n - 1);
    let mut d2 = DMatrix::zeros(nodes.len(), n - 1);
    let at = |b: &[f64], idx: i64| -> f64 {
        if idx < 0 || idx as usize > n {
            0.0
        } else {
            b[idx as usize]
        }
    };
    for (j, &x) in nodes.iter().enumerate() {
        let b = eval_all(n, x)?;
        for i in 1..n {
            let ii = i as i64;
            d1[(j, i - 1)] = (-1..=1).map(|s| coeffs.d1(s, i) * at(&b, ii + s)).sum();
            d2[(j, i - 1)] = (-2..=2).map(|s| coeffs.d2(s, i) * at(&b, ii + s)).sum();
        }
    }
    Ok((d1, d2))
}

/// `Σ_{i=1}^{N-1} c_i B_{i,N}(x)` with `N = coeffs.len() + 1`.
pub fn eval_series(coeffs: &[f64], x: f64) -> Result<f64> {
    let n = coeffs.len() + 1;
    let b = eval_all(n, x)?;
    Ok(coeffs.iter().zip(&b[1..n]).map(|(c, v)| c * v).sum())
}
