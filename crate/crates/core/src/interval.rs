//! The interval model.
//!
//! `D_0 = -i d/dx` on `L^2([0, 1])` with periodic boundary conditions has
//! eigenvectors `e^{2 pi i n x}` with eigenvalues `2 pi n`. `P+` projects onto
//! the modes `n >= 0` and `P- = 1 - P+`. Multiplication by `x` compresses to
//!
//! ```text
//! P+ x P- e^{-2 pi i n x} = -1/(2 pi i) sum_{l >= 0} 1/(n + l) e^{2 pi i l x},   n >= 1.
//! ```
//!
//! Column modes are stored by their positive label `n`, standing for
//! `e^{-2 pi i n x}`, so every denominator is `n + l`.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::DenseMatrix;
use crate::specfun::{digamma_positive, trigamma_positive};
use crate::summation::{self, CompensatedSum};
use crate::witness::{harmonic_profile, WitnessVector};

/// Eigenvector `e^{2 pi i n x}` of `D_0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct FourierMode(pub i64);

impl FourierMode {
    pub fn eigenvalue(self) -> f64 {
        2.0 * PI * self.0 as f64
    }

    /// In the range of `P+`.
    pub fn is_nonnegative(self) -> bool {
        self.0 >= 0
    }

    pub fn label(self) -> String {
        format!("e{}", self.0)
    }
}

/// `<e_l | x | e_n>` in the Fourier basis.
pub fn position_matrix_element(l: i64, n: i64) -> Complex64 {
    if l == n {
        Complex64::new(0.5, 0.0)
    } else {
        // 1 / (2 pi i (n - l)) = -i / (2 pi (n - l))
        Complex64::new(0.0, -1.0 / (2.0 * PI * (n - l) as f64))
    }
}

/// Entry of `P+ x P-` between row mode `l >= 0` and column mode `-n`, `n >= 1`.
#[inline]
pub fn compression_entry(l: u64, n: u64) -> Complex64 {
    // -1 / (2 pi i (n + l)) = i / (2 pi (n + l))
    Complex64::new(0.0, 1.0 / (2.0 * PI * (n + l) as f64))
}

/// Finite section of `P+ x P-`: rows `l = 0..n_pos`, columns `e^{-2 pi i n x}`
/// for `n = 1..=n_neg`.
#[derive(Debug, Clone)]
pub struct IntervalCompression {
    pub matrix: DenseMatrix,
    pub row_modes: Vec<FourierMode>,
    pub col_modes: Vec<FourierMode>,
}

impl IntervalCompression {
    pub fn entry(&self, row: usize, col: usize) -> Complex64 {
        self.matrix.get(row, col)
    }
}

pub fn assemble_interval_compression(n_pos: usize, n_neg: usize) -> Result<IntervalCompression> {
    if n_pos == 0 || n_neg == 0 {
        return Err(Error::Config("interval compression needs at least one row and column".into()));
    }
    let matrix = DenseMatrix::try_from_fn(n_pos, n_neg, |l, j| compression_entry(l as u64, j as u64 + 1))?;
    Ok(IntervalCompression {
        matrix,
        row_modes: (0..n_pos as i64).map(FourierMode).collect(),
        col_modes: (1..=n_neg as i64).map(|n| FourierMode(-n)).collect(),
    })
}

/// `xi_m = sum_{n >= 1} sqrt(m)/(n + m) e^{-2 pi i n x}`, truncated after `len` terms.
pub fn interval_witness(m: u64, len: usize) -> Result<WitnessVector<FourierMode>> {
    if m == 0 || len == 0 {
        return Err(Error::Config("witness index and truncation must be positive".into()));
    }
    let (coefficients, tail_bound) = harmonic_profile(m, len);
    Ok(WitnessVector {
        modes: (1..=len as i64).map(|n| FourierMode(-n)).collect(),
        coefficients,
        truncation: len,
        tail_bound,
        index: m,
    })
}

/// `<zeta_m | e^{2 pi i p x}>` for `zeta_m = P+ x P- xi_m`, in closed form.
pub fn interval_image_pairing(m: u64, p: i64) -> Result<Complex64> {
    if m == 0 {
        return Err(Error::Config("witness index must be positive".into()));
    }
    if p < 0 {
        return Ok(Complex64::new(0.0, 0.0));
    }
    let mf = m as f64;
    let pf = p as f64;
    let series = if p as u64 == m {
        trigamma_positive(mf + 1.0)
    } else {
        (digamma_positive(mf + 1.0) - digamma_positive(pf + 1.0)) / (mf - pf)
    };
    // -sqrt(m) / (2 pi i) = i sqrt(m) / (2 pi)
    Ok(Complex64::new(0.0, mf.sqrt() * series / (2.0 * PI)))
}

/// `zeta_m` restricted to rows `l < rows`, computed from `xi_m` truncated
/// to `cols` terms by direct row sums in column order.
pub fn interval_image(m: u64, rows: usize, cols: usize) -> Result<Vec<Complex64>> {
    let xi = interval_witness(m, cols)?;
    Ok((0..rows as u64)
        .map(|l| {
            let mut acc = CompensatedSum::new();
            for (j, c) in xi.coefficients.iter().enumerate() {
                acc.add((compression_entry(l, j as u64 + 1) * c).im);
            }
            Complex64::new(0.0, acc.value())
        })
        .collect())
}

/// Norm of the truncated image `zeta_m`: the `rows x cols` section of
/// `P+ x P-` applied to `xi_m` truncated to `cols` terms.
///
/// Every row sum and every squared row is nonnegative, so enlarging the
/// section can only increase the result; it is a lower bound for `||zeta_m||`.
/// Row sums are telescoped through harmonic numbers, so the cost is
/// `O(rows + cols)` rather than `O(rows * cols)`.
pub fn interval_image_norm_lowerbound(m: u64, rows: usize, cols: usize) -> Result<f64> {
    if m == 0 || rows == 0 || cols == 0 {
        return Err(Error::Config("witness index and truncation must be positive".into()));
    }
    let sums = truncated_row_sums(m, rows, cols);
    let mf = m as f64;
    Ok(mf.sqrt() / (2.0 * PI) * summation::sum_of_squares(sums).sqrt())
}

/// `S(l) = sum_{n=1}^{cols} 1/((n + m)(n + l))` for `l = 0..rows`.
fn truncated_row_sums(m: u64, rows: usize, cols: usize) -> Vec<f64> {
    let m_idx = m as usize;
    let top = cols + rows.max(m_idx + 1);
    let harmonic = harmonic_numbers(top);
    let h_m_tail = harmonic[cols + m_idx] - harmonic[m_idx];
    let mf = m as f64;
    (0..rows)
        .map(|l| {
            if l == m_idx {
                trigamma_positive(mf + 1.0) - trigamma_positive(mf + cols as f64 + 1.0)
            } else {
                let h_l_tail = harmonic[cols + l] - harmonic[l];
                (h_l_tail - h_m_tail) / (mf - l as f64)
            }
        })
        .collect()
}

/// `H_0..=H_top` by a compensated running sum.
fn harmonic_numbers(top: usize) -> Vec<f64> {
    let mut out = Vec::with_capacity(top + 1);
    let mut acc = CompensatedSum::new();
    out.push(0.0);
    for j in 1..=top {
        acc.add(1.0 / j as f64);
        out.push(acc.value());
    }
    out
}

/// One CSV row of the interval witness report.
#[derive(Debug, Clone, Serialize)]
pub struct IntervalReportRow {
    pub m: u64,
    #[serde(rename = "L")]
    pub cols: usize,
    #[serde(rename = "K")]
    pub rows: usize,
    pub xi_norm_sq: f64,
    pub xi_norm_sq_closed: f64,
    pub zeta_norm_lower_sq: f64,
    pub bound_1_over_4pi2: f64,
    pub pairing_p0: f64,
    pub pairing_p1: f64,
    pub verdict: String,
}
