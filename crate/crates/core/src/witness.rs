//! Truncated witness vectors with rigorous tails.

use num_complex::Complex64;
use serde::Serialize;

use crate::specfun::trigamma_positive;
use crate::summation;

/// Coefficients of a witness vector over labeled modes, truncated after
/// `truncation` terms. `tail_bound` bounds the l2 norm of the omitted
/// coefficients.
#[derive(Debug, Clone, Serialize)]
pub struct WitnessVector<M> {
    pub modes: Vec<M>,
    pub coefficients: Vec<Complex64>,
    pub truncation: usize,
    pub tail_bound: f64,
    /// Position of the vector in its sequence (`m` or `n`).
    pub index: u64,
}

impl<M> WitnessVector<M> {
    /// Squared norm of the stored coefficients.
    pub fn stored_norm_sq(&self) -> f64 {
        summation::sum(self.coefficients.iter().map(Complex64::norm_sqr))
    }

    /// Squared norm including the omitted tail.
    pub fn norm_sq_with_tail(&self) -> f64 {
        self.stored_norm_sq() + self.tail_bound * self.tail_bound
    }
}

/// The shared coefficient profile `sqrt(m) / (j + m)`, `j = 1..=len`, used by
/// both witness sequences, with the exact tail `sqrt(m psi'(m + len + 1))`.
pub(crate) fn harmonic_profile(m: u64, len: usize) -> (Vec<Complex64>, f64) {
    let mf = m as f64;
    let root = mf.sqrt();
    let coefficients = (1..=len)
        .map(|j| Complex64::new(root / (j as f64 + mf), 0.0))
        .collect();
    let tail_sq = mf * trigamma_positive(mf + len as f64 + 1.0);
    (coefficients, tail_sq.sqrt())
}

/// `m psi'(m + 1)`, the squared norm of the full witness vector.
pub fn witness_norm_sq(m: u64) -> f64 {
    let mf = m as f64;
    mf * trigamma_positive(mf + 1.0)
}
