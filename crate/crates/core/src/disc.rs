//! The disc model.
//!
//! `D_P` is the Dirac operator on the unit disc with the boundary condition
//! given by the projection `P_0`. Its normalized eigenvectors are
//!
//! ```text
//! |1,n,k,s> = (J_n(r a) e^{-i n t},        s J_{n-1}(r a) e^{-i(n-1)t}) / J_n(a)
//! |2,n,k,s> = (J_{n-1}(r a) e^{i(n-1)t},  -s J_n(r a) e^{i n t})       / J_n(a)
//! ```
//!
//! with `a = alpha_{n-1,k}`, `n, k >= 1`, `s = +-1` and eigenvalue `s a`.
//! Row modes of a compression carry `s = +`, column modes `s = -`, both
//! enumerated lexicographically in `(branch, n, k)`.

use std::f64::consts::PI;
use std::fmt;

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::DenseMatrix;
use crate::specfun::{
    bessel_i, bessel_i_derivative, bessel_j, bessel_j_derivative, digamma_positive, BesselZeroTable,
};
use crate::spinor::{minus_component, shifted_residual, ComponentJet, SpinorJet};
use crate::summation::{self, CompensatedSum};
use crate::witness::{harmonic_profile, WitnessVector};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Branch {
    One,
    Two,
}

impl Branch {
    pub fn number(self) -> u8 {
        match self {
            Branch::One => 1,
            Branch::Two => 2,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> f64 {
        match self {
            Sign::Plus => 1.0,
            Sign::Minus => -1.0,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

/// Eigenvector `|branch, n, k, sign>` of `D_P`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct DiscMode {
    pub branch: Branch,
    pub n: u32,
    pub k: u32,
    pub sign: Sign,
}

/// One component `scale * J_order(r alpha) e^{i angular t}` of a mode.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModeComponent {
    pub angular: i64,
    pub order: u32,
    pub alpha: f64,
    pub scale: f64,
}

fn zero(n: u32, k: u32) -> Result<f64> {
    BesselZeroTable::global().zero(n, k)
}

impl DiscMode {
    pub fn new(branch: Branch, n: u32, k: u32, sign: Sign) -> Result<Self> {
        if n == 0 || k == 0 {
            return Err(Error::InvalidMode(format!("disc modes need n, k >= 1 (got n = {n}, k = {k})")));
        }
        Ok(Self { branch, n, k, sign })
    }

    /// `alpha_{n-1,k}`.
    pub fn alpha(&self) -> Result<f64> {
        zero(self.n - 1, self.k)
    }

    pub fn eigenvalue(&self) -> Result<f64> {
        Ok(self.sign.value() * self.alpha()?)
    }

    /// `1 / J_n(alpha_{n-1,k})`, finite because zeros of `J_{n-1}` and `J_n` interlace.
    pub fn normalization(&self) -> Result<f64> {
        Ok(1.0 / bessel_j(self.n, self.alpha()?))
    }

    /// Upper and lower components, normalization included.
    pub fn components(&self) -> Result<[ModeComponent; 2]> {
        let alpha = self.alpha()?;
        let c = 1.0 / bessel_j(self.n, alpha);
        let s = self.sign.value();
        let n = i64::from(self.n);
        Ok(match self.branch {
            Branch::One => [
                ModeComponent { angular: -n, order: self.n, alpha, scale: c },
                ModeComponent { angular: -(n - 1), order: self.n - 1, alpha, scale: s * c },
            ],
            Branch::Two => [
                ModeComponent { angular: n - 1, order: self.n - 1, alpha, scale: c },
                ModeComponent { angular: n, order: self.n, alpha, scale: -s * c },
            ],
        })
    }

    /// Values and radial derivatives at radius `r`, derivatives by recurrence.
    pub fn jet(&self, r: f64) -> Result<SpinorJet> {
        let [upper, lower] = self.components()?;
        let jet = |c: ModeComponent| {
            let z = r * c.alpha;
            ComponentJet::real(
                c.angular,
                c.scale * bessel_j(c.order, z),
                c.scale * c.alpha * bessel_j_derivative(c.order, z),
            )
        };
        Ok(SpinorJet { radius: r, upper: jet(upper), lower: jet(lower) })
    }
}

impl fmt::Display for DiscMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "|{},{},{},{}>", self.branch.number(), self.n, self.k, self.sign.symbol())
    }
}

/// Closed-form `<i,n,k,+| r e^{-i t} |j,m,l,->` given a zero lookup `alpha(order, rank)`.
fn closed_form<F>(i: Branch, n: u32, k: u32, j: Branch, m: u32, l: u32, alpha: F) -> Result<f64>
where
    F: Fn(u32, u32) -> Result<f64>,
{
    Ok(match (i, j) {
        (Branch::One, Branch::One) => {
            if n != m + 1 {
                return Ok(0.0);
            }
            let a = alpha(m, k)?;
            let b = alpha(m - 1, l)?;
            2.0 * a / ((a - b) * (a + b) * (a + b))
        }
        (Branch::One, Branch::Two) => {
            if n != 1 || m != 1 {
                return Ok(0.0);
            }
            if k == l {
                1.0 / alpha(0, k)?
            } else {
                1.0 / (alpha(0, k)? + alpha(0, l)?)
            }
        }
        (Branch::Two, Branch::One) => 0.0,
        (Branch::Two, Branch::Two) => {
            if m != n + 1 {
                return Ok(0.0);
            }
            let a = alpha(n - 1, k)?;
            let b = alpha(n, l)?;
            2.0 * b / ((a - b) * (b + a) * (b + a))
        }
    })
}

/// `<i,n,k,+| r e^{-i t} |j,m,l,->` in closed form.
pub fn disc_matrix_element(i: Branch, n: u32, k: u32, j: Branch, m: u32, l: u32) -> Result<Complex64> {
    DiscMode::new(i, n, k, Sign::Plus)?;
    DiscMode::new(j, m, l, Sign::Minus)?;
    closed_form(i, n, k, j, m, l, zero).map(|v| Complex64::new(v, 0.0))
}

/// Finite section of `P+ r e^{-i t} P-` over all modes with `n <= n_max`, `k <= k_max`.
#[derive(Debug, Clone)]
pub struct DiscCompression {
    pub matrix: DenseMatrix,
    pub row_modes: Vec<DiscMode>,
    pub col_modes: Vec<DiscMode>,
    pub k_correction_removed: bool,
}

/// Modes of one sign in `(branch, n, k)` lexicographic order.
pub fn enumerate_modes(n_max: u32, k_max: u32, sign: Sign) -> Vec<DiscMode> {
    let mut out = Vec::with_capacity(2 * n_max as usize * k_max as usize);
    for branch in [Branch::One, Branch::Two] {
        for n in 1..=n_max {
            for k in 1..=k_max {
                out.push(DiscMode { branch, n, k, sign });
            }
        }
    }
    out
}

/// Coefficient `1/(2 alpha_{0,k})` of the compact correction `K`.
pub fn k_correction_coefficient(k: u32) -> Result<f64> {
    Ok(0.5 / zero(0, k)?)
}

pub fn assemble_disc_compression(n_max: u32, k_max: u32, remove_k: bool) -> Result<DiscCompression> {
    if n_max == 0 || k_max == 0 {
        return Err(Error::Config("disc compression needs n_max, k_max >= 1".into()));
    }
    let rows = enumerate_modes(n_max, k_max, Sign::Plus);
    let cols = enumerate_modes(n_max, k_max, Sign::Minus);
    DenseMatrix::try_zeros(rows.len(), cols.len())?;
    let table = BesselZeroTable::global();
    let zeros: Vec<Vec<f64>> = (0..=n_max)
        .map(|order| table.zeros(order, k_max as usize))
        .collect::<Result<_>>()?;
    let alpha = |order: u32, rank: u32| Ok(zeros[order as usize][rank as usize - 1]);
    let matrix = DenseMatrix::try_from_fn(rows.len(), cols.len(), |r, c| {
        let (p, q) = (rows[r], cols[c]);
        let mut v = closed_form(p.branch, p.n, p.k, q.branch, q.n, q.k, alpha)
            .expect("zeros are precomputed");
        if remove_k && p.branch == Branch::One && q.branch == Branch::Two && p.n == 1 && q.n == 1 && p.k == q.k {
            v -= 0.5 / zeros[0][p.k as usize - 1];
        }
        Complex64::new(v, 0.0)
    })?;
    Ok(DiscCompression { matrix, row_modes: rows, col_modes: cols, k_correction_removed: remove_k })
}

/// `K` restricted to `|1,1,k,+>` rows and `|2,1,k,->` columns, `k <= k_max`.
pub fn compact_correction(k_max: u32) -> Result<DenseMatrix> {
    let values: Vec<f64> = (1..=k_max).map(k_correction_coefficient).collect::<Result<_>>()?;
    DenseMatrix::diagonal(&values)
}

/// `xi_n = sum_l sqrt(n)/(n + l) |2,1,l,->`, truncated after `len` terms.
pub fn disc_witness(n: u64, len: usize) -> Result<WitnessVector<DiscMode>> {
    if n == 0 || len == 0 {
        return Err(Error::Config("witness index and truncation must be positive".into()));
    }
    let (coefficients, tail_bound) = harmonic_profile(n, len);
    Ok(WitnessVector {
        modes: (1..=len as u32)
            .map(|l| DiscMode { branch: Branch::Two, n: 1, k: l, sign: Sign::Minus })
            .collect(),
        coefficients,
        truncation: len,
        tail_bound,
        index: n,
    })
}

/// `<zeta_n | k,+>` truncated after `len` terms of `xi_n`, for `k = 1..=rows`.
///
/// Every term is positive, so each value is a lower bound for the true
/// coefficient and increases with `len`.
pub fn disc_image_coefficients(n: u64, rows: usize, len: usize) -> Result<Vec<f64>> {
    if n == 0 || rows == 0 || len == 0 {
        return Err(Error::Config("witness index and truncations must be positive".into()));
    }
    let zeros = BesselZeroTable::global().zeros(0, rows.max(len))?;
    let (weights, _) = harmonic_profile(n, len);
    Ok(zeros[..rows]
        .iter()
        .map(|&ak| {
            let mut acc = CompensatedSum::new();
            for (w, &al) in weights.iter().zip(&zeros[..len]) {
                acc.add(w.re / (ak + al));
            }
            acc.value()
        })
        .collect())
}

pub fn disc_image_coefficient(n: u64, k: u32, len: usize) -> Result<f64> {
    if k == 0 {
        return Err(Error::InvalidMode("radial index must be at least 1".into()));
    }
    if n == 0 || len == 0 {
        return Err(Error::Config("witness index and truncation must be positive".into()));
    }
    let ak = zero(0, k)?;
    let zeros = BesselZeroTable::global().zeros(0, len)?;
    let (weights, _) = harmonic_profile(n, len);
    Ok(summation::sum(weights.iter().zip(&zeros).map(|(w, &al)| w.re / (ak + al))))
}

/// Euclidean norm of the first `rows` truncated coefficients of `zeta_n`,
/// a lower bound for `||zeta_n||`.
pub fn disc_image_norm_lowerbound(n: u64, rows: usize, len: usize) -> Result<f64> {
    Ok(summation::sum_of_squares(disc_image_coefficients(n, rows, len)?).sqrt())
}

/// `(n - 1) / (4 n pi^2)`, the floor for `||zeta_n||^2`.
pub fn image_norm_sq_floor(n: u64) -> f64 {
    let nf = n as f64;
    (nf - 1.0) / (4.0 * nf * PI * PI)
}

/// Upper estimate `(sqrt(n)/pi) (psi(n+1) - psi(k+1/2)) / (n - k + 1/2)` of
/// `<zeta_n | k,+>`, from `alpha_{0,l} > pi (l - 1/4)`.
pub fn pairing_upper_bound(n: u64, k: u32) -> f64 {
    let (nf, kf) = (n as f64, f64::from(k));
    nf.sqrt() / PI * (digamma_positive(nf + 1.0) - digamma_positive(kf + 0.5)) / (nf - kf + 0.5)
}

/// Lower estimate `(sqrt(n)/pi) (psi(n+1) - psi(a/pi + 7/8)) / (n - a/pi + 1/8)`,
/// `a = alpha_{0,k}`, from `alpha_{0,l} < pi (l - 1/8)`.
pub fn pairing_lower_bound(n: u64, k: u32) -> Result<f64> {
    let nf = n as f64;
    let t = zero(0, k)? / PI;
    Ok(nf.sqrt() / PI * (digamma_positive(nf + 1.0) - digamma_positive(t + 0.875)) / (nf - t + 0.125))
}

/// Bound on the omitted terms `sum_{l > len} sqrt(n)/((n+l)(alpha_{0,k} + alpha_{0,l}))`.
pub fn pairing_tail_bound(n: u64, k: u32, len: usize) -> f64 {
    let (nf, kf, lf) = (n as f64, f64::from(k), len as f64);
    let gap = nf - kf + 0.5;
    nf.sqrt() / PI * (digamma_positive(nf + lf + 1.0) - digamma_positive(kf + lf + 0.5)) / gap
}

/// `max_r |(D_P - lambda) mode|` over the sample radii.
pub fn eigenmode_residual(mode: DiscMode, radii: &[f64]) -> Result<f64> {
    let lambda = Complex64::new(mode.eigenvalue()?, 0.0);
    radii.iter().try_fold(0.0f64, |acc, &r| Ok(acc.max(shifted_residual(&mode.jet(r)?, lambda))))
}

/// The two spanning families of `ker(D* -+ i)` built from `I_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum DeficiencyFamily {
    /// `(+-i e^{i n t} I_n(r), e^{i(n+1)t} I_{n+1}(r))`
    First,
    /// `(+-i e^{-i(n+1)t} I_{n+1}(r), e^{-i n t} I_n(r))`
    Second,
}

/// The deficiency spinor of the given family and sign at radius `r`.
pub fn deficiency_jet(n: u32, family: DeficiencyFamily, sign: Sign, r: f64) -> SpinorJet {
    let i_unit = Complex64::new(0.0, sign.value());
    let jet = |angular: i64, order: u32, factor: Complex64| {
        ComponentJet::new(
            angular,
            factor * bessel_i(order, r),
            factor * bessel_i_derivative(order, r),
        )
    };
    let one = Complex64::new(1.0, 0.0);
    let n_i = i64::from(n);
    match family {
        DeficiencyFamily::First => SpinorJet {
            radius: r,
            upper: jet(n_i, n, i_unit),
            lower: jet(n_i + 1, n + 1, one),
        },
        DeficiencyFamily::Second => SpinorJet {
            radius: r,
            upper: jet(-(n_i + 1), n + 1, i_unit),
            lower: jet(-n_i, n, one),
        },
    }
}

/// `max_r |(D* - shift) psi|` for the deficiency spinor `psi`.
pub fn deficiency_residual_with_shift(
    n: u32,
    family: DeficiencyFamily,
    sign: Sign,
    shift: Complex64,
    radii: &[f64],
) -> f64 {
    radii
        .iter()
        .map(|&r| shifted_residual(&deficiency_jet(n, family, sign, r), shift))
        .fold(0.0, f64::max)
}

/// Residual of the deficiency spinor against its own eigenvalue `+-i`.
pub fn deficiency_residual(n: u32, family: DeficiencyFamily, sign: Sign, radii: &[f64]) -> f64 {
    deficiency_residual_with_shift(n, family, sign, Complex64::new(0.0, sign.value()), radii)
}

/// `max_r |e^{-i t}(-d_r + i r^{-1} d_t) r^n e^{-i n t}|`.
pub fn maximal_kernel_residual(n: u32, radii: &[f64]) -> f64 {
    radii
        .iter()
        .map(|&r| {
            let value = r.powi(n as i32);
            let derivative = if n == 0 { 0.0 } else { f64::from(n) * r.powi(n as i32 - 1) };
            let jet = ComponentJet::real(-i64::from(n), value, derivative);
            minus_component(&jet, r).value.norm()
        })
        .fold(0.0, f64::max)
}

/// Eigenvalues `alpha^2` of `D_P^2` over `n <= n_max`, `k <= k_max`, each
/// with the number of modes sharing it.
pub fn eigenvalue_multiplicities(n_max: u32, k_max: u32) -> Result<Vec<(f64, usize)>> {
    let mut squares = Vec::new();
    for sign in [Sign::Plus, Sign::Minus] {
        for mode in enumerate_modes(n_max, k_max, sign) {
            squares.push(mode.eigenvalue()?.powi(2));
        }
    }
    squares.sort_by(f64::total_cmp);
    let mut groups: Vec<(f64, usize)> = Vec::new();
    for v in squares {
        match groups.last_mut() {
            Some((w, count)) if (v - *w).abs() <= 1e-12 * v => *count += 1,
            _ => groups.push((v, 1)),
        }
    }
    Ok(groups)
}

/// One CSV row of the disc witness report.
#[derive(Debug, Clone, Serialize)]
pub struct DiscReportRow {
    pub n: u64,
    #[serde(rename = "L")]
    pub len: usize,
    #[serde(rename = "K_rows")]
    pub rows: usize,
    pub xi_norm_sq: f64,
    pub zeta_norm_lower_sq: f64,
    pub bound_floor: f64,
    pub pairing_k1: f64,
    pub pairing_k2: f64,
    pub pairing_k3: f64,
    pub verdict: String,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::witness::witness_norm_sq;

    const RADII: [f64; 3] = [0.3, 0.5, 0.9];

    #[test]
    fn invalid_indices_are_rejected() {
        assert!(DiscMode::new(Branch::One, 0, 1, Sign::Plus).is_err());
        assert!(disc_matrix_element(Branch::One, 1, 0, Branch::Two, 1, 1).is_err());
    }

    #[test]
    fn labels() {
        let mode = DiscMode::new(Branch::Two, 3, 2, Sign::Minus).unwrap();
        assert_eq!(mode.to_string(), "|2,3,2,->");
    }

    #[test]
    fn closed_form_special_values() {
        for (n, k, m, l) in [(1, 1, 1, 1), (2, 2, 1, 3), (3, 1, 4, 1)] {
            assert_eq!(disc_matrix_element(Branch::Two, n, k, Branch::One, m, l).unwrap().re, 0.0);
        }
        let a01 = zero(0, 1).unwrap();
        let v = disc_matrix_element(Branch::One, 1, 1, Branch::Two, 1, 1).unwrap();
        assert!((v.re - 1.0 / a01).abs() < 1e-15);
        assert!((v.re - 0.415_830).abs() < 1e-6);
        let v = disc_matrix_element(Branch::One, 2, 1, Branch::One, 1, 1).unwrap();
        assert!((v.re - 0.138_08).abs() < 1e-5);
    }

    #[test]
    fn removing_k_halves_the_diagonal_of_the_coupling_block() {
        let c = assemble_disc_compression(2, 3, true).unwrap();
        assert!(c.k_correction_removed);
        for k in 1..=3u32 {
            let row = c.row_modes.iter().position(|m| *m == DiscMode { branch: Branch::One, n: 1, k, sign: Sign::Plus }).unwrap();
            let col = c.col_modes.iter().position(|m| *m == DiscMode { branch: Branch::Two, n: 1, k, sign: Sign::Minus }).unwrap();
            let expected = 0.5 / zero(0, k).unwrap();
            assert!((c.matrix.get(row, col).re - expected).abs() < 1e-15);
        }
        assert!((k_correction_coefficient(1).unwrap() - 0.207_915).abs() < 1e-6);
    }

    #[test]
    fn block_sparsity_follows_the_selection_rules() {
        let (n_max, k_max) = (3u32, 2u32);
        let c = assemble_disc_compression(n_max, k_max, false).unwrap();
        let mut nonzero = 0;
        let mut allowed = 0;
        for (i, p) in c.row_modes.iter().enumerate() {
            for (j, q) in c.col_modes.iter().enumerate() {
                let rule = match (p.branch, q.branch) {
                    (Branch::One, Branch::One) => p.n == q.n + 1,
                    (Branch::One, Branch::Two) => p.n == 1 && q.n == 1,
                    (Branch::Two, Branch::One) => false,
                    (Branch::Two, Branch::Two) => q.n == p.n + 1,
                };
                let v = c.matrix.get(i, j);
                assert_eq!(v.im, 0.0);
                if v.re != 0.0 {
                    nonzero += 1;
                    assert!(rule, "{p} x {q}");
                }
                allowed += usize::from(rule);
            }
        }
        assert_eq!(nonzero, allowed);
        // (1,1): (n_max-1) k^2, (2,2): (n_max-1) k^2, (1,2): k^2
        assert_eq!(allowed, (2 * (n_max as usize - 1) + 1) * (k_max as usize).pow(2));
    }

    #[test]
    fn witness_vectors() {
        let xi = disc_witness(2, 2).unwrap();
        let root2 = 2f64.sqrt();
        assert!((xi.coefficients[0].re - root2 / 3.0).abs() < 1e-16);
        assert!((xi.coefficients[1].re - root2 / 4.0).abs() < 1e-16);
        assert_eq!(xi.modes[1].to_string(), "|2,1,2,->");
        let xi = disc_witness(1, 50).unwrap();
        assert!((xi.norm_sq_with_tail() - (PI * PI / 6.0 - 1.0)).abs() < 1e-14);
        assert!((witness_norm_sq(1_000_000) - 1.0).abs() < 1e-6);
    }

    #[test]
    fn single_term_image_coefficient() {
        let a = zero(0, 1).unwrap();
        let v = disc_image_coefficient(1, 1, 1).unwrap();
        assert!((v - 1.0 / (4.0 * a)).abs() < 1e-16);
        assert!((v - 0.103_957).abs() < 1e-6);
    }

    #[test]
    fn image_coefficients_match_the_compression_applied_to_the_witness() {
        let (k_max, n) = (12u32, 5u64);
        let c = assemble_disc_compression(2, k_max, true).unwrap();
        let xi = disc_witness(n, k_max as usize).unwrap();
        let mut v = vec![Complex64::new(0.0, 0.0); c.col_modes.len()];
        for (mode, coef) in xi.modes.iter().zip(&xi.coefficients) {
            let j = c.col_modes.iter().position(|m| m == mode).unwrap();
            v[j] = *coef;
        }
        let zeta = c.matrix.apply(&v).unwrap();
        let direct = disc_image_coefficients(n, k_max as usize, k_max as usize).unwrap();
        for (i, mode) in c.row_modes.iter().enumerate() {
            if mode.branch == Branch::One && mode.n == 1 {
                assert!((zeta[i].re - direct[mode.k as usize - 1]).abs() < 1e-15);
            } else {
                assert_eq!(zeta[i], Complex64::new(0.0, 0.0));
            }
        }
    }

    #[test]
    fn eigenmode_residuals_vanish() {
        for mode in [
            DiscMode::new(Branch::One, 1, 1, Sign::Plus).unwrap(),
            DiscMode::new(Branch::Two, 3, 2, Sign::Minus).unwrap(),
        ] {
            assert!(eigenmode_residual(mode, &RADII).unwrap() <= 1e-8);
        }
    }

    #[test]
    fn residual_is_linear_in_the_spinor() {
        // A wrong eigenvalue gives a nonzero residual that scales with the spinor.
        let mode = DiscMode::new(Branch::One, 2, 1, Sign::Plus).unwrap();
        let jet = mode.jet(0.4).unwrap();
        let shift = Complex64::new(1.0, 0.0);
        let single = shifted_residual(&jet, shift);
        let double = shifted_residual(&jet.scaled(Complex64::new(2.0, 0.0)), shift);
        assert!(single > 0.1);
        assert!((double - 2.0 * single).abs() < 1e-13 * single);
    }

    #[test]
    fn deficiency_spinors() {
        assert!(deficiency_residual(0, DeficiencyFamily::First, Sign::Plus, &RADII) <= 1e-8);
        assert!(deficiency_residual(3, DeficiencyFamily::Second, Sign::Minus, &RADII) <= 1e-8);
        let wrong = deficiency_residual_with_shift(0, DeficiencyFamily::First, Sign::Plus, Complex64::new(0.0, -1.0), &[0.5]);
        assert!(wrong >= 1.0);
    }

    #[test]
    fn maximal_kernel_functions() {
        assert_eq!(maximal_kernel_residual(0, &RADII), 0.0);
        assert!(maximal_kernel_residual(1, &RADII) <= 1e-12);
        assert!(maximal_kernel_residual(7, &[0.9]) <= 1e-10);
    }

    #[test]
    fn every_eigenvalue_has_multiplicity_four() {
        let groups = eigenvalue_multiplicities(4, 4).unwrap();
        assert_eq!(groups.len(), 16);
        assert!(groups.iter().all(|&(_, c)| c == 4));
    }
}
