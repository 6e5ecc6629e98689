//! Non-compactness evidence: singular value sweeps over nested compressions
//! and the three-premise witness protocol.
//!
//! A compact `P+ a P-` would send the bounded, weakly null witness sequence
//! to a norm-null one. The protocol checks, on a grid of indices, that the
//! witnesses stay bounded, that their images stay above a certified floor,
//! and that the images pair to zero against fixed basis vectors (weak
//! nullness), which together exclude norm-convergent subsequences.

use std::f64::consts::PI;
use std::fmt;

use faer::{c64, Mat};
use serde::Serialize;

use crate::disc::{
    assemble_disc_compression, disc_image_coefficients, disc_witness, image_norm_sq_floor, k_correction_coefficient,
    pairing_tail_bound, pairing_upper_bound,
};
use crate::error::{Error, Result};
use crate::interval::{assemble_interval_compression, interval_image_norm_lowerbound, interval_image_pairing, interval_witness};
use crate::matrix::DenseMatrix;
use crate::tolerances::{
    DISC_SWEEP_ORDERS, NESTING_SLACK, PAIRING_CEILING, TAIL_WARNING_FRACTION, TRUNCATION_FACTOR, TRUNCATION_FLOOR,
    XI_NORM_SQ_CEILING,
};
use crate::witness::witness_norm_sq;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Model {
    Interval,
    Disc,
}

impl fmt::Display for Model {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Model::Interval => "interval",
            Model::Disc => "disc",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

impl Verdict {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }

    pub fn passed(self) -> bool {
        self == Verdict::Pass
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(if self.passed() { "pass" } else { "fail" })
    }
}

/// All singular values of `m`, descending, `min(rows, cols)` of them.
///
/// The matrix is first split into the independent blocks of its sparsity
/// pattern. A block whose nonzero entries share a common phase is rotated to
/// a real matrix, which halves the memory and quarters the work of the
/// decomposition; the rotation is unitary and leaves singular values alone.
pub fn singular_values(m: &DenseMatrix) -> Result<Vec<f64>> {
    if let Some((row, col)) = m.first_non_finite() {
        return Err(Error::NonFinite { row, col });
    }
    let mut values = Vec::with_capacity(m.rows().min(m.cols()));
    let blocks = m.decoupled_blocks();
    if blocks.len() == 1 && blocks[0].0.len() == m.rows() && blocks[0].1.len() == m.cols() {
        values.extend(block_singular_values(m)?);
    } else {
        for (rows, cols) in &blocks {
            values.extend(block_singular_values(&m.select(rows, cols)?)?);
        }
    }
    values.resize(m.rows().min(m.cols()), 0.0);
    values.sort_by(|a, b| b.total_cmp(a));
    Ok(values)
}

fn block_singular_values(m: &DenseMatrix) -> Result<Vec<f64>> {
    let (rows, cols) = (m.rows(), m.cols());
    let failure = |_| Error::SvdNoConvergence { rows, cols };
    let values = match common_phase(m) {
        Some(phase) => {
            let unphase = phase.conj();
            Mat::<f64>::from_fn(rows, cols, |i, j| (m.get(i, j) * unphase).re)
                .singular_values()
                .map_err(failure)?
        }
        None => Mat::<c64>::from_fn(rows, cols, |i, j| {
            let z = m.get(i, j);
            c64::new(z.re, z.im)
        })
        .singular_values()
        .map_err(failure)?,
    };
    Ok(values.into_iter().map(f64::abs).collect())
}

/// A unit `u` with `z / u` real for every entry, if one exists.
fn common_phase(m: &DenseMatrix) -> Option<num_complex::Complex64> {
    let mut pivot = num_complex::Complex64::new(0.0, 0.0);
    for i in 0..m.rows() {
        for z in m.row(i) {
            if z.norm_sqr() > pivot.norm_sqr() {
                pivot = *z;
            }
        }
    }
    if pivot.norm() == 0.0 {
        return Some(num_complex::Complex64::new(1.0, 0.0));
    }
    let unit = pivot / pivot.norm();
    let slack = 8.0 * f64::EPSILON;
    for i in 0..m.rows() {
        for z in m.row(i) {
            if (z * unit.conj()).im.abs() > slack * z.norm() {
                return None;
            }
        }
    }
    Some(unit)
}

/// Assembly parameters for sweeps.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SweepOptions {
    /// Disc only: subtract the compact correction `K`.
    pub remove_k: bool,
    /// Disc only: angular indices `n = 1..=orders` are kept.
    pub disc_orders: u32,
}

impl Default for SweepOptions {
    fn default() -> Self {
        Self { remove_k: true, disc_orders: DISC_SWEEP_ORDERS }
    }
}

/// The compression of the given model with `size` rows and columns.
///
/// For the disc, `size = 2 * orders * k_max`: two branches, `orders` angular
/// indices and `k_max` radial indices per sign.
pub fn compression_of_size(model: Model, size: usize, options: &SweepOptions) -> Result<DenseMatrix> {
    match model {
        Model::Interval => Ok(assemble_interval_compression(size, size)?.matrix),
        Model::Disc => {
            let per = 2 * options.disc_orders as usize;
            if options.disc_orders == 0 || size == 0 || size % per != 0 {
                return Err(Error::Config(format!(
                    "disc sweep sizes must be positive multiples of {per} (got {size})"
                )));
            }
            let k_max = u32::try_from(size / per).map_err(|_| Error::Config(format!("size {size} is too large")))?;
            Ok(assemble_disc_compression(options.disc_orders, k_max, options.remove_k)?.matrix)
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SweepProfile {
    pub model: Model,
    pub sizes: Vec<usize>,
    pub thresholds: Vec<f64>,
    /// Per size, descending.
    pub singular_values: Vec<Vec<f64>>,
    /// Per size, per threshold: number of singular values `>= threshold`.
    pub counts_above: Vec<Vec<usize>>,
}

/// `sigma_j(smaller) > sigma_j(larger) + slack` for consecutive sizes.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct NestingViolation {
    pub smaller: usize,
    pub larger: usize,
    pub j: usize,
    pub excess: f64,
}

impl SweepProfile {
    pub fn sigma_max(&self) -> Vec<f64> {
        self.singular_values.iter().map(|s| s.first().copied().unwrap_or(0.0)).collect()
    }

    pub fn sigma_max_strictly_increasing(&self) -> bool {
        self.sigma_max().windows(2).all(|w| w[0] < w[1])
    }

    pub fn nesting_violations(&self, slack: f64) -> Vec<NestingViolation> {
        let mut out = Vec::new();
        for w in 0..self.sizes.len().saturating_sub(1) {
            let (a, b) = (&self.singular_values[w], &self.singular_values[w + 1]);
            for (j, (x, y)) in a.iter().zip(b).enumerate() {
                if *x > *y + slack {
                    out.push(NestingViolation { smaller: self.sizes[w], larger: self.sizes[w + 1], j, excess: x - y });
                }
            }
        }
        out
    }

    pub fn is_nested(&self) -> bool {
        self.nesting_violations(NESTING_SLACK).is_empty()
    }

    /// Counts above `thresholds[t]` along the sweep.
    pub fn counts_for(&self, t: usize) -> Vec<usize> {
        self.counts_above.iter().map(|c| c[t]).collect()
    }

    pub fn counts_strictly_increasing(&self, t: usize) -> bool {
        self.counts_for(t).windows(2).all(|w| w[0] < w[1])
    }
}

pub fn counts_above(values: &[f64], thresholds: &[f64]) -> Vec<usize> {
    thresholds.iter().map(|&t| values.iter().filter(|&&s| s >= t).count()).collect()
}

/// Singular values of compressions of growing size. Sizes run in order; each
/// matrix is dropped before the next one is assembled.
pub fn compression_sweep(model: Model, sizes: &[usize], thresholds: &[f64], options: &SweepOptions) -> Result<SweepProfile> {
    if sizes.is_empty() {
        return Err(Error::Config("at least one sweep size is required".into()));
    }
    if sizes.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::Config("sweep sizes must be strictly increasing".into()));
    }
    if thresholds.iter().any(|t| !t.is_finite() || *t < 0.0) {
        return Err(Error::Config("thresholds must be finite and nonnegative".into()));
    }
    let mut singular = Vec::with_capacity(sizes.len());
    for &size in sizes {
        let matrix = compression_of_size(model, size, options)?;
        singular.push(singular_values(&matrix)?);
    }
    let counts = singular.iter().map(|s| counts_above(s, thresholds)).collect();
    Ok(SweepProfile {
        model,
        sizes: sizes.to_vec(),
        thresholds: thresholds.to_vec(),
        singular_values: singular,
        counts_above: counts,
    })
}

/// Evidence that the subtracted correction `K` is compact: its singular
/// values `1/(2 alpha_{0,k})` are bounded by `1/(2 pi (k - 1/4))`, which
/// decays to zero.
#[derive(Debug, Clone, Serialize)]
pub struct CorrectionCertificate {
    pub singular_values: Vec<f64>,
    pub bounds: Vec<f64>,
    pub verdict: Verdict,
}

pub fn certify_correction(k_max: u32) -> Result<CorrectionCertificate> {
    let singular_values: Vec<f64> = (1..=k_max).map(k_correction_coefficient).collect::<Result<_>>()?;
    let bounds: Vec<f64> = (1..=k_max).map(|k| 1.0 / (2.0 * PI * (f64::from(k) - 0.25))).collect();
    let ok = singular_values.iter().zip(&bounds).all(|(s, b)| s <= b)
        && singular_values.windows(2).all(|w| w[0] > w[1]);
    Ok(CorrectionCertificate { singular_values, bounds, verdict: Verdict::from_bool(ok) })
}

/// Truncation length `max(factor * m, floor)` for the witness `xi_m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TruncationPolicy {
    pub factor: u64,
    pub floor: usize,
}

impl Default for TruncationPolicy {
    fn default() -> Self {
        Self { factor: TRUNCATION_FACTOR, floor: TRUNCATION_FLOOR }
    }
}

impl TruncationPolicy {
    pub fn length(&self, m: u64) -> Result<usize> {
        let len = self
            .factor
            .checked_mul(m)
            .and_then(|v| usize::try_from(v).ok())
            .ok_or_else(|| Error::Config(format!("truncation for index {m} overflows")))?;
        Ok(len.max(self.floor).max(1))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct WitnessOptions {
    pub truncation: TruncationPolicy,
    /// Interval: Fourier indices `p`; disc: radial indices `k` of `|1,1,k,+>`.
    pub pairing_indices: Vec<u64>,
    pub pairing_ceiling: f64,
}

impl WitnessOptions {
    pub fn for_model(model: Model) -> Self {
        let pairing_indices = match model {
            Model::Interval => vec![0, 1, 5],
            Model::Disc => vec![1, 2, 3],
        };
        Self { truncation: TruncationPolicy::default(), pairing_indices, pairing_ceiling: PAIRING_CEILING }
    }
}

/// The three premises, each over the whole grid.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Premises {
    /// `||xi||^2` matches its closed form and stays `<= 1.01`.
    pub bounded: bool,
    /// Certified `||zeta||^2` lower bound at or above the floor.
    pub image_floor: bool,
    /// Pairings strictly decrease along the grid and end below the ceiling
    /// (disc: also never exceed their analytic upper estimate).
    pub weakly_null: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct WitnessReport {
    pub model: Model,
    pub grid: Vec<u64>,
    /// Truncation length of each witness.
    pub truncation: Vec<usize>,
    /// `||xi||^2` of the stored coefficients plus the exact tail.
    pub xi: Vec<f64>,
    /// `m psi'(m + 1)`.
    pub xi_closed: Vec<f64>,
    /// Certified lower bound for `||zeta||^2`.
    pub zeta_lower: Vec<f64>,
    pub bound: Vec<f64>,
    pub pairing_indices: Vec<u64>,
    /// Per grid point, per pairing index: `|<zeta, e>|`. Exact for the
    /// interval; for the disc the truncated sum, a lower estimate.
    pub pairings: Vec<Vec<f64>>,
    /// Per grid point, per pairing index: a rigorous upper estimate of the
    /// pairing (the disc truncated sum plus its tail bound; the interval
    /// value itself).
    pub pairings_upper: Vec<Vec<f64>>,
    /// Disc only: the analytic digamma estimate the pairings must not exceed.
    pub pairing_estimates: Vec<Vec<f64>>,
    pub premises: Premises,
    pub informative: bool,
    pub warnings: Vec<String>,
    pub verdict: Verdict,
}

/// Runs the witness protocol on `grid`.
pub fn witness_protocol(model: Model, grid: &[u64], options: &WitnessOptions) -> Result<WitnessReport> {
    if grid.is_empty() {
        return Err(Error::Config("the witness grid must not be empty".into()));
    }
    if grid.contains(&0) {
        return Err(Error::Config("witness indices must be positive".into()));
    }
    if grid.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::Config("the witness grid must be strictly increasing".into()));
    }
    let mut report = WitnessReport {
        model,
        grid: grid.to_vec(),
        truncation: Vec::new(),
        xi: Vec::new(),
        xi_closed: Vec::new(),
        zeta_lower: Vec::new(),
        bound: Vec::new(),
        pairing_indices: options.pairing_indices.clone(),
        pairings: Vec::new(),
        pairings_upper: Vec::new(),
        pairing_estimates: Vec::new(),
        premises: Premises { bounded: true, image_floor: true, weakly_null: true },
        informative: true,
        warnings: Vec::new(),
        verdict: Verdict::Pass,
    };
    for &m in grid {
        let len = options.truncation.length(m)?;
        let (xi, tail) = match model {
            Model::Interval => {
                let w = interval_witness(m, len)?;
                (w.norm_sq_with_tail(), w.tail_bound)
            }
            Model::Disc => {
                let w = disc_witness(m, len)?;
                (w.norm_sq_with_tail(), w.tail_bound)
            }
        };
        if tail * tail > TAIL_WARNING_FRACTION * xi {
            report.warnings.push(format!(
                "index {m}: witness tail {:.3e} exceeds {}% of ||xi||^2; raise the truncation",
                tail * tail,
                TAIL_WARNING_FRACTION * 100.0
            ));
        }
        let (zeta_lower, bound, pairings, upper, estimates) = match model {
            Model::Interval => {
                let z = interval_image_norm_lowerbound(m, len, len)?;
                let pairings: Vec<f64> = options
                    .pairing_indices
                    .iter()
                    .map(|&p| Ok(interval_image_pairing(m, p as i64)?.norm()))
                    .collect::<Result<_>>()?;
                (z * z, 1.0 / (4.0 * PI * PI), pairings.clone(), pairings, Vec::new())
            }
            Model::Disc => {
                let coeffs = disc_image_coefficients(m, len, len)?;
                let z_sq = crate::summation::sum_of_squares(coeffs.iter().copied());
                let mut pairings = Vec::new();
                let mut upper = Vec::new();
                let mut estimates = Vec::new();
                for &k in &options.pairing_indices {
                    let k32 = u32::try_from(k).ok().filter(|&k| k >= 1).ok_or_else(|| {
                        Error::Config(format!("disc pairing index {k} must be in 1..=u32::MAX"))
                    })?;
                    let value = if (k as usize) <= coeffs.len() {
                        coeffs[k as usize - 1]
                    } else {
                        crate::disc::disc_image_coefficient(m, k32, len)?
                    };
                    let tail_k = pairing_tail_bound(m, k32, len);
                    if tail_k > TAIL_WARNING_FRACTION * value {
                        report.warnings.push(format!(
                            "index {m}: pairing tail {tail_k:.3e} for k = {k} exceeds {}% of the value",
                            TAIL_WARNING_FRACTION * 100.0
                        ));
                    }
                    let estimate = pairing_upper_bound(m, k32);
                    pairings.push(value);
                    upper.push((value + tail_k).min(estimate));
                    estimates.push(estimate);
                }
                (z_sq, image_norm_sq_floor(m), pairings, upper, estimates)
            }
        };
        report.truncation.push(len);
        report.xi.push(xi);
        report.xi_closed.push(witness_norm_sq(m));
        report.zeta_lower.push(zeta_lower);
        report.bound.push(bound);
        report.pairings.push(pairings);
        report.pairings_upper.push(upper);
        report.pairing_estimates.push(estimates);
    }

    report.premises.bounded = report
        .xi
        .iter()
        .zip(&report.xi_closed)
        .all(|(x, c)| (x - c).abs() <= 1e-6 && *x <= XI_NORM_SQ_CEILING);
    report.premises.image_floor = report.zeta_lower.iter().zip(&report.bound).all(|(z, b)| z >= b);
    let mut weakly_null = true;
    for p in 0..options.pairing_indices.len() {
        let column: Vec<f64> = report.pairings.iter().map(|row| row[p]).collect();
        weakly_null &= column.windows(2).all(|w| w[0] > w[1]);
        weakly_null &= report.pairings_upper.last().is_some_and(|row| row[p] <= options.pairing_ceiling);
    }
    for (row, est) in report.pairings.iter().zip(&report.pairing_estimates) {
        weakly_null &= row.iter().zip(est).all(|(v, e)| v <= e);
    }
    report.premises.weakly_null = weakly_null;

    if grid.len() < 2 {
        report.informative = false;
        report.warnings.push("a single grid point cannot show decay of the pairings".into());
    }
    if report.bound.iter().any(|&b| b <= 0.0) {
        report.informative = false;
        report.warnings.push("the image floor vanishes at some grid point; that check is trivial there".into());
    }
    let p = report.premises;
    report.verdict = Verdict::from_bool(p.bounded && p.image_floor && p.weakly_null);
    Ok(report)
}
