//! JSON and CSV serialization of sweeps, witness reports and the index ladder.

use std::io::Write;

use serde::Serialize;

use crate::analysis::{Model, SweepProfile, Verdict, WitnessReport};
use crate::disc::DiscReportRow;
use crate::error::Result;
use crate::index::{IndexRow, KernelCheck, MaximalKernelReport};
use crate::interval::IntervalReportRow;
use crate::matrix::DenseMatrix;

/// Singular values kept per size in JSON output.
pub const JSON_SV_LIMIT: usize = 64;

/// `{model, sizes, thresholds, sv, counts, witness}`. Sweep fields are empty
/// when no sizes were requested; `witness` is absent for pure sweeps.
#[derive(Debug, Clone, Serialize)]
pub struct JsonReport<'a> {
    pub model: Model,
    pub sizes: Vec<usize>,
    pub thresholds: Vec<f64>,
    pub sv: Vec<Vec<f64>>,
    pub counts: Vec<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sweep: Option<SweepSummary>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<&'a WitnessReport>,
    pub verdict: Verdict,
}

/// Properties of a sweep that the verdict is based on.
#[derive(Debug, Clone, Serialize)]
pub struct SweepSummary {
    pub sigma_max: Vec<f64>,
    pub sigma_max_strictly_increasing: bool,
    pub nested: bool,
}

impl<'a> JsonReport<'a> {
    pub fn new(model: Model, sweep: Option<&SweepProfile>, witness: Option<&'a WitnessReport>, verdict: Verdict) -> Self {
        let (sizes, thresholds, sv, counts, summary) = match sweep {
            Some(p) => (
                p.sizes.clone(),
                p.thresholds.clone(),
                p.singular_values.iter().map(|s| s.iter().take(JSON_SV_LIMIT).copied().collect()).collect(),
                p.counts_above.clone(),
                Some(SweepSummary {
                    sigma_max: p.sigma_max(),
                    sigma_max_strictly_increasing: p.sigma_max_strictly_increasing(),
                    nested: p.is_nested(),
                }),
            ),
            None => (Vec::new(), Vec::new(), Vec::new(), Vec::new(), None),
        };
        Self { model, sizes, thresholds, sv, counts, sweep: summary, witness, verdict }
    }
}

pub fn write_json<W: Write, T: Serialize>(mut writer: W, value: &T) -> Result<()> {
    serde_json::to_writer_pretty(&mut writer, value)?;
    writeln!(writer)?;
    Ok(())
}

fn pairing_at(report: &WitnessReport, row: usize, index: u64) -> f64 {
    report
        .pairing_indices
        .iter()
        .position(|&p| p == index)
        .map_or(f64::NAN, |p| report.pairings[row][p])
}

pub fn interval_rows(report: &WitnessReport) -> Vec<IntervalReportRow> {
    (0..report.grid.len())
        .map(|i| IntervalReportRow {
            m: report.grid[i],
            cols: report.truncation[i],
            rows: report.truncation[i],
            xi_norm_sq: report.xi[i],
            xi_norm_sq_closed: report.xi_closed[i],
            zeta_norm_lower_sq: report.zeta_lower[i],
            bound_1_over_4pi2: report.bound[i],
            pairing_p0: pairing_at(report, i, 0),
            pairing_p1: pairing_at(report, i, 1),
            verdict: report.verdict.to_string(),
        })
        .collect()
}

pub fn disc_rows(report: &WitnessReport) -> Vec<DiscReportRow> {
    (0..report.grid.len())
        .map(|i| DiscReportRow {
            n: report.grid[i],
            len: report.truncation[i],
            rows: report.truncation[i],
            xi_norm_sq: report.xi[i],
            zeta_norm_lower_sq: report.zeta_lower[i],
            bound_floor: report.bound[i],
            pairing_k1: pairing_at(report, i, 1),
            pairing_k2: pairing_at(report, i, 2),
            pairing_k3: pairing_at(report, i, 3),
            verdict: report.verdict.to_string(),
        })
        .collect()
}

pub fn write_csv_rows<W: Write, T: Serialize>(writer: W, rows: &[T]) -> Result<()> {
    let mut csv = csv::Writer::from_writer(writer);
    for row in rows {
        csv.serialize(row)?;
    }
    csv.flush()?;
    Ok(())
}

pub fn write_witness_csv<W: Write>(writer: W, report: &WitnessReport) -> Result<()> {
    match report.model {
        Model::Interval => write_csv_rows(writer, &interval_rows(report)),
        Model::Disc => write_csv_rows(writer, &disc_rows(report)),
    }
}

#[derive(Debug, Serialize)]
struct SweepCsvRow {
    size: usize,
    j: usize,
    sigma: f64,
}

/// Long format: one row per `(size, j)`, all singular values.
pub fn write_sweep_csv<W: Write>(writer: W, profile: &SweepProfile) -> Result<()> {
    let rows: Vec<SweepCsvRow> = profile
        .sizes
        .iter()
        .zip(&profile.singular_values)
        .flat_map(|(&size, sv)| sv.iter().enumerate().map(move |(j, &sigma)| SweepCsvRow { size, j, sigma }))
        .collect();
    write_csv_rows(writer, &rows)
}

#[derive(Debug, Serialize)]
struct CountCsvRow {
    size: usize,
    threshold: f64,
    count: usize,
}

pub fn write_counts_csv<W: Write>(writer: W, profile: &SweepProfile) -> Result<()> {
    let mut rows = Vec::new();
    for (size, counts) in profile.sizes.iter().zip(&profile.counts_above) {
        for (threshold, count) in profile.thresholds.iter().zip(counts) {
            rows.push(CountCsvRow { size: *size, threshold: *threshold, count: *count });
        }
    }
    write_csv_rows(writer, &rows)
}

pub fn write_index_csv<W: Write>(writer: W, rows: &[IndexRow]) -> Result<()> {
    write_csv_rows(writer, rows)
}

#[derive(Debug, Serialize)]
pub struct IndexJson<'a> {
    pub ladder: &'a [IndexRow],
    pub kernel_checks: &'a [KernelCheck],
    pub maximal_kernel: &'a MaximalKernelReport,
    pub verdict: Verdict,
}

#[derive(Debug, Serialize)]
struct MatrixCsvRow<'a> {
    row_label: &'a str,
    col_label: &'a str,
    re: f64,
    im: f64,
}

/// Nonzero entries of a compression with their mode labels.
pub fn write_matrix_csv<W: Write>(writer: W, matrix: &DenseMatrix, row_labels: &[String], col_labels: &[String]) -> Result<()> {
    let mut csv = csv::Writer::from_writer(writer);
    for (i, row_label) in row_labels.iter().enumerate().take(matrix.rows()) {
        for (j, col_label) in col_labels.iter().enumerate().take(matrix.cols()) {
            let z = matrix.get(i, j);
            if z.re != 0.0 || z.im != 0.0 {
                csv.serialize(MatrixCsvRow { row_label, col_label, re: z.re, im: z.im })?;
            }
        }
    }
    csv.flush()?;
    Ok(())
}
