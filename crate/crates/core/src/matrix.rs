//! Dense row-major complex matrices used for compressions.

use num_complex::Complex64;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::tolerances::MAX_MATRIX_ENTRIES;

#[derive(Debug, Clone, PartialEq)]
pub struct DenseMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Complex64>,
}

impl DenseMatrix {
    /// Zero matrix, refusing sizes beyond [`MAX_MATRIX_ENTRIES`] and
    /// reporting allocation failure instead of aborting.
    pub fn try_zeros(rows: usize, cols: usize) -> Result<Self> {
        let entries = rows
            .checked_mul(cols)
            .filter(|&e| e <= MAX_MATRIX_ENTRIES)
            .ok_or(Error::SizeGuard { rows, cols, limit: MAX_MATRIX_ENTRIES })?;
        let mut data = Vec::new();
        data.try_reserve_exact(entries)
            .map_err(|_| Error::Allocation { rows, cols })?;
        data.resize(entries, Complex64::new(0.0, 0.0));
        Ok(Self { rows, cols, data })
    }

    /// Fills every entry from a pure function of its indices, in parallel.
    pub fn try_from_fn<F>(rows: usize, cols: usize, entry: F) -> Result<Self>
    where
        F: Fn(usize, usize) -> Complex64 + Sync,
    {
        let mut m = Self::try_zeros(rows, cols)?;
        if cols > 0 {
            m.data
                .par_chunks_mut(cols)
                .enumerate()
                .for_each(|(i, row)| {
                    for (j, slot) in row.iter_mut().enumerate() {
                        *slot = entry(i, j);
                    }
                });
        }
        Ok(m)
    }

    pub fn from_rows(rows: &[Vec<Complex64>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::Config("ragged rows".into()));
        }
        Self::try_from_fn(rows.len(), cols, |i, j| rows[i][j])
    }

    pub fn diagonal(values: &[f64]) -> Result<Self> {
        let n = values.len();
        Self::try_from_fn(n, n, |i, j| {
            if i == j {
                Complex64::new(values[i], 0.0)
            } else {
                Complex64::new(0.0, 0.0)
            }
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, value: Complex64) {
        self.data[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[Complex64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn scaled(&self, factor: Complex64) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|z| z * factor).collect(),
        }
    }

    /// Leading `rows x cols` block.
    pub fn leading_block(&self, rows: usize, cols: usize) -> Result<Self> {
        if rows > self.rows || cols > self.cols {
            return Err(Error::Config(format!(
                "{rows}x{cols} block requested from a {}x{} matrix",
                self.rows, self.cols
            )));
        }
        Self::try_from_fn(rows, cols, |i, j| self.get(i, j))
    }

    /// `M v`, each row reduced in column order.
    pub fn apply(&self, v: &[Complex64]) -> Result<Vec<Complex64>> {
        if v.len() != self.cols {
            return Err(Error::Config(format!(
                "vector of length {} applied to a matrix with {} columns",
                v.len(),
                self.cols
            )));
        }
        Ok((0..self.rows)
            .into_par_iter()
            .map(|i| {
                let (mut re, mut im) = (crate::summation::CompensatedSum::new(), crate::summation::CompensatedSum::new());
                for (a, b) in self.row(i).iter().zip(v) {
                    let p = a * b;
                    re.add(p.re);
                    im.add(p.im);
                }
                Complex64::new(re.value(), im.value())
            })
            .collect())
    }

    pub fn frobenius_norm_sq(&self) -> f64 {
        crate::summation::sum(self.data.iter().map(Complex64::norm_sqr))
    }

    pub fn first_non_finite(&self) -> Option<(usize, usize)> {
        self.data
            .iter()
            .position(|z| !z.re.is_finite() || !z.im.is_finite())
            .map(|p| (p / self.cols, p % self.cols))
    }

    /// Splits the sparsity pattern into independent blocks: row set and
    /// column set of each connected component of the bipartite graph of
    /// nonzero entries. Rows and columns that are entirely zero are omitted.
    pub fn decoupled_blocks(&self) -> Vec<(Vec<usize>, Vec<usize>)> {
        let n = self.rows + self.cols;
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let mut touched = vec![false; n];
        for i in 0..self.rows {
            for j in 0..self.cols {
                if self.get(i, j) != Complex64::new(0.0, 0.0) {
                    touched[i] = true;
                    touched[self.rows + j] = true;
                    let (a, b) = (find(&mut parent, i), find(&mut parent, self.rows + j));
                    if a != b {
                        parent[a.max(b)] = a.min(b);
                    }
                }
            }
        }
        let mut blocks: Vec<(usize, Vec<usize>, Vec<usize>)> = Vec::new();
        for v in 0..n {
            if !touched[v] {
                continue;
            }
            let root = find(&mut parent, v);
            let slot = match blocks.iter().position(|b| b.0 == root) {
                Some(p) => p,
                None => {
                    blocks.push((root, Vec::new(), Vec::new()));
                    blocks.len() - 1
                }
            };
            if v < self.rows {
                blocks[slot].1.push(v);
            } else {
                blocks[slot].2.push(v - self.rows);
            }
        }
        blocks.into_iter().map(|(_, r, c)| (r, c)).collect()
    }

    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Result<Self> {
        Self::try_from_fn(rows.len(), cols.len(), |i, j| self.get(rows[i], cols[j]))
    }
}
