//! Kernel dimensions and index of the APS-type extensions `D_{P_N}`.
//!
//! `P_N` projects boundary functions onto the circle modes `e^{ik t}`,
//! `k >= N`. The extension requires `P_N(xi_1|_{boundary}) = 0` for the upper
//! component and `(1 - P_{N+1})(xi_2|_{boundary}) = 0` for the lower one. The
//! kernels of `D_+` and `D_-` on the disc are spanned by `r^n e^{int}` and
//! `r^n e^{-int}`, whose traces are single circle modes, so every boundary
//! condition reduces to an integer comparison.

use std::fmt;

use serde::Serialize;

use crate::disc::maximal_kernel_residual;
use crate::error::{Error, Result};
use crate::spinor::{minus_component, plus_component, ComponentJet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Chirality {
    Plus,
    Minus,
}

impl Chirality {
    pub fn name(self) -> &'static str {
        match self {
            Chirality::Plus => "+",
            Chirality::Minus => "-",
        }
    }
}

impl fmt::Display for Chirality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The extension `D_{P_N}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct ApsExtension {
    pub cut: i64,
}

impl ApsExtension {
    pub fn new(cut: i64) -> Self {
        Self { cut }
    }

    pub fn kernel_dims(self) -> (u64, u64) {
        aps_kernel_dims(self.cut)
    }

    pub fn index(self) -> i64 {
        aps_index(self.cut)
    }

    /// Whether the boundary trace `e^{i k t}` satisfies the boundary
    /// condition imposed on the given component.
    pub fn admits_boundary_mode(self, chirality: Chirality, k: i64) -> bool {
        match chirality {
            // P_N keeps k >= N, so P_N(e^{ikt}) = 0 iff k < N.
            Chirality::Plus => k < self.cut,
            // 1 - P_{N+1} keeps k <= N, so it kills e^{ikt} iff k >= N + 1.
            Chirality::Minus => k > self.cut,
        }
    }
}

/// `(dim ker (D_{P_N})_+, dim ker (D_{P_N})_-)`.
pub fn aps_kernel_dims(cut: i64) -> (u64, u64) {
    let plus = if cut > 0 { cut.unsigned_abs() } else { 0 };
    let minus = if cut <= -1 { cut.unsigned_abs() } else { 0 };
    (plus, minus)
}

pub fn aps_index(cut: i64) -> i64 {
    let (plus, minus) = aps_kernel_dims(cut);
    plus as i64 - minus as i64
}

/// Outcome of checking one kernel function `r^n e^{+-int}`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct KernelCheck {
    pub cut: i64,
    pub n: u32,
    pub chirality: Chirality,
    /// `max_r |D_+- (r^n e^{+-int})|` over the samples.
    pub residual: f64,
    pub boundary_ok: bool,
}

/// Residual and boundary check for the kernel function of degree `n`.
///
/// Fails with [`Error::NotInKernel`] when `n` lies outside the range given
/// by [`aps_kernel_dims`].
pub fn kernel_function_residual(cut: i64, n: u32, chirality: Chirality, samples: &[f64]) -> Result<KernelCheck> {
    let (plus, minus) = aps_kernel_dims(cut);
    let dim = match chirality {
        Chirality::Plus => plus,
        Chirality::Minus => minus,
    };
    if u64::from(n) >= dim {
        return Err(Error::NotInKernel { cut, n, chirality: chirality.name() });
    }
    let angular = match chirality {
        Chirality::Plus => i64::from(n),
        Chirality::Minus => -i64::from(n),
    };
    let residual = samples
        .iter()
        .map(|&r| {
            let jet = monomial_jet(angular, n, r);
            match chirality {
                Chirality::Plus => plus_component(&jet, r).value.norm(),
                Chirality::Minus => minus_component(&jet, r).value.norm(),
            }
        })
        .fold(0.0, f64::max);
    let boundary_ok = ApsExtension::new(cut).admits_boundary_mode(chirality, angular);
    Ok(KernelCheck { cut, n, chirality, residual, boundary_ok })
}

fn monomial_jet(angular: i64, n: u32, r: f64) -> ComponentJet {
    let value = r.powi(n as i32);
    let derivative = if n == 0 { 0.0 } else { f64::from(n) * r.powi(n as i32 - 1) };
    ComponentJet::real(angular, value, derivative)
}

/// Every kernel function of `D_{P_N}` checked at the given radii.
pub fn kernel_ladder_rung(cut: i64, samples: &[f64]) -> Result<Vec<KernelCheck>> {
    let (plus, minus) = aps_kernel_dims(cut);
    let plus = (0..plus as u32).map(|n| kernel_function_residual(cut, n, Chirality::Plus, samples));
    let minus = (0..minus as u32).map(|n| kernel_function_residual(cut, n, Chirality::Minus, samples));
    plus.chain(minus).collect()
}

/// The kernel `{r^n e^{-int}}` of the maximal `D_-`: verified residuals for
/// `n = 0..=n_max` and a flag recording that the family does not terminate.
#[derive(Debug, Clone, Serialize)]
pub struct MaximalKernelReport {
    pub residuals: Vec<(u32, f64)>,
    pub infinite: bool,
}

pub fn maximal_kernel_family(n_max: u32, samples: &[f64]) -> MaximalKernelReport {
    MaximalKernelReport {
        residuals: (0..=n_max).map(|n| (n, maximal_kernel_residual(n, samples))).collect(),
        infinite: true,
    }
}

/// One CSV row of the index ladder.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct IndexRow {
    #[serde(rename = "N")]
    pub cut: i64,
    pub dim_plus: u64,
    pub dim_minus: u64,
    pub index: i64,
}

pub fn index_ladder(cuts: impl IntoIterator<Item = i64>) -> Vec<IndexRow> {
    cuts.into_iter()
        .map(|cut| {
            let (dim_plus, dim_minus) = aps_kernel_dims(cut);
            IndexRow { cut, dim_plus, dim_minus, index: aps_index(cut) }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    const SAMPLES: [f64; 4] = [0.1, 0.5, 0.9, 1.0];

    #[test]
    fn dims_and_index() {
        assert_eq!(aps_kernel_dims(0), (0, 0));
        assert_eq!(aps_kernel_dims(3), (3, 0));
        assert_eq!(aps_kernel_dims(-2), (0, 2));
        assert_eq!(aps_kernel_dims(-1), (0, 1));
        assert_eq!(aps_index(5), 5);
        assert_eq!(aps_index(-3), -3);
        assert_eq!(ApsExtension::new(4).index(), 4);
    }

    #[test]
    fn kernel_functions() {
        let c = kernel_function_residual(2, 1, Chirality::Plus, &SAMPLES).unwrap();
        assert!(c.residual <= 1e-10 && c.boundary_ok);
        let c = kernel_function_residual(-1, 0, Chirality::Minus, &SAMPLES).unwrap();
        assert_eq!(c.residual, 0.0);
        assert!(c.boundary_ok);
        assert!(matches!(
            kernel_function_residual(0, 0, Chirality::Plus, &SAMPLES),
            Err(Error::NotInKernel { cut: 0, n: 0, .. })
        ));
        assert!(kernel_function_residual(-3, 3, Chirality::Minus, &SAMPLES).is_err());
    }

    #[test]
    fn boundary_modes_outside_the_kernel_are_rejected() {
        let ext = ApsExtension::new(2);
        assert!(!ext.admits_boundary_mode(Chirality::Plus, 2));
        assert!(!ext.admits_boundary_mode(Chirality::Minus, 2));
        assert!(ext.admits_boundary_mode(Chirality::Minus, 3));
    }

    #[test]
    fn ladder_rows() {
        let rows = index_ladder(-1..=1);
        assert_eq!(rows[0], IndexRow { cut: -1, dim_plus: 0, dim_minus: 1, index: -1 });
        assert_eq!(rows[2].dim_plus, 1);
        assert_eq!(kernel_ladder_rung(-4, &SAMPLES).unwrap().len(), 4);
    }

    #[test]
    fn maximal_family_is_flagged_infinite() {
        let report = maximal_kernel_family(32, &SAMPLES);
        assert!(report.infinite);
        assert_eq!(report.residuals.len(), 33);
        assert!(report.residuals.iter().all(|&(_, r)| r <= 1e-10));
    }
}
