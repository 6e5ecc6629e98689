//! Gauss-Legendre quadrature on `[0, 1]` and the quadrature oracle for disc
//! matrix elements.
//!
//! Radial integrals are taken against the disc measure `r dr`; the factor
//! `r` is folded into the integrand rather than into the rule. Angular
//! integrals are never done numerically: each spinor component is a single
//! mode `e^{i p t}`, so `(1/2 pi) int e^{i (q - p) t} dt` is a Kronecker delta.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::disc::{Branch, DiscMode, ModeComponent, Sign};
use crate::error::{Error, Result};
use crate::specfun::bessel_j;
use crate::summation::CompensatedSum;
use crate::tolerances::QUADRATURE_ORDER;

/// Gauss-Legendre nodes and weights mapped to `[0, 1]`.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureRule {
    nodes: Vec<f64>,
    weights: Vec<f64>,
    order: usize,
}

impl QuadratureRule {
    pub fn gauss_legendre(order: usize) -> Result<Self> {
        if order == 0 {
            return Err(Error::Config("quadrature order must be positive".into()));
        }
        let mut nodes = vec![0.0; order];
        let mut weights = vec![0.0; order];
        let n = order as f64;
        for i in 0..order.div_ceil(2) {
            // Tricomi's initial guess for the i-th largest root, then Newton.
            let mut x = (PI * (i as f64 + 0.75) / (n + 0.5)).cos();
            let mut derivative = 0.0;
            for _ in 0..100 {
                let (p, dp) = legendre_with_derivative(order, x);
                derivative = dp;
                let step = p / dp;
                x -= step;
                if step.abs() < 1e-16 {
                    break;
                }
            }
            let (_, dp) = legendre_with_derivative(order, x);
            if dp != 0.0 {
                derivative = dp;
            }
            let w = 2.0 / ((1.0 - x * x) * derivative * derivative);
            // map [-1, 1] -> [0, 1]
            nodes[i] = 0.5 * (1.0 - x);
            nodes[order - 1 - i] = 0.5 * (1.0 + x);
            weights[i] = 0.5 * w;
            weights[order - 1 - i] = 0.5 * w;
        }
        Ok(Self { nodes, weights, order })
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// `int_0^1 f(x) dx`.
    pub fn integrate<F: Fn(f64) -> f64>(&self, f: F) -> f64 {
        let mut acc = CompensatedSum::new();
        for (&x, &w) in self.nodes.iter().zip(&self.weights) {
            acc.add(w * f(x));
        }
        acc.value()
    }
}

impl Default for QuadratureRule {
    fn default() -> Self {
        Self::gauss_legendre(QUADRATURE_ORDER).expect("default order is positive")
    }
}

/// `(P_n(x), P_n'(x))` by the three-term recurrence.
fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    if n == 0 {
        return (1.0, 0.0);
    }
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, dp)
}

/// `int_0^1 f(r) r dr`.
pub fn radial_integral<F: Fn(f64) -> f64>(f: F, rule: &QuadratureRule) -> f64 {
    rule.integrate(|r| f(r) * r)
}

fn component_at(c: &ModeComponent, r: f64) -> f64 {
    c.scale * bessel_j(c.order, r * c.alpha)
}

/// `<i,n,k,+| r e^{-i t} |j,m,l,->` by quadrature.
///
/// For every pair of components the angular integral of
/// `e^{-i p t} e^{-i t} e^{i q t}` selects `q = p + 1`; the surviving radial
/// integrand `r * f_+(r) f_-(r)` is integrated against `r dr`. The mode
/// normalizations `1/J_n(alpha_{n-1,k})` are part of the component scales.
pub fn oracle_disc_element(
    i: Branch,
    n: u32,
    k: u32,
    j: Branch,
    m: u32,
    l: u32,
    rule: &QuadratureRule,
) -> Result<Complex64> {
    let row = DiscMode::new(i, n, k, Sign::Plus)?;
    let col = DiscMode::new(j, m, l, Sign::Minus)?;
    let (row_parts, col_parts) = (row.components()?, col.components()?);
    let mut total = 0.0;
    for (a, b) in row_parts.iter().zip(&col_parts) {
        if b.angular != a.angular + 1 {
            continue;
        }
        total += radial_integral(|r| r * component_at(a, r) * component_at(b, r), rule);
    }
    Ok(Complex64::new(total, 0.0))
}

/// `<mode|mode>` by quadrature; equals 1 for a correctly normalized mode.
pub fn mode_norm_sq(mode: DiscMode, rule: &QuadratureRule) -> Result<f64> {
    let parts = mode.components()?;
    Ok(parts
        .iter()
        .map(|c| radial_integral(|r| component_at(c, r).powi(2), rule))
        .sum())
}
