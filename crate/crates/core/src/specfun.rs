//! Special functions: digamma/trigamma, Bessel `J_n` and `I_n`, and the
//! positive zeros of `J_n` with certified sign-change brackets.

use std::collections::BTreeMap;
use std::f64::consts::{FRAC_1_SQRT_2, PI};
use std::io::Write;
use std::sync::{LazyLock, RwLock};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::summation::CompensatedSum;
use crate::tolerances::{HANKEL_MIN_ARG, POLYGAMMA_ASYMPTOTIC_MIN, ZERO_BRACKET_WIDTH, ZERO_SCAN_STEP};

// B_{2k} / (2k), k = 1..6
const DIGAMMA_ASYMPTOTIC: [f64; 6] = [
    1.0 / 12.0,
    -1.0 / 120.0,
    1.0 / 252.0,
    -1.0 / 240.0,
    1.0 / 132.0,
    -691.0 / 32760.0,
];

// B_{2k}, k = 1..6
const TRIGAMMA_ASYMPTOTIC: [f64; 6] = [
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
];

fn horner(coefficients: &[f64], t: f64) -> f64 {
    coefficients.iter().rev().fold(0.0, |acc, &c| acc * t + c)
}

/// ψ(x) = d/dx log Γ(x) for `x > 0`.
pub fn digamma(x: f64) -> Result<f64> {
    if x > 0.0 {
        Ok(digamma_positive(x))
    } else {
        Err(Error::Domain { function: "digamma", x })
    }
}

/// ψ'(x) for `x > 0`.
pub fn trigamma(x: f64) -> Result<f64> {
    if x > 0.0 {
        Ok(trigamma_positive(x))
    } else {
        Err(Error::Domain { function: "trigamma", x })
    }
}

/// Digamma without the domain check; callers guarantee `x > 0`.
pub(crate) fn digamma_positive(mut x: f64) -> f64 {
    debug_assert!(x > 0.0);
    if x.is_infinite() {
        return f64::INFINITY;
    }
    let mut shift = CompensatedSum::new();
    while x < POLYGAMMA_ASYMPTOTIC_MIN {
        shift.add(-1.0 / x);
        x += 1.0;
    }
    let inv = x.recip();
    let inv2 = inv * inv;
    let series = inv2 * horner(&DIGAMMA_ASYMPTOTIC, inv2);
    let mut acc = CompensatedSum::new();
    acc.add(x.ln());
    acc.add(-0.5 * inv);
    acc.add(-series);
    acc.add(shift.value());
    acc.value()
}

pub(crate) fn trigamma_positive(mut x: f64) -> f64 {
    debug_assert!(x > 0.0);
    if x.is_infinite() {
        return 0.0;
    }
    let mut shift = CompensatedSum::new();
    while x < POLYGAMMA_ASYMPTOTIC_MIN {
        shift.add(1.0 / (x * x));
        x += 1.0;
    }
    let inv = x.recip();
    let inv2 = inv * inv;
    let mut acc = CompensatedSum::new();
    acc.add(inv * inv2 * horner(&TRIGAMMA_ASYMPTOTIC, inv2));
    acc.add(0.5 * inv2);
    acc.add(inv);
    acc.add(shift.value());
    acc.value()
}

/// Bessel function of the first kind `J_n(x)` for `x >= 0`.
///
/// Returns NaN for negative or NaN arguments. Three regimes:
/// the power series where it has no cancellation (`x^2 <= 4(n+1)`), the
/// Hankel asymptotic expansion for `x >= max(25, n^2)`, and Miller's
/// downward recurrence normalized by `J_0 + 2 sum J_2k = 1` in between.
pub fn bessel_j(n: u32, x: f64) -> f64 {
    if x.is_nan() || x < 0.0 {
        return f64::NAN;
    }
    if x == 0.0 {
        return if n == 0 { 1.0 } else { 0.0 };
    }
    let order = f64::from(n);
    if x * x <= 4.0 * (order + 1.0) {
        j_series(n, x)
    } else if x >= HANKEL_MIN_ARG.max(order * order) {
        j_hankel(n, x)
    } else {
        j_miller(n, x)
    }
}

/// `J_n'(x)` through `J_n' = (J_{n-1} - J_{n+1}) / 2` (and `J_0' = -J_1`).
pub fn bessel_j_derivative(n: u32, x: f64) -> f64 {
    if n == 0 {
        -bessel_j(1, x)
    } else {
        0.5 * (bessel_j(n - 1, x) - bessel_j(n + 1, x))
    }
}

fn j_series(n: u32, x: f64) -> f64 {
    let half = 0.5 * x;
    let mut term = 1.0;
    for i in 1..=n {
        term *= half / f64::from(i);
    }
    let q = half * half;
    let mut acc = CompensatedSum::new();
    acc.add(term);
    for m in 1..200u32 {
        term *= -q / (f64::from(m) * f64::from(m + n));
        acc.add(term);
        if term.abs() <= f64::EPSILON * 1e-3 * acc.value().abs() {
            break;
        }
    }
    acc.value()
}

fn j_hankel(n: u32, x: f64) -> f64 {
    let mu = 4.0 * f64::from(n) * f64::from(n);
    let eight_x = 8.0 * x;
    let mut p = CompensatedSum::new();
    let mut q = CompensatedSum::new();
    p.add(1.0);
    let mut term = 1.0f64;
    let mut previous = f64::INFINITY;
    for k in 1..120u32 {
        let odd = f64::from(2 * k - 1);
        term *= (mu - odd * odd) / (f64::from(k) * eight_x);
        if term.abs() >= previous || term == 0.0 {
            break;
        }
        previous = term.abs();
        // k = 1, 2, 3, 4, ... contributes +Q, -P, -Q, +P, ...
        match k % 4 {
            1 => q.add(term),
            2 => p.add(-term),
            3 => q.add(-term),
            _ => p.add(term),
        }
        if term.abs() < 1e-18 {
            break;
        }
    }
    // chi = x - phase with phase = (2n + 1) pi / 4; reduce the phase exactly.
    let (cos_phase, sin_phase) = match (2 * n + 1) % 8 {
        1 => (FRAC_1_SQRT_2, FRAC_1_SQRT_2),
        3 => (-FRAC_1_SQRT_2, FRAC_1_SQRT_2),
        5 => (-FRAC_1_SQRT_2, -FRAC_1_SQRT_2),
        _ => (FRAC_1_SQRT_2, -FRAC_1_SQRT_2),
    };
    let (sin_x, cos_x) = x.sin_cos();
    let cos_chi = cos_x * cos_phase + sin_x * sin_phase;
    let sin_chi = sin_x * cos_phase - cos_x * sin_phase;
    (2.0 / (PI * x)).sqrt() * (p.value() * cos_chi - q.value() * sin_chi)
}

fn j_miller(n: u32, x: f64) -> f64 {
    const RESCALE: f64 = 1e250;
    let top = f64::from(n).max(x);
    let mut start = (top + 20.0 + (60.0 * top).sqrt()).ceil() as u32;
    start += start % 2;
    let two_over_x = 2.0 / x;
    let mut above = 0.0f64;
    let mut current = 1.0f64;
    let mut result = if start == n { current } else { 0.0 };
    let mut norm = CompensatedSum::new();
    norm.add(2.0 * current);
    for k in (1..=start).rev() {
        let below = f64::from(k) * two_over_x * current - above;
        above = current;
        current = below;
        let index = k - 1;
        if index == n {
            result = current;
        }
        if index > 0 && index % 2 == 0 {
            norm.add(2.0 * current);
        }
        if current.abs() > RESCALE {
            let s = 1.0 / RESCALE;
            current *= s;
            above *= s;
            result *= s;
            let scaled = norm.value() * s;
            norm = CompensatedSum::new();
            norm.add(scaled);
        }
    }
    norm.add(current);
    result / norm.value()
}

/// Modified Bessel function `I_n(x)` by its power series (positive terms).
///
/// Intended for the unit-disc range `0 <= x <= 1`; the series stays exact
/// to rounding for moderate `x` as well.
pub fn bessel_i(n: u32, x: f64) -> f64 {
    if x.is_nan() || x < 0.0 {
        return f64::NAN;
    }
    if x == 0.0 {
        return if n == 0 { 1.0 } else { 0.0 };
    }
    let half = 0.5 * x;
    let mut term = 1.0;
    for i in 1..=n {
        term *= half / f64::from(i);
    }
    let q = half * half;
    let mut acc = CompensatedSum::new();
    acc.add(term);
    for m in 1..500u32 {
        term *= q / (f64::from(m) * f64::from(m + n));
        acc.add(term);
        if term <= f64::EPSILON * 1e-3 * acc.value() {
            break;
        }
    }
    acc.value()
}

/// `I_n'(x)` through `I_n' = (I_{n-1} + I_{n+1}) / 2` (and `I_0' = I_1`).
pub fn bessel_i_derivative(n: u32, x: f64) -> f64 {
    if n == 0 {
        bessel_i(1, x)
    } else {
        0.5 * (bessel_i(n - 1, x) + bessel_i(n + 1, x))
    }
}

/// One cached zero `alpha_{n,k}` of `J_n` with its certified bracket.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BesselZero {
    pub n: u32,
    pub k: u32,
    pub alpha: f64,
    pub bracket_low: f64,
    pub bracket_high: f64,
}

impl BesselZero {
    /// Re-evaluates `J_n` at both bracket ends and checks for a sign change.
    pub fn is_certified(&self) -> bool {
        let lo = bessel_j(self.n, self.bracket_low);
        let hi = bessel_j(self.n, self.bracket_high);
        self.bracket_low < self.alpha
            && self.alpha < self.bracket_high
            && self.bracket_high - self.bracket_low <= ZERO_BRACKET_WIDTH
            && opposite_signs(lo, hi)
    }
}

fn opposite_signs(a: f64, b: f64) -> bool {
    (a < 0.0 && b > 0.0) || (a > 0.0 && b < 0.0)
}

/// McMahon's large-zero expansion, used as the Newton starting point.
pub fn mcmahon_guess(n: u32, k: u32) -> f64 {
    let beta = (f64::from(k) + 0.5 * f64::from(n) - 0.25) * PI;
    let mu = 4.0 * f64::from(n) * f64::from(n);
    let b8 = 8.0 * beta;
    beta - (mu - 1.0) / b8 - 4.0 * (mu - 1.0) * (7.0 * mu - 31.0) / (3.0 * b8.powi(3))
}

/// Append-only table of Bessel zeros, safe for concurrent readers.
///
/// Zeros of each order are located in rank order: zero `k` is isolated by
/// scanning forward from the bracket of zero `k - 1`, so the rank attached to
/// each entry is exact.
#[derive(Debug, Default)]
pub struct BesselZeroTable {
    orders: RwLock<BTreeMap<u32, Vec<BesselZero>>>,
}

static GLOBAL_TABLE: LazyLock<BesselZeroTable> = LazyLock::new(BesselZeroTable::new);

impl BesselZeroTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// Process-wide table shared by all models.
    pub fn global() -> &'static BesselZeroTable {
        &GLOBAL_TABLE
    }

    pub fn entry(&self, n: u32, k: u32) -> Result<BesselZero> {
        if k == 0 {
            return Err(Error::InvalidMode("Bessel zero rank must be at least 1".into()));
        }
        self.ensure(n, k as usize)?;
        let orders = self.orders.read().expect("zero table lock poisoned");
        Ok(orders[&n][k as usize - 1])
    }

    pub fn zero(&self, n: u32, k: u32) -> Result<f64> {
        self.entry(n, k).map(|z| z.alpha)
    }

    /// The first `count` zeros of `J_n`, in increasing order.
    pub fn zeros(&self, n: u32, count: usize) -> Result<Vec<f64>> {
        self.ensure(n, count)?;
        let orders = self.orders.read().expect("zero table lock poisoned");
        Ok(orders
            .get(&n)
            .map(|zs| zs[..count].iter().map(|z| z.alpha).collect())
            .unwrap_or_default())
    }

    fn ensure(&self, n: u32, count: usize) -> Result<()> {
        {
            let orders = self.orders.read().expect("zero table lock poisoned");
            if orders.get(&n).map_or(0, Vec::len) >= count {
                return Ok(());
            }
        }
        let mut orders = self.orders.write().expect("zero table lock poisoned");
        let zeros = orders.entry(n).or_default();
        while zeros.len() < count {
            let start = match zeros.last() {
                Some(z) => z.bracket_high,
                // J_n > 0 on (0, n] for n >= 1, and J_0(0) = 1.
                None => f64::from(n),
            };
            let rank = zeros.len() as u32 + 1;
            zeros.push(locate_zero(n, rank, start)?);
        }
        Ok(())
    }

    /// Snapshot of every cached zero, ordered by `(n, k)`.
    pub fn entries(&self) -> Vec<BesselZero> {
        let orders = self.orders.read().expect("zero table lock poisoned");
        orders.values().flatten().copied().collect()
    }

    /// Writes the table as CSV: `n,k,alpha,bracket_low,bracket_high`.
    pub fn write_csv<W: Write>(&self, writer: W) -> Result<()> {
        let mut out = csv::Writer::from_writer(writer);
        out.write_record(["n", "k", "alpha", "bracket_low", "bracket_high"])?;
        for z in self.entries() {
            out.write_record([
                z.n.to_string(),
                z.k.to_string(),
                format!("{:.17e}", z.alpha),
                format!("{:.17e}", z.bracket_low),
                format!("{:.17e}", z.bracket_high),
            ])?;
        }
        out.flush()?;
        Ok(())
    }
}

/// `alpha_{n,k}` from the global table.
pub fn bessel_zero(n: u32, k: u32) -> Result<f64> {
    BesselZeroTable::global().zero(n, k)
}

fn locate_zero(n: u32, rank: u32, start: f64) -> Result<BesselZero> {
    let failure = |reason| Error::ZeroCertification { order: n, rank, reason };

    // Isolate the next sign change after `start`.
    let mut lo = start;
    let mut f_lo = bessel_j(n, lo);
    if f_lo == 0.0 {
        lo += ZERO_BRACKET_WIDTH;
        f_lo = bessel_j(n, lo);
    }
    let mut hi = lo;
    let mut f_hi = f_lo;
    let mut steps = 0;
    while !opposite_signs(f_lo, f_hi) && f_hi != 0.0 {
        lo = hi;
        f_lo = f_hi;
        hi = lo + ZERO_SCAN_STEP;
        f_hi = bessel_j(n, hi);
        steps += 1;
        if steps > 64 || !f_hi.is_finite() {
            return Err(failure("no sign change found after the previous zero"));
        }
    }
    if f_hi == 0.0 {
        hi += 0.25 * ZERO_BRACKET_WIDTH;
    }

    // Safeguarded Newton from the McMahon guess, shrinking the bracket as we go.
    let guess = mcmahon_guess(n, rank);
    let mut x = if lo < guess && guess < hi { guess } else { 0.5 * (lo + hi) };
    for _ in 0..100 {
        let fx = bessel_j(n, x);
        if fx == 0.0 {
            break;
        }
        if opposite_signs(fx, f_lo) {
            hi = x;
        } else {
            lo = x;
            f_lo = fx;
        }
        let slope = bessel_j_derivative(n, x);
        let newton = x - fx / slope;
        let next = if slope != 0.0 && lo < newton && newton < hi {
            newton
        } else {
            0.5 * (lo + hi)
        };
        if (next - x).abs() <= 4.0 * f64::EPSILON * x {
            x = next;
            break;
        }
        x = next;
    }
    // The safeguard may have ended on a bisection midpoint; polish with
    // unguarded Newton steps while they reduce |J_n|.
    for _ in 0..4 {
        let fx = bessel_j(n, x);
        let polished = x - fx / bessel_j_derivative(n, x);
        if !polished.is_finite() || bessel_j(n, polished).abs() >= fx.abs() {
            break;
        }
        x = polished;
    }

    // Certify a narrow bracket around the Newton limit; fall back to bisection.
    let half = 0.45 * ZERO_BRACKET_WIDTH;
    let (a, b) = (x - half, x + half);
    if opposite_signs(bessel_j(n, a), bessel_j(n, b)) {
        return Ok(BesselZero { n, k: rank, alpha: x, bracket_low: a, bracket_high: b });
    }
    for _ in 0..200 {
        if hi - lo <= ZERO_BRACKET_WIDTH {
            break;
        }
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let f_mid = bessel_j(n, mid);
        if opposite_signs(f_mid, f_lo) {
            hi = mid;
        } else {
            lo = mid;
            f_lo = f_mid;
        }
    }
    let zero = BesselZero { n, k: rank, alpha: 0.5 * (lo + hi), bracket_low: lo, bracket_high: hi };
    if zero.is_certified() {
        Ok(zero)
    } else {
        Err(failure("bisection did not end in a certified bracket"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn digamma_rejects_nonpositive_arguments() {
        assert!(matches!(digamma(0.0), Err(Error::Domain { .. })));
        assert!(matches!(digamma(-1.5), Err(Error::Domain { .. })));
        assert!(matches!(trigamma(0.0), Err(Error::Domain { .. })));
        assert!(digamma(f64::NAN).is_err());
    }

    #[test]
    fn digamma_recurrence_step() {
        let d = digamma(2.0).unwrap() - digamma(1.0).unwrap();
        assert!((d - 1.0).abs() < 1e-15);
    }

    #[test]
    fn digamma_at_one_is_minus_euler_gamma() {
        // gamma = lim (H_N - ln N); with the Euler-Maclaurin correction the
        // partial sums converge fast enough to pin 1e-14.
        let n = 100_000u32;
        let h = crate::summation::sum((1..=n).map(|k| 1.0 / f64::from(k)));
        let nf = f64::from(n);
        let gamma = h - nf.ln() - 0.5 / nf + 1.0 / (12.0 * nf * nf);
        assert!((gamma - 0.577_215_664_901_532_9).abs() < 1e-14);
        assert!((digamma(1.0).unwrap() + gamma).abs() < 1e-13);
    }

    #[test]
    fn digamma_grows_like_log() {
        let m = 1.0e6;
        let ratio = digamma(m + 1.0).unwrap() / (m + 1.0f64).ln();
        assert!((ratio - 1.0).abs() < 5e-7);
    }

    #[test]
    fn trigamma_at_one_is_basel_sum() {
        // partial sums of 1/n^2 plus the tail 1/N - 1/(2N^2) + 1/(6N^3)
        let n = 10_000u32;
        let partial = crate::summation::sum((1..n).map(|k| 1.0 / (f64::from(k) * f64::from(k))));
        let nf = f64::from(n);
        let oracle = partial + 1.0 / nf + 0.5 / (nf * nf) + 1.0 / (6.0 * nf.powi(3));
        assert!((oracle - 1.644_934_066_848_226_4).abs() < 1e-14);
        assert!((trigamma(1.0).unwrap() - oracle).abs() < 1e-13);
        let t2 = trigamma(2.0).unwrap();
        assert!((t2 - (PI * PI / 6.0 - 1.0)).abs() < 1e-13);
    }

    #[test]
    fn trigamma_times_argument_tends_to_one() {
        let x = 1.0e5 + 1.0;
        assert!((x * trigamma(x).unwrap() - 1.0).abs() < 1e-5);
    }

    #[test]
    fn bessel_values_at_origin() {
        assert_eq!(bessel_j(0, 0.0), 1.0);
        assert_eq!(bessel_j(1, 0.0), 0.0);
        assert_eq!(bessel_i(0, 0.0), 1.0);
        assert_eq!(bessel_i(2, 0.0), 0.0);
        assert!(bessel_j(0, -1.0).is_nan());
    }

    #[test]
    fn bessel_i_at_one_matches_series_oracle() {
        let mut sum = 0.0;
        let mut term = 1.0f64;
        for m in 0..30 {
            if m > 0 {
                term *= 0.25 / f64::from(m * m);
            }
            sum += term;
        }
        assert!((bessel_i(0, 1.0) - sum).abs() < 1e-15);
        assert!((bessel_i(0, 1.0) - 1.266_065_877_752_008_4).abs() < 1e-15);
    }

    #[test]
    fn hankel_and_miller_agree_at_the_switch() {
        for n in [0u32, 1, 2, 3, 4, 5] {
            let x = HANKEL_MIN_ARG.max(f64::from(n * n)) + 0.3;
            assert!((j_hankel(n, x) - j_miller(n, x)).abs() < 1e-14, "n = {n}");
        }
    }

    #[test]
    fn first_zeros_match_bisection_on_the_series() {
        // Independent oracle: bisection on the raw power series.
        fn series_bisect(n: u32, mut lo: f64, mut hi: f64) -> f64 {
            for _ in 0..80 {
                let mid = 0.5 * (lo + hi);
                if j_series_raw(n, mid).signum() == j_series_raw(n, lo).signum() {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            0.5 * (lo + hi)
        }
        fn j_series_raw(n: u32, x: f64) -> f64 {
            let mut term = (0.5 * x).powi(n as i32) / (1..=n).map(f64::from).product::<f64>();
            let mut sum = term;
            for m in 1..60 {
                term *= -(0.25 * x * x) / (f64::from(m) * f64::from(m + n));
                sum += term;
            }
            sum
        }
        let a01 = series_bisect(0, 2.0, 3.0);
        let a11 = series_bisect(1, 3.5, 4.0);
        assert!((a01 - 2.404_825_557_695_773).abs() < 1e-13);
        assert!((bessel_zero(0, 1).unwrap() - a01).abs() < 1e-10);
        assert!((bessel_zero(1, 1).unwrap() - a11).abs() < 1e-10);
        assert!(bessel_j(0, 2.404_825_557_695_773).abs() < 1e-10);
    }

    #[test]
    fn fifth_zero_of_j0_sits_inside_the_classical_bounds() {
        let a = bessel_zero(0, 5).unwrap();
        assert!(PI * (5.0 - 0.25) < a && a < PI * (5.0 - 0.125));
        assert!(a > 14.9226 && a < 15.3153);
    }

    #[test]
    fn zero_rank_is_rejected() {
        assert!(matches!(bessel_zero(0, 0), Err(Error::InvalidMode(_))));
    }

    #[test]
    fn private_table_fills_in_rank_order() {
        let table = BesselZeroTable::new();
        let z = table.zeros(3, 6).unwrap();
        assert_eq!(z.len(), 6);
        assert!(z.windows(2).all(|w| w[0] < w[1]));
        let entries = table.entries();
        assert_eq!(entries.len(), 6);
        assert!(entries.iter().all(BesselZero::is_certified));
        assert_eq!(entries[5].k, 6);
    }

    #[test]
    fn csv_export_has_header_and_full_precision() {
        let table = BesselZeroTable::new();
        table.zeros(0, 2).unwrap();
        let mut buffer = Vec::new();
        table.write_csv(&mut buffer).unwrap();
        let text = String::from_utf8(buffer).unwrap();
        let mut lines = text.lines();
        assert_eq!(lines.next(), Some("n,k,alpha,bracket_low,bracket_high"));
        let first: Vec<&str> = lines.next().unwrap().split(',').collect();
        assert_eq!(first[0], "0");
        assert_eq!(first[1], "1");
        let alpha: f64 = first[2].parse().unwrap();
        assert!((alpha - 2.404_825_557_695_773).abs() < 1e-12);
        assert!(first[2].len() >= 20);
    }
}
