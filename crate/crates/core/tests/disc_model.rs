//! Closed-form disc matrix elements against quadrature, and the pointwise
//! algebra of eigenmodes and deficiency spinors.

use fredholm_witness::disc::{
    assemble_disc_compression, deficiency_residual, disc_image_coefficient, disc_matrix_element, eigenmode_residual,
    eigenvalue_multiplicities, image_norm_sq_floor, pairing_lower_bound, pairing_upper_bound, Branch,
    DeficiencyFamily, DiscMode, Sign,
};
use fredholm_witness::quadrature::{mode_norm_sq, oracle_disc_element, QuadratureRule};
use proptest::prelude::*;

const BRANCHES: [Branch; 2] = [Branch::One, Branch::Two];

#[test]
fn closed_forms_agree_with_quadrature() {
    let rule = QuadratureRule::default();
    let mut worst = 0.0f64;
    for i in BRANCHES {
        for j in BRANCHES {
            for n in 1..=8 {
                for m in 1..=8 {
                    for k in 1..=8 {
                        for l in 1..=8 {
                            let closed = disc_matrix_element(i, n, k, j, m, l).unwrap();
                            let oracle = oracle_disc_element(i, n, k, j, m, l, &rule).unwrap();
                            worst = worst.max((closed - oracle).norm());
                        }
                    }
                }
            }
        }
    }
    assert!(worst <= 1e-8, "worst disagreement {worst:e}");
}

#[test]
fn assembled_compression_matches_the_oracle() {
    let rule = QuadratureRule::default();
    let c = assemble_disc_compression(8, 8, true).unwrap();
    for (r, p) in c.row_modes.iter().enumerate() {
        for (s, q) in c.col_modes.iter().enumerate() {
            let mut oracle = oracle_disc_element(p.branch, p.n, p.k, q.branch, q.n, q.k, &rule).unwrap();
            if p.branch == Branch::One && q.branch == Branch::Two && p.n == 1 && q.n == 1 && p.k == q.k {
                oracle -= 0.5 / p.alpha().unwrap();
            }
            assert!((c.matrix.get(r, s) - oracle).norm() <= 1e-8, "{p} x {q}");
        }
    }
}

#[test]
fn normalization_is_exact_under_quadrature() {
    let rule = QuadratureRule::default();
    for branch in BRANCHES {
        for n in 1..=8 {
            for k in 1..=8 {
                for sign in [Sign::Plus, Sign::Minus] {
                    let mode = DiscMode::new(branch, n, k, sign).unwrap();
                    assert!((mode_norm_sq(mode, &rule).unwrap() - 1.0).abs() <= 1e-10, "{mode}");
                }
            }
        }
    }
}

#[test]
fn deficiency_spinors_for_small_orders() {
    let radii = [0.05, 0.25, 0.5, 0.75, 1.0];
    for n in 0..=8 {
        for family in [DeficiencyFamily::First, DeficiencyFamily::Second] {
            for sign in [Sign::Plus, Sign::Minus] {
                assert!(deficiency_residual(n, family, sign, &radii) <= 1e-8);
            }
        }
    }
}

#[test]
fn multiplicity_four() {
    let groups = eigenvalue_multiplicities(6, 12).unwrap();
    assert!(groups.iter().all(|&(_, count)| count == 4));
}

#[test]
fn image_floor_values() {
    assert_eq!(image_norm_sq_floor(1), 0.0);
    assert!((image_norm_sq_floor(100) - 0.025_077_0).abs() < 1e-7);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn eigenmodes_solve_the_eigenvalue_equation(
        two in any::<bool>(),
        n in 1u32..=12,
        k in 1u32..=12,
        plus in any::<bool>(),
        r in 0.01f64..1.0,
    ) {
        let branch = if two { Branch::Two } else { Branch::One };
        let sign = if plus { Sign::Plus } else { Sign::Minus };
        let mode = DiscMode::new(branch, n, k, sign).unwrap();
        prop_assert!(eigenmode_residual(mode, &[r]).unwrap() <= 1e-8);
    }

    #[test]
    fn pairings_lie_between_their_digamma_estimates(n in 20u64..400, k in 1u32..=3) {
        // The truncated sum is a lower estimate of the pairing and sits below
        // the upper digamma bound; the lower digamma bound sits below the
        // full series, so it is checked against truncated sum plus tail.
        let len = 10 * n as usize;
        let value = disc_image_coefficient(n, k, len).unwrap();
        let tail = fredholm_witness::disc::pairing_tail_bound(n, k, len);
        prop_assert!(value <= pairing_upper_bound(n, k));
        prop_assert!(pairing_lower_bound(n, k).unwrap() <= value + tail);
    }
}
