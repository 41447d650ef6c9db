use ncspectra::radial::{expect_inv_rk_numeric, radial_integral, radial_node_count, radial_wavefunction, QuadratureSpec};
use proptest::prelude::*;

/// Textbook hydrogen moments `⟨r^k⟩`, `k ∈ {−2, −1, 1, 2}`.
fn moment(n: u32, l: u32, k: i32) -> f64 {
    let (n, l) = (f64::from(n), f64::from(l));
    match k {
        -2 => 1.0 / (n.powi(3) * (l + 0.5)),
        -1 => 1.0 / (n * n),
        0 => 1.0,
        1 => (3.0 * n * n - l * (l + 1.0)) / 2.0,
        2 => n * n * (5.0 * n * n + 1.0 - 3.0 * l * (l + 1.0)) / 2.0,
        _ => unreachable!(),
    }
}

#[test]
fn textbook_moments() {
    let spec = QuadratureSpec::default();
    for n in 1..=10u32 {
        for l in 0..n {
            for k in -2..=2 {
                if k == -2 && l == 0 {
                    assert!(expect_inv_rk_numeric(n, l, k, &spec).is_err());
                    continue;
                }
                let numeric = expect_inv_rk_numeric(n, l, k, &spec).unwrap();
                let exact = moment(n, l, k);
                assert!(((numeric - exact) / exact).abs() < 1e-10, "n={n} l={l} k={k}: {numeric} vs {exact}");
            }
        }
    }
}

#[test]
fn different_n_are_orthogonal() {
    let spec = QuadratureSpec::default();
    for l in 0..5u32 {
        for n1 in l + 1..=8 {
            for n2 in n1 + 1..=8 {
                let overlap = radial_integral(n1, n2, l, 0, &spec).unwrap();
                assert!(overlap.abs() < 1e-12, "n1={n1} n2={n2} l={l}: {overlap}");
            }
        }
    }
}

#[test]
fn ground_state_closed_form() {
    for r in [1e-9f64, 0.3, 1.0, 4.5] {
        let expected = 2.0 * (-r).exp();
        assert!(radial_wavefunction(1, 0, 0.0).is_err());
        assert!((radial_wavefunction(1, 0, r).unwrap() - expected).abs() < 1e-15);
    }
    assert_eq!(radial_node_count(5, 1, 20000).unwrap(), 3);
}

proptest! {
    #[test]
    fn scaled_rule_agrees(n in 1u32..9, l_pick in 0u32..8, scale in 0.8f64..1.3) {
        let l = l_pick % n;
        let a = expect_inv_rk_numeric(n, l, 1, &QuadratureSpec::default()).unwrap();
        let b = expect_inv_rk_numeric(n, l, 1, &QuadratureSpec::new(200, scale).unwrap()).unwrap();
        prop_assert!(((a - b) / a).abs() < 1e-8);
    }
}
