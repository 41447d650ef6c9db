//! Symbolic check that the shift `x'_i = x_i − Σ_j θ_ij p_j / (2ħ)`,
//! `p'_i = p_i` realizes the non-commutative algebra on canonical variables.

use std::fmt;

use super::poly::{imag, real, Axis, OperatorPoly};

/// `x'_i = x_i − Σ_j θ_ij p_j / (2ħ)`.
pub fn bopp_shift(i: Axis) -> OperatorPoly {
    let shift: OperatorPoly = (0..3)
        .map(|j| &(&OperatorPoly::theta(i, j) * &OperatorPoly::hbar_pow(-1)) * &OperatorPoly::p(j))
        .sum();
    &OperatorPoly::x(i) - &shift.scale(real(1, 2))
}

/// One commutator of the primed set with its expected normal form.
#[derive(Debug, Clone)]
pub struct CommutatorCheck {
    pub label: String,
    pub computed: OperatorPoly,
    pub expected: OperatorPoly,
}

impl CommutatorCheck {
    pub fn passed(&self) -> bool {
        self.computed == self.expected
    }
}

/// `[x'_i, x'_j] = iθ_ij`, `[p'_i, p'_j] = 0` and `[x'_i, p'_j] = iħδ_ij`
/// for every ordered pair of axes.
pub fn verify_primed_commutators() -> Vec<CommutatorCheck> {
    let mut checks = Vec::new();
    for i in 0..3 {
        for j in 0..3 {
            checks.push(CommutatorCheck {
                label: format!("[x'{}, x'{}] = iθ{}{}", i + 1, j + 1, i + 1, j + 1),
                computed: bopp_shift(i).commutator(&bopp_shift(j)),
                expected: OperatorPoly::theta(i, j).scale(imag(1, 1)),
            });
        }
    }
    for i in 0..3 {
        for j in 0..3 {
            checks.push(CommutatorCheck {
                label: format!("[p'{}, p'{}] = 0", i + 1, j + 1),
                computed: OperatorPoly::p(i).commutator(&OperatorPoly::p(j)),
                expected: OperatorPoly::zero(),
            });
        }
    }
    for i in 0..3 {
        for j in 0..3 {
            let expected = if i == j { OperatorPoly::hbar_pow(1).scale(imag(1, 1)) } else { OperatorPoly::zero() };
            checks.push(CommutatorCheck {
                label: format!("[x'{}, p'{}] = iħδ{}{}", i + 1, j + 1, i + 1, j + 1),
                computed: bopp_shift(i).commutator(&OperatorPoly::p(j)),
                expected,
            });
        }
    }
    checks
}

/// `Σ_i x'_i x'_i`, expanded and normal-ordered.
pub fn sqrt_argument_expanded() -> OperatorPoly {
    (0..3).map(|i| &bopp_shift(i) * &bopp_shift(i)).sum()
}

/// `x_i x_i − Σ_ij θ_ij x_i p_j / ħ + Σ_ijk θ_ij θ_ik p_j p_k / (4ħ²)`.
pub fn sqrt_argument_simplified() -> OperatorPoly {
    let hbar_inv = OperatorPoly::hbar_pow(-1);
    let hbar_inv2 = OperatorPoly::hbar_pow(-2);
    let mut out = OperatorPoly::zero();
    for i in 0..3 {
        out = &out + &(&OperatorPoly::x(i) * &OperatorPoly::x(i));
        for j in 0..3 {
            let cross = &(&(&OperatorPoly::theta(i, j) * &hbar_inv) * &OperatorPoly::x(i)) * &OperatorPoly::p(j);
            out = &out - &cross;
            for k in 0..3 {
                let thetas = &OperatorPoly::theta(i, j) * &OperatorPoly::theta(i, k);
                let quad = &(&(&thetas * &hbar_inv2) * &OperatorPoly::p(j)) * &OperatorPoly::p(k);
                out = &out + &quad.scale(real(1, 4));
            }
        }
    }
    out
}

/// `Σ_ij θ_ij [p_j, x_i] / (2ħ)`: the c-number left over when `p_j x_i` is
/// reordered inside the cross term. Only `i = j` survives the contraction,
/// where `θ_ii = 0`.
pub fn reordering_remainder() -> OperatorPoly {
    let mut out = OperatorPoly::zero();
    for i in 0..3 {
        for j in 0..3 {
            let bracket = OperatorPoly::p(j).commutator(&OperatorPoly::x(i));
            let weight = &OperatorPoly::theta(i, j) * &OperatorPoly::hbar_pow(-1);
            out = &out + &(&weight * &bracket).scale(real(1, 2));
        }
    }
    out
}

#[derive(Debug, Clone)]
pub struct SqrtArgumentReport {
    pub expanded: OperatorPoly,
    pub simplified: OperatorPoly,
    pub remainder: OperatorPoly,
    pub commutators: Vec<CommutatorCheck>,
}

impl SqrtArgumentReport {
    pub fn identity_holds(&self) -> bool {
        self.expanded == self.simplified && self.remainder.is_zero()
    }

    pub fn commutators_hold(&self) -> bool {
        self.commutators.iter().all(CommutatorCheck::passed)
    }

    pub fn passed(&self) -> bool {
        self.identity_holds() && self.commutators_hold()
    }
}

/// Expands `Σ_i x'_i x'_i` and compares it with the simplified square-root
/// argument, alongside the full set of primed commutators.
pub fn verify_sqrt_argument_identity() -> SqrtArgumentReport {
    SqrtArgumentReport {
        expanded: sqrt_argument_expanded(),
        simplified: sqrt_argument_simplified(),
        remainder: reordering_remainder(),
        commutators: verify_primed_commutators(),
    }
}

fn write_terms(f: &mut fmt::Formatter<'_>, poly: &OperatorPoly) -> fmt::Result {
    if poly.is_zero() {
        return writeln!(f, "      0");
    }
    for (w, p, c) in poly.terms() {
        writeln!(f, "      {}", OperatorPoly::term(*c, *p, *w))?;
    }
    Ok(())
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

impl fmt::Display for SqrtArgumentReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Bopp shift  x'_i = x_i - Σ_j θ_ij p_j / (2ħ),  p'_i = p_i")?;
        writeln!(f, "  primed commutators:")?;
        for c in &self.commutators {
            writeln!(f, "    [{}] {:<24} normal form: {}", verdict(c.passed()), c.label, c.computed)?;
        }
        writeln!(f, "  square-root argument Σ_i x'_i x'_i, expanded ({} terms):", self.expanded.len())?;
        write_terms(f, &self.expanded)?;
        writeln!(
            f,
            "  simplified x_i x_i - Σ θ_ij x_i p_j / ħ + Σ θ_ij θ_ik p_j p_k / (4ħ²) ({} terms):",
            self.simplified.len()
        )?;
        write_terms(f, &self.simplified)?;
        writeln!(f, "  reordering remainder Σ θ_ij [p_j, x_i] / (2ħ) = {}  (θ_ii = 0)", self.remainder)?;
        writeln!(f, "  identity: {}", verdict(self.identity_holds()))?;
        write!(f, "  overall: {}", verdict(self.passed()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primed_coordinates_do_not_commute() {
        let c = bopp_shift(0).commutator(&bopp_shift(1));
        assert_eq!(c, OperatorPoly::theta(0, 1).scale(imag(1, 1)));
        assert!(bopp_shift(0).commutator(&bopp_shift(0)).is_zero());
        for i in 0..3 {
            for j in 0..3 {
                let c = bopp_shift(i).commutator(&OperatorPoly::p(j));
                let expected =
                    if i == j { OperatorPoly::hbar_pow(1).scale(imag(1, 1)) } else { OperatorPoly::zero() };
                assert_eq!(c, expected);
            }
        }
    }

    #[test]
    fn all_primed_commutators_reproduced() {
        let checks = verify_primed_commutators();
        assert_eq!(checks.len(), 27);
        assert!(checks.iter().all(CommutatorCheck::passed));
    }

    #[test]
    fn square_root_argument_identity() {
        let report = verify_sqrt_argument_identity();
        assert!(report.passed(), "{report}");
        assert!(report.remainder.is_zero());
        let text = report.to_string();
        assert!(text.contains("identity: PASS"));
        assert!(text.contains("overall: PASS"));
    }

    #[test]
    fn commutative_limit() {
        let none = [false; 3];
        let lhs = sqrt_argument_expanded().restrict_theta(none);
        let expected: OperatorPoly = (0..3).map(|i| &OperatorPoly::x(i) * &OperatorPoly::x(i)).sum();
        assert_eq!(lhs, expected);
        assert_eq!(sqrt_argument_simplified().restrict_theta(none), expected);
    }

    #[test]
    fn planar_theta_gives_angular_momentum_cross_term() {
        let cross = sqrt_argument_expanded().restrict_theta([true, false, false]).theta_degree(1);
        // -(θ/ħ)(x1 p2 - x2 p1)
        let lz = &(&OperatorPoly::x(0) * &OperatorPoly::p(1)) - &(&OperatorPoly::x(1) * &OperatorPoly::p(0));
        let expected = -&(&(&OperatorPoly::theta(0, 1) * &OperatorPoly::hbar_pow(-1)) * &lz);
        assert_eq!(cross, expected);
    }

    #[test]
    fn a_wrong_sign_is_detected() {
        let flipped: OperatorPoly = (0..3)
            .map(|i| {
                let s = &OperatorPoly::x(i) + &(&bopp_shift(i) - &OperatorPoly::x(i)).scale(real(-1, 1));
                &s * &s
            })
            .sum();
        assert_ne!(flipped, sqrt_argument_simplified());
    }
}
