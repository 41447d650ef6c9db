//! Floating-point Clebsch–Gordan coefficients for arbitrary `(j1, j2)`.
//!
//! Each `|J, J⟩` is built in the `M = J` product subspace as the unit vector
//! orthogonal to every `|J', J⟩` with `J' > J`, phased so the `m1 = j1`
//! component is positive. Lower projections follow from applying
//! `J₋ = J₁₋ + J₂₋`.

use std::collections::BTreeMap;

use super::half::HalfInt;

/// Product-basis amplitudes at fixed `M`, keyed by `2·m1`.
type Amplitudes = BTreeMap<i32, f64>;

/// `√(j(j+1) − m(m−1))` with doubled arguments.
fn lowering_factor(tj: i32, tm: i32) -> f64 {
    let v = f64::from(tj * (tj + 2) - tm * (tm - 2)) / 4.0;
    v.max(0.0).sqrt()
}

struct Coupler {
    tj1: i32,
    tj2: i32,
}

impl Coupler {
    fn contains(&self, tm1: i32, tm2: i32) -> bool {
        tm1.abs() <= self.tj1
            && tm2.abs() <= self.tj2
            && (self.tj1 - tm1) % 2 == 0
            && (self.tj2 - tm2) % 2 == 0
    }

    fn lower(&self, state: &Amplitudes, tj: i32, tm: i32) -> Amplitudes {
        let mut out = Amplitudes::new();
        for (&tm1, &c) in state {
            let tm2 = tm - tm1;
            if tm1 - 2 >= -self.tj1 {
                *out.entry(tm1 - 2).or_default() += c * lowering_factor(self.tj1, tm1);
            }
            if tm2 - 2 >= -self.tj2 {
                *out.entry(tm1).or_default() += c * lowering_factor(self.tj2, tm2);
            }
        }
        let norm = lowering_factor(tj, tm);
        out.values_mut().for_each(|c| *c /= norm);
        out
    }

    /// `|J, M⟩` obtained by lowering `|J, J⟩`.
    fn lowered(&self, top: &Amplitudes, tj: i32, tm: i32) -> Amplitudes {
        let mut state = top.clone();
        let mut cur = tj;
        while cur > tm {
            state = self.lower(&state, tj, cur);
            cur -= 2;
        }
        state
    }

    /// `|J, J⟩` for every `J` from `j1 + j2` down to `tj_min`, highest first.
    fn tops(&self, tj_min: i32) -> Vec<(i32, Amplitudes)> {
        let mut tops: Vec<(i32, Amplitudes)> = Vec::new();
        let mut tj = self.tj1 + self.tj2;
        while tj >= tj_min {
            let mut v = Amplitudes::new();
            v.insert(self.tj1, 1.0);
            let others: Vec<Amplitudes> =
                tops.iter().map(|(tjp, top)| self.lowered(top, *tjp, tj)).collect();
            for u in &others {
                let overlap: f64 = u.iter().map(|(k, c)| c * v.get(k).copied().unwrap_or(0.0)).sum();
                for (k, c) in u {
                    *v.entry(*k).or_default() -= overlap * c;
                }
            }
            v.retain(|&tm1, _| self.contains(tm1, tj - tm1));
            let norm = v.values().map(|c| c * c).sum::<f64>().sqrt();
            v.values_mut().for_each(|c| *c /= norm);
            tops.push((tj, v));
            tj -= 2;
        }
        tops
    }
}

/// `⟨j1, m1; j2, m2 | J, M⟩` under the Condon–Shortley convention.
///
/// Any violated selection rule (triangle, projection range, `M ≠ m1 + m2`)
/// yields exactly `0.0`.
pub fn cg_general(j1: HalfInt, m1: HalfInt, j2: HalfInt, m2: HalfInt, j: HalfInt, m: HalfInt) -> f64 {
    let (tj1, tm1, tj2, tm2, tj, tm) = (j1.twice(), m1.twice(), j2.twice(), m2.twice(), j.twice(), m.twice());
    if tj1 < 0 || tj2 < 0 || tj < 0 || tm != tm1 + tm2 {
        return 0.0;
    }
    if tj > tj1 + tj2 || tj < (tj1 - tj2).abs() || (tj1 + tj2 - tj) % 2 != 0 {
        return 0.0;
    }
    let coupler = Coupler { tj1, tj2 };
    if !coupler.contains(tm1, tm2) || tm.abs() > tj || (tj - tm) % 2 != 0 {
        return 0.0;
    }
    let tops = coupler.tops(tj);
    let (_, top) = tops.last().expect("at least the requested J");
    let state = coupler.lowered(top, tj, tm);
    state.get(&tm1).copied().unwrap_or(0.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn h(twice: i32) -> HalfInt {
        HalfInt::from_twice(twice)
    }

    #[test]
    fn singlet_and_triplet() {
        let s = cg_general(h(1), h(1), h(1), h(-1), h(0), h(0));
        assert_abs_diff_eq!(s, std::f64::consts::FRAC_1_SQRT_2, epsilon = 1e-15);
        let anti = cg_general(h(1), h(-1), h(1), h(1), h(0), h(0));
        assert_abs_diff_eq!(anti, -s, epsilon = 1e-15);
        let t = cg_general(h(1), h(-1), h(1), h(1), h(2), h(0));
        assert_abs_diff_eq!(t, s, epsilon = 1e-15);
    }

    #[test]
    fn stretched_states_are_one() {
        for tj1 in 0..6 {
            for tj2 in 0..6 {
                let v = cg_general(h(tj1), h(tj1), h(tj2), h(tj2), h(tj1 + tj2), h(tj1 + tj2));
                assert_abs_diff_eq!(v, 1.0, epsilon = 1e-15);
            }
        }
    }

    #[test]
    fn reference_values() {
        // sympy.physics.quantum.cg.CG(...).doit()
        let cases = [
            ((2, 2, 1, -1, 3, 1), (1.0f64 / 3.0).sqrt()),
            ((2, 0, 1, 1, 3, 1), (2.0f64 / 3.0).sqrt()),
            ((2, 0, 1, 1, 1, 1), -(1.0f64 / 3.0).sqrt()),
            ((2, 0, 2, 0, 4, 0), (2.0f64 / 3.0).sqrt()),
            ((2, 0, 2, 0, 2, 0), 0.0),
            ((3, 1, 2, 0, 5, 1), (3.0f64 / 5.0).sqrt()),
            ((4, -2, 3, 1, 1, -1), (3.0f64 / 10.0).sqrt()),
            ((4, 2, 2, -2, 4, 0), std::f64::consts::FRAC_1_SQRT_2),
        ];
        for ((a, b, c, d, e, f), expected) in cases {
            let v = cg_general(h(a), h(b), h(c), h(d), h(e), h(f));
            assert_abs_diff_eq!(v, expected, epsilon = 1e-14);
        }
    }

    #[test]
    fn selection_rules_give_zero() {
        assert_eq!(cg_general(h(2), h(2), h(1), h(1), h(3), h(1)), 0.0);
        assert_eq!(cg_general(h(2), h(0), h(1), h(1), h(5), h(1)), 0.0);
        assert_eq!(cg_general(h(2), h(4), h(1), h(-1), h(3), h(3)), 0.0);
        assert_eq!(cg_general(h(2), h(0), h(2), h(0), h(1), h(0)), 0.0);
    }

    #[test]
    fn bounded_by_one() {
        for tj1 in 0i32..5 {
            for tj2 in 0..5 {
                for tj in ((tj1 - tj2).abs()..=tj1 + tj2).step_by(2) {
                    for tm1 in (-tj1..=tj1).step_by(2) {
                        for tm2 in (-tj2..=tj2).step_by(2) {
                            let v = cg_general(h(tj1), h(tm1), h(tj2), h(tm2), h(tj), h(tm1 + tm2));
                            assert!(v.abs() <= 1.0 + 1e-14);
                        }
                    }
                }
            }
        }
    }
}
