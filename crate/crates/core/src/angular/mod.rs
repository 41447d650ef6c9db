//! Exact angular-momentum coupling of an orbital `l` with spin ½.
//!
//! Clebsch–Gordan coefficients are real and use the Condon–Shortley phase.
//! Everything except [`cg_general`] is evaluated in exact rational arithmetic.

mod coeff;
mod half;
mod ladder;
mod states;

pub use coeff::ExactCoeff;
pub use half::{projections, HalfInt};
pub use ladder::cg_general;
pub use states::{check_coupling, Branch, CoupledState, UncoupledState};

use num_traits::Zero;

use crate::error::{domain, Result};
use crate::rational;
use crate::Rational;

/// The two spin projections, `-1/2` then `+1/2`.
pub const SPIN_PROJECTIONS: [HalfInt; 2] = [HalfInt::from_twice(-1), HalfInt::from_twice(1)];

fn check_spin_projection(s_z: HalfInt) -> Result<()> {
    if s_z.twice().abs() != 1 {
        return domain(format!("s_z must be ±1/2, got {s_z}"));
    }
    Ok(())
}

/// `(l ± j_z + 1/2) / (2l + 1)` for the upper and lower sign.
fn table_radicands(l: u32, j_z: HalfInt) -> (Rational, Rational) {
    let two_l = 2 * i64::from(l);
    let jz2 = i64::from(j_z.twice());
    let den = 2 * (two_l + 1);
    (Rational::new(two_l + jz2 + 1, den), Rational::new(two_l - jz2 + 1, den))
}

/// `⟨l, j_z - s_z; 1/2, s_z | j, j_z⟩`.
///
/// A projection `l_z = j_z - s_z` outside `[-l, l]` gives an exact zero.
pub fn cg_half(l: u32, j: HalfInt, j_z: HalfInt, s_z: HalfInt) -> Result<ExactCoeff> {
    let branch = check_coupling(l, j, j_z)?;
    check_spin_projection(s_z)?;
    let l_z = j_z - s_z;
    if l_z.abs() > HalfInt::from_int(l as i32) {
        return Ok(ExactCoeff::ZERO);
    }
    let (plus, minus) = table_radicands(l, j_z);
    let up = s_z.twice() > 0;
    let (sign, radicand) = match (branch, up) {
        (Branch::Aligned, true) => (1, plus),
        (Branch::Aligned, false) => (1, minus),
        (Branch::Opposed, true) => (-1, minus),
        (Branch::Opposed, false) => (1, plus),
    };
    ExactCoeff::new(sign, radicand)
}

/// Solution of the 2×2 eigenproblem of `2 L·S` at fixed `(l, j_z)`.
///
/// `a = ⟨l, j_z + 1/2; 1/2, -1/2 | j, j_z⟩` and `b = ⟨l, j_z - 1/2; 1/2, +1/2 | j, j_z⟩`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PairSolution {
    /// `b / a`, absent when `a = 0`.
    pub ratio: Option<ExactCoeff>,
    pub a: ExactCoeff,
    pub b: ExactCoeff,
}

/// Solves
///
/// ```text
/// s·b − (j_z + 1/2)·a = λ·a
/// (j_z − 1/2)·b + s·a = λ·b        s = √((l − j_z + 1/2)(l + j_z + 1/2))
/// ```
///
/// for the eigenvalue `λ` of `2 L·S` (`l` for `j = l + 1/2`, `-l - 1` for
/// `j = l - 1/2`), normalized to `a² + b² = 1` with the first nonzero of
/// `(a, b)` positive.
pub fn cg_pair_solve(l: u32, j_z: HalfInt, lambda: i64) -> Result<PairSolution> {
    let l_i = i64::from(l);
    if lambda * lambda + lambda != l_i * (l_i + 1) {
        return domain(format!("λ = {lambda} is not an eigenvalue of 2L·S for l = {l} (expected {l} or {})", -l_i - 1));
    }
    if j_z.is_integer() || j_z.abs().twice() > 2 * l as i32 + 1 {
        return domain(format!("j_z = {j_z} is not a half-integer within ±(l + 1/2)"));
    }
    let jz = j_z.to_rational();
    let half = Rational::new(1, 2);
    let lam = Rational::from_integer(lambda);
    let l_q = Rational::from_integer(l_i);
    let off_sq = (l_q - jz + half) * (l_q + jz + half);

    if off_sq.is_zero() {
        // Only one product state exists; it is an eigenvector iff λ matches its diagonal entry.
        return if j_z.twice() > 0 {
            if jz - half == lam {
                Ok(PairSolution { ratio: None, a: ExactCoeff::ZERO, b: ExactCoeff::ONE })
            } else {
                domain(format!("no j = l - 1/2 state at j_z = {j_z}"))
            }
        } else if -(jz + half) == lam {
            Ok(PairSolution { ratio: Some(ExactCoeff::ZERO), a: ExactCoeff::ONE, b: ExactCoeff::ZERO })
        } else {
            domain(format!("no j = l - 1/2 state at j_z = {j_z}"))
        };
    }

    let off = ExactCoeff::new(1, off_sq)?;
    let ratio = ExactCoeff::from(lam + jz + half).checked_div(&off)?;
    let a_sq = rational::div(&Rational::from_integer(1), &(Rational::from_integer(1) + ratio.square()))?;
    let a = ExactCoeff::new(1, a_sq)?;
    let b = ratio.checked_mul(&a)?;
    Ok(PairSolution { ratio: Some(ratio), a, b })
}

/// `⟨j, j_z| L_z |j, j_z⟩ / ħ` from the closed form `(1 ∓ 1/(2l+1))·j_z`.
pub fn lz_coupled_expectation(l: u32, j: HalfInt, j_z: HalfInt) -> Result<Rational> {
    let branch = check_coupling(l, j, j_z)?;
    if l == 0 {
        return Ok(Rational::zero());
    }
    let shrink = Rational::new(1, 2 * i64::from(l) + 1);
    let factor = match branch {
        Branch::Aligned => Rational::from_integer(1) - shrink,
        Branch::Opposed => Rational::from_integer(1) + shrink,
    };
    rational::mul(&factor, &j_z.to_rational())
}

/// `⟨j, j_z| L_z |j, j_z⟩ / ħ` as `Σ_{s_z} l_z |⟨l, l_z; 1/2, s_z | j, j_z⟩|²`.
pub fn lz_via_completeness(l: u32, j: HalfInt, j_z: HalfInt) -> Result<Rational> {
    check_coupling(l, j, j_z)?;
    SPIN_PROJECTIONS.iter().try_fold(Rational::zero(), |acc, &s_z| {
        let weight = cg_half(l, j, j_z, s_z)?.square();
        let term = rational::mul(&(j_z - s_z).to_rational(), &weight)?;
        rational::add(&acc, &term)
    })
}
