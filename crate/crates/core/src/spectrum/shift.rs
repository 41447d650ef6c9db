use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::angular::{lz_coupled_expectation, CoupledState, HalfInt, UncoupledState};
use crate::error::Result;
use crate::radial::expect_inv_r3_closed;
use crate::rational;
use crate::Rational;

/// A first-order shift `ΔE = coeff · θ_z` (hartree).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct NcShift {
    #[serde(with = "rational_serde")]
    pub coeff: Rational,
    pub theta_z: f64,
}

impl NcShift {
    pub fn zero(theta_z: f64) -> Self {
        Self { coeff: Rational::zero(), theta_z }
    }

    pub fn value(&self) -> f64 {
        if self.coeff.is_zero() {
            return 0.0;
        }
        rational::to_f64(&self.coeff) * self.theta_z
    }
}

pub(crate) mod rational_serde {
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    use crate::Rational;

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        (*r.numer(), *r.denom()).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let (n, den) = <(i64, i64)>::deserialize(d)?;
        if den == 0 {
            return Err(serde::de::Error::custom("zero denominator"));
        }
        Ok(Rational::new(n, den))
    }
}

/// Coefficient of `θ_z` in `−(θ_z m / 4) ⟨1/r³⟩`.
pub fn spinless_coeff(state: &UncoupledState) -> Result<Rational> {
    if state.l == 0 || state.m == 0 {
        return Ok(Rational::zero());
    }
    let inv_r3 = expect_inv_r3_closed(state.n, state.l)?;
    rational::mul(&Rational::new(-i64::from(state.m), 4), &inv_r3)
}

/// Coefficient of `θ_z` in `−(θ_z / 4) ⟨L_z⟩_{j,j_z} ⟨1/r³⟩`.
pub fn spinful_coeff(state: &CoupledState) -> Result<Rational> {
    if state.l == 0 {
        return Ok(Rational::zero());
    }
    let lz = lz_coupled_expectation(state.l, state.j, state.j_z)?;
    let inv_r3 = expect_inv_r3_closed(state.n, state.l)?;
    rational::mul(&rational::mul(&lz, &Rational::new(-1, 4))?, &inv_r3)
}

/// `ΔE = −θ_z m / (4 n³ l (l+1/2) (l+1))`, zero for `l = 0` or `m = 0`.
pub fn nc_shift_spinless(n: u32, l: u32, m: i32, theta_z: f64) -> Result<NcShift> {
    let state = UncoupledState::new(n, l, m)?;
    Ok(NcShift { coeff: spinless_coeff(&state)?, theta_z })
}

/// `ΔE = −(θ_z j_z / 4)(1 ∓ 1/(2l+1)) / (n³ l (l+1/2) (l+1))`, upper sign for
/// `j = l + 1/2`; zero for `l = 0`.
pub fn nc_shift_spinful(n: u32, l: u32, j: HalfInt, j_z: HalfInt, theta_z: f64) -> Result<NcShift> {
    let state = CoupledState::new(n, l, j, j_z)?;
    Ok(NcShift { coeff: spinful_coeff(&state)?, theta_z })
}
