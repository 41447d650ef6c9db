use serde::{Deserialize, Serialize};

use super::shift::{rational_serde, spinful_coeff, spinless_coeff};
use super::term::TermSymbol;
use super::theta::{align_theta, ThetaVector};
use crate::angular::{projections, Branch, CoupledState, UncoupledState};
use crate::error::{domain, Result};
use crate::radial::bohr_energy;
use crate::rational;
use crate::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Spinless,
    Spinful,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum LevelState {
    Uncoupled(UncoupledState),
    Coupled(CoupledState),
}

impl LevelState {
    pub fn n(&self) -> u32 {
        match self {
            LevelState::Uncoupled(s) => s.n,
            LevelState::Coupled(s) => s.n,
        }
    }

    pub fn l(&self) -> u32 {
        match self {
            LevelState::Uncoupled(s) => s.l,
            LevelState::Coupled(s) => s.l,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EnergyLevel {
    pub state: LevelState,
    /// Unperturbed level, hartree.
    pub e0: f64,
    /// First-order shift, hartree.
    pub delta_e: f64,
    /// Exact coefficient of `θ_z` in `delta_e` at unit reduced mass.
    #[serde(with = "rational_serde")]
    pub delta_e_per_theta: Rational,
    /// Coupled states only.
    pub term: Option<TermSymbol>,
}

/// All levels with `n ≤ n_max`, ordered by `(n, l, m)` or `(n, l, j, j_z)`.
///
/// `θ⃗` is first rotated onto `+z`. With a reduced mass `μ`, energies scale
/// as `μ` and `⟨1/r³⟩` (hence `delta_e`) as `μ³`; `delta_e_per_theta` stays
/// the `μ = 1` coefficient.
pub fn level_table(n_max: u32, theta: &ThetaVector, mode: Mode, mu: Option<f64>) -> Result<Vec<EnergyLevel>> {
    if n_max < 1 {
        return domain("n_max must be ≥ 1");
    }
    let theta_z = align_theta(theta).theta_z;
    let mass_scale = mu.unwrap_or(1.0).powi(3);
    let mut levels = Vec::new();
    for n in 1..=n_max {
        let e0 = bohr_energy(n, mu)?;
        for l in 0..n {
            match mode {
                Mode::Spinless => {
                    for m in -(l as i32)..=l as i32 {
                        let state = UncoupledState::new(n, l, m)?;
                        let coeff = spinless_coeff(&state)?;
                        levels.push(level(LevelState::Uncoupled(state), e0, coeff, theta_z, mass_scale, None));
                    }
                }
                Mode::Spinful => {
                    let mut branches = Branch::all(l).to_vec();
                    branches.sort_by_key(|b| b.j(l));
                    for branch in branches {
                        let j = branch.j(l);
                        let term = TermSymbol::doublet(l, j)?;
                        for j_z in projections(j) {
                            let state = CoupledState::new(n, l, j, j_z)?;
                            let coeff = spinful_coeff(&state)?;
                            levels.push(level(LevelState::Coupled(state), e0, coeff, theta_z, mass_scale, Some(term)));
                        }
                    }
                }
            }
        }
    }
    Ok(levels)
}

fn level(state: LevelState, e0: f64, coeff: Rational, theta_z: f64, mass_scale: f64, term: Option<TermSymbol>) -> EnergyLevel {
    let delta_e = if *coeff.numer() == 0 { 0.0 } else { rational::to_f64(&coeff) * theta_z * mass_scale };
    EnergyLevel { state, e0, delta_e, delta_e_per_theta: coeff, term }
}
