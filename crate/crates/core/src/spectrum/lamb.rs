use std::fmt;

use serde::{Deserialize, Serialize};

use super::shift::{nc_shift_spinful, rational_serde};
use super::term::TermSymbol;
use crate::angular::{projections, HalfInt};
use crate::error::Result;
use crate::rational;
use crate::Rational;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Sublevel {
    pub label: String,
    pub term: TermSymbol,
    #[serde(with = "rational_serde")]
    pub shift_coeff: Rational,
    pub shift_hartree: f64,
}

/// The `n = 2` levels `²S₁/₂`, `²P₁/₂` and `²P₃/₂` under the first-order shift.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LambReport {
    pub theta_z: f64,
    pub s_half: Sublevel,
    /// `j_z = -1/2` then `+1/2`.
    pub p_half: Vec<Sublevel>,
    pub p_three_halves: Vec<Sublevel>,
    /// `E(²P₁/₂, -1/2) − E(²P₁/₂, +1/2)` per unit `θ_z`.
    #[serde(with = "rational_serde")]
    pub splitting_coeff: Rational,
    pub splitting_hartree: f64,
    pub note: String,
}

impl LambReport {
    /// `(label, shift)` rows for plotting the level diagram.
    pub fn plot_points(&self) -> Vec<(String, f64)> {
        std::iter::once(&self.s_half)
            .chain(&self.p_half)
            .chain(&self.p_three_halves)
            .map(|s| (s.label.clone(), s.shift_hartree))
            .collect()
    }
}

fn sublevel(l: u32, j: HalfInt, j_z: HalfInt, theta_z: f64, short_label: bool) -> Result<Sublevel> {
    let term = TermSymbol::doublet(l, j)?.with_projection(j_z)?;
    let shift = nc_shift_spinful(2, l, j, j_z, theta_z)?;
    let label = if short_label { term.sublevel_label() } else { term.to_string() };
    Ok(Sublevel { label, term, shift_coeff: shift.coeff, shift_hartree: shift.value() })
}

pub fn lamb_split_report(theta_z: f64) -> Result<LambReport> {
    let half = HalfInt::HALF;
    let s_term = TermSymbol::doublet(0, half)?;
    let s_shift = nc_shift_spinful(2, 0, half, half, theta_z)?;
    let s_half = Sublevel {
        label: s_term.to_string(),
        term: s_term,
        shift_coeff: s_shift.coeff,
        shift_hartree: s_shift.value(),
    };
    let p_half = projections(half).map(|jz| sublevel(1, half, jz, theta_z, true)).collect::<Result<Vec<_>>>()?;
    let three_halves = HalfInt::from_twice(3);
    let p_three_halves =
        projections(three_halves).map(|jz| sublevel(1, three_halves, jz, theta_z, false)).collect::<Result<Vec<_>>>()?;
    let splitting_coeff = rational::sub(&p_half[0].shift_coeff, &p_half[1].shift_coeff)?;
    let splitting_hartree = if *splitting_coeff.numer() == 0 { 0.0 } else { rational::to_f64(&splitting_coeff) * theta_z };
    Ok(LambReport {
        theta_z,
        s_half,
        p_half,
        p_three_halves,
        splitting_coeff,
        splitting_hartree,
        note: "without the theta correction ^2S_{1/2} and ^2P_{1/2} (n=2, j=1/2) are degenerate".to_string(),
    })
}

impl fmt::Display for LambReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n = 2 levels, theta_z = {:e} a0^2", self.theta_z)?;
        writeln!(f, "  {:<18} {:>10} {:>16}", "level", "dE/theta", "dE (hartree)")?;
        let rows = std::iter::once(&self.s_half).chain(&self.p_half).chain(&self.p_three_halves);
        for s in rows {
            writeln!(f, "  {:<18} {:>10} {:>16.6e}", s.label, s.shift_coeff.to_string(), s.shift_hartree)?;
        }
        writeln!(
            f,
            "  ^2P_{{1/2}} splitting: {} * theta_z = {:.6e} hartree",
            self.splitting_coeff, self.splitting_hartree
        )?;
        write!(f, "  note: {}", self.note)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn commutative_limit() {
        let r = lamb_split_report(0.0).unwrap();
        assert!(r.plot_points().iter().all(|(_, e)| *e == 0.0));
        assert_eq!(r.splitting_hartree, 0.0);
    }

    #[test]
    fn desk_scale_theta() {
        let r = lamb_split_report(1e-3).unwrap();
        assert_eq!(r.s_half.shift_coeff, Rational::new(0, 1));
        assert_eq!(r.p_half.len(), 2);
        assert_eq!(r.p_half[0].label, "^2P_{-1/2}");
        assert_eq!(r.p_half[1].label, "^2P_{+1/2}");
        assert_eq!(r.p_half[0].shift_coeff, Rational::new(1, 144));
        assert_eq!(r.p_half[1].shift_coeff, Rational::new(-1, 144));
        assert_eq!(r.splitting_coeff, Rational::new(1, 72));
        assert!((r.splitting_hartree - 1e-3 / 72.0).abs() < 1e-18);
        assert_eq!(r.p_three_halves.len(), 4);
        let text = r.to_string();
        assert!(text.contains("^2P_{-1/2}") && text.contains("1/72"));
    }
}
