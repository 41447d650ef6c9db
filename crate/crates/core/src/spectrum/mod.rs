//! Physical levels: first-order shifts, term symbols, the `n = 2` report.

mod lamb;
mod shift;
mod table;
mod term;
mod theta;

pub use lamb::{lamb_split_report, LambReport, Sublevel};
pub use shift::{nc_shift_spinful, nc_shift_spinless, spinful_coeff, spinless_coeff, NcShift};
pub use table::{level_table, EnergyLevel, LevelState, Mode};
pub use term::{format_term_symbol, orbital_from_letter, orbital_letter, parse_term_symbol, TermSymbol, ORBITAL_LETTERS};
pub use theta::{align_theta, Alignment, ThetaVector};

use crate::angular::HalfInt;

/// `[-j, -j+1, ..., +j]`.
pub fn jz_sublevels(j: HalfInt) -> Vec<HalfInt> {
    crate::angular::projections(j).collect()
}
