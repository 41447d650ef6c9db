//! Hydrogen-atom energy levels with first-order corrections from a
//! non-commutative coordinate algebra `[x_i, x_j] = i θ_ij`.
//!
//! The crate is organised bottom-up:
//!
//! - [`angular`]: exact spin-½ Clebsch–Gordan coefficients, coupled-basis
//!   `⟨L_z⟩`, and a floating-point ladder-recursion oracle for general CG values.
//! - [`radial`]: hydrogen radial functions, the closed form of `⟨1/r³⟩` and a
//!   Gauss–Laguerre quadrature oracle.
//! - [`opalg`]: a normal-ordering operator algebra that checks the Bopp shift
//!   symbolically, plus a truncated-basis diagonalization oracle.
//! - [`spectrum`]: level tables, term symbols and the split Lamb-shift report.
//! - [`cli`]: the `ncspectra` command-line front end.
//!
//! Atomic units are used throughout: energies in hartree, lengths in Bohr
//! radii, and θ in Bohr radii squared.

pub mod angular;
pub mod cli;
pub mod error;
pub mod opalg;
pub mod radial;
pub mod spectrum;

pub(crate) mod rational;

pub use error::{Error, Result};

/// Exact rational used for all closed-form coefficients.
pub type Rational = num_rational::Rational64;
