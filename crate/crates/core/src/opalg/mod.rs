//! Operator algebra for the coordinate shift, and a truncated-basis
//! diagonalization oracle for the first-order energy shifts.

mod bopp;
mod hamiltonian;
mod poly;

pub use bopp::{
    bopp_shift, reordering_remainder, sqrt_argument_expanded, sqrt_argument_simplified,
    verify_primed_commutators, verify_sqrt_argument_identity, CommutatorCheck, SqrtArgumentReport,
};
pub use hamiltonian::{
    build_hamiltonian, coupled_perturbation, first_order_shift_oracle, Block, BlockKey, CoupledPerturbation,
    OracleState, PerturbedHamiltonian,
};
pub use poly::{imag, real, theta_component, Axis, Generator, OperatorPoly, Params, Scalar, Sweep, Word};

/// `[A, B] = AB − BA` in normal order.
pub fn op_commutator(a: &OperatorPoly, b: &OperatorPoly) -> OperatorPoly {
    a.commutator(b)
}
