//! Truncated bound-state basis for `H = H₀ − θ_z L_z / (4ħ r³)`.
//!
//! `W` commutes with `L_z` (and `S_z`), so the matrix splits into one block
//! per conserved label. Each block spans `n = l+1 ..= n_max` and is
//! nondegenerate under `H₀`, so the eigenvalue connected to `|n⟩` carries the
//! first-order shift `W_nn θ_z` plus `O(θ_z²)` mixing with the other shells.
//!
//! In spinful mode the product-basis perturbation is rotated to `|j, j_z⟩`
//! with [`cg_general`], and blocks keep the `j`-diagonal part of the result.
//! The `j = l ± 1/2` cross elements are nonzero (`L_z` does not commute with
//! `J²`); they are available from [`coupled_perturbation`] but left out of the
//! blocks, which treat `j` as a good quantum number.

use nalgebra::{DMatrix, SymmetricEigen};

use crate::angular::{cg_general, projections, Branch, CoupledState, HalfInt, UncoupledState, SPIN_PROJECTIONS};
use crate::error::{domain, Error, Result};
use crate::radial::{bohr_energy, radial_overlap_inv_r3, QuadratureSpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BlockKey {
    Orbital { l: u32, m: i32 },
    Coupled { l: u32, j: HalfInt, j_z: HalfInt },
}

impl BlockKey {
    pub fn l(&self) -> u32 {
        match *self {
            BlockKey::Orbital { l, .. } | BlockKey::Coupled { l, .. } => l,
        }
    }
}

#[derive(Debug, Clone)]
pub struct Block {
    pub key: BlockKey,
    /// Principal quantum numbers labelling rows and columns.
    pub ns: Vec<u32>,
    pub h0: DMatrix<f64>,
    /// `∂H/∂θ_z`.
    pub w_per_theta: DMatrix<f64>,
}

impl Block {
    pub fn matrix(&self, theta_z: f64) -> DMatrix<f64> {
        &self.h0 + &self.w_per_theta * theta_z
    }

    pub fn index_of(&self, n: u32) -> Option<usize> {
        self.ns.iter().position(|&k| k == n)
    }

    pub fn is_unperturbed(&self) -> bool {
        self.w_per_theta.iter().all(|&v| v == 0.0)
    }

    pub fn dim(&self) -> usize {
        self.ns.len()
    }
}

#[derive(Debug, Clone)]
pub struct PerturbedHamiltonian {
    pub n_max: u32,
    pub theta_z: f64,
    pub include_spin: bool,
    pub blocks: Vec<Block>,
}

impl PerturbedHamiltonian {
    /// Same blocks evaluated at another `θ_z`.
    pub fn with_theta(&self, theta_z: f64) -> Self {
        Self { theta_z, ..self.clone() }
    }

    pub fn block(&self, key: BlockKey) -> Option<&Block> {
        self.blocks.iter().find(|b| b.key == key)
    }

    /// Eigenvalues of every block at the stored `θ_z`, ascending.
    pub fn eigenvalues(&self) -> Vec<f64> {
        let mut all: Vec<f64> = self
            .blocks
            .iter()
            .flat_map(|b| SymmetricEigen::new(b.matrix(self.theta_z)).eigenvalues.iter().copied().collect::<Vec<_>>())
            .collect();
        all.sort_by(f64::total_cmp);
        all
    }
}

fn radial_matrix(l: u32, ns: &[u32], spec: &QuadratureSpec) -> Result<DMatrix<f64>> {
    let dim = ns.len();
    let mut m = DMatrix::zeros(dim, dim);
    for a in 0..dim {
        for b in a..dim {
            let v = radial_overlap_inv_r3(ns[a], ns[b], l, spec)?;
            m[(a, b)] = v;
            m[(b, a)] = v;
        }
    }
    Ok(m)
}

fn check_inputs(n_max: u32, theta_z: f64) -> Result<()> {
    if n_max < 2 {
        return domain(format!("n_max must be ≥ 2, got {n_max}"));
    }
    if theta_z.is_nan() || theta_z.abs() >= 1.0 {
        return domain(format!("|theta_z| must be < 1 a0², got {theta_z}"));
    }
    Ok(())
}

fn h0_diag(ns: &[u32]) -> Result<DMatrix<f64>> {
    let diag: Vec<f64> = ns.iter().map(|&n| bohr_energy(n, None)).collect::<Result<_>>()?;
    Ok(DMatrix::from_diagonal(&nalgebra::DVector::from_vec(diag)))
}

/// Perturbation per unit `θ_z` at fixed `(l, j_z)` in the coupled basis,
/// including the `j`-mixing elements.
#[derive(Debug, Clone)]
pub struct CoupledPerturbation {
    pub l: u32,
    pub j_z: HalfInt,
    /// `(j, n)` for each row/column.
    pub labels: Vec<(HalfInt, u32)>,
    pub w_per_theta: DMatrix<f64>,
}

impl CoupledPerturbation {
    pub fn element(&self, row: (HalfInt, u32), col: (HalfInt, u32)) -> Option<f64> {
        let r = self.labels.iter().position(|&x| x == row)?;
        let c = self.labels.iter().position(|&x| x == col)?;
        Some(self.w_per_theta[(r, c)])
    }
}

/// Rotates `−(m/4) ⟨n1,l|r⁻³|n2,l⟩` from `|n, l, m, s_z⟩` into `|n, l, j, j_z⟩`.
pub fn coupled_perturbation(n_max: u32, l: u32, j_z: HalfInt, spec: &QuadratureSpec) -> Result<CoupledPerturbation> {
    if l >= n_max {
        return domain(format!("l = {l} has no states below n_max = {n_max}"));
    }
    if j_z.is_integer() || j_z.abs().twice() > 2 * l as i32 + 1 {
        return domain(format!("j_z = {j_z} is not a projection of j = l ± 1/2 for l = {l}"));
    }
    let ns: Vec<u32> = (l + 1..=n_max).collect();
    let radial = if l == 0 { None } else { Some(radial_matrix(l, &ns, spec)?) };
    let two_l = 2 * l as i32;

    let mut product = Vec::new();
    for s_z in SPIN_PROJECTIONS {
        let m = j_z - s_z;
        if m.abs().twice() <= two_l {
            for (idx, &n) in ns.iter().enumerate() {
                product.push((m, s_z, idx, n));
            }
        }
    }
    let mut labels = Vec::new();
    for &branch in Branch::all(l) {
        let j = branch.j(l);
        if j_z.abs() <= j {
            labels.extend(ns.iter().map(|&n| (j, n)));
        }
    }

    let dp = product.len();
    let mut w_prod = DMatrix::zeros(dp, dp);
    for (a, &(ma, sa, ia, _)) in product.iter().enumerate() {
        for (b, &(mb, sb, ib, _)) in product.iter().enumerate() {
            if ma == mb && sa == sb && ma != HalfInt::ZERO {
                let r = radial.as_ref().expect("m ≠ 0 implies l ≥ 1");
                w_prod[(a, b)] = -ma.to_f64() / 4.0 * r[(ia, ib)];
            }
        }
    }
    let mut rotation = DMatrix::zeros(dp, labels.len());
    let l_half = HalfInt::from_int(l as i32);
    for (a, &(m, s_z, _, n)) in product.iter().enumerate() {
        for (c, &(j, nc)) in labels.iter().enumerate() {
            if n == nc {
                rotation[(a, c)] = cg_general(l_half, m, HalfInt::HALF, s_z, j, j_z);
            }
        }
    }
    let w_per_theta = rotation.transpose() * w_prod * &rotation;
    Ok(CoupledPerturbation { l, j_z, labels, w_per_theta })
}

/// Block-diagonal `H₀ + θ_z W` over bound states with `n ≤ n_max`.
pub fn build_hamiltonian(
    n_max: u32,
    theta_z: f64,
    include_spin: bool,
    spec: &QuadratureSpec,
) -> Result<PerturbedHamiltonian> {
    check_inputs(n_max, theta_z)?;
    let mut blocks = Vec::new();
    for l in 0..n_max {
        let ns: Vec<u32> = (l + 1..=n_max).collect();
        let h0 = h0_diag(&ns)?;
        if !include_spin {
            let radial = if l == 0 { None } else { Some(radial_matrix(l, &ns, spec)?) };
            for m in -(l as i32)..=(l as i32) {
                let w_per_theta = match &radial {
                    Some(r) if m != 0 => r * (-f64::from(m) / 4.0),
                    _ => DMatrix::zeros(ns.len(), ns.len()),
                };
                blocks.push(Block { key: BlockKey::Orbital { l, m }, ns: ns.clone(), h0: h0.clone(), w_per_theta });
            }
            continue;
        }
        for &branch in Branch::all(l) {
            let j = branch.j(l);
            for j_z in projections(j) {
                let coupled = coupled_perturbation(n_max, l, j_z, spec)?;
                let rows: Vec<usize> = (0..coupled.labels.len()).filter(|&i| coupled.labels[i].0 == j).collect();
                let w_per_theta = DMatrix::from_fn(rows.len(), rows.len(), |a, b| coupled.w_per_theta[(rows[a], rows[b])]);
                blocks.push(Block { key: BlockKey::Coupled { l, j, j_z }, ns: ns.clone(), h0: h0.clone(), w_per_theta });
            }
        }
    }
    Ok(PerturbedHamiltonian { n_max, theta_z, include_spin, blocks })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OracleState {
    Uncoupled(UncoupledState),
    Coupled(CoupledState),
}

impl From<UncoupledState> for OracleState {
    fn from(s: UncoupledState) -> Self {
        OracleState::Uncoupled(s)
    }
}

impl From<CoupledState> for OracleState {
    fn from(s: CoupledState) -> Self {
        OracleState::Coupled(s)
    }
}

/// `E(θ_z) − E(0)` for the block eigenvalue continuously connected to `state`.
pub fn first_order_shift_oracle(h: &PerturbedHamiltonian, state: impl Into<OracleState>) -> Result<f64> {
    let state = state.into();
    let (n, key) = match (state, h.include_spin) {
        (OracleState::Uncoupled(s), false) => (s.n, BlockKey::Orbital { l: s.l, m: s.m }),
        (OracleState::Coupled(s), true) => (s.n, BlockKey::Coupled { l: s.l, j: s.j, j_z: s.j_z }),
        (OracleState::Uncoupled(_), true) => return domain("uncoupled state given to a spinful Hamiltonian"),
        (OracleState::Coupled(_), false) => return domain("coupled state given to a spinless Hamiltonian"),
    };
    if n + 2 > h.n_max {
        return domain(format!("n = {n} needs n_max ≥ {} for truncation margin (have {})", n + 2, h.n_max));
    }
    let block = h.block(key).ok_or_else(|| Error::Domain(format!("no block for {key:?}")))?;
    let idx = block.index_of(n).ok_or_else(|| Error::Domain(format!("n = {n} not in block {key:?}")))?;
    if block.is_unperturbed() {
        return Ok(0.0);
    }
    let eig = SymmetricEigen::new(block.matrix(h.theta_z));
    let (best, overlap) = (0..block.dim())
        .map(|c| (c, eig.eigenvectors[(idx, c)].powi(2)))
        .max_by(|a, b| a.1.total_cmp(&b.1))
        .expect("nonempty block");
    if overlap <= 0.99 {
        return Err(Error::AmbiguousOverlap { overlap });
    }
    Ok(eig.eigenvalues[best] - block.h0[(idx, idx)])
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn h(t: i32) -> HalfInt {
        HalfInt::from_twice(t)
    }

    #[test]
    fn unperturbed_spectrum_and_degeneracies() {
        let spec = QuadratureSpec::default();
        let ham = build_hamiltonian(3, 0.0, false, &spec).unwrap();
        let ev = ham.eigenvalues();
        let count = |e: f64| ev.iter().filter(|&&v| (v - e).abs() < 1e-14).count();
        assert_eq!(ev.len(), 14);
        assert_eq!(count(-0.5), 1);
        assert_eq!(count(-0.125), 4);
        assert_eq!(count(-1.0 / 18.0), 9);
        let spinful = build_hamiltonian(3, 0.0, true, &spec).unwrap();
        assert_eq!(spinful.eigenvalues().len(), 28);
    }

    #[test]
    fn diagonal_perturbation_entry() {
        let ham = build_hamiltonian(6, 1e-3, false, &QuadratureSpec::default()).unwrap();
        let block = ham.block(BlockKey::Orbital { l: 1, m: 1 }).unwrap();
        let w = block.w_per_theta[(0, 0)] * ham.theta_z;
        assert_relative_eq!(w, -(1e-3 / 4.0) / 24.0, max_relative = 1e-10);
    }

    #[test]
    fn blocks_are_symmetric_and_s_or_m0_rows_vanish() {
        for spin in [false, true] {
            let ham = build_hamiltonian(5, 1e-3, spin, &QuadratureSpec::default()).unwrap();
            for b in &ham.blocks {
                let m = b.matrix(ham.theta_z);
                assert!((&m - m.transpose()).amax() <= 1e-12);
                let zero_row = match b.key {
                    BlockKey::Orbital { l, m } => l == 0 || m == 0,
                    BlockKey::Coupled { l, .. } => l == 0,
                };
                if zero_row {
                    assert!(b.is_unperturbed(), "{:?}", b.key);
                }
            }
        }
    }

    #[test]
    fn coupled_diagonal_matches_closed_form_and_mixing_is_explicit() {
        let spec = QuadratureSpec::default();
        let cp = coupled_perturbation(4, 1, h(1), &spec).unwrap();
        // ⟨L_z⟩ = 1/3 for j = 3/2 and 2/3 for j = 1/2 at j_z = 1/2
        assert_relative_eq!(cp.element((h(3), 2), (h(3), 2)).unwrap(), -(1.0 / 3.0) / 4.0 / 24.0, max_relative = 1e-10);
        assert_relative_eq!(cp.element((h(1), 2), (h(1), 2)).unwrap(), -(2.0 / 3.0) / 4.0 / 24.0, max_relative = 1e-10);
        // j-mixing: -(1/4) √((l+1/2)² - j_z²) / (2l+1) ⟨1/r³⟩
        let mix = cp.element((h(3), 2), (h(1), 2)).unwrap();
        assert_relative_eq!(mix, -(2.0f64.sqrt() / 3.0) / 4.0 / 24.0, max_relative = 1e-10);
        let stretched = coupled_perturbation(4, 1, h(3), &spec).unwrap();
        assert_eq!(stretched.labels.len(), 3);
    }

    #[test]
    fn oracle_examples() {
        let spec = QuadratureSpec::default();
        let ham = build_hamiltonian(8, 1e-4, false, &spec).unwrap();
        let shift = first_order_shift_oracle(&ham, UncoupledState::new(2, 1, 1).unwrap()).unwrap();
        assert!((shift - (-1e-4 / 96.0)).abs() <= 10.0 * 1e-8);
        let residual = (shift + 1e-4 / 96.0).abs();
        assert!(residual > 0.0 && residual < 1e-10);
        for (n, l, m) in [(1, 0, 0), (2, 0, 0), (3, 1, 0), (3, 2, 0)] {
            let s = first_order_shift_oracle(&ham.with_theta(0.5), UncoupledState::new(n, l, m).unwrap()).unwrap();
            assert!(s.abs() <= 1e-14);
        }
    }

    #[test]
    fn oracle_errors() {
        let spec = QuadratureSpec::default();
        assert!(build_hamiltonian(1, 0.0, false, &spec).is_err());
        assert!(build_hamiltonian(4, 1.5, false, &spec).is_err());
        let ham = build_hamiltonian(4, 1e-4, false, &spec).unwrap();
        assert!(first_order_shift_oracle(&ham, UncoupledState::new(3, 1, 1).unwrap()).is_err());
        let coupled = CoupledState::new(2, 1, h(1), h(1)).unwrap();
        assert!(first_order_shift_oracle(&ham, coupled).is_err());
        let strong = build_hamiltonian(20, 0.99, false, &spec).unwrap();
        let r = first_order_shift_oracle(&strong, UncoupledState::new(10, 1, 1).unwrap());
        assert!(matches!(r, Err(Error::AmbiguousOverlap { overlap }) if overlap < 0.99));
    }
}
