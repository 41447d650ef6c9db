//! Hydrogen bound-state radial functions and radial matrix elements.
//!
//! Radial integrals `∫ R_{n1,l} R_{n2,l} r^{2+k} dr` are evaluated with a
//! Gauss–Laguerre rule after the substitution `r = scale · t / κ`, where
//! `κ = 1/n1 + 1/n2` is the decay rate of the integrand. At `scale = 1` the
//! integrand becomes a polynomial times `e^{-t}` and the rule is exact up to
//! rounding once it has enough nodes.

mod quadrature;
mod wavefunction;

pub use quadrature::GaussLaguerre;
pub use wavefunction::{laguerre, radial_node_count, radial_wavefunction};

use serde::{Deserialize, Serialize};

use crate::error::{domain, Result};
use crate::rational;
use crate::Rational;
use wavefunction::{check_nl, radial_polynomial};

pub const DEFAULT_NODE_COUNT: usize = 200;
pub const MIN_NODE_COUNT: usize = 32;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuadratureSpec {
    node_count: usize,
    scale: f64,
}

impl QuadratureSpec {
    pub fn new(node_count: usize, scale: f64) -> Result<Self> {
        if node_count < MIN_NODE_COUNT {
            return domain(format!("node_count must be ≥ {MIN_NODE_COUNT}, got {node_count}"));
        }
        if !scale.is_finite() || scale <= 0.0 {
            return domain(format!("scale must be positive, got {scale}"));
        }
        Ok(Self { node_count, scale })
    }

    pub fn with_nodes(node_count: usize) -> Result<Self> {
        Self::new(node_count, 1.0)
    }

    pub fn node_count(&self) -> usize {
        self.node_count
    }

    pub fn scale(&self) -> f64 {
        self.scale
    }
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        Self { node_count: DEFAULT_NODE_COUNT, scale: 1.0 }
    }
}

/// `⟨n,l| r^power |n,l⟩` in Bohr radii to the `power`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RadialExpectation {
    pub n: u32,
    pub l: u32,
    pub power: i32,
    pub value: f64,
}

/// Bohr level `-μ / (2n²)` in hartree; `μ` defaults to 1.
pub fn bohr_energy(n: u32, reduced_mass: Option<f64>) -> Result<f64> {
    if n == 0 {
        return domain("principal quantum number n must be ≥ 1");
    }
    let mu = reduced_mass.unwrap_or(1.0);
    if !mu.is_finite() || mu <= 0.0 {
        return domain(format!("reduced mass must be positive, got {mu}"));
    }
    let nf = f64::from(n);
    Ok(-mu / (2.0 * nf * nf))
}

/// `⟨1/r³⟩ = 1 / (n³ l (l + 1/2) (l + 1))`, exactly.
pub fn expect_inv_r3_closed(n: u32, l: u32) -> Result<Rational> {
    check_nl(n, l)?;
    if l == 0 {
        return domain("divergent matrix element; l=0 states receive no first-order shift");
    }
    let (n, l) = (i128::from(n), i128::from(l));
    let den = [n, n, n, l, 2 * l + 1, l + 1]
        .into_iter()
        .try_fold(1i128, |acc, f| acc.checked_mul(f))
        .ok_or_else(|| crate::Error::Overflow(format!("⟨1/r³⟩ denominator for n={n}, l={l}")))?;
    rational::from_i128(2, den)
}

/// `∫₀^∞ R_{n1,l}(r) R_{n2,l}(r) r^{2+k} dr` by scaled Gauss–Laguerre quadrature.
pub fn radial_integral(n1: u32, n2: u32, l: u32, k: i32, spec: &QuadratureSpec) -> Result<f64> {
    check_nl(n1, l)?;
    check_nl(n2, l)?;
    let power = 2 + k;
    if 2 * l as i32 + power < 1 {
        return domain(format!("∫ R² r^{power} dr diverges at the origin for l = {l}"));
    }
    let kappa = 1.0 / f64::from(n1) + 1.0 / f64::from(n2);
    let stretch = spec.scale / kappa;
    let rule = GaussLaguerre::cached(spec.node_count);
    let sum = rule.integrate(|t| {
        let r = stretch * t;
        // e^{-κr} e^{t} = e^{(1 - scale) t}
        radial_polynomial(n1, l, r)
            * radial_polynomial(n2, l, r)
            * r.powi(power)
            * ((1.0 - spec.scale) * t).exp()
    });
    Ok(stretch * sum)
}

/// `⟨r^k⟩` for `|n, l⟩` by quadrature.
pub fn expect_inv_rk_numeric(n: u32, l: u32, k: i32, spec: &QuadratureSpec) -> Result<f64> {
    radial_integral(n, n, l, k, spec)
}

/// `⟨n,l| r^k |n,l⟩` packaged with its quantum numbers.
pub fn radial_expectation(n: u32, l: u32, k: i32, spec: &QuadratureSpec) -> Result<RadialExpectation> {
    let value = expect_inv_rk_numeric(n, l, k, spec)?;
    Ok(RadialExpectation { n, l, power: k, value })
}

/// `⟨n1,l| 1/r³ |n2,l⟩ = ∫ R_{n1,l} R_{n2,l} r^{-1} dr`.
pub fn radial_overlap_inv_r3(n1: u32, n2: u32, l: u32, spec: &QuadratureSpec) -> Result<f64> {
    if l == 0 {
        return domain("divergent matrix element; l=0 states receive no first-order shift");
    }
    radial_integral(n1, n2, l, -3, spec)
}
