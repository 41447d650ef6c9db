//! Invariant suites behind `ncspectra verify`.

use std::fmt;

use crate::angular::{cg_general, cg_half, projections, Branch, CoupledState, ExactCoeff, HalfInt, UncoupledState, SPIN_PROJECTIONS};
use crate::error::Result;
use crate::opalg::{build_hamiltonian, first_order_shift_oracle, verify_sqrt_argument_identity, OracleState, PerturbedHamiltonian};
use crate::radial::{expect_inv_r3_closed, expect_inv_rk_numeric, QuadratureSpec};
use crate::rational;
use crate::spectrum::{spinful_coeff, spinless_coeff};
use crate::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    All,
    Bopp,
    Cg,
    Radial,
    Oracle,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub label: String,
    pub passed: bool,
    /// Measured error, where meaningful.
    pub error: Option<f64>,
}

impl Check {
    fn exact(label: impl Into<String>, passed: bool) -> Self {
        Check { label: label.into(), passed, error: None }
    }

    fn within(label: impl Into<String>, error: f64, tol: f64) -> Self {
        Check { label: label.into(), passed: error <= tol, error: Some(error) }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SuiteReport {
    pub name: &'static str,
    /// Free-form lines printed ahead of the checks.
    pub details: Vec<String>,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "== {} ==", self.name)?;
        for line in &self.details {
            writeln!(f, "{line}")?;
        }
        for c in &self.checks {
            let status = if c.passed { "PASS" } else { "FAIL" };
            match c.error {
                Some(e) => writeln!(f, "[{status}] {} (measured {e:.3e})", c.label)?,
                None => writeln!(f, "[{status}] {}", c.label)?,
            }
        }
        let passed = self.checks.iter().filter(|c| c.passed).count();
        write!(f, "{}: {}/{} passed", self.name, passed, self.checks.len())
    }
}

pub fn run_suites(suite: Suite, spec: &QuadratureSpec) -> Result<Vec<SuiteReport>> {
    Ok(match suite {
        Suite::All => vec![bopp_suite(), cg_suite()?, radial_suite(spec)?, oracle_suite(spec)?],
        Suite::Bopp => vec![bopp_suite()],
        Suite::Cg => vec![cg_suite()?],
        Suite::Radial => vec![radial_suite(spec)?],
        Suite::Oracle => vec![oracle_suite(spec)?],
    })
}

pub fn bopp_suite() -> SuiteReport {
    let report = verify_sqrt_argument_identity();
    let mut checks: Vec<Check> = report
        .commutators
        .iter()
        .map(|c| Check::exact(c.label.clone(), c.passed()))
        .collect();
    checks.push(Check::exact("sum_i x'_i x'_i equals simplified normal form", report.identity_holds()));
    checks.push(Check::exact("theta_ii reordering term vanishes", report.remainder.is_zero()));
    SuiteReport { name: "bopp", details: report.to_string().lines().map(str::to_string).collect(), checks }
}

pub fn cg_suite() -> Result<SuiteReport> {
    const L_MAX: u32 = 10;
    let mut norm_ok = true;
    let mut orth_ok = true;
    let mut max_dev = 0.0f64;
    for l in 0..=L_MAX {
        for &branch in Branch::all(l) {
            let j = branch.j(l);
            for j_z in projections(j) {
                let mut norm = Rational::from_integer(0);
                for &s_z in &SPIN_PROJECTIONS {
                    let c = cg_half(l, j, j_z, s_z)?;
                    norm = rational::add(&norm, &c.square())?;
                    let oracle = cg_general(HalfInt::from_int(l as i32), j_z - s_z, HalfInt::HALF, s_z, j, j_z);
                    max_dev = max_dev.max((c.value() - oracle).abs());
                }
                norm_ok &= norm == Rational::from_integer(1);
            }
        }
        if l > 0 {
            for j_z in projections(Branch::Opposed.j(l)) {
                let products = SPIN_PROJECTIONS
                    .iter()
                    .map(|&s| cg_half(l, Branch::Aligned.j(l), j_z, s)?.checked_mul(&cg_half(l, Branch::Opposed.j(l), j_z, s)?))
                    .collect::<Result<Vec<_>>>()?;
                orth_ok &= ExactCoeff::sum_like(&products).is_some_and(|s| s.is_zero());
            }
        }
    }
    Ok(SuiteReport {
        name: "cg",
        details: vec![format!("spin-1/2 table, l = 0..={L_MAX}, all j, j_z, s_z")],
        checks: vec![
            Check::exact("sum over s_z of a^2 = 1 (exact)", norm_ok),
            Check::exact("j = l +- 1/2 rows orthogonal (exact)", orth_ok),
            Check::within("closed table vs ladder recursion, max |diff| <= 1e-12", max_dev, 1e-12),
        ],
    })
}

pub fn radial_suite(spec: &QuadratureSpec) -> Result<SuiteReport> {
    let mut details = vec![
        format!("<1/r^3> closed vs Gauss-Laguerre ({} nodes)", spec.node_count()),
        format!("{:>3} {:>3} {:>20} {:>22} {:>10}", "n", "l", "closed", "quadrature", "rel err"),
    ];
    let mut max_rel = 0.0f64;
    for n in 2..=10u32 {
        for l in 1..n {
            let closed = expect_inv_r3_closed(n, l)?;
            let exact = rational::to_f64(&closed);
            let numeric = expect_inv_rk_numeric(n, l, -3, spec)?;
            let rel = ((numeric - exact) / exact).abs();
            max_rel = max_rel.max(rel);
            details.push(format!("{n:>3} {l:>3} {:>20} {numeric:>22.15e} {rel:>10.2e}", closed.to_string()));
        }
    }
    Ok(SuiteReport {
        name: "radial",
        details,
        checks: vec![Check::within("max relative error <= 1e-8 for 1 <= l <= n-1 <= 9", max_rel, 1e-8)],
    })
}

/// Residuals of the truncated-basis oracle against the closed-form shifts.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ResidualScaling {
    pub max_residual: f64,
    pub halving: (f64, f64),
    pub tenth: (f64, f64),
}

pub const ORACLE_THETA: f64 = 1e-4;
pub const ORACLE_N_MAX: u32 = 10;

/// Oracle residuals at `θ`, `θ/2` and `θ/10` for every `n ≤ 3` state with a nonzero shift.
pub fn residual_scaling(include_spin: bool, spec: &QuadratureSpec) -> Result<ResidualScaling> {
    let theta = ORACLE_THETA;
    let base = build_hamiltonian(ORACLE_N_MAX, theta, include_spin, spec)?;
    let half = base.with_theta(theta / 2.0);
    let tenth = base.with_theta(theta / 10.0);
    let residual = |h: &PerturbedHamiltonian, state: OracleState, coeff: &Rational| -> Result<f64> {
        Ok((first_order_shift_oracle(h, state)? - rational::to_f64(coeff) * h.theta_z).abs())
    };
    let mut out = ResidualScaling { max_residual: 0.0, halving: (f64::INFINITY, 0.0), tenth: (f64::INFINITY, 0.0) };
    for (state, coeff) in oracle_states(include_spin)? {
        let r = residual(&base, state, &coeff)?;
        out.max_residual = out.max_residual.max(r);
        if *coeff.numer() == 0 {
            continue;
        }
        let a = r / residual(&half, state, &coeff)?;
        let b = r / residual(&tenth, state, &coeff)?;
        out.halving = (out.halving.0.min(a), out.halving.1.max(a));
        out.tenth = (out.tenth.0.min(b), out.tenth.1.max(b));
    }
    Ok(out)
}

fn oracle_states(include_spin: bool) -> Result<Vec<(OracleState, Rational)>> {
    let mut states = Vec::new();
    for n in 1..=3u32 {
        for l in 0..n {
            if include_spin {
                for &branch in Branch::all(l) {
                    let j = branch.j(l);
                    for j_z in projections(j) {
                        let s = CoupledState::new(n, l, j, j_z)?;
                        states.push((OracleState::Coupled(s), spinful_coeff(&s)?));
                    }
                }
            } else {
                for m in -(l as i32)..=l as i32 {
                    let s = UncoupledState::new(n, l, m)?;
                    states.push((OracleState::Uncoupled(s), spinless_coeff(&s)?));
                }
            }
        }
    }
    Ok(states)
}

pub fn oracle_suite(spec: &QuadratureSpec) -> Result<SuiteReport> {
    let bound = 10.0 * ORACLE_THETA * ORACLE_THETA;
    let mut details = vec![format!(
        "truncated basis n_max = {ORACLE_N_MAX}, theta_z = {ORACLE_THETA:e}, states n <= 3; ratios over nonzero shifts"
    )];
    let mut checks = Vec::new();
    for (include_spin, mode) in [(false, "spinless"), (true, "spinful")] {
        let s = residual_scaling(include_spin, spec)?;
        details.push(format!(
            "{mode}: max residual {:.3e}, theta/2 ratios [{:.3}, {:.3}], theta/10 ratios [{:.2}, {:.2}]",
            s.max_residual, s.halving.0, s.halving.1, s.tenth.0, s.tenth.1
        ));
        checks.push(Check::within(format!("{mode}: |closed - oracle| <= 10 theta_z^2"), s.max_residual, bound));
        checks.push(Check::exact(
            format!("{mode}: halving ratios in [2.5, 6]"),
            s.halving.0 >= 2.5 && s.halving.1 <= 6.0,
        ));
        checks.push(Check::exact(
            format!("{mode}: theta/10 ratios in [50, 200]"),
            s.tenth.0 >= 50.0 && s.tenth.1 <= 200.0,
        ));
    }
    Ok(SuiteReport { name: "oracle", details, checks })
}
