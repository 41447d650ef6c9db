//! Gauss–Laguerre rules for the weight `e^{-t}` on `[0, ∞)`.
//!
//! Nodes come from Sturm-sequence bisection on the Jacobi matrix, refined by
//! Newton steps on `L_N`. Weights are Christoffel numbers accumulated with
//! rescaling, so rules with hundreds of nodes do not overflow; weights below
//! `f64::MIN_POSITIVE` flush to zero.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

#[derive(Debug, Clone)]
pub struct GaussLaguerre {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

/// `(L_N(x), L_{N-1}(x))` up to a common positive factor.
fn scaled_pair(n: usize, x: f64) -> (f64, f64) {
    let mut prev = 1.0f64;
    let mut cur = 1.0 - x;
    for k in 1..n {
        let kf = k as f64;
        let next = ((2.0 * kf + 1.0 - x) * cur - kf * prev) / (kf + 1.0);
        prev = cur;
        cur = next;
        if cur.abs() > 1e150 {
            cur *= 1e-150;
            prev *= 1e-150;
        }
    }
    (cur, prev)
}

/// `1 / Σ_{k<N} L_k(x)²`; the `L_k` are orthonormal under `e^{-x}`.
fn christoffel_weight(n: usize, x: f64) -> f64 {
    let mut prev = 0.0f64;
    let mut cur = 1.0f64;
    let mut sum = 0.0f64;
    let mut log_scale = 0.0f64;
    for k in 0..n {
        sum += cur * cur;
        let kf = k as f64;
        let next = ((2.0 * kf + 1.0 - x) * cur - kf * prev) / (kf + 1.0);
        prev = cur;
        cur = next;
        if cur.abs() > 1e150 {
            cur *= 1e-150;
            prev *= 1e-150;
            sum *= 1e-300;
            log_scale += 300.0 * std::f64::consts::LN_10;
        }
    }
    (-sum.ln() - log_scale).exp()
}

/// Number of eigenvalues of the order-`n` Laguerre Jacobi matrix below `x`.
fn sturm_count(n: usize, x: f64) -> usize {
    let mut count = 0;
    let mut d = 1.0;
    for k in 0..n {
        let diag = (2 * k + 1) as f64;
        let off_sq = (k * k) as f64;
        d = diag - x - if k == 0 { 0.0 } else { off_sq / d };
        if d == 0.0 {
            d = -f64::EPSILON * (diag + x);
        }
        if d < 0.0 {
            count += 1;
        }
    }
    count
}

fn bisect_node(n: usize, index: usize, upper: f64) -> f64 {
    let (mut lo, mut hi) = (0.0f64, upper);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if sturm_count(n, mid) > index {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    0.5 * (lo + hi)
}

impl GaussLaguerre {
    pub fn new(n: usize) -> Self {
        assert!(n >= 1, "a Gauss-Laguerre rule needs at least one node");
        let upper = 4.0 * n as f64 + 2.0;
        let nf = n as f64;
        let mut nodes = Vec::with_capacity(n);
        let mut weights = Vec::with_capacity(n);
        for i in 0..n {
            let mut x = bisect_node(n, i, upper);
            for _ in 0..3 {
                let (ln, lnm1) = scaled_pair(n, x);
                let denom = nf * (ln - lnm1);
                if denom == 0.0 {
                    break;
                }
                let dx = x * ln / denom;
                if !dx.is_finite() || dx.abs() > 1e-6 * x.max(1e-300) {
                    break;
                }
                x -= dx;
            }
            nodes.push(x);
            weights.push(christoffel_weight(n, x));
        }
        Self { nodes, weights }
    }

    /// Shared, lazily built rule of the given order.
    pub fn cached(n: usize) -> Arc<GaussLaguerre> {
        static CACHE: OnceLock<Mutex<HashMap<usize, Arc<GaussLaguerre>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(Default::default);
        let mut guard = cache.lock().unwrap_or_else(|e| e.into_inner());
        guard.entry(n).or_insert_with(|| Arc::new(GaussLaguerre::new(n))).clone()
    }

    /// `∫₀^∞ e^{-t} f(t) dt`.
    pub fn integrate(&self, f: impl Fn(f64) -> f64) -> f64 {
        self.nodes.iter().zip(&self.weights).filter(|(_, w)| **w > 0.0).map(|(&t, &w)| w * f(t)).sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn small_rule_matches_tabulated_nodes() {
        let rule = GaussLaguerre::new(2);
        assert_relative_eq!(rule.nodes[0], 2.0 - 2.0f64.sqrt(), max_relative = 1e-15);
        assert_relative_eq!(rule.nodes[1], 2.0 + 2.0f64.sqrt(), max_relative = 1e-15);
        assert_relative_eq!(rule.weights[0], (2.0 + 2.0f64.sqrt()) / 4.0, max_relative = 1e-14);
        assert_relative_eq!(rule.weights[1], (2.0 - 2.0f64.sqrt()) / 4.0, max_relative = 1e-14);
    }

    #[test]
    fn integrates_moments_exactly() {
        for n in [32usize, 200, 400] {
            let rule = GaussLaguerre::cached(n);
            assert_relative_eq!(rule.weights.iter().sum::<f64>(), 1.0, max_relative = 1e-13);
            let mut factorial = 1.0;
            for k in 0..25 {
                if k > 0 {
                    factorial *= k as f64;
                }
                let m = rule.integrate(|t| t.powi(k));
                assert_relative_eq!(m, factorial, max_relative = 1e-12);
            }
            assert!(rule.nodes.windows(2).all(|w| w[0] < w[1]));
        }
    }
}
