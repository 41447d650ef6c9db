use crate::error::{domain, Result};

/// Generalized Laguerre polynomial `L_k^{(α)}(x)` by the three-term recurrence.
pub fn laguerre(k: u32, alpha: f64, x: f64) -> f64 {
    let mut prev = 1.0;
    if k == 0 {
        return prev;
    }
    let mut cur = 1.0 + alpha - x;
    for i in 1..k {
        let i = f64::from(i);
        let next = ((2.0 * i + 1.0 + alpha - x) * cur - (i + alpha) * prev) / (i + 1.0);
        prev = cur;
        cur = next;
    }
    cur
}

pub(crate) fn check_nl(n: u32, l: u32) -> Result<()> {
    if n == 0 {
        return domain("principal quantum number n must be ≥ 1");
    }
    if l >= n {
        return domain(format!("l = {l} must be ≤ n - 1 = {}", n - 1));
    }
    Ok(())
}

/// Normalization of `R_nl`: `√((2/n)³ (n−l−1)! / (2n (n+l)!))`.
fn normalization(n: u32, l: u32) -> f64 {
    let nf = f64::from(n);
    // (n-l-1)!/(n+l)! = 1 / Π_{k=n-l}^{n+l} k
    let inv_ratio: f64 = (n - l..=n + l).map(f64::from).product();
    ((2.0 / nf).powi(3) / (2.0 * nf * inv_ratio)).sqrt()
}

/// `R_nl(r) e^{r/n}`: the radial function with its exponential factor removed.
pub(crate) fn radial_polynomial(n: u32, l: u32, r: f64) -> f64 {
    let rho = 2.0 * r / f64::from(n);
    normalization(n, l) * rho.powi(l as i32) * laguerre(n - l - 1, f64::from(2 * l + 1), rho)
}

/// Normalized hydrogen radial function `R_nl(r)` in atomic units.
pub fn radial_wavefunction(n: u32, l: u32, r: f64) -> Result<f64> {
    check_nl(n, l)?;
    if !r.is_finite() || r <= 0.0 {
        return domain(format!("r must be positive and finite, got {r}"));
    }
    Ok(radial_polynomial(n, l, r) * (-r / f64::from(n)).exp())
}

/// Sign changes of `R_nl` on a uniform grid of `points` samples over
/// `(0, 2n² + 10]`, which brackets every node.
pub fn radial_node_count(n: u32, l: u32, points: usize) -> Result<usize> {
    check_nl(n, l)?;
    let r_max = 2.0 * f64::from(n * n) + 10.0;
    let step = r_max / points as f64;
    let mut count = 0;
    let mut last_sign = 0.0f64;
    for i in 1..=points {
        // The polynomial part carries the sign and never underflows on this range.
        let v = radial_polynomial(n, l, step * i as f64);
        if v == 0.0 {
            continue;
        }
        let s = v.signum();
        if last_sign != 0.0 && s != last_sign {
            count += 1;
        }
        last_sign = s;
    }
    Ok(count)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn ground_state() {
        assert_relative_eq!(radial_wavefunction(1, 0, 1.0).unwrap(), 0.7357588823428847, max_relative = 1e-14);
        assert_relative_eq!(radial_wavefunction(1, 0, 0.3).unwrap(), 2.0 * (-0.3f64).exp(), max_relative = 1e-14);
    }

    #[test]
    fn textbook_forms() {
        let r = 1.7f64;
        let r20 = (1.0 / 2.0f64.sqrt()) * (1.0 - r / 2.0) * (-r / 2.0).exp();
        assert_relative_eq!(radial_wavefunction(2, 0, r).unwrap(), r20, max_relative = 1e-13);
        let r21 = r / (24.0f64.sqrt()) * (-r / 2.0).exp();
        assert_relative_eq!(radial_wavefunction(2, 1, r).unwrap(), r21, max_relative = 1e-13);
        let r32 = 4.0 / (81.0 * 30.0f64.sqrt()) * r * r * (-r / 3.0).exp();
        assert_relative_eq!(radial_wavefunction(3, 2, r).unwrap(), r32, max_relative = 1e-13);
    }

    #[test]
    fn vanishes_linearly_at_origin_for_p_states() {
        let ratios: Vec<f64> =
            [1e-4, 1e-6, 1e-8].iter().map(|&r| radial_wavefunction(2, 1, r).unwrap() / r).collect();
        let limit = 1.0 / 24.0f64.sqrt();
        for q in ratios {
            assert!(q > 0.0);
            assert_relative_eq!(q, limit, max_relative = 1e-3);
        }
    }

    #[test]
    fn node_counts() {
        assert_eq!(radial_node_count(3, 2, 100_000).unwrap(), 0);
        assert_eq!(radial_node_count(3, 0, 100_000).unwrap(), 2);
        for n in 1..=8 {
            for l in 0..n {
                assert_eq!(radial_node_count(n, l, 100_000).unwrap(), (n - l - 1) as usize, "n={n} l={l}");
            }
        }
    }

    #[test]
    fn invalid_arguments() {
        assert!(radial_wavefunction(2, 2, 1.0).is_err());
        assert!(radial_wavefunction(0, 0, 1.0).is_err());
        assert!(radial_wavefunction(2, 1, 0.0).is_err());
        assert!(radial_wavefunction(2, 1, -1.0).is_err());
    }

    #[test]
    fn laguerre_low_orders() {
        let x = 0.8;
        let a = 3.0;
        assert_eq!(laguerre(0, a, x), 1.0);
        assert_relative_eq!(laguerre(1, a, x), 1.0 + a - x);
        let l2 = x * x / 2.0 - (a + 2.0) * x + (a + 2.0) * (a + 1.0) / 2.0;
        assert_relative_eq!(laguerre(2, a, x), l2, max_relative = 1e-14);
    }
}
