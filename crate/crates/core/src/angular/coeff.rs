use std::fmt;
use std::ops::{Mul, Neg};

use num_traits::{Signed, Zero};

use crate::error::{domain, Result};
use crate::rational;
use crate::Rational;

/// A signed square root of a nonnegative rational, `sign · √radicand`.
///
/// The radicand is kept in lowest terms, and the sign is zero exactly when
/// the radicand is zero.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct ExactCoeff {
    sign: i8,
    radicand: Rational,
}

impl ExactCoeff {
    pub const ZERO: ExactCoeff = ExactCoeff { sign: 0, radicand: Rational::new_raw(0, 1) };
    pub const ONE: ExactCoeff = ExactCoeff { sign: 1, radicand: Rational::new_raw(1, 1) };

    /// `sign · √radicand`. A negative radicand or a sign outside `{-1, 0, 1}`
    /// is a domain error.
    pub fn new(sign: i8, radicand: Rational) -> Result<Self> {
        if radicand.is_negative() {
            return domain(format!("negative radicand {radicand}"));
        }
        if !(-1..=1).contains(&sign) {
            return domain(format!("sign must be -1, 0 or +1, got {sign}"));
        }
        if radicand.is_zero() || sign == 0 {
            return Ok(Self::ZERO);
        }
        Ok(Self { sign, radicand })
    }

    /// The coefficient whose signed square is `r`, i.e. `sgn(r)·√|r|`.
    pub fn from_signed_square(r: Rational) -> Self {
        if r.is_zero() {
            return Self::ZERO;
        }
        let sign = if r.is_negative() { -1 } else { 1 };
        Self { sign, radicand: r.abs() }
    }

    pub fn sign(&self) -> i8 {
        self.sign
    }

    pub fn radicand(&self) -> Rational {
        self.radicand
    }

    pub fn is_zero(&self) -> bool {
        self.sign == 0
    }

    pub fn square(&self) -> Rational {
        self.radicand
    }

    pub fn signed_square(&self) -> Rational {
        self.radicand * Rational::from_integer(i64::from(self.sign))
    }

    pub fn value(&self) -> f64 {
        f64::from(self.sign) * rational::to_f64(&self.radicand).sqrt()
    }

    pub fn checked_mul(&self, rhs: &ExactCoeff) -> Result<ExactCoeff> {
        let radicand = rational::mul(&self.radicand, &rhs.radicand)?;
        ExactCoeff::new(self.sign * rhs.sign, radicand)
    }

    pub fn checked_div(&self, rhs: &ExactCoeff) -> Result<ExactCoeff> {
        if rhs.is_zero() {
            return domain("division by a zero coefficient");
        }
        let radicand = rational::div(&self.radicand, &rhs.radicand)?;
        ExactCoeff::new(self.sign * rhs.sign, radicand)
    }

    /// Exact sum of coefficients that share one radicand (zeros allowed),
    /// or `None` if two nonzero terms have different radicands.
    pub fn sum_like(terms: &[ExactCoeff]) -> Option<ExactCoeff> {
        let mut radicand: Option<Rational> = None;
        let mut count = 0i64;
        for t in terms.iter().filter(|t| !t.is_zero()) {
            match radicand {
                Some(r) if r != t.radicand => return None,
                _ => radicand = Some(t.radicand),
            }
            count += i64::from(t.sign);
        }
        let r = radicand.unwrap_or_else(Rational::zero);
        Some(ExactCoeff::from_signed_square(r * Rational::from_integer(count * count.abs())))
    }
}

impl Mul for ExactCoeff {
    type Output = ExactCoeff;
    fn mul(self, rhs: ExactCoeff) -> ExactCoeff {
        self.checked_mul(&rhs).expect("ExactCoeff product overflow")
    }
}

impl Neg for ExactCoeff {
    type Output = ExactCoeff;
    fn neg(self) -> ExactCoeff {
        ExactCoeff { sign: -self.sign, radicand: self.radicand }
    }
}

impl From<Rational> for ExactCoeff {
    /// The coefficient equal to `r` itself (not its square root).
    fn from(r: Rational) -> Self {
        ExactCoeff::from_signed_square(r * r.abs())
    }
}

impl fmt::Display for ExactCoeff {
    /// `+sqrt(p/q)`, `-sqrt(p/q)`, or `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.sign {
            0 => write!(f, "0"),
            s => write!(
                f,
                "{}sqrt({}/{})",
                if s > 0 { '+' } else { '-' },
                self.radicand.numer(),
                self.radicand.denom()
            ),
        }
    }
}

impl fmt::Debug for ExactCoeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn construction_normalizes() {
        let c = ExactCoeff::new(-1, q(4, 6)).unwrap();
        assert_eq!(c.radicand(), q(2, 3));
        assert_eq!(c.to_string(), "-sqrt(2/3)");
        assert_eq!(ExactCoeff::new(1, q(0, 5)).unwrap(), ExactCoeff::ZERO);
        assert_eq!(ExactCoeff::ONE.to_string(), "+sqrt(1/1)");
        assert!(ExactCoeff::new(1, q(-1, 2)).is_err());
        assert!(ExactCoeff::new(2, q(1, 2)).is_err());
    }

    #[test]
    fn products_and_squares_are_exact() {
        let a = ExactCoeff::new(1, q(1, 3)).unwrap();
        let b = ExactCoeff::new(-1, q(2, 3)).unwrap();
        assert_eq!((a * b).signed_square(), q(-2, 9));
        assert_eq!(a.square() + b.square(), q(1, 1));
        let c = ExactCoeff::new(1, q(2, 3)).unwrap();
        assert_eq!(ExactCoeff::sum_like(&[b, c, c]), Some(c));
        assert_eq!(ExactCoeff::sum_like(&[b, c]), Some(ExactCoeff::ZERO));
        assert_eq!(ExactCoeff::sum_like(&[a, c]), None);
        assert_eq!(ExactCoeff::from(q(-3, 2)).value(), -1.5);
        assert_eq!(b.checked_div(&a).unwrap().to_string(), "-sqrt(2/1)");
    }
}
