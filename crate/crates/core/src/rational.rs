//! Overflow-checked helpers over `Rational`.

use num_traits::{CheckedAdd, CheckedDiv, CheckedMul, CheckedSub};

use crate::error::{Error, Result};
use crate::Rational;

fn overflow(op: &str, a: &Rational, b: &Rational) -> Error {
    Error::Overflow(format!("{a} {op} {b} exceeds 64-bit rational range"))
}

pub(crate) fn add(a: &Rational, b: &Rational) -> Result<Rational> {
    a.checked_add(b).ok_or_else(|| overflow("+", a, b))
}

pub(crate) fn sub(a: &Rational, b: &Rational) -> Result<Rational> {
    a.checked_sub(b).ok_or_else(|| overflow("-", a, b))
}

pub(crate) fn mul(a: &Rational, b: &Rational) -> Result<Rational> {
    a.checked_mul(b).ok_or_else(|| overflow("*", a, b))
}

pub(crate) fn div(a: &Rational, b: &Rational) -> Result<Rational> {
    if *b.numer() == 0 {
        return Err(Error::Domain(format!("division of {a} by zero")));
    }
    a.checked_div(b).ok_or_else(|| overflow("/", a, b))
}

/// `num / den` from wide integers, failing if the reduced result does not fit.
pub(crate) fn from_i128(num: i128, den: i128) -> Result<Rational> {
    let g = num_integer::gcd(num, den);
    let (mut n, mut d) = (num / g, den / g);
    if d < 0 {
        n = -n;
        d = -d;
    }
    match (i64::try_from(n), i64::try_from(d)) {
        (Ok(n), Ok(d)) => Ok(Rational::new_raw(n, d)),
        _ => Err(Error::Overflow(format!("{num}/{den} exceeds 64-bit rational range"))),
    }
}

pub(crate) fn to_f64(r: &Rational) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}
