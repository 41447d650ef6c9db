//! Polynomials in `x₁..x₃, p₁..p₃` with `[x_i, p_j] = iħ δ_ij`, kept in
//! normal order (every `x` to the left of every `p`).
//!
//! Coefficients are exact complex rationals multiplied by a monomial in the
//! formal parameters `ħ^k θ₁₂^a θ₁₃^b θ₂₃^c`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex;
use num_traits::{One, Zero};

use crate::Rational;

pub type Scalar = Complex<Rational>;

pub fn real(n: i64, d: i64) -> Scalar {
    Scalar::new(Rational::new(n, d), Rational::zero())
}

pub fn imag(n: i64, d: i64) -> Scalar {
    Scalar::new(Rational::zero(), Rational::new(n, d))
}

/// Spatial axis, `0..3` internally and `1..=3` when displayed.
pub type Axis = usize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Generator {
    X(Axis),
    P(Axis),
}

/// `θ_ij` in terms of the independent components `θ₁₂, θ₁₃, θ₂₃`:
/// `Some((sign, index))`, or `None` for the vanishing diagonal.
pub fn theta_component(i: Axis, j: Axis) -> Option<(i64, usize)> {
    assert!(i < 3 && j < 3, "axis out of range");
    match (i, j) {
        (0, 1) => Some((1, 0)),
        (1, 0) => Some((-1, 0)),
        (0, 2) => Some((1, 1)),
        (2, 0) => Some((-1, 1)),
        (1, 2) => Some((1, 2)),
        (2, 1) => Some((-1, 2)),
        _ => None,
    }
}

const THETA_NAMES: [&str; 3] = ["θ12", "θ13", "θ23"];

/// `ħ^hbar · θ₁₂^theta[0] · θ₁₃^theta[1] · θ₂₃^theta[2]`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Params {
    pub hbar: i32,
    pub theta: [u32; 3],
}

impl Params {
    fn times(self, other: Params) -> Params {
        let mut theta = self.theta;
        for (t, o) in theta.iter_mut().zip(other.theta) {
            *t += o;
        }
        Params { hbar: self.hbar + other.hbar, theta }
    }

    pub fn theta_degree(&self) -> u32 {
        self.theta.iter().sum()
    }
}

/// Normal-ordered operator monomial `x₁^a₁ x₂^a₂ x₃^a₃ p₁^b₁ p₂^b₂ p₃^b₃`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    pub x: [u32; 3],
    pub p: [u32; 3],
}

impl Word {
    pub fn degree(&self) -> u32 {
        self.x.iter().chain(&self.p).sum()
    }
}

fn binomial(n: u32, k: u32) -> i64 {
    (0..k).fold(1i64, |acc, i| acc * i64::from(n - i) / i64::from(i + 1))
}

fn factorial(k: u32) -> i64 {
    (1..=i64::from(k)).product()
}

/// `(-i)^k`.
fn minus_i_pow(k: u32) -> Scalar {
    match k % 4 {
        0 => real(1, 1),
        1 => imag(-1, 1),
        2 => real(-1, 1),
        _ => imag(1, 1),
    }
}

#[derive(Clone, PartialEq, Default)]
pub struct OperatorPoly {
    terms: BTreeMap<(Word, Params), Scalar>,
}

impl OperatorPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::term(Scalar::one(), Params::default(), Word::default())
    }

    pub fn term(coeff: Scalar, params: Params, word: Word) -> Self {
        let mut poly = Self::zero();
        poly.accumulate(word, params, coeff);
        poly
    }

    pub fn scalar(coeff: Scalar) -> Self {
        Self::term(coeff, Params::default(), Word::default())
    }

    pub fn x(i: Axis) -> Self {
        let mut w = Word::default();
        w.x[i] = 1;
        Self::term(Scalar::one(), Params::default(), w)
    }

    pub fn p(i: Axis) -> Self {
        let mut w = Word::default();
        w.p[i] = 1;
        Self::term(Scalar::one(), Params::default(), w)
    }

    pub fn generator(g: Generator) -> Self {
        match g {
            Generator::X(i) => Self::x(i),
            Generator::P(i) => Self::p(i),
        }
    }

    /// The c-number `θ_ij`; zero on the diagonal.
    pub fn theta(i: Axis, j: Axis) -> Self {
        match theta_component(i, j) {
            None => Self::zero(),
            Some((sign, idx)) => {
                let mut params = Params::default();
                params.theta[idx] = 1;
                Self::term(real(sign, 1), params, Word::default())
            }
        }
    }

    /// The c-number `ħ^k`.
    pub fn hbar_pow(k: i32) -> Self {
        Self::term(Scalar::one(), Params { hbar: k, theta: [0; 3] }, Word::default())
    }

    fn accumulate(&mut self, word: Word, params: Params, coeff: Scalar) {
        if coeff.is_zero() {
            return;
        }
        let key = (word, params);
        let entry = self.terms.entry(key).or_insert_with(Scalar::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Params, &Scalar)> {
        self.terms.iter().map(|((w, p), c)| (w, p, c))
    }

    pub fn scale(&self, c: Scalar) -> Self {
        let mut out = Self::zero();
        for ((w, p), v) in &self.terms {
            out.accumulate(*w, *p, *v * c);
        }
        out
    }

    /// Keeps only the terms of total θ-degree `degree`.
    pub fn theta_degree(&self, degree: u32) -> Self {
        self.filter(|_, p| p.theta_degree() == degree)
    }

    /// Sets the θ components with `keep[idx] == false` to zero.
    pub fn restrict_theta(&self, keep: [bool; 3]) -> Self {
        self.filter(|_, p| p.theta.iter().zip(keep).all(|(&e, k)| k || e == 0))
    }

    fn filter(&self, pred: impl Fn(&Word, &Params) -> bool) -> Self {
        let terms = self.terms.iter().filter(|((w, p), _)| pred(w, p)).map(|(k, v)| (*k, *v)).collect();
        Self { terms }
    }

    /// Normal-ordered product of two monomials.
    fn mul_words(lhs: &Word, rhs: &Word, out: &mut Vec<(Word, u32, i64)>) {
        // p_i^b x_i^c = Σ_k k! C(b,k) C(c,k) (-iħ)^k x_i^{c-k} p_i^{b-k}, axis by axis.
        out.clear();
        out.push((Word { x: lhs.x, p: [0; 3] }, 0, 1));
        for axis in 0..3 {
            let b = lhs.p[axis];
            let c = rhs.x[axis];
            let mut next = Vec::new();
            for (w, k_total, coeff) in out.iter() {
                for k in 0..=b.min(c) {
                    let mut nw = *w;
                    nw.x[axis] += c - k;
                    nw.p[axis] += b - k;
                    let f = factorial(k) * binomial(b, k) * binomial(c, k);
                    next.push((nw, k_total + k, coeff * f));
                }
            }
            *out = next;
        }
        for (w, _, _) in out.iter_mut() {
            for axis in 0..3 {
                w.p[axis] += rhs.p[axis];
            }
        }
    }

    pub fn commutator(&self, other: &Self) -> Self {
        &(self * other) - &(other * self)
    }

    /// Normal form of a word of generators by repeated adjacent rewriting.
    pub fn from_word(word: &[Generator], sweep: Sweep) -> Self {
        let mut pending: Vec<(Scalar, Params, Vec<Generator>)> = vec![(Scalar::one(), Params::default(), word.to_vec())];
        let mut out = Self::zero();
        while let Some((coeff, params, w)) = pending.pop() {
            let misordered = |k: usize| out_of_order(w[k], w[k + 1]);
            let pos = match sweep {
                Sweep::LeftToRight => (0..w.len().saturating_sub(1)).find(|&k| misordered(k)),
                Sweep::RightToLeft => (0..w.len().saturating_sub(1)).rev().find(|&k| misordered(k)),
            };
            let Some(k) = pos else {
                let mut nw = Word::default();
                for g in &w {
                    match *g {
                        Generator::X(i) => nw.x[i] += 1,
                        Generator::P(i) => nw.p[i] += 1,
                    }
                }
                out.accumulate(nw, params, coeff);
                continue;
            };
            let mut swapped = w.clone();
            swapped.swap(k, k + 1);
            if let (Generator::P(i), Generator::X(j)) = (w[k], w[k + 1]) {
                if i == j {
                    // p_i x_i = x_i p_i - iħ
                    let mut contracted = w.clone();
                    contracted.drain(k..k + 2);
                    let hp = params.times(Params { hbar: 1, theta: [0; 3] });
                    pending.push((coeff * imag(-1, 1), hp, contracted));
                }
            }
            pending.push((coeff, params, swapped));
        }
        out
    }
}

/// Which misordered pair the rewriting normal-orderer fixes first.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sweep {
    LeftToRight,
    RightToLeft,
}

fn out_of_order(a: Generator, b: Generator) -> bool {
    match (a, b) {
        (Generator::P(_), Generator::X(_)) => true,
        (Generator::X(i), Generator::X(j)) | (Generator::P(i), Generator::P(j)) => i > j,
        _ => false,
    }
}

impl<'a> Mul<&'a OperatorPoly> for &'a OperatorPoly {
    type Output = OperatorPoly;
    fn mul(self, rhs: &'a OperatorPoly) -> OperatorPoly {
        let mut out = OperatorPoly::zero();
        let mut scratch = Vec::new();
        for ((lw, lp), lc) in &self.terms {
            for ((rw, rp), rc) in &rhs.terms {
                let params = lp.times(*rp);
                let base = *lc * *rc;
                OperatorPoly::mul_words(lw, rw, &mut scratch);
                for (w, k, f) in &scratch {
                    let hp = params.times(Params { hbar: *k as i32, theta: [0; 3] });
                    out.accumulate(*w, hp, base * minus_i_pow(*k) * real(*f, 1));
                }
            }
        }
        out
    }
}

impl<'a> Add<&'a OperatorPoly> for &'a OperatorPoly {
    type Output = OperatorPoly;
    fn add(self, rhs: &'a OperatorPoly) -> OperatorPoly {
        let mut out = self.clone();
        for ((w, p), c) in &rhs.terms {
            out.accumulate(*w, *p, *c);
        }
        out
    }
}

impl<'a> Sub<&'a OperatorPoly> for &'a OperatorPoly {
    type Output = OperatorPoly;
    fn sub(self, rhs: &'a OperatorPoly) -> OperatorPoly {
        let mut out = self.clone();
        for ((w, p), c) in &rhs.terms {
            out.accumulate(*w, *p, -*c);
        }
        out
    }
}

impl Neg for &OperatorPoly {
    type Output = OperatorPoly;
    fn neg(self) -> OperatorPoly {
        self.scale(real(-1, 1))
    }
}

impl std::iter::Sum for OperatorPoly {
    fn sum<I: Iterator<Item = OperatorPoly>>(iter: I) -> Self {
        iter.fold(OperatorPoly::zero(), |acc, p| &acc + &p)
    }
}

fn fmt_scalar(c: &Scalar) -> String {
    match (c.re.is_zero(), c.im.is_zero()) {
        (_, true) => c.re.to_string(),
        (true, false) if c.im == Rational::one() => "i".to_string(),
        (true, false) if c.im == -Rational::one() => "-i".to_string(),
        (true, false) => format!("{}i", c.im),
        (false, false) => format!("({} + {}i)", c.re, c.im),
    }
}

fn fmt_power(out: &mut Vec<String>, name: &str, exp: i64) {
    match exp {
        0 => {}
        1 => out.push(name.to_string()),
        e => out.push(format!("{name}^{e}")),
    }
}

impl fmt::Display for OperatorPoly {
    /// One term per block: `coefficient · parameters · operators`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, ((w, p), c)) in self.terms.iter().enumerate() {
            let mut factors = Vec::new();
            fmt_power(&mut factors, "ħ", i64::from(p.hbar));
            for (name, &e) in THETA_NAMES.iter().zip(&p.theta) {
                fmt_power(&mut factors, name, i64::from(e));
            }
            for axis in 0..3 {
                fmt_power(&mut factors, &format!("x{}", axis + 1), i64::from(w.x[axis]));
            }
            for axis in 0..3 {
                fmt_power(&mut factors, &format!("p{}", axis + 1), i64::from(w.p[axis]));
            }
            let negative_real = c.im.is_zero() && c.re < Rational::zero();
            let negative_imag = c.re.is_zero() && c.im < Rational::zero();
            let (negative, magnitude) = if negative_real || negative_imag {
                (true, -*c)
            } else {
                (false, *c)
            };
            if !(magnitude.is_one() && !factors.is_empty()) {
                factors.insert(0, fmt_scalar(&magnitude));
            }
            let sep = match (idx, negative) {
                (0, true) => "-",
                (0, false) => "",
                (_, true) => " - ",
                (_, false) => " + ",
            };
            write!(f, "{sep}{}", factors.join("·"))?;
        }
        Ok(())
    }
}

impl fmt::Debug for OperatorPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
