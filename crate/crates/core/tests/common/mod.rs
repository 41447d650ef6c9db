//! Reference formulas shared by integration tests, written independently of the library.

#![allow(dead_code)]

use num_rational::Rational64;

fn fact(n: i32) -> f64 {
    assert!(n >= 0);
    (1..=n).map(f64::from).product()
}

/// Racah's closed formula for `⟨j1 m1; j2 m2 | J M⟩`; all arguments doubled.
pub fn racah_cg(tj1: i32, tm1: i32, tj2: i32, tm2: i32, tj: i32, tm: i32) -> f64 {
    if tm1 + tm2 != tm || tm.abs() > tj || tm1.abs() > tj1 || tm2.abs() > tj2 {
        return 0.0;
    }
    if tj > tj1 + tj2 || tj < (tj1 - tj2).abs() || (tj1 + tj2 + tj) % 2 != 0 {
        return 0.0;
    }
    let h = |t: i32| {
        assert_eq!(t % 2, 0, "non-integer factorial argument");
        t / 2
    };
    let pre = f64::from(tj + 1) * fact(h(tj + tj1 - tj2)) * fact(h(tj - tj1 + tj2)) * fact(h(tj1 + tj2 - tj))
        / fact(h(tj1 + tj2 + tj) + 1);
    let proj = fact(h(tj + tm)) * fact(h(tj - tm)) * fact(h(tj1 - tm1)) * fact(h(tj1 + tm1)) * fact(h(tj2 - tm2)) * fact(h(tj2 + tm2));
    let args = |k: i32| {
        [
            k,
            h(tj1 + tj2 - tj) - k,
            h(tj1 - tm1) - k,
            h(tj2 + tm2) - k,
            h(tj - tj2 + tm1) + k,
            h(tj - tj1 - tm2) + k,
        ]
    };
    let sum: f64 = (0..=h(tj1 + tj2 - tj))
        .filter(|&k| args(k).iter().all(|&a| a >= 0))
        .map(|k| {
            let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
            sign / args(k).iter().map(|&a| fact(a)).product::<f64>()
        })
        .sum();
    (pre * proj).sqrt() * sum
}

/// `⟨1/r³⟩ = 1 / (n³ l (l + 1/2)(l + 1))`.
pub fn inv_r3(n: u32, l: u32) -> Rational64 {
    let (n, l) = (i64::from(n), i64::from(l));
    Rational64::new(2, n * n * n * l * (2 * l + 1) * (l + 1))
}

/// Shift per unit `θ_z` of `|n l m⟩`: `−m⟨1/r³⟩/4`.
pub fn spinless(n: u32, l: u32, m: i32) -> Rational64 {
    if l == 0 {
        return Rational64::from_integer(0);
    }
    -inv_r3(n, l) * Rational64::from_integer(i64::from(m)) / 4
}

/// Shift per unit `θ_z` of `|n l j j_z⟩` (doubled `j`, `j_z`): `−⟨L_z⟩⟨1/r³⟩/4`,
/// with `⟨L_z⟩ = j_z (1 ∓ 1/(2l+1))`, upper sign for `j = l + 1/2`.
pub fn spinful(n: u32, l: u32, tj: i32, tjz: i32) -> Rational64 {
    if l == 0 {
        return Rational64::from_integer(0);
    }
    let sign = if tj == 2 * l as i32 + 1 { 1 } else { -1 };
    let jz = Rational64::new(i64::from(tjz), 2);
    let lz = jz * (Rational64::from_integer(1) - Rational64::new(sign, 2 * i64::from(l) + 1));
    -inv_r3(n, l) * lz / 4
}
