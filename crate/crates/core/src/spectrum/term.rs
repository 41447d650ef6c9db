//! Spectroscopic term symbols `^{2s+1}L_j`.
//!
//! Canonical text is `^2P_{1/2}`. A split sublevel carries its projection as
//! `^2P_{3/2,+1/2}`; the short label `^2P_{-1/2}` (signed subscript, `j`
//! omitted) is also accepted and resolves to the smallest compatible `j`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::angular::HalfInt;
use crate::error::{Error, Result};

/// Orbital letters for `l = 0, 1, 2, ...` (`J` is skipped by convention).
pub const ORBITAL_LETTERS: &str = "SPDFGHIKLMNOQRTUVWXYZ";

pub fn orbital_letter(l: u32) -> Option<char> {
    ORBITAL_LETTERS.chars().nth(l as usize)
}

pub fn orbital_from_letter(c: char) -> Option<u32> {
    ORBITAL_LETTERS.chars().position(|x| x == c).map(|p| p as u32)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TermSymbol {
    pub multiplicity: u32,
    pub l: u32,
    pub j: HalfInt,
    pub j_z: Option<HalfInt>,
}

impl TermSymbol {
    pub fn new(multiplicity: u32, l: u32, j: HalfInt, j_z: Option<HalfInt>) -> Result<Self> {
        let t = Self { multiplicity, l, j, j_z };
        t.validate().map_err(Error::Domain)?;
        Ok(t)
    }

    /// `^2L_j` for one electron.
    pub fn doublet(l: u32, j: HalfInt) -> Result<Self> {
        Self::new(2, l, j, None)
    }

    pub fn spin(&self) -> HalfInt {
        HalfInt::from_twice(self.multiplicity as i32 - 1)
    }

    pub fn with_projection(self, j_z: HalfInt) -> Result<Self> {
        Self::new(self.multiplicity, self.l, self.j, Some(j_z))
    }

    fn validate(&self) -> std::result::Result<(), String> {
        if self.multiplicity == 0 {
            return Err("multiplicity must be ≥ 1".into());
        }
        if orbital_letter(self.l).is_none() {
            return Err(format!("no orbital letter for l = {}", self.l));
        }
        let s = self.spin();
        let l = HalfInt::from_int(self.l as i32);
        let low = (l - s).abs();
        if self.j < low || self.j > l + s || !(self.j - low).is_integer() {
            return Err(format!("j = {} cannot couple l = {} with s = {s}", self.j, self.l));
        }
        if let Some(j_z) = self.j_z {
            if j_z.abs() > self.j || !(self.j - j_z).is_integer() {
                return Err(format!("j_z = {j_z} is not a projection of j = {}", self.j));
            }
        }
        Ok(())
    }

    /// Label with the projection in place of `j`, e.g. `^2P_{-1/2}`.
    pub fn sublevel_label(&self) -> String {
        match self.j_z {
            Some(j_z) => format!("^{}{}_{{{}}}", self.multiplicity, self.letter(), signed(j_z)),
            None => self.to_string(),
        }
    }

    fn letter(&self) -> char {
        orbital_letter(self.l).expect("validated")
    }
}

fn signed(h: HalfInt) -> String {
    if h.twice() >= 0 {
        format!("+{h}")
    } else {
        h.to_string()
    }
}

impl fmt::Display for TermSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "^{}{}_{{{}", self.multiplicity, self.letter(), self.j)?;
        if let Some(j_z) = self.j_z {
            write!(f, ",{}", signed(j_z))?;
        }
        write!(f, "}}")
    }
}

impl std::str::FromStr for TermSymbol {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_term_symbol(s)
    }
}

pub fn format_term_symbol(t: &TermSymbol) -> String {
    t.to_string()
}

struct Cursor<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse { position: self.pos, message: message.into() })
    }

    fn peek(&self) -> Option<char> {
        self.text[self.pos..].chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            self.err(format!("expected '{c}'"))
        }
    }

    fn digits(&mut self) -> Result<u32> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected digits");
        }
        self.text[start..self.pos].parse().map_err(|_| Error::Parse { position: start, message: "number too large".into() })
    }

    /// `[+|-] digits [/2]`, returning the value and whether a sign was written.
    fn half_int(&mut self) -> Result<(HalfInt, bool)> {
        let negative = self.eat('-');
        let signed = negative || self.eat('+');
        let start = self.pos;
        let whole = self.digits()?;
        let twice = if self.eat('/') {
            let den_pos = self.pos;
            if self.digits()? != 2 {
                return Err(Error::Parse { position: den_pos, message: "only halves are allowed as fractions".into() });
            }
            if whole % 2 == 0 {
                return Err(Error::Parse { position: start, message: format!("{whole}/2 is not in lowest terms") });
            }
            whole
        } else {
            whole.checked_mul(2).ok_or(Error::Parse { position: start, message: "number too large".into() })?
        };
        let twice = i32::try_from(twice).map_err(|_| Error::Parse { position: start, message: "number too large".into() })?;
        Ok((HalfInt::from_twice(if negative { -twice } else { twice }), signed))
    }
}

/// Parses canonical, sublevel and short sublevel forms; multiplicity and the
/// subscript may be braced or bare (`^{2}P_{1/2}`, `^2P_1`).
pub fn parse_term_symbol(text: &str) -> Result<TermSymbol> {
    let mut cur = Cursor { text, pos: 0 };
    cur.expect('^')?;
    let multiplicity = if cur.eat('{') {
        let m = cur.digits()?;
        cur.expect('}')?;
        m
    } else {
        cur.digits()?
    };
    let letter_pos = cur.pos;
    let letter = cur.peek().ok_or_else(|| Error::Parse { position: letter_pos, message: "expected orbital letter".into() })?;
    let l = orbital_from_letter(letter)
        .ok_or_else(|| Error::Parse { position: letter_pos, message: format!("unknown orbital letter '{letter}'") })?;
    cur.pos += letter.len_utf8();
    cur.expect('_')?;
    let sub_pos = cur.pos;
    let (first, second) = if cur.eat('{') {
        let first = cur.half_int()?;
        let second = if cur.eat(',') { Some(cur.half_int()?) } else { None };
        cur.expect('}')?;
        (first, second)
    } else {
        (cur.half_int()?, None)
    };
    if cur.pos != text.len() {
        return cur.err("unexpected trailing characters");
    }
    let at_sub = |message: String| Error::Parse { position: sub_pos, message };

    let (j, j_z) = match (first, second) {
        ((j, false), None) => (j, None),
        ((j, false), Some((j_z, _))) => (j, Some(j_z)),
        ((_, true), Some(_)) => return Err(at_sub("j must be unsigned".into())),
        ((j_z, true), None) => {
            let probe = TermSymbol { multiplicity, l, j: HalfInt::ZERO, j_z: None };
            let s = probe.spin();
            let l_h = HalfInt::from_int(l as i32);
            let mut j = (l_h - s).abs();
            while j < j_z.abs() || !(j - j_z).is_integer() {
                j = j + HalfInt::from_int(1);
                if j > l_h + s {
                    return Err(at_sub(format!("no j couples l = {l}, s = {s} with j_z = {j_z}")));
                }
            }
            (j, Some(j_z))
        }
    };
    TermSymbol::new(multiplicity, l, j, j_z).map_err(|e| at_sub(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn h(t: i32) -> HalfInt {
        HalfInt::from_twice(t)
    }

    #[test]
    fn canonical_rendering() {
        assert_eq!(TermSymbol::doublet(1, h(1)).unwrap().to_string(), "^2P_{1/2}");
        assert_eq!(TermSymbol::doublet(0, h(1)).unwrap().to_string(), "^2S_{1/2}");
        assert_eq!(TermSymbol::doublet(1, h(3)).unwrap().to_string(), "^2P_{3/2}");
        assert_eq!(TermSymbol::new(1, 2, h(4), None).unwrap().to_string(), "^1D_{2}");
    }

    #[test]
    fn sublevels() {
        let t = TermSymbol::doublet(1, h(1)).unwrap().with_projection(h(-1)).unwrap();
        assert_eq!(t.to_string(), "^2P_{1/2,-1/2}");
        assert_eq!(t.sublevel_label(), "^2P_{-1/2}");
        let short = parse_term_symbol("^2P_{-1/2}").unwrap();
        assert_eq!(short, t);
        let plus = parse_term_symbol("^2P_{+1/2}").unwrap();
        assert_eq!((plus.j, plus.j_z), (h(1), Some(h(1))));
        let high = parse_term_symbol("^2P_{+3/2}").unwrap();
        assert_eq!(high.j, h(3));
        assert_eq!(parse_term_symbol("^2P_{3/2,-1/2}").unwrap().j_z, Some(h(-1)));
    }

    #[test]
    fn relaxed_input_forms() {
        assert_eq!(parse_term_symbol("^{2}S_{1/2}").unwrap(), TermSymbol::doublet(0, h(1)).unwrap());
        assert_eq!(parse_term_symbol("^3P_1").unwrap(), TermSymbol::new(3, 1, h(2), None).unwrap());
    }

    #[test]
    fn parse_errors_carry_positions() {
        let cases = [
            ("2P_{1/2}", 0),
            ("^2J_{1/2}", 2),
            ("^2P{1/2}", 3),
            ("^2P_{1/3}", 7),
            ("^2P_{2/2}", 5),
            ("^2P_{5/2}", 4),
            ("^2P_{1/2", 8),
            ("^2P_{1/2}x", 9),
            ("^2S_{+3/2}", 4),
            ("^2P_{+1/2,1/2}", 4),
            ("^", 1),
        ];
        for (text, pos) in cases {
            match parse_term_symbol(text) {
                Err(Error::Parse { position, .. }) => assert_eq!(position, pos, "{text}"),
                other => panic!("{text}: expected parse error, got {other:?}"),
            }
        }
    }

    #[test]
    fn invalid_fields() {
        assert!(TermSymbol::doublet(0, h(3)).is_err());
        assert!(TermSymbol::doublet(1, h(1)).unwrap().with_projection(h(3)).is_err());
        assert!(TermSymbol::new(0, 0, h(0), None).is_err());
        assert!(TermSymbol::new(2, 40, h(79), None).is_err());
    }

    fn any_symbol() -> impl Strategy<Value = TermSymbol> {
        (1u32..5, 0u32..=5, any::<bool>(), 0usize..12).prop_filter_map("valid", |(mult, l, with_proj, pick)| {
            let s2 = mult as i32 - 1;
            let l2 = 2 * l as i32;
            let js: Vec<i32> = ((l2 - s2).abs()..=l2 + s2).step_by(2).collect();
            let j = js[pick % js.len()];
            let j_z = with_proj.then(|| -j + 2 * (pick as i32 % (j + 1)));
            TermSymbol::new(mult, l, h(j), j_z.map(h)).ok()
        })
    }

    proptest! {
        #[test]
        fn round_trip(t in any_symbol()) {
            prop_assert_eq!(parse_term_symbol(&format_term_symbol(&t)).unwrap(), t);
        }
    }
}
