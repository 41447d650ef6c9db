use serde::{Deserialize, Serialize};

use super::half::HalfInt;
use crate::error::{domain, Result};

/// `|n, l, m⟩` hydrogen eigenstate without spin.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct UncoupledState {
    pub n: u32,
    pub l: u32,
    pub m: i32,
}

impl UncoupledState {
    pub fn new(n: u32, l: u32, m: i32) -> Result<Self> {
        check_nl(n, l)?;
        if m.unsigned_abs() > l {
            return domain(format!("|m| = {} exceeds l = {l}", m.unsigned_abs()));
        }
        Ok(Self { n, l, m })
    }
}

/// Which of the two couplings of orbital `l` with spin ½.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Branch {
    /// `j = l + 1/2`
    Aligned,
    /// `j = l - 1/2` (requires `l ≥ 1`)
    Opposed,
}

impl Branch {
    pub fn of(l: u32, j: HalfInt) -> Result<Branch> {
        let two_l = 2 * l as i32;
        match j.twice() - two_l {
            1 => Ok(Branch::Aligned),
            -1 if l >= 1 => Ok(Branch::Opposed),
            _ => domain(format!("j = {j} is not l ± 1/2 for l = {l}")),
        }
    }

    pub fn j(self, l: u32) -> HalfInt {
        let two_l = 2 * l as i32;
        match self {
            Branch::Aligned => HalfInt::from_twice(two_l + 1),
            Branch::Opposed => HalfInt::from_twice(two_l - 1),
        }
    }

    /// Branches available for orbital `l`, aligned first.
    pub fn all(l: u32) -> &'static [Branch] {
        if l == 0 {
            &[Branch::Aligned]
        } else {
            &[Branch::Aligned, Branch::Opposed]
        }
    }
}

/// Validates `(l, j, j_z)` for one electron with spin ½.
pub fn check_coupling(l: u32, j: HalfInt, j_z: HalfInt) -> Result<Branch> {
    let branch = Branch::of(l, j)?;
    if j_z.abs() > j {
        return domain(format!("|j_z| = {} exceeds j = {j}", j_z.abs()));
    }
    if !(j - j_z).is_integer() {
        return domain(format!("j - j_z must be an integer (j = {j}, j_z = {j_z})"));
    }
    Ok(branch)
}

fn check_nl(n: u32, l: u32) -> Result<()> {
    if n == 0 {
        return domain("principal quantum number n must be ≥ 1");
    }
    if l >= n {
        return domain(format!("l = {l} must be ≤ n - 1 = {}", n - 1));
    }
    Ok(())
}

/// `|n, l, s=1/2, j, j_z⟩` coupled hydrogen state.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CoupledState {
    pub n: u32,
    pub l: u32,
    pub j: HalfInt,
    pub j_z: HalfInt,
}

impl CoupledState {
    pub const SPIN: HalfInt = HalfInt::HALF;

    pub fn new(n: u32, l: u32, j: HalfInt, j_z: HalfInt) -> Result<Self> {
        check_nl(n, l)?;
        check_coupling(l, j, j_z)?;
        Ok(Self { n, l, j, j_z })
    }

    pub fn branch(&self) -> Branch {
        Branch::of(self.l, self.j).expect("validated on construction")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn uncoupled_validation() {
        assert!(UncoupledState::new(2, 1, -1).is_ok());
        assert!(UncoupledState::new(0, 0, 0).is_err());
        assert!(UncoupledState::new(2, 2, 0).is_err());
        assert!(UncoupledState::new(3, 1, 2).is_err());
    }

    #[test]
    fn coupled_validation() {
        let h = HalfInt::from_twice;
        assert!(CoupledState::new(1, 0, h(1), h(-1)).is_ok());
        assert!(CoupledState::new(2, 0, h(-1), h(-1)).is_err());
        assert!(CoupledState::new(2, 1, h(3), h(3)).is_ok());
        assert!(CoupledState::new(2, 1, h(1), h(3)).is_err());
        assert!(CoupledState::new(2, 1, h(5), h(1)).is_err());
        assert!(CoupledState::new(2, 1, h(3), h(2)).is_err());
        assert_eq!(CoupledState::new(3, 2, h(3), h(1)).unwrap().branch(), Branch::Opposed);
    }
}
