//! Rational points of the circle group T = R/Z.

use std::fmt;
use std::ops::{Add, Neg};

use serde::{Deserialize, Serialize};

use crate::rat::Rat;

/// A point of T represented by the unique rational in `[0, 1)`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct TorusPoint(Rat);

impl TorusPoint {
    /// Reduce any rational mod 1 into `[0, 1)`.
    pub fn from_rat(q: &Rat) -> TorusPoint {
        TorusPoint(q.mod1())
    }

    pub fn zero() -> TorusPoint {
        TorusPoint(Rat::zero())
    }

    pub fn value(&self) -> &Rat {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}

impl fmt::Display for TorusPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Debug for TorusPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mod 1", self.0)
    }
}

impl Add for &TorusPoint {
    type Output = TorusPoint;
    fn add(self, rhs: &TorusPoint) -> TorusPoint {
        TorusPoint((&self.0 + &rhs.0).mod1())
    }
}

impl Add for TorusPoint {
    type Output = TorusPoint;
    fn add(self, rhs: TorusPoint) -> TorusPoint {
        &self + &rhs
    }
}

impl Neg for &TorusPoint {
    type Output = TorusPoint;
    fn neg(self) -> TorusPoint {
        TorusPoint((-&self.0).mod1())
    }
}

impl Neg for TorusPoint {
    type Output = TorusPoint;
    fn neg(self) -> TorusPoint {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn add_wraps_mod_one() {
        let a = TorusPoint::from_rat(&Rat::new(4, 5));
        let b = TorusPoint::from_rat(&Rat::new(7, 10));
        assert_eq!(&a + &b, TorusPoint::from_rat(&Rat::new(1, 2)));
    }

    #[test]
    fn neg_of_zero_is_zero() {
        assert_eq!(-TorusPoint::zero(), TorusPoint::zero());
    }

    #[test]
    fn from_rat_reduces() {
        assert_eq!(
            TorusPoint::from_rat(&Rat::new(-13, 10)).value(),
            &Rat::new(7, 10)
        );
    }

    #[test]
    fn inverses_cancel() {
        let a = TorusPoint::from_rat(&Rat::new(3, 7));
        assert!((&a + &(-&a)).is_zero());
    }
}
