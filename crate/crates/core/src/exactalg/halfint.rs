use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

/// An integer or half-integer, stored as twice its value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HalfInt(i64);

impl HalfInt {
    pub const ZERO: HalfInt = HalfInt(0);
    pub const ONE: HalfInt = HalfInt(2);

    pub const fn int(n: i64) -> Self {
        HalfInt(2 * n)
    }

    pub const fn from_twice(t: i64) -> Self {
        HalfInt(t)
    }

    pub const fn twice(self) -> i64 {
        self.0
    }

    pub const fn is_integer(self) -> bool {
        self.0 % 2 == 0
    }

    pub const fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// The integer value, if there is one.
    pub const fn to_integer(self) -> Option<i64> {
        if self.0 % 2 == 0 {
            Some(self.0 / 2)
        } else {
            None
        }
    }
}

impl From<i64> for HalfInt {
    fn from(n: i64) -> Self {
        HalfInt::int(n)
    }
}

impl Add for HalfInt {
    type Output = HalfInt;
    fn add(self, rhs: HalfInt) -> HalfInt {
        HalfInt(self.0 + rhs.0)
    }
}

impl Sub for HalfInt {
    type Output = HalfInt;
    fn sub(self, rhs: HalfInt) -> HalfInt {
        HalfInt(self.0 - rhs.0)
    }
}

impl Neg for HalfInt {
    type Output = HalfInt;
    fn neg(self) -> HalfInt {
        HalfInt(-self.0)
    }
}

impl Mul<i64> for HalfInt {
    type Output = HalfInt;
    fn mul(self, rhs: i64) -> HalfInt {
        HalfInt(self.0 * rhs)
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 % 2 == 0 {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}
