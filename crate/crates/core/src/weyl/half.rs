use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

/// An exact half-integer, stored as twice its value.
///
/// Every root, weight and fundamental orbit point of `W(B_n)` has coordinates
/// in `Z/2` in the orthonormal basis, so orbit arithmetic stays exact.
#[derive(Copy, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HalfInt(i64);

impl HalfInt {
    pub const ZERO: HalfInt = HalfInt(0);
    pub const HALF: HalfInt = HalfInt(1);
    pub const ONE: HalfInt = HalfInt(2);

    pub const fn from_int(k: i64) -> Self {
        HalfInt(2 * k)
    }

    /// The value `twice / 2`.
    pub const fn from_twice(twice: i64) -> Self {
        HalfInt(twice)
    }

    pub const fn twice(self) -> i64 {
        self.0
    }

    pub fn to_f64(self) -> f64 {
        self.0 as f64 / 2.0
    }

    pub fn is_integer(self) -> bool {
        self.0 % 2 == 0
    }

    pub fn is_negative(self) -> bool {
        self.0 < 0
    }

    /// Snap a float to the nearest half-integer if it lies within `tol`.
    pub fn from_f64(x: f64, tol: f64) -> Option<Self> {
        let twice = (2.0 * x).round();
        if (twice / 2.0 - x).abs() <= tol && twice.abs() < i64::MAX as f64 {
            Some(HalfInt(twice as i64))
        } else {
            None
        }
    }
}

impl fmt::Debug for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

impl Neg for HalfInt {
    type Output = HalfInt;
    fn neg(self) -> HalfInt {
        HalfInt(-self.0)
    }
}

impl Add for HalfInt {
    type Output = HalfInt;
    fn add(self, rhs: HalfInt) -> HalfInt {
        HalfInt(self.0 + rhs.0)
    }
}

impl AddAssign for HalfInt {
    fn add_assign(&mut self, rhs: HalfInt) {
        self.0 += rhs.0;
    }
}

impl Sub for HalfInt {
    type Output = HalfInt;
    fn sub(self, rhs: HalfInt) -> HalfInt {
        HalfInt(self.0 - rhs.0)
    }
}

impl Mul<i64> for HalfInt {
    type Output = HalfInt;
    fn mul(self, rhs: i64) -> HalfInt {
        HalfInt(self.0 * rhs)
    }
}

/// Inner product of two half-integer vectors, in units of 1/4.
pub fn dot_quarters(a: &[HalfInt], b: &[HalfInt]) -> i64 {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x.0 * y.0).sum()
}

pub fn to_f64_vec(v: &[HalfInt]) -> Vec<f64> {
    v.iter().map(|x| x.to_f64()).collect()
}
