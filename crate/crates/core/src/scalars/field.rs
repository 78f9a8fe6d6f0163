use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::Rational;
use crate::{Error, Result};

/// A commutative field usable as the coefficient type of matrices and representations.
///
/// The by-reference methods exist so generic code can avoid cloning large exact values.
pub trait Field:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Send
    + Sync
    + 'static
{
    /// Nesting depth in the rational-function tower (`Q` and `f64` are 0).
    const TOWER_DEPTH: usize = 0;

    fn add_ref(&self, rhs: &Self) -> Self;
    fn sub_ref(&self, rhs: &Self) -> Self;
    fn mul_ref(&self, rhs: &Self) -> Self;

    fn neg_ref(&self) -> Self {
        self.clone().neg()
    }

    fn try_inv(&self) -> Result<Self>;

    fn try_div(&self, rhs: &Self) -> Result<Self> {
        Ok(self.mul_ref(&rhs.try_inv()?))
    }

    fn from_rational(r: &Rational) -> Self;

    /// The value as a rational number, if it lies in the prime field of the tower.
    fn as_rational(&self) -> Option<Rational> {
        None
    }

    fn from_i64(n: i64) -> Self {
        Self::from_rational(&Rational::from_integer(n))
    }

    /// Integer power; negative exponents invert.
    fn powi(&self, n: i64) -> Result<Self> {
        let base = if n < 0 { self.try_inv()? } else { self.clone() };
        let mut e = n.unsigned_abs();
        let mut acc = Self::one();
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_ref(&sq);
            }
            e >>= 1;
            if e > 0 {
                sq = sq.mul_ref(&sq);
            }
        }
        Ok(acc)
    }
}

impl Field for f64 {
    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn try_inv(&self) -> Result<Self> {
        if *self == 0.0 {
            Err(Error::DivisionByZero)
        } else {
            Ok(1.0 / self)
        }
    }
    fn from_rational(r: &Rational) -> Self {
        r.to_f64()
    }
}
