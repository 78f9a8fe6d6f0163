use super::{Field, HbarField, Scalar};
use crate::{Error, Result};

/// Values of `s = q^(1/2)` and `h` in a concrete field.
///
/// The exact instantiation uses the formal variables; the `f64` one a sample point.
#[derive(Clone, Debug, PartialEq)]
pub struct Params<S> {
    s: S,
    s_inv: S,
    hbar: S,
}

impl<S: Field> Params<S> {
    pub fn new(s: S, hbar: S) -> Result<Self> {
        let s_inv = s.try_inv()?;
        Ok(Params { s, s_inv, hbar })
    }

    pub fn s(&self) -> &S {
        &self.s
    }

    pub fn hbar(&self) -> &S {
        &self.hbar
    }

    pub fn q(&self) -> S {
        self.s.mul_ref(&self.s)
    }

    pub fn q_inv(&self) -> S {
        self.s_inv.mul_ref(&self.s_inv)
    }

    /// `s^k`.
    pub fn s_pow(&self, k: i64) -> S {
        let base = if k < 0 { &self.s_inv } else { &self.s };
        base.powi(k.abs()).expect("nonnegative power")
    }

    /// `q^k`.
    pub fn q_pow(&self, k: i64) -> S {
        self.s_pow(2 * k)
    }

    /// `q - q^(-1)`.
    pub fn q_minus_q_inv(&self) -> S {
        self.q().sub_ref(&self.q_inv())
    }

    /// `q - 1`.
    pub fn q_minus_one(&self) -> S {
        self.q().sub_ref(&S::one())
    }

    /// True when `q = 1`, i.e. the classical point.
    pub fn is_classical(&self) -> bool {
        self.q().sub_ref(&S::one()).is_zero()
    }
}

impl Params<Scalar> {
    /// Formal `s` and `h`.
    pub fn exact() -> Self {
        Params::new(Scalar::s(), Scalar::hbar()).expect("s is invertible")
    }
}

impl Params<HbarField> {
    /// The classical point `q = 1` with formal `h`.
    pub fn classical() -> Self {
        Params::new(HbarField::one(), HbarField::hbar()).expect("1 is invertible")
    }
}

impl Params<f64> {
    /// Sample point `q = q0`, `h = h0`; `q0` must be positive.
    pub fn numeric(q0: f64, h0: f64) -> Result<Self> {
        if !(q0 > 0.0) || !q0.is_finite() {
            return Err(Error::InvalidPoint(format!("q0 = {q0} must be positive")));
        }
        Params::new(q0.sqrt(), h0)
    }
}

use num_traits::One;
