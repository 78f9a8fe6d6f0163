//! Exact scalars.
//!
//! The coefficient universe is the tower `Q -> Q(h) -> Q(h)(s)` where `s = q^(1/2)`
//! and `h` is the Jordanian deformation parameter. Limits are only ever taken in
//! `s`, so the outer variable is `s` and the inner one `h`.
//!
//! Everything downstream of this module is written against the [`Field`] trait so
//! the same constructions can also be run in `f64` for floating-point spot checks.

mod bivariate;
mod field;
mod half;
mod params;
mod poly;
mod qnum;
mod rational;
mod ratfunc;
mod zpoly;

pub use field::Field;
pub use half::HalfInt;
pub use params::Params;
pub use poly::Poly;
pub use qnum::{q_factorial_asym, q_factorial_sym, q_number_asym, q_number_sym};
pub use rational::Rational;
pub use ratfunc::RatFunc;

/// `Q(h)`: rational functions in the deformation parameter.
pub type HbarField = RatFunc<Rational>;

/// `Q(h)(s)`: the exact coefficient field of every symbolic computation.
pub type Scalar = RatFunc<HbarField>;

impl Scalar {
    /// The variable `s = q^(1/2)`.
    pub fn s() -> Self {
        RatFunc::var()
    }

    /// `q = s^2`.
    pub fn q() -> Self {
        RatFunc::from_poly(Poly::monomial(HbarField::one(), 2))
    }

    /// The deformation parameter `h`, constant in `s`.
    pub fn hbar() -> Self {
        RatFunc::constant(HbarField::var())
    }

    /// `s^k` for any integer `k`.
    pub fn s_pow(k: i64) -> Self {
        if k >= 0 {
            RatFunc::from_poly(Poly::monomial(HbarField::one(), k as usize))
        } else {
            RatFunc::from_parts_unchecked(
                Poly::constant(HbarField::one()),
                Poly::monomial(HbarField::one(), (-k) as usize),
            )
        }
    }

    /// `q^k` for any integer `k`.
    pub fn q_pow(k: i64) -> Self {
        Self::s_pow(2 * k)
    }

    /// Valuation at `s = 1`: the `v` with `a = (s-1)^v u`, `u(1)` finite and nonzero.
    pub fn order_at_s1(&self) -> crate::Result<i64> {
        self.order_at_one()
    }

    /// Exact value at `s = 1`, an element of `Q(h)`.
    pub fn limit_s1(&self) -> crate::Result<HbarField> {
        self.value_at_one()
    }

    /// Floating-point value at `q = q0`, `h = h0` (with `s = sqrt(q0)`, so `q0 > 0`).
    pub fn eval_numeric(&self, q0: f64, h0: f64) -> crate::Result<f64> {
        if !(q0 > 0.0) || !q0.is_finite() {
            return Err(crate::Error::InvalidPoint(format!("q0 = {q0} must be positive")));
        }
        let s0 = q0.sqrt();
        self.eval_with(s0, |c| c.eval_with(h0, |r| Ok(r.to_f64())))
    }

    /// Substitute a rational value for `h`.
    pub fn subs_hbar(&self, value: &Rational) -> crate::Result<Scalar> {
        self.try_map_coeffs(|c| Ok(HbarField::constant(c.eval(value)?)))
    }

    /// Embed an `h`-only value.
    pub fn from_hbar(c: HbarField) -> Self {
        RatFunc::constant(c)
    }
}

impl HbarField {
    /// The deformation parameter `h`.
    pub fn hbar() -> Self {
        RatFunc::var()
    }

    /// Floating-point value at `h = h0`.
    pub fn eval_numeric(&self, h0: f64) -> crate::Result<f64> {
        self.eval_with(h0, |r| Ok(r.to_f64()))
    }

    /// Largest power of `h` in numerator or denominator.
    pub fn hbar_degree(&self) -> usize {
        self.numer().degree().unwrap_or(0).max(self.denom().degree().unwrap_or(0))
    }
}

use num_traits::One;
