use std::fmt;

use num_traits::One;
use serde::Serialize;

use super::element::AlgebraElement;
use crate::scalars::{q_factorial_asym, q_factorial_sym, Field, HalfInt, Params, Scalar};
use crate::{Error, Result};

/// Truncated power series in `h` with algebra-valued coefficients.
///
/// Always stores exactly `order + 1` coefficients; index `n` is the coefficient of `h^n`.
#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct HSeries {
    order: usize,
    coeffs: Vec<AlgebraElement>,
}

impl HSeries {
    pub fn zero(order: usize) -> Self {
        HSeries { order, coeffs: vec![AlgebraElement::zero(); order + 1] }
    }

    pub fn constant(x: AlgebraElement, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = x;
        s
    }

    pub fn one(order: usize) -> Self {
        Self::constant(AlgebraElement::one(), order)
    }

    /// `h^k x`, truncated.
    pub fn term(x: AlgebraElement, k: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if k <= order {
            s.coeffs[k] = x;
        }
        s
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeffs(&self) -> &[AlgebraElement] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> &AlgebraElement {
        &self.coeffs[n]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    fn zip(&self, rhs: &Self, f: impl Fn(&AlgebraElement, &AlgebraElement) -> AlgebraElement) -> Self {
        let order = self.order.min(rhs.order);
        HSeries { order, coeffs: (0..=order).map(|n| f(&self.coeffs[n], &rhs.coeffs[n])).collect() }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        self.zip(rhs, |a, b| a.add(b))
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.zip(rhs, |a, b| a.sub(b))
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        self.map(|x| x.scale(c))
    }

    pub fn neg(&self) -> Self {
        self.map(|x| x.neg())
    }

    pub fn map(&self, f: impl Fn(&AlgebraElement) -> AlgebraElement) -> Self {
        HSeries { order: self.order, coeffs: self.coeffs.iter().map(f).collect() }
    }

    pub fn try_map(&self, f: impl Fn(&AlgebraElement) -> Result<AlgebraElement>) -> Result<Self> {
        Ok(HSeries { order: self.order, coeffs: self.coeffs.iter().map(f).collect::<Result<_>>()? })
    }

    /// Multiply by `h^k`.
    pub fn shift(&self, k: usize) -> Self {
        let mut out = Self::zero(self.order);
        for n in 0..=self.order {
            if n + k <= self.order {
                out.coeffs[n + k] = self.coeffs[n].clone();
            }
        }
        out
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let order = self.order.min(rhs.order);
        let mut out = Self::zero(order);
        for i in 0..=order {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=order - i {
                if rhs.coeffs[j].is_zero() {
                    continue;
                }
                out.coeffs[i + j] = out.coeffs[i + j].add(&self.coeffs[i].mul(&rhs.coeffs[j]));
            }
        }
        out
    }

    pub fn left_mul(&self, x: &AlgebraElement) -> Self {
        self.map(|c| x.mul(c))
    }

    pub fn right_mul(&self, x: &AlgebraElement) -> Self {
        self.map(|c| c.mul(x))
    }

    /// Lowest order at which the two series differ.
    pub fn first_difference(&self, rhs: &Self) -> Option<usize> {
        let order = self.order.min(rhs.order);
        (0..=order).find(|&n| self.coeffs[n] != rhs.coeffs[n])
    }

    fn require_no_constant(&self, what: &str) -> Result<()> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::InvalidSeries(format!("{what} needs an argument without constant term")));
        }
        Ok(())
    }

    fn exp_with(&self, fact: impl Fn(u32) -> Scalar) -> Result<Self> {
        let mut acc = Self::one(self.order);
        let mut power = Self::one(self.order);
        for n in 1..=self.order as u32 {
            power = power.mul(self);
            if power.is_zero() {
                break;
            }
            acc = acc.add(&power.scale(&fact(n).try_inv()?));
        }
        Ok(acc)
    }

    /// `exp_q(x) = sum x^n / (n)_q!`.
    pub fn exp_q(&self) -> Result<Self> {
        self.require_no_constant("exp_q")?;
        let p = Params::exact();
        self.exp_with(|n| q_factorial_asym(n, &p))
    }

    /// `E_q(x) = sum x^n / [n]!`.
    pub fn big_e_q(&self) -> Result<Self> {
        self.require_no_constant("E_q")?;
        let p = Params::exact();
        self.exp_with(|n| q_factorial_sym(n, &p))
    }

    /// Inverse of a series whose constant term is a nonzero multiple of a Cartan monomial.
    pub fn inverse(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        let mut terms = c0.terms();
        let (m, c) = match (terms.next(), terms.next()) {
            (Some((m, c)), None) if m.is_cartan() => (*m, c.clone()),
            _ => return Err(Error::InvalidSeries(format!("constant term {c0} is not invertible"))),
        };
        let c0_inv = AlgebraElement::monomial(super::PBWMonomial::cartan(m.cartan.inverse()), c.try_inv()?);
        // x = c0 (1 + u)  =>  x^(-1) = (sum (-u)^n) c0^(-1)
        let u = self.left_mul(&c0_inv).sub(&Self::one(self.order));
        let minus_u = u.neg();
        let mut acc = Self::one(self.order);
        let mut power = Self::one(self.order);
        for _ in 1..=self.order {
            power = power.mul(&minus_u);
            if power.is_zero() {
                break;
            }
            acc = acc.add(&power);
        }
        Ok(acc.right_mul(&c0_inv))
    }
}

impl fmt::Display for HSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(n, c)| format!("h^{n} [{c}]"))
            .collect();
        if parts.is_empty() {
            write!(f, "0 + O(h^{})", self.order + 1)
        } else {
            write!(f, "{} + O(h^{})", parts.join(" + "), self.order + 1)
        }
    }
}

/// `c h e1 / (q - 1)` as a series.
pub fn twist_argument(c: &Scalar, order: usize) -> HSeries {
    let q_minus_one = Scalar::q().sub_ref(&Scalar::one());
    let coeff = c.try_div(&q_minus_one).expect("q - 1 is nonzero");
    HSeries::term(AlgebraElement::e1().scale(&coeff), 1, order)
}

/// `G = E_q(h e1 / (q - 1))`.
pub fn twist_series(order: usize) -> HSeries {
    twist_argument(&Scalar::one(), order).big_e_q().expect("argument has no constant term")
}

/// `t^(alpha) = G^(-1) E_q(q^alpha h e1 / (q - 1))`.
pub fn t_alpha_series(alpha: HalfInt, order: usize) -> Result<HSeries> {
    t_alpha_with(&twist_series(order).inverse()?, alpha)
}

/// `t^(alpha)` from a precomputed `G^(-1)`; the order is that of `g_inv`.
pub fn t_alpha_with(g_inv: &HSeries, alpha: HalfInt) -> Result<HSeries> {
    let order = g_inv.order();
    if alpha == HalfInt::ZERO {
        return Ok(HSeries::one(order));
    }
    let shifted = twist_argument(&Scalar::s_pow(alpha.twice()), order).big_e_q()?;
    Ok(g_inv.mul(&shifted))
}

/// A series times a Cartan factor `K(c1, c2)` with half-integer exponents. Integer
/// parts are absorbed into the series so that equality is structural; the factor
/// kept aside is `K(r1/2, r2/2)` with `r1, r2` in `{0, 1}`.
#[derive(Clone, PartialEq, Debug)]
pub struct Dressed {
    series: HSeries,
    twice: (i64, i64),
}

impl Dressed {
    pub fn new(series: HSeries, c1: HalfInt, c2: HalfInt) -> Self {
        let (t1, t2) = (c1.twice(), c2.twice());
        let (r1, r2) = (t1.rem_euclid(2), t2.rem_euclid(2));
        let k = AlgebraElement::cartan((t1 - r1) / 2, (t2 - r2) / 2);
        Dressed { series: series.right_mul(&k), twice: (r1, r2) }
    }

    pub fn plain(series: HSeries) -> Self {
        Dressed { series, twice: (0, 0) }
    }

    pub fn series(&self) -> &HSeries {
        &self.series
    }

    /// Twice the exponents of the leftover half-integer Cartan factor.
    pub fn residual_cartan(&self) -> (i64, i64) {
        self.twice
    }

    /// `(x K_a)(y K_b) = x Ad_{K_a}(y) K_{a+b}`.
    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        let moved = rhs.series.try_map(|c| c.conjugate_by_half_cartan(self.twice))?;
        let series = self.series.mul(&moved);
        Ok(Dressed::new(
            series,
            HalfInt::from_twice(self.twice.0 + rhs.twice.0),
            HalfInt::from_twice(self.twice.1 + rhs.twice.1),
        ))
    }

    pub fn first_difference(&self, rhs: &Self) -> Option<usize> {
        if self.twice != rhs.twice {
            return Some(0);
        }
        self.series.first_difference(&rhs.series)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exponentials_of_zero() {
        assert_eq!(HSeries::zero(4).exp_q().unwrap(), HSeries::one(4));
        assert!(matches!(HSeries::one(3).big_e_q(), Err(Error::InvalidSeries(_))));
    }

    #[test]
    fn twist_to_second_order() {
        let g = twist_series(2);
        let q1 = Scalar::q().sub_ref(&Scalar::one());
        assert_eq!(g.coeff(1), &AlgebraElement::e1().scale(&q1.try_inv().unwrap()));
        // [2]! = q + q^(-1)
        let two = Scalar::q().add_ref(&Scalar::q_pow(-1));
        let c2 = q1.mul_ref(&q1).mul_ref(&two).try_inv().unwrap();
        assert_eq!(g.coeff(2), &AlgebraElement::e1().pow(2).scale(&c2));
    }

    #[test]
    fn series_inverse_is_two_sided() {
        let g = twist_series(6);
        let gi = g.inverse().unwrap();
        assert_eq!(gi.mul(&g), HSeries::one(6));
        assert_eq!(g.mul(&gi), HSeries::one(6));
    }

    #[test]
    fn t_alpha_low_orders() {
        assert_eq!(t_alpha_series(HalfInt::ZERO, 3).unwrap(), HSeries::one(3));
        let t1 = t_alpha_series(HalfInt::from_int(1), 3).unwrap();
        assert_eq!(t1.coeff(1), &AlgebraElement::e1());
        let t2 = t_alpha_series(HalfInt::from_int(2), 3).unwrap();
        assert_eq!(t2.coeff(1), &AlgebraElement::e1().scale(&Scalar::q().add_ref(&Scalar::one())));
    }

    #[test]
    fn dressed_absorbs_integer_parts() {
        let a = Dressed::new(HSeries::one(1), HalfInt::from_int(1), HalfInt::ZERO);
        assert_eq!(a.residual_cartan(), (0, 0));
        assert_eq!(a.series().coeff(0), &AlgebraElement::cartan(1, 0));
        let h = Dressed::new(HSeries::one(1), HalfInt::half(1), HalfInt::ZERO);
        assert_eq!(h.mul(&h).unwrap(), a);
    }
}
