use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize};

use super::{Field, Poly, Rational};
use crate::{Error, Result};

/// Element of `F(x)`: a quotient of polynomials over `F`.
///
/// Canonical form: numerator and denominator coprime, denominator monic, and zero is
/// `0/1`. Every constructor and operation re-normalizes, so structural equality is
/// equality of values.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
pub struct RatFunc<F> {
    num: Poly<F>,
    den: Poly<F>,
}

impl<F: Field> RatFunc<F> {
    pub fn var() -> Self {
        Self::from_poly(Poly::x())
    }

    pub fn constant(c: F) -> Self {
        Self::from_poly(Poly::constant(c))
    }

    pub fn from_poly(num: Poly<F>) -> Self {
        RatFunc { num, den: Poly::one() }
    }

    /// Build `num / den`, reducing to canonical form.
    pub fn from_parts(num: Poly<F>, den: Poly<F>) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    pub(crate) fn from_parts_unchecked(num: Poly<F>, den: Poly<F>) -> Self {
        Self::reduce(num, den)
    }

    fn reduce(num: Poly<F>, den: Poly<F>) -> Self {
        if num.is_zero() {
            return RatFunc { num, den: Poly::one() };
        }
        let (num, den) = if den.is_constant() {
            (num, den)
        } else {
            let g = num.gcd(&den);
            if g.is_one() {
                (num, den)
            } else {
                (num.div_exact(&g).expect("gcd divides"), den.div_exact(&g).expect("gcd divides"))
            }
        };
        let lead = den.lead().expect("nonzero denominator").clone();
        if lead.is_one() {
            RatFunc { num, den }
        } else {
            let inv = lead.try_inv().expect("nonzero leading coefficient");
            RatFunc { num: num.scale(&inv), den: den.scale(&inv) }
        }
    }

    pub fn numer(&self) -> &Poly<F> {
        &self.num
    }

    pub fn denom(&self) -> &Poly<F> {
        &self.den
    }

    /// `Some(c)` when the value does not depend on the variable.
    pub fn as_constant(&self) -> Option<F> {
        (self.num.is_constant() && self.den.is_constant()).then(|| self.num.coeff(0))
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// Valuation at `x = 1`.
    pub fn order_at_one(&self) -> Result<i64> {
        let (kn, _) = self.num.split_at_one()?;
        let (kd, _) = self.den.split_at_one()?;
        Ok(kn as i64 - kd as i64)
    }

    /// The value at `x = 1`, cancelling removable factors `(x - 1)` first.
    pub fn value_at_one(&self) -> Result<F> {
        if self.num.is_zero() {
            return Ok(F::zero());
        }
        let (kn, n) = self.num.split_at_one()?;
        let (kd, d) = self.den.split_at_one()?;
        if kd > kn {
            return Err(Error::PoleAtQ1 { order: (kd - kn) as i64 });
        }
        if kn > kd {
            return Ok(F::zero());
        }
        n.eval(&F::one()).try_div(&d.eval(&F::one()))
    }

    /// Exact value at a point of the coefficient field.
    pub fn eval(&self, x: &F) -> Result<F> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return Err(Error::PoleAtPoint);
        }
        self.num.eval(x).try_div(&d)
    }

    /// Evaluate in another field, mapping coefficients first.
    pub fn eval_with<T: Field>(&self, x: T, mut map: impl FnMut(&F) -> Result<T>) -> Result<T> {
        let d = self.den.eval_with(x.clone(), &mut map)?;
        if d.is_zero() {
            return Err(Error::PoleAtPoint);
        }
        self.num.eval_with(x, &mut map)?.try_div(&d)
    }

    /// Apply a coefficient map to numerator and denominator and re-normalize.
    pub fn try_map_coeffs(&self, mut f: impl FnMut(&F) -> Result<F>) -> Result<Self> {
        let num = self.num.try_map_coeffs(&mut f)?;
        let den = self.den.try_map_coeffs(&mut f)?;
        Self::from_parts(num, den).map_err(|_| Error::PoleAtPoint)
    }
}

impl<F: Field> Zero for RatFunc<F> {
    fn zero() -> Self {
        RatFunc { num: Poly::zero(), den: Poly::one() }
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl<F: Field> One for RatFunc<F> {
    fn one() -> Self {
        RatFunc { num: Poly::one(), den: Poly::one() }
    }
    fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }
}

impl<F: Field> Field for RatFunc<F> {
    const TOWER_DEPTH: usize = F::TOWER_DEPTH + 1;

    fn add_ref(&self, rhs: &Self) -> Self {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            let num = self.num.add_ref(&rhs.num);
            if self.den.is_one() {
                return RatFunc { num, den: Poly::one() };
            }
            return Self::reduce(num, self.den.clone());
        }
        let num = self.num.mul_ref(&rhs.den).add_ref(&rhs.num.mul_ref(&self.den));
        Self::reduce(num, self.den.mul_ref(&rhs.den))
    }

    fn sub_ref(&self, rhs: &Self) -> Self {
        self.add_ref(&rhs.neg_ref())
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RatFunc { num: self.num.mul_ref(&rhs.num), den: Poly::one() };
        }
        // cross-cancel so the product is already coprime
        let g1 = self.num.gcd(&rhs.den);
        let g2 = rhs.num.gcd(&self.den);
        let (a, d) = if g1.is_one() {
            (self.num.clone(), rhs.den.clone())
        } else {
            (self.num.div_exact(&g1).expect("gcd divides"), rhs.den.div_exact(&g1).expect("gcd divides"))
        };
        let (c, b) = if g2.is_one() {
            (rhs.num.clone(), self.den.clone())
        } else {
            (rhs.num.div_exact(&g2).expect("gcd divides"), self.den.div_exact(&g2).expect("gcd divides"))
        };
        let num = a.mul_ref(&c);
        let den = b.mul_ref(&d);
        let lead = den.lead().expect("nonzero").clone();
        if lead.is_one() {
            RatFunc { num, den }
        } else {
            let inv = lead.try_inv().expect("nonzero");
            RatFunc { num: num.scale(&inv), den: den.scale(&inv) }
        }
    }

    fn neg_ref(&self) -> Self {
        RatFunc { num: self.num.neg_ref(), den: self.den.clone() }
    }

    fn try_inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(self.den.clone(), self.num.clone()))
    }

    fn from_rational(r: &Rational) -> Self {
        Self::constant(F::from_rational(r))
    }

    fn as_rational(&self) -> Option<Rational> {
        if self.den.is_one() && self.num.degree().unwrap_or(0) == 0 {
            match self.num.lead() {
                Some(c) => c.as_rational(),
                None => Some(Rational::from(0)),
            }
        } else {
            None
        }
    }
}

impl<F: Field> Add for RatFunc<F> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        self.add_ref(&rhs)
    }
}

impl<F: Field> Sub for RatFunc<F> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self.sub_ref(&rhs)
    }
}

impl<F: Field> Mul for RatFunc<F> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self.mul_ref(&rhs)
    }
}

impl<F: Field> Neg for RatFunc<F> {
    type Output = Self;
    fn neg(self) -> Self {
        self.neg_ref()
    }
}

impl<'a, F: Field> Add for &'a RatFunc<F> {
    type Output = RatFunc<F>;
    fn add(self, rhs: Self) -> RatFunc<F> {
        self.add_ref(rhs)
    }
}

impl<'a, F: Field> Sub for &'a RatFunc<F> {
    type Output = RatFunc<F>;
    fn sub(self, rhs: Self) -> RatFunc<F> {
        self.sub_ref(rhs)
    }
}

impl<'a, F: Field> Mul for &'a RatFunc<F> {
    type Output = RatFunc<F>;
    fn mul(self, rhs: Self) -> RatFunc<F> {
        self.mul_ref(rhs)
    }
}

#[derive(Deserialize)]
struct RawRatFunc<F> {
    num: Poly<F>,
    den: Poly<F>,
}

impl<'de, F: Field + Deserialize<'de>> Deserialize<'de> for RatFunc<F> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = RawRatFunc::<F>::deserialize(deserializer)?;
        let num = Poly::from_coeffs(raw.num.coeffs().to_vec());
        let den = Poly::from_coeffs(raw.den.coeffs().to_vec());
        RatFunc::from_parts(num, den).map_err(serde::de::Error::custom)
    }
}

const VAR_NAMES: [&str; 3] = ["x", "h", "s"];

impl<F: Field> fmt::Display for RatFunc<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let var = VAR_NAMES[Self::TOWER_DEPTH.min(VAR_NAMES.len() - 1)];
        if self.den.is_one() {
            return self.num.render(var, f);
        }
        let wrap = |p: &Poly<F>| p.coeffs().iter().filter(|c| !c.is_zero()).count() > 1;
        let num = Rendered(&self.num, var);
        let den = Rendered(&self.den, var);
        match (wrap(&self.num), wrap(&self.den)) {
            (true, true) => write!(f, "({num})/({den})"),
            (true, false) => write!(f, "({num})/{den}"),
            (false, true) => write!(f, "{num}/({den})"),
            (false, false) => write!(f, "{num}/{den}"),
        }
    }
}

struct Rendered<'a, F>(&'a Poly<F>, &'a str);

impl<F: Field> fmt::Display for Rendered<'_, F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.render(self.1, f)
    }
}

impl<F: Field> fmt::Debug for RatFunc<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{HbarField, Scalar};

    fn s() -> Scalar {
        Scalar::s()
    }
    fn int(n: i64) -> Scalar {
        Scalar::from_i64(n)
    }

    #[test]
    fn s_minus_one_plus_one() {
        assert_eq!((s() - int(1)) + int(1), s());
    }

    #[test]
    fn inverse_of_q() {
        let s2 = s() * s();
        assert_eq!(s2.try_inv().unwrap() * s2, Scalar::one());
        assert_eq!(Scalar::zero().try_inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn q_minus_q_inverse_is_normalized() {
        let q = Scalar::q();
        let v = q.sub_ref(&q.try_inv().unwrap());
        let one = HbarField::one();
        let expect_num = Poly::from_coeffs(vec![-one.clone(), HbarField::zero(), HbarField::zero(), HbarField::zero(), one.clone()]);
        assert_eq!(v.numer(), &expect_num);
        assert_eq!(v.denom(), &Poly::monomial(one, 2));
    }

    #[test]
    fn valuation_at_one() {
        let q = Scalar::q();
        let sm1 = s() - int(1);
        assert_eq!(((q.clone() - int(1)).try_div(&sm1).unwrap()).order_at_s1().unwrap(), 0);
        assert_eq!((sm1.clone() * sm1.clone()).order_at_s1().unwrap(), 2);
        assert_eq!((q.clone() - int(1)).try_inv().unwrap().order_at_s1().unwrap(), -1);
        assert_eq!(Scalar::zero().order_at_s1(), Err(Error::ZeroValuation));
    }

    #[test]
    fn limits_at_one() {
        let q = Scalar::q();
        let qm1 = q.clone() - int(1);
        let v = (q.clone() - q.try_inv().unwrap()).try_div(&qm1).unwrap();
        assert_eq!(v.limit_s1().unwrap(), HbarField::from_i64(2));
        let h = Scalar::hbar();
        assert_eq!((h.try_div(&qm1).unwrap() * qm1.clone()).limit_s1().unwrap(), HbarField::hbar());
        assert_eq!(qm1.try_inv().unwrap().limit_s1(), Err(Error::PoleAtQ1 { order: 1 }));
    }

    #[test]
    fn numeric_evaluation() {
        assert!((s().eval_numeric(4.0, 0.0).unwrap() - 2.0).abs() < 1e-15);
        assert!((Scalar::hbar().eval_numeric(2.0, 0.3).unwrap() - 0.3).abs() < 1e-15);
        let q = Scalar::q();
        let v = (q.clone() - q.try_inv().unwrap()).try_div(&(q - int(1))).unwrap();
        // (q - 1/q)/(q - 1) = (q + 1)/q
        let expect = (1.21 + 1.0) / 1.21;
        assert!((v.eval_numeric(1.21, 0.0).unwrap() - expect).abs() < 1e-14);
        let pole = (Scalar::q() - int(4)).try_inv().unwrap();
        assert_eq!(pole.eval_numeric(4.0, 0.0), Err(Error::PoleAtPoint));
    }

    #[test]
    fn self_difference_is_structurally_zero() {
        let h = Scalar::hbar();
        let a = (h.clone() + s()).try_div(&(h * s() - int(3))).unwrap();
        let z = a.sub_ref(&a);
        assert!(z.is_zero());
        assert_eq!(z, Scalar::zero());
    }

    #[test]
    fn json_shape() {
        let v = (s() - int(1)).try_div(&s()).unwrap();
        let json = serde_json::to_value(&v).unwrap();
        assert!(json.get("num").is_some() && json.get("den").is_some());
        let back: Scalar = serde_json::from_value(json).unwrap();
        assert_eq!(back, v);
    }

    #[test]
    fn display() {
        let v = (s() - int(1)).try_div(&(s() * s())).unwrap();
        assert_eq!(v.to_string(), "(s - 1)/s^2");
        assert_eq!(HbarField::hbar().to_string(), "h");
    }
}
