use std::any::Any;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::{Field, HbarField, Rational};
use crate::{Error, Result};

/// Dense univariate polynomial over a field, coefficients in ascending degree.
///
/// Invariant: no trailing zero coefficients, so the zero polynomial is the empty vector.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Poly<F> {
    coeffs: Vec<F>,
}

impl<F: Field> Poly<F> {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(F::one())
    }

    pub fn constant(c: F) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The variable itself.
    pub fn x() -> Self {
        Self::monomial(F::one(), 1)
    }

    pub fn monomial(c: F, k: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![F::zero(); k + 1];
        coeffs[k] = c;
        Poly { coeffs }
    }

    pub fn from_coeffs(mut coeffs: Vec<F>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> F {
        self.coeffs.get(k).cloned().unwrap_or_else(F::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> Option<&F> {
        self.coeffs.last()
    }

    /// Lowest power with a nonzero coefficient (the valuation at 0).
    pub fn low_degree(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// `Some((c, k))` if the polynomial is the single term `c x^k`.
    pub fn as_monomial(&self) -> Option<(&F, usize)> {
        let low = self.low_degree()?;
        let deg = self.degree()?;
        (low == deg).then(|| (&self.coeffs[deg], deg))
    }

    pub fn add_ref(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n)
            .map(|k| match (self.coeffs.get(k), rhs.coeffs.get(k)) {
                (Some(a), Some(b)) => a.add_ref(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => F::zero(),
            })
            .collect();
        Self::from_coeffs(coeffs)
    }

    pub fn neg_ref(&self) -> Self {
        Poly { coeffs: self.coeffs.iter().map(|c| c.neg_ref()).collect() }
    }

    pub fn sub_ref(&self, rhs: &Self) -> Self {
        self.add_ref(&rhs.neg_ref())
    }

    /// Both operands with coefficients in `Q`, when the coefficient field is a proper
    /// extension of `Q` and every coefficient happens to be rational.
    fn both_rational(&self, rhs: &Self) -> Option<(Poly<Rational>, Poly<Rational>)> {
        if F::TOWER_DEPTH == 0 {
            return None;
        }
        Some((self.to_rational_poly()?, rhs.to_rational_poly()?))
    }

    fn to_rational_poly(&self) -> Option<Poly<Rational>> {
        let coeffs = self.coeffs.iter().map(|c| c.as_rational()).collect::<Option<Vec<_>>>()?;
        Some(Poly { coeffs })
    }

    fn from_rational_poly(p: &Poly<Rational>) -> Self {
        Poly { coeffs: p.coeffs.iter().map(F::from_rational).collect() }
    }

    pub fn mul_ref(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        if self.is_one() {
            return rhs.clone();
        }
        if rhs.is_one() {
            return self.clone();
        }
        if let Some((a, b)) = self.both_rational(rhs) {
            return Self::from_rational_poly(&a.mul_ref(&b));
        }
        let mut coeffs = vec![F::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] = coeffs[i + j].add_ref(&a.mul_ref(b));
            }
        }
        Self::from_coeffs(coeffs)
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self::from_coeffs(self.coeffs.iter().map(|a| a.mul_ref(c)).collect())
    }

    /// Multiply by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() || k == 0 {
            return self.clone();
        }
        let mut coeffs = vec![F::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    /// Euclidean division: `self = q * divisor + r` with `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        if let Some((a, b)) = self.both_rational(divisor) {
            let (q, r) = a.div_rem(&b)?;
            return Ok((Self::from_rational_poly(&q), Self::from_rational_poly(&r)));
        }
        let dlead = divisor.lead().ok_or(Error::DivisionByZero)?;
        let dinv = dlead.try_inv()?;
        let ddeg = divisor.coeffs.len() - 1;
        if self.coeffs.len() <= ddeg {
            return Ok((Self::zero(), self.clone()));
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![F::zero(); rem.len() - ddeg];
        for k in (0..quot.len()).rev() {
            let c = rem[k + ddeg].mul_ref(&dinv);
            if c.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                if !d.is_zero() {
                    rem[k + j] = rem[k + j].sub_ref(&c.mul_ref(d));
                }
            }
            quot[k] = c;
        }
        rem.truncate(ddeg);
        Ok((Self::from_coeffs(quot), Self::from_coeffs(rem)))
    }

    /// Exact division; errors if the remainder is nonzero.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self> {
        let (q, r) = self.div_rem(divisor)?;
        if !r.is_zero() {
            return Err(Error::InvalidSeries("inexact polynomial division".into()));
        }
        Ok(q)
    }

    /// Scale so the leading coefficient is one (zero stays zero).
    pub fn monic(&self) -> Self {
        match self.lead() {
            None => Self::zero(),
            Some(l) if l.is_one() => self.clone(),
            Some(l) => {
                let inv = l.try_inv().expect("nonzero leading coefficient");
                self.scale(&inv)
            }
        }
    }

    /// Monic greatest common divisor (zero only if both inputs are zero).
    pub fn gcd(&self, rhs: &Self) -> Self {
        if self.is_zero() {
            return rhs.monic();
        }
        if rhs.is_zero() {
            return self.monic();
        }
        if self.is_constant() || rhs.is_constant() {
            return Self::one();
        }
        // gcd(c x^k, p) = x^min(k, val(p))
        if let Some((_, k)) = self.as_monomial() {
            return Self::monomial(F::one(), k.min(rhs.low_degree().unwrap_or(0)));
        }
        if let Some((_, k)) = rhs.as_monomial() {
            return Self::monomial(F::one(), k.min(self.low_degree().unwrap_or(0)));
        }
        if let (Some(a), Some(b)) = (self.to_rational_poly(), rhs.to_rational_poly()) {
            if let Some(g) = super::zpoly::gcd_rational(&a, &b) {
                return Self::from_rational_poly(&g);
            }
            if F::TOWER_DEPTH > 0 {
                return Self::from_rational_poly(&a.gcd(&b));
            }
        }
        if let (Some(a), Some(b)) = (
            (self as &dyn Any).downcast_ref::<Poly<HbarField>>(),
            (rhs as &dyn Any).downcast_ref::<Poly<HbarField>>(),
        ) {
            let g: Box<dyn Any> = Box::new(super::bivariate::gcd(a, b));
            return *g.downcast::<Self>().expect("same type");
        }
        let (mut a, mut b) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self.monic(), rhs.monic())
        } else {
            (rhs.monic(), self.monic())
        };
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("nonzero divisor");
            a = b;
            b = r.monic();
        }
        a
    }

    pub fn eval(&self, x: &F) -> F {
        let mut acc = F::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul_ref(x).add_ref(c);
        }
        acc
    }

    /// Evaluate after mapping coefficients into another field.
    pub fn eval_with<T: Field>(&self, x: T, mut map: impl FnMut(&F) -> Result<T>) -> Result<T> {
        let mut acc = T::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul_ref(&x).add_ref(&map(c)?);
        }
        Ok(acc)
    }

    /// Divide by `(x - 1)`, returning the quotient when `self(1) = 0`.
    fn deflate_at_one(&self) -> Option<Self> {
        if self.is_zero() || !self.eval(&F::one()).is_zero() {
            return None;
        }
        // synthetic division by (x - 1)
        let n = self.coeffs.len();
        let mut quot = vec![F::zero(); n - 1];
        let mut carry = F::zero();
        for k in (1..n).rev() {
            carry = carry.add_ref(&self.coeffs[k]);
            quot[k - 1] = carry.clone();
        }
        Some(Self::from_coeffs(quot))
    }

    /// Multiplicity of the root `x = 1` and the cofactor with that root removed.
    pub fn split_at_one(&self) -> Result<(usize, Self)> {
        if self.is_zero() {
            return Err(Error::ZeroValuation);
        }
        let mut p = self.clone();
        let mut k = 0;
        while let Some(next) = p.deflate_at_one() {
            p = next;
            k += 1;
        }
        Ok((k, p))
    }

    pub fn map_coeffs<T: Field>(&self, f: impl FnMut(&F) -> T) -> Poly<T> {
        Poly::from_coeffs(self.coeffs.iter().map(f).collect())
    }

    pub fn try_map_coeffs<T: Field>(&self, mut f: impl FnMut(&F) -> Result<T>) -> Result<Poly<T>> {
        let coeffs = self.coeffs.iter().map(&mut f).collect::<Result<Vec<_>>>()?;
        Ok(Poly::from_coeffs(coeffs))
    }

    /// Render with the given variable name, highest degree first.
    pub fn render(&self, var: &str, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let text = c.to_string();
            let compound = F::TOWER_DEPTH > 0 && !is_atomic(&text);
            let (neg, body) = match text.strip_prefix('-') {
                Some(rest) if !compound => (true, rest.to_string()),
                _ => (false, text.clone()),
            };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            let body = if compound { format!("({body})") } else { body };
            match k {
                0 => write!(f, "{body}")?,
                _ => {
                    if body != "1" {
                        write!(f, "{body}*")?;
                    }
                    write!(f, "{var}")?;
                    if k > 1 {
                        write!(f, "^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

fn is_atomic(text: &str) -> bool {
    let body = text.strip_prefix('-').unwrap_or(text);
    !body.contains([' ', '/', '*', '^']) || body.chars().all(|c| c.is_ascii_digit())
}

impl<F: Field> fmt::Debug for Poly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.coeffs.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::Rational;

    fn p(c: &[i64]) -> Poly<Rational> {
        Poly::from_coeffs(c.iter().map(|&n| Rational::from(n)).collect())
    }

    #[test]
    fn trailing_zeros_are_trimmed() {
        assert_eq!(p(&[1, 2, 0, 0]).degree(), Some(1));
        assert!(p(&[0, 0]).is_zero());
    }

    #[test]
    fn division_and_gcd() {
        // (x^2 - 1) = (x - 1)(x + 1)
        let (q, r) = p(&[-1, 0, 1]).div_rem(&p(&[-1, 1])).unwrap();
        assert_eq!(q, p(&[1, 1]));
        assert!(r.is_zero());
        assert_eq!(p(&[-1, 0, 1]).gcd(&p(&[1, 2, 1])), p(&[1, 1]));
        assert_eq!(p(&[0, 0, 3]).gcd(&p(&[0, 5, 1])), p(&[0, 1]));
        assert_eq!(p(&[2]).gcd(&p(&[0, 1])), p(&[1]));
        assert!(p(&[1]).div_rem(&Poly::zero()).is_err());
    }

    #[test]
    fn root_at_one() {
        // (x-1)^2 (x+2)
        let f = p(&[-1, 1]).mul_ref(&p(&[-1, 1])).mul_ref(&p(&[2, 1]));
        let (k, rest) = f.split_at_one().unwrap();
        assert_eq!(k, 2);
        assert_eq!(rest, p(&[2, 1]));
        assert_eq!(Poly::<Rational>::zero().split_at_one(), Err(Error::ZeroValuation));
    }
}
