//! Gcd in `Q(h)[s]` by the primitive pseudo-remainder sequence over `Q[h]`.
//!
//! Plain Euclid over the field `Q(h)` spends almost all of its time normalizing
//! rational-function coefficients that grow at every step; keeping everything
//! polynomial in `h` and dividing out contents avoids that.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::zpoly::{self, ZPoly};
use super::{HbarField, Poly, RatFunc, Rational};

type QhPoly = Vec<Poly<Rational>>;

fn trim(mut p: QhPoly) -> QhPoly {
    while p.last().map_or(false, |c| c.is_zero()) {
        p.pop();
    }
    p
}

/// Clear denominators: a `Q[h]`-coefficient polynomial proportional to `p`.
fn clear_denominators(p: &Poly<HbarField>) -> QhPoly {
    let lcm = p.coeffs().iter().fold(Poly::one(), |acc, c| {
        let g = acc.gcd(c.denom());
        acc.mul_ref(&c.denom().div_exact(&g).expect("gcd divides"))
    });
    let out = p
        .coeffs()
        .iter()
        .map(|c| c.numer().mul_ref(&lcm.div_exact(c.denom()).expect("denominator divides lcm")))
        .collect();
    trim(out)
}

fn content(p: &QhPoly) -> Poly<Rational> {
    p.iter().fold(Poly::zero(), |acc, c| if acc.is_one() { acc } else { acc.gcd(c) })
}

fn primitive(p: QhPoly) -> QhPoly {
    let c = content(&p);
    if c.is_zero() || c.is_constant() {
        return p;
    }
    p.iter().map(|x| x.div_exact(&c).expect("content divides")).collect()
}

/// `lc(b)^k a mod b` with `deg` dropping below `deg b`.
fn pseudo_remainder(a: &QhPoly, b: &QhPoly) -> QhPoly {
    let db = b.len() - 1;
    let lb = &b[db];
    let mut r = a.clone();
    while r.len() > db {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        let shift = dr - db;
        let mut next: QhPoly = r.iter().map(|c| c.mul_ref(lb)).collect();
        for (j, c) in b.iter().enumerate() {
            next[j + shift] = next[j + shift].sub_ref(&c.mul_ref(&lr));
        }
        r = trim(next);
        // the leading term cancels exactly; keep sizes down between steps
        r = primitive(r);
    }
    r
}

/// Upper bound for the degree of the gcd from a specialization `h = h0` at which
/// neither leading coefficient vanishes: the gcd specializes to a divisor of the
/// specialized gcd without losing degree.
fn degree_bound(a: &QhPoly, b: &QhPoly) -> Option<usize> {
    let (la, lb) = (a.last()?, b.last()?);
    let h0 = (2..40i64).map(Rational::from).find(|h0| !la.eval(h0).is_zero() && !lb.eval(h0).is_zero())?;
    let at = |p: &QhPoly| Poly::from_coeffs(p.iter().map(|c| c.eval(&h0)).collect());
    at(a).gcd(&at(b)).degree()
}

/// Integer coefficients `[s-degree][h-degree]` proportional to `p`.
fn to_integer(p: &QhPoly) -> Vec<ZPoly> {
    let lcm = p
        .iter()
        .flat_map(|c| c.coeffs().iter())
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    p.iter().map(|c| c.coeffs().iter().map(|x| x.numer() * (&lcm / x.denom())).collect()).collect()
}

/// Candidate gcd from one large integer value of `h`: the integer gcd of the
/// specializations, with every coefficient read back as balanced base-`xi` digits.
/// Only a candidate; the caller verifies it.
fn heuristic_gcd(a: &QhPoly, b: &QhPoly) -> Option<QhPoly> {
    let (ia, ib) = (to_integer(a), to_integer(b));
    let norm = |p: &[ZPoly]| p.iter().map(zpoly::max_norm).max().unwrap_or_default();
    let mut xi: BigInt = norm(&ia).min(norm(&ib)) * 2 + 29;
    for _ in 0..3 {
        let at = |p: &[ZPoly]| p.iter().map(|c| zpoly::eval(c, &xi)).collect::<ZPoly>();
        if let Some(gamma) = zpoly::integer_gcd(&at(&ia), &at(&ib)) {
            let g: QhPoly = gamma
                .into_iter()
                .map(|c| Poly::from_coeffs(zpoly::interpolate(c, &xi).into_iter().map(Rational::from_integer).collect()))
                .collect();
            let g = primitive(trim(g));
            if !g.is_empty() {
                return Some(g);
            }
        }
        xi = xi * 73794 / 27011;
    }
    None
}

/// Monic gcd over `Q(h)` of two polynomials of positive degree.
pub(crate) fn gcd(a: &Poly<HbarField>, b: &Poly<HbarField>) -> Poly<HbarField> {
    let (big, small) = if a.coeffs().len() >= b.coeffs().len() { (a, b) } else { (b, a) };
    let (mut a, mut b) = (primitive(clear_denominators(big)), primitive(clear_denominators(small)));
    match degree_bound(&a, &b) {
        Some(0) => return Poly::one(),
        Some(d) if d + 1 == b.len() => {
            // the bound allows `small | big`; a single division over Q(h) settles it
            if big.div_rem(small).map_or(false, |(_, r)| r.is_zero()) {
                return small.monic();
            }
        }
        _ => {}
    }
    if let Some(g) = heuristic_gcd(&a, &b) {
        let g = monic(g);
        let divides = |p: &Poly<HbarField>| p.div_rem(&g).map_or(false, |(_, r)| r.is_zero());
        if divides(big) && divides(small) {
            return g;
        }
    }
    while !b.is_empty() {
        let r = primitive(pseudo_remainder(&a, &b));
        a = b;
        b = r;
    }
    monic(a)
}

fn monic(a: QhPoly) -> Poly<HbarField> {
    let lead = a.last().expect("nonzero gcd").clone();
    let coeffs = a
        .into_iter()
        .map(|c| RatFunc::from_parts(c, lead.clone()).expect("nonzero leading coefficient"))
        .collect();
    Poly::from_coeffs(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::Field;

    fn h() -> HbarField {
        HbarField::hbar()
    }

    fn c(n: i64) -> HbarField {
        HbarField::from_i64(n)
    }

    #[test]
    fn common_factor_is_found() {
        // (s + h)(s - 1/h) and (s + h)(2 s + h^2)
        let x = Poly::from_coeffs(vec![h(), c(1)]);
        let y = Poly::from_coeffs(vec![c(-1).try_div(&h()).unwrap(), c(1)]);
        let z = Poly::from_coeffs(vec![h().mul_ref(&h()), c(2)]);
        let g = gcd(&x.mul_ref(&y), &x.mul_ref(&z));
        assert_eq!(g, x);
    }

    #[test]
    fn coprime_inputs() {
        let x = Poly::from_coeffs(vec![h(), c(1)]);
        let y = Poly::from_coeffs(vec![c(1), c(0), h()]);
        assert!(gcd(&x, &y).is_one());
    }
}
