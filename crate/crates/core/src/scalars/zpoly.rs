//! Integer-polynomial helpers behind the gcd of rational polynomials.
//!
//! Euclid over `Q` suffers badly from coefficient growth on the degree-70 numerators
//! and denominators produced by the q-exponentials, so the gcd is first attempted with
//! the heuristic evaluate/interpolate method (a gcd of big integers at a large point,
//! verified by exact division). Callers fall back to Euclid when it gives up.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{Field, Poly, Rational};

pub(crate) type ZPoly = Vec<BigInt>;

/// Primitive integer polynomial proportional to `p`, positive leading coefficient.
fn primitive(p: &Poly<Rational>) -> ZPoly {
    let lcm = p.coeffs().iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: ZPoly = p.coeffs().iter().map(|c| c.numer() * (&lcm / c.denom())).collect();
    normalize(ints)
}

fn normalize(mut ints: ZPoly) -> ZPoly {
    while ints.last().map_or(false, |c| c.is_zero()) {
        ints.pop();
    }
    let content = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if content.is_zero() {
        return ints;
    }
    let negate = ints.last().map_or(false, |c| c.is_negative());
    let content = if negate { -content } else { content };
    ints.iter().map(|c| c / &content).collect()
}

pub(crate) fn max_norm(p: &ZPoly) -> BigInt {
    p.iter().map(|c| c.abs()).max().unwrap_or_default()
}

pub(crate) fn eval(p: &ZPoly, x: &BigInt) -> BigInt {
    p.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
}

/// Exact quotient over `Z`, if it exists.
fn exact_div(a: &ZPoly, b: &ZPoly) -> Option<ZPoly> {
    let db = b.len().checked_sub(1)?;
    if a.len() < b.len() {
        return if a.iter().all(|c| c.is_zero()) { Some(Vec::new()) } else { None };
    }
    let lead = &b[db];
    let mut rem = a.clone();
    let mut quot = vec![BigInt::zero(); a.len() - db];
    for k in (0..quot.len()).rev() {
        let top = &rem[k + db];
        if top.is_zero() {
            continue;
        }
        let (c, r) = top.div_rem(lead);
        if !r.is_zero() {
            return None;
        }
        for (j, d) in b.iter().enumerate() {
            if !d.is_zero() {
                rem[k + j] -= &c * d;
            }
        }
        quot[k] = c;
    }
    rem.iter().all(|c| c.is_zero()).then_some(quot)
}

/// Symmetric base-`xi` digits of `g`.
pub(crate) fn interpolate(mut g: BigInt, xi: &BigInt) -> ZPoly {
    let half = xi / 2;
    let mut out = Vec::new();
    while !g.is_zero() {
        let mut c = g.mod_floor(xi);
        if c > half {
            c -= xi;
        }
        g = (g - &c) / xi;
        out.push(c);
    }
    out
}

fn heuristic_gcd(a: &ZPoly, b: &ZPoly) -> Option<ZPoly> {
    let norm = max_norm(a).min(max_norm(b));
    let mut xi: BigInt = norm * 2 + 29;
    let deg = a.len().max(b.len()) as u64;
    for _ in 0..6 {
        if xi.bits() * deg > 400_000 {
            return None;
        }
        let gamma = eval(a, &xi).gcd(&eval(b, &xi));
        if gamma.sign() != Sign::NoSign {
            let g = normalize(interpolate(gamma, &xi));
            if !g.is_empty() && exact_div(a, &g).is_some() && exact_div(b, &g).is_some() {
                return Some(g);
            }
        }
        xi = xi * 73794 / 27011;
    }
    None
}

/// Gcd over `Z` including the integer content, positive leading coefficient.
pub(crate) fn integer_gcd(a: &ZPoly, b: &ZPoly) -> Option<ZPoly> {
    let content = |p: &ZPoly| p.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    let c = content(a).gcd(&content(b));
    let g = heuristic_gcd(&normalize(a.clone()), &normalize(b.clone()))?;
    Some(g.into_iter().map(|x| x * &c).collect())
}

/// Monic gcd of two nonzero rational polynomials, or `None` if the heuristic fails.
pub(crate) fn gcd_rational(a: &Poly<Rational>, b: &Poly<Rational>) -> Option<Poly<Rational>> {
    let g = heuristic_gcd(&primitive(a), &primitive(b))?;
    let lead = Rational::from_integer(g.last()?.clone());
    let coeffs = g
        .into_iter()
        .map(|c| Rational::from_integer(c).try_div(&lead).expect("nonzero leading coefficient"))
        .collect();
    Some(Poly::from_coeffs(coeffs))
}
