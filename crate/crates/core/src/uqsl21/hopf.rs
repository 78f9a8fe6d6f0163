use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use super::element::AlgebraElement;
use super::monomial::{CartanMonomial, Letter, PBWMonomial};
use crate::scalars::{Field, Scalar};

/// Element of the graded tensor square, as a map on pairs of PBW monomials.
#[derive(Clone, PartialEq, Debug, Default)]
pub struct TensorElement {
    terms: BTreeMap<(PBWMonomial, PBWMonomial), Scalar>,
}

impl TensorElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::pure(&AlgebraElement::one(), &AlgebraElement::one())
    }

    /// `a (x) b`.
    pub fn pure(a: &AlgebraElement, b: &AlgebraElement) -> Self {
        let mut out = Self::zero();
        for (ma, ca) in a.terms() {
            for (mb, cb) in b.terms() {
                out.add_term((*ma, *mb), ca.mul_ref(cb));
            }
        }
        out
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(PBWMonomial, PBWMonomial), &Scalar)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, k: (PBWMonomial, PBWMonomial), c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&k) {
            Some(v) => {
                let nv = v.add_ref(&c);
                if nv.is_zero() {
                    self.terms.remove(&k);
                } else {
                    *v = nv;
                }
            }
            None => {
                self.terms.insert(k, c);
            }
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (k, v) in &rhs.terms {
            out.add_term(*k, v.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.scale(&Scalar::one().neg_ref()))
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        let mut out = Self::zero();
        for (k, v) in &self.terms {
            out.add_term(*k, v.mul_ref(c));
        }
        out
    }

    /// `(a (x) b)(c (x) d) = (-1)^(|b||c|) ac (x) bd`.
    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = Self::zero();
        for ((a, b), x) in &self.terms {
            for ((c, d), y) in &rhs.terms {
                let mut coeff = x.mul_ref(y);
                if b.parity().is_odd() && c.parity().is_odd() {
                    coeff = coeff.neg_ref();
                }
                let left = AlgebraElement::monomial(*a, Scalar::one()).mul(&AlgebraElement::monomial(*c, Scalar::one()));
                let right = AlgebraElement::monomial(*b, Scalar::one()).mul(&AlgebraElement::monomial(*d, Scalar::one()));
                for (ml, cl) in left.terms() {
                    for (mr, cr) in right.terms() {
                        out.add_term((*ml, *mr), coeff.mul_ref(&cl.mul_ref(cr)));
                    }
                }
            }
        }
        out
    }

    /// Apply a linear map to each factor and multiply the results in the algebra,
    /// `a (x) b -> f(a) g(b)` with no sign.
    pub fn contract(&self, f: impl Fn(&PBWMonomial) -> AlgebraElement, g: impl Fn(&PBWMonomial) -> AlgebraElement) -> AlgebraElement {
        let mut out = AlgebraElement::zero();
        for ((a, b), c) in &self.terms {
            out = out.add(&f(a).mul(&g(b)).scale(c));
        }
        out
    }
}

impl fmt::Display for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> =
            self.terms.iter().map(|((a, b), c)| format!("({c}) {a} (x) {b}")).collect();
        f.write_str(&parts.join(" + "))
    }
}

fn cartan_pair(k: CartanMonomial) -> TensorElement {
    let x = AlgebraElement::letter(Letter::K(k));
    TensorElement::pure(&x, &x)
}

/// `x (x) K^(1/2) + K^(-1/2) (x) x` for a simple generator of index `i`.
fn simple_coproduct(x: Letter, half: CartanMonomial) -> TensorElement {
    let gen = AlgebraElement::letter(x);
    TensorElement::pure(&gen, &AlgebraElement::letter(Letter::K(half)))
        .add(&TensorElement::pure(&AlgebraElement::letter(Letter::K(half.inverse())), &gen))
}

fn letter_coproduct(l: Letter) -> TensorElement {
    let h1 = CartanMonomial::new(1, 0);
    let h2 = CartanMonomial::new(0, 1);
    match l {
        Letter::E1 => simple_coproduct(Letter::E1, h1),
        Letter::E2 => simple_coproduct(Letter::E2, h2),
        Letter::F1 => simple_coproduct(Letter::F1, h1),
        Letter::F2 => simple_coproduct(Letter::F2, h2),
        Letter::E3 => {
            let (d1, d2) = (letter_coproduct(Letter::E1), letter_coproduct(Letter::E2));
            d1.mul(&d2).sub(&d2.mul(&d1).scale(&Scalar::q_pow(-1)))
        }
        Letter::F3 => {
            let (d1, d2) = (letter_coproduct(Letter::F1), letter_coproduct(Letter::F2));
            d2.mul(&d1).sub(&d1.mul(&d2).scale(&Scalar::q()))
        }
        Letter::K(k) => cartan_pair(k),
    }
}

/// Algebra morphism `U -> U (x) U` extending the coproduct on generators.
pub fn coproduct(x: &AlgebraElement) -> TensorElement {
    let mut out = TensorElement::zero();
    for (m, c) in x.terms() {
        let image = m.letters().into_iter().fold(TensorElement::one(), |acc, l| acc.mul(&letter_coproduct(l)));
        out = out.add(&image.scale(c));
    }
    out
}

fn letter_antipode(l: Letter) -> AlgebraElement {
    let minus_one = Scalar::one().neg_ref();
    match l {
        Letter::K(k) => AlgebraElement::letter(Letter::K(k.inverse())),
        Letter::E1 | Letter::E2 | Letter::F1 | Letter::F2 => {
            // -K^(1/2) x K^(-1/2) = -s^(c.w) x
            let half = if matches!(l, Letter::E1 | Letter::F1) { CartanMonomial::new(1, 0) } else { CartanMonomial::new(0, 1) };
            AlgebraElement::letter(l).scale(&Scalar::s_pow(half.pairing(l.weight())).mul_ref(&minus_one))
        }
        Letter::E3 => {
            let (s1, s2) = (letter_antipode(Letter::E1), letter_antipode(Letter::E2));
            // S(e1 e2) = S(e2) S(e1), S(e2 e1) = S(e1) S(e2)
            s2.mul(&s1).sub(&s1.mul(&s2).scale(&Scalar::q_pow(-1)))
        }
        Letter::F3 => {
            let (s1, s2) = (letter_antipode(Letter::F1), letter_antipode(Letter::F2));
            s1.mul(&s2).sub(&s2.mul(&s1).scale(&Scalar::q()))
        }
    }
}

/// Graded anti-morphism: `S(ab) = (-1)^(|a||b|) S(b) S(a)`.
pub fn antipode(x: &AlgebraElement) -> AlgebraElement {
    x.map_monomials(|m| {
        let letters = m.letters();
        let odd = letters.iter().filter(|l| l.parity().is_odd()).count();
        // reversing a word of `odd` odd letters picks up one sign per odd pair
        let sign_negative = (odd * odd.saturating_sub(1) / 2) % 2 == 1;
        let image = letters.iter().rev().fold(AlgebraElement::one(), |acc, l| acc.mul(&letter_antipode(*l)));
        if sign_negative {
            image.neg()
        } else {
            image
        }
    })
}

/// Algebra morphism to scalars: 1 on Cartan monomials, 0 on generators.
pub fn counit(x: &AlgebraElement) -> Scalar {
    x.terms()
        .filter(|(m, _)| m.is_cartan())
        .fold(Scalar::zero(), |acc, (_, c)| acc.add_ref(c))
}

/// `m (S (x) id) Delta(x)`.
pub fn antipode_contraction(x: &AlgebraElement) -> AlgebraElement {
    coproduct(x).contract(
        |a| antipode(&AlgebraElement::monomial(*a, Scalar::one())),
        |b| AlgebraElement::monomial(*b, Scalar::one()),
    )
}
