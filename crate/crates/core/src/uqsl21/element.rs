use std::collections::{BTreeMap, HashMap};
use std::cell::RefCell;
use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::monomial::{CartanMonomial, Letter, PBWMonomial};
use crate::scalars::{Field, Scalar};
use crate::superlinalg::Parity;
use crate::{Error, Result};

/// A finite linear combination of PBW monomials with no zero coefficients.
#[derive(Clone, PartialEq, Debug, Default)]
pub struct AlgebraElement {
    terms: BTreeMap<PBWMonomial, Scalar>,
}

impl AlgebraElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(PBWMonomial::ONE, Scalar::one())
    }

    pub fn scalar(c: Scalar) -> Self {
        Self::monomial(PBWMonomial::ONE, c)
    }

    pub fn monomial(m: PBWMonomial, c: Scalar) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        AlgebraElement { terms }
    }

    pub fn letter(l: Letter) -> Self {
        match l {
            Letter::K(k) if k.is_one() => Self::one(),
            l => Self::monomial(PBWMonomial::letter(l), Scalar::one()),
        }
    }

    pub fn e1() -> Self {
        Self::letter(Letter::E1)
    }
    pub fn e2() -> Self {
        Self::letter(Letter::E2)
    }
    pub fn e3() -> Self {
        Self::letter(Letter::E3)
    }
    pub fn f1() -> Self {
        Self::letter(Letter::F1)
    }
    pub fn f2() -> Self {
        Self::letter(Letter::F2)
    }
    pub fn f3() -> Self {
        Self::letter(Letter::F3)
    }

    /// `q^((c1 h1 + c2 h2)/2)`.
    pub fn cartan(c1: i64, c2: i64) -> Self {
        Self::letter(Letter::K(CartanMonomial::new(c1, c2)))
    }

    /// `(K - K^(-1))/(q - q^(-1))` for `K = K(c1, c2)`.
    pub fn cartan_bracket(c1: i64, c2: i64) -> Self {
        let d = q_minus_q_inv_inv();
        Self::cartan(c1, c2).sub(&Self::cartan(-c1, -c2)).scale(&d)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PBWMonomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &PBWMonomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(Scalar::zero)
    }

    fn add_term(&mut self, m: PBWMonomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(v) => {
                let nv = v.add_ref(&c);
                if nv.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *v = nv;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    fn add_scaled(&mut self, other: &AlgebraElement, c: &Scalar) {
        for (m, v) in &other.terms {
            self.add_term(*m, v.mul_ref(c));
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (m, v) in &rhs.terms {
            out.add_term(*m, v.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (m, v) in &rhs.terms {
            out.add_term(*m, v.neg_ref());
        }
        out
    }

    pub fn neg(&self) -> Self {
        self.map_coeffs(|c| c.neg_ref())
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        self.map_coeffs(|v| v.mul_ref(c))
    }

    pub fn map_coeffs(&self, mut f: impl FnMut(&Scalar) -> Scalar) -> Self {
        let mut out = Self::zero();
        for (m, v) in &self.terms {
            out.add_term(*m, f(v));
        }
        out
    }

    /// PBW normal form of `self * rhs`.
    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = Self::zero();
        for (mx, cx) in &self.terms {
            for (my, cy) in &rhs.terms {
                out.add_scaled(&mul_monomials(mx, my), &cx.mul_ref(cy));
            }
        }
        out
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::one(), |acc, _| acc.mul(self))
    }

    /// Product of a word of letters, straightened.
    pub fn word(letters: &[Letter]) -> Self {
        letters.iter().fold(Self::one(), |acc, l| acc.mul(&Self::letter(*l)))
    }

    /// Parity if every term has the same parity (`Even` for zero).
    pub fn parity(&self) -> Option<Parity> {
        let mut it = self.terms.keys().map(|m| m.parity());
        let first = it.next().unwrap_or(Parity::Even);
        it.all(|p| p == first).then_some(first)
    }

    /// Common weight of all terms, if homogeneous.
    pub fn weight(&self) -> Option<(i64, i64)> {
        let mut it = self.terms.keys().map(|m| m.weight());
        let first = it.next().unwrap_or((0, 0));
        it.all(|w| w == first).then_some(first)
    }

    /// `ab - (-1)^(|a||b|) ba`.
    pub fn supercommutator(&self, rhs: &Self) -> Result<Self> {
        let pa = self.parity().ok_or(Error::Inhomogeneous)?;
        let pb = rhs.parity().ok_or(Error::Inhomogeneous)?;
        let ab = self.mul(rhs);
        let ba = rhs.mul(self);
        Ok(if pa.is_odd() && pb.is_odd() { ab.add(&ba) } else { ab.sub(&ba) })
    }

    /// `Ad_K`: conjugation `x -> K x K^(-1)` where `K` has half-integer exponents
    /// given as twice their values. Every term must pick up an integer power of `s`.
    pub fn conjugate_by_half_cartan(&self, twice_c: (i64, i64)) -> Result<Self> {
        let mut out = Self::zero();
        for (m, v) in &self.terms {
            let w = m.weight();
            let twice = twice_c.0 * w.0 + twice_c.1 * w.1;
            if twice % 2 != 0 {
                return Err(Error::NonIntegralExponent(format!(
                    "conjugating {m} by K({}/2,{}/2) needs s^({twice}/2)",
                    twice_c.0, twice_c.1
                )));
            }
            out.add_term(*m, v.mul_ref(&Scalar::s_pow(twice / 2)));
        }
        Ok(out)
    }

    /// Extend a map on monomials linearly.
    pub fn map_monomials(&self, mut g: impl FnMut(&PBWMonomial) -> Self) -> Self {
        let mut out = Self::zero();
        for (m, v) in &self.terms {
            out.add_scaled(&g(m), v);
        }
        out
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(m, c)| {
                if m.is_one() {
                    format!("({c})")
                } else if c.is_one() {
                    m.to_string()
                } else {
                    format!("({c}) {m}")
                }
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

#[derive(Serialize, Deserialize)]
struct Term {
    monomial: PBWMonomial,
    coeff: Scalar,
}

impl Serialize for AlgebraElement {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let terms: Vec<Term> =
            self.terms.iter().map(|(m, c)| Term { monomial: *m, coeff: c.clone() }).collect();
        terms.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for AlgebraElement {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let terms = Vec::<Term>::deserialize(deserializer)?;
        let mut out = AlgebraElement::zero();
        for t in terms {
            out.add_term(t.monomial, t.coeff);
        }
        Ok(out)
    }
}

fn q_minus_q_inv_inv() -> Scalar {
    Scalar::q().sub_ref(&Scalar::q_pow(-1)).try_inv().expect("q - 1/q is nonzero")
}

type Rule = Vec<(Scalar, Vec<Letter>)>;

/// Right side of `y l` for letters `y > l`, as a combination of letter words.
fn rule(y: Letter, l: Letter) -> Rule {
    use Letter::*;
    let one = Scalar::one;
    let q = Scalar::q;
    let q_inv = || Scalar::q_pow(-1);
    let k = |a, b| K(CartanMonomial::new(a, b));
    let bracket = |a: i64, b: i64| {
        let d = q_minus_q_inv_inv();
        vec![(d.clone(), vec![k(a, b)]), (d.neg_ref(), vec![k(-a, -b)])]
    };
    let with = |mut head: Rule, tail: Rule| {
        head.extend(tail);
        head
    };
    match (y, l) {
        (F3, F1) => vec![(q_inv(), vec![F1, F3])],
        (F2, F1) => vec![(q(), vec![F1, F2]), (one(), vec![F3])],
        (F2, F3) => vec![(q().neg_ref(), vec![F3, F2])],
        (K(c), f) if !f.is_cartan() && f < y => vec![(Scalar::s_pow(c.pairing(f.weight())), vec![f, K(c)])],
        (e, K(d)) if !e.is_cartan() => vec![(Scalar::s_pow(-d.pairing(e.weight())), vec![K(d), e])],
        (E3, E2) => vec![(q_inv().neg_ref(), vec![E2, E3])],
        (E1, E2) => vec![(q_inv(), vec![E2, E1]), (one(), vec![E3])],
        (E1, E3) => vec![(q(), vec![E3, E1])],
        (E1, F1) => with(vec![(one(), vec![F1, E1])], bracket(2, 0)),
        (E1, F2) => vec![(one(), vec![F2, E1])],
        (E1, F3) => vec![(one(), vec![F3, E1]), (q().neg_ref(), vec![F2, k(2, 0)])],
        (E2, F1) => vec![(one(), vec![F1, E2])],
        (E2, F2) => with(vec![(one().neg_ref(), vec![F2, E2])], bracket(0, 2)),
        (E2, F3) => vec![(one().neg_ref(), vec![F3, E2]), (one(), vec![F1, k(0, -2)])],
        (E3, F1) => vec![(one(), vec![F1, E3]), (one().neg_ref(), vec![E2, k(-2, 0)])],
        (E3, F2) => vec![(one().neg_ref(), vec![F2, E3]), (one(), vec![k(0, 2), E1])],
        (E3, F3) => with(vec![(one().neg_ref(), vec![F3, E3])], bracket(2, 2)),
        _ => unreachable!("no rule needed for {y} {l}"),
    }
}

thread_local! {
    static LETTER_MEMO: RefCell<HashMap<(PBWMonomial, Letter), AlgebraElement>> = RefCell::new(HashMap::new());
    static MONO_MEMO: RefCell<HashMap<(PBWMonomial, PBWMonomial), AlgebraElement>> = RefCell::new(HashMap::new());
}

fn mul_monomials(x: &PBWMonomial, y: &PBWMonomial) -> AlgebraElement {
    if y.is_one() {
        return AlgebraElement::monomial(*x, Scalar::one());
    }
    if x.is_one() {
        return AlgebraElement::monomial(*y, Scalar::one());
    }
    if let Some(hit) = MONO_MEMO.with(|m| m.borrow().get(&(*x, *y)).cloned()) {
        return hit;
    }
    let out = mul_word(x, &y.letters());
    MONO_MEMO.with(|m| m.borrow_mut().insert((*x, *y), out.clone()));
    out
}

fn mul_word(x: &PBWMonomial, word: &[Letter]) -> AlgebraElement {
    let mut acc = AlgebraElement::monomial(*x, Scalar::one());
    for l in word {
        let mut next = AlgebraElement::zero();
        for (m, c) in &acc.terms {
            next.add_scaled(&mul_letter(m, *l), c);
        }
        acc = next;
    }
    acc
}

/// `m * l` in normal form, for a normal monomial `m` and a single letter.
fn mul_letter(m: &PBWMonomial, l: Letter) -> AlgebraElement {
    if let Letter::K(k) = l {
        if k.is_one() {
            return AlgebraElement::monomial(*m, Scalar::one());
        }
    }
    if let Some(hit) = LETTER_MEMO.with(|memo| memo.borrow().get(&(*m, l)).cloned()) {
        return hit;
    }
    let out = match m.pop_last() {
        None => AlgebraElement::letter(l),
        Some((prefix, y)) => match (y, l) {
            (Letter::K(a), Letter::K(b)) => mul_letter(&prefix, Letter::K(a * b)),
            _ if y < l => AlgebraElement::monomial(m.pushed(l).expect("ordered append"), Scalar::one()),
            _ if y == l => match m.pushed(l) {
                Some(n) => AlgebraElement::monomial(n, Scalar::one()),
                None => AlgebraElement::zero(),
            },
            _ => {
                let mut acc = AlgebraElement::zero();
                for (c, word) in rule(y, l) {
                    acc.add_scaled(&mul_word(&prefix, &word), &c);
                }
                acc
            }
        },
    };
    LETTER_MEMO.with(|memo| memo.borrow_mut().insert((*m, l), out.clone()));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    type A = AlgebraElement;

    #[test]
    fn odd_generators_square_to_zero() {
        assert!(A::e2().mul(&A::e2()).is_zero());
        assert!(A::f2().mul(&A::f2()).is_zero());
        assert!(A::e3().mul(&A::e3()).is_zero());
        assert!(A::f3().mul(&A::f3()).is_zero());
    }

    #[test]
    fn e1_f1_straightens_to_cartan_bracket() {
        let expected = A::word(&[Letter::F1, Letter::E1]).add(&A::cartan_bracket(2, 0));
        assert_eq!(A::e1().mul(&A::f1()), expected);
    }

    #[test]
    fn e1_e2_uses_e3() {
        let got = A::e1().mul(&A::e2());
        let e2e1 = PBWMonomial { b2: 1, b1: 1, ..PBWMonomial::ONE };
        assert_eq!(got.coeff(&e2e1), Scalar::q_pow(-1));
        assert_eq!(got.coeff(&PBWMonomial::letter(Letter::E3)), Scalar::one());
        assert_eq!(got.len(), 2);
    }

    #[test]
    fn supercommutator_branches() {
        assert_eq!(A::e2().supercommutator(&A::f2()).unwrap(), A::cartan_bracket(0, 2));
        assert!(A::e1().supercommutator(&A::e1()).unwrap().is_zero());
        assert!(A::e2().supercommutator(&A::e2()).unwrap().is_zero());
        let mixed = A::e1().add(&A::e2());
        assert_eq!(mixed.supercommutator(&A::e1()), Err(Error::Inhomogeneous));
    }

    #[test]
    fn cartan_moves_past_generators() {
        // K(1,0) e1 = q e1 K(1,0)
        let got = A::cartan(1, 0).mul(&A::e1());
        let expected = A::e1().mul(&A::cartan(1, 0)).scale(&Scalar::q());
        assert_eq!(got, expected);
        assert_eq!(A::cartan(1, 2).mul(&A::cartan(-1, -2)), A::one());
    }
}
