use std::fmt;

use serde::{Deserialize, Serialize};

use crate::superlinalg::Parity;

/// `q^((c1 h1 + c2 h2)/2)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default, Serialize, Deserialize)]
pub struct CartanMonomial {
    pub c1: i64,
    pub c2: i64,
}

impl CartanMonomial {
    pub const ONE: CartanMonomial = CartanMonomial { c1: 0, c2: 0 };

    pub fn new(c1: i64, c2: i64) -> Self {
        CartanMonomial { c1, c2 }
    }

    pub fn is_one(self) -> bool {
        self == Self::ONE
    }

    pub fn inverse(self) -> Self {
        CartanMonomial::new(-self.c1, -self.c2)
    }

    /// Exponent of `s` picked up when this monomial is moved past an element of
    /// weight `w` from left to right: `K x = s^(c.w) x K`.
    pub fn pairing(self, w: (i64, i64)) -> i64 {
        self.c1 * w.0 + self.c2 * w.1
    }
}

impl std::ops::Mul for CartanMonomial {
    type Output = CartanMonomial;
    fn mul(self, rhs: Self) -> Self {
        CartanMonomial::new(self.c1 + rhs.c1, self.c2 + rhs.c2)
    }
}

impl fmt::Display for CartanMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "K({},{})", self.c1, self.c2)
    }
}

/// A single PBW letter. The derived order is the PBW order
/// `f1 < f3 < f2 < K < e2 < e3 < e1`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Letter {
    F1,
    F3,
    F2,
    K(CartanMonomial),
    E2,
    E3,
    E1,
}

impl Letter {
    /// Eigenvalues of `(h1, h2)` under the adjoint action.
    pub fn weight(self) -> (i64, i64) {
        match self {
            Letter::E1 => (2, -1),
            Letter::E2 => (-1, 0),
            Letter::E3 => (1, -1),
            Letter::F1 => (-2, 1),
            Letter::F2 => (1, 0),
            Letter::F3 => (-1, 1),
            Letter::K(_) => (0, 0),
        }
    }

    pub fn parity(self) -> Parity {
        match self {
            Letter::E2 | Letter::E3 | Letter::F2 | Letter::F3 => Parity::Odd,
            _ => Parity::Even,
        }
    }

    pub fn is_cartan(self) -> bool {
        matches!(self, Letter::K(_))
    }

    fn name(self) -> &'static str {
        match self {
            Letter::E1 => "e1",
            Letter::E2 => "e2",
            Letter::E3 => "e3",
            Letter::F1 => "f1",
            Letter::F2 => "f2",
            Letter::F3 => "f3",
            Letter::K(_) => "K",
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Letter::K(k) => write!(f, "{k}"),
            l => f.write_str(l.name()),
        }
    }
}

/// `f1^a1 f3^a3 f2^a2 K(c) e2^b2 e3^b3 e1^b1`, odd exponents at most one.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default, Serialize, Deserialize)]
pub struct PBWMonomial {
    pub a1: u32,
    pub a3: u32,
    pub a2: u32,
    pub cartan: CartanMonomial,
    pub b2: u32,
    pub b3: u32,
    pub b1: u32,
}

impl PBWMonomial {
    pub const ONE: PBWMonomial =
        PBWMonomial { a1: 0, a3: 0, a2: 0, cartan: CartanMonomial::ONE, b2: 0, b3: 0, b1: 0 };

    pub fn cartan(k: CartanMonomial) -> Self {
        PBWMonomial { cartan: k, ..Self::ONE }
    }

    pub fn letter(l: Letter) -> Self {
        Self::ONE.pushed(l).expect("single letter is normal")
    }

    pub fn is_one(&self) -> bool {
        *self == Self::ONE
    }

    pub fn is_cartan(&self) -> bool {
        PBWMonomial::cartan(self.cartan) == *self
    }

    pub fn degree(&self) -> u32 {
        self.a1 + self.a2 + self.a3 + self.b1 + self.b2 + self.b3
    }

    pub fn weight(&self) -> (i64, i64) {
        let terms = [
            (Letter::F1, self.a1),
            (Letter::F3, self.a3),
            (Letter::F2, self.a2),
            (Letter::E2, self.b2),
            (Letter::E3, self.b3),
            (Letter::E1, self.b1),
        ];
        terms.iter().fold((0, 0), |(x, y), (l, n)| {
            let w = l.weight();
            (x + w.0 * *n as i64, y + w.1 * *n as i64)
        })
    }

    pub fn parity(&self) -> Parity {
        Parity::from_bit(((self.a3 + self.a2 + self.b2 + self.b3) % 2) as u8)
    }

    /// Expanded letter word in PBW order; the Cartan part appears only if nontrivial.
    pub fn letters(&self) -> Vec<Letter> {
        let mut w = Vec::with_capacity(self.degree() as usize + 1);
        w.extend(std::iter::repeat(Letter::F1).take(self.a1 as usize));
        w.extend(std::iter::repeat(Letter::F3).take(self.a3 as usize));
        w.extend(std::iter::repeat(Letter::F2).take(self.a2 as usize));
        if !self.cartan.is_one() {
            w.push(Letter::K(self.cartan));
        }
        w.extend(std::iter::repeat(Letter::E2).take(self.b2 as usize));
        w.extend(std::iter::repeat(Letter::E3).take(self.b3 as usize));
        w.extend(std::iter::repeat(Letter::E1).take(self.b1 as usize));
        w
    }

    /// Split off the last letter.
    pub fn pop_last(&self) -> Option<(PBWMonomial, Letter)> {
        let mut m = *self;
        let l = if m.b1 > 0 {
            m.b1 -= 1;
            Letter::E1
        } else if m.b3 > 0 {
            m.b3 -= 1;
            Letter::E3
        } else if m.b2 > 0 {
            m.b2 -= 1;
            Letter::E2
        } else if !m.cartan.is_one() {
            let k = m.cartan;
            m.cartan = CartanMonomial::ONE;
            Letter::K(k)
        } else if m.a2 > 0 {
            m.a2 -= 1;
            Letter::F2
        } else if m.a3 > 0 {
            m.a3 -= 1;
            Letter::F3
        } else if m.a1 > 0 {
            m.a1 -= 1;
            Letter::F1
        } else {
            return None;
        };
        Some((m, l))
    }

    /// Append a letter that is not smaller than the current last letter. Returns `None`
    /// if this would leave PBW order or repeat an odd letter; a Cartan letter is only
    /// accepted if there is no Cartan part yet.
    pub fn pushed(&self, l: Letter) -> Option<PBWMonomial> {
        if let Some((_, last)) = self.pop_last() {
            if last > l && !(last.is_cartan() && l.is_cartan()) {
                return None;
            }
        }
        let mut m = *self;
        let odd_bump = |x: &mut u32| {
            if *x == 0 {
                *x = 1;
                true
            } else {
                false
            }
        };
        let ok = match l {
            Letter::F1 => {
                m.a1 += 1;
                true
            }
            Letter::E1 => {
                m.b1 += 1;
                true
            }
            Letter::F3 => odd_bump(&mut m.a3),
            Letter::F2 => odd_bump(&mut m.a2),
            Letter::E2 => odd_bump(&mut m.b2),
            Letter::E3 => odd_bump(&mut m.b3),
            Letter::K(k) => {
                if !m.cartan.is_one() || m.b1 + m.b2 + m.b3 > 0 {
                    false
                } else {
                    m.cartan = k;
                    true
                }
            }
        };
        ok.then_some(m)
    }
}

impl fmt::Display for PBWMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: [(&str, u32); 3] = [("f1", self.a1), ("f3", self.a3), ("f2", self.a2)];
        let tail: [(&str, u32); 3] = [("e2", self.b2), ("e3", self.b3), ("e1", self.b1)];
        let mut words = Vec::new();
        let emit = |name: &str, n: u32, words: &mut Vec<String>| match n {
            0 => {}
            1 => words.push(name.to_string()),
            n => words.push(format!("{name}^{n}")),
        };
        for (name, n) in parts {
            emit(name, n, &mut words);
        }
        if !self.cartan.is_one() {
            words.push(self.cartan.to_string());
        }
        for (name, n) in tail {
            emit(name, n, &mut words);
        }
        if words.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&words.join(" "))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn letter_order_is_pbw_order() {
        let k = Letter::K(CartanMonomial::new(1, 0));
        let order = [Letter::F1, Letter::F3, Letter::F2, k, Letter::E2, Letter::E3, Letter::E1];
        assert!(order.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn render_and_round_trip_letters() {
        let m = PBWMonomial { a1: 2, a3: 1, cartan: CartanMonomial::new(1, 0), b1: 1, ..PBWMonomial::ONE };
        assert_eq!(m.to_string(), "f1^2 f3 K(1,0) e1");
        let rebuilt = m.letters().into_iter().try_fold(PBWMonomial::ONE, |acc, l| acc.pushed(l)).unwrap();
        assert_eq!(rebuilt, m);
        assert_eq!(PBWMonomial::ONE.to_string(), "1");
    }

    #[test]
    fn push_rejects_disorder_and_odd_squares() {
        let e1 = PBWMonomial::letter(Letter::E1);
        assert!(e1.pushed(Letter::E2).is_none());
        assert!(PBWMonomial::letter(Letter::E2).pushed(Letter::E2).is_none());
        assert_eq!(e1.pushed(Letter::E1).unwrap().b1, 2);
    }

    #[test]
    fn weights_and_parity() {
        let m = PBWMonomial { a2: 1, b1: 1, ..PBWMonomial::ONE };
        assert_eq!(m.weight(), (3, -1));
        assert_eq!(m.parity(), Parity::Odd);
    }
}
