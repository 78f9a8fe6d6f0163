//! Conjugation identities of the Jordanian twist `G = E_q(h e1/(q-1))`, checked as
//! truncated `h`-series in PBW normal form.

use std::cell::RefCell;
use std::collections::HashMap;
use std::fmt;

use num_traits::One;
use serde::Serialize;

use super::element::AlgebraElement;
use super::series::{t_alpha_with, twist_series, Dressed, HSeries};
use crate::scalars::{Field, HalfInt, Scalar};
use crate::Result;

/// The identities satisfied by the twist. Parameters are half-integers.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(tag = "name", rename_all = "kebab-case")]
pub enum Identity {
    /// `G^-1 q^(a h1/2) G = t^(a) q^(a h1/2)`.
    H1Conjugation { alpha: HalfInt },
    /// `t^(a+b) q^((a+b) h1/2) = t^(a) q^(a h1/2) t^(b) q^(b h1/2)`.
    TGroupLaw { alpha: HalfInt, beta: HalfInt },
    /// `G^-1 q^(b h2) G = t^(-b) q^(b h2)`.
    H2Conjugation { beta: HalfInt },
    /// `G^-1 f1 G = f1 - h/((q-1)(q-q^-1)) (t^(1) q^h1 - t^(-1) q^-h1)`.
    F1Conjugation,
    /// `G^-1 f2 G = f2`.
    F2Conjugation,
    /// `G^-1 f3 G = f3 + (h q/(q-1)) t^(1) f2 q^h1`.
    F3Conjugation,
    /// `t^(2) q^h1 - t^(-2) q^-h1 = q^h1 - q^-h1 + h(q+1)[t^(1) e1 q^h1 + t^(-1) q^-h1 e1]`.
    TwistedCartanDifference,
    /// The same with the last product written `q^-h1 e1 t^(-1)`; kept as a diagnostic,
    /// it is not expected to hold.
    TwistedCartanDifferenceLiteral,
}

impl Identity {
    pub fn label(&self) -> &'static str {
        match self {
            Identity::H1Conjugation { .. } => "h1-conjugation",
            Identity::TGroupLaw { .. } => "t-group-law",
            Identity::H2Conjugation { .. } => "h2-conjugation",
            Identity::F1Conjugation => "f1-conjugation",
            Identity::F2Conjugation => "f2-conjugation",
            Identity::F3Conjugation => "f3-conjugation",
            Identity::TwistedCartanDifference => "twisted-cartan-difference",
            Identity::TwistedCartanDifferenceLiteral => "twisted-cartan-difference-literal",
        }
    }

    /// Whether a failure of this identity counts against the suite.
    pub fn is_diagnostic(&self) -> bool {
        matches!(self, Identity::TwistedCartanDifferenceLiteral)
    }

    pub fn params(&self) -> String {
        match self {
            Identity::H1Conjugation { alpha } => format!("alpha={alpha}"),
            Identity::TGroupLaw { alpha, beta } => format!("alpha={alpha},beta={beta}"),
            Identity::H2Conjugation { beta } => format!("beta={beta}"),
            _ => String::new(),
        }
    }

    /// The standard parameter set: every family at `alpha, beta` in `{1, -1, 1/2, -1/2, 2}`,
    /// the group law on all ordered pairs, plus the diagnostic.
    pub fn standard_suite() -> Vec<Identity> {
        let values = standard_values();
        let mut out = Vec::new();
        out.extend(values.iter().map(|&alpha| Identity::H1Conjugation { alpha }));
        for &alpha in &values {
            for &beta in &values {
                out.push(Identity::TGroupLaw { alpha, beta });
            }
        }
        out.extend(values.iter().map(|&beta| Identity::H2Conjugation { beta }));
        out.extend([
            Identity::F1Conjugation,
            Identity::F2Conjugation,
            Identity::F3Conjugation,
            Identity::TwistedCartanDifference,
            Identity::TwistedCartanDifferenceLiteral,
        ]);
        out
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = self.params();
        if p.is_empty() {
            f.write_str(self.label())
        } else {
            write!(f, "{}[{}]", self.label(), p)
        }
    }
}

pub fn standard_values() -> Vec<HalfInt> {
    vec![HalfInt::from_int(1), HalfInt::from_int(-1), HalfInt::half(1), HalfInt::half(-1), HalfInt::from_int(2)]
}

#[derive(Clone, Debug, Serialize)]
pub struct IdentityVerdict {
    pub identity: String,
    pub label: &'static str,
    pub params: String,
    pub order: usize,
    pub holds: bool,
    pub diagnostic: bool,
    /// Lowest `h`-order at which the two sides differ.
    pub first_failing_order: Option<usize>,
}

/// Shared ingredients for one truncation order.
pub struct IdentityContext {
    order: usize,
    g: HSeries,
    g_inv: HSeries,
    t_cache: RefCell<HashMap<i64, HSeries>>,
}

impl IdentityContext {
    pub fn new(order: usize) -> Result<Self> {
        let g = twist_series(order);
        let g_inv = g.inverse()?;
        Ok(IdentityContext { order, g, g_inv, t_cache: RefCell::new(HashMap::new()) })
    }

    fn t(&self, twice_alpha: i64) -> Result<HSeries> {
        if let Some(t) = self.t_cache.borrow().get(&twice_alpha) {
            return Ok(t.clone());
        }
        let t = t_alpha_with(&self.g_inv, HalfInt::from_twice(twice_alpha))?;
        self.t_cache.borrow_mut().insert(twice_alpha, t.clone());
        Ok(t)
    }

    fn conj(&self, x: &AlgebraElement) -> HSeries {
        self.g_inv.right_mul(x).mul(&self.g)
    }

    fn sides(&self, id: Identity) -> Result<(Dressed, Dressed)> {
        let n = self.order;
        let q = Scalar::q();
        let q_minus_one = q.sub_ref(&Scalar::one());
        let plain = Dressed::plain;
        Ok(match id {
            Identity::H1Conjugation { alpha } => {
                let k = Dressed::new(HSeries::one(n), alpha, HalfInt::ZERO);
                let lhs = plain(self.g_inv.clone()).mul(&k)?.mul(&plain(self.g.clone()))?;
                let rhs = Dressed::new(self.t(alpha.twice())?, alpha, HalfInt::ZERO);
                (lhs, rhs)
            }
            Identity::TGroupLaw { alpha, beta } => {
                let sum = alpha + beta;
                let lhs = Dressed::new(self.t(sum.twice())?, sum, HalfInt::ZERO);
                let a = Dressed::new(self.t(alpha.twice())?, alpha, HalfInt::ZERO);
                let b = Dressed::new(self.t(beta.twice())?, beta, HalfInt::ZERO);
                (lhs, a.mul(&b)?)
            }
            Identity::H2Conjugation { beta } => {
                // q^(b h2) = K(0, 2b)
                let k = AlgebraElement::cartan(0, beta.twice());
                let lhs = plain(self.conj(&k));
                let rhs = plain(self.t(-beta.twice())?.right_mul(&k));
                (lhs, rhs)
            }
            Identity::F1Conjugation => {
                let lhs = self.conj(&AlgebraElement::f1());
                let diff = self.t(2)?.right_mul(&AlgebraElement::cartan(2, 0)).sub(&self.t(-2)?.right_mul(&AlgebraElement::cartan(-2, 0)));
                let c = q_minus_one.mul_ref(&q.sub_ref(&Scalar::q_pow(-1))).try_inv()?;
                let rhs = HSeries::constant(AlgebraElement::f1(), n).sub(&diff.shift(1).scale(&c));
                (plain(lhs), plain(rhs))
            }
            Identity::F2Conjugation => {
                let lhs = self.conj(&AlgebraElement::f2());
                (plain(lhs), plain(HSeries::constant(AlgebraElement::f2(), n)))
            }
            Identity::F3Conjugation => {
                let lhs = self.conj(&AlgebraElement::f3());
                let c = q.try_div(&q_minus_one)?;
                let tail = self.t(2)?.right_mul(&AlgebraElement::f2().mul(&AlgebraElement::cartan(2, 0))).shift(1).scale(&c);
                let rhs = HSeries::constant(AlgebraElement::f3(), n).add(&tail);
                (plain(lhs), plain(rhs))
            }
            Identity::TwistedCartanDifference | Identity::TwistedCartanDifferenceLiteral => {
                let (k, k_inv, e1) = (AlgebraElement::cartan(2, 0), AlgebraElement::cartan(-2, 0), AlgebraElement::e1());
                let lhs = self.t(4)?.right_mul(&k).sub(&self.t(-4)?.right_mul(&k_inv));
                let first = self.t(2)?.right_mul(&e1.mul(&k));
                let second = if id == Identity::TwistedCartanDifference {
                    self.t(-2)?.right_mul(&k_inv.mul(&e1))
                } else {
                    self.t(-2)?.left_mul(&k_inv.mul(&e1))
                };
                let bracket = first.add(&second).shift(1).scale(&q.add_ref(&Scalar::one()));
                let rhs = HSeries::constant(k.sub(&k_inv), n).add(&bracket);
                (plain(lhs), plain(rhs))
            }
        })
    }

    pub fn verify(&self, id: Identity) -> Result<IdentityVerdict> {
        let (lhs, rhs) = self.sides(id)?;
        let first = lhs.first_difference(&rhs);
        Ok(IdentityVerdict {
            identity: id.to_string(),
            label: id.label(),
            params: id.params(),
            order: self.order,
            holds: first.is_none(),
            diagnostic: id.is_diagnostic(),
            first_failing_order: first,
        })
    }
}

/// Check one identity through `h`-order `order`.
pub fn verify_identity(id: Identity, order: usize) -> Result<IdentityVerdict> {
    IdentityContext::new(order)?.verify(id)
}
