//! Graded matrix representations: the 3-dimensional fundamental, tensor products
//! through the coproduct, a relation validator and evaluation of symbolic elements.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::scalars::{Field, HalfInt, HbarField, Params, Rational, Scalar};
use crate::superlinalg::{GradedMatrix, GradedSpace, Parity};
use crate::uqsl21::{AlgebraElement, HSeries, Letter, PBWMonomial};
use crate::{Error, Result};

/// The representations used throughout: `V`, `V (x) V` and `V (x) V (x) V`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum RepKind {
    Fund,
    Fund2,
    Fund3,
}

impl RepKind {
    pub fn name(self) -> &'static str {
        match self {
            RepKind::Fund => "fund",
            RepKind::Fund2 => "fund2",
            RepKind::Fund3 => "fund3",
        }
    }

    pub fn build<S: Field>(self, params: &Params<S>) -> Result<Representation<S>> {
        let f = Representation::fundamental(params)?;
        match self {
            RepKind::Fund => Ok(f),
            RepKind::Fund2 => f.tensor(&f),
            RepKind::Fund3 => f.tensor(&f)?.tensor(&f),
        }
    }
}

impl fmt::Display for RepKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for RepKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "fund" => Ok(RepKind::Fund),
            "fund2" => Ok(RepKind::Fund2),
            "fund3" => Ok(RepKind::Fund3),
            other => Err(Error::Parse(format!("unknown representation `{other}` (expected fund, fund2 or fund3)"))),
        }
    }
}

/// Images of `e1, e2, f1, f2` on a graded space, with the `(h1, h2)` weight of every
/// basis vector. The Cartan part acts diagonally through the weights.
#[derive(Clone, Debug, Serialize)]
#[serde(bound = "S: Serialize")]
pub struct Representation<S: Field> {
    name: String,
    #[serde(skip)]
    space: GradedSpace,
    weights: Vec<(HalfInt, HalfInt)>,
    e1: GradedMatrix<S>,
    e2: GradedMatrix<S>,
    f1: GradedMatrix<S>,
    f2: GradedMatrix<S>,
    #[serde(skip)]
    params: Params<S>,
}

impl<S: Field> Representation<S> {
    pub fn new(
        name: impl Into<String>,
        space: GradedSpace,
        weights: Vec<(HalfInt, HalfInt)>,
        images: [GradedMatrix<S>; 4],
        params: Params<S>,
    ) -> Result<Self> {
        if weights.len() != space.dim() {
            return Err(Error::InvalidRepresentation("one weight per basis vector is required".into()));
        }
        let [e1, e2, f1, f2] = images;
        for m in [&e1, &e2, &f1, &f2] {
            if m.rows() != &space || m.cols() != &space {
                return Err(Error::InvalidRepresentation("generator image does not act on the space".into()));
            }
        }
        Ok(Representation { name: name.into(), space, weights, e1, e2, f1, f2, params })
    }

    /// Weights given as rationals; each must lie in `(1/2)Z`.
    pub fn with_rational_weights(
        name: impl Into<String>,
        space: GradedSpace,
        weights: &[(Rational, Rational)],
        images: [GradedMatrix<S>; 4],
        params: Params<S>,
    ) -> Result<Self> {
        let weights = weights
            .iter()
            .map(|(a, b)| Ok((HalfInt::from_rational(a)?, HalfInt::from_rational(b)?)))
            .collect::<Result<Vec<_>>>()
            .map_err(|e| Error::InvalidRepresentation(format!("weights must be half-integers: {e}")))?;
        Self::new(name, space, weights, images, params)
    }

    /// `pi(e1) = E12, pi(e2) = E23, pi(f1) = E21, pi(f2) = E32` on `C^(2|1)` with
    /// weights `h1 = (1, -1, 0)`, `h2 = (0, 1, 1)`.
    pub fn fundamental(params: &Params<S>) -> Result<Self> {
        let space = GradedSpace::super_dim(2, 1)?;
        let u = |i, j| GradedMatrix::unit(&space, i, j);
        let w = |a: i64, b: i64| (HalfInt::from_int(a), HalfInt::from_int(b));
        Self::new(
            "fund",
            space.clone(),
            vec![w(1, 0), w(-1, 1), w(0, 1)],
            [u(0, 1), u(1, 2), u(1, 0), u(2, 1)],
            params.clone(),
        )
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn space(&self) -> &GradedSpace {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn weights(&self) -> &[(HalfInt, HalfInt)] {
        &self.weights
    }

    pub fn params(&self) -> &Params<S> {
        &self.params
    }

    pub fn e1(&self) -> &GradedMatrix<S> {
        &self.e1
    }
    pub fn e2(&self) -> &GradedMatrix<S> {
        &self.e2
    }
    pub fn f1(&self) -> &GradedMatrix<S> {
        &self.f1
    }
    pub fn f2(&self) -> &GradedMatrix<S> {
        &self.f2
    }

    /// `e3 = e1 e2 - q^-1 e2 e1`.
    pub fn e3(&self) -> GradedMatrix<S> {
        let a = self.e1.try_mul(&self.e2).expect("square");
        let b = self.e2.try_mul(&self.e1).expect("square").scale(&self.params.q_inv());
        a.try_sub(&b).expect("same shape")
    }

    /// `f3 = f2 f1 - q f1 f2`.
    pub fn f3(&self) -> GradedMatrix<S> {
        let a = self.f2.try_mul(&self.f1).expect("square");
        let b = self.f1.try_mul(&self.f2).expect("square").scale(&self.params.q());
        a.try_sub(&b).expect("same shape")
    }

    pub fn identity(&self) -> GradedMatrix<S> {
        GradedMatrix::identity(&self.space)
    }

    /// Diagonal `q^(a h1 + b h2)`; the exponent of `s` must be an integer on every
    /// basis vector.
    pub fn q_power(&self, a: &Rational, b: &Rational) -> Result<GradedMatrix<S>> {
        let two = Rational::from(2);
        let diag = self
            .weights
            .iter()
            .map(|(w1, w2)| {
                let e = (a.clone() * w1.to_rational() + b.clone() * w2.to_rational()) * two.clone();
                let k = e.to_i64().ok_or_else(|| Error::NonIntegralExponent(format!("q^({e}/2) on weight ({w1}, {w2})")))?;
                Ok(self.params.s_pow(k))
            })
            .collect::<Result<Vec<_>>>()?;
        GradedMatrix::diagonal(&self.space, diag)
    }

    /// `K(c1, c2) = q^((c1 h1 + c2 h2)/2)`.
    pub fn cartan(&self, c1: i64, c2: i64) -> Result<GradedMatrix<S>> {
        self.q_power(&Rational::new(c1, 2)?, &Rational::new(c2, 2)?)
    }

    /// Diagonal weight matrix of `h1` (`i = 1`) or `h2` (`i = 2`).
    pub fn h(&self, i: usize) -> GradedMatrix<S> {
        let diag = self
            .weights
            .iter()
            .map(|w| S::from_rational(&if i == 1 { w.0 } else { w.1 }.to_rational()))
            .collect();
        GradedMatrix::diagonal(&self.space, diag).expect("one weight per vector")
    }

    /// `x -> q^(a h1 + b h2) x q^-(a h1 + b h2)`: entry `(i, j)` picks up
    /// `q^(a (w1(i) - w1(j)) + b (w2(i) - w2(j)))`.
    pub fn conjugate_by_q_power(&self, x: &GradedMatrix<S>, a: &Rational, b: &Rational) -> Result<GradedMatrix<S>> {
        let two = Rational::from(2);
        x.try_map(|i, j, v| {
            if v.is_zero() {
                return Ok(v.clone());
            }
            let (wi, wj) = (self.weights[i], self.weights[j]);
            let d1 = wi.0.to_rational() - wj.0.to_rational();
            let d2 = wi.1.to_rational() - wj.1.to_rational();
            let e = (a.clone() * d1 + b.clone() * d2) * two.clone();
            let k = e.to_i64().ok_or_else(|| Error::NonIntegralExponent(format!("s^({e}) at entry ({i}, {j})")))?;
            Ok(v.mul_ref(&self.params.s_pow(k)))
        })
    }

    pub fn letter(&self, l: Letter) -> Result<GradedMatrix<S>> {
        Ok(match l {
            Letter::E1 => self.e1.clone(),
            Letter::E2 => self.e2.clone(),
            Letter::E3 => self.e3(),
            Letter::F1 => self.f1.clone(),
            Letter::F2 => self.f2.clone(),
            Letter::F3 => self.f3(),
            Letter::K(k) => self.cartan(k.c1, k.c2)?,
        })
    }

    pub fn word(&self, letters: &[Letter]) -> Result<GradedMatrix<S>> {
        letters.iter().try_fold(self.identity(), |acc, l| acc.try_mul(&self.letter(*l)?))
    }

    pub fn monomial(&self, m: &PBWMonomial) -> Result<GradedMatrix<S>> {
        self.word(&m.letters())
    }

    /// Image of a symbolic element, with coefficients mapped into `S` by `coeff`.
    pub fn evaluate_with(
        &self,
        x: &AlgebraElement,
        mut coeff: impl FnMut(&Scalar) -> Result<S>,
    ) -> Result<GradedMatrix<S>> {
        let mut acc = GradedMatrix::zeros(&self.space, &self.space);
        let mut cache: HashMap<PBWMonomial, GradedMatrix<S>> = HashMap::new();
        for (m, c) in x.terms() {
            let img = match cache.get(m) {
                Some(img) => img.clone(),
                None => {
                    let img = self.monomial(m)?;
                    cache.insert(*m, img.clone());
                    img
                }
            };
            acc = acc.try_add(&img.scale(&coeff(c)?))?;
        }
        Ok(acc)
    }

    /// Graded tensor product `(pi1 (x) pi2) o Delta`; weights add.
    pub fn tensor(&self, other: &Self) -> Result<Self> {
        let both = |x: &GradedMatrix<S>, y: &GradedMatrix<S>, (c1, c2): (i64, i64)| -> Result<GradedMatrix<S>> {
            let left = x.graded_tensor(&other.cartan(c1, c2)?);
            let right = self.cartan(-c1, -c2)?.graded_tensor(y);
            left.try_add(&right)
        };
        let weights = self
            .weights
            .iter()
            .flat_map(|a| other.weights.iter().map(move |b| (a.0 + b.0, a.1 + b.1)))
            .collect();
        Self::new(
            format!("{}*{}", self.name, other.name),
            self.space.tensor(&other.space),
            weights,
            [
                both(&self.e1, &other.e1, (1, 0))?,
                both(&self.e2, &other.e2, (0, 1))?,
                both(&self.f1, &other.f1, (1, 0))?,
                both(&self.f2, &other.f2, (0, 1))?,
            ],
            self.params.clone(),
        )
    }

    /// Check every defining relation as an exact matrix identity.
    pub fn validate(&self) -> Result<ValidationReport<S>> {
        let mut checks = Vec::new();
        let mut push = |name: &str, residual: GradedMatrix<S>| {
            checks.push(RelationCheck {
                relation: name.to_string(),
                holds: residual.is_zero(),
                residual_nnz: residual.nnz(),
                residual: (!residual.is_zero()).then_some(residual),
            });
        };
        let gens = [
            ("e1", &self.e1, Letter::E1),
            ("e2", &self.e2, Letter::E2),
            ("f1", &self.f1, Letter::F1),
            ("f2", &self.f2, Letter::F2),
        ];
        for (name, x, l) in gens {
            let ok = x.is_homogeneous_of(l.parity());
            let mut r = GradedMatrix::zeros(&self.space, &self.space);
            if !ok {
                r = x.clone();
            }
            push(&format!("parity({name})"), r);
        }
        let (h1, h2) = (self.h(1), self.h(2));
        push("[h1,h2]", supercommutator(&h1, &h2, false)?);
        for (hname, h, idx) in [("h1", &h1, 0usize), ("h2", &h2, 1usize)] {
            for (name, x, l) in gens {
                let w = l.weight();
                let a = if idx == 0 { w.0 } else { w.1 };
                let lhs = supercommutator(h, x, false)?;
                push(&format!("[{hname},{name}]"), lhs.try_sub(&x.scale(&S::from_i64(a)))?);
            }
        }
        let bracket = |c1, c2| -> Result<GradedMatrix<S>> {
            let d = self.params.q_minus_q_inv().try_inv()?;
            Ok(self.cartan(c1, c2)?.try_sub(&self.cartan(-c1, -c2)?)?.scale(&d))
        };
        let zero = GradedMatrix::zeros(&self.space, &self.space);
        let ef = [
            ("[e1,f1]", &self.e1, &self.f1, false, bracket(2, 0)?),
            ("[e1,f2]", &self.e1, &self.f2, false, zero.clone()),
            ("[e2,f1]", &self.e2, &self.f1, false, zero.clone()),
            ("[e2,f2]", &self.e2, &self.f2, true, bracket(0, 2)?),
        ];
        for (name, e, f, anti, rhs) in ef {
            push(name, supercommutator(e, f, anti)?.try_sub(&rhs)?);
        }
        push("e2^2", self.e2.try_mul(&self.e2)?);
        push("f2^2", self.f2.try_mul(&self.f2)?);
        let q_sum = self.params.q().add_ref(&self.params.q_inv());
        let serre = |a: &GradedMatrix<S>, b: &GradedMatrix<S>| -> Result<GradedMatrix<S>> {
            let aab = GradedMatrix::product(&[a, a, b])?;
            let aba = GradedMatrix::product(&[a, b, a])?.scale(&q_sum);
            let baa = GradedMatrix::product(&[b, a, a])?;
            aab.try_sub(&aba)?.try_add(&baa)
        };
        push("serre(e1,e2)", serre(&self.e1, &self.e2)?);
        push("serre(f1,f2)", serre(&self.f1, &self.f2)?);
        Ok(ValidationReport { representation: self.name.clone(), checks })
    }

    /// Apply a coefficient map to every image.
    pub fn try_map<T: Field>(&self, params: Params<T>, mut f: impl FnMut(&S) -> Result<T>) -> Result<Representation<T>> {
        let mut map = |m: &GradedMatrix<S>| m.try_map(|_, _, v| f(v));
        Representation::new(
            self.name.clone(),
            self.space.clone(),
            self.weights.clone(),
            [map(&self.e1)?, map(&self.e2)?, map(&self.f1)?, map(&self.f2)?],
            params,
        )
    }
}

fn supercommutator<S: Field>(a: &GradedMatrix<S>, b: &GradedMatrix<S>, anti: bool) -> Result<GradedMatrix<S>> {
    let ab = a.try_mul(b)?;
    let ba = b.try_mul(a)?;
    if anti {
        ab.try_add(&ba)
    } else {
        ab.try_sub(&ba)
    }
}

impl Representation<Scalar> {
    /// Exact image of a symbolic element.
    pub fn evaluate(&self, x: &AlgebraElement) -> Result<GradedMatrix<Scalar>> {
        self.evaluate_with(x, |c| Ok(c.clone()))
    }

    /// Exact image of a truncated `h`-series, `sum_n h^n pi(c_n)`. The series must
    /// terminate in this representation: the image of the top coefficient has to vanish.
    pub fn evaluate_series(&self, x: &HSeries) -> Result<GradedMatrix<Scalar>> {
        let top = self.evaluate(x.coeff(x.order()))?;
        if !top.is_zero() {
            return Err(Error::NonTerminating(x.order()));
        }
        let h = Scalar::hbar();
        let mut acc = GradedMatrix::zeros(&self.space, &self.space);
        for (n, c) in x.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            acc = acc.try_add(&self.evaluate(c)?.scale(&h.powi(n as i64)?))?;
        }
        Ok(acc)
    }

    /// Entrywise `s -> 1` of every generator image.
    pub fn limit_s1(&self) -> Result<Representation<HbarField>> {
        self.try_map(Params::classical(), |v| v.limit_s1())
    }

    /// Floating-point copy at `q = q0`, `h = h0`.
    pub fn numeric(&self, q0: f64, h0: f64) -> Result<Representation<f64>> {
        self.try_map(Params::numeric(q0, h0)?, |v| v.eval_numeric(q0, h0))
    }
}

#[derive(Clone, Debug, Serialize)]
#[serde(bound = "S: Serialize")]
pub struct RelationCheck<S: Field> {
    pub relation: String,
    pub holds: bool,
    pub residual_nnz: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residual: Option<GradedMatrix<S>>,
}

#[derive(Clone, Debug, Serialize)]
#[serde(bound = "S: Serialize")]
pub struct ValidationReport<S: Field> {
    pub representation: String,
    pub checks: Vec<RelationCheck<S>>,
}

impl<S: Field> ValidationReport<S> {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }

    pub fn failures(&self) -> impl Iterator<Item = &RelationCheck<S>> {
        self.checks.iter().filter(|c| !c.holds)
    }
}

/// Parity of every basis vector, for reports.
pub fn parity_bits(space: &GradedSpace) -> Vec<u8> {
    space.parities().iter().map(|p: &Parity| p.bit()).collect()
}
