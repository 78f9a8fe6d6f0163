//! The Jordanian contraction: twist `G = E_q(h e1/(q-1))` in representations, the
//! twisted Cartan elements `t^(a)`, their `q -> 1` limit `T`, and the gauge-transformed
//! R-matrix on `fund (x) rep` whose limit is the super-Jordanian `R_h`.

use serde::Serialize;

use crate::reps::Representation;
use crate::rmatrix::{r_fund_arb, ybe_check, YbeReport};
use crate::scalars::{q_factorial_sym, Field, HalfInt, HbarField, Rational, Scalar};
use crate::superlinalg::{GradedMatrix, GradedSpace};
use crate::uqsl21::Identity;
use crate::{Error, Result};

/// `E_q(x) = sum x^n / [n]!` for nilpotent `x`.
pub fn big_e_q_matrix<S: Field>(x: &GradedMatrix<S>, rep: &Representation<S>) -> Result<GradedMatrix<S>> {
    let p = rep.params();
    x.nilpotent_series(|n| q_factorial_sym(n, p).try_inv())
}

/// `q^a h e1/(q-1)` with `a = twice_a / 2`.
fn twist_argument<S: Field>(rep: &Representation<S>, twice_a: i64) -> Result<GradedMatrix<S>> {
    let p = rep.params();
    let c = p.s_pow(twice_a).mul_ref(p.hbar()).try_div(&p.q_minus_one())?;
    Ok(rep.e1().scale(&c))
}

pub fn twist_g<S: Field>(rep: &Representation<S>) -> Result<GradedMatrix<S>> {
    big_e_q_matrix(&twist_argument(rep, 0)?, rep)
}

pub fn twist_g_inv<S: Field>(rep: &Representation<S>) -> Result<GradedMatrix<S>> {
    twist_g(rep)?.try_inverse()
}

/// `t^(a) = G^-1 E_q(q^a h e1/(q-1))`.
pub fn t_alpha_rep<S: Field>(alpha: HalfInt, rep: &Representation<S>) -> Result<GradedMatrix<S>> {
    twist_g_inv(rep)?.try_mul(&big_e_q_matrix(&twist_argument(rep, alpha.twice())?, rep)?)
}

/// A matrix times a formal Cartan factor `q^(a h1 + b h2)`; the factor is never
/// evaluated, it is commuted through with `conjugate_by_q_power`.
#[derive(Clone, Debug, PartialEq)]
struct DressedMatrix<S: Field> {
    m: GradedMatrix<S>,
    a: Rational,
    b: Rational,
}

impl<S: Field> DressedMatrix<S> {
    fn plain(m: GradedMatrix<S>) -> Self {
        DressedMatrix { m, a: Rational::from(0), b: Rational::from(0) }
    }

    fn new(m: GradedMatrix<S>, a: Rational, b: Rational) -> Self {
        DressedMatrix { m, a, b }
    }

    fn mul(&self, rhs: &Self, rep: &Representation<S>) -> Result<Self> {
        let moved = rep.conjugate_by_q_power(&rhs.m, &self.a, &self.b)?;
        Ok(DressedMatrix { m: self.m.try_mul(&moved)?, a: self.a.clone() + rhs.a.clone(), b: self.b.clone() + rhs.b.clone() })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RepIdentityVerdict {
    pub identity: String,
    pub label: &'static str,
    pub params: String,
    pub representation: String,
    pub holds: bool,
    pub diagnostic: bool,
    pub residual_nnz: usize,
}

struct RepContext<'a, S: Field> {
    rep: &'a Representation<S>,
    g: GradedMatrix<S>,
    g_inv: GradedMatrix<S>,
}

impl<'a, S: Field> RepContext<'a, S> {
    fn new(rep: &'a Representation<S>) -> Result<Self> {
        let g = twist_g(rep)?;
        let g_inv = g.try_inverse()?;
        Ok(RepContext { rep, g, g_inv })
    }

    fn t(&self, twice: i64) -> Result<GradedMatrix<S>> {
        self.g_inv.try_mul(&big_e_q_matrix(&twist_argument(self.rep, twice)?, self.rep)?)
    }

    fn conj(&self, x: &GradedMatrix<S>) -> Result<GradedMatrix<S>> {
        GradedMatrix::product(&[&self.g_inv, x, &self.g])
    }

    fn qp(&self, a: i64, b: i64) -> Result<GradedMatrix<S>> {
        self.rep.q_power(&Rational::from(a), &Rational::from(b))
    }

    fn sides(&self, id: Identity) -> Result<(DressedMatrix<S>, DressedMatrix<S>)> {
        let rep = self.rep;
        let p = rep.params();
        let (q, h) = (p.q(), p.hbar().clone());
        let q_minus_one = p.q_minus_one();
        let plain = DressedMatrix::plain;
        let half = |x: HalfInt| x.to_rational() * Rational::new(1, 2).expect("nonzero");
        Ok(match id {
            Identity::H1Conjugation { alpha } => {
                let k = DressedMatrix::new(rep.identity(), half(alpha), Rational::from(0));
                let lhs = plain(self.g_inv.clone()).mul(&k, rep)?.mul(&plain(self.g.clone()), rep)?;
                let rhs = DressedMatrix::new(self.t(alpha.twice())?, half(alpha), Rational::from(0));
                (lhs, rhs)
            }
            Identity::TGroupLaw { alpha, beta } => {
                let sum = alpha + beta;
                let lhs = DressedMatrix::new(self.t(sum.twice())?, half(sum), Rational::from(0));
                let a = DressedMatrix::new(self.t(alpha.twice())?, half(alpha), Rational::from(0));
                let b = DressedMatrix::new(self.t(beta.twice())?, half(beta), Rational::from(0));
                (lhs, a.mul(&b, rep)?)
            }
            Identity::H2Conjugation { beta } => {
                let k = DressedMatrix::new(rep.identity(), Rational::from(0), beta.to_rational());
                let lhs = plain(self.g_inv.clone()).mul(&k, rep)?.mul(&plain(self.g.clone()), rep)?;
                let rhs = DressedMatrix::new(self.t(-beta.twice())?, Rational::from(0), beta.to_rational());
                (lhs, rhs)
            }
            Identity::F1Conjugation => {
                let lhs = self.conj(rep.f1())?;
                let diff = self.t(2)?.try_mul(&self.qp(1, 0)?)?.try_sub(&self.t(-2)?.try_mul(&self.qp(-1, 0)?)?)?;
                let c = h.try_div(&q_minus_one.mul_ref(&p.q_minus_q_inv()))?;
                (plain(lhs), plain(rep.f1().try_sub(&diff.scale(&c))?))
            }
            Identity::F2Conjugation => (plain(self.conj(rep.f2())?), plain(rep.f2().clone())),
            Identity::F3Conjugation => {
                let lhs = self.conj(&rep.f3())?;
                let c = h.mul_ref(&q).try_div(&q_minus_one)?;
                let tail = GradedMatrix::product(&[&self.t(2)?, rep.f2(), &self.qp(1, 0)?])?.scale(&c);
                (plain(lhs), plain(rep.f3().try_add(&tail)?))
            }
            Identity::TwistedCartanDifference | Identity::TwistedCartanDifferenceLiteral => {
                let (k, k_inv, e1) = (self.qp(1, 0)?, self.qp(-1, 0)?, rep.e1());
                let lhs = self.t(4)?.try_mul(&k)?.try_sub(&self.t(-4)?.try_mul(&k_inv)?)?;
                let first = GradedMatrix::product(&[&self.t(2)?, e1, &k])?;
                let second = if id == Identity::TwistedCartanDifference {
                    GradedMatrix::product(&[&self.t(-2)?, &k_inv, e1])?
                } else {
                    GradedMatrix::product(&[&k_inv, e1, &self.t(-2)?])?
                };
                let bracket = first.try_add(&second)?.scale(&h.mul_ref(&q.add_ref(&S::one())));
                let rhs = k.try_sub(&k_inv)?.try_add(&bracket)?;
                (plain(lhs), plain(rhs))
            }
        })
    }

    fn verify(&self, id: Identity) -> Result<RepIdentityVerdict> {
        let (lhs, rhs) = self.sides(id)?;
        let same_cartan = lhs.a == rhs.a && lhs.b == rhs.b;
        let residual_nnz = lhs.m.try_sub(&rhs.m)?.nnz();
        Ok(RepIdentityVerdict {
            identity: id.to_string(),
            label: id.label(),
            params: id.params(),
            representation: self.rep.name().to_string(),
            holds: same_cartan && residual_nnz == 0,
            diagnostic: id.is_diagnostic(),
            residual_nnz,
        })
    }
}

/// The twist identities as exact matrix equations in `rep`.
pub fn verify_identities_rep<S: Field>(rep: &Representation<S>, identities: &[Identity]) -> Result<Vec<RepIdentityVerdict>> {
    let ctx = RepContext::new(rep)?;
    identities.iter().map(|&id| ctx.verify(id)).collect()
}

/// `binom(a, n)`.
fn binomial(a: &Rational, n: u32) -> Rational {
    (0..n).fold(Rational::from(1), |acc, k| {
        acc * (a.clone() - Rational::from(k as i64)) * Rational::new(1, k as i64 + 1).expect("nonzero")
    })
}

/// `T^a = sum binom(a, n) (T - 1)^n` for unipotent `T`.
pub fn unipotent_power<S: Field>(t: &GradedMatrix<S>, a: &Rational) -> Result<GradedMatrix<S>> {
    let n = t.try_sub(&GradedMatrix::identity(t.rows()))?;
    n.nilpotent_series(|k| Ok(S::from_rational(&binomial(a, k))))
}

/// `T`, `T^-1` and `H1 = (T + T^-1) h1 / 2` in one representation.
#[derive(Clone, Debug, Serialize)]
#[serde(bound = "S: Serialize")]
pub struct TOperator<S: Field> {
    pub t: GradedMatrix<S>,
    pub t_inv: GradedMatrix<S>,
    pub h1: GradedMatrix<S>,
}

impl<S: Field> TOperator<S> {
    pub fn new(t: GradedMatrix<S>, t_inv: GradedMatrix<S>, rep: &Representation<S>) -> Result<Self> {
        let half = S::from_rational(&Rational::new(1, 2)?);
        let h1 = t.try_add(&t_inv)?.try_mul(&rep.h(1))?.scale(&half);
        Ok(TOperator { t, t_inv, h1 })
    }
}

/// `T^(+-1) = +-h e1 + sqrt(1 + h^2 e1^2)`, the square root as a terminating binomial series.
pub fn closed_form_t<S: Field>(rep: &Representation<S>) -> Result<TOperator<S>> {
    let x = rep.e1().scale(rep.params().hbar());
    let half = Rational::new(1, 2)?;
    let root = x.try_mul(&x)?.nilpotent_series(|k| Ok(S::from_rational(&binomial(&half, k))))?;
    TOperator::new(root.try_add(&x)?, root.try_sub(&x)?, rep)
}

/// Valuation at `s = 1` of every nonzero entry, as `(row, col, order)`.
pub fn valuations(m: &GradedMatrix<Scalar>) -> Result<Vec<(usize, usize, i64)>> {
    m.nonzero_entries().map(|(i, j, v)| Ok((i, j, v.order_at_s1()?))).collect()
}

/// Entrywise `s -> 1`; a pole aborts with its coordinates.
pub fn limit_matrix(m: &GradedMatrix<Scalar>) -> Result<GradedMatrix<HbarField>> {
    m.try_map(|i, j, v| {
        v.limit_s1().map_err(|e| match e {
            Error::PoleAtQ1 { order } => Error::PoleAtQ1Entry { row: i, col: j, order },
            e => e,
        })
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct PowerCheck {
    pub alpha: HalfInt,
    pub holds: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct TLimitReport {
    pub representation: String,
    pub operator: TOperator<HbarField>,
    /// `T - T^-1 = 2 h e1`.
    pub difference_holds: bool,
    /// `lim t^(a) = T^a`.
    pub powers: Vec<PowerCheck>,
    pub matches_closed_form: bool,
}

pub fn t_power_exponents() -> Vec<HalfInt> {
    vec![HalfInt::from_int(2), HalfInt::from_int(-1), HalfInt::half(1)]
}

/// `T = lim t^(1)` together with its consistency checks.
pub fn t_limit(rep: &Representation<Scalar>) -> Result<TLimitReport> {
    let classical = rep.limit_s1()?;
    let t = limit_matrix(&t_alpha_rep(HalfInt::from_int(1), rep)?)?;
    let t_inv = t.try_inverse()?;
    let operator = TOperator::new(t, t_inv, &classical)?;
    let two_h_e1 = classical.e1().scale(&HbarField::hbar().mul_ref(&HbarField::from_i64(2)));
    let difference_holds = operator.t.try_sub(&operator.t_inv)? == two_h_e1;
    let powers = t_power_exponents()
        .into_iter()
        .map(|alpha| {
            let lim = limit_matrix(&t_alpha_rep(alpha, rep)?)?;
            Ok(PowerCheck { alpha, holds: lim == unipotent_power(&operator.t, &alpha.to_rational())? })
        })
        .collect::<Result<Vec<_>>>()?;
    let closed = closed_form_t(&classical)?;
    let matches_closed_form = closed.t == operator.t && closed.t_inv == operator.t_inv;
    Ok(TLimitReport { representation: rep.name().to_string(), operator, difference_holds, powers, matches_closed_form })
}

/// `M^-1 R M` on `fund (x) rep` with the gauge `M = pi_fund(G) (x) pi_rep(G)`.
pub fn conjugated_r<S: Field>(rep: &Representation<S>) -> Result<GradedMatrix<S>> {
    let fund = Representation::fundamental(rep.params())?;
    let m = twist_g(&fund)?.graded_tensor(&twist_g(rep)?);
    let m_inv = twist_g_inv(&fund)?.graded_tensor(&twist_g_inv(rep)?);
    GradedMatrix::product(&[&m_inv, &r_fund_arb(&fund, rep)?, &m])
}

#[derive(Clone, Debug, Serialize)]
#[serde(bound = "S: Serialize")]
pub struct AbcBlocks<S: Field> {
    pub alpha: GradedMatrix<S>,
    pub beta: GradedMatrix<S>,
    pub gamma: GradedMatrix<S>,
}

/// The off-diagonal blocks of the gauged R-matrix from their closed formulas:
///
/// * `alpha = h/(q-1) (G^-1 q^-h2 G - G^-1 q^(-h1-h2) G) + (q-q^-1) q^(-1/2) G^-1 f1 q^(-h1/2-h2) G`
/// * `beta = G^-1 B G + h/(q-1) (q-q^-1) q^(-1/2) G^-1 f2 q^(-h1-3h2/2) G`
/// * `gamma = -(q-q^-1) q^(-1/2) G^-1 f2 q^(-h1-3h2/2) G`
pub fn abc_blocks<S: Field>(rep: &Representation<S>) -> Result<AbcBlocks<S>> {
    let p = rep.params();
    let g = twist_g(rep)?;
    let g_inv = g.try_inverse()?;
    let conj = |x: &GradedMatrix<S>| GradedMatrix::product(&[&g_inv, x, &g]);
    let c = p.hbar().try_div(&p.q_minus_one())?;
    let blocks = crate::rmatrix::fund_blocks(rep)?;
    let alpha = conj(&blocks.diag[0])?.try_sub(&conj(&blocks.diag[1])?)?.scale(&c).try_add(&conj(&blocks.a)?)?;
    let c_conj = conj(&blocks.c)?;
    let beta = conj(&blocks.b)?.try_add(&c_conj.scale(&c))?;
    Ok(AbcBlocks { alpha, beta, gamma: c_conj.neg() })
}

/// `R_h` on `fund (x) rep`: `diag(T, T^-1, 1)` with `-h H1 + (h/2)(T - T^-1)` in the
/// upper block, all other blocks zero.
pub fn assemble_rh_from<S: Field>(fund: &GradedSpace, rep: &Representation<S>, op: &TOperator<S>) -> Result<GradedMatrix<S>> {
    let h = rep.params().hbar();
    let half_h = h.mul_ref(&S::from_rational(&Rational::new(1, 2)?));
    let upper = op.t.try_sub(&op.t_inv)?.scale(&half_h).try_sub(&op.h1.scale(h))?;
    GradedMatrix::assemble_blocks(
        fund,
        rep.space(),
        &[(0, 0, op.t.clone()), (1, 1, op.t_inv.clone()), (2, 2, rep.identity()), (0, 1, upper)],
    )
}

/// `R_h` built from the closed form of `T`.
pub fn assemble_rh<S: Field>(rep: &Representation<S>) -> Result<GradedMatrix<S>> {
    let fund = Representation::fundamental(rep.params())?;
    assemble_rh_from(fund.space(), rep, &closed_form_t(rep)?)
}

#[derive(Clone, Debug, Serialize)]
pub struct TwistPipelineResult {
    pub representation: String,
    pub conjugated: GradedMatrix<Scalar>,
    pub valuations: Vec<(usize, usize, i64)>,
    pub min_valuation: Option<i64>,
    pub limit: GradedMatrix<HbarField>,
    pub assembled: GradedMatrix<HbarField>,
    /// The closed-form blocks agree with the blocks of the gauged matrix.
    pub abc_match: bool,
    pub beta_limit_zero: bool,
    pub gamma_limit_zero: bool,
    pub limit_equals_assembled: bool,
}

impl TwistPipelineResult {
    pub fn holds(&self) -> bool {
        self.abc_match && self.beta_limit_zero && self.gamma_limit_zero && self.limit_equals_assembled
    }
}

/// Gauge, take `s -> 1` entrywise and compare with the assembled `R_h`.
pub fn limit_rh(rep: &Representation<Scalar>) -> Result<TwistPipelineResult> {
    let conjugated = conjugated_r(rep)?;
    let valuations = valuations(&conjugated)?;
    let min_valuation = valuations.iter().map(|v| v.2).min();
    if let Some(&(row, col, order)) = valuations.iter().find(|v| v.2 < 0) {
        return Err(Error::PoleAtQ1Entry { row, col, order: -order });
    }
    let limit = limit_matrix(&conjugated)?;

    let fund = Representation::fundamental(rep.params())?;
    let (outer, inner) = (fund.space(), rep.space());
    let abc = abc_blocks(rep)?;
    let abc_match = conjugated.graded_block(outer, inner, 0, 1)? == abc.alpha
        && conjugated.graded_block(outer, inner, 0, 2)? == abc.beta
        && conjugated.graded_block(outer, inner, 1, 2)? == abc.gamma;
    let beta_limit_zero = limit_matrix(&abc.beta)?.is_zero();
    let gamma_limit_zero = limit_matrix(&abc.gamma)?.is_zero();

    let classical = rep.limit_s1()?;
    let assembled = assemble_rh(&classical)?;
    let limit_equals_assembled = limit == assembled;
    Ok(TwistPipelineResult {
        representation: rep.name().to_string(),
        conjugated,
        valuations,
        min_valuation,
        limit,
        assembled,
        abc_match,
        beta_limit_zero,
        gamma_limit_zero,
        limit_equals_assembled,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct RhPropertyReport {
    pub representation: String,
    /// Only when the second slot is the fundamental representation.
    pub ybe: Option<YbeReport<HbarField>>,
    /// `P R_h P R_h` with `P` the graded flip, if both slots agree.
    pub triangularity_is_identity: Option<bool>,
    pub triangularity_product: Option<GradedMatrix<HbarField>>,
    pub identity_at_hbar_zero: bool,
    /// Least `k` with `(R_h - 1)^k = 0`.
    pub nilpotency_index: Option<u32>,
    /// Highest power of `h` in any entry.
    pub hbar_degree: usize,
}

pub fn rh_property_report(rep: &Representation<HbarField>) -> Result<RhPropertyReport> {
    let fund = Representation::fundamental(rep.params())?;
    let rh = assemble_rh(rep)?;
    let square = fund.space() == rep.space();
    let ybe = if square { Some(ybe_check(&rh, rep.space())?) } else { None };
    let triangularity_product = if square {
        let p = GradedMatrix::graded_flip(rep.space(), rep.space());
        Some(GradedMatrix::product(&[&p, &rh, &p, &rh])?)
    } else {
        None
    };
    let at_zero = rh.try_map(|_, _, v| v.eval(&Rational::from(0)))?;
    let identity_at_hbar_zero = at_zero.is_identity();
    let nilpotency_index = rh.try_sub(&GradedMatrix::identity(rh.rows()))?.nilpotency_index();
    let hbar_degree = rh.nonzero_entries().map(|(_, _, v)| v.hbar_degree()).max().unwrap_or(0);
    Ok(RhPropertyReport {
        representation: rep.name().to_string(),
        ybe,
        triangularity_is_identity: triangularity_product.as_ref().map(|m| m.is_identity()),
        triangularity_product,
        identity_at_hbar_zero,
        nilpotency_index,
        hbar_degree,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reps::RepKind;
    use crate::scalars::Params;
    use num_traits::One;

    fn fund() -> Representation<Scalar> {
        RepKind::Fund.build(&Params::exact()).unwrap()
    }

    #[test]
    fn twist_in_fund_is_unipotent() {
        let f = fund();
        let c = Scalar::hbar().try_div(&Scalar::q().sub_ref(&Scalar::one())).unwrap();
        let expected = f.identity().try_add(&f.e1().scale(&c)).unwrap();
        assert_eq!(twist_g(&f).unwrap(), expected);
        let expected_inv = f.identity().try_sub(&f.e1().scale(&c)).unwrap();
        assert_eq!(twist_g_inv(&f).unwrap(), expected_inv);
    }

    #[test]
    fn t_zero_is_identity() {
        assert!(t_alpha_rep(HalfInt::ZERO, &fund()).unwrap().is_identity());
    }

    #[test]
    fn binomial_half() {
        assert_eq!(binomial(&Rational::new(1, 2).unwrap(), 2), Rational::new(-1, 8).unwrap());
        assert_eq!(binomial(&Rational::from(-1), 3), Rational::from(-1));
    }

    #[test]
    fn pole_reports_coordinates() {
        let f = fund();
        let mut m = f.identity();
        m.set(1, 2, Scalar::q().sub_ref(&Scalar::one()).try_inv().unwrap());
        assert_eq!(limit_matrix(&m).unwrap_err(), Error::PoleAtQ1Entry { row: 1, col: 2, order: 1 });
    }
}
