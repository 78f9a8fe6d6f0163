//! The R-matrix `R = R^ K` of `U_q(sl(2|1))` in pairs of representations, its
//! explicit block form on `fund (x) rep`, and the graded Yang-Baxter check.

use serde::Serialize;

use crate::reps::Representation;
use crate::scalars::{q_factorial_asym, Field, Rational};
use crate::superlinalg::{GradedMatrix, GradedSpace};
use crate::uqsl21::Letter;
use crate::{Error, Result};

fn r(n: i64, d: i64) -> Rational {
    Rational::new(n, d).expect("nonzero denominator")
}

/// `K = q^-(h1 (x) h2 + h2 (x) h1 + 2 h2 (x) h2)`, diagonal on `V1 (x) V2`.
pub fn kq<S: Field>(r1: &Representation<S>, r2: &Representation<S>) -> Result<GradedMatrix<S>> {
    let mut diag = Vec::with_capacity(r1.dim() * r2.dim());
    for (a1, a2) in r1.weights() {
        for (b1, b2) in r2.weights() {
            let (a1, a2, b1, b2) = (a1.to_rational(), a2.to_rational(), b1.to_rational(), b2.to_rational());
            let e = a1 * b2.clone() + a2.clone() * b1 + Rational::from(2) * a2 * b2;
            // q^-e = s^(-2e)
            let twice = (e * Rational::from(-2))
                .to_i64()
                .ok_or_else(|| Error::NonIntegralExponent("Cartan factor exponent is not a half-integer".into()))?;
            diag.push(r1.params().s_pow(twice));
        }
    }
    GradedMatrix::diagonal(&r1.space().tensor(r2.space()), diag)
}

/// `exp_q(x) = sum x^n / (n)_q!` for nilpotent `x`.
pub fn exp_q_matrix<S: Field>(x: &GradedMatrix<S>, r1: &Representation<S>) -> Result<GradedMatrix<S>> {
    let p = r1.params();
    x.nilpotent_series(|n| q_factorial_asym(n, p).try_inv())
}

/// `c q^(-a) pi1(x) (x) pi2(y) q^(a)` for a Cartan exponent `a = a1 h1 + a2 h2`.
fn dressed_root_term<S: Field>(
    r1: &Representation<S>,
    r2: &Representation<S>,
    x: Letter,
    y: Letter,
    a: (Rational, Rational),
    c: &S,
) -> Result<GradedMatrix<S>> {
    let left = r1.q_power(&-a.0.clone(), &-a.1.clone())?.try_mul(&r1.letter(x)?)?;
    let right = r2.letter(y)?.try_mul(&r2.q_power(&a.0, &a.1)?)?;
    Ok(left.graded_tensor(&right).scale(c))
}

/// `R^ = exp_q[(q-q^-1) q^(-h1/2) e1 (x) f1 q^(h1/2)]
///       exp_q[-(q-q^-1) q^(-(h1+h2)/2) e3 (x) f3 q^((h1+h2)/2)]
///       exp_q[-(q-q^-1) q^(-h2/2) e2 (x) f2 q^(h2/2)]`.
pub fn rhat<S: Field>(r1: &Representation<S>, r2: &Representation<S>) -> Result<GradedMatrix<S>> {
    let c = r1.params().q_minus_q_inv();
    let minus_c = c.neg_ref();
    let half = r(1, 2);
    let zero = Rational::from(0);
    let x1 = dressed_root_term(r1, r2, Letter::E1, Letter::F1, (half.clone(), zero.clone()), &c)?;
    let x3 = dressed_root_term(r1, r2, Letter::E3, Letter::F3, (half.clone(), half.clone()), &minus_c)?;
    let x2 = dressed_root_term(r1, r2, Letter::E2, Letter::F2, (zero, half), &minus_c)?;
    GradedMatrix::product(&[&exp_q_matrix(&x1, r1)?, &exp_q_matrix(&x3, r1)?, &exp_q_matrix(&x2, r1)?])
}

#[derive(Clone, Debug, Serialize)]
#[serde(bound = "S: Serialize")]
pub struct RMatrixBundle<S: Field> {
    pub reps: (String, String),
    pub kq: GradedMatrix<S>,
    pub rhat: GradedMatrix<S>,
    pub r: GradedMatrix<S>,
}

/// `R = R^ K` on `V1 (x) V2`.
pub fn r_q<S: Field>(r1: &Representation<S>, r2: &Representation<S>) -> Result<RMatrixBundle<S>> {
    let kq = kq(r1, r2)?;
    let rhat = rhat(r1, r2)?;
    let r = rhat.try_mul(&kq)?;
    Ok(RMatrixBundle { reps: (r1.name().to_string(), r2.name().to_string()), kq, rhat, r })
}

/// Blocks of `R` on `fund (x) rep` as operators on `rep`, keyed by fundamental indices.
pub struct FundBlocks<S: Field> {
    pub diag: [GradedMatrix<S>; 3],
    pub a: GradedMatrix<S>,
    pub b: GradedMatrix<S>,
    pub c: GradedMatrix<S>,
}

/// Diagonal blocks `q^-h2, q^(-h1-h2), q^(-h1-2h2)` and
///
/// * `A = (q-q^-1) q^(-1/2) f1 q^(-h1/2-h2)`,
/// * `B = -(q-q^-1)^2 q^-1 f1 q^(h1/2) f2 q^(-h1-3h2/2) - (q-q^-1) q^(-1/2) f3 q^(-h1/2-3h2/2)`,
/// * `C = (q-q^-1) q^(-1/2) f2 q^(-h1-3h2/2)`.
pub fn fund_blocks<S: Field>(rep: &Representation<S>) -> Result<FundBlocks<S>> {
    let p = rep.params();
    let c = p.q_minus_q_inv();
    let s_inv = p.s_pow(-1);
    let qp = |a: Rational, b: Rational| rep.q_power(&a, &b);
    let i = Rational::from;
    let diag = [qp(i(0), i(-1))?, qp(i(-1), i(-1))?, qp(i(-1), i(-2))?];
    let a = rep.f1().try_mul(&qp(r(-1, 2), i(-1))?)?.scale(&c.mul_ref(&s_inv));
    let b1 = GradedMatrix::product(&[rep.f1(), &qp(r(1, 2), i(0))?, rep.f2(), &qp(i(-1), r(-3, 2))?])?
        .scale(&c.mul_ref(&c).mul_ref(&p.q_inv()).neg_ref());
    let b2 = rep.f3().try_mul(&qp(r(-1, 2), r(-3, 2))?)?.scale(&c.mul_ref(&s_inv).neg_ref());
    let b = b1.try_add(&b2)?;
    let cc = rep.f2().try_mul(&qp(i(-1), r(-3, 2))?)?.scale(&c.mul_ref(&s_inv));
    Ok(FundBlocks { diag, a, b, c: cc })
}

/// The explicit block form of `R` on `fund (x) rep`, assembled as `sum E_ij (x) X_ij`
/// with `X_01 = A`, `X_02 = B`, `X_12 = -C`. The sign of the last block is the one
/// that agrees with the general construction and with the gauge-transformed blocks.
pub fn r_fund_arb<S: Field>(fund: &Representation<S>, rep: &Representation<S>) -> Result<GradedMatrix<S>> {
    let blocks = fund_blocks(rep)?;
    let [d0, d1, d2] = blocks.diag;
    GradedMatrix::assemble_blocks(
        fund.space(),
        rep.space(),
        &[(0, 0, d0), (1, 1, d1), (2, 2, d2), (0, 1, blocks.a), (0, 2, blocks.b), (1, 2, blocks.c.neg())],
    )
}

#[derive(Clone, Debug, Serialize)]
#[serde(bound = "S: Serialize")]
pub struct YbeReport<S: Field> {
    pub dim: usize,
    pub residual_nnz: usize,
    pub holds: bool,
    #[serde(skip)]
    pub residual: GradedMatrix<S>,
}

/// `R12 R13 R23 - R23 R13 R12` on `V (x) V (x) V` with graded embeddings.
pub fn ybe_check<S: Field>(r: &GradedMatrix<S>, v: &GradedSpace) -> Result<YbeReport<S>> {
    let r12 = r.embed_12(v);
    let r23 = r.embed_23(v);
    let r13 = r.embed_13(v, v, v)?;
    let lhs = GradedMatrix::product(&[&r12, &r13, &r23])?;
    let rhs = GradedMatrix::product(&[&r23, &r13, &r12])?;
    let residual = lhs.try_sub(&rhs)?;
    Ok(YbeReport { dim: residual.nrows(), residual_nnz: residual.nnz(), holds: residual.is_zero(), residual })
}

#[derive(Clone, Debug, Serialize)]
pub struct IntertwinerVerdict {
    pub generator: String,
    /// `R Delta(x) = Delta'(x) R`.
    pub r_delta_eq_delta_op_r: bool,
    /// `R Delta'(x) = Delta(x) R`.
    pub r_delta_op_eq_delta_r: bool,
}

/// For each generator compare `R` against the coproduct and its graded opposite
/// `Delta' = P Delta P` on `V1 (x) V2`, in both orientations.
pub fn intertwiner_check<S: Field>(
    r: &GradedMatrix<S>,
    r1: &Representation<S>,
    r2: &Representation<S>,
) -> Result<Vec<IntertwinerVerdict>> {
    let t12 = r1.tensor(r2)?;
    let t21 = r2.tensor(r1)?;
    let p12 = GradedMatrix::graded_flip(r1.space(), r2.space());
    let p21 = GradedMatrix::graded_flip(r2.space(), r1.space());
    let gens: [(&str, Letter); 6] = [
        ("e1", Letter::E1),
        ("e2", Letter::E2),
        ("f1", Letter::F1),
        ("f2", Letter::F2),
        ("K(1,0)", Letter::K(crate::uqsl21::CartanMonomial::new(1, 0))),
        ("K(0,1)", Letter::K(crate::uqsl21::CartanMonomial::new(0, 1))),
    ];
    gens.iter()
        .map(|(name, l)| {
            let delta = t12.letter(*l)?;
            let delta_op = GradedMatrix::product(&[&p21, &t21.letter(*l)?, &p12])?;
            let a = r.try_mul(&delta)? == delta_op.try_mul(r)?;
            let b = r.try_mul(&delta_op)? == delta.try_mul(r)?;
            Ok(IntertwinerVerdict { generator: name.to_string(), r_delta_eq_delta_op_r: a, r_delta_op_eq_delta_r: b })
        })
        .collect()
}
