//! Floating-point spot checks: exact matrices evaluated at `(q0, h0)` against the same
//! constructions run directly in `f64`.

use serde::Serialize;

use crate::jordanian::assemble_rh;
use crate::reps::RepKind;
use crate::rmatrix::r_q;
use crate::scalars::{HbarField, Params, Scalar};
use crate::superlinalg::GradedMatrix;
use crate::{Error, Result};

#[derive(Clone, Debug, Serialize)]
pub struct NumericComparison {
    pub label: String,
    pub max_rel_err: f64,
    pub tolerance: f64,
    pub holds: bool,
}

/// Entrywise `|a - b| <= tol * max(|a|, |b|)`. Entries that vanish on one side are
/// measured against the max-norm of the matrix instead, so exact zeros compare against
/// rounding noise at the scale of the matrix.
pub fn compare(label: &str, a: &GradedMatrix<f64>, b: &GradedMatrix<f64>, tol: f64) -> Result<NumericComparison> {
    if a.rows() != b.rows() || a.cols() != b.cols() {
        return Err(Error::DimensionMismatch(format!("{label}: shapes differ")));
    }
    let scale = (0..a.nrows())
        .flat_map(|i| (0..a.ncols()).map(move |j| (i, j)))
        .map(|(i, j)| a.get(i, j).abs().max(b.get(i, j).abs()))
        .fold(0.0, f64::max);
    let mut max_rel_err: f64 = 0.0;
    for i in 0..a.nrows() {
        for j in 0..a.ncols() {
            let (x, y) = (*a.get(i, j), *b.get(i, j));
            let denom = if x == 0.0 || y == 0.0 { scale } else { x.abs().max(y.abs()) };
            if denom > 0.0 {
                max_rel_err = max_rel_err.max((x - y).abs() / denom);
            }
        }
    }
    Ok(NumericComparison { label: label.to_string(), max_rel_err, tolerance: tol, holds: max_rel_err <= tol })
}

pub fn eval_exact(m: &GradedMatrix<Scalar>, q0: f64, h0: f64) -> Result<GradedMatrix<f64>> {
    m.try_map(|_, _, v| v.eval_numeric(q0, h0))
}

pub fn eval_hbar(m: &GradedMatrix<HbarField>, h0: f64) -> Result<GradedMatrix<f64>> {
    m.try_map(|_, _, v| v.eval_numeric(h0))
}

/// `R_q` and `R_h` on `fund (x) rep`: exact then evaluated, against direct `f64` builds.
pub fn spot_check(rep: RepKind, q0: f64, h0: f64, tol: f64) -> Result<Vec<NumericComparison>> {
    let exact = Params::exact();
    let num = Params::numeric(q0, h0)?;
    let (fund_x, rep_x) = (RepKind::Fund.build(&exact)?, rep.build(&exact)?);
    let (fund_n, rep_n) = (RepKind::Fund.build(&num)?, rep.build(&num)?);

    let rq_exact = eval_exact(&r_q(&fund_x, &rep_x)?.r, q0, h0)?;
    let rq_direct = r_q(&fund_n, &rep_n)?.r;
    let rh_exact = eval_hbar(&assemble_rh(&rep_x.limit_s1()?)?, h0)?;
    // R_h lives at q = 1: rebuild the representations there in f64.
    let rh_direct = assemble_rh(&rep.build(&Params::numeric(1.0, h0)?)?)?;
    Ok(vec![
        compare(&format!("R_q fund x {rep}"), &rq_exact, &rq_direct, tol)?,
        compare(&format!("R_h fund x {rep}"), &rh_exact, &rh_direct, tol)?,
    ])
}
