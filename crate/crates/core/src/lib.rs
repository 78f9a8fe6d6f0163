//! Exact verification workbench for the quantum superalgebra `U_q(sl(2|1))`, its
//! R-matrices in small graded representations, and the Jordanian contraction
//! `q -> 1` that produces the super-Jordanian `R_h`.
//!
//! The linear-algebra layers are generic over the coefficient [`Field`]; the exact
//! coefficient field is [`Scalar`] = `Q(h)(s)` with `s = q^(1/2)`, and `f64` is used
//! for floating-point spot checks.

pub mod error;
pub mod jordanian;
pub mod numeric;
pub mod reps;
pub mod rmatrix;
pub mod scalars;
pub mod superlinalg;
pub mod uqsl21;

pub use error::{Error, Result};
pub use scalars::{Field, HalfInt, HbarField, Params, Poly, RatFunc, Rational, Scalar};
pub use reps::{RepKind, Representation};
pub use superlinalg::{GradedMatrix, GradedSpace, Parity};

/// Exact graded matrix over `Q(h)(s)`.
pub type Matrix = GradedMatrix<Scalar>;
/// Graded matrix over the classical-limit field `Q(h)`.
pub type HbarMatrix = GradedMatrix<HbarField>;
/// Floating-point graded matrix.
pub type NumMatrix = GradedMatrix<f64>;
