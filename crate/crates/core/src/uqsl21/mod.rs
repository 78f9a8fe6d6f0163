//! The quantum superalgebra `U_q(sl(2|1))` in PBW normal form.
//!
//! Generators `e1, e2, f1, f2` with `e2, f2` odd, composite root vectors
//! `e3 = e1 e2 - q^-1 e2 e1` and `f3 = f2 f1 - q f1 f2`, and Cartan monomials
//! `K(c1, c2) = q^((c1 h1 + c2 h2)/2)`. Products are straightened into the order
//! `f1^a f3^b f2^c K e2^d e3^e e1^g` by a memoized rewrite engine.

mod element;
mod hopf;
mod identities;
mod monomial;
mod series;

pub use element::AlgebraElement;
pub use hopf::{antipode, antipode_contraction, coproduct, counit, TensorElement};
pub use identities::{standard_values, verify_identity, Identity, IdentityContext, IdentityVerdict};
pub use monomial::{CartanMonomial, Letter, PBWMonomial};
pub use series::{t_alpha_series, t_alpha_with, twist_argument, twist_series, Dressed, HSeries};
