//! q-integers and q-factorials.
//!
//! Two conventions are used side by side:
//!
//! * `(n)_q = (1 - q^n)/(1 - q) = 1 + q + ... + q^(n-1)` for the `exp_q` factors of
//!   the universal R-matrix;
//! * `[n] = (q^n - q^(-n))/(q - q^(-1)) = q^(n-1) + q^(n-3) + ... + q^(1-n)` for the
//!   twist `E_q`.
//!
//! Both are computed as the Laurent sums on the right so they are division-free and
//! stay valid at `q = 1`.

use super::{Field, Params};

pub fn q_number_asym<S: Field>(n: u32, p: &Params<S>) -> S {
    (0..n as i64).fold(S::zero(), |acc, k| acc.add_ref(&p.q_pow(k)))
}

pub fn q_number_sym<S: Field>(n: u32, p: &Params<S>) -> S {
    let n = n as i64;
    (0..n).fold(S::zero(), |acc, k| acc.add_ref(&p.s_pow(2 * (n - 1 - 2 * k))))
}

pub fn q_factorial_asym<S: Field>(n: u32, p: &Params<S>) -> S {
    (1..=n).fold(S::one(), |acc, k| acc.mul_ref(&q_number_asym(k, p)))
}

pub fn q_factorial_sym<S: Field>(n: u32, p: &Params<S>) -> S {
    (1..=n).fold(S::one(), |acc, k| acc.mul_ref(&q_number_sym(k, p)))
}
