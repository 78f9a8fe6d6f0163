use num_traits::{One, Zero};
use proptest::prelude::*;

use superjordan::reps::RepKind;
use superjordan::superlinalg::{GradedMatrix, GradedSpace, Parity};
use superjordan::uqsl21::{coproduct, verify_identity, AlgebraElement, CartanMonomial, Identity, Letter, TensorElement};
use superjordan::{Field, HalfInt, HbarField, Params, Rational, Representation, Scalar};

fn config(cases: u32) -> ProptestConfig {
    ProptestConfig { cases, ..ProptestConfig::default() }
}

// ---- scalars ----

/// `sum c_ij s^i h^j` with small integer coefficients.
fn small_poly() -> impl Strategy<Value = Scalar> {
    prop::collection::vec(-3i64..=3, 6).prop_map(|c| {
        let mut acc = Scalar::from_i64(0);
        for (k, &cij) in c.iter().enumerate() {
            let (i, j) = (k / 2, k % 2);
            let term = Scalar::s_pow(i as i64).mul_ref(&Scalar::hbar().powi(j as i64).unwrap());
            acc = acc.add_ref(&term.mul_ref(&Scalar::from_i64(cij)));
        }
        acc
    })
}

fn scalar() -> impl Strategy<Value = Scalar> {
    (small_poly(), small_poly())
        .prop_filter("nonzero denominator", |(_, d)| !d.is_zero())
        .prop_map(|(n, d)| n.try_div(&d).unwrap())
}

proptest! {
    #![proptest_config(config(48))]

    #[test]
    fn field_laws(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(a.mul_ref(&b).mul_ref(&c), a.mul_ref(&b.mul_ref(&c)));
        prop_assert_eq!(a.add_ref(&b).add_ref(&c), a.add_ref(&b.add_ref(&c)));
        prop_assert_eq!(a.add_ref(&b).mul_ref(&c), a.mul_ref(&c).add_ref(&b.mul_ref(&c)));
        prop_assert_eq!(a.mul_ref(&b), b.mul_ref(&a));
        if !a.is_zero() {
            prop_assert!(a.mul_ref(&a.try_inv().unwrap()).is_one());
        }
    }

    #[test]
    fn canonical_forms(a in scalar(), b in scalar()) {
        prop_assert!(a.sub_ref(&a).is_zero());
        // the same value reached along two different routes
        let x = a.add_ref(&b).sub_ref(&b);
        prop_assert_eq!(format!("{x}"), format!("{a}"));
        prop_assert_eq!(x, a);
    }

    /// The limit at `s = 1` is the value approached by `q -> 1`. The error of a function
    /// that is smooth at `q = 1` is first order in `q - 1`, so it must drop by about ten
    /// when the offset does.
    #[test]
    fn limit_is_approached(a in scalar(), h0 in 0.1f64..0.9) {
        prop_assume!(a.order_at_s1().map_or(false, |k| k >= 0));
        let limit = a.limit_s1().unwrap().eval_numeric(h0);
        prop_assume!(limit.is_ok());
        let limit = limit.unwrap();
        let err = |d: f64| a.eval_numeric(1.0 + d, h0).map(|v| (v - limit).abs());
        let (Ok(far), Ok(near)) = (err(1e-4), err(1e-5)) else { return Ok(()) };
        let scale = 1.0 + limit.abs();
        prop_assert!(near <= 1e-8 * scale || near <= 0.2 * far + 1e-9 * scale, "far {far:e} near {near:e}");
    }
}

// ---- graded matrices ----

fn fund_space() -> GradedSpace {
    GradedSpace::super_dim(2, 1).unwrap()
}

/// A parity-homogeneous 3x3 matrix over `Q` on `C^(2|1)`.
fn homogeneous() -> impl Strategy<Value = GradedMatrix<Rational>> {
    (any::<bool>(), prop::collection::vec(-4i64..=4, 9)).prop_map(|(odd, vals)| {
        let v = fund_space();
        let p = if odd { Parity::Odd } else { Parity::Even };
        GradedMatrix::from_fn(&v, &v, |i, j| {
            if v.parity(i) + v.parity(j) == p {
                Rational::from(vals[3 * i + j])
            } else {
                Rational::from(0)
            }
        })
    })
}

fn sign_of(a: &GradedMatrix<Rational>, b: &GradedMatrix<Rational>) -> Rational {
    let odd = |m: &GradedMatrix<Rational>| m.parity() == Some(Parity::Odd);
    Rational::from(if odd(a) && odd(b) { -1 } else { 1 })
}

proptest! {
    #![proptest_config(config(64))]

    #[test]
    fn tensor_is_associative(a in homogeneous(), b in homogeneous(), c in homogeneous()) {
        let left = a.graded_tensor(&b).graded_tensor(&c);
        let right = a.graded_tensor(&b.graded_tensor(&c));
        prop_assert_eq!(left, right);
    }

    #[test]
    fn super_interchange(a in homogeneous(), b in homogeneous(), c in homogeneous(), d in homogeneous()) {
        let lhs = a.graded_tensor(&b).try_mul(&c.graded_tensor(&d)).unwrap();
        let rhs = a.try_mul(&c).unwrap().graded_tensor(&b.try_mul(&d).unwrap()).scale(&sign_of(&b, &c));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn flip_swaps_factors(a in homogeneous(), b in homogeneous()) {
        let v = fund_space();
        let p = GradedMatrix::<Rational>::graded_flip(&v, &v);
        let swapped = GradedMatrix::product(&[&p, &a.graded_tensor(&b), &p]).unwrap();
        prop_assert_eq!(swapped, b.graded_tensor(&a).scale(&sign_of(&a, &b)));
    }
}

// ---- the algebra ----

fn letter() -> impl Strategy<Value = Letter> {
    prop_oneof![
        Just(Letter::E1),
        Just(Letter::E2),
        Just(Letter::E3),
        Just(Letter::F1),
        Just(Letter::F2),
        Just(Letter::F3),
        (-2i64..=2, -2i64..=2).prop_map(|(a, b)| Letter::K(CartanMonomial::new(a, b))),
    ]
}

fn word(max: usize) -> impl Strategy<Value = Vec<Letter>> {
    prop::collection::vec(letter(), 1..=max)
}

proptest! {
    #![proptest_config(config(32))]

    #[test]
    fn multiplication_is_associative(x in word(3), y in word(3), z in word(3)) {
        let (x, y, z) = (AlgebraElement::word(&x), AlgebraElement::word(&y), AlgebraElement::word(&z));
        prop_assert_eq!(x.mul(&y).mul(&z), x.mul(&y.mul(&z)));
    }

    #[test]
    fn coproduct_is_multiplicative(x in word(3), y in word(3)) {
        let (x, y) = (AlgebraElement::word(&x), AlgebraElement::word(&y));
        let lhs: TensorElement = coproduct(&x.mul(&y));
        prop_assert!(lhs.sub(&coproduct(&x).mul(&coproduct(&y))).is_zero());
    }

    #[test]
    fn evaluation_is_multiplicative(x in word(4), y in word(4)) {
        let rep = RepKind::Fund2.build(&Params::exact()).unwrap();
        let (x, y) = (AlgebraElement::word(&x), AlgebraElement::word(&y));
        let lhs = rep.evaluate(&x.mul(&y)).unwrap();
        let rhs = rep.evaluate(&x).unwrap().try_mul(&rep.evaluate(&y).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}

#[test]
fn serre_relations_normalize_to_zero() {
    let q_sum = Scalar::q().add_ref(&Scalar::q_pow(-1));
    for (x, y) in [(AlgebraElement::e1(), AlgebraElement::e2()), (AlgebraElement::f1(), AlgebraElement::f2())] {
        let serre = x.mul(&x).mul(&y).sub(&x.mul(&y).mul(&x).scale(&q_sum)).add(&y.mul(&x).mul(&x));
        assert!(serre.is_zero(), "{serre:?}");
        assert!(y.mul(&y).is_zero());
    }
}

#[test]
fn group_law_on_named_pairs() {
    let pairs = [(2, 2), (2, -2), (1, 1)];
    for (a, b) in pairs {
        let id = Identity::TGroupLaw { alpha: HalfInt::from_twice(a), beta: HalfInt::from_twice(b) };
        assert!(verify_identity(id, 4).unwrap().holds, "{id}");
    }
}

// ---- representations ----

#[test]
fn odd_generators_anticommute_in_images() {
    let rep = RepKind::Fund2.build(&Params::exact()).unwrap();
    for (x, y) in [(rep.e2().clone(), rep.e2().clone()), (rep.f2().clone(), rep.f2().clone())] {
        assert!(x.try_mul(&y).unwrap().is_zero());
    }
    let (e2, f2) = (rep.e2(), rep.f2());
    let anti = e2.try_mul(f2).unwrap().try_add(&f2.try_mul(e2).unwrap()).unwrap();
    let p = rep.params();
    let bracket = rep.cartan(0, 2).unwrap().try_sub(&rep.cartan(0, -2).unwrap()).unwrap().scale(&p.q_minus_q_inv().try_inv().unwrap());
    assert_eq!(anti, bracket);
}

#[test]
fn tensor_representation_is_coassociative() {
    let f = Representation::fundamental(&Params::exact()).unwrap();
    let left = f.tensor(&f).unwrap().tensor(&f).unwrap();
    let right = f.tensor(&f.tensor(&f).unwrap()).unwrap();
    for l in [Letter::E1, Letter::E2, Letter::F1, Letter::F2] {
        assert_eq!(left.letter(l).unwrap(), right.letter(l).unwrap(), "{l}");
    }
    assert_eq!(left.weights(), right.weights());
}

// ---- R-matrices ----

#[test]
fn cartan_factor_commutes_with_cartan_images() {
    let p = Params::exact();
    let (f, f2) = (RepKind::Fund.build(&p).unwrap(), RepKind::Fund2.build(&p).unwrap());
    let k = superjordan::rmatrix::kq(&f, &f2).unwrap();
    let t = f.tensor(&f2).unwrap();
    for (a, b) in [(1, 0), (0, 1), (2, -1)] {
        let c = t.cartan(a, b).unwrap();
        assert_eq!(k.try_mul(&c).unwrap(), c.try_mul(&k).unwrap());
    }
}

/// Every nonzero entry of `R^ - 1` raises the weight of the first factor by a nonzero
/// nonnegative combination of the simple roots.
#[test]
fn rhat_is_unit_triangular_by_weight() {
    let p = Params::exact();
    let (f, f2) = (RepKind::Fund.build(&p).unwrap(), RepKind::Fund2.build(&p).unwrap());
    let rhat = superjordan::rmatrix::rhat(&f, &f2).unwrap();
    let n = f2.dim();
    let w = |i: usize| {
        let (a, b) = f.weights()[i / n];
        (a.twice(), b.twice())
    };
    for i in 0..rhat.nrows() {
        assert!(rhat.get(i, i).is_one());
    }
    for (i, j, _) in rhat.try_sub(&GradedMatrix::identity(rhat.rows())).unwrap().nonzero_entries() {
        let (d1, d2) = (w(i).0 - w(j).0, w(i).1 - w(j).1);
        // d = x (2, -1) + y (-1, 0), in doubled units
        let x = -d2;
        let y = 2 * x - d1;
        assert!(x >= 0 && y >= 0 && x + y > 0, "entry ({i}, {j}) moves weight by ({d1}, {d2})");
    }
}

// ---- contraction ----

#[test]
fn limit_of_twisted_difference_gives_t_relation() {
    for kind in [RepKind::Fund, RepKind::Fund2] {
        let rep = kind.build(&Params::exact()).unwrap();
        let report = superjordan::jordanian::t_limit(&rep).unwrap();
        let classical = rep.limit_s1().unwrap();
        let (t, t_inv) = (&report.operator.t, &report.operator.t_inv);
        let lhs = t.try_mul(t).unwrap().try_sub(&t_inv.try_mul(t_inv).unwrap()).unwrap();
        let two_h = HbarField::hbar().mul_ref(&HbarField::from_i64(2));
        let rhs = t.try_add(t_inv).unwrap().try_mul(classical.e1()).unwrap().scale(&two_h);
        assert_eq!(lhs, rhs, "{kind}");
    }
}
