//! Worked examples with hand-derived expected values.

use num_traits::{One, Zero};

use superjordan::jordanian::{abc_blocks, assemble_rh, closed_form_t, conjugated_r, t_alpha_rep, twist_g, verify_identities_rep};
use superjordan::rmatrix::{intertwiner_check, r_q};
use superjordan::uqsl21::{Identity, Letter};
use superjordan::{Field, GradedMatrix, GradedSpace, HalfInt, HbarField, Params, Parity, RepKind, Representation, Scalar};

fn exact(kind: RepKind) -> Representation<Scalar> {
    kind.build(&Params::exact()).unwrap()
}

fn unit<S: Field>(rep: &Representation<S>, i: usize, j: usize) -> GradedMatrix<S> {
    GradedMatrix::unit(rep.space(), i, j)
}

#[test]
fn embed_13_of_flip_is_the_signed_outer_swap() {
    let v = GradedSpace::super_dim(2, 1).unwrap();
    let p = GradedMatrix::<Scalar>::graded_flip(&v, &v);
    let e13 = p.embed_13(&v, &v, &v).unwrap();
    let bit = |i: usize| v.parity(i).bit() as usize;
    for i in 0..3 {
        for j in 0..3 {
            for k in 0..3 {
                // reversing three factors swaps every pair
                let sign = (bit(i) * bit(j) + bit(i) * bit(k) + bit(j) * bit(k)) % 2;
                let expected = if sign == 1 { -Scalar::one() } else { Scalar::one() };
                let (col, row) = (9 * i + 3 * j + k, 9 * k + 3 * j + i);
                assert_eq!(e13.get(row, col), &expected, "({i},{j},{k})");
            }
        }
    }
    assert_eq!(e13.nnz(), 27);
}

#[test]
fn tensor_square_image_of_e1() {
    let f = exact(RepKind::Fund);
    let f2 = exact(RepKind::Fund2);
    let s = Scalar::s();
    let half_k = GradedMatrix::diagonal(f.space(), vec![s.clone(), s.try_inv().unwrap(), Scalar::one()]).unwrap();
    let half_k_inv = GradedMatrix::diagonal(f.space(), vec![s.try_inv().unwrap(), s.clone(), Scalar::one()]).unwrap();
    let expected = unit(&f, 0, 1).graded_tensor(&half_k).try_add(&half_k_inv.graded_tensor(&unit(&f, 0, 1))).unwrap();
    assert_eq!(f2.e1(), &expected);
    assert_eq!(f2.weights()[0], (HalfInt::from_int(2), HalfInt::ZERO));
}

#[test]
fn cartan_image_in_fund() {
    let f = exact(RepKind::Fund);
    let k1 = f.letter(Letter::K(superjordan::uqsl21::CartanMonomial::new(2, 0))).unwrap();
    let expected = GradedMatrix::diagonal(f.space(), vec![Scalar::q(), Scalar::q_pow(-1), Scalar::one()]).unwrap();
    assert_eq!(k1, expected);
}

#[test]
fn r_matrix_corner_and_determinant() {
    let f = exact(RepKind::Fund);
    let r = r_q(&f, &f).unwrap().r;
    assert!(r.get(0, 0).is_one());
    // a unit of Q(h)[s, 1/s] is c s^k
    let det = r.determinant().unwrap();
    assert!(det.denom().as_monomial().is_some() && det.numer().as_monomial().is_some(), "{det}");
}

#[test]
fn cartan_generators_intertwine_both_ways_and_identity_fails_for_e1() {
    let f = exact(RepKind::Fund);
    let r = r_q(&f, &f).unwrap().r;
    for v in intertwiner_check(&r, &f, &f).unwrap() {
        if v.generator.starts_with('K') {
            assert!(v.r_delta_eq_delta_op_r && v.r_delta_op_eq_delta_r);
        } else {
            assert!(v.r_delta_eq_delta_op_r && !v.r_delta_op_eq_delta_r, "{}", v.generator);
        }
    }
    let id = GradedMatrix::identity(r.rows());
    let e1 = intertwiner_check(&id, &f, &f).unwrap().into_iter().find(|v| v.generator == "e1").unwrap();
    assert!(!e1.r_delta_eq_delta_op_r && !e1.r_delta_op_eq_delta_r);
}

#[test]
fn t_alpha_in_fund_is_unipotent() {
    let f = exact(RepKind::Fund);
    for twice in [-2, -1, 1, 2, 4] {
        let alpha = HalfInt::from_twice(twice);
        let c = Scalar::s_pow(twice).sub_ref(&Scalar::one()).try_div(&Scalar::q().sub_ref(&Scalar::one())).unwrap();
        let expected = f.identity().try_add(&unit(&f, 0, 1).scale(&Scalar::hbar().mul_ref(&c))).unwrap();
        assert_eq!(t_alpha_rep(alpha, &f).unwrap(), expected, "alpha = {alpha}");
    }
}

#[test]
fn twist_in_fund2_stops_at_second_order() {
    let f2 = exact(RepKind::Fund2);
    assert_eq!(f2.e1().nilpotency_index(), Some(3));
    let g = twist_g(&f2).unwrap();
    let top = g.nonzero_entries().map(|(_, _, v)| v.numer().coeffs().iter().map(|c| c.hbar_degree()).max().unwrap_or(0)).max();
    assert_eq!(top, Some(2));
}

#[test]
fn f2_conjugation_in_fund() {
    let f = exact(RepKind::Fund);
    let v = verify_identities_rep(&f, &[Identity::F2Conjugation, Identity::H2Conjugation { beta: HalfInt::ZERO }]).unwrap();
    assert!(v.iter().all(|v| v.holds));
}

#[test]
fn gauge_keeps_last_diagonal_block_and_gamma() {
    let f = exact(RepKind::Fund);
    let out = f.space();
    let conj = conjugated_r(&f).unwrap();
    let g = twist_g(&f).unwrap();
    let last = f.q_power(&(-1).into(), &(-2).into()).unwrap();
    let expected = GradedMatrix::product(&[&g.try_inverse().unwrap(), &last, &g]).unwrap();
    assert_eq!(conj.graded_block(out, f.space(), 2, 2).unwrap(), expected);
    assert_eq!(conj.graded_block(out, f.space(), 1, 2).unwrap(), abc_blocks(&f).unwrap().gamma);
    for (i, j) in [(1, 0), (2, 0), (2, 1)] {
        assert!(conj.graded_block(out, f.space(), i, j).unwrap().is_zero());
    }
}

#[test]
fn gauge_is_trivial_at_zero_deformation() {
    let f = exact(RepKind::Fund2);
    let zero = superjordan::Rational::from(0);
    let at0 = |m: &GradedMatrix<Scalar>| m.try_map(|_, _, v| v.subs_hbar(&zero)).unwrap();
    let fund = exact(RepKind::Fund);
    assert_eq!(at0(&conjugated_r(&f).unwrap()), at0(&superjordan::rmatrix::r_fund_arb(&fund, &f).unwrap()));
}

#[test]
fn assembled_rh_in_fund() {
    let f = RepKind::Fund.build(&Params::classical()).unwrap();
    let h = HbarField::hbar();
    let t = closed_form_t(&f).unwrap();
    let expected_t = f.identity().try_add(&unit(&f, 0, 1).scale(&h)).unwrap();
    assert_eq!(t.t, expected_t);
    let rh = assemble_rh(&f).unwrap();
    let alpha = rh.graded_block(f.space(), f.space(), 0, 1).unwrap();
    let h1 = GradedMatrix::diagonal(f.space(), vec![HbarField::one(), -HbarField::one(), HbarField::zero()]).unwrap();
    let expected = h1.scale(&-h.clone()).try_add(&unit(&f, 0, 1).scale(&h.mul_ref(&h))).unwrap();
    assert_eq!(alpha, expected);
    for (i, j) in [(0, 2), (1, 2)] {
        assert!(rh.graded_block(f.space(), f.space(), i, j).unwrap().is_zero());
    }
    assert_eq!(rh.parity(), Some(Parity::Even));
}
