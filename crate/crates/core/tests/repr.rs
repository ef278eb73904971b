use proptest::prelude::*;
use qaw_core::algebra::{casimir, coproduct, coproduct_op, AlgebraElement, PbwMonomial, TensorElement};
use qaw_core::arith::{q_integer, q_plus_qinv, Exact, LaurentPoly, RatFunc, SamplePoint};
use qaw_core::repr::{
    casimir_on, intermediate_casimirs, matrix_inverse, r_matrix, r_tilde, r_tilde_both_ways,
    series_term_beyond_truncation, spin_module, swap_map, Braiding, ReprError, SparseMatrix, TensorContext,
};

type M = SparseMatrix<RatFunc>;

fn ctx(spins: &[u32]) -> TensorContext<Exact> {
    TensorContext::new(spins, Exact).unwrap()
}

fn s_pow(k: i64) -> RatFunc {
    RatFunc::from_poly(LaurentPoly::s_pow(k))
}

fn qint(n: i64) -> RatFunc {
    RatFunc::from_poly(q_integer(n))
}

/// `-(q^(2j+1) + q^-(2j+1)) / (q + q^-1)`: the Casimir on a highest-weight
/// vector, where `F E` acts as zero and `K^{+-2}` as `q^{+-2j}`.
fn casimir_oracle(two_j: u32) -> RatFunc {
    let e = 2 + 2 * two_j as i64;
    let num = &LaurentPoly::s_pow(e) + &LaurentPoly::s_pow(-e);
    -RatFunc::new(num, q_plus_qinv()).unwrap()
}

fn element_strategy() -> impl Strategy<Value = AlgebraElement> {
    let term = (0u32..=2, 0u32..=2, -2i32..=2, -2i64..=2, -1i64..=1)
        .prop_map(|(f, e, k, c, p)| (PbwMonomial::new(f, e, k), RatFunc::from_int(c).mul_q_pow(p)));
    prop::collection::vec(term, 1..3).prop_map(AlgebraElement::from_terms)
}

fn two_leg_strategy() -> impl Strategy<Value = TensorElement> {
    prop::collection::vec((element_strategy(), element_strategy()), 1..3)
        .prop_map(|pairs| pairs.into_iter().fold(TensorElement::zero(2), |acc, (a, b)| acc.add(&a.tensor(&b)).unwrap()))
}

#[test]
fn spin_module_examples() {
    let trivial = spin_module(0);
    assert_eq!(trivial.dim(), 1);
    assert!(trivial.e().is_zero() && trivial.f().is_zero());
    assert!(trivial.k().is_identity());

    let half = spin_module(1);
    assert_eq!(half.e().nnz(), 1);
    assert!(half.e().entry(0, 1).is_one());
    assert!(half.f().entry(1, 0).is_one());
    assert_eq!(half.k().entry(0, 0), LaurentPoly::s_pow(1));
    assert_eq!(half.k().entry(1, 1), LaurentPoly::s_pow(-1));

    let one = spin_module(2);
    assert_eq!(one.e().nnz(), 2);
    assert_eq!(one.e().entry(0, 1), q_integer(1));
    assert_eq!(one.e().entry(1, 2), q_integer(2));
}

#[test]
fn spin_modules_satisfy_relations() {
    for two_j in 0..=8 {
        let m = spin_module(two_j);
        for (name, r) in m.relation_residuals() {
            assert!(r.is_zero(), "two_j = {two_j}: {name}");
        }
    }
}

#[test]
fn casimir_scalar_matches_highest_weight_oracle() {
    for two_j in 0..=6u32 {
        let c = ctx(&[two_j]);
        let m = casimir_on(&c, &[1]).unwrap();
        assert_eq!(m.scalar_value(), Some(casimir_oracle(two_j)), "two_j = {two_j}");
    }
    let trivial = casimir_on(&ctx(&[0]), &[1]).unwrap();
    assert_eq!(trivial.scalar_value(), Some(RatFunc::from_int(-1)));
}

#[test]
fn r_matrix_spin_half_pair() {
    let c = ctx(&[1, 1]);
    let r = r_matrix(&c, 0, 1).unwrap();
    // basis ++, +-, -+, --; diagonal s^{(2 m_a)(2 m_b)}
    let expected = M::from_entries(
        4,
        4,
        [
            (0, 0, s_pow(1)),
            (1, 1, s_pow(-1)),
            (2, 2, s_pow(-1)),
            (3, 3, s_pow(1)),
            // D . (q - q^-1) E K (x) K^-1 F on |-+>: s^-1 (s^2 - s^-2)
            (1, 2, &s_pow(1) - &s_pow(-3)),
        ],
    );
    assert_eq!(r, expected);

    let rt = r_tilde(&c, 0, 1).unwrap();
    let p = swap_map::<RatFunc>(2, 2);
    assert_eq!(rt, p.mul(&r).mul(&p));
}

#[test]
fn r_matrix_with_trivial_leg_is_identity() {
    for spins in [[0, 0], [0, 3], [2, 0]] {
        let c = ctx(&spins);
        assert!(r_matrix(&c, 0, 1).unwrap().is_identity(), "{spins:?}");
        assert!(r_tilde(&c, 0, 1).unwrap().is_identity(), "{spins:?}");
    }
}

#[test]
fn r_matrix_intertwines_coproducts() {
    for spins in [[1, 1], [1, 2], [2, 1], [2, 3]] {
        let c = ctx(&spins);
        let r = r_matrix(&c, 0, 1).unwrap();
        let rt = r_tilde(&c, 0, 1).unwrap();
        for x in [AlgebraElement::e(), AlgebraElement::f(), AlgebraElement::k_pow(1), casimir()] {
            let d = c.represent(&coproduct(&x)).unwrap();
            let dop = c.represent(&coproduct_op(&x)).unwrap();
            assert!(d.mul(&r).sub(&r.mul(&dop)).is_zero(), "{spins:?}");
            assert!(dop.mul(&rt).sub(&rt.mul(&d)).is_zero(), "{spins:?}");
        }
    }
}

#[test]
fn r_tilde_constructions_agree() {
    for spins in [[2, 1], [1, 3], [2, 2]] {
        let (swapped, series) = r_tilde_both_ways(&ctx(&spins), 0, 1).unwrap();
        assert_eq!(swapped, series, "{spins:?}");
    }
}

#[test]
fn yang_baxter_on_three_legs() {
    for spins in [[1, 1, 1], [1, 2, 1], [2, 1, 2]] {
        let c = ctx(&spins);
        let br = Braiding::new(&c).unwrap();
        let lhs = br.r(0, 1).mul(br.r(0, 2)).mul(br.r(1, 2));
        let rhs = br.r(1, 2).mul(br.r(0, 2)).mul(br.r(0, 1));
        assert_eq!(lhs, rhs, "{spins:?}");
    }
}

#[test]
fn series_vanishes_past_truncation() {
    for spins in [[1, 1], [2, 1], [1, 2], [2, 2], [3, 1]] {
        let (r_term, theta_term) = series_term_beyond_truncation(&ctx(&spins), 0, 1).unwrap();
        assert!(r_term.is_zero() && theta_term.is_zero(), "{spins:?}");
    }
}

#[test]
fn inverses() {
    let id = M::identity(3);
    assert!(matrix_inverse(&id).unwrap().is_identity());

    let d = M::diag(vec![s_pow(2), s_pow(-1), qint(2)]);
    let inv = matrix_inverse(&d).unwrap();
    assert_eq!(inv, M::diag(vec![s_pow(-2), s_pow(1), qint(2).inv().unwrap()]));

    let r = r_matrix(&ctx(&[1, 1]), 0, 1).unwrap();
    assert!(r.mul(&matrix_inverse(&r).unwrap()).is_identity());

    let singular = M::from_entries(2, 2, [(0, 0, RatFunc::one()), (0, 1, RatFunc::one())]);
    assert!(matches!(matrix_inverse(&singular), Err(ReprError::Singular)));
    assert!(matches!(matrix_inverse(&M::zeros(2, 3)), Err(ReprError::NotSquare { .. })));
}

#[test]
fn swap_examples() {
    let trivial = swap_map::<RatFunc>(1, 1);
    assert!(trivial.is_identity());
    let p = swap_map::<RatFunc>(2, 3);
    let back = swap_map::<RatFunc>(3, 2);
    assert!(back.mul(&p).is_identity());

    let c12 = ctx(&[1, 2]);
    let c21 = ctx(&[2, 1]);
    let x = AlgebraElement::e().mul(&AlgebraElement::k_pow(1));
    let y = AlgebraElement::f();
    let xy = c12.represent(&x.tensor(&y)).unwrap();
    let yx = c21.represent(&y.tensor(&x)).unwrap();
    assert_eq!(p.mul(&xy).mul(&p.transpose()), yx);
}

#[test]
fn trivial_legs_are_transparent() {
    for two_j in [1, 2, 3] {
        let c = ctx(&[two_j, 0, 0]);
        let br = Braiding::new(&c).unwrap();
        let cas = intermediate_casimirs(&c, &br).unwrap();
        for m in [&cas.c12, &cas.c13, &cas.c13_zero.0, &cas.c13_zero.1, &cas.c13_one.0, &cas.c13_one.1] {
            assert_eq!(m, &cas.c1, "two_j = {two_j}");
        }
    }
}

#[test]
fn intermediate_casimirs_agree_and_are_conjugate() {
    let c = ctx(&[1, 1, 1]);
    let br = Braiding::new(&c).unwrap();
    let cas = intermediate_casimirs(&c, &br).unwrap();
    assert_eq!(cas.c13_zero.0, cas.c13_zero.1);
    assert_eq!(cas.c13_one.0, cas.c13_one.1);
    let u = br.r(1, 2).mul(br.rt(1, 2));
    let u_inv = matrix_inverse(&u).unwrap();
    assert_eq!(cas.c13_one.0, u.mul(&cas.c13_zero.0).mul(&u_inv));
}

#[test]
fn evaluation_context_matches_exact_entries() {
    let pt = SamplePoint::from_ratio(3, 5).unwrap();
    let exact = ctx(&[1, 2]);
    let at = TensorContext::new(&[1, 2], pt.clone()).unwrap();
    let x = coproduct(&casimir());
    let m_exact = exact.represent(&x).unwrap();
    let m_at = at.represent(&x).unwrap();
    let lifted = m_exact.try_map(|v| v.eval_at(pt.value())).unwrap();
    assert_eq!(lifted, m_at);
}

#[test]
fn arity_and_context_errors() {
    assert!(matches!(TensorContext::new(&[], Exact), Err(ReprError::EmptyContext)));
    let c = ctx(&[1, 1]);
    let wrong = AlgebraElement::e().into_tensor();
    assert!(matches!(c.represent(&wrong), Err(ReprError::ArityMismatch { expected: 2, found: 1 })));
    assert!(r_matrix(&c, 1, 0).is_err());
    assert!(matches!(ctx(&[0, 0]).with_perturbed_e(), Err(ReprError::NothingToPerturb)));
    assert!(matches!(ctx(&[1, 2]).permutation_operator(0, 1), Err(ReprError::UnequalDimensions { .. })));
}

#[test]
fn perturbed_context_breaks_relations() {
    let c = ctx(&[1]).with_perturbed_e().unwrap();
    let ef = c.represent(&AlgebraElement::e().mul(&AlgebraElement::f()).into_tensor()).unwrap();
    let direct = c.leg(0).e.mul(&c.leg(0).f);
    assert_ne!(ef, direct);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn represent_is_multiplicative(x in two_leg_strategy(), y in two_leg_strategy()) {
        let c = ctx(&[1, 2]);
        let lhs = c.represent(&x.normal_order_mul(&y).unwrap()).unwrap();
        let rhs = c.represent(&x).unwrap().mul(&c.represent(&y).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn represent_is_additive(x in two_leg_strategy(), y in two_leg_strategy()) {
        let c = ctx(&[2, 1]);
        let lhs = c.represent(&x.add(&y).unwrap()).unwrap();
        prop_assert_eq!(lhs, c.represent(&x).unwrap().add(&c.represent(&y).unwrap()));
    }

    #[test]
    fn casimir_matrix_commutes_with_generators(two_j in 0u32..=5) {
        let c = ctx(&[two_j]);
        let cas = casimir_on(&c, &[1]).unwrap();
        let leg = c.leg(0);
        for g in [&leg.e, &leg.f, &leg.k] {
            prop_assert!(cas.commutator(g).is_zero());
        }
    }
}
