use proptest::prelude::*;
use qaw_core::algebra::{
    casimir, casimir_prefactor, commutator_f_en, coproduct, coproduct_op, extend_coproduct, iterated_coproduct,
    tau_closed_form, tensor_of, AlgebraElement, AlgebraError, PbwMonomial, SymbolicCasimirs, TauArgument,
    TensorElement,
};
use qaw_core::arith::{q_integer, q_minus_qinv, q_plus_qinv, LaurentPoly, RatFunc};

fn e() -> AlgebraElement {
    AlgebraElement::e()
}

fn f() -> AlgebraElement {
    AlgebraElement::f()
}

fn k(n: i32) -> AlgebraElement {
    AlgebraElement::k_pow(n)
}

fn one() -> AlgebraElement {
    AlgebraElement::one()
}

fn over_qmq(num: LaurentPoly) -> RatFunc {
    RatFunc::new(num, q_minus_qinv()).unwrap()
}

fn element_strategy() -> impl Strategy<Value = AlgebraElement> {
    let term = (0u32..=2, 0u32..=2, -2i32..=2, -3i64..=3, -2i64..=2)
        .prop_map(|(f, e, k, c, p)| (PbwMonomial::new(f, e, k), RatFunc::from_int(c).mul_q_pow(p)));
    prop::collection::vec(term, 1..4).prop_map(AlgebraElement::from_terms)
}

/// Product of a word in E, F, K^+-1 computed letter by letter.
fn word(letters: &str) -> AlgebraElement {
    letters.chars().fold(one(), |acc, ch| {
        let g = match ch {
            'E' => e(),
            'F' => f(),
            'K' => k(1),
            'k' => k(-1),
            _ => panic!("unknown letter {ch}"),
        };
        acc.mul(&g)
    })
}

#[test]
fn ef_reorders_through_cartan_term() {
    let expected = AlgebraElement::from_terms([
        (PbwMonomial::new(1, 1, 0), RatFunc::one()),
        (PbwMonomial::new(0, 0, 2), over_qmq(LaurentPoly::one())),
        (PbwMonomial::new(0, 0, -2), -over_qmq(LaurentPoly::one())),
    ]);
    assert_eq!(e().mul(&f()), expected);
}

#[test]
fn k_moves_past_e_and_f() {
    assert_eq!(k(1).mul(&e()), e().mul(&k(1)).scale(&RatFunc::q_pow(1)));
    assert_eq!(k(1).mul(&f()), f().mul(&k(1)).scale(&RatFunc::q_pow(-1)));
    assert_eq!(k(3).mul(&k(-3)), one());
}

#[test]
fn f_e_power_commutator_small_cases() {
    let n1 = AlgebraElement::from_terms([
        (PbwMonomial::new(0, 0, -2), over_qmq(LaurentPoly::one())),
        (PbwMonomial::new(0, 0, 2), -over_qmq(LaurentPoly::one())),
    ]);
    assert_eq!(commutator_f_en(1), n1);

    // [2]_q / (q - q^-1) (q K^-2 - q^-1 K^2) E
    let lead = over_qmq(q_integer(2));
    let n2 = k(-2).scale(&lead.mul_q_pow(1)).sub(&k(2).scale(&lead.mul_q_pow(-1))).mul(&e());
    assert_eq!(commutator_f_en(2), n2);
}

#[test]
fn f_e_power_commutator_matches_word_ordering() {
    for n in 1..=5u32 {
        let en = "E".repeat(n as usize);
        let direct = word(&format!("F{en}")).sub(&word(&format!("{en}F")));
        assert_eq!(commutator_f_en(n), direct, "n = {n}");
    }
}

#[test]
fn casimir_coefficients_and_centrality() {
    let c = casimir();
    assert_eq!(c.coeff(PbwMonomial::new(1, 1, 0)), RatFunc::new(-q_minus_qinv().pow(2), q_plus_qinv()).unwrap());
    assert_eq!(c.coeff(PbwMonomial::new(0, 0, 2)), -RatFunc::new(LaurentPoly::q_pow(1), q_plus_qinv()).unwrap());
    assert_eq!(c.coeff(PbwMonomial::new(0, 0, -2)), -RatFunc::new(LaurentPoly::q_pow(-1), q_plus_qinv()).unwrap());
    for x in [e(), f(), k(1), k(-1)] {
        assert!(c.commutator(&x).is_zero());
    }
}

#[test]
fn casimir_golden_text() {
    // -q/(q+q^-1) = -s^4/(1+s^4); the FE coefficient is multiplied through by s^2
    let expected = "\
(-1*s^0)/(1*s^0 + 1*s^4) :: (0,0,-2)\n\
(-1*s^4)/(1*s^0 + 1*s^4) :: (0,0,2)\n\
(-1*s^-2 + 2*s^2 + -1*s^6)/(1*s^0 + 1*s^4) :: (1,1,0)\n";
    assert_eq!(casimir().canonical_text(), expected);
}

#[test]
fn coproduct_examples() {
    assert_eq!(coproduct(&k(1)), k(1).tensor(&k(1)));
    assert_eq!(coproduct(&e()), e().tensor(&k(-1)).add(&k(1).tensor(&e())).unwrap());
    assert_eq!(coproduct(&f()), f().tensor(&k(-1)).add(&k(1).tensor(&f())).unwrap());
    assert_eq!(coproduct(&one()), TensorElement::one(2));

    assert_eq!(coproduct_op(&k(1)), k(1).tensor(&k(1)));
    assert_eq!(coproduct_op(&e()), k(-1).tensor(&e()).add(&e().tensor(&k(1))).unwrap());
}

#[test]
fn casimir_coproduct_differs_from_opposite() {
    let c = casimir();
    let diff = coproduct(&c).sub(&coproduct_op(&c)).unwrap();
    assert!(!diff.is_zero());
    // C (x) K^-2 contributes the FE (x) K^-2 term on one side only
    let key = [PbwMonomial::new(1, 1, 0), PbwMonomial::new(0, 0, -2)];
    assert_eq!(diff.coeff(&key), casimir_prefactor());
}

#[test]
fn extend_coproduct_patterns() {
    let c = casimir();
    assert_eq!(extend_coproduct(&c, &[1], 3).unwrap(), tensor_of(&[&c, &one(), &one()]));

    let c13 = extend_coproduct(&c, &[1, 3], 3).unwrap();
    assert_eq!(c13, coproduct(&c).place(&[0, 2], 3).unwrap());

    let full = extend_coproduct(&c, &[1, 2, 3], 3).unwrap();
    let right = qaw_core::algebra::apply_coproduct_at(&coproduct(&c), 1).unwrap();
    assert_eq!(full, right);
    assert_eq!(full, iterated_coproduct(&c, 3));

    assert!(matches!(extend_coproduct(&c, &[0], 3), Err(AlgebraError::InvalidPattern(_))));
    assert!(extend_coproduct(&c, &[1, 1], 3).is_err());
    assert!(extend_coproduct(&c, &[4], 3).is_err());
}

#[test]
fn tau_closed_forms() {
    let c = casimir();
    assert_eq!(tau_closed_form(&c).unwrap(), one().tensor(&c));

    let kinv_e = k(-1).mul(&e());
    assert_eq!(tau_closed_form(&kinv_e).unwrap(), k(-2).tensor(&kinv_e));

    let qq2 = RatFunc::from_poly(q_minus_qinv().pow(2));
    let expected = one().tensor(&k(-2)).sub(&k(-1).mul(&f()).tensor(&kinv_e).scale(&qq2)).unwrap();
    assert_eq!(tau_closed_form(&k(-2)).unwrap(), expected);

    assert_eq!(tau_closed_form(&e()), Err(AlgebraError::UnsupportedTauArgument));
    for arg in TauArgument::ALL {
        assert_eq!(tau_closed_form(&arg.element()).unwrap().arity(), 2);
    }
}

#[test]
fn q_commutator_of_element_with_itself() {
    let x = casimir().add(&e().mul(&f()));
    let t = x.as_tensor();
    let expected = t.normal_order_mul(t).unwrap().scale(&RatFunc::from_poly(q_minus_qinv()));
    assert_eq!(t.q_commutator(t).unwrap(), expected);
}

#[test]
fn symbolic_first_relation_vanishes() {
    let residual = SymbolicCasimirs::build().aw31_residual().unwrap();
    assert!(residual.is_zero(), "{}", residual.canonical_text());
}

#[test]
fn first_relation_detects_wrong_middle_term() {
    let mut cas = SymbolicCasimirs::build();
    cas.c13_zero = cas.c13.clone();
    assert!(!cas.aw31_residual().unwrap().is_zero());
}

#[test]
fn mismatched_arity_is_an_error() {
    let a = TensorElement::one(2);
    let b = TensorElement::one(3);
    assert!(matches!(a.add(&b), Err(AlgebraError::ArityMismatch { .. })));
    assert!(a.normal_order_mul(&b).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn multiplication_is_associative(x in element_strategy(), y in element_strategy(), z in element_strategy()) {
        prop_assert_eq!(x.mul(&y).mul(&z), x.mul(&y.mul(&z)));
    }

    #[test]
    fn multiplication_distributes(x in element_strategy(), y in element_strategy(), z in element_strategy()) {
        prop_assert_eq!(x.mul(&y.add(&z)), x.mul(&y).add(&x.mul(&z)));
    }

    #[test]
    fn unit_law(x in element_strategy()) {
        prop_assert_eq!(x.mul(&one()), x.clone());
        prop_assert_eq!(one().mul(&x), x);
    }

    #[test]
    fn casimir_commutes_with_everything(x in element_strategy()) {
        prop_assert!(casimir().commutator(&x).is_zero());
    }

    #[test]
    fn coproduct_is_multiplicative(x in element_strategy(), y in element_strategy()) {
        let lhs = coproduct(&x.mul(&y));
        let rhs = coproduct(&x).normal_order_mul(&coproduct(&y)).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn coproduct_is_coassociative(x in element_strategy()) {
        let d = coproduct(&x);
        let left = qaw_core::algebra::apply_coproduct_at(&d, 0).unwrap();
        let right = qaw_core::algebra::apply_coproduct_at(&d, 1).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn tensor_products_multiply_legwise(a in element_strategy(), b in element_strategy(), c in element_strategy(), d in element_strategy()) {
        let lhs = a.tensor(&b).normal_order_mul(&c.tensor(&d)).unwrap();
        prop_assert_eq!(lhs, a.mul(&c).tensor(&b.mul(&d)));
    }

    #[test]
    fn swap_is_an_involution(a in element_strategy(), b in element_strategy()) {
        let t = a.tensor(&b);
        prop_assert_eq!(t.swap_legs(0, 1), b.tensor(&a));
        prop_assert_eq!(t.swap_legs(0, 1).swap_legs(0, 1), t);
    }
}
