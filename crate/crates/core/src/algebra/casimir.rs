use super::element::AlgebraElement;
use super::pbw::PbwMonomial;
use crate::arith::{q_integer, q_minus_qinv, q_plus_qinv, LaurentPoly, RatFunc};

/// `-(q - q^-1)^2 / (q + q^-1)`, the overall prefactor of the Casimir.
pub fn casimir_prefactor() -> RatFunc {
    RatFunc::new(-q_minus_qinv().pow(2), q_plus_qinv()).unwrap()
}

/// `C = -((q - q^-1)^2 / (q + q^-1)) (F E + (q K^2 + q^-1 K^-2) / (q - q^-1)^2)`
/// in PBW form.
pub fn casimir() -> AlgebraElement {
    let qp = q_plus_qinv();
    AlgebraElement::from_terms([
        (PbwMonomial::new(1, 1, 0), casimir_prefactor()),
        (PbwMonomial::new(0, 0, 2), -RatFunc::new(LaurentPoly::q_pow(1), qp.clone()).unwrap()),
        (PbwMonomial::new(0, 0, -2), -RatFunc::new(LaurentPoly::q_pow(-1), qp).unwrap()),
    ])
}

/// Closed form of `[F, E^n] = ([n]_q / (q - q^-1)) (q^(n-1) K^-2 - q^(1-n) K^2) E^(n-1)`,
/// written directly in PBW order (`K^c E^m = q^(cm) E^m K^c`).
pub fn commutator_f_en(n: u32) -> AlgebraElement {
    assert!(n >= 1, "[F, E^n] needs n >= 1");
    let m = n - 1;
    let lead = RatFunc::new(q_integer(n as i64), q_minus_qinv()).unwrap();
    let shift = m as i64;
    AlgebraElement::from_terms([
        (PbwMonomial::new(0, m, -2), lead.mul_q_pow(-shift)),
        (PbwMonomial::new(0, m, 2), -lead.mul_q_pow(shift)),
    ])
}
