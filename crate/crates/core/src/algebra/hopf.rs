//! Coproduct `Delta(E) = E (x) K^-1 + K (x) E`, `Delta(F) = F (x) K^-1 + K (x) F`,
//! `Delta(K) = K (x) K`, extended multiplicatively.

use std::cell::RefCell;
use std::collections::HashMap;

use super::element::{validate_legs, AlgebraElement, TensorElement};
use super::pbw::PbwMonomial;
use super::AlgebraError;

thread_local! {
    static DELTA_CACHE: RefCell<HashMap<PbwMonomial, TensorElement>> = RefCell::new(HashMap::new());
}

fn delta_generator_e() -> TensorElement {
    AlgebraElement::e()
        .tensor(&AlgebraElement::k_pow(-1))
        .add(&AlgebraElement::k_pow(1).tensor(&AlgebraElement::e()))
        .unwrap()
}

fn delta_generator_f() -> TensorElement {
    AlgebraElement::f()
        .tensor(&AlgebraElement::k_pow(-1))
        .add(&AlgebraElement::k_pow(1).tensor(&AlgebraElement::f()))
        .unwrap()
}

fn delta_monomial(m: PbwMonomial) -> TensorElement {
    if let Some(hit) = DELTA_CACHE.with(|c| c.borrow().get(&m).cloned()) {
        return hit;
    }
    let k = AlgebraElement::k_pow(m.k_exp);
    let out = delta_generator_f()
        .pow(m.f_exp)
        .normal_order_mul(&delta_generator_e().pow(m.e_exp))
        .and_then(|x| x.normal_order_mul(&k.tensor(&k)))
        .expect("two-leg products");
    DELTA_CACHE.with(|c| c.borrow_mut().insert(m, out.clone()));
    out
}

/// `Delta(x)` as a two-leg element.
pub fn coproduct(x: &AlgebraElement) -> TensorElement {
    apply_coproduct_at(x.as_tensor(), 0).expect("leg 0 exists")
}

/// `Delta^op(x)`: the coproduct with its two legs swapped.
pub fn coproduct_op(x: &AlgebraElement) -> TensorElement {
    coproduct(x).swap_legs(0, 1)
}

/// Applies `Delta` to leg `leg` (0-based) of `t`, producing arity `n + 1`.
pub fn apply_coproduct_at(t: &TensorElement, leg: usize) -> Result<TensorElement, AlgebraError> {
    if leg >= t.arity() {
        return Err(AlgebraError::InvalidPattern(format!("leg {} out of range for arity {}", leg + 1, t.arity())));
    }
    let mut out = TensorElement::zero(t.arity() + 1);
    for (key, c) in t.terms() {
        let split = delta_monomial(key[leg]);
        for (pair, dc) in split.terms() {
            let mut k = Vec::with_capacity(key.len() + 1);
            k.extend_from_slice(&key[..leg]);
            k.extend_from_slice(pair);
            k.extend_from_slice(&key[leg + 1..]);
            out.add_term(k, c * dc);
        }
    }
    Ok(out)
}

/// Iterated coproduct `(Delta (x) id ... ) ... Delta(x)` with `k` legs.
pub fn iterated_coproduct(x: &AlgebraElement, k: usize) -> TensorElement {
    let mut t = x.as_tensor().clone();
    for _ in 1..k {
        t = apply_coproduct_at(&t, 0).expect("leg 0 exists");
    }
    t
}

/// Distributes the Sweedler components of `x` over tensor legs.
///
/// `pattern` lists 1-based legs of an `n`-fold tensor; its length selects
/// the iterated coproduct. `{1}` of 3 gives `x (x) 1 (x) 1`, `{1,3}` of 3
/// gives `x_(1) (x) 1 (x) x_(2)`, `{1,2,3}` gives `(Delta (x) id) Delta(x)`.
pub fn extend_coproduct(x: &AlgebraElement, pattern: &[usize], n: usize) -> Result<TensorElement, AlgebraError> {
    if n == 0 {
        return Err(AlgebraError::InvalidPattern("tensor arity must be positive".into()));
    }
    if pattern.contains(&0) {
        return Err(AlgebraError::InvalidPattern("legs are numbered from 1".into()));
    }
    let legs: Vec<usize> = pattern.iter().map(|l| l - 1).collect();
    validate_legs(&legs, n)?;
    iterated_coproduct(x, legs.len()).place(&legs, n)
}
