use std::cell::RefCell;
use std::collections::HashMap;
use std::fmt;
use std::rc::Rc;

use crate::arith::{q_integer, q_minus_qinv, RatFunc};

/// PBW monomial `F^f_exp E^e_exp K^k_exp` with `K = q^H`.
///
/// The derived ordering (F power, then E power, then K power) is the
/// canonical term order used for serialization.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct PbwMonomial {
    pub f_exp: u32,
    pub e_exp: u32,
    pub k_exp: i32,
}

impl PbwMonomial {
    pub const ONE: Self = Self { f_exp: 0, e_exp: 0, k_exp: 0 };

    pub const fn new(f_exp: u32, e_exp: u32, k_exp: i32) -> Self {
        Self { f_exp, e_exp, k_exp }
    }

    pub fn is_one(&self) -> bool {
        *self == Self::ONE
    }
}

impl fmt::Debug for PbwMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.f_exp, self.e_exp, self.k_exp)
    }
}

impl fmt::Display for PbwMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// One PBW term with its coefficient.
pub(crate) type Term = (PbwMonomial, RatFunc);

type Cache<K> = RefCell<HashMap<K, Rc<Vec<Term>>>>;

thread_local! {
    static EF_CACHE: Cache<(u32, u32)> = RefCell::new(HashMap::new());
    static MONO_CACHE: Cache<(PbwMonomial, PbwMonomial)> = RefCell::new(HashMap::new());
}

/// PBW form of `E^b F^d`, built from
/// `E F^d = F^d E + [d]_q F^(d-1) (q^(1-d) K^2 - q^(d-1) K^-2) / (q - q^-1)`.
fn e_pow_f_pow(b: u32, d: u32) -> Rc<Vec<Term>> {
    if let Some(hit) = EF_CACHE.with(|c| c.borrow().get(&(b, d)).cloned()) {
        return hit;
    }
    let terms = if b == 0 || d == 0 {
        vec![(PbwMonomial::new(d, b, 0), RatFunc::one())]
    } else {
        let mut acc: HashMap<PbwMonomial, RatFunc> = HashMap::new();
        let mut push = |m: PbwMonomial, c: RatFunc| {
            let slot = acc.entry(m).or_insert_with(RatFunc::zero);
            *slot = &*slot + &c;
        };
        // (E^(b-1) F^d) E: K^z E = q^z E K^z
        for (m, c) in e_pow_f_pow(b - 1, d).iter() {
            push(PbwMonomial::new(m.f_exp, m.e_exp + 1, m.k_exp), c.mul_q_pow(m.k_exp as i64));
        }
        let lead = RatFunc::new(q_integer(d as i64), q_minus_qinv()).unwrap();
        let shift = d as i64 - 1;
        for (m, c) in e_pow_f_pow(b - 1, d - 1).iter() {
            let c = c * &lead;
            push(PbwMonomial::new(m.f_exp, m.e_exp, m.k_exp + 2), c.mul_q_pow(-shift));
            push(PbwMonomial::new(m.f_exp, m.e_exp, m.k_exp - 2), -c.mul_q_pow(shift));
        }
        let mut v: Vec<Term> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        v.sort_by_key(|t| t.0);
        v
    };
    let terms = Rc::new(terms);
    EF_CACHE.with(|c| c.borrow_mut().insert((b, d), terms.clone()));
    terms
}

/// Normal-ordered product of two PBW monomials.
///
/// `F^a E^b K^c . F^d E^e K^f = q^(ce - cd) F^a (E^b F^d) E^e K^(c+f)`, with
/// `E^b F^d` expanded by [`e_pow_f_pow`].
pub(crate) fn mono_mul(x: PbwMonomial, y: PbwMonomial) -> Rc<Vec<Term>> {
    if let Some(hit) = MONO_CACHE.with(|c| c.borrow().get(&(x, y)).cloned()) {
        return hit;
    }
    let base = x.k_exp as i64 * (y.e_exp as i64 - y.f_exp as i64);
    let out: Vec<Term> = e_pow_f_pow(x.e_exp, y.f_exp)
        .iter()
        .map(|(m, c)| {
            let mono = PbwMonomial::new(x.f_exp + m.f_exp, m.e_exp + y.e_exp, m.k_exp + x.k_exp + y.k_exp);
            (mono, c.mul_q_pow(base + m.k_exp as i64 * y.e_exp as i64))
        })
        .collect();
    let out = Rc::new(out);
    MONO_CACHE.with(|c| c.borrow_mut().insert((x, y), out.clone()));
    out
}
