use std::collections::BTreeMap;
use std::fmt;

use super::pbw::{mono_mul, PbwMonomial};
use super::AlgebraError;
use crate::arith::RatFunc;

/// Key of a tensor term: one PBW monomial per leg.
pub type TensorKey = Vec<PbwMonomial>;

/// Finite linear combination of `n`-fold tensor products of PBW monomials
/// with rational-function coefficients. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq)]
pub struct TensorElement {
    arity: usize,
    terms: BTreeMap<TensorKey, RatFunc>,
}

impl TensorElement {
    pub fn zero(arity: usize) -> Self {
        assert!(arity >= 1, "tensor arity must be positive");
        Self { arity, terms: BTreeMap::new() }
    }

    pub fn one(arity: usize) -> Self {
        Self::monomial(vec![PbwMonomial::ONE; arity], RatFunc::one())
    }

    pub fn scalar(arity: usize, c: RatFunc) -> Self {
        Self::monomial(vec![PbwMonomial::ONE; arity], c)
    }

    pub fn monomial(key: TensorKey, coeff: RatFunc) -> Self {
        let mut t = Self::zero(key.len());
        t.add_term(key, coeff);
        t
    }

    /// Collects terms, merging repeated keys. All keys must have the same length.
    pub fn from_terms(
        arity: usize,
        terms: impl IntoIterator<Item = (TensorKey, RatFunc)>,
    ) -> Result<Self, AlgebraError> {
        let mut t = Self::zero(arity);
        for (k, c) in terms {
            if k.len() != arity {
                return Err(AlgebraError::ArityMismatch { left: arity, right: k.len() });
            }
            t.add_term(k, c);
        }
        Ok(t)
    }

    pub(crate) fn add_term(&mut self, key: TensorKey, coeff: RatFunc) {
        debug_assert_eq!(key.len(), self.arity);
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + &coeff;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&TensorKey, &RatFunc)> {
        self.terms.iter()
    }

    pub fn coeff(&self, key: &[PbwMonomial]) -> RatFunc {
        self.terms.get(key).cloned().unwrap_or_else(RatFunc::zero)
    }

    fn check_arity(&self, other: &Self) -> Result<(), AlgebraError> {
        if self.arity != other.arity {
            return Err(AlgebraError::ArityMismatch { left: self.arity, right: other.arity });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check_arity(other)?;
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&RatFunc::from_int(-1))
    }

    pub fn scale(&self, c: &RatFunc) -> Self {
        if c.is_zero() {
            return Self::zero(self.arity);
        }
        Self { arity: self.arity, terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect() }
    }

    /// Product reduced to PBW normal form in every leg.
    pub fn normal_order_mul(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check_arity(other)?;
        let mut acc: BTreeMap<TensorKey, Vec<RatFunc>> = BTreeMap::new();
        for (kx, cx) in &self.terms {
            for (ky, cy) in &other.terms {
                let coeff = cx * cy;
                let legs: Vec<_> = kx.iter().zip(ky).map(|(a, b)| mono_mul(*a, *b)).collect();
                // cartesian product over the per-leg expansions
                let mut partial: Vec<(TensorKey, RatFunc)> = vec![(Vec::with_capacity(self.arity), coeff)];
                for leg in &legs {
                    let mut next = Vec::with_capacity(partial.len() * leg.len());
                    for (key, c) in &partial {
                        for (m, lc) in leg.iter() {
                            let mut k = key.clone();
                            k.push(*m);
                            next.push((k, c * lc));
                        }
                    }
                    partial = next;
                }
                for (k, c) in partial {
                    acc.entry(k).or_default().push(c);
                }
            }
        }
        let mut out = Self::zero(self.arity);
        for (k, cs) in acc {
            let sum = RatFunc::sum(cs);
            if !sum.is_zero() {
                out.terms.insert(k, sum);
            }
        }
        Ok(out)
    }

    /// `q x y - q^-1 y x`
    pub fn q_commutator(&self, other: &Self) -> Result<Self, AlgebraError> {
        let xy = self.normal_order_mul(other)?.scale(&RatFunc::q_pow(1));
        let yx = other.normal_order_mul(self)?.scale(&RatFunc::q_pow(-1));
        xy.sub(&yx)
    }

    /// `x y - y x`
    pub fn commutator(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.normal_order_mul(other)?.sub(&other.normal_order_mul(self)?)
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one(self.arity);
        for _ in 0..n {
            acc = acc.normal_order_mul(self).expect("same arity");
        }
        acc
    }

    /// Tensor product `self (x) other`, concatenating legs.
    pub fn tensor(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.arity + other.arity);
        for (ka, ca) in &self.terms {
            for (kb, cb) in &other.terms {
                let mut k = ka.clone();
                k.extend_from_slice(kb);
                out.add_term(k, ca * cb);
            }
        }
        out
    }

    /// Places leg `i` of `self` on leg `legs[i]` (0-based) of an `arity`-fold
    /// tensor, filling the remaining legs with 1.
    pub fn place(&self, legs: &[usize], arity: usize) -> Result<Self, AlgebraError> {
        validate_legs(legs, arity)?;
        if legs.len() != self.arity {
            return Err(AlgebraError::ArityMismatch { left: self.arity, right: legs.len() });
        }
        let mut out = Self::zero(arity);
        for (k, c) in &self.terms {
            let mut key = vec![PbwMonomial::ONE; arity];
            for (m, &leg) in k.iter().zip(legs) {
                key[leg] = *m;
            }
            out.terms.insert(key, c.clone());
        }
        Ok(out)
    }

    /// Swaps two legs (0-based).
    pub fn swap_legs(&self, a: usize, b: usize) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(k, c)| {
                let mut k = k.clone();
                k.swap(a, b);
                (k, c.clone())
            })
            .collect();
        Self { arity: self.arity, terms }
    }

    /// One line per term: `coeff :: (a1,b1,c1)|(a2,b2,c2)|...`, in term order.
    pub fn canonical_text(&self) -> String {
        let mut s = String::new();
        for (k, c) in &self.terms {
            s.push_str(&c.canonical_text());
            s.push_str(" :: ");
            for (i, m) in k.iter().enumerate() {
                if i > 0 {
                    s.push('|');
                }
                s.push_str(&m.to_string());
            }
            s.push('\n');
        }
        s
    }

    /// Largest window of K exponents appearing in any leg.
    pub fn k_exponent_range(&self) -> Option<(i32, i32)> {
        let mut it = self.terms.keys().flat_map(|k| k.iter().map(|m| m.k_exp));
        let first = it.next()?;
        Some(it.fold((first, first), |(lo, hi), k| (lo.min(k), hi.max(k))))
    }
}

pub(crate) fn validate_legs(legs: &[usize], arity: usize) -> Result<(), AlgebraError> {
    if legs.is_empty() {
        return Err(AlgebraError::InvalidPattern("empty leg pattern".into()));
    }
    for (i, &l) in legs.iter().enumerate() {
        if l >= arity {
            return Err(AlgebraError::InvalidPattern(format!("leg {} out of range for arity {arity}", l + 1)));
        }
        if legs[..i].contains(&l) {
            return Err(AlgebraError::InvalidPattern(format!("leg {} repeated", l + 1)));
        }
    }
    Ok(())
}

impl fmt::Debug for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TensorElement[arity {}]\n{}", self.arity, self.canonical_text())
    }
}

/// Element of `U_q(sl2)` itself: a tensor element of arity 1.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AlgebraElement(TensorElement);

impl AlgebraElement {
    pub fn zero() -> Self {
        Self(TensorElement::zero(1))
    }

    pub fn one() -> Self {
        Self(TensorElement::one(1))
    }

    pub fn scalar(c: RatFunc) -> Self {
        Self(TensorElement::scalar(1, c))
    }

    pub fn monomial(m: PbwMonomial, c: RatFunc) -> Self {
        Self(TensorElement::monomial(vec![m], c))
    }

    /// `F^f E^e K^k` with coefficient 1.
    pub fn pbw(f: u32, e: u32, k: i32) -> Self {
        Self::monomial(PbwMonomial::new(f, e, k), RatFunc::one())
    }

    pub fn e() -> Self {
        Self::pbw(0, 1, 0)
    }

    pub fn f() -> Self {
        Self::pbw(1, 0, 0)
    }

    /// `K^k = q^(kH)`
    pub fn k_pow(k: i32) -> Self {
        Self::pbw(0, 0, k)
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (PbwMonomial, RatFunc)>) -> Self {
        let t = TensorElement::from_terms(1, terms.into_iter().map(|(m, c)| (vec![m], c))).expect("single-leg keys");
        Self(t)
    }

    pub fn terms(&self) -> impl Iterator<Item = (PbwMonomial, &RatFunc)> {
        self.0.terms().map(|(k, c)| (k[0], c))
    }

    pub fn coeff(&self, m: PbwMonomial) -> RatFunc {
        self.0.coeff(&[m])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn as_tensor(&self) -> &TensorElement {
        &self.0
    }

    pub fn into_tensor(self) -> TensorElement {
        self.0
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self(self.0.normal_order_mul(&other.0).expect("arity 1"))
    }

    pub fn add(&self, other: &Self) -> Self {
        Self(self.0.add(&other.0).expect("arity 1"))
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self(self.0.sub(&other.0).expect("arity 1"))
    }

    pub fn scale(&self, c: &RatFunc) -> Self {
        Self(self.0.scale(c))
    }

    pub fn pow(&self, n: u32) -> Self {
        Self(self.0.pow(n))
    }

    pub fn commutator(&self, other: &Self) -> Self {
        Self(self.0.commutator(&other.0).expect("arity 1"))
    }

    /// `self (x) other` as a two-leg element.
    pub fn tensor(&self, other: &Self) -> TensorElement {
        self.0.tensor(&other.0)
    }

    pub fn canonical_text(&self) -> String {
        self.0.canonical_text()
    }
}

impl TryFrom<TensorElement> for AlgebraElement {
    type Error = AlgebraError;

    fn try_from(t: TensorElement) -> Result<Self, AlgebraError> {
        if t.arity() != 1 {
            return Err(AlgebraError::ArityMismatch { left: 1, right: t.arity() });
        }
        Ok(Self(t))
    }
}

/// Tensor product of single-leg elements, leg order as given.
pub fn tensor_of(factors: &[&AlgebraElement]) -> TensorElement {
    let mut it = factors.iter();
    let first = it.next().expect("at least one factor").as_tensor().clone();
    it.fold(first, |acc, f| acc.tensor(f.as_tensor()))
}
