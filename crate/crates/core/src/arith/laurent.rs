use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Integer Laurent polynomial in the formal variable `s`, where `q = s^2`.
///
/// Terms are kept sorted by ascending exponent with no zero coefficients, so
/// structural equality is mathematical equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: Vec<(i64, BigInt)>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(BigInt::one(), 0)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c.into(), 0)
    }

    pub fn monomial(coeff: BigInt, exp: i64) -> Self {
        if coeff.is_zero() {
            Self::zero()
        } else {
            Self { terms: vec![(exp, coeff)] }
        }
    }

    /// `s^exp`
    pub fn s_pow(exp: i64) -> Self {
        Self::monomial(BigInt::one(), exp)
    }

    /// `q^exp = s^(2 exp)`
    pub fn q_pow(exp: i64) -> Self {
        Self::s_pow(2 * exp)
    }

    /// Builds a polynomial from arbitrary `(exponent, coefficient)` pairs,
    /// merging duplicates and dropping zeros.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut v: Vec<(i64, BigInt)> = terms.into_iter().map(|(e, c)| (e, c.into())).collect();
        v.sort_by_key(|t| t.0);
        Self::from_sorted(v)
    }

    fn from_sorted(v: Vec<(i64, BigInt)>) -> Self {
        let mut out: Vec<(i64, BigInt)> = Vec::with_capacity(v.len());
        for (e, c) in v {
            match out.last_mut() {
                Some((le, lc)) if *le == e => *lc += c,
                _ => out.push((e, c)),
            }
            if out.last().is_some_and(|t| t.1.is_zero()) {
                out.pop();
            }
        }
        Self { terms: out }
    }

    pub(crate) fn from_dense(low: i64, coeffs: Vec<BigInt>) -> Self {
        let terms =
            coeffs.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (low + i as i64, c)).collect();
        Self { terms }
    }

    /// Dense coefficients starting at `min_exp`; empty for zero.
    pub(crate) fn to_dense(&self) -> Vec<BigInt> {
        let (lo, hi) = match (self.min_exp(), self.max_exp()) {
            (Some(lo), Some(hi)) => (lo, hi),
            _ => return Vec::new(),
        };
        let mut v = vec![BigInt::zero(); (hi - lo + 1) as usize];
        for (e, c) in &self.terms {
            v[(e - lo) as usize] = c.clone();
        }
        v
    }

    pub fn terms(&self) -> &[(i64, BigInt)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == 0 && self.terms[0].1.is_one()
    }

    /// True for a single term `c * s^e`.
    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.first().map(|t| t.0)
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.last().map(|t| t.0)
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.terms.last().map(|t| &t.1)
    }

    /// Multiplies by `s^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self { terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect() }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect() }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Value at `s = s0`; `None` if a negative power meets `s0 = 0`.
    pub fn eval(&self, s0: &BigRational) -> Option<BigRational> {
        if self.is_zero() {
            return Some(BigRational::zero());
        }
        if s0.is_zero() && self.min_exp().unwrap() < 0 {
            return None;
        }
        let mut acc = BigRational::zero();
        for (e, c) in &self.terms {
            let p = if *e >= 0 {
                num_traits::pow(s0.clone(), *e as usize)
            } else {
                num_traits::pow(s0.recip(), (-*e) as usize)
            };
            acc += p * BigRational::from_integer(c.clone());
        }
        Some(acc)
    }

    /// Canonical text: `3*s^-2 + 1*s^4`, ascending exponents, every term
    /// written as `c*s^e`; `0` for zero.
    pub fn canonical_text(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{c}*s^{e}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

fn merge(a: &[(i64, BigInt)], b: &[(i64, BigInt)], negate_b: bool) -> LaurentPoly {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    let nb = |c: &BigInt| if negate_b { -c } else { c.clone() };
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i].clone());
            i += 1;
        } else if i == a.len() || b[j].0 < a[i].0 {
            out.push((b[j].0, nb(&b[j].1)));
            j += 1;
        } else {
            let c = if negate_b { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
            if !c.is_zero() {
                out.push((a[i].0, c));
            }
            i += 1;
            j += 1;
        }
    }
    LaurentPoly { terms: out }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        merge(&self.terms, &rhs.terms, false)
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        merge(&self.terms, &rhs.terms, true)
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        if rhs.terms.len() == 1 {
            let (e, c) = &rhs.terms[0];
            return LaurentPoly { terms: self.terms.iter().map(|(x, d)| (x + e, d * c)).collect() };
        }
        if self.terms.len() == 1 {
            return rhs * self;
        }
        // dense convolution over the exponent window
        let lo = self.min_exp().unwrap() + rhs.min_exp().unwrap();
        let hi = self.max_exp().unwrap() + rhs.max_exp().unwrap();
        let mut acc = vec![BigInt::zero(); (hi - lo + 1) as usize];
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                acc[(ea + eb - lo) as usize] += ca * cb;
            }
        }
        LaurentPoly::from_dense(lo, acc)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect() }
    }
}

macro_rules! forward_owned {
    ($ty:ty, $($tr:ident $m:ident),*) => {$(
        impl $tr for $ty {
            type Output = $ty;
            fn $m(self, rhs: $ty) -> $ty { (&self).$m(&rhs) }
        }
        impl $tr<&$ty> for $ty {
            type Output = $ty;
            fn $m(self, rhs: &$ty) -> $ty { (&self).$m(rhs) }
        }
    )*};
}
pub(crate) use forward_owned;

forward_owned!(LaurentPoly, Add add, Sub sub, Mul mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

impl LaurentPoly {
    /// Sign of the leading coefficient (0 for zero).
    pub(crate) fn leading_sign(&self) -> i32 {
        match self.leading_coeff() {
            None => 0,
            Some(c) if c.is_negative() => -1,
            Some(_) => 1,
        }
    }
}
