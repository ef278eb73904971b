use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::laurent::{forward_owned, LaurentPoly};
use super::{poly, ArithError};

/// Rational function `num / den` in `s`, always stored in canonical form:
///
/// * `den` is an ordinary polynomial with a nonzero constant term (its
///   smallest exponent is 0; any power of `s` lives in `num`),
/// * `num` and `den` are coprime in `Z[s, s^-1]` including integer content,
/// * the leading coefficient of `den` is positive, and zero is `0 / 1`.
///
/// Canonical forms make equality structural.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RatFunc {
    pub fn zero() -> Self {
        Self { num: LaurentPoly::zero(), den: LaurentPoly::one() }
    }

    pub fn one() -> Self {
        Self::from_poly(LaurentPoly::one())
    }

    pub fn from_int(c: i64) -> Self {
        Self::from_poly(LaurentPoly::constant(c))
    }

    /// `q^k`
    pub fn q_pow(k: i64) -> Self {
        Self::from_poly(LaurentPoly::q_pow(k))
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        Self { num: p, den: LaurentPoly::one() }
    }

    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self, ArithError> {
        if den.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        Ok(Self::canonical(num, den))
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denominator(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True when the denominator is 1.
    /// Sum of many values; terms sharing a denominator are added without
    /// cross-multiplication.
    pub fn sum(mut cs: Vec<RatFunc>) -> RatFunc {
        if cs.len() == 1 {
            return cs.pop().unwrap();
        }
        let mut by_den: Vec<(LaurentPoly, LaurentPoly)> = Vec::new();
        for c in cs {
            match by_den.iter_mut().find(|(d, _)| *d == c.den) {
                Some((_, n)) => *n = &*n + &c.num,
                None => by_den.push((c.den, c.num)),
            }
        }
        by_den
            .into_iter()
            .map(|(d, n)| RatFunc::new(n, d).expect("nonzero denominator"))
            .fold(RatFunc::zero(), |acc, x| &acc + &x)
    }

    pub fn is_laurent(&self) -> bool {
        self.den.is_one()
    }

    fn canonical(num: LaurentPoly, den: LaurentPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let shift = den.min_exp().unwrap();
        let (mut num, mut den) = if shift != 0 { (num.shift(-shift), den.shift(-shift)) } else { (num, den) };
        if den.is_monomial() {
            // den = c: only integer content can cancel
            let c = den.leading_coeff().unwrap().clone();
            let g = poly::content(&num.to_dense()).gcd(&c);
            let mut d = c / &g;
            let mut n = if g.is_one() { num } else { scalar_div(&num, &g) };
            if d < BigInt::zero() {
                d = -d;
                n = -n;
            }
            return Self { num: n, den: LaurentPoly::constant(d) };
        }
        // s does not divide den, so the gcd only sees num / s^min_exp
        let nlow = num.min_exp().unwrap();
        let nd = num.to_dense();
        let dd = den.to_dense();
        let g = poly::gcd(&nd, &dd);
        if !poly::is_one(&g) {
            num = LaurentPoly::from_dense(nlow, poly::div_exact(&nd, &g));
            den = LaurentPoly::from_dense(0, poly::div_exact(&dd, &g));
        }
        if den.leading_sign() < 0 {
            num = -num;
            den = -den;
        }
        Self { num, den }
    }

    /// Multiplies by `c * s^k` without a gcd pass.
    pub fn mul_monomial(&self, c: &BigInt, k: i64) -> Self {
        if c.is_zero() || self.is_zero() {
            return Self::zero();
        }
        let num = self.num.scale(c).shift(k);
        // units of Z[s, 1/s] keep the form canonical
        if c.is_one() || *c == -BigInt::one() {
            Self { num, den: self.den.clone() }
        } else {
            Self::canonical(num, self.den.clone())
        }
    }

    /// `q^k * self`
    pub fn mul_q_pow(&self, k: i64) -> Self {
        if k == 0 {
            return self.clone();
        }
        Self { num: self.num.shift(2 * k), den: self.den.clone() }
    }

    pub fn inv(&self) -> Result<Self, ArithError> {
        if self.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        Ok(Self::canonical(self.den.clone(), self.num.clone()))
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Value at `s = s0`. Fails with [`ArithError::Pole`] when the
    /// denominator vanishes there.
    pub fn eval_at(&self, s0: &BigRational) -> Result<BigRational, ArithError> {
        let n = self.num.eval(s0).ok_or_else(|| ArithError::Pole(s0.to_string()))?;
        let d = self.den.eval(s0).ok_or_else(|| ArithError::Pole(s0.to_string()))?;
        if d.is_zero() {
            return Err(ArithError::Pole(s0.to_string()));
        }
        Ok(n / d)
    }

    /// Canonical text: `(num)/(den)`.
    pub fn canonical_text(&self) -> String {
        self.to_string()
    }
}

fn scalar_div(p: &LaurentPoly, g: &BigInt) -> LaurentPoly {
    LaurentPoly::from_terms(p.terms().iter().map(|(e, c)| (*e, c / g)))
}

impl Default for RatFunc {
    fn default() -> Self {
        Self::zero()
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})/({})", self.num, self.den)
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc{self}")
    }
}

impl From<LaurentPoly> for RatFunc {
    fn from(p: LaurentPoly) -> Self {
        Self::from_poly(p)
    }
}

impl From<i64> for RatFunc {
    fn from(c: i64) -> Self {
        Self::from_int(c)
    }
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            let num = &self.num + &rhs.num;
            if self.den.is_one() {
                return RatFunc { num, den: self.den.clone() };
            }
            return RatFunc::canonical(num, self.den.clone());
        }
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        RatFunc::canonical(num, &self.den * &rhs.den)
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RatFunc::from_poly(&self.num * &rhs.num);
        }
        RatFunc::canonical(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Div for &RatFunc {
    type Output = RatFunc;
    /// Panics on division by zero; use [`RatFunc::inv`] for a fallible form.
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &RatFunc) -> RatFunc {
        self * &rhs.inv().expect("division by zero rational function")
    }
}

forward_owned!(RatFunc, Add add, Sub sub, Mul mul, Div div);

#[cfg(test)]
mod tests {
    use super::*;

    fn s(e: i64) -> LaurentPoly {
        LaurentPoly::s_pow(e)
    }

    fn r(p: LaurentPoly) -> RatFunc {
        RatFunc::from_poly(p)
    }

    #[test]
    fn inverse_pair() {
        let x = r(&s(2) + &LaurentPoly::one());
        assert_eq!(&x.inv().unwrap() * &x, RatFunc::one());
    }

    #[test]
    fn zero_is_additive_identity() {
        let x = RatFunc::new(&s(3) - &s(-1), &s(2) + &LaurentPoly::constant(5)).unwrap();
        assert_eq!(&RatFunc::zero() + &x, x);
    }

    #[test]
    fn inverse_of_q_minus_qinv_is_canonical() {
        let x = r(&s(2) - &s(-2));
        let inv = x.inv().unwrap();
        assert_eq!(inv.numerator(), &s(2));
        assert_eq!(inv.denominator(), &(&s(4) - &LaurentPoly::one()));
        assert_eq!(inv.canonical_text(), "(1*s^2)/(-1*s^0 + 1*s^4)");
    }

    #[test]
    fn inverting_zero_fails() {
        assert_eq!(RatFunc::zero().inv(), Err(ArithError::DivisionByZero));
        assert!(RatFunc::new(LaurentPoly::one(), LaurentPoly::zero()).is_err());
    }

    #[test]
    fn integer_content_and_sign_are_normalized() {
        let x = RatFunc::new(LaurentPoly::constant(2), LaurentPoly::constant(-4)).unwrap();
        assert_eq!(x, RatFunc::new(LaurentPoly::constant(-1), LaurentPoly::constant(2)).unwrap());
        let y = RatFunc::new(&s(2) + &s(0), (&s(4) - &s(0)).scale(&BigInt::from(-3))).unwrap();
        // (s^2+1)/(-3(s^4-1)) = -1/(3(s^2-1))
        assert_eq!(y.denominator(), &LaurentPoly::from_terms([(0, -3), (2, 3)]));
        assert_eq!(y.numerator(), &LaurentPoly::constant(-1));
    }

    #[test]
    fn mul_monomial_matches_general_product() {
        let x = RatFunc::new(&s(3) - &s(-1), &s(2) + &LaurentPoly::constant(5)).unwrap();
        let c = BigInt::from(6);
        assert_eq!(x.mul_monomial(&c, -3), &x * &r(LaurentPoly::monomial(c.clone(), -3)));
        assert_eq!(x.mul_q_pow(2), &x * &RatFunc::q_pow(2));
    }
}
