use std::fmt::Debug;

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{ArithError, LaurentPoly, RatFunc};

/// Commutative ring operations needed by the matrix layer.
pub trait Ring: Clone + PartialEq + Debug + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add_ref(&self, rhs: &Self) -> Self;
    fn sub_ref(&self, rhs: &Self) -> Self;
    fn mul_ref(&self, rhs: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    fn canonical_text(&self) -> String;

    fn sum(items: Vec<Self>) -> Self {
        items.into_iter().fold(Self::zero(), |acc, x| acc.add_ref(&x))
    }
}

pub trait Field: Ring {
    fn try_inv(&self) -> Result<Self, ArithError>;

    fn try_div(&self, rhs: &Self) -> Result<Self, ArithError> {
        Ok(self.mul_ref(&rhs.try_inv()?))
    }
}

impl Ring for LaurentPoly {
    fn zero() -> Self {
        LaurentPoly::zero()
    }
    fn one() -> Self {
        LaurentPoly::one()
    }
    fn is_zero(&self) -> bool {
        LaurentPoly::is_zero(self)
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn canonical_text(&self) -> String {
        LaurentPoly::canonical_text(self)
    }
}

impl Ring for RatFunc {
    fn zero() -> Self {
        RatFunc::zero()
    }
    fn one() -> Self {
        RatFunc::one()
    }
    fn is_zero(&self) -> bool {
        RatFunc::is_zero(self)
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn canonical_text(&self) -> String {
        RatFunc::canonical_text(self)
    }
    fn sum(items: Vec<Self>) -> Self {
        RatFunc::sum(items)
    }
}

impl Field for RatFunc {
    fn try_inv(&self) -> Result<Self, ArithError> {
        self.inv()
    }
}

impl Ring for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn canonical_text(&self) -> String {
        self.to_string()
    }
}

impl Field for BigRational {
    fn try_inv(&self) -> Result<Self, ArithError> {
        if Zero::is_zero(self) {
            Err(ArithError::DivisionByZero)
        } else {
            Ok(self.recip())
        }
    }
}
