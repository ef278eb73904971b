//! Specialization of the scalar field: either keep rational functions
//! (exact mode) or evaluate at a rational sample point `s = s0`.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{ArithError, Field, LaurentPoly, RatFunc};

/// Maps exact scalars into the field a computation runs over.
pub trait Specialization: Clone + Send + Sync + fmt::Debug + 'static {
    type Scalar: Field;

    fn lift(&self, x: &RatFunc) -> Result<Self::Scalar, ArithError>;

    fn lift_poly(&self, p: &LaurentPoly) -> Result<Self::Scalar, ArithError>;

    /// Short label for reports, e.g. `exact` or `s=3/7`.
    fn label(&self) -> String;
}

/// Exact arithmetic over rational functions in `s`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Exact;

impl Specialization for Exact {
    type Scalar = RatFunc;

    fn lift(&self, x: &RatFunc) -> Result<RatFunc, ArithError> {
        Ok(x.clone())
    }

    fn lift_poly(&self, p: &LaurentPoly) -> Result<RatFunc, ArithError> {
        Ok(RatFunc::from_poly(p.clone()))
    }

    fn label(&self) -> String {
        "exact".into()
    }
}

/// An admissible evaluation point `s = s0` (so `q = s0^2`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SamplePoint {
    s: BigRational,
}

impl SamplePoint {
    /// Rejects `s0 in {0, 1, -1}`, i.e. the excluded values `q = +-1, +-i`
    /// restricted to rational `s0` (`s0^4 = 1` forces `s0 = +-1`).
    pub fn new(s: BigRational) -> Result<Self, ArithError> {
        let s4 = num_traits::pow(s.clone(), 4);
        if s.is_zero() || s4.is_one() {
            return Err(ArithError::ForbiddenParameter(s.to_string()));
        }
        Ok(Self { s })
    }

    pub fn from_ratio(p: i64, r: i64) -> Result<Self, ArithError> {
        if r == 0 {
            return Err(ArithError::DivisionByZero);
        }
        Self::new(BigRational::new(BigInt::from(p), BigInt::from(r)))
    }

    pub fn value(&self) -> &BigRational {
        &self.s
    }
}

impl fmt::Display for SamplePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.s)
    }
}

impl Specialization for SamplePoint {
    type Scalar = BigRational;

    fn lift(&self, x: &RatFunc) -> Result<BigRational, ArithError> {
        x.eval_at(&self.s)
    }

    fn lift_poly(&self, p: &LaurentPoly) -> Result<BigRational, ArithError> {
        p.eval(&self.s).ok_or_else(|| ArithError::Pole(self.s.to_string()))
    }

    fn label(&self) -> String {
        format!("s={}", self.s)
    }
}

/// Exact value of `x` at `s = s0`.
pub fn evaluate_scalar(x: &RatFunc, s0: &BigRational) -> Result<BigRational, ArithError> {
    SamplePoint::new(s0.clone())?.lift(x)
}

/// Smallest and largest numerator/denominator of generated sample points.
pub const SAMPLE_MIN: i64 = 2;
pub const SAMPLE_MAX: i64 = 97;

/// `count` seeded points `p/r` with `2 <= p, r <= 97`, skipping forbidden
/// values and repeats. Deterministic in `seed`.
pub fn sample_points(seed: u64, count: usize) -> Vec<SamplePoint> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out: Vec<SamplePoint> = Vec::with_capacity(count);
    let mut draws = 0usize;
    while out.len() < count {
        draws += 1;
        let p = rng.gen_range(SAMPLE_MIN..=SAMPLE_MAX);
        let r = rng.gen_range(SAMPLE_MIN..=SAMPLE_MAX);
        let Ok(pt) = SamplePoint::from_ratio(p, r) else { continue };
        // repeats are only accepted once the finite space is nearly exhausted
        if out.contains(&pt) && draws < 100 * count {
            continue;
        }
        out.push(pt);
    }
    out
}

/// Draws one more admissible point from an already-advanced generator.
pub(crate) fn resample(seed: u64, attempt: u64) -> SamplePoint {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9_7f4a_7c15u64.wrapping_mul(attempt + 1));
    loop {
        let p = rng.gen_range(SAMPLE_MIN..=SAMPLE_MAX);
        let r = rng.gen_range(SAMPLE_MIN..=SAMPLE_MAX);
        if let Ok(pt) = SamplePoint::from_ratio(p, r) {
            return pt;
        }
    }
}

impl SamplePoint {
    pub fn is_positive(&self) -> bool {
        self.s.is_positive()
    }
}
