//! Exact scalars: Laurent polynomials and rational functions in `s = q^(1/2)`.

mod eval;
mod field;
mod laurent;
mod poly;
mod qnum;
mod ratfunc;

pub(crate) use eval::resample;
pub use eval::{evaluate_scalar, sample_points, Exact, SamplePoint, Specialization, SAMPLE_MAX, SAMPLE_MIN};
pub use field::{Field, Ring};
pub use laurent::LaurentPoly;
pub use qnum::{q_factorial, q_integer, q_minus_qinv, q_plus_qinv, r_series_coefficient};
pub use ratfunc::RatFunc;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ArithError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("denominator vanishes at sample point s = {0}")]
    Pole(String),
    #[error("forbidden parameter s = {0} (requires q != +-1, +-i)")]
    ForbiddenParameter(String),
}
