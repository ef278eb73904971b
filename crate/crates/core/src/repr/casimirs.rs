//! Matrices of the single-leg, intermediate and total Casimir elements, and
//! the R-conjugated `C13^(0)`, `C13^(1)` (three legs) and `C24^(1)` (four legs).

use super::context::{Mat, TensorContext};
use super::rmatrix::Braiding;
use super::ReprError;
use crate::algebra::{casimir, extend_coproduct};
use crate::arith::Specialization;

/// Casimir matrix with the Sweedler components on the given 1-based legs.
pub fn casimir_on<S: Specialization>(ctx: &TensorContext<S>, pattern: &[usize]) -> Result<Mat<S>, ReprError> {
    ctx.represent(&extend_coproduct(&casimir(), pattern, ctx.arity())?)
}

/// Three-leg Casimirs. `c13_zero` and `c13_one` hold both constructions each:
/// `c13_zero = (Rt_23^-1 C13 Rt_23, R_12 C13 R_12^-1)` and
/// `c13_one = (Rt_12^-1 C13 Rt_12, R_23 C13 R_23^-1)`.
#[derive(Clone, Debug)]
pub struct IntermediateCasimirs<S: Specialization> {
    pub c1: Mat<S>,
    pub c2: Mat<S>,
    pub c3: Mat<S>,
    pub c12: Mat<S>,
    pub c23: Mat<S>,
    pub c13: Mat<S>,
    pub c123: Mat<S>,
    pub c13_zero: (Mat<S>, Mat<S>),
    pub c13_one: (Mat<S>, Mat<S>),
}

pub fn intermediate_casimirs<S: Specialization>(
    ctx: &TensorContext<S>,
    br: &Braiding<S>,
) -> Result<IntermediateCasimirs<S>, ReprError> {
    if ctx.arity() != 3 {
        return Err(ReprError::ArityMismatch { expected: 3, found: ctx.arity() });
    }
    let c13 = casimir_on(ctx, &[1, 3])?;
    let c13_zero = (br.rt_inv(1, 2).mul(&c13).mul(br.rt(1, 2)), br.r(0, 1).mul(&c13).mul(br.r_inv(0, 1)));
    let c13_one = (br.rt_inv(0, 1).mul(&c13).mul(br.rt(0, 1)), br.r(1, 2).mul(&c13).mul(br.r_inv(1, 2)));
    Ok(IntermediateCasimirs {
        c1: casimir_on(ctx, &[1])?,
        c2: casimir_on(ctx, &[2])?,
        c3: casimir_on(ctx, &[3])?,
        c12: casimir_on(ctx, &[1, 2])?,
        c23: casimir_on(ctx, &[2, 3])?,
        c123: casimir_on(ctx, &[1, 2, 3])?,
        c13,
        c13_zero,
        c13_one,
    })
}

/// Four-leg elements `C13^(0) = (Rt_23^-1 C13 Rt_23, R_12 C13 R_12^-1)` and
/// `C24^(1) = (Rt_23^-1 C24 Rt_23, R_34 C24 R_34^-1)`.
#[derive(Clone, Debug)]
pub struct FourLegCasimirs<S: Specialization> {
    pub c13_zero: (Mat<S>, Mat<S>),
    pub c24_one: (Mat<S>, Mat<S>),
}

pub fn four_leg_casimirs<S: Specialization>(
    ctx: &TensorContext<S>,
    br: &Braiding<S>,
) -> Result<FourLegCasimirs<S>, ReprError> {
    if ctx.arity() != 4 {
        return Err(ReprError::ArityMismatch { expected: 4, found: ctx.arity() });
    }
    let c13 = casimir_on(ctx, &[1, 3])?;
    let c24 = casimir_on(ctx, &[2, 4])?;
    Ok(FourLegCasimirs {
        c13_zero: (br.rt_inv(1, 2).mul(&c13).mul(br.rt(1, 2)), br.r(0, 1).mul(&c13).mul(br.r_inv(0, 1))),
        c24_one: (br.rt_inv(1, 2).mul(&c24).mul(br.rt(1, 2)), br.r(2, 3).mul(&c24).mul(br.r_inv(2, 3))),
    })
}
