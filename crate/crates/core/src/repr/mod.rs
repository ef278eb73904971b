//! Finite-dimensional spin modules, tensor contexts and exact matrices.

mod casimirs;
mod context;
mod matrix;
mod rmatrix;
mod spin;

pub use casimirs::{casimir_on, four_leg_casimirs, intermediate_casimirs, FourLegCasimirs, IntermediateCasimirs};
pub use context::{swap_map, LegMatrices, Mat, TensorContext};
pub use matrix::{matrix_inverse, SparseMatrix};
pub use rmatrix::{
    delta_id_r, delta_id_r_tilde, id_delta_r, r_matrix, r_tilde, r_tilde_both_ways, series_term_beyond_truncation,
    truncation_order, Braiding,
};
pub use spin::{spin_module, PolyMatrix, SpinModule};

use crate::algebra::AlgebraError;
use crate::arith::ArithError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ReprError {
    #[error("a tensor context needs at least one leg")]
    EmptyContext,
    #[error("arity mismatch: context has {expected} legs, element has {found}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("operator dimension {found} does not match {expected}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("invalid leg: {0}")]
    InvalidLeg(String),
    #[error("legs have unequal dimensions {left} and {right}")]
    UnequalDimensions { left: usize, right: usize },
    #[error("matrix is {rows}x{cols}, not square")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is singular")]
    Singular,
    #[error("internal mismatch: {0}")]
    InternalMismatch(String),
    #[error("no leg with a nonzero E to perturb")]
    NothingToPerturb,
    #[error(transparent)]
    Arith(#[from] ArithError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}
