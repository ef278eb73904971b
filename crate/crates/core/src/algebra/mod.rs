//! Symbolic `U_q(sl2)^(x)n`: PBW normal ordering, coproducts, the Casimir
//! element and the closed-form coaction images.

mod casimir;
mod element;
mod hopf;
mod pbw;
mod tau;

pub use casimir::{casimir, casimir_prefactor, commutator_f_en};
pub use element::{tensor_of, AlgebraElement, TensorElement, TensorKey};
pub use hopf::{apply_coproduct_at, coproduct, coproduct_op, extend_coproduct, iterated_coproduct};
pub use pbw::PbwMonomial;
pub use tau::{c13_zero_symbolic, tau_closed_form, tau_image, tensor3, SymbolicCasimirs, TauArgument};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error("arity mismatch: {left} vs {right}")]
    ArityMismatch { left: usize, right: usize },
    #[error("invalid leg pattern: {0}")]
    InvalidPattern(String),
    #[error("tau closed form is only known for C, q^-H E, q^-2H and F q^-H")]
    UnsupportedTauArgument,
}
