use num_rational::BigRational;
use num_traits::Zero;

use crate::algebra::TensorElement;
use crate::arith::{evaluate_scalar, Ring};
use crate::repr::SparseMatrix;

/// Size of a difference that should vanish, with one witness entry.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Residual {
    pub terms: usize,
    pub witness: Option<String>,
}

impl Residual {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms == 0
    }

    pub fn of_matrix<R: Ring>(label: &str, m: &SparseMatrix<R>) -> Self {
        Self { terms: m.nnz(), witness: m.largest_entry().map(|(i, j, t)| format!("{label}: {i} {j} :: {t}")) }
    }

    pub fn of_tensor(label: &str, t: &TensorElement) -> Self {
        let witness = t.canonical_text().lines().max_by_key(|l| l.len()).map(|l| format!("{label}: {l}"));
        Self { terms: t.len(), witness }
    }

    /// Terms of `t` whose coefficient does not vanish at `s = s0`. A pole
    /// counts as nonvanishing.
    pub fn of_tensor_at(label: &str, t: &TensorElement, s0: &BigRational) -> Self {
        let mut out = Self::zero();
        for (key, c) in t.terms() {
            let text = match evaluate_scalar(c, s0) {
                Ok(v) if Zero::is_zero(&v) => continue,
                Ok(v) => v.to_string(),
                Err(e) => e.to_string(),
            };
            out.terms += 1;
            if out.witness.is_none() {
                let legs: Vec<String> = key.iter().map(|m| m.to_string()).collect();
                out.witness = Some(format!("{label}: {text} :: {}", legs.join("|")));
            }
        }
        out
    }

    /// A single failure with a message, for checks that are verdicts rather
    /// than differences.
    pub fn failure(witness: impl Into<String>) -> Self {
        Self { terms: 1, witness: Some(witness.into()) }
    }

    /// Sums term counts; keeps the first witness.
    pub fn merge(mut self, other: Residual) -> Self {
        self.terms += other.terms;
        if self.witness.is_none() {
            self.witness = other.witness;
        }
        self
    }

    pub fn sum(parts: impl IntoIterator<Item = Residual>) -> Self {
        parts.into_iter().fold(Self::zero(), Self::merge)
    }
}
