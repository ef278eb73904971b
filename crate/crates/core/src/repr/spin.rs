use super::matrix::SparseMatrix;
use crate::arith::{q_integer, q_minus_qinv, LaurentPoly};

pub type PolyMatrix = SparseMatrix<LaurentPoly>;

/// The `(two_j + 1)`-dimensional weight module in the basis `|m>`,
/// `m = j, j-1, ..., -j` (index `i` carries `m = j - i`), with
/// `E|m> = [j-m]_q |m+1>`, `F|m> = [j+m]_q |m-1>`, `K|m> = s^(2m) |m>`.
///
/// The non-unitary normalization keeps every entry a Laurent polynomial.
#[derive(Clone, Debug, PartialEq)]
pub struct SpinModule {
    two_j: u32,
    e: PolyMatrix,
    f: PolyMatrix,
    k: PolyMatrix,
    k_inv: PolyMatrix,
}

/// Builds the spin module and checks the defining relations and nilpotency.
///
/// # Panics
/// If a defining relation fails, which would be a bug in the construction.
pub fn spin_module(two_j: u32) -> SpinModule {
    let n = two_j as usize + 1;
    let tj = two_j as i64;
    let mut e = PolyMatrix::zeros(n, n);
    let mut f = PolyMatrix::zeros(n, n);
    for i in 0..n {
        if i >= 1 {
            e.set(i - 1, i, q_integer(i as i64));
        }
        if i + 1 < n {
            f.set(i + 1, i, q_integer(tj - i as i64));
        }
    }
    let k = PolyMatrix::diag((0..n).map(|i| LaurentPoly::s_pow(tj - 2 * i as i64)).collect());
    let k_inv = PolyMatrix::diag((0..n).map(|i| LaurentPoly::s_pow(2 * i as i64 - tj)).collect());
    let module = SpinModule { two_j, e, f, k, k_inv };
    let bad = module.relation_residuals().into_iter().find(|(_, r)| !r.is_zero());
    assert!(bad.is_none(), "spin {two_j}/2 violates {}", bad.unwrap().0);
    module
}

impl SpinModule {
    pub fn two_j(&self) -> u32 {
        self.two_j
    }

    pub fn dim(&self) -> usize {
        self.two_j as usize + 1
    }

    pub fn e(&self) -> &PolyMatrix {
        &self.e
    }

    pub fn f(&self) -> &PolyMatrix {
        &self.f
    }

    pub fn k(&self) -> &PolyMatrix {
        &self.k
    }

    pub fn k_inv(&self) -> &PolyMatrix {
        &self.k_inv
    }

    /// `s^(2m)` on the basis vector with index `i`, as an exponent of `s`.
    pub fn weight_exponent(&self, i: usize) -> i64 {
        self.two_j as i64 - 2 * i as i64
    }

    /// Residual matrices of the defining relations, nilpotency and `K K^-1 = 1`.
    /// The commutator relation is multiplied through by `q - q^-1`.
    pub fn relation_residuals(&self) -> Vec<(&'static str, PolyMatrix)> {
        let q = LaurentPoly::q_pow(1);
        let q_inv = LaurentPoly::q_pow(-1);
        let n = self.dim();
        let k2 = self.k.mul(&self.k);
        let km2 = self.k_inv.mul(&self.k_inv);
        vec![
            ("KE = q EK", self.k.mul(&self.e).sub(&self.e.mul(&self.k).scale(&q))),
            ("KF = q^-1 FK", self.k.mul(&self.f).sub(&self.f.mul(&self.k).scale(&q_inv))),
            ("(q - q^-1)[E, F] = K^2 - K^-2", self.e.commutator(&self.f).scale(&q_minus_qinv()).sub(&k2.sub(&km2))),
            ("K K^-1 = 1", self.k.mul(&self.k_inv).sub(&PolyMatrix::identity(n))),
            ("E nilpotent", self.e.pow(n as u32)),
            ("F nilpotent", self.f.pow(n as u32)),
        ]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_module() {
        let m = spin_module(0);
        assert_eq!(m.dim(), 1);
        assert!(m.e().is_zero() && m.f().is_zero());
        assert!(m.k().is_identity());
    }

    #[test]
    fn spin_half() {
        let m = spin_module(1);
        assert_eq!(m.e().nnz(), 1);
        assert_eq!(m.e().entry(0, 1), LaurentPoly::one());
        assert_eq!(m.f().nnz(), 1);
        assert_eq!(m.f().entry(1, 0), LaurentPoly::one());
        assert_eq!(m.k(), &PolyMatrix::diag(vec![LaurentPoly::s_pow(1), LaurentPoly::s_pow(-1)]));
    }

    #[test]
    fn spin_one_superdiagonal() {
        let m = spin_module(2);
        assert_eq!(m.e().nnz(), 2);
        assert_eq!(m.e().entry(0, 1), q_integer(1));
        assert_eq!(m.e().entry(1, 2), q_integer(2));
        assert_eq!(m.f().entry(1, 0), q_integer(2));
        assert_eq!(m.f().entry(2, 1), q_integer(1));
    }

    #[test]
    fn relations_hold_up_to_spin_four() {
        for two_j in 0..=8 {
            let m = spin_module(two_j);
            for (name, r) in m.relation_residuals() {
                assert!(r.is_zero(), "{name} at two_j = {two_j}");
            }
        }
    }
}
