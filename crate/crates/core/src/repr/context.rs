use std::collections::HashMap;

use super::matrix::SparseMatrix;
use super::spin::{spin_module, SpinModule};
use super::ReprError;
use crate::algebra::{PbwMonomial, TensorElement};
use crate::arith::{LaurentPoly, Ring, Specialization};

pub type Mat<S> = SparseMatrix<<S as Specialization>::Scalar>;

/// Generator matrices of one leg, lifted to the scalar field.
#[derive(Clone, Debug)]
pub struct LegMatrices<T: Ring> {
    pub e: SparseMatrix<T>,
    pub f: SparseMatrix<T>,
    pub k: SparseMatrix<T>,
    pub k_inv: SparseMatrix<T>,
}

/// Tensor product of spin modules `V_{j1} (x) ... (x) V_{jn}` over the scalar
/// field of a specialization. The first leg is the slowest-varying index.
#[derive(Clone, Debug)]
pub struct TensorContext<S: Specialization> {
    spins: Vec<u32>,
    modules: Vec<SpinModule>,
    legs: Vec<LegMatrices<S::Scalar>>,
    spec: S,
}

impl<S: Specialization> TensorContext<S> {
    pub fn new(spins: &[u32], spec: S) -> Result<Self, ReprError> {
        if spins.is_empty() {
            return Err(ReprError::EmptyContext);
        }
        let modules: Vec<SpinModule> = spins.iter().map(|&t| spin_module(t)).collect();
        let lift = |m: &SparseMatrix<LaurentPoly>| m.try_map(|x| spec.lift_poly(x));
        let legs = modules
            .iter()
            .map(|m| Ok(LegMatrices { e: lift(m.e())?, f: lift(m.f())?, k: lift(m.k())?, k_inv: lift(m.k_inv())? }))
            .collect::<Result<Vec<_>, ReprError>>()?;
        Ok(Self { spins: spins.to_vec(), modules, legs, spec })
    }

    /// Test fixture: multiplies the first nonzero `E` entry of the first
    /// non-trivial leg by `q`, breaking the defining relations.
    #[doc(hidden)]
    pub fn with_perturbed_e(mut self) -> Result<Self, ReprError> {
        let q = self.spec.lift_poly(&LaurentPoly::q_pow(1))?;
        let leg = self.legs.iter_mut().find(|l| !l.e.is_zero()).ok_or(ReprError::NothingToPerturb)?;
        let (i, j, x) = leg.e.entries().next().map(|(i, j, x)| (i, j, x.mul_ref(&q))).unwrap();
        leg.e.set(i, j, x);
        Ok(self)
    }

    pub fn spins(&self) -> &[u32] {
        &self.spins
    }

    pub fn arity(&self) -> usize {
        self.spins.len()
    }

    pub fn leg_dim(&self, leg: usize) -> usize {
        self.spins[leg] as usize + 1
    }

    pub fn dim(&self) -> usize {
        (0..self.arity()).map(|l| self.leg_dim(l)).product()
    }

    pub fn spec(&self) -> &S {
        &self.spec
    }

    pub fn module(&self, leg: usize) -> &SpinModule {
        &self.modules[leg]
    }

    pub fn leg(&self, leg: usize) -> &LegMatrices<S::Scalar> {
        &self.legs[leg]
    }

    pub fn lift_poly(&self, p: &LaurentPoly) -> Result<S::Scalar, ReprError> {
        Ok(self.spec.lift_poly(p)?)
    }

    pub fn identity(&self) -> Mat<S> {
        SparseMatrix::identity(self.dim())
    }

    /// Sub-context on the given legs, in the given order.
    pub fn restrict(&self, legs: &[usize]) -> Result<Self, ReprError> {
        self.check_legs(legs)?;
        Ok(Self {
            spins: legs.iter().map(|&l| self.spins[l]).collect(),
            modules: legs.iter().map(|&l| self.modules[l].clone()).collect(),
            legs: legs.iter().map(|&l| self.legs[l].clone()).collect(),
            spec: self.spec.clone(),
        })
    }

    pub(crate) fn check_legs(&self, legs: &[usize]) -> Result<(), ReprError> {
        for (i, &l) in legs.iter().enumerate() {
            if l >= self.arity() {
                return Err(ReprError::InvalidLeg(format!("leg {} of {}", l + 1, self.arity())));
            }
            if legs[..i].contains(&l) {
                return Err(ReprError::InvalidLeg(format!("leg {} repeated", l + 1)));
            }
        }
        Ok(())
    }

    /// `F^a E^b K^c` on one leg.
    pub fn monomial_matrix(&self, leg: usize, m: PbwMonomial) -> Mat<S> {
        let l = &self.legs[leg];
        let k = if m.k_exp >= 0 { l.k.pow(m.k_exp as u32) } else { l.k_inv.pow(m.k_exp.unsigned_abs()) };
        l.f.pow(m.f_exp).mul(&l.e.pow(m.e_exp)).mul(&k)
    }

    /// Matrix of a symbolic element; arity must equal the number of legs.
    pub fn represent(&self, x: &TensorElement) -> Result<Mat<S>, ReprError> {
        if x.arity() != self.arity() {
            return Err(ReprError::ArityMismatch { expected: self.arity(), found: x.arity() });
        }
        let mut cache: HashMap<(usize, PbwMonomial), Mat<S>> = HashMap::new();
        let dim = self.dim();
        let mut acc: Vec<(usize, usize, S::Scalar)> = Vec::new();
        for (key, c) in x.terms() {
            let coeff = self.spec.lift(c)?;
            let mut m = SparseMatrix::identity(1);
            for (leg, mono) in key.iter().enumerate() {
                let factor = cache.entry((leg, *mono)).or_insert_with(|| self.monomial_matrix(leg, *mono));
                m = m.kron(factor);
            }
            acc.extend(m.entries().map(|(i, j, v)| (i, j, v.mul_ref(&coeff))));
        }
        Ok(collect_entries(dim, acc))
    }

    /// Places `op`, acting on `V_{legs[0]} (x) V_{legs[1]} (x) ...`, into the
    /// full space with identity on the remaining legs.
    pub fn embed(&self, op: &Mat<S>, legs: &[usize]) -> Result<Mat<S>, ReprError> {
        self.check_legs(legs)?;
        let local_dim: usize = legs.iter().map(|&l| self.leg_dim(l)).product();
        if op.rows() != local_dim || op.cols() != local_dim {
            return Err(ReprError::DimensionMismatch { expected: local_dim, found: op.rows() });
        }
        let dims: Vec<usize> = (0..self.arity()).map(|l| self.leg_dim(l)).collect();
        let mut out = SparseMatrix::zeros(self.dim(), self.dim());
        for row in 0..self.dim() {
            let mut digits = unflatten(row, &dims);
            let local_row = flatten(legs.iter().map(|&l| (digits[l], dims[l])));
            for (local_col, x) in op.row(local_row) {
                let mut rest = local_col;
                for &l in legs.iter().rev() {
                    digits[l] = rest % dims[l];
                    rest /= dims[l];
                }
                out.set(row, flatten(digits.iter().copied().zip(dims.iter().copied())), x.clone());
            }
        }
        Ok(out)
    }

    /// `q^(2 H_a H_b)`: diagonal with `s^((2 m_a)(2 m_b))` on each basis vector.
    pub fn weight_diagonal(&self, a: usize, b: usize) -> Result<Mat<S>, ReprError> {
        self.check_legs(&[a, b])?;
        let dims: Vec<usize> = (0..self.arity()).map(|l| self.leg_dim(l)).collect();
        let entries = (0..self.dim())
            .map(|i| {
                let d = unflatten(i, &dims);
                let e = self.modules[a].weight_exponent(d[a]) * self.modules[b].weight_exponent(d[b]);
                self.lift_poly(&LaurentPoly::s_pow(e))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(SparseMatrix::diag(entries))
    }

    /// The operator exchanging the tensor factors of legs `a` and `b`.
    pub fn permutation_operator(&self, a: usize, b: usize) -> Result<Mat<S>, ReprError> {
        self.check_legs(&[a, b])?;
        if self.spins[a] != self.spins[b] {
            return Err(ReprError::UnequalDimensions { left: self.leg_dim(a), right: self.leg_dim(b) });
        }
        let dims: Vec<usize> = (0..self.arity()).map(|l| self.leg_dim(l)).collect();
        let mut out = SparseMatrix::zeros(self.dim(), self.dim());
        for col in 0..self.dim() {
            let mut d = unflatten(col, &dims);
            d.swap(a, b);
            out.set(flatten(d.into_iter().zip(dims.iter().copied())), col, S::Scalar::one());
        }
        Ok(out)
    }
}

/// The map `V_a (x) V_b -> V_b (x) V_a`, `x (x) y -> y (x) x`.
pub fn swap_map<T: Ring>(dim_a: usize, dim_b: usize) -> SparseMatrix<T> {
    let mut out = SparseMatrix::zeros(dim_a * dim_b, dim_a * dim_b);
    for i in 0..dim_a {
        for j in 0..dim_b {
            out.set(j * dim_a + i, i * dim_b + j, T::one());
        }
    }
    out
}

fn unflatten(mut idx: usize, dims: &[usize]) -> Vec<usize> {
    let mut out = vec![0; dims.len()];
    for l in (0..dims.len()).rev() {
        out[l] = idx % dims[l];
        idx /= dims[l];
    }
    out
}

fn flatten(digits: impl Iterator<Item = (usize, usize)>) -> usize {
    digits.fold(0, |acc, (d, n)| acc * n + d)
}

fn collect_entries<T: Ring>(dim: usize, entries: Vec<(usize, usize, T)>) -> SparseMatrix<T> {
    let mut grouped: std::collections::BTreeMap<(usize, usize), Vec<T>> = Default::default();
    for (i, j, x) in entries {
        grouped.entry((i, j)).or_default().push(x);
    }
    SparseMatrix::from_entries(dim, dim, grouped.into_iter().map(|((i, j), v)| (i, j, T::sum(v))))
}
