//! The universal R-matrix `R = q^(2 H (x) H) sum_n a_n (E q^H (x) q^-H F)^n`
//! and `Rt = R_21 = Theta q^(2 H (x) H)` on pairs of legs.

use std::collections::BTreeMap;

use super::context::{swap_map, Mat, TensorContext};
use super::matrix::{matrix_inverse, SparseMatrix};
use super::ReprError;
use crate::algebra::{coproduct, AlgebraElement};
use crate::arith::{r_series_coefficient, Specialization};

fn e_k() -> AlgebraElement {
    AlgebraElement::e().mul(&AlgebraElement::k_pow(1))
}

fn k_inv_f() -> AlgebraElement {
    AlgebraElement::k_pow(-1).mul(&AlgebraElement::f())
}

fn f_k() -> AlgebraElement {
    AlgebraElement::f().mul(&AlgebraElement::k_pow(1))
}

fn k_inv_e() -> AlgebraElement {
    AlgebraElement::k_pow(-1).mul(&AlgebraElement::e())
}

fn check_pair<S: Specialization>(ctx: &TensorContext<S>, a: usize, b: usize) -> Result<(), ReprError> {
    ctx.check_legs(&[a, b])?;
    if a >= b {
        return Err(ReprError::InvalidLeg(format!("expected legs a < b, got ({}, {})", a + 1, b + 1)));
    }
    Ok(())
}

/// Last series index that can be nonzero on legs `(a, b)`.
pub fn truncation_order<S: Specialization>(ctx: &TensorContext<S>, a: usize, b: usize) -> u32 {
    ctx.spins()[a].min(ctx.spins()[b])
}

/// `a_n (x (x) y)^n` on `V_a (x) V_b`, without the diagonal factor.
fn local_series_term<S: Specialization>(
    pair: &TensorContext<S>,
    x: &AlgebraElement,
    y: &AlgebraElement,
    n: u32,
) -> Result<Mat<S>, ReprError> {
    let an = pair.spec().lift(&r_series_coefficient(n))?;
    let xn = pair.restrict(&[0])?.represent(x.pow(n).as_tensor())?;
    let yn = pair.restrict(&[1])?.represent(y.pow(n).as_tensor())?;
    Ok(xn.kron(&yn).scale(&an))
}

/// `R` on `V_a (x) V_b` with the first factor on leg `a`.
fn local_r<S: Specialization>(ctx: &TensorContext<S>, a: usize, b: usize) -> Result<Mat<S>, ReprError> {
    let pair = ctx.restrict(&[a, b])?;
    let mut sum = SparseMatrix::zeros(pair.dim(), pair.dim());
    for n in 0..=truncation_order(ctx, a, b) {
        sum = sum.add(&local_series_term(&pair, &e_k(), &k_inv_f(), n)?);
    }
    Ok(pair.weight_diagonal(0, 1)?.mul(&sum))
}

/// `Theta q^(2 H (x) H)` on `V_a (x) V_b`.
fn local_r_tilde_series<S: Specialization>(ctx: &TensorContext<S>, a: usize, b: usize) -> Result<Mat<S>, ReprError> {
    let pair = ctx.restrict(&[a, b])?;
    let mut theta = SparseMatrix::zeros(pair.dim(), pair.dim());
    for n in 0..=truncation_order(ctx, a, b) {
        theta = theta.add(&local_series_term(&pair, &f_k(), &k_inv_e(), n)?);
    }
    Ok(theta.mul(&pair.weight_diagonal(0, 1)?))
}

/// `R_21` on `V_a (x) V_b`, as the swap-conjugate of `R` on `V_b (x) V_a`.
fn local_r_tilde_swapped<S: Specialization>(ctx: &TensorContext<S>, a: usize, b: usize) -> Result<Mat<S>, ReprError> {
    let (da, db) = (ctx.leg_dim(a), ctx.leg_dim(b));
    let r_ba = local_r(&ctx.restrict(&[b, a])?, 0, 1)?;
    let p: Mat<S> = swap_map(da, db);
    Ok(p.transpose().mul(&r_ba).mul(&p))
}

fn local_r_tilde<S: Specialization>(ctx: &TensorContext<S>, a: usize, b: usize) -> Result<Mat<S>, ReprError> {
    let via_swap = local_r_tilde_swapped(ctx, a, b)?;
    let via_series = local_r_tilde_series(ctx, a, b)?;
    if via_swap != via_series {
        return Err(ReprError::InternalMismatch(format!(
            "Rt on legs ({}, {}): swap conjugate and reordered series differ",
            a + 1,
            b + 1
        )));
    }
    Ok(via_series)
}

/// `R_ab` for `a < b`: first factor on leg `a`, identity elsewhere.
pub fn r_matrix<S: Specialization>(ctx: &TensorContext<S>, a: usize, b: usize) -> Result<Mat<S>, ReprError> {
    check_pair(ctx, a, b)?;
    ctx.embed(&local_r(ctx, a, b)?, &[a, b])
}

/// `Rt_ab = R_ba` for `a < b`, built both by swap conjugation and from the
/// reordered series; `InternalMismatch` if they differ.
pub fn r_tilde<S: Specialization>(ctx: &TensorContext<S>, a: usize, b: usize) -> Result<Mat<S>, ReprError> {
    check_pair(ctx, a, b)?;
    ctx.embed(&local_r_tilde(ctx, a, b)?, &[a, b])
}

/// Both constructions of `Rt_ab`, unembedded, for reporting the comparison.
pub fn r_tilde_both_ways<S: Specialization>(
    ctx: &TensorContext<S>,
    a: usize,
    b: usize,
) -> Result<(Mat<S>, Mat<S>), ReprError> {
    check_pair(ctx, a, b)?;
    Ok((local_r_tilde_swapped(ctx, a, b)?, local_r_tilde_series(ctx, a, b)?))
}

/// The first omitted series terms of `R` and `Theta` on legs `(a, b)`, at
/// `n = min(two_j_a, two_j_b) + 1`. Both are zero when truncation is exact.
pub fn series_term_beyond_truncation<S: Specialization>(
    ctx: &TensorContext<S>,
    a: usize,
    b: usize,
) -> Result<(Mat<S>, Mat<S>), ReprError> {
    check_pair(ctx, a, b)?;
    let pair = ctx.restrict(&[a, b])?;
    let n = truncation_order(ctx, a, b) + 1;
    let d = pair.weight_diagonal(0, 1)?;
    let r_term = d.mul(&local_series_term(&pair, &e_k(), &k_inv_f(), n)?);
    let theta_term = local_series_term(&pair, &f_k(), &k_inv_e(), n)?;
    Ok((r_term, theta_term))
}

/// `R_ab`, `Rt_ab` and their inverses for every pair of legs `a < b`.
/// `Rt` uses the reordered series; inverses are taken on the two-leg block
/// and then embedded.
#[derive(Clone, Debug)]
pub struct Braiding<S: Specialization> {
    r: BTreeMap<(usize, usize), Mat<S>>,
    r_inv: BTreeMap<(usize, usize), Mat<S>>,
    rt: BTreeMap<(usize, usize), Mat<S>>,
    rt_inv: BTreeMap<(usize, usize), Mat<S>>,
}

impl<S: Specialization> Braiding<S> {
    pub fn new(ctx: &TensorContext<S>) -> Result<Self, ReprError> {
        let mut out = Self { r: BTreeMap::new(), r_inv: BTreeMap::new(), rt: BTreeMap::new(), rt_inv: BTreeMap::new() };
        for a in 0..ctx.arity() {
            for b in a + 1..ctx.arity() {
                let r = local_r(ctx, a, b)?;
                // the swap construction is compared separately by the checks
                let rt = local_r_tilde_series(ctx, a, b)?;
                out.r_inv.insert((a, b), ctx.embed(&matrix_inverse(&r)?, &[a, b])?);
                out.rt_inv.insert((a, b), ctx.embed(&matrix_inverse(&rt)?, &[a, b])?);
                out.r.insert((a, b), ctx.embed(&r, &[a, b])?);
                out.rt.insert((a, b), ctx.embed(&rt, &[a, b])?);
            }
        }
        Ok(out)
    }

    fn pick(map: &BTreeMap<(usize, usize), Mat<S>>, a: usize, b: usize) -> &Mat<S> {
        map.get(&(a, b)).unwrap_or_else(|| panic!("no R-matrix on legs ({a}, {b})"))
    }

    /// `R_ab` (0-based legs, `a < b`).
    pub fn r(&self, a: usize, b: usize) -> &Mat<S> {
        Self::pick(&self.r, a, b)
    }

    pub fn r_inv(&self, a: usize, b: usize) -> &Mat<S> {
        Self::pick(&self.r_inv, a, b)
    }

    pub fn rt(&self, a: usize, b: usize) -> &Mat<S> {
        Self::pick(&self.rt, a, b)
    }

    pub fn rt_inv(&self, a: usize, b: usize) -> &Mat<S> {
        Self::pick(&self.rt_inv, a, b)
    }
}

fn require_three<S: Specialization>(ctx: &TensorContext<S>) -> Result<(), ReprError> {
    if ctx.arity() != 3 {
        return Err(ReprError::ArityMismatch { expected: 3, found: ctx.arity() });
    }
    Ok(())
}

/// `(id (x) Delta) R = D_12 D_13 sum_n a_n (E K)^n (x) Delta(K^-1 F)^n`,
/// with the coproduct applied symbolically before representing.
pub fn id_delta_r<S: Specialization>(ctx: &TensorContext<S>) -> Result<Mat<S>, ReprError> {
    require_three(ctx)?;
    let leg1 = ctx.restrict(&[0])?;
    let legs23 = ctx.restrict(&[1, 2])?;
    let delta = coproduct(&k_inv_f());
    let mut sum = SparseMatrix::zeros(ctx.dim(), ctx.dim());
    for n in 0..=ctx.spins()[0] {
        let an = ctx.spec().lift(&r_series_coefficient(n))?;
        let x = leg1.represent(e_k().pow(n).as_tensor())?;
        let y = legs23.represent(&delta.pow(n))?;
        sum = sum.add(&x.kron(&y).scale(&an));
    }
    Ok(ctx.weight_diagonal(0, 1)?.mul(&ctx.weight_diagonal(0, 2)?).mul(&sum))
}

/// `(Delta (x) id) R = D_13 D_23 sum_n a_n Delta(E K)^n (x) (K^-1 F)^n`.
pub fn delta_id_r<S: Specialization>(ctx: &TensorContext<S>) -> Result<Mat<S>, ReprError> {
    require_three(ctx)?;
    let legs12 = ctx.restrict(&[0, 1])?;
    let leg3 = ctx.restrict(&[2])?;
    let delta = coproduct(&e_k());
    let mut sum = SparseMatrix::zeros(ctx.dim(), ctx.dim());
    for n in 0..=ctx.spins()[2] {
        let an = ctx.spec().lift(&r_series_coefficient(n))?;
        let x = legs12.represent(&delta.pow(n))?;
        let y = leg3.represent(k_inv_f().pow(n).as_tensor())?;
        sum = sum.add(&x.kron(&y).scale(&an));
    }
    Ok(ctx.weight_diagonal(0, 2)?.mul(&ctx.weight_diagonal(1, 2)?).mul(&sum))
}

/// `(Delta (x) id) Rt = [sum_n a_n Delta(F K)^n (x) (K^-1 E)^n] D_13 D_23`.
pub fn delta_id_r_tilde<S: Specialization>(ctx: &TensorContext<S>) -> Result<Mat<S>, ReprError> {
    require_three(ctx)?;
    let legs12 = ctx.restrict(&[0, 1])?;
    let leg3 = ctx.restrict(&[2])?;
    let delta = coproduct(&f_k());
    let mut sum = SparseMatrix::zeros(ctx.dim(), ctx.dim());
    for n in 0..=ctx.spins()[2] {
        let an = ctx.spec().lift(&r_series_coefficient(n))?;
        let x = legs12.represent(&delta.pow(n))?;
        let y = leg3.represent(k_inv_e().pow(n).as_tensor())?;
        sum = sum.add(&x.kron(&y).scale(&an));
    }
    Ok(sum.mul(&ctx.weight_diagonal(0, 2)?).mul(&ctx.weight_diagonal(1, 2)?))
}
