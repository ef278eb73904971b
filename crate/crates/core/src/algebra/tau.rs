//! Closed-form images of the left coaction `tau(x) = Rt^-1 (1 (x) x) Rt` on
//! the four elements where they are known, and the symbolic `C13^(0)`
//! assembled from them.

use std::fmt;

use super::casimir::{casimir, casimir_prefactor};
use super::element::{tensor_of, AlgebraElement, TensorElement};
use super::hopf::extend_coproduct;
use super::AlgebraError;
use crate::arith::{q_minus_qinv, q_plus_qinv, RatFunc};

/// Arguments with a known closed-form `tau` image.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TauArgument {
    /// `C`
    Casimir,
    /// `q^-H E`
    KInvE,
    /// `q^-2H`
    KInv2,
    /// `F q^-H`
    FKInv,
}

impl TauArgument {
    pub const ALL: [TauArgument; 4] =
        [TauArgument::Casimir, TauArgument::KInvE, TauArgument::KInv2, TauArgument::FKInv];

    pub fn element(self) -> AlgebraElement {
        match self {
            TauArgument::Casimir => casimir(),
            TauArgument::KInvE => k_inv_e(),
            TauArgument::KInv2 => AlgebraElement::k_pow(-2),
            TauArgument::FKInv => f_k_inv(),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            TauArgument::Casimir => "casimir",
            TauArgument::KInvE => "kinv_e",
            TauArgument::KInv2 => "kinv2",
            TauArgument::FKInv => "f_kinv",
        }
    }

    fn identify(x: &AlgebraElement) -> Option<Self> {
        Self::ALL.into_iter().find(|a| &a.element() == x)
    }
}

impl fmt::Display for TauArgument {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// `q^-H E`
fn k_inv_e() -> AlgebraElement {
    AlgebraElement::k_pow(-1).mul(&AlgebraElement::e())
}

/// `F q^-H`
fn f_k_inv() -> AlgebraElement {
    AlgebraElement::f().mul(&AlgebraElement::k_pow(-1))
}

/// `q^-H F`
fn k_inv_f() -> AlgebraElement {
    AlgebraElement::k_pow(-1).mul(&AlgebraElement::f())
}

fn qq_squared() -> RatFunc {
    RatFunc::from_poly(q_minus_qinv().pow(2))
}

/// Closed-form `tau(x)` for the four supported arguments; anything else is
/// rejected.
pub fn tau_closed_form(x: &AlgebraElement) -> Result<TensorElement, AlgebraError> {
    let arg = TauArgument::identify(x).ok_or(AlgebraError::UnsupportedTauArgument)?;
    Ok(tau_image(arg))
}

pub fn tau_image(arg: TauArgument) -> TensorElement {
    let one = AlgebraElement::one();
    match arg {
        // 1 (x) C
        TauArgument::Casimir => one.tensor(&casimir()),
        // q^-2H (x) q^-H E
        TauArgument::KInvE => AlgebraElement::k_pow(-2).tensor(&k_inv_e()),
        // 1 (x) q^-2H - (q - q^-1)^2 q^-H F (x) q^-H E
        TauArgument::KInv2 => {
            one.tensor(&AlgebraElement::k_pow(-2)).sub(&k_inv_f().tensor(&k_inv_e()).scale(&qq_squared())).unwrap()
        }
        // q^2H (x) F q^-H + q^-1 (q + q^-1) F q^H (x) (C + q^-2H)
        //   - (q - q^-1)^2 F^2 (x) q^-H E
        TauArgument::FKInv => {
            let f_k = AlgebraElement::f().mul(&AlgebraElement::k_pow(1));
            let c_plus = casimir().add(&AlgebraElement::k_pow(-2));
            let mid_coeff = RatFunc::from_poly(q_plus_qinv()).mul_q_pow(-1);
            AlgebraElement::k_pow(2)
                .tensor(&f_k_inv())
                .add(&f_k.tensor(&c_plus).scale(&mid_coeff))
                .and_then(|t| t.sub(&AlgebraElement::f().pow(2).tensor(&k_inv_e()).scale(&qq_squared())))
                .unwrap()
        }
    }
}

/// `C13^(0) = (q^2H + C) (x) tau(q^-2H) + q^2H (x) tau(C)
///   - ((q - q^-1)^2 / (q + q^-1)) (q^H E (x) tau(F q^-H) + F q^H (x) tau(q^-H E))`,
/// with leg 1 carrying the left factor and legs 2-3 the `tau` images.
pub fn c13_zero_symbolic() -> TensorElement {
    let k2 = AlgebraElement::k_pow(2);
    let k_e = AlgebraElement::k_pow(1).mul(&AlgebraElement::e());
    let f_k = AlgebraElement::f().mul(&AlgebraElement::k_pow(1));
    let first = k2.add(&casimir()).as_tensor().tensor(&tau_image(TauArgument::KInv2));
    let second = k2.as_tensor().tensor(&tau_image(TauArgument::Casimir));
    let third = k_e
        .as_tensor()
        .tensor(&tau_image(TauArgument::FKInv))
        .add(&f_k.as_tensor().tensor(&tau_image(TauArgument::KInvE)))
        .unwrap()
        .scale(&casimir_prefactor());
    first.add(&second).and_then(|t| t.add(&third)).unwrap()
}

/// Symbolic Casimir elements of `U_q(sl2)^(x)3`.
#[derive(Clone, Debug)]
pub struct SymbolicCasimirs {
    pub c1: TensorElement,
    pub c2: TensorElement,
    pub c3: TensorElement,
    pub c12: TensorElement,
    pub c23: TensorElement,
    pub c13: TensorElement,
    pub c123: TensorElement,
    pub c13_zero: TensorElement,
}

impl SymbolicCasimirs {
    pub fn build() -> Self {
        let c = casimir();
        let ext = |p: &[usize]| extend_coproduct(&c, p, 3).expect("valid pattern");
        Self {
            c1: ext(&[1]),
            c2: ext(&[2]),
            c3: ext(&[3]),
            c12: ext(&[1, 2]),
            c23: ext(&[2, 3]),
            c13: ext(&[1, 3]),
            c123: ext(&[1, 2, 3]),
            c13_zero: c13_zero_symbolic(),
        }
    }

    /// `[C12, C23]_q / (q - q^-1) - C13^(0) - C1 C3 - C2 C123`, normal ordered.
    pub fn aw31_residual(&self) -> Result<TensorElement, AlgebraError> {
        aw31_residual_with(&self.c12, &self.c23, &self.c13_zero, &self.c1, &self.c3, &self.c2, &self.c123)
    }
}

fn aw31_residual_with(
    c12: &TensorElement,
    c23: &TensorElement,
    c13_zero: &TensorElement,
    c1: &TensorElement,
    c3: &TensorElement,
    c2: &TensorElement,
    c123: &TensorElement,
) -> Result<TensorElement, AlgebraError> {
    let inv = RatFunc::from_poly(q_minus_qinv()).inv().unwrap();
    let lhs = c12.q_commutator(c23)?.scale(&inv);
    lhs.sub(c13_zero)?.sub(&c1.normal_order_mul(c3)?)?.sub(&c2.normal_order_mul(c123)?)
}

/// Three-leg tensor of single-leg elements (leg order as given).
pub fn tensor3(a: &AlgebraElement, b: &AlgebraElement, c: &AlgebraElement) -> TensorElement {
    tensor_of(&[a, b, c])
}
