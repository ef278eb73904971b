//! Dense integer polynomial helpers used for gcd-based canonicalization.
//!
//! Coefficients are stored in ascending degree order with no trailing zeros;
//! the empty vector is the zero polynomial.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub(crate) fn trim(p: &mut Vec<BigInt>) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

pub(crate) fn content(p: &[BigInt]) -> BigInt {
    let mut g = BigInt::zero();
    for c in p {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    g
}

fn divide_by_scalar(p: &mut [BigInt], d: &BigInt) {
    if d.is_one() {
        return;
    }
    for c in p.iter_mut() {
        *c = &*c / d;
    }
}

/// Primitive part with a positive leading coefficient.
fn primitive(mut p: Vec<BigInt>) -> Vec<BigInt> {
    let c = content(&p);
    if c.is_zero() {
        return p;
    }
    divide_by_scalar(&mut p, &c);
    if p.last().is_some_and(Signed::is_negative) {
        for x in p.iter_mut() {
            *x = -&*x;
        }
    }
    p
}

/// Pseudo-remainder of `a` by `b` (`deg a >= deg b`, `b != 0`).
fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let lb = &b[db];
    while r.len() > db {
        let shift = r.len() - 1 - db;
        let lr = r.last().cloned().unwrap();
        for x in r.iter_mut() {
            *x *= lb;
        }
        for (i, bc) in b.iter().enumerate() {
            r[i + shift] -= &lr * bc;
        }
        trim(&mut r);
        // keep coefficients small between steps
        let c = content(&r);
        if !c.is_zero() && !c.is_one() {
            divide_by_scalar(&mut r, &c);
        }
    }
    r
}

/// Greatest common divisor in Z[x], normalized to a positive leading coefficient.
pub(crate) fn gcd(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() {
        return primitive_with_content(b);
    }
    if b.is_empty() {
        return primitive_with_content(a);
    }
    let g_content = content(a).gcd(&content(b));
    let mut x = primitive(a.to_vec());
    let mut y = primitive(b.to_vec());
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_empty() {
        if y.len() == 1 {
            x = vec![BigInt::one()];
            break;
        }
        let r = pseudo_rem(&x, &y);
        x = y;
        y = primitive(r);
    }
    let mut g = primitive(x);
    for c in g.iter_mut() {
        *c *= &g_content;
    }
    g
}

fn primitive_with_content(p: &[BigInt]) -> Vec<BigInt> {
    let mut v = p.to_vec();
    if v.last().is_some_and(Signed::is_negative) {
        for x in v.iter_mut() {
            *x = -&*x;
        }
    }
    v
}

/// Exact quotient `a / b` in Z[x]. Panics if `b` does not divide `a`.
pub(crate) fn div_exact(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    assert!(!b.is_empty(), "division by the zero polynomial");
    if a.is_empty() {
        return Vec::new();
    }
    if b.len() == 1 {
        return a
            .iter()
            .map(|c| {
                let (q, r) = c.div_rem(&b[0]);
                assert!(r.is_zero(), "inexact scalar division");
                q
            })
            .collect();
    }
    let db = b.len() - 1;
    let lb = &b[db];
    let mut r = a.to_vec();
    let mut q = vec![BigInt::zero(); a.len() - db];
    while r.len() > db {
        let shift = r.len() - 1 - db;
        let (c, rem) = r.last().unwrap().div_rem(lb);
        assert!(rem.is_zero(), "inexact polynomial division");
        for (i, bc) in b.iter().enumerate() {
            r[i + shift] -= &c * bc;
        }
        q[shift] = c;
        trim(&mut r);
    }
    assert!(r.is_empty(), "inexact polynomial division");
    q
}

pub(crate) fn is_one(p: &[BigInt]) -> bool {
    p.len() == 1 && p[0].is_one()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn gcd_of_products() {
        // (x+1)(x-2) and (x+1)(x+3)
        let a = p(&[-2, -1, 1]);
        let b = p(&[3, 4, 1]);
        assert_eq!(gcd(&a, &b), p(&[1, 1]));
    }

    #[test]
    fn gcd_keeps_integer_content() {
        let a = p(&[4, 4]);
        let b = p(&[6, 6]);
        assert_eq!(gcd(&a, &b), p(&[2, 2]));
    }

    #[test]
    fn coprime() {
        assert_eq!(gcd(&p(&[1, 0, 1]), &p(&[-1, 1])), p(&[1]));
    }

    #[test]
    fn exact_division() {
        let a = p(&[-1, 0, 0, 0, 1]); // x^4 - 1
        let b = p(&[-1, 1]);
        assert_eq!(div_exact(&a, &b), p(&[1, 1, 1, 1]));
    }
}
