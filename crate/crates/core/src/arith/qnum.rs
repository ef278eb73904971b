//! q-integers, q-factorials and the universal R-matrix series coefficients.

use super::{LaurentPoly, RatFunc};

/// `[n]_q = q^(n-1) + q^(n-3) + ... + q^(1-n)`; `[-n]_q = -[n]_q`.
pub fn q_integer(n: i64) -> LaurentPoly {
    if n < 0 {
        return -q_integer(-n);
    }
    LaurentPoly::from_terms((0..n).map(|i| (2 * (n - 1 - 2 * i), 1)))
}

/// `[n]_q! = [n]_q [n-1]_q ... [1]_q`, with `[0]_q! = 1`.
pub fn q_factorial(n: u32) -> LaurentPoly {
    (1..=n as i64).fold(LaurentPoly::one(), |acc, k| &acc * &q_integer(k))
}

/// `q - q^-1`
pub fn q_minus_qinv() -> LaurentPoly {
    &LaurentPoly::q_pow(1) - &LaurentPoly::q_pow(-1)
}

/// `q + q^-1`
pub fn q_plus_qinv() -> LaurentPoly {
    &LaurentPoly::q_pow(1) + &LaurentPoly::q_pow(-1)
}

/// Coefficient `a_n = (q - q^-1)^n q^(n(n-1)/2) / [n]_q!` of the R-matrix series.
pub fn r_series_coefficient(n: u32) -> RatFunc {
    let num = q_minus_qinv().pow(n).shift(n as i64 * (n as i64 - 1));
    RatFunc::new(num, q_factorial(n)).expect("q-factorial is nonzero")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_q_integers() {
        assert!(q_integer(0).is_zero());
        assert_eq!(q_integer(1), LaurentPoly::one());
        assert_eq!(q_integer(2), q_plus_qinv());
        assert_eq!(q_integer(-2), -q_plus_qinv());
    }

    #[test]
    fn q_integer_times_q_minus_qinv() {
        for n in 0..=20 {
            assert_eq!(&q_integer(n) * &q_minus_qinv(), &LaurentPoly::q_pow(n) - &LaurentPoly::q_pow(-n), "n = {n}");
        }
    }

    #[test]
    fn factorial_edge_cases() {
        assert_eq!(q_factorial(0), LaurentPoly::one());
        assert_eq!(q_factorial(1), LaurentPoly::one());
        assert_eq!(q_factorial(2), q_integer(2));
    }

    #[test]
    fn first_series_coefficients() {
        assert_eq!(r_series_coefficient(0), RatFunc::one());
        assert_eq!(r_series_coefficient(1), RatFunc::from_poly(q_minus_qinv()));
    }

    #[test]
    fn series_recurrence() {
        // a_{n+1} [n+1]_q = q^n (q - q^-1) a_n
        let qq = RatFunc::from_poly(q_minus_qinv());
        for n in 0..=10u32 {
            let lhs = &r_series_coefficient(n + 1) * &RatFunc::from_poly(q_integer(n as i64 + 1));
            let rhs = (&qq * &r_series_coefficient(n)).mul_q_pow(n as i64);
            assert_eq!(lhs, rhs, "n = {n}");
        }
    }

    #[test]
    fn shifted_coefficient_identity() {
        // a_n q^-2n = a_n - a_n [n]_q q^-n (q - q^-1)
        let qq = RatFunc::from_poly(q_minus_qinv());
        for n in 0..=10u32 {
            let a = r_series_coefficient(n);
            let lhs = a.mul_q_pow(-2 * n as i64);
            let corr = (&(&a * &RatFunc::from_poly(q_integer(n as i64))) * &qq).mul_q_pow(-(n as i64));
            assert_eq!(lhs, &a - &corr, "n = {n}");
        }
    }
}
