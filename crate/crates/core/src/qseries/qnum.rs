//! q-integers, q-factorials and Gaussian binomials.

use crate::error::{Error, Result};

use super::poly::LaurentPoly;

/// `[k]_q = 1 + q + ... + q^(k-1)`, and `[-m]_q = -q^(-m) [m]_q` for `k = -m < 0`.
pub fn q_int(k: i64) -> LaurentPoly {
    if k >= 0 {
        LaurentPoly::from_dense(0, std::iter::repeat(1).take(k as usize))
    } else {
        -q_int(-k).shift(k)
    }
}

/// `1 - q^k`.
pub fn one_minus_q_pow(k: i64) -> LaurentPoly {
    &LaurentPoly::one() - &LaurentPoly::q_pow(k)
}

pub fn q_factorial(k: i64) -> Result<LaurentPoly> {
    if k < 0 {
        return Err(Error::Domain(format!("q-factorial of negative {k}")));
    }
    Ok((1..=k).fold(LaurentPoly::one(), |acc, i| acc * q_int(i)))
}

/// Gaussian binomial by exact division of q-factorials.
pub fn q_binomial(n: i64, k: i64) -> Result<LaurentPoly> {
    if k < 0 || n < 0 || k > n {
        return Err(Error::Domain(format!("q-binomial needs 0 <= k <= n, got n={n}, k={k}")));
    }
    let den = q_factorial(k)? * q_factorial(n - k)?;
    q_factorial(n)?.div_exact(&den)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn p(c: &[i64]) -> LaurentPoly {
        LaurentPoly::from_dense(0, c.iter().copied())
    }

    #[test]
    fn q_int_values() {
        assert!(q_int(0).is_zero());
        assert_eq!(q_int(3), p(&[1, 1, 1]));
        assert_eq!(q_int(5).eval_at_one(), BigInt::from(5));
        // (1 - q^-1)/(1 - q) = -q^-1
        assert_eq!(q_int(-1), LaurentPoly::monomial(-1, -1));
        for k in -6..=6 {
            assert_eq!(q_int(k) * one_minus_q_pow(1), one_minus_q_pow(k));
        }
    }

    #[test]
    fn binomials() {
        assert_eq!(q_binomial(2, 1).unwrap(), p(&[1, 1]));
        assert_eq!(q_binomial(4, 2).unwrap(), p(&[1, 1, 2, 1, 1]));
        assert_eq!(q_binomial(5, 0).unwrap(), LaurentPoly::one());
        assert!(matches!(q_binomial(2, 3), Err(Error::Domain(_))));
        assert!(q_factorial(-1).is_err());
        assert_eq!(q_factorial(0).unwrap(), LaurentPoly::one());
    }

    #[test]
    fn binomial_pascal_rule() {
        for n in 1..12 {
            for k in 1..n {
                let lhs = q_binomial(n, k).unwrap();
                let rhs = q_binomial(n - 1, k - 1).unwrap() + q_binomial(n - 1, k).unwrap().shift(k);
                assert_eq!(lhs, rhs);
            }
        }
    }
}
