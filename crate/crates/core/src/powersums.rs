//! Power sums `σ_p(n) = 1^p + ... + n^p` and the identities expressing
//! `n^m (n+1)^m` through them.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::report::Report;

pub fn sigma(p: i64, n: i64) -> Result<BigInt> {
    if p < 0 || n < 1 {
        return Err(Error::Domain(format!("power sum needs p >= 0 and n >= 1, got p={p}, n={n}")));
    }
    Ok((1..=n).map(|k| BigInt::from(k).pow(p as u32)).sum())
}

fn binomial(m: i64, r: i64) -> BigInt {
    num_integer::binomial(BigInt::from(m), BigInt::from(r))
}

/// Odd `p`: `n^m (n+1)^m = Σ_{odd r <= m} 2 C(m,r) σ_{p+1-r}` with `m = (p+1)/2`.
/// Even `p`, both sides doubled: `(2n+1) n^m (n+1)^m = Σ_{odd r <= m} 4 C(m,r) σ_{p+1-r}
/// + Σ_{even r <= m} 2 C(m,r) σ_{p-r}` with `m = p/2`.
pub fn verify_beardon(p: i64, n: i64) -> Result<Report> {
    if p < 3 {
        return Err(Error::Domain(format!("power-sum identity needs p >= 3, got {p}")));
    }
    if n < 1 {
        return Err(Error::Domain(format!("n must be >= 1, got {n}")));
    }
    let mut r = Report::new("beardon", n).with_p(p);
    let nb = BigInt::from(n);
    let n1 = BigInt::from(n + 1);
    let (lhs, rhs) = if p % 2 == 1 {
        let m = (p + 1) / 2;
        let lhs = nb.pow(m as u32) * n1.pow(m as u32);
        let mut rhs = BigInt::from(0);
        for r in (1..=m).step_by(2) {
            rhs += 2 * binomial(m, r) * sigma(p + 1 - r, n)?;
        }
        (lhs, rhs)
    } else {
        let m = p / 2;
        let lhs = BigInt::from(2 * n + 1) * nb.pow(m as u32) * n1.pow(m as u32);
        let mut rhs = BigInt::from(0);
        for r in (1..=m).step_by(2) {
            rhs += 4 * binomial(m, r) * sigma(p + 1 - r, n)?;
        }
        for r in (0..=m).step_by(2) {
            rhs += 2 * binomial(m, r) * sigma(p - r, n)?;
        }
        (lhs, rhs)
    };
    let what = if p % 2 == 1 { "odd p identity" } else { "even p identity, doubled" };
    r.check_eq(what, &lhs, &rhs);
    Ok(r)
}

/// `6 σ_2 = n(n+1)(2n+1)` and `4 σ_3 = n^2 (n+1)^2`.
pub fn verify_base(n: i64) -> Result<Report> {
    let mut r = Report::new("power_sum_base", n);
    let nb = BigInt::from(n);
    let n1 = BigInt::from(n + 1);
    r.check_eq(
        "6 σ_2(n) = n(n+1)(2n+1)",
        &(6 * sigma(2, n)?),
        &(&nb * &n1 * BigInt::from(2 * n + 1)),
    );
    r.check_eq("4 σ_3(n) = n^2 (n+1)^2", &(4 * sigma(3, n)?), &(&nb * &nb * &n1 * &n1));
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sigma_values() {
        assert_eq!(sigma(3, 4).unwrap(), BigInt::from(100));
        assert_eq!(sigma(0, 7).unwrap(), BigInt::from(7));
        assert_eq!(sigma(5, 2).unwrap(), BigInt::from(33));
        assert!(sigma(-1, 3).is_err());
        assert!(sigma(2, 0).is_err());
    }

    #[test]
    fn worked_examples() {
        // p = 5, n = 2: 216 = 6 σ_5 + 2 σ_3
        assert_eq!(6 * sigma(5, 2).unwrap() + 2 * sigma(3, 2).unwrap(), BigInt::from(216));
        // p = 4, n = 2 doubled: 180 = 10 σ_4 + 2 σ_2
        assert_eq!(10 * sigma(4, 2).unwrap() + 2 * sigma(2, 2).unwrap(), BigInt::from(180));
        for (p, n) in [(5, 2), (4, 2), (3, 5)] {
            assert!(verify_beardon(p, n).unwrap().pass);
        }
        assert_eq!(4 * sigma(3, 5).unwrap(), BigInt::from(900));
    }

    #[test]
    fn base_cases() {
        for n in [1, 4, 30] {
            assert!(verify_base(n).unwrap().pass);
        }
        assert_eq!(4 * sigma(3, 30).unwrap(), BigInt::from(864_900));
    }

    #[test]
    fn small_p_rejected() {
        assert!(matches!(verify_beardon(2, 5), Err(Error::Domain(_))));
        assert!(verify_beardon(3, 0).is_err());
        assert_eq!(verify_beardon(7, 3).unwrap().p, Some(7));
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(4, 0), BigInt::from(1));
        assert_eq!(binomial(8, 8), BigInt::from(1));
    }
}
