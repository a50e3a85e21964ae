//! Laurent polynomials in `q` with big-integer coefficients.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

/// Sparse terms sorted by exponent, no zero coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: Vec<(i64, BigInt)>,
}

impl LaurentPoly {
    pub fn zero() -> LaurentPoly {
        LaurentPoly { terms: Vec::new() }
    }

    pub fn one() -> LaurentPoly {
        LaurentPoly::monomial(0, 1)
    }

    /// `coeff * q^exp`.
    pub fn monomial(exp: i64, coeff: impl Into<BigInt>) -> LaurentPoly {
        let c = coeff.into();
        if c.is_zero() {
            LaurentPoly::zero()
        } else {
            LaurentPoly { terms: vec![(exp, c)] }
        }
    }

    /// `q^exp`.
    pub fn q_pow(exp: i64) -> LaurentPoly {
        LaurentPoly::monomial(exp, 1)
    }

    /// Coefficients `coeffs[i]` of `q^(lowest + i)`.
    pub fn from_dense<C: Into<BigInt>>(lowest: i64, coeffs: impl IntoIterator<Item = C>) -> LaurentPoly {
        let terms = coeffs
            .into_iter()
            .enumerate()
            .map(|(i, c)| (lowest + i as i64, c.into()))
            .filter(|(_, c)| !c.is_zero())
            .collect();
        LaurentPoly { terms }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i64, BigInt)>) -> LaurentPoly {
        let mut v: Vec<(i64, BigInt)> = terms.into_iter().collect();
        v.sort_by_key(|(e, _)| *e);
        let mut out: Vec<(i64, BigInt)> = Vec::with_capacity(v.len());
        for (e, c) in v {
            match out.last_mut() {
                Some((le, lc)) if *le == e => *lc += c,
                _ => out.push((e, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        LaurentPoly { terms: out }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[(i64, BigInt)] {
        &self.terms
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        match self.terms.binary_search_by_key(&exp, |(e, _)| *e) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => BigInt::zero(),
        }
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.first().map(|(e, _)| *e)
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.last().map(|(e, _)| *e)
    }

    /// Sum of coefficients, the value at `q = 1`.
    pub fn eval_at_one(&self) -> BigInt {
        self.terms.iter().map(|(_, c)| c).sum()
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: i64) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn scale(&self, k: impl Into<BigInt>) -> LaurentPoly {
        let k = k.into();
        if k.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, c * &k)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> LaurentPoly {
        let mut out = LaurentPoly::one();
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    /// Exact quotient `self / divisor`; fails if the division leaves a remainder.
    pub fn div_exact(&self, divisor: &LaurentPoly) -> Result<LaurentPoly> {
        let (quotient, remainder) = self.div_rem(divisor)?;
        if remainder.is_zero() {
            Ok(quotient)
        } else {
            Err(Error::Internal(format!("({self}) is not divisible by ({divisor}); remainder {remainder}")))
        }
    }

    /// Long division from the top degree. The remainder has all exponents
    /// below `min_exp(self) + deg(divisor)` span.
    pub fn div_rem(&self, divisor: &LaurentPoly) -> Result<(LaurentPoly, LaurentPoly)> {
        let (Some(dlo), Some(dhi)) = (divisor.min_exp(), divisor.max_exp()) else {
            return Err(Error::Internal("division by the zero polynomial".into()));
        };
        let lead = divisor.coeff(dhi);
        let mut rem = self.clone();
        let mut quotient = Vec::new();
        let floor = self.min_exp().unwrap_or(0) - dlo + dhi;
        while let Some(top) = rem.max_exp() {
            if top < floor {
                break;
            }
            let c = rem.coeff(top);
            let (qc, r) = c.div_rem(&lead);
            if !r.is_zero() {
                break;
            }
            let e = top - dhi;
            rem = &rem - &divisor.shift(e).scale(qc.clone());
            quotient.push((e, qc));
        }
        Ok((LaurentPoly::from_terms(quotient), rem))
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({ "poly": self.json_terms() })
    }

    fn json_terms(&self) -> Vec<(i64, serde_json::Value)> {
        self.terms
            .iter()
            .map(|(e, c)| {
                let v = match c.to_i64() {
                    Some(i) => serde_json::Value::from(i),
                    None => serde_json::Value::from(c.to_string()),
                };
                (*e, v)
            })
            .collect()
    }
}

impl Serialize for LaurentPoly {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.json_terms().serialize(serializer)
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> LaurentPoly {
        LaurentPoly::monomial(0, c)
    }
}

fn merge(a: &LaurentPoly, b: &LaurentPoly, negate_b: bool) -> LaurentPoly {
    let mut out = Vec::with_capacity(a.terms.len() + b.terms.len());
    let (mut i, mut j) = (0, 0);
    let sign = |c: &BigInt| if negate_b { -c } else { c.clone() };
    while i < a.terms.len() && j < b.terms.len() {
        let (ea, ca) = &a.terms[i];
        let (eb, cb) = &b.terms[j];
        if ea < eb {
            out.push((*ea, ca.clone()));
            i += 1;
        } else if eb < ea {
            out.push((*eb, sign(cb)));
            j += 1;
        } else {
            let c = if negate_b { ca - cb } else { ca + cb };
            if !c.is_zero() {
                out.push((*ea, c));
            }
            i += 1;
            j += 1;
        }
    }
    out.extend(a.terms[i..].iter().cloned());
    out.extend(b.terms[j..].iter().map(|(e, c)| (*e, sign(c))));
    LaurentPoly { terms: out }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        merge(self, rhs, false)
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        merge(self, rhs, true)
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let (Some(alo), Some(ahi), Some(blo), Some(bhi)) =
            (self.min_exp(), self.max_exp(), rhs.min_exp(), rhs.max_exp())
        else {
            return LaurentPoly::zero();
        };
        let lo = alo + blo;
        let mut dense = vec![BigInt::zero(); (ahi + bhi - lo + 1) as usize];
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                dense[(ea + eb - lo) as usize] += ca * cb;
            }
        }
        LaurentPoly::from_dense(lo, dense)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

macro_rules! owned_ops {
    ($($tr:ident $f:ident),*) => {$(
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $f(self, rhs: LaurentPoly) -> LaurentPoly { (&self).$f(&rhs) }
        }
        impl $tr<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $f(self, rhs: &LaurentPoly) -> LaurentPoly { (&self).$f(rhs) }
        }
        impl $tr<LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $f(self, rhs: LaurentPoly) -> LaurentPoly { self.$f(&rhs) }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        *self = &*self + rhs;
    }
}

impl AddAssign for LaurentPoly {
    fn add_assign(&mut self, rhs: LaurentPoly) {
        *self += &rhs;
    }
}

impl Sum for LaurentPoly {
    fn sum<I: Iterator<Item = LaurentPoly>>(iter: I) -> LaurentPoly {
        iter.fold(LaurentPoly::zero(), |acc, p| acc + p)
    }
}

impl<'a> Sum<&'a LaurentPoly> for LaurentPoly {
    fn sum<I: Iterator<Item = &'a LaurentPoly>>(iter: I) -> LaurentPoly {
        iter.fold(LaurentPoly::zero(), |acc, p| acc + p)
    }
}

/// Ascending exponents: `q^-1 + 2 + 3*q^2`, `1 - q`, `0`.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let mag = c.abs();
            if i == 0 {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            let var = match e {
                0 => String::new(),
                1 => "q".to_string(),
                e => format!("q^{e}"),
            };
            if var.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                f.write_str(&var)?;
            } else {
                write!(f, "{mag}*{var}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(lowest: i64, c: &[i64]) -> LaurentPoly {
        LaurentPoly::from_dense(lowest, c.iter().copied())
    }

    #[test]
    fn display_forms() {
        assert_eq!(p(-1, &[1, 2, 0, 3]).to_string(), "q^-1 + 2 + 3*q^2");
        assert_eq!(p(0, &[1, 2, 1]).to_string(), "1 + 2*q + q^2");
        assert_eq!(p(0, &[1, -1]).to_string(), "1 - q");
        assert_eq!(p(1, &[-2]).to_string(), "-2*q");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
    }

    #[test]
    fn no_zero_terms() {
        let a = p(0, &[1, 1]);
        let b = p(0, &[1, 1]);
        assert!((&a - &b).is_zero());
        assert_eq!((&a - &b).terms().len(), 0);
        assert_eq!(p(0, &[0, 0, 5, 0]).terms().len(), 1);
    }

    #[test]
    fn arithmetic() {
        let one_plus_q = p(0, &[1, 1]);
        assert_eq!(&one_plus_q * &one_plus_q, p(0, &[1, 2, 1]));
        assert_eq!(one_plus_q.pow(3).eval_at_one(), BigInt::from(8));
        assert_eq!(p(-2, &[1]).shift(2), LaurentPoly::one());
        assert_eq!((&one_plus_q * &p(-1, &[1, -1])).to_string(), "q^-1 - q");
    }

    #[test]
    fn exact_division() {
        let a = p(0, &[1, 1]);
        let b = p(0, &[1, 2, 3, 4]);
        assert_eq!((&a * &b).div_exact(&a).unwrap(), b);
        let lp = p(-3, &[2, 0, 1]);
        assert_eq!((&lp * &a).div_exact(&a).unwrap(), lp);
        assert!(matches!(p(0, &[1, 0, 1]).div_exact(&a), Err(Error::Internal(_))));
        assert!(p(0, &[1]).div_exact(&LaurentPoly::zero()).is_err());
    }

    #[test]
    fn json_shape() {
        assert_eq!(p(-1, &[1, 0, 3]).to_json().to_string(), r#"{"poly":[[-1,1],[1,3]]}"#);
    }
}
