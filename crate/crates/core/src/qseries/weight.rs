//! Taxicab statistics over cube sets.

use std::fmt;

use num_bigint::BigInt;

use crate::isometry::{Isometry, Sign};
use crate::lattice::{Axis, CubeSet, LocationLabel};

use super::poly::LaurentPoly;

/// How one axis contributes to the exponent of `q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Orientation {
    /// contributes `v - base`
    FromLow(i64),
    /// contributes `base - v`
    FromHigh(i64),
}

impl Orientation {
    pub fn base(self) -> i64 {
        match self {
            Orientation::FromLow(b) | Orientation::FromHigh(b) => b,
        }
    }

    pub fn contribution(self, v: i64) -> i64 {
        match self {
            Orientation::FromLow(b) => v - b,
            Orientation::FromHigh(b) => b - v,
        }
    }

    fn is_low(self) -> bool {
        matches!(self, Orientation::FromLow(_))
    }

    /// Signed constant term of the contribution.
    fn constant(self) -> i64 {
        match self {
            Orientation::FromLow(b) => -b,
            Orientation::FromHigh(b) => b,
        }
    }
}

/// Exponent rule `offset + Σ contribution_i(v_i)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct WeightSpec {
    pub axes: [Orientation; 4],
    pub offset: i64,
}

impl WeightSpec {
    pub fn new(axes: [Orientation; 4], offset: i64) -> WeightSpec {
        WeightSpec { axes, offset }
    }

    pub fn from_low(bases: [i64; 4]) -> WeightSpec {
        WeightSpec::new(bases.map(Orientation::FromLow), 0)
    }

    pub fn from_high(bases: [i64; 4]) -> WeightSpec {
        WeightSpec::new(bases.map(Orientation::FromHigh), 0)
    }

    pub fn with_offset(mut self, offset: i64) -> WeightSpec {
        self.offset = offset;
        self
    }

    /// The start point the distances are measured from.
    pub fn base_point(&self) -> LocationLabel {
        LocationLabel(self.axes.map(Orientation::base))
    }

    pub fn contributions(&self, v: &LocationLabel) -> [i64; 4] {
        std::array::from_fn(|i| self.axes[i].contribution(v.0[i]))
    }

    pub fn exponent(&self, v: &LocationLabel) -> i64 {
        self.offset + self.contributions(v).iter().sum::<i64>()
    }

    /// Same exponent on every label: equal orientations and equal total constant.
    pub fn equivalent(&self, other: &WeightSpec) -> bool {
        let total = |w: &WeightSpec| w.offset + w.axes.iter().map(|o| o.constant()).sum::<i64>();
        (0..4).all(|i| self.axes[i].is_low() == other.axes[i].is_low()) && total(self) == total(other)
    }

    /// The spec `w'` with `w'.exponent(f(v)) == self.exponent(v)` for all labels.
    pub fn transport(&self, f: &Isometry) -> WeightSpec {
        let axes = std::array::from_fn(|i| {
            let out = Axis::from_index(i);
            let t = f.shift(out);
            match (f.sign(out), self.axes[f.source_axis(out).index()]) {
                (Sign::Plus, Orientation::FromLow(b)) => Orientation::FromLow(b + t),
                (Sign::Plus, Orientation::FromHigh(b)) => Orientation::FromHigh(b + t),
                (Sign::Minus, Orientation::FromLow(b)) => Orientation::FromHigh(t + 1 - b),
                (Sign::Minus, Orientation::FromHigh(b)) => Orientation::FromLow(t + 1 - b),
            }
        });
        WeightSpec::new(axes, self.offset)
    }

    /// Labels with a negative axis contribution or a negative total.
    pub fn invalid_labels(&self, s: &CubeSet) -> CubeSet {
        s.filter(|v| self.contributions(v).iter().any(|&c| c < 0) || self.exponent(v) < 0)
    }
}

impl fmt::Display for WeightSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = ['a', 'b', 'c', 'd'];
        let parts: Vec<String> = self
            .axes
            .iter()
            .zip(names)
            .map(|(o, v)| match o {
                Orientation::FromLow(b) => format!("({v}-{b})"),
                Orientation::FromHigh(b) => format!("({b}-{v})"),
            })
            .collect();
        if self.offset == 0 {
            write!(f, "{}", parts.join(" + "))
        } else {
            write!(f, "{} + {}", self.offset, parts.join(" + "))
        }
    }
}

/// `Σ_{v in s} q^{w(v)}`.
pub fn gf(s: &CubeSet, w: &WeightSpec) -> LaurentPoly {
    poly_from_exponents(s.iter().map(|v| w.exponent(v)))
}

/// `Σ q^e` over a multiset of exponents.
pub(crate) fn poly_from_exponents(exps: impl IntoIterator<Item = i64>) -> LaurentPoly {
    let exps: Vec<i64> = exps.into_iter().collect();
    let (Some(&lo), Some(&hi)) = (exps.iter().min(), exps.iter().max()) else {
        return LaurentPoly::zero();
    };
    let mut counts = vec![0u64; (hi - lo + 1) as usize];
    for e in exps {
        counts[(e - lo) as usize] += 1;
    }
    LaurentPoly::from_dense(lo, counts.into_iter().map(BigInt::from))
}
