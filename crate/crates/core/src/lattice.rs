//! Lattice cubes of Z^4.
//!
//! A unit cube is named by the right endpoints of its four unit intervals: the
//! label `(a, b, c, d)` stands for `[a-1, a] x [b-1, b] x [c-1, c] x [d-1, d]`.
//! Labels are the only stored representation; interval geometry is
//! reconstructed when needed.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// One of the four coordinate axes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Axis {
    X,
    Y,
    Z,
    W,
}

impl Axis {
    pub const ALL: [Axis; 4] = [Axis::X, Axis::Y, Axis::Z, Axis::W];

    pub fn index(self) -> usize {
        match self {
            Axis::X => 0,
            Axis::Y => 1,
            Axis::Z => 2,
            Axis::W => 3,
        }
    }

    pub fn from_index(i: usize) -> Axis {
        Axis::ALL[i]
    }

    pub fn name(self) -> char {
        ['x', 'y', 'z', 'w'][self.index()]
    }

    pub fn from_name(c: char) -> Option<Axis> {
        match c {
            'x' => Some(Axis::X),
            'y' => Some(Axis::Y),
            'z' => Some(Axis::Z),
            'w' => Some(Axis::W),
            _ => None,
        }
    }
}

impl fmt::Display for Axis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

/// Location label of a unit cube. Ordering is lexicographic on `(a, b, c, d)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct LocationLabel(pub [i64; 4]);

impl LocationLabel {
    pub const fn new(a: i64, b: i64, c: i64, d: i64) -> Self {
        LocationLabel([a, b, c, d])
    }

    pub fn a(&self) -> i64 {
        self.0[0]
    }
    pub fn b(&self) -> i64 {
        self.0[1]
    }
    pub fn c(&self) -> i64 {
        self.0[2]
    }
    pub fn d(&self) -> i64 {
        self.0[3]
    }

    pub fn coord(&self, axis: Axis) -> i64 {
        self.0[axis.index()]
    }

    /// Lower corner of the closed cube.
    pub fn low_corner(&self) -> [i64; 4] {
        self.0.map(|v| v - 1)
    }

    /// Upper corner of the closed cube (equal to the label itself).
    pub fn high_corner(&self) -> [i64; 4] {
        self.0
    }

    /// Recovers the label from two opposite corners of a unit cube.
    ///
    /// Returns `None` unless the corners span exactly one unit on every axis.
    pub fn from_corners(p: [i64; 4], q: [i64; 4]) -> Option<Self> {
        let mut out = [0; 4];
        for i in 0..4 {
            if (p[i] - q[i]).abs() != 1 {
                return None;
            }
            out[i] = p[i].max(q[i]);
        }
        Some(LocationLabel(out))
    }

    pub fn max_coord(&self) -> i64 {
        *self.0.iter().max().expect("four coordinates")
    }

    /// Taxicab distance to another label.
    pub fn taxicab(&self, other: &LocationLabel) -> i64 {
        (0..4).map(|i| (self.0[i] - other.0[i]).abs()).sum()
    }
}

impl From<[i64; 4]> for LocationLabel {
    fn from(v: [i64; 4]) -> Self {
        LocationLabel(v)
    }
}

impl fmt::Display for LocationLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.0;
        write!(f, "({a},{b},{c},{d})")
    }
}

/// A finite set of location labels, kept sorted and deduplicated.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CubeSet {
    labels: Vec<LocationLabel>,
}

impl CubeSet {
    pub fn new() -> Self {
        CubeSet { labels: Vec::new() }
    }

    /// Builds a set from arbitrary labels, sorting and dropping duplicates.
    pub fn from_labels(mut labels: Vec<LocationLabel>) -> Self {
        labels.sort_unstable();
        labels.dedup();
        CubeSet { labels }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn contains(&self, v: &LocationLabel) -> bool {
        self.labels.binary_search(v).is_ok()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, LocationLabel> {
        self.labels.iter()
    }

    pub fn as_slice(&self) -> &[LocationLabel] {
        &self.labels
    }

    pub fn into_vec(self) -> Vec<LocationLabel> {
        self.labels
    }

    pub fn filter(&self, mut keep: impl FnMut(&LocationLabel) -> bool) -> CubeSet {
        CubeSet {
            labels: self.labels.iter().copied().filter(|v| keep(v)).collect(),
        }
    }

    pub fn union(&self, other: &CubeSet) -> CubeSet {
        let mut out = Vec::with_capacity(self.len() + other.len());
        let (mut i, mut j) = (0, 0);
        let (s, t) = (&self.labels, &other.labels);
        while i < s.len() && j < t.len() {
            match s[i].cmp(&t[j]) {
                std::cmp::Ordering::Less => {
                    out.push(s[i]);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(t[j]);
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    out.push(s[i]);
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&s[i..]);
        out.extend_from_slice(&t[j..]);
        CubeSet { labels: out }
    }

    pub fn intersection(&self, other: &CubeSet) -> CubeSet {
        self.merge_filter(other, true)
    }

    /// Labels of `self` not in `other`.
    pub fn difference(&self, other: &CubeSet) -> CubeSet {
        self.merge_filter(other, false)
    }

    fn merge_filter(&self, other: &CubeSet, keep_shared: bool) -> CubeSet {
        let mut out = Vec::new();
        let mut j = 0;
        let t = &other.labels;
        for v in &self.labels {
            while j < t.len() && t[j] < *v {
                j += 1;
            }
            let shared = j < t.len() && t[j] == *v;
            if shared == keep_shared {
                out.push(*v);
            }
        }
        CubeSet { labels: out }
    }

    pub fn is_disjoint(&self, other: &CubeSet) -> bool {
        self.intersection(other).is_empty()
    }

    pub fn is_subset(&self, other: &CubeSet) -> bool {
        self.difference(other).is_empty()
    }

    /// The sub-labels `(a, b, c)` of every cube whose `w` label equals `d`.
    pub fn w_slice(&self, d: i64) -> Vec<[i64; 3]> {
        self.labels
            .iter()
            .filter(|v| v.d() == d)
            .map(|v| [v.a(), v.b(), v.c()])
            .collect()
    }

    /// Distinct `w` labels present, ascending.
    pub fn w_values(&self) -> Vec<i64> {
        let mut ws: Vec<i64> = self.labels.iter().map(|v| v.d()).collect();
        ws.sort_unstable();
        ws.dedup();
        ws
    }

    /// `{"labels": [[a,b,c,d], ...]}`, sorted lexicographically.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({ "labels": self.labels })
    }

    pub fn from_json(value: &serde_json::Value) -> Result<CubeSet> {
        let labels = value
            .get("labels")
            .ok_or_else(|| Error::Parse("missing \"labels\" field".into()))?;
        let labels: Vec<LocationLabel> = serde_json::from_value(labels.clone())
            .map_err(|e| Error::Parse(format!("bad label list: {e}")))?;
        Ok(CubeSet::from_labels(labels))
    }
}

impl FromIterator<LocationLabel> for CubeSet {
    fn from_iter<I: IntoIterator<Item = LocationLabel>>(iter: I) -> Self {
        CubeSet::from_labels(iter.into_iter().collect())
    }
}

impl<'a> IntoIterator for &'a CubeSet {
    type Item = &'a LocationLabel;
    type IntoIter = std::slice::Iter<'a, LocationLabel>;

    fn into_iter(self) -> Self::IntoIter {
        self.labels.iter()
    }
}

/// Axis-aligned box of labels with inclusive bounds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Region {
    lo: [i64; 4],
    hi: [i64; 4],
}

impl Region {
    pub fn new(lo: [i64; 4], hi: [i64; 4]) -> Result<Region> {
        if (0..4).any(|i| lo[i] > hi[i]) {
            return Err(Error::Domain(format!(
                "region bounds must satisfy lo <= hi, got {lo:?}..{hi:?}"
            )));
        }
        Ok(Region { lo, hi })
    }

    /// The rectangular target region: `a, b` in `1..=n+1`, `c, d` in `1..=n`.
    pub fn r3(n: i64) -> Result<Region> {
        if n < 1 {
            return Err(Error::Domain(format!("n must be at least 1, got {n}")));
        }
        Region::new([1, 1, 1, 1], [n + 1, n + 1, n, n])
    }

    pub fn lo(&self) -> [i64; 4] {
        self.lo
    }

    pub fn hi(&self) -> [i64; 4] {
        self.hi
    }

    pub fn contains(&self, v: &LocationLabel) -> bool {
        (0..4).all(|i| self.lo[i] <= v.0[i] && v.0[i] <= self.hi[i])
    }

    pub fn volume(&self) -> u64 {
        (0..4).map(|i| (self.hi[i] - self.lo[i] + 1) as u64).product()
    }

    /// Materializes every label, already in lexicographic order.
    pub fn to_cube_set(&self) -> CubeSet {
        let mut labels = Vec::with_capacity(self.volume() as usize);
        for a in self.lo[0]..=self.hi[0] {
            for b in self.lo[1]..=self.hi[1] {
                for c in self.lo[2]..=self.hi[2] {
                    for d in self.lo[3]..=self.hi[3] {
                        labels.push(LocationLabel([a, b, c, d]));
                    }
                }
            }
        }
        CubeSet { labels }
    }
}

/// All labels of the rectangular region of side lengths `n+1, n+1, n, n`.
pub fn region_r3(n: i64) -> Result<CubeSet> {
    Ok(Region::r3(n)?.to_cube_set())
}

/// Outcome of comparing two cube sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetRelation {
    pub disjoint: bool,
    pub equal: bool,
    pub union: CubeSet,
    /// `s \ t`.
    pub difference: CubeSet,
}

pub fn set_relate(s: &CubeSet, t: &CubeSet) -> SetRelation {
    SetRelation {
        disjoint: s.is_disjoint(t),
        equal: s == t,
        union: s.union(t),
        difference: s.difference(t),
    }
}
