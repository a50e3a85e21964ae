//! Axis-aligned integer isometries of R^4.
//!
//! Every map is kept in the normal form `x'_i = s_i * x_{src(i)} + t_i` with a
//! permutation `src`, signs `s_i` in `{+1, -1}` and integer shifts `t_i`. Such
//! maps send unit cubes with integer endpoints to unit cubes with integer
//! endpoints, so they act on location labels. The label action is always
//! derived from the point action on the two corners of the cube.

use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::lattice::{Axis, CubeSet, LocationLabel};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    fn from_value(v: i64) -> Sign {
        if v < 0 {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }
}

impl Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        Sign::from_value(self.value() * rhs.value())
    }
}

/// Orientation class of an isometry.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Rotation,
    Reflection,
}

impl Parity {
    pub fn value(self) -> i64 {
        match self {
            Parity::Rotation => 1,
            Parity::Reflection => -1,
        }
    }
}

impl Mul for Parity {
    type Output = Parity;

    fn mul(self, rhs: Parity) -> Parity {
        if self == rhs {
            Parity::Rotation
        } else {
            Parity::Reflection
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Isometry {
    src: [Axis; 4],
    signs: [Sign; 4],
    shift: [i64; 4],
}

impl Default for Isometry {
    fn default() -> Self {
        Isometry::identity()
    }
}

impl Isometry {
    pub fn identity() -> Isometry {
        Isometry {
            src: Axis::ALL,
            signs: [Sign::Plus; 4],
            shift: [0; 4],
        }
    }

    /// Builds `x'_i = signs[i] * x_{src[i]} + shift[i]`.
    ///
    /// Fails unless `src` is a permutation of the four axes.
    pub fn new(src: [Axis; 4], signs: [Sign; 4], shift: [i64; 4]) -> Result<Isometry> {
        let mut seen = [false; 4];
        for a in src {
            if std::mem::replace(&mut seen[a.index()], true) {
                return Err(Error::Domain(format!(
                    "axis {a} used twice; source axes must form a permutation"
                )));
            }
        }
        Ok(Isometry { src, signs, shift })
    }

    /// Pure coordinate permutation: output axis `i` reads source axis `src[i]`.
    pub fn permutation(src: [Axis; 4]) -> Result<Isometry> {
        Isometry::new(src, [Sign::Plus; 4], [0; 4])
    }

    pub fn translation(shift: [i64; 4]) -> Isometry {
        Isometry {
            src: Axis::ALL,
            signs: [Sign::Plus; 4],
            shift,
        }
    }

    pub fn source_axis(&self, output: Axis) -> Axis {
        self.src[output.index()]
    }

    pub fn sign(&self, output: Axis) -> Sign {
        self.signs[output.index()]
    }

    pub fn shift(&self, output: Axis) -> i64 {
        self.shift[output.index()]
    }

    pub fn is_translation(&self) -> bool {
        self.src == Axis::ALL && self.signs == [Sign::Plus; 4]
    }

    pub fn apply_point(&self, p: [i64; 4]) -> [i64; 4] {
        std::array::from_fn(|i| self.signs[i].value() * p[self.src[i].index()] + self.shift[i])
    }

    /// Label of the image cube, read off the images of the two corners.
    pub fn apply_label(&self, v: LocationLabel) -> LocationLabel {
        let lo = self.apply_point(v.low_corner());
        let hi = self.apply_point(v.high_corner());
        LocationLabel(std::array::from_fn(|i| lo[i].max(hi[i])))
    }

    pub fn apply_set(&self, s: &CubeSet) -> CubeSet {
        s.iter().map(|&v| self.apply_label(v)).collect()
    }

    /// `self ∘ inner`: apply `inner` first.
    pub fn compose(&self, inner: &Isometry) -> Isometry {
        let mut src = [Axis::X; 4];
        let mut signs = [Sign::Plus; 4];
        let mut shift = [0; 4];
        for i in 0..4 {
            let j = self.src[i].index();
            src[i] = inner.src[j];
            signs[i] = self.signs[i] * inner.signs[j];
            shift[i] = self.signs[i].value() * inner.shift[j] + self.shift[i];
        }
        Isometry { src, signs, shift }
    }

    pub fn invert(&self) -> Isometry {
        let mut src = [Axis::X; 4];
        let mut signs = [Sign::Plus; 4];
        let mut shift = [0; 4];
        for i in 0..4 {
            let j = self.src[i].index();
            src[j] = Axis::from_index(i);
            signs[j] = self.signs[i];
            shift[j] = -self.signs[i].value() * self.shift[i];
        }
        Isometry { src, signs, shift }
    }

    /// Rotation iff the permutation sign times the product of axis signs is +1.
    pub fn parity(&self) -> Parity {
        let mut inversions = 0;
        for i in 0..4 {
            for j in i + 1..4 {
                if self.src[i] > self.src[j] {
                    inversions += 1;
                }
            }
        }
        let perm_sign = if inversions % 2 == 0 { 1 } else { -1 };
        let sign_product: i64 = self.signs.iter().map(|s| s.value()).product();
        if perm_sign * sign_product == 1 {
            Parity::Rotation
        } else {
            Parity::Reflection
        }
    }

    /// `(x,y,z,w) -> (w+1, z+2, y, x)` style rendering.
    pub fn to_text(&self) -> String {
        self.to_string()
    }
}

impl Mul for Isometry {
    type Output = Isometry;

    fn mul(self, rhs: Isometry) -> Isometry {
        self.compose(&rhs)
    }
}

fn component_text(axis: Axis, sign: Sign, shift: i64) -> String {
    match (sign, shift) {
        (Sign::Plus, 0) => format!("{axis}"),
        (Sign::Plus, t) if t > 0 => format!("{axis}+{t}"),
        (Sign::Plus, t) => format!("{axis}-{}", -t),
        (Sign::Minus, 0) => format!("-{axis}"),
        (Sign::Minus, t) => format!("{t}-{axis}"),
    }
}

impl fmt::Display for Isometry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = (0..4)
            .map(|i| component_text(self.src[i], self.signs[i], self.shift[i]))
            .collect();
        write!(f, "(x,y,z,w) -> ({})", parts.join(", "))
    }
}

/// Parses one output component such as `w+1`, `5-y`, `-x` or `z + 2 - 1`.
fn parse_component(text: &str) -> Result<(Axis, Sign, i64)> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(Error::Parse("empty map component".into()));
    }
    let mut var: Option<(Axis, Sign)> = None;
    let mut constant = 0i64;
    let mut chars = compact.chars().peekable();
    let mut first = true;
    while chars.peek().is_some() {
        let mut sign = Sign::Plus;
        match chars.peek() {
            Some('+') => {
                chars.next();
            }
            Some('-') => {
                sign = Sign::Minus;
                chars.next();
            }
            _ if first => {}
            Some(c) => return Err(Error::Parse(format!("expected '+' or '-' before '{c}' in {text:?}"))),
            None => unreachable!(),
        }
        first = false;
        match chars.peek().copied() {
            Some(c) if c.is_ascii_digit() => {
                let mut digits = String::new();
                while let Some(&d) = chars.peek() {
                    if !d.is_ascii_digit() {
                        break;
                    }
                    digits.push(d);
                    chars.next();
                }
                let value: i64 = digits
                    .parse()
                    .map_err(|_| Error::Parse(format!("integer out of range in {text:?}")))?;
                constant += sign.value() * value;
            }
            Some(c) => {
                let axis = Axis::from_name(c)
                    .ok_or_else(|| Error::Parse(format!("unexpected character '{c}' in {text:?}")))?;
                chars.next();
                if var.replace((axis, sign)).is_some() {
                    return Err(Error::Parse(format!("more than one variable in {text:?}")));
                }
            }
            None => return Err(Error::Parse(format!("dangling sign in {text:?}"))),
        }
    }
    let (axis, sign) = var.ok_or_else(|| Error::Parse(format!("no variable in {text:?}")))?;
    Ok((axis, sign, constant))
}

impl FromStr for Isometry {
    type Err = Error;

    fn from_str(s: &str) -> Result<Isometry> {
        let (lhs, rhs) = s
            .split_once("->")
            .ok_or_else(|| Error::Parse(format!("missing '->' in {s:?}")))?;
        let lhs: String = lhs.chars().filter(|c| !c.is_whitespace()).collect();
        if lhs != "(x,y,z,w)" {
            return Err(Error::Parse(format!("left side must be (x,y,z,w), got {lhs:?}")));
        }
        let rhs = rhs.trim();
        let inner = rhs
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| Error::Parse(format!("right side must be parenthesized: {rhs:?}")))?;
        let comps: Vec<&str> = inner.split(',').collect();
        if comps.len() != 4 {
            return Err(Error::Parse(format!("expected 4 components, got {}", comps.len())));
        }
        let mut src = [Axis::X; 4];
        let mut signs = [Sign::Plus; 4];
        let mut shift = [0; 4];
        for (i, c) in comps.iter().enumerate() {
            let (a, s, t) = parse_component(c)?;
            src[i] = a;
            signs[i] = s;
            shift[i] = t;
        }
        Isometry::new(src, signs, shift).map_err(|e| Error::Parse(e.to_string()))
    }
}

/// Every map named in the constructions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MapId {
    /// `(y, z, x, w)`: carries A's indicator axis z to B's indicator axis y.
    RhoYzx,
    TauYPlus1,
    /// `(z, x, y, w)`.
    RhoZxy,
    TauXPlus1YPlus1,
    /// `(w, y, x, z)`.
    RhoWxz,
    TauZMinus1,
    TauYMinus1,
    TauZPlus1,
    TauXMinus1YMinus1,
    /// Replication map sending D onto C in defined locations.
    MuDc,
    /// Replication map sending D onto C in canonical locations.
    MuPrimeDc,
    /// Inflation: translate by -1 along y.
    PhiCu,
    /// `(w, n+1-y, z, x)`, depends on n.
    Rho1,
    TauXPlus1,
    /// `(x, z+1, n+1-y, w)`, depends on n.
    Rho2,
    /// One-block map `(z, w, y-1, x)` sending B onto A.
    PsiZwYm1X,
    /// Reflection swapping y and w.
    PhiWy,
    /// Reflection swapping x and y.
    PhiYx,
    /// `(y, x+1, z, w)`, sends B onto C.
    PsiYXp1,
    /// `(z, w-1, y, x)`, the one-block map conjugated by a y-translation.
    PsiZWm1YX,
    /// Tuple relabeling `(a,b,c,d) -> (d,c,a,b)`.
    F1,
    /// Tuple relabeling `(x1,x2,x3,x4) -> (x3,x4,x2,x1)`.
    F2,
}

impl MapId {
    pub const ALL: [MapId; 22] = [
        MapId::RhoYzx,
        MapId::TauYPlus1,
        MapId::RhoZxy,
        MapId::TauXPlus1YPlus1,
        MapId::RhoWxz,
        MapId::TauZMinus1,
        MapId::TauYMinus1,
        MapId::TauZPlus1,
        MapId::TauXMinus1YMinus1,
        MapId::MuDc,
        MapId::MuPrimeDc,
        MapId::PhiCu,
        MapId::Rho1,
        MapId::TauXPlus1,
        MapId::Rho2,
        MapId::PsiZwYm1X,
        MapId::PhiWy,
        MapId::PhiYx,
        MapId::PsiYXp1,
        MapId::PsiZWm1YX,
        MapId::F1,
        MapId::F2,
    ];

    pub fn id(self) -> &'static str {
        match self {
            MapId::RhoYzx => "rho_yzx",
            MapId::TauYPlus1 => "tau_y+1",
            MapId::RhoZxy => "rho_zxy",
            MapId::TauXPlus1YPlus1 => "tau_x+1,y+1",
            MapId::RhoWxz => "rho_wxz",
            MapId::TauZMinus1 => "tau_z-1",
            MapId::TauYMinus1 => "tau_y-1",
            MapId::TauZPlus1 => "tau_z+1",
            MapId::TauXMinus1YMinus1 => "tau_x-1,y-1",
            MapId::MuDc => "mu_dc",
            MapId::MuPrimeDc => "mu_prime_dc",
            MapId::PhiCu => "phi_cu",
            MapId::Rho1 => "rho1",
            MapId::TauXPlus1 => "tau_x+1",
            MapId::Rho2 => "rho2",
            MapId::PsiZwYm1X => "psi_z,w,y-1,x",
            MapId::PhiWy => "phi_wy",
            MapId::PhiYx => "phi_yx",
            MapId::PsiYXp1 => "psi_y,x+1",
            MapId::PsiZWm1YX => "psi_z,w-1,y,x",
            MapId::F1 => "f1",
            MapId::F2 => "f2",
        }
    }

    pub fn needs_n(self) -> bool {
        matches!(self, MapId::Rho1 | MapId::Rho2)
    }

    /// Published point-map formula. `n` is only consulted by `rho1`/`rho2`.
    fn formula(self, n: i64) -> String {
        let s = match self {
            MapId::RhoYzx => "(y, z, x, w)",
            MapId::TauYPlus1 => "(x, y+1, z, w)",
            MapId::RhoZxy => "(z, x, y, w)",
            MapId::TauXPlus1YPlus1 => "(x+1, y+1, z, w)",
            MapId::RhoWxz => "(w, y, x, z)",
            MapId::TauZMinus1 => "(x, y, z-1, w)",
            MapId::TauYMinus1 | MapId::PhiCu => "(x, y-1, z, w)",
            MapId::TauZPlus1 => "(x, y, z+1, w)",
            MapId::TauXMinus1YMinus1 => "(x-1, y-1, z, w)",
            MapId::MuDc => "(w+1, z+2, y, x)",
            MapId::MuPrimeDc => "(w, z, y, x)",
            MapId::Rho1 => return format!("(x,y,z,w) -> (w, {}-y, z, x)", n + 1),
            MapId::TauXPlus1 => "(x+1, y, z, w)",
            MapId::Rho2 => return format!("(x,y,z,w) -> (x, z+1, {}-y, w)", n + 1),
            MapId::PsiZwYm1X => "(z, w, y-1, x)",
            MapId::PhiWy => "(x, w, z, y)",
            MapId::PhiYx => "(y, x, z, w)",
            MapId::PsiYXp1 => "(y, x+1, z, w)",
            MapId::PsiZWm1YX => "(z, w-1, y, x)",
            MapId::F1 => "(w, z, x, y)",
            MapId::F2 => "(z, w, y, x)",
        };
        format!("(x,y,z,w) -> {s}")
    }

    /// Maps that are also defined as compositions of other catalog maps.
    fn chain(self) -> Option<Isometry> {
        let m = |id: MapId| parse_formula(id, 0);
        Some(match self {
            MapId::MuDc => {
                m(MapId::TauXPlus1YPlus1)
                    * m(MapId::RhoZxy)
                    * m(MapId::RhoWxz).invert()
                    * m(MapId::TauZMinus1).invert()
            }
            MapId::MuPrimeDc => m(MapId::RhoZxy) * m(MapId::RhoWxz).invert(),
            MapId::PsiZwYm1X => m(MapId::PhiWy) * m(MapId::RhoZxy) * m(MapId::TauYMinus1),
            MapId::PsiYXp1 => m(MapId::TauYPlus1) * m(MapId::PhiYx),
            MapId::PsiZWm1YX => {
                m(MapId::TauYMinus1) * m(MapId::PsiZwYm1X) * m(MapId::TauYMinus1).invert()
            }
            _ => return None,
        })
    }
}

impl fmt::Display for MapId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for MapId {
    type Err = Error;

    fn from_str(s: &str) -> Result<MapId> {
        MapId::ALL
            .iter()
            .copied()
            .find(|m| m.id() == s)
            .ok_or_else(|| Error::Catalog(s.to_string()))
    }
}

fn parse_formula(id: MapId, n: i64) -> Isometry {
    id.formula(n)
        .parse()
        .unwrap_or_else(|e| panic!("catalog formula for {id} does not parse: {e}"))
}

/// Looks up a catalog map. `rho1` and `rho2` require `n`.
///
/// Entries that are defined both by an explicit formula and by a composition
/// chain are checked against each other here.
pub fn named_map(id: MapId, n: Option<i64>) -> Result<Isometry> {
    let n = match (id.needs_n(), n) {
        (true, None) => return Err(Error::Usage(format!("map {id} requires n"))),
        (true, Some(n)) => n,
        (false, _) => 0,
    };
    let map = parse_formula(id, n);
    if let Some(chain) = id.chain() {
        if chain != map {
            return Err(Error::Internal(format!(
                "{id}: formula {map} disagrees with its composition {chain}"
            )));
        }
    }
    Ok(map)
}

/// Convenience lookup by string id.
pub fn named_map_str(id: &str, n: Option<i64>) -> Result<Isometry> {
    named_map(id.parse()?, n)
}

/// Shorthand for catalog entries that never fail.
pub(crate) fn map(id: MapId) -> Isometry {
    named_map(id, None).expect("parameter-free catalog map")
}
