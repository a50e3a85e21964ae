//! The blocks A, B, C, D, their subcomponents, and the pieces of the one-block
//! reassembly.
//!
//! Sets are generated from their index unions. Images under maps are computed
//! with the catalog isometries, so a set such as `A_alt_b` is literally
//! `psi(B_clt_d)` rather than a filter of some region.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::isometry::{map, Isometry, MapId};
use crate::lattice::{Axis, CubeSet, LocationLabel};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum BlockKind {
    A,
    B,
    C,
    D,
}

impl BlockKind {
    pub const ALL: [BlockKind; 4] = [BlockKind::A, BlockKind::B, BlockKind::C, BlockKind::D];

    pub fn name(self) -> &'static str {
        match self {
            BlockKind::A => "A",
            BlockKind::B => "B",
            BlockKind::C => "C",
            BlockKind::D => "D",
        }
    }
}

impl fmt::Display for BlockKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BlockKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<BlockKind> {
        match s {
            "A" | "a" => Ok(BlockKind::A),
            "B" | "b" => Ok(BlockKind::B),
            "C" | "c" => Ok(BlockKind::C),
            "D" | "d" => Ok(BlockKind::D),
            _ => Err(Error::Catalog(format!("block kind {s:?}"))),
        }
    }
}

pub(crate) fn check_n(n: i64) -> Result<()> {
    if n < 1 {
        Err(Error::Domain(format!("n must be at least 1, got {n}")))
    } else {
        Ok(())
    }
}

/// Block `kind` in its defined location.
pub fn block(kind: BlockKind, n: i64) -> Result<CubeSet> {
    check_n(n)?;
    let mut labels = Vec::new();
    for i in 1..=n {
        match kind {
            BlockKind::A => {
                for x in 1..=i {
                    for y in 1..=i {
                        for w in 1..=i {
                            labels.push(LocationLabel::new(x, y, i, w));
                        }
                    }
                }
            }
            BlockKind::B => {
                for x in 1..=i {
                    for z in 1..=i {
                        for w in 1..=i {
                            labels.push(LocationLabel::new(x, i + 1, z, w));
                        }
                    }
                }
            }
            BlockKind::C => {
                for y in 2..=i + 1 {
                    for z in 1..=i {
                        for w in 1..=i {
                            labels.push(LocationLabel::new(i + 1, y, z, w));
                        }
                    }
                }
            }
            BlockKind::D => {
                for x in 1..=i {
                    for y in 1..=i {
                        for z in 0..i {
                            labels.push(LocationLabel::new(x, y, z, i));
                        }
                    }
                }
            }
        }
    }
    Ok(CubeSet::from_labels(labels))
}

/// Translation taking a block from its defined location into `{1..n}^4`.
pub fn canonical_translation(kind: BlockKind) -> Isometry {
    match kind {
        BlockKind::A => Isometry::identity(),
        BlockKind::B => map(MapId::TauYMinus1),
        BlockKind::C => map(MapId::TauXMinus1YMinus1),
        BlockKind::D => map(MapId::TauZPlus1),
    }
}

/// Axis on which every cube of the block, in canonical location, attains its
/// largest label coordinate.
pub fn indicator_axis(kind: BlockKind) -> Axis {
    match kind {
        BlockKind::A => Axis::Z,
        BlockKind::B => Axis::Y,
        BlockKind::C => Axis::X,
        BlockKind::D => Axis::W,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subcomponents {
    /// Cubes of D at `z = 0`, outside the target region.
    pub overhang_d: CubeSet,
    /// Cubes of C at `y = 2`.
    pub vacancy_neighbor_c: CubeSet,
    /// Empty locations of the target region at `y = 1` next to C.
    pub vacancy_super_c: CubeSet,
}

pub fn subcomponents(n: i64) -> Result<Subcomponents> {
    check_n(n)?;
    let mut overhang = Vec::new();
    let mut neighbor = Vec::new();
    let mut vacancy = Vec::new();
    for i in 1..=n {
        for u in 1..=i {
            for v in 1..=i {
                overhang.push(LocationLabel::new(u, v, 0, i));
                neighbor.push(LocationLabel::new(i + 1, 2, u, v));
                vacancy.push(LocationLabel::new(i + 1, 1, u, v));
            }
        }
    }
    Ok(Subcomponents {
        overhang_d: CubeSet::from_labels(overhang),
        vacancy_neighbor_c: CubeSet::from_labels(neighbor),
        vacancy_super_c: CubeSet::from_labels(vacancy),
    })
}

/// Pieces of the one-block reassembly and their images under `psi_{y,x+1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionSets {
    pub b_cge_d: CubeSet,
    pub b_clt_d: CubeSet,
    pub a_alt_b: CubeSet,
    pub s33: CubeSet,
    pub c_cge_d: CubeSet,
    pub c_clt_d: CubeSet,
    pub a_2le_b_le_a: CubeSet,
    pub s33_prime: CubeSet,
}

pub fn partition_sets(n: i64) -> Result<PartitionSets> {
    let b = block(BlockKind::B, n)?;
    let psi = map(MapId::PsiZwYm1X);
    let psi_yx = map(MapId::PsiYXp1);
    let b_cge_d = b.filter(|v| v.c() >= v.d());
    let b_clt_d = b.filter(|v| v.c() < v.d());
    let a_alt_b = psi.apply_set(&b_clt_d);
    let s33 = b_cge_d.union(&a_alt_b);
    let c_cge_d = psi_yx.apply_set(&b_cge_d);
    let c_clt_d = psi_yx.apply_set(&b_clt_d);
    let a_2le_b_le_a = psi_yx.apply_set(&a_alt_b);
    let s33_prime = c_cge_d.union(&a_2le_b_le_a);
    Ok(PartitionSets {
        b_cge_d,
        b_clt_d,
        a_alt_b,
        s33,
        c_cge_d,
        c_clt_d,
        a_2le_b_le_a,
        s33_prime,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum NamedSetId {
    Block(BlockKind),
    OverhangD,
    VacancyNeighborC,
    VacancySuperC,
    BCgeD,
    BCltD,
    AAltB,
    S33,
    CCgeD,
    CCltD,
    A2leBleA,
    S33Prime,
}

impl NamedSetId {
    pub const ALL: [NamedSetId; 15] = [
        NamedSetId::Block(BlockKind::A),
        NamedSetId::Block(BlockKind::B),
        NamedSetId::Block(BlockKind::C),
        NamedSetId::Block(BlockKind::D),
        NamedSetId::OverhangD,
        NamedSetId::VacancyNeighborC,
        NamedSetId::VacancySuperC,
        NamedSetId::BCgeD,
        NamedSetId::BCltD,
        NamedSetId::AAltB,
        NamedSetId::S33,
        NamedSetId::CCgeD,
        NamedSetId::CCltD,
        NamedSetId::A2leBleA,
        NamedSetId::S33Prime,
    ];

    pub fn id(self) -> &'static str {
        match self {
            NamedSetId::Block(BlockKind::A) => "block_A",
            NamedSetId::Block(BlockKind::B) => "block_B",
            NamedSetId::Block(BlockKind::C) => "block_C",
            NamedSetId::Block(BlockKind::D) => "block_D",
            NamedSetId::OverhangD => "overhang_D",
            NamedSetId::VacancyNeighborC => "vacancy_neighbor_C",
            NamedSetId::VacancySuperC => "vacancy_super_C",
            NamedSetId::BCgeD => "B_cge_d",
            NamedSetId::BCltD => "B_clt_d",
            NamedSetId::AAltB => "A_alt_b",
            NamedSetId::S33 => "S33",
            NamedSetId::CCgeD => "C_cge_d",
            NamedSetId::CCltD => "C_clt_d",
            NamedSetId::A2leBleA => "A_2le_b_le_a",
            NamedSetId::S33Prime => "S33prime",
        }
    }
}

impl fmt::Display for NamedSetId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for NamedSetId {
    type Err = Error;

    fn from_str(s: &str) -> Result<NamedSetId> {
        NamedSetId::ALL
            .iter()
            .copied()
            .find(|m| m.id() == s)
            .ok_or_else(|| Error::Catalog(format!("set {s:?}")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NamedSet {
    pub id: NamedSetId,
    pub n: i64,
    pub cubes: CubeSet,
}

impl NamedSet {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "id": self.id.id(),
            "n": self.n,
            "labels": self.cubes.as_slice(),
        })
    }
}

pub fn named_set(id: NamedSetId, n: i64) -> Result<NamedSet> {
    let cubes = match id {
        NamedSetId::Block(k) => block(k, n)?,
        NamedSetId::OverhangD => subcomponents(n)?.overhang_d,
        NamedSetId::VacancyNeighborC => subcomponents(n)?.vacancy_neighbor_c,
        NamedSetId::VacancySuperC => subcomponents(n)?.vacancy_super_c,
        _ => {
            let p = partition_sets(n)?;
            match id {
                NamedSetId::BCgeD => p.b_cge_d,
                NamedSetId::BCltD => p.b_clt_d,
                NamedSetId::AAltB => p.a_alt_b,
                NamedSetId::S33 => p.s33,
                NamedSetId::CCgeD => p.c_cge_d,
                NamedSetId::CCltD => p.c_clt_d,
                NamedSetId::A2leBleA => p.a_2le_b_le_a,
                NamedSetId::S33Prime => p.s33_prime,
                _ => unreachable!(),
            }
        }
    };
    Ok(NamedSet { id, n, cubes })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::region_r3;

    fn labels(v: &[[i64; 4]]) -> CubeSet {
        v.iter().map(|&l| LocationLabel(l)).collect()
    }

    fn sum_cubes(n: i64) -> usize {
        (n * (n + 1) / 2).pow(2) as usize
    }

    #[test]
    fn block_sizes() {
        assert_eq!(block(BlockKind::A, 4).unwrap().len(), 100);
        for n in 1..=8 {
            for k in BlockKind::ALL {
                assert_eq!(block(k, n).unwrap().len(), sum_cubes(n), "{k} n={n}");
            }
        }
    }

    #[test]
    fn small_blocks() {
        assert_eq!(block(BlockKind::D, 1).unwrap(), labels(&[[1, 1, 0, 1]]));
        let expected = labels(&[
            [1, 2, 1, 1],
            [1, 3, 1, 1],
            [2, 3, 1, 1],
            [1, 3, 2, 1],
            [2, 3, 2, 1],
            [1, 3, 1, 2],
            [2, 3, 1, 2],
            [1, 3, 2, 2],
            [2, 3, 2, 2],
        ]);
        assert_eq!(block(BlockKind::B, 2).unwrap(), expected);
    }

    #[test]
    fn rejects_nonpositive_n() {
        assert!(matches!(block(BlockKind::A, 0), Err(Error::Domain(_))));
        assert!(subcomponents(-1).is_err());
        assert!(partition_sets(0).is_err());
    }

    #[test]
    fn canonical_location_and_indicator_axis() {
        assert_eq!(canonical_translation(BlockKind::A), Isometry::identity());
        assert_eq!(canonical_translation(BlockKind::D), map(MapId::TauZPlus1));
        assert_eq!(indicator_axis(BlockKind::A), Axis::Z);
        assert_eq!(indicator_axis(BlockKind::D), Axis::W);
        for n in 1..=5 {
            for k in BlockKind::ALL {
                let moved = canonical_translation(k).apply_set(&block(k, n).unwrap());
                let axis = indicator_axis(k);
                for v in moved.iter() {
                    assert!(v.0.iter().all(|&c| (1..=n).contains(&c)), "{k} {v}");
                    assert_eq!(v.coord(axis), v.max_coord(), "{k} {v}");
                }
            }
        }
        let c3 = canonical_translation(BlockKind::C).apply_set(&block(BlockKind::C, 3).unwrap());
        assert_eq!(c3.len(), 36);
    }

    #[test]
    fn subcomponent_sizes_and_shapes() {
        let s = subcomponents(4).unwrap();
        assert_eq!(s.overhang_d.len(), 30);
        assert_eq!(s.vacancy_neighbor_c.len(), 30);
        assert_eq!(s.vacancy_super_c.len(), 30);
        assert_eq!(subcomponents(1).unwrap().overhang_d, labels(&[[1, 1, 0, 1]]));
        assert_eq!(
            subcomponents(2).unwrap().vacancy_super_c,
            labels(&[[2, 1, 1, 1], [3, 1, 1, 1], [3, 1, 2, 1], [3, 1, 1, 2], [3, 1, 2, 2]])
        );
    }

    #[test]
    fn subcomponents_match_predicates() {
        for n in 1..=6 {
            let s = subcomponents(n).unwrap();
            let d = block(BlockKind::D, n).unwrap();
            let c = block(BlockKind::C, n).unwrap();
            assert_eq!(s.overhang_d, d.filter(|v| v.c() == 0));
            assert_eq!(s.vacancy_neighbor_c, c.filter(|v| v.b() == 2));
            let r = region_r3(n).unwrap();
            let shifted: CubeSet = s.vacancy_neighbor_c.iter().map(|v| LocationLabel::new(v.a(), 1, v.c(), v.d())).collect();
            assert_eq!(s.vacancy_super_c, shifted);
            assert!(s.vacancy_super_c.is_subset(&r));
        }
    }

    #[test]
    fn partition_piece_sizes() {
        // i=1 contributes (1,2,1,1); i=2 contributes 2*3 cubes with c>=d and 2*1 with c<d
        let p = partition_sets(2).unwrap();
        assert_eq!(p.b_cge_d.len(), 7);
        assert_eq!(p.b_clt_d.len(), 2);
        for n in 1..=10 {
            let p = partition_sets(n).unwrap();
            let ge: i64 = (1..=n).map(|i| i * i * (i + 1) / 2).sum();
            let lt: i64 = (1..=n).map(|i| i * i * (i - 1) / 2).sum();
            assert_eq!(p.b_cge_d.len() as i64, ge);
            assert_eq!(p.b_clt_d.len() as i64, lt);
        }
        assert_eq!(partition_sets(3).unwrap().s33.len(), 36);
    }

    #[test]
    fn partition_sets_match_predicates() {
        for n in 1..=8 {
            let p = partition_sets(n).unwrap();
            let r = region_r3(n).unwrap();
            let a = block(BlockKind::A, n).unwrap();
            let c = block(BlockKind::C, n).unwrap();
            let tri = ((n + 1) * n / 2) as usize;
            assert_eq!(p.s33.len(), tri * tri);
            assert_eq!(p.a_alt_b, a.filter(|v| v.a() < v.b()));
            assert_eq!(p.s33, r.filter(|v| v.a() < v.b() && v.d() <= v.c()));
            assert_eq!(p.c_cge_d, c.filter(|v| v.c() >= v.d()));
            assert_eq!(p.c_clt_d, c.filter(|v| v.c() < v.d()));
            assert_eq!(p.a_2le_b_le_a, r.filter(|v| 2 <= v.b() && v.b() <= v.a() && v.a() <= v.c() && v.d() <= v.c()));
            assert_eq!(p.a_2le_b_le_a, relabeled_a_alt_b(n));
            assert_eq!(p.s33_prime, r.filter(|v| 2 <= v.b() && v.b() <= v.a() && v.d() <= v.c()));
        }
    }

    fn relabeled_a_alt_b(n: i64) -> CubeSet {
        // A with a < b, relabeled (a,b,c,d) -> (b, a+1, c, d)
        let mut out = Vec::new();
        for c in 1..=n {
            for a in 1..=c {
                for b in a + 1..=c {
                    for d in 1..=c {
                        out.push(LocationLabel::new(b, a + 1, c, d));
                    }
                }
            }
        }
        CubeSet::from_labels(out)
    }

    #[test]
    fn named_sets_regenerate() {
        for id in NamedSetId::ALL {
            let s = named_set(id, 3).unwrap();
            assert_eq!(s, named_set(id, 3).unwrap());
            assert_eq!(id.id().parse::<NamedSetId>().unwrap(), id);
        }
        assert!(matches!("S34".parse::<NamedSetId>(), Err(Error::Catalog(_))));
        let j = named_set(NamedSetId::Block(BlockKind::D), 1).unwrap().to_json();
        assert_eq!(j.to_string(), r#"{"id":"block_D","labels":[[1,1,0,1]],"n":1}"#);
    }
}
