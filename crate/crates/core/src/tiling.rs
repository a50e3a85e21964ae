//! Exhaustive per-n verification of the tiling theorems.
//!
//! Each verifier has a `_with` form taking the maps or sets under test, so a
//! perturbed input can be shown to fail.

use std::collections::HashSet;

use serde::Serialize;

use crate::constructions::{block, check_n, partition_sets, subcomponents, BlockKind};
use crate::error::Result;
use crate::isometry::{map, named_map, Isometry, MapId, Parity};
use crate::lattice::{region_r3, CubeSet, LocationLabel};
use crate::report::Report;

/// Which coordinate attains the maximum, with ties broken α, then β, γ, δ
/// by the exclusion clauses below.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Condition {
    /// max = z
    Alpha,
    /// max = y, and max ≠ z, w, x
    Beta,
    /// max = x, and max ≠ z, w
    Gamma,
    /// max = w, and max ≠ z
    Delta,
}

pub fn classify_condition(v: LocationLabel) -> Condition {
    let m = v.max_coord();
    let [x, y, z, w] = v.0;
    if z == m {
        Condition::Alpha
    } else if y == m && w != m && x != m {
        Condition::Beta
    } else if x == m && w != m {
        Condition::Gamma
    } else {
        Condition::Delta
    }
}

/// The condition satisfied by every cube of `kind` in defined location.
pub fn block_condition(kind: BlockKind) -> Condition {
    match kind {
        BlockKind::A => Condition::Alpha,
        BlockKind::B => Condition::Beta,
        BlockKind::C => Condition::Gamma,
        BlockKind::D => Condition::Delta,
    }
}

fn sum_squares(n: i64) -> i64 {
    n * (n + 1) * (2 * n + 1) / 6
}

fn sum_cubes(n: i64) -> i64 {
    (n * (n + 1) / 2).pow(2)
}

/// A report with the occupied set and the two exception layers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FittingReport {
    pub report: Report,
    pub occupied: CubeSet,
    pub overhang: CubeSet,
    pub vacancies: CubeSet,
}

impl FittingReport {
    pub fn pass(&self) -> bool {
        self.report.pass
    }
}

/// `translation ∘ rotation` carrying block A onto another block.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BlockMove {
    pub rotation: Isometry,
    pub translation: Isometry,
}

impl BlockMove {
    pub fn map(&self) -> Isometry {
        self.translation * self.rotation
    }
}

/// The three moves sending A onto B, C, D.
pub fn block_moves() -> [(BlockKind, BlockMove); 3] {
    [
        (
            BlockKind::B,
            BlockMove {
                rotation: map(MapId::RhoYzx),
                translation: map(MapId::TauYPlus1),
            },
        ),
        (
            BlockKind::C,
            BlockMove {
                rotation: map(MapId::RhoZxy),
                translation: map(MapId::TauXPlus1YPlus1),
            },
        ),
        (
            BlockKind::D,
            BlockMove {
                rotation: map(MapId::RhoWxz),
                translation: map(MapId::TauZMinus1),
            },
        ),
    ]
}

pub fn verify_block_equivalence(n: i64) -> Result<Report> {
    verify_block_equivalence_with(n, &block_moves())
}

pub fn verify_block_equivalence_with(n: i64, moves: &[(BlockKind, BlockMove)]) -> Result<Report> {
    check_n(n)?;
    let mut r = Report::new("block_equivalence", n);
    let a = block(BlockKind::A, n)?;
    for (kind, mv) in moves {
        let image = mv.map().apply_set(&a);
        r.check_sets(&format!("image of A equals {kind}"), &image, &block(*kind, n)?);
        r.check(
            &format!("rotation part for {kind} is a rotation"),
            mv.rotation.parity() == Parity::Rotation,
            || format!("{} is a reflection", mv.rotation),
        );
        r.check(
            &format!("translation part for {kind} is a translation"),
            mv.translation.is_translation(),
            || format!("{} is not a pure translation", mv.translation),
        );
    }
    Ok(r)
}

/// Locations of the target region satisfying γ, as an index union.
fn gamma_locations(n: i64) -> CubeSet {
    let mut out = Vec::new();
    for i in 1..=n {
        for y in 1..=i + 1 {
            for z in 1..=i {
                for w in 1..=i {
                    out.push(LocationLabel::new(i + 1, y, z, w));
                }
            }
        }
    }
    CubeSet::from_labels(out)
}

/// Locations of the target region satisfying δ, as an index union.
fn delta_locations(n: i64) -> CubeSet {
    let mut out = Vec::new();
    for i in 2..=n {
        for x in 1..=i {
            for y in 1..=i {
                for z in 1..i {
                    out.push(LocationLabel::new(x, y, z, i));
                }
            }
        }
    }
    CubeSet::from_labels(out)
}

fn blocks(n: i64) -> Result<[CubeSet; 4]> {
    Ok([
        block(BlockKind::A, n)?,
        block(BlockKind::B, n)?,
        block(BlockKind::C, n)?,
        block(BlockKind::D, n)?,
    ])
}

pub fn first_fitting(n: i64) -> Result<FittingReport> {
    first_fitting_with(n, &blocks(n)?)
}

/// First fitting of the four given sets, expected to be A, B, C, D.
pub fn first_fitting_with(n: i64, placed: &[CubeSet; 4]) -> Result<FittingReport> {
    check_n(n)?;
    let mut r = Report::new("first_fitting", n);
    let region = region_r3(n)?;
    let sub = subcomponents(n)?;

    for i in 0..4 {
        for j in i + 1..4 {
            r.check_disjoint(
                &format!("{} and {} are disjoint", BlockKind::ALL[i], BlockKind::ALL[j]),
                &placed[i],
                &placed[j],
            );
        }
    }
    for (kind, cubes) in BlockKind::ALL.iter().zip(placed) {
        let want = block_condition(*kind);
        let off: CubeSet = cubes.filter(|v| classify_condition(*v) != want);
        r.check_sets(&format!("every cube of {kind} satisfies {want:?}"), &off, &CubeSet::new());
    }

    let occupied = placed[1..].iter().fold(placed[0].clone(), |acc, s| acc.union(s));
    let overhang = occupied.difference(&region);
    let vacancies = region.difference(&occupied);
    r.check_sets("overhang is D at z=0", &overhang, &sub.overhang_d);
    r.check_sets("vacancies are the y=1 layer next to C", &vacancies, &sub.vacancy_super_c);
    let sq = sum_squares(n);
    r.check_eq("overhang count", &(overhang.len() as i64), &sq);
    r.check_eq("vacancy count", &(vacancies.len() as i64), &sq);

    let by_condition = |c: Condition| region.filter(|v| classify_condition(*v) == c);
    let [a, b, c, d] = placed;
    let gamma = gamma_locations(n);
    r.check_sets("γ locations match their index union", &by_condition(Condition::Gamma), &gamma);
    r.check("C lies in the γ locations", c.is_subset(&gamma), || "C leaves the γ locations".into());
    r.check_sets("γ locations not in C are the vacancies", &gamma.difference(c), &sub.vacancy_super_c);
    let delta = delta_locations(n);
    r.check_sets("δ locations match their index union", &by_condition(Condition::Delta), &delta);
    r.check_sets("D inside the region fills the δ locations", &d.intersection(&region), &delta);
    r.check_sets("A fills the α locations", &by_condition(Condition::Alpha), a);
    r.check_sets("B fills the β locations", &by_condition(Condition::Beta), b);

    Ok(FittingReport {
        report: r,
        occupied,
        overhang,
        vacancies,
    })
}

/// Replication and inflation maps used by the second fitting.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SecondFittingMaps {
    pub replication: Isometry,
    pub inflation: Isometry,
}

impl Default for SecondFittingMaps {
    fn default() -> Self {
        SecondFittingMaps {
            replication: map(MapId::MuDc),
            inflation: map(MapId::PhiCu),
        }
    }
}

pub fn second_fitting(n: i64) -> Result<FittingReport> {
    second_fitting_with(n, SecondFittingMaps::default())
}

pub fn second_fitting_with(n: i64, maps: SecondFittingMaps) -> Result<FittingReport> {
    check_n(n)?;
    let mut r = Report::new("second_fitting", n);
    let region = region_r3(n)?;
    let sub = subcomponents(n)?;
    let [a, b, c, d] = blocks(n)?;
    let mu = maps.replication;
    let fit = maps.inflation * mu;

    r.check_sets(
        "replication sends the overhang onto C at y=2",
        &mu.apply_set(&sub.overhang_d),
        &sub.vacancy_neighbor_c,
    );
    let moved = fit.apply_set(&sub.overhang_d);
    r.check_sets("replication then inflation fills the vacancies", &moved, &sub.vacancy_super_c);

    let route = named_map(MapId::Rho2, Some(n))? * map(MapId::TauXPlus1) * named_map(MapId::Rho1, Some(n))?;
    let disagree: CubeSet = sub
        .overhang_d
        .filter(|v| route.apply_label(*v) != fit.apply_label(*v));
    r.check_sets("figure route agrees with the second-fitting map on the overhang", &disagree, &CubeSet::new());

    for i in 1..=n {
        let slice = d.filter(|v| v.c() == i - 1);
        let target = c.filter(|v| v.b() == i + 1);
        r.check_sets(&format!("D at z={} goes to C at y={}", i - 1, i + 1), &mu.apply_set(&slice), &target);
    }

    let kept_d = d.difference(&sub.overhang_d);
    let pieces = [&a, &b, &c, &kept_d, &moved];
    let total: usize = pieces.iter().map(|s| s.len()).sum();
    let occupied = pieces[1..].iter().fold(a.clone(), |acc, s| acc.union(s));
    r.check_eq("source cube count is 4·Σi³", &(total as i64), &(4 * sum_cubes(n)));
    r.check_eq("no two source cubes land together", &occupied.len(), &total);
    r.check_sets("final assembly is the region", &occupied, &region);
    let overhang = occupied.difference(&region);
    let vacancies = region.difference(&occupied);
    Ok(FittingReport {
        report: r,
        occupied,
        overhang,
        vacancies,
    })
}

/// Where a cube of an assembly came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Provenance {
    pub block: BlockKind,
    /// True for D's overhang cubes after the second fitting.
    pub moved: bool,
    /// Partition piece, for the one-block assemblies.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub part: Option<&'static str>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AssemblyKind {
    /// Four blocks in defined location.
    FourBlockStage1,
    /// After moving D's overhang into the vacancies.
    FourBlockFinal,
    S33,
    S33Prime,
}

impl AssemblyKind {
    pub const ALL: [AssemblyKind; 4] = [
        AssemblyKind::FourBlockStage1,
        AssemblyKind::FourBlockFinal,
        AssemblyKind::S33,
        AssemblyKind::S33Prime,
    ];

    pub fn id(self) -> &'static str {
        match self {
            AssemblyKind::FourBlockStage1 => "four_block_stage1",
            AssemblyKind::FourBlockFinal => "four_block_final",
            AssemblyKind::S33 => "s33",
            AssemblyKind::S33Prime => "s33_prime",
        }
    }
}

impl std::str::FromStr for AssemblyKind {
    type Err = crate::error::Error;

    fn from_str(s: &str) -> Result<AssemblyKind> {
        AssemblyKind::ALL
            .iter()
            .copied()
            .find(|a| a.id() == s)
            .ok_or_else(|| crate::error::Error::Catalog(format!("assembly {s:?}")))
    }
}

/// Cubes of an assembly in label order, each with its provenance.
pub fn assembly(kind: AssemblyKind, n: i64) -> Result<Vec<(LocationLabel, Provenance)>> {
    check_n(n)?;
    let tag = |block, moved, part| Provenance { block, moved, part };
    let mut out: Vec<(LocationLabel, Provenance)> = Vec::new();
    match kind {
        AssemblyKind::FourBlockStage1 | AssemblyKind::FourBlockFinal => {
            let overhang = subcomponents(n)?.overhang_d;
            let fit = map(MapId::PhiCu) * map(MapId::MuDc);
            for k in BlockKind::ALL {
                for &v in block(k, n)?.iter() {
                    if kind == AssemblyKind::FourBlockFinal && k == BlockKind::D && overhang.contains(&v) {
                        out.push((fit.apply_label(v), tag(k, true, None)));
                    } else {
                        out.push((v, tag(k, false, None)));
                    }
                }
            }
        }
        AssemblyKind::S33 => {
            let p = partition_sets(n)?;
            out.extend(p.b_cge_d.iter().map(|&v| (v, tag(BlockKind::B, false, Some("B_cge_d")))));
            out.extend(p.a_alt_b.iter().map(|&v| (v, tag(BlockKind::B, true, Some("A_alt_b")))));
        }
        AssemblyKind::S33Prime => {
            let p = partition_sets(n)?;
            out.extend(p.c_cge_d.iter().map(|&v| (v, tag(BlockKind::B, true, Some("C_cge_d")))));
            out.extend(
                p.a_2le_b_le_a
                    .iter()
                    .map(|&v| (v, tag(BlockKind::B, true, Some("A_2le_b_le_a")))),
            );
        }
    }
    out.sort_by_key(|(v, _)| *v);
    Ok(out)
}

pub fn one_block_assembly(n: i64) -> Result<FittingReport> {
    one_block_assembly_with(n, map(MapId::PsiZwYm1X))
}

pub fn one_block_assembly_with(n: i64, psi: Isometry) -> Result<FittingReport> {
    check_n(n)?;
    let mut r = Report::new("one_block_assembly", n);
    let region = region_r3(n)?;
    let a = block(BlockKind::A, n)?;
    let b = block(BlockKind::B, n)?;
    let b_cge_d = b.filter(|v| v.c() >= v.d());
    let b_clt_d = b.filter(|v| v.c() < v.d());

    r.check_sets("psi sends B onto A", &psi.apply_set(&b), &a);
    let a_alt_b = psi.apply_set(&b_clt_d);
    r.check_sets("psi sends B with c<d onto A with a<b", &a_alt_b, &a.filter(|v| v.a() < v.b()));
    r.check_disjoint("kept and moved parts are disjoint", &b_cge_d, &a_alt_b);
    let occupied = b_cge_d.union(&a_alt_b);
    let want = region.filter(|v| v.a() < v.b() && v.d() <= v.c());
    r.check_sets("union is the a<b, d<=c part of the region", &occupied, &want);
    let tri = n * (n + 1) / 2;
    r.check_eq("cube count is C(n+1,2)^2", &(occupied.len() as i64), &(tri * tri));
    r.check_eq("disjoint union count", &(b_cge_d.len() + a_alt_b.len()), &occupied.len());
    let overhang = occupied.difference(&region);
    let vacancies = want.difference(&occupied);
    Ok(FittingReport {
        report: r,
        occupied,
        overhang,
        vacancies,
    })
}

/// The bijection from triples bounded by a common maximum to pairs of
/// ordered pairs, written on 4-tuples `(h,i,j,k) -> (x1,x2,x3,x4)`.
pub fn pair_split(t: [i64; 4]) -> [i64; 4] {
    let [h, i, j, k] = t;
    if h <= i {
        [h, i, j, k]
    } else {
        [j, k, i, h - 1]
    }
}

pub fn benjamin_orrison(n: i64) -> Result<Report> {
    benjamin_orrison_with(n, pair_split)
}

pub fn benjamin_orrison_with(n: i64, g: impl Fn([i64; 4]) -> [i64; 4]) -> Result<Report> {
    check_n(n)?;
    let mut r = Report::new("benjamin_orrison", n);
    let mut s = Vec::new();
    for k in 1..=n {
        for h in 1..=k {
            for i in 1..=k {
                for j in 1..=k {
                    s.push([h, i, j, k]);
                }
            }
        }
    }
    let mut t = HashSet::new();
    for x2 in 1..=n {
        for x1 in 1..=x2 {
            for x4 in 1..=n {
                for x3 in 1..=x4 {
                    t.insert([x1, x2, x3, x4]);
                }
            }
        }
    }
    let tri = n * (n + 1) / 2;
    r.check_eq("|S| = Σk³", &(s.len() as i64), &sum_cubes(n));
    r.check_eq("|T| = C(n+1,2)²", &(t.len() as i64), &(tri * tri));

    let image: HashSet<[i64; 4]> = s.iter().map(|&x| g(x)).collect();
    r.check_eq("g is injective", &image.len(), &s.len());
    let outside = image.difference(&t).count();
    r.check("g lands in T", outside == 0, || format!("{outside} images outside T"));
    r.check_eq("g is onto T", &image.intersection(&t).count(), &t.len());

    let f1 = map(MapId::F1);
    let f2 = map(MapId::F2);
    let shift = map(MapId::TauYMinus1);
    let p = partition_sets(n)?;
    let s_set: CubeSet = s.iter().map(|&x| LocationLabel(x)).collect();
    let b_shifted = shift.apply_set(&block(BlockKind::B, n)?);
    r.check_sets("f1 sends the shifted B onto S", &f1.apply_set(&b_shifted), &s_set);
    let t_set: CubeSet = t.iter().map(|&x| LocationLabel(x)).collect();
    r.check_sets("f2 sends T onto the shifted S33", &f2.apply_set(&t_set), &shift.apply_set(&p.s33));

    let psi = map(MapId::PsiZWm1YX);
    let mut fixed_bad = Vec::new();
    let mut moved_bad = Vec::new();
    for &v in shift.apply_set(&p.b_cge_d).iter() {
        let out = f2.apply_label(LocationLabel(g(f1.apply_label(v).0)));
        if out != v {
            fixed_bad.push(v);
        }
    }
    for &v in shift.apply_set(&p.b_clt_d).iter() {
        let out = f2.apply_label(LocationLabel(g(f1.apply_label(v).0)));
        if out != psi.apply_label(v) {
            moved_bad.push(v);
        }
    }
    r.check_sets(
        "composite fixes the shifted c>=d part",
        &CubeSet::from_labels(fixed_bad),
        &CubeSet::new(),
    );
    r.check_sets(
        "composite acts as the conjugated one-block map on the shifted c<d part",
        &CubeSet::from_labels(moved_bad),
        &CubeSet::new(),
    );
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn condition_examples() {
        assert_eq!(classify_condition(LocationLabel::new(1, 1, 2, 1)), Condition::Alpha);
        assert_eq!(classify_condition(LocationLabel::new(2, 2, 1, 1)), Condition::Gamma);
        assert_eq!(classify_condition(LocationLabel::new(1, 1, 1, 1)), Condition::Alpha);
        assert_eq!(classify_condition(LocationLabel::new(1, 2, 1, 2)), Condition::Delta);
        assert_eq!(classify_condition(LocationLabel::new(1, 3, 1, 2)), Condition::Beta);
    }

    #[test]
    fn conditions_are_exclusive_and_exhaustive() {
        // brute-force reading of the four clauses
        for a in -2..=4 {
            for b in -2..=4 {
                for c in -2..=4 {
                    for d in -2..=4 {
                        let m = a.max(b).max(c).max(d);
                        let alpha = c == m;
                        let beta = b == m && c != m && d != m && a != m;
                        let gamma = a == m && c != m && d != m;
                        let delta = d == m && c != m;
                        let hits = [alpha, beta, gamma, delta];
                        assert_eq!(hits.iter().filter(|&&h| h).count(), 1);
                        let want = [Condition::Alpha, Condition::Beta, Condition::Gamma, Condition::Delta]
                            [hits.iter().position(|&h| h).unwrap()];
                        assert_eq!(classify_condition(LocationLabel::new(a, b, c, d)), want);
                    }
                }
            }
        }
    }

    #[test]
    fn block_equivalence_small() {
        for n in 1..=6 {
            let r = verify_block_equivalence(n).unwrap();
            assert!(r.pass, "{:?}", r.failures);
        }
    }

    #[test]
    fn block_equivalence_negative_control() {
        let mut moves = block_moves();
        moves[0].1.translation = Isometry::translation([0, 2, 0, 0]);
        let r = verify_block_equivalence_with(2, &moves).unwrap();
        assert!(!r.pass);
        let mut moves = block_moves();
        moves[0].1.rotation = map(MapId::PhiWy);
        assert!(!verify_block_equivalence_with(2, &moves).unwrap().pass);
    }

    #[test]
    fn first_fitting_counts() {
        let f = first_fitting(4).unwrap();
        assert!(f.pass(), "{:?}", f.report.failures);
        assert_eq!(f.overhang.len(), 30);
        assert_eq!(f.vacancies.len(), 30);
        let f = first_fitting(2).unwrap();
        assert_eq!(f.occupied.intersection(&region_r3(2).unwrap()).len(), 31);
        let f = first_fitting(1).unwrap();
        assert_eq!(f.overhang.into_vec(), vec![LocationLabel::new(1, 1, 0, 1)]);
        assert_eq!(f.vacancies.into_vec(), vec![LocationLabel::new(2, 1, 1, 1)]);
    }

    #[test]
    fn first_fitting_negative_control() {
        let mut placed = blocks(3).unwrap();
        placed[1] = map(MapId::TauYPlus1).apply_set(&placed[1]);
        let f = first_fitting_with(3, &placed).unwrap();
        assert!(!f.pass());
    }

    #[test]
    fn second_fitting_small() {
        let f = second_fitting(2).unwrap();
        assert!(f.pass(), "{:?}", f.report.failures);
        assert_eq!(f.occupied.len(), 36);
        let f = second_fitting(6).unwrap();
        assert!(f.pass());
        assert_eq!(f.occupied.len(), 1764);
        let fit = map(MapId::PhiCu) * map(MapId::MuDc);
        assert_eq!(fit.apply_label(LocationLabel::new(1, 1, 0, 1)), LocationLabel::new(2, 1, 1, 1));
    }

    #[test]
    fn second_fitting_negative_control() {
        let maps = SecondFittingMaps {
            replication: map(MapId::MuPrimeDc),
            ..Default::default()
        };
        assert!(!second_fitting_with(3, maps).unwrap().pass());
        let maps = SecondFittingMaps {
            inflation: Isometry::identity(),
            ..Default::default()
        };
        assert!(!second_fitting_with(3, maps).unwrap().pass());
    }

    #[test]
    fn one_block_small() {
        let f = one_block_assembly(5).unwrap();
        assert!(f.pass(), "{:?}", f.report.failures);
        assert_eq!(f.occupied.len(), 225);
        assert_eq!(one_block_assembly(1).unwrap().occupied.into_vec(), vec![LocationLabel::new(1, 2, 1, 1)]);
        let f = one_block_assembly(3).unwrap();
        assert_eq!(f.occupied.len(), 36);
        assert!(f.occupied.is_subset(&region_r3(3).unwrap()));
    }

    #[test]
    fn one_block_negative_control() {
        assert!(!one_block_assembly_with(3, map(MapId::PsiZWm1YX)).unwrap().pass());
        assert!(!one_block_assembly_with(3, map(MapId::F2)).unwrap().pass());
    }

    #[test]
    fn pair_split_examples() {
        assert_eq!(pair_split([2, 1, 1, 2]), [1, 2, 1, 1]);
        assert_eq!(pair_split([1, 2, 1, 2]), [1, 2, 1, 2]);
    }

    #[test]
    fn benjamin_orrison_small() {
        for n in 1..=5 {
            let r = benjamin_orrison(n).unwrap();
            assert!(r.pass, "{:?}", r.failures);
        }
        let f1 = map(MapId::F1);
        let f2 = map(MapId::F2);
        let v = LocationLabel::new(1, 2, 1, 1);
        let shifted = map(MapId::TauYMinus1).apply_label(v);
        let out = f2.apply_label(LocationLabel(pair_split(f1.apply_label(shifted).0)));
        assert_eq!(out, shifted);
    }

    #[test]
    fn benjamin_orrison_negative_control() {
        let r = benjamin_orrison_with(3, |[h, i, j, k]| if h <= i { [h, i, j, k] } else { [j, k, i, h] }).unwrap();
        assert!(!r.pass);
    }

    #[test]
    fn assemblies_have_expected_sizes() {
        let stage1 = assembly(AssemblyKind::FourBlockStage1, 3).unwrap();
        let fin = assembly(AssemblyKind::FourBlockFinal, 3).unwrap();
        assert_eq!(stage1.len(), 144);
        assert_eq!(fin.len(), 144);
        let labels: CubeSet = fin.iter().map(|(v, _)| *v).collect();
        assert_eq!(labels, region_r3(3).unwrap());
        assert_eq!(fin.iter().filter(|(_, p)| p.moved).count(), 14);
        assert_eq!(assembly(AssemblyKind::S33, 3).unwrap().len(), 36);
        assert_eq!(assembly(AssemblyKind::S33Prime, 3).unwrap().len(), 36);
    }
}
