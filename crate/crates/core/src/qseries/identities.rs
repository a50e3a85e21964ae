//! The q-analogues of the sum of cubes, each checked three ways: by closed-form
//! algebra, by taxicab generating functions over the cube sets that interpret
//! them, and through every intermediate equality along the way.
//!
//! Expressions written over `1 + q` are stored as numerators and compared after
//! multiplying the other side through; nothing is ever divided.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::constructions::{check_n, partition_sets, BlockKind};
use crate::error::{Error, Result};
use crate::isometry::{map, Isometry, MapId};
use crate::lattice::{region_r3, CubeSet, LocationLabel};
use crate::report::Report;
use crate::tiling::{assembly, AssemblyKind};

use super::poly::LaurentPoly;
use super::qnum::{one_minus_q_pow, q_binomial, q_int};
use super::weight::{gf, poly_from_exponents, Orientation, WeightSpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IdentityId {
    /// The four-block identity `Σ (q^(i-1)+q^i+q^(i+1)) [i]^3 + ... = [n+1]^2 [n]^2`.
    FourBlock,
    GarrettHummel,
    WarnaarFirst,
    WarnaarSecond,
    ZhaoFeng,
    Forster,
}

impl IdentityId {
    pub const ALL: [IdentityId; 6] = [
        IdentityId::FourBlock,
        IdentityId::GarrettHummel,
        IdentityId::WarnaarFirst,
        IdentityId::WarnaarSecond,
        IdentityId::ZhaoFeng,
        IdentityId::Forster,
    ];

    pub fn id(self) -> &'static str {
        match self {
            IdentityId::FourBlock => "thm25",
            IdentityId::GarrettHummel => "garrett_hummel",
            IdentityId::WarnaarFirst => "warnaar_first",
            IdentityId::WarnaarSecond => "warnaar_second",
            IdentityId::ZhaoFeng => "zhao_feng",
            IdentityId::Forster => "forster",
        }
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for IdentityId {
    type Err = Error;

    fn from_str(s: &str) -> Result<IdentityId> {
        if s == "four_block" {
            return Ok(IdentityId::FourBlock);
        }
        IdentityId::ALL
            .iter()
            .copied()
            .find(|i| i.id() == s)
            .ok_or_else(|| Error::Catalog(format!("identity {s:?}")))
    }
}

/// A weight as first written down and after folding its prefactor into the
/// base point.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Weighted {
    pub written: WeightSpec,
    pub weight: WeightSpec,
}

impl Weighted {
    pub fn plain(w: WeightSpec) -> Weighted {
        Weighted { written: w, weight: w }
    }

    pub fn consolidated(written: WeightSpec, weight: WeightSpec) -> Weighted {
        Weighted { written, weight }
    }
}

/// A set of cubes, its weight, and how its cubes are indexed by the summation
/// variable `k`.
#[derive(Debug, Clone)]
pub struct Piece {
    pub name: &'static str,
    pub cubes: CubeSet,
    pub weight: Weighted,
    pub slice: fn(&LocationLabel) -> i64,
}

/// One partition-and-move interpretation: `kept` stays, `src` is moved by `map`
/// onto `image`, and `kept ∪ image` is `assembled`.
#[derive(Debug, Clone)]
pub struct Scheme {
    pub name: &'static str,
    pub map: Isometry,
    pub kept: Piece,
    pub src: Piece,
    pub image: Piece,
    /// Numerators over `1 + q` of the summands interpreted by `kept`, for `k = 1..=n`.
    pub kept_terms: Vec<LaurentPoly>,
    /// Same for the summands interpreted by `src` and `image`.
    pub moved_terms: Vec<LaurentPoly>,
    pub total: LaurentPoly,
    pub assembled: CubeSet,
}

fn q(e: i64) -> LaurentPoly {
    LaurentPoly::q_pow(e)
}

fn one_plus_q() -> LaurentPoly {
    q_int(2)
}

fn qbinom_sq(n: i64) -> LaurentPoly {
    q_binomial(n + 1, 2).expect("n >= 1").pow(2)
}

fn slice_b(v: &LocationLabel) -> i64 {
    v.b() - 1
}

fn slice_c(v: &LocationLabel) -> i64 {
    v.c()
}

fn slice_a(v: &LocationLabel) -> i64 {
    v.a() - 1
}

fn low(bases: [i64; 4]) -> WeightSpec {
    WeightSpec::from_low(bases)
}

fn high(bases: [i64; 4]) -> WeightSpec {
    WeightSpec::from_high(bases)
}

fn mixed(axes: [Orientation; 4], offset: i64) -> WeightSpec {
    WeightSpec::new(axes, offset)
}

fn terms(n: i64, f: impl Fn(i64) -> LaurentPoly) -> Vec<LaurentPoly> {
    (1..=n).map(f).collect()
}

fn garrett_hummel_terms(n: i64) -> (Vec<LaurentPoly>, Vec<LaurentPoly>) {
    (
        terms(n, |k| q_int(k) * q(k - 1) * q_int(k + 1) * q_int(k)),
        terms(n, |k| q_int(k) * q(k - 1) * q_int(k) * q_int(k - 1)),
    )
}

fn warnaar_first_terms(n: i64) -> (Vec<LaurentPoly>, Vec<LaurentPoly>) {
    (
        terms(n, |k| q(n - k) * q_int(k) * q(n - k) * q_int(k + 1) * q_int(k)),
        terms(n, |k| {
            q_int(k) * q(k - 1) * q(2) * (q(n - k) * q_int(k)) * (q(n - k) * q_int(k - 1))
        }),
    )
}

fn warnaar_second_terms(n: i64) -> (Vec<LaurentPoly>, Vec<LaurentPoly>) {
    (
        terms(n, |k| q_int(k) * q(k - 1) * (q(n - k) * q_int(k + 1)) * (q(n - k) * q_int(k))),
        terms(n, |k| q(n - k) * q_int(k) * q(n - k) * q_int(k) * q_int(k - 1)),
    )
}

fn zhao_feng_terms(n: i64) -> (Vec<LaurentPoly>, Vec<LaurentPoly>) {
    (
        terms(n, |k| {
            q(n - k) * q_int(k) * q(n - k) * (q(n - k) * q_int(k + 1)) * (q(n - k) * q_int(k))
        }),
        terms(n, |k| {
            q(n - k) * q_int(k) * q(n - k) * q(2) * (q(n - k) * q_int(k)) * (q(n - k) * q_int(k - 1))
        }),
    )
}

fn shifted(v: &[LaurentPoly], e: i64) -> Vec<LaurentPoly> {
    v.iter().map(|p| p.shift(e)).collect()
}

/// The cube-set interpretations of an identity. The four-block identity has
/// none; the last identity has one per half.
pub fn schemes(id: IdentityId, n: i64) -> Result<Vec<Scheme>> {
    check_n(n)?;
    if id == IdentityId::FourBlock {
        return Ok(Vec::new());
    }
    let p = partition_sets(n)?;
    let region = region_r3(n)?;
    let s33 = region.filter(|v| v.a() < v.b() && v.d() <= v.c());
    let psi = map(MapId::PsiZwYm1X);
    use Orientation::{FromHigh as H, FromLow as L};

    let one_block = |name, kept: Weighted, moved: Weighted, image: Weighted, t: (Vec<_>, Vec<_>), total| Scheme {
        name,
        map: psi,
        kept: Piece {
            name: "B_cge_d",
            cubes: p.b_cge_d.clone(),
            weight: kept,
            slice: slice_b,
        },
        src: Piece {
            name: "B_clt_d",
            cubes: p.b_clt_d.clone(),
            weight: moved,
            slice: slice_b,
        },
        image: Piece {
            name: "A_alt_b",
            cubes: p.a_alt_b.clone(),
            weight: image,
            slice: slice_c,
        },
        kept_terms: t.0,
        moved_terms: t.1,
        total,
        assembled: s33.clone(),
    };

    let out = match id {
        IdentityId::FourBlock => unreachable!(),
        IdentityId::GarrettHummel => vec![one_block(
            "garrett_hummel",
            Weighted::plain(low([1, 2, 1, 1])),
            Weighted::plain(low([1, 2, 1, 1]).with_offset(-1)),
            Weighted::consolidated(low([1, 1, 1, 1]).with_offset(-1), low([1, 2, 1, 1])),
            garrett_hummel_terms(n),
            qbinom_sq(n),
        )],
        IdentityId::WarnaarFirst => {
            let kept = mixed([H(n), H(n + 1), L(1), L(1)], 0);
            vec![one_block(
                "warnaar_first",
                Weighted::plain(kept),
                Weighted::plain(mixed([L(1), L(2), H(n), H(n)], 1)),
                Weighted::consolidated(mixed([H(n), H(n), L(1), L(1)], 1), kept),
                warnaar_first_terms(n),
                qbinom_sq(n),
            )]
        }
        IdentityId::WarnaarSecond => {
            let kept = mixed([L(1), L(2), H(n), H(n)], 0);
            vec![one_block(
                "warnaar_second",
                Weighted::plain(kept),
                Weighted::plain(mixed([H(n), H(n + 1), L(1), L(1)], -1)),
                Weighted::consolidated(mixed([L(1), L(1), H(n), H(n)], -1), kept),
                warnaar_second_terms(n),
                qbinom_sq(n),
            )]
        }
        IdentityId::ZhaoFeng => {
            let kept = high([n, n + 1, n, n]);
            vec![one_block(
                "zhao_feng",
                Weighted::plain(kept),
                Weighted::plain(kept.with_offset(1)),
                Weighted::consolidated(high([n, n, n, n]).with_offset(1), kept),
                zhao_feng_terms(n),
                qbinom_sq(n),
            )]
        }
        IdentityId::Forster => {
            let (t1, t2) = garrett_hummel_terms(n);
            let first = one_block(
                "forster_q1_half",
                Weighted::consolidated(low([1, 2, 1, 1]).with_offset(1), low([1, 1, 1, 1])),
                Weighted::plain(low([1, 2, 1, 1])),
                Weighted::consolidated(low([1, 2, 1, 1]).with_offset(1), low([1, 1, 1, 1])),
                (shifted(&t1, 1), shifted(&t2, 1)),
                qbinom_sq(n).shift(1),
            );
            let second = Scheme {
                name: "forster_q2_half",
                map: forster_second_map(),
                kept: Piece {
                    name: "C_cge_d",
                    cubes: p.c_cge_d.clone(),
                    weight: Weighted::consolidated(low([2, 2, 1, 1]).with_offset(2), low([1, 1, 1, 1])),
                    slice: slice_a,
                },
                src: Piece {
                    name: "C_clt_d",
                    cubes: p.c_clt_d.clone(),
                    weight: Weighted::consolidated(low([2, 2, 1, 1]).with_offset(1), low([1, 2, 1, 1])),
                    slice: slice_a,
                },
                image: Piece {
                    name: "A_2le_b_le_a",
                    cubes: p.a_2le_b_le_a.clone(),
                    weight: Weighted::consolidated(low([2, 2, 1, 1]).with_offset(2), low([1, 1, 1, 1])),
                    slice: slice_c,
                },
                kept_terms: shifted(&t1, 2),
                moved_terms: shifted(&t2, 2),
                total: qbinom_sq(n).shift(2),
                assembled: region.filter(|v| 2 <= v.b() && v.b() <= v.a() && v.d() <= v.c()),
            };
            vec![first, second]
        }
    };
    Ok(out)
}

/// `psi_{y,x+1} ∘ psi_{z,w,y-1,x} ∘ psi_{y,x+1}^-1`, carrying `C_{c<d}` onto `A_{2<=b<=a}`.
pub fn forster_second_map() -> Isometry {
    let s = map(MapId::PsiYXp1);
    s * map(MapId::PsiZwYm1X) * s.invert()
}

/// Generating functions of `s` bucketed by `slice` into `k = 1..=n`, plus the
/// number of cubes whose index falls outside that range.
fn sliced_gf(s: &CubeSet, w: &WeightSpec, slice: fn(&LocationLabel) -> i64, n: i64) -> (Vec<LaurentPoly>, usize) {
    let mut buckets: Vec<Vec<i64>> = vec![Vec::new(); n as usize];
    let mut stray = 0;
    for v in s.iter() {
        let k = slice(v);
        if (1..=n).contains(&k) {
            buckets[(k - 1) as usize].push(w.exponent(v));
        } else {
            stray += 1;
        }
    }
    (buckets.into_iter().map(poly_from_exponents).collect(), stray)
}

fn sum(v: &[LaurentPoly]) -> LaurentPoly {
    v.iter().sum()
}

/// `Some(e)` when `p = q^e * base`.
fn q_power_multiple(p: &LaurentPoly, base: &LaurentPoly) -> Option<i64> {
    let e = p.min_exp()? - base.min_exp()?;
    (base.shift(e) == *p).then_some(e)
}

/// `Σ q^(c_i(u) + c_j(v))` over pairs `(u, v)` of coordinates `i, j`.
fn pair_gf(pairs: &BTreeSet<(i64, i64)>, w: &WeightSpec, i: usize, j: usize) -> LaurentPoly {
    poly_from_exponents(
        pairs
            .iter()
            .map(|&(u, v)| w.axes[i].contribution(u) + w.axes[j].contribution(v)),
    )
}

fn check_piece(r: &mut Report, scheme: &str, piece: &Piece, n: i64) -> (LaurentPoly, Vec<LaurentPoly>) {
    for (label, w) in [("written", &piece.weight.written), ("consolidated", &piece.weight.weight)] {
        let bad = w.invalid_labels(&piece.cubes);
        r.check_sets(
            &format!("{scheme}: {label} weight {w} is a taxicab distance on {}", piece.name),
            &bad,
            &CubeSet::new(),
        );
    }
    r.check(
        &format!("{scheme}: written and consolidated weights agree on {}", piece.name),
        piece.weight.written.equivalent(&piece.weight.weight),
        || format!("{} vs {}", piece.weight.written, piece.weight.weight),
    );
    let (slices, stray) = sliced_gf(&piece.cubes, &piece.weight.weight, piece.slice, n);
    r.check_eq(&format!("{scheme}: {} cubes without a summation index", piece.name), &stray, &0);
    let g = sum(&slices);
    r.check_eq(
        &format!("{scheme}: written weight gives the same sum on {}", piece.name),
        &gf(&piece.cubes, &piece.weight.written),
        &g,
    );
    (g, slices)
}

fn check_terms(r: &mut Report, what: &str, slices: &[LaurentPoly], terms: &[LaurentPoly]) {
    let h = one_plus_q();
    for (k, (s, t)) in slices.iter().zip(terms).enumerate() {
        let lhs = s * &h;
        r.check(&format!("{what}, k = {}", k + 1), lhs == *t, || {
            format!("(1+q) * gf = {lhs}, summand numerator = {t}")
        });
    }
}

/// Every equality of one interpretation, from weight validity to the final
/// product form.
pub fn check_scheme(s: &Scheme, n: i64) -> Report {
    let mut r = Report::new(s.name, n);
    let name = s.name;
    let h = one_plus_q();

    let (g_kept, kept_slices) = check_piece(&mut r, name, &s.kept, n);
    let (g_src, src_slices) = check_piece(&mut r, name, &s.src, n);
    let (g_image, image_slices) = check_piece(&mut r, name, &s.image, n);

    r.check(
        &format!("{name}: kept and image pieces add the same monomial"),
        s.kept.weight.weight == s.image.weight.weight,
        || format!("{} vs {}", s.kept.weight.weight, s.image.weight.weight),
    );
    r.check_sets(
        &format!("{name}: map sends {} onto {}", s.src.name, s.image.name),
        &s.map.apply_set(&s.src.cubes),
        &s.image.cubes,
    );
    let carried = s.src.weight.weight.transport(&s.map);
    r.check(
        &format!("{name}: transported weight matches the weight written on {}", s.image.name),
        carried.equivalent(&s.image.weight.written) && carried.equivalent(&s.image.weight.weight),
        || format!("transported {carried}, written {}", s.image.weight.written),
    );
    r.check_eq(
        &format!("{name}: generating function is invariant under the map"),
        &gf(&s.image.cubes, &carried),
        &g_src,
    );
    r.check_eq(
        &format!("{name}: {} and {} sums agree", s.src.name, s.image.name),
        &g_image,
        &g_src,
    );

    check_terms(&mut r, &format!("{name}: {} summands", s.kept.name), &kept_slices, &s.kept_terms);
    check_terms(&mut r, &format!("{name}: {} summands", s.src.name), &src_slices, &s.moved_terms);
    check_terms(&mut r, &format!("{name}: {} summands", s.image.name), &image_slices, &s.moved_terms);
    r.check_eq(
        &format!("{name}: first sum"),
        &(&g_kept * &h),
        &sum(&s.kept_terms),
    );
    r.check_eq(
        &format!("{name}: second sum"),
        &(&g_image * &h),
        &sum(&s.moved_terms),
    );
    r.check_eq(
        &format!("{name}: left side over the whole block"),
        &(&g_kept + &g_src),
        &s.total,
    );
    r.check_eq(
        &format!("{name}: left side from the summands"),
        &(&sum(&s.kept_terms) + &sum(&s.moved_terms)),
        &(&s.total * &h),
    );

    r.check_disjoint(&format!("{name}: kept and image pieces are disjoint"), &s.kept.cubes, &s.image.cubes);
    let union = s.kept.cubes.union(&s.image.cubes);
    r.check_sets(&format!("{name}: reassembled solid"), &union, &s.assembled);
    let w = s.kept.weight.weight;
    r.check_eq(
        &format!("{name}: reassembled solid sums to the right side"),
        &gf(&s.assembled, &w),
        &s.total,
    );

    let ab: BTreeSet<(i64, i64)> = s.assembled.iter().map(|v| (v.a(), v.b())).collect();
    let cd: BTreeSet<(i64, i64)> = s.assembled.iter().map(|v| (v.c(), v.d())).collect();
    r.check_eq(
        &format!("{name}: reassembled solid is a product of two plane shapes"),
        &(ab.len() * cd.len()),
        &s.assembled.len(),
    );
    let base = q_binomial(n + 1, 2).expect("n >= 1");
    let p_ab = pair_gf(&ab, &w, 0, 1);
    let p_cd = pair_gf(&cd, &w, 2, 3);
    for (plane, p) in [("(x,y)", &p_ab), ("(z,w)", &p_cd)] {
        r.check(
            &format!("{name}: {plane} factor is a q-binomial up to a power of q"),
            q_power_multiple(p, &base).is_some_and(|e| e >= 0),
            || format!("factor {p}"),
        );
    }
    r.check_eq(
        &format!("{name}: product of the plane factors"),
        &(&p_ab * &p_cd).shift(w.offset),
        &s.total,
    );
    r
}

/// The four-block identity over the final assembly, one family per block part.
fn verify_four_block(n: i64, r: &mut Report) -> Result<()> {
    let cubes = assembly(AssemblyKind::FourBlockFinal, n)?;
    let w = WeightSpec::from_low([1, 1, 1, 1]);
    let labels: CubeSet = cubes.iter().map(|(v, _)| *v).collect();
    r.check_sets("final assembly fills the region", &labels, &region_r3(n)?);
    r.check_eq("final assembly has no repeated cubes", &labels.len(), &cubes.len());
    let bad = w.invalid_labels(&labels);
    r.check_sets("weight (a-1)+(b-1)+(c-1)+(d-1) is a taxicab distance", &bad, &CubeSet::new());

    type Family = (&'static str, fn(&LocationLabel) -> i64, fn(i64) -> LaurentPoly);
    let families: [Family; 5] = [
        ("block A", slice_c, |i| q(i - 1) * q_int(i).pow(3)),
        ("block B", slice_b, |i| q(i) * q_int(i).pow(3)),
        ("block C", slice_a, |i| q(i + 1) * q_int(i).pow(3)),
        ("block D without its overhang", |v| v.d(), |i| {
            q(i - 1) * q_int(i - 1) * q_int(i).pow(2)
        }),
        ("moved overhang", slice_a, |i| q(i) * q_int(i).pow(2)),
    ];
    let member = |f: usize, kind: BlockKind, moved: bool| match f {
        0 => kind == BlockKind::A,
        1 => kind == BlockKind::B,
        2 => kind == BlockKind::C,
        3 => kind == BlockKind::D && !moved,
        _ => kind == BlockKind::D && moved,
    };
    let mut lhs = LaurentPoly::zero();
    for (f, (name, slice, closed)) in families.iter().enumerate() {
        let part: CubeSet = cubes
            .iter()
            .filter(|(_, p)| member(f, p.block, p.moved))
            .map(|(v, _)| *v)
            .collect();
        let (slices, stray) = sliced_gf(&part, &w, *slice, n);
        r.check_eq(&format!("{name}: cubes without a summation index"), &stray, &0);
        for (i, g) in slices.iter().enumerate() {
            let want = closed(i as i64 + 1);
            r.check(&format!("{name}, i = {}", i + 1), *g == want, || {
                format!("gf {g}, closed form {want}")
            });
        }
        lhs += sum(&slices);
    }
    let (grouped, rhs) = sides(IdentityId::FourBlock, n)?;
    r.check_eq("families sum to the grouped left side", &lhs, &grouped);
    r.check_eq("left side equals [n+1]^2 [n]^2", &grouped, &rhs);
    r.check_eq("generating function of the region", &gf(&labels, &w), &rhs);
    let n2 = BigInt::from(n * n * (n + 1) * (n + 1));
    r.check_eq("left side at q = 1 is n^2 (n+1)^2", &grouped.eval_at_one(), &n2);
    let cubes4: BigInt = (1..=n).map(|i| BigInt::from(4 * i * i * i)).sum();
    r.check_eq("right side at q = 1 is 4 Σ i^3", &rhs.eval_at_one(), &cubes4);
    Ok(())
}

/// `(1-q)^2 (1-q^2)` times the original summand of each single-sum identity.
fn cleared_summand(id: IdentityId, n: i64, k: i64) -> LaurentPoly {
    let sq = one_minus_q_pow(k).pow(2);
    match id {
        IdentityId::GarrettHummel => q(k - 1) * sq * (one_minus_q_pow(k - 1) + one_minus_q_pow(k + 1)),
        IdentityId::WarnaarFirst | IdentityId::WarnaarSecond => q(2 * n - 2 * k) * sq * one_minus_q_pow(2 * k),
        IdentityId::ZhaoFeng => {
            q(4 * (n - k)) * sq * (LaurentPoly::one() + q(2) - LaurentPoly::monomial(k + 1, 2))
        }
        _ => unreachable!("single-sum identities only"),
    }
}

fn check_cleared(r: &mut Report, id: IdentityId, n: i64, s: &Scheme) {
    let cube = one_minus_q_pow(1).pow(3);
    let mut total = LaurentPoly::zero();
    for k in 1..=n {
        let c = cleared_summand(id, n, k);
        let split = (&s.kept_terms[k as usize - 1] + &s.moved_terms[k as usize - 1]) * &cube;
        r.check(&format!("original summand matches the split form, k = {k}"), c == split, || {
            format!("original {c}, split {split}")
        });
        total += c;
    }
    let rhs = qbinom_sq(n) * one_minus_q_pow(1).pow(2) * one_minus_q_pow(2);
    r.check_eq("original equation with denominators cleared", &total, &rhs);
}

/// The two regroupings of `1 - q^(2k)` used by the two readings of the second
/// identity, and the alternate reading's split as an extra equality.
fn check_warnaar_regroupings(r: &mut Report, id: IdentityId, n: i64) {
    let target = |k| one_minus_q_pow(2 * k);
    for k in 1..=n {
        let first = one_minus_q_pow(k + 1) + q(k + 1) * one_minus_q_pow(k - 1);
        let second = q(k - 1) * one_minus_q_pow(k + 1) + one_minus_q_pow(k - 1);
        r.check(&format!("regrouping of 1 - q^2k, k = {k}"), first == target(k) && second == target(k), || {
            format!("{first} / {second}")
        });
    }
    if id == IdentityId::WarnaarSecond {
        let (a, b) = warnaar_first_terms(n);
        r.check_eq(
            "contrasted regrouping also sums to the right side",
            &(&sum(&a) + &sum(&b)),
            &(qbinom_sq(n) * one_plus_q()),
        );
    }
}

/// Checks linking the two halves of the last identity and its original form.
fn check_forster(r: &mut Report, n: i64, halves: &[Scheme]) -> Result<()> {
    let [first, second] = halves else {
        return Err(Error::Internal("expected two halves".into()));
    };
    let s = map(MapId::PsiYXp1);
    let psi = map(MapId::PsiZwYm1X);
    for (from, to) in [([1, 2, 1, 1], [1, 1, 1, 1])] {
        r.check_eq(
            "psi_{z,w,y-1,x} sends the start point (1,2,1,1) to (1,1,1,1)",
            &psi.apply_label(LocationLabel(from)),
            &LocationLabel(to),
        );
    }
    for (from, to) in [([1, 1, 1, 1], [1, 2, 1, 1]), ([1, 2, 1, 1], [2, 2, 1, 1])] {
        r.check_eq(
            &format!("psi_{{y,x+1}} sends {} to {}", LocationLabel(from), LocationLabel(to)),
            &s.apply_label(LocationLabel(from)),
            &LocationLabel(to),
        );
    }
    for (a, b) in [
        (&first.kept, &second.kept),
        (&first.src, &second.src),
        (&first.image, &second.image),
    ] {
        r.check_sets(&format!("psi_{{y,x+1}} sends {} onto {}", a.name, b.name), &s.apply_set(&a.cubes), &b.cubes);
        let t = a.weight.weight.transport(&s);
        let raised = t.with_offset(t.offset + 1);
        r.check(
            &format!("transported weight on {} is one more than on {}", b.name, a.name),
            raised.equivalent(&b.weight.written),
            || format!("transported {t}, written {}", b.weight.written),
        );
        r.check_eq(
            &format!("{} sum is q times the {} sum", b.name, a.name),
            &gf(&b.cubes, &b.weight.weight),
            &gf(&a.cubes, &a.weight.weight).shift(1),
        );
    }
    r.check_sets(
        "psi_{y,x+1} sends the first solid onto the second",
        &s.apply_set(&first.assembled),
        &second.assembled,
    );
    r.check_disjoint("the two solids are disjoint", &first.assembled, &second.assembled);
    let union = first.assembled.union(&second.assembled);
    let want = region_r3(n)?.filter(|v| v.b() >= 2 && v.d() <= v.c());
    r.check_sets("the two solids form a rectangle times a triangle", &union, &want);
    let qq = q(1) + q(2);
    let base = qbinom_sq(n);
    r.check_eq(
        "union sums to (q + q^2) times the squared q-binomial",
        &gf(&union, &WeightSpec::from_low([1, 1, 1, 1])),
        &(&qq * &base),
    );

    let h = one_plus_q();
    for i in 1..=n {
        let reindexed = q(i).scale(2) * q_int(i).pow(2) * (q_int(i - 1) + q_int(i + 1));
        let halves = (&first.kept_terms[i as usize - 1]
            + &first.moved_terms[i as usize - 1]
            + &second.kept_terms[i as usize - 1]
            + &second.moved_terms[i as usize - 1])
            .scale(2);
        r.check(&format!("reindexed summand splits into the two halves, i = {i}"), &reindexed * &h == halves, || {
            format!("(1+q) * {reindexed} vs {halves}")
        });
    }
    let (lhs, rhs) = sides(IdentityId::Forster, n)?;
    r.check_eq("reindexed equation", &lhs, &rhs);
    r.check_eq(
        "twice the two half totals",
        &(&first.total + &second.total).scale(2),
        &rhs,
    );

    let big_n = n + 1;
    let qi = |i: i64| q_int(i);
    let mut original = LaurentPoly::zero();
    let mut cleared = LaurentPoly::zero();
    for i in 1..=big_n {
        let t = q(i - 1).scale(2) * qi(i - 1).pow(2) * (qi(i - 2) + qi(i));
        if i == 1 {
            r.check("original summand vanishes at i = 1", t.is_zero(), || t.to_string());
        }
        original += t;
        cleared += q(i - 1).scale(2) * one_minus_q_pow(i - 1).pow(2) * (one_minus_q_pow(i - 2) + one_minus_q_pow(i));
    }
    let rhs_n = (&qq.scale(2)) * &q_binomial(big_n, 2)?.pow(2);
    r.check_eq(&format!("original equation at upper limit {big_n}"), &original, &rhs_n);
    r.check_eq(
        "original equation with denominators cleared",
        &cleared,
        &(&rhs_n * &one_minus_q_pow(1).pow(3)),
    );
    r.check_eq("original and reindexed right sides agree", &rhs_n, &rhs);
    Ok(())
}

/// Checks one identity at one `n` through every layer.
pub fn verify_identity(id: IdentityId, n: i64) -> Result<Report> {
    check_n(n)?;
    let mut r = Report::new(id.id(), n);
    if id == IdentityId::FourBlock {
        verify_four_block(n, &mut r)?;
        return Ok(r);
    }
    let all = schemes(id, n)?;
    for s in &all {
        r.absorb(check_scheme(s, n));
    }
    let (lhs, rhs) = sides(id, n)?;
    r.check_eq("left side equals right side", &lhs, &rhs);
    let base = qbinom_sq(n);
    let want_powers: &[i64] = if id == IdentityId::Forster { &[1, 2] } else { &[0] };
    let got: Vec<Option<i64>> = all.iter().map(|s| q_power_multiple(&s.total, &base)).collect();
    let want: Vec<Option<i64>> = want_powers.iter().map(|&e| Some(e)).collect();
    r.check("right side is a q-power multiple of the squared q-binomial", got == want, || {
        format!("{got:?}, expected {want:?}")
    });
    let tri = BigInt::from(n * (n + 1) / 2);
    let scale = if id == IdentityId::Forster { 4 } else { 1 };
    let expect = &tri * &tri * scale;
    r.check_eq("left side at q = 1", &lhs.eval_at_one(), &expect);
    r.check_eq("right side at q = 1", &rhs.eval_at_one(), &expect);
    match id {
        IdentityId::GarrettHummel | IdentityId::WarnaarFirst | IdentityId::WarnaarSecond | IdentityId::ZhaoFeng => {
            check_cleared(&mut r, id, n, &all[0]);
        }
        _ => {}
    }
    match id {
        IdentityId::GarrettHummel => {
            for k in 1..=n {
                r.absorb(verify_matrix_split(k)?);
            }
        }
        IdentityId::WarnaarFirst | IdentityId::WarnaarSecond => check_warnaar_regroupings(&mut r, id, n),
        IdentityId::Forster => check_forster(&mut r, n, &all)?,
        _ => {}
    }
    Ok(r)
}

/// Both sides of an identity as polynomials. Single-sum left sides come from
/// the split summand numerators divided exactly by `1 + q`.
pub fn sides(id: IdentityId, n: i64) -> Result<(LaurentPoly, LaurentPoly)> {
    check_n(n)?;
    let split = |(a, b): (Vec<LaurentPoly>, Vec<LaurentPoly>)| (&sum(&a) + &sum(&b)).div_exact(&one_plus_q());
    Ok(match id {
        IdentityId::FourBlock => {
            let lhs: LaurentPoly = (1..=n)
                .map(|i| {
                    (q(i - 1) + q(i) + q(i + 1)) * q_int(i).pow(3) + (q(i - 1) * q_int(i - 1) + q(i)) * q_int(i).pow(2)
                })
                .sum();
            (lhs, q_int(n + 1).pow(2) * q_int(n).pow(2))
        }
        IdentityId::GarrettHummel => (split(garrett_hummel_terms(n))?, qbinom_sq(n)),
        IdentityId::WarnaarFirst => (split(warnaar_first_terms(n))?, qbinom_sq(n)),
        IdentityId::WarnaarSecond => (split(warnaar_second_terms(n))?, qbinom_sq(n)),
        IdentityId::ZhaoFeng => (split(zhao_feng_terms(n))?, qbinom_sq(n)),
        IdentityId::Forster => {
            let lhs: LaurentPoly = (1..=n)
                .map(|i| q(i).scale(2) * q_int(i).pow(2) * (q_int(i - 1) + q_int(i + 1)))
                .sum();
            (lhs, (q(1) + q(2)).scale(2) * qbinom_sq(n))
        }
    })
}

/// The `k x (k+1)` matrix `q^((i-1)+(j-1))` split on `i >= j`: the lower part
/// `S` maps onto the upper part `T` by `(i,j) -> (j,i+1)`, so `T = qS` and
/// `S + qS = [k][k+1]`.
pub fn verify_matrix_split(k: i64) -> Result<Report> {
    if k < 1 {
        return Err(Error::Domain(format!("matrix size k must be >= 1, got {k}")));
    }
    let mut r = Report::new("matrix_split", k);
    let lower: Vec<(i64, i64)> = (1..=k).flat_map(|i| (1..=i).map(move |j| (i, j))).collect();
    let upper: BTreeSet<(i64, i64)> = (1..=k)
        .flat_map(|i| (i + 1..=k + 1).map(move |j| (i, j)))
        .collect();
    let image: BTreeSet<(i64, i64)> = lower.iter().map(|&(i, j)| (j, i + 1)).collect();
    r.check_eq("bijection is injective", &image.len(), &lower.len());
    r.check("bijection lands on the entries above the diagonal", image == upper, || {
        format!("{} images, {} target entries", image.len(), upper.len())
    });
    let weight = |(i, j): (i64, i64)| i - 1 + j - 1;
    let raised = lower.iter().all(|&(i, j)| weight((j, i + 1)) == weight((i, j)) + 1);
    r.check("each image entry is q times its preimage", raised, String::new);
    let s = poly_from_exponents(lower.iter().map(|&e| weight(e)));
    let t = poly_from_exponents(upper.iter().map(|&e| weight(e)));
    let full = q_int(k) * q_int(k + 1);
    r.check_eq("T = qS", &t, &s.shift(1));
    r.check_eq("S + T = [k][k+1]", &(&s + &t), &full);
    r.check_eq("S (1+q) = [k+1][k]", &(&s * &one_plus_q()), &full);
    let direct = poly_from_exponents((1..=k).flat_map(|c| (1..=c).map(move |d| c - 1 + d - 1)));
    r.check_eq("S is the sum over 1 <= d <= c <= k", &s, &direct);
    Ok(r)
}
