//! One line per acceptance criterion, run at full range and exact tolerance.
//! `cargo test -p hypertile-core --test acceptance -- --nocapture` shows the lines.

use std::time::{Duration, Instant};

use hypertile::constructions::{block, subcomponents, BlockKind};
use hypertile::isometry::named_map;
use hypertile::powersums::{sigma, verify_base, verify_beardon};
use hypertile::qseries::identities::{check_scheme, schemes, Weighted};
use hypertile::qseries::weight::{gf, Orientation};
use hypertile::qseries::{verify_identity, verify_matrix_split, IdentityId};
use hypertile::tiling::{
    assembly, benjamin_orrison, benjamin_orrison_with, block_moves, first_fitting, first_fitting_with,
    one_block_assembly, one_block_assembly_with, pair_split, second_fitting, second_fitting_with,
    verify_block_equivalence, verify_block_equivalence_with, AssemblyKind, BlockMove, SecondFittingMaps,
};
use hypertile::{region_r3, Axis, CubeSet, Isometry, LocationLabel, MapId, Report, Sign, WeightSpec};
use num_bigint::BigInt;
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};
use rayon::prelude::*;

struct Outcome {
    pass: bool,
    note: String,
}

fn outcome(failures: Vec<String>, note: impl Into<String>) -> Outcome {
    let mut note = note.into();
    if !failures.is_empty() {
        note = format!("{note}; {} failing: {}", failures.len(), failures.join(" | "));
    }
    Outcome {
        pass: failures.is_empty(),
        note,
    }
}

fn report_failures(reports: Vec<Report>) -> Vec<String> {
    reports
        .into_iter()
        .filter(|r| !r.pass)
        .map(|r| {
            let first = r.failures.first().map(|f| f.check.clone()).unwrap_or_default();
            format!("{} n={}: {first}", r.theorem, r.n)
        })
        .collect()
}

fn timed(limit: Option<Duration>, f: impl FnOnce() -> Outcome) -> Outcome {
    let start = Instant::now();
    let mut o = f();
    let took = start.elapsed();
    o.note = format!("{} [{:.1}s]", o.note, took.as_secs_f64());
    if let Some(limit) = limit {
        if took > limit {
            o.pass = false;
            o.note = format!("{} exceeds {}s", o.note, limit.as_secs());
        }
    }
    o
}

fn sum_powers(p: u32, n: i64) -> i64 {
    (1..=n).map(|i: i64| i.pow(p)).sum()
}

fn four_block_tiling() -> Outcome {
    let failures: Vec<String> = (1..=30i64)
        .into_par_iter()
        .flat_map_iter(|n| {
            let mut bad = Vec::new();
            let first = first_fitting(n).unwrap();
            let second = second_fitting(n).unwrap();
            bad.extend(report_failures(vec![
                verify_block_equivalence(n).unwrap(),
                first.report.clone(),
                second.report.clone(),
            ]));
            let final_cubes = assembly(AssemblyKind::FourBlockFinal, n).unwrap();
            let labels: CubeSet = final_cubes.iter().map(|(v, _)| *v).collect();
            let src = 4 * sum_powers(3, n);
            if final_cubes.len() as i64 != src
                || labels.len() as i64 != src
                || labels != region_r3(n).unwrap()
                || src != n * n * (n + 1) * (n + 1)
            {
                bad.push(format!("n={n}: final assembly is not a bijection onto the region"));
            }
            bad
        })
        .collect();
    outcome(failures, "n=1..30, 4Σi³ = n²(n+1)² cubes placed bijectively")
}

fn exception_counts() -> Outcome {
    let failures: Vec<String> = (1..=30i64)
        .into_par_iter()
        .filter_map(|n| {
            let want = sum_powers(2, n) as usize;
            let f = first_fitting(n).unwrap();
            let sub = subcomponents(n).unwrap();
            let counts = [
                f.overhang.len(),
                f.vacancies.len(),
                sub.overhang_d.len(),
                sub.vacancy_neighbor_c.len(),
                sub.vacancy_super_c.len(),
            ];
            (counts.iter().any(|&c| c != want)).then(|| format!("n={n}: counts {counts:?}, want {want}"))
        })
        .collect();
    outcome(failures, "n=1..30, overhang and vacancies both Σi²")
}

fn one_block() -> Outcome {
    let failures: Vec<String> = (1..=30i64)
        .into_par_iter()
        .flat_map_iter(|n| {
            let f = one_block_assembly(n).unwrap();
            let tri = (n * (n + 1) / 2) as usize;
            let mut bad = report_failures(vec![f.report.clone()]);
            if f.occupied.len() != tri * tri {
                bad.push(format!("n={n}: {} cubes", f.occupied.len()));
            }
            bad
        })
        .collect();
    outcome(failures, "n=1..30, |S33| = C(n+1,2)² as a disjoint union")
}

fn identity_sweep(ids: &[IdentityId], n_max: i64) -> Vec<String> {
    let jobs: Vec<(IdentityId, i64)> = ids.iter().flat_map(|&id| (1..=n_max).map(move |n| (id, n))).collect();
    let reports: Vec<Report> = jobs
        .into_par_iter()
        .map(|(id, n)| verify_identity(id, n).unwrap())
        .collect();
    report_failures(reports)
}

fn four_block_identity() -> Outcome {
    outcome(
        identity_sweep(&[IdentityId::FourBlock], 40),
        "n=1..40, closed form and generating function over the fitted assembly",
    )
}

fn q_analogues() -> Outcome {
    let ids = [
        IdentityId::GarrettHummel,
        IdentityId::WarnaarFirst,
        IdentityId::WarnaarSecond,
        IdentityId::ZhaoFeng,
        IdentityId::Forster,
    ];
    outcome(identity_sweep(&ids, 40), "five identities, n=1..40, every intermediate equality")
}

fn matrix_split() -> Outcome {
    let reports: Vec<Report> = (1..=60).into_par_iter().map(|k| verify_matrix_split(k).unwrap()).collect();
    outcome(report_failures(reports), "k=1..60, S + qS = [k][k+1]")
}

fn pair_bijection() -> Outcome {
    let reports: Vec<Report> = (1..=20).into_par_iter().map(|n| benjamin_orrison(n).unwrap()).collect();
    outcome(report_failures(reports), "n=1..20, g bijective and f2∘g∘f1 matches the one-block map")
}

fn power_sums() -> Outcome {
    let mut failures = Vec::new();
    let jobs: Vec<(i64, i64)> = (3..=15).flat_map(|p| (1..=50).map(move |n| (p, n))).collect();
    let reports: Vec<Report> = jobs
        .into_par_iter()
        .map(|(p, n)| verify_beardon(p, n).unwrap())
        .collect();
    failures.extend(report_failures(reports));
    failures.extend(report_failures((1..=50).map(|n| verify_base(n).unwrap()).collect()));
    for n in 1..=30 {
        let count = assembly(AssemblyKind::FourBlockFinal, n).unwrap().len();
        if BigInt::from(count) != 4 * sigma(3, n).unwrap() {
            failures.push(format!("n={n}: final assembly has {count} cubes, 4σ₃ differs"));
        }
    }
    outcome(failures, "p=3..15, n=1..50; 4σ₃(n) equals the final assembly size for n=1..30")
}

fn isometry() -> impl Strategy<Value = Isometry> {
    (
        Just(Axis::ALL).prop_shuffle(),
        prop::array::uniform4(any::<bool>()),
        prop::array::uniform4(-6i64..=6),
    )
        .prop_map(|(src, neg, shift)| {
            let signs = neg.map(|m| if m { Sign::Minus } else { Sign::Plus });
            Isometry::new(src.try_into().unwrap(), signs, shift).unwrap()
        })
}

fn run_property<S: Strategy>(
    failures: &mut Vec<String>,
    name: &str,
    strategy: S,
    test: impl Fn(S::Value) -> std::result::Result<(), TestCaseError>,
) {
    let mut runner = TestRunner::new(Config::with_cases(1000));
    if let Err(e) = runner.run(&strategy, test) {
        failures.push(format!("{name}: {e}"));
    }
}

fn property_suites() -> Outcome {
    let mut failures = Vec::new();
    run_property(&mut failures, "group laws", (isometry(), isometry(), isometry()), |(f, g, h)| {
        prop_assert_eq!((f * g) * h, f * (g * h));
        prop_assert_eq!(f * f.invert(), Isometry::identity());
        prop_assert_eq!(Isometry::identity() * f, f);
        Ok(())
    });
    run_property(&mut failures, "parity", (isometry(), isometry()), |(f, g)| {
        prop_assert_eq!((f * g).parity(), f.parity() * g.parity());
        Ok(())
    });
    for id in MapId::ALL {
        let f = named_map(id, Some(7)).unwrap();
        run_property(
            &mut failures,
            &format!("label/point consistency for {id}"),
            prop::array::uniform4(-9i64..=9),
            |v| {
                let v = LocationLabel(v);
                let lo = f.apply_point(v.low_corner());
                let hi = f.apply_point(v.high_corner());
                prop_assert_eq!(LocationLabel::from_corners(lo, hi), Some(f.apply_label(v)));
                Ok(())
            },
        );
    }
    run_property(
        &mut failures,
        "generating-function transport",
        (isometry(), prop::collection::vec(prop::array::uniform4(-5i64..=5), 0..30)),
        |(f, labels)| {
            let s = CubeSet::from_labels(labels.into_iter().map(LocationLabel).collect());
            let w = WeightSpec::new(
                [
                    Orientation::FromLow(1),
                    Orientation::FromHigh(3),
                    Orientation::FromLow(-2),
                    Orientation::FromHigh(0),
                ],
                2,
            );
            prop_assert_eq!(gf(&f.apply_set(&s), &w.transport(&f)), gf(&s, &w));
            Ok(())
        },
    );

    let n = 4;
    let mut controls: Vec<(&str, bool)> = Vec::new();
    let mut moves = block_moves().to_vec();
    moves[0].1 = BlockMove {
        rotation: moves[0].1.rotation,
        translation: Isometry::identity(),
    };
    controls.push(("block equivalence, wrong translation", verify_block_equivalence_with(n, &moves).unwrap().pass));
    let blocks = [BlockKind::A, BlockKind::B, BlockKind::C, BlockKind::C].map(|k| block(k, n).unwrap());
    controls.push(("first fitting, C twice", first_fitting_with(n, &blocks).unwrap().pass()));
    let maps = SecondFittingMaps {
        replication: named_map(MapId::MuPrimeDc, None).unwrap(),
        ..SecondFittingMaps::default()
    };
    controls.push(("second fitting, untranslated replication", second_fitting_with(n, maps).unwrap().pass()));
    let psi = named_map(MapId::PsiZWm1YX, None).unwrap();
    controls.push(("one block, shifted map", one_block_assembly_with(n, psi).unwrap().pass()));
    controls.push((
        "pair bijection, identity in place of g",
        benjamin_orrison_with(n, |t| t).unwrap().pass,
    ));
    controls.push((
        "pair bijection, off-by-one branch",
        benjamin_orrison_with(n, |t| {
            let [h, i, j, k] = t;
            if h < i {
                pair_split(t)
            } else {
                [j, k, i, h - 1]
            }
        })
        .unwrap()
        .pass,
    ));
    let mut s = schemes(IdentityId::GarrettHummel, n).unwrap().remove(0);
    s.kept.weight = Weighted::plain(WeightSpec::from_low([1, 1, 1, 1]));
    controls.push(("q-identity, wrong start point", check_scheme(&s, n).pass));
    let mut s = schemes(IdentityId::ZhaoFeng, n).unwrap().remove(0);
    let a = block(BlockKind::A, n).unwrap();
    s.image.cubes = a.filter(|v| v.a() >= v.b());
    controls.push(("q-identity, a >= b in place of a < b", check_scheme(&s, n).pass));
    for (name, passed) in controls {
        if passed {
            failures.push(format!("negative control passed: {name}"));
        }
    }

    for id in IdentityId::ALL {
        for n in 1..=12 {
            for s in schemes(id, n).unwrap() {
                for piece in [&s.kept, &s.src, &s.image] {
                    for w in [piece.weight.written, piece.weight.weight] {
                        let bad = w.invalid_labels(&piece.cubes);
                        let min = gf(&piece.cubes, &w).min_exp();
                        if !bad.is_empty() || min.is_some_and(|e| e < 0) {
                            failures.push(format!("{} n={n}: {w} negative on {}", s.name, piece.name));
                        }
                    }
                }
            }
        }
    }
    outcome(
        failures,
        "1000-case group laws, parity, label/point per catalog map, transport, 8 negative controls, weight validity",
    )
}

#[test]
fn acceptance() {
    println!();
    let criteria: Vec<(&str, Option<u64>, fn() -> Outcome)> = vec![
        ("four-block tiling", Some(60), four_block_tiling),
        ("exception counts", None, exception_counts),
        ("one-block assembly", None, one_block),
        ("four-block q-identity", Some(120), four_block_identity),
        ("q-analogue suite", None, q_analogues),
        ("matrix split", None, matrix_split),
        ("pair bijection", None, pair_bijection),
        ("power sums", None, power_sums),
        ("property suites", None, property_suites),
    ];
    let mut all = true;
    for (i, (name, limit, run)) in criteria.into_iter().enumerate() {
        let o = timed(limit.map(Duration::from_secs), run);
        println!("[{}] {}. {name}: {}", if o.pass { "PASS" } else { "FAIL" }, i + 1, o.note);
        all &= o.pass;
    }
    assert!(all, "acceptance criteria failed");
}
