use std::io::Write;

use hypertile::powersums::{verify_base, verify_beardon};
use hypertile::qseries::{verify_identity, verify_matrix_split, IdentityId};
use hypertile::tiling::{
    benjamin_orrison, first_fitting, one_block_assembly, second_fitting, verify_block_equivalence,
};
use hypertile::Report;
use rayon::prelude::*;

use crate::{open_output, Failed, Format, Suite, VerifyArgs};

const ORDER: [Suite; 5] = [
    Suite::Tiling,
    Suite::OneBlock,
    Suite::QIdentities,
    Suite::PowerSums,
    Suite::BenjaminOrrison,
];

impl Suite {
    fn id(self) -> &'static str {
        match self {
            Suite::Tiling => "tiling",
            Suite::OneBlock => "one_block",
            Suite::QIdentities => "q_identities",
            Suite::PowerSums => "power_sums",
            Suite::BenjaminOrrison => "benjamin_orrison",
            Suite::All => "all",
        }
    }
}

/// `"a..b"` (inclusive) or `"a"`.
pub fn parse_range(s: &str) -> Result<(i64, i64), Failed> {
    let bad = || Failed::Usage(format!("--n expects a..b or a single integer, got {s:?}"));
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (a.trim(), b.trim().trim_start_matches('=')),
        None => (s.trim(), s.trim()),
    };
    let lo: i64 = lo.parse().map_err(|_| bad())?;
    let hi: i64 = hi.parse().map_err(|_| bad())?;
    if lo < 1 {
        return Err(Failed::Usage(format!("n must be at least 1, got {lo}")));
    }
    if lo > hi {
        return Err(Failed::Usage(format!("empty range {lo}..{hi}")));
    }
    Ok((lo, hi))
}

fn selected(suites: &[Suite]) -> Vec<Suite> {
    if suites.contains(&Suite::All) {
        return ORDER.to_vec();
    }
    ORDER.iter().copied().filter(|s| suites.contains(s)).collect()
}

/// One aggregated report for a suite at one `n`.
fn run_suite(suite: Suite, n: i64, p_max: i64) -> hypertile::Result<Report> {
    let mut r = Report::new(suite.id(), n);
    match suite {
        Suite::Tiling => {
            r.absorb(verify_block_equivalence(n)?);
            r.absorb(first_fitting(n)?.report);
            r.absorb(second_fitting(n)?.report);
        }
        Suite::OneBlock => r.absorb(one_block_assembly(n)?.report),
        Suite::QIdentities => {
            for id in IdentityId::ALL {
                r.absorb(verify_identity(id, n)?);
            }
            r.absorb(verify_matrix_split(n)?);
        }
        Suite::PowerSums => {
            r.absorb(verify_base(n)?);
            for p in 3..=p_max {
                let mut sub = verify_beardon(p, n)?;
                sub.theorem = format!("beardon p={p}");
                r.absorb(sub);
            }
        }
        Suite::BenjaminOrrison => r.absorb(benjamin_orrison(n)?),
        Suite::All => unreachable!("expanded before running"),
    }
    Ok(r)
}

fn thread_count() -> Result<usize, Failed> {
    match std::env::var("HYPERTILE_THREADS") {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Failed::Usage(format!("HYPERTILE_THREADS must be a non-negative integer, got {v:?}"))),
        Err(_) => Ok(0),
    }
}

fn write_text(w: &mut dyn Write, r: &Report) -> std::io::Result<()> {
    let status = if r.pass { "PASS" } else { "FAIL" };
    writeln!(w, "{status} {} n={} checks={}", r.theorem, r.n, r.checks)?;
    for f in &r.failures {
        writeln!(w, "  {}: {}", f.check, f.detail)?;
    }
    Ok(())
}

pub fn run(args: &VerifyArgs) -> Result<(), Failed> {
    let (lo, hi) = parse_range(&args.n)?;
    let suites = selected(&args.suites);
    if suites.is_empty() {
        return Err(Failed::Usage("no suites selected".into()));
    }
    if suites.contains(&Suite::PowerSums) && args.p_max < 3 {
        return Err(Failed::Usage(format!("--p-max must be at least 3, got {}", args.p_max)));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(thread_count()?)
        .build()
        .map_err(|e| Failed::Io(e.to_string()))?;
    let jobs: Vec<(Suite, i64)> = suites.iter().flat_map(|&s| (lo..=hi).map(move |n| (s, n))).collect();
    let results: Vec<hypertile::Result<Report>> = pool.install(|| {
        jobs.par_iter()
            .map(|&(s, n)| run_suite(s, n, args.p_max))
            .collect()
    });

    let mut out = open_output(args.out.as_ref())?;
    let mut all_pass = true;
    for res in results {
        let r = res?;
        all_pass &= r.pass;
        match args.format {
            Format::Text => write_text(&mut out, &r)?,
            Format::Json => {
                let mut v = r.to_json();
                v["suite"] = serde_json::Value::from(r.theorem.clone());
                serde_json::to_writer(&mut out, &v).map_err(|e| Failed::Io(e.to_string()))?;
                writeln!(out)?;
            }
        }
    }
    out.flush()?;
    if all_pass {
        Ok(())
    } else {
        Err(Failed::Verification)
    }
}
