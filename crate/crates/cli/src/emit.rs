use std::collections::BTreeMap;
use std::io::Write;
use std::path::{Path, PathBuf};

use hypertile::constructions::{block as block_set, BlockKind};
use hypertile::isometry::named_map_str;
use hypertile::qseries::{sides, IdentityId};
use hypertile::tiling::{assembly as assembly_cubes, AssemblyKind, Provenance};
use hypertile::LocationLabel;
use serde_json::{json, Value};

use crate::{open_output, Failed, Format};

fn check_n(n: i64) -> Result<(), Failed> {
    if n < 1 {
        return Err(Failed::Usage(format!("n must be at least 1, got {n}")));
    }
    Ok(())
}

fn cube_record(label: &[i64], p: &Provenance) -> Value {
    let mut v = json!({ "label": label, "block": p.block, "moved": p.moved });
    if let Some(part) = p.part {
        v["part"] = json!(part);
    }
    v
}

fn write_json(out: Option<&PathBuf>, v: &Value) -> Result<(), Failed> {
    let mut w = open_output(out)?;
    serde_json::to_writer(&mut w, v).map_err(|e| Failed::Io(e.to_string()))?;
    writeln!(w)?;
    w.flush()?;
    Ok(())
}

pub fn block(kind: &str, n: i64) -> Result<Value, Failed> {
    check_n(n)?;
    let kind: BlockKind = kind.parse()?;
    let tag = Provenance {
        block: kind,
        moved: false,
        part: None,
    };
    let cubes: Vec<Value> = block_set(kind, n)?.iter().map(|v| cube_record(&v.0, &tag)).collect();
    Ok(json!({ "id": format!("block_{kind}"), "n": n, "count": cubes.len(), "cubes": cubes }))
}

pub fn assembly(id: &str, n: i64) -> Result<Value, Failed> {
    check_n(n)?;
    let kind: AssemblyKind = id.parse()?;
    let cubes: Vec<Value> = assembly_cubes(kind, n)?
        .iter()
        .map(|(v, p)| cube_record(&v.0, p))
        .collect();
    Ok(json!({ "id": kind.id(), "n": n, "count": cubes.len(), "cubes": cubes }))
}

/// `w`-layers of an assembly, each as 3D labels `(a,b,c)`.
pub fn slice_files(id: &str, n: i64) -> Result<Vec<(i64, Value)>, Failed> {
    check_n(n)?;
    let kind: AssemblyKind = id.parse()?;
    let mut layers: BTreeMap<i64, Vec<(LocationLabel, Provenance)>> = BTreeMap::new();
    for (v, p) in assembly_cubes(kind, n)? {
        layers.entry(v.d()).or_default().push((v, p));
    }
    Ok(layers
        .into_iter()
        .map(|(w, cubes)| {
            let cubes: Vec<Value> = cubes.iter().map(|(v, p)| cube_record(&v.0[..3], p)).collect();
            (w, json!({ "assembly": kind.id(), "n": n, "w": w, "cubes": cubes }))
        })
        .collect())
}

pub fn block_cmd(kind: &str, n: i64, out: Option<&PathBuf>) -> Result<(), Failed> {
    write_json(out, &block(kind, n)?)
}

pub fn assembly_cmd(id: &str, n: i64, out: Option<&PathBuf>) -> Result<(), Failed> {
    write_json(out, &assembly(id, n)?)
}

pub fn slices(id: &str, n: i64, dir: &Path) -> Result<(), Failed> {
    let files = slice_files(id, n)?;
    std::fs::create_dir_all(dir)?;
    for (w, v) in files {
        let path = dir.join(format!("w={w}.json"));
        write_json(Some(&path), &v)?;
    }
    Ok(())
}

pub fn poly(identity: &str, n: i64, format: Format) -> Result<(), Failed> {
    check_n(n)?;
    let id: IdentityId = identity.parse()?;
    let (lhs, rhs) = sides(id, n)?;
    match format {
        Format::Text => {
            let mut w = open_output(None)?;
            writeln!(w, "lhs: {lhs}")?;
            writeln!(w, "rhs: {rhs}")?;
            w.flush()?;
            Ok(())
        }
        Format::Json => write_json(
            None,
            &json!({ "identity": id.id(), "n": n, "lhs": lhs.to_json(), "rhs": rhs.to_json() }),
        ),
    }
}

pub fn map(id: &str, n: Option<i64>) -> Result<(), Failed> {
    let f = named_map_str(id, n)?;
    let mut w = open_output(None)?;
    writeln!(w, "{f}")?;
    w.flush()?;
    Ok(())
}
