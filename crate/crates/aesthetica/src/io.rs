// Copyright 2026 the Aesthetica Authors
// SPDX-License-Identifier: Apache-2.0 OR MIT

//! Curve and report interchange.
//!
//! Curves travel as CSV with header `param,x,y`, one metadata comment line
//! `# kind=<kind> ...` carrying provenance, and floats printed with 17
//! significant digits so write → read → write is byte-identical. Reports
//! are JSON with the shape `{command, input, verdict?, metrics{...},
//! grid?, maps?}`.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::io;
use std::path::Path;

use crate::affinity::AffineMap2;
use crate::curve::{CurveMeta, CurvatureProfile, ParamKind, PlanarPoint, Provenance, SampledCurve};
use crate::error::{Error, Result};
use crate::generators::{CurvatureSign, Family, FamilySpec};

/// Full-roundtrip float formatting: 17 significant digits.
pub fn format_float(v: f64) -> String {
    format!("{v:.16e}")
}

fn push_family(out: &mut String, family: &Family) {
    match family {
        Family::LogSpiral { a, b } => {
            let _ = write!(out, " family=log-spiral a={} b={}", format_float(*a), format_float(*b));
        }
        Family::Lac { alpha, xi, eta } => {
            let _ = write!(
                out,
                " family=lac alpha={} xi={} eta={}",
                format_float(*alpha),
                format_float(*xi),
                format_float(*eta)
            );
        }
        Family::Quadratic { kappa_sa } => {
            let _ = write!(out, " family=quadratic kappa={}", format_float(*kappa_sa));
        }
        Family::EsaClass { sign, xi } => {
            let _ = write!(out, " family=esa sign={} xi={}", sign.as_str(), format_float(*xi));
        }
        Family::PowerGraph { alpha } => {
            let _ = write!(out, " family=power alpha={}", format_float(*alpha));
        }
        Family::LogGraph => out.push_str(" family=log"),
        Family::XLogXGraph => out.push_str(" family=xlogx"),
    }
}

fn meta_line(curve: &SampledCurve) -> String {
    let mut line = format!("# kind={}", curve.kind().as_str());
    let meta = curve.meta().cloned().unwrap_or_else(CurveMeta::ingested);
    match &meta.provenance {
        Provenance::Ingested => line.push_str(" provenance=ingested"),
        Provenance::Generated(spec) => {
            line.push_str(" provenance=generated");
            push_family(&mut line, &spec.family);
            let _ = write!(
                line,
                " range={}:{} n={}",
                format_float(spec.range.0),
                format_float(spec.range.1),
                spec.n
            );
        }
        Provenance::MsaParametrized { spec, anchor } => {
            line.push_str(" provenance=msa");
            push_family(&mut line, &spec.family);
            let _ = write!(
                line,
                " range={}:{} n={} anchor={}",
                format_float(spec.range.0),
                format_float(spec.range.1),
                spec.n,
                format_float(*anchor)
            );
        }
    }
    let _ = write!(line, " flipped={}", meta.flipped);
    line
}

/// Serialize a curve to CSV.
pub fn write_curve_csv(curve: &SampledCurve) -> String {
    let mut out = String::new();
    out.push_str(&meta_line(curve));
    out.push('\n');
    out.push_str("param,x,y\n");
    for (p, q) in curve.params().iter().zip(curve.points()) {
        let _ = writeln!(
            out,
            "{},{},{}",
            format_float(*p),
            format_float(q.x),
            format_float(q.y)
        );
    }
    out
}

fn parse_kv(line: &str) -> BTreeMap<String, String> {
    line.trim_start_matches('#')
        .split_whitespace()
        .filter_map(|tok| tok.split_once('='))
        .map(|(k, v)| (k.to_string(), v.to_string()))
        .collect()
}

fn parse_f64(map: &BTreeMap<String, String>, key: &str) -> Result<f64> {
    map.get(key)
        .ok_or_else(|| Error::invalid(format!("missing metadata key `{key}`")))?
        .parse()
        .map_err(|_| Error::invalid(format!("bad float for metadata key `{key}`")))
}

fn parse_family(map: &BTreeMap<String, String>) -> Result<Family> {
    match map.get("family").map(String::as_str) {
        Some("log-spiral") => Ok(Family::LogSpiral {
            a: parse_f64(map, "a")?,
            b: parse_f64(map, "b")?,
        }),
        Some("lac") => Ok(Family::Lac {
            alpha: parse_f64(map, "alpha")?,
            xi: parse_f64(map, "xi")?,
            eta: parse_f64(map, "eta")?,
        }),
        Some("quadratic") => Ok(Family::Quadratic {
            kappa_sa: parse_f64(map, "kappa")?,
        }),
        Some("esa") => {
            let sign = map
                .get("sign")
                .and_then(|s| CurvatureSign::parse(s))
                .ok_or_else(|| Error::invalid("bad or missing esa sign"))?;
            Ok(Family::EsaClass {
                sign,
                xi: parse_f64(map, "xi")?,
            })
        }
        Some("power") => Ok(Family::PowerGraph {
            alpha: parse_f64(map, "alpha")?,
        }),
        Some("log") => Ok(Family::LogGraph),
        Some("xlogx") => Ok(Family::XLogXGraph),
        other => Err(Error::invalid(format!("unknown family {other:?}"))),
    }
}

fn parse_meta(map: &BTreeMap<String, String>) -> Result<(ParamKind, CurveMeta)> {
    let kind = map
        .get("kind")
        .and_then(|k| ParamKind::parse(k))
        .ok_or_else(|| Error::invalid("bad or missing curve kind"))?;
    let flipped = map.get("flipped").map(|v| v == "true").unwrap_or(false);
    let provenance = match map.get("provenance").map(String::as_str) {
        None | Some("ingested") => Provenance::Ingested,
        Some(tag @ ("generated" | "msa")) => {
            let family = parse_family(map)?;
            let range_str = map
                .get("range")
                .ok_or_else(|| Error::invalid("missing range"))?;
            let (lo, hi) = range_str
                .split_once(':')
                .ok_or_else(|| Error::invalid("range must be lo:hi"))?;
            let range = (
                lo.parse().map_err(|_| Error::invalid("bad range lo"))?,
                hi.parse().map_err(|_| Error::invalid("bad range hi"))?,
            );
            let n = map
                .get("n")
                .and_then(|v| v.parse().ok())
                .ok_or_else(|| Error::invalid("missing or bad n"))?;
            let spec = FamilySpec { family, range, n };
            if tag == "generated" {
                Provenance::Generated(spec)
            } else {
                Provenance::MsaParametrized {
                    spec,
                    anchor: parse_f64(map, "anchor")?,
                }
            }
        }
        Some(other) => return Err(Error::invalid(format!("unknown provenance `{other}`"))),
    };
    Ok((kind, CurveMeta { provenance, flipped }))
}

/// Parse a curve from CSV text.
pub fn read_curve_csv(text: &str) -> Result<SampledCurve> {
    let mut kind = ParamKind::Arbitrary;
    let mut meta = CurveMeta::ingested();
    let mut saw_header = false;
    let mut params = Vec::new();
    let mut points = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        if line.starts_with('#') {
            let map = parse_kv(line);
            if map.contains_key("kind") {
                let (k, m) = parse_meta(&map)?;
                kind = k;
                meta = m;
            }
            continue;
        }
        if !saw_header {
            if line != "param,x,y" {
                return Err(Error::invalid(format!(
                    "line {}: expected header `param,x,y`, got `{line}`",
                    lineno + 1
                )));
            }
            saw_header = true;
            continue;
        }
        let mut fields = line.split(',');
        let mut next = |name: &str| -> Result<f64> {
            fields
                .next()
                .ok_or_else(|| Error::invalid(format!("line {}: missing {name}", lineno + 1)))?
                .trim()
                .parse()
                .map_err(|_| Error::invalid(format!("line {}: bad {name}", lineno + 1)))
        };
        let p = next("param")?;
        let x = next("x")?;
        let y = next("y")?;
        params.push(p);
        points.push(PlanarPoint::new(x, y));
    }
    if !saw_header {
        return Err(Error::invalid("missing `param,x,y` header"));
    }
    SampledCurve::new(params, points, kind, Some(meta))
}

/// Serialize a curvature profile to CSV (`param,kappa`).
pub fn write_profile_csv(profile: &CurvatureProfile) -> String {
    let mut out = format!(
        "# kind={} geometry={}\nparam,kappa\n",
        profile.kind().as_str(),
        profile.geometry().as_str()
    );
    for (p, k) in profile.params().iter().zip(profile.kappa()) {
        let _ = writeln!(out, "{},{}", format_float(*p), format_float(*k));
    }
    out
}

/// Serialize logarithmic-curvature-graph points to CSV.
pub fn write_lcg_csv(data: &crate::affinity::LcgData) -> String {
    let mut out = String::from("neg_log_kappa,log_abs_kappa_over_kappa_s\n");
    for (x, y) in &data.points {
        let _ = writeln!(out, "{},{}", format_float(*x), format_float(*y));
    }
    out
}

/// Report JSON: single schema across the check commands.
pub fn report_json(
    command: &str,
    input: Option<&str>,
    verdict: Option<&str>,
    metrics: serde_json::Map<String, serde_json::Value>,
    grid: Option<&[f64]>,
    maps: Option<&[AffineMap2]>,
) -> serde_json::Value {
    let mut obj = serde_json::Map::new();
    obj.insert("command".into(), command.into());
    if let Some(input) = input {
        obj.insert("input".into(), input.into());
    }
    if let Some(verdict) = verdict {
        obj.insert("verdict".into(), verdict.into());
    }
    obj.insert("metrics".into(), serde_json::Value::Object(metrics));
    if let Some(grid) = grid {
        obj.insert(
            "grid".into(),
            serde_json::Value::Array(grid.iter().map(|v| json_num(*v)).collect()),
        );
    }
    if let Some(maps) = maps {
        let arr: Vec<serde_json::Value> = maps
            .iter()
            .map(|m| {
                let rows = m.rows();
                serde_json::Value::Array(
                    rows.iter()
                        .map(|row| {
                            serde_json::Value::Array(row.iter().map(|v| json_num(*v)).collect())
                        })
                        .collect(),
                )
            })
            .collect();
        obj.insert("maps".into(), serde_json::Value::Array(arr));
    }
    serde_json::Value::Object(obj)
}

/// JSON number that tolerates non-finite values (serialized as strings so
/// reports stay valid JSON).
pub fn json_num(v: f64) -> serde_json::Value {
    match serde_json::Number::from_f64(v) {
        Some(n) => serde_json::Value::Number(n),
        None => serde_json::Value::String(format!("{v}")),
    }
}

/// Write a file atomically: contents land under a temporary name in the
/// same directory, then rename over the target. Error paths never leave a
/// partial output file.
pub fn atomic_write(path: &Path, contents: &str) -> io::Result<()> {
    let dir = path.parent().filter(|p| !p.as_os_str().is_empty());
    let file_name = path
        .file_name()
        .ok_or_else(|| io::Error::new(io::ErrorKind::InvalidInput, "path has no file name"))?;
    let mut tmp_name = file_name.to_os_string();
    tmp_name.push(".tmp");
    let tmp_path = match dir {
        Some(d) => d.join(&tmp_name),
        None => Path::new(&tmp_name).to_path_buf(),
    };
    std::fs::write(&tmp_path, contents)?;
    match std::fs::rename(&tmp_path, path) {
        Ok(()) => Ok(()),
        Err(e) => {
            let _ = std::fs::remove_file(&tmp_path);
            Err(e)
        }
    }
}
