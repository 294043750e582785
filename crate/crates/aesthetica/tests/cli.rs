// Copyright 2026 the Aesthetica Authors
// SPDX-License-Identifier: Apache-2.0 OR MIT

//! End-to-end tests of the command-line binary: flag syntax, file formats,
//! exit codes and the tolerance override hook.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_aesthetica"))
}

fn tmpdir(tag: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("aesthetica-cli-{tag}-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn path_str(p: &Path) -> String {
    p.display().to_string()
}

#[test]
fn generate_then_check_esa_round_trip() {
    let dir = tmpdir("esa");
    let csv = dir.join("spiral.csv");
    let report = dir.join("r.json");

    let out = run(&[
        "generate",
        "--family",
        "esa",
        "--sign",
        "plus",
        "--xi",
        "1",
        "--range",
        "0.5:4",
        "--n",
        "1000",
        "--out",
        &path_str(&csv),
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let text = std::fs::read_to_string(&csv).unwrap();
    assert!(text.starts_with("# kind=equiaffine"));
    assert_eq!(text.lines().nth(1), Some("param,x,y"));
    assert_eq!(text.lines().count(), 1002);

    let out = run(&[
        "check-esa",
        &path_str(&csv),
        "--eps",
        "0.05:0.5:10",
        "--group",
        "affine",
        "--report",
        &path_str(&report),
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let json: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(json["verdict"], "ESA");
    assert!(json["metrics"]["max_residual"].as_f64().unwrap() < 1e-6);
    assert!(json["metrics"]["composition_error"].as_f64().unwrap() < 1e-6);

    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn lcg_of_log_spiral_has_unit_slope() {
    let dir = tmpdir("lcg");
    let csv = dir.join("logspiral.csv");
    let lcg_csv = dir.join("lcg.csv");
    let report = dir.join("fit.json");

    assert!(run(&[
        "generate",
        "--family",
        "log-spiral",
        "--a",
        "1",
        "--b",
        "1",
        "--range",
        "-1:1",
        "--n",
        "1000",
        "--out",
        &path_str(&csv),
    ])
    .status
    .success());

    let out = run(&[
        "lcg",
        &path_str(&csv),
        "--out",
        &path_str(&lcg_csv),
        "--fit",
        "--report",
        &path_str(&report),
    ]);
    assert!(out.status.success());
    let json: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    let slope = json["metrics"]["slope"].as_f64().unwrap();
    assert!((slope - 1.0).abs() < 1e-3, "slope {slope}");
    assert!(std::fs::read_to_string(&lcg_csv)
        .unwrap()
        .starts_with("neg_log_kappa"));

    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn classify_reports_the_family() {
    let dir = tmpdir("classify");
    let csv = dir.join("xlogx.csv");
    assert!(run(&[
        "generate",
        "--family",
        "xlogx",
        "--range",
        "0.5:3",
        "--n",
        "801",
        "--out",
        &path_str(&csv),
    ])
    .status
    .success());
    let out = run(&["classify", &path_str(&csv)]);
    assert!(out.status.success());
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(json["verdict"], "xlogx-graph");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn check_msa_uses_generated_provenance() {
    let dir = tmpdir("msa");
    let csv = dir.join("lac.csv");
    assert!(run(&[
        "generate",
        "--family",
        "lac",
        "--alpha",
        "1",
        "--xi",
        "1",
        "--eta",
        "1.4142135623730951",
        "--range",
        "0:3",
        "--n",
        "800",
        "--msa",
        "--out",
        &path_str(&csv),
    ])
    .status
    .success());
    let out = run(&[
        "check-msa",
        &path_str(&csv),
        "--alpha",
        "1",
        "--eps",
        "0.05:0.4:6",
    ]);
    assert!(out.status.success());
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(json["verdict"], "MSA");
    assert_eq!(json["metrics"]["closed_form"], true);
    assert!(json["metrics"]["kappa_ratio_error"].as_f64().unwrap() < 1e-9);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn plot_renders_one_path_per_input() {
    let dir = tmpdir("plot");
    let specs = [
        ("power", vec!["--alpha", "2", "--range", "0:2"]),
        ("log-spiral", vec!["--a", "1", "--b", "1", "--range", "-1:1"]),
        ("log", vec!["--range", "0.5:3"]),
        ("xlogx", vec!["--range", "0.5:3"]),
    ];
    let mut files = Vec::new();
    for (family, extra) in &specs {
        let csv = dir.join(format!("{family}.csv"));
        let mut args = vec!["generate", "--family", family];
        args.extend(extra.iter().copied());
        args.extend(["--n", "200", "--out"]);
        let csv_str = path_str(&csv);
        args.push(&csv_str);
        assert!(run(&args).status.success());
        files.push(csv);
    }
    let svg = dir.join("fig.svg");
    let mut args: Vec<String> = vec!["plot".into()];
    args.extend(files.iter().map(|f| path_str(f)));
    args.push("--out".into());
    args.push(path_str(&svg));
    // A deformed view of the first curve, as in side-by-side comparisons.
    args.push("--transform".into());
    args.push("1.2,0.3,0,0.9,0.5,-0.25".into());
    let out = bin().args(&args).output().unwrap();
    assert!(out.status.success());
    let text = std::fs::read_to_string(&svg).unwrap();
    assert_eq!(text.matches("<path").count(), 4);
    assert!(text.contains("stroke-dasharray"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn domain_errors_exit_one_with_json() {
    let dir = tmpdir("err1");
    let csv = dir.join("segment.csv");
    // A straight segment has no equiaffine parameter.
    let mut text = String::from("# kind=arbitrary provenance=ingested flipped=false\nparam,x,y\n");
    for i in 0..32 {
        text.push_str(&format!("{0},{0},0.0\n", i as f64 * 0.1));
    }
    std::fs::write(&csv, text).unwrap();
    let profile = dir.join("prof.csv");
    let out = run(&[
        "analyze",
        &path_str(&csv),
        "--geometry",
        "equiaffine",
        "--out",
        &path_str(&profile),
    ]);
    assert_eq!(out.status.code(), Some(1));
    let err: serde_json::Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(err["error"]["kind"], "degenerate-integrand");
    assert!(!profile.exists(), "no partial output on failure");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn io_errors_exit_two_with_json() {
    let out = run(&["classify", "/nonexistent/nothing.csv"]);
    assert_eq!(out.status.code(), Some(2));
    let err: serde_json::Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(err["error"]["kind"], "io");
}

#[test]
fn tolerance_override_is_honored() {
    let dir = tmpdir("tol");
    let csv = dir.join("spiral.csv");
    assert!(run(&[
        "generate",
        "--family",
        "esa",
        "--sign",
        "plus",
        "--xi",
        "1",
        "--range",
        "0.5:4",
        "--n",
        "600",
        "--out",
        &path_str(&csv),
    ])
    .status
    .success());
    // An absurdly strict residual bound flips the verdict away from ESA.
    let out = bin()
        .env("AESTHETICA_TOL_OVERRIDE", r#"{"esa_residual_closed": 1e-30, "esa_residual_noisy": 1e-29}"#)
        .args(["check-esa", &path_str(&csv), "--eps", "0.05:0.3:4"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_ne!(json["verdict"], "ESA");
    // Malformed override is a configuration error.
    let out = bin()
        .env("AESTHETICA_TOL_OVERRIDE", "{bogus")
        .args(["check-esa", &path_str(&csv), "--eps", "0.05:0.3:4"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn analyze_writes_profile_csv() {
    let dir = tmpdir("analyze");
    let csv = dir.join("circle.csv");
    assert!(run(&[
        "generate",
        "--family",
        "quadratic",
        "--kappa",
        "1",
        "--range",
        "0:6.283185307179586",
        "--n",
        "512",
        "--out",
        &path_str(&csv),
    ])
    .status
    .success());
    let profile = dir.join("prof.csv");
    let out = run(&[
        "analyze",
        &path_str(&csv),
        "--geometry",
        "equiaffine",
        "--out",
        &path_str(&profile),
    ]);
    assert!(out.status.success());
    let text = std::fs::read_to_string(&profile).unwrap();
    assert!(text.starts_with("# kind=equiaffine geometry=equiaffine\nparam,kappa\n"));
    // Constant curvature 1 for the unit-area-normalized ellipse.
    let first_value: f64 = text
        .lines()
        .nth(2)
        .unwrap()
        .split(',')
        .nth(1)
        .unwrap()
        .parse()
        .unwrap();
    assert!((first_value - 1.0).abs() < 1e-4);
    std::fs::remove_dir_all(&dir).unwrap();
}
