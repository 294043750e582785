// Copyright 2026 the Aesthetica Authors
// SPDX-License-Identifier: Apache-2.0 OR MIT

//! Command-line front end: generate curves, analyze curvature, run
//! self-affinity checks, classify, and render SVG plots.
//!
//! Exit codes: 0 on success, 1 on domain errors, 2 on I/O, parse or usage
//! errors. Failures print one JSON object to stderr:
//! `{"error": {"kind": ..., "message": ...}}`.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use aesthetica::affinity::{self, AffineMap2, EsaVerdict, FitGroup};
use aesthetica::classify::{self, CurveClass};
use aesthetica::generators::{self, CurvatureSign, Family, FamilySpec};
use aesthetica::geometry::{self, KappaSaRoute};
use aesthetica::io::{self, json_num};
use aesthetica::plot::{plot_svg, PlotEntry};
use aesthetica::{Geometry, ParamKind, SampledCurve, Tolerances};

#[derive(Parser)]
#[command(
    name = "aesthetica",
    version,
    about = "Planar-curve toolbox for Euclidean, similarity and equiaffine geometry"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a curve family and write it as CSV.
    Generate(GenerateArgs),
    /// Estimate a curvature profile and write it as CSV.
    Analyze(AnalyzeArgs),
    /// Test the extendable self-affinity over a shift grid.
    CheckEsa(CheckEsaArgs),
    /// Test the exponential-curvature self-affinity ratios.
    CheckMsa(CheckMsaArgs),
    /// Build the logarithmic curvature graph and fit its slope.
    Lcg(LcgArgs),
    /// Classify a curve into one of the five classes.
    Classify(ClassifyArgs),
    /// Render curves to an SVG document.
    Plot(PlotArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Esa,
    LogSpiral,
    Lac,
    Quadratic,
    Power,
    Log,
    Xlogx,
}

#[derive(Clone, Copy, ValueEnum)]
enum SignArg {
    Plus,
    Minus,
}

#[derive(Args)]
struct GenerateArgs {
    /// Curve family.
    #[arg(long, value_enum)]
    family: FamilyArg,
    /// Sign of the curvature law (esa family).
    #[arg(long, value_enum)]
    sign: Option<SignArg>,
    /// Law coefficient ξ (esa, lac).
    #[arg(long, allow_hyphen_values = true)]
    xi: Option<f64>,
    /// Law offset η (lac).
    #[arg(long, allow_hyphen_values = true)]
    eta: Option<f64>,
    /// Exponent α (lac, power).
    #[arg(long, allow_hyphen_values = true)]
    alpha: Option<f64>,
    /// Spiral growth rate a (log-spiral).
    #[arg(long, allow_hyphen_values = true)]
    a: Option<f64>,
    /// Spiral angular rate b (log-spiral).
    #[arg(long, allow_hyphen_values = true)]
    b: Option<f64>,
    /// Constant equiaffine curvature (quadratic).
    #[arg(long, allow_hyphen_values = true)]
    kappa: Option<f64>,
    /// Sampling range lo:hi in the family's natural parameter.
    #[arg(long, allow_hyphen_values = true)]
    range: String,
    /// Sample count.
    #[arg(long)]
    n: usize,
    /// Resample a lac in its exponential-curvature parameter.
    #[arg(long, default_value_t = false)]
    msa: bool,
    /// Output CSV path.
    #[arg(long)]
    out: PathBuf,
}

#[derive(Clone, Copy, ValueEnum)]
enum GeometryArg {
    Euclidean,
    Similarity,
    Equiaffine,
}

#[derive(Clone, Copy, ValueEnum)]
enum RouteArg {
    Euclidean,
    Equiaffine,
}

#[derive(Args)]
struct AnalyzeArgs {
    /// Input curve CSV.
    input: PathBuf,
    /// Which curvature to estimate.
    #[arg(long, value_enum)]
    geometry: GeometryArg,
    /// Pipeline for the equiaffine curvature.
    #[arg(long, value_enum, default_value = "equiaffine")]
    route: RouteArg,
    /// Output profile CSV path.
    #[arg(long)]
    out: PathBuf,
}

#[derive(Clone, Copy, ValueEnum)]
enum GroupArg {
    Affine,
    Equiaffine,
}

#[derive(Args)]
struct CheckEsaArgs {
    /// Input curve CSV.
    input: PathBuf,
    /// Shift grid start:stop:count (symmetrized around 0).
    #[arg(long, allow_hyphen_values = true)]
    eps: String,
    /// Transformation group fitted.
    #[arg(long, value_enum, default_value = "affine")]
    group: GroupArg,
    /// Exponential reparametrization rate for equiaffine-parameter input.
    #[arg(long, default_value_t = 1.0)]
    esa_k: f64,
    /// Exponential reparametrization offset.
    #[arg(long, default_value_t = 0.0)]
    esa_l: f64,
    /// Report JSON path (stdout when omitted).
    #[arg(long)]
    report: Option<PathBuf>,
}

#[derive(Args)]
struct CheckMsaArgs {
    /// Input curve CSV.
    input: PathBuf,
    /// Slope α the speed ratio is tested against.
    #[arg(long, allow_hyphen_values = true)]
    alpha: f64,
    /// Shift grid start:stop:count.
    #[arg(long, allow_hyphen_values = true)]
    eps: String,
    /// Report JSON path (stdout when omitted).
    #[arg(long)]
    report: Option<PathBuf>,
}

#[derive(Args)]
struct LcgArgs {
    /// Input curve CSV.
    input: PathBuf,
    /// Output CSV of graph points.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Include the line fit in a report.
    #[arg(long, default_value_t = false)]
    fit: bool,
    /// Report JSON path (stdout when omitted).
    #[arg(long)]
    report: Option<PathBuf>,
}

#[derive(Args)]
struct ClassifyArgs {
    /// Input curve CSV.
    input: PathBuf,
    /// Report JSON path (stdout when omitted).
    #[arg(long)]
    report: Option<PathBuf>,
}

#[derive(Args)]
struct PlotArgs {
    /// Input curve CSVs, drawn in order.
    #[arg(required = true)]
    inputs: Vec<PathBuf>,
    /// Per-curve affine map "a,b,c,d,tx,ty" (repeatable, applied in input
    /// order).
    #[arg(long, allow_hyphen_values = true)]
    transform: Vec<String>,
    /// Output SVG path.
    #[arg(long)]
    out: PathBuf,
}

enum CliError {
    Domain(aesthetica::Error),
    Io { kind: &'static str, message: String },
}

impl CliError {
    fn io(message: impl Into<String>) -> CliError {
        CliError::Io {
            kind: "io",
            message: message.into(),
        }
    }

    fn parse(message: impl Into<String>) -> CliError {
        CliError::Io {
            kind: "parse",
            message: message.into(),
        }
    }
}

impl From<aesthetica::Error> for CliError {
    fn from(e: aesthetica::Error) -> Self {
        CliError::Domain(e)
    }
}

type CliResult<T> = Result<T, CliError>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            let (kind, message, code) = match err {
                CliError::Domain(e) => (e.kind(), e.to_string(), 1u8),
                CliError::Io { kind, message } => (kind, message, 2u8),
            };
            let payload = serde_json::json!({"error": {"kind": kind, "message": message}});
            eprintln!("{payload}");
            ExitCode::from(code)
        }
    }
}

fn run(cli: Cli) -> CliResult<()> {
    let tol = Tolerances::from_env().map_err(|e| CliError::parse(e.to_string()))?;
    match cli.command {
        Command::Generate(args) => generate_cmd(args),
        Command::Analyze(args) => analyze_cmd(args),
        Command::CheckEsa(args) => check_esa_cmd(args, &tol),
        Command::CheckMsa(args) => check_msa_cmd(args, &tol),
        Command::Lcg(args) => lcg_cmd(args),
        Command::Classify(args) => classify_cmd(args, &tol),
        Command::Plot(args) => plot_cmd(args),
    }
}

fn parse_range(text: &str) -> CliResult<(f64, f64)> {
    let (lo, hi) = text
        .split_once(':')
        .ok_or_else(|| CliError::parse(format!("range `{text}` must be lo:hi")))?;
    Ok((
        lo.parse()
            .map_err(|_| CliError::parse(format!("bad range start `{lo}`")))?,
        hi.parse()
            .map_err(|_| CliError::parse(format!("bad range end `{hi}`")))?,
    ))
}

/// Grid syntax start:stop:count, inclusive of both ends.
fn parse_grid(text: &str) -> CliResult<Vec<f64>> {
    let parts: Vec<&str> = text.split(':').collect();
    if parts.len() != 3 {
        return Err(CliError::parse(format!(
            "grid `{text}` must be start:stop:count"
        )));
    }
    let start: f64 = parts[0]
        .parse()
        .map_err(|_| CliError::parse("bad grid start"))?;
    let stop: f64 = parts[1]
        .parse()
        .map_err(|_| CliError::parse("bad grid stop"))?;
    let count: usize = parts[2]
        .parse()
        .map_err(|_| CliError::parse("bad grid count"))?;
    if count < 2 || !(stop > start) {
        return Err(CliError::parse("grid needs stop > start and count >= 2"));
    }
    Ok((0..count)
        .map(|i| start + (stop - start) * i as f64 / (count - 1) as f64)
        .collect())
}

fn read_curve(path: &Path) -> CliResult<SampledCurve> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::io(format!("{}: {e}", path.display())))?;
    io::read_curve_csv(&text).map_err(|e| CliError::parse(format!("{}: {e}", path.display())))
}

fn write_output(path: &Path, contents: &str) -> CliResult<()> {
    io::atomic_write(path, contents).map_err(|e| CliError::io(format!("{}: {e}", path.display())))
}

fn emit_report(report: &serde_json::Value, path: Option<&Path>) -> CliResult<()> {
    let text = serde_json::to_string_pretty(report).expect("serializable report");
    match path {
        Some(path) => write_output(path, &text),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

fn missing(flag: &str, family: &str) -> CliError {
    CliError::parse(format!("--{flag} is required for family {family}"))
}

fn generate_cmd(args: GenerateArgs) -> CliResult<()> {
    let family = match args.family {
        FamilyArg::Esa => Family::EsaClass {
            sign: match args.sign.ok_or_else(|| missing("sign", "esa"))? {
                SignArg::Plus => CurvatureSign::Plus,
                SignArg::Minus => CurvatureSign::Minus,
            },
            xi: args.xi.ok_or_else(|| missing("xi", "esa"))?,
        },
        FamilyArg::LogSpiral => Family::LogSpiral {
            a: args.a.ok_or_else(|| missing("a", "log-spiral"))?,
            b: args.b.ok_or_else(|| missing("b", "log-spiral"))?,
        },
        FamilyArg::Lac => Family::Lac {
            alpha: args.alpha.ok_or_else(|| missing("alpha", "lac"))?,
            xi: args.xi.ok_or_else(|| missing("xi", "lac"))?,
            eta: args.eta.ok_or_else(|| missing("eta", "lac"))?,
        },
        FamilyArg::Quadratic => Family::Quadratic {
            kappa_sa: args.kappa.ok_or_else(|| missing("kappa", "quadratic"))?,
        },
        FamilyArg::Power => Family::PowerGraph {
            alpha: args.alpha.ok_or_else(|| missing("alpha", "power"))?,
        },
        FamilyArg::Log => Family::LogGraph,
        FamilyArg::Xlogx => Family::XLogXGraph,
    };
    let range = parse_range(&args.range)?;
    let spec = FamilySpec::new(family, range, args.n)?;
    let curve = if args.msa {
        if !matches!(family, Family::Lac { .. }) {
            return Err(CliError::parse("--msa applies to the lac family only"));
        }
        generators::msa_parametrization(&spec, args.n)?
    } else {
        generators::generate(&spec)?
    };
    write_output(&args.out, &io::write_curve_csv(&curve))
}

fn analyze_cmd(args: AnalyzeArgs) -> CliResult<()> {
    let curve = read_curve(&args.input)?;
    let profile = match args.geometry {
        GeometryArg::Euclidean => geometry::euclidean_curvature(&curve)?,
        GeometryArg::Similarity => geometry::similarity_curvature(&curve)?,
        GeometryArg::Equiaffine => {
            let route = match args.route {
                RouteArg::Euclidean => KappaSaRoute::Euclidean,
                RouteArg::Equiaffine => KappaSaRoute::Equiaffine,
            };
            geometry::equiaffine_curvature(&curve, route)?
        }
    };
    debug_assert!(matches!(
        profile.geometry(),
        Geometry::Euclidean | Geometry::Similarity | Geometry::Equiaffine
    ));
    write_output(&args.out, &io::write_profile_csv(&profile))
}

fn check_esa_cmd(args: CheckEsaArgs, tol: &Tolerances) -> CliResult<()> {
    let curve = read_curve(&args.input)?;
    let grid = symmetrize(parse_grid(&args.eps)?);
    let group = match args.group {
        GroupArg::Affine => FitGroup::FullAffine,
        GroupArg::Equiaffine => FitGroup::Equiaffine,
    };

    // An equiaffine-parameter curve may carry the self-affinity either in u
    // itself (constant curvature) or in the exponential parameter
    // u = e^(kt+l); try u first, then the transform, and report the best.
    let direct = affinity::esa_check(&curve, &grid, group, tol)?;
    let mut parameter = curve.kind().as_str().to_string();
    let mut report = direct;
    if report.verdict != EsaVerdict::Esa
        && curve.kind() == ParamKind::Equiaffine
        && curve.params().iter().all(|u| *u > 0.0)
    {
        let transformed = affinity::esa_parameter_transform(&curve, args.esa_k, args.esa_l)?;
        let t_grid = symmetrize(scale_grid_to(&transformed, &grid));
        let retry = affinity::esa_check(&transformed, &t_grid, group, tol)?;
        if retry.max_residual() < report.max_residual() {
            parameter = format!("exponential(k={}, l={})", args.esa_k, args.esa_l);
            report = retry;
        }
    }

    let mut metrics = serde_json::Map::new();
    metrics.insert("parameter".into(), parameter.into());
    metrics.insert("max_residual".into(), json_num(report.max_residual()));
    metrics.insert(
        "composition_error".into(),
        json_num(report.composition_error),
    );
    metrics.insert("det_rate".into(), json_num(report.det_rate));
    metrics.insert(
        "det_rate_r_squared".into(),
        json_num(report.det_rate_r_squared),
    );
    metrics.insert(
        "generator".into(),
        serde_json::json!([
            [report.generator[0][0], report.generator[0][1]],
            [report.generator[1][0], report.generator[1][1]]
        ]),
    );
    metrics.insert(
        "dets".into(),
        serde_json::Value::Array(report.dets.iter().map(|d| json_num(*d)).collect()),
    );
    metrics.insert(
        "residuals".into(),
        serde_json::Value::Array(report.residuals.iter().map(|r| json_num(*r)).collect()),
    );
    let json = io::report_json(
        "check-esa",
        Some(&args.input.display().to_string()),
        Some(report.verdict.as_str()),
        metrics,
        Some(&report.eps_grid),
        Some(&report.maps),
    );
    emit_report(&json, args.report.as_deref())
}

/// Mirror a positive grid around zero (the checker inserts 0 itself).
fn symmetrize(grid: Vec<f64>) -> Vec<f64> {
    let mut out = Vec::with_capacity(grid.len() * 2 + 1);
    out.push(0.0);
    for v in grid {
        if v != 0.0 {
            out.push(v);
            out.push(-v);
        }
    }
    out
}

/// Shift grids are sized for the input parameter; after a reparametrization
/// keep their index offsets instead, scaled by the new step.
fn scale_grid_to(curve: &SampledCurve, grid: &[f64]) -> Vec<f64> {
    let span = curve.params().last().unwrap() - curve.params()[0];
    let max = grid.iter().copied().fold(0.0f64, |a, v| a.max(v.abs()));
    if max == 0.0 {
        return grid.to_vec();
    }
    // Preserve each shift's fraction of the span, capped at 40%.
    let scale = (0.4 * span / max).min(1.0);
    grid.iter().map(|v| v * scale).collect()
}

fn check_msa_cmd(args: CheckMsaArgs, tol: &Tolerances) -> CliResult<()> {
    let curve = read_curve(&args.input)?;
    let grid = symmetrize(parse_grid(&args.eps)?);
    let report = affinity::msa_check(&curve, args.alpha, &grid, tol)?;
    let mut metrics = serde_json::Map::new();
    metrics.insert("alpha".into(), json_num(report.alpha));
    metrics.insert(
        "kappa_ratio_error".into(),
        json_num(report.kappa_ratio_error),
    );
    metrics.insert(
        "speed_ratio_error".into(),
        json_num(report.speed_ratio_error),
    );
    metrics.insert("closed_form".into(), report.closed_form.into());
    let json = io::report_json(
        "check-msa",
        Some(&args.input.display().to_string()),
        Some(if report.verdict { "MSA" } else { "NotMSA" }),
        metrics,
        Some(&grid),
        None,
    );
    emit_report(&json, args.report.as_deref())
}

fn lcg_cmd(args: LcgArgs) -> CliResult<()> {
    let curve = read_curve(&args.input)?;
    let data = affinity::lcg(&curve)?;
    if let Some(out) = &args.out {
        write_output(out, &io::write_lcg_csv(&data))?;
    }
    if args.fit || args.report.is_some() || args.out.is_none() {
        let mut metrics = serde_json::Map::new();
        metrics.insert("slope".into(), json_num(data.slope));
        metrics.insert("intercept".into(), json_num(data.intercept));
        metrics.insert("r_squared".into(), json_num(data.r_squared));
        metrics.insert("points".into(), (data.points.len() as u64).into());
        let json = io::report_json(
            "lcg",
            Some(&args.input.display().to_string()),
            None,
            metrics,
            None,
            None,
        );
        emit_report(&json, args.report.as_deref())?;
    }
    Ok(())
}

fn classify_cmd(args: ClassifyArgs, tol: &Tolerances) -> CliResult<()> {
    let curve = read_curve(&args.input)?;
    let label = classify::classify(&curve, tol)?;
    let mut metrics = serde_json::Map::new();
    if let CurveClass::PowerGraph { alpha } = label.class {
        metrics.insert("alpha".into(), json_num(alpha));
    }
    if let CurveClass::Quadratic { conic } = label.class {
        metrics.insert("conic".into(), conic.as_str().into());
    }
    if let Some(omega) = label.omega {
        metrics.insert("omega".into(), json_num(omega));
    }
    metrics.insert("sign".into(), label.coefficients.sign.as_str().into());
    metrics.insert("xi".into(), json_num(label.coefficients.xi));
    metrics.insert("eta".into(), json_num(label.coefficients.eta));
    metrics.insert("fit_rmse".into(), json_num(label.coefficients.fit_rmse));
    let json = io::report_json(
        "classify",
        Some(&args.input.display().to_string()),
        Some(label.class.name()),
        metrics,
        None,
        None,
    );
    emit_report(&json, args.report.as_deref())
}

fn parse_transform(text: &str) -> CliResult<AffineMap2> {
    let values: Vec<f64> = text
        .split(',')
        .map(|v| v.trim().parse::<f64>())
        .collect::<Result<_, _>>()
        .map_err(|_| CliError::parse(format!("bad transform `{text}`")))?;
    if values.len() != 6 {
        return Err(CliError::parse("transform needs 6 numbers a,b,c,d,tx,ty"));
    }
    AffineMap2::new(
        [[values[0], values[1]], [values[2], values[3]]],
        [values[4], values[5]],
    )
    .map_err(CliError::Domain)
}

fn plot_cmd(args: PlotArgs) -> CliResult<()> {
    let mut entries = Vec::with_capacity(args.inputs.len());
    for (i, input) in args.inputs.iter().enumerate() {
        let mut entry = PlotEntry::new(read_curve(input)?);
        if let Some(text) = args.transform.get(i) {
            entry.transform = Some(parse_transform(text)?);
        }
        entries.push(entry);
    }
    let svg = plot_svg(&entries)?;
    write_output(&args.out, &svg)
}
