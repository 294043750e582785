// Copyright 2026 the Aesthetica Authors
// SPDX-License-Identifier: Apache-2.0 OR MIT

//! Numerical verification of curve self-affinities.
//!
//! The central test: a curve γ(t) has an extendable self-affinity when one
//! family of affine maps F(ε) carries γ(t) to γ(t+ε) for every t. On a
//! uniform grid a shift by ε is an index shift, so each ε yields a dense
//! point correspondence and a least-squares affine fit; the residuals,
//! determinant behavior, composition law and infinitesimal generator of
//! those fits are the report. Also here: the exponential-curvature form of
//! self-affinity (ratio tests on κ and the parameter speed), the
//! logarithmic curvature graph and its slope, and the induced affinity of
//! the turning angle.

use serde::{Deserialize, Serialize};

use crate::curve::{ParamKind, PlanarPoint, SampledCurve};
use crate::error::{Error, Result};
use crate::generators::MsaMaps;
use crate::geometry;
use crate::numeric::{cumulative_uniform, fit_line, CubicSpline};
use crate::tolerances::Tolerances;

/// A planar affine transformation x ↦ L·x + b.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AffineMap2 {
    pub linear: [[f64; 2]; 2],
    pub translation: [f64; 2],
}

impl AffineMap2 {
    pub const IDENTITY: AffineMap2 = AffineMap2 {
        linear: [[1.0, 0.0], [0.0, 1.0]],
        translation: [0.0, 0.0],
    };

    pub fn new(linear: [[f64; 2]; 2], translation: [f64; 2]) -> Result<AffineMap2> {
        let map = AffineMap2 {
            linear,
            translation,
        };
        if !map.is_finite() {
            return Err(Error::invalid("non-finite affine map entries"));
        }
        if map.det() == 0.0 {
            return Err(Error::invalid("affine map with singular linear part"));
        }
        Ok(map)
    }

    pub fn is_finite(&self) -> bool {
        self.linear.iter().flatten().all(|v| v.is_finite())
            && self.translation.iter().all(|v| v.is_finite())
    }

    pub fn det(&self) -> f64 {
        self.linear[0][0] * self.linear[1][1] - self.linear[0][1] * self.linear[1][0]
    }

    pub fn apply(&self, p: PlanarPoint) -> PlanarPoint {
        PlanarPoint::new(
            self.linear[0][0] * p.x + self.linear[0][1] * p.y + self.translation[0],
            self.linear[1][0] * p.x + self.linear[1][1] * p.y + self.translation[1],
        )
    }

    /// self ∘ other: apply `other` first.
    pub fn compose(&self, other: &AffineMap2) -> AffineMap2 {
        let a = &self.linear;
        let b = &other.linear;
        AffineMap2 {
            linear: [
                [
                    a[0][0] * b[0][0] + a[0][1] * b[1][0],
                    a[0][0] * b[0][1] + a[0][1] * b[1][1],
                ],
                [
                    a[1][0] * b[0][0] + a[1][1] * b[1][0],
                    a[1][0] * b[0][1] + a[1][1] * b[1][1],
                ],
            ],
            translation: [
                a[0][0] * other.translation[0]
                    + a[0][1] * other.translation[1]
                    + self.translation[0],
                a[1][0] * other.translation[0]
                    + a[1][1] * other.translation[1]
                    + self.translation[1],
            ],
        }
    }

    /// Frobenius norm of the 2×3 matrix [L | b].
    pub fn frobenius(&self) -> f64 {
        let mut acc = 0.0;
        for row in &self.linear {
            for v in row {
                acc += v * v;
            }
        }
        for v in &self.translation {
            acc += v * v;
        }
        acc.sqrt()
    }

    /// Entrywise difference as a 2×3 Frobenius norm.
    pub fn frobenius_distance(&self, other: &AffineMap2) -> f64 {
        let mut acc = 0.0;
        for i in 0..2 {
            for j in 0..2 {
                acc += (self.linear[i][j] - other.linear[i][j]).powi(2);
            }
            acc += (self.translation[i] - other.translation[i]).powi(2);
        }
        acc.sqrt()
    }

    /// Row-major 2×3 array, for reports.
    pub fn rows(&self) -> [[f64; 3]; 2] {
        [
            [self.linear[0][0], self.linear[0][1], self.translation[0]],
            [self.linear[1][0], self.linear[1][1], self.translation[1]],
        ]
    }
}

/// Group the affine fit is taken in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum FitGroup {
    /// Unconstrained affine maps.
    FullAffine,
    /// Area-preserving maps: the fitted linear part is determinant-
    /// normalized, with the pre-projection determinant reported.
    Equiaffine,
}

impl FitGroup {
    pub fn as_str(&self) -> &'static str {
        match self {
            FitGroup::FullAffine => "affine",
            FitGroup::Equiaffine => "equiaffine",
        }
    }

    pub fn parse(s: &str) -> Option<FitGroup> {
        match s {
            "affine" | "full-affine" => Some(FitGroup::FullAffine),
            "equiaffine" | "special-affine" => Some(FitGroup::Equiaffine),
            _ => None,
        }
    }
}

/// Result of a single shift fit.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ShiftFit {
    pub map: AffineMap2,
    /// RMS point mismatch divided by the curve's bounding-box diagonal.
    pub residual: f64,
    /// Determinant of the fit before any group projection.
    pub det: f64,
}

/// Least-squares affine map carrying γ(t) onto γ(t+eps), fitted over all
/// overlapping samples. `eps` must be an integer multiple of the uniform
/// grid step (negative multiples shift backwards).
pub fn fit_affine_shift(
    curve: &SampledCurve,
    eps: f64,
    group: FitGroup,
    tol: &Tolerances,
) -> Result<ShiftFit> {
    if !curve.is_uniform(1e-9) {
        return Err(Error::invalid(
            "shift fitting needs a uniform parameter grid; resample first",
        ));
    }
    let n = curve.len();
    let h = curve.step();
    let ratio = eps / h;
    let m = ratio.round();
    if (ratio - m).abs() > 1e-6 {
        return Err(Error::invalid(format!(
            "eps = {eps} is not an integer multiple of the grid step {h}"
        )));
    }
    let m = m as i64;
    let overlap = n as i64 - m.abs();
    if overlap < 9 {
        return Err(Error::InsufficientOverlap {
            got: overlap.max(0) as usize,
            need: 9,
        });
    }

    let (src_start, dst_start) = if m >= 0 { (0, m as usize) } else { ((-m) as usize, 0) };
    let count = overlap as usize;
    let points = curve.points();
    let src = &points[src_start..src_start + count];
    let dst = &points[dst_start..dst_start + count];

    let fit = fit_affine_pairs(src, dst, group, tol)?;
    let diag = curve.bbox_diagonal();
    Ok(ShiftFit {
        map: fit.map,
        residual: fit.rms / diag,
        det: fit.det,
    })
}

struct PairFit {
    map: AffineMap2,
    rms: f64,
    det: f64,
}

/// Centered least squares over point pairs: L = (Σq̃p̃ᵀ)(Σp̃p̃ᵀ)⁻¹,
/// b = q̄ − L·p̄. The 2×2 scatter matrix is the Schur complement of the
/// normal equations; its condition number is the meaningful one.
fn fit_affine_pairs(
    src: &[PlanarPoint],
    dst: &[PlanarPoint],
    group: FitGroup,
    tol: &Tolerances,
) -> Result<PairFit> {
    let n = src.len() as f64;
    let mut pbar = (0.0, 0.0);
    let mut qbar = (0.0, 0.0);
    for (p, q) in src.iter().zip(dst) {
        pbar.0 += p.x;
        pbar.1 += p.y;
        qbar.0 += q.x;
        qbar.1 += q.y;
    }
    pbar = (pbar.0 / n, pbar.1 / n);
    qbar = (qbar.0 / n, qbar.1 / n);

    // Scatter S = Σ p̃p̃ᵀ and cross B = Σ q̃p̃ᵀ.
    let (mut sxx, mut sxy, mut syy) = (0.0, 0.0, 0.0);
    let mut b = [[0.0f64; 2]; 2];
    for (p, q) in src.iter().zip(dst) {
        let px = p.x - pbar.0;
        let py = p.y - pbar.1;
        let qx = q.x - qbar.0;
        let qy = q.y - qbar.1;
        sxx += px * px;
        sxy += px * py;
        syy += py * py;
        b[0][0] += qx * px;
        b[0][1] += qx * py;
        b[1][0] += qy * px;
        b[1][1] += qy * py;
    }

    // Condition of the symmetric scatter.
    let trace = sxx + syy;
    let det_s = sxx * syy - sxy * sxy;
    let disc = (trace * trace - 4.0 * det_s).max(0.0).sqrt();
    let lmax = (trace + disc) / 2.0;
    let lmin = (trace - disc) / 2.0;
    let cond = if lmin > 0.0 { lmax / lmin } else { f64::INFINITY };
    if !cond.is_finite() || cond > tol.normal_eq_condition {
        return Err(Error::SingularNormalEquations { cond });
    }

    // L = B S⁻¹.
    let inv = [
        [syy / det_s, -sxy / det_s],
        [-sxy / det_s, sxx / det_s],
    ];
    let mut linear = [[0.0f64; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            linear[i][j] = b[i][0] * inv[0][j] + b[i][1] * inv[1][j];
        }
    }
    let det_pre = linear[0][0] * linear[1][1] - linear[0][1] * linear[1][0];

    if group == FitGroup::Equiaffine {
        let scale = det_pre.abs().sqrt();
        if scale == 0.0 {
            return Err(Error::SingularNormalEquations { cond });
        }
        for row in &mut linear {
            for v in row.iter_mut() {
                *v /= scale;
            }
        }
    }

    let translation = [
        qbar.0 - linear[0][0] * pbar.0 - linear[0][1] * pbar.1,
        qbar.1 - linear[1][0] * pbar.0 - linear[1][1] * pbar.1,
    ];
    let map = AffineMap2 {
        linear,
        translation,
    };

    let mut sse = 0.0;
    for (p, q) in src.iter().zip(dst) {
        let m = map.apply(*p);
        sse += (m.x - q.x).powi(2) + (m.y - q.y).powi(2);
    }
    let rms = (sse / n).sqrt();
    Ok(PairFit {
        map,
        rms,
        det: det_pre,
    })
}

/// Verdict of an extendable-self-affinity check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum EsaVerdict {
    Esa,
    NotEsa,
    Inconclusive,
}

impl EsaVerdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            EsaVerdict::Esa => "ESA",
            EsaVerdict::NotEsa => "NotESA",
            EsaVerdict::Inconclusive => "Inconclusive",
        }
    }
}

/// Full result of an extendable-self-affinity test over a shift grid.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EsaReport {
    pub eps_grid: Vec<f64>,
    pub maps: Vec<AffineMap2>,
    pub residuals: Vec<f64>,
    /// Pre-projection determinants of the fitted linear parts.
    pub dets: Vec<f64>,
    /// Central-difference estimate of dF/dε at 0 (linear part).
    pub generator: [[f64; 2]; 2],
    /// Fitted c in det F(ε) ≈ e^(cε); NaN when no positive determinants.
    pub det_rate: f64,
    /// R² of the log-determinant line fit.
    pub det_rate_r_squared: f64,
    /// max over grid pairs ‖F(ε₁+ε₂) − F(ε₂)∘F(ε₁)‖_F / ‖F(ε₁+ε₂)‖_F.
    pub composition_error: f64,
    pub verdict: EsaVerdict,
}

impl EsaReport {
    pub fn max_residual(&self) -> f64 {
        self.residuals.iter().copied().fold(0.0, f64::max)
    }
}

/// Fit affine maps for every shift in `eps_grid` (0 is inserted when
/// missing) and assemble the self-affinity report.
pub fn esa_check(
    curve: &SampledCurve,
    eps_grid: &[f64],
    group: FitGroup,
    tol: &Tolerances,
) -> Result<EsaReport> {
    if eps_grid.is_empty() {
        return Err(Error::EmptyInput);
    }
    let work = if curve.is_uniform(1e-9) {
        curve.clone()
    } else {
        geometry::resample_uniform(curve, curve.len())?
    };
    let h = work.step();

    // Snap the grid to exact step multiples, insert 0, sort and dedupe.
    let mut grid: Vec<f64> = eps_grid.iter().map(|e| (e / h).round() * h).collect();
    if !grid.iter().any(|e| *e == 0.0) {
        grid.push(0.0);
    }
    grid.sort_by(f64::total_cmp);
    grid.dedup();

    let mut maps = Vec::with_capacity(grid.len());
    let mut residuals = Vec::with_capacity(grid.len());
    let mut dets = Vec::with_capacity(grid.len());
    for &eps in &grid {
        let fit = fit_affine_shift(&work, eps, group, tol)?;
        maps.push(fit.map);
        residuals.push(fit.residual);
        dets.push(fit.det);
    }

    // Composition law over pairs whose sum is also in the grid.
    let mut composition_error = 0.0f64;
    for (i, &e1) in grid.iter().enumerate() {
        for (j, &e2) in grid.iter().enumerate() {
            let sum = e1 + e2;
            if let Some(k) = grid.iter().position(|&e| (e - sum).abs() <= 1e-9 * h.abs().max(1.0))
            {
                let composed = maps[j].compose(&maps[i]);
                let err = maps[k].frobenius_distance(&composed) / maps[k].frobenius();
                composition_error = composition_error.max(err);
            }
        }
    }

    // Generator from the smallest ±ε pair (falls back to a forward
    // difference when the grid is one-sided).
    let generator = estimate_generator(&grid, &maps);

    // det F(ε) ≈ e^(cε): line fit of log det against ε.
    let mut xs = Vec::new();
    let mut ys = Vec::new();
    for (e, d) in grid.iter().zip(&dets) {
        if *d > 0.0 {
            xs.push(*e);
            ys.push(d.ln());
        }
    }
    let (det_rate, det_rate_r_squared) = if xs.len() >= 2 {
        let fit = fit_line(&xs, &ys);
        (fit.slope, fit.r_squared)
    } else {
        (f64::NAN, f64::NAN)
    };

    let max_residual = residuals.iter().copied().fold(0.0, f64::max);
    let verdict = if max_residual < tol.esa_residual_closed {
        EsaVerdict::Esa
    } else if max_residual > tol.esa_residual_noisy {
        EsaVerdict::NotEsa
    } else {
        EsaVerdict::Inconclusive
    };

    Ok(EsaReport {
        eps_grid: grid,
        maps,
        residuals,
        dets,
        generator,
        det_rate,
        det_rate_r_squared,
        composition_error,
        verdict,
    })
}

fn estimate_generator(grid: &[f64], maps: &[AffineMap2]) -> [[f64; 2]; 2] {
    // Smallest ε > 0 with -ε present.
    let mut best: Option<(f64, usize, usize)> = None;
    for (i, &e) in grid.iter().enumerate() {
        if e > 0.0 {
            if let Some(j) = grid.iter().position(|&f| (f + e).abs() < 1e-12 * e.max(1.0)) {
                if best.map(|(b, _, _)| e < b).unwrap_or(true) {
                    best = Some((e, i, j));
                }
            }
        }
    }
    let mut a = [[0.0f64; 2]; 2];
    match best {
        Some((e, i, j)) => {
            for r in 0..2 {
                for c in 0..2 {
                    a[r][c] = (maps[i].linear[r][c] - maps[j].linear[r][c]) / (2.0 * e);
                }
            }
        }
        None => {
            // Forward difference from the smallest nonzero shift.
            if let Some((e, i)) = grid
                .iter()
                .enumerate()
                .filter(|(_, e)| **e != 0.0)
                .map(|(i, e)| (*e, i))
                .min_by(|a, b| a.0.abs().total_cmp(&b.0.abs()))
            {
                let id = AffineMap2::IDENTITY;
                for r in 0..2 {
                    for c in 0..2 {
                        a[r][c] = (maps[i].linear[r][c] - id.linear[r][c]) / e;
                    }
                }
            }
        }
    }
    a
}

/// Reparametrize an equiaffine-parameter curve by u = e^(kt+l), i.e.
/// t = (log u − l)/k, and resample onto a uniform t grid.
pub fn esa_parameter_transform(curve: &SampledCurve, k: f64, l: f64) -> Result<SampledCurve> {
    if curve.kind() != ParamKind::Equiaffine {
        return Err(Error::invalid(
            "the exponential parameter transform expects an equiaffine-parameter curve",
        ));
    }
    if k == 0.0 {
        return Err(Error::invalid("k must be nonzero"));
    }
    for (i, &u) in curve.params().iter().enumerate() {
        if u <= 0.0 {
            return Err(Error::NonpositiveU { index: i, value: u });
        }
    }
    let mut t: Vec<f64> = curve.params().iter().map(|u| (u.ln() - l) / k).collect();
    let mut points = curve.points().to_vec();
    if k < 0.0 {
        t.reverse();
        points.reverse();
    }
    let nonuniform = SampledCurve::new(t, points, ParamKind::EsaParam, curve.meta().cloned())?;
    geometry::resample_uniform(&nonuniform, curve.len())
}

/// Result of the exponential-curvature self-affinity ratio test.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MsaReport {
    pub alpha: f64,
    /// max relative |κ(t+ε)/κ(t) − e^ε|.
    pub kappa_ratio_error: f64,
    /// max relative |s_t(t+ε)/s_t(t) − e^(−αε)|.
    pub speed_ratio_error: f64,
    pub verdict: bool,
    /// Whether closed-form provenance data backed the test.
    pub closed_form: bool,
}

/// Test the exponential-curvature self-affinity: κ(t+ε) = e^ε κ(t) and
/// s_t(t+ε) = e^(−αε) s_t(t) over the shift grid.
///
/// Curves carrying generator provenance are tested against their closed
/// forms (threshold `msa_closed`); otherwise κ and the speed are estimated
/// from the samples (threshold `msa_sampled`).
pub fn msa_check(
    curve: &SampledCurve,
    alpha: f64,
    eps_grid: &[f64],
    tol: &Tolerances,
) -> Result<MsaReport> {
    if eps_grid.is_empty() {
        return Err(Error::EmptyInput);
    }
    if let Some(maps) = MsaMaps::from_curve(curve) {
        let (lo, hi) = curve.span();
        let n = curve.len();
        let mut kappa_err = 0.0f64;
        let mut speed_err = 0.0f64;
        for &eps in eps_grid {
            let growth = eps.exp();
            let shrink = (-alpha * eps).exp();
            for i in 0..n {
                let t = lo + (hi - lo) * i as f64 / (n - 1) as f64;
                if t + eps < lo || t + eps > hi {
                    continue;
                }
                let kr = maps.kappa_of_t(t + eps) / maps.kappa_of_t(t);
                kappa_err = kappa_err.max((kr - growth).abs() / growth);
                let sr = maps.s_t(t + eps) / maps.s_t(t);
                speed_err = speed_err.max((sr - shrink).abs() / shrink);
            }
        }
        return Ok(MsaReport {
            alpha,
            kappa_ratio_error: kappa_err,
            speed_ratio_error: speed_err,
            verdict: kappa_err < tol.msa_closed && speed_err < tol.msa_closed,
            closed_form: true,
        });
    }

    // Sampled path: κ from the points, s_t = |dγ/dt| from the points.
    let work = if curve.is_uniform(1e-9) {
        curve.clone()
    } else {
        geometry::resample_uniform(curve, curve.len())?
    };
    let h = work.step();
    let profile = geometry::euclidean_curvature(&work)
        .map_err(|e| match e {
            Error::DegenerateSpeed { index, .. } => Error::MissingSpeedData {
                reason: format!("curve speed vanishes at sample {index}"),
            },
            other => other,
        })?;
    let xs = work.xs();
    let ys = work.ys();
    let x1 = crate::numeric::deriv1(&xs, h);
    let y1 = crate::numeric::deriv1(&ys, h);
    let trim = geometry::INTERIOR_TRIM;
    let speed: Vec<f64> = (trim..work.len() - trim)
        .map(|i| x1[i].hypot(y1[i]))
        .collect();
    let kappa = profile.kappa();
    let count = kappa.len();

    let mut kappa_err = 0.0f64;
    let mut speed_err = 0.0f64;
    for &eps in eps_grid {
        let m = (eps / h).round();
        if ((eps / h) - m).abs() > 1e-6 {
            return Err(Error::invalid(format!(
                "eps = {eps} is not an integer multiple of the grid step {h}"
            )));
        }
        let m = m as i64;
        let growth = eps.exp();
        let shrink = (-alpha * eps).exp();
        for i in 0..count {
            let j = i as i64 + m;
            if j < 0 || j >= count as i64 {
                continue;
            }
            let j = j as usize;
            let kr = kappa[j] / kappa[i];
            kappa_err = kappa_err.max((kr - growth).abs() / growth);
            let sr = speed[j] / speed[i];
            speed_err = speed_err.max((sr - shrink).abs() / shrink);
        }
    }
    Ok(MsaReport {
        alpha,
        kappa_ratio_error: kappa_err,
        speed_ratio_error: speed_err,
        verdict: kappa_err < tol.msa_sampled && speed_err < tol.msa_sampled,
        closed_form: false,
    })
}

/// Logarithmic curvature graph data with its line fit.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LcgData {
    /// (−log κ, log|κ/κ_s|) per interior sample.
    pub points: Vec<(f64, f64)>,
    pub slope: f64,
    pub intercept: f64,
    pub r_squared: f64,
}

/// Build the logarithmic curvature graph (−log κ, log|κ/κ_s|) and fit its
/// line; the slope estimates the curvature-law exponent.
pub fn lcg(curve: &SampledCurve) -> Result<LcgData> {
    let work = if curve.is_uniform(1e-9) {
        curve.clone()
    } else {
        geometry::resample_uniform(curve, curve.len())?
    };
    let h = work.step();
    let profile = geometry::euclidean_curvature(&work)?;
    let mut kappa = profile.kappa().to_vec();

    let has_pos = kappa.iter().any(|k| *k > 0.0);
    let has_neg = kappa.iter().any(|k| *k < 0.0);
    if has_pos && has_neg {
        return Err(Error::VanishingCurvature { index: 0 });
    }
    if has_neg {
        // Orientation flip only changes the sign of κ.
        for k in &mut kappa {
            *k = -*k;
        }
    }
    let kappa_t = crate::numeric::deriv1(&kappa, h);
    let xs = work.xs();
    let ys = work.ys();
    let x1 = crate::numeric::deriv1(&xs, h);
    let y1 = crate::numeric::deriv1(&ys, h);
    let trim = geometry::INTERIOR_TRIM;

    let kmax = kappa.iter().copied().fold(0.0f64, f64::max);
    let mut points = Vec::with_capacity(kappa.len());
    for (i, k) in kappa.iter().enumerate() {
        if *k <= 0.0 {
            return Err(Error::VanishingCurvature { index: i });
        }
        let speed = x1[i + trim].hypot(y1[i + trim]);
        let kappa_s = kappa_t[i] / speed;
        if kappa_s.abs() < 1e-9 * kmax {
            return Err(Error::DegenerateLCG);
        }
        points.push((-k.ln(), (k / kappa_s).abs().ln()));
    }
    let gx: Vec<f64> = points.iter().map(|p| p.0).collect();
    let gy: Vec<f64> = points.iter().map(|p| p.1).collect();
    let fit = fit_line(&gx, &gy);
    Ok(LcgData {
        points,
        slope: fit.slope,
        intercept: fit.intercept,
        r_squared: fit.r_squared,
    })
}

/// Result of the turning-angle affinity test.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ThetaAffinityReport {
    /// Fitted regression slope of θ(t+ε) against θ(t), per shift.
    pub slopes: Vec<(f64, f64)>,
    /// max relative mismatch against the expected rate e^((1−α)ε).
    pub rate_error: f64,
    pub verdict: bool,
}

/// Check that the turning angle transforms affinely under parameter shifts,
/// with rate e^((1−α)ε): regressing θ(t+ε) on θ(t) must give that slope.
pub fn theta_affinity_check(
    curve: &SampledCurve,
    alpha: f64,
    eps_grid: &[f64],
    tol: &Tolerances,
) -> Result<ThetaAffinityReport> {
    if eps_grid.is_empty() {
        return Err(Error::EmptyInput);
    }
    let work = if curve.is_uniform(1e-9) {
        curve.clone()
    } else {
        geometry::resample_uniform(curve, curve.len())?
    };
    let h = work.step();
    let n = work.len();

    // θ(t) up to a constant. Use closed-form provenance when available,
    // otherwise integrate κ|γ_t| dt.
    let theta: Vec<f64> = if let Some(maps) = MsaMaps::from_curve(&work) {
        work.params().iter().map(|t| maps.theta_of_t(*t)).collect()
    } else {
        let xs = work.xs();
        let ys = work.ys();
        let x1 = crate::numeric::deriv1(&xs, h);
        let y1 = crate::numeric::deriv1(&ys, h);
        let x2 = crate::numeric::deriv2(&xs, h);
        let y2 = crate::numeric::deriv2(&ys, h);
        let integrand: Vec<f64> = (0..n)
            .map(|i| {
                let s2 = x1[i] * x1[i] + y1[i] * y1[i];
                (x1[i] * y2[i] - y1[i] * x2[i]) / s2
            })
            .collect();
        cumulative_uniform(&integrand, h)
    };

    let mut slopes = Vec::new();
    let mut rate_error = 0.0f64;
    for &eps in eps_grid {
        let m = (eps / h).round();
        if ((eps / h) - m).abs() > 1e-6 {
            return Err(Error::invalid(format!(
                "eps = {eps} is not an integer multiple of the grid step {h}"
            )));
        }
        let m = m as i64;
        if n as i64 - m.abs() < 9 {
            return Err(Error::InsufficientOverlap {
                got: (n as i64 - m.abs()).max(0) as usize,
                need: 9,
            });
        }
        let (src_start, dst_start) = if m >= 0 { (0, m as usize) } else { ((-m) as usize, 0) };
        let count = n - m.unsigned_abs() as usize;
        let xs = &theta[src_start..src_start + count];
        let ys = &theta[dst_start..dst_start + count];
        let fit = fit_line(xs, ys);
        let expected = ((1.0 - alpha) * eps).exp();
        slopes.push((eps, fit.slope));
        rate_error = rate_error.max((fit.slope - expected).abs() / expected.abs());
    }
    Ok(ThetaAffinityReport {
        slopes,
        rate_error,
        verdict: rate_error < tol.theta_rate,
    })
}

/// Interpolate a curve's points at a shifted parameter, for tests needing
/// off-grid comparisons.
#[allow(dead_code)]
pub(crate) fn point_at(curve: &SampledCurve, t: f64) -> Result<PlanarPoint> {
    let sx = CubicSpline::fit(curve.params(), &curve.xs())?;
    let sy = CubicSpline::fit(curve.params(), &curve.ys())?;
    Ok(PlanarPoint::new(sx.eval(t), sy.eval(t)))
}
