// Copyright 2026 the Aesthetica Authors
// SPDX-License-Identifier: Apache-2.0 OR MIT

//! Reparametrization among the three Klein-geometry parameters and curvature
//! estimation in all three geometries.
//!
//! All estimators work on a uniform parameter grid: non-uniform input is
//! spline-resampled first, derivatives come from the stencils in
//! [`crate::numeric::derivative`], and cumulative integrals use composite
//! Simpson with fixed summation order.

use crate::curve::{CurveMeta, CurvatureProfile, Geometry, ParamKind, PlanarPoint, SampledCurve};
use crate::error::{Error, Result};
use crate::numeric::{cumulative_uniform, poly_derivative, poly_derivative_with_norms, CubicSpline};

/// Samples dropped from each end of a derivative-based profile with the
/// default 5-point stencils.
pub const INTERIOR_TRIM: usize = 4;

/// Default derivative window; see [`crate::numeric::derivative`].
pub const DEFAULT_WINDOW: usize = 5;

/// Options for [`reparametrize`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReparamOptions {
    /// Base value of the new parameter at the first sample. Ignored for the
    /// arc-length target, which is pinned to s₀ = 0.
    pub base: f64,
}

impl Default for ReparamOptions {
    fn default() -> Self {
        ReparamOptions { base: 0.0 }
    }
}

/// Which pipeline computes the equiaffine curvature.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KappaSaRoute {
    /// Evaluate the κ-formula from the Euclidean curvature and its
    /// arc-length derivatives; needs κ > 0.
    Euclidean,
    /// Reparametrize to the equiaffine parameter u and use
    /// κ = det(γ_uu, γ_uuu), valid because det(γ_u, γ_uu) = 1.
    Equiaffine,
}

/// Cubic-spline resampling onto a uniform parameter grid over the same span.
///
/// A curve that is already uniform with the requested sample count is
/// returned unchanged, so closed-form samples are never smeared.
pub fn resample_uniform(curve: &SampledCurve, n: usize) -> Result<SampledCurve> {
    if n < crate::curve::MIN_SAMPLES {
        return Err(Error::TooFewSamples {
            got: n,
            need: crate::curve::MIN_SAMPLES,
        });
    }
    if n == curve.len() && curve.is_uniform(1e-12) {
        return Ok(curve.clone());
    }
    let (lo, hi) = curve.span();
    let sx = CubicSpline::fit(curve.params(), &curve.xs())?;
    let sy = CubicSpline::fit(curve.params(), &curve.ys())?;
    let h = (hi - lo) / (n - 1) as f64;
    let mut params = Vec::with_capacity(n);
    let mut points = Vec::with_capacity(n);
    for i in 0..n {
        let p = if i == n - 1 { hi } else { lo + i as f64 * h };
        params.push(p);
        points.push(PlanarPoint::new(sx.eval(p), sy.eval(p)));
    }
    SampledCurve::new(params, points, curve.kind(), curve.meta().cloned())
}

/// Resample to a uniform grid of the same length unless already uniform.
fn ensure_uniform(curve: &SampledCurve) -> Result<SampledCurve> {
    if curve.is_uniform(1e-9) {
        Ok(curve.clone())
    } else {
        resample_uniform(curve, curve.len())
    }
}

/// First and second point derivatives on a uniform grid.
struct PointDerivs {
    x1: Vec<f64>,
    y1: Vec<f64>,
    x2: Vec<f64>,
    y2: Vec<f64>,
}

fn point_derivs(curve: &SampledCurve, window: usize) -> PointDerivs {
    let h = curve.step();
    let xs = curve.xs();
    let ys = curve.ys();
    PointDerivs {
        x1: poly_derivative(&xs, h, window, 4, 1),
        y1: poly_derivative(&ys, h, window, 4, 1),
        x2: poly_derivative(&xs, h, window, 4, 2),
        y2: poly_derivative(&ys, h, window, 4, 2),
    }
}

impl PointDerivs {
    fn speed(&self, i: usize) -> f64 {
        self.x1[i].hypot(self.y1[i])
    }

    /// det(γ', γ'').
    fn det12(&self, i: usize) -> f64 {
        self.x1[i] * self.y2[i] - self.y1[i] * self.x2[i]
    }
}

/// Reparametrize a curve to arc length, turning angle or the equiaffine
/// parameter. The result traces the same point set; the new parameter starts
/// at `options.base` (arc length always at 0) and is generally non-uniform.
///
/// If the defining integrand is negative throughout, the sample order is
/// reversed first so the new parameter increases; the flip is recorded in
/// the metadata.
pub fn reparametrize(
    curve: &SampledCurve,
    target: ParamKind,
    options: &ReparamOptions,
) -> Result<SampledCurve> {
    match target {
        ParamKind::ArcLength | ParamKind::TurningAngle | ParamKind::Equiaffine => {}
        _ => {
            return Err(Error::invalid(
                "reparametrize targets are arc-length, turning-angle and equiaffine",
            ))
        }
    }

    let uniform = ensure_uniform(curve)?;
    let d = point_derivs(&uniform, DEFAULT_WINDOW);
    let n = uniform.len();
    let floor = crate::tolerances::Tolerances::default().integrand_floor;

    // Signed defining quantity per target, before orientation handling.
    let signed: Vec<f64> = match target {
        ParamKind::ArcLength => (0..n).map(|i| d.speed(i)).collect(),
        ParamKind::TurningAngle => {
            // dθ/dt = κ|γ_t| = det(γ_t, γ_tt)/|γ_t|².
            (0..n)
                .map(|i| {
                    let s = d.speed(i);
                    d.det12(i) / (s * s)
                })
                .collect()
        }
        ParamKind::Equiaffine => (0..n).map(|i| d.det12(i)).collect(),
        _ => unreachable!(),
    };

    if target == ParamKind::ArcLength {
        for (i, v) in signed.iter().enumerate() {
            if *v < floor {
                return Err(Error::DegenerateSpeed { index: i, value: *v });
            }
        }
    } else {
        for (i, v) in signed.iter().enumerate() {
            if v.abs() < floor {
                return Err(Error::DegenerateIntegrand {
                    index: i,
                    value: v.abs(),
                    floor,
                });
            }
        }
        for (i, w) in signed.windows(2).enumerate() {
            if w[0] * w[1] < 0.0 {
                return Err(Error::SignChange { index: i });
            }
        }
    }

    // Negative orientation: reverse so the integrand is positive.
    let flip = signed[0] < 0.0;
    let (points, values): (Vec<PlanarPoint>, Vec<f64>) = if flip {
        (
            uniform.points().iter().rev().copied().collect(),
            signed.iter().rev().map(|v| -v).collect(),
        )
    } else {
        (uniform.points().to_vec(), signed.clone())
    };

    let integrand: Vec<f64> = match target {
        ParamKind::Equiaffine => values.iter().map(|v| v.cbrt()).collect(),
        _ => values,
    };

    let base = if target == ParamKind::ArcLength {
        0.0
    } else {
        options.base
    };
    let cumulative = cumulative_uniform(&integrand, uniform.step());
    let params: Vec<f64> = cumulative.iter().map(|c| base + c).collect();

    let meta = uniform.meta().cloned().map(|mut m| {
        m.flipped ^= flip;
        m
    });
    let meta = if flip && meta.is_none() {
        Some(CurveMeta {
            provenance: crate::curve::Provenance::Ingested,
            flipped: true,
        })
    } else {
        meta
    };
    SampledCurve::new(params, points, target, meta)
}

/// Euclidean curvature κ(t) = det(γ_t, γ_tt)/|γ_t|³ on the stencil interior.
pub fn euclidean_curvature(curve: &SampledCurve) -> Result<CurvatureProfile> {
    euclidean_curvature_windowed(curve, DEFAULT_WINDOW)
}

/// As [`euclidean_curvature`] with a wider derivative window for noisy data.
pub fn euclidean_curvature_windowed(
    curve: &SampledCurve,
    window: usize,
) -> Result<CurvatureProfile> {
    let uniform = ensure_uniform(curve)?;
    let (kappa, _speed) = euclidean_kappa_full(&uniform, window)?;
    trim_profile(&uniform, kappa, Geometry::Euclidean, window)
}

/// κ and |γ_t| at every sample of a uniform curve.
fn euclidean_kappa_full(uniform: &SampledCurve, window: usize) -> Result<(Vec<f64>, Vec<f64>)> {
    let d = point_derivs(uniform, window);
    let n = uniform.len();
    let floor = crate::tolerances::Tolerances::default().integrand_floor;
    let mut kappa = Vec::with_capacity(n);
    let mut speed = Vec::with_capacity(n);
    for i in 0..n {
        let s = d.speed(i);
        if s < floor {
            return Err(Error::DegenerateSpeed { index: i, value: s });
        }
        kappa.push(d.det12(i) / (s * s * s));
        speed.push(s);
    }
    Ok((kappa, speed))
}

fn trim_profile(
    uniform: &SampledCurve,
    values: Vec<f64>,
    geometry: Geometry,
    window: usize,
) -> Result<CurvatureProfile> {
    let trim = INTERIOR_TRIM.max((window - 1) / 2);
    let n = values.len();
    if n < 2 * trim + 1 {
        return Err(Error::TooFewSamples {
            got: n,
            need: 2 * trim + 1,
        });
    }
    CurvatureProfile::new(
        uniform.params()[trim..n - trim].to_vec(),
        values[trim..n - trim].to_vec(),
        geometry,
        uniform.kind(),
    )
}

/// Similarity curvature κ_s/κ² on the stencil interior.
pub fn similarity_curvature(curve: &SampledCurve) -> Result<CurvatureProfile> {
    let uniform = ensure_uniform(curve)?;
    let (kappa, speed) = euclidean_kappa_full(&uniform, DEFAULT_WINDOW)?;
    let h = uniform.step();
    let kappa_t = poly_derivative(&kappa, h, DEFAULT_WINDOW, 4, 1);
    let floor = crate::tolerances::Tolerances::default().integrand_floor;
    let n = uniform.len();
    let mut sim = Vec::with_capacity(n);
    for i in 0..n {
        if kappa[i].abs() < floor.max(1e-9 * kappa_scale(&kappa)) {
            return Err(Error::VanishingCurvature { index: i });
        }
        let kappa_s = kappa_t[i] / speed[i];
        sim.push(kappa_s / (kappa[i] * kappa[i]));
    }
    trim_profile(&uniform, sim, Geometry::Similarity, DEFAULT_WINDOW)
}

fn kappa_scale(kappa: &[f64]) -> f64 {
    kappa.iter().fold(0.0f64, |a, k| a.max(k.abs()))
}

/// Equiaffine curvature along one of the two routes. Profile parameters are
/// the input curve's parameter for the Euclidean route and the equiaffine
/// parameter for the equiaffine route.
pub fn equiaffine_curvature(curve: &SampledCurve, route: KappaSaRoute) -> Result<CurvatureProfile> {
    equiaffine_curvature_windowed(curve, route, DEFAULT_WINDOW)
}

/// Equiaffine curvature profile together with a per-sample estimate of its
/// standard deviation under the curve's own measured coordinate noise
/// (first-order propagation through the derivative kernels; ~0 on clean
/// data).
#[derive(Debug, Clone, PartialEq)]
pub struct KappaEstimate {
    pub profile: CurvatureProfile,
    pub noise_sigma: Vec<f64>,
}

/// Per-sample absolute noise scales for both coordinates, from the robust
/// fourth-difference estimator, assuming noise proportional to |coordinate|.
fn coordinate_noise(xs: &[f64], ys: &[f64]) -> (Vec<f64>, Vec<f64>) {
    let scale = |vals: &[f64]| -> Vec<f64> {
        let sigma = crate::numeric::noise_sigma(vals);
        let mut mags: Vec<f64> = vals.iter().map(|v| v.abs()).collect();
        mags.sort_by(f64::total_cmp);
        let med = mags[mags.len() / 2].max(f64::MIN_POSITIVE);
        vals.iter().map(|v| sigma * v.abs().max(0.05 * med) / med).collect()
    };
    (scale(xs), scale(ys))
}

/// As [`equiaffine_curvature`] with a wider derivative window for noisy
/// data; discards the noise estimate of [`equiaffine_curvature_estimate`].
pub fn equiaffine_curvature_windowed(
    curve: &SampledCurve,
    route: KappaSaRoute,
    window: usize,
) -> Result<CurvatureProfile> {
    equiaffine_curvature_estimate(curve, route, window).map(|e| e.profile)
}

/// As [`equiaffine_curvature_windowed`], also propagating the measured
/// coordinate noise into a per-sample σ of the curvature estimate.
pub fn equiaffine_curvature_estimate(
    curve: &SampledCurve,
    route: KappaSaRoute,
    window: usize,
) -> Result<KappaEstimate> {
    match route {
        KappaSaRoute::Euclidean => {
            let uniform = ensure_uniform(curve)?;
            let (kappa, speed) = euclidean_kappa_full(&uniform, window)?;
            for (i, k) in kappa.iter().enumerate() {
                if *k <= 0.0 {
                    return Err(Error::NegativeCurvatureOnEuclideanRoute { index: i });
                }
            }
            let h = uniform.step();
            let kappa_t = poly_derivative(&kappa, h, window, 4, 1);
            let kappa_s: Vec<f64> = kappa_t.iter().zip(&speed).map(|(kt, s)| kt / s).collect();
            let kappa_s_t = poly_derivative(&kappa_s, h, window, 4, 1);
            let mut out = Vec::with_capacity(uniform.len());
            for i in 0..uniform.len() {
                let k = kappa[i];
                let ks = kappa_s[i];
                let kss = kappa_s_t[i] / speed[i];
                out.push(
                    k.powf(4.0 / 3.0) + kss * k.powf(-5.0 / 3.0) / 3.0
                        - 5.0 / 9.0 * ks * ks * k.powf(-8.0 / 3.0),
                );
            }
            let profile = trim_profile(&uniform, out, Geometry::Equiaffine, window)?;
            // No propagated noise model on this route; the formula's
            // cascaded fractional powers make a first-order budget
            // uninformative.
            let zeros = vec![0.0; profile.len()];
            Ok(KappaEstimate {
                profile,
                noise_sigma: zeros,
            })
        }
        KappaSaRoute::Equiaffine => {
            if curve.kind() == ParamKind::Equiaffine {
                // Samples are already in u: differentiate directly.
                let uniform = ensure_uniform(curve)?;
                let h = uniform.step();
                let xs = uniform.xs();
                let ys = uniform.ys();
                let (x2, k2) = poly_derivative_with_norms(&xs, h, window, 4, 2);
                let (y2, _) = poly_derivative_with_norms(&ys, h, window, 4, 2);
                let (x3, k3) = poly_derivative_with_norms(&xs, h, window, 3, 3);
                let (y3, _) = poly_derivative_with_norms(&ys, h, window, 3, 3);
                let kappa: Vec<f64> = (0..uniform.len())
                    .map(|i| x2[i] * y3[i] - y2[i] * x3[i])
                    .collect();
                let (dx, dy) = coordinate_noise(&xs, &ys);
                let nn = uniform.len();
                let sigma: Vec<f64> = (0..nn)
                    .map(|i| {
                        ((y3[i] * k2[i] * dx[i]).powi(2)
                            + (x3[i] * k2[i] * dy[i]).powi(2)
                            + (y2[i] * k3[i] * dx[i]).powi(2)
                            + (x2[i] * k3[i] * dy[i]).powi(2))
                        .sqrt()
                    })
                    .collect();
                let profile = trim_profile(&uniform, kappa, Geometry::Equiaffine, window)?;
                let trim = INTERIOR_TRIM.max((window - 1) / 2);
                Ok(KappaEstimate {
                    noise_sigma: sigma[trim..uniform.len() - trim].to_vec(),
                    profile,
                })
            } else {
                equiaffine_curvature_via_chain_rule(curve, window)
            }
        }
    }
}

/// Equiaffine curvature of a curve sampled in an arbitrary parameter t.
///
/// Reparametrizes to u through u_t = det(γ_t, γ_tt)^(1/3), then evaluates
/// γ_uu and γ_uuu by the chain rule on the original uniform t grid instead
/// of resampling onto a uniform u grid: spline interpolation error would be
/// amplified by h⁻³ in the third derivative. The resulting profile carries
/// the (non-uniform) u values.
fn equiaffine_curvature_via_chain_rule(
    curve: &SampledCurve,
    window: usize,
) -> Result<KappaEstimate> {
    let uniform = ensure_uniform(curve)?;
    let h = uniform.step();
    let floor = crate::tolerances::Tolerances::default().integrand_floor;

    let d = point_derivs(&uniform, window);
    let n = uniform.len();
    let dets: Vec<f64> = (0..n).map(|i| d.det12(i)).collect();
    for (i, v) in dets.iter().enumerate() {
        if v.abs() < floor {
            return Err(Error::DegenerateIntegrand {
                index: i,
                value: v.abs(),
                floor,
            });
        }
    }
    for (i, w) in dets.windows(2).enumerate() {
        if w[0] * w[1] < 0.0 {
            return Err(Error::SignChange { index: i });
        }
    }

    // Normalize orientation by reversing the sample order; the params stay
    // the same uniform grid (t -> lo + hi - t is a valid reversal).
    let flipped = dets[0] < 0.0;
    let work = if flipped {
        let points: Vec<PlanarPoint> = uniform.points().iter().rev().copied().collect();
        SampledCurve::new(
            uniform.params().to_vec(),
            points,
            uniform.kind(),
            uniform.meta().cloned(),
        )?
    } else {
        uniform
    };

    let xs = work.xs();
    let ys = work.ys();
    let x1 = poly_derivative(&xs, h, window, 4, 1);
    let y1 = poly_derivative(&ys, h, window, 4, 1);
    let (x2, k2norms) = poly_derivative_with_norms(&xs, h, window, 4, 2);
    let (y2, _) = poly_derivative_with_norms(&ys, h, window, 4, 2);
    let (x3, k3norms) = poly_derivative_with_norms(&xs, h, window, 3, 3);
    let (y3, _) = poly_derivative_with_norms(&ys, h, window, 3, 3);
    let ut: Vec<f64> = (0..n)
        .map(|i| (x1[i] * y2[i] - y1[i] * x2[i]).cbrt())
        .collect();
    let utt = poly_derivative(&ut, h, window, 4, 1);
    let uttt = poly_derivative(&ut, h, window, 4, 2);
    let u = cumulative_uniform(&ut, h);

    let (dx, dy) = coordinate_noise(&xs, &ys);
    let mut kappa = Vec::with_capacity(n);
    let mut sigma = Vec::with_capacity(n);
    for i in 0..n {
        let (p, pp, ppp) = (ut[i], utt[i], uttt[i]);
        let guu = |d1: f64, d2: f64| (d2 * p - d1 * pp) / (p * p * p);
        let guuu = |d1: f64, d2: f64, d3: f64| {
            (d3 * p * p - 3.0 * d2 * p * pp + d1 * (3.0 * pp * pp - p * ppp)) / p.powi(5)
        };
        let xuu = guu(x1[i], x2[i]);
        let yuu = guu(y1[i], y2[i]);
        let xuuu = guuu(x1[i], x2[i], x3[i]);
        let yuuu = guuu(y1[i], y2[i], y3[i]);
        kappa.push(xuu * yuuu - yuu * xuuu);
        // First-order noise through the leading derivative terms: the
        // second derivative enters over u_t² and the third over u_t³.
        let suu_x = k2norms[i] * dx[i] / (p * p);
        let suu_y = k2norms[i] * dy[i] / (p * p);
        let suuu_x = k3norms[i] * dx[i] / (p * p * p).abs();
        let suuu_y = k3norms[i] * dy[i] / (p * p * p).abs();
        sigma.push(
            ((yuuu * suu_x).powi(2)
                + (xuuu * suu_y).powi(2)
                + (yuu * suuu_x).powi(2)
                + (xuu * suuu_y).powi(2))
            .sqrt(),
        );
    }

    let trim = INTERIOR_TRIM.max((window - 1) / 2);
    if n < 2 * trim + 1 {
        return Err(Error::TooFewSamples {
            got: n,
            need: 2 * trim + 1,
        });
    }
    let profile = CurvatureProfile::new(
        u[trim..n - trim].to_vec(),
        kappa[trim..n - trim].to_vec(),
        Geometry::Equiaffine,
        ParamKind::Equiaffine,
    )?;
    Ok(KappaEstimate {
        noise_sigma: sigma[trim..n - trim].to_vec(),
        profile,
    })
}
