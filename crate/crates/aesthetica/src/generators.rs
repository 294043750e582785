// Copyright 2026 the Aesthetica Authors
// SPDX-License-Identifier: Apache-2.0 OR MIT

//! Closed-form generation of the curve families the library studies:
//! logarithmic spirals, log-aesthetic curves, the constant-equiaffine-
//! curvature conics, the ±(ξu)⁻² Euler-equation class, and the canonical
//! graphs (power, log, x·log x).

use serde::{Deserialize, Serialize};

use crate::curve::{CurveMeta, ParamKind, PlanarPoint, Provenance, SampledCurve};
use crate::error::{Error, Result};
use crate::numeric::rk4;

/// Sign of the equiaffine curvature law ±(ξu+η)⁻².
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CurvatureSign {
    Plus,
    Minus,
}

impl CurvatureSign {
    pub fn factor(&self) -> f64 {
        match self {
            CurvatureSign::Plus => 1.0,
            CurvatureSign::Minus => -1.0,
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            CurvatureSign::Plus => "plus",
            CurvatureSign::Minus => "minus",
        }
    }

    pub fn parse(s: &str) -> Option<CurvatureSign> {
        match s {
            "plus" | "+" => Some(CurvatureSign::Plus),
            "minus" | "-" => Some(CurvatureSign::Minus),
            _ => None,
        }
    }
}

/// One curve family with its parameters.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum Family {
    /// γ(w) = e^((a+ib)w).
    LogSpiral { a: f64, b: f64 },
    /// Curvature radius a power of arc length: κ(s) = (ξs+η)^(-1/α),
    /// or e^(ξs+η) for α = 0.
    Lac { alpha: f64, xi: f64, eta: f64 },
    /// Conic with the given constant equiaffine curvature.
    Quadratic { kappa_sa: f64 },
    /// Euler-equation class with κ(u) = ±(ξu)⁻².
    EsaClass { sign: CurvatureSign, xi: f64 },
    /// Graph (t, t^alpha).
    PowerGraph { alpha: f64 },
    /// Graph (t, log t).
    LogGraph,
    /// Graph (t, t·log t).
    XLogXGraph,
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::LogSpiral { .. } => "log-spiral",
            Family::Lac { .. } => "lac",
            Family::Quadratic { .. } => "quadratic",
            Family::EsaClass { .. } => "esa",
            Family::PowerGraph { .. } => "power",
            Family::LogGraph => "log",
            Family::XLogXGraph => "xlogx",
        }
    }
}

/// A family plus the sampling window: `range` in the family's natural
/// parameter and the sample count `n`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FamilySpec {
    pub family: Family,
    pub range: (f64, f64),
    pub n: usize,
}

impl FamilySpec {
    pub fn new(family: Family, range: (f64, f64), n: usize) -> Result<FamilySpec> {
        let spec = FamilySpec { family, range, n };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        let (lo, hi) = self.range;
        if !(lo < hi) || !lo.is_finite() || !hi.is_finite() {
            return Err(Error::InvalidSpec {
                reason: format!("range [{lo}, {hi}] must be finite with lo < hi"),
            });
        }
        if self.n < crate::curve::MIN_SAMPLES {
            return Err(Error::InvalidSpec {
                reason: format!("n = {} below the minimum of 9", self.n),
            });
        }
        match self.family {
            Family::LogSpiral { a, b } => {
                if a == 0.0 && b == 0.0 {
                    return Err(Error::InvalidSpec {
                        reason: "log spiral needs (a, b) != (0, 0)".into(),
                    });
                }
            }
            Family::Lac { alpha, xi, eta } => {
                if alpha != 0.0 {
                    let at_lo = xi * lo + eta;
                    let at_hi = xi * hi + eta;
                    if at_lo <= 0.0 || at_hi <= 0.0 {
                        return Err(Error::SingularRange {
                            reason: format!(
                                "ξs+η must stay positive on the range (got {at_lo} .. {at_hi})"
                            ),
                        });
                    }
                }
            }
            Family::Quadratic { kappa_sa } => {
                if !kappa_sa.is_finite() {
                    return Err(Error::InvalidSpec {
                        reason: "constant curvature must be finite".into(),
                    });
                }
            }
            Family::EsaClass { xi, .. } => {
                if xi == 0.0 {
                    return Err(Error::InvalidSpec {
                        reason: "esa class needs ξ != 0".into(),
                    });
                }
                if lo <= 0.0 {
                    return Err(Error::SingularRange {
                        reason: "esa class range must stay right of the u = 0 singularity".into(),
                    });
                }
            }
            Family::PowerGraph { alpha } => {
                let integral = alpha.fract() == 0.0 && alpha >= 0.0;
                if !integral && lo <= 0.0 {
                    return Err(Error::SingularRange {
                        reason: "power graph with non-integer exponent needs t > 0".into(),
                    });
                }
            }
            Family::LogGraph | Family::XLogXGraph => {
                if lo <= 0.0 {
                    return Err(Error::SingularRange {
                        reason: "log graphs need t > 0".into(),
                    });
                }
            }
        }
        Ok(())
    }
}

/// Uniform grid over the spec's range.
fn grid(spec: &FamilySpec) -> Vec<f64> {
    let (lo, hi) = spec.range;
    let n = spec.n;
    (0..n)
        .map(|i| {
            if i == n - 1 {
                hi
            } else {
                lo + (hi - lo) * i as f64 / (n - 1) as f64
            }
        })
        .collect()
}

/// Exponential regime of the ±(ξu)⁻² law, following the characteristic
/// exponents r = 1/2 ± √(1/4 − sign·ξ⁻²) of the Euler equation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EulerRegime {
    /// Real distinct exponents: minus sign (any ξ), or plus sign, |ξ| > 2.
    PowerPair,
    /// Double root at 1/2: plus sign, |ξ| = 2.
    DoubleRoot,
    /// Complex pair: plus sign, |ξ| < 2.
    Oscillatory,
}

/// Regime and ω = √|1/4 − sign·ξ⁻²| for a (sign, ξ) pair.
pub fn euler_regime(sign: CurvatureSign, xi: f64) -> (EulerRegime, f64) {
    let disc = 0.25 - sign.factor() / (xi * xi);
    let omega = disc.abs().sqrt();
    let regime = match sign {
        CurvatureSign::Minus => EulerRegime::PowerPair,
        CurvatureSign::Plus => {
            if xi.abs() > 2.0 {
                EulerRegime::PowerPair
            } else if xi.abs() == 2.0 {
                EulerRegime::DoubleRoot
            } else {
                EulerRegime::Oscillatory
            }
        }
    };
    (regime, omega)
}

/// Antiderivative of u^(p-1), evaluated stably: returns (u^p - 1)/p when p
/// is close to 0 (its p → 0 limit is log u) and u^p/p otherwise. Either
/// choice differs from the other by a constant, which generation absorbs.
fn power_antiderivative(u: f64, p: f64) -> f64 {
    if p.abs() < 0.5 {
        if p == 0.0 {
            u.ln()
        } else {
            f64::exp_m1(p * u.ln()) / p
        }
    } else {
        u.powf(p) / p
    }
}

/// Generate the curve a spec describes.
///
/// Closed-form families are evaluated exactly; the log-aesthetic curve
/// integrates its Frenet system (γ(lo) at the origin, initial tangent along
/// +x) with fixed-step RK4 at 8 substeps per sample.
pub fn generate(spec: &FamilySpec) -> Result<SampledCurve> {
    spec.validate()?;
    let params = grid(spec);
    let meta = Some(CurveMeta::generated(*spec));
    match spec.family {
        Family::LogSpiral { a, b } => {
            let points = params
                .iter()
                .map(|&w| {
                    let r = (a * w).exp();
                    PlanarPoint::new(r * (b * w).cos(), r * (b * w).sin())
                })
                .collect();
            SampledCurve::new(params, points, ParamKind::Arbitrary, meta)
        }
        Family::Lac { alpha, xi, eta } => {
            let kappa = move |s: f64| lac_kappa(alpha, xi, eta, s);
            let states = rk4::integrate(
                |s, y: &[f64; 3]| [y[2].cos(), y[2].sin(), kappa(s)],
                [0.0, 0.0, 0.0],
                &params,
                8,
            );
            let points = states
                .iter()
                .map(|y| PlanarPoint::new(y[0], y[1]))
                .collect();
            SampledCurve::new(params, points, ParamKind::ArcLength, meta)
        }
        Family::Quadratic { kappa_sa } => {
            let points = params.iter().map(|&u| quadratic_point(kappa_sa, u)).collect();
            SampledCurve::new(params, points, ParamKind::Equiaffine, meta)
        }
        Family::EsaClass { sign, xi } => {
            let points = params.iter().map(|&u| esa_class_point(sign, xi, u)).collect();
            SampledCurve::new(params, points, ParamKind::Equiaffine, meta)
        }
        Family::PowerGraph { alpha } => {
            let integral = alpha.fract() == 0.0 && alpha >= 0.0;
            let points = params
                .iter()
                .map(|&t| {
                    let y = if integral {
                        t.powi(alpha as i32)
                    } else {
                        t.powf(alpha)
                    };
                    PlanarPoint::new(t, y)
                })
                .collect();
            SampledCurve::new(params, points, ParamKind::Arbitrary, meta)
        }
        Family::LogGraph => {
            let points = params.iter().map(|&t| PlanarPoint::new(t, t.ln())).collect();
            SampledCurve::new(params, points, ParamKind::Arbitrary, meta)
        }
        Family::XLogXGraph => {
            let points = params
                .iter()
                .map(|&t| PlanarPoint::new(t, t * t.ln()))
                .collect();
            SampledCurve::new(params, points, ParamKind::Arbitrary, meta)
        }
    }
}

/// κ(s) of the log-aesthetic curve.
pub fn lac_kappa(alpha: f64, xi: f64, eta: f64, s: f64) -> f64 {
    if alpha == 0.0 {
        (xi * s + eta).exp()
    } else {
        (xi * s + eta).powf(-1.0 / alpha)
    }
}

/// Turning angle θ(s) = ∫κ ds of the log-aesthetic curve, up to a constant.
pub fn lac_theta(alpha: f64, xi: f64, eta: f64, s: f64) -> f64 {
    if alpha == 0.0 {
        (xi * s + eta).exp() / xi
    } else if alpha == 1.0 {
        (xi * s + eta).ln() / xi
    } else {
        let p = 1.0 - 1.0 / alpha;
        (xi * s + eta).powf(p) / (xi * p)
    }
}

/// Conic with constant equiaffine curvature q, in equiaffine parametrization:
/// the parabola (u, u²/2) for q = 0, a circle of radius q^(-3/4) for q > 0,
/// and the unit-determinant hyperbola branch for q < 0.
fn quadratic_point(q: f64, u: f64) -> PlanarPoint {
    if q == 0.0 {
        PlanarPoint::new(u, u * u / 2.0)
    } else if q > 0.0 {
        let c = q.sqrt();
        let r = q.powf(-0.75);
        PlanarPoint::new(r * (c * u).cos(), r * (c * u).sin())
    } else {
        let c = (-q).sqrt();
        let r = (-q).powf(-0.75);
        PlanarPoint::new(r * (c * u).cosh(), -r * (c * u).sinh())
    }
}

/// Wronskian-normalized solution basis (f, g) of z_uu ± (ξu)⁻² z = 0 and its
/// u-derivatives, per regime. f·g_u − g·f_u = 1 exactly.
pub(crate) fn euler_basis_point(sign: CurvatureSign, xi: f64, u: f64) -> (f64, f64, f64, f64) {
    let (regime, omega) = euler_regime(sign, xi);
    match regime {
        EulerRegime::PowerPair => {
            // (c·u^(1/2+ω), -c·u^(1/2-ω)) with c = 1/√(2ω) has W = 1.
            let c = 1.0 / (2.0 * omega).sqrt();
            let f = c * u.powf(0.5 + omega);
            let g = -c * u.powf(0.5 - omega);
            let fu = c * (0.5 + omega) * u.powf(omega - 0.5);
            let gu = -c * (0.5 - omega) * u.powf(-0.5 - omega);
            (f, g, fu, gu)
        }
        EulerRegime::DoubleRoot => {
            let r = u.sqrt();
            let l = u.ln();
            (r, r * l, 0.5 / r, 0.5 * l / r + 1.0 / r)
        }
        EulerRegime::Oscillatory => {
            let c = (u / omega).sqrt();
            let phase = omega * u.ln();
            let (sin, cos) = phase.sin_cos();
            let f = c * cos;
            let g = c * sin;
            let fu = c / u * (0.5 * cos - omega * sin);
            let gu = c / u * (0.5 * sin + omega * cos);
            (f, g, fu, gu)
        }
    }
}

/// Point of the ±(ξu)⁻² curve: the exact antiderivative of the normalized
/// basis, so det(γ_u, γ_uu) = 1 holds analytically.
fn esa_class_point(sign: CurvatureSign, xi: f64, u: f64) -> PlanarPoint {
    let (regime, omega) = euler_regime(sign, xi);
    match regime {
        EulerRegime::PowerPair => {
            let c = 1.0 / (2.0 * omega).sqrt();
            let x = c * power_antiderivative(u, 1.5 + omega);
            let y = -c * power_antiderivative(u, 1.5 - omega);
            PlanarPoint::new(x, y)
        }
        EulerRegime::DoubleRoot => {
            // ∫√u = (2/3)u^(3/2); ∫√u·log u = (2/3)u^(3/2)(log u − 2/3).
            let a = 2.0 / 3.0 * u.powf(1.5);
            PlanarPoint::new(a, a * (u.ln() - 2.0 / 3.0))
        }
        EulerRegime::Oscillatory => {
            // ∫ ω^(-1/2) u^(1/2 + iω) du = ω^(-1/2) u^(3/2+iω)/(3/2+iω).
            let c = 1.0 / omega.sqrt();
            let mag = c * u.powf(1.5);
            let phase = omega * u.ln();
            let denom = 2.25 + omega * omega;
            let re = (1.5 * phase.cos() + omega * phase.sin()) / denom;
            let im = (1.5 * phase.sin() - omega * phase.cos()) / denom;
            PlanarPoint::new(mag * re, mag * im)
        }
    }
}

/// κ(u) = ±(ξu)⁻² of the generated class.
pub fn esa_class_kappa(sign: CurvatureSign, xi: f64, u: f64) -> f64 {
    sign.factor() / (xi * u).powi(2)
}

/// Resample a log-aesthetic curve in the parameter t normalized so that
/// κ(t) = κ(anchor)·e^t, the exponential-curvature form of its self-affinity.
///
/// The anchor is s = 0 when the curvature is defined there, otherwise the
/// lower end of the range. The returned curve is uniform in t with the map
/// s(t) recorded in its provenance; closed-form κ(t), s_t(t) and θ(t) stay
/// available to downstream checks through [`MsaMaps`].
pub fn msa_parametrization(spec: &FamilySpec, n: usize) -> Result<SampledCurve> {
    spec.validate()?;
    let Family::Lac { alpha, xi, eta } = spec.family else {
        return Err(Error::InvalidSpec {
            reason: "exponential-curvature parametrization needs a log-aesthetic spec".into(),
        });
    };
    if n < crate::curve::MIN_SAMPLES {
        return Err(Error::TooFewSamples {
            got: n,
            need: crate::curve::MIN_SAMPLES,
        });
    }
    if xi == 0.0 {
        // Constant curvature: no strictly monotone exponential form exists.
        return Err(Error::NonMonotoneKappa);
    }

    let (s_lo, s_hi) = spec.range;
    let anchor = if alpha == 0.0 || eta > 0.0 { 0.0 } else { s_lo };
    let maps = MsaMaps {
        alpha,
        xi,
        eta,
        anchor,
    };

    // t is monotone in s (decreasing for ξ > 0); sample t uniformly over the
    // image of the s-range.
    let (t_a, t_b) = (maps.t_of_s(s_lo), maps.t_of_s(s_hi));
    if !t_a.is_finite() || !t_b.is_finite() || t_a == t_b {
        return Err(Error::NonMonotoneKappa);
    }
    let (t_lo, t_hi) = if t_a < t_b { (t_a, t_b) } else { (t_b, t_a) };
    let t_grid: Vec<f64> = (0..n)
        .map(|i| {
            if i == n - 1 {
                t_hi
            } else {
                t_lo + (t_hi - t_lo) * i as f64 / (n - 1) as f64
            }
        })
        .collect();

    // γ(t) by RK4 on dγ/dt = e^{iθ(s(t))}·s_t(t), all closed form. The frame
    // convention matches `generate`: θ(s_lo) = 0, γ(s_lo) = origin. s_lo maps
    // to an endpoint of the t-grid; when it is the upper one, integrate with
    // decreasing t (negative RK4 steps).
    let theta0 = lac_theta(alpha, xi, eta, s_lo);
    let f = |t: f64, _y: &[f64; 2]| {
        let s = maps.s_of_t(t);
        let theta = lac_theta(alpha, xi, eta, s) - theta0;
        let st = maps.s_t(t);
        [theta.cos() * st, theta.sin() * st]
    };
    let points: Vec<PlanarPoint> = if t_a < t_b {
        rk4::integrate(f, [0.0, 0.0], &t_grid, 8)
            .iter()
            .map(|y| PlanarPoint::new(y[0], y[1]))
            .collect()
    } else {
        let reversed: Vec<f64> = t_grid.iter().rev().copied().collect();
        let mut pts: Vec<PlanarPoint> = rk4::integrate(f, [0.0, 0.0], &reversed, 8)
            .iter()
            .map(|y| PlanarPoint::new(y[0], y[1]))
            .collect();
        pts.reverse();
        pts
    };

    let kind = if alpha == 1.0 {
        ParamKind::EsaParam
    } else {
        ParamKind::Arbitrary
    };
    let meta = CurveMeta {
        provenance: Provenance::MsaParametrized {
            spec: *spec,
            anchor,
        },
        flipped: false,
    };
    SampledCurve::new(t_grid, points, kind, Some(meta))
}

/// Closed-form maps of the exponential-curvature parametrization,
/// reconstructed from curve provenance.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MsaMaps {
    pub alpha: f64,
    pub xi: f64,
    pub eta: f64,
    /// Arc length mapped to t = 0.
    pub anchor: f64,
}

impl MsaMaps {
    /// Extract from a curve produced by [`msa_parametrization`].
    pub fn from_curve(curve: &SampledCurve) -> Option<MsaMaps> {
        match curve.meta().map(|m| &m.provenance) {
            Some(Provenance::MsaParametrized { spec, anchor }) => {
                if let Family::Lac { alpha, xi, eta } = spec.family {
                    Some(MsaMaps {
                        alpha,
                        xi,
                        eta,
                        anchor: *anchor,
                    })
                } else {
                    None
                }
            }
            _ => None,
        }
    }

    /// t(s) = log(κ(s)/κ(anchor)).
    pub fn t_of_s(&self, s: f64) -> f64 {
        if self.alpha == 0.0 {
            self.xi * (s - self.anchor)
        } else {
            let base = self.xi * self.anchor + self.eta;
            -(1.0 / self.alpha) * ((self.xi * s + self.eta) / base).ln()
        }
    }

    /// Inverse map s(t).
    pub fn s_of_t(&self, t: f64) -> f64 {
        if self.alpha == 0.0 {
            self.anchor + t / self.xi
        } else {
            let base = self.xi * self.anchor + self.eta;
            (base * (-self.alpha * t).exp() - self.eta) / self.xi
        }
    }

    /// ds/dt.
    pub fn s_t(&self, t: f64) -> f64 {
        if self.alpha == 0.0 {
            1.0 / self.xi
        } else {
            let base = self.xi * self.anchor + self.eta;
            -self.alpha * base * (-self.alpha * t).exp() / self.xi
        }
    }

    /// κ(t) = κ(anchor)·e^t.
    pub fn kappa_of_t(&self, t: f64) -> f64 {
        lac_kappa(self.alpha, self.xi, self.eta, self.anchor) * t.exp()
    }

    /// θ(t), up to the same constant as [`lac_theta`].
    pub fn theta_of_t(&self, t: f64) -> f64 {
        lac_theta(self.alpha, self.xi, self.eta, self.s_of_t(t))
    }
}
