// Copyright 2026 the Aesthetica Authors
// SPDX-License-Identifier: Apache-2.0 OR MIT

//! Core curve types: sampled planar curves tagged with the Klein parameter
//! their samples use, and per-sample curvature profiles.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::generators::FamilySpec;

/// Minimum number of samples any curve operation accepts. Third-derivative
/// stencils plus interior trimming need this much support.
pub const MIN_SAMPLES: usize = 9;

/// A point in the plane.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PlanarPoint {
    pub x: f64,
    pub y: f64,
}

impl PlanarPoint {
    pub const ORIGIN: PlanarPoint = PlanarPoint { x: 0.0, y: 0.0 };

    pub fn new(x: f64, y: f64) -> Self {
        PlanarPoint { x, y }
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }
}

/// Which parameter the samples of a curve use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ParamKind {
    /// An arbitrary parameter, e.g. the generator's natural variable.
    Arbitrary,
    /// Euclidean arc length s (unit speed).
    ArcLength,
    /// Turning angle θ, the similarity arc length.
    TurningAngle,
    /// Equiaffine arc length u, normalizing det(γ_u, γ_uu) = 1.
    Equiaffine,
    /// The parameter t of an extendable self-affinity, u = e^{kt+l}.
    EsaParam,
}

impl ParamKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            ParamKind::Arbitrary => "arbitrary",
            ParamKind::ArcLength => "arc-length",
            ParamKind::TurningAngle => "turning-angle",
            ParamKind::Equiaffine => "equiaffine",
            ParamKind::EsaParam => "esa-param",
        }
    }

    pub fn parse(s: &str) -> Option<ParamKind> {
        match s {
            "arbitrary" => Some(ParamKind::Arbitrary),
            "arc-length" => Some(ParamKind::ArcLength),
            "turning-angle" => Some(ParamKind::TurningAngle),
            "equiaffine" => Some(ParamKind::Equiaffine),
            "esa-param" => Some(ParamKind::EsaParam),
            _ => None,
        }
    }
}

/// The Klein geometry a curvature profile belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Geometry {
    Euclidean,
    Similarity,
    Equiaffine,
}

impl Geometry {
    pub fn as_str(&self) -> &'static str {
        match self {
            Geometry::Euclidean => "euclidean",
            Geometry::Similarity => "similarity",
            Geometry::Equiaffine => "equiaffine",
        }
    }
}

/// Where a curve came from. Generated curves keep their family parameters so
/// downstream checks can evaluate closed-form curvature and speed laws.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum Provenance {
    /// Read from a file or supplied by a caller.
    Ingested,
    /// Produced by [`crate::generators::generate`].
    Generated(FamilySpec),
    /// A log-aesthetic curve resampled in its exponential-curvature
    /// parameter t, with κ(t) = κ(s_anchor)·e^t. `anchor` is the arc length
    /// mapped to t = 0.
    MsaParametrized { spec: FamilySpec, anchor: f64 },
}

/// Optional provenance attached to a curve.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CurveMeta {
    pub provenance: Provenance,
    /// Whether an orientation-normalizing reversal was applied.
    pub flipped: bool,
}

impl CurveMeta {
    pub fn generated(spec: FamilySpec) -> Self {
        CurveMeta {
            provenance: Provenance::Generated(spec),
            flipped: false,
        }
    }

    pub fn ingested() -> Self {
        CurveMeta {
            provenance: Provenance::Ingested,
            flipped: false,
        }
    }
}

/// A discretized planar curve: strictly increasing parameter samples plus
/// points, tagged with which Klein parameter the samples use.
///
/// The arrays are validated on construction and immutable afterwards; all
/// operations return new curves.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SampledCurve {
    params: Vec<f64>,
    points: Vec<PlanarPoint>,
    kind: ParamKind,
    meta: Option<CurveMeta>,
}

impl SampledCurve {
    pub fn new(
        params: Vec<f64>,
        points: Vec<PlanarPoint>,
        kind: ParamKind,
        meta: Option<CurveMeta>,
    ) -> Result<Self> {
        if params.len() < MIN_SAMPLES {
            return Err(Error::TooFewSamples {
                got: params.len(),
                need: MIN_SAMPLES,
            });
        }
        if params.len() != points.len() {
            return Err(Error::invalid(format!(
                "params/points length mismatch: {} vs {}",
                params.len(),
                points.len()
            )));
        }
        for (i, w) in params.windows(2).enumerate() {
            if !(w[1] > w[0]) {
                return Err(Error::invalid(format!(
                    "params not strictly increasing at index {i}"
                )));
            }
        }
        if params.iter().any(|p| !p.is_finite()) || points.iter().any(|p| !p.is_finite()) {
            return Err(Error::invalid("non-finite sample"));
        }
        Ok(SampledCurve {
            params,
            points,
            kind,
            meta,
        })
    }

    pub fn params(&self) -> &[f64] {
        &self.params
    }

    pub fn points(&self) -> &[PlanarPoint] {
        &self.points
    }

    pub fn kind(&self) -> ParamKind {
        self.kind
    }

    pub fn meta(&self) -> Option<&CurveMeta> {
        self.meta.as_ref()
    }

    pub fn len(&self) -> usize {
        self.params.len()
    }

    pub fn is_empty(&self) -> bool {
        self.params.is_empty()
    }

    pub fn xs(&self) -> Vec<f64> {
        self.points.iter().map(|p| p.x).collect()
    }

    pub fn ys(&self) -> Vec<f64> {
        self.points.iter().map(|p| p.y).collect()
    }

    /// Parameter span `[first, last]`.
    pub fn span(&self) -> (f64, f64) {
        (self.params[0], *self.params.last().unwrap())
    }

    /// Whether the parameter grid is uniform to relative tolerance `tol`.
    pub fn is_uniform(&self, tol: f64) -> bool {
        let n = self.params.len();
        let h = (self.params[n - 1] - self.params[0]) / (n - 1) as f64;
        self.params
            .windows(2)
            .all(|w| ((w[1] - w[0]) - h).abs() <= tol * h.abs())
    }

    /// Grid step of a uniform curve.
    pub(crate) fn step(&self) -> f64 {
        let n = self.params.len();
        (self.params[n - 1] - self.params[0]) / (n - 1) as f64
    }

    /// Diagonal of the axis-aligned bounding box of the points.
    pub fn bbox_diagonal(&self) -> f64 {
        let mut min = (f64::INFINITY, f64::INFINITY);
        let mut max = (f64::NEG_INFINITY, f64::NEG_INFINITY);
        for p in &self.points {
            min.0 = min.0.min(p.x);
            min.1 = min.1.min(p.y);
            max.0 = max.0.max(p.x);
            max.1 = max.1.max(p.y);
        }
        ((max.0 - min.0).powi(2) + (max.1 - min.1).powi(2)).sqrt()
    }

    /// Same points with parameters shifted by `offset`; kind and meta kept.
    /// This is the translation ambiguity of the arc-length-style parameters.
    pub fn shift_params(&self, offset: f64) -> SampledCurve {
        SampledCurve {
            params: self.params.iter().map(|p| p + offset).collect(),
            points: self.points.clone(),
            kind: self.kind,
            meta: self.meta.clone(),
        }
    }

}

/// Per-sample curvature values in one of the three geometries, paired with
/// the parameter values where they were estimated.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CurvatureProfile {
    params: Vec<f64>,
    kappa: Vec<f64>,
    geometry: Geometry,
    kind: ParamKind,
}

impl CurvatureProfile {
    pub fn new(
        params: Vec<f64>,
        kappa: Vec<f64>,
        geometry: Geometry,
        kind: ParamKind,
    ) -> Result<Self> {
        if params.len() != kappa.len() {
            return Err(Error::invalid("params/kappa length mismatch"));
        }
        if params.is_empty() {
            return Err(Error::EmptyInput);
        }
        for w in params.windows(2) {
            if !(w[1] > w[0]) {
                return Err(Error::invalid("profile params not strictly increasing"));
            }
        }
        if params.iter().chain(kappa.iter()).any(|v| !v.is_finite()) {
            return Err(Error::invalid("non-finite profile value"));
        }
        Ok(CurvatureProfile {
            params,
            kappa,
            geometry,
            kind,
        })
    }

    pub fn params(&self) -> &[f64] {
        &self.params
    }

    pub fn kappa(&self) -> &[f64] {
        &self.kappa
    }

    pub fn geometry(&self) -> Geometry {
        self.geometry
    }

    pub fn kind(&self) -> ParamKind {
        self.kind
    }

    pub fn len(&self) -> usize {
        self.params.len()
    }

    pub fn is_empty(&self) -> bool {
        self.params.is_empty()
    }

    /// Restrict to the middle `fraction` of the parameter span.
    pub fn interior(&self, fraction: f64) -> CurvatureProfile {
        let (lo, hi) = (self.params[0], *self.params.last().unwrap());
        let margin = (hi - lo) * (1.0 - fraction) / 2.0;
        let (a, b) = (lo + margin, hi - margin);
        let mut params = Vec::new();
        let mut kappa = Vec::new();
        for (p, k) in self.params.iter().zip(&self.kappa) {
            if *p >= a && *p <= b {
                params.push(*p);
                kappa.push(*k);
            }
        }
        CurvatureProfile {
            params,
            kappa,
            geometry: self.geometry,
            kind: self.kind,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pts(n: usize) -> Vec<PlanarPoint> {
        (0..n).map(|i| PlanarPoint::new(i as f64, 0.0)).collect()
    }

    #[test]
    fn rejects_short_curves() {
        let err = SampledCurve::new(
            (0..5).map(|i| i as f64).collect(),
            pts(5),
            ParamKind::Arbitrary,
            None,
        )
        .unwrap_err();
        assert!(matches!(err, Error::TooFewSamples { got: 5, need: 9 }));
    }

    #[test]
    fn rejects_non_monotone_params() {
        let mut params: Vec<f64> = (0..10).map(|i| i as f64).collect();
        params[4] = params[5];
        let err =
            SampledCurve::new(params, pts(10), ParamKind::Arbitrary, None).unwrap_err();
        assert!(matches!(err, Error::InvalidInput { .. }));
    }

    #[test]
    fn rejects_non_finite_points() {
        let mut points = pts(10);
        points[3].y = f64::NAN;
        let err = SampledCurve::new(
            (0..10).map(|i| i as f64).collect(),
            points,
            ParamKind::Arbitrary,
            None,
        )
        .unwrap_err();
        assert!(matches!(err, Error::InvalidInput { .. }));
    }

    #[test]
    fn uniformity_check() {
        let c = SampledCurve::new(
            (0..10).map(|i| i as f64 * 0.25).collect(),
            pts(10),
            ParamKind::Arbitrary,
            None,
        )
        .unwrap();
        assert!(c.is_uniform(1e-9));
        let mut params: Vec<f64> = (0..10).map(|i| i as f64).collect();
        params[5] += 0.25;
        let c = SampledCurve::new(params, pts(10), ParamKind::Arbitrary, None).unwrap();
        assert!(!c.is_uniform(1e-9));
    }

    #[test]
    fn profile_interior_trims_both_sides() {
        let p = CurvatureProfile::new(
            (0..=10).map(|i| i as f64).collect(),
            vec![1.0; 11],
            Geometry::Euclidean,
            ParamKind::ArcLength,
        )
        .unwrap();
        let inner = p.interior(0.8);
        assert_eq!(inner.params().first(), Some(&1.0));
        assert_eq!(inner.params().last(), Some(&9.0));
    }
}
