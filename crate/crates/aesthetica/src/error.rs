// Copyright 2026 the Aesthetica Authors
// SPDX-License-Identifier: Apache-2.0 OR MIT

//! Error type shared by all curve operations.

use thiserror::Error;

/// Errors raised by curve construction, reparametrization, curvature
/// estimation, generation, reconstruction and classification.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A defining integrand changes sign, so the requested parameter is
    /// undefined on this domain.
    #[error("defining integrand changes sign near sample {index}: parameter undefined on this domain")]
    SignChange { index: usize },

    /// Integrand magnitude fell below the tolerance floor (e.g. a straight
    /// segment has no equiaffine parameter).
    #[error("integrand magnitude {value:e} below floor {floor:e} at sample {index}")]
    DegenerateIntegrand { index: usize, value: f64, floor: f64 },

    /// Fewer samples than the minimum stencil support.
    #[error("too few samples: got {got}, need at least {need}")]
    TooFewSamples { got: usize, need: usize },

    /// Curve speed |dγ/dt| below the floor.
    #[error("curve speed {value:e} below floor at sample {index}")]
    DegenerateSpeed { index: usize, value: f64 },

    /// Euclidean curvature crosses zero, so the similarity curvature is
    /// singular.
    #[error("euclidean curvature vanishes near sample {index}")]
    VanishingCurvature { index: usize },

    /// The Euclidean-formula route for equiaffine curvature needs κ > 0.
    #[error("negative euclidean curvature at sample {index}: the curvature-formula route needs κ > 0")]
    NegativeCurvatureOnEuclideanRoute { index: usize },

    /// A family specification violates its invariants.
    #[error("invalid family spec: {reason}")]
    InvalidSpec { reason: String },

    /// The requested range touches a singular point of the family.
    #[error("range touches a singularity: {reason}")]
    SingularRange { reason: String },

    /// κ is not strictly monotone, so the exponential-curvature parameter
    /// does not exist.
    #[error("euclidean curvature is not strictly monotone on this range")]
    NonMonotoneKappa,

    /// Numeric Wronskian drifted beyond tolerance; the integration step is
    /// too coarse.
    #[error("wronskian drift {drift:e} exceeds {tol:e}: step too coarse")]
    WronskianDrift { drift: f64, tol: f64 },

    /// The curvature-law domain contains a singular point.
    #[error("curvature-law domain contains a singularity: {reason}")]
    DomainContainsSingularity { reason: String },

    /// Not enough overlapping samples between the curve and its shift.
    #[error("insufficient overlap: {got} samples, need at least {need}")]
    InsufficientOverlap { got: usize, need: usize },

    /// The affine-fit normal equations are singular (collinear points).
    #[error("singular normal equations: condition number {cond:e}")]
    SingularNormalEquations { cond: f64 },

    /// The ESA-parameter transform needs strictly positive parameter values.
    #[error("nonpositive equiaffine parameter {value:e} at sample {index}")]
    NonpositiveU { index: usize, value: f64 },

    /// Speed data s_t is unavailable and cannot be recovered from the curve.
    #[error("speed data unavailable: {reason}")]
    MissingSpeedData { reason: String },

    /// The logarithmic curvature graph is undefined (κ_s ≈ 0, e.g. a circle).
    #[error("degenerate logarithmic curvature graph: curvature derivative vanishes")]
    DegenerateLCG,

    /// The equiaffine curvature changes sign, outside the ±(ξu+η)⁻² class.
    #[error("equiaffine curvature mixes signs ({pos} positive, {neg} negative samples)")]
    MixedSign { pos: usize, neg: usize },

    /// The curvature-law fit residual is too large to trust.
    #[error("curvature-law fit too poor: relative rmse {rmse:e}")]
    PoorFit { rmse: f64 },

    /// A conversion was requested at its pole.
    #[error("conversion undefined at pole input {value}")]
    PoleInput { value: f64 },

    /// Classification failed for an upstream reason.
    #[error("unclassifiable curve: {reason}")]
    Unclassifiable { reason: String },

    /// An operation received an empty input list.
    #[error("empty input")]
    EmptyInput,

    /// Catch-all for argument validation.
    #[error("invalid input: {reason}")]
    InvalidInput { reason: String },
}

impl Error {
    pub(crate) fn invalid(reason: impl Into<String>) -> Self {
        Error::InvalidInput {
            reason: reason.into(),
        }
    }

    /// Stable machine-readable tag, used by the CLI error JSON and the FFI
    /// status mapping.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::SignChange { .. } => "sign-change",
            Error::DegenerateIntegrand { .. } => "degenerate-integrand",
            Error::TooFewSamples { .. } => "too-few-samples",
            Error::DegenerateSpeed { .. } => "degenerate-speed",
            Error::VanishingCurvature { .. } => "vanishing-curvature",
            Error::NegativeCurvatureOnEuclideanRoute { .. } => {
                "negative-curvature-on-euclidean-route"
            }
            Error::InvalidSpec { .. } => "invalid-spec",
            Error::SingularRange { .. } => "singular-range",
            Error::NonMonotoneKappa => "non-monotone-kappa",
            Error::WronskianDrift { .. } => "wronskian-drift",
            Error::DomainContainsSingularity { .. } => "domain-contains-singularity",
            Error::InsufficientOverlap { .. } => "insufficient-overlap",
            Error::SingularNormalEquations { .. } => "singular-normal-equations",
            Error::NonpositiveU { .. } => "nonpositive-u",
            Error::MissingSpeedData { .. } => "missing-speed-data",
            Error::DegenerateLCG => "degenerate-lcg",
            Error::MixedSign { .. } => "mixed-sign",
            Error::PoorFit { .. } => "poor-fit",
            Error::PoleInput { .. } => "pole-input",
            Error::Unclassifiable { .. } => "unclassifiable",
            Error::EmptyInput => "empty-input",
            Error::InvalidInput { .. } => "invalid-input",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
