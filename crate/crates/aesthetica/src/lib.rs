// Copyright 2026 the Aesthetica Authors
// SPDX-License-Identifier: Apache-2.0 OR MIT

//! Planar curves in three Klein geometries.
//!
//! The crate represents discretely sampled planar curves, moves them between
//! the Euclidean arc length, the turning angle and the equiaffine arc
//! length, and estimates the curvature attached to each geometry. On top of
//! that sit generators for the classical curve families (logarithmic
//! spirals, log-aesthetic curves, conics, the ±(ξu)⁻² class and its graph
//! representatives), reconstruction of a curve from a prescribed equiaffine
//! curvature law, numerical self-affinity checks, and a classifier that
//! recovers which family a sampled curve belongs to.
//!
//! Everything is deterministic: summations are fixed-order, solvers are
//! fixed-step, and identical inputs give bit-identical outputs.

pub mod affinity;
pub mod classify;
pub mod curve;
pub mod error;
pub mod generators;
pub mod geometry;
pub mod io;
pub mod numeric;
pub mod plot;
pub mod repformula;
pub mod tolerances;

pub use crate::curve::{
    CurveMeta, CurvatureProfile, Geometry, ParamKind, PlanarPoint, Provenance, SampledCurve,
};
pub use crate::error::{Error, Result};
pub use crate::generators::{CurvatureSign, Family, FamilySpec};
pub use crate::geometry::{KappaSaRoute, ReparamOptions};
pub use crate::tolerances::Tolerances;

/// Library version string.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
