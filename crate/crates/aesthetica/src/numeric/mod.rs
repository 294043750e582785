// Copyright 2026 the Aesthetica Authors
// SPDX-License-Identifier: Apache-2.0 OR MIT

//! Deterministic numerical kernels: spline resampling, stencil and windowed
//! derivative estimation, cumulative quadrature, fixed-step RK4 and line
//! fits. Everything here sums in a fixed order.

pub mod derivative;
pub mod linefit;
pub mod quadrature;
pub mod rk4;
pub mod spline;

pub use derivative::{deriv1, deriv2, deriv3, noise_sigma, poly_derivative, poly_derivative_with_norms};
pub use linefit::{fit_line, fit_line_weighted, LineFit};
pub use quadrature::cumulative_uniform;
pub use spline::CubicSpline;
