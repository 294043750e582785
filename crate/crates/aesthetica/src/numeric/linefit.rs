// Copyright 2026 the Aesthetica Authors
// SPDX-License-Identifier: Apache-2.0 OR MIT

//! Ordinary and weighted least-squares line fits.

/// Result of fitting y = slope·x + intercept.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LineFit {
    pub slope: f64,
    pub intercept: f64,
    /// Coefficient of determination. When the response values are constant
    /// to within 1e-6 (no variance left to explain), this reports 1.
    pub r_squared: f64,
    /// Standard error of the slope estimate.
    pub slope_stderr: f64,
}

/// Threshold on the response standard deviation below which a fit is
/// considered degenerate-horizontal and r² reports 1. Set well below any
/// slope resolution the library promises (1e-3 over order-one spans) but
/// above the truncation-error floor of cascaded derivative estimates.
const FLAT_RESPONSE_SD: f64 = 1e-5;

pub fn fit_line(xs: &[f64], ys: &[f64]) -> LineFit {
    let w = vec![1.0; xs.len()];
    fit_line_weighted(xs, ys, &w)
}

pub fn fit_line_weighted(xs: &[f64], ys: &[f64], weights: &[f64]) -> LineFit {
    assert_eq!(xs.len(), ys.len());
    assert_eq!(xs.len(), weights.len());
    assert!(xs.len() >= 2);
    let wsum: f64 = weights.iter().sum();
    let xbar: f64 = xs.iter().zip(weights).map(|(x, w)| x * w).sum::<f64>() / wsum;
    let ybar: f64 = ys.iter().zip(weights).map(|(y, w)| y * w).sum::<f64>() / wsum;
    let mut sxx = 0.0;
    let mut sxy = 0.0;
    let mut syy = 0.0;
    for ((x, y), w) in xs.iter().zip(ys).zip(weights) {
        let dx = x - xbar;
        let dy = y - ybar;
        sxx += w * dx * dx;
        sxy += w * dx * dy;
        syy += w * dy * dy;
    }
    let slope = sxy / sxx;
    let intercept = ybar - slope * xbar;

    let mut ss_res = 0.0;
    for ((x, y), w) in xs.iter().zip(ys).zip(weights) {
        let r = y - (slope * x + intercept);
        ss_res += w * r * r;
    }
    let n = xs.len() as f64;
    let sd_y = (syy / wsum).sqrt();
    let r_squared = if sd_y <= FLAT_RESPONSE_SD {
        1.0
    } else {
        1.0 - ss_res / syy
    };
    // Generalized-least-squares convention: weights are 1/variance up to a
    // common scale σ², estimated from the weighted residuals.
    let sigma2 = if n > 2.0 { ss_res / (n - 2.0) } else { 0.0 };
    let slope_stderr = (sigma2 / sxx).sqrt();

    LineFit {
        slope,
        intercept,
        r_squared,
        slope_stderr,
    }
}
