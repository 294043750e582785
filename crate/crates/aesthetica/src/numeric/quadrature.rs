// Copyright 2026 the Aesthetica Authors
// SPDX-License-Identifier: Apache-2.0 OR MIT

//! Cumulative integration on uniform grids.
//!
//! Composite Simpson carries the even-index values; odd indices add one
//! half-panel correction from the same local quadratic, so every node is
//! 4th-order accurate. Summation is left-to-right in a fixed order, making
//! results independent of any execution parallelism.

/// Cumulative integral F with F[0] = 0 over samples spaced `h`.
pub fn cumulative_uniform(values: &[f64], h: f64) -> Vec<f64> {
    let n = values.len();
    let mut out = vec![0.0; n];
    if n < 2 {
        return out;
    }
    if n == 2 {
        out[1] = 0.5 * h * (values[0] + values[1]);
        return out;
    }
    for i in 1..n {
        if i % 2 == 0 {
            out[i] = out[i - 2] + h / 3.0 * (values[i - 2] + 4.0 * values[i - 1] + values[i]);
        } else if i + 1 < n {
            out[i] = out[i - 1] + h / 12.0 * (5.0 * values[i - 1] + 8.0 * values[i] - values[i + 1]);
        } else {
            out[i] =
                out[i - 1] + h / 12.0 * (-values[i - 2] + 8.0 * values[i - 1] + 5.0 * values[i]);
        }
    }
    out
}
