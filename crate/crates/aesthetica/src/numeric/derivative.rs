// Copyright 2026 the Aesthetica Authors
// SPDX-License-Identifier: Apache-2.0 OR MIT

//! Derivative estimation on uniform grids by local polynomial least squares.
//!
//! With the default 5-point window the estimators coincide with the classical
//! stencils: 4th-order central differences for first and second derivatives
//! (degree-4 fit on 5 points is interpolation) and the 2nd-order central
//! stencil [-1/2, 1, 0, -1, 1/2]/h³ for third derivatives (degree-3 fit).
//! Wider windows trade bias for variance on noisy samples; near the ends the
//! window shifts one-sided, keeping the same polynomial exactness.

/// First derivative, degree-4 fit, 5-point window (4th order).
pub fn deriv1(values: &[f64], h: f64) -> Vec<f64> {
    poly_derivative(values, h, 5, 4, 1)
}

/// Second derivative, degree-4 fit, 5-point window (4th order).
pub fn deriv2(values: &[f64], h: f64) -> Vec<f64> {
    poly_derivative(values, h, 5, 4, 2)
}

/// Third derivative, degree-3 fit, 5-point window (2nd order).
pub fn deriv3(values: &[f64], h: f64) -> Vec<f64> {
    poly_derivative(values, h, 5, 3, 3)
}

/// `order`-th derivative from a degree-`degree` local fit over `window`
/// samples. `window` must be odd, `order <= degree < window`.
pub fn poly_derivative(
    values: &[f64],
    h: f64,
    window: usize,
    degree: usize,
    order: usize,
) -> Vec<f64> {
    poly_derivative_with_norms(values, h, window, degree, order).0
}

/// As [`poly_derivative`], also returning each sample's estimator-kernel L2
/// norm: multiplied by the per-sample noise σ it gives the standard
/// deviation of the estimate. The one-sided boundary kernels carry much
/// larger norms than the interior one.
pub fn poly_derivative_with_norms(
    values: &[f64],
    h: f64,
    window: usize,
    degree: usize,
    order: usize,
) -> (Vec<f64>, Vec<f64>) {
    let n = values.len();
    assert!(window % 2 == 1 && window >= 3, "window must be odd and >= 3");
    assert!(order <= degree && degree < window);
    assert!(n >= window, "need at least `window` samples");
    let m = (window - 1) / 2;

    let mut out = vec![0.0; n];
    let mut norms = vec![0.0; n];
    let l2 = |kernel: &[f64]| kernel.iter().map(|w| w * w).sum::<f64>().sqrt();

    // Interior: one symmetric kernel, applied as a convolution.
    let kernel = ls_kernel(&offsets_centered(window), m as f64, degree, order, h);
    let interior_norm = l2(&kernel);
    for i in m..n - m {
        let mut acc = 0.0;
        for (j, w) in kernel.iter().enumerate() {
            acc += w * values[i - m + j];
        }
        out[i] = acc;
        norms[i] = interior_norm;
    }

    // Boundaries: shifted windows, one kernel per position.
    for i in 0..m.min(n) {
        let offs: Vec<f64> = (0..window).map(|j| j as f64 - i as f64).collect();
        let kernel = ls_kernel(&offs, m as f64, degree, order, h);
        out[i] = kernel.iter().zip(values).map(|(w, v)| w * v).sum();
        norms[i] = l2(&kernel);
    }
    for i in (n - m).max(m)..n {
        let base = n - window;
        let offs: Vec<f64> = (0..window).map(|j| (base + j) as f64 - i as f64).collect();
        let kernel = ls_kernel(&offs, m as f64, degree, order, h);
        out[i] = kernel
            .iter()
            .zip(&values[base..])
            .map(|(w, v)| w * v)
            .sum();
        norms[i] = l2(&kernel);
    }
    (out, norms)
}

/// Offsets -m..=m for a centered window.
fn offsets_centered(window: usize) -> Vec<f64> {
    let m = ((window - 1) / 2) as f64;
    (0..window).map(|j| j as f64 - m).collect()
}

/// Weights w such that sum w_j y_j estimates the `order`-th derivative at
/// offset 0 from samples at `offs` (in grid steps). `scale` normalizes the
/// offsets for conditioning.
fn ls_kernel(offs: &[f64], scale: f64, degree: usize, order: usize, h: f64) -> Vec<f64> {
    let p = degree + 1;
    // Normal matrix G[q][r] = sum z^(q+r), z = off/scale.
    let zs: Vec<f64> = offs.iter().map(|o| o / scale).collect();
    let mut g = vec![vec![0.0; p]; p];
    for z in &zs {
        let mut zq = 1.0;
        let mut pows = Vec::with_capacity(p);
        for _ in 0..p {
            pows.push(zq);
            zq *= z;
        }
        for q in 0..p {
            for r in 0..p {
                g[q][r] += pows[q] * pows[r];
            }
        }
    }
    // Solve G c = e_order.
    let mut rhs = vec![0.0; p];
    rhs[order] = 1.0;
    let c = solve_dense(&mut g, &mut rhs);
    // w_j = sum_q c_q z_j^q, times order!/(scale*h)^order.
    let mut fact = 1.0;
    for q in 1..=order {
        fact *= q as f64;
    }
    let norm = fact / (scale * h).powi(order as i32);
    zs.iter()
        .map(|z| {
            let mut zq = 1.0;
            let mut acc = 0.0;
            for cq in &c {
                acc += cq * zq;
                zq *= z;
            }
            acc * norm
        })
        .collect()
}

/// Gaussian elimination with partial pivoting on a small dense system.
fn solve_dense(a: &mut [Vec<f64>], b: &mut [f64]) -> Vec<f64> {
    let n = b.len();
    for col in 0..n {
        let piv = (col..n)
            .max_by(|&i, &j| a[i][col].abs().total_cmp(&a[j][col].abs()))
            .unwrap();
        a.swap(col, piv);
        b.swap(col, piv);
        for row in col + 1..n {
            let f = a[row][col] / a[col][col];
            for k in col..n {
                a[row][k] -= f * a[col][k];
            }
            b[row] -= f * b[col];
        }
    }
    let mut x = vec![0.0; n];
    for row in (0..n).rev() {
        let mut acc = b[row];
        for k in row + 1..n {
            acc -= a[row][k] * x[k];
        }
        x[row] = acc / a[row][row];
    }
    x
}

/// L2 norm of the interior estimator kernel: multiplying it by the
/// per-sample noise σ gives the standard deviation of the derivative
/// estimate under iid noise.
pub fn kernel_l2(h: f64, window: usize, degree: usize, order: usize) -> f64 {
    let kernel = ls_kernel(
        &offsets_centered(window),
        ((window - 1) / 2) as f64,
        degree,
        order,
        h,
    );
    kernel.iter().map(|w| w * w).sum::<f64>().sqrt()
}

/// Robust per-sample noise scale from fourth differences. Smooth signal
/// contributes O(h⁴f⁗), so on dense smooth data this returns ~0; iid noise
/// of standard deviation σ returns ~σ.
pub fn noise_sigma(values: &[f64]) -> f64 {
    if values.len() < 8 {
        return 0.0;
    }
    let mut d4: Vec<f64> = values
        .windows(5)
        .map(|w| (w[0] - 4.0 * w[1] + 6.0 * w[2] - 4.0 * w[3] + w[4]).abs())
        .collect();
    d4.sort_by(f64::total_cmp);
    let med = d4[d4.len() / 2];
    // |N(0, sigma*sqrt(70))| has median 0.6745*sigma*sqrt(70).
    med / (0.6745 * 70f64.sqrt())
}
