// Copyright 2026 the Aesthetica Authors
// SPDX-License-Identifier: Apache-2.0 OR MIT

//! Fixed-step classical Runge-Kutta. No adaptivity: identical inputs give
//! bit-identical trajectories.

/// Integrate y' = f(t, y) through the strictly increasing `grid`, taking
/// `substeps` equal RK4 steps inside each grid interval. Returns the state
/// at every grid point; the first entry is `y0`.
pub fn integrate<const N: usize>(
    f: impl Fn(f64, &[f64; N]) -> [f64; N],
    y0: [f64; N],
    grid: &[f64],
    substeps: usize,
) -> Vec<[f64; N]> {
    assert!(substeps >= 1);
    let mut out = Vec::with_capacity(grid.len());
    let mut y = y0;
    out.push(y);
    for w in grid.windows(2) {
        let h = (w[1] - w[0]) / substeps as f64;
        let mut t = w[0];
        for _ in 0..substeps {
            y = step(&f, t, &y, h);
            t += h;
        }
        out.push(y);
    }
    out
}

fn step<const N: usize>(
    f: &impl Fn(f64, &[f64; N]) -> [f64; N],
    t: f64,
    y: &[f64; N],
    h: f64,
) -> [f64; N] {
    let k1 = f(t, y);
    let k2 = f(t + 0.5 * h, &add_scaled(y, &k1, 0.5 * h));
    let k3 = f(t + 0.5 * h, &add_scaled(y, &k2, 0.5 * h));
    let k4 = f(t + h, &add_scaled(y, &k3, h));
    let mut out = *y;
    for i in 0..N {
        out[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    }
    out
}

fn add_scaled<const N: usize>(y: &[f64; N], k: &[f64; N], s: f64) -> [f64; N] {
    let mut out = *y;
    for i in 0..N {
        out[i] += s * k[i];
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn harmonic_oscillator() {
        let grid: Vec<f64> = (0..=100).map(|i| i as f64 * 0.02).collect();
        let states = integrate(|_, y: &[f64; 2]| [y[1], -y[0]], [1.0, 0.0], &grid, 4);
        for (t, s) in grid.iter().zip(&states) {
            assert_relative_eq!(s[0], t.cos(), epsilon = 1e-10);
            assert_relative_eq!(s[1], -t.sin(), epsilon = 1e-10);
        }
    }

    #[test]
    fn fourth_order_convergence() {
        let end_err = |substeps: usize| {
            let grid = [0.0, 1.0];
            let states = integrate(|t, _: &[f64; 1]| [(2.0 * t).exp()], [0.0], &grid, substeps);
            (states[1][0] - (2f64.exp() - 1.0) / 2.0).abs()
        };
        assert!(end_err(20) < end_err(10) / 12.0);
    }
}
