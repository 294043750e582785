// Copyright 2026 the Aesthetica Authors
// SPDX-License-Identifier: Apache-2.0 OR MIT

//! Cubic spline interpolation with not-a-knot end conditions.
//!
//! Not-a-knot keeps O(h⁴) accuracy up to the boundary, which the residual
//! budgets of the self-affinity checks need; natural end conditions would
//! leave an O(h²) boundary layer.

use crate::error::{Error, Result};

/// A cubic spline through `(x_i, y_i)` with not-a-knot end conditions.
#[derive(Debug, Clone)]
pub struct CubicSpline {
    xs: Vec<f64>,
    ys: Vec<f64>,
    /// Second derivatives at the knots.
    m: Vec<f64>,
}

impl CubicSpline {
    /// Fit a spline through strictly increasing knots. Needs at least 4.
    pub fn fit(xs: &[f64], ys: &[f64]) -> Result<CubicSpline> {
        let n = xs.len();
        if n < 4 {
            return Err(Error::TooFewSamples { got: n, need: 4 });
        }
        if ys.len() != n {
            return Err(Error::invalid("spline knot/value length mismatch"));
        }
        for w in xs.windows(2) {
            if !(w[1] > w[0]) {
                return Err(Error::invalid("spline knots not strictly increasing"));
            }
        }

        let h: Vec<f64> = xs.windows(2).map(|w| w[1] - w[0]).collect();
        let div: Vec<f64> = (0..n - 1).map(|i| (ys[i + 1] - ys[i]) / h[i]).collect();

        // Unknowns m[1..n-1]; m[0] and m[n-1] are eliminated through the
        // not-a-knot conditions (third derivative continuous at x1, x_{n-2}):
        //   m0 = (1 + r0) m1 - r0 m2,          r0 = h0/h1
        //   m_{n-1} = (1 + r1) m_{n-2} - r1 m_{n-3},  r1 = h_{n-2}/h_{n-3}
        let k = n - 2;
        let mut sub = vec![0.0; k];
        let mut diag = vec![0.0; k];
        let mut sup = vec![0.0; k];
        let mut rhs = vec![0.0; k];
        for (j, i) in (1..n - 1).enumerate() {
            sub[j] = h[i - 1] / 6.0;
            diag[j] = (h[i - 1] + h[i]) / 3.0;
            sup[j] = h[i] / 6.0;
            rhs[j] = div[i] - div[i - 1];
        }
        let r0 = h[0] / h[1];
        diag[0] += sub[0] * (1.0 + r0);
        sup[0] -= sub[0] * r0;
        sub[0] = 0.0;
        let r1 = h[n - 2] / h[n - 3];
        diag[k - 1] += sup[k - 1] * (1.0 + r1);
        sub[k - 1] -= sup[k - 1] * r1;
        sup[k - 1] = 0.0;

        let inner = solve_tridiagonal(&sub, &mut diag, &sup, &mut rhs)?;

        let mut m = vec![0.0; n];
        m[1..n - 1].copy_from_slice(&inner);
        m[0] = (1.0 + r0) * m[1] - r0 * m[2];
        m[n - 1] = (1.0 + r1) * m[n - 2] - r1 * m[n - 3];

        Ok(CubicSpline {
            xs: xs.to_vec(),
            ys: ys.to_vec(),
            m,
        })
    }

    /// Evaluate at `x`. Outside the knot span the end cubics extrapolate.
    pub fn eval(&self, x: f64) -> f64 {
        let i = self.segment(x);
        let (x0, x1) = (self.xs[i], self.xs[i + 1]);
        let h = x1 - x0;
        let a = (x1 - x) / h;
        let b = (x - x0) / h;
        a * self.ys[i]
            + b * self.ys[i + 1]
            + ((a * a * a - a) * self.m[i] + (b * b * b - b) * self.m[i + 1]) * h * h / 6.0
    }

    fn segment(&self, x: f64) -> usize {
        let n = self.xs.len();
        let idx = self.xs.partition_point(|&k| k <= x);
        idx.clamp(1, n - 1) - 1
    }
}

/// Thomas algorithm. `diag` and `rhs` are consumed as scratch space.
fn solve_tridiagonal(
    sub: &[f64],
    diag: &mut [f64],
    sup: &[f64],
    rhs: &mut [f64],
) -> Result<Vec<f64>> {
    let n = diag.len();
    for i in 1..n {
        if diag[i - 1].abs() < 1e-300 {
            return Err(Error::invalid("singular tridiagonal system"));
        }
        let w = sub[i] / diag[i - 1];
        diag[i] -= w * sup[i - 1];
        rhs[i] -= w * rhs[i - 1];
    }
    if diag[n - 1].abs() < 1e-300 {
        return Err(Error::invalid("singular tridiagonal system"));
    }
    let mut x = vec![0.0; n];
    x[n - 1] = rhs[n - 1] / diag[n - 1];
    for i in (0..n - 1).rev() {
        x[i] = (rhs[i] - sup[i] * x[i + 1]) / diag[i];
    }
    Ok(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn reproduces_cubics_exactly() {
        // Not-a-knot is exact for any single cubic.
        let f = |x: f64| 2.0 * x * x * x - x * x + 3.0 * x - 5.0;
        let xs: Vec<f64> = (0..12).map(|i| i as f64 * 0.3).collect();
        let ys: Vec<f64> = xs.iter().map(|&x| f(x)).collect();
        let s = CubicSpline::fit(&xs, &ys).unwrap();
        for k in 0..100 {
            let x = 0.033 * k as f64;
            assert_relative_eq!(s.eval(x), f(x), max_relative = 1e-12, epsilon = 1e-12);
        }
    }

    #[test]
    fn interpolates_at_knots() {
        let xs: Vec<f64> = (0..10).map(|i| (i as f64).sqrt() + i as f64).collect();
        let ys: Vec<f64> = xs.iter().map(|&x| x.sin()).collect();
        let s = CubicSpline::fit(&xs, &ys).unwrap();
        for (x, y) in xs.iter().zip(&ys) {
            assert_relative_eq!(s.eval(*x), *y, epsilon = 1e-13);
        }
    }

    #[test]
    fn fourth_order_on_smooth_data() {
        // Halving h should shrink the max error by about 16x, including
        // near the boundary.
        let err_at = |n: usize| {
            let xs: Vec<f64> = (0..n).map(|i| i as f64 / (n - 1) as f64).collect();
            let ys: Vec<f64> = xs.iter().map(|&x| (3.0 * x).sin()).collect();
            let s = CubicSpline::fit(&xs, &ys).unwrap();
            (0..1000)
                .map(|k| {
                    let x = k as f64 / 999.0;
                    (s.eval(x) - (3.0 * x).sin()).abs()
                })
                .fold(0.0, f64::max)
        };
        let (e1, e2) = (err_at(33), err_at(65));
        assert!(e2 < e1 / 10.0, "e1 = {e1:e}, e2 = {e2:e}");
    }

    #[test]
    fn needs_four_knots() {
        let xs = [0.0, 1.0, 2.0];
        let ys = [0.0, 1.0, 4.0];
        assert!(CubicSpline::fit(&xs, &ys).is_err());
    }
}
