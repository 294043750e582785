// Copyright 2026 the Aesthetica Authors
// SPDX-License-Identifier: Apache-2.0 OR MIT

//! Reconstruction of a curve from a prescribed equiaffine curvature law.
//!
//! A Wronskian-normalized solution basis (f, g) of z_uu + κ(u)z = 0 yields
//! the curve γ(u) = γ(u₀) + ∫(f + ig)du, with det(γ_u, γ_uu) = W(f, g) = 1
//! by construction. Arbitrary tabulated laws are integrated by fixed-step
//! RK4; the ±(ξu)⁻² Euler law uses its closed-form basis.

use crate::curve::{CurvatureProfile, ParamKind, PlanarPoint, SampledCurve};
use crate::error::{Error, Result};
use crate::generators::{euler_basis_point, euler_regime, CurvatureSign, EulerRegime};
use crate::numeric::{cumulative_uniform, rk4, CubicSpline};

/// Largest |W − 1| a basis may carry at any sample.
pub const WRONSKIAN_TOL: f64 = 1e-8;

/// A solution basis of z_uu + κ(u)z = 0 sampled on a uniform u grid, with
/// f·g_u − g·f_u = 1 at every sample.
#[derive(Debug, Clone, PartialEq)]
pub struct BasisPair {
    params: Vec<f64>,
    f: Vec<f64>,
    g: Vec<f64>,
    f_u: Vec<f64>,
    g_u: Vec<f64>,
}

impl BasisPair {
    pub fn new(
        params: Vec<f64>,
        f: Vec<f64>,
        g: Vec<f64>,
        f_u: Vec<f64>,
        g_u: Vec<f64>,
    ) -> Result<BasisPair> {
        let n = params.len();
        if n < crate::curve::MIN_SAMPLES {
            return Err(Error::TooFewSamples {
                got: n,
                need: crate::curve::MIN_SAMPLES,
            });
        }
        if [f.len(), g.len(), f_u.len(), g_u.len()].iter().any(|l| *l != n) {
            return Err(Error::invalid("basis array length mismatch"));
        }
        for w in params.windows(2) {
            if !(w[1] > w[0]) {
                return Err(Error::invalid("basis params not strictly increasing"));
            }
        }
        let mut drift = 0.0f64;
        for i in 0..n {
            drift = drift.max((f[i] * g_u[i] - g[i] * f_u[i] - 1.0).abs());
        }
        if drift > WRONSKIAN_TOL {
            return Err(Error::WronskianDrift {
                drift,
                tol: WRONSKIAN_TOL,
            });
        }
        Ok(BasisPair {
            params,
            f,
            g,
            f_u,
            g_u,
        })
    }

    pub fn params(&self) -> &[f64] {
        &self.params
    }

    pub fn f(&self) -> &[f64] {
        &self.f
    }

    pub fn g(&self) -> &[f64] {
        &self.g
    }

    pub fn f_u(&self) -> &[f64] {
        &self.f_u
    }

    pub fn g_u(&self) -> &[f64] {
        &self.g_u
    }

    pub fn len(&self) -> usize {
        self.params.len()
    }

    pub fn is_empty(&self) -> bool {
        self.params.is_empty()
    }

    /// Largest |W − 1| over the samples.
    pub fn wronskian_drift(&self) -> f64 {
        (0..self.len())
            .map(|i| (self.f[i] * self.g_u[i] - self.g[i] * self.f_u[i] - 1.0).abs())
            .fold(0.0, f64::max)
    }
}

/// Source of a curvature law κ(u).
#[derive(Debug, Clone, PartialEq)]
pub enum LawKind {
    /// Interpolated from a sampled equiaffine curvature profile.
    Tabulated(CurvatureProfile),
    /// κ(u) = ±(ξu)⁻².
    EulerLaw { sign: CurvatureSign, xi: f64 },
}

/// A curvature law over a solution domain.
#[derive(Debug, Clone, PartialEq)]
pub struct CurvatureLaw {
    pub kind: LawKind,
    /// Domain [u_lo, u_hi] the basis is solved on.
    pub domain: (f64, f64),
}

impl CurvatureLaw {
    pub fn tabulated(profile: CurvatureProfile, domain: (f64, f64)) -> Result<CurvatureLaw> {
        let law = CurvatureLaw {
            kind: LawKind::Tabulated(profile),
            domain,
        };
        law.validate()?;
        Ok(law)
    }

    pub fn euler(sign: CurvatureSign, xi: f64, domain: (f64, f64)) -> Result<CurvatureLaw> {
        let law = CurvatureLaw {
            kind: LawKind::EulerLaw { sign, xi },
            domain,
        };
        law.validate()?;
        Ok(law)
    }

    /// Constant κ over a domain.
    pub fn constant(kappa: f64, domain: (f64, f64)) -> Result<CurvatureLaw> {
        let (lo, hi) = domain;
        let n = crate::curve::MIN_SAMPLES;
        let params: Vec<f64> = (0..n)
            .map(|i| lo + (hi - lo) * i as f64 / (n - 1) as f64)
            .collect();
        let profile = CurvatureProfile::new(
            params,
            vec![kappa; n],
            crate::curve::Geometry::Equiaffine,
            ParamKind::Equiaffine,
        )?;
        CurvatureLaw::tabulated(profile, domain)
    }

    pub fn validate(&self) -> Result<()> {
        let (lo, hi) = self.domain;
        if !(lo < hi) || !lo.is_finite() || !hi.is_finite() {
            return Err(Error::invalid("law domain must be finite with lo < hi"));
        }
        match &self.kind {
            LawKind::EulerLaw { xi, .. } => {
                if *xi == 0.0 {
                    return Err(Error::InvalidSpec {
                        reason: "euler law needs ξ != 0".into(),
                    });
                }
                if lo <= 0.0 {
                    return Err(Error::DomainContainsSingularity {
                        reason: "±(ξu)⁻² is singular at u = 0; use a positive domain".into(),
                    });
                }
            }
            LawKind::Tabulated(profile) => {
                let (plo, phi) = (profile.params()[0], *profile.params().last().unwrap());
                if lo < plo - 1e-12 || hi > phi + 1e-12 {
                    return Err(Error::invalid(format!(
                        "law domain [{lo}, {hi}] outside tabulated support [{plo}, {phi}]"
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Solve z_uu + κ(u)z = 0 for the basis with (f, f_u) = (1, 0) and
/// (g, g_u) = (0, 1) at u_lo (tabulated laws; the Wronskian is then 1
/// analytically and monitored numerically), or return the closed-form
/// normalized basis of the Euler law.
pub fn solve_basis(law: &CurvatureLaw, n: usize) -> Result<BasisPair> {
    law.validate()?;
    if n < crate::curve::MIN_SAMPLES {
        return Err(Error::TooFewSamples {
            got: n,
            need: crate::curve::MIN_SAMPLES,
        });
    }
    let (lo, hi) = law.domain;
    let grid: Vec<f64> = (0..n)
        .map(|i| {
            if i == n - 1 {
                hi
            } else {
                lo + (hi - lo) * i as f64 / (n - 1) as f64
            }
        })
        .collect();

    match &law.kind {
        LawKind::Tabulated(profile) => {
            let interp = CubicSpline::fit(profile.params(), profile.kappa())?;
            let rhs = |u: f64, y: &[f64; 4]| {
                let kappa = interp.eval(u);
                [y[1], -kappa * y[0], y[3], -kappa * y[2]]
            };
            let states = rk4::integrate(rhs, [1.0, 0.0, 0.0, 1.0], &grid, 8);
            let f: Vec<f64> = states.iter().map(|s| s[0]).collect();
            let f_u: Vec<f64> = states.iter().map(|s| s[1]).collect();
            let g: Vec<f64> = states.iter().map(|s| s[2]).collect();
            let g_u: Vec<f64> = states.iter().map(|s| s[3]).collect();
            BasisPair::new(grid, f, g, f_u, g_u)
        }
        LawKind::EulerLaw { sign, xi } => {
            let mut f = Vec::with_capacity(n);
            let mut g = Vec::with_capacity(n);
            let mut f_u = Vec::with_capacity(n);
            let mut g_u = Vec::with_capacity(n);
            for &u in &grid {
                let (fv, gv, fuv, guv) = euler_basis_point(*sign, *xi, u);
                f.push(fv);
                g.push(gv);
                f_u.push(fuv);
                g_u.push(guv);
            }
            BasisPair::new(grid, f, g, f_u, g_u)
        }
    }
}

/// γ(u) = base + (∫f du, ∫g du) by composite Simpson. The result is in
/// equiaffine parametrization with det(γ_u, γ_uu) = 1 by construction.
pub fn reconstruct(basis: &BasisPair, base: PlanarPoint) -> Result<SampledCurve> {
    let h = (basis.params[basis.len() - 1] - basis.params[0]) / (basis.len() - 1) as f64;
    let xs = cumulative_uniform(&basis.f, h);
    let ys = cumulative_uniform(&basis.g, h);
    let points: Vec<PlanarPoint> = xs
        .iter()
        .zip(&ys)
        .map(|(x, y)| PlanarPoint::new(base.x + x, base.y + y))
        .collect();
    SampledCurve::new(basis.params.clone(), points, ParamKind::Equiaffine, None)
}

/// Regime and ω of the Euler law (convenience re-export).
pub fn euler_omega(sign: CurvatureSign, xi: f64) -> (EulerRegime, f64) {
    euler_regime(sign, xi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{esa_class_kappa, generate, Family, FamilySpec};
    use crate::geometry::{equiaffine_curvature, KappaSaRoute};
    use approx::assert_relative_eq;

    #[test]
    fn zero_curvature_gives_affine_basis() {
        let law = CurvatureLaw::constant(0.0, (0.0, 2.0)).unwrap();
        let basis = solve_basis(&law, 101).unwrap();
        for (i, u) in basis.params().iter().enumerate() {
            assert_relative_eq!(basis.f()[i], 1.0, epsilon = 1e-12);
            assert_relative_eq!(basis.g()[i], *u, epsilon = 1e-12);
        }
        assert!(basis.wronskian_drift() < 1e-12);
    }

    #[test]
    fn unit_curvature_gives_trig_basis() {
        let law = CurvatureLaw::constant(1.0, (0.0, 6.0)).unwrap();
        let basis = solve_basis(&law, 601).unwrap();
        for (i, u) in basis.params().iter().enumerate() {
            assert_relative_eq!(basis.f()[i], u.cos(), epsilon = 1e-9);
            assert_relative_eq!(basis.g()[i], u.sin(), epsilon = 1e-9);
        }
    }

    #[test]
    fn euler_law_regime_and_omega() {
        // Plus, ξ = 1: oscillatory with ω = √(1 − 1/4) = √3/2.
        let (regime, omega) = euler_omega(CurvatureSign::Plus, 1.0);
        assert_eq!(regime, EulerRegime::Oscillatory);
        assert_relative_eq!(omega, 0.8660254037844386, epsilon = 1e-15);
        // Minus, ξ = 3: power pair with ω = √(1/4 + 1/9).
        let (regime, omega) = euler_omega(CurvatureSign::Minus, 3.0);
        assert_eq!(regime, EulerRegime::PowerPair);
        assert_relative_eq!(omega, (0.25f64 + 1.0 / 9.0).sqrt(), epsilon = 1e-15);
    }

    #[test]
    fn reconstruct_zero_law_is_parabola() {
        let law = CurvatureLaw::constant(0.0, (0.0, 2.0)).unwrap();
        let basis = solve_basis(&law, 201).unwrap();
        let curve = reconstruct(&basis, PlanarPoint::ORIGIN).unwrap();
        for (u, p) in curve.params().iter().zip(curve.points()) {
            assert_relative_eq!(p.x, *u, epsilon = 1e-10);
            assert_relative_eq!(p.y, u * u / 2.0, epsilon = 1e-10);
        }
        let profile = equiaffine_curvature(&curve, KappaSaRoute::Equiaffine).unwrap();
        for k in profile.kappa() {
            assert!(k.abs() < 1e-8);
        }
    }

    #[test]
    fn reconstruct_unit_law_is_circle() {
        // Oracle: ∫(cos, sin) = (sin u, 1 - cos u).
        let law = CurvatureLaw::constant(1.0, (0.0, 6.0)).unwrap();
        let basis = solve_basis(&law, 601).unwrap();
        let curve = reconstruct(&basis, PlanarPoint::new(2.0, -1.0)).unwrap();
        for (u, p) in curve.params().iter().zip(curve.points()) {
            assert_relative_eq!(p.x, 2.0 + u.sin(), epsilon = 1e-8);
            assert_relative_eq!(p.y, -1.0 + 1.0 - u.cos(), epsilon = 1e-8);
        }
    }

    #[test]
    fn euler_law_reconstruction_matches_closed_form() {
        // The generated ±(ξu)⁻² curves are the exact antiderivatives of the
        // same basis, so reconstruction must reproduce them up to the base
        // point, within quadrature error.
        for (sign, xi) in [
            (CurvatureSign::Plus, 3.0),
            (CurvatureSign::Plus, 1.0),
            (CurvatureSign::Minus, 3.0),
        ] {
            let law = CurvatureLaw::euler(sign, xi, (0.5, 4.0)).unwrap();
            let basis = solve_basis(&law, 1001).unwrap();
            let curve = reconstruct(&basis, PlanarPoint::ORIGIN).unwrap();
            let spec = FamilySpec::new(Family::EsaClass { sign, xi }, (0.5, 4.0), 1001).unwrap();
            let reference = generate(&spec).unwrap();
            let (bx, by) = (reference.points()[0].x, reference.points()[0].y);
            let mut max_dev = 0.0f64;
            for (p, q) in curve.points().iter().zip(reference.points()) {
                max_dev = max_dev.max((p.x - (q.x - bx)).abs().max((p.y - (q.y - by)).abs()));
            }
            assert!(max_dev < 1e-6, "max deviation {max_dev:e}");
        }
    }

    #[test]
    fn closed_form_and_numeric_basis_agree() {
        // Tabulate the Euler law, integrate numerically, then match initial
        // conditions: f_cf = f_cf(u0)·f_num + f_cf'(u0)·g_num.
        let (sign, xi) = (CurvatureSign::Minus, 3.0);
        let (lo, hi) = (0.5, 4.0);
        let n = 1001;
        let params: Vec<f64> = (0..n)
            .map(|i| lo + (hi - lo) * i as f64 / (n - 1) as f64)
            .collect();
        let kappa: Vec<f64> = params.iter().map(|&u| esa_class_kappa(sign, xi, u)).collect();
        let profile = CurvatureProfile::new(
            params,
            kappa,
            crate::curve::Geometry::Equiaffine,
            ParamKind::Equiaffine,
        )
        .unwrap();
        let tab = CurvatureLaw::tabulated(profile, (lo, hi)).unwrap();
        let numeric = solve_basis(&tab, n).unwrap();
        let closed = solve_basis(&CurvatureLaw::euler(sign, xi, (lo, hi)).unwrap(), n).unwrap();
        let (f0, fu0) = (closed.f()[0], closed.f_u()[0]);
        let (g0, gu0) = (closed.g()[0], closed.g_u()[0]);
        for i in 0..n {
            let f_expect = f0 * numeric.f()[i] + fu0 * numeric.g()[i];
            let g_expect = g0 * numeric.f()[i] + gu0 * numeric.g()[i];
            assert_relative_eq!(closed.f()[i], f_expect, epsilon = 1e-6, max_relative = 1e-6);
            assert_relative_eq!(closed.g()[i], g_expect, epsilon = 1e-6, max_relative = 1e-6);
        }
    }

    #[test]
    fn wronskian_drift_stays_tiny() {
        // |W - 1| < 1e-8 for steps at or below range/1000 on a smooth law.
        let profile_params: Vec<f64> = (0..2001).map(|i| 0.5 + 3.5 * i as f64 / 2000.0).collect();
        let kappa: Vec<f64> = profile_params.iter().map(|&u| 1.0 / (u * u)).collect();
        let profile = CurvatureProfile::new(
            profile_params,
            kappa,
            crate::curve::Geometry::Equiaffine,
            ParamKind::Equiaffine,
        )
        .unwrap();
        let tab = CurvatureLaw::tabulated(profile, (0.5, 4.0)).unwrap();
        let basis = solve_basis(&tab, 1001).unwrap();
        assert!(
            basis.wronskian_drift() < 1e-8,
            "drift {:e}",
            basis.wronskian_drift()
        );
    }

    #[test]
    fn reconstructed_curves_have_unit_determinant() {
        let law = CurvatureLaw::euler(CurvatureSign::Plus, 3.0, (0.5, 4.0)).unwrap();
        let basis = solve_basis(&law, 1001).unwrap();
        let curve = reconstruct(&basis, PlanarPoint::ORIGIN).unwrap();
        let h = curve.params()[1] - curve.params()[0];
        let xs = curve.xs();
        let ys = curve.ys();
        let x1 = crate::numeric::deriv1(&xs, h);
        let y1 = crate::numeric::deriv1(&ys, h);
        let x2 = crate::numeric::deriv2(&xs, h);
        let y2 = crate::numeric::deriv2(&ys, h);
        for i in 4..curve.len() - 4 {
            assert_relative_eq!(x1[i] * y2[i] - y1[i] * x2[i], 1.0, epsilon = 1e-4);
        }
    }

    #[test]
    fn round_trip_measured_law() {
        // generate -> measure κ -> solve basis -> reconstruct -> measure κ:
        // the law survives within 1e-3 relative on the interior.
        let (sign, xi) = (CurvatureSign::Plus, 1.0);
        let spec = FamilySpec::new(Family::EsaClass { sign, xi }, (0.5, 4.0), 2001).unwrap();
        let curve = generate(&spec).unwrap();
        let measured = equiaffine_curvature(&curve, KappaSaRoute::Equiaffine).unwrap();
        let domain = (measured.params()[0], *measured.params().last().unwrap());
        let law = CurvatureLaw::tabulated(measured, domain).unwrap();
        let basis = solve_basis(&law, 1001).unwrap();
        let rebuilt = reconstruct(&basis, PlanarPoint::ORIGIN).unwrap();
        let again = equiaffine_curvature(&rebuilt, KappaSaRoute::Equiaffine)
            .unwrap()
            .interior(0.8);
        for (u, k) in again.params().iter().zip(again.kappa()) {
            assert_relative_eq!(*k, esa_class_kappa(sign, xi, *u), max_relative = 1e-3);
        }
    }

    #[test]
    fn euler_domain_must_avoid_zero() {
        assert!(matches!(
            CurvatureLaw::euler(CurvatureSign::Plus, 1.0, (-1.0, 1.0)),
            Err(Error::DomainContainsSingularity { .. })
        ));
        assert!(CurvatureLaw::euler(CurvatureSign::Plus, 0.0, (0.5, 1.0)).is_err());
    }

    #[test]
    fn coarse_wronskian_is_rejected() {
        let n = 9;
        let params: Vec<f64> = (0..n).map(|i| i as f64).collect();
        let err = BasisPair::new(
            params,
            vec![1.0; n],
            vec![0.0; n],
            vec![0.0; n],
            vec![1.1; n],
        );
        assert!(matches!(err, Err(Error::WronskianDrift { .. })));
    }
}
