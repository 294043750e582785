// Copyright 2026 the Aesthetica Authors
// SPDX-License-Identifier: Apache-2.0 OR MIT

//! Numeric thresholds used across the library, with the environment override
//! hook honored by every CLI command.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Environment variable holding a JSON map of tolerance overrides,
/// e.g. `{"esa_residual_closed": 1e-7}`.
pub const TOL_OVERRIDE_ENV: &str = "AESTHETICA_TOL_OVERRIDE";

/// Tolerance bundle. Defaults are the values the verification thresholds
/// are calibrated to; individual fields can be overridden through
/// [`TOL_OVERRIDE_ENV`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct Tolerances {
    /// Magnitude floor below which a defining integrand is degenerate.
    pub integrand_floor: f64,
    /// Normalized residual declaring the extendable self-affinity on
    /// closed-form inputs.
    pub esa_residual_closed: f64,
    /// Residual bound for ingested, possibly noisy data; between the two
    /// bounds the verdict is inconclusive.
    pub esa_residual_noisy: f64,
    /// Ratio-error verdict threshold for the exponential-curvature
    /// self-affinity on closed-form inputs.
    pub msa_closed: f64,
    /// Same, for sampled inputs.
    pub msa_sampled: f64,
    /// Allowed Wronskian drift in basis integration.
    pub wronskian_drift: f64,
    /// Condition-number limit for the affine-fit normal equations.
    pub normal_eq_condition: f64,
    /// std/|mean| below which an equiaffine curvature profile is constant.
    pub const_kappa_rel_std: f64,
    /// |κ| below which the constant is zero (parabola).
    pub zero_kappa_abs: f64,
    /// Relative rmse above which a curvature-law fit is rejected.
    pub poor_fit_rmse: f64,
    /// Relative half-width of the |ξ| = 2 classification band.
    pub class_xi_band: f64,
    /// Absolute half-width of the ω = 3/2 classification band.
    pub class_omega_band: f64,
    /// Verdict threshold for the turning-angle affinity rate.
    pub theta_rate: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            integrand_floor: 1e-12,
            esa_residual_closed: 1e-6,
            esa_residual_noisy: 1e-3,
            msa_closed: 1e-6,
            msa_sampled: 1e-3,
            wronskian_drift: 1e-6,
            normal_eq_condition: 1e12,
            const_kappa_rel_std: 1e-4,
            zero_kappa_abs: 1e-6,
            poor_fit_rmse: 0.05,
            class_xi_band: 1e-3,
            class_omega_band: 1e-3,
            theta_rate: 1e-3,
        }
    }
}

impl Tolerances {
    /// Defaults merged with a JSON override map.
    pub fn from_json_overrides(json: &str) -> Result<Tolerances> {
        let overrides: serde_json::Map<String, serde_json::Value> = serde_json::from_str(json)
            .map_err(|e| Error::invalid(format!("tolerance override is not a JSON map: {e}")))?;
        let mut base = serde_json::to_value(Tolerances::default()).expect("serializable");
        let obj = base.as_object_mut().expect("object");
        for (key, value) in overrides {
            if !obj.contains_key(&key) {
                return Err(Error::invalid(format!("unknown tolerance key `{key}`")));
            }
            if !value.is_number() {
                return Err(Error::invalid(format!("tolerance `{key}` must be a number")));
            }
            obj.insert(key, value);
        }
        serde_json::from_value(base).map_err(|e| Error::invalid(format!("bad tolerance value: {e}")))
    }

    /// Defaults merged with the [`TOL_OVERRIDE_ENV`] environment variable,
    /// when set.
    pub fn from_env() -> Result<Tolerances> {
        match std::env::var(TOL_OVERRIDE_ENV) {
            Ok(json) if !json.trim().is_empty() => Tolerances::from_json_overrides(&json),
            _ => Ok(Tolerances::default()),
        }
    }
}
