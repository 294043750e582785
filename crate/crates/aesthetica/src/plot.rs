// Copyright 2026 the Aesthetica Authors
// SPDX-License-Identifier: Apache-2.0 OR MIT

//! SVG rendering of curve sets, one path per curve, with dash patterns
//! distinguishing the families: solid for power functions and quadratics,
//! dotted for logarithmic spirals, dashed for logarithm graphs, dash-dot
//! for x·log x. An optional per-curve affine map supports deformed views.

use std::fmt::Write as _;

use crate::affinity::AffineMap2;
use crate::curve::{Provenance, SampledCurve};
use crate::error::{Error, Result};
use crate::generators::{euler_regime, CurvatureSign, EulerRegime, Family};

/// Line style, as an SVG dash pattern relative to the drawing scale.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LineStyle {
    Solid,
    Dotted,
    Dashed,
    DashDot,
}

impl LineStyle {
    fn dasharray(&self, unit: f64) -> Option<String> {
        match self {
            LineStyle::Solid => None,
            LineStyle::Dotted => Some(format!("{:.4} {:.4}", unit, 1.6 * unit)),
            LineStyle::Dashed => Some(format!("{:.4} {:.4}", 4.0 * unit, 2.0 * unit)),
            LineStyle::DashDot => Some(format!(
                "{:.4} {:.4} {:.4} {:.4}",
                4.0 * unit, 1.6 * unit, unit, 1.6 * unit
            )),
        }
    }

    /// Style a generated family is drawn with.
    pub fn for_family(family: &Family) -> LineStyle {
        match family {
            Family::PowerGraph { .. } | Family::Quadratic { .. } | Family::Lac { .. } => {
                LineStyle::Solid
            }
            Family::LogSpiral { .. } => LineStyle::Dotted,
            Family::LogGraph => LineStyle::Dashed,
            Family::XLogXGraph => LineStyle::DashDot,
            Family::EsaClass { sign, xi } => match euler_regime(*sign, *xi) {
                (EulerRegime::Oscillatory, _) => LineStyle::Dotted,
                (EulerRegime::DoubleRoot, _) => LineStyle::DashDot,
                (EulerRegime::PowerPair, omega) => {
                    if *sign == CurvatureSign::Minus && (omega - 1.5).abs() < 1e-9 {
                        LineStyle::Dashed
                    } else {
                        LineStyle::Solid
                    }
                }
            },
        }
    }

    fn from_provenance(curve: &SampledCurve) -> LineStyle {
        match curve.meta().map(|m| &m.provenance) {
            Some(Provenance::Generated(spec)) | Some(Provenance::MsaParametrized { spec, .. }) => {
                LineStyle::for_family(&spec.family)
            }
            _ => LineStyle::Solid,
        }
    }
}

/// One curve to draw, with an optional affine deformation and style
/// override (default: by provenance).
#[derive(Debug, Clone)]
pub struct PlotEntry {
    pub curve: SampledCurve,
    pub transform: Option<AffineMap2>,
    pub style: Option<LineStyle>,
}

impl PlotEntry {
    pub fn new(curve: SampledCurve) -> PlotEntry {
        PlotEntry {
            curve,
            transform: None,
            style: None,
        }
    }
}

const PALETTE: [&str; 6] = ["#1a1a1a", "#b03a2e", "#1f618d", "#117a65", "#7d3c98", "#b7950b"];

/// Render curves into a standalone SVG 1.1 document. Output is a pure
/// function of the input.
pub fn plot_svg(entries: &[PlotEntry]) -> Result<String> {
    if entries.is_empty() {
        return Err(Error::EmptyInput);
    }

    // Transformed points, y flipped for screen coordinates.
    let polylines: Vec<Vec<(f64, f64)>> = entries
        .iter()
        .map(|e| {
            e.curve
                .points()
                .iter()
                .map(|p| {
                    let q = match &e.transform {
                        Some(map) => map.apply(*p),
                        None => *p,
                    };
                    (q.x, -q.y)
                })
                .collect()
        })
        .collect();

    let mut min = (f64::INFINITY, f64::INFINITY);
    let mut max = (f64::NEG_INFINITY, f64::NEG_INFINITY);
    for line in &polylines {
        for (x, y) in line {
            min.0 = min.0.min(*x);
            min.1 = min.1.min(*y);
            max.0 = max.0.max(*x);
            max.1 = max.1.max(*y);
        }
    }
    let width = (max.0 - min.0).max(f64::MIN_POSITIVE);
    let height = (max.1 - min.1).max(f64::MIN_POSITIVE);
    let pad = 0.05 * width.max(height);
    let diag = width.hypot(height);
    let stroke = 0.004 * diag;
    let unit = 1.5 * stroke;

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" viewBox="{:.6} {:.6} {:.6} {:.6}">"#,
        min.0 - pad,
        min.1 - pad,
        width + 2.0 * pad,
        height + 2.0 * pad
    );
    for (i, (entry, line)) in entries.iter().zip(&polylines).enumerate() {
        let style = entry
            .style
            .unwrap_or_else(|| LineStyle::from_provenance(&entry.curve));
        let mut d = String::new();
        for (j, (x, y)) in line.iter().enumerate() {
            let cmd = if j == 0 { 'M' } else { 'L' };
            let _ = write!(d, "{cmd}{x:.6} {y:.6} ");
        }
        let color = PALETTE[i % PALETTE.len()];
        let dash = match style.dasharray(unit) {
            Some(pattern) => format!(r#" stroke-dasharray="{pattern}""#),
            None => String::new(),
        };
        let _ = writeln!(
            svg,
            r#"<path d="{}" fill="none" stroke="{color}" stroke-width="{stroke:.6}"{dash}/>"#,
            d.trim_end()
        );
    }
    svg.push_str("</svg>\n");
    Ok(svg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::{ParamKind, PlanarPoint};
    use crate::generators::{generate, FamilySpec};

    fn circle() -> SampledCurve {
        let n = 128;
        let params: Vec<f64> = (0..n)
            .map(|i| std::f64::consts::TAU * i as f64 / (n - 1) as f64)
            .collect();
        let points: Vec<PlanarPoint> = params
            .iter()
            .map(|&t| PlanarPoint::new(t.cos(), t.sin()))
            .collect();
        SampledCurve::new(params, points, ParamKind::Arbitrary, None).unwrap()
    }

    #[test]
    fn single_circle_is_one_path_with_sane_viewbox() {
        let svg = plot_svg(&[PlotEntry::new(circle())]).unwrap();
        assert_eq!(svg.matches("<path").count(), 1);
        assert!(svg.starts_with("<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\""));
        // viewBox covers [-1, 1]² with 5% padding.
        let vb = svg.split("viewBox=\"").nth(1).unwrap();
        let nums: Vec<f64> = vb
            .split('"')
            .next()
            .unwrap()
            .split_whitespace()
            .map(|v| v.parse().unwrap())
            .collect();
        assert!(nums[0] <= -1.0 && nums[0] >= -1.2);
        assert!(nums[2] >= 2.0 && nums[2] <= 2.4);
    }

    #[test]
    fn four_families_get_four_dash_patterns() {
        let families = [
            FamilySpec::new(Family::PowerGraph { alpha: 2.0 }, (0.1, 2.0), 64).unwrap(),
            FamilySpec::new(Family::LogSpiral { a: 1.0, b: 1.0 }, (0.0, 2.0), 64).unwrap(),
            FamilySpec::new(Family::LogGraph, (0.5, 3.0), 64).unwrap(),
            FamilySpec::new(Family::XLogXGraph, (0.5, 3.0), 64).unwrap(),
        ];
        let entries: Vec<PlotEntry> = families
            .iter()
            .map(|spec| PlotEntry::new(generate(spec).unwrap()))
            .collect();
        let svg = plot_svg(&entries).unwrap();
        assert_eq!(svg.matches("<path").count(), 4);
        // Solid has no dasharray; the three others are pairwise distinct.
        let dashes: Vec<&str> = svg
            .lines()
            .filter(|l| l.contains("<path"))
            .map(|l| {
                l.split("stroke-dasharray=\"")
                    .nth(1)
                    .map(|rest| rest.split('"').next().unwrap())
                    .unwrap_or("")
            })
            .collect();
        assert_eq!(dashes[0], "");
        assert!(!dashes[1].is_empty() && !dashes[2].is_empty() && !dashes[3].is_empty());
        assert_ne!(dashes[1], dashes[2]);
        assert_ne!(dashes[2], dashes[3]);
        assert_ne!(dashes[1], dashes[3]);
    }

    #[test]
    fn affine_transform_moves_the_drawing() {
        let plain = plot_svg(&[PlotEntry::new(circle())]).unwrap();
        let mut entry = PlotEntry::new(circle());
        entry.transform = Some(AffineMap2 {
            linear: [[2.0, 0.0], [0.0, 1.0]],
            translation: [10.0, 0.0],
        });
        let moved = plot_svg(&[entry]).unwrap();
        assert_ne!(plain, moved);
        let vb = moved.split("viewBox=\"").nth(1).unwrap();
        let x0: f64 = vb.split_whitespace().next().unwrap().parse().unwrap();
        assert!(x0 > 5.0);
    }

    #[test]
    fn deterministic_output() {
        let entries = [PlotEntry::new(circle())];
        assert_eq!(plot_svg(&entries).unwrap(), plot_svg(&entries).unwrap());
    }

    #[test]
    fn empty_input_is_an_error() {
        assert!(matches!(plot_svg(&[]), Err(Error::EmptyInput)));
    }
}
