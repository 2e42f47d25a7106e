//! Boundary functionals: arc averages, mean oscillation, the Campanato
//! seminorm over the two-shift dyadic grid, and the γ-weighted double
//! integral functional whose boundedness characterizes balayages of
//! s-Carleson measures.
//!
//! Grid functions are piecewise linear between nodes, so every arc
//! integral below is exact for the interpolant. Arcs shorter than four
//! grid spacings are rejected rather than extrapolated: under-resolution
//! would silently fake boundedness.

use std::f64::consts::TAU;

use crate::error::{Error, Result};
use crate::geometry::{dyadic_arcs_at_scale, Arc};
use crate::numerics::{integrate_arc_pair, ArcPairIntegral, ArcPairRule};
use crate::operators::BoundaryGrid;

/// Minimum number of grid spacings an arc must span.
pub const MIN_ARC_SPACINGS: usize = 4;

/// One oscillation measurement on one arc.
#[derive(Debug, Clone)]
pub struct OscillationSample {
    pub arc: Arc,
    pub value: f64,
    pub scale_index: u32,
}

/// CSV dump with columns `scale_index,arc_center,arc_length,value`.
pub fn oscillation_samples_csv(samples: &[OscillationSample]) -> String {
    let mut out = String::from("scale_index,arc_center,arc_length,value\n");
    for s in samples {
        out.push_str(&format!(
            "{},{},{},{}\n",
            s.scale_index,
            s.arc.center(),
            s.arc.length(),
            s.value
        ));
    }
    out
}

fn guard_resolution(phi: &BoundaryGrid, arc: &Arc) -> Result<()> {
    let spacing = phi.node_spacing();
    if arc.length() < MIN_ARC_SPACINGS as f64 * spacing {
        return Err(Error::UnderResolved {
            arc_length: arc.length(),
            spacing,
            min_spacings: MIN_ARC_SPACINGS,
        });
    }
    Ok(())
}

/// φ_I = (1/|I|) ∫_I φ(e^{it}) dt.
pub fn arc_average(phi: &BoundaryGrid, arc: &Arc) -> Result<f64> {
    guard_resolution(phi, arc)?;
    let a0 = arc.center() - arc.length() / 2.0;
    Ok(phi.integral_over(a0, a0 + arc.length()) / arc.length())
}

/// ∫_{a0}^{a1} |φ(t) − shift|^p dt, exact for the piecewise-linear
/// interpolant: on each segment |A + Bt|^p has the closed antiderivative
/// sgn(g) |g|^{p+1} / (B (p+1)).
fn abs_power_integral(phi: &BoundaryGrid, shift: f64, p: f64, a0: f64, a1: f64) -> f64 {
    let h = phi.node_spacing();
    let mut total = 0.0;
    let mut x = a0;
    while a1 - x > 1e-15 {
        let j = (x / h + 1e-12).floor();
        let next = ((j + 1.0) * h).min(a1);
        let len = next - x;
        if len > 0.0 {
            let g0 = phi.interp(x) - shift;
            let g1 = phi.interp(next) - shift;
            let slope = (g1 - g0) / len;
            let scale = g0.abs().max(g1.abs());
            if slope.abs() * len <= 1e-14 * scale.max(1e-300) {
                total += 0.5 * (g0.abs().powf(p) + g1.abs().powf(p)) * len;
            } else {
                let anti = |g: f64| g.signum() * g.abs().powf(p + 1.0);
                total += (anti(g1) - anti(g0)) / (slope * (p + 1.0));
            }
        }
        x = next;
    }
    total
}

/// Mean oscillation (1/|I|) ∫_I |φ − φ_I|^p dt; p = 1 is the BMO integrand.
pub fn mean_oscillation(phi: &BoundaryGrid, arc: &Arc, p: f64) -> Result<f64> {
    if !(p >= 1.0 && p.is_finite()) {
        return Err(Error::InvalidParameter(format!(
            "oscillation exponent must satisfy p >= 1, got {p}"
        )));
    }
    let avg = arc_average(phi, arc)?;
    let a0 = arc.center() - arc.length() / 2.0;
    Ok(abs_power_integral(phi, avg, p, a0, a0 + arc.length()) / arc.length())
}

/// Empirical Campanato seminorm: sup over the two-shift dyadic grid (plus
/// the full circle as scale 0) of (1/|I|^λ) ∫_I |φ − φ_I|^p dt, with
/// per-arc samples for trend inspection.
pub fn campanato_seminorm(
    phi: &BoundaryGrid,
    p: f64,
    lambda: f64,
    depth: u32,
) -> Result<(f64, Vec<OscillationSample>)> {
    if !(lambda >= 0.0 && lambda.is_finite()) {
        return Err(Error::InvalidParameter(format!(
            "Campanato exponent must satisfy lambda >= 0, got {lambda}"
        )));
    }
    if depth == 0 {
        return Err(Error::InvalidParameter("depth must be at least 1".into()));
    }
    // Fail fast if the finest scale cannot be resolved on this grid.
    let finest = TAU / 2f64.powi(depth as i32);
    if finest < MIN_ARC_SPACINGS as f64 * phi.node_spacing() {
        return Err(Error::UnderResolved {
            arc_length: finest,
            spacing: phi.node_spacing(),
            min_spacings: MIN_ARC_SPACINGS,
        });
    }
    let mut samples = Vec::new();
    let mut sup = 0.0f64;
    for k in 0..=depth {
        let arcs = if k == 0 {
            vec![Arc::full_circle()]
        } else {
            dyadic_arcs_at_scale(k)
        };
        for arc in arcs {
            let mosc = mean_oscillation(phi, &arc, p)?;
            let value = mosc * arc.length().powf(1.0 - lambda);
            sup = sup.max(value);
            samples.push(OscillationSample {
                arc,
                value,
                scale_index: k,
            });
        }
    }
    Ok((sup, samples))
}

/// The double-integral functional
/// (1/|I|^{1+s−γ}) ∬_{I×I} |φ(θ) − φ(φ′)| / |e^{iθ} − e^{iφ′}|^γ dθ dφ′,
/// with γ taken from the pair rule. Bounded uniformly over arcs exactly
/// when the underlying measure is s-Carleson.
pub fn thm1_functional(
    phi: &BoundaryGrid,
    arc: &Arc,
    s: f64,
    pair_rule: &ArcPairRule,
) -> Result<ArcPairIntegral> {
    if !(s > 0.0 && s <= 1.0) {
        return Err(Error::InvalidParameter(format!(
            "scaling exponent must lie in (0, 1], got {s}"
        )));
    }
    guard_resolution(phi, arc)?;
    let raw = integrate_arc_pair(
        |theta, psi| (phi.interp(theta) - phi.interp(psi)).abs(),
        arc,
        pair_rule,
    )?;
    let norm = arc.length().powf(1.0 + s - pair_rule.gamma());
    Ok(ArcPairIntegral {
        value: raw.value / norm,
        diagonal_estimate: raw.diagonal_estimate / norm,
    })
}
