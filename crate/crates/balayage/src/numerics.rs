//! Quadrature on the disk, the circle, and γ-singular double arc integrals.
//!
//! Disk rules combine Gauss–Legendre radial nodes with equispaced angles.
//! The radial axis is split into geometric bands accumulating at r = 1,
//! because every kernel in this crate blows up at the boundary like a
//! power of 1/(1 − r); uniform radial rules are hopeless there.

use std::f64::consts::TAU;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::geometry::Arc;

/// Gauss–Legendre nodes and weights on [−1, 1], by Newton iteration on P_n.
pub(crate) fn gauss_legendre(n: usize) -> Vec<(f64, f64)> {
    assert!(n >= 1);
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        for _ in 0..100 {
            let (p, dp) = legendre_with_derivative(n, x);
            let dx = p / dp;
            x -= dx;
            if dx.abs() < 1e-15 {
                break;
            }
        }
        let (_, dp) = legendre_with_derivative(n, x);
        out.push((x, 2.0 / ((1.0 - x * x) * dp * dp)));
    }
    out.sort_by(|a, b| a.0.total_cmp(&b.0));
    out
}

fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    for k in 2..=n {
        let kf = k as f64;
        let pk = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = pk;
    }
    if n == 0 {
        return (1.0, 0.0);
    }
    let dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, dp)
}

/// Band edges for `levels` geometric refinements toward b inside [a, b):
/// `[a, m1, m2, ..., b]` where each band halves the remaining gap.
pub(crate) fn geometric_band_edges(a: f64, b: f64, levels: usize) -> Vec<f64> {
    let mut edges = Vec::with_capacity(levels + 2);
    edges.push(a);
    let mut gap = b - a;
    for _ in 0..levels {
        gap /= 2.0;
        edges.push(b - gap);
    }
    edges.push(b);
    edges
}

/// 1-D nodes and weights for ∫_a^b f(r) dr with geometric refinement
/// toward b. Weights are plain dr weights.
pub(crate) fn line_rule(a: f64, b: f64, levels: usize, order: usize) -> Vec<(f64, f64)> {
    let gl = gauss_legendre(order);
    let edges = geometric_band_edges(a, b, levels);
    let mut nodes = Vec::with_capacity(order * (edges.len() - 1));
    for pair in edges.windows(2) {
        let (lo, hi) = (pair[0], pair[1]);
        let half = (hi - lo) / 2.0;
        let mid = (hi + lo) / 2.0;
        for &(x, w) in &gl {
            nodes.push((mid + half * x, w * half));
        }
    }
    nodes
}

/// A tensor quadrature rule for the unit disk against normalized area
/// measure dA (so the constant 1 integrates to 1).
#[derive(Debug, Clone)]
pub struct QuadratureRule {
    /// Radial nodes with weights that already include the 2r Jacobian of dA.
    radial: Vec<(f64, f64)>,
    radial_order: usize,
    angular_count: usize,
    refinement_levels: usize,
}

impl QuadratureRule {
    pub fn radial_nodes(&self) -> &[(f64, f64)] {
        &self.radial
    }

    /// Gauss–Legendre order used per radial band.
    pub fn radial_order(&self) -> usize {
        self.radial_order
    }

    pub fn angular_count(&self) -> usize {
        self.angular_count
    }

    pub fn refinement_levels(&self) -> usize {
        self.refinement_levels
    }

    pub fn node_count(&self) -> usize {
        self.radial.len() * self.angular_count
    }

    /// Largest radius carrying a node. Kernels evaluated at |z| closer to 1
    /// than roughly 1 − max_radius are not resolved by this rule.
    pub fn max_radius(&self) -> f64 {
        self.radial.iter().map(|&(r, _)| r).fold(0.0, f64::max)
    }

    /// Distance from the deepest radial node to the boundary.
    pub fn boundary_gap(&self) -> f64 {
        1.0 - self.max_radius()
    }

    pub fn angles(&self) -> impl Iterator<Item = f64> + '_ {
        let n = self.angular_count as f64;
        (0..self.angular_count).map(move |j| TAU * j as f64 / n)
    }
}

/// Builds a disk rule with `radial_count` Gauss–Legendre nodes per band,
/// `refinement_levels` geometric bands accumulating at r = 1 (band k covers
/// 1 − 2^{−k} ≤ r < 1 − 2^{−k−1}), and equispaced angles.
pub fn build_disk_rule(
    radial_count: usize,
    angular_count: usize,
    refinement_levels: usize,
) -> Result<QuadratureRule> {
    if radial_count < 2 {
        return Err(Error::InvalidParameter(format!(
            "radial_count must be at least 2, got {radial_count}"
        )));
    }
    if angular_count < 4 {
        return Err(Error::InvalidParameter(format!(
            "angular_count must be at least 4, got {angular_count}"
        )));
    }
    let gl = gauss_legendre(radial_count);
    let edges = geometric_band_edges(0.0, 1.0, refinement_levels);
    let mut radial = Vec::with_capacity(radial_count * (edges.len() - 1));
    for pair in edges.windows(2) {
        let (lo, hi) = (pair[0], pair[1]);
        let half = (hi - lo) / 2.0;
        let mid = (hi + lo) / 2.0;
        for &(x, w) in &gl {
            let r = mid + half * x;
            radial.push((r, w * half * 2.0 * r));
        }
    }
    Ok(QuadratureRule {
        radial,
        radial_order: radial_count,
        angular_count,
        refinement_levels,
    })
}

/// Integrates f over the disk against dA_α = (α+1)(1 − |z|²)^α dA.
///
/// dA_α is a probability measure, so f ≡ 1 integrates to 1 for every
/// α > −1. Non-finite integrand values are reported with the node that
/// produced them.
pub fn integrate_disk<F>(f: F, alpha: f64, rule: &QuadratureRule) -> Result<f64>
where
    F: Fn(Complex64) -> f64,
{
    if alpha <= -1.0 || !alpha.is_finite() {
        return Err(Error::InvalidParameter(format!(
            "area weight exponent must exceed -1, got {alpha}"
        )));
    }
    let n_ang = rule.angular_count as f64;
    let mut total = 0.0;
    for &(r, wr) in &rule.radial {
        let weight = wr * (alpha + 1.0) * (1.0 - r * r).powf(alpha);
        let mut ring = 0.0;
        for theta in rule.angles() {
            let z = Complex64::from_polar(r, theta);
            let v = f(z);
            if !v.is_finite() {
                return Err(Error::NonFinite(format!(
                    "integrand at node z = {:.6} + {:.6}i (r = {r:.6})",
                    z.re, z.im
                )));
            }
            ring += v;
        }
        total += weight * ring / n_ang;
    }
    Ok(total)
}

/// Trapezoid rule on the circle: spectrally accurate for smooth periodic
/// integrands, exact for trigonometric polynomials of degree < n/2.
pub fn integrate_circle<F>(f: F, n: usize) -> Result<f64>
where
    F: Fn(f64) -> f64,
{
    if n < 8 {
        return Err(Error::InvalidParameter(format!(
            "circle rule needs at least 8 nodes, got {n}"
        )));
    }
    let h = TAU / n as f64;
    let mut total = 0.0;
    for j in 0..n {
        let theta = h * j as f64;
        let v = f(theta);
        if !v.is_finite() {
            return Err(Error::NonFinite(format!(
                "boundary integrand at theta = {theta:.6}"
            )));
        }
        total += v;
    }
    Ok(total * h)
}

/// Rule for double integrals ∬_{I×I} f(θ, φ) / |e^{iθ} − e^{iφ}|^γ dθ dφ.
///
/// The integral is driven along the separation u = θ − φ with geometric
/// bands accumulating at the diagonal, Gauss–Legendre in both directions.
/// A band |u| < b around the diagonal is excluded from quadrature and
/// replaced by the analytic majorant 2|I| b^{1−γ}/(1−γ) · sup|f| near the
/// diagonal; that contribution is reported separately so the truncation
/// stays auditable.
#[derive(Debug, Clone)]
pub struct ArcPairRule {
    gamma: f64,
    u_order: usize,
    theta_order: usize,
    /// Diagonal exclusion half-width as a fraction of |I|.
    band_fraction: f64,
}

impl ArcPairRule {
    pub fn new(gamma: f64, u_order: usize, theta_order: usize) -> Result<Self> {
        if !(0.0..1.0).contains(&gamma) {
            return Err(Error::InvalidParameter(format!(
                "singular exponent gamma must lie in [0, 1), got {gamma}"
            )));
        }
        if u_order == 0 || theta_order == 0 {
            return Err(Error::InvalidParameter(
                "arc-pair rule orders must be positive".into(),
            ));
        }
        Ok(ArcPairRule {
            gamma,
            u_order,
            theta_order,
            band_fraction: 2f64.powi(-17),
        })
    }

    pub fn with_band_fraction(mut self, fraction: f64) -> Result<Self> {
        if !(fraction > 0.0 && fraction < 0.5) {
            return Err(Error::InvalidParameter(format!(
                "diagonal band fraction must lie in (0, 0.5), got {fraction}"
            )));
        }
        self.band_fraction = fraction;
        Ok(self)
    }

    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    /// Diagonal exclusion half-width for an arc of the given length.
    pub fn band_halfwidth(&self, arc_length: f64) -> f64 {
        self.band_fraction * arc_length
    }
}

/// Result of a singular double arc integral: the value includes the
/// diagonal-band majorant, which is also reported on its own.
#[derive(Debug, Clone, Copy)]
pub struct ArcPairIntegral {
    pub value: f64,
    pub diagonal_estimate: f64,
}

/// ∬_{I×I} f(θ, φ) / |e^{iθ} − e^{iφ}|^γ dθ dφ under the rule's diagonal
/// policy. `f` must be finite off the diagonal; it receives raw angles
/// in the arc's coordinate window.
pub fn integrate_arc_pair<F>(f: F, arc: &Arc, rule: &ArcPairRule) -> Result<ArcPairIntegral>
where
    F: Fn(f64, f64) -> f64,
{
    let length = arc.length();
    let band = rule.band_halfwidth(length);
    let gamma = rule.gamma;

    // sup |f| sampled just off the diagonal, for the excluded-band majorant.
    let mut sup_near_diag: f64 = 0.0;
    let lo = arc.center() - length / 2.0;
    for j in 0..=32 {
        let theta = lo + length * j as f64 / 32.0;
        for delta in [band / 4.0, band / 2.0, band] {
            for phi in [theta - delta, theta + delta] {
                let v = f(theta, phi);
                if !v.is_finite() {
                    return Err(Error::NonFinite(format!(
                        "arc-pair integrand at (theta, phi) = ({theta:.6}, {phi:.6})"
                    )));
                }
                sup_near_diag = sup_near_diag.max(v.abs());
            }
        }
    }
    let diagonal_estimate = 2.0 * length * band.powf(1.0 - gamma) / (1.0 - gamma) * sup_near_diag;

    let gl_u = gauss_legendre(rule.u_order);
    let gl_t = gauss_legendre(rule.theta_order);

    // Geometric u-bands from the exclusion band toward the far end.
    let u_edges = |from: f64, to: f64| {
        let mut edges = vec![from];
        let mut e = from;
        while e * 2.0 < to {
            e *= 2.0;
            edges.push(e);
        }
        edges.push(to);
        edges
    };

    let mut value = 0.0;
    if arc.is_full_circle() {
        // Pairs wrap: u and 2π − u are both near-diagonal separations, and
        // for each u the θ-average runs over the whole circle.
        let theta_n = (rule.theta_order * 4).max(64);
        let h = TAU / theta_n as f64;
        let mut eval_u = |u: f64, wu: f64| -> Result<()> {
            let weight = wu / chord_pow(u, gamma);
            let mut inner = 0.0;
            for j in 0..theta_n {
                let theta = h * j as f64;
                let v = f(theta, theta - u);
                if !v.is_finite() {
                    return Err(Error::NonFinite(format!(
                        "arc-pair integrand at (theta, phi) = ({theta:.6}, {:.6})",
                        theta - u
                    )));
                }
                inner += v;
            }
            value += weight * inner * h;
            Ok(())
        };
        let edges = u_edges(band, std::f64::consts::PI);
        for pair in edges.windows(2) {
            let half = (pair[1] - pair[0]) / 2.0;
            let mid = (pair[1] + pair[0]) / 2.0;
            for &(x, w) in &gl_u {
                let u = mid + half * x;
                eval_u(u, w * half)?;
                eval_u(TAU - u, w * half)?;
            }
        }
    } else {
        let hi = arc.center() + length / 2.0;
        let edges = u_edges(band, length);
        for pair in edges.windows(2) {
            let half = (pair[1] - pair[0]) / 2.0;
            let mid = (pair[1] + pair[0]) / 2.0;
            for &(x, wu) in &gl_u {
                let u = mid + half * x;
                let weight = wu * half / chord_pow(u, gamma);
                // θ runs over I ∩ (I + u); by symmetry the pairs (θ, θ−u)
                // and (θ, θ+u) cover both signs of the separation.
                let t_lo = lo + u;
                let t_half = (hi - t_lo) / 2.0;
                let t_mid = (hi + t_lo) / 2.0;
                let mut inner = 0.0;
                for &(y, wt) in &gl_t {
                    let theta = t_mid + t_half * y;
                    let a = f(theta, theta - u);
                    let b = f(theta - u, theta);
                    if !a.is_finite() || !b.is_finite() {
                        return Err(Error::NonFinite(format!(
                            "arc-pair integrand near theta = {theta:.6}, u = {u:.6}"
                        )));
                    }
                    inner += wt * (a + b);
                }
                value += weight * inner * t_half;
            }
        }
    }

    Ok(ArcPairIntegral {
        value: value + diagonal_estimate,
        diagonal_estimate,
    })
}

fn chord_pow(u: f64, gamma: f64) -> f64 {
    if gamma == 0.0 {
        1.0
    } else {
        (2.0 * (u / 2.0).sin().abs()).powf(gamma)
    }
}
