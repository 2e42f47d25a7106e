//! The operators under study: the balayage S_μ of a measure to the circle,
//! its Bergman-space analogue G_μ (B-balayage), the Bergman projection P_α,
//! and the analytic Besov norm.
//!
//! Atomic measures bypass quadrature entirely: each atom contributes its
//! mass times a closed-form kernel value. That path doubles as the oracle
//! for the density/quadrature paths.

use std::f64::consts::TAU;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::geometry::DiskPoint;
use crate::measures::Measure;
use crate::numerics::QuadratureRule;
use crate::parallel::par_map;

/// A real function sampled at n equispaced boundary angles 2πj/n.
/// Between nodes the function is treated as piecewise linear.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundaryGrid {
    values: Vec<f64>,
}

impl BoundaryGrid {
    pub fn new(values: Vec<f64>) -> Result<Self> {
        if values.len() < 8 {
            return Err(Error::InvalidParameter(format!(
                "boundary grid needs at least 8 nodes, got {}",
                values.len()
            )));
        }
        if let Some(bad) = values.iter().position(|v| !v.is_finite()) {
            return Err(Error::NonFinite(format!(
                "boundary grid value at node {bad}"
            )));
        }
        Ok(BoundaryGrid { values })
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn node_spacing(&self) -> f64 {
        TAU / self.values.len() as f64
    }

    pub fn angle(&self, j: usize) -> f64 {
        TAU * j as f64 / self.values.len() as f64
    }

    pub fn mean(&self) -> f64 {
        self.values.iter().sum::<f64>() / self.values.len() as f64
    }

    /// Piecewise-linear evaluation at an arbitrary angle.
    pub fn interp(&self, theta: f64) -> f64 {
        let n = self.values.len();
        let h = TAU / n as f64;
        let pos = theta.rem_euclid(TAU) / h;
        let j = (pos.floor() as usize).min(n - 1);
        let frac = pos - j as f64;
        let v0 = self.values[j];
        v0 + frac * (self.values[(j + 1) % n] - v0)
    }

    /// Integral of the piecewise-linear interpolant over [a0, a1].
    pub fn integral_over(&self, a0: f64, a1: f64) -> f64 {
        debug_assert!(a1 >= a0 && a1 - a0 <= TAU + 1e-9);
        let h = self.node_spacing();
        let mut total = 0.0;
        let mut x = a0;
        while a1 - x > 1e-15 {
            let j = (x / h + 1e-12).floor();
            let next = ((j + 1.0) * h).min(a1);
            let step = next - x;
            if step > 0.0 {
                total += 0.5 * (self.interp(x) + self.interp(next)) * step;
            }
            x = next;
        }
        total
    }

    /// CSV dump with columns `angle,value`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("angle,value\n");
        for (j, v) in self.values.iter().enumerate() {
            out.push_str(&format!("{},{}\n", self.angle(j), v));
        }
        out
    }
}

/// S_μ(e^{it}) = ∫_D (1 − |z|²) / |1 − z e^{−it}|² dμ(z), sampled on an
/// n-node boundary grid. The grid mean reproduces μ(D): Fubini against the
/// Poisson kernel's unit average.
pub fn balayage(mu: &Measure, n: usize, rule: &QuadratureRule) -> Result<BoundaryGrid> {
    if n < 8 {
        return Err(Error::InvalidParameter(format!(
            "boundary grid needs at least 8 nodes, got {n}"
        )));
    }
    // (re, im, |z|², w (1 − |z|²)) per measure node.
    let nodes: Vec<(f64, f64, f64, f64)> = mu
        .quadrature_atoms(rule)
        .into_iter()
        .map(|(z, w)| {
            let r2 = z.norm_sqr();
            (z.re, z.im, r2, w * (1.0 - r2))
        })
        .collect();
    let angles: Vec<f64> = (0..n).map(|j| TAU * j as f64 / n as f64).collect();
    let values = par_map(&angles, |&t| {
        let (c, s) = (t.cos(), t.sin());
        let mut acc = 0.0;
        for &(a, b, r2, num) in &nodes {
            // |1 − z e^{−it}|² = 1 − 2 Re(z e^{−it}) + |z|².
            acc += num / (1.0 - 2.0 * (a * c + b * s) + r2);
        }
        acc
    });
    if let Some(j) = values.iter().position(|v| !v.is_finite()) {
        return Err(Error::NonFinite(format!(
            "balayage value at boundary angle {:.6}",
            angles[j]
        )));
    }
    BoundaryGrid::new(values)
}

/// G_μ(z) = ∫_D (1 − |w|²)² / |1 − z̄ w|⁴ dμ(w).
pub fn b_balayage(mu: &Measure, z: DiskPoint, rule: &QuadratureRule) -> Result<f64> {
    let zc = z.to_complex();
    let mut total = 0.0;
    for (w, weight) in mu.quadrature_atoms(rule) {
        let denom = Complex64::new(1.0, 0.0) - zc.conj() * w;
        let d2 = denom.norm_sqr();
        total += weight * (1.0 - w.norm_sqr()).powi(2) / (d2 * d2);
    }
    if !total.is_finite() {
        return Err(Error::NonFinite(format!(
            "B-balayage at z = {:.6} + {:.6}i",
            z.re(),
            z.im()
        )));
    }
    Ok(total)
}

/// A polynomial with complex coefficients c₀ + c₁ z + … + c_d z^d.
#[derive(Debug, Clone, PartialEq)]
pub struct Polynomial {
    coeffs: Vec<Complex64>,
}

impl Polynomial {
    pub fn new(coeffs: Vec<Complex64>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::EmptyInput("polynomial needs coefficients".into()));
        }
        if coeffs
            .iter()
            .any(|c| !c.re.is_finite() || !c.im.is_finite())
        {
            return Err(Error::NonFinite("polynomial coefficient".into()));
        }
        Ok(Polynomial { coeffs })
    }

    pub fn from_real(coeffs: &[f64]) -> Result<Self> {
        Self::new(coeffs.iter().map(|&c| Complex64::new(c, 0.0)).collect())
    }

    pub fn constant(c: Complex64) -> Self {
        Polynomial { coeffs: vec![c] }
    }

    /// z^k.
    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![Complex64::new(0.0, 0.0); k + 1];
        coeffs[k] = Complex64::new(1.0, 0.0);
        Polynomial { coeffs }
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs
            .iter()
            .rposition(|c| c.norm_sqr() > 0.0)
            .unwrap_or(0)
    }

    pub fn is_constant(&self) -> bool {
        self.degree() == 0
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for &c in self.coeffs.iter().rev() {
            acc = acc * z + c;
        }
        acc
    }

    /// Exact derivative by coefficient shift.
    pub fn derivative(&self) -> Polynomial {
        if self.coeffs.len() <= 1 {
            return Polynomial::constant(Complex64::new(0.0, 0.0));
        }
        Polynomial {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, &c)| c * k as f64)
                .collect(),
        }
    }

    pub fn scale(&self, c: Complex64) -> Polynomial {
        Polynomial {
            coeffs: self.coeffs.iter().map(|&a| a * c).collect(),
        }
    }

    pub fn mul_truncated(&self, other: &Polynomial, max_degree: usize) -> Polynomial {
        let mut coeffs =
            vec![Complex64::new(0.0, 0.0); (self.degree() + other.degree()).min(max_degree) + 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                if i + j <= max_degree {
                    coeffs[i + j] += a * b;
                }
            }
        }
        Polynomial { coeffs }
    }
}

/// Truncated Taylor expansion of ((a − z)/(1 − ā z))^power: the
/// boundary-concentrated test functions, kept inside the polynomial class.
pub fn mobius_power(a: DiskPoint, power: u32, truncation_degree: usize) -> Polynomial {
    let ac = a.to_complex();
    let abar = ac.conj();
    // (a − z) Σ (ā z)^k = a + Σ_{j≥1} ā^{j−1} (|a|² − 1) z^j.
    let mut coeffs = vec![ac];
    let defect = Complex64::new(ac.norm_sqr() - 1.0, 0.0);
    let mut pow = Complex64::new(1.0, 0.0);
    for _ in 1..=truncation_degree {
        coeffs.push(pow * defect);
        pow *= abar;
    }
    let base = Polynomial { coeffs };
    let mut out = Polynomial::constant(Complex64::new(1.0, 0.0));
    for _ in 0..power {
        out = out.mul_truncated(&base, truncation_degree);
    }
    out
}

fn check_complex(v: Complex64, what: &str) -> Result<Complex64> {
    if v.re.is_finite() && v.im.is_finite() {
        Ok(v)
    } else {
        Err(Error::NonFinite(what.to_string()))
    }
}

/// base^{−exponent}, taking the integer-power fast path when 2+α or 3+α
/// happens to be integral (α = 0 and α = 2 dominate the sweeps).
fn inverse_kernel_pow(base: Complex64, exponent: f64) -> Complex64 {
    let n = exponent.round();
    if (exponent - n).abs() < 1e-12 {
        base.powi(-(n as i32))
    } else {
        base.powf(-exponent)
    }
}

/// Bergman projection P_α g(z) = ∫_D g(w) / (1 − z w̄)^{2+α} dA_α(w).
/// Reproduces holomorphic polynomials pointwise.
pub fn bergman_projection<G>(
    g: G,
    alpha: f64,
    z: DiskPoint,
    rule: &QuadratureRule,
) -> Result<Complex64>
where
    G: Fn(Complex64) -> Complex64,
{
    if alpha <= -1.0 || !alpha.is_finite() {
        return Err(Error::InvalidParameter(format!(
            "projection weight exponent must exceed -1, got {alpha}"
        )));
    }
    let zc = z.to_complex();
    let n_ang = rule.angular_count() as f64;
    let mut total = Complex64::new(0.0, 0.0);
    for &(r, wr) in rule.radial_nodes() {
        let weight = wr * (alpha + 1.0) * (1.0 - r * r).powf(alpha) / n_ang;
        let mut ring = Complex64::new(0.0, 0.0);
        for theta in rule.angles() {
            let w = Complex64::from_polar(r, theta);
            let kernel = inverse_kernel_pow(Complex64::new(1.0, 0.0) - zc * w.conj(), 2.0 + alpha);
            ring += g(w) * kernel;
        }
        total += ring * weight;
    }
    check_complex(total, "Bergman projection value")
}

/// (1 − |z|²) d/dz [P_α g](z), via the closed-form kernel derivative
/// (α+2)(1 − |z|²) ∫ g(w) w̄ / (1 − z w̄)^{3+α} dA_α(w).
pub fn projected_derivative<G>(
    g: G,
    alpha: f64,
    z: DiskPoint,
    rule: &QuadratureRule,
) -> Result<Complex64>
where
    G: Fn(Complex64) -> Complex64,
{
    if alpha <= -1.0 || !alpha.is_finite() {
        return Err(Error::InvalidParameter(format!(
            "projection weight exponent must exceed -1, got {alpha}"
        )));
    }
    let zc = z.to_complex();
    let n_ang = rule.angular_count() as f64;
    let mut total = Complex64::new(0.0, 0.0);
    for &(r, wr) in rule.radial_nodes() {
        let weight = wr * (alpha + 1.0) * (1.0 - r * r).powf(alpha) / n_ang;
        let mut ring = Complex64::new(0.0, 0.0);
        for theta in rule.angles() {
            let w = Complex64::from_polar(r, theta);
            let kernel = inverse_kernel_pow(Complex64::new(1.0, 0.0) - zc * w.conj(), 3.0 + alpha);
            ring += g(w) * w.conj() * kernel;
        }
        total += ring * weight;
    }
    let value = total * (alpha + 2.0) * (1.0 - zc.norm_sqr());
    check_complex(value, "projected derivative value")
}

/// ‖f‖_{B_p} = (∫_D |f′(z)|^p (1 − |z|²)^p dτ(z))^{1/p} with the Möbius
/// invariant measure dτ = dA / (1 − |z|²)². Zero exactly for constants.
pub fn besov_norm(f: &Polynomial, p: f64, rule: &QuadratureRule) -> Result<f64> {
    if !(p > 1.0 && p.is_finite()) {
        return Err(Error::InvalidParameter(format!(
            "Besov exponent must exceed 1, got {p}"
        )));
    }
    if f.is_constant() {
        return Ok(0.0);
    }
    let df = f.derivative();
    // |f′|^p (1 − |z|²)^{p−2} dA = |f′|^p dA_{p−2} / (p − 1).
    let integral = crate::numerics::integrate_disk(|z| df.eval(z).norm().powf(p), p - 2.0, rule)?;
    Ok((integral / (p - 1.0)).max(0.0).powf(1.0 / p))
}
