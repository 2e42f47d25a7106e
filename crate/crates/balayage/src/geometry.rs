//! Disk and boundary geometry: Poisson kernel, disk automorphisms, the
//! hyperbolic metric, arcs, Carleson squares and dyadic arc families.

use std::f64::consts::{PI, TAU};

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Angular slack used by closed-arc membership tests so that dyadic arc
/// endpoints computed through different floating-point routes still count.
/// Boundary double-counting is measure-zero for every integral in the crate.
pub(crate) const ANGLE_EPS: f64 = 1e-12;

/// Wraps an angle into the interval (−π, π].
pub fn wrap_angle(x: f64) -> f64 {
    let y = x.rem_euclid(TAU);
    if y > PI {
        y - TAU
    } else {
        y
    }
}

/// A point of the open unit disk.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiskPoint {
    re: f64,
    im: f64,
}

impl DiskPoint {
    pub const ORIGIN: DiskPoint = DiskPoint { re: 0.0, im: 0.0 };

    /// Builds a point, rejecting anything on or outside the unit circle.
    pub fn new(re: f64, im: f64) -> Result<Self> {
        if !re.is_finite() || !im.is_finite() {
            return Err(Error::InvalidParameter(format!(
                "disk point coordinates must be finite, got ({re}, {im})"
            )));
        }
        if re * re + im * im >= 1.0 {
            return Err(Error::InvalidParameter(format!(
                "point ({re}, {im}) is not strictly inside the unit disk"
            )));
        }
        Ok(DiskPoint { re, im })
    }

    pub fn from_polar(r: f64, angle: f64) -> Result<Self> {
        Self::new(r * angle.cos(), r * angle.sin())
    }

    /// For internal use where the result is inside the disk by construction.
    pub(crate) fn new_unchecked(re: f64, im: f64) -> Self {
        debug_assert!(re * re + im * im < 1.0);
        DiskPoint { re, im }
    }

    pub fn re(&self) -> f64 {
        self.re
    }

    pub fn im(&self) -> f64 {
        self.im
    }

    pub fn abs(&self) -> f64 {
        self.re.hypot(self.im)
    }

    pub fn arg(&self) -> f64 {
        self.im.atan2(self.re)
    }

    pub fn to_complex(&self) -> Complex64 {
        Complex64::new(self.re, self.im)
    }
}

/// The Poisson kernel P_z(θ) = (1 − |z|²) / |1 − z e^{−iθ}|².
pub fn poisson_kernel(z: DiskPoint, theta: f64) -> f64 {
    let zc = z.to_complex();
    let denom = Complex64::new(1.0, 0.0) - zc * Complex64::from_polar(1.0, -theta);
    (1.0 - zc.norm_sqr()) / denom.norm_sqr()
}

/// Pseudo-hyperbolic distance |φ_z(w)| = |(z − w) / (1 − z̄ w)| ∈ [0, 1).
pub fn pseudo_hyperbolic(z: DiskPoint, w: DiskPoint) -> f64 {
    let (z, w) = (z.to_complex(), w.to_complex());
    ((z - w) / (Complex64::new(1.0, 0.0) - z.conj() * w)).norm()
}

/// Hyperbolic metric β(z, w) = ½ log((1 + ρ)/(1 − ρ)) with ρ = |φ_z(w)|.
pub fn hyperbolic_distance(z: DiskPoint, w: DiskPoint) -> f64 {
    pseudo_hyperbolic(z, w).atanh()
}

/// The disk automorphism φ_a(z) = (a − z) / (1 − ā z).
pub fn automorphism(a: DiskPoint, z: DiskPoint) -> DiskPoint {
    let (ac, zc) = (a.to_complex(), z.to_complex());
    let w = (ac - zc) / (Complex64::new(1.0, 0.0) - ac.conj() * zc);
    // Möbius maps of the disk stay inside; clamp only rounding overshoot.
    let n = w.norm();
    if n < 1.0 {
        DiskPoint::new_unchecked(w.re, w.im)
    } else {
        let s = (1.0 - 1e-15) / n;
        DiskPoint::new_unchecked(w.re * s, w.im * s)
    }
}

/// Chord length |e^{iθ} − e^{iφ}| = 2 |sin((θ − φ)/2)|.
pub fn chord(theta: f64, phi: f64) -> f64 {
    2.0 * ((theta - phi) / 2.0).sin().abs()
}

/// A closed arc of the unit circle, described by its center angle and length.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Arc {
    center: f64,
    length: f64,
}

impl Arc {
    /// Builds an arc with length in (0, 2π]; the center is normalized
    /// into [0, 2π).
    pub fn new(center: f64, length: f64) -> Result<Self> {
        if !center.is_finite() || !length.is_finite() {
            return Err(Error::InvalidParameter(
                "arc center and length must be finite".into(),
            ));
        }
        if length <= 0.0 || length > TAU {
            return Err(Error::InvalidParameter(format!(
                "arc length must lie in (0, 2pi], got {length}"
            )));
        }
        Ok(Arc {
            center: center.rem_euclid(TAU),
            length,
        })
    }

    pub fn full_circle() -> Self {
        Arc {
            center: 0.0,
            length: TAU,
        }
    }

    pub fn center(&self) -> f64 {
        self.center
    }

    pub fn length(&self) -> f64 {
        self.length
    }

    pub fn is_full_circle(&self) -> bool {
        self.length >= TAU - ANGLE_EPS
    }

    /// Membership test for e^{iψ}: |wrap(ψ − center)| ≤ length/2.
    pub fn contains(&self, psi: f64) -> bool {
        wrap_angle(psi - self.center).abs() <= self.length / 2.0 + ANGLE_EPS
    }

    /// The dilation 2ⁿI: same center, length min(2ⁿ |I|, 2π).
    pub fn dilate(&self, n: u32) -> Arc {
        let scale = 2f64.powi(n as i32);
        Arc {
            center: self.center,
            length: (self.length * scale).min(TAU),
        }
    }
}

/// Same-center dilation, clamped at the full circle.
pub fn dilate_arc(arc: Arc, n: u32) -> Arc {
    arc.dilate(n)
}

/// The two-shift dyadic arcs at a single scale k ≥ 1: the 2^k arcs of
/// length 2π/2^k centered at (2j+1)π/2^k, together with the same family
/// shifted by half an arc.
pub fn dyadic_arcs_at_scale(k: u32) -> Vec<Arc> {
    let count = 1usize << k;
    let length = TAU / count as f64;
    let mut arcs = Vec::with_capacity(2 * count);
    for j in 0..count {
        let center = (j as f64 + 0.5) * length;
        arcs.push(Arc::new(center, length).expect("dyadic arc"));
    }
    for j in 0..count {
        let center = (j as f64 + 1.0) * length;
        arcs.push(Arc::new(center, length).expect("dyadic arc"));
    }
    arcs
}

/// The two-shift dyadic grid down to `depth`: every arc of the circle of
/// length ≤ π/2 is contained in some grid arc of at most 4× its length.
pub fn dyadic_arcs(depth: u32) -> Result<Vec<Arc>> {
    if depth == 0 {
        return Err(Error::InvalidParameter(
            "dyadic depth must be at least 1".into(),
        ));
    }
    if depth > 24 {
        return Err(Error::InvalidParameter(format!(
            "dyadic depth {depth} exceeds the supported maximum 24"
        )));
    }
    let mut arcs = Vec::new();
    for k in 1..=depth {
        arcs.extend(dyadic_arcs_at_scale(k));
    }
    Ok(arcs)
}

/// The Carleson square S(I) = { r e^{it} : e^{it} ∈ I, 1 − |I|/2π ≤ r < 1 }.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CarlesonSquare {
    arc: Arc,
}

impl CarlesonSquare {
    pub fn new(arc: Arc) -> Self {
        CarlesonSquare { arc }
    }

    pub fn arc(&self) -> &Arc {
        &self.arc
    }

    /// Inner radius 1 − |I|/2π of the square.
    pub fn inner_radius(&self) -> f64 {
        (1.0 - self.arc.length / TAU).max(0.0)
    }

    pub fn contains(&self, z: DiskPoint) -> bool {
        z.abs() >= self.inner_radius() && self.arc.contains(z.arg())
    }
}

/// A hyperbolic disk D(z, r) = { w : β(z, w) < r }.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HyperbolicDisk {
    center: DiskPoint,
    radius: f64,
}

impl HyperbolicDisk {
    pub fn new(center: DiskPoint, radius: f64) -> Result<Self> {
        if !(radius > 0.0 && radius.is_finite()) {
            return Err(Error::InvalidParameter(format!(
                "hyperbolic radius must be positive and finite, got {radius}"
            )));
        }
        Ok(HyperbolicDisk { center, radius })
    }

    pub fn center(&self) -> DiskPoint {
        self.center
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }

    pub fn contains(&self, w: DiskPoint) -> bool {
        hyperbolic_distance(self.center, w) < self.radius
    }

    /// The Euclidean disk that D(z, r) occupies: with ρ = tanh r, the image
    /// has center z (1 − ρ²) / (1 − ρ²|z|²) and radius ρ (1 − |z|²) / (1 − ρ²|z|²).
    pub fn euclidean_image(&self) -> (Complex64, f64) {
        let rho = self.radius.tanh();
        let z = self.center.to_complex();
        let z2 = z.norm_sqr();
        let denom = 1.0 - rho * rho * z2;
        (z * ((1.0 - rho * rho) / denom), rho * (1.0 - z2) / denom)
    }
}
