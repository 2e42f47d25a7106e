//! Finite positive Borel measures on the disk: atoms, a unit-mass radial
//! segment, α-weighted area measures, (1 − |z|)^σ weight transforms, and a
//! mollified atom used to cross-validate the quadrature machinery against
//! the closed-form atomic paths.
//!
//! Atomic and radial-segment masses are computed exactly; the density
//! families go through deterministic built-in quadrature.

use std::f64::consts::TAU;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{dyadic_arcs_at_scale, Arc, CarlesonSquare, DiskPoint, HyperbolicDisk};
use crate::numerics::{gauss_legendre, line_rule};

/// A finite positive Borel measure on the unit disk.
#[derive(Debug, Clone)]
pub enum Measure {
    /// Point masses strictly inside the disk.
    Atomic(Vec<(DiskPoint, f64)>),
    /// Unit linear density on the radius { r e^{iψ} : 0 ≤ r < 1 }.
    RadialSegment { angle: f64 },
    /// dμ = (α+1)(1 − |z|²)^α dA, a probability measure for α > −1.
    WeightedArea { alpha: f64 },
    /// dν = (1 − |z|)^σ dμ over a base measure.
    WeightTransform { base: Box<Measure>, sigma: f64 },
    /// Uniform density of total mass `mass` on the Euclidean disk
    /// B(center, radius). Stand-in for an atom that forces every estimator
    /// through its density/quadrature path.
    MollifiedAtom {
        center: DiskPoint,
        mass: f64,
        radius: f64,
    },
}

/// Canonical evaluation form with weight-transform exponents folded in.
pub(crate) enum Support {
    Atoms(Vec<(DiskPoint, f64)>),
    Ray {
        angle: f64,
        sigma: f64,
    },
    Radial {
        alpha: f64,
        sigma: f64,
    },
    Cap {
        center: DiskPoint,
        mass: f64,
        radius: f64,
        sigma: f64,
    },
}

impl Measure {
    pub fn atomic(atoms: Vec<(DiskPoint, f64)>) -> Result<Self> {
        if atoms.is_empty() {
            return Err(Error::EmptyInput("atomic measure needs atoms".into()));
        }
        for &(_, m) in &atoms {
            if !(m > 0.0 && m.is_finite()) {
                return Err(Error::InvalidParameter(format!(
                    "atom mass must be positive and finite, got {m}"
                )));
            }
        }
        Ok(Measure::Atomic(atoms))
    }

    pub fn dirac(point: DiskPoint) -> Self {
        Measure::Atomic(vec![(point, 1.0)])
    }

    pub fn radial_segment(angle: f64) -> Result<Self> {
        if !angle.is_finite() {
            return Err(Error::InvalidParameter(
                "segment angle must be finite".into(),
            ));
        }
        Ok(Measure::RadialSegment {
            angle: angle.rem_euclid(TAU),
        })
    }

    pub fn weighted_area(alpha: f64) -> Result<Self> {
        if !(alpha > -1.0 && alpha.is_finite()) {
            return Err(Error::InvalidParameter(format!(
                "area weight exponent must exceed -1, got {alpha}"
            )));
        }
        Ok(Measure::WeightedArea { alpha })
    }

    pub fn mollified_atom(center: DiskPoint, mass: f64, radius: f64) -> Result<Self> {
        if !(mass > 0.0 && mass.is_finite()) {
            return Err(Error::InvalidParameter(format!(
                "mollified atom mass must be positive, got {mass}"
            )));
        }
        if !(radius > 0.0 && center.abs() + radius < 1.0) {
            return Err(Error::InvalidParameter(
                "mollified atom must sit strictly inside the disk".into(),
            ));
        }
        Ok(Measure::MollifiedAtom {
            center,
            mass,
            radius,
        })
    }

    pub(crate) fn support(&self) -> Support {
        match self {
            Measure::Atomic(atoms) => Support::Atoms(atoms.clone()),
            Measure::RadialSegment { angle } => Support::Ray {
                angle: *angle,
                sigma: 0.0,
            },
            Measure::WeightedArea { alpha } => Support::Radial {
                alpha: *alpha,
                sigma: 0.0,
            },
            Measure::MollifiedAtom {
                center,
                mass,
                radius,
            } => Support::Cap {
                center: *center,
                mass: *mass,
                radius: *radius,
                sigma: 0.0,
            },
            Measure::WeightTransform { base, sigma } => match base.support() {
                Support::Atoms(atoms) => Support::Atoms(
                    atoms
                        .into_iter()
                        .map(|(a, m)| (a, m * (1.0 - a.abs()).powf(*sigma)))
                        .collect(),
                ),
                Support::Ray { angle, sigma: s } => Support::Ray {
                    angle,
                    sigma: s + sigma,
                },
                Support::Radial { alpha, sigma: s } => Support::Radial {
                    alpha,
                    sigma: s + sigma,
                },
                Support::Cap {
                    center,
                    mass,
                    radius,
                    sigma: s,
                } => Support::Cap {
                    center,
                    mass,
                    radius,
                    sigma: s + sigma,
                },
            },
        }
    }

    /// Distance from the closest point mass to the boundary, if the measure
    /// carries spike-like mass. Density families return None.
    pub fn min_atom_boundary_gap(&self) -> Option<f64> {
        match self.support() {
            Support::Atoms(atoms) => atoms
                .iter()
                .map(|(a, _)| 1.0 - a.abs())
                .min_by(f64::total_cmp),
            Support::Cap { center, radius, .. } => Some(1.0 - center.abs() - radius),
            _ => None,
        }
    }

    /// μ(D), exact for atoms and plain families, quadrature otherwise.
    pub fn total_mass(&self) -> f64 {
        match self.support() {
            Support::Atoms(atoms) => atoms.iter().map(|&(_, m)| m).sum(),
            Support::Ray { sigma, .. } => 1.0 / (1.0 + sigma),
            Support::Radial { alpha, sigma } => {
                if sigma == 0.0 {
                    1.0
                } else {
                    radial_density_integral(alpha, sigma, 0.0)
                }
            }
            Support::Cap {
                center,
                mass,
                radius,
                sigma,
            } => {
                if sigma == 0.0 {
                    mass
                } else {
                    cap_integral(center, mass, radius, sigma, |_| 1.0)
                }
            }
        }
    }

    /// ∫ f dμ. Exact sum for atoms, built-in quadrature otherwise.
    pub fn integrate<F>(&self, f: F) -> Result<f64>
    where
        F: Fn(Complex64) -> f64,
    {
        let checked = |z: Complex64| -> Result<f64> {
            let v = f(z);
            if v.is_finite() {
                Ok(v)
            } else {
                Err(Error::NonFinite(format!(
                    "measure integrand at z = {:.6} + {:.6}i",
                    z.re, z.im
                )))
            }
        };
        match self.support() {
            Support::Atoms(atoms) => {
                let mut total = 0.0;
                for (a, m) in atoms {
                    total += m * checked(a.to_complex())?;
                }
                Ok(total)
            }
            Support::Ray { angle, sigma } => {
                let dir = Complex64::from_polar(1.0, angle);
                let mut total = 0.0;
                for (r, w) in line_rule(0.0, 1.0, RAY_LEVELS, RAY_ORDER) {
                    total += w * (1.0 - r).powf(sigma) * checked(r * dir)?;
                }
                Ok(total)
            }
            Support::Radial { alpha, sigma } => {
                let mut total = 0.0;
                for (r, w) in line_rule(0.0, 1.0, DENSITY_LEVELS, DENSITY_ORDER) {
                    let density =
                        (alpha + 1.0) * (1.0 - r * r).powf(alpha) * (1.0 - r).powf(sigma) * 2.0 * r;
                    let mut ring = 0.0;
                    for j in 0..DENSITY_ANGULAR {
                        let theta = TAU * j as f64 / DENSITY_ANGULAR as f64;
                        ring += checked(Complex64::from_polar(r, theta))?;
                    }
                    total += w * density * ring / DENSITY_ANGULAR as f64;
                }
                Ok(total)
            }
            Support::Cap {
                center,
                mass,
                radius,
                sigma,
            } => {
                let mut total = 0.0;
                for (z, w) in cap_nodes(center, radius) {
                    total +=
                        w * (mass / (radius * radius)) * (1.0 - z.norm()).powf(sigma) * checked(z)?;
                }
                Ok(total)
            }
        }
    }
}

impl Measure {
    /// Weighted point cloud (z_i, w_i) with ∫ f dμ ≈ Σ w_i f(z_i): the atoms
    /// themselves for atomic measures, quadrature nodes driven by `rule` for
    /// the density families.
    pub(crate) fn quadrature_atoms(
        &self,
        rule: &crate::numerics::QuadratureRule,
    ) -> Vec<(Complex64, f64)> {
        match self.support() {
            Support::Atoms(atoms) => atoms
                .into_iter()
                .map(|(a, m)| (a.to_complex(), m))
                .collect(),
            Support::Ray { angle, sigma } => {
                let dir = Complex64::from_polar(1.0, angle);
                line_rule(0.0, 1.0, rule.refinement_levels(), rule.radial_order())
                    .into_iter()
                    .map(|(r, w)| (r * dir, w * (1.0 - r).powf(sigma)))
                    .collect()
            }
            Support::Radial { alpha, sigma } => {
                let n_ang = rule.angular_count() as f64;
                let mut nodes = Vec::with_capacity(rule.node_count());
                for &(r, wr) in rule.radial_nodes() {
                    let w = wr * (alpha + 1.0) * (1.0 - r * r).powf(alpha) * (1.0 - r).powf(sigma)
                        / n_ang;
                    for theta in rule.angles() {
                        nodes.push((Complex64::from_polar(r, theta), w));
                    }
                }
                nodes
            }
            Support::Cap {
                center,
                mass,
                radius,
                sigma,
            } => cap_nodes(center, radius)
                .into_iter()
                .map(|(z, w)| {
                    (
                        z,
                        w * (mass / (radius * radius)) * (1.0 - z.norm()).powf(sigma),
                    )
                })
                .collect(),
        }
    }
}

/// dν = (1 − |z|)^σ dμ. Lazy wrapper; every estimator picks up the factor.
pub fn weight_transform(mu: Measure, sigma: f64) -> Result<Measure> {
    if !(sigma > 0.0 && sigma.is_finite()) {
        return Err(Error::InvalidParameter(format!(
            "weight transform exponent must be positive, got {sigma}"
        )));
    }
    Ok(Measure::WeightTransform {
        base: Box::new(mu),
        sigma,
    })
}

// Built-in quadrature sizes for the density paths. Fixed so that reports
// are reproducible bit-for-bit; masses of the test families come out well
// below the tolerances the estimators quote.
const RAY_ORDER: usize = 16;
const RAY_LEVELS: usize = 16;
const DENSITY_ORDER: usize = 24;
const DENSITY_LEVELS: usize = 18;
const DENSITY_ANGULAR: usize = 256;
const PATCH_ORDER: usize = 16;
const PATCH_LEVELS: usize = 10;
const PATCH_ANGULAR: usize = 128;

/// ∫_{r0}^{1} (α+1)(1 − r²)^α (1 − r)^σ 2r dr by banded Gauss–Legendre.
fn radial_density_integral(alpha: f64, sigma: f64, r0: f64) -> f64 {
    let mut total = 0.0;
    for (r, w) in line_rule(r0, 1.0, DENSITY_LEVELS, DENSITY_ORDER) {
        total += w * (alpha + 1.0) * (1.0 - r * r).powf(alpha) * (1.0 - r).powf(sigma) * 2.0 * r;
    }
    total
}

/// Quadrature nodes for a Euclidean disk patch B(center, radius), weighted
/// for normalized area measure, refined toward the patch rim.
fn patch_nodes(
    center: Complex64,
    radius: f64,
    order: usize,
    levels: usize,
    angular: usize,
) -> Vec<(Complex64, f64)> {
    let gl = gauss_legendre(order);
    let edges = crate::numerics::geometric_band_edges(0.0, radius, levels);
    let mut nodes = Vec::with_capacity(order * (edges.len() - 1) * angular);
    for pair in edges.windows(2) {
        let half = (pair[1] - pair[0]) / 2.0;
        let mid = (pair[1] + pair[0]) / 2.0;
        for &(x, w) in &gl {
            let rho = mid + half * x;
            let ring_weight = w * half * rho * 2.0 / angular as f64;
            for j in 0..angular {
                let phi = TAU * j as f64 / angular as f64;
                nodes.push((center + Complex64::from_polar(rho, phi), ring_weight));
            }
        }
    }
    nodes
}

fn cap_nodes(center: DiskPoint, radius: f64) -> Vec<(Complex64, f64)> {
    patch_nodes(center.to_complex(), radius, 8, 2, 32)
}

fn cap_integral<F>(center: DiskPoint, mass: f64, radius: f64, sigma: f64, f: F) -> f64
where
    F: Fn(Complex64) -> f64,
{
    let mut total = 0.0;
    for (z, w) in cap_nodes(center, radius) {
        total += w * (mass / (radius * radius)) * (1.0 - z.norm()).powf(sigma) * f(z);
    }
    total
}

/// μ(S(I)): exact membership sums for atoms and the radial segment,
/// quadrature restricted to the square for the density families.
pub fn mass_of_square(mu: &Measure, square: &CarlesonSquare) -> f64 {
    let arc = square.arc();
    let r0 = square.inner_radius();
    match mu.support() {
        Support::Atoms(atoms) => atoms
            .iter()
            .filter(|(a, _)| square.contains(*a))
            .map(|&(_, m)| m)
            .sum(),
        Support::Ray { angle, sigma } => {
            if arc.contains(angle) {
                // The segment meets the square in r ∈ [r0, 1).
                (1.0 - r0).powf(sigma + 1.0) / (sigma + 1.0)
            } else {
                0.0
            }
        }
        Support::Radial { alpha, sigma } => {
            // The density is rotation invariant, so the angular factor of the
            // restricted rule is exactly |I| / 2π.
            arc.length() / TAU * radial_density_integral(alpha, sigma, r0)
        }
        Support::Cap {
            center,
            mass,
            radius,
            sigma,
        } => cap_integral(center, mass, radius, sigma, |z| {
            let p = DiskPoint::new(z.re, z.im).expect("cap node inside disk");
            if square.contains(p) {
                1.0
            } else {
                0.0
            }
        }),
    }
}

/// μ(D(z, r)): exact for atoms; for density families the hyperbolic disk is
/// replaced by its closed-form Euclidean image and integrated by quadrature.
pub fn mass_of_hyperbolic_disk(mu: &Measure, disk: &HyperbolicDisk) -> f64 {
    match mu.support() {
        Support::Atoms(atoms) => atoms
            .iter()
            .filter(|(a, _)| disk.contains(*a))
            .map(|&(_, m)| m)
            .sum(),
        Support::Ray { angle, sigma } => {
            let (c, radius) = disk.euclidean_image();
            // r e^{iψ} inside the image disk solves a real quadratic in r.
            let proj = (c * Complex64::from_polar(1.0, -angle)).re;
            let disc = proj * proj - (c.norm_sqr() - radius * radius);
            if disc <= 0.0 {
                return 0.0;
            }
            let lo = (proj - disc.sqrt()).clamp(0.0, 1.0);
            let hi = (proj + disc.sqrt()).clamp(0.0, 1.0);
            if hi <= lo {
                return 0.0;
            }
            ((1.0 - lo).powf(sigma + 1.0) - (1.0 - hi).powf(sigma + 1.0)) / (sigma + 1.0)
        }
        Support::Radial { alpha, sigma } => {
            let (c, radius) = disk.euclidean_image();
            let mut total = 0.0;
            for (z, w) in patch_nodes(c, radius, PATCH_ORDER, PATCH_LEVELS, PATCH_ANGULAR) {
                let r = z.norm();
                total += w * (alpha + 1.0) * (1.0 - r * r).powf(alpha) * (1.0 - r).powf(sigma);
            }
            total
        }
        Support::Cap {
            center,
            mass,
            radius,
            sigma,
        } => {
            let (c, image_radius) = disk.euclidean_image();
            cap_integral(center, mass, radius, sigma, |z| {
                if (z - c).norm() < image_radius {
                    1.0
                } else {
                    0.0
                }
            })
        }
    }
}

/// Either kind of region an empirical Carleson constant can be attained on.
#[derive(Debug, Clone, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Region {
    Arc { center: f64, length: f64 },
    HyperbolicDisk { re: f64, im: f64, radius: f64 },
}

/// One scale of a Carleson sweep.
#[derive(Debug, Clone, Serialize)]
pub struct ScaleSample {
    pub scale_index: u32,
    /// Arc length for square sweeps, 1 − |z|² for hyperbolic sweeps.
    pub extent: f64,
    pub max_ratio: f64,
    pub max_mass: f64,
}

/// Empirical s-Carleson data: the supremum of μ(S(I)) / |I|^s over a region
/// family, its argmax, and per-scale maxima for trend fitting.
#[derive(Debug, Clone, Serialize)]
pub struct CarlesonReport {
    pub exponent: f64,
    pub empirical_constant: f64,
    pub argmax_region: Region,
    pub samples: Vec<ScaleSample>,
    pub notes: Vec<String>,
}

impl CarlesonReport {
    pub fn is_finite(&self) -> bool {
        self.empirical_constant.is_finite() && self.samples.iter().all(|s| s.max_ratio.is_finite())
    }
}

/// Empirical sup of μ(S(I)) / |I|^s over the two-shift dyadic grid down to
/// `depth`, plus the full circle as scale 0.
pub fn carleson_constant(mu: &Measure, s: f64, depth: u32) -> Result<CarlesonReport> {
    if !(s > 0.0 && s.is_finite()) {
        return Err(Error::InvalidParameter(format!(
            "Carleson exponent must be positive, got {s}"
        )));
    }
    if depth == 0 {
        return Err(Error::InvalidParameter(
            "sweep depth must be at least 1".into(),
        ));
    }
    let mut samples = Vec::with_capacity(depth as usize + 1);
    let mut best_ratio = f64::NEG_INFINITY;
    let mut argmax = Arc::full_circle();
    for k in 0..=depth {
        let arcs = if k == 0 {
            vec![Arc::full_circle()]
        } else {
            dyadic_arcs_at_scale(k)
        };
        let mut scale_max = f64::NEG_INFINITY;
        let mut scale_mass = 0.0;
        for arc in arcs {
            let mass = mass_of_square(mu, &CarlesonSquare::new(arc));
            let ratio = mass / arc.length().powf(s);
            if ratio > scale_max {
                scale_max = ratio;
                scale_mass = mass;
            }
            if ratio > best_ratio {
                best_ratio = ratio;
                argmax = arc;
            }
        }
        samples.push(ScaleSample {
            scale_index: k,
            extent: TAU / 2f64.powi(k as i32),
            max_ratio: scale_max,
            max_mass: scale_mass,
        });
    }
    let mut notes = Vec::new();
    if let Some(gap) = mu.min_atom_boundary_gap() {
        if gap < 2f64.powi(-(depth as i32)) {
            notes.push(format!(
                "point mass sits {gap:.3e} from the boundary, below the finest \
                 dyadic scale {:.3e}; the grid cannot resolve its Carleson behavior",
                2f64.powi(-(depth as i32))
            ));
        }
    }
    Ok(CarlesonReport {
        exponent: s,
        empirical_constant: best_ratio,
        argmax_region: Region::Arc {
            center: argmax.center(),
            length: argmax.length(),
        },
        samples,
        notes,
    })
}

/// Empirical sup of μ(D(z, r)) / (1 − |z|²)^s over the given centers.
/// The hypothesis of the square/disk equivalence needs s > 1.
pub fn carleson_constant_hyperbolic(
    mu: &Measure,
    s: f64,
    r: f64,
    centers: &[DiskPoint],
) -> Result<CarlesonReport> {
    if !(s > 1.0 && s.is_finite()) {
        return Err(Error::InvalidParameter(format!(
            "hyperbolic Carleson exponent must exceed 1, got {s}"
        )));
    }
    if !(r > 0.0 && r.is_finite()) {
        return Err(Error::InvalidParameter(format!(
            "hyperbolic radius must be positive, got {r}"
        )));
    }
    if centers.is_empty() {
        return Err(Error::EmptyInput("hyperbolic sweep needs centers".into()));
    }
    let mut best_ratio = f64::NEG_INFINITY;
    let mut argmax = HyperbolicDisk::new(centers[0], r)?;
    let mut by_scale: std::collections::BTreeMap<u32, (f64, f64, f64)> =
        std::collections::BTreeMap::new();
    for &z in centers {
        let disk = HyperbolicDisk::new(z, r)?;
        let mass = mass_of_hyperbolic_disk(mu, &disk);
        let height = 1.0 - z.abs() * z.abs();
        let ratio = mass / height.powf(s);
        let scale = (-(1.0 - z.abs()).log2()).floor().max(0.0) as u32;
        let entry = by_scale
            .entry(scale)
            .or_insert((f64::NEG_INFINITY, 0.0, height));
        if ratio > entry.0 {
            *entry = (ratio, mass, height);
        }
        if ratio > best_ratio {
            best_ratio = ratio;
            argmax = disk;
        }
    }
    let samples = by_scale
        .into_iter()
        .map(|(scale_index, (max_ratio, max_mass, extent))| ScaleSample {
            scale_index,
            extent,
            max_ratio,
            max_mass,
        })
        .collect();
    Ok(CarlesonReport {
        exponent: s,
        empirical_constant: best_ratio,
        argmax_region: Region::HyperbolicDisk {
            re: argmax.center().re(),
            im: argmax.center().im(),
            radius: r,
        },
        samples,
        notes: Vec::new(),
    })
}

/// The default hyperbolic sweep: `rays` directions × radii 1 − 2^{−k},
/// k = 1..=levels.
pub fn standard_hyperbolic_centers(rays: usize, levels: u32) -> Vec<DiskPoint> {
    let mut centers = Vec::with_capacity(rays * levels as usize);
    for k in 1..=levels {
        let radius = 1.0 - 2f64.powi(-(k as i32));
        for j in 0..rays {
            let angle = TAU * j as f64 / rays as f64;
            centers.push(DiskPoint::from_polar(radius, angle).expect("inside disk"));
        }
    }
    centers
}

/// Least-squares slope of log(mass) against log(extent) over the samples
/// with positive mass. Needs at least `min_points` usable scales.
pub fn fit_log_log_slope(samples: &[ScaleSample], min_points: usize) -> Result<f64> {
    let pts: Vec<(f64, f64)> = samples
        .iter()
        .filter(|s| s.max_mass > 0.0)
        .map(|s| (s.extent.ln(), s.max_mass.ln()))
        .collect();
    if pts.len() < min_points {
        return Err(Error::Degenerate(format!(
            "log-log fit needs at least {min_points} scales with positive mass, got {}",
            pts.len()
        )));
    }
    let n = pts.len() as f64;
    let sx: f64 = pts.iter().map(|p| p.0).sum();
    let sy: f64 = pts.iter().map(|p| p.1).sum();
    let sxx: f64 = pts.iter().map(|p| p.0 * p.0).sum();
    let sxy: f64 = pts.iter().map(|p| p.0 * p.1).sum();
    Ok((n * sxy - sx * sy) / (n * sxx - sx * sx))
}

/// JSON measure description: the wire format consumed by the CLI.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case", deny_unknown_fields)]
pub enum MeasureSpec {
    Atomic { atoms: Vec<AtomSpec> },
    RadialSegment { angle: f64 },
    WeightedArea { alpha: f64 },
    WeightTransform { sigma: f64, base: Box<MeasureSpec> },
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AtomSpec {
    pub re: f64,
    pub im: f64,
    pub mass: f64,
}

impl MeasureSpec {
    pub fn build(&self) -> Result<Measure> {
        match self {
            MeasureSpec::Atomic { atoms } => {
                let mut parsed = Vec::with_capacity(atoms.len());
                for a in atoms {
                    parsed.push((DiskPoint::new(a.re, a.im)?, a.mass));
                }
                Measure::atomic(parsed)
            }
            MeasureSpec::RadialSegment { angle } => Measure::radial_segment(*angle),
            MeasureSpec::WeightedArea { alpha } => Measure::weighted_area(*alpha),
            MeasureSpec::WeightTransform { sigma, base } => weight_transform(base.build()?, *sigma),
        }
    }
}

impl Measure {
    /// Parses the tagged JSON measure schema.
    pub fn from_json(json: &str) -> Result<Measure> {
        let spec: MeasureSpec = serde_json::from_str(json)
            .map_err(|e| Error::InvalidParameter(format!("measure schema: {e}")))?;
        spec.build()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::hyperbolic_distance;
    use std::f64::consts::PI;

    fn close(a: f64, b: f64, tol: f64) {
        assert!((a - b).abs() <= tol, "{a} vs {b} (tol {tol})");
    }

    fn square(center: f64, length: f64) -> CarlesonSquare {
        CarlesonSquare::new(Arc::new(center, length).unwrap())
    }

    #[test]
    fn dirac_at_origin_misses_every_proper_square() {
        let mu = Measure::dirac(DiskPoint::ORIGIN);
        for length in [0.1, 1.0, PI, TAU - 0.01] {
            close(mass_of_square(&mu, &square(0.0, length)), 0.0, 0.0);
        }
        close(mass_of_square(&mu, &square(0.0, TAU)), 1.0, 0.0);
    }

    #[test]
    fn radial_segment_square_mass_is_depth() {
        let mu = Measure::radial_segment(0.0).unwrap();
        for length in [0.2, 1.0, PI / 2.0] {
            close(
                mass_of_square(&mu, &square(0.0, length)),
                length / TAU,
                1e-14,
            );
        }
        close(mass_of_square(&mu, &square(PI, 1.0)), 0.0, 0.0);
    }

    #[test]
    fn weighted_area_square_mass_closed_form() {
        let mu = Measure::weighted_area(0.0).unwrap();
        for length in [0.3, 1.0, PI / 2.0, PI] {
            let x = length / TAU;
            let expected = x * (1.0 - (1.0 - x) * (1.0 - x));
            close(mass_of_square(&mu, &square(1.2, length)), expected, 1e-8);
        }
    }

    #[test]
    fn weight_transform_square_mass_closed_form() {
        let mu = weight_transform(Measure::weighted_area(0.0).unwrap(), 2.0).unwrap();
        for length in [0.5, 1.5] {
            let x = length / TAU;
            // ∫_0^x u² 2(1−u) du = 2(x³/3 − x⁴/4), times the angular fraction x.
            let expected = x * 2.0 * (x.powi(3) / 3.0 - x.powi(4) / 4.0);
            close(mass_of_square(&mu, &square(0.0, length)), expected, 1e-10);
        }
    }

    #[test]
    fn weight_transform_atoms_and_total_mass() {
        let a = DiskPoint::new(0.6, 0.0).unwrap();
        let mu = Measure::atomic(vec![(a, 2.0)]).unwrap();
        let nu = weight_transform(mu.clone(), 1.5).unwrap();
        close(nu.total_mass(), 2.0 * 0.4f64.powf(1.5), 1e-14);
        assert!(nu.total_mass() <= mu.total_mass());
        assert!(weight_transform(mu, 0.0).is_err());
    }

    #[test]
    fn weight_transform_total_mass_never_exceeds_base() {
        let bases = [
            Measure::dirac(DiskPoint::new(0.3, 0.4).unwrap()),
            Measure::radial_segment(1.0).unwrap(),
            Measure::weighted_area(0.5).unwrap(),
            Measure::mollified_atom(DiskPoint::new(0.5, 0.1).unwrap(), 1.0, 1e-2).unwrap(),
        ];
        for base in bases {
            for sigma in [0.5, 2.0] {
                let nu = weight_transform(base.clone(), sigma).unwrap();
                assert!(nu.total_mass() <= base.total_mass() + 1e-12);
            }
        }
    }

    #[test]
    fn atomic_square_mass_is_additive() {
        let a = (DiskPoint::new(0.9, 0.0).unwrap(), 0.7);
        let b = (DiskPoint::new(0.0, 0.85).unwrap(), 1.3);
        let both = Measure::atomic(vec![a, b]).unwrap();
        let first = Measure::atomic(vec![a]).unwrap();
        let second = Measure::atomic(vec![b]).unwrap();
        for length in [0.5, 1.0, 2.0, PI] {
            for center in [0.0, PI / 2.0, PI] {
                let sq = square(center, length);
                assert_eq!(
                    mass_of_square(&both, &sq),
                    mass_of_square(&first, &sq) + mass_of_square(&second, &sq)
                );
            }
        }
    }

    #[test]
    fn hyperbolic_disk_masses() {
        let a = DiskPoint::new(0.4, 0.2).unwrap();
        let mu = Measure::atomic(vec![(a, 2.5)]).unwrap();
        let near = HyperbolicDisk::new(a, 0.7).unwrap();
        close(mass_of_hyperbolic_disk(&mu, &near), 2.5, 0.0);
        let far_center = DiskPoint::new(-0.8, 0.0).unwrap();
        let far = HyperbolicDisk::new(far_center, 0.5).unwrap();
        assert!(hyperbolic_distance(far_center, a) > 0.5);
        close(mass_of_hyperbolic_disk(&mu, &far), 0.0, 0.0);
    }

    #[test]
    fn hyperbolic_disk_area_mass_closed_form() {
        // D(0, r) is the Euclidean disk of radius tanh r; its normalized
        // area is tanh² r.
        let mu = Measure::weighted_area(0.0).unwrap();
        for r in [0.4, 0.8, 1.5] {
            let disk = HyperbolicDisk::new(DiskPoint::ORIGIN, r).unwrap();
            close(
                mass_of_hyperbolic_disk(&mu, &disk),
                r.tanh() * r.tanh(),
                1e-8,
            );
        }
        // Off-center: the image is still a Euclidean disk; for dA its mass
        // is the squared image radius.
        let z = DiskPoint::new(0.5, -0.3).unwrap();
        let disk = HyperbolicDisk::new(z, 1.0).unwrap();
        let (_, image_radius) = disk.euclidean_image();
        close(
            mass_of_hyperbolic_disk(&mu, &disk),
            image_radius * image_radius,
            1e-8,
        );
    }

    #[test]
    fn ray_hyperbolic_mass_matches_interval() {
        let mu = Measure::radial_segment(0.0).unwrap();
        let disk = HyperbolicDisk::new(DiskPoint::new(0.5, 0.0).unwrap(), 0.6).unwrap();
        let (c, radius) = disk.euclidean_image();
        let expected = ((c.re + radius).min(1.0) - (c.re - radius).max(0.0)).max(0.0);
        close(mass_of_hyperbolic_disk(&mu, &disk), expected, 1e-12);
        // A disk whose image misses the ray entirely.
        let off = HyperbolicDisk::new(DiskPoint::new(0.0, 0.7).unwrap(), 0.3).unwrap();
        close(mass_of_hyperbolic_disk(&mu, &off), 0.0, 0.0);
    }

    #[test]
    fn carleson_constant_dirac_origin() {
        let mu = Measure::dirac(DiskPoint::ORIGIN);
        let report = carleson_constant(&mu, 1.0, 10).unwrap();
        close(report.empirical_constant, 1.0 / TAU, 1e-14);
        match report.argmax_region {
            Region::Arc { length, .. } => close(length, TAU, 0.0),
            _ => panic!("expected arc argmax"),
        }
        // Only the full circle captures the origin.
        for s in &report.samples[1..] {
            close(s.max_ratio, 0.0, 0.0);
        }
    }

    #[test]
    fn carleson_constant_radial_segment_flat_across_scales() {
        let mu = Measure::radial_segment(0.0).unwrap();
        let report = carleson_constant(&mu, 1.0, 10).unwrap();
        for s in &report.samples {
            close(s.max_ratio, 1.0 / TAU, 1e-12);
        }
        close(report.empirical_constant, 1.0 / TAU, 1e-12);
    }

    #[test]
    fn carleson_slopes_recover_exponents() {
        let mu = Measure::weighted_area(0.0).unwrap();
        let report = carleson_constant(&mu, 2.0, 10).unwrap();
        assert!(report.is_finite());
        let slope = fit_log_log_slope(&report.samples[4..], 4).unwrap();
        close(slope, 2.0, 0.05);

        let nu = weight_transform(mu, 2.0).unwrap();
        let report_nu = carleson_constant(&nu, 4.0, 10).unwrap();
        let slope_nu = fit_log_log_slope(&report_nu.samples[4..], 4).unwrap();
        close(slope_nu, 4.0, 0.1);
        close(slope_nu - slope, 2.0, 0.1);
    }

    #[test]
    fn hyperbolic_sweep_bounded_for_area_measure() {
        let mu = Measure::weighted_area(0.0).unwrap();
        let centers = standard_hyperbolic_centers(16, 7);
        let report = carleson_constant_hyperbolic(&mu, 2.0, 1.0, &centers).unwrap();
        assert!(report.is_finite());
        // Closed form: μ(D(z,1)) = R², ratio = ρ² / (1 − ρ²|z|²)² with ρ = tanh 1.
        let rho = 1f64.tanh();
        let bound = rho * rho / (1.0 - rho * rho).powi(2);
        for s in &report.samples {
            assert!(s.max_ratio <= bound * (1.0 + 1e-6));
        }
        for &z in &centers[..8] {
            let disk = HyperbolicDisk::new(z, 1.0).unwrap();
            let (_, image_radius) = disk.euclidean_image();
            close(
                mass_of_hyperbolic_disk(&mu, &disk),
                image_radius * image_radius,
                1e-6,
            );
        }
    }

    #[test]
    fn hyperbolic_sweep_zero_away_from_atom() {
        let mu = Measure::dirac(DiskPoint::ORIGIN);
        let centers = standard_hyperbolic_centers(8, 4);
        let report = carleson_constant_hyperbolic(&mu, 2.0, 0.5, &centers).unwrap();
        close(report.empirical_constant, 0.0, 0.0);
        assert!(carleson_constant_hyperbolic(&mu, 2.0, 0.5, &[]).is_err());
        assert!(carleson_constant_hyperbolic(&mu, 1.0, 0.5, &centers).is_err());
    }

    #[test]
    fn hyperbolic_mass_monotone_in_radius() {
        let measures = [
            Measure::dirac(DiskPoint::new(0.3, 0.1).unwrap()),
            Measure::weighted_area(0.0).unwrap(),
            Measure::radial_segment(0.4).unwrap(),
        ];
        let center = DiskPoint::new(0.2, -0.2).unwrap();
        for mu in &measures {
            let mut prev = 0.0;
            for r in [0.2, 0.5, 1.0, 2.0] {
                let disk = HyperbolicDisk::new(center, r).unwrap();
                let mass = mass_of_hyperbolic_disk(mu, &disk);
                assert!(mass >= prev - 1e-12);
                prev = mass;
            }
        }
    }

    #[test]
    fn square_and_disk_sweeps_agree_on_finiteness() {
        // For s > 1 both estimators stay finite together, with suprema
        // within 10³ of their scale-4 samples.
        let measures = [
            Measure::weighted_area(0.0).unwrap(),
            weight_transform(Measure::weighted_area(0.0).unwrap(), 1.0).unwrap(),
            Measure::dirac(DiskPoint::new(0.5, 0.0).unwrap()),
        ];
        let centers = standard_hyperbolic_centers(16, 10);
        for mu in &measures {
            let sq = carleson_constant(mu, 2.0, 10).unwrap();
            let hy = carleson_constant_hyperbolic(mu, 2.0, 1.0, &centers).unwrap();
            assert!(sq.is_finite() && hy.is_finite());
            for report in [&sq, &hy] {
                if let Some(sample) = report
                    .samples
                    .iter()
                    .find(|s| s.scale_index == 4 && s.max_ratio > 0.0)
                {
                    assert!(report.empirical_constant <= 1e3 * sample.max_ratio);
                }
            }
        }
    }

    #[test]
    fn boundary_atom_is_flagged() {
        let mu = Measure::dirac(DiskPoint::new(1.0 - 1e-4, 0.0).unwrap());
        let report = carleson_constant(&mu, 1.0, 10).unwrap();
        assert!(!report.notes.is_empty());
        let inner = Measure::dirac(DiskPoint::new(0.5, 0.0).unwrap());
        assert!(carleson_constant(&inner, 1.0, 10).unwrap().notes.is_empty());
    }

    #[test]
    fn measure_schema_round_trip() {
        let json = r#"{
            "type": "weight_transform",
            "sigma": 2.0,
            "base": {"type": "weighted_area", "alpha": 0.0}
        }"#;
        let mu = Measure::from_json(json).unwrap();
        match mu {
            Measure::WeightTransform { sigma, .. } => close(sigma, 2.0, 0.0),
            _ => panic!("expected weight transform"),
        }
        let atoms = r#"{"type":"atomic","atoms":[{"re":0.5,"im":0.0,"mass":1.0}]}"#;
        assert!(Measure::from_json(atoms).is_ok());
        assert!(Measure::from_json(r#"{"type":"atomic","atoms":[]}"#).is_err());
        assert!(Measure::from_json(
            r#"{"type":"atomic","atoms":[{"re":2.0,"im":0.0,"mass":1.0}]}"#
        )
        .is_err());
        assert!(Measure::from_json(r#"{"type":"weighted_area","alpha":-1.5}"#).is_err());
        assert!(Measure::from_json(r#"{"type":"nonsense"}"#).is_err());
    }

    #[test]
    fn mollified_atom_tracks_its_atom() {
        let center = DiskPoint::new(0.53 * (0.3f64).cos(), 0.53 * (0.3f64).sin()).unwrap();
        let atom = Measure::dirac(center);
        let cap = Measure::mollified_atom(center, 1.0, 1e-3).unwrap();
        close(cap.total_mass(), 1.0, 1e-9);
        for length in [1.0, 2.0, PI, 5.0] {
            for arc_center in [0.0, 0.3, 2.0] {
                let sq = square(arc_center, length);
                let exact = mass_of_square(&atom, &sq);
                let soft = mass_of_square(&cap, &sq);
                assert!(
                    (exact - soft).abs() <= 0.05 * exact.max(soft) + 1e-9,
                    "square ({arc_center}, {length}): {exact} vs {soft}"
                );
            }
        }
    }

    #[test]
    fn integrate_matches_atoms() {
        let a = DiskPoint::new(0.2, 0.3).unwrap();
        let mu = Measure::atomic(vec![(a, 2.0)]).unwrap();
        let v = mu.integrate(|z| z.re + z.im * z.im).unwrap();
        close(v, 2.0 * (0.2 + 0.09), 1e-15);
        // Area measure: ∫ |z|² dA = 1/2.
        let area = Measure::weighted_area(0.0).unwrap();
        close(area.integrate(|z| z.norm_sqr()).unwrap(), 0.5, 1e-10);
        // Ray: ∫_0^1 r² dr = 1/3.
        let ray = Measure::radial_segment(0.0).unwrap();
        close(ray.integrate(|z| z.norm_sqr()).unwrap(), 1.0 / 3.0, 1e-12);
        assert!(area.integrate(|z| 1.0 / (z.re - z.re)).is_err());
    }
}
