//! Theorem-level verification suites.
//!
//! Each suite sweeps a measure (or test function) across scales, point
//! pairs, or test classes, collects ratio samples, and renders a verdict.
//! The theorems assert existence of unquantified constants, so the testable
//! claim is "no blow-up across the computed scales": the finest samples
//! must stay within a fixed factor of the median. That trend rule is
//! defined once here and shared by every suite.

use std::f64::consts::TAU;
use std::ops::RangeInclusive;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::geometry::{dyadic_arcs_at_scale, hyperbolic_distance, DiskPoint};
use crate::measures::{
    carleson_constant, carleson_constant_hyperbolic, fit_log_log_slope, weight_transform,
    CarlesonReport, Measure,
};
use crate::numerics::{build_disk_rule, integrate_disk, ArcPairRule, QuadratureRule};
use crate::operators::{b_balayage, balayage, besov_norm, Polynomial};
use crate::parallel::par_map;
use crate::seminorms::{mean_oscillation, thm1_functional};

/// Boundedness verdict: the finest-scale maxima must stay within this
/// factor of the median across scales.
pub const TREND_FACTOR: f64 = 3.0;

/// Ratios below this are treated as numerically zero.
pub const NUMERICAL_ZERO: f64 = 1e-12;

/// Acceptable spread between the square and hyperbolic-disk empirical
/// Carleson constants in the equivalence suite.
pub const EQUIVALENCE_WINDOW: (f64, f64) = (1e-3, 1e3);

/// Tolerance on the recovered slope shift in the weight-transform suite.
pub const SLOPE_TOLERANCE: f64 = 0.1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum TheoremId {
    #[serde(rename = "THM1")]
    Thm1,
    #[serde(rename = "CAMPANATO")]
    Campanato,
    #[serde(rename = "BBAL_LIP")]
    BbalLip,
    #[serde(rename = "BESOV_LIP")]
    BesovLip,
    #[serde(rename = "WEIGHT_SHIFT")]
    WeightShift,
    #[serde(rename = "EMBEDDING")]
    Embedding,
    #[serde(rename = "SQUARE_DISK")]
    SquareDisk,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Verdict {
    #[serde(rename = "BOUNDED")]
    Bounded,
    #[serde(rename = "TREND_VIOLATION")]
    TrendViolation,
    #[serde(rename = "RESOLUTION_LIMITED")]
    ResolutionLimited,
}

impl Verdict {
    /// Process exit status the CLI maps each verdict to.
    pub fn exit_code(&self) -> i32 {
        match self {
            Verdict::Bounded => 0,
            Verdict::TrendViolation => 3,
            Verdict::ResolutionLimited => 4,
        }
    }
}

/// The suite parameters that were actually in play.
#[derive(Debug, Clone, Default, Serialize)]
pub struct Parameters {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub s: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gamma: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sigma: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alpha: Option<f64>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Sample {
    pub label: String,
    pub ratio: f64,
}

/// Per-theorem verification record: every ratio sample, the empirical
/// supremum, the verdict, and the accumulated truncation budget.
#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub theorem_id: TheoremId,
    pub parameters: Parameters,
    pub samples: Vec<Sample>,
    pub empirical_sup: f64,
    pub verdict: Verdict,
    pub error_budget: f64,
}

impl VerificationReport {
    fn assemble(
        theorem_id: TheoremId,
        parameters: Parameters,
        samples: Vec<Sample>,
        verdict: Verdict,
        error_budget: f64,
    ) -> Self {
        let empirical_sup = samples.iter().map(|s| s.ratio).fold(0.0, f64::max);
        VerificationReport {
            theorem_id,
            parameters,
            samples,
            empirical_sup,
            verdict,
            error_budget,
        }
    }

    pub fn to_json(&self) -> String {
        let mut json = serde_json::to_string_pretty(self).expect("report serializes");
        json.push('\n');
        json
    }

    /// CSV dump of the samples table, columns `label,ratio`.
    pub fn samples_csv(&self) -> String {
        let mut out = String::from("label,ratio\n");
        for s in &self.samples {
            out.push_str(&format!("{},{}\n", s.label, s.ratio));
        }
        out
    }
}

fn median(values: &[f64]) -> f64 {
    let mut sorted: Vec<f64> = values.to_vec();
    sorted.sort_by(f64::total_cmp);
    let n = sorted.len();
    if n == 0 {
        0.0
    } else if n % 2 == 1 {
        sorted[n / 2]
    } else {
        0.5 * (sorted[n / 2 - 1] + sorted[n / 2])
    }
}

/// The shared trend rule: max over the finest (up to) three scales within
/// `TREND_FACTOR` × median over all scales. All-zero profiles are bounded.
pub fn scale_trend_verdict(per_scale_maxima: &[f64]) -> Verdict {
    if per_scale_maxima.iter().all(|v| v.abs() <= NUMERICAL_ZERO) {
        return Verdict::Bounded;
    }
    let take = per_scale_maxima.len().min(3);
    let finest = per_scale_maxima[per_scale_maxima.len() - take..]
        .iter()
        .fold(0.0f64, |a, &b| a.max(b));
    if finest <= TREND_FACTOR * median(per_scale_maxima) + NUMERICAL_ZERO {
        Verdict::Bounded
    } else {
        Verdict::TrendViolation
    }
}

/// Tier rule for pair suites. The boundary-approaching tier is built as a
/// scale sequence |z| = 1 − 2^{−k}, so the shared trend rule applies to its
/// per-level maxima: blow-up in k is what the Hölder bounds forbid. For a
/// rotation-invariant measure the interior ratios can sit an order of
/// magnitude below the constant the boundary attains, so they serve as the
/// reference only when no boundary levels were sampled.
fn tier_verdict(boundary_by_level: &[(u32, f64)], interior: &[f64], all: &[f64]) -> Verdict {
    if all.iter().all(|v| v.abs() <= NUMERICAL_ZERO) {
        return Verdict::Bounded;
    }
    if boundary_by_level.is_empty() {
        let extreme = all.iter().fold(0.0f64, |a, &b| a.max(b));
        let reference = if interior.is_empty() {
            median(all)
        } else {
            median(interior)
        };
        return if extreme <= TREND_FACTOR * reference + NUMERICAL_ZERO {
            Verdict::Bounded
        } else {
            Verdict::TrendViolation
        };
    }
    let per_level: Vec<f64> = boundary_by_level.iter().map(|&(_, v)| v).collect();
    scale_trend_verdict(&per_level)
}

/// Verdict for suites whose "hard" tier has no scale structure: its maximum
/// must stay within `TREND_FACTOR` × the median of the reference tier.
fn cross_tier_verdict(hard: &[f64], reference: &[f64], all: &[f64]) -> Verdict {
    if all.iter().all(|v| v.abs() <= NUMERICAL_ZERO) {
        return Verdict::Bounded;
    }
    let reference_median = if reference.is_empty() {
        median(all)
    } else {
        median(reference)
    };
    let extreme = if hard.is_empty() {
        all.iter().fold(0.0f64, |a, &b| a.max(b))
    } else {
        hard.iter().fold(0.0f64, |a, &b| a.max(b))
    };
    if extreme <= TREND_FACTOR * reference_median + NUMERICAL_ZERO {
        Verdict::Bounded
    } else {
        Verdict::TrendViolation
    }
}

/// Dyadic boundary level of a pair: how close its deeper endpoint sits to
/// the circle, as k in |z| ≈ 1 − 2^{−k}.
fn pair_level(z: DiskPoint, w: DiskPoint) -> u32 {
    let r = z.abs().max(w.abs());
    (-(1.0 - r).log2()).round().max(0.0) as u32
}

/// Quadrature and grid sizes shared by the suites.
#[derive(Debug, Clone)]
pub struct HarnessConfig {
    pub radial_count: usize,
    pub angular_count: usize,
    pub refinement_levels: usize,
    /// Boundary grid size for balayage-based suites.
    pub boundary_nodes: usize,
    /// Gauss–Legendre orders of the singular double-arc rule.
    pub pair_u_order: usize,
    pub pair_theta_order: usize,
}

impl Default for HarnessConfig {
    fn default() -> Self {
        HarnessConfig {
            radial_count: 12,
            angular_count: 2048,
            refinement_levels: 12,
            boundary_nodes: 4096,
            pair_u_order: 8,
            pair_theta_order: 16,
        }
    }
}

/// Suite driver holding the configured quadrature rule.
pub struct Harness {
    config: HarnessConfig,
    rule: QuadratureRule,
}

impl Harness {
    pub fn new(config: HarnessConfig) -> Result<Self> {
        if config.boundary_nodes < 8 {
            return Err(Error::InvalidParameter(
                "boundary grid needs at least 8 nodes".into(),
            ));
        }
        let rule = build_disk_rule(
            config.radial_count,
            config.angular_count,
            config.refinement_levels,
        )?;
        Ok(Harness { config, rule })
    }

    pub fn standard() -> Self {
        Harness::new(HarnessConfig::default()).expect("default config is valid")
    }

    pub fn rule(&self) -> &QuadratureRule {
        &self.rule
    }

    pub fn config(&self) -> &HarnessConfig {
        &self.config
    }

    /// Scales from `depths` whose dyadic arcs span at least the resolution
    /// guard on this boundary grid.
    fn resolvable_depths(&self, depths: &RangeInclusive<u32>) -> Vec<u32> {
        let spacing = TAU / self.config.boundary_nodes as f64;
        depths
            .clone()
            .filter(|&k| TAU / 2f64.powi(k as i32) >= 4.0 * spacing - 1e-12)
            .collect()
    }

    /// Point-mass spikes narrower than the grid spacing cannot be resolved.
    fn spike_resolved(&self, mu: &Measure) -> bool {
        match mu.min_atom_boundary_gap() {
            Some(gap) => (self.config.boundary_nodes as f64) * gap >= TAU,
            None => true,
        }
    }

    /// Boundedness of the γ-weighted double-integral functional of S_μ over
    /// dyadic arcs: the balayage of an s-Carleson measure keeps it uniformly
    /// bounded for every 0 ≤ γ < 1.
    pub fn verify_thm1(
        &self,
        mu: &Measure,
        s: f64,
        gamma: f64,
        depths: RangeInclusive<u32>,
    ) -> Result<VerificationReport> {
        if !(s > 0.0 && s <= 1.0) {
            return Err(Error::InvalidParameter(format!(
                "scaling exponent must lie in (0, 1], got {s}"
            )));
        }
        let pair_rule = ArcPairRule::new(
            gamma,
            self.config.pair_u_order,
            self.config.pair_theta_order,
        )?;
        if depths.is_empty() || *depths.end() > 24 {
            return Err(Error::InvalidParameter("bad depth range".into()));
        }
        let carleson = carleson_constant(mu, s, *depths.end())?;
        if !carleson.is_finite() {
            return Err(Error::NonFinite("Carleson sweep of the measure".into()));
        }
        let grid = balayage(mu, self.config.boundary_nodes, &self.rule)?;

        let usable = self.resolvable_depths(&depths);
        let limited = usable.len() < depths.clone().count() || !self.spike_resolved(mu);
        let mut samples = Vec::new();
        let mut per_scale = Vec::new();
        let mut budget = 0.0f64;
        for &k in &usable {
            let arcs = dyadic_arcs_at_scale(k);
            let results = par_map(&arcs, |arc| thm1_functional(&grid, arc, s, &pair_rule));
            let mut scale_max = 0.0f64;
            for r in results {
                let out = r?;
                scale_max = scale_max.max(out.value);
                budget = budget.max(out.diagonal_estimate);
            }
            let length = TAU / 2f64.powi(k as i32);
            let label = if length >= 1.0 {
                format!("depth={k} length>=1")
            } else {
                format!("depth={k}")
            };
            samples.push(Sample {
                label,
                ratio: scale_max,
            });
            per_scale.push(scale_max);
        }
        let verdict = if limited {
            Verdict::ResolutionLimited
        } else {
            scale_trend_verdict(&per_scale)
        };
        Ok(VerificationReport::assemble(
            TheoremId::Thm1,
            Parameters {
                s: Some(s),
                gamma: Some(gamma),
                ..Default::default()
            },
            samples,
            verdict,
            budget,
        ))
    }

    /// Campanato membership of S_μ: per-scale maxima of
    /// (1/|I|^s) ∫_I |S_μ − (S_μ)_I|, plus the per-arc domination of the
    /// oscillation by the double integral that proves it.
    pub fn verify_campanato_membership(
        &self,
        mu: &Measure,
        s: f64,
        depths: RangeInclusive<u32>,
    ) -> Result<VerificationReport> {
        if !(s > 0.0 && s <= 1.0) {
            return Err(Error::InvalidParameter(format!(
                "scaling exponent must lie in (0, 1], got {s}"
            )));
        }
        if depths.is_empty() || *depths.end() > 24 {
            return Err(Error::InvalidParameter("bad depth range".into()));
        }
        let carleson = carleson_constant(mu, s, *depths.end())?;
        if !carleson.is_finite() {
            return Err(Error::NonFinite("Carleson sweep of the measure".into()));
        }
        let grid = balayage(mu, self.config.boundary_nodes, &self.rule)?;
        let pair_rule =
            ArcPairRule::new(0.0, self.config.pair_u_order, self.config.pair_theta_order)?;

        let usable = self.resolvable_depths(&depths);
        let limited = usable.len() < depths.clone().count() || !self.spike_resolved(mu);
        let mut samples = Vec::new();
        let mut per_scale = Vec::new();
        let mut budget = 0.0f64;
        for &k in &usable {
            let arcs = dyadic_arcs_at_scale(k);
            let results = par_map(&arcs, |arc| -> Result<(f64, f64, f64)> {
                let mosc = mean_oscillation(&grid, arc, 1.0)?;
                let value = mosc * arc.length().powf(1.0 - s);
                let double = thm1_functional(&grid, arc, s, &pair_rule)?;
                // (1/|I|^s)∫|φ − φ_I| ≤ (1/|I|^{1+s})∬|φ(θ) − φ(ψ)|.
                let excess = (value - double.value).max(0.0);
                Ok((value, excess, double.diagonal_estimate))
            });
            let mut scale_max = 0.0f64;
            let mut excess_max = 0.0f64;
            for r in results {
                let (value, excess, diag) = r?;
                scale_max = scale_max.max(value);
                excess_max = excess_max.max(excess);
                budget = budget.max(diag);
            }
            samples.push(Sample {
                label: format!("campanato depth={k}"),
                ratio: scale_max,
            });
            samples.push(Sample {
                label: format!("domination_excess depth={k}"),
                ratio: excess_max,
            });
            per_scale.push(scale_max);
        }
        let verdict = if limited {
            Verdict::ResolutionLimited
        } else {
            scale_trend_verdict(&per_scale)
        };
        Ok(VerificationReport::assemble(
            TheoremId::Campanato,
            Parameters {
                s: Some(s),
                ..Default::default()
            },
            samples,
            verdict,
            budget,
        ))
    }

    /// Hölder-type bound for the B-balayage of a 2p-Carleson measure:
    /// ratios |G_μ(z) − G_μ(w)| / β(z, w)^{1/p} across the pair tiers.
    pub fn verify_bbalayage_lipschitz(
        &self,
        mu: &Measure,
        p: f64,
        pairs: &[(DiskPoint, DiskPoint)],
    ) -> Result<VerificationReport> {
        if !(p > 1.0 && p.is_finite()) {
            return Err(Error::InvalidParameter(format!(
                "Hölder exponent must exceed 1, got {p}"
            )));
        }
        if pairs.is_empty() {
            return Err(Error::EmptyInput("pair list".into()));
        }
        for (z, w) in pairs {
            if hyperbolic_distance(*z, *w) <= 0.0 {
                return Err(Error::Degenerate(format!(
                    "coincident pair at ({}, {})",
                    z.re(),
                    z.im()
                )));
            }
        }
        let carleson = carleson_constant(mu, 2.0 * p, 8)?;
        if !carleson.is_finite() {
            return Err(Error::NonFinite("Carleson sweep of the measure".into()));
        }
        let points: Vec<DiskPoint> = pairs.iter().flat_map(|&(z, w)| [z, w]).collect();
        let values = par_map(&points, |&z| b_balayage(mu, z, &self.rule));
        let mut g = Vec::with_capacity(points.len());
        for v in values {
            g.push(v?);
        }

        let mut samples = Vec::new();
        let mut interior = Vec::new();
        let mut boundary_levels: std::collections::BTreeMap<u32, f64> =
            std::collections::BTreeMap::new();
        let mut all = Vec::new();
        for (i, &(z, w)) in pairs.iter().enumerate() {
            let beta = hyperbolic_distance(z, w);
            let ratio = (g[2 * i] - g[2 * i + 1]).abs() / beta.powf(1.0 / p);
            let tier = classify_pair(z, w);
            match tier {
                Tier::Interior => interior.push(ratio),
                Tier::Boundary => {
                    let level = boundary_levels.entry(pair_level(z, w)).or_insert(0.0);
                    *level = level.max(ratio);
                }
                Tier::NearDiagonal => {}
            }
            all.push(ratio);
            samples.push(Sample {
                label: format!("{}:{i}", tier.as_str()),
                ratio,
            });
        }
        let boundary: Vec<(u32, f64)> = boundary_levels.into_iter().collect();
        // Exponent sweep: smaller p′ makes 1/p′ the harsher exponent on
        // large separations; the configured p stays the binding test.
        let mut sweep_exponents = vec![1.25, 0.5 * (1.0 + p)];
        sweep_exponents.retain(|&q| q > 1.0 && (q - p).abs() > 1e-9);
        sweep_exponents.dedup_by(|a, b| (*a - *b).abs() < 1e-9);
        for q in sweep_exponents {
            let max_ratio = pairs
                .iter()
                .enumerate()
                .map(|(i, &(z, w))| {
                    (g[2 * i] - g[2 * i + 1]).abs() / hyperbolic_distance(z, w).powf(1.0 / q)
                })
                .fold(0.0f64, f64::max);
            samples.push(Sample {
                label: format!("sweep p'={q}"),
                ratio: max_ratio,
            });
        }
        let verdict = if self.spike_resolved(mu) {
            tier_verdict(&boundary, &interior, &all)
        } else {
            Verdict::ResolutionLimited
        };
        Ok(VerificationReport::assemble(
            TheoremId::BbalLip,
            Parameters {
                p: Some(p),
                ..Default::default()
            },
            samples,
            verdict,
            0.0,
        ))
    }

    /// Lipschitz bound for Besov functions:
    /// |f(z) − f(w)| ≤ C ‖f‖_{B_p} β(z, w)^{1/q} with 1/p + 1/q = 1.
    pub fn verify_besov_lipschitz(
        &self,
        f: &Polynomial,
        p: f64,
        pairs: &[(DiskPoint, DiskPoint)],
    ) -> Result<VerificationReport> {
        if pairs.is_empty() {
            return Err(Error::EmptyInput("pair list".into()));
        }
        let norm = besov_norm(f, p, &self.rule)?;
        if norm <= NUMERICAL_ZERO {
            return Err(Error::Degenerate(
                "constant test function has zero Besov norm".into(),
            ));
        }
        let q = p / (p - 1.0);
        let mut samples = Vec::new();
        let mut interior = Vec::new();
        let mut boundary_levels: std::collections::BTreeMap<u32, f64> =
            std::collections::BTreeMap::new();
        let mut all = Vec::new();
        for (i, &(z, w)) in pairs.iter().enumerate() {
            let beta = hyperbolic_distance(z, w);
            if beta <= 0.0 {
                return Err(Error::Degenerate(format!("coincident pair {i}")));
            }
            let diff = (f.eval(z.to_complex()) - f.eval(w.to_complex())).norm();
            let ratio = diff / (norm * beta.powf(1.0 / q));
            let tier = classify_pair(z, w);
            match tier {
                Tier::Interior => interior.push(ratio),
                Tier::Boundary => {
                    let level = boundary_levels.entry(pair_level(z, w)).or_insert(0.0);
                    *level = level.max(ratio);
                }
                Tier::NearDiagonal => {}
            }
            all.push(ratio);
            samples.push(Sample {
                label: format!("{}:{i}", tier.as_str()),
                ratio,
            });
        }
        let boundary: Vec<(u32, f64)> = boundary_levels.into_iter().collect();
        let verdict = tier_verdict(&boundary, &interior, &all);
        Ok(VerificationReport::assemble(
            TheoremId::BesovLip,
            Parameters {
                p: Some(p),
                ..Default::default()
            },
            samples,
            verdict,
            0.0,
        ))
    }

    /// Weighting by (1 − |z|)^σ shifts the Carleson box-mass exponent by σ:
    /// recovered as a difference of fitted log-log slopes.
    pub fn verify_weight_shift(
        &self,
        mu: &Measure,
        sigma: f64,
        s: f64,
        depths: RangeInclusive<u32>,
    ) -> Result<VerificationReport> {
        if !(sigma > 0.0 && sigma.is_finite()) {
            return Err(Error::InvalidParameter(format!(
                "weight exponent must be positive, got {sigma}"
            )));
        }
        let scale_count = depths.clone().count();
        if scale_count < 4 {
            return Err(Error::InvalidParameter(format!(
                "slope fitting needs at least 4 scales, got {scale_count}"
            )));
        }
        if *depths.end() > 24 {
            return Err(Error::InvalidParameter("bad depth range".into()));
        }
        let base_report = carleson_constant(mu, s, *depths.end())?;
        if !base_report.is_finite() {
            return Err(Error::NonFinite(
                "Carleson sweep of the base measure".into(),
            ));
        }
        let nu = weight_transform(mu.clone(), sigma)?;
        let trans_report = carleson_constant(&nu, s + sigma, *depths.end())?;

        let in_range = |r: &CarlesonReport| {
            r.samples
                .iter()
                .filter(|smp| depths.contains(&smp.scale_index))
                .cloned()
                .collect::<Vec<_>>()
        };
        let base_samples = in_range(&base_report);
        let trans_samples = in_range(&trans_report);

        let mut samples = Vec::new();
        for smp in &base_samples {
            samples.push(Sample {
                label: format!("mass_base depth={}", smp.scale_index),
                ratio: smp.max_mass,
            });
        }
        for smp in &trans_samples {
            samples.push(Sample {
                label: format!("mass_transform depth={}", smp.scale_index),
                ratio: smp.max_mass,
            });
        }

        // A lone atom has a step-function mass profile: constant once the
        // boxes reach it. No slope lives there; flag instead of fitting.
        let masses: Vec<f64> = base_samples.iter().map(|x| x.max_mass).collect();
        let positive: Vec<f64> = masses.iter().copied().filter(|&m| m > 0.0).collect();
        let degenerate = !positive.is_empty() && {
            let max = positive.iter().fold(0.0f64, |a, &b| a.max(b));
            let min = positive.iter().fold(f64::INFINITY, |a, &b| a.min(b));
            max / min < 1.0 + 1e-9
        };
        if degenerate {
            samples.push(Sample {
                label: "degenerate: scale-constant mass profile".into(),
                ratio: 0.0,
            });
            return Ok(VerificationReport::assemble(
                TheoremId::WeightShift,
                Parameters {
                    s: Some(s),
                    sigma: Some(sigma),
                    ..Default::default()
                },
                samples,
                Verdict::ResolutionLimited,
                0.0,
            ));
        }

        let fit = |smps: &[crate::measures::ScaleSample]| fit_log_log_slope(smps, 4);
        let (slope_base, slope_trans) = match (fit(&base_samples), fit(&trans_samples)) {
            (Ok(a), Ok(b)) => (a, b),
            _ => {
                samples.push(Sample {
                    label: "degenerate: too few scales with positive mass".into(),
                    ratio: 0.0,
                });
                return Ok(VerificationReport::assemble(
                    TheoremId::WeightShift,
                    Parameters {
                        s: Some(s),
                        sigma: Some(sigma),
                        ..Default::default()
                    },
                    samples,
                    Verdict::ResolutionLimited,
                    0.0,
                ));
            }
        };
        let shift = slope_trans - slope_base;
        samples.push(Sample {
            label: "slope_base".into(),
            ratio: slope_base,
        });
        samples.push(Sample {
            label: "slope_transform".into(),
            ratio: slope_trans,
        });
        samples.push(Sample {
            label: "slope_shift".into(),
            ratio: shift,
        });
        let verdict = if (shift - sigma).abs() <= SLOPE_TOLERANCE {
            Verdict::Bounded
        } else {
            Verdict::TrendViolation
        };
        Ok(VerificationReport::assemble(
            TheoremId::WeightShift,
            Parameters {
                s: Some(s),
                sigma: Some(sigma),
                ..Default::default()
            },
            samples,
            verdict,
            0.0,
        ))
    }

    /// Embedding ratios ∫|f|^p dμ / ∫|f|^p dA_α over a polynomial test
    /// class: bounded exactly when μ is an (α+2)-Carleson measure.
    pub fn verify_embedding(
        &self,
        mu: &Measure,
        alpha: f64,
        p: f64,
        test_class: &[TestFunction],
    ) -> Result<VerificationReport> {
        if alpha <= -1.0 || !alpha.is_finite() {
            return Err(Error::InvalidParameter(format!(
                "weight exponent must exceed -1, got {alpha}"
            )));
        }
        if !(p > 1.0 && p.is_finite()) {
            return Err(Error::InvalidParameter(format!(
                "integrability exponent must exceed 1, got {p}"
            )));
        }
        if test_class.is_empty() {
            return Err(Error::EmptyInput("test class".into()));
        }
        let carleson = carleson_constant(mu, alpha + 2.0, 8)?;
        if !carleson.is_finite() {
            return Err(Error::NonFinite("Carleson sweep of the measure".into()));
        }
        let mut samples = Vec::new();
        let mut generic = Vec::new();
        let mut boundary = Vec::new();
        let mut all = Vec::new();
        for tf in test_class {
            let numerator = mu.integrate(|z| tf.poly.eval(z).norm().powf(p))?;
            let denominator =
                integrate_disk(|z| tf.poly.eval(z).norm().powf(p), alpha, &self.rule)?;
            if denominator <= NUMERICAL_ZERO {
                samples.push(Sample {
                    label: format!("skipped (zero norm): {}", tf.label),
                    ratio: 0.0,
                });
                continue;
            }
            let ratio = numerator / denominator;
            if tf.boundary_concentrated {
                boundary.push(ratio);
            } else {
                generic.push(ratio);
            }
            all.push(ratio);
            samples.push(Sample {
                label: tf.label.clone(),
                ratio,
            });
        }
        let verdict = cross_tier_verdict(&boundary, &generic, &all);
        Ok(VerificationReport::assemble(
            TheoremId::Embedding,
            Parameters {
                p: Some(p),
                alpha: Some(alpha),
                ..Default::default()
            },
            samples,
            verdict,
            0.0,
        ))
    }

    /// Square/disk equivalence: both empirical Carleson constants must be
    /// finite and within a fixed window of each other.
    pub fn verify_square_disk_equivalence(
        &self,
        mu: &Measure,
        s: f64,
        depth: u32,
        r: f64,
        centers: &[DiskPoint],
    ) -> Result<VerificationReport> {
        let square = carleson_constant(mu, s, depth)?;
        let hyperbolic = carleson_constant_hyperbolic(mu, s, r, centers)?;
        let mut samples = Vec::new();
        for smp in &square.samples {
            samples.push(Sample {
                label: format!("square scale={}", smp.scale_index),
                ratio: smp.max_ratio,
            });
        }
        for smp in &hyperbolic.samples {
            samples.push(Sample {
                label: format!("hyperbolic scale={}", smp.scale_index),
                ratio: smp.max_ratio,
            });
        }
        let sq = square.empirical_constant;
        let hy = hyperbolic.empirical_constant;
        let verdict = if !sq.is_finite() || !hy.is_finite() {
            Verdict::TrendViolation
        } else if sq.abs() <= NUMERICAL_ZERO && hy.abs() <= NUMERICAL_ZERO {
            Verdict::Bounded
        } else if sq.abs() <= NUMERICAL_ZERO || hy.abs() <= NUMERICAL_ZERO {
            // One estimator saw mass the other missed: a sampling gap in the
            // center sweep or grid, not evidence against the equivalence.
            samples.push(Sample {
                label: "sampling artifact: one estimator reports zero".into(),
                ratio: 0.0,
            });
            Verdict::ResolutionLimited
        } else {
            let ratio = sq / hy;
            samples.push(Sample {
                label: "constant_ratio".into(),
                ratio,
            });
            if ratio >= EQUIVALENCE_WINDOW.0 && ratio <= EQUIVALENCE_WINDOW.1 {
                Verdict::Bounded
            } else {
                Verdict::TrendViolation
            }
        };
        Ok(VerificationReport::assemble(
            TheoremId::SquareDisk,
            Parameters {
                s: Some(s),
                ..Default::default()
            },
            samples,
            verdict,
            0.0,
        ))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Tier {
    Interior,
    NearDiagonal,
    Boundary,
}

impl Tier {
    fn as_str(&self) -> &'static str {
        match self {
            Tier::Interior => "interior",
            Tier::NearDiagonal => "near_diagonal",
            Tier::Boundary => "boundary",
        }
    }
}

fn classify_pair(z: DiskPoint, w: DiskPoint) -> Tier {
    if hyperbolic_distance(z, w) <= 1e-2 {
        Tier::NearDiagonal
    } else if z.abs() <= 0.5 && w.abs() <= 0.5 {
        Tier::Interior
    } else {
        Tier::Boundary
    }
}

/// Pair sampling policy for the Lipschitz suites: interior random pairs,
/// near-diagonal pairs (β ≈ 1e−3..1e−2), and boundary-approaching pairs at
/// |z| = 1 − 2^{−k}. The theorems' content lives at the boundary and the
/// diagonal; the interior tier provides the reference median.
#[derive(Debug, Clone)]
pub struct PairTierSpec {
    pub interior: usize,
    pub near_diagonal: usize,
    pub boundary_levels: u32,
    pub seed: u64,
}

impl PairTierSpec {
    pub fn standard(seed: u64) -> Self {
        PairTierSpec {
            interior: 16,
            near_diagonal: 8,
            boundary_levels: 8,
            seed,
        }
    }
}

/// Generates the three pair tiers deterministically from the seed.
pub fn standard_pairs(spec: &PairTierSpec) -> Vec<(DiskPoint, DiskPoint)> {
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let mut pairs = Vec::new();
    let disk_point = |rng: &mut ChaCha8Rng, max_r: f64| {
        let r = max_r * rng.random::<f64>().sqrt();
        let angle = TAU * rng.random::<f64>();
        DiskPoint::from_polar(r, angle).expect("inside disk")
    };
    for _ in 0..spec.interior {
        let z = disk_point(&mut rng, 0.5);
        let mut w = disk_point(&mut rng, 0.5);
        while hyperbolic_distance(z, w) <= 1e-12 {
            w = disk_point(&mut rng, 0.5);
        }
        pairs.push((z, w));
    }
    for _ in 0..spec.near_diagonal {
        let z = disk_point(&mut rng, 0.7);
        let target = 1e-3 * 10f64.powf(rng.random::<f64>());
        let dir = TAU * rng.random::<f64>();
        let delta = target * (1.0 - z.abs() * z.abs());
        let w = DiskPoint::new(z.re() + delta * dir.cos(), z.im() + delta * dir.sin())
            .expect("perturbation stays inside");
        pairs.push((z, w));
    }
    for k in 1..=spec.boundary_levels {
        let r = 1.0 - 2f64.powi(-(k as i32));
        let angle = TAU * rng.random::<f64>();
        let z = DiskPoint::from_polar(r, angle).expect("inside disk");
        // Same ring, well-separated angles.
        let w = DiskPoint::from_polar(r, angle + 1.0).expect("inside disk");
        pairs.push((z, w));
        // Step one level deeper along the same ray.
        let deeper = 1.0 - 2f64.powi(-(k as i32 + 1));
        let v = DiskPoint::from_polar(deeper, angle).expect("inside disk");
        pairs.push((z, v));
    }
    pairs
}

/// A labeled polynomial test function for the embedding suite.
#[derive(Debug, Clone)]
pub struct TestFunction {
    pub label: String,
    pub poly: Polynomial,
    pub boundary_concentrated: bool,
}

/// The standard embedding test class: low monomials plus truncated powers
/// of disk automorphisms, which concentrate near the boundary while staying
/// inside the polynomial class (Taylor truncation at degree 24).
pub fn standard_test_class() -> Vec<TestFunction> {
    let mut class = Vec::new();
    for k in 0..=4usize {
        class.push(TestFunction {
            label: format!("monomial z^{k}"),
            poly: Polynomial::monomial(k),
            boundary_concentrated: false,
        });
    }
    class.push(TestFunction {
        label: "poly 1+z-0.5z^3".into(),
        poly: Polynomial::from_real(&[1.0, 1.0, 0.0, -0.5]).expect("finite coefficients"),
        boundary_concentrated: false,
    });
    let truncation = 24;
    for (a, power) in [
        (DiskPoint::new(0.6, 0.0).expect("inside"), 4u32),
        (DiskPoint::from_polar(0.8, 1.0).expect("inside"), 8u32),
    ] {
        class.push(TestFunction {
            label: format!("mobius a=({:.2},{:.2}) power={power}", a.re(), a.im()),
            poly: crate::operators::mobius_power(a, power, truncation),
            boundary_concentrated: true,
        });
    }
    class
}
