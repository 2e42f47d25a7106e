//! Run configuration: a versioned JSON document naming the measure, the
//! suite and its parameters, and the quadrature sizes.

use balayage::MeasureSpec;
use serde::Deserialize;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub schema_version: u32,
    #[serde(default)]
    pub suite: Option<String>,
    pub measure: MeasureSpec,
    #[serde(default)]
    pub params: Params,
    #[serde(default)]
    pub quadrature: QuadSpec,
    #[serde(default)]
    pub pairs: Option<PairSpec>,
    #[serde(default)]
    pub seed: Option<u64>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Params {
    pub s: Option<f64>,
    pub p: Option<f64>,
    pub gamma: Option<f64>,
    pub sigma: Option<f64>,
    pub alpha: Option<f64>,
    pub depth_min: Option<u32>,
    pub depth_max: Option<u32>,
    /// Hyperbolic-disk radius for the square/disk equivalence suite.
    pub r: Option<f64>,
    pub hyperbolic_rays: Option<usize>,
    pub hyperbolic_levels: Option<u32>,
    /// Polynomial coefficients [re, im] for the Besov suite, constant first.
    pub polynomial: Option<Vec<[f64; 2]>>,
    /// Polar grid sizes for eval-bbalayage.
    pub grid_rings: Option<usize>,
    pub grid_angles: Option<usize>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct QuadSpec {
    pub radial_count: usize,
    pub angular_count: usize,
    pub refinement_levels: usize,
    pub boundary_nodes: usize,
}

impl Default for QuadSpec {
    fn default() -> Self {
        let h = balayage::HarnessConfig::default();
        QuadSpec {
            radial_count: h.radial_count,
            angular_count: h.angular_count,
            refinement_levels: h.refinement_levels,
            boundary_nodes: h.boundary_nodes,
        }
    }
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct PairSpec {
    pub interior: usize,
    pub near_diagonal: usize,
    pub boundary_levels: u32,
}

impl Default for PairSpec {
    fn default() -> Self {
        PairSpec {
            interior: 16,
            near_diagonal: 8,
            boundary_levels: 8,
        }
    }
}

impl RunConfig {
    pub fn parse(json: &str) -> Result<Self, String> {
        let config: RunConfig =
            serde_json::from_str(json).map_err(|e| format!("config schema: {e}"))?;
        if config.schema_version != SCHEMA_VERSION {
            return Err(format!(
                "unsupported schema_version {} (expected {SCHEMA_VERSION})",
                config.schema_version
            ));
        }
        Ok(config)
    }

    pub fn depths(&self) -> (u32, u32) {
        (
            self.params.depth_min.unwrap_or(2),
            self.params.depth_max.unwrap_or(8),
        )
    }
}
