//! Browser demo bindings: three interactive views over the core crate.
//!
//! The plain functions below are target-independent (and unit-tested on the
//! host); the `#[wasm_bindgen]` wrappers at the bottom only exist on wasm32,
//! so the crate builds and tests everywhere. Measures arrive as the same
//! tagged JSON the CLI consumes.

use balayage::{
    b_balayage, balayage, build_disk_rule, carleson_constant, fit_log_log_slope, DiskPoint, Measure,
};

fn demo_rule() -> balayage::QuadratureRule {
    build_disk_rule(10, 512, 8).expect("demo rule is valid")
}

/// S_μ sampled at `nodes` equispaced boundary angles.
pub fn balayage_curve(measure_json: &str, nodes: usize) -> Result<Vec<f64>, String> {
    let mu = Measure::from_json(measure_json).map_err(|e| e.to_string())?;
    let nodes = nodes.clamp(64, 4096);
    let grid = balayage(&mu, nodes, &demo_rule()).map_err(|e| e.to_string())?;
    Ok(grid.values().to_vec())
}

/// G_μ on a `grid`×`grid` Cartesian lattice over [−1, 1]², row-major from
/// the top-left; NaN marks points outside the disk.
pub fn bbalayage_field(measure_json: &str, grid: usize) -> Result<Vec<f64>, String> {
    let mu = Measure::from_json(measure_json).map_err(|e| e.to_string())?;
    let grid = grid.clamp(16, 192);
    let rule = demo_rule();
    let mut field = Vec::with_capacity(grid * grid);
    for row in 0..grid {
        // Canvas rows run top-down; im decreases with the row index.
        let im = 1.0 - 2.0 * (row as f64 + 0.5) / grid as f64;
        for col in 0..grid {
            let re = -1.0 + 2.0 * (col as f64 + 0.5) / grid as f64;
            if re * re + im * im >= 0.96 {
                field.push(f64::NAN);
                continue;
            }
            let z = DiskPoint::new(re, im).map_err(|e| e.to_string())?;
            let value = b_balayage(&mu, z, &rule).map_err(|e| e.to_string())?;
            field.push(value);
        }
    }
    Ok(field)
}

/// Dyadic Carleson sweep as JSON: per-scale box masses and ratios plus the
/// fitted log-log slope of mass against arc length.
pub fn carleson_scaling(measure_json: &str, s: f64, depth: u32) -> Result<String, String> {
    let mu = Measure::from_json(measure_json).map_err(|e| e.to_string())?;
    let depth = depth.clamp(1, 12);
    let report = carleson_constant(&mu, s, depth).map_err(|e| e.to_string())?;
    let slope = fit_log_log_slope(&report.samples[1..], 4).ok();
    let samples: Vec<serde_json::Value> = report
        .samples
        .iter()
        .map(|smp| {
            serde_json::json!({
                "scale": smp.scale_index,
                "length": smp.extent,
                "mass": smp.max_mass,
                "ratio": smp.max_ratio,
            })
        })
        .collect();
    let out = serde_json::json!({
        "exponent": s,
        "empirical_constant": report.empirical_constant,
        "fitted_slope": slope,
        "samples": samples,
        "notes": report.notes,
    });
    serde_json::to_string(&out).map_err(|e| e.to_string())
}

#[cfg(target_arch = "wasm32")]
mod bindings {
    use wasm_bindgen::prelude::*;

    #[wasm_bindgen]
    pub fn balayage_curve(measure_json: &str, nodes: usize) -> Result<Vec<f64>, JsError> {
        super::balayage_curve(measure_json, nodes).map_err(|e| JsError::new(&e))
    }

    #[wasm_bindgen]
    pub fn bbalayage_field(measure_json: &str, grid: usize) -> Result<Vec<f64>, JsError> {
        super::bbalayage_field(measure_json, grid).map_err(|e| JsError::new(&e))
    }

    #[wasm_bindgen]
    pub fn carleson_scaling(measure_json: &str, s: f64, depth: u32) -> Result<String, JsError> {
        super::carleson_scaling(measure_json, s, depth).map_err(|e| JsError::new(&e))
    }
}
