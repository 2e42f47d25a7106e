//! Brute-force oracles for the singular quadrature paths. These are the
//! slow, independent reference computations the fast rules must reproduce.

use std::f64::consts::PI;

use balayage::*;

/// Dense midpoint double Riemann sum of ∬_{I×I} f/|e^{iθ}−e^{iφ}|^γ.
///
/// The n singular diagonal cells are skipped by the sum and re-added in
/// closed form: each cell carries h^{2−γ} ∬_{[0,1]²}|x−y|^{−γ} =
/// 2 h^{2−γ} / ((1−γ)(2−γ)) times the diagonal value of f. For γ = 1/2
/// that strip is over 1% of the total, so dropping it would bias the
/// oracle itself.
fn brute_force_arc_pair<F>(f: F, arc: &Arc, gamma: f64, n: usize) -> f64
where
    F: Fn(f64, f64) -> f64,
{
    let lo = arc.center() - arc.length() / 2.0;
    let h = arc.length() / n as f64;
    let mut total = 0.0;
    let mut diag_avg = 0.0;
    for i in 0..n {
        let theta = lo + (i as f64 + 0.5) * h;
        diag_avg += f(theta, theta);
        for j in 0..n {
            if i == j {
                continue;
            }
            let phi = lo + (j as f64 + 0.5) * h;
            total += f(theta, phi) / chord(theta, phi).powf(gamma);
        }
    }
    diag_avg /= n as f64;
    let diagonal_strip =
        2.0 * arc.length() * h.powf(1.0 - gamma) / ((1.0 - gamma) * (2.0 - gamma)) * diag_avg;
    total * h * h + diagonal_strip
}

#[test]
fn arc_pair_matches_dense_riemann_sum_for_sqrt_singularity() {
    let arc = Arc::new(0.7, PI / 4.0).unwrap();
    let rule = ArcPairRule::new(0.5, 8, 16).unwrap();
    let fast = integrate_arc_pair(|_, _| 1.0, &arc, &rule).unwrap();
    let brute = brute_force_arc_pair(|_, _| 1.0, &arc, 0.5, 10_000);
    let rel = (fast.value - brute).abs() / brute;
    assert!(
        rel < 0.01,
        "quadrature {} vs brute force {brute} (rel {rel:.2e})",
        fast.value
    );
}

#[test]
fn arc_pair_matches_riemann_sum_on_oscillating_integrand() {
    let arc = Arc::new(0.0, 1.0).unwrap();
    let f = |theta: f64, phi: f64| (theta.sin() - phi.sin()).abs();
    for gamma in [0.0, 0.5] {
        let rule = ArcPairRule::new(gamma, 8, 16).unwrap();
        let fast = integrate_arc_pair(f, &arc, &rule).unwrap();
        let brute = brute_force_arc_pair(f, &arc, gamma, 4000);
        let rel = (fast.value - brute).abs() / brute;
        assert!(
            rel < 0.01,
            "gamma={gamma}: quadrature {} vs brute {brute} (rel {rel:.2e})",
            fast.value
        );
    }
}

/// The balayage of an off-center atom against the dense circle rule: the
/// closed-form Poisson values are the oracle for the grid path.
#[test]
fn balayage_grid_matches_poisson_closed_form() {
    let rule = build_disk_rule(8, 32, 2).unwrap();
    let a = DiskPoint::from_polar(0.7, 1.1).unwrap();
    let grid = balayage(&Measure::dirac(a), 512, &rule).unwrap();
    for j in (0..512).step_by(37) {
        let t = grid.angle(j);
        let expected = poisson_kernel(a, t);
        assert!((grid.values()[j] - expected).abs() <= 1e-12 * (1.0 + expected));
    }
}

/// Hyperbolic-disk masses for the area measure against the closed-form
/// Euclidean image: μ(D(z, r)) = R(z, r)² for dμ = dA.
#[test]
fn hyperbolic_mass_matches_image_radius_squared() {
    let mu = Measure::weighted_area(0.0).unwrap();
    for k in 1..=6 {
        let center = DiskPoint::from_polar(1.0 - 2f64.powi(-k), 0.3 * k as f64).unwrap();
        let disk = HyperbolicDisk::new(center, 1.0).unwrap();
        let (_, image_radius) = disk.euclidean_image();
        let mass = mass_of_hyperbolic_disk(&mu, &disk);
        assert!(
            (mass - image_radius * image_radius).abs() <= 1e-7,
            "k={k}: {mass} vs {}",
            image_radius * image_radius
        );
    }
}
