//! Numerical toolkit for the balayage operator S_μ and the B-balayage
//! operator G_μ of finite positive measures on the unit disk, together with
//! Carleson-measure estimators, BMO/Campanato/Besov seminorms, and
//! verification harnesses that empirically confirm the boundedness theorems
//! these operators satisfy.

pub mod error;
pub mod geometry;
pub mod measures;
pub mod numerics;
pub mod operators;
pub mod parallel;
pub mod seminorms;
pub mod verify;

pub use error::{Error, Result};
pub use geometry::{
    automorphism, chord, dilate_arc, dyadic_arcs, dyadic_arcs_at_scale, hyperbolic_distance,
    poisson_kernel, pseudo_hyperbolic, wrap_angle, Arc, CarlesonSquare, DiskPoint, HyperbolicDisk,
};
pub use measures::{
    carleson_constant, carleson_constant_hyperbolic, fit_log_log_slope, mass_of_hyperbolic_disk,
    mass_of_square, standard_hyperbolic_centers, weight_transform, CarlesonReport, Measure,
    MeasureSpec, Region, ScaleSample,
};
pub use numerics::{
    build_disk_rule, integrate_arc_pair, integrate_circle, integrate_disk, ArcPairIntegral,
    ArcPairRule, QuadratureRule,
};
pub use operators::{
    b_balayage, balayage, bergman_projection, besov_norm, mobius_power, projected_derivative,
    BoundaryGrid, Polynomial,
};
pub use seminorms::{
    arc_average, campanato_seminorm, mean_oscillation, oscillation_samples_csv, thm1_functional,
    OscillationSample,
};
pub use verify::{
    scale_trend_verdict, standard_pairs, standard_test_class, Harness, HarnessConfig, PairTierSpec,
    Parameters, Sample, TestFunction, TheoremId, Verdict, VerificationReport,
};
