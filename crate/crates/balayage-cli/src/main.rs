//! Command-line front end: suite orchestration, report emission (JSON,
//! CSV, static SVG), and direct operator dumps.
//!
//! Exit codes: 0 BOUNDED, 1 numerical failure, 2 configuration error,
//! 3 TREND_VIOLATION, 4 RESOLUTION_LIMITED. `BAL_THREADS` caps the worker
//! threads used inside the suites.

mod config;
mod svg;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use balayage::{
    b_balayage, balayage, carleson_constant, standard_hyperbolic_centers, standard_pairs,
    standard_test_class, Error as CoreError, Harness, HarnessConfig, PairTierSpec, Polynomial,
    VerificationReport,
};
use clap::{Args, Parser, Subcommand};
use num_complex::Complex64;

use config::RunConfig;
use svg::Series;

#[derive(Parser)]
#[command(
    name = "balayage",
    about = "Balayage / B-balayage operator toolkit and boundedness verification suites",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct CommonArgs {
    /// Path to the JSON run configuration.
    #[arg(long)]
    config: PathBuf,
    /// Output directory for report files.
    #[arg(long, default_value = ".")]
    out: PathBuf,
    /// Overrides the seed from the configuration file.
    #[arg(long)]
    seed: Option<u64>,
    /// Comma-separated output formats: json, csv, svg.
    #[arg(long, default_value = "json,csv")]
    format: String,
}

#[derive(Subcommand)]
enum Command {
    /// Runs a verification suite and writes its report.
    Run(CommonArgs),
    /// Prints the table of suites and the theorems they verify.
    ListSuites,
    /// Dumps the balayage boundary grid S_mu as CSV.
    EvalBalayage(CommonArgs),
    /// Dumps the B-balayage G_mu over a polar grid as CSV.
    EvalBbalayage(CommonArgs),
    /// Dumps an empirical Carleson report for the measure.
    Carleson(CommonArgs),
}

/// Failures mapped to process exit codes.
enum Failure {
    /// Bad invocation, schema, parameters, or output location.
    Config(String),
    /// Quadrature or grid evaluation produced a non-finite value.
    Numerical(String),
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Config(_) => 2,
            Failure::Numerical(_) => 1,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Config(m) | Failure::Numerical(m) => m,
        }
    }
}

impl From<CoreError> for Failure {
    fn from(e: CoreError) -> Self {
        match e {
            CoreError::NonFinite(m) => Failure::Numerical(format!("numerical failure: {m}")),
            other => Failure::Config(other.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Run(args) => run_suite(&args),
        Command::ListSuites => {
            print!("{}", list_suites_table());
            Ok(0)
        }
        Command::EvalBalayage(args) => eval_balayage(&args),
        Command::EvalBbalayage(args) => eval_bbalayage(&args),
        Command::Carleson(args) => carleson_dump(&args),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(failure) => {
            eprintln!("error: {}", failure.message());
            ExitCode::from(failure.exit_code())
        }
    }
}

/// Stable suite table; tests assert on its rows.
fn list_suites_table() -> String {
    let rows = [
        (
            "thm1",
            "Theorem 2.1",
            "s, gamma, depths",
            "gamma-weighted double integral of S_mu stays bounded over arcs",
        ),
        (
            "campanato",
            "Theorem 2.2",
            "s, depths",
            "S_mu lies in the Campanato class L^{1,s}",
        ),
        (
            "bbal",
            "Theorem 1.1",
            "p, pairs, seed",
            "|G_mu(z)-G_mu(w)| <= C beta(z,w)^{1/p} for 2p-Carleson mu",
        ),
        (
            "besov",
            "Theorem 3.4",
            "p, polynomial, pairs, seed",
            "|f(z)-f(w)| <= C ||f||_{B_p} beta(z,w)^{1/q}",
        ),
        (
            "weight-shift",
            "Corollary 3.3",
            "s, sigma, depths",
            "(1-|z|)^sigma weighting shifts the Carleson exponent by sigma",
        ),
        (
            "embedding",
            "Theorem 3.2",
            "alpha, p",
            "int |f|^p dmu <= C int |f|^p dA_alpha over the test class",
        ),
        (
            "square-disk",
            "Proposition 3.1",
            "s, depths, r",
            "Carleson squares and hyperbolic disks agree for s > 1",
        ),
    ];
    let mut out =
        String::from("suite         theorem          parameters                   claim\n");
    for (suite, theorem, params, claim) in rows {
        out.push_str(&format!("{suite:<13} {theorem:<16} {params:<28} {claim}\n"));
    }
    out
}

fn load_config(args: &CommonArgs) -> Result<RunConfig, Failure> {
    let text = fs::read_to_string(&args.config)
        .map_err(|e| Failure::Config(format!("cannot read {}: {e}", args.config.display())))?;
    let mut config = RunConfig::parse(&text).map_err(Failure::Config)?;
    if let Some(seed) = args.seed {
        config.seed = Some(seed);
    }
    Ok(config)
}

fn ensure_out_dir(dir: &Path) -> Result<(), Failure> {
    fs::create_dir_all(dir)
        .map_err(|e| Failure::Config(format!("cannot create output dir {}: {e}", dir.display())))
}

fn write_file(dir: &Path, name: &str, contents: &str) -> Result<PathBuf, Failure> {
    let path = dir.join(name);
    fs::write(&path, contents)
        .map_err(|e| Failure::Config(format!("cannot write {}: {e}", path.display())))?;
    Ok(path)
}

fn harness_from(config: &RunConfig) -> Result<Harness, Failure> {
    Harness::new(HarnessConfig {
        radial_count: config.quadrature.radial_count,
        angular_count: config.quadrature.angular_count,
        refinement_levels: config.quadrature.refinement_levels,
        boundary_nodes: config.quadrature.boundary_nodes,
        ..HarnessConfig::default()
    })
    .map_err(Failure::from)
}

/// Validates every suite precondition up front so violations exit with a
/// configuration error rather than failing mid-run.
fn validate(config: &RunConfig, suite: &str) -> Result<(), Failure> {
    let bad = |m: String| Err(Failure::Config(m));
    let (d0, d1) = config.depths();
    if d0 == 0 || d0 > d1 || d1 > 24 {
        return bad(format!("bad depth range [{d0}, {d1}]"));
    }
    match suite {
        "thm1" | "campanato" => {
            let s = config.params.s.unwrap_or(1.0);
            if s <= 0.0 || s > 1.0 || s.is_nan() {
                return bad(format!("suite {suite} needs s in (0, 1], got {s}"));
            }
            if suite == "thm1" {
                let gamma = config.params.gamma.unwrap_or(0.0);
                if !(0.0..1.0).contains(&gamma) {
                    return bad(format!("suite thm1 needs gamma in [0, 1), got {gamma}"));
                }
            }
        }
        "bbal" | "besov" => {
            let p = config.params.p.unwrap_or(2.0);
            if p <= 1.0 || p.is_nan() {
                return bad(format!("suite {suite} needs p > 1, got {p}"));
            }
            if config.seed.is_none() {
                return bad("pair sampling is random: a seed is mandatory".into());
            }
            if suite == "besov" {
                let coeffs = config.params.polynomial.as_deref().unwrap_or(&[]);
                if coeffs.len() < 2 {
                    return bad("suite besov needs a non-constant polynomial".into());
                }
            }
        }
        "weight-shift" => {
            let sigma = config.params.sigma.unwrap_or(0.0);
            if sigma <= 0.0 || sigma.is_nan() {
                return bad(format!("suite weight-shift needs sigma > 0, got {sigma}"));
            }
            if d1 - d0 + 1 < 4 {
                return bad("slope fitting needs at least 4 scales".into());
            }
        }
        "embedding" => {
            let alpha = config.params.alpha.unwrap_or(0.0);
            if alpha <= -1.0 || alpha.is_nan() {
                return bad(format!("suite embedding needs alpha > -1, got {alpha}"));
            }
            let p = config.params.p.unwrap_or(2.0);
            if p <= 1.0 || p.is_nan() {
                return bad(format!("suite embedding needs p > 1, got {p}"));
            }
        }
        "square-disk" => {
            let s = config.params.s.unwrap_or(2.0);
            if s <= 1.0 || s.is_nan() {
                return bad(format!("suite square-disk needs s > 1, got {s}"));
            }
            let r = config.params.r.unwrap_or(1.0);
            if r <= 0.0 || r.is_nan() {
                return bad("suite square-disk needs r > 0".into());
            }
        }
        other => {
            return bad(format!(
                "unknown suite '{other}' (see `balayage list-suites`)"
            ))
        }
    }
    Ok(())
}

fn run_suite(args: &CommonArgs) -> Result<u8, Failure> {
    let config = load_config(args)?;
    let suite = config
        .suite
        .clone()
        .ok_or_else(|| Failure::Config("config is missing the 'suite' field".into()))?;
    validate(&config, &suite)?;
    ensure_out_dir(&args.out)?;
    let measure = config.measure.build().map_err(Failure::from)?;
    let harness = harness_from(&config)?;
    let (d0, d1) = config.depths();

    let pair_list = |config: &RunConfig| {
        let spec = config.pairs.as_ref().cloned().unwrap_or_default();
        standard_pairs(&PairTierSpec {
            interior: spec.interior,
            near_diagonal: spec.near_diagonal,
            boundary_levels: spec.boundary_levels,
            seed: config.seed.expect("validated"),
        })
    };

    let report: VerificationReport = match suite.as_str() {
        "thm1" => harness.verify_thm1(
            &measure,
            config.params.s.unwrap_or(1.0),
            config.params.gamma.unwrap_or(0.0),
            d0..=d1,
        )?,
        "campanato" => harness.verify_campanato_membership(
            &measure,
            config.params.s.unwrap_or(1.0),
            d0..=d1,
        )?,
        "bbal" => harness.verify_bbalayage_lipschitz(
            &measure,
            config.params.p.unwrap_or(2.0),
            &pair_list(&config),
        )?,
        "besov" => {
            let coeffs: Vec<Complex64> = config
                .params
                .polynomial
                .as_ref()
                .expect("validated")
                .iter()
                .map(|c| Complex64::new(c[0], c[1]))
                .collect();
            let poly = Polynomial::new(coeffs).map_err(Failure::from)?;
            harness.verify_besov_lipschitz(
                &poly,
                config.params.p.unwrap_or(2.0),
                &pair_list(&config),
            )?
        }
        "weight-shift" => harness.verify_weight_shift(
            &measure,
            config.params.sigma.unwrap_or(1.0),
            config.params.s.unwrap_or(1.0),
            d0..=d1,
        )?,
        "embedding" => harness.verify_embedding(
            &measure,
            config.params.alpha.unwrap_or(0.0),
            config.params.p.unwrap_or(2.0),
            &standard_test_class(),
        )?,
        "square-disk" => {
            let centers = standard_hyperbolic_centers(
                config.params.hyperbolic_rays.unwrap_or(16),
                config.params.hyperbolic_levels.unwrap_or(d1.max(1)),
            );
            harness.verify_square_disk_equivalence(
                &measure,
                config.params.s.unwrap_or(2.0),
                d1,
                config.params.r.unwrap_or(1.0),
                &centers,
            )?
        }
        _ => unreachable!("validated"),
    };

    let formats: Vec<&str> = args.format.split(',').map(str::trim).collect();
    let mut written = Vec::new();
    if formats.contains(&"json") {
        written.push(write_file(&args.out, "report.json", &report.to_json())?);
    }
    if formats.contains(&"csv") {
        written.push(write_file(&args.out, "samples.csv", &report.samples_csv())?);
    }
    if formats.contains(&"svg") {
        let chart = report_chart(&suite, &report);
        written.push(write_file(&args.out, "report.svg", &chart)?);
    }
    println!(
        "suite={suite} verdict={:?} empirical_sup={:.6e} error_budget={:.3e}",
        report.verdict, report.empirical_sup, report.error_budget
    );
    for path in written {
        println!("wrote {}", path.display());
    }
    Ok(report.verdict.exit_code() as u8)
}

/// Builds the per-suite SVG: ratio-vs-scale curves, or log-log mass fits
/// for the weight-shift suite.
fn report_chart(suite: &str, report: &VerificationReport) -> String {
    let scale_series = |prefix: &str| -> Vec<(f64, f64)> {
        report
            .samples
            .iter()
            .filter_map(|s| {
                let rest = s.label.strip_prefix(prefix)?;
                let depth: f64 = rest
                    .split(|c: char| !c.is_ascii_digit())
                    .find(|t| !t.is_empty())?
                    .parse()
                    .ok()?;
                Some((depth, s.ratio))
            })
            .collect()
    };
    match suite {
        "weight-shift" => {
            let to_loglog = |prefix: &str| -> Vec<(f64, f64)> {
                scale_series(prefix)
                    .into_iter()
                    .filter(|&(_, m)| m > 0.0)
                    .map(|(k, m)| ((std::f64::consts::TAU / 2f64.powf(k)).log10(), m.log10()))
                    .collect()
            };
            svg::line_chart(
                "dyadic box mass vs arc length (log-log)",
                "log10 |I|",
                "log10 mass",
                &[
                    Series {
                        label: "base".into(),
                        points: to_loglog("mass_base depth="),
                    },
                    Series {
                        label: "transform".into(),
                        points: to_loglog("mass_transform depth="),
                    },
                ],
            )
        }
        "square-disk" => svg::line_chart(
            "empirical Carleson ratios per scale",
            "scale index",
            "ratio",
            &[
                Series {
                    label: "square".into(),
                    points: scale_series("square scale="),
                },
                Series {
                    label: "hyperbolic".into(),
                    points: scale_series("hyperbolic scale="),
                },
            ],
        ),
        "campanato" => svg::line_chart(
            "Campanato oscillation maxima per scale",
            "depth",
            "max ratio",
            &[Series {
                label: "campanato".into(),
                points: scale_series("campanato depth="),
            }],
        ),
        "thm1" => svg::line_chart(
            "double-integral functional maxima per scale",
            "depth",
            "max ratio",
            &[Series {
                label: "thm1".into(),
                points: scale_series("depth="),
            }],
        ),
        _ => {
            let points: Vec<(f64, f64)> = report
                .samples
                .iter()
                .enumerate()
                .map(|(i, s)| (i as f64, s.ratio))
                .collect();
            svg::line_chart(
                "ratio samples",
                "sample index",
                "ratio",
                &[Series {
                    label: "ratio".into(),
                    points,
                }],
            )
        }
    }
}

fn eval_balayage(args: &CommonArgs) -> Result<u8, Failure> {
    let config = load_config(args)?;
    ensure_out_dir(&args.out)?;
    let measure = config.measure.build().map_err(Failure::from)?;
    let harness = harness_from(&config)?;
    let grid = balayage(&measure, config.quadrature.boundary_nodes, harness.rule())?;
    let path = write_file(&args.out, "balayage.csv", &grid.to_csv())?;
    println!("wrote {}", path.display());
    Ok(0)
}

fn eval_bbalayage(args: &CommonArgs) -> Result<u8, Failure> {
    let config = load_config(args)?;
    ensure_out_dir(&args.out)?;
    let measure = config.measure.build().map_err(Failure::from)?;
    let harness = harness_from(&config)?;
    let rings = config.params.grid_rings.unwrap_or(24);
    let angles = config.params.grid_angles.unwrap_or(64);
    if rings == 0 || angles == 0 {
        return Err(Failure::Config("grid sizes must be positive".into()));
    }
    let mut csv = String::from("re,im,value\n");
    for i in 0..rings {
        let r = (i as f64 + 0.5) / rings as f64;
        for j in 0..angles {
            let angle = std::f64::consts::TAU * j as f64 / angles as f64;
            let z = balayage::DiskPoint::from_polar(r, angle).map_err(Failure::from)?;
            let value = b_balayage(&measure, z, harness.rule())?;
            csv.push_str(&format!("{},{},{}\n", z.re(), z.im(), value));
        }
    }
    let path = write_file(&args.out, "bbalayage.csv", &csv)?;
    println!("wrote {}", path.display());
    Ok(0)
}

fn carleson_dump(args: &CommonArgs) -> Result<u8, Failure> {
    let config = load_config(args)?;
    ensure_out_dir(&args.out)?;
    let measure = config.measure.build().map_err(Failure::from)?;
    let s = config.params.s.unwrap_or(1.0);
    let (_, depth) = config.depths();
    if s > 1.0 && s < 2.0 {
        println!("note: exploratory sweep; no boundedness suite covers 1 < s < 2");
    }
    let report = carleson_constant(&measure, s, depth).map_err(Failure::from)?;
    let json = serde_json::to_string_pretty(&report)
        .map_err(|e| Failure::Config(format!("serialize: {e}")))?;
    let mut csv = String::from("scale_index,extent,max_ratio,max_mass\n");
    for sample in &report.samples {
        csv.push_str(&format!(
            "{},{},{},{}\n",
            sample.scale_index, sample.extent, sample.max_ratio, sample.max_mass
        ));
    }
    let json_path = write_file(&args.out, "carleson.json", &(json + "\n"))?;
    let csv_path = write_file(&args.out, "carleson.csv", &csv)?;
    println!("empirical_constant={:.6e}", report.empirical_constant);
    println!("wrote {}", json_path.display());
    println!("wrote {}", csv_path.display());
    Ok(0)
}
