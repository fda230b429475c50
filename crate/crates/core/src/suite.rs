//! Seeded invariant suite covering every module. Each check reports a measured
//! value against a tolerance; the report is deterministic for a given config.

use std::f64::consts::TAU;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::analytic::{Holomorphic, PowerSeries};
use crate::carleson::{box_constant, default_box_levels, default_centers, embedding_constant};
use crate::circle::{forward, herglotz_extend, inverse, poisson_extend, riesz_project, BoundarySamples, CircleGrid};
use crate::corona::{
    cauchy_transform, corona_solve, random_corona_pairs, uncorrected_solution, verify_corona, CoronaConfig,
    CoronaData, CoronaReport,
};
use crate::duality::{apply_ap, dist_h2_with_outer, pairing_lower_bound, pythagoras};
use crate::error::Result;
use crate::exhaustion::{
    approximating_stack, boundary_weight, check_exhaustion_property, default_stack_radii, lsc_stack_to_exhaustion,
    ring_exhaustion, Atom, DiskMeasure, Exhaustion, Ring,
};
use crate::interpolation::{
    blaschke, bridge_family, bridge_report, candidate_phi, constraint_defect, min_norm_interpolant, pick_min_norm,
    InterpolationProblem, PointSequence,
};
use crate::norms::{
    boundary_norm, carleson_identity_check, lelong_jensen_sides, max_decrease, radial_mean_monotonicity,
    AreaIntegrator,
};
use crate::weights::{default_outer, isometry_defect, random_weight_family, Weight};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SuiteConfig {
    pub grid_n: usize,
    pub disk_radial: usize,
    pub disk_angular: usize,
    pub seed: u64,
    /// Replaces every upper-bound tolerance when set.
    pub tol: Option<f64>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self {
            grid_n: 1024,
            disk_radial: 200,
            disk_angular: 512,
            seed: 7,
            tol: None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Bound {
    /// Passes when `value ≤ tolerance`.
    AtMost,
    /// Passes when `value ≥ tolerance` (negative controls).
    AtLeast,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckResult {
    pub module: String,
    pub name: String,
    pub value: f64,
    pub tolerance: f64,
    pub bound: Bound,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub config: SuiteConfig,
    pub checks: Vec<CheckResult>,
    pub passed: bool,
}

impl SuiteReport {
    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

struct Recorder {
    tol: Option<f64>,
    checks: Vec<CheckResult>,
}

impl Recorder {
    fn push(&mut self, module: &str, name: &str, value: f64, tolerance: f64, bound: Bound) {
        let tolerance = match (bound, self.tol) {
            (Bound::AtMost, Some(t)) => t,
            _ => tolerance,
        };
        let passed = match bound {
            Bound::AtMost => value <= tolerance,
            Bound::AtLeast => value >= tolerance,
        };
        self.checks.push(CheckResult {
            module: module.into(),
            name: name.into(),
            value,
            tolerance,
            bound,
            passed,
        });
    }

    fn at_most(&mut self, module: &str, name: &str, value: f64, tolerance: f64) {
        self.push(module, name, value, tolerance, Bound::AtMost);
    }
}

fn random_poly(rng: &mut ChaCha8Rng, degree: usize) -> PowerSeries {
    PowerSeries::new(
        (0..=degree)
            .map(|_| Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)))
            .collect(),
    )
}

/// `1 + Σ c_k z^k` with `Σ|c_k| ≤ 0.9`, so no zeros in the closed disk.
fn zero_free_poly(rng: &mut ChaCha8Rng, degree: usize) -> PowerSeries {
    let tail = random_poly(rng, degree);
    let mut coeffs = tail.coeffs().to_vec();
    coeffs[0] = Complex64::new(0.0, 0.0);
    let total: f64 = coeffs.iter().map(|c| c.norm()).sum();
    let scale = 0.9 / total.max(1e-300);
    coeffs.iter_mut().for_each(|c| *c *= scale);
    coeffs[0] = Complex64::new(1.0, 0.0);
    PowerSeries::new(coeffs)
}

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs().max(f64::MIN_POSITIVE)
}

pub fn verify_suite(config: SuiteConfig) -> Result<SuiteReport> {
    let grid = CircleGrid::new(config.grid_n)?;
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut rec = Recorder {
        tol: config.tol,
        checks: Vec::new(),
    };
    let family = random_weight_family(grid, 6, 8, 0.2, config.seed)?;

    // circle_fourier
    let samples = BoundarySamples::new(
        grid,
        (0..grid.len())
            .map(|_| Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)))
            .collect(),
    )?;
    let spec = forward(&samples);
    let back = inverse(&spec, grid)?;
    let roundtrip = back
        .values()
        .iter()
        .zip(samples.values())
        .map(|(a, b)| (a - b).norm())
        .fold(0.0, f64::max);
    rec.at_most("circle_fourier", "fft_roundtrip", roundtrip, 1e-12);
    let once = riesz_project(&spec);
    let twice = riesz_project(&once);
    let idem = once
        .fft_order()
        .iter()
        .zip(twice.fft_order())
        .map(|(a, b)| (a - b).norm())
        .fold(0.0, f64::max);
    rec.at_most("circle_fourier", "riesz_idempotent", idem, 1e-15);
    let real = BoundarySamples::from_real(grid, &samples.real_parts())?;
    let mean = real.real_parts().iter().sum::<f64>() / grid.len() as f64;
    rec.at_most("circle_fourier", "poisson_mean", (poisson_extend(&real, Complex64::new(0.0, 0.0))? - mean).abs(), 1e-13);
    let smooth = BoundarySamples::from_angle_fn(grid, |t| Complex64::new((t.cos() * 0.8).exp() + (3.0 * t).sin(), 0.0));
    let herglotz = herglotz_extend(&smooth, grid.max_degree())?;
    let probe = Complex64::from_polar(0.6, 1.1);
    rec.at_most(
        "circle_fourier",
        "herglotz_real_part",
        (herglotz.eval(probe).re - poisson_extend(&smooth, probe)?).abs(),
        1e-12,
    );

    // weights_outer
    let closed = Weight::from_fn(grid, |t| (5.0 + 4.0 * t.cos()) / 5.0)?;
    let outer = default_outer(&closed);
    let modulus = outer
        .boundary_power(1.0)
        .values()
        .iter()
        .zip(closed.samples())
        .map(|(a, w)| (a.norm() - w).abs())
        .fold(0.0, f64::max);
    let interior = (0..50)
        .map(|_| {
            let z = Complex64::from_polar(rng.random_range(0.0..0.99f64).sqrt(), rng.random_range(0.0..TAU));
            (outer.eval(z) - (2.0 + z) * (2.0 + z) / 5.0).norm()
        })
        .fold(0.0, f64::max);
    rec.at_most("weights_outer", "outer_closed_form", modulus.max(interior), 1e-8);
    let family_modulus = family
        .iter()
        .map(|w| {
            default_outer(w)
                .boundary_power(1.0)
                .values()
                .iter()
                .zip(w.samples())
                .map(|(a, s)| (a.norm() - s).abs())
                .fold(0.0, f64::max)
        })
        .fold(0.0, f64::max);
    rec.at_most("weights_outer", "outer_modulus_family", family_modulus, 1e-8);
    let mut iso = 0.0f64;
    for (i, w) in family.iter().enumerate() {
        let f = random_poly(&mut rng, 6).boundary_samples(grid);
        iso = iso.max(isometry_defect(&default_outer(w), &f, [1.0, 2.0, 4.0][i % 3])?);
    }
    rec.at_most("weights_outer", "ap_isometry", iso, 1e-10);

    // exhaustions
    let radii = [0.9, 0.99, 0.999];
    let mut worst_at_last = 0.0f64;
    let mut monotone_violations = 0.0;
    for w in family.iter().take(3) {
        let errs: Vec<f64> = radii
            .iter()
            .map(|&r| boundary_weight(ring_exhaustion(w, r)?.measure(), grid)?.sup_distance(w))
            .collect::<Result<_>>()?;
        worst_at_last = worst_at_last.max(errs[2]);
        monotone_violations += errs.windows(2).filter(|e| !(e[1] < e[0])).count() as f64;
    }
    rec.at_most("exhaustions", "ring_roundtrip_r0999", worst_at_last, 1e-2);
    rec.at_most("exhaustions", "ring_roundtrip_decreasing", monotone_violations, 0.5);
    let ring_e = ring_exhaustion(&family[0], 0.8)?;
    let prop = check_exhaustion_property(&ring_e, 0.9999);
    rec.at_most("exhaustions", "potential_negative", prop.max_interior.max(0.0), 1e-12);
    rec.at_most("exhaustions", "potential_boundary_decay", -prop.min_near_boundary, 1e-3);
    let mut sweep_drop = 0.0f64;
    for _ in 0..10 {
        let e = random_radial_exhaustion(&mut rng)?;
        let f = random_poly(&mut rng, 5);
        let levels: Vec<f64> = (1..=12).map(|k| -2.0 + 1.9 * k as f64 / 12.0).filter(|l| *l < 0.0).collect();
        let means = radial_mean_monotonicity(&f, &e, [1.0, 2.0, 3.0][rng.random_range(0..3)], &levels, grid)?;
        sweep_drop = sweep_drop.max(max_decrease(&means));
    }
    rec.at_most("exhaustions", "sweep_monotonicity", sweep_drop, 1e-10);
    let jensen_e = Exhaustion::uncapped(DiskMeasure::new(
        vec![Ring::uniform(0.4, 0.6, 256)?],
        vec![Atom::new(Complex64::new(0.0, 0.0), 0.4)?],
    ))?;
    let jensen_f = zero_free_poly(&mut rng, 4);
    let sides = lelong_jensen_sides(&jensen_f, &jensen_e, -0.3, 2.0, config.disk_radial, config.disk_angular)?;
    rec.at_most("exhaustions", "lelong_jensen", rel(sides.interior, sides.sweep), 1e-8);

    // hardy_norms
    let stack_e = {
        let (stack, _) = approximating_stack(&family[1], 3)?;
        lsc_stack_to_exhaustion(&stack, &default_stack_radii(3))?
    };
    let cases: Vec<(Exhaustion, f64)> = vec![
        (Exhaustion::classical(), 2.0),
        (ring_exhaustion(&family[2], 0.7)?, 4.0),
        (stack_e, 2.0),
        (ring_exhaustion(&family[3], 0.6)?, 1.0),
    ];
    let mut gap = 0.0f64;
    let mut carleson_excess = 0.0f64;
    for (e, p) in &cases {
        let f = if *p == 1.0 {
            zero_free_poly(&mut rng, 6)
        } else {
            random_poly(&mut rng, 6)
        };
        let integrator = AreaIntegrator::new(e, config.disk_radial, config.disk_angular)?;
        let area = integrator.area_norm(&f, *p)?.norm;
        let alpha = boundary_weight(e.measure(), grid)?;
        gap = gap.max(rel(area, boundary_norm(&f, &alpha, *p)?));
        if !e.has_caps() {
            let c = carleson_identity_check(&f, e, *p, grid)?;
            carleson_excess = carleson_excess.max(c.ratio - 1.0);
        }
    }
    rec.at_most("hardy_norms", "norm_identity", gap, 1e-6);
    rec.at_most("hardy_norms", "carleson_identity", carleson_excess.max(0.0), 1e-9);

    // duality
    let mut pyth = 0.0f64;
    let mut pairing_excess = f64::NEG_INFINITY;
    let mut equivalence = 0.0f64;
    for w in family.iter().take(4) {
        let outer = default_outer(w);
        let phi = random_trig(&mut rng, grid, 8);
        let d = dist_h2_with_outer(&phi, &outer)?;
        pyth = pyth.max(pythagoras(&d).defect);
        for _ in 0..3 {
            let g = random_poly(&mut rng, 5);
            pairing_excess = pairing_excess.max(pairing_lower_bound(&phi, &g, &outer, 2.0)? - d.distance);
        }
        let embedded = apply_ap(&phi, &outer, 2.0)?;
        let flat = dist_h2_with_outer(&embedded, &default_outer(&Weight::classical(grid)))?;
        equivalence = equivalence.max((flat.distance - d.distance).abs());
    }
    rec.at_most("duality", "pythagoras", pyth, 1e-10);
    rec.at_most("duality", "pairing_below_distance", pairing_excess.max(0.0), 1e-9);
    rec.at_most("duality", "isometry_equivalence", equivalence, 1e-12);

    // carleson_measures
    let mut embed_excess = f64::NEG_INFINITY;
    for w in family.iter().take(3) {
        let r = rng.random_range(0.3..0.9);
        let m = ring_exhaustion(w, r)?.measure().clone();
        let alpha = boundary_weight(&m, grid)?;
        let est = embedding_constant(&m, &default_outer(&alpha), 2.0, &default_centers(&m))?;
        embed_excess = embed_excess.max(est.constant - 1.0);
    }
    rec.at_most("carleson_measures", "embedding_at_most_one", embed_excess.max(0.0), 1e-9);
    let atoms = DiskMeasure::new(
        vec![],
        (0..5)
            .map(|_| Atom::new(Complex64::from_polar(rng.random_range(0.5..0.98), rng.random_range(0.0..TAU)), rng.random_range(0.01..0.2)))
            .collect::<Result<_>>()?,
    );
    let doubled = atoms.scaled(2.0)?;
    let classical = default_outer(&Weight::classical(grid));
    let centers = default_centers(&atoms);
    let e1 = embedding_constant(&atoms, &classical, 2.0, &centers)?.constant;
    let e2 = embedding_constant(&doubled, &classical, 2.0, &centers)?.constant;
    let b1 = box_constant(&atoms, &default_box_levels()).constant;
    let b2 = box_constant(&doubled, &default_box_levels()).constant;
    rec.at_most("carleson_measures", "scaling", rel(e2, 2.0 * e1).max(rel(b2, 2.0 * b1)), 1e-12);

    // interpolation
    let points: Vec<Complex64> = (0..5)
        .map(|k| Complex64::from_polar(rng.random_range(0.2..0.85), TAU * (k as f64 + rng.random_range(0.0..0.5)) / 5.0))
        .collect();
    let seq = PointSequence::new(points)?;
    let b = blaschke(&seq, None)?;
    let unimodular = b.boundary_samples(grid).values().iter().map(|v| (v.norm() - 1.0).abs()).fold(0.0, f64::max);
    rec.at_most("interpolation", "blaschke_unimodular", unimodular, 1e-12);
    let targets: Vec<Complex64> = (0..seq.len()).map(|_| Complex64::from_polar(1.0, rng.random_range(0.0..TAU))).collect();
    let problem = InterpolationProblem::new(seq, targets)?;
    let outer = default_outer(&family[4]);
    let sol = min_norm_interpolant(&problem, &outer)?;
    rec.at_most("interpolation", "min_norm_constraints", constraint_defect(&sol.function, &problem), 1e-8);
    let cand = candidate_phi(&problem, grid)?;
    let via_phi = dist_h2_with_outer(&cand.samples, &outer)?.distance;
    rec.at_most("interpolation", "min_norm_vs_candidate", (sol.norm - via_phi).abs(), 1e-6);
    let r = rng.random_range(0.2..0.9);
    let s = Complex64::from_polar(rng.random_range(0.1..1.0), rng.random_range(0.0..TAU));
    let schwarz = InterpolationProblem::new(
        PointSequence::new(vec![Complex64::new(0.0, 0.0), Complex64::new(r, 0.0)])?,
        vec![Complex64::new(0.0, 0.0), s],
    )?;
    rec.at_most("interpolation", "pick_schwarz", (pick_min_norm(&schwarz, 1e-8)?.value - s.norm() / r).abs(), 1e-8);
    let dyadic = PointSequence::dyadic(6);
    let targets = (0..6).map(|_| Complex64::from_polar(1.0, rng.random_range(0.0..TAU))).collect();
    let bridge_problem = InterpolationProblem::new(dyadic, targets)?;
    let report = bridge_report(&bridge_problem, &bridge_family(grid, 6, config.seed)?, 1e-8)?;
    let inclusion = report.rows.iter().map(|r| r.min_norm - r.pick_norm).fold(f64::NEG_INFINITY, f64::max);
    rec.at_most("interpolation", "ball_inclusion", inclusion.max(0.0), 1e-6);
    rec.at_most("interpolation", "sparsity_bound", (report.sup_min_norm - report.bound).max(0.0), 1e-12);

    // corona
    let corona_config = CoronaConfig {
        radial: config.disk_radial,
        angular: config.disk_angular,
    };
    let mut corona_cases = vec![
        (
            CoronaData::new(PowerSeries::from_real(&[1.0]), PowerSeries::from_real(&[0.0, 1.0]))?,
            Weight::classical(grid),
        ),
        (
            CoronaData::new(
                PowerSeries::from_real(&[-0.3 / 1.3, 1.0 / 1.3]),
                PowerSeries::from_real(&[0.4 / 1.4, 1.0 / 1.4]),
            )?,
            family[5].clone(),
        ),
    ];
    corona_cases.extend(random_corona_pairs(1, 3, 0.05, config.seed)?.into_iter().map(|d| (d, family[0].clone())));
    let reports: Vec<CoronaReport> = corona_cases
        .iter()
        .map(|(d, w)| verify_corona(&corona_solve(d, &default_outer(w), corona_config)?))
        .collect::<Result<_>>()?;
    let worst = |f: fn(&CoronaReport) -> f64| reports.iter().map(f).fold(0.0, f64::max);
    rec.at_most("corona", "bezout_interior", worst(|r| r.bezout_interior), 1e-3);
    rec.at_most("corona", "bezout_boundary", worst(|r| r.bezout_boundary), 1e-6);
    rec.at_most("corona", "dbar_residual", worst(|r| r.dbar_residual[0].max(r.dbar_residual[1])), 1e-2);
    rec.at_most(
        "corona",
        "norm_budget",
        reports
            .iter()
            .map(|r| r.norm_g[0].max(r.norm_g[1]) - r.k_delta - r.distance)
            .fold(f64::NEG_INFINITY, f64::max)
            .max(0.0),
        1e-6,
    );
    rec.at_most("corona", "correction_optimality", worst(|r| r.correction_defect), 1e-8);
    let (d0, w0) = &corona_cases[0];
    let control = verify_corona(&uncorrected_solution(d0, &default_outer(w0), corona_config)?)?;
    rec.push(
        "corona",
        "negative_control_flagged",
        control.dbar_residual[0].max(control.dbar_residual[1]),
        1e-2,
        Bound::AtLeast,
    );
    let mut cauchy = 0.0f64;
    for k in 0..8 {
        let z = Complex64::from_polar(0.9 * (k as f64 + 1.0) / 8.0, rng.random_range(0.0..TAU));
        let psi = cauchy_transform(|_| Complex64::new(1.0, 0.0), z, config.disk_radial, config.disk_angular)?;
        cauchy = cauchy.max((psi - z.conj()).norm());
    }
    rec.at_most("corona", "cauchy_convention", cauchy, 1e-3);

    let passed = rec.checks.iter().all(|c| c.passed);
    Ok(SuiteReport {
        config,
        checks: rec.checks,
        passed,
    })
}

fn random_trig(rng: &mut ChaCha8Rng, grid: CircleGrid, degree: i64) -> BoundarySamples {
    let modes: Vec<(i64, Complex64)> = (-degree..=degree)
        .map(|m| {
            let c = Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0));
            (m, c / (1.0 + m.abs() as f64))
        })
        .collect();
    BoundarySamples::from_angle_fn(grid, |t| {
        modes.iter().map(|&(m, c)| c * Complex64::from_polar(1.0, m as f64 * t)).sum()
    })
}

/// Uniform rings plus an atom at the origin, total mass 1.
fn random_radial_exhaustion(rng: &mut ChaCha8Rng) -> Result<Exhaustion> {
    let count = rng.random_range(1..=3);
    let mut weights: Vec<f64> = (0..=count).map(|_| rng.random_range(0.1..1.0)).collect();
    let total: f64 = weights.iter().sum();
    weights.iter_mut().for_each(|w| *w /= total);
    let rings = (0..count)
        .map(|i| Ring::uniform(rng.random_range(0.2..0.95), weights[i + 1], 256))
        .collect::<Result<_>>()?;
    let atom = Atom::new(Complex64::new(0.0, 0.0), weights[0])?;
    Exhaustion::uncapped(DiskMeasure::new(rings, vec![atom]))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tightened_tolerance_fails_some_checks() {
        let report = verify_suite(SuiteConfig {
            tol: Some(1e-15),
            ..SuiteConfig::default()
        })
        .unwrap();
        assert!(!report.passed);
        let failed: Vec<&str> = report.failures().map(|c| c.name.as_str()).collect();
        assert!(failed.contains(&"ring_roundtrip_r0999"), "{failed:?}");
        assert!(failed.contains(&"dbar_residual"), "{failed:?}");
        // the negative control keeps its own threshold
        assert!(!failed.contains(&"negative_control_flagged"));
    }

    #[test]
    fn verdicts_stable_across_seeds() {
        for seed in [1, 2] {
            let report = verify_suite(SuiteConfig {
                seed,
                ..SuiteConfig::default()
            })
            .unwrap();
            let failed: Vec<&str> = report.failures().map(|c| c.name.as_str()).collect();
            assert!(failed.is_empty(), "seed {seed}: {failed:?}");
        }
    }

    #[test]
    fn report_is_deterministic() {
        let a = serde_json::to_string(&verify_suite(SuiteConfig::default()).unwrap()).unwrap();
        let b = serde_json::to_string(&verify_suite(SuiteConfig::default()).unwrap()).unwrap();
        assert_eq!(a, b);
    }
}
