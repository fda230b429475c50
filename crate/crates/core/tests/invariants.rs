mod common;

use common::{poisson, weighted_norm, TrigWeight};
use hardy_forge::carleson::{box_constant, default_box_levels};
use hardy_forge::corona::{smooth_solution, CoronaData};
use hardy_forge::duality::{dist_h2_with_outer, pythagoras};
use hardy_forge::exhaustion::boundary_weight;
use hardy_forge::interpolation::{pick_min_norm, InterpolationProblem, PointSequence};
use hardy_forge::norms::boundary_norm;
use hardy_forge::weights::default_outer;
use hardy_forge::{Atom, BoundarySamples, CircleGrid, DiskMeasure, Holomorphic, PowerSeries};
use num_complex::Complex64;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn grid() -> CircleGrid {
    CircleGrid::new(256).unwrap()
}

fn complex() -> impl Strategy<Value = Complex64> {
    (-1.0..1.0f64, -1.0..1.0f64).prop_map(|(re, im)| Complex64::new(re, im))
}

fn disk_point(max: f64) -> impl Strategy<Value = Complex64> {
    (0.0..max, 0.0..std::f64::consts::TAU).prop_map(|(r, t)| Complex64::from_polar(r, t))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn atom_boundary_weight_is_poisson_kernel(a in disk_point(0.9), mass in 0.1..2.0f64) {
        let g = grid();
        let w = boundary_weight(&DiskMeasure::new(vec![], vec![Atom::new(a, mass).unwrap()]), g).unwrap();
        for (t, v) in g.thetas().zip(w.samples()) {
            prop_assert!((v - mass * poisson(a, t)).abs() <= 1e-12 * v.max(1.0));
        }
    }

    #[test]
    fn weighted_norm_matches_direct_sum(seed in 0u64..1000, coeffs in prop::collection::vec(complex(), 1..6), p in 1.0..4.0f64) {
        let g = grid();
        let tw = TrigWeight::random(&mut ChaCha8Rng::seed_from_u64(seed), 3, 0.2);
        let w = tw.weight(g);
        let f = PowerSeries::new(coeffs);
        let lib = boundary_norm(&f, &w, p).unwrap();
        let direct = weighted_norm(&f, w.samples(), g, p);
        prop_assert!((lib - direct).abs() <= 1e-12 * direct.max(1e-300));
    }

    #[test]
    fn distance_splits_orthogonally(seed in 0u64..1000, modes in prop::collection::vec(complex(), 9)) {
        let g = grid();
        let w = TrigWeight::random(&mut ChaCha8Rng::seed_from_u64(seed), 2, 0.3).weight(g);
        let phi = BoundarySamples::from_angle_fn(g, |t| {
            modes.iter().enumerate().map(|(i, c)| c * Complex64::from_polar(1.0, (i as f64 - 4.0) * t)).sum()
        });
        let d = dist_h2_with_outer(&phi, &default_outer(&w)).unwrap();
        prop_assert!(pythagoras(&d).defect <= 1e-10 * d.embedded_norm.powi(2).max(1.0));
        prop_assert!(d.distance <= d.embedded_norm + 1e-12);
    }

    #[test]
    fn box_constant_scales_linearly(points in prop::collection::vec(disk_point(0.98), 1..5), factor in 0.1..10.0f64) {
        let atoms: Vec<Atom> = points.iter().map(|&z| Atom::new(z, 0.2).unwrap()).collect();
        let m = DiskMeasure::new(vec![], atoms);
        let levels = default_box_levels();
        let base = box_constant(&m, &levels).constant;
        let scaled = box_constant(&m.scaled(factor).unwrap(), &levels).constant;
        prop_assert!((scaled - factor * base).abs() <= 1e-12 * scaled.max(1.0));
    }

    #[test]
    fn pick_value_bounds_targets(z in disk_point(0.9), w in disk_point(0.9), s in complex(), t in complex()) {
        prop_assume!((z - w).norm() > 1e-3);
        let p = InterpolationProblem::new(PointSequence::new(vec![z, w]).unwrap(), vec![s, t]).unwrap();
        let r = pick_min_norm(&p, 1e-10).unwrap();
        prop_assert!(r.value + 1e-10 >= s.norm().max(t.norm()));
        prop_assert!(r.lower <= r.upper);
    }

    #[test]
    fn smooth_solutions_satisfy_bezout(c in 0.3..1.0f64, shift in -0.5..0.5f64, z in disk_point(0.99)) {
        let data = CoronaData::new(PowerSeries::from_real(&[c]), PowerSeries::from_real(&[shift, 1.0 - shift.abs()])).unwrap();
        let (g1, g2) = smooth_solution(&data, z);
        let r = data.f1().eval(z) * g1 + data.f2().eval(z) * g2;
        prop_assert!((r - 1.0).norm() <= 1e-13);
    }
}
