//! Carleson constants of disk measures: a geometric box scan and a
//! reproducing-kernel embedding test. Both are lower bounds on the true
//! constant.

use std::f64::consts::{PI, TAU};

use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;

use crate::analytic::Holomorphic;
use crate::error::{HardyError, Result};
use crate::exhaustion::DiskMeasure;
use crate::weights::OuterFunction;

const EDGE_TOL: f64 = 1e-12;

/// Box sizes `π 2^{-k}` for `k = 1..=12`.
pub fn default_box_levels() -> Vec<f64> {
    (1..=12).map(|k| PI / f64::from(1u32 << k)).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BoxWitness {
    pub theta: f64,
    pub h: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BoxEstimate {
    pub constant: f64,
    pub witness: Option<BoxWitness>,
}

/// `sup m(Q)/h` over boxes `Q(θ₀, h) = {re^{iθ} : 1 - h ≤ r < 1, |θ - θ₀| ≤ h}`.
///
/// For each `h` in `levels` the supremum over `θ₀` is exact: the mass in an arc
/// window only changes when an edge crosses a support point, so windows whose
/// left edge sits on a point cover every case.
pub fn box_constant(measure: &DiskMeasure, levels: &[f64]) -> BoxEstimate {
    let points = measure.discrete_points();
    let mut best = BoxEstimate {
        constant: 0.0,
        witness: None,
    };
    for &h in levels.iter().filter(|h| **h > 0.0) {
        let mut central = 0.0;
        let mut arcs: Vec<(f64, f64)> = Vec::new();
        for &(z, m) in &points {
            let r = z.norm();
            if r < 1.0 - h - EDGE_TOL {
                continue;
            }
            if r == 0.0 {
                central += m;
            } else {
                arcs.push((z.arg().rem_euclid(TAU), m));
            }
        }
        let (mass, theta) = if 2.0 * h >= TAU - EDGE_TOL {
            (arcs.iter().map(|a| a.1).sum::<f64>(), 0.0)
        } else {
            best_window(&mut arcs, 2.0 * h)
        };
        let total = mass + central;
        let ratio = total / h;
        if total > 0.0 && ratio > best.constant {
            best = BoxEstimate {
                constant: ratio,
                witness: Some(BoxWitness { theta: theta + h, h }),
            };
        }
    }
    best
}

/// Heaviest closed arc of length `width` over angles in `[0, 2π)`, returned as
/// `(mass, left edge)`.
fn best_window(arcs: &mut [(f64, f64)], width: f64) -> (f64, f64) {
    if arcs.is_empty() {
        return (0.0, 0.0);
    }
    arcs.sort_by(|a, b| a.0.partial_cmp(&b.0).expect("finite angles"));
    let n = arcs.len();
    let angle = |i: usize| arcs[i % n].0 + if i >= n { TAU } else { 0.0 };
    let mut best = (0.0, arcs[0].0);
    let mut right = 0;
    let mut sum = 0.0;
    for left in 0..n {
        if right < left {
            right = left;
            sum = 0.0;
        }
        while right < left + n && angle(right) <= angle(left) + width + EDGE_TOL {
            sum += arcs[right % n].1;
            right += 1;
        }
        if sum > best.0 {
            best = (sum, arcs[left].0);
        }
        sum -= arcs[left].1;
    }
    best
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EmbeddingEstimate {
    pub constant: f64,
    pub center: Option<Complex64>,
}

/// `sup_c ∫|k_c|^p dm / ‖k_c‖_{α,p}^p` over test kernels
/// `k_c(z) = 1/((1 - c̄z) a^{1/2}(z) conj(a^{1/2}(c)))`.
///
/// The factor `|a(c)|^{-p/2}` cancels, leaving
/// `∫ |a|^{-p/2} |1 - c̄z|^{-p} dm` over `∫ α^{1-p/2} |1 - c̄ζ|^{-p} dλ`.
pub fn embedding_constant(
    measure: &DiskMeasure,
    outer: &OuterFunction,
    p: f64,
    centers: &[Complex64],
) -> Result<EmbeddingEstimate> {
    if !(p > 0.0) || !p.is_finite() {
        return Err(HardyError::InvalidExponent(p));
    }
    if let Some(&c) = centers.iter().find(|c| c.norm() >= 1.0) {
        return Err(HardyError::outside(c));
    }
    let log = outer.log_series();
    let interior: Vec<(Complex64, f64)> = measure
        .discrete_points()
        .into_par_iter()
        .map(|(z, m)| (z, m * (-0.5 * p * log.eval(z).re).exp()))
        .collect();
    let weight = outer.weight();
    let grid = weight.grid();
    let boundary: Vec<(Complex64, f64)> = grid
        .nodes()
        .zip(weight.samples())
        .map(|(e, &alpha)| (e, alpha.powf(1.0 - 0.5 * p) * grid.weight()))
        .collect();
    let ratio = |c: Complex64| {
        let cc = c.conj();
        let num: f64 = interior.iter().map(|&(z, m)| m * (1.0 - cc * z).norm().powf(-p)).sum();
        let den: f64 = boundary.iter().map(|&(e, w)| w * (1.0 - cc * e).norm().powf(-p)).sum();
        num / den
    };
    let best = centers
        .par_iter()
        .map(|&c| (ratio(c), c))
        .reduce_with(|a, b| if b.0 > a.0 { b } else { a });
    Ok(match best {
        Some((constant, c)) => EmbeddingEstimate {
            constant,
            center: Some(c),
        },
        None => EmbeddingEstimate {
            constant: 0.0,
            center: None,
        },
    })
}

/// Polar grid of test centers: the origin plus `angular` equally spaced points on
/// each radius.
pub fn polar_centers(radii: &[f64], angular: usize) -> Vec<Complex64> {
    let mut out = vec![Complex64::new(0.0, 0.0)];
    for &r in radii.iter().filter(|r| **r > 0.0 && **r < 1.0) {
        out.extend((0..angular).map(|k| Complex64::from_polar(r, TAU * k as f64 / angular as f64)));
    }
    out
}

/// Default centers: a polar grid out to radius `0.99` plus every atom.
pub fn default_centers(measure: &DiskMeasure) -> Vec<Complex64> {
    let radii = [0.1, 0.25, 0.4, 0.55, 0.7, 0.8, 0.9, 0.95, 0.98, 0.99];
    let mut out = polar_centers(&radii, 64);
    out.extend(measure.atoms().iter().map(|a| a.point).filter(|z| z.norm() < 1.0));
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CarlesonEstimate {
    pub box_constant: f64,
    pub box_witness: Option<BoxWitness>,
    pub embedding_constant: f64,
    pub embedding_witness: Option<Complex64>,
}

pub fn carleson_estimate(
    measure: &DiskMeasure,
    outer: &OuterFunction,
    p: f64,
    centers: &[Complex64],
    levels: &[f64],
) -> Result<CarlesonEstimate> {
    let boxes = box_constant(measure, levels);
    let embedding = embedding_constant(measure, outer, p, centers)?;
    Ok(CarlesonEstimate {
        box_constant: boxes.constant,
        box_witness: boxes.witness,
        embedding_constant: embedding.constant,
        embedding_witness: embedding.center,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analytic::KernelExpansion;
    use crate::circle::CircleGrid;
    use crate::exhaustion::{boundary_weight, Atom, Ring};
    use crate::norms::boundary_norm;
    use crate::weights::{default_outer, Weight};
    use approx::assert_abs_diff_eq;

    fn cx(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn classical() -> OuterFunction {
        default_outer(&Weight::classical(CircleGrid::new(512).unwrap()))
    }

    #[test]
    fn box_scan_unit_atom() {
        let est = box_constant(&DiskMeasure::unit_atom(), &default_box_levels());
        // only h = π/2 reaches the origin
        assert_abs_diff_eq!(est.constant, 2.0 / PI, epsilon = 1e-15);
        assert_abs_diff_eq!(est.witness.unwrap().h, PI / 2.0, epsilon = 1e-15);
    }

    #[test]
    fn box_scan_single_atom() {
        let m = DiskMeasure::new(vec![], vec![Atom::new(cx(0.9, 0.0), 0.1).unwrap()]);
        let est = box_constant(&m, &[0.1]);
        assert_abs_diff_eq!(est.constant, 1.0, epsilon = 1e-12);
        let est = box_constant(&m, &default_box_levels());
        assert_abs_diff_eq!(est.constant, 0.1 / (PI / 16.0), epsilon = 1e-12);
    }

    #[test]
    fn box_scan_sequence_is_finite() {
        let atoms = (1..=8)
            .map(|j| {
                let r = 1.0 - 0.5f64.powi(j);
                Atom::new(cx(r, 0.0), 1.0 - r * r).unwrap()
            })
            .collect();
        let est = box_constant(&DiskMeasure::new(vec![], atoms), &default_box_levels());
        assert!(est.constant.is_finite() && est.constant > 0.0);
        assert!(est.witness.is_some());
    }

    #[test]
    fn window_wraps_around() {
        let m = DiskMeasure::new(
            vec![],
            vec![
                Atom::new(Complex64::from_polar(0.99, 0.01), 0.2).unwrap(),
                Atom::new(Complex64::from_polar(0.99, -0.01), 0.3).unwrap(),
            ],
        );
        let est = box_constant(&m, &[0.05]);
        assert_abs_diff_eq!(est.constant, 0.5 / 0.05, epsilon = 1e-12);
    }

    #[test]
    fn embedding_unit_atom_classical() {
        let centers = polar_centers(&[0.3, 0.6, 0.9], 16);
        let est = embedding_constant(&DiskMeasure::unit_atom(), &classical(), 2.0, &centers).unwrap();
        assert_abs_diff_eq!(est.constant, 1.0, epsilon = 1e-12);
        assert_eq!(est.center, Some(cx(0.0, 0.0)));
    }

    #[test]
    fn embedding_empty_centers() {
        let est = embedding_constant(&DiskMeasure::unit_atom(), &classical(), 2.0, &[]).unwrap();
        assert_eq!(est.constant, 0.0);
        assert!(est.center.is_none());
    }

    #[test]
    fn embedding_matches_kernel_functions() {
        let g = CircleGrid::new(512).unwrap();
        let w = Weight::from_fn(g, |t| 1.0 + 0.4 * t.cos() - 0.2 * (2.0 * t).sin()).unwrap().normalized();
        let outer = default_outer(&w);
        let m = DiskMeasure::new(vec![], vec![Atom::new(cx(0.2, 0.5), 0.4).unwrap(), Atom::new(cx(-0.6, 0.1), 0.6).unwrap()]);
        for p in [1.0, 2.0, 3.0] {
            for c in [cx(0.1, -0.3), cx(-0.5, 0.5)] {
                let k = KernelExpansion::new(vec![c], vec![Complex64::new(1.0, 0.0)], outer.log_series()).unwrap();
                let direct = m.integrate(|z| k.eval(z).norm().powf(p)) / boundary_norm(&k, &w, p).unwrap().powf(p);
                let est = embedding_constant(&m, &outer, p, &[c]).unwrap();
                assert_abs_diff_eq!(est.constant, direct, epsilon = 1e-10 * direct);
            }
        }
    }

    #[test]
    fn ring_measure_constant_at_most_one() {
        let g = CircleGrid::new(512).unwrap();
        let ring = Ring::new(0.7, g.thetas().map(|t| 1.0 + 0.5 * t.cos()).collect()).unwrap();
        let m = DiskMeasure::new(vec![ring], vec![]);
        let alpha = boundary_weight(&m, g).unwrap();
        let est = embedding_constant(&m, &default_outer(&alpha), 2.0, &default_centers(&m)).unwrap();
        assert!(est.constant <= 1.0 + 1e-9, "{}", est.constant);
        assert!(est.constant > 0.5);
    }

    #[test]
    fn doubling_scales_both_constants() {
        let m = DiskMeasure::new(vec![], vec![Atom::new(cx(0.8, 0.1), 0.3).unwrap(), Atom::new(cx(0.0, 0.95), 0.05).unwrap()]);
        let m2 = m.scaled(2.0).unwrap();
        let centers = default_centers(&m);
        let a = carleson_estimate(&m, &classical(), 2.0, &centers, &default_box_levels()).unwrap();
        let b = carleson_estimate(&m2, &classical(), 2.0, &centers, &default_box_levels()).unwrap();
        assert_abs_diff_eq!(b.box_constant, 2.0 * a.box_constant, epsilon = 1e-14);
        assert_abs_diff_eq!(b.embedding_constant, 2.0 * a.embedding_constant, epsilon = 1e-13);
    }

    #[test]
    fn rejects_outside_centers() {
        assert!(embedding_constant(&DiskMeasure::unit_atom(), &classical(), 2.0, &[cx(1.0, 0.0)]).is_err());
    }
}
