//! Polar product quadrature on the unit disk.

use std::num::NonZeroUsize;

use gauss_quad::GaussLegendre;
use num_complex::Complex64;

use crate::circle::CircleGrid;
use crate::error::{HardyError, Result};

/// Total mass of the disk under `dA / 2π`.
pub const DISK_MEASURE: f64 = 0.5;

const MIN_PANEL_NODES: usize = 16;

/// Gauss–Legendre nodes and weights on `[a, b]`.
pub fn gauss_legendre(n: usize, a: f64, b: f64) -> Vec<(f64, f64)> {
    let rule = GaussLegendre::new(NonZeroUsize::new(n.max(1)).expect("positive"));
    let half = 0.5 * (b - a);
    let mid = 0.5 * (a + b);
    let mut out: Vec<(f64, f64)> = rule
        .as_node_weight_pairs()
        .iter()
        .map(|&(x, w)| (mid + half * x, half * w))
        .collect();
    out.sort_by(|p, q| p.0.partial_cmp(&q.0).expect("finite nodes"));
    out
}

/// Gauss–Legendre in radius (composite over panels) times the uniform rule in
/// angle, with weights for `∫_𝔻 g dA / 2π`.
#[derive(Debug, Clone, PartialEq)]
pub struct DiskQuadrature {
    radii: Vec<f64>,
    radial_weights: Vec<f64>,
    angular: CircleGrid,
}

impl DiskQuadrature {
    /// `radial` nodes split over panels whose endpoints are `0`, the sorted
    /// `breaks` inside `(0, 1)`, and `1`. Each panel gets a share proportional
    /// to its length, but at least 16 nodes.
    pub fn new(radial: usize, angular: usize, breaks: &[f64]) -> Result<Self> {
        if angular < 8 || !angular.is_power_of_two() {
            return Err(HardyError::InvalidGridSize(angular));
        }
        if radial < MIN_PANEL_NODES {
            return Err(HardyError::InvalidInput(format!("radial node count {radial} below {MIN_PANEL_NODES}")));
        }
        let mut edges: Vec<f64> = breaks.iter().copied().filter(|&b| b > 1e-9 && b < 1.0 - 1e-9).collect();
        edges.push(0.0);
        edges.push(1.0);
        edges.sort_by(|a, b| a.partial_cmp(b).expect("finite breaks"));
        edges.dedup_by(|a, b| (*a - *b).abs() < 1e-9);
        let mut radii = Vec::with_capacity(radial);
        let mut radial_weights = Vec::with_capacity(radial);
        for w in edges.windows(2) {
            let share = ((radial as f64) * (w[1] - w[0])).round() as usize;
            for (x, wt) in gauss_legendre(share.max(MIN_PANEL_NODES), w[0], w[1]) {
                radii.push(x);
                radial_weights.push(wt * x);
            }
        }
        let quad = Self {
            radii,
            radial_weights,
            angular: CircleGrid::with_any_power_of_two(angular),
        };
        let total: f64 = quad.radial_weights.iter().sum();
        debug_assert!((total - DISK_MEASURE).abs() < 1e-13, "disk quadrature mass {total}");
        Ok(quad)
    }

    pub fn radii(&self) -> &[f64] {
        &self.radii
    }

    /// Weight of each radius for `∫ · r dr` (angular mean taken separately).
    pub fn radial_weights(&self) -> &[f64] {
        &self.radial_weights
    }

    pub fn angular(&self) -> CircleGrid {
        self.angular
    }

    pub fn angular_len(&self) -> usize {
        self.angular.len()
    }

    pub fn node_count(&self) -> usize {
        self.radii.len() * self.angular.len()
    }

    pub fn total_measure(&self) -> f64 {
        self.radial_weights.iter().sum()
    }

    /// Nodes `(z, weight)` in radius-major order.
    pub fn nodes(&self) -> impl Iterator<Item = (Complex64, f64)> + '_ {
        let n = self.angular.len() as f64;
        self.radii.iter().zip(&self.radial_weights).flat_map(move |(&r, &w)| {
            self.angular.nodes().map(move |e| (e * r, w / n))
        })
    }

    /// `∫_𝔻 g dA / 2π`.
    pub fn integrate(&self, g: impl Fn(Complex64) -> f64) -> f64 {
        self.nodes().map(|(z, w)| w * g(z)).sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn recorded_disk_measure() {
        let q = DiskQuadrature::new(200, 512, &[]).unwrap();
        assert_abs_diff_eq!(q.total_measure(), DISK_MEASURE, epsilon = 1e-14);
        assert_eq!(q.radii().len(), 200);
        let q = DiskQuadrature::new(200, 512, &[0.3, 0.8, 0.8]).unwrap();
        assert_abs_diff_eq!(q.total_measure(), DISK_MEASURE, epsilon = 1e-14);
    }

    #[test]
    fn radial_polynomials_exact() {
        let q = DiskQuadrature::new(32, 16, &[]).unwrap();
        // ∫ r^k dA/2π = 1/(k+2)
        for k in 0..60 {
            let v = q.integrate(|z| z.norm().powi(k));
            assert_abs_diff_eq!(v, 1.0 / (k as f64 + 2.0), epsilon = 1e-14);
        }
    }

    #[test]
    fn log_weighted_moment() {
        // ∫ -log|z| · 4 dA/2π = 4 · 1/4 = 1 (classical H² norm of z)
        let q = DiskQuadrature::new(200, 64, &[]).unwrap();
        let v = q.integrate(|z| -z.norm().ln() * 4.0);
        assert_abs_diff_eq!(v, 1.0, epsilon = 1e-9);
    }

    #[test]
    fn rejects_bad_sizes() {
        assert!(DiskQuadrature::new(200, 500, &[]).is_err());
        assert!(DiskQuadrature::new(4, 512, &[]).is_err());
    }
}
