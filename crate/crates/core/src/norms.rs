//! Weighted Hardy norms computed on the boundary and, independently, through
//! the area formula
//!
//! `‖f‖_{u,p}^p = ∫ |f|^p Δu - ∫ u Δ|f|^p`,
//!
//! with `Δ|f|^p = p² |f|^{p-2} |f'|²` as a density against `dA / 2π`.

use std::sync::OnceLock;

use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;

use crate::analytic::Holomorphic;
use crate::circle::CircleGrid;
use crate::error::{HardyError, Result};
use crate::exhaustion::{boundary_weight, radial_sweep_measure, Exhaustion};
use crate::quadrature::DiskQuadrature;
use crate::weights::Weight;

/// Nodes where `|f|` falls below this are dropped from `|f|^{p-2}|f'|²` when `p < 2`.
pub const ZERO_GUARD: f64 = 1e-12;

pub const DEFAULT_RADIAL_NODES: usize = 200;
pub const DEFAULT_ANGULAR_NODES: usize = 512;

/// `(∫ |f|^p α dλ)^{1/p}` on the weight's grid.
pub fn boundary_norm<F: Holomorphic + ?Sized>(f: &F, weight: &Weight, p: f64) -> Result<f64> {
    if !(p > 0.0) || !p.is_finite() {
        return Err(HardyError::InvalidExponent(p));
    }
    let samples = f.boundary_samples(weight.grid());
    let integral = samples
        .values()
        .iter()
        .zip(weight.samples())
        .map(|(v, a)| v.norm().powf(p) * a)
        .sum::<f64>()
        / weight.grid().len() as f64;
    Ok(integral.powf(1.0 / p))
}

/// `Δ|f|^p` density against `dA/2π`, or `None` inside the zero guard for `p < 2`.
fn laplacian_density<F: Holomorphic + ?Sized>(f: &F, p: f64, z: Complex64) -> Option<f64> {
    let value = f.eval(z).norm();
    let slope = f.derivative(z).norm_sqr();
    if p < 2.0 {
        if value < ZERO_GUARD {
            return None;
        }
        Some(p * p * value.powf(p - 2.0) * slope)
    } else if p == 2.0 {
        Some(4.0 * slope)
    } else {
        Some(p * p * value.powf(p - 2.0) * slope)
    }
}

struct Potentials {
    capped: Vec<f64>,
    raw: Vec<f64>,
}

/// Area integrals against one exhaustion on a disk quadrature adapted to its
/// support (radial panels break at ring radii and atom moduli). Potentials at
/// the nodes are computed once on first use and then shared by all readers.
pub struct AreaIntegrator<'a> {
    exhaustion: &'a Exhaustion,
    quadrature: DiskQuadrature,
    potentials: OnceLock<Potentials>,
}

/// Both terms of the area formula.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct AreaNorm {
    pub norm: f64,
    /// `∫ |f|^p Δu`.
    pub measure_term: f64,
    /// `-∫ u Δ|f|^p`.
    pub potential_term: f64,
    /// Quadrature weight of nodes dropped by the zero guard.
    pub excluded_weight: f64,
}

impl<'a> AreaIntegrator<'a> {
    pub fn new(exhaustion: &'a Exhaustion, radial: usize, angular: usize) -> Result<Self> {
        let quadrature = DiskQuadrature::new(radial, angular, &exhaustion.measure().support_radii())?;
        Ok(Self {
            exhaustion,
            quadrature,
            potentials: OnceLock::new(),
        })
    }

    pub fn with_defaults(exhaustion: &'a Exhaustion) -> Result<Self> {
        Self::new(exhaustion, DEFAULT_RADIAL_NODES, DEFAULT_ANGULAR_NODES)
    }

    pub fn quadrature(&self) -> &DiskQuadrature {
        &self.quadrature
    }

    fn potentials(&self) -> &Potentials {
        self.potentials.get_or_init(|| {
            let n = self.quadrature.angular_len();
            let per_radius: Vec<(Vec<f64>, Vec<f64>)> = self
                .quadrature
                .radii()
                .par_iter()
                .map(|&r| self.exhaustion.potential_on_circle(r, n))
                .collect();
            let mut capped = Vec::with_capacity(self.quadrature.node_count());
            let mut raw = Vec::with_capacity(self.quadrature.node_count());
            for (c, r) in per_radius {
                capped.extend(c);
                raw.extend(r);
            }
            Potentials { capped, raw }
        })
    }

    fn check_exponent(p: f64) -> Result<()> {
        if !(p >= 1.0) || !p.is_finite() {
            return Err(HardyError::InvalidExponent(p));
        }
        Ok(())
    }

    /// Sums `Σ w · g(u_capped, u_raw) · Δ|f|^p` over the nodes; returns the sum
    /// and the excluded weight.
    fn weighted_laplacian_sum<F: Holomorphic + Sync + ?Sized>(
        &self,
        f: &F,
        p: f64,
        g: impl Fn(f64, f64) -> f64 + Sync,
    ) -> (f64, f64) {
        let pot = self.potentials();
        let nodes: Vec<(Complex64, f64)> = self.quadrature.nodes().collect();
        nodes
            .par_iter()
            .enumerate()
            .map(|(i, &(z, w))| match laplacian_density(f, p, z) {
                Some(d) => (w * g(pot.capped[i], pot.raw[i]) * d, 0.0),
                None => (0.0, w),
            })
            .collect::<Vec<_>>()
            .into_iter()
            .fold((0.0, 0.0), |a, b| (a.0 + b.0, a.1 + b.1))
    }

    /// `∫ |f|^p Δu` for the (possibly capped) exhaustion. Capping a ring moves
    /// its Riesz mass onto a level set; the weak form
    /// `∫ φ Δv = ∫ φ Δu_ring + ∫ (v - u_ring) Δφ` handles that without
    /// locating the level set.
    pub fn measure_term<F: Holomorphic + Sync + ?Sized>(&self, f: &F, p: f64) -> Result<(f64, f64)> {
        Self::check_exponent(p)?;
        let on_support = self.exhaustion.measure().integrate(|z| f.eval(z).norm().powf(p));
        if !self.exhaustion.has_caps() {
            return Ok((on_support, 0.0));
        }
        let (shift, excluded) = self.weighted_laplacian_sum(f, p, |capped, raw| capped - raw);
        Ok((on_support + shift, excluded))
    }

    pub fn area_norm<F: Holomorphic + Sync + ?Sized>(&self, f: &F, p: f64) -> Result<AreaNorm> {
        let (measure_term, excluded_a) = self.measure_term(f, p)?;
        let (neg, excluded_b) = self.weighted_laplacian_sum(f, p, |capped, _| capped);
        let potential_term = -neg;
        let total = measure_term + potential_term;
        Ok(AreaNorm {
            norm: total.max(0.0).powf(1.0 / p),
            measure_term,
            potential_term,
            excluded_weight: excluded_a.max(excluded_b),
        })
    }

    /// `∫ |u| Δ|f|^p`.
    pub fn derivative_energy<F: Holomorphic + Sync + ?Sized>(&self, f: &F, p: f64) -> Result<f64> {
        Self::check_exponent(p)?;
        Ok(self.weighted_laplacian_sum(f, p, |capped, _| capped.abs()).0)
    }
}

pub fn area_norm<F: Holomorphic + Sync + ?Sized>(f: &F, exhaustion: &Exhaustion, p: f64) -> Result<AreaNorm> {
    AreaIntegrator::with_defaults(exhaustion)?.area_norm(f, p)
}

pub fn derivative_energy<F: Holomorphic + Sync + ?Sized>(f: &F, exhaustion: &Exhaustion, p: f64) -> Result<f64> {
    AreaIntegrator::with_defaults(exhaustion)?.derivative_energy(f, p)
}

/// `∫_{S_{u,r}} |f|^p dμ_{u,r}` for each level, in the order given (levels
/// must increase).
pub fn radial_mean_monotonicity<F: Holomorphic + ?Sized>(
    f: &F,
    exhaustion: &Exhaustion,
    p: f64,
    levels: &[f64],
    grid: CircleGrid,
) -> Result<Vec<f64>> {
    if levels.windows(2).any(|w| !(w[0] < w[1])) {
        return Err(HardyError::InvalidInput("levels must be strictly increasing".into()));
    }
    levels
        .iter()
        .map(|&level| {
            let sweep = radial_sweep_measure(exhaustion, level)?;
            Ok(sweep.integrate(grid, |z| f.eval(z).norm().powf(p)))
        })
        .collect()
}

/// Largest drop between consecutive entries (0 for a non-decreasing list).
pub fn max_decrease(values: &[f64]) -> f64 {
    values.windows(2).map(|w| (w[0] - w[1]).max(0.0)).fold(0.0, f64::max)
}

/// `∫ |f|^p Δu` against `∫ |f|^p α_u dλ`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CarlesonIdentity {
    pub interior: f64,
    pub boundary: f64,
    pub ratio: f64,
}

pub fn carleson_identity_check<F: Holomorphic + Sync + ?Sized>(
    f: &F,
    exhaustion: &Exhaustion,
    p: f64,
    grid: CircleGrid,
) -> Result<CarlesonIdentity> {
    let integrator = AreaIntegrator::with_defaults(exhaustion)?;
    let (interior, _) = integrator.measure_term(f, p)?;
    let alpha = boundary_weight(exhaustion.measure(), grid)?;
    let boundary = boundary_norm(f, &alpha, p)?.powf(p);
    Ok(CarlesonIdentity {
        interior,
        boundary,
        ratio: interior / boundary,
    })
}

/// Both sides of the Lelong–Jensen formula for a radial exhaustion at one level:
/// the sweep integral of `|f|^p` and
/// `∫_{B} |f|^p Δu + ∫_{B} (r - u) Δ|f|^p` over `B = {u < r}`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct JensenSides {
    pub sweep: f64,
    pub interior: f64,
}

pub fn lelong_jensen_sides<F: Holomorphic + Sync + ?Sized>(
    f: &F,
    exhaustion: &Exhaustion,
    level: f64,
    p: f64,
    radial_nodes: usize,
    angular_nodes: usize,
) -> Result<JensenSides> {
    if !(p >= 1.0) {
        return Err(HardyError::InvalidExponent(p));
    }
    let sweep_circle = radial_sweep_measure(exhaustion, level)?;
    let rho = sweep_circle.radius;
    let grid = CircleGrid::new(1024)?;
    let sweep = sweep_circle.integrate(grid, |z| f.eval(z).norm().powf(p));

    let inside_mass: f64 = exhaustion
        .measure()
        .discrete_points()
        .into_iter()
        .filter(|(z, _)| z.norm() < rho)
        .map(|(z, m)| m * f.eval(z).norm().powf(p))
        .sum();
    let breaks: Vec<f64> = exhaustion
        .measure()
        .support_radii()
        .into_iter()
        .filter(|&r| r < rho)
        .map(|r| r / rho)
        .collect();
    let quad = DiskQuadrature::new(radial_nodes, angular_nodes, &breaks)?;
    let scale = rho * rho;
    let n = quad.angular_len();
    let correction: f64 = quad
        .radii()
        .par_iter()
        .zip(quad.radial_weights())
        .map(|(&s, &w)| {
            let (u, _) = exhaustion.potential_on_circle(s * rho, n);
            let ring: f64 = quad
                .angular()
                .nodes()
                .zip(&u)
                .map(|(e, &uv)| (level - uv) * laplacian_density(f, p, e * s * rho).unwrap_or(0.0))
                .sum();
            w * ring / n as f64
        })
        .collect::<Vec<f64>>()
        .into_iter()
        .sum::<f64>()
        * scale;
    Ok(JensenSides {
        sweep,
        interior: inside_mass + correction,
    })
}

/// `(‖f‖_{α,p}, c^{1/p} ‖f‖_p)` where `c` is the weight's recorded floor.
pub fn classical_comparison<F: Holomorphic + ?Sized>(f: &F, weight: &Weight, p: f64) -> Result<(f64, f64)> {
    let weighted = boundary_norm(f, weight, p)?;
    let classical = boundary_norm(f, &Weight::classical(weight.grid()), p)?;
    Ok((weighted, weight.lower_bound().powf(1.0 / p) * classical))
}
