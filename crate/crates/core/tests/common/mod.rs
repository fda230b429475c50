//! Independent oracles: closed forms and direct sums that avoid the library's
//! FFT and kernel machinery.

#![allow(dead_code)]

use std::f64::consts::TAU;

use hardy_forge::{CircleGrid, Holomorphic, PowerSeries, Weight};
use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// Real trigonometric polynomial `1 + Σ (a_m cos mθ + b_m sin mθ)`.
#[derive(Debug, Clone)]
pub struct TrigWeight {
    pub modes: Vec<(f64, f64)>,
}

impl TrigWeight {
    /// Random coefficients scaled so the minimum stays at or above `floor`.
    pub fn random(rng: &mut ChaCha8Rng, degree: usize, floor: f64) -> Self {
        let modes: Vec<(f64, f64)> = (1..=degree)
            .map(|m| (rng.random_range(-1.0..1.0) / m as f64, rng.random_range(-1.0..1.0) / m as f64))
            .collect();
        let bound: f64 = modes.iter().map(|(a, b)| a.hypot(*b)).sum();
        let scale = rng.random_range(0.5..1.0) * (1.0 - floor) / bound;
        Self {
            modes: modes.into_iter().map(|(a, b)| (a * scale, b * scale)).collect(),
        }
    }

    /// Value of the Poisson smoothing at radius `r` (`r = 1` is the weight itself).
    pub fn smoothed(&self, r: f64, theta: f64) -> f64 {
        1.0 + self
            .modes
            .iter()
            .enumerate()
            .map(|(i, (a, b))| {
                let m = (i + 1) as f64;
                r.powf(m) * (a * (m * theta).cos() + b * (m * theta).sin())
            })
            .sum::<f64>()
    }

    pub fn weight(&self, grid: CircleGrid) -> Weight {
        Weight::from_fn(grid, |t| self.smoothed(1.0, t)).unwrap()
    }

    pub fn samples(&self, grid: CircleGrid, r: f64) -> Vec<f64> {
        grid.thetas().map(|t| self.smoothed(r, t)).collect()
    }
}

pub fn random_poly(rng: &mut ChaCha8Rng, degree: usize) -> PowerSeries {
    PowerSeries::new(
        (0..=degree)
            .map(|_| Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)))
            .collect(),
    )
}

/// `1 + Σ c_k z^k` with `Σ|c_k| ≤ 0.9`; zero-free on the closed disk.
pub fn zero_free_poly(rng: &mut ChaCha8Rng, degree: usize) -> PowerSeries {
    let mut c = random_poly(rng, degree).coeffs().to_vec();
    c[0] = Complex64::new(0.0, 0.0);
    let total: f64 = c.iter().map(|v| v.norm()).sum();
    let s = rng.random_range(0.3..0.9) / total;
    c.iter_mut().for_each(|v| *v *= s);
    c[0] = Complex64::new(1.0, 0.0);
    PowerSeries::new(c)
}

pub fn random_disk_point(rng: &mut ChaCha8Rng, max_radius: f64) -> Complex64 {
    Complex64::from_polar(max_radius * rng.random_range(0.0..1.0f64).sqrt(), rng.random_range(0.0..TAU))
}

/// `(mean_k α_k |f(ζ_k)|^p)^{1/p}` by the trapezoid rule on `grid`.
pub fn weighted_norm<F: Holomorphic + ?Sized>(f: &F, alpha: &[f64], grid: CircleGrid, p: f64) -> f64 {
    let n = grid.len() as f64;
    let sum: f64 = grid
        .thetas()
        .zip(alpha)
        .map(|(t, a)| a * f.eval(Complex64::from_polar(1.0, t)).norm().powf(p))
        .sum();
    (sum / n).powf(1.0 / p)
}

/// Poisson kernel `(1 - |a|²)/|ζ - a|²`.
pub fn poisson(a: Complex64, theta: f64) -> f64 {
    (1.0 - a.norm_sqr()) / (Complex64::from_polar(1.0, theta) - a).norm_sqr()
}

/// `min_q (mean α |φ - q|²)^{1/2}` over polynomials of degree `≤ degree`,
/// by SVD least squares on the weighted Vandermonde system.
pub fn least_squares_distance(phi: &[Complex64], alpha: &[f64], grid: CircleGrid, degree: usize) -> f64 {
    let n = grid.len();
    let thetas: Vec<f64> = grid.thetas().collect();
    let sqrt_a: Vec<f64> = alpha.iter().map(|a| a.sqrt()).collect();
    let v = DMatrix::from_fn(n, degree + 1, |k, j| sqrt_a[k] * Complex64::from_polar(1.0, j as f64 * thetas[k]));
    let rhs = DVector::from_fn(n, |k, _| sqrt_a[k] * phi[k]);
    let x = v.clone().svd(true, true).solve(&rhs, 1e-14).expect("SVD with both factors");
    let residual = rhs - v * x;
    (residual.norm_squared() / n as f64).sqrt()
}

/// Minimal sup norm for `f(z1) = w1, f(z2) = w2`: the `M` at which the
/// pseudo-hyperbolic distance of `w/M` equals that of the nodes.
pub fn two_point_pick(z: [Complex64; 2], w: [Complex64; 2]) -> f64 {
    let rho = |a: Complex64, b: Complex64| ((a - b) / (Complex64::new(1.0, 0.0) - b.conj() * a)).norm();
    let target = rho(z[0], z[1]);
    let mut lo = w[0].norm().max(w[1].norm());
    if rho(w[0] / lo, w[1] / lo) <= target {
        return lo;
    }
    let mut hi = 2.0 * lo;
    while rho(w[0] / hi, w[1] / hi) > target {
        hi *= 2.0;
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if rho(w[0] / mid, w[1] / mid) > target {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}
