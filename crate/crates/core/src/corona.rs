//! Two-function corona problem on the disk.
//!
//! Given `f₁, f₂` with `|f₁|² + |f₂|² ≥ δ`, the smooth solutions
//! `φ_j = conj(f_j)/S` satisfy `f₁φ₁ + f₂φ₂ = 1`. Correcting them by `v` with
//! `∂̄v = ψ` gives holomorphic `g₁ = φ₁ + f₂v`, `g₂ = φ₂ - f₁v`. Here `v` is the
//! Cauchy transform of `ψ` minus its best weighted `H²` approximant.

use std::f64::consts::PI;
use std::sync::Arc;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use rustfft::{Fft, FftPlanner};
use serde::{Deserialize, Serialize};

use crate::analytic::{Holomorphic, PowerSeries};
use crate::carleson::{box_constant, default_box_levels, BoxEstimate};
use crate::circle::{BoundarySamples, CircleGrid};
use crate::duality::dist_h2_with_outer;
use crate::error::{HardyError, Result};
use crate::exhaustion::{DiskMeasure, Ring};
use crate::interpolation::ComplexJson;
use crate::quadrature::{gauss_legendre, DiskQuadrature};
use crate::weights::{OuterFunction, Weight, WeightFile};

const ZERO: Complex64 = Complex64 { re: 0.0, im: 0.0 };
const ONE: Complex64 = Complex64 { re: 1.0, im: 0.0 };

/// Default size of the grid that certifies `δ`: radii `i/(radial-1)` times
/// `angular` equally spaced angles.
pub const CERTIFY_RADIAL: usize = 200;
pub const CERTIFY_ANGULAR: usize = 1024;
/// Zeros of `f_j` may not lie in `1 ≤ |z| ≤ 1 + ZERO_MARGIN`.
pub const ZERO_MARGIN: f64 = 1e-3;

/// `δ = min_grid S - L·h` with `L` a Lipschitz bound for `S` and `h` the largest
/// distance from a disk point to the nearest grid node.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DeltaCertificate {
    pub grid_min: f64,
    pub lipschitz: f64,
    pub spacing: f64,
    pub delta: f64,
}

pub fn certify_delta(f1: &PowerSeries, f2: &PowerSeries, radial: usize, angular: usize) -> Result<DeltaCertificate> {
    if radial < 2 || angular < 8 {
        return Err(HardyError::InvalidInput("certification grid is too coarse".into()));
    }
    let grid_min = (0..radial)
        .into_par_iter()
        .map(|i| {
            let r = i as f64 / (radial - 1) as f64;
            (0..angular)
                .map(|k| {
                    let z = Complex64::from_polar(r, 2.0 * PI * k as f64 / angular as f64);
                    f1.eval(z).norm_sqr() + f2.eval(z).norm_sqr()
                })
                .fold(f64::INFINITY, f64::min)
        })
        .reduce(|| f64::INFINITY, f64::min);
    // |∇S| ≤ 2 Σ |f_j| |f_j'| ≤ 2 Σ ‖f_j‖_A ‖f_j'‖_A on the closed disk
    let lipschitz = 2.0
        * (f1.abs_coeff_sum() * f1.differentiate().abs_coeff_sum()
            + f2.abs_coeff_sum() * f2.differentiate().abs_coeff_sum());
    let dr = 0.5 / (radial - 1) as f64;
    let dt = PI / angular as f64;
    let spacing = dr.hypot(dt);
    Ok(DeltaCertificate {
        grid_min,
        lipschitz,
        spacing,
        delta: grid_min - lipschitz * spacing,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct CoronaData {
    f1: PowerSeries,
    f2: PowerSeries,
    df1: PowerSeries,
    df2: PowerSeries,
    certificate: DeltaCertificate,
}

impl CoronaData {
    pub fn new(f1: PowerSeries, f2: PowerSeries) -> Result<Self> {
        Self::with_certification(f1, f2, CERTIFY_RADIAL, CERTIFY_ANGULAR, ZERO_MARGIN)
    }

    pub fn with_certification(
        f1: PowerSeries,
        f2: PowerSeries,
        radial: usize,
        angular: usize,
        zero_margin: f64,
    ) -> Result<Self> {
        let check = CircleGrid::new(1024)?;
        for (name, f) in [("f1", &f1), ("f2", &f2)] {
            let sup = f.boundary_samples(check).sup_norm();
            if sup > 1.0 + 1e-12 {
                return Err(HardyError::InvalidCoronaData(format!("sup |{name}| = {sup} exceeds 1")));
            }
            if let Some(z) = f.roots().into_iter().find(|z| {
                let r = z.norm();
                (1.0..=1.0 + zero_margin).contains(&r)
            }) {
                return Err(HardyError::InvalidCoronaData(format!(
                    "{name} has a zero at {z} too close to the unit circle"
                )));
            }
        }
        let certificate = certify_delta(&f1, &f2, radial, angular)?;
        if !(certificate.delta > 0.0) {
            return Err(HardyError::InvalidCoronaData(format!(
                "could not certify |f1|² + |f2|² ≥ δ > 0 (grid min {}, margin {})",
                certificate.grid_min,
                certificate.lipschitz * certificate.spacing
            )));
        }
        Ok(Self {
            df1: f1.differentiate(),
            df2: f2.differentiate(),
            f1,
            f2,
            certificate,
        })
    }

    pub fn f1(&self) -> &PowerSeries {
        &self.f1
    }

    pub fn f2(&self) -> &PowerSeries {
        &self.f2
    }

    pub fn delta(&self) -> f64 {
        self.certificate.delta
    }

    pub fn certificate(&self) -> DeltaCertificate {
        self.certificate
    }

    /// `|f₁|² + |f₂|²`.
    pub fn s(&self, z: Complex64) -> f64 {
        self.f1.eval(z).norm_sqr() + self.f2.eval(z).norm_sqr()
    }

    /// `2/√δ`, a bound for `|φ₁| + |φ₂|`.
    pub fn k_delta(&self) -> f64 {
        2.0 / self.delta().sqrt()
    }
}

/// `φ_j = conj(f_j)/(|f₁|² + |f₂|²)`.
pub fn smooth_solution(data: &CoronaData, z: Complex64) -> (Complex64, Complex64) {
    let a = data.f1.eval(z);
    let b = data.f2.eval(z);
    let s = a.norm_sqr() + b.norm_sqr();
    (a.conj() / s, b.conj() / s)
}

/// `ψ = ∂̄φ₂/f₁ = -∂̄φ₁/f₂ = conj(f₁f₂' - f₂f₁')/S²`.
///
/// With `∂̄S = f₁ conj(f₁') + f₂ conj(f₂')`, differentiating `conj(f₂)/S` leaves
/// `(|f₁|² conj(f₂') - f₁ conj(f₂) conj(f₁'))/S² = f₁ ψ`.
pub fn dbar_data(data: &CoronaData, z: Complex64) -> Complex64 {
    let a = data.f1.eval(z);
    let b = data.f2.eval(z);
    let s = a.norm_sqr() + b.norm_sqr();
    (a * data.df2.eval(z) - b * data.df1.eval(z)).conj() / (s * s)
}

fn fft_plans(n: usize) -> (Arc<dyn Fft<f64>>, Arc<dyn Fft<f64>>) {
    let mut planner = FftPlanner::new();
    (planner.plan_fft_forward(n), planner.plan_fft_inverse(n))
}

/// Samples on `n` equally spaced angles of a series given in FFT order.
fn synthesize(modes: &[Complex64], n: usize, inverse: &dyn Fft<f64>) -> Vec<Complex64> {
    let m = modes.len();
    let mut buf = vec![ZERO; n];
    let half = (m.min(n) / 2) as i64;
    for k in (1 - half)..half {
        buf[k.rem_euclid(n as i64) as usize] = modes[k.rem_euclid(m as i64) as usize];
    }
    inverse.process(&mut buf);
    buf
}

/// `Ψ(z) = -(1/π) ∬_𝔻 ψ(ζ)/(ζ - z) dA(ζ)`, so that `∂̄Ψ = ψ`.
///
/// On `|z| = ρ₀` the angular modes are one-dimensional radial integrals of the
/// modes `ψ_k(ρ)` of `ψ`:
/// mode `n ≥ 0` is `-2 ∫_{ρ₀}^1 (ρ₀/ρ)^n ψ_{n+1}(ρ) dρ` and mode `-(n+1)` is
/// `2 ∫_0^{ρ₀} (ρ/ρ₀)^{n+1} ψ_{-n}(ρ) dρ`. Radial integrals use Gauss–Legendre
/// panels broken at every requested radius.
pub struct CauchyTransform<F> {
    psi: F,
    radial: usize,
    angular: usize,
}

impl<F: Fn(Complex64) -> Complex64 + Sync> CauchyTransform<F> {
    /// `radial` Gauss–Legendre nodes spread over `[0, 1]` (at least 16 per
    /// panel) and `angular` samples of `ψ` per circle.
    pub fn new(psi: F, radial: usize, angular: usize) -> Result<Self> {
        if angular < 8 || !angular.is_power_of_two() {
            return Err(HardyError::InvalidGridSize(angular));
        }
        if radial < 16 {
            return Err(HardyError::InvalidInput(format!("radial node count {radial} below 16")));
        }
        Ok(Self { psi, radial, angular })
    }

    pub fn angular(&self) -> usize {
        self.angular
    }

    /// Angular modes (FFT order, length `angular`) of `Ψ` on each circle `|z| = ρ`.
    pub fn modes_on_circles(&self, radii: &[f64]) -> Result<Vec<Vec<Complex64>>> {
        if let Some(&r) = radii.iter().find(|r| !(**r >= 0.0 && **r <= 1.0)) {
            return Err(HardyError::InvalidRadius(r));
        }
        let m = self.angular;
        let half = m / 2;
        let mut breaks: Vec<f64> = radii.to_vec();
        breaks.push(0.0);
        breaks.push(1.0);
        breaks.sort_by(|a, b| a.partial_cmp(b).expect("finite radii"));
        breaks.dedup();

        let (forward, _) = fft_plans(m);
        let panels: Vec<(f64, f64)> = breaks.windows(2).map(|w| (w[0], w[1])).collect();
        let sums: Vec<(Vec<Complex64>, Vec<Complex64>)> = panels
            .par_iter()
            .map(|&(a, b)| {
                let count = ((self.radial as f64) * (b - a)).round() as usize;
                let mut inner = vec![ZERO; half];
                let mut outer = vec![ZERO; half];
                let mut buf = vec![ZERO; m];
                for (rho, w) in gauss_legendre(count.max(16), a, b) {
                    for (k, slot) in buf.iter_mut().enumerate() {
                        *slot = (self.psi)(Complex64::from_polar(rho, 2.0 * PI * k as f64 / m as f64));
                    }
                    forward.process(&mut buf);
                    let scale = w / m as f64;
                    let t_in = rho / b;
                    let t_out = if rho > 0.0 { a / rho } else { 0.0 };
                    let mut p_in = t_in;
                    let mut p_out = 1.0;
                    for n in 0..half {
                        inner[n] += buf[(m - n) % m] * (p_in * scale);
                        outer[n] += buf[n + 1] * (p_out * scale);
                        p_in *= t_in;
                        p_out *= t_out;
                    }
                }
                (inner, outer)
            })
            .collect();

        Ok(radii
            .iter()
            .map(|&rho0| {
                let mut modes = vec![ZERO; m];
                for (&(a, b), (inner, outer)) in panels.iter().zip(&sums) {
                    if a >= rho0 {
                        let ratio = if a > 0.0 { rho0 / a } else { 1.0 };
                        let mut p = 1.0;
                        for n in 0..half - 1 {
                            modes[n] -= 2.0 * p * outer[n];
                            p *= ratio;
                        }
                    } else if b <= rho0 {
                        let ratio = b / rho0;
                        let mut p = ratio;
                        for n in 0..half - 1 {
                            modes[m - n - 1] += 2.0 * p * inner[n];
                            p *= ratio;
                        }
                    }
                }
                modes
            })
            .collect())
    }

    /// Values of `Ψ` on `n` equally spaced angles of each circle.
    pub fn on_circles(&self, radii: &[f64], n: usize) -> Result<Vec<Vec<Complex64>>> {
        if n < 4 || !n.is_power_of_two() {
            return Err(HardyError::InvalidGridSize(n));
        }
        let (_, inverse) = fft_plans(n);
        Ok(self
            .modes_on_circles(radii)?
            .iter()
            .map(|modes| synthesize(modes, n, inverse.as_ref()))
            .collect())
    }

    pub fn eval(&self, z: Complex64) -> Result<Complex64> {
        let r = z.norm();
        if r > 1.0 {
            return Err(HardyError::outside(z));
        }
        let modes = self.modes_on_circles(&[r])?.remove(0);
        let theta = z.arg();
        let m = modes.len() as i64;
        Ok((1 - m / 2..m / 2)
            .map(|k| modes[k.rem_euclid(m) as usize] * Complex64::from_polar(1.0, k as f64 * theta))
            .sum())
    }
}

pub fn cauchy_transform<F: Fn(Complex64) -> Complex64 + Sync>(
    psi: F,
    z: Complex64,
    radial: usize,
    angular: usize,
) -> Result<Complex64> {
    CauchyTransform::new(psi, radial, angular)?.eval(z)
}

/// Wirtinger derivatives `(∂̄F, ∂F)` on the middle circle `|z| = ρ` from samples
/// on `ρ - h`, `ρ`, `ρ + h`, using `∂̄ = (e^{iθ}/2)(∂_ρ + (i/ρ)∂_θ)`. The radial
/// derivative is a centered difference, the angular one spectral.
pub fn wirtinger_on_circle(
    rho: f64,
    h: f64,
    inner: &[Complex64],
    middle: &[Complex64],
    outer: &[Complex64],
) -> (Vec<Complex64>, Vec<Complex64>) {
    let n = middle.len();
    let (forward, inverse) = fft_plans(n);
    let mut spec = middle.to_vec();
    forward.process(&mut spec);
    for (k, c) in spec.iter_mut().enumerate() {
        let mode = if k < n / 2 {
            k as f64
        } else if k > n / 2 {
            k as f64 - n as f64
        } else {
            0.0
        };
        *c *= Complex64::new(0.0, mode / n as f64);
    }
    inverse.process(&mut spec);
    let mut dbar = Vec::with_capacity(n);
    let mut d = Vec::with_capacity(n);
    for k in 0..n {
        let e = Complex64::from_polar(1.0, 2.0 * PI * k as f64 / n as f64);
        let dr = (outer[k] - inner[k]) / (2.0 * h);
        let dt = spec[k] * Complex64::new(0.0, 1.0 / rho);
        dbar.push(0.5 * e * (dr + dt));
        d.push(0.5 * e.conj() * (dr - dt));
    }
    (dbar, d)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CoronaConfig {
    /// Radial Gauss–Legendre nodes for the Cauchy transform.
    pub radial: usize,
    /// Angular samples per circle for the Cauchy transform.
    pub angular: usize,
}

impl Default for CoronaConfig {
    fn default() -> Self {
        Self {
            radial: 200,
            angular: 512,
        }
    }
}

/// Values of `v`, `g₁`, `g₂` on one circle.
#[derive(Debug, Clone, PartialEq)]
pub struct CircleValues {
    pub radius: f64,
    pub v: Vec<Complex64>,
    pub g1: Vec<Complex64>,
    pub g2: Vec<Complex64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CoronaSolution {
    data: CoronaData,
    outer: OuterFunction,
    config: CoronaConfig,
    /// `None` means `v ≡ 0` (the uncorrected smooth solutions).
    correction: Option<PowerSeries>,
    distance: f64,
    psi_trace: BoundarySamples,
}

impl CoronaSolution {
    pub fn data(&self) -> &CoronaData {
        &self.data
    }

    pub fn weight(&self) -> &Weight {
        self.outer.weight()
    }

    /// `dist(Ψ|_𝕋, H²_α)`.
    pub fn distance(&self) -> f64 {
        self.distance
    }

    pub fn is_corrected(&self) -> bool {
        self.correction.is_some()
    }

    /// Best `H²_α` approximant of the boundary trace of `Ψ`.
    pub fn correction(&self) -> Option<&PowerSeries> {
        self.correction.as_ref()
    }

    fn assemble(&self, radius: f64, psi: Option<&[Complex64]>, n: usize) -> CircleValues {
        let v: Vec<Complex64> = match (&self.correction, psi) {
            (Some(h), Some(psi)) => {
                let hv = series_on_circle(h, radius, n);
                psi.iter().zip(&hv).map(|(p, h)| p - h).collect()
            }
            _ => vec![ZERO; n],
        };
        let mut g1 = Vec::with_capacity(n);
        let mut g2 = Vec::with_capacity(n);
        for (k, vk) in v.iter().enumerate() {
            let z = Complex64::from_polar(radius, 2.0 * PI * k as f64 / n as f64);
            let (p1, p2) = smooth_solution(&self.data, z);
            g1.push(p1 + self.data.f2.eval(z) * vk);
            g2.push(p2 - self.data.f1.eval(z) * vk);
        }
        CircleValues { radius, v, g1, g2 }
    }

    /// `v`, `g₁`, `g₂` on `n` equally spaced angles of each circle (radii in `[0, 1]`).
    pub fn on_circles(&self, radii: &[f64], n: usize) -> Result<Vec<CircleValues>> {
        let psi = if self.correction.is_some() {
            let data = &self.data;
            let transform = CauchyTransform::new(|z| dbar_data(data, z), self.config.radial, self.config.angular)?;
            Some(transform.on_circles(radii, n)?)
        } else {
            None
        };
        Ok(radii
            .par_iter()
            .enumerate()
            .map(|(i, &r)| self.assemble(r, psi.as_ref().map(|p| p[i].as_slice()), n))
            .collect())
    }

    /// Boundary values of `v`, `g₁`, `g₂` on the weight grid.
    pub fn boundary(&self) -> CircleValues {
        let n = self.outer.weight().grid().len();
        self.assemble(1.0, Some(self.psi_trace.values()), n)
    }
}

/// `Σ c_m ρ^m e^{imθ_k}` on `n` angles, folding high modes exactly.
fn series_on_circle(series: &PowerSeries, radius: f64, n: usize) -> Vec<Complex64> {
    let mut buf = vec![ZERO; n];
    let mut p = 1.0;
    for (m, c) in series.coeffs().iter().enumerate() {
        buf[m % n] += c * p;
        p *= radius;
    }
    let (_, inverse) = fft_plans(n);
    inverse.process(&mut buf);
    buf
}

pub fn corona_solve(data: &CoronaData, outer: &OuterFunction, config: CoronaConfig) -> Result<CoronaSolution> {
    let grid = outer.weight().grid();
    let transform = CauchyTransform::new(|z| dbar_data(data, z), config.radial, config.angular)?;
    let trace = transform.on_circles(&[1.0], grid.len())?.remove(0);
    let psi_trace = BoundarySamples::new(grid, trace)?;
    let dist = dist_h2_with_outer(&psi_trace, outer)?;
    Ok(CoronaSolution {
        data: data.clone(),
        outer: outer.clone(),
        config,
        correction: Some(dist.best_approximant),
        distance: dist.distance,
        psi_trace,
    })
}

/// The smooth solutions with `v ≡ 0`; not holomorphic unless `ψ ≡ 0`.
pub fn uncorrected_solution(data: &CoronaData, outer: &OuterFunction, config: CoronaConfig) -> Result<CoronaSolution> {
    let mut sol = corona_solve(data, outer, config)?;
    sol.correction = None;
    Ok(sol)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CoronaReport {
    pub delta: f64,
    pub k_delta: f64,
    pub bezout_boundary: f64,
    pub bezout_interior: f64,
    /// `max|∂̄g_j|` over the check circles, relative to the largest `|∂g_i|` or `|g_i|`.
    pub dbar_residual: [f64; 2],
    pub sup_g: [f64; 2],
    pub norm_g: [f64; 2],
    pub distance: f64,
    /// `2/√δ + dist + 1e-6`.
    pub budget: f64,
    pub within_budget: bool,
    /// `|‖v‖_{α,2} - dist|` on the boundary.
    pub correction_defect: f64,
    pub corrected: bool,
}

/// Interior check circles for the Bézout identity.
pub fn interior_radii() -> Vec<f64> {
    (0..64).map(|i| (i as f64 + 0.5) / 64.0).collect()
}

const DBAR_CENTERS: [f64; 9] = [0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9];
const DBAR_STEP: f64 = 1e-3;

pub fn verify_corona(sol: &CoronaSolution) -> Result<CoronaReport> {
    let data = &sol.data;
    let weight = sol.outer.weight();
    let boundary = sol.boundary();
    let grid = weight.grid();
    let bezout = |c: &CircleValues| -> f64 {
        let n = c.g1.len();
        (0..n)
            .map(|k| {
                let z = Complex64::from_polar(c.radius, 2.0 * PI * k as f64 / n as f64);
                (data.f1.eval(z) * c.g1[k] + data.f2.eval(z) * c.g2[k] - ONE).norm()
            })
            .fold(0.0, f64::max)
    };
    let bezout_boundary = bezout(&boundary);
    let alpha = weight.samples();
    let wnorm = |g: &[Complex64]| {
        (g.iter().zip(alpha).map(|(v, a)| a * v.norm_sqr()).sum::<f64>() * grid.weight()).sqrt()
    };
    let norm_g = [wnorm(&boundary.g1), wnorm(&boundary.g2)];
    let correction_defect = (wnorm(&boundary.v) - sol.distance).abs();

    let interior = interior_radii();
    let mut radii = interior.clone();
    for c in DBAR_CENTERS {
        radii.extend([c - DBAR_STEP, c, c + DBAR_STEP]);
    }
    let n = 256;
    let circles = sol.on_circles(&radii, n)?;
    let interior_circles = &circles[..interior.len()];
    let bezout_interior = interior_circles.iter().map(bezout).fold(0.0, f64::max);
    let sup = |pick: fn(&CircleValues) -> &Vec<Complex64>| {
        interior_circles
            .iter()
            .chain(std::iter::once(&boundary))
            .flat_map(|c| pick(c).iter().map(|v| v.norm()))
            .fold(0.0, f64::max)
    };
    let sup_g = [sup(|c| &c.g1), sup(|c| &c.g2)];

    let mut dbar_max = [0.0f64; 2];
    let mut d_max = [0.0f64; 2];
    for (j, triple) in circles[interior.len()..].chunks(3).enumerate() {
        let rho = DBAR_CENTERS[j];
        for (idx, pick) in [|c: &CircleValues| c.g1.clone(), |c: &CircleValues| c.g2.clone()]
            .iter()
            .enumerate()
        {
            let (dbar, d) = wirtinger_on_circle(rho, DBAR_STEP, &pick(&triple[0]), &pick(&triple[1]), &pick(&triple[2]));
            dbar_max[idx] = dbar.iter().map(|v| v.norm()).fold(dbar_max[idx], f64::max);
            d_max[idx] = d.iter().map(|v| v.norm()).fold(d_max[idx], f64::max);
        }
    }
    // One scale for the pair: a component that vanishes identically would
    // otherwise compare rounding noise against rounding noise.
    let scale = d_max.into_iter().chain(sup_g).fold(0.0, f64::max);
    let dbar_residual = [0, 1].map(|j| {
        if scale > 0.0 {
            dbar_max[j] / scale
        } else {
            0.0
        }
    });
    let budget = data.k_delta() + sol.distance + 1e-6;
    Ok(CoronaReport {
        delta: data.delta(),
        k_delta: data.k_delta(),
        bezout_boundary,
        bezout_interior,
        dbar_residual,
        sup_g,
        norm_g,
        distance: sol.distance,
        budget,
        within_budget: norm_g.iter().all(|&v| v <= budget),
        correction_defect,
        corrected: sol.is_corrected(),
    })
}

/// Box constant of `|ψ| dA/π`, with the measure discretized into rings at the
/// Gauss–Legendre radii of the disk quadrature.
pub fn psi_box_constant(data: &CoronaData, config: CoronaConfig) -> Result<BoxEstimate> {
    let quad = DiskQuadrature::new(config.radial, config.angular.max(256), &[])?;
    let n = quad.angular_len();
    let rings = quad
        .radii()
        .iter()
        .zip(quad.radial_weights())
        .filter_map(|(&r, &w)| {
            let density: Vec<f64> = (0..n)
                .map(|k| 2.0 * w * dbar_data(data, Complex64::from_polar(r, 2.0 * PI * k as f64 / n as f64)).norm())
                .collect();
            if density.iter().all(|v| *v == 0.0) {
                None
            } else {
                Some(Ring::new(r, density))
            }
        })
        .collect::<Result<Vec<_>>>()?;
    if rings.is_empty() {
        return Ok(BoxEstimate {
            constant: 0.0,
            witness: None,
        });
    }
    Ok(box_constant(&DiskMeasure::new(rings, vec![]), &default_box_levels()))
}

/// Seeded pairs of polynomials of the given degree, each scaled to absolute
/// coefficient sum 1, keeping only pairs with certified `δ ≥ min_delta`.
pub fn random_corona_pairs(count: usize, degree: usize, min_delta: f64, seed: u64) -> Result<Vec<CoronaData>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    let mut attempts = 0;
    while out.len() < count {
        attempts += 1;
        if attempts > 200 * count.max(1) {
            return Err(HardyError::InvalidCoronaData(format!(
                "found only {} of {count} pairs with δ ≥ {min_delta}",
                out.len()
            )));
        }
        let mut draw = || {
            let coeffs: Vec<Complex64> = (0..=degree)
                .map(|_| Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)))
                .collect();
            let p = PowerSeries::new(coeffs);
            let total = p.abs_coeff_sum();
            p.scale(Complex64::new(1.0 / total, 0.0))
        };
        let f1 = draw();
        let f2 = draw();
        match CoronaData::new(f1, f2) {
            Ok(d) if d.delta() >= min_delta => out.push(d),
            _ => continue,
        }
    }
    Ok(out)
}

/// Weight given by name or as a sampled weight file.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum WeightSpec {
    Named(String),
    File(WeightFile),
}

impl WeightSpec {
    pub fn to_weight(&self, grid: CircleGrid) -> Result<Weight> {
        match self {
            WeightSpec::Named(name) if name == "classical" => Ok(Weight::classical(grid)),
            WeightSpec::Named(name) => Err(HardyError::InvalidInput(format!("unknown weight name {name:?}"))),
            WeightSpec::File(file) => file.to_weight(),
        }
    }
}

/// On-disk corona problem.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CoronaInput {
    pub f1: Vec<ComplexJson>,
    pub f2: Vec<ComplexJson>,
    pub weight: WeightSpec,
}

impl CoronaInput {
    pub fn to_data(&self) -> Result<CoronaData> {
        let series = |c: &[ComplexJson]| PowerSeries::new(c.iter().map(|&v| v.into()).collect());
        CoronaData::new(series(&self.f1), series(&self.f2))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weights::default_outer;
    use approx::assert_abs_diff_eq;

    fn cx(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn data(f1: &[f64], f2: &[f64]) -> CoronaData {
        CoronaData::new(PowerSeries::from_real(f1), PowerSeries::from_real(f2)).unwrap()
    }

    fn classical() -> OuterFunction {
        default_outer(&Weight::classical(CircleGrid::new(1024).unwrap()))
    }

    #[test]
    fn smooth_solution_examples() {
        let d = data(&[1.0], &[1.0]);
        let (a, b) = smooth_solution(&d, cx(0.3, 0.2));
        assert_abs_diff_eq!((a - 0.5).norm() + (b - 0.5).norm(), 0.0, epsilon = 1e-16);
        let d = data(&[1.0], &[0.0, 1.0]);
        let z = cx(0.4, -0.5);
        let (a, b) = smooth_solution(&d, z);
        let s = 1.0 + z.norm_sqr();
        assert_abs_diff_eq!((a - 1.0 / s).norm(), 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!((b - z.conj() / s).norm(), 0.0, epsilon = 1e-15);
        let d = data(&[0.2, -0.5, 0.25], &[0.6, 0.1, -0.3]);
        for z in [cx(0.1, 0.7), cx(-0.8, 0.3), cx(0.0, 0.0)] {
            let (a, b) = smooth_solution(&d, z);
            assert!((d.f1().eval(z) * a + d.f2().eval(z) * b - 1.0).norm() < 1e-14);
            assert!(a.norm() + b.norm() <= d.k_delta());
        }
    }

    #[test]
    fn dbar_data_examples() {
        assert_eq!(dbar_data(&data(&[1.0], &[1.0]), cx(0.3, 0.3)), ZERO);
        let d = data(&[1.0], &[0.0, 1.0]);
        let z = cx(0.3, -0.6);
        let expected = 1.0 / (1.0 + z.norm_sqr()).powi(2);
        assert_abs_diff_eq!((dbar_data(&d, z) - expected).norm(), 0.0, epsilon = 1e-15);
    }

    #[test]
    fn dbar_data_agrees_with_both_definitions() {
        let d = data(&[0.3, 0.5, -0.2], &[-0.4, 0.2, 0.4]);
        let h = 1e-5;
        let dbar = |f: &dyn Fn(Complex64) -> Complex64, z: Complex64| {
            let dx = (f(z + h) - f(z - h)) / (2.0 * h);
            let dy = (f(z + cx(0.0, h)) - f(z - cx(0.0, h))) / (2.0 * h);
            0.5 * (dx + cx(0.0, 1.0) * dy)
        };
        for z in [cx(0.1, 0.2), cx(-0.5, 0.4), cx(0.6, -0.6)] {
            let psi = dbar_data(&d, z);
            let via2 = dbar(&|w| smooth_solution(&d, w).1, z) / d.f1().eval(z);
            let via1 = -dbar(&|w| smooth_solution(&d, w).0, z) / d.f2().eval(z);
            assert!((via2 - psi).norm() <= 1e-6 * psi.norm(), "{z}");
            assert!((via1 - psi).norm() <= 1e-6 * psi.norm(), "{z}");
        }
    }

    #[test]
    fn cauchy_transform_of_constant() {
        let t = CauchyTransform::new(|_| ONE, 64, 64).unwrap();
        for z in [cx(0.0, 0.0), cx(0.3, 0.4), cx(-0.85, 0.2), cx(0.0, 0.99)] {
            assert!((t.eval(z).unwrap() - z.conj()).norm() < 1e-12, "{z}");
        }
        let zero = CauchyTransform::new(|_| ZERO, 32, 32).unwrap();
        assert_eq!(zero.eval(cx(0.2, 0.1)).unwrap(), ZERO);
    }

    #[test]
    fn cauchy_transform_of_monomial() {
        // ψ = ζ has Ψ = |z|² - 1: only the mode-0 outer integral survives
        let t = CauchyTransform::new(|z| z, 64, 64).unwrap();
        for z in [cx(0.0, 0.0), cx(0.5, 0.1), cx(-0.3, -0.7)] {
            assert!((t.eval(z).unwrap() - (z.norm_sqr() - 1.0)).norm() < 1e-12, "{z}");
        }
    }

    #[test]
    fn cauchy_transform_dbar_matches_psi() {
        let d = data(&[1.0], &[0.0, 1.0]);
        let t = CauchyTransform::new(|z| dbar_data(&d, z), 200, 256).unwrap();
        let h = 1e-3;
        for rho in [0.2, 0.5, 0.8] {
            let vals = t.on_circles(&[rho - h, rho, rho + h], 256).unwrap();
            let (dbar, _) = wirtinger_on_circle(rho, h, &vals[0], &vals[1], &vals[2]);
            for (k, v) in dbar.iter().enumerate() {
                let z = Complex64::from_polar(rho, 2.0 * PI * k as f64 / 256.0);
                let psi = dbar_data(&d, z);
                assert!((v - psi).norm() <= 1e-3 * psi.norm(), "{z}: {v} vs {psi}");
            }
        }
    }

    #[test]
    fn wirtinger_of_polynomials() {
        let n = 64;
        let rho = 0.6;
        let h = 1e-4;
        let circle = |r: f64, f: &dyn Fn(Complex64) -> Complex64| {
            (0..n).map(|k| f(Complex64::from_polar(r, 2.0 * PI * k as f64 / n as f64))).collect::<Vec<_>>()
        };
        let f = |z: Complex64| z * z;
        let (dbar, d) = wirtinger_on_circle(rho, h, &circle(rho - h, &f), &circle(rho, &f), &circle(rho + h, &f));
        for k in 0..n {
            let z = Complex64::from_polar(rho, 2.0 * PI * k as f64 / n as f64);
            assert!(dbar[k].norm() < 1e-7);
            assert!((d[k] - 2.0 * z).norm() < 1e-7);
        }
        let g = |z: Complex64| z.conj();
        let (dbar, _) = wirtinger_on_circle(rho, h, &circle(rho - h, &g), &circle(rho, &g), &circle(rho + h, &g));
        assert!(dbar.iter().all(|v| (v - 1.0).norm() < 1e-7));
    }

    #[test]
    fn trivial_solution() {
        let d = data(&[1.0], &[1.0]);
        let sol = corona_solve(&d, &classical(), CoronaConfig::default()).unwrap();
        assert_eq!(sol.distance(), 0.0);
        let report = verify_corona(&sol).unwrap();
        assert!(report.bezout_boundary < 1e-12 && report.bezout_interior < 1e-12);
        assert!(report.dbar_residual.iter().all(|r| *r < 1e-12));
        for v in sol.boundary().g1.iter().chain(&sol.boundary().g2) {
            assert_abs_diff_eq!((v - 0.5).norm(), 0.0, epsilon = 1e-15);
        }
    }

    #[test]
    fn rejects_bad_data() {
        assert!(CoronaData::new(PowerSeries::from_real(&[0.0, 1.0]), PowerSeries::from_real(&[0.0, 0.5])).is_err());
        assert!(CoronaData::new(PowerSeries::from_real(&[2.0]), PowerSeries::from_real(&[0.0])).is_err());
        // zero on the unit circle
        assert!(CoronaData::new(PowerSeries::from_real(&[0.5, 0.5]), PowerSeries::from_real(&[0.5])).is_err());
    }

    #[test]
    fn delta_certificate_is_conservative() {
        let d = data(&[1.0], &[0.0, 1.0]);
        let c = d.certificate();
        assert_abs_diff_eq!(c.grid_min, 1.0, epsilon = 1e-15);
        assert!(c.delta < 1.0 && c.delta > 0.95);
    }

    #[test]
    fn corona_input_parses() {
        let json = r#"{"f1": [{"re": 1.0, "im": 0.0}], "f2": [{"re": 0.0, "im": 0.0}, {"re": 1.0, "im": 0.0}], "weight": "classical"}"#;
        let input: CoronaInput = serde_json::from_str(json).unwrap();
        assert!(input.to_data().is_ok());
        assert!(matches!(input.weight, WeightSpec::Named(_)));
    }
}
