//! Boundary weights and their outer functions.
//!
//! For a weight `α ≥ c > 0` on the circle the outer function is
//! `a = exp(H[log α])`, where `H` is the analytic completion of
//! [`herglotz_extend`]. It has no zeros on the closed disk, `|a| = α` on the
//! circle, and `a(0) > 0`.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::analytic::{Holomorphic, PowerSeries};
use crate::circle::{circle_integral, herglotz_extend, BoundarySamples, CircleGrid};
use crate::error::{HardyError, Result};

/// Strictly positive density on the circle, sampled on a uniform grid.
#[derive(Debug, Clone, PartialEq)]
pub struct Weight {
    grid: CircleGrid,
    samples: Vec<f64>,
    lower_bound: f64,
    mass: f64,
}

impl Weight {
    pub fn new(grid: CircleGrid, samples: Vec<f64>) -> Result<Self> {
        if samples.len() != grid.len() {
            return Err(HardyError::LengthMismatch {
                expected: grid.len(),
                actual: samples.len(),
            });
        }
        if let Some((index, &value)) = samples
            .iter()
            .enumerate()
            .find(|(_, v)| !(**v > 0.0) || !v.is_finite())
        {
            return Err(HardyError::NonPositiveWeight { index, value });
        }
        let lower_bound = samples.iter().copied().fold(f64::INFINITY, f64::min);
        let mass = samples.iter().sum::<f64>() / grid.len() as f64;
        Ok(Self {
            grid,
            samples,
            lower_bound,
            mass,
        })
    }

    /// The constant weight 1 (classical Hardy space).
    pub fn classical(grid: CircleGrid) -> Self {
        Self::new(grid, vec![1.0; grid.len()]).expect("constant weight is valid")
    }

    pub fn from_fn(grid: CircleGrid, f: impl Fn(f64) -> f64) -> Result<Self> {
        Self::new(grid, grid.thetas().map(f).collect())
    }

    pub fn grid(&self) -> CircleGrid {
        self.grid
    }

    pub fn samples(&self) -> &[f64] {
        &self.samples
    }

    pub fn lower_bound(&self) -> f64 {
        self.lower_bound
    }

    pub fn mass(&self) -> f64 {
        self.mass
    }

    pub fn to_boundary_samples(&self) -> BoundarySamples {
        BoundarySamples::from_real(self.grid, &self.samples).expect("lengths agree")
    }

    /// Rescales to total mass 1.
    pub fn normalized(&self) -> Self {
        let s = 1.0 / self.mass;
        Self::new(self.grid, self.samples.iter().map(|v| v * s).collect()).expect("positive rescale")
    }

    pub fn scaled(&self, factor: f64) -> Result<Self> {
        Self::new(self.grid, self.samples.iter().map(|v| v * factor).collect())
    }

    pub fn sup_distance(&self, other: &Weight) -> Result<f64> {
        if self.grid != other.grid {
            return Err(HardyError::LengthMismatch {
                expected: self.grid.len(),
                actual: other.grid.len(),
            });
        }
        Ok(self
            .samples
            .iter()
            .zip(&other.samples)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max))
    }
}

/// Checks positivity, records the floor and mass, and optionally rescales to mass 1.
pub fn validate_and_normalize(raw: &BoundarySamples, normalize: bool) -> Result<Weight> {
    let weight = Weight::new(raw.grid(), raw.real_parts())?;
    if let Some((index, v)) = raw.values().iter().enumerate().find(|(_, v)| v.im != 0.0) {
        return Err(HardyError::InvalidInput(format!(
            "weight sample {index} has imaginary part {}",
            v.im
        )));
    }
    Ok(if normalize { weight.normalized() } else { weight })
}

/// Zero-free analytic `a` with `|a| = α` on the circle and `a(0) > 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct OuterFunction {
    log_series: PowerSeries,
    weight: Weight,
}

impl OuterFunction {
    pub fn log_series(&self) -> &PowerSeries {
        &self.log_series
    }

    pub fn weight(&self) -> &Weight {
        &self.weight
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.log_series.eval(z).exp()
    }

    /// `a^{exponent}(z) = exp(exponent · log a(z))`.
    pub fn power(&self, exponent: f64, z: Complex64) -> Complex64 {
        (self.log_series.eval(z) * exponent).exp()
    }

    /// Boundary values of `a^{exponent}` on the weight's grid.
    pub fn boundary_power(&self, exponent: f64) -> BoundarySamples {
        self.log_series
            .boundary_samples(self.weight.grid)
            .map(|l| (l * exponent).exp())
    }

    /// Power series of `a^{exponent}`, truncated to the weight grid's maximal degree.
    pub fn power_series(&self, exponent: f64) -> PowerSeries {
        let samples = self.boundary_power(exponent);
        let series = crate::circle::forward(&samples);
        let degree = self.weight.grid.max_degree();
        PowerSeries::new((0..=degree as i64).map(|m| series.coeff(m)).collect())
    }
}

pub fn outer_function(weight: &Weight, degree: usize) -> Result<OuterFunction> {
    let log_alpha = BoundarySamples::from_real(
        weight.grid,
        &weight.samples.iter().map(|v| v.ln()).collect::<Vec<_>>(),
    )?;
    let log_series = herglotz_extend(&log_alpha, degree)?;
    Ok(OuterFunction {
        log_series,
        weight: weight.clone(),
    })
}

/// Outer function at the default truncation degree `n/2 - 1`.
pub fn default_outer(weight: &Weight) -> OuterFunction {
    outer_function(weight, weight.grid.max_degree()).expect("default degree is admissible")
}

pub fn outer_power(outer: &OuterFunction, exponent: f64, z: Complex64) -> Result<Complex64> {
    if z.norm() > 1.0 + 1e-12 {
        return Err(HardyError::outside(z));
    }
    if !(exponent > 0.0) || !exponent.is_finite() {
        return Err(HardyError::InvalidExponent(1.0 / exponent));
    }
    Ok(outer.power(exponent, z))
}

/// Deterministic family of mass-1 weights `max(c, 1 + s·q)`, `q` a random real
/// trigonometric polynomial of degree `d` with mode amplitudes decaying like
/// `1/m` and `s` drawn so that `1 + s·q` stays at or above `c + 0.1(1 - c)`.
pub fn random_weight_family(
    grid: CircleGrid,
    count: usize,
    degree: usize,
    floor: f64,
    seed: u64,
) -> Result<Vec<Weight>> {
    if !(floor > 0.0) || floor >= 1.0 {
        return Err(HardyError::InvalidInput(format!("weight floor {floor} must lie in (0, 1)")));
    }
    if degree >= grid.len() / 2 {
        return Err(HardyError::DegreeTooLarge {
            degree,
            max: grid.max_degree(),
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let modes: Vec<(f64, f64)> = (1..=degree)
                .map(|m| {
                    let a = rng.random_range(-1.0..1.0) / m as f64;
                    let b = rng.random_range(-1.0..1.0) / m as f64;
                    (a, b)
                })
                .collect();
            let q: Vec<f64> = grid
                .thetas()
                .map(|t| {
                    modes
                        .iter()
                        .enumerate()
                        .map(|(i, (a, b))| {
                            let m = (i + 1) as f64;
                            a * (m * t).cos() + b * (m * t).sin()
                        })
                        .sum()
                })
                .collect();
            let peak = q.iter().map(|v| v.abs()).fold(0.0, f64::max);
            let amplitude = rng.random_range(0.3..0.9);
            let s = if peak > 0.0 { amplitude * (1.0 - floor) / peak } else { 0.0 };
            let samples: Vec<f64> = q.iter().map(|v| (1.0 + s * v).max(floor)).collect();
            Ok(Weight::new(grid, samples)?.normalized())
        })
        .collect()
}

/// On-disk weight description.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WeightFile {
    pub n: usize,
    pub samples: Vec<f64>,
    pub normalized: bool,
}

impl WeightFile {
    pub fn from_weight(weight: &Weight) -> Self {
        Self {
            n: weight.grid.len(),
            samples: weight.samples.clone(),
            normalized: (weight.mass - 1.0).abs() < 1e-12,
        }
    }

    /// Builds the weight; `normalized: true` requests rescaling to mass 1.
    pub fn to_weight(&self) -> Result<Weight> {
        let grid = CircleGrid::new(self.n)?;
        let weight = Weight::new(grid, self.samples.clone())?;
        Ok(if self.normalized { weight.normalized() } else { weight })
    }
}

/// Checks `circle_integral(|a^{1/p} f|^p) = circle_integral(|f|^p α)` and
/// returns the relative defect.
pub fn isometry_defect(outer: &OuterFunction, f: &BoundarySamples, p: f64) -> Result<f64> {
    let ap = outer.boundary_power(1.0 / p);
    let lhs = circle_integral(&ap.zip_with(f, |a, v| Complex64::new((a * v).norm().powf(p), 0.0))?).re;
    let alpha = outer.weight.to_boundary_samples();
    let rhs = circle_integral(&alpha.zip_with(f, |w, v| w * v.norm().powf(p))?).re;
    Ok((lhs - rhs).abs() / rhs.abs().max(f64::MIN_POSITIVE))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn grid() -> CircleGrid {
        CircleGrid::new(1024).unwrap()
    }

    #[test]
    fn normalize_examples() {
        let g = grid();
        let raw = BoundarySamples::from_angle_fn(g, |_| Complex64::new(2.0, 0.0));
        let w = validate_and_normalize(&raw, true).unwrap();
        assert!(w.samples().iter().all(|v| (v - 1.0).abs() < 1e-15));
        assert_abs_diff_eq!(w.lower_bound(), 1.0, epsilon = 1e-15);

        let raw = BoundarySamples::from_angle_fn(g, |t| Complex64::new(5.0 + 4.0 * t.cos(), 0.0));
        let w = validate_and_normalize(&raw, true).unwrap();
        assert_abs_diff_eq!(w.mass(), 1.0, epsilon = 1e-14);
        assert_abs_diff_eq!(w.lower_bound(), 0.2, epsilon = 1e-14);
        for (k, v) in w.samples().iter().enumerate() {
            assert_abs_diff_eq!(*v, 1.0 + 0.8 * g.theta(k).cos(), epsilon = 1e-14);
        }

        let mut vals = vec![1.0; 1024];
        vals[17] = 0.0;
        let raw = BoundarySamples::from_real(g, &vals).unwrap();
        assert_eq!(
            validate_and_normalize(&raw, false),
            Err(HardyError::NonPositiveWeight { index: 17, value: 0.0 })
        );
    }

    #[test]
    fn outer_of_constant_is_one() {
        let a = default_outer(&Weight::classical(grid()));
        assert_abs_diff_eq!((a.eval(Complex64::new(0.3, 0.4)) - 1.0).norm(), 0.0, epsilon = 1e-15);
    }

    #[test]
    fn outer_of_shifted_cosine_is_closed_form() {
        let w = Weight::from_fn(grid(), |t| (5.0 + 4.0 * t.cos()) / 5.0).unwrap();
        let a = default_outer(&w);
        for k in 0..50 {
            let z = Complex64::from_polar(0.95 * k as f64 / 50.0, 0.7 * k as f64);
            let exact = (2.0 + z) * (2.0 + z) / 5.0;
            assert!((a.eval(z) - exact).norm() < 1e-12);
        }
        assert_abs_diff_eq!(a.eval(Complex64::new(0.0, 0.0)).re, 0.8, epsilon = 1e-14);
        let root = outer_power(&a, 0.5, Complex64::new(0.0, 0.0)).unwrap();
        assert_abs_diff_eq!(root.re, 2.0 / 5f64.sqrt(), epsilon = 1e-14);
        assert_abs_diff_eq!(root.im, 0.0, epsilon = 1e-15);
    }

    #[test]
    fn outer_modulus_of_exp_cos() {
        let w = Weight::from_fn(grid(), |t| t.cos().exp()).unwrap();
        let a = default_outer(&w);
        let b = a.boundary_power(1.0);
        for (v, alpha) in b.values().iter().zip(w.samples()) {
            assert!((v.norm() - alpha).abs() < 1e-10);
        }
    }

    #[test]
    fn outer_power_roundtrip() {
        let w = Weight::from_fn(grid(), |t| 1.0 + 0.5 * (2.0 * t).sin()).unwrap();
        let a = default_outer(&w);
        let z = Complex64::new(-0.2, 0.6);
        assert_abs_diff_eq!((outer_power(&a, 1.0, z).unwrap() - a.eval(z)).norm(), 0.0, epsilon = 1e-15);
        for p in [1.0, 2.0, 3.0, 4.0] {
            let r = outer_power(&a, 1.0 / p, z).unwrap();
            assert!((r.powf(p) - a.eval(z)).norm() < 1e-10);
        }
        assert!(outer_power(&a, 0.5, Complex64::new(1.5, 0.0)).is_err());
    }

    #[test]
    fn random_family_contract() {
        let g = grid();
        let one = random_weight_family(g, 1, 0, 0.1, 3).unwrap();
        assert!(one[0].samples().iter().all(|v| (v - 1.0).abs() < 1e-15));

        let a = random_weight_family(g, 5, 6, 0.1, 42).unwrap();
        let b = random_weight_family(g, 5, 6, 0.1, 42).unwrap();
        assert_eq!(a, b);

        let fam = random_weight_family(g, 20, 8, 0.1, 9).unwrap();
        assert_eq!(fam.len(), 20);
        for w in &fam {
            assert_abs_diff_eq!(w.mass(), 1.0, epsilon = 1e-12);
            assert!(w.lower_bound() >= 0.1 / w.mass() - 1e-15);
            let a = default_outer(w);
            let b = a.boundary_power(1.0);
            let err = b
                .values()
                .iter()
                .zip(w.samples())
                .map(|(v, alpha)| (v.norm() - alpha).abs())
                .fold(0.0, f64::max);
            assert!(err <= 1e-8, "outer modulus error {err}");
        }
    }

    #[test]
    fn weight_file_roundtrip() {
        let g = CircleGrid::new(256).unwrap();
        let w = Weight::from_fn(g, |t| 2.0 + t.sin()).unwrap();
        let file = WeightFile::from_weight(&w);
        assert!(!file.normalized);
        let json = serde_json::to_string(&file).unwrap();
        let back: WeightFile = serde_json::from_str(&json).unwrap();
        assert_eq!(back.to_weight().unwrap(), w);
    }
}
