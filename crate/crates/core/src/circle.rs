//! Spectral calculus on the unit circle.
//!
//! The circle carries the normalized arc-length measure `dλ = dθ / 2π` (total
//! mass 1). Integrals use the equal-weight trapezoidal rule on a uniform grid,
//! and Fourier coefficients use the same normalization:
//! `c_m = ∫ s(e^{iθ}) e^{-imθ} dλ`.

use std::f64::consts::TAU;

use num_complex::Complex64;
use rustfft::FftPlanner;

use crate::analytic::PowerSeries;
use crate::error::{HardyError, Result};

pub const MIN_GRID: usize = 256;

/// Uniform grid `θ_k = 2πk/n` on the unit circle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CircleGrid {
    n: usize,
}

impl CircleGrid {
    pub fn new(n: usize) -> Result<Self> {
        if n < MIN_GRID || !n.is_power_of_two() {
            return Err(HardyError::InvalidGridSize(n));
        }
        Ok(Self { n })
    }

    /// Grids that only feed internal FFT bookkeeping may be smaller than the
    /// public minimum (e.g. the angular part of a disk quadrature).
    pub(crate) fn with_any_power_of_two(n: usize) -> Self {
        assert!(n.is_power_of_two() && n >= 4, "grid size must be a power of two");
        Self { n }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn theta(&self, k: usize) -> f64 {
        TAU * k as f64 / self.n as f64
    }

    pub fn node(&self, k: usize) -> Complex64 {
        Complex64::from_polar(1.0, self.theta(k))
    }

    pub fn thetas(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.n).map(move |k| self.theta(k))
    }

    pub fn nodes(&self) -> impl Iterator<Item = Complex64> + '_ {
        (0..self.n).map(move |k| self.node(k))
    }

    /// Quadrature weight of each node, so that the weights sum to 1.
    pub fn weight(&self) -> f64 {
        1.0 / self.n as f64
    }

    /// Largest admissible truncation degree for series built on this grid.
    pub fn max_degree(&self) -> usize {
        self.n / 2 - 1
    }
}

/// Values of a function at the nodes of a [`CircleGrid`].
#[derive(Debug, Clone, PartialEq)]
pub struct BoundarySamples {
    grid: CircleGrid,
    values: Vec<Complex64>,
}

impl BoundarySamples {
    pub fn new(grid: CircleGrid, values: Vec<Complex64>) -> Result<Self> {
        if values.len() != grid.len() {
            return Err(HardyError::LengthMismatch {
                expected: grid.len(),
                actual: values.len(),
            });
        }
        Ok(Self { grid, values })
    }

    pub fn from_real(grid: CircleGrid, values: &[f64]) -> Result<Self> {
        Self::new(grid, values.iter().map(|&v| Complex64::new(v, 0.0)).collect())
    }

    /// Samples `f(θ_k)`.
    pub fn from_angle_fn(grid: CircleGrid, f: impl Fn(f64) -> Complex64) -> Self {
        let values = grid.thetas().map(f).collect();
        Self { grid, values }
    }

    /// Samples `f(e^{iθ_k})`.
    pub fn from_point_fn(grid: CircleGrid, f: impl Fn(Complex64) -> Complex64) -> Self {
        let values = grid.nodes().map(f).collect();
        Self { grid, values }
    }

    pub fn grid(&self) -> CircleGrid {
        self.grid
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn into_values(self) -> Vec<Complex64> {
        self.values
    }

    pub fn real_parts(&self) -> Vec<f64> {
        self.values.iter().map(|v| v.re).collect()
    }

    pub fn map(&self, f: impl Fn(Complex64) -> Complex64) -> Self {
        Self {
            grid: self.grid,
            values: self.values.iter().map(|&v| f(v)).collect(),
        }
    }

    pub fn zip_with(&self, other: &Self, f: impl Fn(Complex64, Complex64) -> Complex64) -> Result<Self> {
        if self.grid != other.grid {
            return Err(HardyError::LengthMismatch {
                expected: self.grid.len(),
                actual: other.grid.len(),
            });
        }
        Ok(Self {
            grid: self.grid,
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        })
    }

    /// Discrete L² norm with respect to `dλ`.
    pub fn l2_norm(&self) -> f64 {
        (self.values.iter().map(|v| v.norm_sqr()).sum::<f64>() / self.grid.len() as f64).sqrt()
    }

    pub fn sup_norm(&self) -> f64 {
        self.values.iter().map(|v| v.norm()).fold(0.0, f64::max)
    }
}

/// Discrete Fourier coefficients `c_m`, `-n/2 < m ≤ n/2`, stored in FFT order
/// (index `k` holds mode `k` for `k ≤ n/2` and mode `k - n` otherwise).
#[derive(Debug, Clone, PartialEq)]
pub struct FourierSeries {
    coeffs: Vec<Complex64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Forward,
    Inverse,
}

impl FourierSeries {
    pub fn from_fft_order(coeffs: Vec<Complex64>) -> Result<Self> {
        if coeffs.len() < 4 || !coeffs.len().is_power_of_two() {
            return Err(HardyError::InvalidGridSize(coeffs.len()));
        }
        Ok(Self { coeffs })
    }

    /// Builds a series on `n` modes from `(m, c_m)` pairs; unspecified modes are zero.
    pub fn from_modes(n: usize, modes: &[(i64, Complex64)]) -> Result<Self> {
        let mut coeffs = vec![Complex64::new(0.0, 0.0); n];
        let series_len = n as i64;
        for &(m, c) in modes {
            if m <= -series_len / 2 || m > series_len / 2 {
                return Err(HardyError::DegreeTooLarge {
                    degree: m.unsigned_abs() as usize,
                    max: n / 2,
                });
            }
            coeffs[m.rem_euclid(series_len) as usize] += c;
        }
        Self::from_fft_order(coeffs)
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn fft_order(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn mode_of_index(&self, k: usize) -> i64 {
        let n = self.coeffs.len();
        if k <= n / 2 {
            k as i64
        } else {
            k as i64 - n as i64
        }
    }

    /// Coefficient of mode `m`; zero outside the stored band.
    pub fn coeff(&self, m: i64) -> Complex64 {
        let n = self.coeffs.len() as i64;
        if m <= -n / 2 || m > n / 2 {
            return Complex64::new(0.0, 0.0);
        }
        self.coeffs[m.rem_euclid(n) as usize]
    }

    pub fn modes(&self) -> impl Iterator<Item = (i64, Complex64)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .map(move |(k, &c)| (self.mode_of_index(k), c))
    }

    /// Spectral Poisson sum `Σ c_m r^{|m|} e^{imθ}` at `z = re^{iθ}`.
    pub fn poisson(&self, z: Complex64) -> Result<Complex64> {
        let r = z.norm();
        if r >= 1.0 {
            return Err(HardyError::outside(z));
        }
        let unit = if r > 0.0 { z / r } else { Complex64::new(1.0, 0.0) };
        let mut acc = self.coeff(0);
        let mut pos = Complex64::new(1.0, 0.0);
        let mut neg = Complex64::new(1.0, 0.0);
        let mut radial = 1.0;
        let half = self.coeffs.len() as i64 / 2;
        for m in 1..=half {
            pos *= unit;
            neg *= unit.conj();
            radial *= r;
            if radial == 0.0 {
                break;
            }
            acc += self.coeff(m) * pos * radial;
            if m < half {
                acc += self.coeff(-m) * neg * radial;
            }
        }
        Ok(acc)
    }

    /// Discrete L² norm (Parseval with `dλ` of mass 1).
    pub fn l2_norm(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt()
    }
}

/// Forward transform `c_m = (1/n) Σ_k s_k e^{-imθ_k}`.
pub fn forward(samples: &BoundarySamples) -> FourierSeries {
    let n = samples.grid.len();
    let mut buf = samples.values.clone();
    FftPlanner::<f64>::new().plan_fft_forward(n).process(&mut buf);
    let scale = 1.0 / n as f64;
    buf.iter_mut().for_each(|c| *c *= scale);
    FourierSeries { coeffs: buf }
}

/// Inverse transform `s_k = Σ_m c_m e^{imθ_k}`.
pub fn inverse(series: &FourierSeries, grid: CircleGrid) -> Result<BoundarySamples> {
    if series.len() != grid.len() {
        return Err(HardyError::LengthMismatch {
            expected: grid.len(),
            actual: series.len(),
        });
    }
    let mut buf = series.coeffs.clone();
    FftPlanner::<f64>::new().plan_fft_inverse(grid.len()).process(&mut buf);
    Ok(BoundarySamples { grid, values: buf })
}

/// Either direction of the discrete transform, for callers holding a
/// [`Direction`] value (the CLI, mostly).
pub enum Transformed {
    Series(FourierSeries),
    Samples(BoundarySamples),
}

pub fn to_fourier(samples: &BoundarySamples, direction: Direction) -> Result<Transformed> {
    match direction {
        Direction::Forward => Ok(Transformed::Series(forward(samples))),
        Direction::Inverse => {
            let series = FourierSeries::from_fft_order(samples.values.clone())?;
            Ok(Transformed::Samples(inverse(&series, samples.grid)?))
        }
    }
}

/// Harmonic (Poisson) extension of the samples into the disk, real part.
pub fn poisson_extend(samples: &BoundarySamples, z: Complex64) -> Result<f64> {
    Ok(forward(samples).poisson(z)?.re)
}

/// Analytic completion `h + ig` of the real part of the samples, normalized by
/// `g(0) = 0`: the power series `c_0 + 2 Σ_{m=1}^{M} c_m z^m`.
pub fn herglotz_extend(samples: &BoundarySamples, degree: usize) -> Result<PowerSeries> {
    let grid = samples.grid;
    if degree > grid.max_degree() {
        return Err(HardyError::DegreeTooLarge {
            degree,
            max: grid.max_degree(),
        });
    }
    let real = BoundarySamples::from_real(grid, &samples.real_parts())?;
    let series = forward(&real);
    let mut coeffs = Vec::with_capacity(degree + 1);
    coeffs.push(Complex64::new(series.coeff(0).re, 0.0));
    coeffs.extend((1..=degree as i64).map(|m| series.coeff(m) * 2.0));
    Ok(PowerSeries::new(coeffs))
}

/// Orthogonal projection onto the analytic modes `m ≥ 0`.
pub fn riesz_project(series: &FourierSeries) -> FourierSeries {
    let mut coeffs = series.coeffs.clone();
    for (k, c) in coeffs.iter_mut().enumerate() {
        if series.mode_of_index(k) < 0 {
            *c = Complex64::new(0.0, 0.0);
        }
    }
    FourierSeries { coeffs }
}

/// `∫ s dλ` by the equal-weight rule.
pub fn circle_integral(samples: &BoundarySamples) -> Complex64 {
    samples.values.iter().sum::<Complex64>() / samples.grid.len() as f64
}

/// Half spectrum `h_0..=h_{n/2}` of real samples such that
/// `s(θ) = h_0 + 2 Re Σ_{m≥1} h_m e^{imθ}` reproduces the samples exactly on the
/// grid (the Nyquist coefficient is halved).
pub(crate) fn real_half_spectrum(values: &[f64]) -> Vec<Complex64> {
    let n = values.len();
    let grid = CircleGrid::with_any_power_of_two(n);
    let samples = BoundarySamples {
        grid,
        values: values.iter().map(|&v| Complex64::new(v, 0.0)).collect(),
    };
    let series = forward(&samples);
    let mut half: Vec<Complex64> = (0..=n as i64 / 2).map(|m| series.coeff(m)).collect();
    half[0].im = 0.0;
    half[n / 2] *= 0.5;
    half
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analytic::Holomorphic;
    use approx::assert_abs_diff_eq;
    use proptest::prelude::*;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    #[test]
    fn grid_sizes() {
        let g = CircleGrid::new(256).unwrap();
        assert_abs_diff_eq!(g.theta(1), TAU / 256.0);
        let g = CircleGrid::new(1024).unwrap();
        assert_eq!(g.len(), 1024);
        assert_abs_diff_eq!(g.theta(512), std::f64::consts::PI);
        assert_eq!(CircleGrid::new(300), Err(HardyError::InvalidGridSize(300)));
        assert!(CircleGrid::new(128).is_err());
    }

    #[test]
    fn pure_modes() {
        let g = CircleGrid::new(256).unwrap();
        let s = BoundarySamples::from_angle_fn(g, |t| Complex64::from_polar(1.0, t));
        let f = forward(&s);
        for (m, cm) in f.modes() {
            let expected = if m == 1 { 1.0 } else { 0.0 };
            assert_abs_diff_eq!(cm.re, expected, epsilon = 1e-14);
            assert_abs_diff_eq!(cm.im, 0.0, epsilon = 1e-14);
        }
        let one = BoundarySamples::from_angle_fn(g, |_| c(1.0));
        assert_abs_diff_eq!(forward(&one).coeff(0).re, 1.0, epsilon = 1e-15);
        let cos2 = BoundarySamples::from_angle_fn(g, |t| c(2.0 * t.cos()));
        let f = forward(&cos2);
        assert_abs_diff_eq!(f.coeff(1).re, 1.0, epsilon = 1e-14);
        assert_abs_diff_eq!(f.coeff(-1).re, 1.0, epsilon = 1e-14);
        assert_abs_diff_eq!(f.coeff(2).norm(), 0.0, epsilon = 1e-14);
    }

    #[test]
    fn inverse_length_mismatch() {
        let series = FourierSeries::from_modes(512, &[(0, c(1.0))]).unwrap();
        let g = CircleGrid::new(256).unwrap();
        assert!(matches!(inverse(&series, g), Err(HardyError::LengthMismatch { .. })));
    }

    #[test]
    fn poisson_examples() {
        let g = CircleGrid::new(256).unwrap();
        let one = BoundarySamples::from_angle_fn(g, |_| c(1.0));
        assert_abs_diff_eq!(poisson_extend(&one, Complex64::new(0.3, -0.4)).unwrap(), 1.0, epsilon = 1e-14);
        let cos = BoundarySamples::from_angle_fn(g, |t| c(t.cos()));
        assert_abs_diff_eq!(poisson_extend(&cos, c(0.5)).unwrap(), 0.5, epsilon = 1e-14);
        assert_abs_diff_eq!(poisson_extend(&cos, c(0.0)).unwrap(), 0.0, epsilon = 1e-14);
        assert!(poisson_extend(&cos, c(1.0)).is_err());
    }

    #[test]
    fn herglotz_examples() {
        let g = CircleGrid::new(256).unwrap();
        let one = BoundarySamples::from_angle_fn(g, |_| c(1.0));
        let h = herglotz_extend(&one, 10).unwrap();
        assert_abs_diff_eq!(h.coeffs()[0].re, 1.0, epsilon = 1e-15);
        assert!(h.coeffs()[1..].iter().all(|c| c.norm() < 1e-15));

        let cos = BoundarySamples::from_angle_fn(g, |t| c(t.cos()));
        let h = herglotz_extend(&cos, 10).unwrap();
        assert_abs_diff_eq!(h.coeffs()[1].re, 1.0, epsilon = 1e-14);
        assert_abs_diff_eq!(h.coeffs()[0].norm(), 0.0, epsilon = 1e-15);

        let zero = BoundarySamples::from_angle_fn(g, |_| c(0.0));
        assert!(herglotz_extend(&zero, 5).unwrap().coeffs().iter().all(|c| c.norm() == 0.0));
        assert!(herglotz_extend(&zero, 128).is_err());
    }

    #[test]
    fn riesz_examples() {
        let neg = FourierSeries::from_modes(256, &[(-1, c(1.0))]).unwrap();
        assert_eq!(riesz_project(&neg).l2_norm(), 0.0);
        let pos = FourierSeries::from_modes(256, &[(1, c(1.0))]).unwrap();
        assert_eq!(riesz_project(&pos), pos);
        let cos2 = FourierSeries::from_modes(256, &[(1, c(1.0)), (-1, c(1.0))]).unwrap();
        assert_eq!(riesz_project(&cos2), pos);
    }

    #[test]
    fn integral_examples() {
        let g = CircleGrid::new(256).unwrap();
        let one = BoundarySamples::from_angle_fn(g, |_| c(1.0));
        assert_abs_diff_eq!(circle_integral(&one).re, 1.0, epsilon = 1e-15);
        let e = BoundarySamples::from_angle_fn(g, |t| Complex64::from_polar(1.0, t));
        assert_abs_diff_eq!(circle_integral(&e).norm(), 0.0, epsilon = 1e-15);
        let s = BoundarySamples::from_angle_fn(g, |t| c(5.0 + 4.0 * t.cos()));
        assert_abs_diff_eq!(circle_integral(&s).re, 5.0, epsilon = 1e-14);
    }

    #[test]
    fn herglotz_real_part_matches_poisson() {
        let g = CircleGrid::new(512).unwrap();
        let s = BoundarySamples::from_angle_fn(g, |t| c((t.cos()).exp() + 0.3 * (3.0 * t).sin()));
        let h = herglotz_extend(&s, g.max_degree()).unwrap();
        let series = forward(&s);
        for k in (0..g.len()).step_by(7) {
            let z = Complex64::from_polar(0.999, g.theta(k));
            let lhs = h.eval(z).re;
            let rhs = series.poisson(z).unwrap().re;
            assert!((lhs - rhs).abs() < 1e-8, "{lhs} vs {rhs}");
        }
    }

    #[test]
    fn half_spectrum_reproduces_samples() {
        let vals: Vec<f64> = (0..64).map(|k| ((k * 37 % 11) as f64).sin()).collect();
        let half = real_half_spectrum(&vals);
        for (k, &v) in vals.iter().enumerate() {
            let t = TAU * k as f64 / 64.0;
            let mut s = half[0].re;
            for (m, h) in half.iter().enumerate().skip(1) {
                s += 2.0 * (h * Complex64::from_polar(1.0, m as f64 * t)).re;
            }
            assert_abs_diff_eq!(s, v, epsilon = 1e-12);
        }
    }

    fn samples_strategy() -> impl Strategy<Value = Vec<(f64, f64)>> {
        proptest::collection::vec((-10.0f64..10.0, -10.0f64..10.0), 256)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(32))]

        #[test]
        fn roundtrip_identity(v in samples_strategy()) {
            let g = CircleGrid::new(256).unwrap();
            let s = BoundarySamples::new(g, v.iter().map(|&(a, b)| Complex64::new(a, b)).collect()).unwrap();
            let back = inverse(&forward(&s), g).unwrap();
            let scale = s.sup_norm().max(1.0);
            for (a, b) in s.values().iter().zip(back.values()) {
                prop_assert!((a - b).norm() <= 1e-12 * scale);
            }
        }

        #[test]
        fn projection_idempotent_and_contractive(v in samples_strategy()) {
            let g = CircleGrid::new(256).unwrap();
            let s = BoundarySamples::new(g, v.iter().map(|&(a, b)| Complex64::new(a, b)).collect()).unwrap();
            let f = forward(&s);
            let p = riesz_project(&f);
            prop_assert_eq!(riesz_project(&p), p.clone());
            prop_assert!(p.l2_norm() <= f.l2_norm() + 1e-12);
        }

        #[test]
        fn poisson_at_origin_is_mean(v in samples_strategy()) {
            let g = CircleGrid::new(256).unwrap();
            let s = BoundarySamples::new(g, v.iter().map(|&(a, _)| c(a)).collect()).unwrap();
            let p = poisson_extend(&s, c(0.0)).unwrap();
            prop_assert!((p - circle_integral(&s).re).abs() < 1e-12);
        }
    }
}
