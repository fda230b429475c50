//! Finite representations of holomorphic functions on the disk.

use num_complex::Complex64;
use rustfft::FftPlanner;
use serde::{Deserialize, Serialize};

use crate::circle::{BoundarySamples, CircleGrid};
use crate::error::{HardyError, Result};

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// Something that can be evaluated, with its derivative, on the closed disk.
pub trait Holomorphic {
    fn eval(&self, z: Complex64) -> Complex64;

    fn derivative(&self, z: Complex64) -> Complex64;

    fn boundary_samples(&self, grid: CircleGrid) -> BoundarySamples {
        BoundarySamples::from_point_fn(grid, |z| self.eval(z))
    }
}

/// Taylor polynomial `Σ c_k z^k`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PowerSeries {
    coeffs: Vec<Complex64>,
}

impl PowerSeries {
    pub fn new(coeffs: Vec<Complex64>) -> Self {
        let coeffs = if coeffs.is_empty() { vec![ZERO] } else { coeffs };
        Self { coeffs }
    }

    pub fn from_real(coeffs: &[f64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Complex64::new(c, 0.0)).collect())
    }

    pub fn constant(c: Complex64) -> Self {
        Self::new(vec![c])
    }

    /// The monomial `z^k`.
    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![ZERO; k + 1];
        coeffs[k] = ONE;
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn scale(&self, s: Complex64) -> Self {
        Self::new(self.coeffs.iter().map(|&c| c * s).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        let at = |v: &[Complex64], k: usize| v.get(k).copied().unwrap_or(ZERO);
        Self::new((0..len).map(|k| at(&self.coeffs, k) + at(&other.coeffs, k)).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = vec![ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn differentiate(&self) -> Self {
        if self.coeffs.len() == 1 {
            return Self::new(vec![ZERO]);
        }
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, &c)| c * k as f64)
                .collect(),
        )
    }

    /// `Σ |c_k|`, an upper bound for the sup norm on the closed disk.
    pub fn abs_coeff_sum(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm()).sum()
    }

    /// Roots of the polynomial, by eigenvalues of the companion matrix.
    /// Leading coefficients that vanish are trimmed first.
    pub fn roots(&self) -> Vec<Complex64> {
        let scale = self.coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max);
        let mut coeffs = self.coeffs.clone();
        while coeffs.len() > 1 && coeffs.last().is_some_and(|c| c.norm() <= 1e-14 * scale) {
            coeffs.pop();
        }
        let d = coeffs.len() - 1;
        if d == 0 {
            return Vec::new();
        }
        let lead = coeffs[d];
        let mut companion = nalgebra::DMatrix::<Complex64>::zeros(d, d);
        for i in 1..d {
            companion[(i, i - 1)] = ONE;
        }
        for i in 0..d {
            companion[(i, d - 1)] = -coeffs[i] / lead;
        }
        companion
            .eigenvalues()
            .map(|v| v.iter().copied().collect())
            .unwrap_or_default()
    }
}

impl Holomorphic for PowerSeries {
    fn eval(&self, z: Complex64) -> Complex64 {
        self.coeffs.iter().rev().fold(ZERO, |acc, &c| acc * z + c)
    }

    fn derivative(&self, z: Complex64) -> Complex64 {
        self.coeffs
            .iter()
            .enumerate()
            .skip(1)
            .rev()
            .fold(ZERO, |acc, (k, &c)| acc * z + c * k as f64)
    }

    /// Exact boundary values on the grid via one inverse FFT (coefficients are
    /// folded modulo `n`, which is exact at the nodes).
    fn boundary_samples(&self, grid: CircleGrid) -> BoundarySamples {
        let n = grid.len();
        let mut buf = vec![ZERO; n];
        for (k, &c) in self.coeffs.iter().enumerate() {
            buf[k % n] += c;
        }
        FftPlanner::<f64>::new().plan_fft_inverse(n).process(&mut buf);
        BoundarySamples::new(grid, buf).expect("buffer has grid length")
    }
}

/// Finite Blaschke product times a unimodular constant and an optional
/// zero-free factor `exp(L(z))`.
#[derive(Debug, Clone, PartialEq)]
pub struct BlaschkeProduct {
    zeros: Vec<Complex64>,
    constant: Complex64,
    log_outer: Option<PowerSeries>,
}

impl BlaschkeProduct {
    pub fn new(zeros: Vec<Complex64>) -> Result<Self> {
        Self::with_factors(zeros, ONE, None)
    }

    pub fn with_factors(
        zeros: Vec<Complex64>,
        constant: Complex64,
        log_outer: Option<PowerSeries>,
    ) -> Result<Self> {
        if let Some(&z) = zeros.iter().find(|z| z.norm() >= 1.0) {
            return Err(HardyError::outside(z));
        }
        if (constant.norm() - 1.0).abs() > 1e-12 {
            return Err(HardyError::InvalidInput(format!(
                "Blaschke constant {constant} is not unimodular"
            )));
        }
        Ok(Self {
            zeros,
            constant,
            log_outer,
        })
    }

    pub fn zeros(&self) -> &[Complex64] {
        &self.zeros
    }

    fn factor(a: Complex64, z: Complex64) -> Complex64 {
        (z - a) / (ONE - a.conj() * z)
    }

    fn factor_derivative(a: Complex64, z: Complex64) -> Complex64 {
        let d = ONE - a.conj() * z;
        (1.0 - a.norm_sqr()) / (d * d)
    }

    fn blaschke_part(&self, z: Complex64) -> Complex64 {
        self.zeros.iter().map(|&a| Self::factor(a, z)).product()
    }

    fn blaschke_derivative(&self, z: Complex64) -> Complex64 {
        (0..self.zeros.len())
            .map(|j| {
                let others: Complex64 = self
                    .zeros
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| i != j)
                    .map(|(_, &a)| Self::factor(a, z))
                    .product();
                Self::factor_derivative(self.zeros[j], z) * others
            })
            .sum()
    }
}

impl Holomorphic for BlaschkeProduct {
    fn eval(&self, z: Complex64) -> Complex64 {
        let outer = self.log_outer.as_ref().map_or(ONE, |l| l.eval(z).exp());
        self.constant * self.blaschke_part(z) * outer
    }

    fn derivative(&self, z: Complex64) -> Complex64 {
        let b = self.blaschke_part(z);
        let db = self.blaschke_derivative(z);
        match &self.log_outer {
            None => self.constant * db,
            Some(l) => {
                let e = l.eval(z).exp();
                self.constant * e * (db + b * l.derivative(z))
            }
        }
    }
}

/// `exp(-L(z)/2) Σ_k c_k w_k / (1 - conj(z_k) z)`: a combination of weighted
/// Szegő kernels, where `L` is the log series of an outer function and
/// `w_k = conj(exp(-L(z_k)/2))`.
#[derive(Debug, Clone, PartialEq)]
pub struct KernelExpansion {
    centers: Vec<Complex64>,
    coeffs: Vec<Complex64>,
    half_log: PowerSeries,
    center_weights: Vec<Complex64>,
}

impl KernelExpansion {
    pub fn new(centers: Vec<Complex64>, coeffs: Vec<Complex64>, log_outer: &PowerSeries) -> Result<Self> {
        if centers.len() != coeffs.len() {
            return Err(HardyError::LengthMismatch {
                expected: centers.len(),
                actual: coeffs.len(),
            });
        }
        let half_log = log_outer.scale(Complex64::new(0.5, 0.0));
        let center_weights = centers
            .iter()
            .map(|&c| (-half_log.eval(c)).exp().conj())
            .collect();
        Ok(Self {
            centers,
            coeffs,
            half_log,
            center_weights,
        })
    }

    pub fn centers(&self) -> &[Complex64] {
        &self.centers
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    fn kernel_sum(&self, z: Complex64) -> (Complex64, Complex64) {
        let mut value = ZERO;
        let mut slope = ZERO;
        for ((&zk, &ck), &wk) in self.centers.iter().zip(&self.coeffs).zip(&self.center_weights) {
            let d = ONE - zk.conj() * z;
            value += ck * wk / d;
            slope += ck * wk * zk.conj() / (d * d);
        }
        (value, slope)
    }
}

impl Holomorphic for KernelExpansion {
    fn eval(&self, z: Complex64) -> Complex64 {
        (-self.half_log.eval(z)).exp() * self.kernel_sum(z).0
    }

    fn derivative(&self, z: Complex64) -> Complex64 {
        let e = (-self.half_log.eval(z)).exp();
        let (value, slope) = self.kernel_sum(z);
        e * (slope - self.half_log.derivative(z) * value)
    }
}

/// Any of the supported representations.
#[derive(Debug, Clone, PartialEq)]
pub enum AnalyticFn {
    Series(PowerSeries),
    Blaschke(BlaschkeProduct),
    Kernel(KernelExpansion),
}

impl Holomorphic for AnalyticFn {
    fn eval(&self, z: Complex64) -> Complex64 {
        match self {
            AnalyticFn::Series(s) => s.eval(z),
            AnalyticFn::Blaschke(b) => b.eval(z),
            AnalyticFn::Kernel(k) => k.eval(z),
        }
    }

    fn derivative(&self, z: Complex64) -> Complex64 {
        match self {
            AnalyticFn::Series(s) => s.derivative(z),
            AnalyticFn::Blaschke(b) => b.derivative(z),
            AnalyticFn::Kernel(k) => k.derivative(z),
        }
    }

    fn boundary_samples(&self, grid: CircleGrid) -> BoundarySamples {
        match self {
            AnalyticFn::Series(s) => s.boundary_samples(grid),
            AnalyticFn::Blaschke(b) => b.boundary_samples(grid),
            AnalyticFn::Kernel(k) => k.boundary_samples(grid),
        }
    }
}

impl From<PowerSeries> for AnalyticFn {
    fn from(s: PowerSeries) -> Self {
        AnalyticFn::Series(s)
    }
}

impl From<BlaschkeProduct> for AnalyticFn {
    fn from(b: BlaschkeProduct) -> Self {
        AnalyticFn::Blaschke(b)
    }
}

impl From<KernelExpansion> for AnalyticFn {
    fn from(k: KernelExpansion) -> Self {
        AnalyticFn::Kernel(k)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn cx(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn series_eval_and_derivative() {
        let p = PowerSeries::from_real(&[1.0, 2.0, 3.0]);
        let z = cx(0.3, -0.2);
        assert_abs_diff_eq!((p.eval(z) - (1.0 + 2.0 * z + 3.0 * z * z)).norm(), 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!((p.derivative(z) - (2.0 + 6.0 * z)).norm(), 0.0, epsilon = 1e-15);
        assert_eq!(p.differentiate(), PowerSeries::from_real(&[2.0, 6.0]));
    }

    #[test]
    fn series_boundary_samples_match_direct_eval() {
        let p = PowerSeries::new((0..20).map(|k| cx(1.0 / (k + 1) as f64, 0.1 * k as f64)).collect());
        let g = CircleGrid::new(256).unwrap();
        let s = p.boundary_samples(g);
        for (k, v) in s.values().iter().enumerate() {
            assert_abs_diff_eq!((v - p.eval(g.node(k))).norm(), 0.0, epsilon = 1e-12);
        }
    }

    #[test]
    fn roots_of_quadratic() {
        // (z - 0.5)(z + 2i)
        let p = PowerSeries::new(vec![cx(0.0, -1.0), cx(-0.5, 2.0), cx(1.0, 0.0)]);
        let mut r = p.roots();
        r.sort_by(|a, b| a.norm().partial_cmp(&b.norm()).unwrap());
        assert_abs_diff_eq!((r[0] - cx(0.5, 0.0)).norm(), 0.0, epsilon = 1e-12);
        assert_abs_diff_eq!((r[1] - cx(0.0, -2.0)).norm(), 0.0, epsilon = 1e-12);
        assert!(PowerSeries::from_real(&[3.0]).roots().is_empty());
    }

    #[test]
    fn blaschke_derivative_matches_finite_difference() {
        let b = BlaschkeProduct::with_factors(
            vec![cx(0.2, 0.1), cx(-0.5, 0.3), cx(0.0, 0.0)],
            cx(0.0, 1.0),
            Some(PowerSeries::from_real(&[0.1, 0.2, -0.05])),
        )
        .unwrap();
        let z = cx(0.15, -0.35);
        let h = 1e-6;
        let fd = (b.eval(z + h) - b.eval(z - h)) / (2.0 * h);
        assert_abs_diff_eq!((fd - b.derivative(z)).norm(), 0.0, epsilon = 1e-8);
    }

    #[test]
    fn blaschke_rejects_exterior_zero() {
        assert!(BlaschkeProduct::new(vec![cx(1.0, 0.0)]).is_err());
    }

    #[test]
    fn kernel_derivative_matches_finite_difference() {
        let log = PowerSeries::from_real(&[-0.2, 0.3, 0.1]);
        let k = KernelExpansion::new(vec![cx(0.1, 0.2), cx(-0.4, 0.0)], vec![cx(1.0, -1.0), cx(0.5, 0.0)], &log)
            .unwrap();
        let z = cx(-0.3, 0.25);
        let h = 1e-6;
        let fd = (k.eval(z + h) - k.eval(z - h)) / (2.0 * h);
        assert_abs_diff_eq!((fd - k.derivative(z)).norm(), 0.0, epsilon = 1e-8);
    }
}
