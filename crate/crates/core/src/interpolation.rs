//! Finite interpolation in weighted `H²` and in `H^∞`.
//!
//! The minimal weighted `H²` interpolant comes from a Gram solve with weighted
//! Szegő kernels; the `H^∞` side is certified by the Pick matrix. The candidate
//! `φ = Σ C_j (1 - z̄_j z)/(z - z_j)` gives an independent route to the same
//! `H²` minimum through `dist(φ, H²_α)`.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::analytic::{BlaschkeProduct, Holomorphic, KernelExpansion};
use crate::carleson::{embedding_constant, polar_centers};
use crate::circle::{BoundarySamples, CircleGrid};
use crate::error::{HardyError, Result};
use crate::exhaustion::{boundary_weight, ring_exhaustion, Atom, DiskMeasure};
use crate::norms::boundary_norm;
use crate::weights::{default_outer, random_weight_family, OuterFunction, Weight};

const ONE: Complex64 = Complex64 { re: 1.0, im: 0.0 };

/// Largest Gram condition number accepted by [`min_norm_interpolant`].
pub const MAX_CONDITION: f64 = 1e12;

/// Distinct points of the open disk.
#[derive(Debug, Clone, PartialEq)]
pub struct PointSequence {
    points: Vec<Complex64>,
}

impl PointSequence {
    pub fn new(points: Vec<Complex64>) -> Result<Self> {
        if points.is_empty() {
            return Err(HardyError::InvalidInput("point sequence is empty".into()));
        }
        if let Some(&z) = points.iter().find(|z| !(z.norm() < 1.0)) {
            return Err(HardyError::outside(z));
        }
        for i in 0..points.len() {
            for j in i + 1..points.len() {
                if points[i] == points[j] {
                    return Err(HardyError::DuplicatePoints(i, j));
                }
            }
        }
        Ok(Self { points })
    }

    pub fn points(&self) -> &[Complex64] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// `z_j = 1 - 2^{-j}` for `j = 1..=count`.
    pub fn dyadic(count: usize) -> Self {
        let points = (1..=count as i32)
            .map(|j| Complex64::new(1.0 - 0.5f64.powi(j), 0.0))
            .collect();
        Self::new(points).expect("dyadic points are distinct and inside the disk")
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct InterpolationProblem {
    sequence: PointSequence,
    targets: Vec<Complex64>,
}

impl InterpolationProblem {
    pub fn new(sequence: PointSequence, targets: Vec<Complex64>) -> Result<Self> {
        if targets.len() != sequence.len() {
            return Err(HardyError::LengthMismatch {
                expected: sequence.len(),
                actual: targets.len(),
            });
        }
        if targets.iter().any(|s| !s.is_finite()) {
            return Err(HardyError::InvalidInput("targets must be finite".into()));
        }
        Ok(Self { sequence, targets })
    }

    pub fn sequence(&self) -> &PointSequence {
        &self.sequence
    }

    pub fn points(&self) -> &[Complex64] {
        self.sequence.points()
    }

    pub fn targets(&self) -> &[Complex64] {
        &self.targets
    }

    /// `‖s‖_∞`.
    pub fn sup_target(&self) -> f64 {
        self.targets.iter().map(|s| s.norm()).fold(0.0, f64::max)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ComplexJson {
    pub re: f64,
    pub im: f64,
}

impl From<ComplexJson> for Complex64 {
    fn from(c: ComplexJson) -> Self {
        Complex64::new(c.re, c.im)
    }
}

impl From<Complex64> for ComplexJson {
    fn from(c: Complex64) -> Self {
        Self { re: c.re, im: c.im }
    }
}

/// On-disk problem description.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProblemFile {
    pub points: Vec<ComplexJson>,
    pub targets: Vec<ComplexJson>,
}

impl ProblemFile {
    pub fn to_problem(&self) -> Result<InterpolationProblem> {
        let seq = PointSequence::new(self.points.iter().map(|&c| c.into()).collect())?;
        InterpolationProblem::new(seq, self.targets.iter().map(|&c| c.into()).collect())
    }

    pub fn from_problem(problem: &InterpolationProblem) -> Self {
        Self {
            points: problem.points().iter().map(|&c| c.into()).collect(),
            targets: problem.targets().iter().map(|&c| c.into()).collect(),
        }
    }
}

fn pseudo_hyperbolic(a: Complex64, b: Complex64) -> f64 {
    ((a - b) / (ONE - b.conj() * a)).norm()
}

/// `δ = min_k Π_{j≠k} |(z_j - z_k)/(1 - z̄_k z_j)|`.
pub fn sparsity_delta(seq: &PointSequence) -> Result<f64> {
    let pts = seq.points();
    let mut delta = 1.0f64;
    for (k, &zk) in pts.iter().enumerate() {
        let mut prod = 1.0;
        for (j, &zj) in pts.iter().enumerate() {
            if j != k {
                prod *= pseudo_hyperbolic(zj, zk);
            }
        }
        if prod == 0.0 {
            let j = pts.iter().enumerate().position(|(j, &zj)| j != k && zj == zk).unwrap_or(k);
            return Err(HardyError::DuplicatePoints(k.min(j), k.max(j)));
        }
        delta = delta.min(prod);
    }
    Ok(delta)
}

/// `B(z) = Π (z - z_j)/(1 - z̄_j z)`, optionally leaving out index `exclude`.
pub fn blaschke(seq: &PointSequence, exclude: Option<usize>) -> Result<BlaschkeProduct> {
    if let Some(k) = exclude {
        if k >= seq.len() {
            return Err(HardyError::IndexOutOfRange { index: k, len: seq.len() });
        }
    }
    let zeros = seq
        .points()
        .iter()
        .enumerate()
        .filter(|(j, _)| Some(*j) != exclude)
        .map(|(_, &z)| z)
        .collect();
    BlaschkeProduct::new(zeros)
}

/// `φ(z) = Σ C_j (1 - z̄_j z)/(z - z_j)` with `C_j = s_j / B_j(z_j)`.
#[derive(Debug, Clone, PartialEq)]
pub struct CandidatePhi {
    points: Vec<Complex64>,
    coeffs: Vec<Complex64>,
    partial: Vec<BlaschkeProduct>,
    pub samples: BoundarySamples,
}

impl CandidatePhi {
    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.points
            .iter()
            .zip(&self.coeffs)
            .map(|(&zj, &c)| c * (ONE - zj.conj() * z) / (z - zj))
            .sum()
    }

    /// `(φB)(z) = Σ C_j B_j(z)`, which has no poles.
    pub fn times_blaschke(&self, z: Complex64) -> Complex64 {
        self.partial.iter().zip(&self.coeffs).map(|(b, &c)| c * b.eval(z)).sum()
    }
}

pub fn candidate_phi(problem: &InterpolationProblem, grid: CircleGrid) -> Result<CandidatePhi> {
    let seq = problem.sequence();
    let partial: Vec<BlaschkeProduct> = (0..seq.len())
        .map(|k| blaschke(seq, Some(k)))
        .collect::<Result<_>>()?;
    let coeffs: Vec<Complex64> = partial
        .iter()
        .zip(seq.points())
        .zip(problem.targets())
        .map(|((b, &z), &s)| if s == Complex64::new(0.0, 0.0) { s } else { s / b.eval(z) })
        .collect();
    let mut cand = CandidatePhi {
        points: seq.points().to_vec(),
        coeffs,
        partial,
        samples: BoundarySamples::from_angle_fn(grid, |_| Complex64::new(0.0, 0.0)),
    };
    cand.samples = BoundarySamples::from_point_fn(grid, |z| cand.eval(z));
    Ok(cand)
}

/// `k(z, ζ) = 1/((1 - ζ̄z) a^{1/2}(z) conj(a^{1/2}(ζ)))`, the reproducing kernel
/// of `H²_α`.
pub fn weighted_szego_kernel(outer: &OuterFunction, z: Complex64, zeta: Complex64) -> Result<Complex64> {
    for p in [z, zeta] {
        if !(p.norm() < 1.0) {
            return Err(HardyError::outside(p));
        }
    }
    Ok(kernel_unchecked(outer, z, zeta))
}

fn kernel_unchecked(outer: &OuterFunction, z: Complex64, zeta: Complex64) -> Complex64 {
    let az = outer.power(0.5, z);
    let azeta = outer.power(0.5, zeta);
    ONE / ((ONE - zeta.conj() * z) * az * azeta.conj())
}

#[derive(Debug, Clone, PartialEq)]
pub struct MinNormSolution {
    pub function: KernelExpansion,
    pub coeffs: Vec<Complex64>,
    pub norm: f64,
    pub condition: f64,
}

/// Minimal `‖f‖_{α,2}` subject to `f(z_j) = s_j`, via `G c = s` with
/// `G_{jk} = k(z_j, z_k)` and `f = Σ c_k k(·, z_k)`.
pub fn min_norm_interpolant(problem: &InterpolationProblem, outer: &OuterFunction) -> Result<MinNormSolution> {
    let pts = problem.points();
    let n = pts.len();
    let gram = DMatrix::from_fn(n, n, |j, k| kernel_unchecked(outer, pts[j], pts[k]));
    let eig = gram.clone().symmetric_eigenvalues();
    let max = eig.iter().copied().fold(f64::MIN, f64::max);
    let min = eig.iter().copied().fold(f64::MAX, f64::min);
    let condition = if min > 0.0 { max / min } else { f64::INFINITY };
    if !(condition <= MAX_CONDITION) {
        return Err(HardyError::IllConditioned { condition });
    }
    let s = DVector::from_column_slice(problem.targets());
    let chol = gram
        .cholesky()
        .ok_or_else(|| HardyError::SolveFailed("Gram matrix is not positive definite".into()))?;
    let c = chol.solve(&s);
    let norm = c.dotc(&s).re.max(0.0).sqrt();
    let coeffs: Vec<Complex64> = c.iter().copied().collect();
    let function = KernelExpansion::new(pts.to_vec(), coeffs.clone(), outer.log_series())?;
    Ok(MinNormSolution {
        function,
        coeffs,
        norm,
        condition,
    })
}

/// `max_j |f(z_j) - s_j|`.
pub fn constraint_defect<F: Holomorphic + ?Sized>(f: &F, problem: &InterpolationProblem) -> f64 {
    problem
        .points()
        .iter()
        .zip(problem.targets())
        .map(|(&z, &s)| (f.eval(z) - s).norm())
        .fold(0.0, f64::max)
}

fn pick_matrix(problem: &InterpolationProblem, radius: f64) -> DMatrix<Complex64> {
    let z = problem.points();
    let s = problem.targets();
    let r2 = radius * radius;
    DMatrix::from_fn(z.len(), z.len(), |j, k| {
        (r2 - s[j] * s[k].conj()) / (ONE - z[j] * z[k].conj())
    })
}

/// Smallest eigenvalue of the Pick matrix at `radius`.
pub fn pick_min_eigenvalue(problem: &InterpolationProblem, radius: f64) -> f64 {
    pick_matrix(problem, radius)
        .symmetric_eigenvalues()
        .iter()
        .copied()
        .fold(f64::INFINITY, f64::min)
}

fn pick_is_psd(problem: &InterpolationProblem, radius: f64) -> bool {
    let m = pick_matrix(problem, radius);
    let scale = m.iter().map(|v| v.norm()).fold(1.0, f64::max);
    let min = m.symmetric_eigenvalues().iter().copied().fold(f64::INFINITY, f64::min);
    min >= -1e-13 * scale
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PickResult {
    /// Midpoint of the final bracket.
    pub value: f64,
    pub lower: f64,
    pub upper: f64,
}

/// Minimal `H^∞` norm of an interpolant, by bisection on positive
/// semidefiniteness of `[(R² - s_j s̄_k)/(1 - z_j z̄_k)]`.
pub fn pick_min_norm(problem: &InterpolationProblem, tol: f64) -> Result<PickResult> {
    if !(tol > 0.0) {
        return Err(HardyError::InvalidInput(format!("tolerance {tol} must be positive")));
    }
    let lower = problem.sup_target();
    if pick_is_psd(problem, lower) {
        return Ok(PickResult {
            value: lower,
            lower,
            upper: lower,
        });
    }
    let delta = sparsity_delta(problem.sequence())?;
    let mut hi = (lower / delta).max(lower * 2.0);
    let mut guard = 0;
    while !pick_is_psd(problem, hi) {
        hi *= 2.0;
        guard += 1;
        if guard > 200 {
            return Err(HardyError::SolveFailed("no positive semidefinite Pick matrix found".into()));
        }
    }
    let mut lo = lower;
    let inner = tol * 1e-2;
    while hi - lo > inner {
        let mid = 0.5 * (lo + hi);
        if pick_is_psd(problem, mid) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(PickResult {
        value: 0.5 * (lo + hi),
        lower: lo,
        upper: hi,
    })
}

/// `ν = Σ (1 - |z_j|²) δ_{z_j}`.
pub fn sequence_measure(seq: &PointSequence) -> Result<DiskMeasure> {
    let atoms = seq
        .points()
        .iter()
        .map(|&z| Atom::new(z, 1.0 - z.norm_sqr()))
        .collect::<Result<_>>()?;
    Ok(DiskMeasure::new(vec![], atoms))
}

/// Test centers for the Carleson constant of a sequence: the points themselves
/// and a polar grid.
pub fn sequence_centers(seq: &PointSequence) -> Vec<Complex64> {
    let radii: Vec<f64> = (1..=40).map(|k| 1.0 - 0.9f64.powi(k)).collect();
    let mut centers = polar_centers(&radii, 64);
    centers.extend_from_slice(seq.points());
    centers
}

/// Ring-exhaustion weights at radius `0.95` built from a seeded random family.
pub fn bridge_family(grid: CircleGrid, count: usize, seed: u64) -> Result<Vec<Weight>> {
    random_weight_family(grid, count, 6, 0.2, seed)?
        .iter()
        .map(|w| boundary_weight(ring_exhaustion(w, 0.95)?.measure(), grid))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BridgeRow {
    pub weight_id: usize,
    pub min_norm: f64,
    pub pick_norm: f64,
    pub ratio: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BridgeReport {
    pub rows: Vec<BridgeRow>,
    pub sup_min_norm: f64,
    pub pick_norm: f64,
    pub delta: f64,
    /// Measured embedding constant of `ν` for `α ≡ 1`, `p = 2`.
    pub carleson_constant: f64,
    /// `C′ = C²/δ`.
    pub c_prime: f64,
    /// `C′ ‖s‖_∞`.
    pub bound: f64,
    pub gap_ratio: f64,
    pub within_pick: bool,
    pub within_bound: bool,
}

impl BridgeReport {
    pub fn to_csv(&self) -> String {
        let mut out = String::from("weight_id,min_norm,pick_norm,ratio\n");
        for r in &self.rows {
            out.push_str(&format!("{},{:.16e},{:.16e},{:.16e}\n", r.weight_id, r.min_norm, r.pick_norm, r.ratio));
        }
        out
    }
}

pub fn bridge_report(problem: &InterpolationProblem, family: &[Weight], pick_tol: f64) -> Result<BridgeReport> {
    let delta = sparsity_delta(problem.sequence())?;
    let pick = pick_min_norm(problem, pick_tol)?;
    let pick_norm = pick.upper;
    let nu = sequence_measure(problem.sequence())?;
    let grid = family
        .first()
        .map(|w| w.grid())
        .unwrap_or_else(|| CircleGrid::new(1024).expect("valid grid"));
    let classical = default_outer(&Weight::classical(grid));
    let carleson_constant = embedding_constant(&nu, &classical, 2.0, &sequence_centers(problem.sequence()))?.constant;
    let c_prime = carleson_constant * carleson_constant / delta;
    let bound = c_prime * problem.sup_target();
    let norms: Vec<f64> = family
        .par_iter()
        .map(|w| min_norm_interpolant(problem, &default_outer(w)).map(|s| s.norm))
        .collect::<Result<_>>()?;
    let rows: Vec<BridgeRow> = norms
        .iter()
        .enumerate()
        .map(|(i, &min_norm)| BridgeRow {
            weight_id: i,
            min_norm,
            pick_norm,
            ratio: if pick_norm > 0.0 { min_norm / pick_norm } else { 0.0 },
        })
        .collect();
    let sup_min_norm = norms.iter().copied().fold(0.0, f64::max);
    Ok(BridgeReport {
        within_pick: norms.iter().all(|&m| m <= pick_norm + 1e-6),
        within_bound: norms.iter().all(|&m| m <= bound),
        gap_ratio: if pick_norm > 0.0 { sup_min_norm / pick_norm } else { 0.0 },
        rows,
        sup_min_norm,
        pick_norm,
        delta,
        carleson_constant,
        c_prime,
        bound,
    })
}

/// For weights `α_{v_1}, …, α_{v_k}` with mean `α_u`, returns
/// `max_j ‖f‖²_{v_j,2} / (k ‖f‖²_{u,2})`, which never exceeds 1.
pub fn mixture_ratio<F: Holomorphic + ?Sized>(f: &F, components: &[Weight]) -> Result<f64> {
    let first = components
        .first()
        .ok_or_else(|| HardyError::InvalidInput("no mixture components".into()))?;
    let k = components.len() as f64;
    let grid = first.grid();
    let mut mean = vec![0.0; grid.len()];
    for w in components {
        if w.grid() != grid {
            return Err(HardyError::LengthMismatch {
                expected: grid.len(),
                actual: w.grid().len(),
            });
        }
        for (m, v) in mean.iter_mut().zip(w.samples()) {
            *m += v / k;
        }
    }
    let u = Weight::new(grid, mean)?;
    let base = k * boundary_norm(f, &u, 2.0)?.powi(2);
    let mut worst = 0.0f64;
    for w in components {
        worst = worst.max(boundary_norm(f, w, 2.0)?.powi(2) / base);
    }
    Ok(worst)
}
