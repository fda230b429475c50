//! Distance to the weighted Hardy space through the isometry `A_p f = a^{1/p} f`.
//!
//! At `p = 2` the distance is realized by analytic projection:
//! `dist(φ, H²_α) = ‖(I - P₊)(a^{1/2} φ)‖₂` with best approximant
//! `a^{-1/2} P₊(a^{1/2} φ)`. For other exponents only dual-pairing lower bounds
//! are offered.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use serde::Serialize;

use crate::analytic::{Holomorphic, PowerSeries};
use crate::circle::{circle_integral, forward, inverse, riesz_project, BoundarySamples, FourierSeries};
use crate::error::{HardyError, Result};
use crate::norms::boundary_norm;
use crate::weights::{default_outer, OuterFunction, Weight};

/// Pointwise `a^{1/p} f` on the boundary grid.
pub fn apply_ap(f: &BoundarySamples, outer: &OuterFunction, p: f64) -> Result<BoundarySamples> {
    if !(p > 0.0) || !p.is_finite() {
        return Err(HardyError::InvalidExponent(p));
    }
    outer.boundary_power(1.0 / p).zip_with(f, |a, v| a * v)
}

#[derive(Debug, Clone, PartialEq)]
pub struct DistanceResult {
    pub distance: f64,
    pub best_approximant: PowerSeries,
    pub residual: BoundarySamples,
    /// `‖P₊(a^{1/2} φ)‖₂`.
    pub projection_norm: f64,
    /// `‖a^{1/2} φ‖₂ = ‖φ‖_{α,2}`.
    pub embedded_norm: f64,
    /// Largest coefficient modulus among the top eighth of the approximant's
    /// degrees; small values mean the truncation is harmless.
    pub tail: f64,
}

/// Conjugate exponent `q` with `1/p + 1/q = 1`.
pub fn conjugate_exponent(p: f64) -> Result<f64> {
    if !(p > 1.0) || !p.is_finite() {
        return Err(HardyError::InvalidExponent(p));
    }
    Ok(p / (p - 1.0))
}

pub fn dist_h2(phi: &BoundarySamples, weight: &Weight) -> Result<DistanceResult> {
    dist_h2_with_outer(phi, &default_outer(weight))
}

pub fn dist_h2_with_outer(phi: &BoundarySamples, outer: &OuterFunction) -> Result<DistanceResult> {
    let grid = outer.weight().grid();
    let embedded = apply_ap(phi, outer, 2.0)?;
    let spectrum = forward(&embedded);
    let projected = riesz_project(&spectrum);
    let anti: f64 = spectrum
        .modes()
        .filter(|(m, _)| *m < 0)
        .map(|(_, c)| c.norm_sqr())
        .sum();
    let distance = anti.sqrt();

    let inv_sqrt = outer.boundary_power(-0.5);
    let approximant_samples = inverse(&projected, grid)?.zip_with(&inv_sqrt, |p, a| p * a)?;
    let coeffs = forward(&approximant_samples);
    let degree = grid.max_degree();
    let best_approximant = PowerSeries::new((0..=degree as i64).map(|m| coeffs.coeff(m)).collect());
    let tail = best_approximant.coeffs()[degree - degree / 8..]
        .iter()
        .map(|c| c.norm())
        .fold(0.0, f64::max);
    let residual = phi.zip_with(&best_approximant.boundary_samples(grid), |a, b| a - b)?;

    Ok(DistanceResult {
        distance,
        best_approximant,
        residual,
        projection_norm: projected.l2_norm(),
        embedded_norm: spectrum.l2_norm(),
        tail,
    })
}

/// `∫ φ a e^{iθ} g dλ`.
pub fn dual_pairing<G: Holomorphic + ?Sized>(phi: &BoundarySamples, g: &G, outer: &OuterFunction) -> Result<Complex64> {
    let grid = outer.weight().grid();
    let a = outer.boundary_power(1.0);
    let gs = g.boundary_samples(grid);
    let integrand = BoundarySamples::new(
        grid,
        phi.values()
            .iter()
            .zip(a.values())
            .zip(gs.values())
            .zip(grid.nodes())
            .map(|(((f, a), g), e)| f * a * e * g)
            .collect(),
    )?;
    Ok(circle_integral(&integrand))
}

/// Certified lower bound `|⟨φ, g⟩| / ‖g‖_{α,q}` on `dist(φ, H^p_α)`.
pub fn pairing_lower_bound<G: Holomorphic + ?Sized>(
    phi: &BoundarySamples,
    g: &G,
    outer: &OuterFunction,
    p: f64,
) -> Result<f64> {
    let q = conjugate_exponent(p)?;
    let norm = boundary_norm(g, outer.weight(), q)?;
    if norm == 0.0 {
        return Ok(0.0);
    }
    Ok(dual_pairing(phi, g, outer)?.norm() / norm)
}

/// Supremum of `|⟨φ, g⟩|` over polynomials `g` of degree `≤ degree` with
/// `‖g‖_{α,2} = 1`; a lower bound on `dist(φ, H²_α)` that tightens as the
/// degree grows.
pub fn dual_polynomial_sup(phi: &BoundarySamples, outer: &OuterFunction, degree: usize) -> Result<f64> {
    let weight = outer.weight();
    let alpha_hat: FourierSeries = forward(&weight.to_boundary_samples());
    let dim = degree + 1;
    let gram = DMatrix::from_fn(dim, dim, |j, k| alpha_hat.coeff(j as i64 - k as i64));
    let rhs = DVector::from_iterator(
        dim,
        (0..dim).map(|k| dual_pairing(phi, &PowerSeries::monomial(k), outer).map(|b| b.conj())),
    )
    .map(|r| r.expect("pairing on matching grids"));
    let chol = gram
        .cholesky()
        .ok_or_else(|| HardyError::SolveFailed("weighted monomial Gram matrix is not positive definite".into()))?;
    let x = chol.solve(&rhs);
    Ok(rhs.dotc(&x).re.max(0.0).sqrt())
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PythagorasCheck {
    pub distance_sq: f64,
    pub projection_sq: f64,
    pub total_sq: f64,
    pub defect: f64,
}

pub fn pythagoras(result: &DistanceResult) -> PythagorasCheck {
    let distance_sq = result.distance * result.distance;
    let projection_sq = result.projection_norm * result.projection_norm;
    let total_sq = result.embedded_norm * result.embedded_norm;
    PythagorasCheck {
        distance_sq,
        projection_sq,
        total_sq,
        defect: (distance_sq + projection_sq - total_sq).abs(),
    }
}
