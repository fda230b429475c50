//! Exhaustion functions described by their Riesz measure.
//!
//! The Laplacian is normalized as `Δ = Δ_classical / 2π`, so `Δ log|z|` is the
//! unit point mass at the origin and `u ∈ E_1` means `∫ Δu = 1`. A measure is
//! a finite list of rings (radius plus angular density against `dλ`) and point
//! atoms, and the exhaustion is its Green potential
//! `u(z) = ∫ log|(z - w)/(1 - w̄z)| dΔu(w)`.
//!
//! Ring potentials are evaluated spectrally. With the density written as
//! `h_0 + 2 Re Σ h_m e^{imφ}`, a ring of radius `r` contributes
//!
//! `h_0 log max(|z|, r) + Σ_{m≥1} Re(h_m e^{imθ}) ((r|z|)^m - q^m) / m`,
//!
//! where `q = min(|z|/r, r/|z|)`. This is exact for the trigonometric
//! interpolant of the sampled density.

use num_complex::Complex64;
use rustfft::FftPlanner;
use serde::{Deserialize, Serialize};

use crate::circle::{real_half_spectrum, CircleGrid};
use crate::error::{HardyError, Result};
use crate::weights::Weight;

const NEGLIGIBLE: f64 = 1e-18;

/// Circle of radius `radius` carrying the measure `density(φ) dλ(φ)`.
#[derive(Debug, Clone, PartialEq)]
pub struct Ring {
    radius: f64,
    density: Vec<f64>,
    half_spectrum: Vec<Complex64>,
}

impl Ring {
    pub fn new(radius: f64, density: Vec<f64>) -> Result<Self> {
        if !(radius > 0.0 && radius < 1.0) {
            return Err(HardyError::InvalidRadius(radius));
        }
        CircleGrid::new(density.len())?;
        if density.iter().any(|v| !(*v >= 0.0) || !v.is_finite()) {
            return Err(HardyError::InvalidMeasure("ring density must be non-negative".into()));
        }
        if !density.iter().any(|v| *v > 0.0) {
            return Err(HardyError::InvalidMeasure("ring density vanishes identically".into()));
        }
        let half_spectrum = real_half_spectrum(&density);
        Ok(Self {
            radius,
            density,
            half_spectrum,
        })
    }

    /// Uniform density with total mass `mass`.
    pub fn uniform(radius: f64, mass: f64, n: usize) -> Result<Self> {
        Self::new(radius, vec![mass; n])
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }

    pub fn density(&self) -> &[f64] {
        &self.density
    }

    pub fn grid(&self) -> CircleGrid {
        CircleGrid::with_any_power_of_two(self.density.len())
    }

    pub fn mass(&self) -> f64 {
        self.half_spectrum[0].re
    }

    /// Support points `r e^{iφ_k}` with their masses `density_k / n`.
    pub fn discrete_points(&self) -> impl Iterator<Item = (Complex64, f64)> + '_ {
        let grid = self.grid();
        let w = grid.weight();
        self.density
            .iter()
            .enumerate()
            .map(move |(k, &d)| (grid.node(k) * self.radius, d * w))
    }

    fn is_uniform(&self) -> bool {
        let max = self.density.iter().copied().fold(f64::MIN, f64::max);
        let min = self.density.iter().copied().fold(f64::MAX, f64::min);
        max - min <= 1e-12 * max.abs().max(1.0)
    }

    /// Green potential of the ring at `z`.
    pub fn potential(&self, z: Complex64) -> f64 {
        let rho = z.norm();
        let r = self.radius;
        let mut value = self.mass() * rho.max(r).ln();
        if rho == 0.0 {
            return value;
        }
        let unit = z / rho;
        let outer = r * rho;
        let inner = if rho < r { rho / r } else { r / rho };
        let mut phase = Complex64::new(1.0, 0.0);
        let (mut a, mut b) = (1.0, 1.0);
        for (m, h) in self.half_spectrum.iter().enumerate().skip(1) {
            phase *= unit;
            a *= outer;
            b *= inner;
            if b < NEGLIGIBLE && a < NEGLIGIBLE {
                break;
            }
            value += (h * phase).re * (a - b) / m as f64;
        }
        value
    }

    /// Angular Fourier modes `U_0, U_1, …` of the potential on the circle
    /// `|z| = rho`, with `u = U_0 + 2 Re Σ U_m e^{imθ}`.
    fn potential_modes(&self, rho: f64) -> Vec<Complex64> {
        let r = self.radius;
        let mut modes = vec![Complex64::new(self.mass() * rho.max(r).ln(), 0.0)];
        let outer = r * rho;
        let inner = if rho < r { rho / r } else { r / rho };
        let (mut a, mut b) = (1.0, 1.0);
        for (m, h) in self.half_spectrum.iter().enumerate().skip(1) {
            a *= outer;
            b *= inner;
            if b < NEGLIGIBLE && a < NEGLIGIBLE {
                break;
            }
            modes.push(h * ((a - b) / (2.0 * m as f64)));
        }
        modes
    }

    /// Poisson smoothing of the density onto `grid`: mode `m` is damped by `r^{|m|}`.
    fn poisson_smoothing(&self, grid: CircleGrid) -> Vec<f64> {
        let mut damped = Vec::with_capacity(self.half_spectrum.len());
        let mut rm = 1.0;
        for (m, h) in self.half_spectrum.iter().enumerate() {
            if m > 0 {
                rm *= self.radius;
            }
            damped.push(h * rm);
        }
        synthesize_real(&damped, grid.len())
    }
}

/// Evaluates `c_0 + 2 Re Σ_{m≥1} c_m e^{imθ_k}` on an `n`-point grid, folding
/// modes beyond the grid band (exact at the nodes).
fn synthesize_real(half: &[Complex64], n: usize) -> Vec<f64> {
    let mut buf = vec![Complex64::new(0.0, 0.0); n];
    buf[0] += half[0];
    for (m, &c) in half.iter().enumerate().skip(1) {
        buf[m % n] += c;
        buf[(n - m % n) % n] += c.conj();
    }
    FftPlanner::<f64>::new().plan_fft_inverse(n).process(&mut buf);
    buf.iter().map(|v| v.re).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Atom {
    pub point: Complex64,
    pub mass: f64,
}

impl Atom {
    pub fn new(point: Complex64, mass: f64) -> Result<Self> {
        if point.norm() >= 1.0 {
            return Err(HardyError::outside(point));
        }
        if !(mass > 0.0) || !mass.is_finite() {
            return Err(HardyError::InvalidMeasure(format!("atom mass {mass} must be positive")));
        }
        Ok(Self { point, mass })
    }

    pub fn potential(&self, z: Complex64) -> f64 {
        if z == self.point {
            return f64::NEG_INFINITY;
        }
        let one = Complex64::new(1.0, 0.0);
        self.mass * ((z - self.point) / (one - self.point.conj() * z)).norm().ln()
    }

    pub fn poisson(&self, zeta: Complex64) -> f64 {
        self.mass * (1.0 - self.point.norm_sqr()) / (zeta - self.point).norm_sqr()
    }

    /// Angular modes `U_0, …, U_{max_mode}` of the potential on `|z| = rho`,
    /// same convention as the ring modes. Truncating instead of sampling keeps
    /// the log singularity from aliasing into quadrature sums.
    fn potential_modes(&self, rho: f64, max_mode: usize) -> Vec<Complex64> {
        let s = self.point.norm();
        let mut modes = vec![Complex64::new(self.mass * rho.max(s).ln(), 0.0)];
        if s == 0.0 || rho == 0.0 {
            return modes;
        }
        let unit = (self.point / s).conj();
        let inner = rho.min(s) / rho.max(s);
        let outer = rho * s;
        let (mut phase, mut a, mut b) = (Complex64::new(1.0, 0.0), 1.0, 1.0);
        for m in 1..=max_mode {
            phase *= unit;
            a *= outer;
            b *= inner;
            if b < NEGLIGIBLE && a < NEGLIGIBLE {
                break;
            }
            modes.push(phase * (self.mass * (a - b) / (2.0 * m as f64)));
        }
        modes
    }
}

/// Positive disk measure: rings plus point atoms.
#[derive(Debug, Clone, PartialEq)]
pub struct DiskMeasure {
    rings: Vec<Ring>,
    atoms: Vec<Atom>,
}

impl DiskMeasure {
    pub fn new(rings: Vec<Ring>, atoms: Vec<Atom>) -> Self {
        Self { rings, atoms }
    }

    /// Unit atom at the origin: `Δ log|z|`.
    pub fn unit_atom() -> Self {
        Self::new(Vec::new(), vec![Atom::new(Complex64::new(0.0, 0.0), 1.0).expect("valid atom")])
    }

    pub fn rings(&self) -> &[Ring] {
        &self.rings
    }

    pub fn atoms(&self) -> &[Atom] {
        &self.atoms
    }

    pub fn total_mass(&self) -> f64 {
        self.rings.iter().map(Ring::mass).sum::<f64>() + self.atoms.iter().map(|a| a.mass).sum::<f64>()
    }

    pub fn is_empty(&self) -> bool {
        self.rings.is_empty() && self.atoms.is_empty()
    }

    pub fn scaled(&self, factor: f64) -> Result<Self> {
        let rings = self
            .rings
            .iter()
            .map(|r| Ring::new(r.radius, r.density.iter().map(|d| d * factor).collect()))
            .collect::<Result<Vec<_>>>()?;
        let atoms = self
            .atoms
            .iter()
            .map(|a| Atom::new(a.point, a.mass * factor))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(rings, atoms))
    }

    /// Every ring point and atom as `(point, mass)`; ring points carry the
    /// trapezoidal share of their ring.
    pub fn discrete_points(&self) -> Vec<(Complex64, f64)> {
        let mut out: Vec<(Complex64, f64)> = self.rings.iter().flat_map(|r| r.discrete_points()).collect();
        out.extend(self.atoms.iter().map(|a| (a.point, a.mass)));
        out
    }

    /// `∫ g dm`, rings by the equal-weight rule on their own grids.
    pub fn integrate(&self, g: impl Fn(Complex64) -> f64) -> f64 {
        self.discrete_points().into_iter().map(|(z, m)| m * g(z)).sum()
    }

    /// Distinct moduli of the support (ring radii and atom moduli), sorted.
    pub fn support_radii(&self) -> Vec<f64> {
        let mut radii: Vec<f64> = self
            .rings
            .iter()
            .map(|r| r.radius)
            .chain(self.atoms.iter().map(|a| a.point.norm()))
            .filter(|&r| r > 0.0)
            .collect();
        radii.sort_by(|a, b| a.partial_cmp(b).expect("finite radii"));
        radii.dedup_by(|a, b| (*a - *b).abs() < 1e-14);
        radii
    }

    /// `Σ mass · (1 - |w|)/(1 + |w|)`: the smallest value the boundary weight
    /// can take, from the minimum of the Poisson kernel over each support radius.
    pub fn poisson_lower_bound(&self) -> f64 {
        let ring_part: f64 = self
            .rings
            .iter()
            .map(|r| r.mass() * (1.0 - r.radius) / (1.0 + r.radius))
            .sum();
        let atom_part: f64 = self
            .atoms
            .iter()
            .map(|a| {
                let s = a.point.norm();
                a.mass * (1.0 - s) / (1.0 + s)
            })
            .sum();
        ring_part + atom_part
    }
}

/// `α(e^{iθ}) = ∫ P(z, e^{iθ}) dm(z)` sampled on `grid`.
pub fn boundary_weight(measure: &DiskMeasure, grid: CircleGrid) -> Result<Weight> {
    if measure.is_empty() || measure.total_mass() <= 0.0 {
        return Err(HardyError::EmptyMeasure);
    }
    let mut samples = vec![0.0; grid.len()];
    for ring in &measure.rings {
        for (s, v) in samples.iter_mut().zip(ring.poisson_smoothing(grid)) {
            *s += v;
        }
    }
    for atom in &measure.atoms {
        for (s, zeta) in samples.iter_mut().zip(grid.nodes()) {
            *s += atom.poisson(zeta);
        }
    }
    Weight::new(grid, samples)
}

/// Subharmonic exhaustion: the Green potential of a [`DiskMeasure`], with an
/// optional cap level per ring (`max(u_j, t_j)`).
#[derive(Debug, Clone, PartialEq)]
pub struct Exhaustion {
    measure: DiskMeasure,
    caps: Vec<Option<f64>>,
}

impl Exhaustion {
    pub fn new(measure: DiskMeasure, caps: Vec<Option<f64>>) -> Result<Self> {
        if measure.is_empty() {
            return Err(HardyError::EmptyMeasure);
        }
        if caps.len() != measure.rings.len() {
            return Err(HardyError::LengthMismatch {
                expected: measure.rings.len(),
                actual: caps.len(),
            });
        }
        if let Some(t) = caps.iter().flatten().find(|t| !(**t < 0.0)) {
            return Err(HardyError::InvalidMeasure(format!("cap level {t} must be negative")));
        }
        let mass = measure.total_mass();
        if mass > 1.0 + 1e-9 {
            return Err(HardyError::MassMismatch {
                expected: 1.0,
                actual: mass,
            });
        }
        Ok(Self { measure, caps })
    }

    pub fn uncapped(measure: DiskMeasure) -> Result<Self> {
        let caps = vec![None; measure.rings.len()];
        Self::new(measure, caps)
    }

    /// `u = log|z|`.
    pub fn classical() -> Self {
        Self::uncapped(DiskMeasure::unit_atom()).expect("unit atom is an exhaustion")
    }

    pub fn measure(&self) -> &DiskMeasure {
        &self.measure
    }

    pub fn caps(&self) -> &[Option<f64>] {
        &self.caps
    }

    pub fn has_caps(&self) -> bool {
        self.caps.iter().any(Option::is_some)
    }

    pub fn is_e1(&self) -> bool {
        (self.measure.total_mass() - 1.0).abs() <= 1e-9
    }

    /// Potential and the potential without caps, at one point.
    pub fn potential_pair(&self, z: Complex64) -> (f64, f64) {
        let atoms: f64 = self.measure.atoms.iter().map(|a| a.potential(z)).sum();
        let (mut capped, mut raw) = (atoms, atoms);
        for (ring, cap) in self.measure.rings.iter().zip(&self.caps) {
            let v = ring.potential(z);
            raw += v;
            capped += cap.map_or(v, |t| v.max(t));
        }
        (capped, raw)
    }

    /// Capped and uncapped potentials on the circle `|z| = rho` at `n` equally
    /// spaced angles, band-limited to the modes the grid resolves.
    pub fn potential_on_circle(&self, rho: f64, n: usize) -> (Vec<f64>, Vec<f64>) {
        let mut capped = vec![0.0; n];
        let mut raw = vec![0.0; n];
        for (ring, cap) in self.measure.rings.iter().zip(&self.caps) {
            let values = synthesize_real(&ring.potential_modes(rho), n);
            for k in 0..n {
                raw[k] += values[k];
                capped[k] += cap.map_or(values[k], |t| values[k].max(t));
            }
        }
        for atom in &self.measure.atoms {
            let values = synthesize_real(&atom.potential_modes(rho, n / 2 - 1), n);
            for k in 0..n {
                raw[k] += values[k];
                capped[k] += values[k];
            }
        }
        (capped, raw)
    }

    /// Radial profile for radial exhaustions, `None` otherwise.
    fn radial_profile(&self) -> Option<impl Fn(f64) -> f64 + '_> {
        let radial = self.measure.atoms.iter().all(|a| a.point.norm() < 1e-14)
            && self.measure.rings.iter().all(Ring::is_uniform);
        radial.then_some(move |rho: f64| -> f64 {
            let atoms: f64 = self.measure.atoms.iter().map(|a| a.mass * rho.ln()).sum();
            let rings: f64 = self
                .measure
                .rings
                .iter()
                .zip(&self.caps)
                .map(|(ring, cap)| {
                    let v = ring.mass() * rho.max(ring.radius).ln();
                    cap.map_or(v, |t| v.max(t))
                })
                .sum();
            atoms + rings
        })
    }

    pub fn is_radial(&self) -> bool {
        self.radial_profile().is_some()
    }
}

/// Green potential `u(z)` of the exhaustion; `-∞` exactly at an atom.
pub fn green_potential(exhaustion: &Exhaustion, z: Complex64) -> Result<f64> {
    if z.norm() >= 1.0 {
        return Err(HardyError::outside(z));
    }
    Ok(exhaustion.potential_pair(z).0)
}

/// Single ring at radius `r` carrying `α dλ`; its boundary weight is the
/// Poisson smoothing `α_r`.
pub fn ring_exhaustion(weight: &Weight, r: f64) -> Result<Exhaustion> {
    if !(r > 0.0 && r < 1.0) {
        return Err(HardyError::InvalidRadius(r));
    }
    if (weight.mass() - 1.0).abs() > 1e-9 {
        return Err(HardyError::MassMismatch {
            expected: 1.0,
            actual: weight.mass(),
        });
    }
    Exhaustion::uncapped(DiskMeasure::new(vec![Ring::new(r, weight.samples().to_vec())?], Vec::new()))
}

/// Default radii `r_j = 1 - 2^{-j-1}`, `j = 1..=layers`.
pub fn default_stack_radii(layers: usize) -> Vec<f64> {
    (1..=layers).map(|j| 1.0 - 0.5f64.powi(j as i32 + 1)).collect()
}

/// Cap level `-2^{-j}` of layer `j` (1-based).
pub fn stack_cap(j: usize) -> f64 {
    -(0.5f64.powi(j as i32))
}

/// Increasing continuous approximations `α_j = (1 - 2^{-j}) α`, `j < J`, of a
/// mass-1 target, truncated at `J` layers by letting `α_J = α`. Returns the
/// stack and the mass absorbed by the final layer.
pub fn approximating_stack(target: &Weight, layers: usize) -> Result<(Vec<Weight>, f64)> {
    if layers == 0 {
        return Err(HardyError::InvalidInput("stack needs at least one layer".into()));
    }
    let mut stack = Vec::with_capacity(layers);
    for j in 1..layers {
        stack.push(target.scaled(1.0 - 0.5f64.powi(j as i32))?);
    }
    stack.push(target.clone());
    let absorbed = target.mass() * 0.5f64.powi(layers as i32 - 1);
    Ok((stack, absorbed))
}

/// Layers `β_j = α_j - α_{j-1}` placed on rings `r_j` with caps `-2^{-j}`.
pub fn lsc_stack_to_exhaustion(stack: &[Weight], radii: &[f64]) -> Result<Exhaustion> {
    if stack.is_empty() {
        return Err(HardyError::EmptyMeasure);
    }
    if stack.len() != radii.len() {
        return Err(HardyError::LengthMismatch {
            expected: stack.len(),
            actual: radii.len(),
        });
    }
    if radii.windows(2).any(|w| !(w[0] < w[1])) {
        return Err(HardyError::InvalidInput("stack radii must be strictly increasing".into()));
    }
    let grid = stack[0].grid();
    let total = stack.last().expect("non-empty").mass();
    if (total - 1.0).abs() > 1e-9 {
        return Err(HardyError::MassMismatch {
            expected: 1.0,
            actual: total,
        });
    }
    let mut rings = Vec::with_capacity(stack.len());
    let mut previous = vec![0.0; grid.len()];
    for (j, (layer, &r)) in stack.iter().zip(radii).enumerate() {
        if layer.grid() != grid {
            return Err(HardyError::LengthMismatch {
                expected: grid.len(),
                actual: layer.grid().len(),
            });
        }
        let beta: Vec<f64> = layer.samples().iter().zip(&previous).map(|(a, b)| a - b).collect();
        let min_difference = beta.iter().copied().fold(f64::INFINITY, f64::min);
        if !(min_difference > 0.0) {
            return Err(HardyError::NonMonotoneStack {
                layer: j + 1,
                min_difference,
            });
        }
        rings.push(Ring::new(r, beta)?);
        previous = layer.samples().to_vec();
    }
    let caps = (1..=rings.len()).map(|j| Some(stack_cap(j))).collect();
    Exhaustion::new(DiskMeasure::new(rings, Vec::new()), caps)
}

/// Level circle of a radial exhaustion and the mass of `Δu` it encloses.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SweepCircle {
    pub radius: f64,
    pub mass: f64,
}

impl SweepCircle {
    /// `∫ g dμ_{u,r}` for the uniform sweep measure, on `grid` angles.
    pub fn integrate(&self, grid: CircleGrid, g: impl Fn(Complex64) -> f64) -> f64 {
        let mean: f64 = grid.nodes().map(|z| g(z * self.radius)).sum::<f64>() / grid.len() as f64;
        self.mass * mean
    }
}

pub fn radial_sweep_measure(exhaustion: &Exhaustion, level: f64) -> Result<SweepCircle> {
    let profile = exhaustion
        .radial_profile()
        .ok_or_else(|| HardyError::NotRadial("atoms off the origin or non-uniform rings".into()))?;
    for (ring, cap) in exhaustion.measure.rings.iter().zip(&exhaustion.caps) {
        if let Some(t) = cap {
            if ring.mass() * ring.radius.ln() < *t {
                return Err(HardyError::NotRadial(format!(
                    "cap {t} is active on the ring of radius {}",
                    ring.radius
                )));
            }
        }
    }
    let min = profile(0.0);
    if !(level > min && level < 0.0) {
        return Err(HardyError::LevelOutOfRange { level, min });
    }
    let (mut lo, mut hi) = (0.0f64, 1.0f64);
    while hi - lo > 1e-13 {
        let mid = 0.5 * (lo + hi);
        if profile(mid) < level {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let radius = 0.5 * (lo + hi);
    let mass = exhaustion
        .measure
        .rings
        .iter()
        .filter(|r| r.radius < radius)
        .map(Ring::mass)
        .sum::<f64>()
        + exhaustion.measure.atoms.iter().map(|a| a.mass).sum::<f64>();
    Ok(SweepCircle { radius, mass })
}

/// Largest potential on an interior polar grid and smallest potential on the
/// circle `|z| = near_boundary`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ExhaustionCheck {
    pub max_interior: f64,
    pub min_near_boundary: f64,
}

pub fn check_exhaustion_property(exhaustion: &Exhaustion, near_boundary: f64) -> ExhaustionCheck {
    let n = 256;
    let mut max_interior = f64::NEG_INFINITY;
    for i in 1..=40 {
        let rho = near_boundary * i as f64 / 40.0;
        let (capped, _) = exhaustion.potential_on_circle(rho, n);
        max_interior = capped.iter().copied().fold(max_interior, f64::max);
    }
    let (edge, _) = exhaustion.potential_on_circle(near_boundary, n);
    ExhaustionCheck {
        max_interior,
        min_near_boundary: edge.iter().copied().fold(f64::INFINITY, f64::min),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RingFile {
    pub r: f64,
    pub density: Vec<f64>,
    pub cap: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AtomFile {
    pub re: f64,
    pub im: f64,
    pub mass: f64,
}

/// On-disk exhaustion description.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExhaustionFile {
    #[serde(default)]
    pub rings: Vec<RingFile>,
    #[serde(default)]
    pub atoms: Vec<AtomFile>,
}

impl ExhaustionFile {
    pub fn from_exhaustion(e: &Exhaustion) -> Self {
        Self {
            rings: e
                .measure
                .rings
                .iter()
                .zip(&e.caps)
                .map(|(ring, cap)| RingFile {
                    r: ring.radius,
                    density: ring.density.clone(),
                    cap: *cap,
                })
                .collect(),
            atoms: e
                .measure
                .atoms
                .iter()
                .map(|a| AtomFile {
                    re: a.point.re,
                    im: a.point.im,
                    mass: a.mass,
                })
                .collect(),
        }
    }

    pub fn to_exhaustion(&self) -> Result<Exhaustion> {
        let rings = self
            .rings
            .iter()
            .map(|r| Ring::new(r.r, r.density.clone()))
            .collect::<Result<Vec<_>>>()?;
        let atoms = self
            .atoms
            .iter()
            .map(|a| Atom::new(Complex64::new(a.re, a.im), a.mass))
            .collect::<Result<Vec<_>>>()?;
        let caps = self.rings.iter().map(|r| r.cap).collect();
        Exhaustion::new(DiskMeasure::new(rings, atoms), caps)
    }
}
