//! Input files and the CLI error type.

use std::fmt;
use std::path::Path;

use hardy_forge::interpolation::{ComplexJson, InterpolationProblem, ProblemFile};
use hardy_forge::exhaustion::ExhaustionFile;
use hardy_forge::weights::WeightFile;
use hardy_forge::{BoundarySamples, CircleGrid, Exhaustion, HardyError, PowerSeries, Weight};
use num_complex::Complex64;
use serde::de::DeserializeOwned;
use serde::Deserialize;

/// Input error with a stable code; maps to exit status 1.
#[derive(Debug)]
pub struct InputError {
    pub code: &'static str,
    pub message: String,
}

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "error[{}]: {}", self.code, self.message)
    }
}

impl From<HardyError> for InputError {
    fn from(e: HardyError) -> Self {
        Self {
            code: e.code(),
            message: e.to_string(),
        }
    }
}

impl InputError {
    pub fn new(code: &'static str, message: impl Into<String>) -> Self {
        Self {
            code,
            message: message.into(),
        }
    }
}

pub type CliResult<T> = std::result::Result<T, InputError>;

pub fn read_json<T: DeserializeOwned>(path: &Path) -> CliResult<T> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| InputError::new("E_IO", format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| {
        let code = if e.is_data() { "E_SCHEMA" } else { "E_JSON" };
        InputError::new(code, format!("{}: {e}", path.display()))
    })
}

pub fn load_weight(path: &Path) -> CliResult<Weight> {
    Ok(read_json::<WeightFile>(path)?.to_weight()?)
}

/// Weight from a file, or `α ≡ 1` on `grid` when no file is given.
pub fn weight_or_classical(path: Option<&Path>, grid: CircleGrid) -> CliResult<Weight> {
    match path {
        Some(p) => load_weight(p),
        None => Ok(Weight::classical(grid)),
    }
}

pub fn load_exhaustion(path: &Path) -> CliResult<Exhaustion> {
    Ok(read_json::<ExhaustionFile>(path)?.to_exhaustion()?)
}

pub fn load_problem(path: &Path) -> CliResult<InterpolationProblem> {
    Ok(read_json::<ProblemFile>(path)?.to_problem()?)
}

/// `{"coeffs": [{"re", "im"}, …]}`: Taylor coefficients of an analytic function.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FunctionFile {
    pub coeffs: Vec<ComplexJson>,
}

pub fn load_function(path: &Path) -> CliResult<PowerSeries> {
    let file: FunctionFile = read_json(path)?;
    if file.coeffs.is_empty() {
        return Err(InputError::new("E_SCHEMA", "function needs at least one coefficient"));
    }
    Ok(PowerSeries::new(file.coeffs.into_iter().map(Complex64::from).collect()))
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Mode {
    pub m: i64,
    pub re: f64,
    pub im: f64,
}

/// Boundary function: either trigonometric modes or raw samples on the grid.
#[derive(Debug, Deserialize)]
#[serde(untagged)]
pub enum BoundaryFile {
    Modes { modes: Vec<Mode> },
    Samples { samples: Vec<ComplexJson> },
}

pub fn load_boundary(path: &Path, grid: CircleGrid) -> CliResult<BoundarySamples> {
    match read_json::<BoundaryFile>(path)? {
        BoundaryFile::Modes { modes } => Ok(BoundarySamples::from_angle_fn(grid, |t| {
            modes
                .iter()
                .map(|m| Complex64::new(m.re, m.im) * Complex64::from_polar(1.0, m.m as f64 * t))
                .sum()
        })),
        BoundaryFile::Samples { samples } => {
            Ok(BoundarySamples::new(grid, samples.into_iter().map(Complex64::from).collect())?)
        }
    }
}
