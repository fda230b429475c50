use thiserror::Error;

/// Errors raised by the numerical routines.
///
/// Every variant carries a stable short code (see [`HardyError::code`]) that the
/// CLI prints alongside the message.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum HardyError {
    #[error("grid size {0} must be a power of two and at least 256")]
    InvalidGridSize(usize),

    #[error("length mismatch: expected {expected}, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },

    #[error("point {re}+{im}i is not in the open unit disk")]
    OutsideDisk { re: f64, im: f64 },

    #[error("series degree {degree} exceeds the limit {max} for this grid")]
    DegreeTooLarge { degree: usize, max: usize },

    #[error("weight sample {index} is {value}, weights must be strictly positive")]
    NonPositiveWeight { index: usize, value: f64 },

    #[error("radius {0} must lie in (0, 1)")]
    InvalidRadius(f64),

    #[error("measure has no mass")]
    EmptyMeasure,

    #[error("invalid measure: {0}")]
    InvalidMeasure(String),

    #[error("weight stack is not increasing at layer {layer} (min layer difference {min_difference})")]
    NonMonotoneStack { layer: usize, min_difference: f64 },

    #[error("mass mismatch: expected {expected}, got {actual}")]
    MassMismatch { expected: f64, actual: f64 },

    #[error("level {level} is outside the range ({min}, 0) of the exhaustion")]
    LevelOutOfRange { level: f64, min: f64 },

    #[error("exhaustion is not radial: {0}")]
    NotRadial(String),

    #[error("exponent p = {0} is not allowed here")]
    InvalidExponent(f64),

    #[error("points {0} and {1} coincide")]
    DuplicatePoints(usize, usize),

    #[error("index {index} out of range for {len} points")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("Gram matrix is ill-conditioned (condition number {condition:e})")]
    IllConditioned { condition: f64 },

    #[error("linear solve failed: {0}")]
    SolveFailed(String),

    #[error("invalid corona data: {0}")]
    InvalidCoronaData(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),
}

impl HardyError {
    pub fn code(&self) -> &'static str {
        match self {
            HardyError::InvalidGridSize(_) => "E_GRID",
            HardyError::LengthMismatch { .. } => "E_LENGTH",
            HardyError::OutsideDisk { .. } => "E_DISK",
            HardyError::DegreeTooLarge { .. } => "E_DEGREE",
            HardyError::NonPositiveWeight { .. } => "E_WEIGHT",
            HardyError::InvalidRadius(_) => "E_RADIUS",
            HardyError::EmptyMeasure => "E_EMPTY_MEASURE",
            HardyError::InvalidMeasure(_) => "E_MEASURE",
            HardyError::NonMonotoneStack { .. } => "E_STACK",
            HardyError::MassMismatch { .. } => "E_MASS",
            HardyError::LevelOutOfRange { .. } => "E_LEVEL",
            HardyError::NotRadial(_) => "E_RADIAL",
            HardyError::InvalidExponent(_) => "E_EXPONENT",
            HardyError::DuplicatePoints(..) => "E_DUPLICATE",
            HardyError::IndexOutOfRange { .. } => "E_INDEX",
            HardyError::IllConditioned { .. } => "E_CONDITION",
            HardyError::SolveFailed(_) => "E_SOLVE",
            HardyError::InvalidCoronaData(_) => "E_CORONA",
            HardyError::InvalidInput(_) => "E_INPUT",
        }
    }

    pub(crate) fn outside(z: num_complex::Complex64) -> Self {
        HardyError::OutsideDisk { re: z.re, im: z.im }
    }
}

pub type Result<T> = std::result::Result<T, HardyError>;
