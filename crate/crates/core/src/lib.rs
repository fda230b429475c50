//! Numerical toolkit for weighted Hardy spaces on the unit disk.
//!
//! Boundary data lives on a uniform [`circle::CircleGrid`]; weights become
//! outer functions, exhaustions produce area norms, and the higher-level
//! modules solve distance, interpolation, and corona problems on top of them.

// `!(x > 0.0)` rejects NaN along with non-positive values.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod analytic;
pub mod carleson;
pub mod circle;
pub mod corona;
pub mod duality;
pub mod error;
pub mod exhaustion;
pub mod interpolation;
pub mod norms;
pub mod quadrature;
pub mod suite;
pub mod weights;

pub use analytic::{AnalyticFn, BlaschkeProduct, Holomorphic, KernelExpansion, PowerSeries};
pub use circle::{BoundarySamples, CircleGrid, FourierSeries};
pub use error::{HardyError, Result};
pub use exhaustion::{Atom, DiskMeasure, Exhaustion, Ring};
pub use weights::{OuterFunction, Weight};
