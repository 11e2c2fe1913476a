//! Nonlinear one-dimensional interpolation: ENO, third-order WENO and a
//! fourth-order WENO on uniform and nonuniform grids, together with classic
//! baselines and a benchmarking harness.
//!
//! ```
//! use weno_core::{Grid, sample, weno4_eval};
//!
//! let grid = Grid::uniform(-1.0, 1.0, 16).unwrap();
//! let data = sample(&grid, |x| if x < 0.0 { 0.0 } else { 4.0 }).unwrap();
//! let y = weno4_eval(&data, 0.01).unwrap();
//! assert!((-0.2..=4.2).contains(&y));
//! ```

pub mod baselines;
pub mod divided_diff;
pub mod eno;
pub mod error;
pub mod grid;
pub mod harness;
pub mod interpolant;
mod lagrange;
pub mod method;
pub mod testfuncs;
pub mod weights;
pub mod weno3;
pub mod weno4;
pub mod weno4_alt;

pub use baselines::{
    cubic_lagrange_eval, monotonic_hermite_eval, natural_cubic_spline_build, CubicLagrange, CubicSpline,
    MonotoneHermite, SplineEnd,
};
pub use divided_diff::{divided_difference, DividedDifferenceTable};
pub use eno::{eno_select_stencil, EnoInterpolant, EnoStencil};
pub use error::{InterpError, Result};
pub use grid::{sample, Grid, Location, SampleSet};
pub use interpolant::Interpolant;
pub use lagrange::lagrange_eval;
pub use method::Method;
pub use testfuncs::TestFunction;
pub use weights::{Exponent, WenoWeights, EPSILON};
pub use weno3::{weno3_eval, Weno3};
pub use weno4::{weno4_eval, DerivativeQuad, Weno4};
pub use weno4_alt::{weno4alt_eval, IndicatorMode, Weno4Alt};
