//! Error measurement, convergence studies, figure data and the optical-depth
//! quadrature demo.

mod convergence;
mod figures;
mod format;
mod measure;
mod quadrature;

use std::fmt;
use std::str::FromStr;

use crate::error::{InterpError, Result};
use crate::grid::Grid;
use crate::testfuncs::{TestFunction, DOMAIN};

pub use convergence::{convergence_study, fit_order, pair_orders, reports_to_json, ConvergenceReport};
pub use figures::{figure_data, CurveRow, FigureCurve, CSV_HEADER};
pub use format::format_float;
pub use measure::{interpolation_error, measure_error, ErrorMeasurement};
pub use quadrature::{optical_depth_simpson, OpticalDepth};

/// Sample points per interval used for error norms.
pub const NORM_DENSITY: usize = 16;
/// Sample points per interval used for figure curves.
pub const FIGURE_DENSITY: usize = 64;
/// Grid sizes of the order-of-accuracy study (nested interval doubling).
pub const DEFAULT_SIZES: [usize; 5] = [17, 33, 65, 129, 257];
/// Sizes for discontinuous functions: the jump at 0 falls inside a cell.
pub const DISCONTINUOUS_SIZES: [usize; 5] = [16, 32, 64, 128, 256];

/// Default study sizes for `function`.
pub fn default_sizes(function: TestFunction) -> &'static [usize] {
    if function.is_smooth() {
        &DEFAULT_SIZES
    } else {
        &DISCONTINUOUS_SIZES
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Norm {
    L1,
    L2,
    Linf,
}

impl Norm {
    pub fn id(self) -> &'static str {
        match self {
            Norm::L1 => "L1",
            Norm::L2 => "L2",
            Norm::Linf => "Linf",
        }
    }
}

impl fmt::Display for Norm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Norm {
    type Err = InterpError;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "l1" => Ok(Norm::L1),
            "l2" => Ok(Norm::L2),
            "linf" | "max" => Ok(Norm::Linf),
            _ => Err(InterpError::UnknownNorm(s.to_string())),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GridKind {
    Uniform,
    Random,
}

impl GridKind {
    pub fn id(self) -> &'static str {
        match self {
            GridKind::Uniform => "uniform",
            GridKind::Random => "random",
        }
    }
}

impl fmt::Display for GridKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for GridKind {
    type Err = InterpError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "uniform" => Ok(GridKind::Uniform),
            "random" | "nonuniform" => Ok(GridKind::Random),
            _ => Err(InterpError::UnknownGridType(s.to_string())),
        }
    }
}

/// A grid on the benchmark domain `[-1, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GridSpec {
    pub kind: GridKind,
    pub points: usize,
    pub seed: u64,
}

impl GridSpec {
    pub fn new(kind: GridKind, points: usize, seed: u64) -> Self {
        Self { kind, points, seed }
    }

    pub fn build(&self) -> Result<Grid> {
        let (a, b) = DOMAIN;
        match self.kind {
            GridKind::Uniform => Grid::uniform(a, b, self.points),
            GridKind::Random => Grid::random_nonuniform(a, b, self.points, self.seed),
        }
    }
}
