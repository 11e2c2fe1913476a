//! Method identifiers and a uniform way to build interpolants from them.

use std::fmt;
use std::str::FromStr;

use crate::baselines::{CubicLagrange, CubicSpline, MonotoneHermite};
use crate::eno::EnoInterpolant;
use crate::error::{InterpError, Result};
use crate::grid::SampleSet;
use crate::interpolant::Interpolant;
use crate::weno3::Weno3;
use crate::weno4::Weno4;
use crate::weno4_alt::Weno4Alt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Eno3,
    Weno3,
    Weno4,
    Weno4Alt,
    Cubic,
    /// Not-a-knot cubic spline.
    Spline,
    /// Natural cubic spline.
    SplineNatural,
    Hermite,
}

impl Method {
    pub const ALL: [Method; 8] = [
        Method::Eno3,
        Method::Weno3,
        Method::Spline,
        Method::Cubic,
        Method::Hermite,
        Method::Weno4,
        Method::Weno4Alt,
        Method::SplineNatural,
    ];

    /// The six methods compared in the order-of-accuracy table.
    pub const TABLE: [Method; 6] =
        [Method::Eno3, Method::Weno3, Method::Spline, Method::Cubic, Method::Hermite, Method::Weno4];

    pub fn id(self) -> &'static str {
        match self {
            Method::Eno3 => "eno3",
            Method::Weno3 => "weno3",
            Method::Weno4 => "weno4",
            Method::Weno4Alt => "weno4alt",
            Method::Cubic => "cubic",
            Method::Spline => "spline",
            Method::SplineNatural => "spline_natural",
            Method::Hermite => "hermite",
        }
    }

    /// Smallest sample count the method accepts.
    pub fn min_points(self) -> usize {
        match self {
            Method::Eno3 | Method::Spline | Method::SplineNatural => 3,
            Method::Cubic => 4,
            Method::Weno3 | Method::Weno4 | Method::Weno4Alt | Method::Hermite => 2,
        }
    }

    pub fn build(self, samples: SampleSet) -> Result<Box<dyn Interpolant>> {
        Ok(match self {
            Method::Eno3 => Box::new(EnoInterpolant::new(samples, 3)?),
            Method::Weno3 => Box::new(Weno3::new(samples)?),
            Method::Weno4 => Box::new(Weno4::new(samples)?),
            Method::Weno4Alt => Box::new(Weno4Alt::new(samples)?),
            Method::Cubic => Box::new(CubicLagrange::new(samples)?),
            Method::Spline => Box::new(CubicSpline::not_a_knot(samples)?),
            Method::SplineNatural => Box::new(CubicSpline::natural(samples)?),
            Method::Hermite => Box::new(MonotoneHermite::new(samples)?),
        })
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Method {
    type Err = InterpError;

    fn from_str(s: &str) -> Result<Self> {
        Method::ALL.into_iter().find(|m| m.id() == s).ok_or_else(|| InterpError::UnknownMethod(s.to_string()))
    }
}
