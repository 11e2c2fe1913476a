use crate::error::{InterpError, Result};
use crate::grid::{Location, SampleSet};
use crate::interpolant::Interpolant;
use crate::lagrange::lagrange_eval;

/// Cubic through `{x_{i-1}, ..., x_{i+2}}` on interval `i`, shifted inward
/// at the ends of the grid.
pub fn cubic_lagrange_eval(s: &SampleSet, x: f64) -> Result<f64> {
    let n = s.len();
    if n < 4 {
        return Err(InterpError::TooFewPoints { required: 4, got: n });
    }
    let i = match s.grid().locate(x)? {
        Location::Node(k) => return Ok(s.values()[k]),
        Location::Interval(i) => i,
    };
    let left = i.saturating_sub(1).min(n - 4);
    Ok(lagrange_eval(&s.nodes()[left..left + 4], &s.values()[left..left + 4], x))
}

#[derive(Debug, Clone)]
pub struct CubicLagrange {
    samples: SampleSet,
}

impl CubicLagrange {
    pub fn new(samples: SampleSet) -> Result<Self> {
        if samples.len() < 4 {
            return Err(InterpError::TooFewPoints { required: 4, got: samples.len() });
        }
        Ok(Self { samples })
    }
}

impl Interpolant for CubicLagrange {
    fn samples(&self) -> &SampleSet {
        &self.samples
    }

    fn eval(&self, x: f64) -> Result<f64> {
        cubic_lagrange_eval(&self.samples, x)
    }
}
