//! Third-order WENO interpolation.
//!
//! On `[x_i, x_{i+1}]` the two linear candidates on `{x_{i-1}, x_i}` and
//! `{x_i, x_{i+1}}` are blended with nonlinear weights built from
//! indicators that use all three points `x_{i-1}, x_i, x_{i+1}`, with
//! exponent `3/2`. With linear weights the blend is the quadratic through
//! the three points.
//!
//! The first interval has no left candidate and falls back to linear
//! interpolation. Every other interval, including the last one, has a full
//! stencil.

use crate::error::{InterpError, Result};
use crate::grid::{Grid, Location, SampleSet};
use crate::interpolant::Interpolant;
use crate::lagrange::linear;
use crate::weights::{Exponent, WenoWeights};

pub const EXPONENT: Exponent = Exponent::ThreeHalves;

fn check_interior(g: &Grid, interval: usize) -> Result<()> {
    if interval == 0 || interval + 1 >= g.len() {
        return Err(InterpError::BoundaryInterval { interval });
    }
    Ok(())
}

/// `(γ1, γ2)` on interval `i` at `x`.
pub fn weno3_linear_weights(g: &Grid, interval: usize, x: f64) -> Result<[f64; 2]> {
    check_interior(g, interval)?;
    let xs = g.nodes();
    let (xm, xp) = (xs[interval - 1], xs[interval + 1]);
    let span = xp - xm;
    Ok([-(x - xp) / span, (x - xm) / span])
}

/// Indicators for equispaced data `(y_{i-1}, y_i, y_{i+1})`.
pub fn weno3_smoothness_uniform(ym: f64, y0: f64, yp: f64) -> [f64; 2] {
    let outer = (yp - ym).abs();
    let b1 = outer - (4.0 * y0 - 3.0 * ym - yp).abs();
    let b2 = outer - (4.0 * y0 - ym - 3.0 * yp).abs();
    [0.25 * b1 * b1, 0.25 * b2 * b2]
}

/// Three-point first derivatives at `x_{i-1}, x_i, x_{i+1}` from the
/// spacings `h_{i-1}, h_i` and slopes `d_{i-1}, d_i`.
pub fn three_point_derivatives(h_prev: f64, h: f64, d_prev: f64, d: f64) -> [f64; 3] {
    let sum = h_prev + h;
    [
        (2.0 * h_prev + h) / sum * d_prev - h_prev / sum * d,
        h / sum * d_prev + h_prev / sum * d,
        -h / sum * d_prev + (h_prev + 2.0 * h) / sum * d,
    ]
}

/// Indicators on a general grid from three-point derivatives.
pub fn weno3_smoothness_nonuniform(s: &SampleSet, interval: usize) -> Result<[f64; 2]> {
    check_interior(s.grid(), interval)?;
    let h = s.spacings();
    let d = s.slopes();
    let (h_prev, h_cur) = (h[interval - 1], h[interval]);
    let [dm, d0, dp] = three_point_derivatives(h_prev, h_cur, d[interval - 1], d[interval]);
    let b1 = d0.abs() - dm.abs();
    let b2 = dp.abs() - d0.abs();
    Ok([h_cur * h_cur * b1 * b1, h_prev * h_prev * b2 * b2])
}

/// Indicators for interval `i`, using the uniform formula when
/// `h_{i-1} = h_i` to relative `1e-12`.
pub fn weno3_smoothness(s: &SampleSet, interval: usize) -> Result<[f64; 2]> {
    check_interior(s.grid(), interval)?;
    if s.grid().is_locally_uniform(interval - 1, interval) {
        let y = s.values();
        Ok(weno3_smoothness_uniform(y[interval - 1], y[interval], y[interval + 1]))
    } else {
        weno3_smoothness_nonuniform(s, interval)
    }
}

/// Weight diagnostics at `x`; `None` on the linear-fallback interval.
pub fn weno3_weights(s: &SampleSet, x: f64) -> Result<Option<WenoWeights<2>>> {
    let interval = s.grid().interval_of(x)?;
    if interval == 0 {
        return Ok(None);
    }
    let linear_w = weno3_linear_weights(s.grid(), interval, x)?;
    let beta = weno3_smoothness(s, interval)?;
    Ok(Some(WenoWeights::compute(linear_w, beta, EXPONENT)))
}

fn eval_interval(s: &SampleSet, interval: usize, x: f64) -> Result<f64> {
    let xs = s.nodes();
    let ys = s.values();
    let i = interval;
    let right = linear(xs[i], ys[i], xs[i + 1], ys[i + 1], x);
    if i == 0 {
        return Ok(right);
    }
    let left = linear(xs[i - 1], ys[i - 1], xs[i], ys[i], x);
    let w = WenoWeights::compute(weno3_linear_weights(s.grid(), i, x)?, weno3_smoothness(s, i)?, EXPONENT);
    Ok(w.combine([left, right]))
}

/// Third-order WENO value at `x`.
pub fn weno3_eval(s: &SampleSet, x: f64) -> Result<f64> {
    match s.grid().locate(x)? {
        Location::Node(k) => Ok(s.values()[k]),
        Location::Interval(i) => eval_interval(s, i, x),
    }
}

#[derive(Debug, Clone)]
pub struct Weno3 {
    samples: SampleSet,
}

impl Weno3 {
    pub fn new(samples: SampleSet) -> Result<Self> {
        if samples.len() < 2 {
            return Err(InterpError::TooFewPoints { required: 2, got: samples.len() });
        }
        Ok(Self { samples })
    }

    pub fn weights(&self, x: f64) -> Result<Option<WenoWeights<2>>> {
        weno3_weights(&self.samples, x)
    }
}

impl Interpolant for Weno3 {
    fn samples(&self) -> &SampleSet {
        &self.samples
    }

    fn eval(&self, x: f64) -> Result<f64> {
        weno3_eval(&self.samples, x)
    }
}
