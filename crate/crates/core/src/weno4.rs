//! Fourth-order WENO interpolation.
//!
//! On `[x_i, x_{i+1}]` two quadratic candidates, on `{x_{i-1}, x_i, x_{i+1}}`
//! and `{x_i, x_{i+1}, x_{i+2}}`, are blended. Their linear weights
//!
//! ```text
//! γ2(x) = -(x - x_{i+2}) / (x_{i+2} - x_{i-1})
//! γ3(x) =  (x - x_{i-1}) / (x_{i+2} - x_{i-1})
//! ```
//!
//! reproduce the cubic through all four nodes. The smoothness indicators
//! compare consecutive differences of four-point first derivatives
//! `y'_{i-1}, ..., y'_{i+2}`:
//!
//! ```text
//! uniform:    β2 = 4 (|y'_{i+1} - y'_i| - |y'_i - y'_{i-1}|)^2
//!             β3 = 4 (|y'_{i+2} - y'_{i+1}| - |y'_{i+1} - y'_i|)^2
//! nonuniform: β2 = (h_i + h_{i+1})^2 (|y'_{i+1} - y'_i| / h_i - |y'_i - y'_{i-1}| / h_{i-1})^2
//!             β3 = (h_{i-1} + h_i)^2 (|y'_{i+2} - y'_{i+1}| / h_{i+1} - |y'_{i+1} - y'_i| / h_i)^2
//! ```
//!
//! When the three derivative differences share a sign, `β2 = β3` and the
//! scheme reduces to the four-point cubic. Across a jump the indicator of
//! the candidate containing it dominates and that candidate is switched off.
//!
//! Weights use `α = γ / (ε + β)`. The first and last intervals fall back to
//! the one-sided quadratic that fits inside the grid.

use crate::error::{InterpError, Result};
use crate::grid::{Grid, Location, SampleSet};
use crate::interpolant::Interpolant;
use crate::lagrange::{lagrange_eval, linear};
use crate::weights::{Exponent, WenoWeights};

pub const EXPONENT: Exponent = Exponent::One;

/// First-derivative approximations at the four nodes of `{x_{i-1}, ..., x_{i+2}}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DerivativeQuad {
    pub derivatives: [f64; 4],
    /// `H = h_{i-1} + h_i + h_{i+1}`.
    pub span: f64,
}

impl DerivativeQuad {
    /// `(y'_i - y'_{i-1}, y'_{i+1} - y'_i, y'_{i+2} - y'_{i+1})`.
    pub fn differences(&self) -> [f64; 3] {
        let d = &self.derivatives;
        [d[1] - d[0], d[2] - d[1], d[3] - d[2]]
    }
}

/// Four-point derivatives on an equispaced stencil with spacing `h`.
pub fn derivatives_uniform4(y: [f64; 4], h: f64) -> DerivativeQuad {
    const M: [[f64; 4]; 4] =
        [[-11.0, 18.0, -9.0, 2.0], [-2.0, -3.0, 6.0, -1.0], [1.0, -6.0, 3.0, 2.0], [-2.0, 9.0, -18.0, 11.0]];
    let mut derivatives = [0.0; 4];
    for (row, out) in M.iter().zip(derivatives.iter_mut()) {
        *out = row.iter().zip(y).map(|(m, v)| m * v).sum::<f64>() / (6.0 * h);
    }
    DerivativeQuad { derivatives, span: 3.0 * h }
}

/// The same derivatives expressed through the slopes `d_{i-1}, d_i, d_{i+1}`.
pub fn derivatives_uniform4_from_slopes(d: [f64; 3]) -> [f64; 4] {
    const M: [[f64; 3]; 4] = [[11.0, -7.0, 2.0], [2.0, 5.0, -1.0], [-1.0, 5.0, 2.0], [2.0, -7.0, 11.0]];
    M.map(|row| row.iter().zip(d).map(|(m, v)| m * v).sum::<f64>() / 6.0)
}

/// Consecutive derivative differences from the slopes, uniform spacing.
pub fn derivative_differences_uniform4(d: [f64; 3]) -> [f64; 3] {
    const M: [[f64; 3]; 3] = [[-9.0, 12.0, -3.0], [-3.0, 0.0, 3.0], [3.0, -12.0, 9.0]];
    M.map(|row| row.iter().zip(d).map(|(m, v)| m * v).sum::<f64>() / 6.0)
}

/// Four-point derivatives for spacings `h = (h_{i-1}, h_i, h_{i+1})` and
/// values `y = (y_{i-1}, ..., y_{i+2})`.
pub fn nonuniform_derivatives(h: [f64; 3], y: [f64; 4]) -> DerivativeQuad {
    let [a, b, c] = h;
    let span = a + b + c;
    // column denominators shared by the four rows
    let q0 = a * (a + b) * span;
    let q1 = a * b * (b + c);
    let q2 = (a + b) * b * c;
    let q3 = (b + c) * c * span;
    let [y0, y1, y2, y3] = y;

    let dm = -((2.0 * a + b) * span + a * (a + b)) / q0 * y0 + (a + b) * span / q1 * y1 - a * span / q2 * y2
        + a * (a + b) / q3 * y3;
    let d0 =
        -b * (b + c) / q0 * y0 + (b * (b + c) - a * (2.0 * b + c)) / q1 * y1 + a * (b + c) / q2 * y2 - a * b / q3 * y3;
    let d1 =
        b * c / q0 * y0 - c * (a + b) / q1 * y1 + ((a + 2.0 * b) * c - (a + b) * b) / q2 * y2 + (a + b) * b / q3 * y3;
    let d2 = -(b + c) * c / q0 * y0 + c * span / q1 * y1 - (b + c) * span / q2 * y2
        + ((2.0 * c + b) * span + c * (b + c)) / q3 * y3;
    DerivativeQuad { derivatives: [dm, d0, d1, d2], span }
}

fn check_interior(g: &Grid, interval: usize) -> Result<()> {
    if interval == 0 || interval + 2 >= g.len() {
        return Err(InterpError::BoundaryInterval { interval });
    }
    Ok(())
}

fn stencil_values(s: &SampleSet, i: usize) -> [f64; 4] {
    let y = s.values();
    [y[i - 1], y[i], y[i + 1], y[i + 2]]
}

fn stencil_spacings(s: &SampleSet, i: usize) -> [f64; 3] {
    let h = s.spacings();
    [h[i - 1], h[i], h[i + 1]]
}

/// Four-point derivatives around interval `i` on the sample grid.
pub fn derivatives_nonuniform4(s: &SampleSet, interval: usize) -> Result<DerivativeQuad> {
    check_interior(s.grid(), interval)?;
    Ok(nonuniform_derivatives(stencil_spacings(s, interval), stencil_values(s, interval)))
}

/// `(γ2, γ3)` on interval `i` at `x`.
pub fn weno4_linear_weights(g: &Grid, interval: usize, x: f64) -> Result<[f64; 2]> {
    check_interior(g, interval)?;
    let xs = g.nodes();
    let (xm, xpp) = (xs[interval - 1], xs[interval + 2]);
    let span = xpp - xm;
    Ok([-(x - xpp) / span, (x - xm) / span])
}

/// Uniform-grid indicators for values `y_{i-1}, ..., y_{i+2}` at spacing `h`.
pub fn weno4_smoothness_uniform(y: [f64; 4], h: f64) -> [f64; 2] {
    let [e1, e2, e3] = derivatives_uniform4(y, h).differences();
    let b2 = e2.abs() - e1.abs();
    let b3 = e3.abs() - e2.abs();
    [4.0 * b2 * b2, 4.0 * b3 * b3]
}

/// Nonuniform indicators from spacings and values.
pub fn nonuniform_indicators(h: [f64; 3], y: [f64; 4]) -> [f64; 2] {
    let [a, b, c] = h;
    let [e1, e2, e3] = nonuniform_derivatives(h, y).differences();
    let b2 = e2.abs() / b - e1.abs() / a;
    let b3 = e3.abs() / c - e2.abs() / b;
    [(b + c) * (b + c) * b2 * b2, (a + b) * (a + b) * b3 * b3]
}

pub fn weno4_smoothness_nonuniform(s: &SampleSet, interval: usize) -> Result<[f64; 2]> {
    check_interior(s.grid(), interval)?;
    Ok(nonuniform_indicators(stencil_spacings(s, interval), stencil_values(s, interval)))
}

/// Indicators for interval `i`, uniform formula when `h_{i-1} = h_i = h_{i+1}`
/// to relative `1e-12`.
pub fn weno4_smoothness(s: &SampleSet, interval: usize) -> Result<[f64; 2]> {
    check_interior(s.grid(), interval)?;
    if s.grid().is_locally_uniform(interval - 1, interval + 1) {
        Ok(weno4_smoothness_uniform(stencil_values(s, interval), s.spacings()[interval]))
    } else {
        weno4_smoothness_nonuniform(s, interval)
    }
}

/// Quadratic candidates `(q2(x), q3(x))` on interval `i`.
pub fn weno4_candidates(s: &SampleSet, interval: usize, x: f64) -> Result<[f64; 2]> {
    check_interior(s.grid(), interval)?;
    let xs = s.nodes();
    let ys = s.values();
    let i = interval;
    Ok([lagrange_eval(&xs[i - 1..=i + 1], &ys[i - 1..=i + 1], x), lagrange_eval(&xs[i..=i + 2], &ys[i..=i + 2], x)])
}

/// Weight diagnostics at `x`; `None` on fallback intervals.
pub fn weno4_weights(s: &SampleSet, x: f64) -> Result<Option<WenoWeights<2>>> {
    let interval = s.grid().interval_of(x)?;
    if check_interior(s.grid(), interval).is_err() {
        return Ok(None);
    }
    let gamma = weno4_linear_weights(s.grid(), interval, x)?;
    let beta = weno4_smoothness(s, interval)?;
    Ok(Some(WenoWeights::compute(gamma, beta, EXPONENT)))
}

/// One-sided quadratic (or linear when `N = 2`) used on the first and last
/// intervals by the fourth-order schemes.
pub(crate) fn boundary_fallback(s: &SampleSet, interval: usize, x: f64) -> f64 {
    let xs = s.nodes();
    let ys = s.values();
    let n = s.len();
    if n == 2 {
        return linear(xs[0], ys[0], xs[1], ys[1], x);
    }
    let left = if interval == 0 { 0 } else { n - 3 };
    lagrange_eval(&xs[left..left + 3], &ys[left..left + 3], x)
}

fn eval_interval(s: &SampleSet, interval: usize, x: f64) -> Result<f64> {
    if check_interior(s.grid(), interval).is_err() {
        return Ok(boundary_fallback(s, interval, x));
    }
    let gamma = weno4_linear_weights(s.grid(), interval, x)?;
    let beta = weno4_smoothness(s, interval)?;
    let w = WenoWeights::compute(gamma, beta, EXPONENT);
    Ok(w.combine(weno4_candidates(s, interval, x)?))
}

/// Fourth-order WENO value at `x`.
pub fn weno4_eval(s: &SampleSet, x: f64) -> Result<f64> {
    match s.grid().locate(x)? {
        Location::Node(k) => Ok(s.values()[k]),
        Location::Interval(i) => eval_interval(s, i, x),
    }
}

#[derive(Debug, Clone)]
pub struct Weno4 {
    samples: SampleSet,
}

impl Weno4 {
    pub fn new(samples: SampleSet) -> Result<Self> {
        Ok(Self { samples })
    }

    pub fn weights(&self, x: f64) -> Result<Option<WenoWeights<2>>> {
        weno4_weights(&self.samples, x)
    }
}

impl Interpolant for Weno4 {
    fn samples(&self) -> &SampleSet {
        &self.samples
    }

    fn eval(&self, x: f64) -> Result<f64> {
        weno4_eval(&self.samples, x)
    }
}
