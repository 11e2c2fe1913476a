//! Alternative fourth-order WENO with three linear candidates.
//!
//! The candidates are the lines through `{x_{i-1}, x_i}`, `{x_i, x_{i+1}}`
//! and `{x_{i+1}, x_{i+2}}`, blended with quadratic-in-`x` linear weights
//! that reproduce the four-point cubic. Indicators are squared consecutive
//! differences of the four-point derivatives (scaled by `1/h` on nonuniform
//! grids). This variant is noticeably more dissipative than [`crate::weno4`]
//! and is kept as a reference.

use crate::error::{InterpError, Result};
use crate::grid::{Grid, Location, SampleSet};
use crate::interpolant::Interpolant;
use crate::lagrange::linear;
use crate::weights::{Exponent, WenoWeights};
use crate::weno4::{boundary_fallback, derivatives_nonuniform4, derivatives_uniform4};

pub const EXPONENT: Exponent = Exponent::One;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IndicatorMode {
    Uniform,
    Nonuniform,
}

fn check_interior(g: &Grid, interval: usize) -> Result<()> {
    if interval == 0 || interval + 2 >= g.len() {
        return Err(InterpError::BoundaryInterval { interval });
    }
    Ok(())
}

/// `(γ2, γ3, γ4)` on interval `i` at `x`.
pub fn weno4alt_linear_weights(g: &Grid, interval: usize, x: f64) -> Result<[f64; 3]> {
    check_interior(g, interval)?;
    let xs = g.nodes();
    let i = interval;
    let (xm, x0, xp, xpp) = (xs[i - 1], xs[i], xs[i + 1], xs[i + 2]);
    let g2 = (x - xp) * (x - xpp) / ((xp - xm) * (xpp - xm));
    let g3 = -(x - xm) * (x - xpp) / (xpp - xm) * (1.0 / (xp - xm) + 1.0 / (xpp - x0));
    let g4 = (x - xm) * (x - x0) / ((xpp - xm) * (xpp - x0));
    Ok([g2, g3, g4])
}

/// Indicators `(β2, β3, β4)` for interval `i` in the requested mode.
pub fn weno4alt_smoothness(s: &SampleSet, interval: usize, mode: IndicatorMode) -> Result<[f64; 3]> {
    check_interior(s.grid(), interval)?;
    let i = interval;
    Ok(match mode {
        IndicatorMode::Uniform => {
            let y = s.values();
            let e = derivatives_uniform4([y[i - 1], y[i], y[i + 1], y[i + 2]], s.spacings()[i]).differences();
            e.map(|v| v * v)
        }
        IndicatorMode::Nonuniform => {
            let h = s.spacings();
            let e = derivatives_nonuniform4(s, i)?.differences();
            let scaled = [e[0] / h[i - 1], e[1] / h[i], e[2] / h[i + 1]];
            scaled.map(|v| v * v)
        }
    })
}

fn mode_for(s: &SampleSet, interval: usize) -> IndicatorMode {
    if s.grid().is_locally_uniform(interval - 1, interval + 1) {
        IndicatorMode::Uniform
    } else {
        IndicatorMode::Nonuniform
    }
}

pub fn weno4alt_weights(s: &SampleSet, x: f64) -> Result<Option<WenoWeights<3>>> {
    let interval = s.grid().interval_of(x)?;
    if check_interior(s.grid(), interval).is_err() {
        return Ok(None);
    }
    let gamma = weno4alt_linear_weights(s.grid(), interval, x)?;
    let beta = weno4alt_smoothness(s, interval, mode_for(s, interval))?;
    Ok(Some(WenoWeights::compute(gamma, beta, EXPONENT)))
}

fn eval_interval(s: &SampleSet, interval: usize, x: f64) -> Result<f64> {
    let w = match weno4alt_weights(s, x)? {
        Some(w) => w,
        None => return Ok(boundary_fallback(s, interval, x)),
    };
    let xs = s.nodes();
    let ys = s.values();
    let i = interval;
    let candidates = [
        linear(xs[i - 1], ys[i - 1], xs[i], ys[i], x),
        linear(xs[i], ys[i], xs[i + 1], ys[i + 1], x),
        linear(xs[i + 1], ys[i + 1], xs[i + 2], ys[i + 2], x),
    ];
    Ok(w.combine(candidates))
}

pub fn weno4alt_eval(s: &SampleSet, x: f64) -> Result<f64> {
    match s.grid().locate(x)? {
        Location::Node(k) => Ok(s.values()[k]),
        Location::Interval(i) => eval_interval(s, i, x),
    }
}

#[derive(Debug, Clone)]
pub struct Weno4Alt {
    samples: SampleSet,
}

impl Weno4Alt {
    pub fn new(samples: SampleSet) -> Result<Self> {
        Ok(Self { samples })
    }

    pub fn weights(&self, x: f64) -> Result<Option<WenoWeights<3>>> {
        weno4alt_weights(&self.samples, x)
    }
}

impl Interpolant for Weno4Alt {
    fn samples(&self) -> &SampleSet {
        &self.samples
    }

    fn eval(&self, x: f64) -> Result<f64> {
        weno4alt_eval(&self.samples, x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::sample;
    use crate::lagrange::lagrange_eval;

    fn set(x: &[f64], y: &[f64]) -> SampleSet {
        SampleSet::from_xy(x, y).unwrap()
    }

    #[test]
    fn linear_weights_vanish_at_nodes() {
        let g = Grid::new(vec![0.0, 0.7, 1.0, 2.2, 3.0]).unwrap();
        assert_eq!(weno4alt_linear_weights(&g, 1, 0.7).unwrap()[2], 0.0);
        assert_eq!(weno4alt_linear_weights(&g, 1, 1.0).unwrap()[0], 0.0);
    }

    #[test]
    fn midpoint_weights_are_symmetric() {
        let g = Grid::uniform(-1.5, 1.5, 4).unwrap();
        let w = weno4alt_linear_weights(&g, 1, 0.0).unwrap();
        assert!((w.iter().sum::<f64>() - 1.0).abs() < 1e-15);
        assert!((w[0] - w[2]).abs() < 1e-15);
        assert!(w[1] > w[0]);
        assert_eq!(w, [0.125, 0.75, 0.125]);
    }

    #[test]
    fn indicator_examples() {
        let s = set(&[0.0, 1.0, 2.0, 3.0], &[0.0, 0.0, 4.0, 4.0]);
        assert_eq!(weno4alt_smoothness(&s, 1, IndicatorMode::Uniform).unwrap(), [64.0, 0.0, 64.0]);

        let s = sample(&Grid::uniform(0.0, 3.0, 4).unwrap(), |_| 2.0).unwrap();
        assert_eq!(weno4alt_smoothness(&s, 1, IndicatorMode::Uniform).unwrap(), [0.0; 3]);

        let s = sample(&Grid::uniform(0.0, 1.5, 4).unwrap(), |x| 3.0 * x * x - x).unwrap();
        let b = weno4alt_smoothness(&s, 1, IndicatorMode::Uniform).unwrap();
        assert!((b[0] - b[1]).abs() < 1e-12 && (b[1] - b[2]).abs() < 1e-12);
        // nonuniform differs from uniform by the factor 1/h^2
        let nb = weno4alt_smoothness(&s, 1, IndicatorMode::Nonuniform).unwrap();
        for (u, n) in b.iter().zip(nb) {
            assert!((n * 0.25 - u).abs() < 1e-12 * u.max(1.0));
        }
    }

    #[test]
    fn eval_examples() {
        let s = set(&[0.0, 1.0, 2.0, 3.0], &[0.0, 0.0, 4.0, 4.0]);
        let w = weno4alt_weights(&s, 1.5).unwrap().unwrap();
        assert!(w.nonlinear[1] > 0.9);
        for (&x, &y) in s.nodes().iter().zip(s.values()) {
            assert_eq!(weno4alt_eval(&s, x).unwrap(), y);
        }

        let xs = [0.0, 1.0, 2.0, 3.0];
        let cubic = |x: f64| x * x * x;
        let s = sample(&Grid::new(xs.to_vec()).unwrap(), cubic).unwrap();
        let b = weno4alt_smoothness(&s, 1, IndicatorMode::Uniform).unwrap();
        // differences 3, 9, 15: unequal, so ω departs from γ here
        assert_eq!(b, [9.0, 81.0, 225.0]);
        let quad = sample(&Grid::new(xs.to_vec()).unwrap(), |x| x * x + 1.0).unwrap();
        let oracle = lagrange_eval(&xs, quad.values(), 1.3);
        assert!((weno4alt_eval(&quad, 1.3).unwrap() - oracle).abs() < 1e-12);
    }
}
