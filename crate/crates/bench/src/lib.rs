//! Shared fixtures for the interpolation benchmarks.

use weno_core::harness::{GridKind, GridSpec};
use weno_core::{sample, Result, SampleSet, TestFunction};

/// Samples of `function` on an `n`-point grid plus `per_interval` evaluation
/// abscissae inside every cell.
pub struct Workload {
    pub samples: SampleSet,
    pub points: Vec<f64>,
}

impl Workload {
    pub fn new(function: TestFunction, kind: GridKind, n: usize, per_interval: usize) -> Result<Self> {
        let grid = GridSpec::new(kind, n, 42).build()?;
        let samples = sample(&grid, |x| function.value(x))?;
        let nodes = samples.nodes();
        let mut points = Vec::with_capacity((n - 1) * per_interval);
        for w in nodes.windows(2) {
            for k in 0..per_interval {
                points.push(w[0] + (w[1] - w[0]) * (k as f64 + 0.5) / per_interval as f64);
            }
        }
        Ok(Self { samples, points })
    }
}
