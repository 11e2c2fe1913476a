//! Grids and sample sets.
//!
//! A [`Grid`] is a strictly increasing list of abscissas with the spacings
//! `h_i = x_{i+1} - x_i` cached. A [`SampleSet`] pairs a grid with function
//! values and caches the first divided differences `d_i = (y_{i+1} - y_i) / h_i`.
//!
//! Indices are zero-based throughout: interval `i` is `[x_i, x_{i+1}]` with
//! `0 <= i <= n - 2`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{InterpError, Result};

/// Interior nodes of a random grid are displaced by at most this fraction of
/// the uniform spacing. Being below one half keeps the nodes ordered.
pub const JITTER_FRACTION: f64 = 0.4;

#[derive(Debug, Clone, PartialEq)]
pub struct Grid {
    nodes: Vec<f64>,
    spacings: Vec<f64>,
}

/// Where an abscissa falls on a grid.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Location {
    /// Exactly on node `k`.
    Node(usize),
    /// Strictly inside interval `i`.
    Interval(usize),
}

impl Grid {
    /// Validates and wraps a list of abscissas.
    pub fn new(nodes: Vec<f64>) -> Result<Self> {
        if nodes.len() < 2 {
            return Err(InterpError::TooFewPoints { required: 2, got: nodes.len() });
        }
        if let Some(index) = nodes.iter().position(|x| !x.is_finite()) {
            return Err(InterpError::NonFinite { index });
        }
        let spacings: Vec<f64> = nodes.windows(2).map(|w| w[1] - w[0]).collect();
        if let Some(index) = spacings.iter().position(|&h| h <= 0.0) {
            return Err(InterpError::NonIncreasing { index: index + 1 });
        }
        Ok(Self { nodes, spacings })
    }

    /// `n` equispaced nodes on `[a, b]`, endpoints included exactly.
    pub fn uniform(a: f64, b: f64, n: usize) -> Result<Self> {
        check_range(a, b, n)?;
        let last = (n - 1) as f64;
        let nodes = (0..n).map(|k| if k == n - 1 { b } else { a + (b - a) * (k as f64) / last }).collect();
        Self::new(nodes)
    }

    /// Jittered-uniform grid: fixed endpoints, each interior node moved by a
    /// uniform draw from `(-0.4 dx, 0.4 dx)`. Deterministic for a given seed.
    pub fn random_nonuniform(a: f64, b: f64, n: usize, seed: u64) -> Result<Self> {
        check_range(a, b, n)?;
        let dx = (b - a) / (n - 1) as f64;
        let bound = JITTER_FRACTION * dx;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut nodes = Vec::with_capacity(n);
        nodes.push(a);
        for k in 1..n - 1 {
            let jitter: f64 = rng.random_range(-bound..bound);
            nodes.push(a + dx * k as f64 + jitter);
        }
        nodes.push(b);
        Self::new(nodes)
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn spacings(&self) -> &[f64] {
        &self.spacings
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn intervals(&self) -> usize {
        self.spacings.len()
    }

    pub fn first(&self) -> f64 {
        self.nodes[0]
    }

    pub fn last(&self) -> f64 {
        self.nodes[self.nodes.len() - 1]
    }

    /// Finds the node or interval containing `x`.
    pub fn locate(&self, x: f64) -> Result<Location> {
        if !(x >= self.first() && x <= self.last()) {
            return Err(InterpError::OutOfDomain { x, lo: self.first(), hi: self.last() });
        }
        // first node strictly greater than x
        let upper = self.nodes.partition_point(|&node| node <= x);
        let k = upper - 1;
        if self.nodes[k] == x {
            Ok(Location::Node(k))
        } else {
            Ok(Location::Interval(k))
        }
    }

    /// Interval index containing `x`; nodes map to the interval they start,
    /// except the last node which maps to the last interval.
    pub fn interval_of(&self, x: f64) -> Result<usize> {
        Ok(match self.locate(x)? {
            Location::Node(k) => k.min(self.intervals() - 1),
            Location::Interval(i) => i,
        })
    }

    /// True when the spacings `h[first..=last]` agree to relative `1e-12`.
    pub fn is_locally_uniform(&self, first: usize, last: usize) -> bool {
        let h = &self.spacings[first..=last];
        let max = h.iter().cloned().fold(0.0, f64::max);
        let min = h.iter().cloned().fold(f64::INFINITY, f64::min);
        max - min <= 1e-12 * max
    }
}

fn check_range(a: f64, b: f64, n: usize) -> Result<()> {
    if !a.is_finite() || !b.is_finite() || a >= b {
        return Err(InterpError::InvalidRange { a, b });
    }
    if n < 2 {
        return Err(InterpError::TooFewPoints { required: 2, got: n });
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq)]
pub struct SampleSet {
    grid: Grid,
    values: Vec<f64>,
    slopes: Vec<f64>,
}

impl SampleSet {
    pub fn new(grid: Grid, values: Vec<f64>) -> Result<Self> {
        if values.len() != grid.len() {
            return Err(InterpError::LengthMismatch { nodes: grid.len(), values: values.len() });
        }
        if let Some(index) = values.iter().position(|y| !y.is_finite()) {
            return Err(InterpError::NonFinite { index });
        }
        let slopes = values.windows(2).zip(grid.spacings()).map(|(y, h)| (y[1] - y[0]) / h).collect();
        Ok(Self { grid, values, slopes })
    }

    /// Builds a sample set from parallel abscissa and value slices.
    pub fn from_xy(x: &[f64], y: &[f64]) -> Result<Self> {
        Self::new(Grid::new(x.to_vec())?, y.to_vec())
    }

    pub fn grid(&self) -> &Grid {
        &self.grid
    }

    pub fn nodes(&self) -> &[f64] {
        self.grid.nodes()
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// First divided differences `d_i`.
    pub fn slopes(&self) -> &[f64] {
        &self.slopes
    }

    pub fn spacings(&self) -> &[f64] {
        self.grid.spacings()
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// Samples `f` at every node of `grid`.
pub fn sample(grid: &Grid, f: impl Fn(f64) -> f64) -> Result<SampleSet> {
    let values = grid.nodes().iter().map(|&x| f(x)).collect();
    SampleSet::new(grid.clone(), values)
}
