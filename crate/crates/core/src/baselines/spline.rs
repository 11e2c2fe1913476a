use crate::error::{InterpError, Result};
use crate::grid::{Location, SampleSet};
use crate::interpolant::Interpolant;

/// End condition of a cubic spline.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SplineEnd {
    /// Zero second derivative at both ends.
    Natural,
    /// Continuous third derivative at the second and penultimate nodes.
    NotAKnot,
}

/// C² piecewise cubic interpolant, stored as nodal second derivatives.
#[derive(Debug, Clone)]
pub struct CubicSpline {
    samples: SampleSet,
    second: Vec<f64>,
    end: SplineEnd,
}

// Solves a tridiagonal system in place; `sub[0]` and `sup[m-1]` are unused.
fn solve_tridiagonal(sub: &[f64], diag: &mut [f64], sup: &[f64], rhs: &mut [f64]) {
    let m = diag.len();
    for k in 1..m {
        let factor = sub[k] / diag[k - 1];
        diag[k] -= factor * sup[k - 1];
        rhs[k] -= factor * rhs[k - 1];
    }
    rhs[m - 1] /= diag[m - 1];
    for k in (0..m - 1).rev() {
        rhs[k] = (rhs[k] - sup[k] * rhs[k + 1]) / diag[k];
    }
}

impl CubicSpline {
    pub fn new(samples: SampleSet, end: SplineEnd) -> Result<Self> {
        let n = samples.len();
        if n < 3 {
            return Err(InterpError::TooFewPoints { required: 3, got: n });
        }
        let h = samples.spacings();
        let d = samples.slopes();
        let mut second = vec![0.0; n];

        if end == SplineEnd::NotAKnot && n == 3 {
            // the not-a-knot spline through three points is their parabola
            let c = 2.0 * (d[1] - d[0]) / (h[0] + h[1]);
            second.fill(c);
            return Ok(Self { samples, second, end });
        }

        // interior rows: h_{k-1} M_{k-1} + 2 (h_{k-1} + h_k) M_k + h_k M_{k+1} = 6 (d_k - d_{k-1})
        let m = n - 2;
        let mut sub: Vec<f64> = (0..m).map(|k| h[k]).collect();
        let mut diag: Vec<f64> = (0..m).map(|k| 2.0 * (h[k] + h[k + 1])).collect();
        let mut sup: Vec<f64> = (0..m).map(|k| h[k + 1]).collect();
        let mut rhs: Vec<f64> = (0..m).map(|k| 6.0 * (d[k + 1] - d[k])).collect();

        if end == SplineEnd::NotAKnot {
            // eliminate M_0 and M_{n-1} through the third-derivative continuity conditions
            let (h0, h1) = (h[0], h[1]);
            diag[0] = (h0 + h1) * (h0 + 2.0 * h1) / h1;
            sup[0] = (h1 - h0) * (h1 + h0) / h1;
            let (ha, hb) = (h[n - 3], h[n - 2]);
            diag[m - 1] = (ha + hb) * (2.0 * ha + hb) / ha;
            sub[m - 1] = (ha - hb) * (ha + hb) / ha;
        }
        solve_tridiagonal(&sub, &mut diag, &sup, &mut rhs);
        second[1..=m].copy_from_slice(&rhs);

        if end == SplineEnd::NotAKnot {
            let (h0, h1) = (h[0], h[1]);
            second[0] = ((h0 + h1) * second[1] - h0 * second[2]) / h1;
            let (ha, hb) = (h[n - 3], h[n - 2]);
            second[n - 1] = ((ha + hb) * second[n - 2] - hb * second[n - 3]) / ha;
        }
        Ok(Self { samples, second, end })
    }

    pub fn natural(samples: SampleSet) -> Result<Self> {
        Self::new(samples, SplineEnd::Natural)
    }

    pub fn not_a_knot(samples: SampleSet) -> Result<Self> {
        Self::new(samples, SplineEnd::NotAKnot)
    }

    pub fn end_condition(&self) -> SplineEnd {
        self.end
    }

    /// Second derivatives at the nodes.
    pub fn second_derivatives(&self) -> &[f64] {
        &self.second
    }

    fn eval_interval(&self, i: usize, x: f64) -> f64 {
        let xs = self.samples.nodes();
        let ys = self.samples.values();
        let h = self.samples.spacings()[i];
        let (m0, m1) = (self.second[i], self.second[i + 1]);
        let a = (xs[i + 1] - x) / h;
        let b = (x - xs[i]) / h;
        a * ys[i] + b * ys[i + 1] + ((a * a * a - a) * m0 + (b * b * b - b) * m1) * h * h / 6.0
    }

    /// Second derivative of the piece on interval `i` at `x`.
    pub fn piece_second_derivative(&self, i: usize, x: f64) -> f64 {
        let xs = self.samples.nodes();
        let h = self.samples.spacings()[i];
        (self.second[i] * (xs[i + 1] - x) + self.second[i + 1] * (x - xs[i])) / h
    }

    /// Third derivative (constant) of the piece on interval `i`.
    pub fn piece_third_derivative(&self, i: usize) -> f64 {
        (self.second[i + 1] - self.second[i]) / self.samples.spacings()[i]
    }
}

impl Interpolant for CubicSpline {
    fn samples(&self) -> &SampleSet {
        &self.samples
    }

    fn eval(&self, x: f64) -> Result<f64> {
        match self.samples.grid().locate(x)? {
            Location::Node(k) => Ok(self.samples.values()[k]),
            Location::Interval(i) => Ok(self.eval_interval(i, x)),
        }
    }
}

/// Natural cubic spline through the samples.
pub fn natural_cubic_spline_build(s: &SampleSet) -> Result<CubicSpline> {
    CubicSpline::natural(s.clone())
}
