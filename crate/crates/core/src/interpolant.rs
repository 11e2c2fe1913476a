use crate::error::Result;
use crate::grid::SampleSet;

/// A piecewise interpolant over a [`SampleSet`], evaluable anywhere in
/// `[x_1, x_N]`.
pub trait Interpolant: Send + Sync {
    fn samples(&self) -> &SampleSet;

    fn eval(&self, x: f64) -> Result<f64>;

    /// Evaluates at every abscissa in `xs`.
    fn eval_many(&self, xs: &[f64]) -> Result<Vec<f64>> {
        xs.iter().map(|&x| self.eval(x)).collect()
    }
}
