//! Nonlinear WENO weights.
//!
//! Given linear weights `γ_m(x)` and smoothness indicators `β_m`, the
//! unnormalized weights are `α_m = γ_m / (ε + β_m)^a` and the nonlinear
//! weights are `ω_m = α_m / Σ α`.

/// Regularizer added to every smoothness indicator.
pub const EPSILON: f64 = 1e-6;

/// Power applied to `ε + β` in the denominator of `α`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Exponent {
    One,
    ThreeHalves,
}

impl Exponent {
    fn apply(self, v: f64) -> f64 {
        match self {
            Exponent::One => v,
            Exponent::ThreeHalves => v * v.sqrt(),
        }
    }
}

/// Weight diagnostics at one evaluation point for a `K`-candidate scheme.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WenoWeights<const K: usize> {
    pub linear: [f64; K],
    pub indicators: [f64; K],
    pub unnormalized: [f64; K],
    pub nonlinear: [f64; K],
}

impl<const K: usize> WenoWeights<K> {
    pub fn compute(linear: [f64; K], indicators: [f64; K], exponent: Exponent) -> Self {
        let mut unnormalized = [0.0; K];
        for m in 0..K {
            unnormalized[m] = linear[m] / exponent.apply(EPSILON + indicators[m]);
        }
        let total: f64 = unnormalized.iter().sum();
        let mut nonlinear = [0.0; K];
        for m in 0..K {
            nonlinear[m] = unnormalized[m] / total;
        }
        Self { linear, indicators, unnormalized, nonlinear }
    }

    /// `Σ ω_m q_m` for candidate values `q`.
    pub fn combine(&self, candidates: [f64; K]) -> f64 {
        self.nonlinear.iter().zip(candidates).map(|(w, q)| w * q).sum()
    }
}
