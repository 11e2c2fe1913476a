//! Benchmark functions on `[-1, 1]`.

use std::fmt;
use std::str::FromStr;

use crate::error::{InterpError, Result};

pub const DOMAIN: (f64, f64) = (-1.0, 1.0);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TestFunction {
    /// `e^{3x/2}`
    Exponential,
    /// `0` for `x < 0`, `4` for `x >= 0`
    Heaviside,
    /// `5 (1 - e^{-4x^2})`
    GaussianWell,
    /// `2 sin(3x) + 4` for `x < 0`, `2 sin(3x)` for `x >= 0`
    DiscSine,
}

impl TestFunction {
    pub const ALL: [TestFunction; 4] =
        [TestFunction::Exponential, TestFunction::Heaviside, TestFunction::DiscSine, TestFunction::GaussianWell];

    pub fn id(self) -> &'static str {
        match self {
            TestFunction::Exponential => "exponential",
            TestFunction::Heaviside => "heaviside",
            TestFunction::GaussianWell => "gaussian_well",
            TestFunction::DiscSine => "disc_sine",
        }
    }

    /// Jump locations inside the domain.
    pub fn discontinuities(self) -> &'static [f64] {
        match self {
            TestFunction::Exponential | TestFunction::GaussianWell => &[],
            TestFunction::Heaviside | TestFunction::DiscSine => &[0.0],
        }
    }

    pub fn is_smooth(self) -> bool {
        self.discontinuities().is_empty()
    }

    /// Closed form without the domain check.
    pub fn value(self, x: f64) -> f64 {
        match self {
            TestFunction::Exponential => (1.5 * x).exp(),
            TestFunction::Heaviside => {
                if x < 0.0 {
                    0.0
                } else {
                    4.0
                }
            }
            TestFunction::GaussianWell => 5.0 * (1.0 - (-4.0 * x * x).exp()),
            TestFunction::DiscSine => {
                let s = 2.0 * (3.0 * x).sin();
                if x < 0.0 {
                    s + 4.0
                } else {
                    s
                }
            }
        }
    }

    pub fn eval(self, x: f64) -> Result<f64> {
        let (lo, hi) = DOMAIN;
        if !(lo..=hi).contains(&x) {
            return Err(InterpError::OutOfDomain { x, lo, hi });
        }
        Ok(self.value(x))
    }
}

impl fmt::Display for TestFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for TestFunction {
    type Err = InterpError;

    fn from_str(s: &str) -> Result<Self> {
        TestFunction::ALL.into_iter().find(|f| f.id() == s).ok_or_else(|| InterpError::UnknownFunction(s.to_string()))
    }
}
