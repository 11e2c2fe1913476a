use crate::error::{InterpError, Result};
use crate::grid::SampleSet;
use crate::harness::{GridSpec, Norm};
use crate::interpolant::Interpolant;
use crate::method::Method;
use crate::testfuncs::TestFunction;

#[derive(Debug, Clone, PartialEq)]
pub struct ErrorMeasurement {
    pub method: Method,
    pub function: TestFunction,
    pub grid: GridSpec,
    pub norm: Norm,
    pub density: usize,
    pub interior_only: bool,
    pub error: f64,
}

/// Error of `interp` against `exact` sampled at `density` points per interval.
///
/// L1 and L2 are trapezoid-weighted means over the covered length; Linf is
/// the maximum. With `interior_only` the first and last intervals are
/// skipped.
pub fn interpolation_error(
    interp: &dyn Interpolant,
    exact: impl Fn(f64) -> f64,
    norm: Norm,
    density: usize,
    interior_only: bool,
) -> Result<f64> {
    if density < 4 {
        return Err(InterpError::InvalidParameter(format!("density must be at least 4, got {density}")));
    }
    let samples: &SampleSet = interp.samples();
    let xs = samples.nodes();
    let intervals = xs.len() - 1;
    let range = if interior_only {
        if intervals < 3 {
            return Err(InterpError::TooFewPoints { required: 4, got: xs.len() });
        }
        1..intervals - 1
    } else {
        0..intervals
    };

    let mut integral = 0.0;
    let mut length = 0.0;
    let mut max: f64 = 0.0;
    for i in range {
        let (a, b) = (xs[i], xs[i + 1]);
        let step = (b - a) / density as f64;
        let mut prev: Option<f64> = None;
        for k in 0..=density {
            let x = if k == density { b } else { a + step * k as f64 };
            let e = (interp.eval(x)? - exact(x)).abs();
            max = max.max(e);
            let v = match norm {
                Norm::L2 => e * e,
                _ => e,
            };
            if let Some(p) = prev {
                integral += 0.5 * step * (p + v);
            }
            prev = Some(v);
        }
        length += b - a;
    }
    Ok(match norm {
        Norm::L1 => integral / length,
        Norm::L2 => (integral / length).sqrt(),
        Norm::Linf => max,
    })
}

/// Samples `function` on `grid`, builds `method` and measures its error.
pub fn measure_error(
    method: Method,
    function: TestFunction,
    grid: GridSpec,
    norm: Norm,
    density: usize,
    interior_only: bool,
) -> Result<ErrorMeasurement> {
    let g = grid.build()?;
    let samples = crate::grid::sample(&g, |x| function.value(x))?;
    let interp = method.build(samples)?;
    let error = interpolation_error(interp.as_ref(), |x| function.value(x), norm, density, interior_only)?;
    Ok(ErrorMeasurement { method, function, grid, norm, density, interior_only, error })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::{sample, Grid};
    use crate::harness::GridKind;

    struct Exact(SampleSet);

    impl Interpolant for Exact {
        fn samples(&self) -> &SampleSet {
            &self.0
        }
        fn eval(&self, x: f64) -> Result<f64> {
            Ok(x.sin())
        }
    }

    #[test]
    fn passthrough_has_zero_error() {
        let s = sample(&Grid::uniform(-1.0, 1.0, 9).unwrap(), f64::sin).unwrap();
        for norm in [Norm::L1, Norm::L2, Norm::Linf] {
            assert_eq!(interpolation_error(&Exact(s.clone()), f64::sin, norm, 16, true).unwrap(), 0.0);
        }
    }

    #[test]
    fn norms_of_a_constant_offset() {
        struct Offset(SampleSet);
        impl Interpolant for Offset {
            fn samples(&self) -> &SampleSet {
                &self.0
            }
            fn eval(&self, x: f64) -> Result<f64> {
                Ok(x + 0.5)
            }
        }
        let s = sample(&Grid::random_nonuniform(-1.0, 1.0, 9, 2).unwrap(), |x| x).unwrap();
        for norm in [Norm::L1, Norm::L2, Norm::Linf] {
            let e = interpolation_error(&Offset(s.clone()), |x| x, norm, 8, false).unwrap();
            assert!((e - 0.5).abs() < 1e-14, "{norm}");
        }
    }

    #[test]
    fn low_density_rejected() {
        let s = sample(&Grid::uniform(-1.0, 1.0, 9).unwrap(), f64::sin).unwrap();
        assert!(interpolation_error(&Exact(s), f64::sin, Norm::L1, 3, true).is_err());
    }

    #[test]
    fn cubic_lagrange_is_exact_on_cubic_data() {
        let f = |x: f64| x * x * x - 0.5 * x;
        let s = sample(&Grid::random_nonuniform(-1.0, 1.0, 20, 11).unwrap(), f).unwrap();
        let interp = Method::Cubic.build(s).unwrap();
        let e = interpolation_error(interp.as_ref(), f, Norm::Linf, 16, false).unwrap();
        assert!(e <= 1e-12, "{e}");
    }

    #[test]
    fn weno4_error_ratio_is_fourth_order() {
        let m = |n| {
            measure_error(
                Method::Weno4,
                TestFunction::Exponential,
                GridSpec::new(GridKind::Uniform, n, 0),
                Norm::L1,
                16,
                true,
            )
            .unwrap()
            .error
        };
        let ratio = m(17) / m(33);
        assert!(ratio > 16.0 / 1.5 && ratio < 16.0 * 1.5, "{ratio}");
    }
}
