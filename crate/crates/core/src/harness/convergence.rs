use log::info;
use serde::Serialize;
use serde_json::value::RawValue;

use crate::error::{InterpError, Result};
use crate::harness::format::format_float;
use crate::harness::{measure_error, GridKind, GridSpec, Norm, NORM_DENSITY};
use crate::method::Method;
use crate::testfuncs::TestFunction;

/// Errors over a sequence of grids and the fitted experimental order.
#[derive(Debug, Clone, PartialEq)]
pub struct ConvergenceReport {
    pub method: Method,
    pub function: TestFunction,
    pub grid_kind: GridKind,
    pub seed: u64,
    pub norm: Norm,
    pub sizes: Vec<usize>,
    pub errors: Vec<f64>,
    pub pair_orders: Vec<f64>,
    pub fitted_order: f64,
}

/// `log(e_k / e_{k+1}) / log((n_{k+1} - 1) / (n_k - 1))` for consecutive sizes.
pub fn pair_orders(sizes: &[usize], errors: &[f64]) -> Vec<f64> {
    sizes
        .windows(2)
        .zip(errors.windows(2))
        .map(|(n, e)| (e[0] / e[1]).ln() / (((n[1] - 1) as f64) / ((n[0] - 1) as f64)).ln())
        .collect()
}

/// Negated least-squares slope of `log(error)` against `log(n - 1)`.
pub fn fit_order(sizes: &[usize], errors: &[f64]) -> f64 {
    let xs: Vec<f64> = sizes.iter().map(|&n| ((n - 1) as f64).ln()).collect();
    let ys: Vec<f64> = errors.iter().map(|e| e.ln()).collect();
    let count = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / count;
    let my = ys.iter().sum::<f64>() / count;
    let sxy: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    -sxy / sxx
}

/// Interior-only errors of `method` on `function` for each grid size.
pub fn convergence_study(
    method: Method,
    function: TestFunction,
    grid_kind: GridKind,
    sizes: &[usize],
    seed: u64,
    norm: Norm,
) -> Result<ConvergenceReport> {
    if sizes.len() < 3 {
        return Err(InterpError::InvalidParameter(format!("need at least 3 grid sizes, got {}", sizes.len())));
    }
    if sizes.windows(2).any(|w| w[0] >= w[1]) {
        return Err(InterpError::InvalidParameter("grid sizes must be strictly increasing".into()));
    }
    let errors = sizes
        .iter()
        .map(|&n| {
            measure_error(method, function, GridSpec::new(grid_kind, n, seed), norm, NORM_DENSITY, true)
                .map(|m| m.error)
        })
        .collect::<Result<Vec<f64>>>()?;
    let fitted_order = fit_order(sizes, &errors);
    info!("{method} on {function} ({grid_kind}): fitted order {fitted_order:.3}");
    Ok(ConvergenceReport {
        method,
        function,
        grid_kind,
        seed,
        norm,
        sizes: sizes.to_vec(),
        pair_orders: pair_orders(sizes, &errors),
        fitted_order,
        errors,
    })
}

#[derive(Serialize)]
struct ReportJson<'a> {
    method: &'a str,
    function: &'a str,
    grid_type: &'a str,
    seed: u64,
    norm: &'a str,
    sizes: &'a [usize],
    errors: Vec<Box<RawValue>>,
    pair_orders: Vec<Box<RawValue>>,
    fitted_order: Box<RawValue>,
}

fn raw(v: f64) -> Box<RawValue> {
    let text = if v.is_finite() { format_float(v) } else { "null".to_string() };
    RawValue::from_string(text).expect("formatted float is valid JSON")
}

impl ConvergenceReport {
    fn as_json(&self) -> ReportJson<'_> {
        ReportJson {
            method: self.method.id(),
            function: self.function.id(),
            grid_type: self.grid_kind.id(),
            seed: self.seed,
            norm: self.norm.id(),
            sizes: &self.sizes,
            errors: self.errors.iter().map(|&e| raw(e)).collect(),
            pair_orders: self.pair_orders.iter().map(|&e| raw(e)).collect(),
            fitted_order: raw(self.fitted_order),
        }
    }

    /// JSON object with every float written to 17 significant digits.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.as_json()).expect("report serializes")
    }
}

/// A JSON array of reports.
pub fn reports_to_json(reports: &[ConvergenceReport]) -> String {
    let items: Vec<ReportJson<'_>> = reports.iter().map(|r| r.as_json()).collect();
    serde_json::to_string_pretty(&items).expect("reports serialize")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_power_law_fits_exactly() {
        let sizes = [11, 21, 41, 81];
        let errors: Vec<f64> = sizes.iter().map(|&n| 3.0 * ((n - 1) as f64).powf(-2.5)).collect();
        assert!((fit_order(&sizes, &errors) - 2.5).abs() < 1e-12);
        for p in pair_orders(&sizes, &errors) {
            assert!((p - 2.5).abs() < 1e-12);
        }
    }

    #[test]
    fn fitted_order_lies_within_pair_orders() {
        let sizes = [17, 33, 65, 129];
        let errors = [1e-2, 2e-3, 1.5e-4, 1.2e-5];
        let pairs = pair_orders(&sizes, &errors);
        let fit = fit_order(&sizes, &errors);
        let lo = pairs.iter().cloned().fold(f64::INFINITY, f64::min);
        let hi = pairs.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        assert!(fit >= lo && fit <= hi);
    }

    #[test]
    fn invalid_sizes() {
        let run = |sizes: &[usize]| {
            convergence_study(Method::Weno4, TestFunction::Exponential, GridKind::Uniform, sizes, 0, Norm::L1)
        };
        assert!(run(&[17, 33]).is_err());
        assert!(run(&[17, 33, 33]).is_err());
        assert!(run(&[]).is_err());
    }

    #[test]
    fn json_layout() {
        let r =
            convergence_study(Method::Weno4, TestFunction::Exponential, GridKind::Uniform, &[9, 17, 33], 3, Norm::L1)
                .unwrap();
        let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        for key in ["method", "function", "grid_type", "seed", "norm", "sizes", "errors", "pair_orders", "fitted_order"]
        {
            assert!(v.get(key).is_some(), "{key}");
        }
        assert_eq!(v["method"], "weno4");
        assert_eq!(v["grid_type"], "uniform");
        assert_eq!(v["sizes"].as_array().unwrap().len(), 3);
        assert_eq!(v["pair_orders"].as_array().unwrap().len(), 2);
        assert!(r.to_json().contains(&format_float(r.errors[0])));
    }
}
