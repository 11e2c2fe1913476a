//! Lagrange-form evaluation through a handful of nodes.

/// Evaluates the polynomial through `(xs[k], ys[k])` at `x`, using the
/// product form with pairwise differences.
pub fn lagrange_eval(xs: &[f64], ys: &[f64], x: f64) -> f64 {
    debug_assert_eq!(xs.len(), ys.len());
    let mut sum = 0.0;
    for (k, (&xk, &yk)) in xs.iter().zip(ys).enumerate() {
        let mut basis = 1.0;
        for (j, &xj) in xs.iter().enumerate() {
            if j != k {
                basis *= (x - xj) / (xk - xj);
            }
        }
        sum += yk * basis;
    }
    sum
}

/// Line through `(x0, y0)` and `(x1, y1)`, evaluated at `x`.
pub fn linear(x0: f64, y0: f64, x1: f64, y1: f64, x: f64) -> f64 {
    (-y0 * (x - x1) + y1 * (x - x0)) / (x1 - x0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reproduces_cubic() {
        let xs = [-1.0, 0.3, 0.7, 2.0];
        let f = |x: f64| 2.0 * x * x * x - x + 0.5;
        let ys: Vec<f64> = xs.iter().map(|&x| f(x)).collect();
        for &x in &[-0.5, 0.0, 1.1, 1.9] {
            assert!((lagrange_eval(&xs, &ys, x) - f(x)).abs() < 1e-13);
        }
        assert_eq!(lagrange_eval(&xs, &ys, 0.3), ys[1]);
    }

    #[test]
    fn linear_endpoints() {
        assert_eq!(linear(1.0, 2.0, 3.0, 6.0, 1.0), 2.0);
        assert_eq!(linear(1.0, 2.0, 3.0, 6.0, 3.0), 6.0);
        assert_eq!(linear(1.0, 2.0, 3.0, 6.0, 2.0), 4.0);
    }
}
