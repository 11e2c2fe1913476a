#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use weno_core::{Grid, SampleSet};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Newton-form interpolating polynomial through `(xs, ys)`, built with an
/// in-place divided-difference table.
pub fn newton_eval(xs: &[f64], ys: &[f64], x: f64) -> f64 {
    let n = xs.len();
    let mut c = ys.to_vec();
    for j in 1..n {
        for k in (j..n).rev() {
            c[k] = (c[k] - c[k - 1]) / (xs[k] - xs[k - j]);
        }
    }
    let mut acc = c[n - 1];
    for k in (0..n - 1).rev() {
        acc = acc * (x - xs[k]) + c[k];
    }
    acc
}

/// Horner evaluation, coefficients in increasing degree.
pub fn poly(coeffs: &[f64], x: f64) -> f64 {
    coeffs.iter().rev().fold(0.0, |acc, c| acc * x + c)
}

pub fn random_coeffs(rng: &mut ChaCha8Rng, degree: usize) -> Vec<f64> {
    (0..=degree).map(|_| rng.random_range(-2.0..2.0)).collect()
}

/// Strictly increasing nodes on `[a, b]` with spacing ratios bounded by 4.
pub fn random_grid(rng: &mut ChaCha8Rng, a: f64, b: f64, n: usize) -> Grid {
    let widths: Vec<f64> = (0..n - 1).map(|_| rng.random_range(1.0..4.0)).collect();
    let total: f64 = widths.iter().sum();
    let mut nodes = Vec::with_capacity(n);
    let mut x = a;
    nodes.push(a);
    for w in &widths[..n - 2] {
        x += w / total * (b - a);
        nodes.push(x);
    }
    nodes.push(b);
    Grid::new(nodes).unwrap()
}

pub fn sampled(grid: &Grid, f: impl Fn(f64) -> f64) -> SampleSet {
    weno_core::sample(grid, f).unwrap()
}

/// Point strictly inside interval `i`.
pub fn inner_point(rng: &mut ChaCha8Rng, grid: &Grid, i: usize) -> f64 {
    let (a, b) = (grid.nodes()[i], grid.nodes()[i + 1]);
    a + rng.random_range(0.01..0.99) * (b - a)
}

pub fn rel_diff(a: f64, b: f64, scale: f64) -> f64 {
    (a - b).abs() / scale.max(a.abs()).max(b.abs()).max(f64::MIN_POSITIVE)
}
