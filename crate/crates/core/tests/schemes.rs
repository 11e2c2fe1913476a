mod common;

use approx::assert_relative_eq;
use common::*;
use weno_core::harness::{
    convergence_study, measure_error, FigureCurve, GridKind, GridSpec, Norm, DISCONTINUOUS_SIZES, NORM_DENSITY,
};
use weno_core::weno4::weno4_weights;
use weno_core::weno4_alt::weno4alt_weights;
use weno_core::{
    sample, weno4_eval, EnoInterpolant, Grid, Interpolant, Method, MonotoneHermite, SampleSet, TestFunction,
};

fn heaviside_data(n: usize) -> SampleSet {
    let g = Grid::uniform(-1.0, 1.0, n).unwrap();
    sample(&g, |x| TestFunction::Heaviside.value(x)).unwrap()
}

#[test]
fn weno4_on_cubic_with_equal_indicators() {
    let s = SampleSet::from_xy(&[0.0, 1.0, 2.0, 3.0], &[0.0, 1.0, 8.0, 27.0]).unwrap();
    assert_relative_eq!(weno4_eval(&s, 1.5).unwrap(), 3.375, max_relative = 1e-12);
}

#[test]
fn weno4_symmetric_step_uses_linear_weights() {
    let s = SampleSet::from_xy(&[-1.5, -0.5, 0.5, 1.5], &[0.0, 0.0, 4.0, 4.0]).unwrap();
    let w = weno4_weights(&s, 0.0).unwrap().unwrap();
    assert_relative_eq!(w.indicators[0], 256.0, max_relative = 1e-12);
    assert_relative_eq!(w.indicators[1], 256.0, max_relative = 1e-12);
    assert_relative_eq!(weno4_eval(&s, 0.0).unwrap(), 2.0, max_relative = 1e-12);
}

#[test]
fn weno4alt_step_prefers_the_middle_candidate() {
    let s = SampleSet::from_xy(&[0.0, 1.0, 2.0, 3.0, 4.0, 5.0], &[0.0, 0.0, 0.0, 4.0, 4.0, 4.0]).unwrap();
    let w = weno4alt_weights(&s, 2.5).unwrap().unwrap();
    assert!(w.nonlinear[1] > 0.9, "{:?}", w.nonlinear);
}

#[test]
fn eno3_is_exact_away_from_the_jump() {
    for n in [16, 36, 76] {
        let data = heaviside_data(n);
        let jump_cell = data.grid().interval_of(0.0).unwrap();
        let eno = EnoInterpolant::new(data.clone(), 3).unwrap();
        for i in (0..n - 1).filter(|&i| i != jump_cell) {
            let (a, b) = (data.nodes()[i], data.nodes()[i + 1]);
            for k in 0..=20 {
                let x = a + (b - a) * k as f64 / 20.0;
                let err = (eno.eval(x).unwrap() - TestFunction::Heaviside.value(x)).abs();
                assert!(err <= 4e-10, "n={n} x={x} err={err}");
            }
        }
    }
}

#[test]
fn weno4_switches_off_the_candidate_across_a_jump_on_uniform_grids() {
    // jump between x_{i-1} and x_i, smooth variation 1e-3 of the jump
    let nodes: Vec<f64> = (0..6).map(|k| k as f64).collect();
    let y: Vec<f64> = nodes.iter().map(|&x| 1e-3 * (0.4 * x).sin() + if x >= 2.0 { 1.0 } else { 0.0 }).collect();
    let s = SampleSet::from_xy(&nodes, &y).unwrap();
    let w = weno4_weights(&s, 2.5).unwrap().unwrap();
    assert!(w.nonlinear[0] <= 1e-3, "{:?}", w.nonlinear);
}

#[test]
fn weno4_jump_suppression_levels_off_on_nonuniform_grids() {
    let mut rng = rng(3);
    let g = random_grid(&mut rng, 0.0, 5.0, 6);
    let at = 0.5 * (g.nodes()[1] + g.nodes()[2]);
    let mid = 0.5 * (g.nodes()[2] + g.nodes()[3]);
    let omega = |j: f64| {
        let s = sampled(&g, |x| 1e-3 * (0.4 * x).sin() + if x >= at { j } else { 0.0 });
        weno4_weights(&s, mid).unwrap().unwrap().nonlinear[0]
    };
    let (small, large) = (omega(1.0), omega(1e3));
    assert!(small < 0.05, "{small}");
    assert_relative_eq!(small, large, max_relative = 0.05);
}

#[test]
fn weno4alt_is_not_better_than_weno4_on_the_discontinuous_sine() {
    let grid = GridSpec::new(GridKind::Uniform, 36, 0);
    let f = TestFunction::DiscSine;
    let alt = measure_error(Method::Weno4Alt, f, grid, Norm::L1, NORM_DENSITY, true).unwrap().error;
    let w4 = measure_error(Method::Weno4, f, grid, Norm::L1, NORM_DENSITY, true).unwrap().error;
    assert!(alt >= w4, "weno4alt {alt} < weno4 {w4}");
}

#[test]
fn weno4_is_not_clipped_near_the_gaussian_minimum() {
    let g = Grid::uniform(-1.0, 1.0, 36).unwrap();
    let f = |x: f64| TestFunction::GaussianWell.value(x);
    let data = sample(&g, f).unwrap();
    let weno = Method::Weno4.build(data.clone()).unwrap();
    let hermite = MonotoneHermite::new(data).unwrap();
    let (mut ew, mut eh) = (0.0f64, 0.0f64);
    for k in 0..=400 {
        let x = -0.15 + 0.3 * k as f64 / 400.0;
        ew = ew.max((weno.eval(x).unwrap() - f(x)).abs());
        eh = eh.max((hermite.eval(x).unwrap() - f(x)).abs());
    }
    assert!(ew <= eh, "weno4 {ew} hermite {eh}");
}

#[test]
fn weno4_error_ratio_between_17_and_36_points() {
    let err = |n| {
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
    let ratio = err(17) / err(36);
    assert!((16.0 / 1.5..=16.0 * 1.5).contains(&ratio), "ratio {ratio}");
}

#[test]
fn cubic_lagrange_error_on_cubic_data_vanishes() {
    let mut rng = rng(5);
    let g = random_grid(&mut rng, -1.0, 1.0, 12);
    let f = |x: f64| 1.0 - 2.0 * x + 0.5 * x * x + 3.0 * x * x * x;
    let interp = Method::Cubic.build(sampled(&g, f)).unwrap();
    let e = weno_core::harness::interpolation_error(interp.as_ref(), f, Norm::Linf, 16, false).unwrap();
    assert!(e <= 1e-12 * 6.5, "{e}");
}

#[test]
fn eno3_heaviside_order_is_first() {
    let r =
        convergence_study(Method::Eno3, TestFunction::Heaviside, GridKind::Uniform, &DISCONTINUOUS_SIZES, 0, Norm::L1)
            .unwrap();
    assert!((r.fitted_order - 1.072).abs() <= 0.15, "{}", r.fitted_order);
}

#[test]
fn overshoot_does_not_grow_under_refinement() {
    for m in [Method::Eno3, Method::Weno3, Method::Weno4, Method::Weno4Alt, Method::Hermite] {
        let overshoot = |n| {
            let c =
                FigureCurve::build(m, TestFunction::Heaviside, GridSpec::new(GridKind::Uniform, n, 0), 200).unwrap();
            (-c.min_interp()).max(c.max_interp() - 4.0).max(0.0)
        };
        let o: Vec<f64> = [16, 36, 76].iter().map(|&n| overshoot(n)).collect();
        assert!(o[1] <= o[0] + 1e-9 && o[2] <= o[1] + 1e-9, "{m}: {o:?}");
    }
}

#[test]
fn weno4alt_heaviside_stays_within_one_percent() {
    for n in [16, 36, 76] {
        let c =
            FigureCurve::build(Method::Weno4Alt, TestFunction::Heaviside, GridSpec::new(GridKind::Uniform, n, 0), 400)
                .unwrap();
        assert!(c.min_interp() >= -0.04 && c.max_interp() <= 4.04, "n={n}");
    }
}

#[test]
fn weno4_heaviside_bounded_on_random_grids() {
    for seed in 0..20 {
        for n in [16, 36, 76] {
            let c = FigureCurve::build(
                Method::Weno4,
                TestFunction::Heaviside,
                GridSpec::new(GridKind::Random, n, seed),
                200,
            )
            .unwrap();
            assert!(c.min_interp() >= -0.2 && c.max_interp() <= 4.2, "seed={seed} n={n}");
        }
    }
}

#[test]
fn weno4_boundary_cell_can_reverse_optical_depth() {
    // one-sided quadratic on the first cell overshoots a step in the second
    let chi = SampleSet::from_xy(&[0.0, 1.0, 2.0, 3.0, 4.0], &[0.1, 0.1, 20.0, 20.0, 20.0]).unwrap();
    let depth = weno_core::harness::optical_depth_simpson(&chi, Method::Weno4, 0.0).unwrap();
    assert!(depth.tau[1] > depth.tau[0]);
    let bounded = weno_core::harness::optical_depth_simpson(&chi, Method::Hermite, 0.0).unwrap();
    assert!(bounded.tau.windows(2).all(|w| w[1] < w[0]));
}
