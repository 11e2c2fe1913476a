//! Comparison interpolants: sliding cubic Lagrange, cubic splines (natural
//! and not-a-knot) and a local monotone cubic Hermite.

mod hermite;
mod lagrange;
mod spline;

pub use hermite::{monotonic_hermite_eval, HermiteSlopes, MonotoneHermite};
pub use lagrange::{cubic_lagrange_eval, CubicLagrange};
pub use spline::{natural_cubic_spline_build, CubicSpline, SplineEnd};
