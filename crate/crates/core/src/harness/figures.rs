use std::fmt::Write as _;

use crate::error::Result;
use crate::grid::sample;
use crate::harness::format::format_float;
use crate::harness::{GridKind, GridSpec, FIGURE_DENSITY};
use crate::method::Method;
use crate::testfuncs::TestFunction;

pub const CSV_HEADER: &str = "x,y_exact,y_interp,abs_err,is_node";

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CurveRow {
    pub x: f64,
    pub y_exact: f64,
    pub y_interp: f64,
    pub abs_err: f64,
    pub is_node: bool,
}

/// Dense samples of one interpolant against the exact function.
#[derive(Debug, Clone, PartialEq)]
pub struct FigureCurve {
    pub method: Method,
    pub function: TestFunction,
    pub grid: GridSpec,
    pub rows: Vec<CurveRow>,
}

impl FigureCurve {
    pub fn build(method: Method, function: TestFunction, grid: GridSpec, density: usize) -> Result<Self> {
        let g = grid.build()?;
        let samples = sample(&g, |x| function.value(x))?;
        let interp = method.build(samples)?;
        let xs = g.nodes();
        let mut rows = Vec::with_capacity((xs.len() - 1) * density + 1);
        let mut push = |x: f64, is_node: bool| -> Result<()> {
            let y_exact = function.value(x);
            let y_interp = interp.eval(x)?;
            rows.push(CurveRow { x, y_exact, y_interp, abs_err: (y_interp - y_exact).abs(), is_node });
            Ok(())
        };
        for i in 0..xs.len() - 1 {
            let step = (xs[i + 1] - xs[i]) / density as f64;
            push(xs[i], true)?;
            for k in 1..density {
                push(xs[i] + step * k as f64, false)?;
            }
        }
        push(xs[xs.len() - 1], true)?;
        Ok(Self { method, function, grid, rows })
    }

    pub fn nodes(&self) -> impl Iterator<Item = &CurveRow> {
        self.rows.iter().filter(|r| r.is_node)
    }

    pub fn min_interp(&self) -> f64 {
        self.rows.iter().map(|r| r.y_interp).fold(f64::INFINITY, f64::min)
    }

    pub fn max_interp(&self) -> f64 {
        self.rows.iter().map(|r| r.y_interp).fold(f64::NEG_INFINITY, f64::max)
    }

    /// CSV text with header `x,y_exact,y_interp,abs_err,is_node`.
    pub fn to_csv(&self) -> String {
        let mut out = String::with_capacity(self.rows.len() * 96);
        out.push_str(CSV_HEADER);
        out.push('\n');
        for r in &self.rows {
            let _ = writeln!(
                out,
                "{},{},{},{},{}",
                format_float(r.x),
                format_float(r.y_exact),
                format_float(r.y_interp),
                format_float(r.abs_err),
                u8::from(r.is_node)
            );
        }
        out
    }

    /// File stem `<function>_<method>_<grid>_<n>`.
    pub fn file_stem(&self) -> String {
        format!("{}_{}_{}_{}", self.function, self.method, self.grid.kind, self.grid.points)
    }
}

/// One curve per `(method, size)` pair, methods outermost.
pub fn figure_data(
    function: TestFunction,
    methods: &[Method],
    grid_kind: GridKind,
    sizes: &[usize],
    seed: u64,
) -> Result<Vec<FigureCurve>> {
    let mut curves = Vec::with_capacity(methods.len() * sizes.len());
    for &method in methods {
        for &n in sizes {
            curves.push(FigureCurve::build(method, function, GridSpec::new(grid_kind, n, seed), FIGURE_DENSITY)?);
        }
    }
    Ok(curves)
}
