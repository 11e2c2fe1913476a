//! ENO interpolation of order `p`.
//!
//! On each interval `[x_i, x_{i+1}]` the stencil starts at `{x_i}` and grows
//! one node at a time toward the side whose next divided difference is
//! smaller in magnitude (left on ties). The piece is the Lagrange polynomial
//! of degree `p - 1` through the final stencil. The stencil always contains
//! `x_i` but not necessarily `x_{i+1}`, so pieces may disagree at interior
//! nodes; evaluation exactly at a node returns the sample value.

use crate::divided_diff::DividedDifferenceTable;
use crate::error::{InterpError, Result};
use crate::grid::{Location, SampleSet};
use crate::interpolant::Interpolant;

pub const DEFAULT_ORDER: usize = 3;
pub const MAX_ORDER: usize = 6;

/// A `p`-node stencil `{x_left, ..., x_{left+p-1}}` chosen for interval `i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnoStencil {
    pub interval: usize,
    pub order: usize,
    pub left: usize,
}

impl EnoStencil {
    pub fn right(&self) -> usize {
        self.left + self.order - 1
    }

    /// Shift `q` in `1..=p` of the stencil `{x_{i-p+q}, ..., x_{i+q-1}}`.
    pub fn shift(&self) -> usize {
        self.left + self.order - self.interval
    }

    pub fn contains(&self, node: usize) -> bool {
        node >= self.left && node <= self.right()
    }

    pub fn nodes(&self) -> std::ops::RangeInclusive<usize> {
        self.left..=self.right()
    }
}

fn check_order(s: &SampleSet, order: usize) -> Result<()> {
    if order == 0 || order > MAX_ORDER {
        return Err(InterpError::InvalidParameter(format!("ENO order must be in 1..={MAX_ORDER}, got {order}")));
    }
    if order > s.len() {
        return Err(InterpError::OrderExceedsGrid { order, len: s.len() });
    }
    Ok(())
}

fn select(table: &DividedDifferenceTable, n: usize, interval: usize, order: usize) -> EnoStencil {
    let mut left = interval;
    let mut right = interval;
    for degree in 1..order {
        let grow_left = if left == 0 {
            false
        } else if right == n - 1 {
            true
        } else {
            let dd_left = table.get(left - 1, degree).expect("within table");
            let dd_right = table.get(left, degree).expect("within table");
            dd_left.abs() <= dd_right.abs()
        };
        if grow_left {
            left -= 1;
        } else {
            right += 1;
        }
    }
    EnoStencil { interval, order, left }
}

/// Selects the ENO stencil of the given order for interval `interval`.
pub fn eno_select_stencil(s: &SampleSet, interval: usize, order: usize) -> Result<EnoStencil> {
    check_order(s, order)?;
    if interval + 1 >= s.len() {
        return Err(InterpError::IndexOutOfRange { first: interval, last: interval + 1, len: s.len() });
    }
    let table = DividedDifferenceTable::build(s, order - 1)?;
    Ok(select(&table, s.len(), interval, order))
}

#[derive(Debug, Clone)]
struct Piece {
    stencil: EnoStencil,
    // 1 / prod_{j != k} (x_k - x_j) for each stencil node
    denominators: Vec<f64>,
}

#[derive(Debug, Clone)]
pub struct EnoInterpolant {
    samples: SampleSet,
    order: usize,
    pieces: Vec<Piece>,
}

impl EnoInterpolant {
    pub fn new(samples: SampleSet, order: usize) -> Result<Self> {
        check_order(&samples, order)?;
        let table = DividedDifferenceTable::build(&samples, order - 1)?;
        let n = samples.len();
        let x = samples.nodes();
        let pieces = (0..n - 1)
            .map(|i| {
                let stencil = select(&table, n, i, order);
                let denominators = stencil
                    .nodes()
                    .map(|k| {
                        let prod: f64 = stencil.nodes().filter(|&j| j != k).map(|j| x[k] - x[j]).product();
                        1.0 / prod
                    })
                    .collect();
                Piece { stencil, denominators }
            })
            .collect();
        Ok(Self { samples, order, pieces })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn stencil(&self, interval: usize) -> Option<EnoStencil> {
        self.pieces.get(interval).map(|p| p.stencil)
    }

    pub fn stencils(&self) -> impl Iterator<Item = EnoStencil> + '_ {
        self.pieces.iter().map(|p| p.stencil)
    }

    /// Evaluates the polynomial piece of `interval` at `x`, regardless of
    /// whether `x` lies in that interval.
    pub fn eval_piece(&self, interval: usize, x: f64) -> f64 {
        let piece = &self.pieces[interval];
        let xs = self.samples.nodes();
        let ys = self.samples.values();
        piece
            .stencil
            .nodes()
            .zip(&piece.denominators)
            .map(|(k, &den)| {
                let prod: f64 = piece.stencil.nodes().filter(|&j| j != k).map(|j| x - xs[j]).product();
                ys[k] * prod * den
            })
            .sum()
    }
}

impl Interpolant for EnoInterpolant {
    fn samples(&self) -> &SampleSet {
        &self.samples
    }

    fn eval(&self, x: f64) -> Result<f64> {
        match self.samples.grid().locate(x)? {
            Location::Node(k) => Ok(self.samples.values()[k]),
            Location::Interval(i) => Ok(self.eval_piece(i, x)),
        }
    }
}
