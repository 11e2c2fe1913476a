//! Forward divided differences `y[x_k, ..., x_{k+j}]`.
//!
//! Across a jump of size `J` the `j`-th divided difference behaves like
//! `J / h^j`, while on smooth data it stays bounded by `y^(j) / j!`. ENO
//! stencil selection relies on that contrast.

use crate::error::{InterpError, Result};
use crate::grid::SampleSet;

/// Divided difference of degree `j` starting at node `k`.
pub fn divided_difference(s: &SampleSet, k: usize, j: usize) -> Result<f64> {
    let n = s.len();
    if k + j >= n {
        return Err(InterpError::IndexOutOfRange { first: k, last: k + j, len: n });
    }
    let x = &s.nodes()[k..=k + j];
    let mut work: Vec<f64> = s.values()[k..=k + j].to_vec();
    for level in 1..=j {
        for m in 0..=j - level {
            work[m] = (work[m + 1] - work[m]) / (x[m + level] - x[m]);
        }
    }
    Ok(work[0])
}

/// Dense triangular table of divided differences up to a maximum degree.
#[derive(Debug, Clone)]
pub struct DividedDifferenceTable {
    // entries[j][k] = y[x_k, ..., x_{k+j}]
    entries: Vec<Vec<f64>>,
}

impl DividedDifferenceTable {
    pub fn build(s: &SampleSet, max_degree: usize) -> Result<Self> {
        let n = s.len();
        if max_degree >= n {
            return Err(InterpError::DegreeTooLarge { degree: max_degree, len: n });
        }
        let x = s.nodes();
        let mut entries = Vec::with_capacity(max_degree + 1);
        entries.push(s.values().to_vec());
        for j in 1..=max_degree {
            let prev = &entries[j - 1];
            let row: Vec<f64> = (0..n - j).map(|k| (prev[k + 1] - prev[k]) / (x[k + j] - x[k])).collect();
            entries.push(row);
        }
        Ok(Self { entries })
    }

    pub fn max_degree(&self) -> usize {
        self.entries.len() - 1
    }

    /// `y[x_k, ..., x_{k+j}]`, or `None` outside the table.
    pub fn get(&self, k: usize, j: usize) -> Option<f64> {
        self.entries.get(j).and_then(|row| row.get(k)).copied()
    }

    /// All divided differences of degree `j`.
    pub fn degree(&self, j: usize) -> &[f64] {
        &self.entries[j]
    }
}
