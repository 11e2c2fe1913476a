use log::warn;

use crate::error::Result;
use crate::grid::SampleSet;
use crate::method::Method;

/// Optical depth along a ray, one value per node.
#[derive(Debug, Clone, PartialEq)]
pub struct OpticalDepth {
    pub s: Vec<f64>,
    pub tau: Vec<f64>,
    /// Set when any absorption sample was negative.
    pub negative_chi: bool,
}

/// Integrates `dτ = -χ ds` cell by cell with Simpson's rule, recovering the
/// cell-midpoint value of `χ` with `method`.
pub fn optical_depth_simpson(chi: &SampleSet, method: Method, tau0: f64) -> Result<OpticalDepth> {
    let negative_chi = chi.values().iter().any(|&c| c < 0.0);
    if negative_chi {
        warn!("absorption coefficient has negative samples; optical depth is not monotone");
    }
    let interp = method.build(chi.clone())?;
    let s = chi.nodes();
    let c = chi.values();
    let mut tau = Vec::with_capacity(s.len());
    tau.push(tau0);
    for i in 0..s.len() - 1 {
        let mid = interp.eval(0.5 * (s[i] + s[i + 1]))?;
        let delta = (s[i + 1] - s[i]) / 6.0 * (c[i] + 4.0 * mid + c[i + 1]);
        if delta < 0.0 && !negative_chi {
            warn!("interpolated midpoint {mid} in cell {i} makes the optical depth increase");
        }
        tau.push(tau[i] - delta);
    }
    Ok(OpticalDepth { s: s.to_vec(), tau, negative_chi })
}
