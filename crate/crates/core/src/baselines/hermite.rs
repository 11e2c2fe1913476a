use crate::error::{InterpError, Result};
use crate::grid::{Location, SampleSet};
use crate::interpolant::Interpolant;

/// Node derivatives for the monotone Hermite interpolant.
///
/// `estimates` are the local weighted-harmonic-mean slopes (zero wherever
/// the neighbouring secants change sign or vanish); `limited` are the same
/// slopes after the per-interval monotonicity limiter.
#[derive(Debug, Clone, PartialEq)]
pub struct HermiteSlopes {
    pub estimates: Vec<f64>,
    pub limited: Vec<f64>,
}

impl HermiteSlopes {
    pub fn new(s: &SampleSet) -> Self {
        let n = s.len();
        let h = s.spacings();
        let d = s.slopes();
        let mut m = vec![0.0; n];
        if n == 2 {
            m[0] = d[0];
            m[1] = d[0];
        } else {
            for i in 1..n - 1 {
                let (dl, dr) = (d[i - 1], d[i]);
                if dl * dr > 0.0 {
                    let (hl, hr) = (h[i - 1], h[i]);
                    let wl = 2.0 * hr + hl;
                    let wr = hr + 2.0 * hl;
                    m[i] = (wl + wr) / (wl / dl + wr / dr);
                }
            }
            m[0] = end_slope(h[0], h[1], d[0], d[1]);
            m[n - 1] = end_slope(h[n - 2], h[n - 3], d[n - 2], d[n - 3]);
        }
        let estimates = m.clone();

        for i in 0..n - 1 {
            if d[i] == 0.0 {
                m[i] = 0.0;
                m[i + 1] = 0.0;
                continue;
            }
            let a = m[i] / d[i];
            let b = m[i + 1] / d[i];
            let r2 = a * a + b * b;
            if r2 > 9.0 {
                let tau = 3.0 / r2.sqrt();
                m[i] = tau * a * d[i];
                m[i + 1] = tau * b * d[i];
            }
        }
        Self { estimates, limited: m }
    }
}

// Three-point one-sided estimate at an end node, kept shape-preserving.
fn end_slope(h0: f64, h1: f64, d0: f64, d1: f64) -> f64 {
    let m = ((2.0 * h0 + h1) * d0 - h0 * d1) / (h0 + h1);
    if m * d0 <= 0.0 {
        0.0
    } else if d0 * d1 <= 0.0 && m.abs() > 3.0 * d0.abs() {
        3.0 * d0
    } else {
        m
    }
}

/// Local monotone piecewise cubic Hermite interpolant.
#[derive(Debug, Clone)]
pub struct MonotoneHermite {
    samples: SampleSet,
    slopes: HermiteSlopes,
}

impl MonotoneHermite {
    pub fn new(samples: SampleSet) -> Result<Self> {
        if samples.len() < 2 {
            return Err(InterpError::TooFewPoints { required: 2, got: samples.len() });
        }
        let slopes = HermiteSlopes::new(&samples);
        Ok(Self { samples, slopes })
    }

    pub fn slopes(&self) -> &HermiteSlopes {
        &self.slopes
    }

    fn eval_interval(&self, i: usize, x: f64) -> f64 {
        let xs = self.samples.nodes();
        let ys = self.samples.values();
        let h = self.samples.spacings()[i];
        let m = &self.slopes.limited;
        let t = (x - xs[i]) / h;
        let t2 = t * t;
        let t3 = t2 * t;
        let h00 = 2.0 * t3 - 3.0 * t2 + 1.0;
        let h10 = t3 - 2.0 * t2 + t;
        let h01 = -2.0 * t3 + 3.0 * t2;
        let h11 = t3 - t2;
        h00 * ys[i] + h10 * h * m[i] + h01 * ys[i + 1] + h11 * h * m[i + 1]
    }
}

impl Interpolant for MonotoneHermite {
    fn samples(&self) -> &SampleSet {
        &self.samples
    }

    fn eval(&self, x: f64) -> Result<f64> {
        match self.samples.grid().locate(x)? {
            Location::Node(k) => Ok(self.samples.values()[k]),
            Location::Interval(i) => Ok(self.eval_interval(i, x)),
        }
    }
}

/// One-shot evaluation; rebuilds the slopes on every call.
pub fn monotonic_hermite_eval(s: &SampleSet, x: f64) -> Result<f64> {
    MonotoneHermite::new(s.clone())?.eval(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::{sample, Grid};

    #[test]
    fn monotone_data_stays_monotone() {
        let s = SampleSet::from_xy(&[0.0, 0.3, 1.0, 1.2, 3.0, 3.1], &[0.0, 0.1, 0.1, 2.0, 2.5, 9.0]).unwrap();
        let hm = MonotoneHermite::new(s.clone()).unwrap();
        let mut prev = f64::NEG_INFINITY;
        for k in 0..=3100 {
            let v = hm.eval(k as f64 / 1000.0).unwrap();
            assert!(v >= prev - 1e-14);
            prev = v;
        }
    }

    #[test]
    fn heaviside_stays_in_range() {
        let s = sample(&Grid::uniform(-1.0, 1.0, 16).unwrap(), |x| if x < 0.0 { 0.0 } else { 4.0 }).unwrap();
        let hm = MonotoneHermite::new(s).unwrap();
        for k in 0..=2000 {
            let v = hm.eval(-1.0 + k as f64 / 1000.0).unwrap();
            assert!((0.0..=4.0).contains(&v), "{v}");
        }
    }

    #[test]
    fn extremum_gets_zero_slope() {
        let s = sample(&Grid::uniform(-1.0, 1.0, 9).unwrap(), |x| 5.0 * (1.0 - (-4.0 * x * x).exp())).unwrap();
        let sl = HermiteSlopes::new(&s);
        assert_eq!(sl.limited[4], 0.0);
        assert_eq!(sl.estimates[4], 0.0);
    }

    #[test]
    fn slope_ratio_region() {
        let g = Grid::random_nonuniform(0.0, 1.0, 30, 2).unwrap();
        let s = sample(&g, |x| (6.0 * x).exp()).unwrap();
        let sl = HermiteSlopes::new(&s);
        for (i, &d) in s.slopes().iter().enumerate() {
            for m in [sl.limited[i], sl.limited[i + 1]] {
                let r = m / d;
                assert!((0.0..=3.0 + 1e-12).contains(&r), "{r}");
            }
        }
    }

    #[test]
    fn two_points_is_linear() {
        let s = SampleSet::from_xy(&[0.0, 2.0], &[1.0, 5.0]).unwrap();
        assert!((monotonic_hermite_eval(&s, 0.5).unwrap() - 2.0).abs() < 1e-15);
    }
}
