//! Interface profiles: grid samples plus far-field extension.

use crate::error::{CoreError, Result};
use crate::grid::Grid;

/// Far-field data of a graph interface: constant limits at -inf/+inf and an
/// optional background tilt.
///
/// With tilt beta, the full interface is f(x) = beta*x + samples; the samples
/// themselves stay bounded and settle to `left`/`right`. Monotone-decreasing
/// configurations have left >= right and beta <= 0.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FarField {
    pub left: f64,
    pub right: f64,
    pub tilt: f64,
}

impl FarField {
    pub fn flat(left: f64, right: f64) -> Self {
        FarField { left, right, tilt: 0.0 }
    }

    pub fn decaying() -> Self {
        FarField { left: 0.0, right: 0.0, tilt: 0.0 }
    }

    pub fn is_decaying(&self, tol: f64) -> bool {
        self.left.abs() <= tol && self.right.abs() <= tol
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.left.is_finite() && self.right.is_finite() && self.tilt.is_finite()) {
            return Err(CoreError::InvalidParameter(
                "far-field limits and tilt must be finite".into(),
            ));
        }
        Ok(())
    }
}

/// Default boundary-settling tolerance: tail truncation must sit below the
/// quadrature error targets.
pub fn default_far_field_tolerance(far: &FarField) -> f64 {
    1e-8 * (far.left - far.right).abs().max(1.0)
}

/// Samples of the (tilt-removed) interface graph on a uniform grid, together
/// with its far-field extension. Immutable once constructed; evolution builds
/// successor profiles.
#[derive(Debug, Clone, PartialEq)]
pub struct InterfaceProfile {
    grid: Grid,
    samples: Vec<f64>,
    far: FarField,
    time: f64,
}

impl InterfaceProfile {
    pub fn new(grid: Grid, samples: Vec<f64>, far: FarField, time: f64) -> Result<Self> {
        far.validate()?;
        if samples.len() != grid.len() {
            return Err(CoreError::InvalidParameter(format!(
                "sample count {} does not match grid size {}",
                samples.len(),
                grid.len()
            )));
        }
        Ok(InterfaceProfile { grid, samples, far, time })
    }

    pub fn grid(&self) -> &Grid {
        &self.grid
    }

    pub fn samples(&self) -> &[f64] {
        &self.samples
    }

    pub fn far_field(&self) -> &FarField {
        &self.far
    }

    pub fn time(&self) -> f64 {
        self.time
    }

    /// Sample by signed index with the exact far-field extension outside the
    /// grid: `left` for x < -L, `right` for x >= L.
    #[inline]
    pub fn extended(&self, i: isize) -> f64 {
        if i < 0 {
            self.far.left
        } else if i as usize >= self.samples.len() {
            self.far.right
        } else {
            self.samples[i as usize]
        }
    }

    /// Point query with far-field extension; on-grid x must be a node.
    pub fn value_at(&self, x: f64) -> f64 {
        if x < -self.grid.half_width() {
            self.far.left
        } else if x >= self.grid.half_width() {
            self.far.right
        } else {
            self.samples[self.grid.nearest_node(x)]
        }
    }

    /// Successor profile with new samples and time; grid and far field carry over.
    pub fn advanced(&self, samples: Vec<f64>, time: f64) -> Result<Self> {
        InterfaceProfile::new(self.grid, samples, self.far, time)
    }

    pub fn max_sample(&self) -> f64 {
        self.samples.iter().copied().fold(f64::NEG_INFINITY, f64::max)
    }

    pub fn min_sample(&self) -> f64 {
        self.samples.iter().copied().fold(f64::INFINITY, f64::min)
    }
}

/// Outcome of profile validation. A report, not an error: callers decide what
/// to do with violations.
#[derive(Debug, Clone, PartialEq)]
pub struct ValidationReport {
    /// |f_0 - a|
    pub boundary_dev_left: f64,
    /// |f_{N-1} - b|
    pub boundary_dev_right: f64,
    pub non_finite: bool,
    /// max_i (f_{i+1} - f_i)/h, only when monotonicity was requested.
    pub monotonicity_violation: Option<f64>,
}

impl ValidationReport {
    pub fn settled(&self, far_tol: f64) -> bool {
        !self.non_finite
            && self.boundary_dev_left <= far_tol
            && self.boundary_dev_right <= far_tol
    }
}

/// Check boundary settling, sample finiteness, and (optionally) the largest
/// increasing difference quotient of a profile expected to be monotone
/// decreasing.
pub fn validate_profile(profile: &InterfaceProfile, check_monotone: bool) -> ValidationReport {
    let s = profile.samples();
    let far = profile.far_field();
    let non_finite = s.iter().any(|v| !v.is_finite());
    let boundary_dev_left = (s[0] - far.left).abs();
    let boundary_dev_right = (s[s.len() - 1] - far.right).abs();
    let monotonicity_violation = check_monotone.then(|| {
        let h = profile.grid().spacing();
        s.windows(2)
            .map(|w| (w[1] - w[0]) / h)
            .fold(0.0_f64, f64::max)
    });
    ValidationReport { boundary_dev_left, boundary_dev_right, non_finite, monotonicity_violation }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grid() -> Grid {
        Grid::new(40.0, 2048).unwrap()
    }

    #[test]
    fn constant_profile_passes_all_checks() {
        let g = grid();
        let p = InterfaceProfile::new(g, vec![0.7; g.len()], FarField::flat(0.7, 0.7), 0.0)
            .unwrap();
        let r = validate_profile(&p, true);
        assert_eq!(r.boundary_dev_left, 0.0);
        assert_eq!(r.boundary_dev_right, 0.0);
        assert!(!r.non_finite);
        assert_eq!(r.monotonicity_violation, Some(0.0));
        assert!(r.settled(default_far_field_tolerance(p.far_field())));
    }

    #[test]
    fn tanh_step_settles_within_default_tolerance() {
        let g = grid();
        let samples = g.sample(|x| (-x).tanh());
        let p = InterfaceProfile::new(g, samples, FarField::flat(1.0, -1.0), 0.0).unwrap();
        let r = validate_profile(&p, true);
        let tol = default_far_field_tolerance(p.far_field());
        // analytic tail of tanh: |tanh(40) - 1| ~ 3.6e-35
        assert!(r.settled(tol), "deviations {} / {}", r.boundary_dev_left, r.boundary_dev_right);
        assert!(r.monotonicity_violation.unwrap() <= 0.0);
    }

    #[test]
    fn constructed_boundary_offset_is_reported() {
        let g = grid();
        let mut samples = vec![1.0; g.len()];
        samples[0] = 2.0; // a + 1
        let p = InterfaceProfile::new(g, samples, FarField::flat(1.0, 1.0), 0.0).unwrap();
        let r = validate_profile(&p, false);
        assert!((r.boundary_dev_left - 1.0).abs() < 1e-15);
        assert_eq!(r.boundary_dev_right, 0.0);
    }

    #[test]
    fn far_field_extension_is_exact() {
        let g = grid();
        let samples = g.sample(|x| (-x).tanh());
        let p = InterfaceProfile::new(g, samples, FarField::flat(1.0, -1.0), 0.0).unwrap();
        assert_eq!(p.extended(-1), 1.0);
        assert_eq!(p.extended(-100_000), 1.0);
        assert_eq!(p.extended(g.len() as isize), -1.0);
        assert_eq!(p.value_at(-1e9), 1.0);
        assert_eq!(p.value_at(40.0), -1.0);
        assert_eq!(p.value_at(41.5), -1.0);
    }

    #[test]
    fn nan_samples_flagged() {
        let g = grid();
        let mut samples = vec![0.0; g.len()];
        samples[17] = f64::NAN;
        let p = InterfaceProfile::new(g, samples, FarField::decaying(), 0.0).unwrap();
        assert!(validate_profile(&p, false).non_finite);
    }
}
