//! Run-level monotonicity and extremum verdicts.

use crate::trajectory::Trajectory;

/// Worst-case quantities over a run, judged against one tolerance.
#[derive(Debug, Clone, PartialEq)]
pub struct GuardReport {
    /// max over snapshots of max_x slope of the samples.
    pub max_slope: f64,
    /// min over snapshots of min_x slope.
    pub min_slope: f64,
    /// max_t ||f||_inf - ||f_0||_inf.
    pub sup_norm_drift: f64,
    /// min_t slope_min(t) - slope_min(0); negative means steepening.
    pub slope_steepening: f64,
    pub max_lap: u32,
    /// max over snapshots of tilt + slope_max (the full-interface slope);
    /// only meaningful for tilted runs.
    pub max_full_slope: f64,
    pub tolerance: f64,
    pub pass: bool,
}

/// Check a monotone-decreasing run: the samples' slope stays nonpositive (to
/// tolerance), the sup norm does not grow, the initial steepest slope is
/// never exceeded, and the lap number stays zero. For tilted runs the full
/// slope tilt + slope(samples) must additionally stay below tilt/2.
pub fn monotonicity_guard(traj: &Trajectory, tol: f64) -> GuardReport {
    let records = &traj.records;
    assert!(!records.is_empty(), "guard needs diagnostics records");
    let beta = traj.meta.far.tilt;
    let sup0 = records[0].max.abs().max(records[0].min.abs());
    let slope_min0 = records[0].slope_min;

    let mut max_slope = f64::NEG_INFINITY;
    let mut min_slope = f64::INFINITY;
    let mut sup_norm_drift = f64::NEG_INFINITY;
    let mut slope_steepening = f64::INFINITY;
    let mut max_lap = 0;
    for r in records {
        max_slope = max_slope.max(r.slope_max);
        min_slope = min_slope.min(r.slope_min);
        sup_norm_drift = sup_norm_drift.max(r.max.abs().max(r.min.abs()) - sup0);
        slope_steepening = slope_steepening.min(r.slope_min - slope_min0);
        max_lap = max_lap.max(r.lap);
    }
    let max_full_slope = beta + max_slope;

    let mut pass = max_slope <= tol
        && sup_norm_drift <= tol
        && slope_steepening >= -tol
        && max_lap == 0;
    if beta < 0.0 {
        // tilted mechanism: the full slope keeps a definite sign margin
        pass = pass && max_full_slope <= beta / 2.0 + tol;
    }

    GuardReport {
        max_slope,
        min_slope,
        sup_norm_drift,
        slope_steepening,
        max_lap,
        max_full_slope,
        tolerance: tol,
        pass,
    }
}
