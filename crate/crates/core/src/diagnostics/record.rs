//! Per-profile monitored quantities.

use serde::{Deserialize, Serialize};

use crate::profile::InterfaceProfile;
use crate::reduce::pairwise_sum;
use crate::stencil;

/// Everything the analysis constrains, evaluated on one profile.
///
/// Field names match the on-disk record schema: `M`/`m` are the max/min of
/// the samples, slope extrema are of the tilt-removed graph, norms are
/// trapezoid L^2 norms of the first and third derivatives, `holder_d2f` is
/// the discrete C^gamma seminorm of the second derivative, and the far-field
/// deviations are measured at the configured probes.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DiagnosticsRecord {
    pub t: f64,
    #[serde(rename = "M")]
    pub max: f64,
    #[serde(rename = "m")]
    pub min: f64,
    pub slope_max: f64,
    pub slope_min: f64,
    pub lap: u32,
    pub l2_dxf: f64,
    pub l2_dx3f: f64,
    pub holder_d2f: f64,
    pub energy_residual: Option<f64>,
    pub ff_dev_left: f64,
    pub ff_dev_right: f64,
}

/// Diagnostics configuration.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiagConfig {
    /// Holder exponent in (0, 1/2).
    pub gamma: f64,
    /// Probe position as a fraction of the half-width.
    pub probe_fraction: f64,
    /// Threshold below which slopes count as zero for lap counting;
    /// defaults to 1e-7 * max(1, (a-b)/L).
    pub slope_floor: Option<f64>,
    /// Pair-distance cap for the Holder seminorm; defaults to L/4.
    pub holder_window: Option<f64>,
}

impl Default for DiagConfig {
    fn default() -> Self {
        DiagConfig { gamma: 0.25, probe_fraction: 0.9, slope_floor: None, holder_window: None }
    }
}

impl DiagConfig {
    pub fn slope_floor_for(&self, profile: &InterfaceProfile) -> f64 {
        self.slope_floor.unwrap_or_else(|| {
            let far = profile.far_field();
            let scale = (far.left - far.right) / profile.grid().half_width();
            1e-7 * scale.abs().max(1.0)
        })
    }
}

/// Count strict sign changes of the slope after thresholding small values to
/// zero, so finite-difference noise cannot create spurious laps.
pub fn lap_number(dxf: &[f64], floor: f64) -> u32 {
    let mut changes = 0;
    let mut prev = 0i8;
    for &d in dxf {
        let s = if d.abs() <= floor {
            0
        } else if d > 0.0 {
            1
        } else {
            -1
        };
        if s != 0 {
            if prev != 0 && s != prev {
                changes += 1;
            }
            prev = s;
        }
    }
    changes
}

/// Discrete homogeneous Holder seminorm of a field: the sup of
/// |g(x) - g(y)| / |x-y|^gamma over node pairs with h <= |x-y| <= window.
/// Nearby pairs dominate for gamma < 1/2, so the windowed sup is a faithful
/// stand-in for the full O(N^2) one.
pub fn holder_seminorm(field: &[f64], h: f64, gamma: f64, window: f64) -> f64 {
    let n = field.len();
    let max_sep = ((window / h).floor() as usize).clamp(1, n - 1);
    // precompute |j h|^-gamma
    let inv_pow: Vec<f64> = (1..=max_sep).map(|j| (j as f64 * h).powf(-gamma)).collect();
    let mut sup = 0.0_f64;
    for i in 0..n - 1 {
        let top = (i + max_sep).min(n - 1);
        for j in i + 1..=top {
            let v = (field[i] - field[j]).abs() * inv_pow[j - i - 1];
            if v > sup {
                sup = v;
            }
        }
    }
    sup
}

/// Trapezoid L^2 norm over the grid.
pub fn l2_norm(field: &[f64], h: f64) -> f64 {
    let n = field.len();
    let mut terms: Vec<f64> = field.iter().map(|v| v * v).collect();
    terms[0] *= 0.5;
    terms[n - 1] *= 0.5;
    (pairwise_sum(&terms) * h).sqrt()
}

/// Evaluate all monitored quantities on one profile. The energy residual is
/// a trajectory-level quantity and is left unset here.
pub fn record_diagnostics(profile: &InterfaceProfile, cfg: &DiagConfig) -> DiagnosticsRecord {
    let grid = profile.grid();
    let h = grid.spacing();
    let s = profile.samples();
    let far = profile.far_field();
    let dxf = stencil::dx(s, h);
    let dxxf = stencil::dxx(s, h);
    let dx3f = stencil::dxxx(s, h);
    let floor = cfg.slope_floor_for(profile);
    let window = cfg.holder_window.unwrap_or(grid.half_width() / 4.0);
    let probe = cfg.probe_fraction * grid.half_width();
    let left_probe = grid.nearest_node(-probe);
    let right_probe = grid.nearest_node(probe);
    DiagnosticsRecord {
        t: profile.time(),
        max: profile.max_sample(),
        min: profile.min_sample(),
        slope_max: dxf.iter().copied().fold(f64::NEG_INFINITY, f64::max),
        slope_min: dxf.iter().copied().fold(f64::INFINITY, f64::min),
        lap: lap_number(&dxf, floor),
        l2_dxf: l2_norm(&dxf, h),
        l2_dx3f: l2_norm(&dx3f, h),
        holder_d2f: holder_seminorm(&dxxf, h, cfg.gamma, window),
        energy_residual: None,
        ff_dev_left: (s[left_probe] - far.left).abs(),
        ff_dev_right: (s[right_probe] - far.right).abs(),
    }
}
