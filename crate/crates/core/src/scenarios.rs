//! Initial-data construction: monotone steps and ramps, compact bumps,
//! windowed sines, tilted variants, mollification, and the unstable
//! density configuration.

use crate::bump::{bump, window};
use crate::error::{CoreError, Result};
use crate::grid::Grid;
use crate::params::PhysicsParams;
use crate::profile::{FarField, InterfaceProfile};
use crate::spectral::snap_wavenumber;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScenarioKind {
    /// Monotone step (a+b)/2 + (a-b)/2 * tanh(-s(x-c)); needs a > b.
    TanhStep,
    /// Monotone ramp with compact transition of half-width `width`; exact
    /// far-field settling. Needs a > b.
    SmoothedRamp,
    /// amplitude * exp(-(x-c)^2/width^2), decaying far field.
    Bump,
    /// amplitude * sin(kx) * W(x) with a plateau window over the central
    /// half of the domain; the wavenumber snaps to the nearest torus
    /// harmonic so spectral oracles are exact.
    WindowedSine,
}

impl ScenarioKind {
    pub fn is_monotone(self) -> bool {
        matches!(self, ScenarioKind::TanhStep | ScenarioKind::SmoothedRamp)
    }

    pub fn name(self) -> &'static str {
        match self {
            ScenarioKind::TanhStep => "tanh_step",
            ScenarioKind::SmoothedRamp => "smoothed_ramp",
            ScenarioKind::Bump => "bump",
            ScenarioKind::WindowedSine => "windowed_sine",
        }
    }
}

/// Shape parameters for analytic initial data. Tilt carries the background
/// slope beta (stored in the far field; the samples stay bounded).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScenarioSpec {
    pub kind: ScenarioKind,
    pub left: f64,
    pub right: f64,
    pub steepness: f64,
    pub center: f64,
    pub width: f64,
    pub amplitude: f64,
    pub wavenumber: u32,
    pub tilt: f64,
}

impl ScenarioSpec {
    pub fn tanh_step(left: f64, right: f64, steepness: f64) -> Self {
        ScenarioSpec {
            kind: ScenarioKind::TanhStep,
            left,
            right,
            steepness,
            center: 0.0,
            width: 1.0,
            amplitude: 0.0,
            wavenumber: 1,
            tilt: 0.0,
        }
    }

    pub fn smoothed_ramp(left: f64, right: f64, width: f64) -> Self {
        ScenarioSpec { kind: ScenarioKind::SmoothedRamp, width, ..Self::tanh_step(left, right, 1.0) }
    }

    pub fn bump(amplitude: f64, width: f64, center: f64) -> Self {
        ScenarioSpec {
            kind: ScenarioKind::Bump,
            left: 0.0,
            right: 0.0,
            steepness: 1.0,
            center,
            width,
            amplitude,
            wavenumber: 1,
            tilt: 0.0,
        }
    }

    pub fn windowed_sine(amplitude: f64, wavenumber: u32) -> Self {
        ScenarioSpec {
            kind: ScenarioKind::WindowedSine,
            left: 0.0,
            right: 0.0,
            steepness: 1.0,
            center: 0.0,
            width: 0.0,
            amplitude,
            wavenumber,
            tilt: 0.0,
        }
    }

    pub fn with_tilt(mut self, tilt: f64) -> Self {
        self.tilt = tilt;
        self
    }

    fn validate(&self) -> Result<()> {
        let finite = [self.left, self.right, self.steepness, self.center, self.width, self.amplitude, self.tilt]
            .iter()
            .all(|v| v.is_finite());
        if !finite {
            return Err(CoreError::InvalidParameter("scenario parameters must be finite".into()));
        }
        if self.kind.is_monotone() {
            if self.left <= self.right {
                return Err(CoreError::InvalidParameter(format!(
                    "monotone data needs a > b, got a = {}, b = {}",
                    self.left, self.right
                )));
            }
            if self.tilt > 0.0 {
                return Err(CoreError::InvalidParameter(format!(
                    "monotone-decreasing data needs tilt <= 0, got {}",
                    self.tilt
                )));
            }
        }
        match self.kind {
            ScenarioKind::TanhStep if self.steepness <= 0.0 => Err(CoreError::InvalidParameter(
                "tanh step needs positive steepness".into(),
            )),
            ScenarioKind::SmoothedRamp if self.width <= 0.0 => Err(CoreError::InvalidParameter(
                "smoothed ramp needs positive width".into(),
            )),
            ScenarioKind::Bump if self.amplitude <= 0.0 || self.width <= 0.0 => {
                Err(CoreError::InvalidParameter("bump needs positive amplitude and width".into()))
            }
            ScenarioKind::WindowedSine if self.amplitude <= 0.0 => Err(
                CoreError::InvalidParameter("windowed sine needs positive amplitude".into()),
            ),
            ScenarioKind::WindowedSine if self.wavenumber == 0 => Err(
                CoreError::InvalidParameter("windowed sine needs a positive integer wavenumber".into()),
            ),
            _ => Ok(()),
        }
    }
}

/// The half-width that makes integer wavenumbers exact torus harmonics;
/// the natural grid for dispersion studies.
pub fn harmonic_half_width() -> f64 {
    12.0 * std::f64::consts::PI
}

/// Effective wavenumber a windowed-sine scenario realizes on a grid.
pub fn effective_wavenumber(grid: &Grid, wavenumber: u32) -> f64 {
    snap_wavenumber(grid, wavenumber as f64)
}

/// Build the initial profile for a scenario on a grid.
pub fn make_profile(spec: &ScenarioSpec, grid: Grid) -> Result<InterfaceProfile> {
    spec.validate()?;
    let far = FarField { left: spec.left, right: spec.right, tilt: spec.tilt };
    let l = grid.half_width();
    let samples = match spec.kind {
        ScenarioKind::TanhStep => {
            let mid = 0.5 * (spec.left + spec.right);
            let amp = 0.5 * (spec.left - spec.right);
            grid.sample(|x| mid + amp * (-spec.steepness * (x - spec.center)).tanh())
        }
        ScenarioKind::SmoothedRamp => {
            let w = spec.width;
            let drop = spec.left - spec.right;
            grid.sample(|x| {
                spec.left
                    - drop * crate::bump::smoothstep((x - spec.center + w) / (2.0 * w))
            })
        }
        ScenarioKind::Bump => grid.sample(|x| {
            let z = (x - spec.center) / spec.width;
            spec.amplitude * (-z * z).exp()
        }),
        ScenarioKind::WindowedSine => {
            let k = effective_wavenumber(&grid, spec.wavenumber);
            grid.sample(|x| spec.amplitude * (k * x).sin() * window(x, 0.5 * l, 0.75 * l))
        }
    };
    InterfaceProfile::new(grid, samples, far, 0.0)
}

/// Convolve with the compactly supported bump kernel of the given width,
/// normalized to unit mass on the grid. Positive weights preserve
/// monotonicity; far-field lookups extend the data beyond the grid, so the
/// limits are preserved exactly. Widths at or below the spacing return the
/// profile unchanged.
pub fn mollify(profile: &InterfaceProfile, width: f64) -> Result<InterfaceProfile> {
    if !(width.is_finite() && width >= 0.0) {
        return Err(CoreError::InvalidParameter(format!(
            "mollifier width must be >= 0, got {width}"
        )));
    }
    let grid = *profile.grid();
    let h = grid.spacing();
    if width <= h {
        return Ok(profile.clone());
    }
    let reach = (width / h).ceil() as isize;
    let weights: Vec<f64> = (-reach..=reach)
        .map(|j| bump(j as f64 * h / width))
        .collect();
    let total: f64 = weights.iter().sum();
    let n = grid.len();
    let samples: Vec<f64> = (0..n as isize)
        .map(|i| {
            let mut acc = 0.0;
            for (w, j) in weights.iter().zip(-reach..=reach) {
                acc += w * profile.extended(i - j);
            }
            acc / total
        })
        .collect();
    InterfaceProfile::new(grid, samples, *profile.far_field(), profile.time())
}

/// Unstable density configuration: small windowed-sine data, negative
/// density coefficient, and a run budget that stops well before the linear
/// growth can reach the blow-up detector.
pub fn rt_unstable_config(wavenumber: u32, amplitude: f64, t_max: f64) -> (ScenarioSpec, PhysicsParams, f64) {
    let spec = ScenarioSpec::windowed_sine(amplitude, wavenumber);
    (spec, PhysicsParams::unstable(), t_max)
}
