//! Physical and regularization parameters.

use crate::error::{CoreError, Result};
use crate::singular::c1;

/// Density contrast coefficient A_rho = (rho2 - rho1)/(2*pi).
///
/// Positive is the stable configuration (heavier fluid below); negative is
/// admitted for the linear propagator and short flagged runs only.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysicsParams {
    pub density_coefficient: f64,
}

impl PhysicsParams {
    pub fn stable() -> Self {
        PhysicsParams { density_coefficient: 1.0 }
    }

    pub fn unstable() -> Self {
        PhysicsParams { density_coefficient: -1.0 }
    }

    pub fn new(density_coefficient: f64) -> Result<Self> {
        if !density_coefficient.is_finite() {
            return Err(CoreError::InvalidParameter("density coefficient must be finite".into()));
        }
        Ok(PhysicsParams { density_coefficient })
    }

    pub fn is_stable(&self) -> bool {
        self.density_coefficient > 0.0
    }
}

/// Upper bound (exclusive) for the kernel exponent of the regularized
/// difference quotients; beyond it the kernel normalization degenerates.
pub const MAX_KERNEL_EXPONENT: f64 = 0.5;

/// Parameters of the regularized systems.
///
/// `kernel_exponent` enters the difference quotients and the fractional
/// dissipation; `local_viscosity` is the coefficient of the implicit second
/// derivative; `dissipation_constant` scales the fractional term (zero turns
/// it off); `mollifier_width` smooths initial data.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RegularizationParams {
    pub kernel_exponent: f64,
    pub local_viscosity: f64,
    pub dissipation_constant: f64,
    pub mollifier_width: f64,
}

impl RegularizationParams {
    /// No regularization at all: the exact contour equation.
    pub fn none() -> Self {
        RegularizationParams {
            kernel_exponent: 0.0,
            local_viscosity: 0.0,
            dissipation_constant: 0.0,
            mollifier_width: 0.0,
        }
    }

    /// Globally-dissipative system: kernel exponent and viscosity share eps,
    /// and the fractional term carries the default constant 8/c1(eps).
    pub fn global_system(eps: f64) -> Result<Self> {
        let p = RegularizationParams {
            kernel_exponent: eps,
            local_viscosity: eps,
            dissipation_constant: if eps > 0.0 { 8.0 / c1(eps) } else { 0.0 },
            mollifier_width: 0.0,
        };
        p.validate()?;
        Ok(p)
    }

    /// Viscous local system: difference quotients and viscosity share
    /// eps_prime, no fractional dissipation.
    pub fn local_system(eps_prime: f64) -> Result<Self> {
        let p = RegularizationParams {
            kernel_exponent: eps_prime,
            local_viscosity: eps_prime,
            dissipation_constant: 0.0,
            mollifier_width: 0.0,
        };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        if !(0.0..MAX_KERNEL_EXPONENT).contains(&self.kernel_exponent) {
            return Err(CoreError::InvalidParameter(format!(
                "kernel_exponent must lie in [0, {MAX_KERNEL_EXPONENT}), got {}",
                self.kernel_exponent
            )));
        }
        if !(self.local_viscosity.is_finite() && self.local_viscosity >= 0.0) {
            return Err(CoreError::InvalidParameter(format!(
                "local_viscosity must be >= 0, got {}",
                self.local_viscosity
            )));
        }
        if !(self.dissipation_constant.is_finite() && self.dissipation_constant >= 0.0) {
            return Err(CoreError::InvalidParameter(format!(
                "dissipation_constant must be >= 0, got {}",
                self.dissipation_constant
            )));
        }
        if !(self.mollifier_width.is_finite() && self.mollifier_width >= 0.0) {
            return Err(CoreError::InvalidParameter(format!(
                "mollifier_width must be >= 0, got {}",
                self.mollifier_width
            )));
        }
        Ok(())
    }
}

/// Step-size control for the time integrators.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StepControl {
    pub dt_max: f64,
    /// CFL-like safety factor in (0, 1].
    pub safety: f64,
    pub t_end: f64,
    pub snapshot_stride: usize,
}

impl StepControl {
    pub fn new(dt_max: f64, safety: f64, t_end: f64, snapshot_stride: usize) -> Result<Self> {
        if !(safety > 0.0 && safety <= 1.0) {
            return Err(CoreError::InvalidParameter(format!(
                "safety factor must lie in (0, 1], got {safety}"
            )));
        }
        if !(dt_max > 0.0 && t_end > 0.0) {
            return Err(CoreError::InvalidParameter(
                "dt_max and t_end must be positive".into(),
            ));
        }
        Ok(StepControl { dt_max, safety, t_end, snapshot_stride: snapshot_stride.max(1) })
    }

    pub fn defaults(t_end: f64) -> Self {
        StepControl { dt_max: 0.05, safety: 0.4, t_end, snapshot_stride: 1 }
    }

    /// Transport-limited step with an extra cap for the explicit fractional
    /// term when present: dt <= sigma*h/max(1,|v|) and dt*lambda_max <= 1
    /// for lambda_max ~ eps*C*(pi/h)^(1-eps).
    pub fn compute_dt(
        &self,
        h: f64,
        velocity_sup: f64,
        reg: &RegularizationParams,
        time_left: f64,
    ) -> f64 {
        let mut dt = self.safety * h / velocity_sup.max(1.0);
        let frac_coeff = reg.kernel_exponent * reg.dissipation_constant;
        if frac_coeff > 0.0 {
            let lambda_max = frac_coeff
                * (std::f64::consts::PI / h).powf(1.0 - reg.kernel_exponent);
            dt = dt.min(1.0 / lambda_max);
        }
        dt.min(self.dt_max).min(time_left)
    }
}
