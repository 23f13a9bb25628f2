//! Time steppers for the exact and regularized contour equations.

use crate::error::{CoreError, Result};
use crate::params::{PhysicsParams, RegularizationParams};
use crate::profile::InterfaceProfile;
use crate::singular::{lambda_power, pv_velocity, LambdaBackend, LambdaNormalization, TailSpec};

/// One classical 4-stage Runge-Kutta step of the exact contour equation
/// (kernel exponent zero). Far field carries over; time advances by dt.
pub fn step_cde(
    profile: &InterfaceProfile,
    physics: &PhysicsParams,
    dt: f64,
    tail: &TailSpec,
) -> Result<InterfaceProfile> {
    let f = profile.samples();
    let k1 = pv_velocity(profile, physics, 0.0, tail)?;
    let stage = |coef: f64, k: &[f64]| -> Result<InterfaceProfile> {
        let s: Vec<f64> = f.iter().zip(k).map(|(a, b)| a + coef * dt * b).collect();
        profile.advanced(s, profile.time())
    };
    let k2 = pv_velocity(&stage(0.5, &k1)?, physics, 0.0, tail)?;
    let k3 = pv_velocity(&stage(0.5, &k2)?, physics, 0.0, tail)?;
    let k4 = pv_velocity(&stage(1.0, &k3)?, physics, 0.0, tail)?;
    let next: Vec<f64> = (0..f.len())
        .map(|i| f[i] + dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]))
        .collect();
    profile.advanced(next, profile.time() + dt)
}

/// One IMEX Euler step of the regularized system: the principal-value term
/// and the fractional dissipation are explicit, the viscous second
/// derivative is implicit via a tridiagonal solve whose boundary rows hold
/// the explicit-stage values.
///
/// Boundary samples drift at the physical rate ~(a-b)/L, so rows that pin
/// them to the far-field constants would carve a node-scale corner into the
/// profile each step, breaking the discrete slope bound; identity rows on
/// the explicit predictor let the edges follow the flow instead.
///
/// With kernel exponent zero, no dissipation constant, and no viscosity this
/// degenerates to plain forward Euler on the exact equation.
pub fn step_regularized(
    profile: &InterfaceProfile,
    physics: &PhysicsParams,
    reg: &RegularizationParams,
    dt: f64,
    tail: &TailSpec,
) -> Result<InterfaceProfile> {
    reg.validate()?;
    let eps = reg.kernel_exponent;
    let f = profile.samples();
    let v = pv_velocity(profile, physics, eps, tail)?;
    let frac_coeff = eps * reg.dissipation_constant;
    let lam = if frac_coeff > 0.0 {
        lambda_power(
            profile,
            1.0 - eps,
            LambdaBackend::Kernel,
            LambdaNormalization::SymbolExact,
            tail,
        )?
    } else {
        vec![0.0; f.len()]
    };
    let explicit: Vec<f64> = (0..f.len())
        .map(|i| f[i] + dt * (v[i] - frac_coeff * lam[i]))
        .collect();
    let next = if reg.local_viscosity > 0.0 {
        implicit_diffusion(profile, &explicit, dt * reg.local_viscosity)?
    } else {
        explicit
    };
    profile.advanced(next, profile.time() + dt)
}

/// Solve (I - c D2) u = rhs with the standard second-difference matrix and
/// identity boundary rows (u at the edges keeps the right-hand side value).
fn implicit_diffusion(
    profile: &InterfaceProfile,
    rhs: &[f64],
    c: f64,
) -> Result<Vec<f64>> {
    if rhs.iter().any(|v| !v.is_finite()) {
        return Err(CoreError::NonFinite("implicit diffusion right-hand side".into()));
    }
    let n = rhs.len();
    let h = profile.grid().spacing();
    let r = c / (h * h);
    // Thomas algorithm on the tridiagonal (-r, 1+2r, -r)
    let mut diag = vec![1.0 + 2.0 * r; n];
    let mut upper = vec![-r; n];
    let mut lower = vec![-r; n];
    let mut b = rhs.to_vec();
    diag[0] = 1.0;
    upper[0] = 0.0;
    diag[n - 1] = 1.0;
    lower[n - 1] = 0.0;

    for i in 1..n {
        let w = lower[i] / diag[i - 1];
        diag[i] -= w * upper[i - 1];
        b[i] -= w * b[i - 1];
    }
    let mut u = vec![0.0; n];
    u[n - 1] = b[n - 1] / diag[n - 1];
    for i in (0..n - 1).rev() {
        u[i] = (b[i] - upper[i] * u[i + 1]) / diag[i];
    }
    Ok(u)
}
