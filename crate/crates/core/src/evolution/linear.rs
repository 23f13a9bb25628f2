//! Exact propagator of the linearized equation f_t = -pi A_rho Lambda f.

use crate::error::Result;
use crate::grid::Grid;
use crate::params::PhysicsParams;
use crate::spectral;

/// Multiply mode k by exp(-pi A_rho |k| t). Valid for decaying, windowed
/// fields; also the exact growth law for the unstable sign.
pub fn linear_evolve(grid: &Grid, field: &[f64], t: f64, physics: &PhysicsParams) -> Result<Vec<f64>> {
    let rate = std::f64::consts::PI * physics.density_coefficient * t;
    Ok(spectral::apply_even_multiplier(grid, field, |k| (-rate * k).exp()))
}
