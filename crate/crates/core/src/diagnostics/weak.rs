//! Distributional-form residual.
//!
//! A trajectory solves the equation weakly when, for every smooth compactly
//! supported test function phi,
//!   II f phi_t + I f_0 phi(.,0) - II Phi phi_x = 0
//! with Phi the arctan flux. The additive constant the flux is only defined
//! up to integrates against phi_x to zero.

use crate::bump::{bump, bump_dz};
use crate::error::{CoreError, Result};
use crate::reduce::pairwise_sum;
use crate::singular::{arctan_flux_at, TailSpec};
use crate::trajectory::Trajectory;

/// Smooth compactly supported test function with analytic derivatives,
/// an amplitude times a product of spatial and temporal bumps.
#[derive(Debug, Clone, Copy)]
pub struct TestFunction {
    pub amplitude: f64,
    pub x_center: f64,
    pub x_radius: f64,
    pub t_half: f64,
}

impl TestFunction {
    pub fn new(x_center: f64, x_radius: f64, t_half: f64) -> Result<Self> {
        if !(x_radius > 0.0 && t_half > 0.0) {
            return Err(CoreError::InvalidParameter(
                "test function radii must be positive".into(),
            ));
        }
        Ok(TestFunction { amplitude: 1.0, x_center, x_radius, t_half })
    }

    pub fn scaled(mut self, amplitude: f64) -> Self {
        self.amplitude = amplitude;
        self
    }

    pub fn phi(&self, x: f64, t: f64) -> f64 {
        self.amplitude * self.space(x) * self.time(t)
    }

    pub fn phi_x(&self, x: f64, t: f64) -> f64 {
        self.amplitude * bump_dz((x - self.x_center) / self.x_radius) / self.x_radius
            * self.time(t)
    }

    pub fn phi_t(&self, x: f64, t: f64) -> f64 {
        self.amplitude * self.space(x) * bump_dz(t / self.t_half) / self.t_half
    }

    fn space(&self, x: f64) -> f64 {
        bump((x - self.x_center) / self.x_radius)
    }

    fn time(&self, t: f64) -> f64 {
        if t < 0.0 {
            0.0
        } else {
            bump(t / self.t_half)
        }
    }
}

/// Signed weak-form residual of a trajectory against one test function.
/// Space by trapezoid over the grid, time by trapezoid over snapshots; the
/// flux is only evaluated where phi_x is supported.
pub fn weak_form_residual(
    traj: &Trajectory,
    phi: &TestFunction,
    tail: &TailSpec,
) -> Result<f64> {
    let grid = traj.meta.grid;
    let l = grid.half_width();
    if phi.x_center - phi.x_radius <= -l || phi.x_center + phi.x_radius >= l {
        return Err(CoreError::SupportViolation(format!(
            "spatial support [{}, {}] leaves (-{l}, {l})",
            phi.x_center - phi.x_radius,
            phi.x_center + phi.x_radius
        )));
    }
    let t_end = traj.last().time();
    if phi.t_half > t_end {
        return Err(CoreError::SupportViolation(format!(
            "temporal support [0, {}) exceeds the run length {t_end}",
            phi.t_half
        )));
    }
    if traj.snapshots.len() < 2 {
        return Err(CoreError::InvalidParameter(
            "weak-form residual needs at least two snapshots".into(),
        ));
    }

    let h = grid.spacing();
    let support: Vec<usize> = (0..grid.len())
        .filter(|&i| (grid.node(i) - phi.x_center).abs() < phi.x_radius)
        .collect();

    // spatial integrals at each snapshot time
    let mut f_phit = Vec::with_capacity(traj.snapshots.len());
    let mut flux_phix = Vec::with_capacity(traj.snapshots.len());
    for snap in &traj.snapshots {
        let t = snap.time();
        let s = snap.samples();
        let terms: Vec<f64> =
            support.iter().map(|&i| s[i] * phi.phi_t(grid.node(i), t)).collect();
        f_phit.push(pairwise_sum(&terms) * h);
        let flux = arctan_flux_at(snap, &support, tail)?;
        let terms: Vec<f64> = support
            .iter()
            .zip(&flux)
            .map(|(&i, &p)| p * phi.phi_x(grid.node(i), t))
            .collect();
        flux_phix.push(pairwise_sum(&terms) * h);
    }

    let times = traj.times();
    let trapz = |vals: &[f64]| -> f64 {
        let mut acc = 0.0;
        for k in 1..vals.len() {
            acc += 0.5 * (times[k] - times[k - 1]) * (vals[k] + vals[k - 1]);
        }
        acc
    };

    let init = traj.initial();
    let terms: Vec<f64> = support
        .iter()
        .map(|&i| init.samples()[i] * phi.phi(grid.node(i), 0.0))
        .collect();
    let initial_term = pairwise_sum(&terms) * h;

    Ok(trapz(&f_phit) + initial_term - trapz(&flux_phix))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::Grid;
    use crate::profile::{FarField, InterfaceProfile};
    use crate::trajectory::RunMeta;

    fn constant_trajectory(c: f64, steps: usize) -> Trajectory {
        let g = Grid::new(20.0, 256).unwrap();
        let far = FarField::flat(c, c);
        let mut traj = Trajectory::new(RunMeta {
            scheme: "test".into(),
            grid: g,
            far,
            density_coefficient: 1.0,
            kernel_exponent: 0.0,
            local_viscosity: 0.0,
        });
        for k in 0..=steps {
            let t = k as f64 * 0.01;
            traj.push_snapshot(InterfaceProfile::new(g, vec![c; 256], far, t).unwrap());
        }
        traj
    }

    #[test]
    fn constant_trajectory_residual_vanishes_with_time_resolution() {
        // for constant f the flux term is identically zero and
        // II f phi_t + I f phi(.,0) cancels up to time quadrature
        let phi = TestFunction::new(0.0, 8.0, 0.3).unwrap();
        let coarse = {
            let traj = constant_trajectory(2.0, 40);
            weak_form_residual(&traj, &phi, &TailSpec::new(40.0).unwrap()).unwrap()
        };
        let fine = {
            let g = Grid::new(20.0, 256).unwrap();
            let far = FarField::flat(2.0, 2.0);
            let mut traj = Trajectory::new(RunMeta {
                scheme: "test".into(),
                grid: g,
                far,
                density_coefficient: 1.0,
                kernel_exponent: 0.0,
                local_viscosity: 0.0,
            });
            for k in 0..=160 {
                let t = k as f64 * 0.0025;
                traj.push_snapshot(InterfaceProfile::new(g, vec![2.0; 256], far, t).unwrap());
            }
            weak_form_residual(&traj, &phi, &TailSpec::new(40.0).unwrap()).unwrap()
        };
        assert!(coarse.abs() < 1e-2, "coarse residual {coarse}");
        assert!(fine.abs() < coarse.abs() / 2.0, "no refinement: {coarse} -> {fine}");
    }

    #[test]
    fn zero_test_function_gives_exactly_zero() {
        let traj = constant_trajectory(1.0, 10);
        let phi = TestFunction::new(0.0, 8.0, 0.05).unwrap().scaled(0.0);
        let r = weak_form_residual(&traj, &phi, &TailSpec::new(40.0).unwrap()).unwrap();
        assert_eq!(r, 0.0);
    }

    #[test]
    fn support_violations_rejected() {
        let traj = constant_trajectory(1.0, 10);
        let tail = TailSpec::new(40.0).unwrap();
        // spatial support sticks out of the domain
        let phi = TestFunction::new(15.0, 8.0, 0.05).unwrap();
        assert!(matches!(
            weak_form_residual(&traj, &phi, &tail),
            Err(CoreError::SupportViolation(_))
        ));
        // temporal support exceeds the run
        let phi = TestFunction::new(0.0, 5.0, 10.0).unwrap();
        assert!(matches!(
            weak_form_residual(&traj, &phi, &tail),
            Err(CoreError::SupportViolation(_))
        ));
    }
}
