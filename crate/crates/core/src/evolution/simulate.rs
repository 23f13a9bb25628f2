//! The run driver: adaptive stepping, diagnostics, snapshots, blow-up guard.

use crate::diagnostics::{log_dissipation_integral, record_diagnostics, DiagConfig};
use crate::error::Result;
use crate::params::{PhysicsParams, RegularizationParams, StepControl};
use crate::profile::{default_far_field_tolerance, InterfaceProfile};
use crate::singular::{pv_velocity, TailSpec};
use crate::stencil;
use crate::trajectory::{AbortInfo, RunMeta, Trajectory};

use super::steppers::{step_cde, step_regularized};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scheme {
    /// Exact contour equation, 4-stage Runge-Kutta.
    Cde,
    /// Regularized system, IMEX Euler.
    Regularized,
}

impl Scheme {
    pub fn name(self) -> &'static str {
        match self {
            Scheme::Cde => "cde",
            Scheme::Regularized => "regularized",
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct SimOptions {
    pub scheme: Scheme,
    pub control: StepControl,
    pub tail: TailSpec,
    pub diag: DiagConfig,
    /// Track the energy-identity residual alongside the run (decaying data
    /// only; ignored otherwise).
    pub record_energy: bool,
}

/// March the initial profile to the stop time, recording diagnostics every
/// step and snapshots at the configured stride. A slope that doubles within
/// one accepted step aborts the run cleanly with a partial trajectory.
pub fn simulate(
    initial: &InterfaceProfile,
    physics: &PhysicsParams,
    reg: &RegularizationParams,
    opts: &SimOptions,
) -> Result<Trajectory> {
    reg.validate()?;
    let grid = *initial.grid();
    let far = *initial.far_field();
    let meta = RunMeta {
        scheme: opts.scheme.name().into(),
        grid,
        far,
        density_coefficient: physics.density_coefficient,
        kernel_exponent: match opts.scheme {
            Scheme::Cde => 0.0,
            Scheme::Regularized => reg.kernel_exponent,
        },
        local_viscosity: match opts.scheme {
            Scheme::Cde => 0.0,
            Scheme::Regularized => reg.local_viscosity,
        },
    };
    let mut traj = Trajectory::new(meta);

    let energy_active =
        opts.record_energy && far.is_decaying(default_far_field_tolerance(&far)) && far.tilt == 0.0;
    let mut energy = EnergyTracker::new(energy_active);

    let mut record = record_diagnostics(initial, &opts.diag);
    record.energy_residual = energy.update(initial);
    traj.push_record(record);
    traj.push_snapshot(initial.clone());

    let h = grid.spacing();
    let mut current = initial.clone();
    let mut step = 0usize;
    while current.time() < opts.control.t_end - 1e-14 {
        let kernel_eps = match opts.scheme {
            Scheme::Cde => 0.0,
            Scheme::Regularized => reg.kernel_exponent,
        };
        let v = pv_velocity(&current, physics, kernel_eps, &opts.tail)?;
        let v_sup = v.iter().fold(0.0_f64, |m, x| m.max(x.abs()));
        let dt_reg = match opts.scheme {
            Scheme::Cde => RegularizationParams { kernel_exponent: 0.0, ..*reg },
            Scheme::Regularized => *reg,
        };
        let dt = opts.control.compute_dt(h, v_sup, &dt_reg, opts.control.t_end - current.time());
        let slope_sup_before = slope_sup(&current);
        let next = match opts.scheme {
            Scheme::Cde => step_cde(&current, physics, dt, &opts.tail)?,
            Scheme::Regularized => step_regularized(&current, physics, reg, dt, &opts.tail)?,
        };
        step += 1;

        let slope_sup_after = slope_sup(&next);
        if slope_sup_after > 2.0 * slope_sup_before.max(1e-8) {
            traj.abort = Some(AbortInfo {
                step,
                time: next.time(),
                reason: format!(
                    "slope doubling within one step: {slope_sup_before:.3e} -> {slope_sup_after:.3e}"
                ),
            });
            break;
        }

        let mut record = record_diagnostics(&next, &opts.diag);
        record.energy_residual = energy.update(&next);
        traj.push_record(record);
        if step % opts.control.snapshot_stride == 0
            || next.time() >= opts.control.t_end - 1e-14
        {
            traj.push_snapshot(next.clone());
        }
        current = next;
    }
    Ok(traj)
}

fn slope_sup(p: &InterfaceProfile) -> f64 {
    stencil::dx(p.samples(), p.grid().spacing())
        .iter()
        .fold(0.0_f64, |m, x| m.max(x.abs()))
}

/// Running trapezoid of the logarithmic dissipation, yielding the
/// energy-identity residual at each accepted step.
struct EnergyTracker {
    active: bool,
    initial_l2sq: Option<f64>,
    prev: Option<(f64, f64)>,
    accumulated: f64,
}

impl EnergyTracker {
    fn new(active: bool) -> Self {
        EnergyTracker { active, initial_l2sq: None, prev: None, accumulated: 0.0 }
    }

    fn update(&mut self, p: &InterfaceProfile) -> Option<f64> {
        if !self.active {
            return None;
        }
        let h = p.grid().spacing();
        let mut terms: Vec<f64> = p.samples().iter().map(|v| v * v).collect();
        let n = terms.len();
        terms[0] *= 0.5;
        terms[n - 1] *= 0.5;
        let l2sq = crate::reduce::pairwise_sum(&terms) * h;
        let dissipation = log_dissipation_integral(p);
        let t = p.time();
        if let Some((pt, pd)) = self.prev {
            self.accumulated += 0.5 * (t - pt) * (dissipation + pd);
        }
        self.prev = Some((t, dissipation));
        let init = *self.initial_l2sq.get_or_insert(l2sq);
        Some(l2sq + self.accumulated - init)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::Grid;
    use crate::profile::FarField;
    use crate::scenarios::{make_profile, rt_unstable_config, ScenarioSpec};

    fn base_opts(g: &Grid, t_end: f64) -> SimOptions {
        SimOptions {
            scheme: Scheme::Cde,
            control: StepControl::defaults(t_end),
            tail: TailSpec::for_grid(g),
            diag: DiagConfig::default(),
            record_energy: false,
        }
    }

    #[test]
    fn constant_data_stays_put() {
        let g = Grid::new(20.0, 256).unwrap();
        let p = InterfaceProfile::new(g, vec![1.0; 256], FarField::flat(1.0, 1.0), 0.0).unwrap();
        let traj = simulate(
            &p,
            &PhysicsParams::stable(),
            &RegularizationParams::none(),
            &base_opts(&g, 0.1),
        )
        .unwrap();
        assert!(!traj.aborted());
        assert!((traj.last().time() - 0.1).abs() < 1e-12);
        for snap in &traj.snapshots {
            for v in snap.samples() {
                assert!((v - 1.0).abs() < 1e-11);
            }
        }
        for r in &traj.records {
            assert_eq!(r.lap, 0);
        }
    }

    #[test]
    fn monotone_run_keeps_lap_zero() {
        let g = Grid::new(40.0, 512).unwrap();
        let p = make_profile(&ScenarioSpec::tanh_step(1.0, -1.0, 1.0), g).unwrap();
        let traj = simulate(
            &p,
            &PhysicsParams::stable(),
            &RegularizationParams::none(),
            &base_opts(&g, 0.2),
        )
        .unwrap();
        assert!(!traj.aborted());
        for r in &traj.records {
            assert_eq!(r.lap, 0, "lap at t={}", r.t);
            assert!(r.slope_max <= 1e-6, "slope_max {} at t={}", r.slope_max, r.t);
        }
    }

    #[test]
    fn unstable_run_with_tiny_budget_completes() {
        let (spec, physics, t_max) = rt_unstable_config(2, 1e-5, 0.05);
        let g = Grid::new(crate::scenarios::harmonic_half_width(), 512).unwrap();
        let p = make_profile(&spec, g).unwrap();
        let traj =
            simulate(&p, &physics, &RegularizationParams::none(), &base_opts(&g, t_max)).unwrap();
        assert!(!traj.aborted(), "{:?}", traj.abort);
        // amplitude grew
        let a0 = traj.initial().max_sample();
        let a1 = traj.last().max_sample();
        assert!(a1 > a0, "{a0} -> {a1}");
    }

    #[test]
    fn blow_up_detector_aborts_cleanly() {
        // an absurd dt on unstable data forces slope doubling
        let g = Grid::new(crate::scenarios::harmonic_half_width(), 256).unwrap();
        let p = make_profile(&ScenarioSpec::windowed_sine(1e-3, 3), g).unwrap();
        let mut opts = base_opts(&g, 2.0);
        opts.control = StepControl::new(1.5, 1.0, 2.0, 1).unwrap();
        let traj = simulate(&p, &PhysicsParams::unstable(), &RegularizationParams::none(), &opts)
            .unwrap();
        assert!(traj.aborted(), "expected abort, reached t={}", traj.last().time());
        let abort = traj.abort.as_ref().unwrap();
        assert!(abort.reason.contains("slope doubling"), "{}", abort.reason);
        assert!(!traj.snapshots.is_empty());
    }

    #[test]
    fn energy_residual_recorded_for_decaying_data() {
        let g = Grid::new(20.0, 256).unwrap();
        let p = make_profile(&ScenarioSpec::bump(0.5, 2.0, 0.0), g).unwrap();
        let mut opts = base_opts(&g, 0.05);
        opts.record_energy = true;
        let traj = simulate(&p, &PhysicsParams::stable(), &RegularizationParams::none(), &opts)
            .unwrap();
        assert_eq!(traj.records[0].energy_residual, Some(0.0));
        for r in &traj.records {
            assert!(r.energy_residual.is_some());
        }
    }
}
