//! Fitted decay/growth rates of single Fourier modes.

use crate::error::{CoreError, Result};
use crate::reduce::pairwise_sum;
use crate::trajectory::Trajectory;

/// Least-squares slope of ln|amplitude_k(t)| over a run.
///
/// The amplitude is the projection onto sin(kx) and cos(kx) over
/// |x| <= window (default: the whole grid, which is an exact orthogonal
/// projection when k is a torus harmonic).
pub fn dispersion_fit(traj: &Trajectory, k: f64, window: Option<f64>) -> Result<f64> {
    if traj.snapshots.len() < 2 {
        return Err(CoreError::InvalidParameter("dispersion fit needs >= 2 snapshots".into()));
    }
    let grid = traj.meta.grid;
    let radius = window.unwrap_or(grid.half_width());
    let h = grid.spacing();
    let nodes: Vec<usize> =
        (0..grid.len()).filter(|&i| grid.node(i).abs() <= radius).collect();
    if nodes.is_empty() {
        return Err(CoreError::InvalidParameter("empty projection window".into()));
    }
    let sin_basis: Vec<f64> = nodes.iter().map(|&i| (k * grid.node(i)).sin()).collect();
    let cos_basis: Vec<f64> = nodes.iter().map(|&i| (k * grid.node(i)).cos()).collect();
    let sin_norm = pairwise_sum(&sin_basis.iter().map(|v| v * v).collect::<Vec<_>>()) * h;
    let cos_norm = pairwise_sum(&cos_basis.iter().map(|v| v * v).collect::<Vec<_>>()) * h;

    let amplitude = |samples: &[f64]| -> f64 {
        let s: Vec<f64> =
            nodes.iter().zip(&sin_basis).map(|(&i, b)| samples[i] * b).collect();
        let c: Vec<f64> =
            nodes.iter().zip(&cos_basis).map(|(&i, b)| samples[i] * b).collect();
        let a_s = pairwise_sum(&s) * h / sin_norm;
        let a_c = pairwise_sum(&c) * h / cos_norm;
        (a_s * a_s + a_c * a_c).sqrt()
    };

    // mode amplitudes must clear the roundoff floor of the data itself
    let data_scale = traj
        .initial()
        .samples()
        .iter()
        .fold(0.0_f64, |m, v| m.max(v.abs()));
    let floor = 1e-12 * data_scale.max(f64::MIN_POSITIVE);
    let points: Vec<(f64, f64)> = traj
        .snapshots
        .iter()
        .map(|p| (p.time(), amplitude(p.samples())))
        .filter(|&(_, a)| a > floor)
        .map(|(t, a)| (t, a.ln()))
        .collect();
    if points.len() < 2 {
        return Err(CoreError::BelowNoiseFloor(format!(
            "mode k = {k}: amplitudes at or below {floor:.3e}"
        )));
    }

    // least squares slope of ln a vs t
    let n = points.len() as f64;
    let st: f64 = points.iter().map(|p| p.0).sum();
    let sy: f64 = points.iter().map(|p| p.1).sum();
    let stt: f64 = points.iter().map(|p| p.0 * p.0).sum();
    let sty: f64 = points.iter().map(|p| p.0 * p.1).sum();
    let denom = n * stt - st * st;
    if denom <= 0.0 {
        return Err(CoreError::InvalidParameter("degenerate time samples".into()));
    }
    Ok((n * sty - st * sy) / denom)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::Grid;
    use crate::profile::{FarField, InterfaceProfile};
    use crate::trajectory::RunMeta;

    fn synthetic_decay(k: f64, rate: f64, steps: usize) -> Trajectory {
        let g = Grid::new(12.0 * std::f64::consts::PI, 1024).unwrap();
        let far = FarField::decaying();
        let mut traj = Trajectory::new(RunMeta {
            scheme: "synthetic".into(),
            grid: g,
            far,
            density_coefficient: 1.0,
            kernel_exponent: 0.0,
            local_viscosity: 0.0,
        });
        for j in 0..=steps {
            let t = j as f64 * 0.02;
            let amp = (rate * t).exp();
            traj.push_snapshot(
                InterfaceProfile::new(g, g.sample(|x| amp * (k * x).sin()), far, t).unwrap(),
            );
        }
        traj
    }

    #[test]
    fn recovers_exact_exponential_rates() {
        for &(k, rate) in &[(2.0, -2.0 * std::f64::consts::PI), (2.0, 0.2), (3.0, -1.0)] {
            let traj = synthetic_decay(k, rate, 10);
            let fit = dispersion_fit(&traj, k, None).unwrap();
            assert!((fit - rate).abs() < 1e-6, "k={k}: fit {fit} vs {rate}");
        }
    }

    #[test]
    fn noise_floor_detected() {
        let traj = synthetic_decay(2.0, -1.0, 5);
        // projecting onto an orthogonal harmonic leaves nothing
        let r = dispersion_fit(&traj, 7.0, None);
        assert!(matches!(r, Err(CoreError::BelowNoiseFloor(_))), "{r:?}");
    }
}
