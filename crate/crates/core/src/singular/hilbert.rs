//! Hilbert transform: Hf(x) = (1/pi) PV int f(x-a)/a da.

use rayon::prelude::*;

use crate::error::{CoreError, Result};
use crate::profile::{default_far_field_tolerance, InterfaceProfile};
use crate::reduce::BlockedSum;
use crate::singular::tail::TailSpec;
use crate::spectral;
use crate::stencil;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HilbertBackend {
    /// Fourier multiplier -i sign(k); decaying data only.
    Spectral,
    /// Paired-difference quadrature; tolerates a constant offset (a = b)
    /// since the pairing cancels it, but distinct limits leave a divergent
    /// tail and are rejected.
    Kernel,
}

pub fn hilbert_transform(
    profile: &InterfaceProfile,
    backend: HilbertBackend,
    tail: &TailSpec,
) -> Result<Vec<f64>> {
    let far = profile.far_field();
    let tol = default_far_field_tolerance(far);
    if profile.samples().iter().any(|v| !v.is_finite()) {
        return Err(CoreError::NonFinite("hilbert input profile".into()));
    }
    match backend {
        HilbertBackend::Spectral => {
            if !far.is_decaying(tol) || far.tilt != 0.0 {
                return Err(CoreError::NonDecayingData { left: far.left, right: far.right });
            }
            Ok(spectral::apply_hilbert_multiplier(profile.grid(), profile.samples()))
        }
        HilbertBackend::Kernel => {
            if (far.left - far.right).abs() > tol || far.tilt != 0.0 {
                return Err(CoreError::NonDecayingData { left: far.left, right: far.right });
            }
            kernel_hilbert(profile, tail)
        }
    }
}

/// PV int f(x-a)/a da = int_0^inf (f(x-a) - f(x+a))/a da; the integrand tends
/// to -2 f'(x) at the origin and the matched far limits kill the tail.
fn kernel_hilbert(profile: &InterfaceProfile, tail: &TailSpec) -> Result<Vec<f64>> {
    let grid = profile.grid();
    let h = grid.spacing();
    let (j_max, _) = tail.effective(h)?;
    let samples = profile.samples();
    let n = samples.len();
    let far = profile.far_field();
    let dxf = stencil::dx(samples, h);
    let ext = |i: isize| -> f64 {
        if i < 0 {
            far.left
        } else if i as usize >= n {
            far.right
        } else {
            samples[i as usize]
        }
    };
    let inv_pi = 1.0 / std::f64::consts::PI;
    let out = (0..n)
        .into_par_iter()
        .map(|i| {
            let mut acc = BlockedSum::new();
            for j in 1..=j_max {
                let d = ext(i as isize - j as isize) - ext(i as isize + j as isize);
                acc.push(d / (j as f64 * h));
            }
            inv_pi * (acc.finish() * h - 2.0 * dxf[i] * (0.5 * h))
        })
        .collect();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::Grid;
    use crate::profile::FarField;

    fn harmonic_grid() -> Grid {
        Grid::new(12.0 * std::f64::consts::PI, 2048).unwrap()
    }

    #[test]
    fn constant_maps_to_zero_on_kernel_path() {
        let g = Grid::new(40.0, 256).unwrap();
        let p = InterfaceProfile::new(g, vec![5.0; 256], FarField::flat(5.0, 5.0), 0.0).unwrap();
        let out = hilbert_transform(&p, HilbertBackend::Kernel, &TailSpec::for_grid(&g)).unwrap();
        assert!(out.iter().all(|&v| v == 0.0));
    }

    #[test]
    fn rotates_sine_to_minus_cosine() {
        let g = harmonic_grid();
        let p = InterfaceProfile::new(g, g.sample(|x| x.sin()), FarField::decaying(), 0.0)
            .unwrap();
        let h_sin =
            hilbert_transform(&p, HilbertBackend::Spectral, &TailSpec::for_grid(&g)).unwrap();
        let q = InterfaceProfile::new(g, g.sample(|x| x.cos()), FarField::decaying(), 0.0)
            .unwrap();
        let h_cos =
            hilbert_transform(&q, HilbertBackend::Spectral, &TailSpec::for_grid(&g)).unwrap();
        for i in 0..g.len() {
            let x = g.node(i);
            assert!((h_sin[i] + x.cos()).abs() < 1e-10, "H sin at {x}");
            assert!((h_cos[i] - x.sin()).abs() < 1e-10, "H cos at {x}");
        }
    }

    #[test]
    fn kernel_path_approximates_spectral_on_windowed_data() {
        let g = harmonic_grid();
        let l = g.half_width();
        let window = move |x: f64| crate::bump::window(x, 0.5 * l, 0.75 * l);
        let p = InterfaceProfile::new(
            g,
            g.sample(|x| (2.0 * x).sin() * window(x)),
            FarField::decaying(),
            0.0,
        )
        .unwrap();
        let spectral =
            hilbert_transform(&p, HilbertBackend::Spectral, &TailSpec::for_grid(&g)).unwrap();
        let kernel =
            hilbert_transform(&p, HilbertBackend::Kernel, &TailSpec::for_grid(&g)).unwrap();
        let sup = spectral.iter().fold(0.0_f64, |m, v| m.max(v.abs()));
        let err = spectral
            .iter()
            .zip(&kernel)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0_f64, f64::max);
        assert!(err / sup < 1e-2, "relative {:.2e}", err / sup);
    }

    #[test]
    fn distinct_limits_rejected() {
        let g = Grid::new(40.0, 256).unwrap();
        let p = InterfaceProfile::new(g, g.sample(|x| (-x).tanh()), FarField::flat(1.0, -1.0), 0.0)
            .unwrap();
        for backend in [HilbertBackend::Spectral, HilbertBackend::Kernel] {
            assert!(hilbert_transform(&p, backend, &TailSpec::for_grid(&g)).is_err());
        }
    }
}
