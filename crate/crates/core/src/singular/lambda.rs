//! Fractional Laplacian powers Lambda^s = (-d_xx)^(s/2), s in (0, 1].
//!
//! Two backends: a Fourier multiplier |k|^s on the periodic extension
//! (decaying data only) and a singular-kernel quadrature that works on any
//! extended profile. With the spectral normalization the kernel backend's
//! symbol is also |k|^s, making the two interchangeable; the unnormalized
//! variant is the raw kernel integral, whose symbol carries the factor
//! 2 * int_0^inf (1-cos u)/u^(2-eps) du.

use rayon::prelude::*;

use crate::error::{CoreError, Result};
use crate::profile::{default_far_field_tolerance, InterfaceProfile};
use crate::reduce::BlockedSum;
use crate::singular::c1::{c1, kernel_symbol_integral};
use crate::singular::tail::{lambda_tail, TailSpec};
use crate::spectral;
use crate::stencil;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LambdaBackend {
    Spectral,
    Kernel,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LambdaNormalization {
    /// c1(eps) chosen so the kernel symbol is exactly |k|^s.
    SymbolExact,
    /// Raw kernel integral, normalization constant one.
    Unnormalized,
}

/// Apply Lambda^s to a profile.
pub fn lambda_power(
    profile: &InterfaceProfile,
    s: f64,
    backend: LambdaBackend,
    normalization: LambdaNormalization,
    tail: &TailSpec,
) -> Result<Vec<f64>> {
    if !(s > 0.0 && s <= 1.0) {
        return Err(CoreError::InvalidParameter(format!(
            "lambda power must lie in (0, 1], got {s}"
        )));
    }
    if profile.samples().iter().any(|v| !v.is_finite()) {
        return Err(CoreError::NonFinite("lambda input profile".into()));
    }
    let eps = 1.0 - s;
    let scale = match normalization {
        LambdaNormalization::SymbolExact => 1.0,
        LambdaNormalization::Unnormalized => 2.0 * kernel_symbol_integral(eps),
    };
    match backend {
        LambdaBackend::Spectral => {
            let far = profile.far_field();
            if !far.is_decaying(default_far_field_tolerance(far)) || far.tilt != 0.0 {
                return Err(CoreError::NonDecayingData { left: far.left, right: far.right });
            }
            Ok(spectral::apply_even_multiplier(profile.grid(), profile.samples(), |k| {
                scale * k.powf(s)
            }))
        }
        LambdaBackend::Kernel => {
            let norm = match normalization {
                LambdaNormalization::SymbolExact => c1(eps),
                LambdaNormalization::Unnormalized => 1.0,
            };
            kernel_lambda(profile, eps, norm, tail)
        }
    }
}

/// Kernel quadrature of int (f(x) - f(x-a)) / |a|^(2-eps) da.
///
/// Product integration: the smooth paired difference is held constant per
/// cell while the kernel is integrated exactly, which keeps uniform accuracy
/// through the |a|^eps cusp at the origin. The center cell uses the limit
/// -f''(x)|a|^eps/2 and the far tails are exact power laws.
fn kernel_lambda(
    profile: &InterfaceProfile,
    eps: f64,
    norm: f64,
    tail: &TailSpec,
) -> Result<Vec<f64>> {
    let grid = profile.grid();
    let h = grid.spacing();
    let (j_max, a_eff) = tail.effective(h)?;
    let samples = profile.samples();
    let n = samples.len();
    let far = profile.far_field();
    let dxxf = stencil::dxx(samples, h);
    // exact cell integrals of |a|^(eps-2) over [jh - h/2, jh + h/2]
    let weights: Vec<f64> = (1..=j_max)
        .map(|j| {
            let a = j as f64 * h;
            ((a + 0.5 * h).powf(eps - 1.0) - (a - 0.5 * h).powf(eps - 1.0)) / (eps - 1.0)
        })
        .collect();
    let center_measure = (0.5 * h).powf(1.0 + eps) / (1.0 + eps);
    let ext = |i: isize| -> f64 {
        if i < 0 {
            far.left
        } else if i as usize >= n {
            far.right
        } else {
            samples[i as usize]
        }
    };
    let out = (0..n)
        .into_par_iter()
        .map(|i| {
            let fi = samples[i];
            let mut acc = BlockedSum::new();
            for j in 1..=j_max {
                let d = 2.0 * fi - ext(i as isize - j as isize) - ext(i as isize + j as isize);
                acc.push(d * weights[j - 1]);
            }
            let center = -dxxf[i] * center_measure;
            let tails = lambda_tail(fi - far.left, fi - far.right, eps, a_eff);
            norm * (acc.finish() + center + tails)
        })
        .collect();
    Ok(out)
}
