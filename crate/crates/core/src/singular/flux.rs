//! The arctan flux Phi(x) = PV int arctan(D_a f(x)) da.
//!
//! Its x-derivative is the contour velocity (at unit density coefficient and
//! kernel exponent zero), and it is the flux paired against phi_x in the
//! distributional form of the equation. For distinct far-field limits the
//! raw flux carries an x-independent logarithmic divergence; it is removed
//! by the renormalized tail, fixing Phi up to an additive constant that all
//! consumers cancel.

use rayon::prelude::*;

use crate::error::{CoreError, Result};
use crate::profile::InterfaceProfile;
use crate::reduce::BlockedSum;
use crate::singular::tail::{flux_tail_renormalized, TailSpec};
use crate::stencil;

/// Flux at every node. Untilted profiles only.
pub fn arctan_flux(profile: &InterfaceProfile, tail: &TailSpec) -> Result<Vec<f64>> {
    let plan = FluxPlan::build(profile, tail)?;
    Ok((0..profile.samples().len())
        .into_par_iter()
        .map(|i| plan.at(i))
        .collect())
}

/// Flux at selected nodes (the weak-form quadrature only needs the support
/// of the test function).
pub fn arctan_flux_at(
    profile: &InterfaceProfile,
    nodes: &[usize],
    tail: &TailSpec,
) -> Result<Vec<f64>> {
    let plan = FluxPlan::build(profile, tail)?;
    Ok(nodes.par_iter().map(|&i| plan.at(i)).collect())
}

struct FluxPlan<'a> {
    samples: &'a [f64],
    dxf: Vec<f64>,
    left: f64,
    right: f64,
    h: f64,
    j_max: usize,
    a_eff: f64,
}

impl<'a> FluxPlan<'a> {
    fn build(profile: &'a InterfaceProfile, tail: &TailSpec) -> Result<Self> {
        let far = profile.far_field();
        if far.tilt != 0.0 {
            return Err(CoreError::InvalidParameter(
                "arctan flux is defined for untilted profiles".into(),
            ));
        }
        if profile.samples().iter().any(|v| !v.is_finite()) {
            return Err(CoreError::NonFinite("flux input profile".into()));
        }
        let h = profile.grid().spacing();
        let (j_max, a_eff) = tail.effective(h)?;
        Ok(FluxPlan {
            samples: profile.samples(),
            dxf: stencil::dx(profile.samples(), h),
            left: far.left,
            right: far.right,
            h,
            j_max,
            a_eff,
        })
    }

    #[inline]
    fn ext(&self, i: isize) -> f64 {
        if i < 0 {
            self.left
        } else if i as usize >= self.samples.len() {
            self.right
        } else {
            self.samples[i as usize]
        }
    }

    fn at(&self, i: usize) -> f64 {
        let fi = self.samples[i];
        let mut acc = BlockedSum::new();
        for j in -(self.j_max as isize)..=(self.j_max as isize) {
            if j == 0 {
                // removable cell: arctan(D_a f) -> arctan(f'(x))
                acc.push(self.dxf[i].atan());
            } else {
                let alpha = j as f64 * self.h;
                acc.push(((fi - self.ext(i as isize - j)) / alpha).atan());
            }
        }
        acc.finish() * self.h + flux_tail_renormalized(fi - self.left, fi - self.right, self.a_eff)
    }
}
