//! Regularized difference quotients.

use crate::error::{CoreError, Result};
use crate::profile::InterfaceProfile;

/// (f(x_i) - f(x_i - alpha)) / (alpha / |alpha|^eps).
///
/// The offset must either land on the grid (alpha a multiple of h) or leave
/// it entirely, in which case the far-field extension supplies the value.
/// alpha = 0 is rejected; principal-value quadrature handles that cell via
/// the removable-singularity limit instead. The quotient itself is defined
/// for any eps < 1; the tighter kernel-exponent range is enforced where the
/// quotients feed the nonlocal operators.
pub fn regularized_difference(
    profile: &InterfaceProfile,
    node: usize,
    alpha: f64,
    eps: f64,
) -> Result<f64> {
    if alpha == 0.0 {
        return Err(CoreError::InvalidParameter(
            "regularized difference is undefined at alpha = 0".into(),
        ));
    }
    if !(0.0..1.0).contains(&eps) {
        return Err(CoreError::InvalidParameter(format!(
            "difference exponent must lie in [0, 1), got {eps}"
        )));
    }
    let grid = profile.grid();
    let h = grid.spacing();
    let x = grid.node(node);
    let y = x - alpha;
    let fm = if y < -grid.half_width() || y >= grid.half_width() {
        profile.value_at(y)
    } else {
        let steps = alpha / h;
        let j = steps.round();
        if (steps - j).abs() > 1e-9 {
            return Err(CoreError::InvalidParameter(format!(
                "offset {alpha} is neither grid-aligned nor beyond the grid"
            )));
        }
        profile.extended(node as isize - j as isize)
    };
    let denom = alpha / alpha.abs().powf(eps);
    Ok((profile.samples()[node] - fm) / denom)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::Grid;
    use crate::profile::FarField;

    #[test]
    fn constant_profile_gives_zero() {
        let g = Grid::new(8.0, 32).unwrap();
        let p = InterfaceProfile::new(g, vec![2.5; 32], FarField::flat(2.5, 2.5), 0.0).unwrap();
        for &alpha in &[0.5, -0.5, 3.0, 100.0] {
            for &eps in &[0.0, 0.3, 0.49] {
                assert_eq!(regularized_difference(&p, 16, alpha, eps).unwrap(), 0.0);
            }
        }
    }

    #[test]
    fn linear_profile_matches_power_law() {
        let g = Grid::new(8.0, 32).unwrap();
        let samples = g.sample(|x| x);
        let p = InterfaceProfile::new(g, samples, FarField::flat(-8.0, 7.5), 0.0).unwrap();
        // alpha = 2 = 4h, on-grid; expected (x-(x-2)) / (2/2^eps) = 2^eps
        for &eps in &[0.0, 0.25, 0.49] {
            let d = regularized_difference(&p, 16, 2.0, eps).unwrap();
            assert!((d - 2.0_f64.powf(eps)).abs() < 1e-12, "eps={eps}: {d}");
        }
        // the half-exponent closed form: 2/(2/sqrt(2)) = sqrt(2)
        let d = regularized_difference(&p, 16, 2.0, 0.5).unwrap();
        assert!((d - 2.0_f64.sqrt()).abs() < 1e-12, "{d} vs sqrt(2)");
    }

    #[test]
    fn eps_zero_is_the_plain_difference_quotient() {
        let g = Grid::new(8.0, 256).unwrap();
        let samples = g.sample(|x| x.tanh());
        let p = InterfaceProfile::new(g, samples, FarField::flat(-1.0, 1.0), 0.0).unwrap();
        let h = g.spacing();
        let i = 128; // x = 0
        let d = regularized_difference(&p, i, h, 0.0).unwrap();
        let expect = (0.0_f64.tanh() - (-h).tanh()) / h;
        assert!((d - expect).abs() < 1e-14);
    }

    #[test]
    fn rejects_zero_and_misaligned_offsets() {
        let g = Grid::new(8.0, 32).unwrap();
        let p = InterfaceProfile::new(g, vec![0.0; 32], FarField::decaying(), 0.0).unwrap();
        assert!(regularized_difference(&p, 16, 0.0, 0.0).is_err());
        // h = 0.5; 0.3 is interior but not aligned
        assert!(regularized_difference(&p, 16, 0.3, 0.0).is_err());
        // far beyond the grid anything goes
        assert!(regularized_difference(&p, 16, 1000.3, 0.0).is_ok());
    }
}
