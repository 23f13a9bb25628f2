//! Analytic far-field tails of the principal-value integrals.
//!
//! Beyond the quadrature radius the integrands are closed-form rational
//! functions of alpha because f(x - alpha) has settled to its constant limit.
//! The paired +/- tails are integrated exactly; neglecting them instead would
//! leave O(1/A) errors whenever the two limits differ.

use crate::error::{CoreError, Result};
use crate::grid::Grid;
use crate::profile::FarField;

/// Where the analytic tail takes over from the cell sum.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TailSpec {
    pub radius: f64,
}

impl TailSpec {
    pub fn new(radius: f64) -> Result<Self> {
        if !(radius.is_finite() && radius > 0.0) {
            return Err(CoreError::InvalidParameter(format!(
                "tail radius must be positive and finite, got {radius}"
            )));
        }
        Ok(TailSpec { radius })
    }

    /// Default radius 2L: every query beyond it is off-grid for every node,
    /// so the constant-limit assumption is exact.
    pub fn for_grid(grid: &Grid) -> Self {
        TailSpec { radius: 2.0 * grid.half_width() }
    }

    /// Number of quadrature cells per side and the matching tail start
    /// (J + 1/2)h, so cells and tail partition the line exactly.
    pub fn effective(&self, h: f64) -> Result<(usize, f64)> {
        if self.radius <= h {
            return Err(CoreError::InvalidParameter(format!(
                "tail radius {} must exceed the grid spacing {h}",
                self.radius
            )));
        }
        let j = (self.radius / h).round().max(1.0) as usize;
        Ok((j, (j as f64 + 0.5) * h))
    }
}

/// Combined +/- tails of the contour-velocity integrand for kernel exponent
/// zero, including a background tilt.
///
/// For alpha > A the integrand is f'(x) * alpha / (p alpha^2 + 2 beta c_a
/// alpha + c_a^2) with p = 1 + beta^2 and c_a = f(x) - a; mirrored with c_b on
/// the other side. The log divergences of the two sides cancel in the
/// symmetric limit, leaving log and arctan terms. At beta = 0 this reduces to
///   f'(x) * 1/2 * ln( (A^2 + c_b^2) / (A^2 + c_a^2) ).
pub fn velocity_tail_closed(
    dxf_value: f64,
    c_left: f64,
    c_right: f64,
    beta: f64,
    a_eff: f64,
) -> f64 {
    let p = 1.0 + beta * beta;
    let quad_a = p * a_eff * a_eff + 2.0 * beta * c_left * a_eff + c_left * c_left;
    let quad_b = p * a_eff * a_eff - 2.0 * beta * c_right * a_eff + c_right * c_right;
    let ln_pair = (quad_b / quad_a).ln() / (2.0 * p);
    let arctan_part = |c: f64, sign: f64| -> f64 {
        if c == 0.0 || beta == 0.0 {
            0.0
        } else {
            let arg = (p * a_eff + sign * beta * c) / c.abs();
            (beta * c.signum() / p) * (std::f64::consts::FRAC_PI_2 - arg.atan())
        }
    };
    dxf_value * (ln_pair - arctan_part(c_left, 1.0) - arctan_part(c_right, -1.0))
}

/// Velocity tail correction at one evaluation point, kernel exponent zero.
/// `c_left`/`c_right` are built from the pointwise value and the far field.
pub fn tail_correction(
    f_value: f64,
    dxf_value: f64,
    far: &FarField,
    radius: f64,
) -> Result<f64> {
    if !(radius > 0.0) {
        return Err(CoreError::InvalidParameter(format!(
            "tail radius must be positive, got {radius}"
        )));
    }
    Ok(velocity_tail_closed(
        dxf_value,
        f_value - far.left,
        f_value - far.right,
        far.tilt,
        radius,
    ))
}

/// Paired tails of the regularized velocity integrand (kernel exponent > 0,
/// untilted). No elementary antiderivative exists, but after pairing the
/// integrand decays like alpha^(3 eps - 3); substituting alpha = w^-4 grades
/// the remaining algebraic cusp away from the origin so Gauss panels
/// converge for the whole exponent range.
pub fn velocity_tail_regularized(
    dxf_value: f64,
    c_left: f64,
    c_right: f64,
    eps: f64,
    a_eff: f64,
) -> f64 {
    if dxf_value == 0.0 || c_left == c_right {
        // the paired integrand vanishes identically
        return 0.0;
    }
    let ca2 = c_left * c_left;
    let cb2 = c_right * c_right;
    // with u = 1/alpha the paired integrand is
    //   (cb^2 - ca^2) u^(1-3eps) / ((1 + ca^2 u^q)(1 + cb^2 u^q)), q = 2-2eps;
    // substituting u = w^4 gives 4 (cb^2-ca^2) w^(7-12eps) / (...), smooth
    // enough at w = 0 for eps < 1/2.
    let q = 2.0 - 2.0 * eps;
    let pow = 7.0 - 12.0 * eps;
    let upper = a_eff.powf(-0.25);
    let integrand = |w: f64| -> f64 {
        if w <= 0.0 {
            return 0.0;
        }
        let u = w * w * w * w;
        let uq = u.powf(q);
        4.0 * (cb2 - ca2) * w.powf(pow) / ((1.0 + ca2 * uq) * (1.0 + cb2 * uq))
    };
    dxf_value * gauss_panels(0.0, upper, 16, integrand)
}

/// Renormalized paired tails of the arctan flux (kernel exponent zero,
/// untilted): G(c_b; A) - G(c_a; A) with
///   G(c; A) = A arctan(c/A) + (c/2) ln(A^2 + c^2).
///
/// The raw tails carry an x-independent logarithmic divergence proportional
/// to (b - a); it is dropped here, which fixes the flux only up to an
/// additive constant. Every consumer pairs the flux against an x-derivative
/// or a mean-zero test-function gradient, so the constant never matters.
pub fn flux_tail_renormalized(c_left: f64, c_right: f64, a_eff: f64) -> f64 {
    let g = |c: f64| a_eff * (c / a_eff).atan() + 0.5 * c * (a_eff * a_eff + c * c).ln();
    g(c_right) - g(c_left)
}

/// Paired tails of the fractional-dissipation kernel integral
/// (f(x) - limit)/|alpha|^(2-eps): exact power-law integrals.
pub fn lambda_tail(c_left: f64, c_right: f64, eps: f64, a_eff: f64) -> f64 {
    (c_left + c_right) * a_eff.powf(eps - 1.0) / (1.0 - eps)
}

/// Composite Gauss-Legendre (16-point panels) on [a, b].
pub(crate) fn gauss_panels(a: f64, b: f64, panels: usize, f: impl Fn(f64) -> f64) -> f64 {
    const X: [f64; 8] = [
        0.0950125098376374,
        0.2816035507792589,
        0.4580167776572274,
        0.6178762444026438,
        0.7554044083550030,
        0.8656312023878318,
        0.9445750230732326,
        0.9894009349916499,
    ];
    const W: [f64; 8] = [
        0.1894506104550685,
        0.1826034150449236,
        0.1691565193950025,
        0.1495959888165767,
        0.1246289712555339,
        0.0951585116824928,
        0.0622535239386479,
        0.0271524594117541,
    ];
    let width = (b - a) / panels as f64;
    let mut total = 0.0;
    for p in 0..panels {
        let lo = a + p as f64 * width;
        let mid = lo + 0.5 * width;
        let half = 0.5 * width;
        let mut sum = 0.0;
        for i in 0..8 {
            sum += W[i] * (f(mid - half * X[i]) + f(mid + half * X[i]));
        }
        total += sum * half;
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Brute-force the paired velocity tail over A < |alpha| < cutoff.
    fn brute_velocity_tail(
        dxf: f64,
        c_a: f64,
        c_b: f64,
        beta: f64,
        eps: f64,
        a_eff: f64,
        cutoff: f64,
    ) -> f64 {
        let paired = |alpha: f64| -> f64 {
            let k = alpha.abs().powf(eps) / alpha;
            let pos = dxf * k / (1.0 + (c_a * k + beta) * (c_a * k + beta));
            let k = (-alpha).abs().powf(eps) / -alpha;
            let neg = dxf * k / (1.0 + (c_b * k + beta) * (c_b * k + beta));
            pos + neg
        };
        // log-spaced panels keep resolution near A and reach the far cutoff
        let mut total = 0.0;
        let mut lo = a_eff;
        while lo < cutoff {
            let hi = (lo * 1.5).min(cutoff);
            total += gauss_panels(lo, hi, 4, paired);
            lo = hi;
        }
        total
    }

    #[test]
    fn decayed_data_has_zero_tail() {
        // a = b and f(x) = a: both sides cancel exactly
        assert_eq!(velocity_tail_closed(-1.3, 0.0, 0.0, 0.0, 10.0), 0.0);
    }

    #[test]
    fn symmetric_midpoint_has_zero_tail() {
        // f(x) = (a+b)/2 puts c_a = -c_b, and the beta = 0 log ratio is one
        let t = velocity_tail_closed(-0.7, -1.0, 1.0, 0.0, 12.5);
        assert!(t.abs() < 1e-15, "{t}");
    }

    #[test]
    fn closed_form_matches_brute_force_integral() {
        // a = 2, b = 0, f(x) = 0, f'(x) = -1, A = 10:
        // predicted 0.5 * ln(100/104) * (-1)
        let expect = 0.5 * (100.0_f64 / 104.0).ln() * (-1.0);
        let closed = velocity_tail_closed(-1.0, -2.0, 0.0, 0.0, 10.0);
        assert!((closed - expect).abs() < 1e-14, "{closed} vs {expect}");
        let brute = brute_velocity_tail(-1.0, -2.0, 0.0, 0.0, 0.0, 10.0, 1e6);
        assert!((closed - brute).abs() < 1e-8, "{closed} vs brute {brute}");
    }

    #[test]
    fn tilted_closed_form_matches_brute_force() {
        for &beta in &[-0.5, -0.25, 0.25] {
            let closed = velocity_tail_closed(-0.8, -1.7, 0.3, beta, 15.0);
            let brute = brute_velocity_tail(-0.8, -1.7, 0.3, beta, 0.0, 15.0, 3e6);
            assert!(
                (closed - brute).abs() < 1e-6,
                "beta={beta}: {closed} vs {brute}"
            );
        }
    }

    #[test]
    fn regularized_tail_matches_brute_force() {
        let (dxf, c_a, c_b) = (-0.9, -1.5, 0.5);
        for &eps in &[0.05, 0.25, 0.45] {
            let num = velocity_tail_regularized(dxf, c_a, c_b, eps, 20.0);
            let cutoff = 1e7;
            let brute = brute_velocity_tail(dxf, c_a, c_b, 0.0, eps, 20.0, cutoff)
                // leading asymptotic remainder beyond the cutoff:
                // integrand ~ dxf (cb^2-ca^2) alpha^(3eps-3)
                + dxf * (c_b * c_b - c_a * c_a) * cutoff.powf(3.0 * eps - 2.0)
                    / (2.0 - 3.0 * eps);
            assert!(
                (num - brute).abs() < 1e-6 * brute.abs().max(1e-3),
                "eps={eps}: {num} vs {brute}"
            );
        }
    }

    #[test]
    fn lambda_tail_power_law() {
        // int_A^inf c a^(eps-2) da = c A^(eps-1)/(1-eps), both sides
        let got = lambda_tail(1.0, 3.0, 0.25, 8.0);
        let expect = 4.0 * 8.0_f64.powf(-0.75) / 0.75;
        assert!((got - expect).abs() < 1e-13);
    }

    #[test]
    fn flux_tail_against_brute_force_difference() {
        // the renormalized tail equals the brute integral of
        // arctan(c_a/al) - arctan(c_b/al) from A to R, minus the divergent
        // piece (c_a - c_b)(ln R + 1) as R -> inf
        let (c_a, c_b, a_eff) = (-1.3, 0.7, 9.0);
        let r: f64 = 1e7;
        let brute = {
            let mut total = 0.0;
            let mut lo = a_eff;
            while lo < r {
                let hi = (lo * 1.5).min(r);
                total += gauss_panels(lo, hi, 4, |al| (c_a / al).atan() - (c_b / al).atan());
                lo = hi;
            }
            total
        };
        let renorm = brute - (c_a - c_b) * (r.ln() + 1.0);
        let got = flux_tail_renormalized(c_a, c_b, a_eff);
        assert!((got - renorm).abs() < 1e-6, "{got} vs {renorm}");
    }

    #[test]
    fn radius_validation() {
        assert!(TailSpec::new(-1.0).is_err());
        let t = TailSpec::new(0.05).unwrap();
        assert!(t.effective(0.1).is_err()); // radius below spacing
        let t = TailSpec::new(10.0).unwrap();
        let (j, a_eff) = t.effective(0.1).unwrap();
        assert_eq!(j, 100);
        assert!((a_eff - 10.05).abs() < 1e-12);
    }
}
