//! The smooth compactly supported bump family shared by mollifiers, data
//! windows, and test functions.

/// exp(-1/(1-z^2)) inside |z| < 1, zero outside.
pub fn bump(z: f64) -> f64 {
    if z.abs() < 1.0 {
        (-1.0 / (1.0 - z * z)).exp()
    } else {
        0.0
    }
}

/// d/dz of `bump`.
pub fn bump_dz(z: f64) -> f64 {
    if z.abs() < 1.0 {
        let d = 1.0 - z * z;
        bump(z) * (-2.0 * z) / (d * d)
    } else {
        0.0
    }
}

/// C-infinity transition from 0 at t <= 0 to 1 at t >= 1.
pub fn smoothstep(t: f64) -> f64 {
    let rise = ramp(t);
    let fall = ramp(1.0 - t);
    rise / (rise + fall)
}

fn ramp(t: f64) -> f64 {
    if t > 0.0 {
        (-1.0 / t).exp()
    } else {
        0.0
    }
}

/// Plateau window: identically 1 for |x| <= r_in, identically 0 for
/// |x| >= r_out, smooth in between.
pub fn window(x: f64, r_in: f64, r_out: f64) -> f64 {
    debug_assert!(r_out > r_in && r_in > 0.0);
    smoothstep((r_out - x.abs()) / (r_out - r_in))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bump_support_and_symmetry() {
        assert_eq!(bump(1.0), 0.0);
        assert_eq!(bump(-2.0), 0.0);
        assert!(bump(0.0) > 0.0);
        assert_eq!(bump(0.3), bump(-0.3));
        assert_eq!(bump_dz(0.0), 0.0);
    }

    #[test]
    fn window_plateau_is_exact() {
        for &x in &[-5.0, 0.0, 5.0] {
            assert_eq!(window(x, 5.0, 10.0), 1.0);
        }
        for &x in &[-10.0, 10.0, 12.0] {
            assert_eq!(window(x, 5.0, 10.0), 0.0);
        }
        let mid = window(7.5, 5.0, 10.0);
        assert!(mid > 0.0 && mid < 1.0);
    }

    #[test]
    fn bump_derivative_matches_finite_difference() {
        let h = 1e-6;
        for &z in &[0.2, -0.5, 0.8] {
            let fd = (bump(z + h) - bump(z - h)) / (2.0 * h);
            assert!((bump_dz(z) - fd).abs() < 1e-6, "z={z}");
        }
    }
}
