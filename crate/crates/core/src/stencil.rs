//! Finite-difference stencils on uniform grids.
//!
//! Near the boundary the stencils shift one-sided instead of reaching into the
//! far-field extension: the extension is static while boundary samples may
//! drift, and a stencil straddling that seam would report spurious slopes.
//!
//! Every stencil is written in difference-from-center form, so constant
//! profiles have exactly zero derivatives in floating point and a large
//! constant background costs no precision.

/// First derivative, 4th order (5-point), one-sided within two nodes of the edges.
pub fn dx(samples: &[f64], h: f64) -> Vec<f64> {
    let n = samples.len();
    assert!(n >= 5, "need at least 5 samples");
    let f = samples;
    let c = 1.0 / (12.0 * h);
    let mut out = vec![0.0; n];
    out[0] = (48.0 * (f[1] - f[0]) - 36.0 * (f[2] - f[0]) + 16.0 * (f[3] - f[0])
        - 3.0 * (f[4] - f[0]))
        * c;
    out[1] = (-3.0 * (f[0] - f[1]) + 18.0 * (f[2] - f[1]) - 6.0 * (f[3] - f[1])
        + (f[4] - f[1]))
        * c;
    for i in 2..n - 2 {
        out[i] = ((f[i - 2] - f[i]) - 8.0 * (f[i - 1] - f[i]) + 8.0 * (f[i + 1] - f[i])
            - (f[i + 2] - f[i]))
            * c;
    }
    out[n - 2] = (3.0 * (f[n - 1] - f[n - 2]) - 18.0 * (f[n - 3] - f[n - 2])
        + 6.0 * (f[n - 4] - f[n - 2])
        - (f[n - 5] - f[n - 2]))
        * c;
    out[n - 1] = (-48.0 * (f[n - 2] - f[n - 1]) + 36.0 * (f[n - 3] - f[n - 1])
        - 16.0 * (f[n - 4] - f[n - 1])
        + 3.0 * (f[n - 5] - f[n - 1]))
        * c;
    out
}

/// Second derivative, 2nd order, one-sided at the edge nodes.
pub fn dxx(samples: &[f64], h: f64) -> Vec<f64> {
    let n = samples.len();
    assert!(n >= 4, "need at least 4 samples");
    let f = samples;
    let c = 1.0 / (h * h);
    let mut out = vec![0.0; n];
    out[0] = (-5.0 * (f[1] - f[0]) + 4.0 * (f[2] - f[0]) - (f[3] - f[0])) * c;
    for i in 1..n - 1 {
        out[i] = ((f[i - 1] - f[i]) + (f[i + 1] - f[i])) * c;
    }
    out[n - 1] =
        (-5.0 * (f[n - 2] - f[n - 1]) + 4.0 * (f[n - 3] - f[n - 1]) - (f[n - 4] - f[n - 1])) * c;
    out
}

/// Third derivative, 2nd order (5-point), one-sided within two nodes of the edges.
pub fn dxxx(samples: &[f64], h: f64) -> Vec<f64> {
    let n = samples.len();
    assert!(n >= 5, "need at least 5 samples");
    let f = samples;
    let c = 1.0 / (2.0 * h * h * h);
    let mut out = vec![0.0; n];
    out[0] = (18.0 * (f[1] - f[0]) - 24.0 * (f[2] - f[0]) + 14.0 * (f[3] - f[0])
        - 3.0 * (f[4] - f[0]))
        * c;
    out[1] = (-3.0 * (f[0] - f[1]) - 12.0 * (f[2] - f[1]) + 6.0 * (f[3] - f[1])
        - (f[4] - f[1]))
        * c;
    for i in 2..n - 2 {
        out[i] = ((f[i + 2] - f[i]) - 2.0 * (f[i + 1] - f[i]) + 2.0 * (f[i - 1] - f[i])
            - (f[i - 2] - f[i]))
            * c;
    }
    out[n - 2] = (3.0 * (f[n - 1] - f[n - 2]) + 12.0 * (f[n - 3] - f[n - 2])
        - 6.0 * (f[n - 4] - f[n - 2])
        + (f[n - 5] - f[n - 2]))
        * c;
    out[n - 1] = (-18.0 * (f[n - 2] - f[n - 1]) + 24.0 * (f[n - 3] - f[n - 1])
        - 14.0 * (f[n - 4] - f[n - 1])
        + 3.0 * (f[n - 5] - f[n - 1]))
        * c;
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grid(n: usize) -> (Vec<f64>, f64) {
        let l = 2.0;
        let h = 2.0 * l / n as f64;
        ((0..n).map(|i| -l + i as f64 * h).collect(), h)
    }

    #[test]
    fn exact_on_low_degree_polynomials() {
        let (xs, h) = grid(64);
        let f: Vec<f64> = xs.iter().map(|x| x.powi(4)).collect();
        let d1 = dx(&f, h);
        let d3 = dxxx(&f, h);
        for (i, &x) in xs.iter().enumerate() {
            assert!((d1[i] - 4.0 * x.powi(3)).abs() < 1e-9, "dx at {x}: {}", d1[i]);
            assert!((d3[i] - 24.0 * x).abs() < 1e-7, "dxxx at {x}: {}", d3[i]);
        }
        let f2: Vec<f64> = xs.iter().map(|x| x.powi(3)).collect();
        let d2 = dxx(&f2, h);
        for (i, &x) in xs.iter().enumerate() {
            assert!((d2[i] - 6.0 * x).abs() < 1e-9, "dxx at {x}: {}", d2[i]);
        }
    }

    #[test]
    fn convergence_orders_on_smooth_data() {
        // sin(x) on [-2,2]; interior error should drop ~16x (dx) and ~4x (dxx, dxxx)
        let err = |n: usize| -> (f64, f64, f64) {
            let (xs, h) = grid(n);
            let f: Vec<f64> = xs.iter().map(|x| x.sin()).collect();
            let d1 = dx(&f, h);
            let d2 = dxx(&f, h);
            let d3 = dxxx(&f, h);
            let mut e = (0.0_f64, 0.0_f64, 0.0_f64);
            for i in 0..n {
                let x = xs[i];
                e.0 = e.0.max((d1[i] - x.cos()).abs());
                e.1 = e.1.max((d2[i] + x.sin()).abs());
                e.2 = e.2.max((d3[i] + x.cos()).abs());
            }
            e
        };
        let (a1, a2, a3) = err(64);
        let (b1, b2, b3) = err(128);
        assert!(a1 / b1 > 10.0, "dx order: {}", a1 / b1);
        assert!(a2 / b2 > 3.0, "dxx order: {}", a2 / b2);
        assert!(a3 / b3 > 3.0, "dxxx order: {}", a3 / b3);
    }

    #[test]
    fn constants_have_exactly_zero_derivatives() {
        let f = vec![0.7; 32];
        assert!(dx(&f, 0.1).iter().all(|&v| v == 0.0));
        assert!(dxx(&f, 0.1).iter().all(|&v| v == 0.0));
        assert!(dxxx(&f, 0.1).iter().all(|&v| v == 0.0));
    }
}
