//! Fourier-multiplier machinery on the 2L-periodic extension of the grid.
//!
//! Valid for fields that decay inside the domain (windowed or compactly
//! supported data); callers gate on the far field before coming here. Mode m
//! of the length-2L torus carries wavenumber k_m = pi*m/L.

use rustfft::num_complex::Complex64;
use rustfft::FftPlanner;

use crate::grid::Grid;

/// Apply a real, even multiplier `m(|k|)` in Fourier space.
pub fn apply_even_multiplier(grid: &Grid, field: &[f64], mult: impl Fn(f64) -> f64) -> Vec<f64> {
    assert_eq!(field.len(), grid.len());
    let n = grid.len();
    let mut buf: Vec<Complex64> = field.iter().map(|&v| Complex64::new(v, 0.0)).collect();
    let mut planner = FftPlanner::new();
    planner.plan_fft_forward(n).process(&mut buf);
    let dk = std::f64::consts::PI / grid.half_width();
    for (m, c) in buf.iter_mut().enumerate() {
        let freq = if m <= n / 2 { m as f64 } else { m as f64 - n as f64 };
        *c *= mult((freq * dk).abs());
    }
    planner.plan_fft_inverse(n).process(&mut buf);
    let scale = 1.0 / n as f64;
    buf.into_iter().map(|c| c.re * scale).collect()
}

/// Apply the multiplier -i*sign(k) (the Hilbert transform symbol).
/// The mean and Nyquist bins are zeroed.
pub fn apply_hilbert_multiplier(grid: &Grid, field: &[f64]) -> Vec<f64> {
    assert_eq!(field.len(), grid.len());
    let n = grid.len();
    let mut buf: Vec<Complex64> = field.iter().map(|&v| Complex64::new(v, 0.0)).collect();
    let mut planner = FftPlanner::new();
    planner.plan_fft_forward(n).process(&mut buf);
    for (m, c) in buf.iter_mut().enumerate() {
        if m == 0 || 2 * m == n {
            *c = Complex64::new(0.0, 0.0);
        } else if m < n / 2 + n % 2 {
            *c *= Complex64::new(0.0, -1.0);
        } else {
            *c *= Complex64::new(0.0, 1.0);
        }
    }
    planner.plan_fft_inverse(n).process(&mut buf);
    let scale = 1.0 / n as f64;
    buf.into_iter().map(|c| c.re * scale).collect()
}

/// Smallest positive torus wavenumber representable on the grid.
pub fn fundamental_wavenumber(grid: &Grid) -> f64 {
    std::f64::consts::PI / grid.half_width()
}

/// Snap a requested wavenumber to the nearest exact torus harmonic (at least
/// the fundamental). Exact harmonics make sines true multiplier eigenvectors.
pub fn snap_wavenumber(grid: &Grid, k: f64) -> f64 {
    let dk = fundamental_wavenumber(grid);
    let m = (k / dk).round().max(1.0);
    m * dk
}
