//! Uniform grid on the truncated line [-L, L).

use crate::error::{CoreError, Result};

/// Uniform grid of `n` nodes x_i = -L + i*h, h = 2L/n.
///
/// The right endpoint +L is not a node; everything at or beyond it belongs to
/// the far-field extension.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid {
    half_width: f64,
    n: usize,
    spacing: f64,
}

impl Grid {
    pub const MIN_POINTS: usize = 16;

    pub fn new(half_width: f64, n: usize) -> Result<Self> {
        if !(half_width.is_finite() && half_width > 0.0) {
            return Err(CoreError::InvalidParameter(format!(
                "grid half_width must be finite and positive, got {half_width}"
            )));
        }
        if n < Self::MIN_POINTS || n % 2 != 0 {
            return Err(CoreError::InvalidParameter(format!(
                "grid point count must be an even integer >= {}, got {n}",
                Self::MIN_POINTS
            )));
        }
        Ok(Grid { half_width, n, spacing: 2.0 * half_width / n as f64 })
    }

    pub fn half_width(&self) -> f64 {
        self.half_width
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn spacing(&self) -> f64 {
        self.spacing
    }

    pub fn node(&self, i: usize) -> f64 {
        debug_assert!(i < self.n);
        -self.half_width + i as f64 * self.spacing
    }

    pub fn nodes(&self) -> Vec<f64> {
        (0..self.n).map(|i| self.node(i)).collect()
    }

    /// Index of the node closest to `x` (clamped to the grid).
    pub fn nearest_node(&self, x: f64) -> usize {
        let raw = (x + self.half_width) / self.spacing;
        (raw.round().max(0.0) as usize).min(self.n - 1)
    }

    /// Sample an analytic function at every node.
    pub fn sample(&self, f: impl Fn(f64) -> f64) -> Vec<f64> {
        (0..self.n).map(|i| f(self.node(i))).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn node_spacing_is_uniform_to_machine_precision() {
        let g = Grid::new(40.0, 2048).unwrap();
        let h = g.spacing();
        for i in 0..g.len() - 1 {
            let d = g.node(i + 1) - g.node(i);
            assert!(
                (d - h).abs() <= 1e-12 * h.max(1.0),
                "spacing off at i={i}: {d} vs {h}"
            );
        }
        assert_eq!(g.node(0), -40.0);
        assert!((g.node(g.len() - 1) - (40.0 - h)).abs() < 1e-12);
    }

    #[test]
    fn rejects_degenerate_grids() {
        assert!(Grid::new(40.0, 8).is_err());
        assert!(Grid::new(40.0, 2047).is_err());
        assert!(Grid::new(0.0, 64).is_err());
        assert!(Grid::new(f64::NAN, 64).is_err());
    }

    #[test]
    fn nearest_node_roundtrips() {
        let g = Grid::new(10.0, 64).unwrap();
        for i in 0..64 {
            assert_eq!(g.nearest_node(g.node(i)), i);
        }
        assert_eq!(g.nearest_node(-1e9), 0);
        assert_eq!(g.nearest_node(1e9), 63);
    }
}
