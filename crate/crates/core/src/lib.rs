//! Numerical laboratory for the two-dimensional interface equation of
//! two-phase flow in porous media, for graph interfaces with large monotone
//! data and non-decaying far fields.
//!
//! The crate evolves interface graphs under the exact contour equation and
//! its regularized variants, provides the nonlocal operators they are built
//! from (principal-value velocity, arctan flux, fractional Laplacian,
//! Hilbert transform), and records every quantity the analysis of the
//! problem constrains: extrema, slope bounds, lap numbers, Sobolev norms,
//! energy-identity and weak-form residuals, far-field drift.

pub mod bump;
pub mod diagnostics;
pub mod error;
pub mod evolution;
pub mod grid;
pub mod params;
pub mod profile;
pub mod reduce;
pub mod scenarios;
pub mod singular;
pub mod spectral;
pub mod stencil;
pub mod trajectory;

pub use error::{CoreError, Result};
pub use grid::Grid;
pub use params::{PhysicsParams, RegularizationParams, StepControl, MAX_KERNEL_EXPONENT};
pub use profile::{
    default_far_field_tolerance, validate_profile, FarField, InterfaceProfile, ValidationReport,
};
pub use singular::TailSpec;
pub use trajectory::{AbortInfo, RunMeta, Trajectory};
