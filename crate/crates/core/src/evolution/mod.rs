//! Time integrators: the exact contour equation, the regularized system,
//! the mild-solution fixed point of the viscous local system, and the exact
//! linear propagator.

mod linear;
mod picard;
mod simulate;
mod steppers;

pub use linear::linear_evolve;
pub use picard::{heat_convolve, picard_local_solve, PicardOptions, PicardReport};
pub use simulate::{simulate, Scheme, SimOptions};
pub use steppers::{step_cde, step_regularized};
