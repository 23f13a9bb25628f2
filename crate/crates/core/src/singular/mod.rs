//! Nonlocal operators: the principal-value contour velocity, the arctan
//! flux, regularized differences, fractional Laplacian powers, the Hilbert
//! transform, and the analytic far-field tail corrections.

mod c1;
mod diff;
mod flux;
mod hilbert;
mod lambda;
mod tail;
mod velocity;

pub use c1::{c1, kernel_symbol_integral};
pub use diff::regularized_difference;
pub use flux::{arctan_flux, arctan_flux_at};
pub use hilbert::{hilbert_transform, HilbertBackend};
pub use lambda::{lambda_power, LambdaBackend, LambdaNormalization};
pub use tail::{
    flux_tail_renormalized, lambda_tail, tail_correction, velocity_tail_closed,
    velocity_tail_regularized, TailSpec,
};
pub use velocity::{
    brute_force_velocity, max_relative_discrepancy, pv_velocity, pv_velocity_reversed,
    velocity_reference_oracle,
};
