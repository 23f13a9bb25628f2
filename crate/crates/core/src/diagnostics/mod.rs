//! Monitored quantities and residuals: extrema, slopes, lap numbers, norms,
//! Holder seminorms, the energy identity, the distributional-form residual,
//! mode-decay fits, and run-level monotonicity verdicts.

mod dispersion;
mod energy;
mod guard;
pub(crate) mod record;
mod weak;

pub use dispersion::dispersion_fit;
pub use energy::{energy_identity_residual, log_dissipation_integral};
pub use guard::{monotonicity_guard, GuardReport};
pub use record::{holder_seminorm, lap_number, record_diagnostics, DiagConfig, DiagnosticsRecord};
pub use weak::{weak_form_residual, TestFunction};
