//! Time-ordered run output: profile snapshots plus per-step diagnostics.

use serde::{Deserialize, Serialize};

use crate::diagnostics::DiagnosticsRecord;
use crate::grid::Grid;
use crate::profile::{FarField, InterfaceProfile};

/// Why a run stopped early.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AbortInfo {
    pub step: usize,
    pub time: f64,
    pub reason: String,
}

/// Run metadata carried alongside the data.
#[derive(Debug, Clone, PartialEq)]
pub struct RunMeta {
    pub scheme: String,
    pub grid: Grid,
    pub far: FarField,
    pub density_coefficient: f64,
    pub kernel_exponent: f64,
    pub local_viscosity: f64,
}

/// Snapshots at the configured stride (first and last always included) and
/// one diagnostics record per accepted step. Append-only.
#[derive(Debug, Clone)]
pub struct Trajectory {
    pub meta: RunMeta,
    pub snapshots: Vec<InterfaceProfile>,
    pub records: Vec<DiagnosticsRecord>,
    pub abort: Option<AbortInfo>,
}

impl Trajectory {
    pub fn new(meta: RunMeta) -> Self {
        Trajectory { meta, snapshots: Vec::new(), records: Vec::new(), abort: None }
    }

    pub fn push_snapshot(&mut self, profile: InterfaceProfile) {
        if let Some(last) = self.snapshots.last() {
            debug_assert!(profile.time() > last.time(), "snapshot times must increase");
            debug_assert_eq!(profile.grid(), last.grid(), "snapshots share one grid");
            debug_assert_eq!(profile.far_field(), last.far_field());
        }
        self.snapshots.push(profile);
    }

    pub fn push_record(&mut self, record: DiagnosticsRecord) {
        if let Some(last) = self.records.last() {
            debug_assert!(record.t > last.t, "record times must increase");
        }
        self.records.push(record);
    }

    pub fn initial(&self) -> &InterfaceProfile {
        &self.snapshots[0]
    }

    pub fn last(&self) -> &InterfaceProfile {
        self.snapshots.last().expect("trajectory holds at least the initial profile")
    }

    pub fn times(&self) -> Vec<f64> {
        self.snapshots.iter().map(|p| p.time()).collect()
    }

    pub fn aborted(&self) -> bool {
        self.abort.is_some()
    }
}
