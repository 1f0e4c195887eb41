use serde::{Deserialize, Serialize};

use crate::sim::RunReport;

/// Gradients below this are treated as zero when forming the curl ratio.
pub const DEFAULT_FLOOR: f64 = 1e-12;
pub const DEFAULT_TOLERANCE: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CurlVerdict {
    pub max_ratio: f64,
    /// Sample time at which the ratio peaked.
    pub worst_time: f64,
    pub tolerance: f64,
    pub passed: bool,
}

/// Passes iff `max|∇⊥·u| / max(max|∇u|, floor) ≤ tolerance` at every sample.
pub fn curl_monitor(report: &RunReport, tolerance: f64, floor: f64) -> CurlVerdict {
    let (worst_time, max_ratio) = report
        .samples
        .iter()
        .map(|s| (s.t, s.curl_ratio(floor)))
        .fold((0.0, 0.0), |acc, x| if x.1 > acc.1 { x } else { acc });
    CurlVerdict {
        max_ratio,
        worst_time,
        tolerance,
        passed: max_ratio <= tolerance,
    }
}
