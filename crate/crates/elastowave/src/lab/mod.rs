//! Experiments built on the solver: radial data, curl monitoring, the
//! numeric side of the radial reduction, lifespan sweeps, convergence and
//! wave-speed measurements.

pub mod convergence;
pub mod curl;
pub mod data;
pub mod reduction;
pub mod sweep;

pub use convergence::{convergence_study, speed_test, ConvergenceStudy, SpeedMeasurement};
pub use curl::{curl_monitor, CurlVerdict};
pub use data::{initial_state, radial_data, Bump, DataSpec, Mode, Polarization, RadialMode, RadialProfile};
pub use reduction::{reduction_check, reduction_residual, reduction_study, NumericReduction, ReductionVerdict};
pub use sweep::{lifespan_sweep, LabelledMaterial, SweepCell, SweepResult, SweepSpec};
