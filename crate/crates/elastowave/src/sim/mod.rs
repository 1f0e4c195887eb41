//! Finite-difference integration of the truncated system on a periodic box.

pub mod diagnostics;
pub mod grid;
pub mod integrate;
pub mod material;
pub mod rhs;
pub mod run;
pub mod stencil;

pub use diagnostics::{diagnostics, Sample};
pub use grid::{Grid, VectorField};
pub use integrate::{rk4_step, rk4_step_with, State};
pub use material::{FieldEnergy, NumericMaterial};
pub use rhs::{full_rhs, hodge_laplacian, laplacian, linear_rhs, nonlinear_rhs, reduced_rhs};
pub use run::{run, run_from, run_with_state, RunReport, SimConfig, Termination, TimeStep};
pub use stencil::{dx, dy};
