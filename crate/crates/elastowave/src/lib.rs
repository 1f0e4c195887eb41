//! Numerical side of the elastic wave engine: the periodic finite-difference
//! solver ([`sim`]), the experiments built on it ([`lab`]), configuration
//! and report formats ([`config`], [`report`]).

pub mod config;
pub mod error;
pub mod lab;
pub mod report;
pub mod sim;
pub mod verify;

pub use error::SimError;
