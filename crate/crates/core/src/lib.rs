//! Exact symbolic engine for 2-D isotropic hyperelastic waves.
//!
//! Everything here is pure algebra over exact rationals: the polynomial
//! substrate ([`poly`]), the stored-energy expansion and the resulting
//! Euler–Lagrange system ([`material`]), plane-wave null conditions
//! ([`nullcond`]) and the curl-free (radial) reduction ([`reduction`]).
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod error;
pub mod material;
pub mod nullcond;
pub mod poly;
pub mod reduction;

pub use error::{Error, Result};
pub use material::{DerivedCoefficients, MaterialModel};
pub use poly::{Polynomial, Rational, Var, VariableSpace};
