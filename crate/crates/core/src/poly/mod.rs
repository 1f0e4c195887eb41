//! Exact multivariate polynomials with rational coefficients.
//!
//! A [`Polynomial`] is a canonical map from exponent vectors to nonzero
//! [`Rational`] coefficients over a fixed [`VariableSpace`]. Monomials are
//! kept in graded lexicographic order, so iteration and the text form are
//! reproducible.

mod linsolve;
mod polynomial;
mod rational;
mod space;

pub mod jet;

pub use linsolve::{solve_exact, solve_particular};
pub use polynomial::{Monomial, Polynomial};
pub use rational::{parse_rational, rat, Rational};
pub use space::{Role, Var, VarInfo, VariableSpace};
