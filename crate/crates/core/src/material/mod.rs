//! Isotropic stored energy, its expansion in the displacement gradient, and
//! the resulting Euler–Lagrange system.

mod audit;
mod display;
mod energy;
mod identities;
mod model;
mod strain;
mod tensor;
mod variational;

pub use audit::{
    audit, audit_generic, printed_coefficients, printed_energy, sigma_space, AuditReport,
    CoefficientAudit, GenericAudit, L4Sign,
};
pub use display::{
    linear_display, n2_display, n3_display, n3_terms, reduced_linear, reduced_n2, reduced_n3,
    DisplayTerm, JetCalculus, JetField,
};
pub use energy::{
    derived_coefficients, energy_expansion, expand_field, field_form, to_field_form,
    DerivedCoefficients, EnergyExpansion, FieldFormEnergy,
};
pub use identities::{identity_battery, IdentityCheck, Traces};
pub use model::MaterialModel;
pub use strain::{generic_gradient, principal_invariants, strain_tensor, Matrix2Poly};
pub use tensor::{b_tensors, BTensors};
pub use variational::{euler_lagrange, euler_lagrange_of, total_derivative, SymbolicRHS};
