use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("operands live in different variable spaces")]
    SpaceMismatch,
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("variable `{0}` is unbound and absent from the target space")]
    UnboundVariable(String),
    #[error("duplicate variable `{0}` in variable space")]
    DuplicateVariable(String),
    #[error("invalid material: {0}")]
    InvalidMaterial(String),
    #[error("expression of degree {0} is not a polynomial in the divergence, curl and null-form invariants")]
    NotIsotropic(u32),
    #[error("total derivative of `{0}` would need third-order jets")]
    JetOrderExceeded(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("cannot parse `{0}` as a rational number")]
    ParseRational(String),
}
