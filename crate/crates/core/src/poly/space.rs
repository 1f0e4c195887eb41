use alloc::{string::String, sync::Arc, vec::Vec};

use crate::{Error, Result};

/// What a variable stands for. Drives the default grading and circle reduction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Role {
    /// First-order jet `u^i_m`, i.e. the gradient entry `G_im`.
    Gradient,
    /// Second-order jet `u^i_{mn}` with `m <= n`.
    SecondJet,
    /// Direction cosine `c = ω1`.
    Cos,
    /// Direction sine `s = ω2`.
    Sin,
    /// Plane-wave profile derivative (`ψ'` or `ψ''`).
    Profile,
    /// Free polarization amplitude.
    Amplitude,
    /// Invariant symbol (divergence, curl, null form) of the field form.
    Field,
    Generic,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VarInfo {
    pub name: String,
    pub role: Role,
    /// Degree contributed to the default grading.
    pub weight: u32,
}

impl VarInfo {
    pub fn new(name: &str, role: Role, weight: u32) -> Self {
        VarInfo {
            name: name.into(),
            role,
            weight,
        }
    }
}

/// Index of a variable inside its [`VariableSpace`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Var(pub usize);

/// An ordered, duplicate-free list of variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VariableSpace {
    vars: Vec<VarInfo>,
}

impl VariableSpace {
    pub fn new(vars: Vec<VarInfo>) -> Result<Arc<Self>> {
        for (i, v) in vars.iter().enumerate() {
            if vars[..i].iter().any(|w| w.name == v.name) {
                return Err(Error::DuplicateVariable(v.name.clone()));
            }
        }
        Ok(Arc::new(VariableSpace { vars }))
    }

    /// Space of unit-weight generic variables, handy for tests and ad-hoc algebra.
    pub fn generic(names: &[&str]) -> Result<Arc<Self>> {
        Self::new(
            names
                .iter()
                .map(|n| VarInfo::new(n, Role::Generic, 1))
                .collect(),
        )
    }

    pub fn len(&self) -> usize {
        self.vars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vars.is_empty()
    }

    pub fn var(&self, name: &str) -> Result<Var> {
        self.vars
            .iter()
            .position(|v| v.name == name)
            .map(Var)
            .ok_or_else(|| Error::UnknownVariable(name.into()))
    }

    pub fn info(&self, v: Var) -> &VarInfo {
        &self.vars[v.0]
    }

    pub fn name(&self, v: Var) -> &str {
        &self.vars[v.0].name
    }

    pub fn contains(&self, v: Var) -> bool {
        v.0 < self.vars.len()
    }

    pub fn with_role(&self, role: Role) -> impl Iterator<Item = Var> + '_ {
        self.vars
            .iter()
            .enumerate()
            .filter(move |(_, v)| v.role == role)
            .map(|(i, _)| Var(i))
    }

    pub fn vars(&self) -> impl Iterator<Item = (Var, &VarInfo)> {
        self.vars.iter().enumerate().map(|(i, v)| (Var(i), v))
    }

    pub fn same_space(a: &Arc<Self>, b: &Arc<Self>) -> bool {
        Arc::ptr_eq(a, b) || a == b
    }
}
