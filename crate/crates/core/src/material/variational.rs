use alloc::string::ToString;

use super::energy::energy_expansion;
use super::model::MaterialModel;
use crate::poly::jet::{grad, hess, Jets};
use crate::poly::{Polynomial, Role};
use crate::{Error, Result};

/// Formal spatial derivative `∂_l` on jet polynomials.
///
/// Chain rule on first-order jets, `u^j_m ↦ u^j_{ml}`. Inputs must not
/// contain second-order jets (their derivative is outside the space).
pub fn total_derivative(p: &Polynomial, l: usize) -> Result<Polynomial> {
    let jets = Jets::new();
    if !crate::poly::VariableSpace::same_space(p.space(), &jets.space) {
        return Err(Error::SpaceMismatch);
    }
    for v in jets.space.with_role(Role::SecondJet) {
        if p.depends_on(v) {
            return Err(Error::JetOrderExceeded(p.to_string()));
        }
    }
    let mut out = jets.zero();
    for j in 1..=2 {
        for m in 1..=2 {
            let dp = p.differentiate(grad(j, m))?;
            if !dp.is_zero() {
                out = &out + &(&dp * &jets.v(hess(j, m, l)));
            }
        }
    }
    Ok(out)
}

/// `Σ_l ∂_l (∂L/∂G_il)` for `i = 1, 2`.
pub fn euler_lagrange_of(lagrangian: &Polynomial) -> Result<[Polynomial; 2]> {
    let mut out = [Polynomial::zero(lagrangian.space()), Polynomial::zero(lagrangian.space())];
    for (i, slot) in out.iter_mut().enumerate() {
        for l in 1..=2 {
            let flux = lagrangian.differentiate(grad(i + 1, l))?;
            *slot = &*slot + &total_derivative(&flux, l)?;
        }
    }
    Ok(out)
}

/// Right-hand side of `∂²_t u^i = …` split by degree in the jets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymbolicRHS {
    pub full: [Polynomial; 2],
    pub linear: [Polynomial; 2],
    /// `N2`.
    pub quadratic: [Polynomial; 2],
    /// `N3`.
    pub cubic: [Polynomial; 2],
}

impl SymbolicRHS {
    pub fn from_full(full: [Polynomial; 2]) -> Self {
        let part = |d: u32| [full[0].homogeneous_part(d), full[1].homogeneous_part(d)];
        SymbolicRHS {
            linear: part(1),
            quadratic: part(2),
            cubic: part(3),
            full,
        }
    }

    /// `full == linear + quadratic + cubic`.
    pub fn is_complete(&self) -> bool {
        (0..2).all(|i| {
            self.full[i] == &(&self.linear[i] + &self.quadratic[i]) + &self.cubic[i]
        })
    }
}

pub fn euler_lagrange(m: &MaterialModel) -> Result<SymbolicRHS> {
    let energy = energy_expansion(m);
    Ok(SymbolicRHS::from_full(euler_lagrange_of(&energy.total())?))
}
