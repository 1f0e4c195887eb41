//! The fixed variable spaces used by the derivations.
//!
//! The jet space holds, in order: the gradient entries `G_im = ∂_m u^i`
//! (`G11 G12 G21 G22`), the second-order jets `u^i_{mn}` with `m <= n`
//! (`u1_11 u1_12 u1_22 u2_11 u2_12 u2_22`), the direction `c, s`, the
//! plane-wave profile symbols `p = ψ'`, `p2 = ψ''`, and free polarization
//! amplitudes `a1, a2`.
//!
//! The field space holds the invariant symbols `D = ∇·u`, `R = ∇⊥·u` and
//! `Q = Q12(u¹, u²)`; `Q` carries weight two.

use alloc::{boxed::Box, sync::Arc, vec};

use once_cell::race::OnceBox;

use super::{Polynomial, Role, Var, VarInfo, VariableSpace};

pub const C: Var = Var(10);
pub const S: Var = Var(11);
pub const P: Var = Var(12);
pub const P2: Var = Var(13);
pub const A1: Var = Var(14);
pub const A2: Var = Var(15);

pub const D: Var = Var(0);
pub const R: Var = Var(1);
pub const Q: Var = Var(2);

/// `G_im = u^i_m`, with `i, m ∈ {1, 2}`.
pub const fn grad(i: usize, m: usize) -> Var {
    Var((i - 1) * 2 + (m - 1))
}

/// `u^i_{mn}`; the index pair is sorted so `hess(i, 2, 1) == hess(i, 1, 2)`.
pub const fn hess(i: usize, m: usize, n: usize) -> Var {
    let (lo, hi) = if m <= n { (m, n) } else { (n, m) };
    let slot = match (lo, hi) {
        (1, 1) => 0,
        (1, 2) => 1,
        _ => 2,
    };
    Var(4 + (i - 1) * 3 + slot)
}

static JET_SPACE: OnceBox<Arc<VariableSpace>> = OnceBox::new();
static FIELD_SPACE: OnceBox<Arc<VariableSpace>> = OnceBox::new();

/// The shared jet space (built once; clones are cheap pointer copies).
pub fn space() -> Arc<VariableSpace> {
    JET_SPACE
        .get_or_init(|| Box::new(build_space()))
        .clone()
}

/// The shared field space `{D, R, Q}`.
pub fn field_space() -> Arc<VariableSpace> {
    FIELD_SPACE
        .get_or_init(|| Box::new(build_field_space()))
        .clone()
}

fn build_space() -> Arc<VariableSpace> {
    let g = |n: &str| VarInfo::new(n, Role::Gradient, 1);
    let h = |n: &str| VarInfo::new(n, Role::SecondJet, 1);
    VariableSpace::new(vec![
        g("G11"),
        g("G12"),
        g("G21"),
        g("G22"),
        h("u1_11"),
        h("u1_12"),
        h("u1_22"),
        h("u2_11"),
        h("u2_12"),
        h("u2_22"),
        VarInfo::new("c", Role::Cos, 0),
        VarInfo::new("s", Role::Sin, 0),
        VarInfo::new("p", Role::Profile, 0),
        VarInfo::new("p2", Role::Profile, 0),
        VarInfo::new("a1", Role::Amplitude, 0),
        VarInfo::new("a2", Role::Amplitude, 0),
    ])
    .expect("jet space names are unique")
}

fn build_field_space() -> Arc<VariableSpace> {
    VariableSpace::new(vec![
        VarInfo::new("D", Role::Field, 1),
        VarInfo::new("R", Role::Field, 1),
        VarInfo::new("Q", Role::Field, 2),
    ])
    .expect("field space names are unique")
}

/// Convenience handle bundling the jet space with variable constructors.
#[derive(Clone, Debug)]
pub struct Jets {
    pub space: Arc<VariableSpace>,
}

impl Default for Jets {
    fn default() -> Self {
        Jets { space: space() }
    }
}

impl Jets {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn v(&self, v: Var) -> Polynomial {
        Polynomial::var(&self.space, v)
    }

    pub fn g(&self, i: usize, m: usize) -> Polynomial {
        self.v(grad(i, m))
    }

    pub fn h(&self, i: usize, m: usize, n: usize) -> Polynomial {
        self.v(hess(i, m, n))
    }

    pub fn zero(&self) -> Polynomial {
        Polynomial::zero(&self.space)
    }

    pub fn constant(&self, c: super::Rational) -> Polynomial {
        Polynomial::constant(&self.space, c)
    }

    /// `∇·u = G11 + G22`.
    pub fn divergence(&self) -> Polynomial {
        &self.g(1, 1) + &self.g(2, 2)
    }

    /// `∇⊥·u = ∂2 u¹ − ∂1 u² = G12 − G21`.
    pub fn curl(&self) -> Polynomial {
        &self.g(1, 2) - &self.g(2, 1)
    }

    /// `Q12(u¹, u²) = ∂1u¹ ∂2u² − ∂1u² ∂2u¹ = det G`.
    pub fn null_form(&self) -> Polynomial {
        &(&self.g(1, 1) * &self.g(2, 2)) - &(&self.g(2, 1) * &self.g(1, 2))
    }

    /// Direction `ω = (c, s)`.
    pub fn omega(&self) -> [Polynomial; 2] {
        [self.v(C), self.v(S)]
    }

    /// `ω⊥ = (s, −c)`.
    pub fn omega_perp(&self) -> [Polynomial; 2] {
        [self.v(S), -self.v(C)]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn second_jets_are_symmetric_by_construction() {
        for i in 1..=2 {
            assert_eq!(hess(i, 1, 2), hess(i, 2, 1));
        }
        let sp = space();
        assert_eq!(sp.name(hess(2, 2, 1)), "u2_12");
        assert_eq!(sp.name(grad(2, 1)), "G21");
        assert_eq!(sp.name(C), "c");
        assert_eq!(sp.name(A2), "a2");
        assert_eq!(sp.len(), 16);
    }
}
