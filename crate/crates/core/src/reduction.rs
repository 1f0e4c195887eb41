//! Exact check of the curl-free (radial) reduction.
//!
//! When `∇⊥·u ≡ 0` the jets satisfy `u¹_2 = u²_1`, `u¹_{12} = u²_{11}` and
//! `u¹_{22} = u²_{12}`. Substituting these into the Euler–Lagrange system of a
//! material with `d1 = e1 = 0` must give the single-speed system
//! `∂²_t u = c1² Δu + N2_red + N3_red`.

use alloc::{vec, vec::Vec};

use num_traits::Zero;

use crate::material::{
    derived_coefficients, euler_lagrange, n3_terms, reduced_linear, reduced_n2, reduced_n3,
    DerivedCoefficients, MaterialModel,
};
use crate::nullcond::{restrict_to_plane_wave, PlaneWaveFamily};
use crate::poly::jet::{grad, hess, Jets};
use crate::poly::{rat, Polynomial};
use crate::{Error, Result};

/// Applies the curl-free jet constraints.
pub fn curl_free(p: &Polynomial) -> Result<Polynomial> {
    let j = Jets::new();
    p.substitute(
        &[
            (grad(1, 2), j.v(grad(2, 1))),
            (hess(1, 1, 2), j.v(hess(2, 1, 1))),
            (hess(1, 2, 2), j.v(hess(2, 1, 2))),
        ],
        &j.space,
    )
}

fn curl_free_pair(v: &[Polynomial; 2]) -> Result<[Polynomial; 2]> {
    Ok([curl_free(&v[0])?, curl_free(&v[1])?])
}

fn diff(a: &[Polynomial; 2], b: &[Polynomial; 2]) -> [Polynomial; 2] {
    [&a[0] - &b[0], &a[1] - &b[1]]
}

fn is_zero_pair(v: &[Polynomial; 2]) -> bool {
    v.iter().all(Polynomial::is_zero)
}

#[derive(Debug, Clone)]
pub struct ReductionReport {
    /// Full minus reduced, after the curl-free substitution, by degree.
    pub linear_residual: [Polynomial; 2],
    pub quadratic_residual: [Polynomial; 2],
    pub cubic_residual: [Polynomial; 2],
    /// The `∇⊥R³` group of `N3` with unit coefficient, after substitution.
    pub e2_term: [Polynomial; 2],
    /// Reduced `N2` and `N3` on plane waves with free amplitude `(a1, a2)`.
    pub single_speed_quadratic: [Polynomial; 2],
    pub single_speed_cubic: [Polynomial; 2],
}

impl ReductionReport {
    /// The substituted system equals the reduced one exactly.
    pub fn exact(&self) -> bool {
        is_zero_pair(&self.linear_residual)
            && is_zero_pair(&self.quadratic_residual)
            && is_zero_pair(&self.cubic_residual)
    }

    pub fn e2_vanishes(&self) -> bool {
        is_zero_pair(&self.e2_term)
    }

    /// The reduced nonlinearities vanish on every single-speed plane wave.
    pub fn single_speed_null(&self) -> bool {
        is_zero_pair(&self.single_speed_quadratic) && is_zero_pair(&self.single_speed_cubic)
    }

    pub fn passed(&self) -> bool {
        self.exact() && self.e2_vanishes() && self.single_speed_null()
    }

    /// `(label, component, residual)` for every nonzero residual.
    pub fn nonzero(&self) -> Vec<(&'static str, usize, &Polynomial)> {
        let groups: [(&'static str, &[Polynomial; 2]); 6] = [
            ("linear", &self.linear_residual),
            ("quadratic", &self.quadratic_residual),
            ("cubic", &self.cubic_residual),
            ("e2_term", &self.e2_term),
            ("single_speed_quadratic", &self.single_speed_quadratic),
            ("single_speed_cubic", &self.single_speed_cubic),
        ];
        let mut out = vec![];
        for (label, v) in groups {
            for (i, p) in v.iter().enumerate() {
                if !p.is_zero() {
                    out.push((label, i + 1, p));
                }
            }
        }
        out
    }
}

pub fn reduction_check(m: &MaterialModel) -> Result<ReductionReport> {
    let k = derived_coefficients(m)?;
    if !k.d1.is_zero() || !k.e1.is_zero() {
        return Err(Error::Precondition(alloc::format!(
            "reduction needs d1 = e1 = 0, got d1 = {}, e1 = {}",
            k.d1,
            k.e1
        )));
    }
    let rhs = euler_lagrange(m)?;
    let red2 = reduced_n2(&k)?;
    let red3 = reduced_n3(&k)?;

    let linear_residual = diff(
        &curl_free_pair(&rhs.linear)?,
        &curl_free_pair(&reduced_linear(&k.c1sq))?,
    );
    let quadratic_residual = diff(&curl_free_pair(&rhs.quadratic)?, &curl_free_pair(&red2)?);
    let cubic_residual = diff(&curl_free_pair(&rhs.cubic)?, &curl_free_pair(&red3)?);

    let mut unit = DerivedCoefficients::from_values(core::array::from_fn(|_| rat(0, 1)));
    unit.e2 = rat(1, 1);
    let e2_group = n3_terms(&unit)?
        .into_iter()
        .find(|t| t.label == "e2")
        .expect("e2 group present");
    let e2_term = curl_free_pair(&e2_group.value)?;

    let fam = PlaneWaveFamily::arbitrary(k.c1sq.clone());
    let restrict = |v: &[Polynomial; 2]| -> Result<[Polynomial; 2]> {
        Ok([restrict_to_plane_wave(&v[0], &fam)?, restrict_to_plane_wave(&v[1], &fam)?])
    };
    Ok(ReductionReport {
        linear_residual,
        quadratic_residual,
        cubic_residual,
        e2_term,
        single_speed_quadratic: restrict(&red2)?,
        single_speed_cubic: restrict(&red3)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn null_example_reduces_exactly() {
        let r = reduction_check(&MaterialModel::null_example()).unwrap();
        assert!(r.passed(), "{:?}", r.nonzero());
    }

    #[test]
    fn rejects_genuinely_nonlinear() {
        assert!(matches!(
            reduction_check(&MaterialModel::linear()),
            Err(Error::Precondition(_))
        ));
    }
}
