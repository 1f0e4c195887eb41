//! Plane waves of the linearized system and the null conditions they induce.
//!
//! The direction `ω = (c, s)` stays symbolic and every residual is reduced
//! modulo `c² + s² − 1`, so a zero residual means "zero for every `ω ∈ S¹`".

use alloc::vec::Vec;

use num_traits::Zero;

use crate::material::{
    b_tensors, derived_coefficients, energy_expansion, euler_lagrange, BTensors,
    DerivedCoefficients, MaterialModel,
};
use crate::poly::jet::{self, grad, hess, Jets};
use crate::poly::{rat, Polynomial, Rational, Role, Var};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PlaneWaveKind {
    /// Polarization along `ω`.
    Pressure,
    /// Polarization along `ω⊥ = (s, −c)`.
    Shear,
    /// Free amplitude `(a1, a2)`; used for single-speed systems.
    Arbitrary,
}

/// `u = polarization · ψ(a t + ω·x)` with `a² = speed_sq`.
#[derive(Debug, Clone)]
pub struct PlaneWaveFamily {
    pub kind: PlaneWaveKind,
    pub speed_sq: Rational,
    pub polarization: [Polynomial; 2],
}

impl PlaneWaveFamily {
    pub fn pressure(speed_sq: Rational) -> Self {
        PlaneWaveFamily {
            kind: PlaneWaveKind::Pressure,
            speed_sq,
            polarization: Jets::new().omega(),
        }
    }

    pub fn shear(speed_sq: Rational) -> Self {
        PlaneWaveFamily {
            kind: PlaneWaveKind::Shear,
            speed_sq,
            polarization: Jets::new().omega_perp(),
        }
    }

    pub fn arbitrary(speed_sq: Rational) -> Self {
        let j = Jets::new();
        PlaneWaveFamily {
            kind: PlaneWaveKind::Arbitrary,
            speed_sq,
            polarization: [j.v(jet::A1), j.v(jet::A2)],
        }
    }

    /// Same family with the polarization sign flipped.
    pub fn negated(&self) -> Self {
        PlaneWaveFamily {
            polarization: [-self.polarization[0].clone(), -self.polarization[1].clone()],
            ..self.clone()
        }
    }
}

/// Substitutes `u^i_m → pol_i ω_m p` and `u^i_{mn} → pol_i ω_m ω_n p2`, then reduces on the circle.
pub fn restrict_to_plane_wave(expr: &Polynomial, fam: &PlaneWaveFamily) -> Result<Polynomial> {
    let jets = Jets::new();
    if !crate::poly::VariableSpace::same_space(expr.space(), &jets.space) {
        return Err(Error::SpaceMismatch);
    }
    let omega = jets.omega();
    let (p, p2) = (jets.v(jet::P), jets.v(jet::P2));
    let mut bindings: Vec<(Var, Polynomial)> = Vec::with_capacity(10);
    for i in 1..=2 {
        let pol = &fam.polarization[i - 1];
        for m in 1..=2 {
            bindings.push((grad(i, m), &(pol * &omega[m - 1]) * &p));
            for n in m..=2 {
                bindings.push((hess(i, m, n), &(&(pol * &omega[m - 1]) * &omega[n - 1]) * &p2));
            }
        }
    }
    Ok(expr.substitute(&bindings, &jets.space)?.reduce_circle())
}

/// Pressure and shear families of the linearized system, after checking that
/// each solves the plane-wave equation `a² φ'' = c2² φ'' + (c1² − c2²) ω (ω·φ'')`
/// through the symbolic linear operator.
pub fn classify_plane_waves(m: &MaterialModel) -> Result<[PlaneWaveFamily; 2]> {
    m.validate()?;
    let linear = euler_lagrange(m)?.linear;
    let fams = [PlaneWaveFamily::pressure(m.c1sq()), PlaneWaveFamily::shear(m.c2sq())];
    for fam in &fams {
        let residual = plane_wave_residual(&linear, fam)?;
        if residual.iter().any(|r| !r.is_zero()) {
            return Err(Error::Precondition(alloc::format!(
                "{:?} family does not solve the linearized system",
                fam.kind
            )));
        }
    }
    Ok(fams)
}

/// `L[φ] − a² φ''` restricted to the family, per component.
pub fn plane_wave_residual(linear: &[Polynomial; 2], fam: &PlaneWaveFamily) -> Result<[Polynomial; 2]> {
    let jets = Jets::new();
    let p2 = jets.v(jet::P2);
    let mut out = [jets.zero(), jets.zero()];
    for (i, slot) in out.iter_mut().enumerate() {
        let lhs = restrict_to_plane_wave(&linear[i], fam)?;
        let rhs = (&fam.polarization[i] * &p2).scale(&fam.speed_sq).reduce_circle();
        *slot = &lhs - &rhs;
    }
    Ok(out)
}

/// The three circle-reduced contractions `B6·ω⁶`, `B8·ω⁸` and `B8·(ω⊥)⁴ω⁴`.
#[derive(Debug, Clone)]
pub struct TensorResiduals {
    pub b6_omega: Polynomial,
    pub b8_omega: Polynomial,
    pub b8_perp: Polynomial,
}

impl TensorResiduals {
    pub fn first_null(&self) -> bool {
        self.b6_omega.is_zero()
    }

    pub fn second_null(&self) -> bool {
        self.b8_omega.is_zero() && self.b8_perp.is_zero()
    }
}

pub fn tensor_null_check(b: &BTensors) -> TensorResiduals {
    tensor_null_check_with(b, &Jets::new().omega_perp())
}

/// As [`tensor_null_check`] with an explicit choice of `ω⊥`.
pub fn tensor_null_check_with(b: &BTensors, perp: &[Polynomial; 2]) -> TensorResiduals {
    let w = Jets::new().omega();
    TensorResiduals {
        b6_omega: b.contract6([&w; 6]).reduce_circle(),
        b8_omega: b.contract8([&w; 8]).reduce_circle(),
        b8_perp: b
            .contract8([perp, &w, perp, &w, perp, &w, perp, &w])
            .reduce_circle(),
    }
}

/// Outcome of each decision procedure; the restriction flags are authoritative.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NullFlags {
    pub first: bool,
    pub second: bool,
}

#[derive(Debug, Clone)]
pub struct NullReport {
    pub first_null: bool,
    pub second_null: bool,
    /// `l3` on pressure and shear waves.
    pub l3_pressure: Polynomial,
    pub l3_shear: Polynomial,
    /// `l4` on pressure and shear waves.
    pub l4_pressure: Polynomial,
    pub l4_shear: Polynomial,
    pub coefficients: DerivedCoefficients,
    /// Whether the restrictions equal `d1 p³, 0, e1 p⁴, e2 p⁴`.
    pub closed_forms_hold: bool,
    pub restriction: NullFlags,
    pub sigma: NullFlags,
    pub tensor: NullFlags,
    pub tensor_residuals: TensorResiduals,
}

impl NullReport {
    pub fn procedures_agree(&self) -> bool {
        self.restriction == self.sigma && self.restriction == self.tensor
    }
}

pub fn null_conditions(m: &MaterialModel) -> Result<NullReport> {
    let [pressure, shear] = classify_plane_waves(m)?;
    let energy = energy_expansion(m);
    let k = derived_coefficients(m)?;
    let l3_pressure = restrict_to_plane_wave(&energy.l3, &pressure)?;
    let l3_shear = restrict_to_plane_wave(&energy.l3, &shear)?;
    let l4_pressure = restrict_to_plane_wave(&energy.l4, &pressure)?;
    let l4_shear = restrict_to_plane_wave(&energy.l4, &shear)?;

    let jets = Jets::new();
    let p = jets.v(jet::P);
    let closed_forms_hold = l3_pressure == p.pow(3).scale(&k.d1)
        && l3_shear.is_zero()
        && l4_pressure == p.pow(4).scale(&k.e1)
        && l4_shear == p.pow(4).scale(&k.e2);

    let restriction = NullFlags {
        first: l3_pressure.is_zero() && l3_shear.is_zero(),
        second: l4_pressure.is_zero() && l4_shear.is_zero(),
    };
    let [c1, c2, c3] = sigma_condition_values(m);
    let sigma = NullFlags {
        first: c1.is_zero(),
        second: c2.is_zero() && c3.is_zero(),
    };
    let tensor_residuals = tensor_null_check(&b_tensors(&energy));
    let tensor = NullFlags {
        first: tensor_residuals.first_null(),
        second: tensor_residuals.second_null(),
    };
    Ok(NullReport {
        first_null: restriction.first,
        second_null: restriction.second,
        l3_pressure,
        l3_shear,
        l4_pressure,
        l4_shear,
        coefficients: k,
        closed_forms_hold,
        restriction,
        sigma,
        tensor,
        tensor_residuals,
    })
}

/// Largest power of `p` dividing every term; used to check profile scaling.
pub fn profile_degree(p: &Polynomial) -> Option<u16> {
    let v = p.space().with_role(Role::Profile).next()?;
    p.terms().map(|(m, _)| m.exponent(v)).min()
}

/// `p → λ p` applied to a restricted residual.
pub fn scale_profile(p: &Polynomial, lambda: &Rational) -> Result<Polynomial> {
    let jets = Jets::new();
    p.substitute(&[(jet::P, jets.v(jet::P).scale(lambda))], &jets.space)
}

/// `3σ11 + 2σ111`, `3σ11 + 12σ111 + 4σ1111` and `σ11 − 2σ12 + σ22`.
pub fn sigma_condition_values(m: &MaterialModel) -> [Rational; 3] {
    [
        &m.sigma11 * rat(3, 1) + &m.sigma111 * rat(2, 1),
        &m.sigma11 * rat(3, 1) + &m.sigma111 * rat(12, 1) + &m.sigma1111 * rat(4, 1),
        &m.sigma11 - &m.sigma12 * rat(2, 1) + &m.sigma22,
    ]
}
