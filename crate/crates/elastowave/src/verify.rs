//! The `verify` battery: exact symbolic checks plus fast numeric
//! cross-checks between the solver and the symbolic system.

use std::f64::consts::PI;

use elastowave_core::material::{
    audit_generic, b_tensors, derived_coefficients, energy_expansion, euler_lagrange,
    identity_battery, linear_display, n2_display, n3_display, L4Sign,
};
use elastowave_core::nullcond::null_conditions;
use elastowave_core::poly::{jet, rat};
use elastowave_core::reduction::reduction_check;
use elastowave_core::MaterialModel;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::Serialize;

use crate::error::SimError;
use crate::lab::{DataSpec, Mode, Polarization};
use crate::sim::{full_rhs, hodge_laplacian, laplacian, run, Grid, NumericMaterial, SimConfig, VectorField};

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

fn check(name: &str, passed: bool, detail: impl Into<String>) -> Check {
    Check {
        name: name.into(),
        passed,
        detail: detail.into(),
    }
}

fn small_rational(r: &mut StdRng) -> elastowave_core::Rational {
    rat(r.gen_range(-12..=12), r.gen_range(1..=6))
}

/// A random valid material; each null condition is imposed with probability
/// one half so both outcomes of every flag occur.
pub fn random_material(r: &mut StdRng) -> MaterialModel {
    let sigma11 = rat(r.gen_range(1..=12), r.gen_range(1..=4));
    let sigma2 = -(&sigma11 * rat(2 * r.gen_range(1..=9), 10));
    let mut m = MaterialModel::unchecked([
        sigma2,
        sigma11.clone(),
        small_rational(r),
        small_rational(r),
        small_rational(r),
        small_rational(r),
        small_rational(r),
    ]);
    if r.gen_bool(0.5) {
        m.sigma111 = &sigma11 * rat(-3, 2);
    }
    if r.gen_bool(0.5) {
        m.sigma1111 = -(&sigma11 * rat(3, 1) + &m.sigma111 * rat(12, 1)) / rat(4, 1);
    }
    if r.gen_bool(0.5) {
        m.sigma22 = &m.sigma12 * rat(2, 1) - &sigma11;
    }
    m
}

/// A smooth periodic test field on `[−π, π)²` with its exact first and
/// second derivatives.
pub struct SmoothField {
    modes: Vec<Mode>,
}

impl Default for SmoothField {
    fn default() -> Self {
        let mode = |component, kx, ky, amplitude, phase| Mode {
            component,
            kx,
            ky,
            amplitude,
            phase,
        };
        SmoothField {
            modes: vec![
                mode(0, 1, 0, 0.12, 0.3),
                mode(0, 1, 2, 0.05, 1.1),
                mode(1, 0, 1, 0.10, -0.4),
                mode(1, 2, -1, 0.04, 2.0),
                mode(0, -1, 1, 0.06, 0.7),
            ],
        }
    }
}

impl SmoothField {
    pub const L: f64 = 2.0 * PI;

    pub fn sample(&self, g: &Grid) -> VectorField {
        crate::lab::data::modes_field(&self.modes, g)
    }

    /// Jet values `[G11 G12 G21 G22 u1_11 u1_12 u1_22 u2_11 u2_12 u2_22]` at `(x, y)`.
    pub fn jets(&self, x: f64, y: f64) -> [f64; 10] {
        let mut out = [0.0; 10];
        for m in &self.modes {
            let (kx, ky) = (m.kx as f64, m.ky as f64);
            let arg = kx * x + ky * y + m.phase;
            let (s, c) = arg.sin_cos();
            let a = m.amplitude;
            let i = m.component;
            out[2 * i] += a * kx * c;
            out[2 * i + 1] += a * ky * c;
            out[4 + 3 * i] -= a * kx * kx * s;
            out[5 + 3 * i] -= a * kx * ky * s;
            out[6 + 3 * i] -= a * ky * ky * s;
        }
        out
    }
}

/// `max |full_rhs − EL(jets)|` for the smooth test field at resolution `n`.
pub fn rhs_cross_check(model: &MaterialModel, n: usize) -> Result<f64, SimError> {
    let g = Grid::new(n, SmoothField::L)?;
    let field = SmoothField::default();
    let numeric = full_rhs(&field.sample(&g), &g, &NumericMaterial::from_model(model)?);
    let symbolic = euler_lagrange(model)?.full;
    let mut vals = vec![0.0; jet::space().len()];
    let mut err: f64 = 0.0;
    for j in 0..n {
        for i in 0..n {
            vals[..10].copy_from_slice(&field.jets(g.coord(i), g.coord(j)));
            let k = g.idx(i, j);
            for c in 0..2 {
                err = err.max((symbolic[c].eval_f64(&vals) - numeric.comp[c][k]).abs());
            }
        }
    }
    Ok(err)
}

/// Runs the full battery. Only malformed internal inputs produce an error;
/// failed checks are reported through [`Check::passed`].
pub fn run_battery() -> Result<Vec<Check>, SimError> {
    let mut out = vec![];

    let ids = identity_battery();
    let failed: Vec<_> = ids.iter().filter(|c| !c.holds).map(|c| c.name).collect();
    out.push(check(
        "strain identities",
        failed.is_empty(),
        format!("{} identities, failing: {failed:?}", ids.len()),
    ));

    let audit = audit_generic()?;
    let mism = audit.coefficient_mismatches();
    out.push(check(
        "printed coefficient formulas",
        mism.is_empty() && audit.l4_sign() == Some(L4Sign::Plus),
        format!("mismatches: {mism:?}, quartic sign: {:?}", audit.l4_sign()),
    ));

    let mut r = StdRng::seed_from_u64(7);
    let mut materials = vec![
        MaterialModel::linear(),
        MaterialModel::null_example(),
        MaterialModel::genuinely_nonlinear_example(),
    ];
    materials.extend((0..5).map(|_| random_material(&mut r)));
    let mut el_ok = true;
    let mut b_ok = true;
    for m in &materials {
        let k = derived_coefficients(m)?;
        let rhs = euler_lagrange(m)?;
        el_ok &= rhs.linear == linear_display(&k.c1sq, &k.c2sq)
            && rhs.quadratic == n2_display(&k)?
            && rhs.cubic == n3_display(&k)?;
        let b = b_tensors(&energy_expansion(m));
        b_ok &= b.n2() == rhs.quadratic && b.n3() == rhs.cubic && b.symmetry_violations() == 0;
    }
    out.push(check("Euler-Lagrange matches displayed system", el_ok, format!("{} materials", materials.len())));
    out.push(check("B tensors reconstruct and are symmetric", b_ok, format!("{} materials", materials.len())));

    let mut agree = 0;
    let mut shear_zero = true;
    let mut seen = [[false; 2]; 2];
    let trials = 30;
    for _ in 0..trials {
        let m = random_material(&mut r);
        let rep = null_conditions(&m)?;
        agree += usize::from(rep.procedures_agree() && rep.closed_forms_hold);
        shear_zero &= rep.l3_shear.is_zero();
        seen[0][usize::from(rep.first_null)] = true;
        seen[1][usize::from(rep.second_null)] = true;
    }
    out.push(check(
        "null-condition procedures agree",
        agree == trials && shear_zero && seen.iter().flatten().all(|&b| b),
        format!("{agree}/{trials} agree, shear cubic vanishes: {shear_zero}"),
    ));

    let mut e2_case = MaterialModel::null_example();
    e2_case.sigma22 = rat(3, 1);
    let mut red_ok = true;
    for m in [MaterialModel::null_example(), e2_case] {
        red_ok &= reduction_check(&m)?.passed();
    }
    out.push(check("radial reduction is exact", red_ok, "null example and an e2 != 0 variant"));

    let gn = MaterialModel::genuinely_nonlinear_example();
    let (coarse, fine) = (rhs_cross_check(&gn, 32)?, rhs_cross_check(&gn, 64)?);
    let order = (coarse / fine).log2();
    out.push(check(
        "discrete right-hand side matches symbolic system",
        order >= 3.5,
        format!("errors {coarse:.2e} -> {fine:.2e}, order {order:.2}"),
    ));

    let g = Grid::new(64, SmoothField::L)?;
    let u = SmoothField::default().sample(&g);
    let hodge = laplacian(&u, &g).max_diff(&hodge_laplacian(&u, &g));
    out.push(check("discrete Hodge identity", hodge <= 1e-12, format!("residual {hodge:.2e}")));

    let data = DataSpec::Pulse {
        eps: 0.05,
        polarization: Polarization::Pressure,
        center: 0.0,
        width: 2.0,
        exponent: 6,
    };
    let cfg = SimConfig::new(Grid::new(32, 8.0)?, NumericMaterial::from_model(&gn)?, data, 1.0);
    let rep = run(&cfg)?;
    let drift = rep.momentum_drift();
    out.push(check("momentum conservation", drift <= 1e-12, format!("drift {drift:.2e}")));

    Ok(out)
}
