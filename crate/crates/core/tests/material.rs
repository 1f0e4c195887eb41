mod common;

use elastowave_core::material::{
    audit, audit_generic, b_tensors, derived_coefficients, energy_expansion, euler_lagrange,
    expand_field, field_form, generic_gradient, identity_battery, linear_display, n2_display,
    n3_display, principal_invariants, strain_tensor, L4Sign, Matrix2Poly, SymbolicRHS,
};
use elastowave_core::poly::jet::{self, grad, hess, Jets};
use elastowave_core::poly::{rat, solve_particular, Monomial, Polynomial, Rational};
use elastowave_core::MaterialModel;
use num_traits::{Signed, Zero};

fn sample_materials() -> Vec<MaterialModel> {
    let mut r = common::rng(7);
    let mut out = vec![
        MaterialModel::linear(),
        MaterialModel::null_example(),
        MaterialModel::genuinely_nonlinear_example(),
    ];
    out.extend((0..5).map(|_| common::random_material(&mut r)));
    out
}

#[test]
fn identity_battery_holds() {
    let battery = identity_battery();
    assert_eq!(battery.len(), 20);
    for check in battery {
        assert!(check.holds, "{}", check.name);
    }
}

#[test]
fn strain_examples() {
    let j = Jets::new();
    let z = j.zero();
    let g = j.g(1, 1);
    let diag = Matrix2Poly([[g.clone(), z.clone()], [z.clone(), z.clone()]]);
    let c = strain_tensor(&diag);
    assert_eq!(c.get(0, 0), &(&g.scale(&rat(2, 1)) + &g.pow(2)));
    assert!(c.get(0, 1).is_zero() && c.get(1, 0).is_zero() && c.get(1, 1).is_zero());

    let w = j.g(1, 2);
    let rot = Matrix2Poly([[z.clone(), w.clone()], [-w.clone(), z.clone()]]);
    let c = strain_tensor(&rot);
    assert_eq!(c.get(0, 0), &w.pow(2));
    assert_eq!(c.get(1, 1), &w.pow(2));
    assert!(c.get(0, 1).is_zero());

    let full = generic_gradient(&j);
    let (k1, _) = principal_invariants(&strain_tensor(&full));
    let squares = (1..=2)
        .flat_map(|i| (1..=2).map(move |m| (i, m)))
        .fold(j.zero(), |acc, (i, m)| &acc + &j.g(i, m).pow(2));
    assert_eq!(k1, &j.divergence().scale(&rat(2, 1)) + &squares);
}

#[test]
fn single_coefficient_energy() {
    let mut m = MaterialModel::zero();
    m.sigma11 = rat(1, 1);
    let e = energy_expansion(&m);
    assert_eq!(e.l2, Jets::new().divergence().pow(2).scale(&rat(2, 1)));
}

#[test]
fn energy_parts_are_homogeneous() {
    for m in sample_materials() {
        let e = energy_expansion(&m);
        for (deg, part) in (2u32..).zip(e.parts()) {
            assert_eq!(&part.homogeneous_part(deg), part);
        }
    }
}

/// `l(R G Rᵀ) = l(G)` for the symbolic rotation `R = [[c, −s], [s, c]]`.
#[test]
fn energy_is_isotropic() {
    let j = Jets::new();
    let (c, s) = (j.v(jet::C), j.v(jet::S));
    let rot = Matrix2Poly([[c.clone(), -s.clone()], [s.clone(), c.clone()]]);
    let g = generic_gradient(&j);
    let rotated = rot.mul(&g).mul(&rot.transpose());
    let bindings: Vec<_> = (1..=2)
        .flat_map(|i| (1..=2).map(move |m| (i, m)))
        .map(|(i, m)| (grad(i, m), rotated.get(i - 1, m - 1).clone()))
        .collect();
    for m in sample_materials() {
        for part in energy_expansion(&m).parts() {
            let turned = part.substitute(&bindings, &j.space).unwrap().reduce_circle();
            assert_eq!(&turned, part);
        }
    }
}

#[test]
fn field_form_round_trip() {
    let j = Jets::new();
    for m in sample_materials() {
        let e = energy_expansion(&m);
        let f = field_form(&e).unwrap();
        for (field, jet_form) in f.parts().into_iter().zip(e.parts()) {
            assert_eq!(&expand_field(field, &j), jet_form);
        }
    }
}

#[test]
fn quadratic_energy_field_form_and_positivity() {
    let fs = jet::field_space();
    for m in sample_materials() {
        let f = field_form(&energy_expansion(&m)).unwrap();
        let (d, r, q) = (
            Polynomial::var(&fs, jet::D),
            Polynomial::var(&fs, jet::R),
            Polynomial::var(&fs, jet::Q),
        );
        let want = &(&d.pow(2).scale(&(&m.sigma11 * rat(2, 1))) - &r.pow(2).scale(&m.sigma2))
            + &q.scale(&(&m.sigma2 * rat(4, 1)));
        assert_eq!(f.l2, want);
        assert!(f.l2.coefficient(&[(jet::D, 2)]).is_positive());
        assert!(f.l2.coefficient(&[(jet::R, 2)]).is_positive());
    }
}

#[test]
fn coefficient_examples() {
    let mut m = MaterialModel::linear();
    m.sigma111 = rat(-3, 2);
    assert!(derived_coefficients(&m).unwrap().d1.is_zero());
    let k = derived_coefficients(&MaterialModel::linear()).unwrap();
    assert_eq!((k.c1sq, k.c2sq, k.d1), (rat(4, 1), rat(2, 1), rat(2, 1)));
    let zero = derived_coefficients(&MaterialModel::zero()).unwrap();
    assert!(zero.values().iter().all(|v| v.is_zero()));
}

#[test]
fn printed_formulas_agree_for_every_material() {
    let a = audit_generic().unwrap();
    assert!(a.coefficient_mismatches().is_empty(), "{:?}", a.coefficient_mismatches());
    assert!(a.l2_matches && a.l3_matches);
    assert_eq!(a.l4_sign(), Some(L4Sign::Plus));
    for m in sample_materials() {
        let r = audit(&m).unwrap();
        assert_eq!(r.mismatches().count(), 0);
        assert!(r.l4_plus_matches);
    }
}

#[test]
fn euler_lagrange_matches_displays() {
    for m in sample_materials() {
        let rhs = euler_lagrange(&m).unwrap();
        let k = derived_coefficients(&m).unwrap();
        assert!(rhs.is_complete());
        assert_eq!(rhs.linear, linear_display(&k.c1sq, &k.c2sq));
        assert_eq!(rhs.quadratic, n2_display(&k).unwrap());
        assert_eq!(rhs.cubic, n3_display(&k).unwrap());
    }
}

#[test]
fn b_tensors_reconstruct_nonlinearities() {
    for m in sample_materials() {
        let e = energy_expansion(&m);
        let b = b_tensors(&e);
        let rhs = euler_lagrange(&m).unwrap();
        assert_eq!(b.symmetry_violations(), 0);
        assert_eq!(b.n2(), rhs.quadratic);
        assert_eq!(b.n3(), rhs.cubic);
    }
    let z = b_tensors(&energy_expansion(&MaterialModel::zero()));
    assert!(z.is_zero());
}

#[test]
fn quadratic_lagrangian_gives_linear_rhs() {
    let e = energy_expansion(&MaterialModel::linear());
    let rhs = SymbolicRHS::from_full(elastowave_core::material::euler_lagrange_of(&e.l2).unwrap());
    assert!(rhs.quadratic.iter().chain(&rhs.cubic).all(Polynomial::is_zero));
}

/// Every monomial of degree `deg` in the four gradient entries.
fn gradient_monomials(deg: u16) -> Vec<[u16; 4]> {
    let mut out = vec![];
    for a in 0..=deg {
        for b in 0..=deg - a {
            for c in 0..=deg - a - b {
                out.push([a, b, c, deg - a - b - c]);
            }
        }
    }
    out
}

/// Solves `part = ∂1 F1 + ∂2 F2` for polynomial fluxes without reference to
/// the energy, so each degree of the right-hand side is shown to be a
/// divergence independently of how it was produced.
fn extract_flux(part: &Polynomial, deg: u16) -> Option<[Polynomial; 2]> {
    let j = Jets::new();
    let basis: Vec<Polynomial> = gradient_monomials(deg)
        .into_iter()
        .map(|e| {
            let mut exps = vec![0u16; j.space.len()];
            exps[..4].copy_from_slice(&e);
            Polynomial::term(&j.space, rat(1, 1), Monomial::from_exponents(&exps))
        })
        .collect();
    let mut images = vec![];
    for l in 1..=2 {
        for b in &basis {
            images.push(elastowave_core::material::total_derivative(b, l).unwrap());
        }
    }
    let mut rows: Vec<Monomial> = images
        .iter()
        .chain(std::iter::once(part))
        .flat_map(|p| p.terms().map(|(m, _)| m.clone()).collect::<Vec<_>>())
        .collect();
    rows.sort();
    rows.dedup();
    let coef = |p: &Polynomial, m: &Monomial| -> Rational {
        p.terms()
            .find(|(mm, _)| *mm == m)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Rational::zero)
    };
    let a: Vec<Vec<Rational>> = rows
        .iter()
        .map(|m| images.iter().map(|img| coef(img, m)).collect())
        .collect();
    let rhs: Vec<Rational> = rows.iter().map(|m| coef(part, m)).collect();
    let x = solve_particular(a, rhs)?;
    let n = basis.len();
    let build = |off: usize| {
        basis
            .iter()
            .zip(&x[off..off + n])
            .fold(j.zero(), |acc, (b, c)| &acc + &b.scale(c))
    };
    Some([build(0), build(n)])
}

#[test]
fn every_part_is_a_divergence() {
    for m in sample_materials().into_iter().take(4) {
        let rhs = euler_lagrange(&m).unwrap();
        for (deg, parts) in [(1u16, &rhs.linear), (2, &rhs.quadratic), (3, &rhs.cubic)] {
            for part in parts.iter() {
                let [f1, f2] = extract_flux(part, deg).expect("flux exists");
                let rebuilt = &elastowave_core::material::total_derivative(&f1, 1).unwrap()
                    + &elastowave_core::material::total_derivative(&f2, 2).unwrap();
                assert_eq!(&rebuilt, part);
            }
        }
    }
    // A non-divergence is rejected: u1_11 * G11 has no flux of degree 2.
    let j = Jets::new();
    let bogus = &j.v(hess(1, 1, 1)) * &j.g(2, 2);
    assert!(extract_flux(&bogus, 2).is_none());
}
