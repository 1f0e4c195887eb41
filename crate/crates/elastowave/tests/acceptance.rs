//! Acceptance suite: one test per criterion, each printing a single
//! `criterion N: PASS|FAIL` line straight to stderr so it shows up even when
//! the harness captures output.

use std::io::Write;
use std::time::Instant;

use elastowave::lab::{
    convergence_study, curl_monitor, lifespan_sweep, reduction_study, speed_test, Bump, DataSpec,
    LabelledMaterial, Polarization, RadialMode, RadialProfile, SweepSpec,
};
use elastowave::sim::{hodge_laplacian, laplacian, run, Grid, NumericMaterial, SimConfig, TimeStep, VectorField};
use elastowave::verify::random_material;
use elastowave_core::material::{
    audit, audit_generic, b_tensors, derived_coefficients, energy_expansion, euler_lagrange,
    identity_battery, linear_display, n2_display, n3_display, L4Sign,
};
use elastowave_core::nullcond::null_conditions;
use elastowave_core::poly::rat;
use elastowave_core::reduction::reduction_check;
use elastowave_core::{MaterialModel, Rational};
use num_traits::{ToPrimitive, Zero};
use rand::rngs::StdRng;
use rand::SeedableRng;

fn verdict(n: u32, passed: bool, detail: &str) {
    let line = format!(
        "criterion {n}: {} {detail}\n",
        if passed { "PASS" } else { "FAIL" }
    );
    let _ = std::io::stderr().write_all(line.as_bytes());
    assert!(passed, "criterion {n} failed: {detail}");
}

fn null_material() -> NumericMaterial {
    NumericMaterial::from_model(&MaterialModel::null_example()).unwrap()
}

fn nonlinear_material() -> NumericMaterial {
    NumericMaterial::from_model(&MaterialModel::genuinely_nonlinear_example()).unwrap()
}

fn radial(eps: f64, width: f64, exponent: u32) -> RadialProfile {
    RadialProfile {
        eps,
        displacement: Bump {
            r0: 0.0,
            width,
            exponent,
            amplitude: 1.0,
        },
        velocity: None,
        mode: RadialMode::Potential,
        outgoing: false,
    }
}

#[test]
fn criterion_1_identity_battery() {
    let start = Instant::now();
    let checks = identity_battery();
    let secs = start.elapsed().as_secs_f64();
    let failing: Vec<_> = checks.iter().filter(|c| !c.holds).map(|c| c.name).collect();
    verdict(
        1,
        failing.is_empty() && checks.len() >= 11 && secs < 5.0,
        &format!("{} identities exact in {secs:.2} s, failing {failing:?}", checks.len()),
    );
}

#[test]
fn criterion_2_printed_formula_audit() {
    let generic = audit_generic().unwrap();
    let mismatches = generic.coefficient_mismatches();
    let mut per_material = true;
    for m in [
        MaterialModel::linear(),
        MaterialModel::null_example(),
        MaterialModel::genuinely_nonlinear_example(),
    ] {
        let a = audit(&m).unwrap();
        per_material &= a.mismatches().count() == 0 && a.l4_plus_matches;
    }
    verdict(
        2,
        mismatches.is_empty() && generic.l4_sign() == Some(L4Sign::Plus) && per_material,
        &format!(
            "d1-d3, e1-e6 agree with the expansion; mismatches {mismatches:?}; quartic sign {:?}",
            generic.l4_sign()
        ),
    );
}

#[test]
fn criterion_3_euler_lagrange_consistency() {
    let mut r = StdRng::seed_from_u64(3);
    let mut materials = vec![MaterialModel::null_example(), MaterialModel::genuinely_nonlinear_example()];
    materials.extend((0..6).map(|_| random_material(&mut r)));
    let mut ok = true;
    for m in &materials {
        let k = derived_coefficients(m).unwrap();
        let rhs = euler_lagrange(m).unwrap();
        let b = b_tensors(&energy_expansion(m));
        ok &= rhs.linear == linear_display(&k.c1sq, &k.c2sq)
            && rhs.quadratic == n2_display(&k).unwrap()
            && rhs.cubic == n3_display(&k).unwrap()
            && b.n2() == rhs.quadratic
            && b.n3() == rhs.cubic
            && b.symmetry_violations() == 0;
    }
    verdict(
        3,
        ok,
        &format!("{} materials: linear/N2/N3 equal the displays, B reconstructs, B symmetric", materials.len()),
    );
}

/// The three σ-polynomial conditions evaluated directly.
fn sigma_flags(m: &MaterialModel) -> (bool, bool) {
    let three = rat(3, 1);
    let first = &three * &m.sigma11 + rat(2, 1) * &m.sigma111;
    let second_a = &three * &m.sigma11 + rat(12, 1) * &m.sigma111 + rat(4, 1) * &m.sigma1111;
    let second_b: Rational = &m.sigma11 - rat(2, 1) * &m.sigma12 + &m.sigma22;
    (first.is_zero(), second_a.is_zero() && second_b.is_zero())
}

#[test]
fn criterion_4_null_condition_triple_agreement() {
    let mut r = StdRng::seed_from_u64(4);
    let mut agree = 0;
    let mut shear_zero = true;
    let mut outcomes = [[0usize; 2]; 2];
    for _ in 0..100 {
        let m = random_material(&mut r);
        let rep = null_conditions(&m).unwrap();
        let (first, second) = sigma_flags(&m);
        let same = rep.restriction.first == first
            && rep.tensor.first == first
            && rep.sigma.first == first
            && rep.restriction.second == second
            && rep.tensor.second == second
            && rep.sigma.second == second
            && rep.first_null == first
            && rep.second_null == second;
        agree += usize::from(same);
        shear_zero &= rep.l3_shear.is_zero();
        outcomes[0][usize::from(first)] += 1;
        outcomes[1][usize::from(second)] += 1;
    }
    let both_outcomes = outcomes.iter().flatten().all(|&c| c > 0);
    verdict(
        4,
        agree == 100 && shear_zero && both_outcomes,
        &format!("{agree}/100 agree; shear cubic zero for all; flag counts {outcomes:?}"),
    );
}

#[test]
fn criterion_5_radial_reduction() {
    let start = Instant::now();
    let mut r = StdRng::seed_from_u64(5);
    let mut symbolic = true;
    for _ in 0..10 {
        let mut m = random_material(&mut r);
        m.sigma111 = &m.sigma11 * rat(-3, 2);
        m.sigma1111 = -(&m.sigma11 * rat(3, 1) + &m.sigma111 * rat(12, 1)) / rat(4, 1);
        symbolic &= reduction_check(&m).unwrap().passed();
    }
    let mut e2_case = MaterialModel::null_example();
    e2_case.sigma22 = rat(3, 1);
    let e2 = derived_coefficients(&e2_case).unwrap().e2;
    let e2_report = reduction_check(&e2_case).unwrap();
    let e2_ok = !e2.is_zero() && e2_report.exact() && e2_report.e2_vanishes();

    let mut profile = radial(0.1, 4.0, 8);
    profile.mode = RadialMode::Pointwise;
    let study = reduction_study(&null_material(), &profile, 16.0, &[64, 128, 256, 512]).unwrap();
    let order = study.min_order();
    let secs = start.elapsed().as_secs_f64();
    verdict(
        5,
        symbolic && e2_ok && order >= 3.5 && secs < 300.0,
        &format!(
            "symbolic residual zero (incl. e2 = {e2}); numeric residuals {:.2e} -> {:.2e}, min order {order:.2}; {secs:.1} s",
            study.residual[0],
            study.residual[study.residual.len() - 1]
        ),
    );
}

#[test]
fn criterion_6_discrete_structure() {
    // Hodge identity Δ = ∇∇· − ∇⊥∇⊥· on a generic field.
    let g = Grid::new(64, 10.0).unwrap();
    let u = VectorField::sample(&g, |x, y| {
        [(0.7 * x).sin() * (1.3 * y).cos() + 0.2 * x.cos(), (x + 2.0 * y).sin() * 0.5]
    });
    let hodge = laplacian(&u, &g).max_diff(&hodge_laplacian(&u, &g)) / laplacian(&u, &g).max_abs();

    // Energy drift at the contracted operating point.
    let cfg = SimConfig::new(
        Grid::new(256, 168.0).unwrap(),
        null_material(),
        DataSpec::Radial(radial(0.01, 40.0, 6)),
        10.0,
    );
    assert_eq!(cfg.step, TimeStep::Cfl(0.5));
    let rep = run(&cfg).unwrap();
    let energy = rep.energy_drift();

    // Momentum over a spread of runs: both materials, pulse, multi-mode and radial
    // data, and one run cut short by the steepening rule.
    let mut momentum: f64 = rep.momentum_drift();
    let pulse = DataSpec::Pulse {
        eps: 0.2,
        polarization: Polarization::Pressure,
        center: 0.0,
        width: 3.0,
        exponent: 4,
    };
    let modes = DataSpec::Modes {
        displacement: vec![
            elastowave::lab::Mode { component: 0, kx: 1, ky: 2, amplitude: 0.03, phase: 0.1 },
            elastowave::lab::Mode { component: 1, kx: -3, ky: 1, amplitude: 0.02, phase: 0.0 },
        ],
        velocity: vec![elastowave::lab::Mode { component: 0, kx: 0, ky: 1, amplitude: 0.1, phase: 0.5 }],
    };
    for (m, data) in [
        (nonlinear_material(), pulse.clone()),
        (null_material(), pulse),
        (nonlinear_material(), modes.clone()),
        (null_material(), modes),
        (nonlinear_material(), DataSpec::Radial(radial(0.3, 3.0, 4))),
    ] {
        let mut c = SimConfig::new(Grid::new(64, 12.0).unwrap(), m, data, 3.0);
        c.sample_every = 1;
        c.steepening = Some(4.0);
        momentum = momentum.max(run(&c).unwrap().momentum_drift());
    }
    verdict(
        6,
        hodge <= 1e-13 && momentum <= 1e-12 && energy <= 1e-6,
        &format!("Hodge residual {hodge:.1e}; momentum drift {momentum:.1e}; energy drift {energy:.2e} (T = 10, N = 256, CFL 0.5, eps 0.01)"),
    );
}

#[test]
fn criterion_7_linear_physics() {
    let model = MaterialModel::null_example();
    let c1 = (rat(4, 1) * &model.sigma11).to_f64().unwrap().sqrt();
    let c2 = (rat(-2, 1) * &model.sigma2).to_f64().unwrap().sqrt();
    let m = null_material();
    let grid = Grid::new(256, 64.0).unwrap();
    let p = speed_test(&m, Polarization::Pressure, grid, 4.0, 0.01).unwrap();
    let s = speed_test(&m, Polarization::Shear, grid, 4.0, 0.01).unwrap();
    let ep = (p.measured - c1).abs() / c1;
    let es = (s.measured - c2).abs() / c2;

    let mut orders = vec![];
    for mat in [nonlinear_material(), null_material()] {
        let cfg = SimConfig::new(Grid::new(128, 32.0).unwrap(), mat, DataSpec::Radial(radial(0.1, 8.0, 8)), 2.0);
        orders.push(convergence_study(&cfg, 3).unwrap().min_order());
    }
    let order = orders.iter().copied().fold(f64::INFINITY, f64::min);
    verdict(
        7,
        ep <= 0.01 && es <= 0.01 && order >= 3.5,
        &format!(
            "pressure {:.4} vs {c1:.4} ({:.2}%), shear {:.4} vs {c2:.4} ({:.2}%); nonlinear self-convergence orders {orders:.2?}",
            p.measured,
            100.0 * ep,
            s.measured,
            100.0 * es
        ),
    );
}

#[test]
fn criterion_8_lifespan_dichotomy() {
    let start = Instant::now();
    let spec = SweepSpec {
        eps: vec![0.0, 0.01, 0.015, 0.02, 0.03],
        null: LabelledMaterial { label: "null".into(), material: null_material() },
        nonlinear: LabelledMaterial { label: "nonlinear".into(), material: nonlinear_material() },
        grid: Grid::new(512, 128.0).unwrap(),
        step: TimeStep::Cfl(0.5),
        end_time: 20.0,
        profile: RadialProfile {
            eps: 0.0,
            displacement: Bump { r0: 16.0, width: 6.0, exponent: 8, amplitude: 1.0 },
            velocity: None,
            mode: RadialMode::Potential,
            outgoing: true,
        },
        theta: None,
        sample_every: 5,
        steepening: Some(4.0),
    };
    let res = lifespan_sweep(&spec).unwrap();
    let secs = start.elapsed().as_secs_f64();
    let wrap = (0.5 * 128.0 - 22.0) / 2.0;
    let mut dichotomy = true;
    let mut table = String::new();
    for &eps in &spec.eps {
        let n = res.cell(eps, "null").unwrap();
        let g = res.cell(eps, "nonlinear").unwrap();
        table.push_str(&format!(
            " eps={eps}: nonlinear {}, null {}",
            if g.completed { "done".into() } else { format!("t*={:.2}", g.lifespan) },
            if n.completed { "done".into() } else { format!("t*={:.2}", n.lifespan) }
        ));
        if eps == 0.0 {
            dichotomy &= n.completed && g.completed;
        } else {
            dichotomy &= !g.completed && n.lifespan >= 1.5 * g.lifespan;
        }
    }
    let gradient_rule_fired = res
        .cells
        .iter()
        .any(|c| matches!(c.termination, elastowave::sim::Termination::Blowup { .. }));
    verdict(
        8,
        dichotomy && res.ordering_holds && res.monotone && secs <= 1800.0 && wrap > spec.end_time,
        &format!(
            "N = 512, budget 20 < wrap {wrap:.0};{table}; monotone {}; gradient rule fired: {gradient_rule_fired}; {secs:.0} s",
            res.monotone
        ),
    );
}

#[test]
fn criterion_9_radial_curl_preservation() {
    let mut cfg = SimConfig::new(
        Grid::new(256, 168.0).unwrap(),
        null_material(),
        DataSpec::Radial(radial(0.01, 40.0, 6)),
        20.0,
    );
    cfg.sample_every = 1;
    assert!(cfg.wrap_time().unwrap() >= 20.0);
    let radial_run = curl_monitor(&run(&cfg).unwrap(), 1e-6, 1e-12);

    let mut neg = cfg.clone();
    neg.data = DataSpec::Swirl { eps: 0.01, bump: Bump { r0: 0.0, width: 40.0, exponent: 6, amplitude: 1.0 } };
    neg.end_time = 1.0;
    let control = curl_monitor(&run(&neg).unwrap(), 1e-6, 1e-12);
    verdict(
        9,
        radial_run.passed && !control.passed && control.max_ratio > 0.1,
        &format!(
            "radial max curl ratio {:.2e} (t = {:.2}) to T = 20 at N = 256; swirl control ratio {:.2}",
            radial_run.max_ratio, radial_run.worst_time, control.max_ratio
        ),
    );
}
