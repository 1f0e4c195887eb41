use elastowave::lab::{
    curl_monitor, initial_state, lifespan_sweep, radial_data, reduction_check, reduction_study,
    Bump, DataSpec, LabelledMaterial, RadialMode, RadialProfile, SweepSpec,
};
use elastowave::sim::{run, Grid, NumericMaterial, SimConfig, TimeStep};
use elastowave_core::MaterialModel;

fn null() -> NumericMaterial {
    NumericMaterial::from_model(&MaterialModel::null_example()).unwrap()
}

fn profile(eps: f64, mode: RadialMode) -> RadialProfile {
    RadialProfile {
        eps,
        displacement: Bump { r0: 0.0, width: 3.0, exponent: 6, amplitude: 1.0 },
        velocity: Some(Bump { r0: 0.0, width: 2.0, exponent: 6, amplitude: 0.5 }),
        mode,
        outgoing: false,
    }
}

#[test]
fn zero_amplitude_gives_zero_fields() {
    let g = Grid::new(32, 10.0).unwrap();
    for mode in [RadialMode::Potential, RadialMode::Pointwise] {
        let (u, v) = radial_data(&profile(0.0, mode), &g).unwrap();
        assert_eq!(u.max_abs(), 0.0);
        assert_eq!(v.max_abs(), 0.0);
    }
}

#[test]
fn radial_displacement_vanishes_at_origin() {
    let g = Grid::new(32, 10.0).unwrap();
    let origin = g.idx(g.n() / 2, g.n() / 2);
    assert_eq!((g.coord(g.n() / 2), g.coord(g.n() / 2)), (0.0, 0.0));
    for mode in [RadialMode::Potential, RadialMode::Pointwise] {
        let (u, _) = radial_data(&profile(0.3, mode), &g).unwrap();
        assert!(u.comp[0][origin].abs() < 1e-15 && u.comp[1][origin].abs() < 1e-15);
    }
}

#[test]
fn potential_data_is_discretely_curl_free() {
    let mut cfg = SimConfig::new(
        Grid::new(64, 16.0).unwrap(),
        null(),
        DataSpec::Radial(profile(0.1, RadialMode::Potential)),
        0.0,
    );
    cfg.sample_every = 1;
    let rep = run(&cfg).unwrap();
    assert!(rep.first().curl_ratio(1e-12) < 1e-13);

    // Pointwise sampling is curl-free only to truncation order.
    cfg.data = DataSpec::Radial(profile(0.1, RadialMode::Pointwise));
    let rep = run(&cfg).unwrap();
    let ratio = rep.first().curl_ratio(1e-12);
    assert!(ratio > 1e-13 && ratio < 1e-3, "{ratio}");
}

#[test]
fn outgoing_ring_requires_ring_profile() {
    let g = Grid::new(64, 40.0).unwrap();
    let mut p = profile(0.01, RadialMode::Potential);
    p.outgoing = true;
    assert!(initial_state(&DataSpec::Radial(p), &g, &null()).is_err());
    p.velocity = None;
    p.displacement.r0 = 8.0;
    let s = initial_state(&DataSpec::Radial(p), &g, &null()).unwrap();
    assert!(s.v.max_abs() > 0.0);
    assert!(radial_data(&p, &g).is_err());
}

#[test]
fn oversized_support_is_rejected() {
    let g = Grid::new(32, 10.0).unwrap();
    let mut p = profile(0.1, RadialMode::Potential);
    p.displacement.width = 5.0;
    assert!(radial_data(&p, &g).is_err());
}

#[test]
fn numeric_reduction_converges_at_fourth_order() {
    let mut p = profile(0.1, RadialMode::Pointwise);
    p.displacement = Bump { r0: 0.0, width: 4.0, exponent: 8, amplitude: 1.0 };
    p.velocity = None;
    let study = reduction_study(&null(), &p, 16.0, &[64, 128, 256]).unwrap();
    assert!(study.min_order() >= 3.5, "{study:?}");
    let verdict = reduction_check(&MaterialModel::null_example(), Some((&p, 16.0, &[64, 128, 256]))).unwrap();
    assert!(verdict.passed(3.5));
}

#[test]
fn reduction_rejects_genuinely_nonlinear_material() {
    assert!(reduction_check(&MaterialModel::genuinely_nonlinear_example(), None).is_err());
}

#[test]
fn swirl_control_is_flagged() {
    let mut cfg = SimConfig::new(
        Grid::new(64, 16.0).unwrap(),
        null(),
        DataSpec::Swirl { eps: 0.05, bump: Bump { r0: 0.0, width: 4.0, exponent: 6, amplitude: 1.0 } },
        0.5,
    );
    cfg.sample_every = 1;
    let v = curl_monitor(&run(&cfg).unwrap(), 1e-6, 1e-12);
    assert!(!v.passed && v.max_ratio > 0.1);
}

#[test]
fn small_sweep_orders_lifespans() {
    let nonlinear = NumericMaterial::from_model(&MaterialModel::genuinely_nonlinear_example()).unwrap();
    let spec = SweepSpec {
        eps: vec![0.0, 0.02, 0.03],
        null: LabelledMaterial { label: "null".into(), material: null() },
        nonlinear: LabelledMaterial { label: "nonlinear".into(), material: nonlinear },
        grid: Grid::new(256, 64.0).unwrap(),
        step: TimeStep::Cfl(0.5),
        end_time: 4.0,
        profile: RadialProfile {
            eps: 0.0,
            displacement: Bump { r0: 16.0, width: 6.0, exponent: 8, amplitude: 1.0 },
            velocity: None,
            mode: RadialMode::Potential,
            outgoing: true,
        },
        theta: None,
        sample_every: 2,
        steepening: Some(4.0),
    };
    let res = lifespan_sweep(&spec).unwrap();
    assert!(res.cell(0.0, "null").unwrap().completed);
    assert!(res.cell(0.0, "nonlinear").unwrap().completed);
    let a = res.cell(0.02, "nonlinear").unwrap().lifespan;
    let b = res.cell(0.03, "nonlinear").unwrap().lifespan;
    assert!(!res.cell(0.03, "nonlinear").unwrap().completed);
    assert!(res.cell(0.03, "null").unwrap().completed);
    assert!(b <= a, "{a} {b}");
    assert!(res.ordering_holds && res.monotone, "{res:?}");
}
