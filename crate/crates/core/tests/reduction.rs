mod common;

use elastowave_core::material::derived_coefficients;
use elastowave_core::poly::jet::{grad, hess, Jets};
use elastowave_core::poly::rat;
use elastowave_core::reduction::{curl_free, reduction_check};
use elastowave_core::{Error, MaterialModel};
use num_traits::Zero;

#[test]
fn reduction_is_exact_for_random_reducible_materials() {
    let mut r = common::rng(41);
    for _ in 0..20 {
        let m = common::random_reducible_material(&mut r);
        let report = reduction_check(&m).unwrap();
        assert!(report.passed(), "{:?}", report.nonzero());
    }
}

#[test]
fn e2_need_not_vanish() {
    let mut m = MaterialModel::null_example();
    m.sigma22 = rat(3, 1);
    let k = derived_coefficients(&m).unwrap();
    assert!(k.d1.is_zero() && k.e1.is_zero());
    assert!(!k.e2.is_zero());
    let report = reduction_check(&m).unwrap();
    assert!(report.exact() && report.e2_vanishes() && report.single_speed_null());
}

#[test]
fn precondition_is_enforced() {
    for m in [MaterialModel::linear(), MaterialModel::genuinely_nonlinear_example()] {
        assert!(matches!(reduction_check(&m), Err(Error::Precondition(_))));
    }
    // d1 = 0 but e1 ≠ 0.
    let mut m = MaterialModel::null_example();
    m.sigma1111 = rat(0, 1);
    assert!(matches!(reduction_check(&m), Err(Error::Precondition(_))));
}

#[test]
fn curl_free_substitution_kills_curl_and_its_derivatives() {
    let j = Jets::new();
    assert!(curl_free(&j.curl()).unwrap().is_zero());
    let d2_curl = &j.h(1, 2, 2) - &j.h(2, 1, 2);
    let d1_curl = &j.h(1, 1, 2) - &j.h(2, 1, 1);
    assert!(curl_free(&d1_curl).unwrap().is_zero());
    assert!(curl_free(&d2_curl).unwrap().is_zero());
    // Divergence is untouched.
    assert_eq!(curl_free(&j.divergence()).unwrap(), j.divergence());
    assert!(!curl_free(&j.v(grad(2, 1))).unwrap().is_zero());
    assert_eq!(curl_free(&j.v(hess(1, 1, 1))).unwrap(), j.v(hess(1, 1, 1)));
}
