#![allow(dead_code)]

use elastowave_core::poly::rat;
use elastowave_core::{MaterialModel, Rational};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

pub fn small_rational(r: &mut StdRng) -> Rational {
    rat(r.gen_range(-12..=12), r.gen_range(1..=6))
}

/// A valid material; each null condition is imposed with probability one half
/// so that both outcomes of every flag are exercised.
pub fn random_material(r: &mut StdRng) -> MaterialModel {
    let sigma11 = rat(r.gen_range(1..=12), r.gen_range(1..=4));
    // c1² > c2² means −2σ11 < σ2 < 0.
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
        // 3σ11 + 12σ111 + 4σ1111 = 0
        m.sigma1111 = -(&sigma11 * rat(3, 1) + &m.sigma111 * rat(12, 1)) / rat(4, 1);
    }
    if r.gen_bool(0.5) {
        m.sigma22 = &m.sigma12 * rat(2, 1) - &sigma11;
    }
    m.validate().expect("generator yields valid materials");
    m
}

/// A valid material with `d1 = e1 = 0` and otherwise random coefficients.
pub fn random_reducible_material(r: &mut StdRng) -> MaterialModel {
    let mut m = random_material(r);
    m.sigma111 = &m.sigma11 * rat(-3, 2);
    m.sigma1111 = -(&m.sigma11 * rat(3, 1) + &m.sigma111 * rat(12, 1)) / rat(4, 1);
    m
}
