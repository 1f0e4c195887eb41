use alloc::{collections::BTreeMap, vec, vec::Vec};

use num_traits::Zero;

use super::model::MaterialModel;
use super::strain::{generic_gradient, principal_invariants, strain_tensor};
use crate::poly::jet::{self, Jets};
use crate::poly::{rat, solve_exact, Monomial, Polynomial, Rational, Role};
use crate::{Error, Result};

/// Homogeneous parts of the truncated stored energy, in the gradient entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnergyExpansion {
    pub l2: Polynomial,
    pub l3: Polynomial,
    pub l4: Polynomial,
}

impl EnergyExpansion {
    pub fn parts(&self) -> [&Polynomial; 3] {
        [&self.l2, &self.l3, &self.l4]
    }

    pub fn total(&self) -> Polynomial {
        &(&self.l2 + &self.l3) + &self.l4
    }
}

/// The same energy written over `D = ∇·u`, `R = ∇⊥·u`, `Q = Q12(u¹, u²)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldFormEnergy {
    pub l2: Polynomial,
    pub l3: Polynomial,
    pub l4: Polynomial,
}

impl FieldFormEnergy {
    pub fn parts(&self) -> [&Polynomial; 3] {
        [&self.l2, &self.l3, &self.l4]
    }
}

/// Coefficients of the field-form energy.
///
/// `l3 = d1 D³ + d2 D R² + d3 D Q` and
/// `l4 = e1 D⁴ + e2 R⁴ + e3 D²R² + e4 Q² + e5 D²Q + e6 R²Q`;
/// `c1sq`, `c2sq` are twice the `D²` and `R²` coefficients of `l2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DerivedCoefficients {
    pub d1: Rational,
    pub d2: Rational,
    pub d3: Rational,
    pub e1: Rational,
    pub e2: Rational,
    pub e3: Rational,
    pub e4: Rational,
    pub e5: Rational,
    pub e6: Rational,
    pub c1sq: Rational,
    pub c2sq: Rational,
}

impl DerivedCoefficients {
    pub const NAMES: [&'static str; 11] = [
        "d1", "d2", "d3", "e1", "e2", "e3", "e4", "e5", "e6", "c1sq", "c2sq",
    ];

    pub fn values(&self) -> [&Rational; 11] {
        [
            &self.d1, &self.d2, &self.d3, &self.e1, &self.e2, &self.e3, &self.e4, &self.e5,
            &self.e6, &self.c1sq, &self.c2sq,
        ]
    }

    pub fn from_values(v: [Rational; 11]) -> Self {
        let [d1, d2, d3, e1, e2, e3, e4, e5, e6, c1sq, c2sq] = v;
        DerivedCoefficients {
            d1,
            d2,
            d3,
            e1,
            e2,
            e3,
            e4,
            e5,
            e6,
            c1sq,
            c2sq,
        }
    }

    pub fn get(&self, name: &str) -> Option<&Rational> {
        Self::NAMES
            .iter()
            .position(|n| *n == name)
            .map(|k| self.values()[k])
    }
}

/// Composes the quartic Taylor polynomial of `σ` with `(k1, k2)` of a
/// symbolic gradient and keeps the homogeneous parts of degree 2, 3, 4.
pub fn energy_expansion(m: &MaterialModel) -> EnergyExpansion {
    let jets = Jets::new();
    let (k1, k2) = principal_invariants(&strain_tensor(&generic_gradient(&jets)));
    // Everything above degree four is discarded, so truncate as we go.
    let trunc = |p: Polynomial| p.truncate(4);
    let k1_2 = trunc(k1.pow(2));
    let k1_3 = trunc(&k1_2 * &k1);
    let k1_4 = trunc(&k1_3 * &k1);
    let k1k2 = trunc(&k1 * &k2);
    let k1_2k2 = trunc(&k1_2 * &k2);
    let k2_2 = trunc(k2.pow(2));

    let sigma = [
        (&k1_2, &m.sigma11 * rat(1, 2)),
        (&k2, m.sigma2.clone()),
        (&k1_3, &m.sigma111 * rat(1, 6)),
        (&k1k2, m.sigma12.clone()),
        (&k1_4, &m.sigma1111 * rat(1, 24)),
        (&k1_2k2, &m.sigma112 * rat(1, 2)),
        (&k2_2, &m.sigma22 * rat(1, 2)),
    ]
    .iter()
    .fold(jets.zero(), |acc, (p, c)| &acc + &p.scale(c));

    EnergyExpansion {
        l2: sigma.homogeneous_part(2),
        l3: sigma.homogeneous_part(3),
        l4: sigma.homogeneous_part(4),
    }
}

/// Expands a field-form polynomial back into gradient entries.
pub fn expand_field(p: &Polynomial, jets: &Jets) -> Polynomial {
    p.substitute(
        &[
            (jet::D, jets.divergence()),
            (jet::R, jets.curl()),
            (jet::Q, jets.null_form()),
        ],
        &jets.space,
    )
    .expect("field-space polynomial")
}

/// Writes a polynomial in the gradient entries as a polynomial in `D, R, Q`.
///
/// The representation is unique because `D, R, Q` are algebraically
/// independent; each homogeneous degree is solved as an exact linear system
/// over the monomials `D^a R^b Q^c` with `a + b + 2c = degree`.
pub fn to_field_form(p: &Polynomial) -> Result<Polynomial> {
    let jets = Jets::new();
    let fs = jet::field_space();
    let space = p.space();
    for (m, _) in p.terms() {
        for (v, info) in space.vars() {
            if m.exponent(v) > 0 && info.role != Role::Gradient {
                return Err(Error::NotIsotropic(m.degree()));
            }
        }
    }
    let mut degrees: Vec<u32> = p.terms().map(|(m, _)| m.degree()).collect();
    degrees.sort_unstable();
    degrees.dedup();

    let mut out = Polynomial::zero(&fs);
    for deg in degrees {
        let part = p.homogeneous_part(deg);
        let mut basis = Vec::new();
        for c in 0..=deg / 2 {
            for b in 0..=(deg - 2 * c) {
                let a = deg - 2 * c - b;
                basis.push([a as u16, b as u16, c as u16]);
            }
        }
        let expansions: Vec<Polynomial> = basis
            .iter()
            .map(|e| expand_field(&Polynomial::term(&fs, Rational::from_integer(1.into()), Monomial::from_exponents(e)), &jets))
            .collect();
        let mut rows: BTreeMap<Monomial, usize> = BTreeMap::new();
        for q in expansions.iter().chain(core::iter::once(&part)) {
            for (m, _) in q.terms() {
                let next = rows.len();
                rows.entry(m.clone()).or_insert(next);
            }
        }
        let mut a = vec![vec![Rational::zero(); basis.len()]; rows.len()];
        let mut rhs = vec![Rational::zero(); rows.len()];
        for (j, q) in expansions.iter().enumerate() {
            for (m, c) in q.terms() {
                a[rows[m]][j] = c.clone();
            }
        }
        for (m, c) in part.terms() {
            rhs[rows[m]] = c.clone();
        }
        let sol = solve_exact(a, rhs).ok_or(Error::NotIsotropic(deg))?;
        for (e, c) in basis.iter().zip(sol) {
            out = &out + &Polynomial::term(&fs, c, Monomial::from_exponents(e));
        }
    }
    Ok(out)
}

pub fn field_form(e: &EnergyExpansion) -> Result<FieldFormEnergy> {
    Ok(FieldFormEnergy {
        l2: to_field_form(&e.l2)?,
        l3: to_field_form(&e.l3)?,
        l4: to_field_form(&e.l4)?,
    })
}

/// Reads `d•`, `e•`, `c1²`, `c2²` off the field form of the expansion.
pub fn derived_coefficients(m: &MaterialModel) -> Result<DerivedCoefficients> {
    let ff = field_form(&energy_expansion(m))?;
    let (d, r, q) = (jet::D, jet::R, jet::Q);
    let two = rat(2, 1);
    Ok(DerivedCoefficients {
        d1: ff.l3.coefficient(&[(d, 3)]),
        d2: ff.l3.coefficient(&[(d, 1), (r, 2)]),
        d3: ff.l3.coefficient(&[(d, 1), (q, 1)]),
        e1: ff.l4.coefficient(&[(d, 4)]),
        e2: ff.l4.coefficient(&[(r, 4)]),
        e3: ff.l4.coefficient(&[(d, 2), (r, 2)]),
        e4: ff.l4.coefficient(&[(q, 2)]),
        e5: ff.l4.coefficient(&[(d, 2), (q, 1)]),
        e6: ff.l4.coefficient(&[(r, 2), (q, 1)]),
        c1sq: ff.l2.coefficient(&[(d, 2)]) * &two,
        c2sq: ff.l2.coefficient(&[(r, 2)]) * &two,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn field(jets_expr: &str) -> Polynomial {
        // tiny parser for monomials like "D^2*R" is overkill; build directly
        let fs = jet::field_space();
        Polynomial::named(&fs, jets_expr).unwrap()
    }

    #[test]
    fn one_term_material_l2() {
        // σ = ½ k1², lowest order of k1 is 2 trG, so l2 = 2 (trG)².
        let mut m = MaterialModel::zero();
        m.sigma11 = rat(1, 1);
        let e = energy_expansion(&m);
        let jets = Jets::new();
        assert_eq!(e.l2, jets.divergence().pow(2).scale(&rat(2, 1)));
    }

    #[test]
    fn parts_are_homogeneous() {
        let e = energy_expansion(&MaterialModel::null_example());
        for (k, p) in e.parts().iter().enumerate() {
            assert!(p.terms().all(|(m, _)| m.degree() == k as u32 + 2));
        }
    }

    #[test]
    fn l2_field_form_example() {
        let m = MaterialModel::linear();
        let ff = field_form(&energy_expansion(&m)).unwrap();
        let (d, r, q) = (field("D"), field("R"), field("Q"));
        let s11 = &m.sigma11;
        let s2 = &m.sigma2;
        // (2σ11+σ2)D² − σ2(D²+R²−2Q) + 2σ2 Q
        let grad_sq = &(&d.pow(2) + &r.pow(2)) - &q.scale(&rat(2, 1));
        let want = &(&d.pow(2).scale(&(s11 * rat(2, 1) + s2)) - &grad_sq.scale(s2))
            + &q.scale(&(s2 * rat(2, 1)));
        assert_eq!(ff.l2, want);
    }

    #[test]
    fn zero_energy_has_zero_field_form() {
        let ff = field_form(&energy_expansion(&MaterialModel::zero())).unwrap();
        assert!(ff.parts().iter().all(|p| p.is_zero()));
        let c = derived_coefficients(&MaterialModel::zero()).unwrap();
        assert!(c.values().iter().all(|v| v.is_zero()));
    }

    #[test]
    fn rejects_non_invariant_input() {
        let jets = Jets::new();
        assert!(matches!(to_field_form(&jets.g(1, 1)), Err(Error::NotIsotropic(1))));
        assert!(to_field_form(&jets.v(jet::C)).is_err());
    }

    #[test]
    fn coefficient_examples() {
        let mut m = MaterialModel::zero();
        m.sigma11 = rat(1, 1);
        m.sigma2 = rat(-1, 1);
        m.sigma111 = rat(-3, 2);
        assert!(derived_coefficients(&m).unwrap().d1.is_zero());

        let c = derived_coefficients(&MaterialModel::linear()).unwrap();
        assert_eq!(c.c1sq, rat(4, 1));
        assert_eq!(c.c2sq, rat(2, 1));
        assert_eq!(c.d1, rat(2, 1));
        assert_eq!(c.get("c2sq"), Some(&rat(2, 1)));
    }
}
