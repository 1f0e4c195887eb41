//! Comparison of the first-principles expansion against the closed forms
//! as they are usually quoted (trace-form `l2, l3, l4` and the `d•, e•`
//! coefficient lists).

use alloc::{sync::Arc, vec::Vec};

use super::energy::{derived_coefficients, energy_expansion, DerivedCoefficients, EnergyExpansion};
use super::identities::Traces;
use super::model::MaterialModel;
use crate::poly::{rat, Polynomial, Rational, VariableSpace};
use crate::Result;

/// Sign inside the last `σ22` term of the quoted `l4`, `½σ22 (tr G² ± tr GGᵀ)²`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum L4Sign {
    Plus,
    Minus,
}

/// Space of the seven `σ` symbols, in [`MaterialModel::NAMES`] order.
pub fn sigma_space() -> Arc<VariableSpace> {
    VariableSpace::generic(&MaterialModel::NAMES).expect("unique names")
}

/// The quoted closed forms of `d1..d3, e1..e6, c1², c2²` evaluated on `m`.
pub fn printed_coefficients(m: &MaterialModel) -> DerivedCoefficients {
    let (s2, s11, s12, s111, s112, s1111, s22) = (
        &m.sigma2, &m.sigma11, &m.sigma12, &m.sigma111, &m.sigma112, &m.sigma1111, &m.sigma22,
    );
    let k = |n: i64, d: i64| rat(n, d);
    DerivedCoefficients {
        d1: s11 * k(2, 1) + s111 * k(4, 3),
        d2: (s11 - s12) * k(2, 1),
        d3: (s11 * k(-2, 1) + s12 * k(4, 1) + s2) * k(2, 1),
        e1: s11 * k(1, 2) + s111 * k(2, 1) + s1111 * k(2, 3),
        e2: s11 * k(1, 2) - s12 + s22 * k(1, 2),
        e3: s11 - s12 + s111 * k(2, 1) - s112 * k(2, 1),
        e4: s11 * k(2, 1) - s12 * k(8, 1) + s22 * k(8, 1) + s2,
        e5: (-s11 + s12 * k(4, 1) - s111 * k(2, 1) + s112 * k(4, 1)) * k(2, 1),
        e6: (-s11 + s12 * k(3, 1) - s22 * k(2, 1)) * k(2, 1),
        c1sq: s11 * k(4, 1),
        c2sq: s2 * k(-2, 1),
    }
}

/// The quoted trace-form energy, with a choice of sign in the last `l4` term.
pub fn printed_energy(m: &MaterialModel, sign: L4Sign) -> EnergyExpansion {
    let t = Traces::generic();
    let (s2, s11, s12, s111, s112, s1111, s22) = (
        &m.sigma2, &m.sigma11, &m.sigma12, &m.sigma111, &m.sigma112, &m.sigma1111, &m.sigma22,
    );
    let k = |n: i64, d: i64| rat(n, d);
    let g2_plus_ggt = &t.tr_g2 + &t.tr_ggt;
    let cubic_gap = &(&t.tr_g * &t.tr_ggt) - &t.tr_g2gt;
    let quartic_gap = &t.tr_ggt.pow(2) - &t.tr_ggt2;

    let l2 = &t.tr_g.pow(2).scale(&((s11 + s2) * k(2, 1))) - &g2_plus_ggt.scale(s2);

    let l3 = [
        ((&t.tr_g * &t.tr_ggt), (s11 - s12) * k(2, 1)),
        (cubic_gap.clone(), s2 * k(2, 1)),
        (t.tr_g.pow(3), s111 * k(4, 3) + s12 * k(4, 1)),
        ((&t.tr_g * &t.tr_g2), s12 * k(-2, 1)),
    ]
    .iter()
    .fold(Polynomial::zero(t.tr_g.space()), |acc, (p, c)| &acc + &p.scale(c));

    let last = match sign {
        L4Sign::Plus => &t.tr_g2 + &t.tr_ggt,
        L4Sign::Minus => &t.tr_g2 - &t.tr_ggt,
    };
    let l4 = [
        (t.tr_ggt.pow(2), s11 * k(1, 2)),
        (quartic_gap, s2 * k(1, 2)),
        (&t.tr_g.pow(2) * &t.tr_ggt, (s111 + s12) * k(2, 1)),
        (&t.tr_g * &cubic_gap, s12 * k(4, 1)),
        (&t.tr_ggt * &(&t.tr_ggt + &t.tr_g2), -s12.clone()),
        (
            t.tr_g.pow(4),
            s1111 * k(2, 3) + s112 * k(4, 1) + s22 * k(2, 1),
        ),
        (&t.tr_g.pow(2) * &g2_plus_ggt, (s112 + s22) * k(-2, 1)),
        (last.pow(2), s22 * k(1, 2)),
    ]
    .iter()
    .fold(Polynomial::zero(t.tr_g.space()), |acc, (p, c)| &acc + &p.scale(c));

    EnergyExpansion { l2, l3, l4 }
}

#[derive(Debug, Clone)]
pub struct CoefficientAudit {
    pub name: &'static str,
    pub printed: Rational,
    pub derived: Rational,
    pub matches: bool,
}

/// Audit of one concrete material.
#[derive(Debug, Clone)]
pub struct AuditReport {
    pub coefficients: Vec<CoefficientAudit>,
    pub l2_matches: bool,
    pub l3_matches: bool,
    pub l4_plus_matches: bool,
    pub l4_minus_matches: bool,
}

impl AuditReport {
    pub fn mismatches(&self) -> impl Iterator<Item = &CoefficientAudit> {
        self.coefficients.iter().filter(|c| !c.matches)
    }
}

pub fn audit(m: &MaterialModel) -> Result<AuditReport> {
    let derived = derived_coefficients(m)?;
    let printed = printed_coefficients(m);
    let coefficients = DerivedCoefficients::NAMES
        .iter()
        .zip(printed.values().iter().zip(derived.values()))
        .map(|(name, (p, d))| CoefficientAudit {
            name,
            printed: (*p).clone(),
            derived: d.clone(),
            matches: *p == d,
        })
        .collect();
    let truth = energy_expansion(m);
    let plus = printed_energy(m, L4Sign::Plus);
    let minus = printed_energy(m, L4Sign::Minus);
    Ok(AuditReport {
        coefficients,
        l2_matches: plus.l2 == truth.l2,
        l3_matches: plus.l3 == truth.l3,
        l4_plus_matches: plus.l4 == truth.l4,
        l4_minus_matches: minus.l4 == truth.l4,
    })
}

/// Symbolic audit valid for every material.
///
/// Every quantity is linear in the `σ` coefficients, so checking the seven
/// unit materials decides the identity for all of them; coefficients are
/// reported as linear forms over [`sigma_space`].
#[derive(Debug, Clone)]
pub struct GenericAudit {
    /// `(name, printed form, first-principles form)` over the `σ` symbols.
    pub coefficients: Vec<(&'static str, Polynomial, Polynomial)>,
    pub l2_matches: bool,
    pub l3_matches: bool,
    pub l4_plus_matches: bool,
    pub l4_minus_matches: bool,
}

impl GenericAudit {
    pub fn coefficient_mismatches(&self) -> Vec<&'static str> {
        self.coefficients
            .iter()
            .filter(|(_, p, d)| p != d)
            .map(|(n, _, _)| *n)
            .collect()
    }

    /// The sign of the last `l4` term that agrees with the expansion, if exactly one does.
    pub fn l4_sign(&self) -> Option<L4Sign> {
        match (self.l4_plus_matches, self.l4_minus_matches) {
            (true, false) => Some(L4Sign::Plus),
            (false, true) => Some(L4Sign::Minus),
            _ => None,
        }
    }
}

pub fn audit_generic() -> Result<GenericAudit> {
    let sp = sigma_space();
    let mut printed: Vec<Polynomial> = (0..11).map(|_| Polynomial::zero(&sp)).collect();
    let mut derived = printed.clone();
    let (mut l2, mut l3, mut l4p, mut l4m) = (true, true, true, true);
    for k in 0..7 {
        let m = MaterialModel::basis(k);
        let sym = Polynomial::named(&sp, MaterialModel::NAMES[k])?;
        let report = audit(&m)?;
        for (slot, entry) in report.coefficients.iter().enumerate() {
            printed[slot] = &printed[slot] + &sym.scale(&entry.printed);
            derived[slot] = &derived[slot] + &sym.scale(&entry.derived);
        }
        l2 &= report.l2_matches;
        l3 &= report.l3_matches;
        l4p &= report.l4_plus_matches;
        l4m &= report.l4_minus_matches;
    }
    Ok(GenericAudit {
        coefficients: DerivedCoefficients::NAMES
            .iter()
            .copied()
            .zip(printed.into_iter().zip(derived))
            .map(|(n, (p, d))| (n, p, d))
            .collect(),
        l2_matches: l2,
        l3_matches: l3,
        l4_plus_matches: l4p,
        l4_minus_matches: l4m,
    })
}
