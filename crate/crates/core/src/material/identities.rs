use alloc::vec::Vec;

use super::energy::expand_field;
use super::strain::{generic_gradient, principal_invariants, strain_tensor, Matrix2Poly};
use crate::poly::jet::{self, Jets};
use crate::poly::{rat, Polynomial};

/// Trace expressions of a symbolic gradient that the energy is built from.
#[derive(Debug, Clone)]
pub struct Traces {
    /// `tr G`
    pub tr_g: Polynomial,
    /// `tr G²`
    pub tr_g2: Polynomial,
    /// `tr G Gᵀ`
    pub tr_ggt: Polynomial,
    /// `tr G² Gᵀ`
    pub tr_g2gt: Polynomial,
    /// `tr (G Gᵀ)²`
    pub tr_ggt2: Polynomial,
}

impl Traces {
    pub fn of(g: &Matrix2Poly) -> Self {
        let gt = g.transpose();
        let ggt = g.mul(&gt);
        Traces {
            tr_g: g.trace(),
            tr_g2: g.mul(g).trace(),
            tr_ggt: ggt.trace(),
            tr_g2gt: g.mul(g).mul(&gt).trace(),
            tr_ggt2: ggt.mul(&ggt).trace(),
        }
    }

    pub fn generic() -> Self {
        Self::of(&generic_gradient(&Jets::new()))
    }
}

#[derive(Debug, Clone)]
pub struct IdentityCheck {
    pub name: &'static str,
    pub holds: bool,
}

/// Every intermediate trace identity behind the field-form energy, checked
/// as an exact polynomial equality in the gradient entries.
pub fn identity_battery() -> Vec<IdentityCheck> {
    let jets = Jets::new();
    let g = generic_gradient(&jets);
    let c = strain_tensor(&g);
    let t = Traces::of(&g);
    let (k1, k2) = principal_invariants(&c);
    let fs = jet::field_space();
    let f = |v| expand_field(&Polynomial::var(&fs, v), &jets);
    let (d, r, q) = (f(jet::D), f(jet::R), f(jet::Q));
    let n = |k: i64| rat(k, 1);
    let half = rat(1, 2);

    let tr_c = c.trace();
    let tr_c2 = c.mul(&c).trace();
    let cubic_gap = &(&t.tr_g * &t.tr_ggt) - &t.tr_g2gt;
    let quartic_gap = &t.tr_ggt.pow(2) - &t.tr_ggt2;

    let checks: [(&'static str, Polynomial, Polynomial); 19] = [
        (
            "tr C = 2 tr G + tr GG^T",
            tr_c.clone(),
            &t.tr_g.scale(&n(2)) + &t.tr_ggt,
        ),
        (
            "(tr C)^2 = 4(tr G)^2 + 4 tr G tr GG^T + (tr GG^T)^2",
            tr_c.pow(2),
            &(&t.tr_g.pow(2).scale(&n(4)) + &(&t.tr_g * &t.tr_ggt).scale(&n(4)))
                + &t.tr_ggt.pow(2),
        ),
        (
            "tr C^2 = 2(tr G^2 + tr GG^T) + 4 tr G^2G^T + tr (GG^T)^2",
            tr_c2,
            &(&(&t.tr_g2 + &t.tr_ggt).scale(&n(2)) + &t.tr_g2gt.scale(&n(4))) + &t.tr_ggt2,
        ),
        ("k1 = 2 tr G + tr GG^T", k1, &t.tr_g.scale(&n(2)) + &t.tr_ggt),
        (
            "k2 = 2(tr G)^2 - (tr G^2 + tr GG^T) + 2(tr G tr GG^T - tr G^2G^T) + 1/2((tr GG^T)^2 - tr (GG^T)^2)",
            k2.clone(),
            &(&(&t.tr_g.pow(2).scale(&n(2)) - &(&t.tr_g2 + &t.tr_ggt)) + &cubic_gap.scale(&n(2)))
                + &quartic_gap.scale(&half),
        ),
        ("k2 = det C", k2, c.det()),
        ("tr G = D", t.tr_g.clone(), d.clone()),
        ("tr G^2 = D^2 - 2Q", t.tr_g2.clone(), &d.pow(2) - &q.scale(&n(2))),
        (
            "tr GG^T = D^2 + R^2 - 2Q",
            t.tr_ggt.clone(),
            &(&d.pow(2) + &r.pow(2)) - &q.scale(&n(2)),
        ),
        (
            "tr G tr GG^T = D^3 + D R^2 - 2 D Q",
            &t.tr_g * &t.tr_ggt,
            &(&d.pow(3) + &(&d * &r.pow(2))) - &(&d * &q).scale(&n(2)),
        ),
        ("tr G tr GG^T - tr G^2G^T = D Q", cubic_gap.clone(), &d * &q),
        ("(tr G)^3 = D^3", t.tr_g.pow(3), d.pow(3)),
        (
            "tr G tr G^2 = D^3 - 2 D Q",
            &t.tr_g * &t.tr_g2,
            &d.pow(3) - &(&d * &q).scale(&n(2)),
        ),
        (
            "(tr GG^T)^2 = D^4 + R^4 + 4Q^2 + 2D^2R^2 - 4D^2Q - 4R^2Q",
            t.tr_ggt.pow(2),
            &(&(&(&d.pow(4) + &r.pow(4)) + &q.pow(2).scale(&n(4)))
                + &(&d.pow(2) * &r.pow(2)).scale(&n(2)))
                - &(&(&d.pow(2) * &q).scale(&n(4)) + &(&r.pow(2) * &q).scale(&n(4))),
        ),
        ("(tr GG^T)^2 - tr (GG^T)^2 = 2Q^2", quartic_gap, q.pow(2).scale(&n(2))),
        (
            "(tr G)^2 tr GG^T = D^4 + D^2R^2 - 2D^2Q",
            &t.tr_g.pow(2) * &t.tr_ggt,
            &(&d.pow(4) + &(&d.pow(2) * &r.pow(2))) - &(&d.pow(2) * &q).scale(&n(2)),
        ),
        (
            "tr G (tr G tr GG^T - tr G^2G^T) = D^2 Q",
            &t.tr_g * &cubic_gap,
            &d.pow(2) * &q,
        ),
        (
            "tr G^2 tr GG^T = D^4 + 4Q^2 + D^2R^2 - 4D^2Q - 2R^2Q",
            &t.tr_g2 * &t.tr_ggt,
            &(&(&d.pow(4) + &q.pow(2).scale(&n(4))) + &(&d.pow(2) * &r.pow(2)))
                - &(&(&d.pow(2) * &q).scale(&n(4)) + &(&r.pow(2) * &q).scale(&n(2))),
        ),
        (
            "(tr G)^2 tr G^2 = D^4 - 2D^2Q",
            &t.tr_g.pow(2) * &t.tr_g2,
            &d.pow(4) - &(&d.pow(2) * &q).scale(&n(2)),
        ),
    ];
    let mut out: Vec<IdentityCheck> = checks
        .into_iter()
        .map(|(name, lhs, rhs)| IdentityCheck {
            name,
            holds: lhs == rhs,
        })
        .collect();
    out.push(IdentityCheck {
        name: "(tr G^2)^2 = D^4 + 4Q^2 - 4D^2Q",
        holds: t.tr_g2.pow(2)
            == &(&d.pow(4) + &q.pow(2).scale(&n(4))) - &(&d.pow(2) * &q).scale(&n(4)),
    });
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn battery_holds() {
        for check in identity_battery() {
            assert!(check.holds, "identity failed: {}", check.name);
        }
        assert_eq!(identity_battery().len(), 20);
    }
}
