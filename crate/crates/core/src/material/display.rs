//! The nonlinear terms written directly in divergence / curl / null-form
//! calculus, independently of the Euler–Lagrange differentiation.
//!
//! Each builder returns the two components `(i = 1, 2)` as jet polynomials.

use alloc::vec::Vec;

use super::energy::DerivedCoefficients;
use super::variational::total_derivative;
use crate::poly::jet::{grad, Jets};
use crate::poly::{rat, Polynomial, Rational};
use crate::Result;

/// Argument of a null form: a displacement component or a pointwise expression
/// in first-order jets.
#[derive(Debug, Clone)]
pub enum JetField {
    /// `u^i`, with `i ∈ {1, 2}`.
    Component(usize),
    Expr(Polynomial),
}

/// One labelled group of a display, e.g. all `e2` terms.
#[derive(Debug, Clone)]
pub struct DisplayTerm {
    pub label: &'static str,
    pub value: [Polynomial; 2],
}

#[derive(Debug, Clone, Default)]
pub struct JetCalculus {
    pub jets: Jets,
}

impl JetCalculus {
    pub fn new() -> Self {
        Self::default()
    }

    /// `∂_l f`.
    pub fn d(&self, f: &JetField, l: usize) -> Result<Polynomial> {
        match f {
            JetField::Component(i) => Ok(self.jets.v(grad(*i, l))),
            JetField::Expr(p) => total_derivative(p, l),
        }
    }

    /// `Q12(f, g) = ∂1f ∂2g − ∂1g ∂2f`.
    pub fn q12(&self, f: &JetField, g: &JetField) -> Result<Polynomial> {
        Ok(&(&self.d(f, 1)? * &self.d(g, 2)?) - &(&self.d(g, 1)? * &self.d(f, 2)?))
    }

    /// `∇f`.
    pub fn grad(&self, f: &Polynomial) -> Result<[Polynomial; 2]> {
        Ok([total_derivative(f, 1)?, total_derivative(f, 2)?])
    }

    /// `∇⊥f = (∂2 f, −∂1 f)`.
    pub fn perp_grad(&self, f: &Polynomial) -> Result<[Polynomial; 2]> {
        Ok([total_derivative(f, 2)?, -total_derivative(f, 1)?])
    }

    /// `(Q12(f, u²), Q12(u¹, f))`.
    pub fn q_pair(&self, f: &Polynomial) -> Result<[Polynomial; 2]> {
        let f = JetField::Expr(f.clone());
        Ok([
            self.q12(&f, &JetField::Component(2))?,
            self.q12(&JetField::Component(1), &f)?,
        ])
    }

    /// `Δu^i`.
    pub fn laplacian(&self) -> [Polynomial; 2] {
        core::array::from_fn(|k| &self.jets.h(k + 1, 1, 1) + &self.jets.h(k + 1, 2, 2))
    }
}

fn scaled(v: [Polynomial; 2], c: &Rational) -> [Polynomial; 2] {
    [v[0].scale(c), v[1].scale(c)]
}

fn sum(a: [Polynomial; 2], b: [Polynomial; 2]) -> [Polynomial; 2] {
    [&a[0] + &b[0], &a[1] + &b[1]]
}

fn total(terms: &[DisplayTerm], jets: &Jets) -> [Polynomial; 2] {
    terms
        .iter()
        .fold([jets.zero(), jets.zero()], |acc, t| sum(acc, t.value.clone()))
}

/// `c2² Δu + (c1² − c2²) ∇(∇·u)`.
pub fn linear_display(c1sq: &Rational, c2sq: &Rational) -> [Polynomial; 2] {
    let calc = JetCalculus::new();
    let grad_div = calc.grad(&calc.jets.divergence()).expect("first-order input");
    sum(
        scaled(calc.laplacian(), c2sq),
        scaled(grad_div, &(c1sq - c2sq)),
    )
}

/// `N2 = 3d1 ∇D² + d2 (∇R² + 2∇⊥(D R)) + d3 ∇Q + d3 (Q12(D, u²), Q12(u¹, D))`.
pub fn n2_display(k: &DerivedCoefficients) -> Result<[Polynomial; 2]> {
    let calc = JetCalculus::new();
    let (d, r, q) = (calc.jets.divergence(), calc.jets.curl(), calc.jets.null_form());
    let t1 = scaled(calc.grad(&d.pow(2))?, &(&k.d1 * rat(3, 1)));
    let t2 = sum(
        calc.grad(&r.pow(2))?,
        scaled(calc.perp_grad(&(&d * &r))?, &rat(2, 1)),
    );
    let t3 = sum(calc.grad(&q)?, calc.q_pair(&d)?);
    Ok(sum(sum(t1, scaled(t2, &k.d2)), scaled(t3, &k.d3)))
}

/// `N3` split by coefficient; labels are `"e1"` … `"e6"`.
pub fn n3_terms(k: &DerivedCoefficients) -> Result<Vec<DisplayTerm>> {
    let calc = JetCalculus::new();
    let (d, r, q) = (calc.jets.divergence(), calc.jets.curl(), calc.jets.null_form());
    let two = rat(2, 1);
    let e1 = scaled(calc.grad(&d.pow(3))?, &(&k.e1 * rat(4, 1)));
    let e2 = scaled(calc.perp_grad(&r.pow(3))?, &(&k.e2 * rat(4, 1)));
    let e3 = scaled(
        sum(
            calc.grad(&(&d * &r.pow(2)))?,
            calc.perp_grad(&(&r * &d.pow(2)))?,
        ),
        &(&k.e3 * &two),
    );
    let e4 = scaled(calc.q_pair(&q)?, &(&k.e4 * &two));
    let e5 = sum(
        scaled(calc.grad(&(&d * &q))?, &(&k.e5 * &two)),
        scaled(calc.q_pair(&d.pow(2))?, &k.e5),
    );
    let e6 = sum(
        scaled(calc.perp_grad(&(&r * &q))?, &(&k.e6 * &two)),
        scaled(calc.q_pair(&r.pow(2))?, &k.e6),
    );
    Ok([("e1", e1), ("e2", e2), ("e3", e3), ("e4", e4), ("e5", e5), ("e6", e6)]
        .into_iter()
        .map(|(label, value)| DisplayTerm { label, value })
        .collect())
}

/// `N3 = 4e1 ∇D³ + 4e2 ∇⊥R³ + 2e3(∇(D R²) + ∇⊥(R D²)) + Q̃`.
pub fn n3_display(k: &DerivedCoefficients) -> Result<[Polynomial; 2]> {
    Ok(total(&n3_terms(k)?, &Jets::new()))
}

/// `c1² Δu`: the linear part once the curl vanishes.
pub fn reduced_linear(c1sq: &Rational) -> [Polynomial; 2] {
    scaled(JetCalculus::new().laplacian(), c1sq)
}

/// `N2^(i) = d3 ∂_i Q + d3 Q12(D, u²)` (resp. `Q12(u¹, D)`).
pub fn reduced_n2(k: &DerivedCoefficients) -> Result<[Polynomial; 2]> {
    let calc = JetCalculus::new();
    let (d, q) = (calc.jets.divergence(), calc.jets.null_form());
    Ok(scaled(sum(calc.grad(&q)?, calc.q_pair(&d)?), &k.d3))
}

/// `2e4 Q12(Q, u²) + 2e5 ∂_1(D Q) + e5 Q12(D², u²)` and its second component.
pub fn reduced_n3(k: &DerivedCoefficients) -> Result<[Polynomial; 2]> {
    let calc = JetCalculus::new();
    let (d, q) = (calc.jets.divergence(), calc.jets.null_form());
    let two = rat(2, 1);
    Ok(sum(
        sum(
            scaled(calc.q_pair(&q)?, &(&k.e4 * &two)),
            scaled(calc.grad(&(&d * &q))?, &(&k.e5 * &two)),
        ),
        scaled(calc.q_pair(&d.pow(2))?, &k.e5),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn null_form_of_gradient_components_vanishes_on_symmetric_input() {
        // Q12(u¹, u²) through the calculus equals det G.
        let calc = JetCalculus::new();
        let q = calc
            .q12(&JetField::Component(1), &JetField::Component(2))
            .unwrap();
        assert_eq!(q, calc.jets.null_form());
    }

    #[test]
    fn hodge_split_of_laplacian() {
        // Δu = ∇(∇·u) + ∇⊥(∇⊥·u) as jet identities.
        let calc = JetCalculus::new();
        let a = calc.grad(&calc.jets.divergence()).unwrap();
        let b = calc.perp_grad(&calc.jets.curl()).unwrap();
        let lap = calc.laplacian();
        for i in 0..2 {
            assert_eq!(&a[i] + &b[i], lap[i]);
        }
    }
}
