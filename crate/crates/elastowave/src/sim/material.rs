use elastowave_core::{DerivedCoefficients, MaterialModel, Rational};
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::error::SimError;

/// Floating-point coefficients of the truncated system.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct NumericMaterial {
    pub c1sq: f64,
    pub c2sq: f64,
    pub d1: f64,
    pub d2: f64,
    pub d3: f64,
    pub e1: f64,
    pub e2: f64,
    pub e3: f64,
    pub e4: f64,
    pub e5: f64,
    pub e6: f64,
    #[serde(default = "yes")]
    pub include_n2: bool,
    #[serde(default = "yes")]
    pub include_n3: bool,
}

fn yes() -> bool {
    true
}

fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

impl NumericMaterial {
    pub fn from_coefficients(k: &DerivedCoefficients) -> Result<Self, SimError> {
        let m = NumericMaterial {
            c1sq: to_f64(&k.c1sq),
            c2sq: to_f64(&k.c2sq),
            d1: to_f64(&k.d1),
            d2: to_f64(&k.d2),
            d3: to_f64(&k.d3),
            e1: to_f64(&k.e1),
            e2: to_f64(&k.e2),
            e3: to_f64(&k.e3),
            e4: to_f64(&k.e4),
            e5: to_f64(&k.e5),
            e6: to_f64(&k.e6),
            include_n2: true,
            include_n3: true,
        };
        m.validate()?;
        Ok(m)
    }

    pub fn from_model(m: &MaterialModel) -> Result<Self, SimError> {
        m.validate()?;
        Self::from_coefficients(&elastowave_core::material::derived_coefficients(m)?)
    }

    /// Only the linear part; all nonlinear terms switched off.
    pub fn linear(c1sq: f64, c2sq: f64) -> Self {
        NumericMaterial {
            c1sq,
            c2sq,
            d1: 0.0,
            d2: 0.0,
            d3: 0.0,
            e1: 0.0,
            e2: 0.0,
            e3: 0.0,
            e4: 0.0,
            e5: 0.0,
            e6: 0.0,
            include_n2: false,
            include_n3: false,
        }
    }

    pub fn validate(&self) -> Result<(), SimError> {
        let all = [
            self.c1sq, self.c2sq, self.d1, self.d2, self.d3, self.e1, self.e2, self.e3, self.e4,
            self.e5, self.e6,
        ];
        if all.iter().any(|v| !v.is_finite()) {
            return Err(SimError::InvalidConfig("material coefficients must be finite".into()));
        }
        if !(self.c2sq > 0.0 && self.c1sq > self.c2sq) {
            return Err(SimError::InvalidConfig(format!(
                "need c1sq > c2sq > 0, got c1sq = {}, c2sq = {}",
                self.c1sq, self.c2sq
            )));
        }
        Ok(())
    }

    pub fn c1(&self) -> f64 {
        self.c1sq.sqrt()
    }

    pub fn c2(&self) -> f64 {
        self.c2sq.sqrt()
    }

    /// Energy density of the full truncated system.
    pub fn energy(&self) -> FieldEnergy {
        let n2 = if self.include_n2 { 1.0 } else { 0.0 };
        let n3 = if self.include_n3 { 1.0 } else { 0.0 };
        FieldEnergy {
            dd: 0.5 * self.c1sq,
            rr: 0.5 * self.c2sq,
            q: -2.0 * self.c2sq,
            d: [n2 * self.d1, n2 * self.d2, n2 * self.d3],
            e: [
                n3 * self.e1,
                n3 * self.e2,
                n3 * self.e3,
                n3 * self.e4,
                n3 * self.e5,
                n3 * self.e6,
            ],
        }
    }

    /// Energy density whose flux is the single-speed curl-free system
    /// `c1² Δu + d3(∇Q + Q̃(D)) + 2e4 Q̃(Q) + 2e5 ∇(DQ) + e5 Q̃(D²)`.
    pub fn reduced_energy(&self) -> FieldEnergy {
        let full = self.energy();
        FieldEnergy {
            dd: 0.5 * self.c1sq,
            rr: 0.5 * self.c1sq,
            q: 0.0,
            d: [0.0, 0.0, full.d[2]],
            e: [0.0, 0.0, 0.0, full.e[3], full.e[4], 0.0],
        }
    }
}

/// `W(D, R, Q) = dd D² + rr R² + q Q + d1 D³ + d2 D R² + d3 D Q
///  + e1 D⁴ + e2 R⁴ + e3 D²R² + e4 Q² + e5 D²Q + e6 R²Q`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FieldEnergy {
    pub dd: f64,
    pub rr: f64,
    pub q: f64,
    pub d: [f64; 3],
    pub e: [f64; 6],
}

impl FieldEnergy {
    #[inline(always)]
    pub fn density(&self, d: f64, r: f64, q: f64) -> f64 {
        let [d1, d2, d3] = self.d;
        let [e1, e2, e3, e4, e5, e6] = self.e;
        let (d2_, r2) = (d * d, r * r);
        self.dd * d2_
            + self.rr * r2
            + self.q * q
            + d * (d1 * d2_ + d2 * r2 + d3 * q)
            + e1 * d2_ * d2_
            + e2 * r2 * r2
            + e3 * d2_ * r2
            + e4 * q * q
            + e5 * d2_ * q
            + e6 * r2 * q
    }

    /// `(∂W/∂D, ∂W/∂R, ∂W/∂Q)`.
    #[inline(always)]
    pub fn partials(&self, d: f64, r: f64, q: f64) -> (f64, f64, f64) {
        let [d1, d2, d3] = self.d;
        let [e1, e2, e3, e4, e5, e6] = self.e;
        let (dsq, rsq) = (d * d, r * r);
        let wd = 2.0 * self.dd * d
            + 3.0 * d1 * dsq
            + d2 * rsq
            + d3 * q
            + 4.0 * e1 * dsq * d
            + 2.0 * e3 * d * rsq
            + 2.0 * e5 * d * q;
        let wr = 2.0 * self.rr * r
            + 2.0 * d2 * d * r
            + 4.0 * e2 * rsq * r
            + 2.0 * e3 * dsq * r
            + 2.0 * e6 * r * q;
        let wq = self.q + d3 * d + 2.0 * e4 * q + e5 * dsq + e6 * rsq;
        (wd, wr, wq)
    }

    /// Stress `∂W/∂G_il` as `[F11, F12, F21, F22]`, from `G = [G11, G12, G21, G22]`.
    #[inline(always)]
    pub fn stress(&self, g: [f64; 4]) -> [f64; 4] {
        let [g11, g12, g21, g22] = g;
        let d = g11 + g22;
        let r = g12 - g21;
        let q = g11 * g22 - g12 * g21;
        let (wd, wr, wq) = self.partials(d, r, q);
        [wd + wq * g22, wr - wq * g21, -wr - wq * g12, wd + wq * g11]
    }
}
