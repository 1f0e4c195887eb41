//! Initial data generators.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::SimError;
use crate::sim::{stencil, Grid, NumericMaterial, State, VectorField};

/// `χ(r) = (1 − ((r − r0)/w)²)^k` for `|r − r0| < w`, zero elsewhere.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Bump {
    #[serde(default)]
    pub r0: f64,
    pub width: f64,
    #[serde(default = "default_exponent")]
    pub exponent: u32,
    #[serde(default = "one")]
    pub amplitude: f64,
}

fn default_exponent() -> u32 {
    4
}

fn one() -> f64 {
    1.0
}

impl Bump {
    pub fn centered(width: f64) -> Self {
        Bump {
            r0: 0.0,
            width,
            exponent: 4,
            amplitude: 1.0,
        }
    }

    pub fn validate(&self) -> Result<(), SimError> {
        if !(self.width.is_finite() && self.width > 0.0) {
            return Err(SimError::InvalidConfig("bump width must be positive".into()));
        }
        if self.exponent < 4 {
            return Err(SimError::InvalidConfig(
                "bump exponent must be at least 4 for a C3 profile".into(),
            ));
        }
        // χ(|x|) is smooth at the origin only if it is even there.
        if self.r0 != 0.0 && self.r0 < self.width {
            return Err(SimError::InvalidConfig(
                "radial bump needs r0 = 0 or r0 >= width".into(),
            ));
        }
        if !(self.r0 >= 0.0 && self.amplitude.is_finite()) {
            return Err(SimError::InvalidConfig("invalid bump parameters".into()));
        }
        Ok(())
    }

    pub fn support(&self) -> f64 {
        self.r0 + self.width
    }

    pub fn eval(&self, r: f64) -> f64 {
        let t = (r - self.r0) / self.width;
        if t.abs() >= 1.0 {
            0.0
        } else {
            self.amplitude * (1.0 - t * t).powi(self.exponent as i32)
        }
    }

    /// `χ'(r)`.
    pub fn derivative(&self, r: f64) -> f64 {
        let t = (r - self.r0) / self.width;
        if t.abs() >= 1.0 {
            0.0
        } else {
            let k = self.exponent as i32;
            -2.0 * k as f64 * t * (1.0 - t * t).powi(k - 1) * self.amplitude / self.width
        }
    }

    /// `∫₀^r s χ(s) ds`, exact from the expanded polynomial in `t = (s − r0)/w`.
    pub fn radial_potential(&self, r: f64) -> f64 {
        let (r0, w, k) = (self.r0, self.width, self.exponent as usize);
        let lo = if r0 == 0.0 { 0.0 } else { -1.0 };
        let t = ((r - r0) / w).clamp(lo, 1.0);
        if t <= lo {
            return 0.0;
        }
        // (1 − t²)^k = Σ_j C(k,j) (−1)^j t^{2j}; s ds = (r0 + w t) w dt.
        let mut binom = 1.0;
        let mut acc = 0.0;
        for j in 0..=k {
            let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
            let p = 2 * j as i32;
            let a = r0 * (t.powi(p + 1) - lo.powi(p + 1)) / (p + 1) as f64;
            let b = w * (t.powi(p + 2) - lo.powi(p + 2)) / (p + 2) as f64;
            acc += sign * binom * (a + b);
            binom = binom * (k - j) as f64 / (j + 1) as f64;
        }
        self.amplitude * w * acc
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "snake_case")]
pub enum RadialMode {
    /// Discrete gradient of a radial potential; discrete curl vanishes to round-off.
    #[default]
    Potential,
    /// `ε x χ(|x|)` sampled pointwise; discrete curl is `O(h⁴)`.
    Pointwise,
}

/// `u = ε x χ(|x|)`, `v = ε x χ₂(|x|)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RadialProfile {
    pub eps: f64,
    pub displacement: Bump,
    #[serde(default)]
    pub velocity: Option<Bump>,
    #[serde(default)]
    pub mode: RadialMode,
    /// Replace the velocity bump by the data of an outgoing wave,
    /// `v_r = −c1 (∂_r u_r + u_r / 2r)`; needs a ring (`r0 ≥ width`).
    #[serde(default)]
    pub outgoing: bool,
}

impl RadialProfile {
    pub fn support(&self) -> f64 {
        self.displacement
            .support()
            .max(self.velocity.map_or(0.0, |b| b.support()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Polarization {
    Pressure,
    Shear,
}

/// One Fourier mode `amplitude · sin(2π(kx x + ky y)/L + phase)` in one component.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Mode {
    pub component: usize,
    pub kx: i32,
    pub ky: i32,
    pub amplitude: f64,
    #[serde(default)]
    pub phase: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum DataSpec {
    Zero,
    Radial(RadialProfile),
    /// Right-moving plane pulse along `x`: `u = ε w pol β((x − center)/w)` with
    /// `β(t) = (1 − t²)^k`, velocity matched to a single travelling wave.
    Pulse {
        eps: f64,
        polarization: Polarization,
        #[serde(default)]
        center: f64,
        width: f64,
        #[serde(default = "default_exponent")]
        exponent: u32,
    },
    /// Rotational displacement `ε x⊥ χ(|x|)`: pure curl, used as a negative control.
    Swirl { eps: f64, bump: Bump },
    /// Smooth periodic displacement and velocity built from Fourier modes.
    Modes {
        displacement: Vec<Mode>,
        #[serde(default)]
        velocity: Vec<Mode>,
    },
}

impl DataSpec {
    pub fn radial(eps: f64, width: f64) -> Self {
        DataSpec::Radial(RadialProfile {
            eps,
            displacement: Bump::centered(width),
            velocity: None,
            mode: RadialMode::Potential,
            outgoing: false,
        })
    }

    /// Radius of the region carrying the data, if it is localized.
    pub fn support_radius(&self) -> Option<f64> {
        match self {
            DataSpec::Zero | DataSpec::Modes { .. } => None,
            DataSpec::Radial(p) => Some(p.support()),
            DataSpec::Pulse { center, width, .. } => Some(center.abs() + width),
            DataSpec::Swirl { bump, .. } => Some(bump.support()),
        }
    }

    pub fn validate(&self, g: &Grid) -> Result<(), SimError> {
        let finite = |x: f64, what: &str| {
            if x.is_finite() {
                Ok(())
            } else {
                Err(SimError::InvalidConfig(format!("{what} must be finite")))
            }
        };
        match self {
            DataSpec::Zero => {}
            DataSpec::Radial(p) => {
                finite(p.eps, "eps")?;
                p.displacement.validate()?;
                if let Some(b) = &p.velocity {
                    b.validate()?;
                }
                if p.outgoing && (p.velocity.is_some() || p.displacement.r0 < p.displacement.width) {
                    return Err(SimError::InvalidConfig(
                        "outgoing data needs a ring profile (r0 >= width) and no velocity bump".into(),
                    ));
                }
            }
            DataSpec::Pulse {
                eps,
                width,
                exponent,
                center,
                ..
            } => {
                finite(*eps, "eps")?;
                finite(*center, "center")?;
                if !(*width > 0.0) || *exponent < 4 {
                    return Err(SimError::InvalidConfig(
                        "pulse needs width > 0 and exponent >= 4".into(),
                    ));
                }
            }
            DataSpec::Swirl { eps, bump } => {
                finite(*eps, "eps")?;
                bump.validate()?;
            }
            DataSpec::Modes {
                displacement,
                velocity,
            } => {
                if displacement.iter().chain(velocity).any(|m| m.component > 1) {
                    return Err(SimError::InvalidConfig("mode component must be 0 or 1".into()));
                }
            }
        }
        if let Some(rad) = self.support_radius() {
            let margin = 4.0 * g.h();
            if rad >= 0.5 * g.l() - margin {
                return Err(SimError::InvalidConfig(format!(
                    "data support radius {rad} does not fit in the box of length {}",
                    g.l()
                )));
            }
        }
        Ok(())
    }
}

/// `ε x χ(|x|)` either sampled or as a discrete potential gradient.
fn radial_field(eps: f64, b: &Bump, mode: RadialMode, g: &Grid) -> VectorField {
    match mode {
        RadialMode::Pointwise => VectorField::sample(g, |x, y| {
            let c = eps * b.eval(x.hypot(y));
            [c * x, c * y]
        }),
        RadialMode::Potential => {
            let phi = g.sample(|x, y| eps * b.radial_potential(x.hypot(y)));
            VectorField::from_components(stencil::dx(&phi, g), stencil::dy(&phi, g))
        }
    }
}

/// `(u, v)` for radial data; `u = 0` at the origin by construction.
pub fn radial_data(p: &RadialProfile, g: &Grid) -> Result<(VectorField, VectorField), SimError> {
    DataSpec::Radial(*p).validate(g)?;
    if p.outgoing {
        return Err(SimError::InvalidConfig(
            "outgoing radial data needs the material speed; use initial_state".into(),
        ));
    }
    let u = radial_field(p.eps, &p.displacement, p.mode, g);
    let v = match &p.velocity {
        Some(b) => radial_field(p.eps, b, p.mode, g),
        None => VectorField::zeros(g),
    };
    Ok((u, v))
}

pub fn initial_state(spec: &DataSpec, g: &Grid, m: &NumericMaterial) -> Result<State, SimError> {
    spec.validate(g)?;
    let (u, v) = match spec {
        DataSpec::Zero => (VectorField::zeros(g), VectorField::zeros(g)),
        DataSpec::Radial(p) if p.outgoing => {
            let plain = RadialProfile { outgoing: false, ..*p };
            let (u, _) = radial_data(&plain, g)?;
            (u, outgoing_velocity(p, g, m.c1()))
        }
        DataSpec::Radial(p) => radial_data(p, g)?,
        DataSpec::Pulse {
            eps,
            polarization,
            center,
            width,
            exponent,
        } => {
            let k = *exponent as i32;
            let (w, c0) = (*width, *center);
            // β(t) = (1 − t²)^k, u = ε w β, ∂x u = ε β'(t).
            let beta = |x: f64| {
                let t = (x - c0) / w;
                if t.abs() >= 1.0 { 0.0 } else { (1.0 - t * t).powi(k) }
            };
            let dbeta = |x: f64| {
                let t = (x - c0) / w;
                if t.abs() >= 1.0 {
                    0.0
                } else {
                    -2.0 * k as f64 * t * (1.0 - t * t).powi(k - 1)
                }
            };
            let (slot, speed) = match polarization {
                Polarization::Pressure => (0, m.c1()),
                Polarization::Shear => (1, m.c2()),
            };
            let field = |f: &dyn Fn(f64) -> f64, scale: f64| {
                VectorField::sample(g, |x, _| {
                    let mut out = [0.0; 2];
                    out[slot] = scale * f(x);
                    out
                })
            };
            // u(x − ct) gives v = −c ∂x u.
            (field(&beta, eps * w), field(&dbeta, -eps * speed))
        }
        DataSpec::Swirl { eps, bump } => {
            let u = VectorField::sample(g, |x, y| {
                let c = eps * bump.eval(x.hypot(y));
                [-c * y, c * x]
            });
            (u, VectorField::zeros(g))
        }
        DataSpec::Modes {
            displacement,
            velocity,
        } => (modes_field(displacement, g), modes_field(velocity, g)),
    };
    Ok(State { u, v, t: 0.0 })
}

/// `v = x · v_r(r)/r` with `u_r = ε r χ` and `v_r = −c (∂_r u_r + u_r/2r)`, the
/// leading-order outgoing wave in two dimensions.
pub fn outgoing_velocity(p: &RadialProfile, g: &Grid, c: f64) -> VectorField {
    let b = p.displacement;
    VectorField::sample(g, |x, y| {
        let r = x.hypot(y);
        if r == 0.0 {
            return [0.0, 0.0];
        }
        let vr = -c * p.eps * (1.5 * b.eval(r) + r * b.derivative(r));
        [x * vr / r, y * vr / r]
    })
}

pub fn modes_field(modes: &[Mode], g: &Grid) -> VectorField {
    let mut out = VectorField::zeros(g);
    let kk = 2.0 * PI / g.l();
    for m in modes {
        let f = g.sample(|x, y| {
            m.amplitude * (kk * (m.kx as f64 * x + m.ky as f64 * y) + m.phase).sin()
        });
        for (o, v) in out.comp[m.component].iter_mut().zip(f) {
            *o += v;
        }
    }
    out
}
