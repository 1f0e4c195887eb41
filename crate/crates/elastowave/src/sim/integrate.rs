use super::grid::{Grid, VectorField};
use super::material::NumericMaterial;
use super::rhs::full_rhs;

/// Displacement, velocity and time.
#[derive(Debug, Clone, PartialEq)]
pub struct State {
    pub u: VectorField,
    pub v: VectorField,
    pub t: f64,
}

impl State {
    pub fn zero(g: &Grid) -> Self {
        State {
            u: VectorField::zeros(g),
            v: VectorField::zeros(g),
            t: 0.0,
        }
    }

    pub fn is_finite(&self) -> bool {
        self.u.is_finite() && self.v.is_finite()
    }
}

/// Classical four-stage Runge–Kutta step of `u̇ = v, v̇ = F(u)`.
///
/// Non-finite values are left in the state for the caller to detect.
pub fn rk4_step(s: &State, dt: f64, g: &Grid, m: &NumericMaterial) -> State {
    rk4_step_with(s, dt, |u| full_rhs(u, g, m))
}

/// As [`rk4_step`] with any acceleration `F(u)`.
pub fn rk4_step_with(s: &State, dt: f64, accel: impl Fn(&VectorField) -> VectorField) -> State {
    let k1u = &s.v;
    let k1v = accel(&s.u);

    let u2 = s.u.axpy(0.5 * dt, k1u);
    let k2u = s.v.axpy(0.5 * dt, &k1v);
    let k2v = accel(&u2);

    let u3 = s.u.axpy(0.5 * dt, &k2u);
    let k3u = s.v.axpy(0.5 * dt, &k2v);
    let k3v = accel(&u3);

    let u4 = s.u.axpy(dt, &k3u);
    let k4u = s.v.axpy(dt, &k3v);
    let k4v = accel(&u4);

    let combine = |base: &VectorField, a: &VectorField, b: &VectorField, c: &VectorField, d: &VectorField| {
        let f = |k: usize| -> Vec<f64> {
            (0..base.len())
                .map(|i| {
                    base.comp[k][i]
                        + dt / 6.0
                            * (a.comp[k][i] + 2.0 * b.comp[k][i] + 2.0 * c.comp[k][i] + d.comp[k][i])
                })
                .collect()
        };
        VectorField { comp: [f(0), f(1)] }
    };
    State {
        u: combine(&s.u, k1u, &k2u, &k3u, &k4u),
        v: combine(&s.v, &k1v, &k2v, &k3v, &k4v),
        t: s.t + dt,
    }
}
