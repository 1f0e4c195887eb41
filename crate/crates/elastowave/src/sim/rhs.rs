//! Right-hand sides in conservative form.
//!
//! For an energy density `W(∇u)` the equation is `∂²_t u^i = ∂_l (∂W/∂G_il)`.
//! The stress is evaluated pointwise from the discrete gradient and then
//! differentiated once more, so every component is a discrete divergence:
//! its grid sum vanishes, and the semi-discrete energy
//! `Σ ½|v|² + W` is conserved because the stencil is skew-adjoint.
//!
//! Written out, the `Q`-dependent part of the stress reproduces the null forms
//! as `Q12(f, u²) = ∂1(f ∂2u²) − ∂2(f ∂1u²)` and
//! `Q12(u¹, f) = ∂2(f ∂1u¹) − ∂1(f ∂2u¹)` with `f = ∂W/∂Q`.

use rayon::prelude::*;

use super::grid::{Grid, VectorField};
use super::material::{FieldEnergy, NumericMaterial};
use super::stencil::{dx_row, dy_row};

/// Rows of the four gradient entries `[G11, G12, G21, G22]` at row `j`.
pub(crate) fn gradient_rows(u: &VectorField, j: usize, g: &Grid, out: &mut [Vec<f64>; 4]) {
    let n = g.n();
    let inv = 1.0 / (12.0 * g.h());
    let row = j * n..(j + 1) * n;
    dx_row(&u.comp[0][row.clone()], &mut out[0], inv);
    dy_row(&u.comp[0], j, n, &mut out[1], inv);
    dx_row(&u.comp[1][row], &mut out[2], inv);
    dy_row(&u.comp[1], j, n, &mut out[3], inv);
}

/// Pointwise stress `[F11, F12, F21, F22]` of `w` at the discrete gradient of `u`.
pub fn stress(u: &VectorField, g: &Grid, w: &FieldEnergy) -> [Vec<f64>; 4] {
    let n = g.n();
    let mut f: [Vec<f64>; 4] = std::array::from_fn(|_| vec![0.0; g.len()]);
    let [f11, f12, f21, f22] = &mut f;
    f11.par_chunks_mut(n)
        .zip(f12.par_chunks_mut(n))
        .zip(f21.par_chunks_mut(n))
        .zip(f22.par_chunks_mut(n))
        .enumerate()
        .for_each(|(j, (((a, b), c), d))| {
            let mut gr: [Vec<f64>; 4] = std::array::from_fn(|_| vec![0.0; n]);
            gradient_rows(u, j, g, &mut gr);
            for i in 0..n {
                let s = w.stress([gr[0][i], gr[1][i], gr[2][i], gr[3][i]]);
                a[i] = s[0];
                b[i] = s[1];
                c[i] = s[2];
                d[i] = s[3];
            }
        });
    f
}

/// `(∂x F_i1 + ∂y F_i2)_i`.
pub fn divergence_of(f: &[Vec<f64>; 4], g: &Grid) -> VectorField {
    let n = g.n();
    let inv = 1.0 / (12.0 * g.h());
    let mut out = VectorField::zeros(g);
    let [o1, o2] = &mut out.comp;
    o1.par_chunks_mut(n)
        .zip(o2.par_chunks_mut(n))
        .enumerate()
        .for_each(|(j, (a, b))| {
            let row = j * n..(j + 1) * n;
            let mut tx = vec![0.0; n];
            let mut ty = vec![0.0; n];
            dx_row(&f[0][row.clone()], &mut tx, inv);
            dy_row(&f[1], j, n, &mut ty, inv);
            for i in 0..n {
                a[i] = tx[i] + ty[i];
            }
            dx_row(&f[2][row], &mut tx, inv);
            dy_row(&f[3], j, n, &mut ty, inv);
            for i in 0..n {
                b[i] = tx[i] + ty[i];
            }
        });
    out
}

/// Right-hand side generated by an arbitrary field-form energy.
pub fn energy_rhs(u: &VectorField, g: &Grid, w: &FieldEnergy) -> VectorField {
    divergence_of(&stress(u, g, w), g)
}

/// Full truncated system: linear part plus `N2` and `N3` as switched on.
pub fn full_rhs(u: &VectorField, g: &Grid, m: &NumericMaterial) -> VectorField {
    energy_rhs(u, g, &m.energy())
}

/// `c1² ∇(∇·u) + c2² ∇⊥(∇⊥·u) = c2² Δu + (c1² − c2²) ∇(∇·u)`.
pub fn linear_rhs(u: &VectorField, g: &Grid, m: &NumericMaterial) -> VectorField {
    let mut w = m.energy();
    w.d = [0.0; 3];
    w.e = [0.0; 6];
    energy_rhs(u, g, &w)
}

/// `N2 + N3` alone.
pub fn nonlinear_rhs(u: &VectorField, g: &Grid, m: &NumericMaterial) -> VectorField {
    let mut w = m.energy();
    w.dd = 0.0;
    w.rr = 0.0;
    w.q = 0.0;
    energy_rhs(u, g, &w)
}

/// The single-speed system obtained for curl-free data.
pub fn reduced_rhs(u: &VectorField, g: &Grid, m: &NumericMaterial) -> VectorField {
    energy_rhs(u, g, &m.reduced_energy())
}

/// `∂x∂x u + ∂y∂y u` with the same first-derivative stencil applied twice.
pub fn laplacian(u: &VectorField, g: &Grid) -> VectorField {
    use super::stencil::{dx, dy};
    let lap = |f: &Vec<f64>| -> Vec<f64> {
        let a = dx(&dx(f, g), g);
        let b = dy(&dy(f, g), g);
        a.iter().zip(&b).map(|(x, y)| x + y).collect()
    };
    VectorField::from_components(lap(&u.comp[0]), lap(&u.comp[1]))
}

/// `∇(∇·u) + ∇⊥(∇⊥·u)` assembled from divergence and curl.
pub fn hodge_laplacian(u: &VectorField, g: &Grid) -> VectorField {
    use super::stencil::{dx, dy};
    let (u1, u2) = (&u.comp[0], &u.comp[1]);
    let div: Vec<f64> = dx(u1, g).iter().zip(dy(u2, g)).map(|(a, b)| a + b).collect();
    let curl: Vec<f64> = dy(u1, g).iter().zip(dx(u2, g)).map(|(a, b)| a - b).collect();
    let a: Vec<f64> = dx(&div, g).iter().zip(dy(&curl, g)).map(|(p, q)| p + q).collect();
    let b: Vec<f64> = dy(&div, g).iter().zip(dx(&curl, g)).map(|(p, q)| p - q).collect();
    VectorField::from_components(a, b)
}
