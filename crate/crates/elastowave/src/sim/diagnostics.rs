use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::grid::Grid;
use super::integrate::State;
use super::material::FieldEnergy;
use super::rhs::gradient_rows;
use super::stencil::{dx, dy};

/// One row of the time series.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Sample {
    pub t: f64,
    pub energy: f64,
    pub momentum: [f64; 2],
    /// `max |∇u|` (pointwise Frobenius norm).
    pub max_grad: f64,
    /// `max |∇⊥·u|`.
    pub max_curl: f64,
    /// `max |∇²u|` (pointwise Frobenius norm over both components).
    pub max_hess: f64,
}

impl Sample {
    pub fn curl_ratio(&self, floor: f64) -> f64 {
        self.max_curl / self.max_grad.max(floor)
    }
}

#[derive(Default, Clone, Copy)]
struct RowStats {
    energy: f64,
    p: [f64; 2],
    max_grad: f64,
    max_curl: f64,
}

/// `E = h² Σ (½|v|² + W(∇u))`, `P = h² Σ v`, and gradient maxima.
///
/// Row partial sums are combined in row order, so the result does not depend
/// on the thread count.
pub fn diagnostics(s: &State, g: &Grid, w: &FieldEnergy) -> Sample {
    let n = g.n();
    let rows: Vec<RowStats> = (0..n)
        .into_par_iter()
        .map(|j| {
            let mut gr: [Vec<f64>; 4] = std::array::from_fn(|_| vec![0.0; n]);
            gradient_rows(&s.u, j, g, &mut gr);
            let mut st = RowStats::default();
            for i in 0..n {
                let k = j * n + i;
                let (v1, v2) = (s.v.comp[0][k], s.v.comp[1][k]);
                let [a, b, c, d] = [gr[0][i], gr[1][i], gr[2][i], gr[3][i]];
                let div = a + d;
                let curl = b - c;
                let q = a * d - b * c;
                st.energy += 0.5 * (v1 * v1 + v2 * v2) + w.density(div, curl, q);
                st.p[0] += v1;
                st.p[1] += v2;
                st.max_grad = st.max_grad.max((a * a + b * b + c * c + d * d).sqrt());
                st.max_curl = st.max_curl.max(curl.abs());
            }
            st
        })
        .collect();
    let h2 = g.h() * g.h();
    let mut total = RowStats::default();
    for r in &rows {
        total.energy += r.energy;
        total.p[0] += r.p[0];
        total.p[1] += r.p[1];
        total.max_grad = total.max_grad.max(r.max_grad);
        total.max_curl = total.max_curl.max(r.max_curl);
    }
    Sample {
        t: s.t,
        energy: h2 * total.energy,
        momentum: [h2 * total.p[0], h2 * total.p[1]],
        max_grad: total.max_grad,
        max_curl: total.max_curl,
        max_hess: max_hessian(&s.u, g),
    }
}

/// `max |∇²u|` with the mixed derivative counted twice, as in the Frobenius norm.
pub fn max_hessian(u: &super::grid::VectorField, g: &Grid) -> f64 {
    let mut sq = vec![0.0; g.len()];
    for c in &u.comp {
        let (ux, uy) = (dx(c, g), dy(c, g));
        let (uxx, uxy, uyy) = (dx(&ux, g), dy(&ux, g), dy(&uy, g));
        for (k, s) in sq.iter_mut().enumerate() {
            *s += uxx[k] * uxx[k] + 2.0 * uxy[k] * uxy[k] + uyy[k] * uyy[k];
        }
    }
    sq.into_iter().fold(0.0, f64::max).sqrt()
}
