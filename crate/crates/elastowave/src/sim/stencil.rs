//! Fourth-order periodic central differences.
//!
//! `(−f[i+2] + 8f[i+1] − 8f[i−1] + f[i−2]) / 12h` along one axis. Both
//! operators are circulant on the periodic grid, so they commute and are
//! skew-adjoint with respect to the plain grid sum.

use rayon::prelude::*;

use super::grid::Grid;

#[inline(always)]
pub(crate) fn stencil(m2: f64, m1: f64, p1: f64, p2: f64, inv12h: f64) -> f64 {
    (m2 - p2 + 8.0 * (p1 - m1)) * inv12h
}

/// Row indices `j−2, j−1, j+1, j+2` with periodic wrap.
#[inline(always)]
pub(crate) fn neighbours(j: usize, n: usize) -> [usize; 4] {
    [(j + n - 2) % n, (j + n - 1) % n, (j + 1) % n, (j + 2) % n]
}

/// `∂x` of one row into `out`.
#[inline]
pub(crate) fn dx_row(row: &[f64], out: &mut [f64], inv12h: f64) {
    let n = row.len();
    for i in 0..n {
        let [a, b, c, d] = if (2..n - 2).contains(&i) {
            [i - 2, i - 1, i + 1, i + 2]
        } else {
            neighbours(i, n)
        };
        out[i] = stencil(row[a], row[b], row[c], row[d], inv12h);
    }
}

/// `∂y` of row `j` of `f` into `out`.
#[inline]
pub(crate) fn dy_row(f: &[f64], j: usize, n: usize, out: &mut [f64], inv12h: f64) {
    let [a, b, c, d] = neighbours(j, n);
    let (ra, rb, rc, rd) = (
        &f[a * n..(a + 1) * n],
        &f[b * n..(b + 1) * n],
        &f[c * n..(c + 1) * n],
        &f[d * n..(d + 1) * n],
    );
    for i in 0..n {
        out[i] = stencil(ra[i], rb[i], rc[i], rd[i], inv12h);
    }
}

pub fn dx(f: &[f64], g: &Grid) -> Vec<f64> {
    let n = g.n();
    let inv = 1.0 / (12.0 * g.h());
    let mut out = vec![0.0; g.len()];
    out.par_chunks_mut(n)
        .zip(f.par_chunks(n))
        .for_each(|(o, r)| dx_row(r, o, inv));
    out
}

pub fn dy(f: &[f64], g: &Grid) -> Vec<f64> {
    let n = g.n();
    let inv = 1.0 / (12.0 * g.h());
    let mut out = vec![0.0; g.len()];
    out.par_chunks_mut(n)
        .enumerate()
        .for_each(|(j, o)| dy_row(f, j, n, o, inv));
    out
}

/// Fourier symbol of the stencil: `dx e^{ikx} = i·σ(k) e^{ikx}` with
/// `σ(k) = (8 sin kh − sin 2kh) / 6h`.
pub fn symbol(k: f64, h: f64) -> f64 {
    (8.0 * (k * h).sin() - (2.0 * k * h).sin()) / (6.0 * h)
}
