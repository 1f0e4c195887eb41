use alloc::vec::Vec;

use num_traits::Zero;

use super::energy::EnergyExpansion;
use super::variational::total_derivative;
use crate::poly::jet::{grad, Jets};
use crate::poly::{rat, Polynomial, Rational};

/// Constant coefficient tensors of the quadratic and cubic nonlinearity.
///
/// `b6(i,l,j,m,k,n) = ½ ∂³l3/∂G_il ∂G_jm ∂G_kn` and
/// `b8(i,l,j,m,k,n,p,q) = ⅙ ∂⁴l4/∂G_il ∂G_jm ∂G_kn ∂G_pq`; all indices are in `{1, 2}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BTensors {
    b6: Vec<Rational>,
    b8: Vec<Rational>,
}

fn flat<const N: usize>(idx: [usize; N]) -> usize {
    idx.iter().fold(0, |acc, &x| {
        debug_assert!(x == 1 || x == 2, "tensor index out of range");
        acc * 2 + (x - 1)
    })
}

fn unflat<const N: usize>(mut k: usize) -> [usize; N] {
    let mut out = [0; N];
    for slot in out.iter_mut().rev() {
        *slot = (k & 1) + 1;
        k >>= 1;
    }
    out
}

/// Index pairs `(i,l), (j,m), …` of a flat tuple.
fn pairs<const N: usize>(idx: [usize; N]) -> Vec<(usize, usize)> {
    idx.chunks(2).map(|c| (c[0], c[1])).collect()
}

pub fn b_tensors(e: &EnergyExpansion) -> BTensors {
    let derive = |p: &Polynomial, idx: &[(usize, usize)]| -> Rational {
        idx.iter()
            .fold(p.clone(), |acc, &(a, b)| {
                acc.differentiate(grad(a, b)).expect("gradient variable")
            })
            .constant_term()
    };
    let b6 = (0..64)
        .map(|k| derive(&e.l3, &pairs(unflat::<6>(k))) * rat(1, 2))
        .collect();
    let b8 = (0..256)
        .map(|k| derive(&e.l4, &pairs(unflat::<8>(k))) * rat(1, 6))
        .collect();
    BTensors { b6, b8 }
}

impl BTensors {
    /// Entry `B^{ijk}_{lmn}` addressed in pair order `[i, l, j, m, k, n]`.
    pub fn b6(&self, idx: [usize; 6]) -> &Rational {
        &self.b6[flat(idx)]
    }

    /// Entry `B^{ijkp}_{lmnq}` addressed as `[i, l, j, m, k, n, p, q]`.
    pub fn b8(&self, idx: [usize; 8]) -> &Rational {
        &self.b8[flat(idx)]
    }

    pub fn is_zero(&self) -> bool {
        self.b6.iter().chain(&self.b8).all(Zero::is_zero)
    }

    /// Number of index tuples violating the listed pair-swap symmetries.
    pub fn symmetry_violations(&self) -> usize {
        let mut bad = 0;
        for k in 0..64 {
            let [i, l, j, m, kk, n] = unflat::<6>(k);
            let v = self.b6([i, l, j, m, kk, n]);
            if v != self.b6([j, m, i, l, kk, n]) || v != self.b6([kk, n, j, m, i, l]) {
                bad += 1;
            }
        }
        for k in 0..256 {
            let [i, l, j, m, kk, n, p, q] = unflat::<8>(k);
            let v = self.b8([i, l, j, m, kk, n, p, q]);
            if v != self.b8([j, m, i, l, kk, n, p, q])
                || v != self.b8([kk, n, j, m, i, l, p, q])
                || v != self.b8([p, q, j, m, kk, n, i, l])
            {
                bad += 1;
            }
        }
        bad
    }

    /// `N2^(i) = B^{ijk}_{lmn} ∂_l(∂_m u^j ∂_n u^k)`.
    pub fn n2(&self) -> [Polynomial; 2] {
        let jets = Jets::new();
        core::array::from_fn(|ii| {
            let mut acc = jets.zero();
            for k in 0..64 {
                let [i, l, j, m, kk, n] = unflat::<6>(k);
                let c = self.b6([i, l, j, m, kk, n]);
                if i != ii + 1 || c.is_zero() {
                    continue;
                }
                let inner = &jets.g(j, m) * &jets.g(kk, n);
                acc = &acc + &total_derivative(&inner, l).expect("first order").scale(c);
            }
            acc
        })
    }

    /// `N3^(i) = B^{ijkp}_{lmnq} ∂_l(∂_m u^j ∂_n u^k ∂_q u^p)`.
    pub fn n3(&self) -> [Polynomial; 2] {
        let jets = Jets::new();
        core::array::from_fn(|ii| {
            let mut acc = jets.zero();
            for k in 0..256 {
                let [i, l, j, m, kk, n, p, q] = unflat::<8>(k);
                let c = self.b8([i, l, j, m, kk, n, p, q]);
                if i != ii + 1 || c.is_zero() {
                    continue;
                }
                let inner = &(&jets.g(j, m) * &jets.g(kk, n)) * &jets.g(p, q);
                acc = &acc + &total_derivative(&inner, l).expect("first order").scale(c);
            }
            acc
        })
    }

    /// Full contraction of `B6` with one vector per index slot.
    pub fn contract6(&self, vecs: [&[Polynomial; 2]; 6]) -> Polynomial {
        let jets = Jets::new();
        let mut acc = jets.zero();
        for k in 0..64 {
            let idx = unflat::<6>(k);
            let c = self.b6(idx);
            if c.is_zero() {
                continue;
            }
            let prod = (0..6).fold(jets.constant(c.clone()), |p, s| &p * &vecs[s][idx[s] - 1]);
            acc = &acc + &prod;
        }
        acc
    }

    /// Full contraction of `B8` with one vector per index slot.
    pub fn contract8(&self, vecs: [&[Polynomial; 2]; 8]) -> Polynomial {
        let jets = Jets::new();
        let mut acc = jets.zero();
        for k in 0..256 {
            let idx = unflat::<8>(k);
            let c = self.b8(idx);
            if c.is_zero() {
                continue;
            }
            let prod = (0..8).fold(jets.constant(c.clone()), |p, s| &p * &vecs[s][idx[s] - 1]);
            acc = &acc + &prod;
        }
        acc
    }
}
