use crate::poly::jet::Jets;
use crate::poly::{rat, Polynomial};

/// 2×2 matrix of polynomials, entries indexed `[row][col]` from zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix2Poly(pub [[Polynomial; 2]; 2]);

impl Matrix2Poly {
    pub fn get(&self, row: usize, col: usize) -> &Polynomial {
        &self.0[row][col]
    }

    pub fn transpose(&self) -> Self {
        let e = &self.0;
        Matrix2Poly([
            [e[0][0].clone(), e[1][0].clone()],
            [e[0][1].clone(), e[1][1].clone()],
        ])
    }

    pub fn add(&self, other: &Self) -> Self {
        Matrix2Poly(core::array::from_fn(|r| {
            core::array::from_fn(|c| &self.0[r][c] + &other.0[r][c])
        }))
    }

    pub fn mul(&self, other: &Self) -> Self {
        Matrix2Poly(core::array::from_fn(|r| {
            core::array::from_fn(|c| {
                &(&self.0[r][0] * &other.0[0][c]) + &(&self.0[r][1] * &other.0[1][c])
            })
        }))
    }

    pub fn trace(&self) -> Polynomial {
        &self.0[0][0] + &self.0[1][1]
    }

    pub fn det(&self) -> Polynomial {
        &(&self.0[0][0] * &self.0[1][1]) - &(&self.0[0][1] * &self.0[1][0])
    }
}

/// `G` with symbolic entries `G_il = ∂_l u^i`.
pub fn generic_gradient(jets: &Jets) -> Matrix2Poly {
    Matrix2Poly([
        [jets.g(1, 1), jets.g(1, 2)],
        [jets.g(2, 1), jets.g(2, 2)],
    ])
}

/// `C = G + Gᵀ + G Gᵀ`.
pub fn strain_tensor(g: &Matrix2Poly) -> Matrix2Poly {
    let gt = g.transpose();
    g.add(&gt).add(&g.mul(&gt))
}

/// `(k1, k2) = (tr C, ((tr C)² − tr C²)/2)`; eigenvalues are never formed.
pub fn principal_invariants(c: &Matrix2Poly) -> (Polynomial, Polynomial) {
    let k1 = c.trace();
    let k2 = (&k1.pow(2) - &c.mul(c).trace()).scale(&rat(1, 2));
    (k1, k2)
}
