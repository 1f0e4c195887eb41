use serde::{Deserialize, Serialize};

use crate::error::SimError;

/// Doubly periodic `N × N` grid on `[−L/2, L/2)²`, stored row-major with
/// `x` varying fastest.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "GridSpec", into = "GridSpec")]
pub struct Grid {
    n: usize,
    l: f64,
}

#[derive(Serialize, Deserialize)]
struct GridSpec {
    #[serde(rename = "N")]
    n: usize,
    #[serde(rename = "L")]
    l: f64,
}

impl TryFrom<GridSpec> for Grid {
    type Error = SimError;
    fn try_from(s: GridSpec) -> Result<Self, SimError> {
        Grid::new(s.n, s.l)
    }
}

impl From<Grid> for GridSpec {
    fn from(g: Grid) -> Self {
        GridSpec { n: g.n, l: g.l }
    }
}

impl Grid {
    pub fn new(n: usize, l: f64) -> Result<Self, SimError> {
        if n < 16 || !n.is_power_of_two() {
            return Err(SimError::InvalidConfig(format!(
                "grid size must be a power of two >= 16, got {n}"
            )));
        }
        if !(l.is_finite() && l > 0.0) {
            return Err(SimError::InvalidConfig(format!("box length must be positive, got {l}")));
        }
        Ok(Grid { n, l })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn l(&self) -> f64 {
        self.l
    }

    pub fn h(&self) -> f64 {
        self.l / self.n as f64
    }

    pub fn len(&self) -> usize {
        self.n * self.n
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Coordinate of grid index `i` along either axis.
    pub fn coord(&self, i: usize) -> f64 {
        -0.5 * self.l + i as f64 * self.h()
    }

    pub fn idx(&self, i: usize, j: usize) -> usize {
        j * self.n + i
    }

    /// Same box with twice the points per axis.
    pub fn refined(&self) -> Self {
        Grid { n: self.n * 2, l: self.l }
    }

    /// Samples `f(x, y)` at every grid point.
    pub fn sample(&self, f: impl Fn(f64, f64) -> f64) -> Vec<f64> {
        let mut out = Vec::with_capacity(self.len());
        for j in 0..self.n {
            let y = self.coord(j);
            for i in 0..self.n {
                out.push(f(self.coord(i), y));
            }
        }
        out
    }
}

/// Two-component field on a [`Grid`].
#[derive(Debug, Clone, PartialEq)]
pub struct VectorField {
    pub comp: [Vec<f64>; 2],
}

impl VectorField {
    pub fn zeros(g: &Grid) -> Self {
        VectorField {
            comp: [vec![0.0; g.len()], vec![0.0; g.len()]],
        }
    }

    pub fn from_components(a: Vec<f64>, b: Vec<f64>) -> Self {
        assert_eq!(a.len(), b.len(), "components must share a grid");
        VectorField { comp: [a, b] }
    }

    pub fn sample(g: &Grid, f: impl Fn(f64, f64) -> [f64; 2]) -> Self {
        VectorField::from_components(g.sample(|x, y| f(x, y)[0]), g.sample(|x, y| f(x, y)[1]))
    }

    pub fn len(&self) -> usize {
        self.comp[0].len()
    }

    pub fn is_empty(&self) -> bool {
        self.comp[0].is_empty()
    }

    pub fn max_abs(&self) -> f64 {
        self.comp
            .iter()
            .flat_map(|c| c.iter())
            .fold(0.0f64, |m, v| m.max(v.abs()))
    }

    pub fn is_finite(&self) -> bool {
        self.comp.iter().all(|c| c.iter().all(|v| v.is_finite()))
    }

    /// `self + a · other`.
    pub fn axpy(&self, a: f64, other: &VectorField) -> VectorField {
        let f = |k: usize| -> Vec<f64> {
            self.comp[k]
                .iter()
                .zip(&other.comp[k])
                .map(|(x, y)| x + a * y)
                .collect()
        };
        VectorField { comp: [f(0), f(1)] }
    }

    /// Max-norm distance.
    pub fn max_diff(&self, other: &VectorField) -> f64 {
        (0..2)
            .flat_map(|k| self.comp[k].iter().zip(&other.comp[k]))
            .fold(0.0f64, |m, (a, b)| m.max((a - b).abs()))
    }

    /// Every second point per axis; exact restriction from a refined grid.
    pub fn coarsen(&self, fine: &Grid) -> VectorField {
        let n = fine.n();
        let pick = |c: &Vec<f64>| -> Vec<f64> {
            (0..n / 2)
                .flat_map(|j| (0..n / 2).map(move |i| c[2 * j * n + 2 * i]))
                .collect()
        };
        VectorField::from_components(pick(&self.comp[0]), pick(&self.comp[1]))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_grids() {
        assert!(Grid::new(8, 1.0).is_err());
        assert!(Grid::new(48, 1.0).is_err());
        assert!(Grid::new(32, 0.0).is_err());
        assert!(Grid::new(32, 2.0).is_ok());
    }

    #[test]
    fn coarsening_keeps_shared_points() {
        let g = Grid::new(32, 4.0).unwrap();
        let f = g.refined();
        let fine = VectorField::sample(&f, |x, y| [x + 2.0 * y, x * y]);
        let coarse = VectorField::sample(&g, |x, y| [x + 2.0 * y, x * y]);
        assert_eq!(fine.coarsen(&f), coarse);
    }
}
