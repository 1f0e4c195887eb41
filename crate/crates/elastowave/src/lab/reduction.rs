use elastowave_core::reduction::{reduction_check as symbolic_check, ReductionReport};
use elastowave_core::MaterialModel;
use serde::{Deserialize, Serialize};

use super::data::{radial_data, RadialProfile};
use crate::error::SimError;
use crate::sim::{full_rhs, reduced_rhs, Grid, NumericMaterial};

/// Max-norm residual between full and reduced assemblies at several resolutions.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NumericReduction {
    pub n: Vec<usize>,
    pub residual: Vec<f64>,
    /// `log2(r_k / r_{k+1})` between successive grids.
    pub order: Vec<f64>,
}

impl NumericReduction {
    pub fn min_order(&self) -> f64 {
        self.order.iter().copied().fold(f64::INFINITY, f64::min)
    }
}

/// `max |full_rhs − reduced_rhs|` on radial data.
pub fn reduction_residual(
    m: &NumericMaterial,
    profile: &RadialProfile,
    g: &Grid,
) -> Result<f64, SimError> {
    let (u, _) = radial_data(profile, g)?;
    Ok(full_rhs(&u, g, m).max_diff(&reduced_rhs(&u, g, m)))
}

pub fn reduction_study(
    m: &NumericMaterial,
    profile: &RadialProfile,
    l: f64,
    ns: &[usize],
) -> Result<NumericReduction, SimError> {
    let residual = ns
        .iter()
        .map(|&n| reduction_residual(m, profile, &Grid::new(n, l)?))
        .collect::<Result<Vec<_>, _>>()?;
    let order = residual.windows(2).map(|w| (w[0] / w[1]).log2()).collect();
    Ok(NumericReduction {
        n: ns.to_vec(),
        residual,
        order,
    })
}

/// Symbolic reduction plus an optional numeric convergence study.
#[derive(Debug, Clone)]
pub struct ReductionVerdict {
    pub symbolic: ReductionReport,
    pub numeric: Option<NumericReduction>,
}

impl ReductionVerdict {
    pub fn passed(&self, min_order: f64) -> bool {
        self.symbolic.passed() && self.numeric.as_ref().map_or(true, |n| n.min_order() >= min_order)
    }
}

pub fn reduction_check(
    model: &MaterialModel,
    numeric: Option<(&RadialProfile, f64, &[usize])>,
) -> Result<ReductionVerdict, SimError> {
    let symbolic = symbolic_check(model)?;
    let numeric = match numeric {
        Some((p, l, ns)) => Some(reduction_study(&NumericMaterial::from_model(model)?, p, l, ns)?),
        None => None,
    };
    Ok(ReductionVerdict { symbolic, numeric })
}
