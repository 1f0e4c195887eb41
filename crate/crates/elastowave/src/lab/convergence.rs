use serde::{Deserialize, Serialize};

use super::data::{DataSpec, Polarization};
use crate::error::SimError;
use crate::sim::{run_with_state, Grid, NumericMaterial, SimConfig, State, Termination, TimeStep};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConvergenceStudy {
    pub n: Vec<usize>,
    /// `max |u_N − u_{2N}|` on the coarse points.
    pub differences: Vec<f64>,
    /// `log2(d_k / d_{k+1})`.
    pub order: Vec<f64>,
}

impl ConvergenceStudy {
    pub fn min_order(&self) -> f64 {
        self.order.iter().copied().fold(f64::INFINITY, f64::min)
    }
}

/// Self-convergence under simultaneous grid and time-step halving.
///
/// `cfg` is run at its own grid and `levels − 1` refinements; every run must
/// complete.
pub fn convergence_study(cfg: &SimConfig, levels: usize) -> Result<ConvergenceStudy, SimError> {
    if levels < 3 {
        return Err(SimError::InvalidConfig("need at least three levels".into()));
    }
    let mut grids = vec![cfg.grid];
    for _ in 1..levels {
        grids.push(grids.last().unwrap().refined());
    }
    let mut finals: Vec<State> = Vec::with_capacity(levels);
    for (k, g) in grids.iter().enumerate() {
        let mut c = cfg.clone();
        c.grid = *g;
        c.sample_every = usize::MAX;
        if let TimeStep::Dt(dt) = cfg.step {
            c.step = TimeStep::Dt(dt / (1 << k) as f64);
        }
        let (report, state) = run_with_state(&c)?;
        if report.termination != Termination::Completed {
            return Err(SimError::Numerical(format!(
                "run at N = {} stopped early: {:?}",
                g.n(),
                report.termination
            )));
        }
        finals.push(state);
    }
    let mut differences = vec![];
    for k in 0..levels - 1 {
        let fine = finals[k + 1].u.coarsen(&grids[k + 1]);
        differences.push(finals[k].u.max_diff(&fine));
    }
    let order = differences.windows(2).map(|w| (w[0] / w[1]).log2()).collect();
    Ok(ConvergenceStudy {
        n: grids.iter().map(Grid::n).collect(),
        differences,
        order,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SpeedMeasurement {
    pub polarization: Polarization,
    pub expected: f64,
    pub measured: f64,
    pub relative_error: f64,
}

/// Energy-weighted centroid in `x` of the state.
fn energy_centroid(s: &State, g: &Grid, m: &NumericMaterial) -> f64 {
    let w = m.energy();
    let n = g.n();
    let mut num = 0.0;
    let mut den = 0.0;
    let mut rows: [Vec<f64>; 4] = std::array::from_fn(|_| vec![0.0; n]);
    for j in 0..n {
        crate::sim::rhs::gradient_rows(&s.u, j, g, &mut rows);
        for i in 0..n {
            let k = j * n + i;
            let [a, b, c, d] = [rows[0][i], rows[1][i], rows[2][i], rows[3][i]];
            let v2 = s.v.comp[0][k].powi(2) + s.v.comp[1][k].powi(2);
            let e = 0.5 * v2 + w.density(a + d, b - c, a * d - b * c);
            num += g.coord(i) * e;
            den += e;
        }
    }
    num / den
}

/// Launches a right-moving plane pulse along `x` and measures its speed from
/// the displacement of the energy centroid.
pub fn speed_test(
    m: &NumericMaterial,
    polarization: Polarization,
    grid: Grid,
    width: f64,
    eps: f64,
) -> Result<SpeedMeasurement, SimError> {
    let expected = match polarization {
        Polarization::Pressure => m.c1(),
        Polarization::Shear => m.c2(),
    };
    let l = grid.l();
    let center = -0.25 * l;
    // Stop before the front leaves the right half of the box.
    let travel = 0.5 * l - 2.0 * width;
    let end_time = travel / expected;
    let data = DataSpec::Pulse {
        eps,
        polarization,
        center,
        width,
        exponent: 6,
    };
    let mut cfg = SimConfig::new(grid, *m, data.clone(), end_time);
    cfg.step = TimeStep::Cfl(0.5);
    cfg.sample_every = usize::MAX;
    let start = crate::lab::data::initial_state(&data, &grid, m)?;
    let x0 = energy_centroid(&start, &grid, m);
    let (report, fin) = run_with_state(&cfg)?;
    if report.termination != Termination::Completed {
        return Err(SimError::Numerical("pulse run stopped early".into()));
    }
    let measured = (energy_centroid(&fin, &grid, m) - x0) / end_time;
    Ok(SpeedMeasurement {
        polarization,
        expected,
        measured,
        relative_error: (measured - expected).abs() / expected,
    })
}
