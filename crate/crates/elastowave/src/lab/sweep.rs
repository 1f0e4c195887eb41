use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::data::{DataSpec, RadialProfile};
use crate::error::SimError;
use crate::sim::{run, Grid, NumericMaterial, SimConfig, Termination, TimeStep};

/// Relative slack allowed in lifespan comparisons.
pub const TIMING_SLACK: f64 = 0.05;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LabelledMaterial {
    pub label: String,
    pub material: NumericMaterial,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepSpec {
    pub eps: Vec<f64>,
    /// Material satisfying both null conditions.
    pub null: LabelledMaterial,
    /// Material violating the first null condition.
    pub nonlinear: LabelledMaterial,
    pub grid: Grid,
    pub step: TimeStep,
    /// Time budget per cell.
    pub end_time: f64,
    /// Radial profile; its amplitude is replaced by each `eps`.
    pub profile: RadialProfile,
    pub theta: Option<f64>,
    pub sample_every: usize,
    /// Steepening factor on `max|∇²u|`; `None` keeps only the gradient rule.
    #[serde(default)]
    pub steepening: Option<f64>,
}

impl SweepSpec {
    pub fn validate(&self) -> Result<(), SimError> {
        let (a, b) = (&self.null.material, &self.nonlinear.material);
        if a.c1sq != b.c1sq || a.c2sq != b.c2sq {
            return Err(SimError::InvalidConfig(
                "swept materials must share c1 and c2".into(),
            ));
        }
        if self.eps.iter().any(|e| !(e.is_finite() && *e >= 0.0)) {
            return Err(SimError::InvalidConfig("eps values must be non-negative".into()));
        }
        for cfg in self.cells() {
            cfg.1.validate()?;
        }
        Ok(())
    }

    fn cells(&self) -> Vec<(String, SimConfig, f64)> {
        let mut out = vec![];
        for &eps in &self.eps {
            for lm in [&self.null, &self.nonlinear] {
                let mut profile = self.profile;
                profile.eps = eps;
                let cfg = SimConfig {
                    grid: self.grid,
                    material: lm.material,
                    step: self.step,
                    end_time: self.end_time,
                    data: DataSpec::Radial(profile),
                    theta: self.theta,
                    sample_every: self.sample_every,
                    steepening: self.steepening,
                };
                out.push((lm.label.clone(), cfg, eps));
            }
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepCell {
    pub eps: f64,
    pub material: String,
    pub termination: Termination,
    /// `t*`, or the budget for runs that completed.
    pub lifespan: f64,
    pub completed: bool,
    /// Not part of the deterministic report.
    #[serde(skip)]
    pub wall_time: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepResult {
    pub cells: Vec<SweepCell>,
    pub budget: f64,
    /// Null lifespan ≥ (1 − slack) × non-null lifespan at every eps.
    pub ordering_holds: bool,
    /// Lifespan non-increasing in eps (with slack) for each material.
    pub monotone: bool,
    /// `(eps, material, log(1/eps), log t*)` for blown-up cells.
    pub log_table: Vec<(f64, String, f64, f64)>,
}

impl SweepResult {
    pub fn cell(&self, eps: f64, material: &str) -> Option<&SweepCell> {
        self.cells
            .iter()
            .find(|c| c.eps == eps && c.material == material)
    }
}

/// Runs every `(eps, material)` cell concurrently; a failing cell is recorded,
/// never fatal.
pub fn lifespan_sweep(spec: &SweepSpec) -> Result<SweepResult, SimError> {
    spec.validate()?;
    let cells: Vec<SweepCell> = spec
        .cells()
        .into_par_iter()
        .map(|(label, cfg, eps)| {
            let start = Instant::now();
            let termination = match run(&cfg) {
                Ok(r) => r.termination,
                Err(_) => Termination::Nonfinite { t: 0.0 },
            };
            let lifespan = termination.stop_time().unwrap_or(spec.end_time);
            SweepCell {
                eps,
                material: label,
                termination,
                lifespan,
                completed: termination == Termination::Completed,
                wall_time: start.elapsed().as_secs_f64(),
            }
        })
        .collect();

    let find = |eps: f64, label: &str| {
        cells
            .iter()
            .find(|c| c.eps == eps && c.material == label)
            .expect("cell exists")
    };
    let ordering_holds = spec.eps.iter().all(|&e| {
        let (n, g) = (find(e, &spec.null.label), find(e, &spec.nonlinear.label));
        n.lifespan >= (1.0 - TIMING_SLACK) * g.lifespan
    });
    let mut sorted = spec.eps.clone();
    sorted.sort_by(f64::total_cmp);
    let monotone = [&spec.null.label, &spec.nonlinear.label].iter().all(|label| {
        sorted.windows(2).all(|w| {
            find(w[0], label).lifespan >= (1.0 - TIMING_SLACK) * find(w[1], label).lifespan
        })
    });
    let log_table = cells
        .iter()
        .filter(|c| !c.completed && c.eps > 0.0)
        .map(|c| (c.eps, c.material.clone(), (1.0 / c.eps).ln(), c.lifespan.ln()))
        .collect();
    Ok(SweepResult {
        cells,
        budget: spec.end_time,
        ordering_holds,
        monotone,
        log_table,
    })
}
