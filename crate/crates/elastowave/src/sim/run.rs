use serde::{Deserialize, Serialize};

use super::diagnostics::{diagnostics, Sample};
use super::grid::Grid;
use super::integrate::{rk4_step, State};
use super::material::NumericMaterial;
use crate::error::SimError;
use crate::lab::data::{initial_state, DataSpec};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TimeStep {
    /// `dt = cfl · h / c1`.
    Cfl(f64),
    Dt(f64),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SimConfig {
    pub grid: Grid,
    pub material: NumericMaterial,
    pub step: TimeStep,
    pub end_time: f64,
    pub data: DataSpec,
    /// Gradient threshold; defaults to `max(1, 10 · max|∇u(0)|)`.
    pub theta: Option<f64>,
    /// Steps between samples.
    pub sample_every: usize,
    /// Optional second stop rule: `max|∇²u|` reaching this multiple of its
    /// initial value marks steepening (shock formation).
    #[serde(default)]
    pub steepening: Option<f64>,
}

impl SimConfig {
    pub fn new(grid: Grid, material: NumericMaterial, data: DataSpec, end_time: f64) -> Self {
        SimConfig {
            grid,
            material,
            step: TimeStep::Cfl(0.5),
            end_time,
            data,
            theta: None,
            sample_every: 10,
            steepening: None,
        }
    }

    pub fn validate(&self) -> Result<(), SimError> {
        self.material.validate()?;
        self.data.validate(&self.grid)?;
        match self.step {
            TimeStep::Cfl(c) if !(c > 0.0 && c <= 1.0) => {
                return Err(SimError::InvalidConfig(format!("CFL must lie in (0, 1], got {c}")))
            }
            TimeStep::Dt(dt) if !(dt > 0.0 && dt.is_finite()) => {
                return Err(SimError::InvalidConfig(format!("dt must be positive, got {dt}")))
            }
            _ => {}
        }
        if !(self.end_time >= 0.0 && self.end_time.is_finite()) {
            return Err(SimError::InvalidConfig("end time must be non-negative".into()));
        }
        if self.sample_every == 0 {
            return Err(SimError::InvalidConfig("sample_every must be at least 1".into()));
        }
        if let Some(t) = self.theta {
            if !(t > 0.0) {
                return Err(SimError::InvalidConfig("theta must be positive".into()));
            }
        }
        if let Some(f) = self.steepening {
            if !(f > 1.0 && f.is_finite()) {
                return Err(SimError::InvalidConfig("steepening factor must exceed 1".into()));
            }
        }
        Ok(())
    }

    /// Number of steps and the step size that lands exactly on the end time.
    pub fn schedule(&self) -> (usize, f64) {
        let target = match self.step {
            TimeStep::Cfl(c) => c * self.grid.h() / self.material.c1(),
            TimeStep::Dt(dt) => dt,
        };
        if self.end_time == 0.0 {
            return (0, target);
        }
        let steps = (self.end_time / target).ceil().max(1.0) as usize;
        (steps, self.end_time / steps as f64)
    }

    /// Time at which the fastest front from the data support reaches the box edge.
    pub fn wrap_time(&self) -> Option<f64> {
        self.data
            .support_radius()
            .map(|r| (0.5 * self.grid.l() - r) / self.material.c1())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Termination {
    Completed,
    Blowup { t: f64 },
    /// `max|∇²u|` crossed the steepening threshold.
    Steepening { t: f64 },
    Nonfinite { t: f64 },
}

impl Termination {
    /// `t*` if the run stopped early.
    pub fn stop_time(&self) -> Option<f64> {
        match self {
            Termination::Completed => None,
            Termination::Blowup { t }
            | Termination::Steepening { t }
            | Termination::Nonfinite { t } => Some(*t),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub termination: Termination,
    pub samples: Vec<Sample>,
    pub dt: f64,
    pub steps: usize,
    pub theta: f64,
    /// Threshold on `max|∇²u|`, if the steepening rule is active.
    pub steepening_threshold: Option<f64>,
    pub wrap_time: Option<f64>,
}

impl RunReport {
    pub fn first(&self) -> &Sample {
        &self.samples[0]
    }

    pub fn last(&self) -> &Sample {
        self.samples.last().expect("at least the initial sample")
    }

    /// `max |E(t) − E(0)| / |E(0)|` over the samples (absolute if `E(0) = 0`).
    pub fn energy_drift(&self) -> f64 {
        let e0 = self.first().energy;
        let scale = if e0 == 0.0 { 1.0 } else { e0.abs() };
        self.samples
            .iter()
            .map(|s| (s.energy - e0).abs() / scale)
            .fold(0.0, f64::max)
    }

    /// `max |P(t) − P(0)| / (1 + |P(0)|)`.
    pub fn momentum_drift(&self) -> f64 {
        let p0 = self.first().momentum;
        let scale = 1.0 + p0[0].hypot(p0[1]);
        self.samples
            .iter()
            .map(|s| (s.momentum[0] - p0[0]).hypot(s.momentum[1] - p0[1]) / scale)
            .fold(0.0, f64::max)
    }

    /// Largest `max|∇⊥·u| / max(max|∇u|, floor)` over the samples.
    pub fn max_curl_ratio(&self, floor: f64) -> f64 {
        self.samples
            .iter()
            .map(|s| s.curl_ratio(floor))
            .fold(0.0, f64::max)
    }
}

pub fn run(cfg: &SimConfig) -> Result<RunReport, SimError> {
    run_with_state(cfg).map(|(r, _)| r)
}

/// Integrates and also returns the final state.
pub fn run_with_state(cfg: &SimConfig) -> Result<(RunReport, State), SimError> {
    cfg.validate()?;
    let g = cfg.grid;
    let m = cfg.material;
    let state = initial_state(&cfg.data, &g, &m)?;
    run_from(cfg, state)
}

/// Integrates from an explicit initial state.
pub fn run_from(cfg: &SimConfig, mut state: State) -> Result<(RunReport, State), SimError> {
    cfg.validate()?;
    let (g, m) = (cfg.grid, cfg.material);
    let w = m.energy();
    let (steps, dt) = cfg.schedule();
    let first = diagnostics(&state, &g, &w);
    let theta = cfg.theta.unwrap_or_else(|| (10.0 * first.max_grad).max(1.0));
    let steep = cfg.steepening.map(|f| f * first.max_hess.max(1e-12));
    let mut samples = vec![first];
    let mut termination = Termination::Completed;
    for k in 1..=steps {
        state = rk4_step(&state, dt, &g, &m);
        if k == steps {
            state.t = cfg.end_time;
        }
        if k % cfg.sample_every != 0 && k != steps {
            continue;
        }
        let s = diagnostics(&state, &g, &w);
        let finite = s.energy.is_finite() && s.max_grad.is_finite() && state.is_finite();
        samples.push(s);
        if !finite {
            termination = Termination::Nonfinite { t: state.t };
            break;
        }
        if s.max_grad >= theta {
            termination = Termination::Blowup { t: state.t };
            break;
        }
        if steep.is_some_and(|th| s.max_hess >= th) {
            termination = Termination::Steepening { t: state.t };
            break;
        }
    }
    Ok((
        RunReport {
            termination,
            samples,
            dt,
            steps,
            theta,
            steepening_threshold: steep,
            wrap_time: cfg.wrap_time(),
        },
        state,
    ))
}
