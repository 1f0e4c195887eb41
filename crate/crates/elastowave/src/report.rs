//! Machine-readable output: JSON documents for structured results, CSV for
//! time series.
//!
//! Everything written by [`write_run`] and [`write_sweep`] apart from
//! `metadata.json` is a pure function of the configuration, so repeated runs
//! produce byte-identical files.

use std::fs;
use std::path::Path;
use std::time::SystemTime;

use elastowave_core::material::{
    AuditReport, DerivedCoefficients, EnergyExpansion, FieldFormEnergy, SymbolicRHS,
};
use elastowave_core::nullcond::{NullFlags, NullReport, TensorResiduals};
use elastowave_core::reduction::ReductionReport;
use elastowave_core::{Polynomial, Rational};
use serde_json::{json, Map, Value};

use crate::error::SimError;
use crate::lab::{SweepResult, ReductionVerdict};
use crate::sim::RunReport;

pub fn rational(r: &Rational) -> Value {
    Value::String(r.to_string())
}

/// Stable JSON form: the text rendering plus the sorted term list.
pub fn polynomial(p: &Polynomial) -> Value {
    let space = p.space();
    let terms: Vec<Value> = p
        .terms()
        .map(|(mono, c)| {
            let mut powers = Map::new();
            for (i, &e) in mono.exponents().iter().enumerate() {
                if e > 0 {
                    powers.insert(space.name(elastowave_core::Var(i)).to_string(), json!(e));
                }
            }
            json!({"coeff": rational(c), "powers": powers})
        })
        .collect();
    json!({"text": p.to_string(), "terms": terms})
}

fn pair(p: &[Polynomial; 2]) -> Value {
    json!([polynomial(&p[0]), polynomial(&p[1])])
}

pub fn coefficients(k: &DerivedCoefficients) -> Value {
    let names = ["d1", "d2", "d3", "e1", "e2", "e3", "e4", "e5", "e6", "c1sq", "c2sq"];
    let mut out = Map::new();
    for name in names {
        out.insert(name.into(), rational(k.get(name).expect("known coefficient")));
    }
    Value::Object(out)
}

pub fn energy(e: &EnergyExpansion) -> Value {
    json!({"l2": polynomial(&e.l2), "l3": polynomial(&e.l3), "l4": polynomial(&e.l4)})
}

pub fn field_energy(e: &FieldFormEnergy) -> Value {
    json!({"l2": polynomial(&e.l2), "l3": polynomial(&e.l3), "l4": polynomial(&e.l4)})
}

pub fn rhs(r: &SymbolicRHS) -> Value {
    json!({
        "full": pair(&r.full),
        "linear": pair(&r.linear),
        "quadratic": pair(&r.quadratic),
        "cubic": pair(&r.cubic),
    })
}

pub fn audit(a: &AuditReport) -> Value {
    let rows: Vec<Value> = a
        .coefficients
        .iter()
        .map(|c| {
            json!({
                "name": c.name,
                "printed": rational(&c.printed),
                "derived": rational(&c.derived),
                "matches": c.matches,
            })
        })
        .collect();
    json!({
        "coefficients": rows,
        "l2_matches": a.l2_matches,
        "l3_matches": a.l3_matches,
        "l4_plus_matches": a.l4_plus_matches,
        "l4_minus_matches": a.l4_minus_matches,
        "mismatches": a.mismatches().map(|c| c.name).collect::<Vec<_>>(),
    })
}

fn flags(f: &NullFlags) -> Value {
    json!({"first": f.first, "second": f.second})
}

fn tensor_residuals(t: &TensorResiduals) -> Value {
    json!({
        "b6_omega": polynomial(&t.b6_omega),
        "b8_omega": polynomial(&t.b8_omega),
        "b8_perp": polynomial(&t.b8_perp),
    })
}

pub fn null_report(r: &NullReport) -> Value {
    json!({
        "first_null": r.first_null,
        "second_null": r.second_null,
        "procedures_agree": r.procedures_agree(),
        "closed_forms_hold": r.closed_forms_hold,
        "restriction": flags(&r.restriction),
        "sigma": flags(&r.sigma),
        "tensor": flags(&r.tensor),
        "l3_pressure": polynomial(&r.l3_pressure),
        "l3_shear": polynomial(&r.l3_shear),
        "l4_pressure": polynomial(&r.l4_pressure),
        "l4_shear": polynomial(&r.l4_shear),
        "tensor_residuals": tensor_residuals(&r.tensor_residuals),
        "coefficients": coefficients(&r.coefficients),
    })
}

pub fn reduction(r: &ReductionReport) -> Value {
    json!({
        "passed": r.passed(),
        "exact": r.exact(),
        "e2_vanishes": r.e2_vanishes(),
        "single_speed_null": r.single_speed_null(),
        "linear_residual": pair(&r.linear_residual),
        "quadratic_residual": pair(&r.quadratic_residual),
        "cubic_residual": pair(&r.cubic_residual),
        "e2_term": pair(&r.e2_term),
        "single_speed_quadratic": pair(&r.single_speed_quadratic),
        "single_speed_cubic": pair(&r.single_speed_cubic),
    })
}

pub fn reduction_verdict(v: &ReductionVerdict, min_order: f64) -> Value {
    json!({
        "passed": v.passed(min_order),
        "min_order": min_order,
        "symbolic": reduction(&v.symbolic),
        "numeric": v.numeric,
    })
}

fn write_json(path: &Path, v: &Value) -> Result<(), SimError> {
    let mut text = serde_json::to_string_pretty(v)?;
    text.push('\n');
    fs::write(path, text)?;
    Ok(())
}

fn write_metadata(dir: &Path, wall_time: f64, extra: Value) -> Result<(), SimError> {
    let stamp = SystemTime::now()
        .duration_since(SystemTime::UNIX_EPOCH)
        .map(|d| d.as_secs())
        .unwrap_or(0);
    write_json(
        &dir.join("metadata.json"),
        &json!({
            "version": env!("CARGO_PKG_VERSION"),
            "unix_time": stamp,
            "wall_time_s": wall_time,
            "threads": rayon::current_num_threads(),
            "details": extra,
        }),
    )
}

/// Writes `series.csv` with columns `t, E, Px, Py, maxgrad, maxcurl`.
pub fn write_series(path: &Path, report: &RunReport) -> Result<(), SimError> {
    let mut w = csv::Writer::from_path(path)?;
    w.write_record(["t", "E", "Px", "Py", "maxgrad", "maxcurl"])?;
    for s in &report.samples {
        w.write_record(
            [s.t, s.energy, s.momentum[0], s.momentum[1], s.max_grad, s.max_curl]
                .iter()
                .map(|x| format!("{x:e}")),
        )?;
    }
    w.flush()?;
    Ok(())
}

/// `report.json`, `series.csv` and `metadata.json` for one run.
pub fn write_run(dir: &Path, report: &RunReport, config: &Value, wall_time: f64) -> Result<(), SimError> {
    fs::create_dir_all(dir)?;
    let doc = json!({
        "config": config,
        "report": report,
        "energy_drift": report.energy_drift(),
        "momentum_drift": report.momentum_drift(),
    });
    write_json(&dir.join("report.json"), &doc)?;
    write_series(&dir.join("series.csv"), report)?;
    write_metadata(dir, wall_time, Value::Null)
}

/// `sweep.json` (deterministic), `sweep.csv` (with wall times) and `metadata.json`.
pub fn write_sweep(dir: &Path, result: &SweepResult, wall_time: f64) -> Result<(), SimError> {
    fs::create_dir_all(dir)?;
    write_json(&dir.join("sweep.json"), &serde_json::to_value(result)?)?;
    let mut w = csv::Writer::from_path(dir.join("sweep.csv"))?;
    w.write_record(["eps", "material", "status", "lifespan", "completed", "wall_time_s"])?;
    for c in &result.cells {
        let status = match c.termination {
            crate::sim::Termination::Completed => "completed",
            crate::sim::Termination::Blowup { .. } => "blowup",
            crate::sim::Termination::Steepening { .. } => "steepening",
            crate::sim::Termination::Nonfinite { .. } => "nonfinite",
        };
        w.write_record([
            format!("{}", c.eps),
            c.material.clone(),
            status.to_string(),
            format!("{}", c.lifespan),
            c.completed.to_string(),
            format!("{:.3}", c.wall_time),
        ])?;
    }
    w.flush()?;
    let cells: Vec<f64> = result.cells.iter().map(|c| c.wall_time).collect();
    write_metadata(dir, wall_time, json!({"cell_wall_times_s": cells}))
}
