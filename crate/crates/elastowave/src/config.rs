//! JSON configuration.
//!
//! Rational inputs accept JSON numbers or strings such as `"-3/2"`, `"0.25"`
//! or `"1e-3"`; numbers are read through their decimal text, so `1.5` is
//! exactly `3/2`.

use std::path::{Path, PathBuf};

use elastowave_core::poly::parse_rational;
use elastowave_core::{MaterialModel, Rational};
use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use crate::error::SimError;
use crate::lab::{DataSpec, LabelledMaterial, RadialProfile, SweepSpec};
use crate::sim::{Grid, NumericMaterial, SimConfig, TimeStep};

fn invalid(msg: impl Into<String>) -> SimError {
    SimError::InvalidConfig(msg.into())
}

pub fn rational_from_json(v: &Value) -> Result<Rational, SimError> {
    match v {
        Value::Number(n) => parse_rational(&n.to_string()).map_err(SimError::from),
        Value::String(s) => parse_rational(s).map_err(SimError::from),
        other => Err(invalid(format!("expected a rational, got {other}"))),
    }
}

fn f64_from_json(v: &Value) -> Result<f64, SimError> {
    use num_traits::ToPrimitive;
    match v {
        Value::Number(n) => n.as_f64().ok_or_else(|| invalid("bad number")),
        _ => rational_from_json(v)?
            .to_f64()
            .ok_or_else(|| invalid("number out of range")),
    }
}

/// Named materials available as `{"preset": …}`.
pub fn preset(name: &str) -> Result<MaterialModel, SimError> {
    match name {
        "linear" => Ok(MaterialModel::linear()),
        "null_example" | "null" => Ok(MaterialModel::null_example()),
        "genuinely_nonlinear" | "nonlinear" => Ok(MaterialModel::genuinely_nonlinear_example()),
        other => Err(invalid(format!("unknown material preset '{other}'"))),
    }
}

/// A material given either as `σ` coefficients or as direct system coefficients.
#[derive(Debug, Clone, PartialEq)]
pub enum MaterialSpec {
    Sigma(MaterialModel),
    Coefficients(NumericMaterial),
}

impl MaterialSpec {
    pub fn from_json(v: &Value) -> Result<Self, SimError> {
        let obj = v.as_object().ok_or_else(|| invalid("material must be an object"))?;
        let present: Vec<&str> = ["sigma", "coefficients", "preset"]
            .into_iter()
            .filter(|k| obj.contains_key(*k))
            .collect();
        if present.len() != 1 {
            return Err(invalid(
                "material needs exactly one of 'sigma', 'coefficients' or 'preset'",
            ));
        }
        let spec = match present[0] {
            "preset" => {
                let name = obj["preset"].as_str().ok_or_else(|| invalid("preset must be a string"))?;
                MaterialSpec::Sigma(preset(name)?)
            }
            "sigma" => MaterialSpec::Sigma(sigma_list(&obj["sigma"])?),
            _ => MaterialSpec::Coefficients(coefficient_list(&obj["coefficients"])?),
        };
        let switches = ["include_n2", "include_n3"];
        for key in obj.keys() {
            if !present.contains(&key.as_str()) && !switches.contains(&key.as_str()) {
                return Err(invalid(format!("unknown material field '{key}'")));
            }
        }
        Ok(spec)
    }

    pub fn model(&self) -> Result<&MaterialModel, SimError> {
        match self {
            MaterialSpec::Sigma(m) => Ok(m),
            MaterialSpec::Coefficients(_) => Err(invalid(
                "this command needs the material as sigma coefficients",
            )),
        }
    }

    pub fn numeric(&self) -> Result<NumericMaterial, SimError> {
        match self {
            MaterialSpec::Sigma(m) => NumericMaterial::from_model(m),
            MaterialSpec::Coefficients(n) => Ok(*n),
        }
    }
}

fn sigma_list(v: &Value) -> Result<MaterialModel, SimError> {
    let obj = v.as_object().ok_or_else(|| invalid("sigma must be an object"))?;
    let mut m = MaterialModel::zero();
    for (k, val) in obj {
        m.set(k, rational_from_json(val)?)
            .map_err(|_| invalid(format!("unknown sigma coefficient '{k}'")))?;
    }
    m.validate()?;
    Ok(m)
}

fn coefficient_list(v: &Value) -> Result<NumericMaterial, SimError> {
    let obj = v.as_object().ok_or_else(|| invalid("coefficients must be an object"))?;
    let names = ["c1sq", "c2sq", "d1", "d2", "d3", "e1", "e2", "e3", "e4", "e5", "e6"];
    for k in obj.keys() {
        if !names.contains(&k.as_str()) {
            return Err(invalid(format!("unknown coefficient '{k}'")));
        }
    }
    let get = |k: &str| obj.get(k).map_or(Ok(0.0), f64_from_json);
    for k in ["c1sq", "c2sq"] {
        if !obj.contains_key(k) {
            return Err(invalid(format!("missing coefficient '{k}'")));
        }
    }
    let m = NumericMaterial {
        c1sq: get("c1sq")?,
        c2sq: get("c2sq")?,
        d1: get("d1")?,
        d2: get("d2")?,
        d3: get("d3")?,
        e1: get("e1")?,
        e2: get("e2")?,
        e3: get("e3")?,
        e4: get("e4")?,
        e5: get("e5")?,
        e6: get("e6")?,
        include_n2: true,
        include_n3: true,
    };
    m.validate()?;
    Ok(m)
}

/// Applies the `include_n2` / `include_n3` switches of a material object.
fn apply_switches(v: &Value, mut m: NumericMaterial) -> Result<NumericMaterial, SimError> {
    for (key, slot) in [("include_n2", &mut m.include_n2), ("include_n3", &mut m.include_n3)] {
        if let Some(b) = v.get(key) {
            *slot = b.as_bool().ok_or_else(|| invalid(format!("{key} must be a boolean")))?;
        }
    }
    Ok(m)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TimeSection {
    #[serde(default)]
    pub cfl: Option<f64>,
    #[serde(default)]
    pub dt: Option<f64>,
    #[serde(rename = "T")]
    pub end_time: f64,
    #[serde(default = "default_stride")]
    pub sample_every: usize,
}

fn default_stride() -> usize {
    10
}

impl TimeSection {
    pub fn step(&self) -> Result<TimeStep, SimError> {
        match (self.cfl, self.dt) {
            (Some(c), None) => Ok(TimeStep::Cfl(c)),
            (None, Some(d)) => Ok(TimeStep::Dt(d)),
            (None, None) => Ok(TimeStep::Cfl(0.5)),
            _ => Err(invalid("give either cfl or dt, not both")),
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StopSection {
    #[serde(default)]
    pub theta: Option<f64>,
    #[serde(default)]
    pub steepening: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OutputSection {
    #[serde(default = "default_dir")]
    pub dir: PathBuf,
}

impl Default for OutputSection {
    fn default() -> Self {
        OutputSection { dir: default_dir() }
    }
}

fn default_dir() -> PathBuf {
    PathBuf::from("out")
}

/// Parsed `simulate` configuration.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub material: MaterialSpec,
    pub sim: SimConfig,
    pub output: OutputSection,
    /// The document as read, echoed into reports.
    pub source: Value,
}

fn section<T: serde::de::DeserializeOwned>(obj: &Map<String, Value>, key: &str) -> Result<T, SimError> {
    let v = obj.get(key).ok_or_else(|| invalid(format!("missing '{key}' section")))?;
    serde_json::from_value(v.clone()).map_err(|e| invalid(format!("{key}: {e}")))
}

fn optional_section<T: serde::de::DeserializeOwned + Default>(
    obj: &Map<String, Value>,
    key: &str,
) -> Result<T, SimError> {
    match obj.get(key) {
        None => Ok(T::default()),
        Some(v) => serde_json::from_value(v.clone()).map_err(|e| invalid(format!("{key}: {e}"))),
    }
}

fn check_keys(obj: &Map<String, Value>, allowed: &[&str]) -> Result<(), SimError> {
    match obj.keys().find(|k| !allowed.contains(&k.as_str())) {
        Some(k) => Err(invalid(format!("unknown section '{k}'"))),
        None => Ok(()),
    }
}

fn material_section(obj: &Map<String, Value>, key: &str) -> Result<(MaterialSpec, NumericMaterial), SimError> {
    let v = obj.get(key).ok_or_else(|| invalid(format!("missing '{key}' section")))?;
    let spec = MaterialSpec::from_json(v)?;
    let numeric = apply_switches(v, spec.numeric()?)?;
    Ok((spec, numeric))
}

/// Reads `data`, accepting the flat radial form `{kind, eps, r0, width, exponent}`
/// as shorthand for a centred or ring displacement bump.
fn data_section(obj: &Map<String, Value>) -> Result<DataSpec, SimError> {
    let mut v = obj.get("data").cloned().ok_or_else(|| invalid("missing 'data' section"))?;
    if let Some(d) = v.as_object_mut() {
        let flat = ["r0", "width", "exponent", "amplitude"];
        if d.get("kind").and_then(Value::as_str) == Some("radial") && !d.contains_key("displacement") {
            let bump: Map<String, Value> = flat
                .iter()
                .filter_map(|k| d.remove(*k).map(|x| (k.to_string(), x)))
                .collect();
            d.insert("displacement".into(), Value::Object(bump));
        }
    }
    serde_json::from_value(v).map_err(|e| invalid(format!("data: {e}")))
}

impl RunConfig {
    pub fn from_json(v: Value) -> Result<Self, SimError> {
        let obj = v.as_object().ok_or_else(|| invalid("config must be a JSON object"))?;
        check_keys(obj, &["material", "grid", "time", "data", "stop", "output"])?;
        let (material, numeric) = material_section(obj, "material")?;
        let grid: Grid = section(obj, "grid")?;
        let time: TimeSection = section(obj, "time")?;
        let data = data_section(obj)?;
        let stop: StopSection = optional_section(obj, "stop")?;
        let output: OutputSection = optional_section(obj, "output")?;
        let sim = SimConfig {
            grid,
            material: numeric,
            step: time.step()?,
            end_time: time.end_time,
            data,
            theta: stop.theta,
            sample_every: time.sample_every,
            steepening: stop.steepening,
        };
        sim.validate()?;
        Ok(RunConfig {
            material,
            sim,
            output,
            source: v,
        })
    }

    pub fn from_path(p: &Path) -> Result<Self, SimError> {
        Self::from_json(read_json(p)?)
    }
}

/// Parsed `sweep` configuration.
#[derive(Debug, Clone)]
pub struct SweepConfig {
    pub spec: SweepSpec,
    pub output: OutputSection,
}

impl SweepConfig {
    pub fn from_json(v: Value) -> Result<Self, SimError> {
        let obj = v.as_object().ok_or_else(|| invalid("config must be a JSON object"))?;
        check_keys(
            obj,
            &["eps", "null_material", "nonlinear_material", "grid", "time", "profile", "stop", "output"],
        )?;
        let eps: Vec<f64> = section(obj, "eps")?;
        let (_, null) = material_section(obj, "null_material")?;
        let (_, nonlinear) = material_section(obj, "nonlinear_material")?;
        let time: TimeSection = section(obj, "time")?;
        let profile: RadialProfile = section(obj, "profile")?;
        let stop: StopSection = optional_section(obj, "stop")?;
        let spec = SweepSpec {
            eps,
            null: LabelledMaterial {
                label: "null".into(),
                material: null,
            },
            nonlinear: LabelledMaterial {
                label: "nonlinear".into(),
                material: nonlinear,
            },
            grid: section(obj, "grid")?,
            step: time.step()?,
            end_time: time.end_time,
            profile,
            theta: stop.theta,
            steepening: stop.steepening,
            sample_every: time.sample_every,
        };
        spec.validate()?;
        Ok(SweepConfig {
            spec,
            output: optional_section(obj, "output")?,
        })
    }

    pub fn from_path(p: &Path) -> Result<Self, SimError> {
        Self::from_json(read_json(p)?)
    }
}

/// Reads the `material` section of a file for the symbolic commands.
pub fn material_from_path(p: &Path) -> Result<MaterialSpec, SimError> {
    let v = read_json(p)?;
    let m = v.get("material").unwrap_or(&v);
    MaterialSpec::from_json(m)
}

pub fn read_json(p: &Path) -> Result<Value, SimError> {
    let text = std::fs::read_to_string(p)
        .map_err(|e| invalid(format!("cannot read {}: {e}", p.display())))?;
    serde_json::from_str(&text).map_err(|e| invalid(format!("{}: {e}", p.display())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use elastowave_core::poly::rat;
    use serde_json::json;

    #[test]
    fn rationals_from_numbers_and_strings() {
        assert_eq!(rational_from_json(&json!(1.5)).unwrap(), rat(3, 2));
        assert_eq!(rational_from_json(&json!("-3/2")).unwrap(), rat(-3, 2));
        assert_eq!(rational_from_json(&json!(-1)).unwrap(), rat(-1, 1));
        assert!(rational_from_json(&json!(true)).is_err());
    }

    #[test]
    fn flat_radial_data_is_accepted() {
        let doc = |data: Value| {
            json!({"material": {"preset": "null"}, "grid": {"N": 32, "L": 16}, "time": {"T": 1}, "data": data})
        };
        let flat = RunConfig::from_json(doc(json!({"kind": "radial", "eps": 0.1, "r0": 0, "width": 3}))).unwrap();
        let nested = RunConfig::from_json(doc(json!({"kind": "radial", "eps": 0.1, "displacement": {"width": 3}}))).unwrap();
        assert_eq!(flat.sim.data, nested.sim.data);
    }

    #[test]
    fn exactly_one_material_form() {
        let both = json!({"sigma": {"sigma11": 1, "sigma2": -1}, "coefficients": {"c1sq": 4, "c2sq": 2}});
        assert!(MaterialSpec::from_json(&both).is_err());
        assert!(MaterialSpec::from_json(&json!({})).is_err());
        let s = MaterialSpec::from_json(&json!({"sigma": {"sigma11": 1, "sigma2": -1}})).unwrap();
        assert_eq!(s.model().unwrap(), &MaterialModel::linear());
        let bad = json!({"sigma": {"sigma11": 1, "sigma2": 1}});
        assert!(MaterialSpec::from_json(&bad).is_err());
    }
}
