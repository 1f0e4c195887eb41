use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use elastowave_core::material::{
    audit, derived_coefficients, energy_expansion, euler_lagrange, field_form,
};
use elastowave_core::nullcond::null_conditions;
use elastowave::config::{material_from_path, read_json, RunConfig, SweepConfig};
use elastowave::lab::{lifespan_sweep, reduction_check, RadialProfile};
use elastowave::{report, sim, verify, SimError};
use serde_json::json;

#[derive(Parser)]
#[command(name = "elastowave", version, about = "Nonlinear 2-D elastic waves: derivation, null conditions, simulation")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Energy expansion, system coefficients, Euler-Lagrange system and formula audit.
    Derive { config: PathBuf },
    /// Null-condition report; exits 3 if the three procedures disagree.
    Check { config: PathBuf },
    /// Run a simulation and write report.json, series.csv and metadata.json.
    Simulate {
        config: PathBuf,
        /// Overrides the output directory of the config.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Symbolic radial reduction, plus a numeric convergence study if the
    /// config carries `profile`, `L` and `N` entries.
    Reduce {
        config: PathBuf,
        #[arg(long, default_value_t = 3.5)]
        min_order: f64,
    },
    /// Lifespan sweep; writes sweep.json, sweep.csv and metadata.json.
    Sweep {
        config: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Symbolic identity battery and solver cross-checks.
    Verify,
}

enum Outcome {
    Ok,
    Failed,
}

fn print(v: &serde_json::Value) -> Result<(), SimError> {
    println!("{}", serde_json::to_string_pretty(v)?);
    Ok(())
}

fn execute(cmd: Command) -> Result<Outcome, SimError> {
    match cmd {
        Command::Derive { config } => {
            let spec = material_from_path(&config)?;
            let m = spec.model()?;
            let e = energy_expansion(m);
            let nulls = null_conditions(m)?;
            print(&json!({
                "energy": report::energy(&e),
                "field_form": report::field_energy(&field_form(&e)?),
                "coefficients": report::coefficients(&derived_coefficients(m)?),
                "rhs": report::rhs(&euler_lagrange(m)?),
                "audit": report::audit(&audit(m)?),
                "first_null": nulls.first_null,
                "second_null": nulls.second_null,
            }))?;
            Ok(Outcome::Ok)
        }
        Command::Check { config } => {
            let spec = material_from_path(&config)?;
            let r = null_conditions(spec.model()?)?;
            print(&report::null_report(&r))?;
            Ok(if r.procedures_agree() { Outcome::Ok } else { Outcome::Failed })
        }
        Command::Simulate { config, out } => {
            let cfg = RunConfig::from_path(&config)?;
            let start = Instant::now();
            let rep = sim::run(&cfg.sim)?;
            let dir = out.unwrap_or(cfg.output.dir.clone());
            report::write_run(&dir, &rep, &cfg.source, start.elapsed().as_secs_f64())?;
            println!(
                "{}: {} steps, dt = {:.3e}, wrote {}",
                match rep.termination {
                    sim::Termination::Completed => "completed".to_string(),
                    sim::Termination::Blowup { t } => format!("blow-up at t = {t:.4}"),
                    sim::Termination::Steepening { t } => format!("steepening at t = {t:.4}"),
                    sim::Termination::Nonfinite { t } => format!("non-finite at t = {t:.4}"),
                },
                rep.steps,
                rep.dt,
                dir.display()
            );
            Ok(Outcome::Ok)
        }
        Command::Reduce { config, min_order } => {
            let doc = read_json(&config)?;
            let spec = material_from_path(&config)?;
            let numeric = match doc.get("profile") {
                Some(p) => {
                    let profile: RadialProfile = serde_json::from_value(p.clone())
                        .map_err(|e| SimError::InvalidConfig(format!("profile: {e}")))?;
                    let l = doc.get("L").and_then(|v| v.as_f64()).unwrap_or(16.0);
                    let ns: Vec<usize> = match doc.get("N") {
                        Some(v) => serde_json::from_value(v.clone())
                            .map_err(|e| SimError::InvalidConfig(format!("N: {e}")))?,
                        None => vec![64, 128, 256],
                    };
                    Some((profile, l, ns))
                }
                None => None,
            };
            let v = reduction_check(
                spec.model()?,
                numeric.as_ref().map(|(p, l, ns)| (p, *l, ns.as_slice())),
            )?;
            print(&report::reduction_verdict(&v, min_order))?;
            Ok(if v.passed(min_order) { Outcome::Ok } else { Outcome::Failed })
        }
        Command::Sweep { config, out } => {
            let cfg = SweepConfig::from_path(&config)?;
            let start = Instant::now();
            let res = lifespan_sweep(&cfg.spec)?;
            let dir = out.unwrap_or(cfg.output.dir.clone());
            report::write_sweep(&dir, &res, start.elapsed().as_secs_f64())?;
            for c in &res.cells {
                println!(
                    "eps = {:<8} {:<10} lifespan {:>9.3} {}",
                    c.eps,
                    c.material,
                    c.lifespan,
                    if c.completed { "(completed)" } else { "" }
                );
            }
            println!("ordering holds: {}, monotone: {}", res.ordering_holds, res.monotone);
            Ok(Outcome::Ok)
        }
        Command::Verify => {
            let start = Instant::now();
            let checks = verify::run_battery()?;
            for c in &checks {
                println!("{} {:<48} {}", if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail);
            }
            println!("{:.1} s", start.elapsed().as_secs_f64());
            Ok(if checks.iter().all(|c| c.passed) { Outcome::Ok } else { Outcome::Failed })
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    ExitCode::SUCCESS
                }
                _ => ExitCode::from(1),
            };
        }
    };
    match execute(cli.command) {
        Ok(Outcome::Ok) => ExitCode::SUCCESS,
        Ok(Outcome::Failed) => ExitCode::from(3),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                SimError::InvalidConfig(_) | SimError::Json(_) => 1,
                SimError::Symbolic(elastowave_core::Error::InvalidMaterial(_))
                | SimError::Symbolic(elastowave_core::Error::ParseRational(_))
                | SimError::Symbolic(elastowave_core::Error::Precondition(_)) => 1,
                _ => 2,
            })
        }
    }
}
