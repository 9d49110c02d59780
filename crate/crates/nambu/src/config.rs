//! Experiment configuration: flat key-value files (with a JSON equivalent),
//! command-line overrides, strict validation.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::integrate::Method;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Experiment {
    EulerTop,
    BracketCheck,
    ReduceCheck,
    Vortex,
    Fluid,
    ClebschFluid,
    Nls,
    Correspondence,
}

impl Experiment {
    pub fn name(&self) -> &'static str {
        match self {
            Experiment::EulerTop => "euler-top",
            Experiment::BracketCheck => "bracket-check",
            Experiment::ReduceCheck => "reduce-check",
            Experiment::Vortex => "vortex",
            Experiment::Fluid => "fluid",
            Experiment::ClebschFluid => "clebsch-fluid",
            Experiment::Nls => "nls",
            Experiment::Correspondence => "correspondence",
        }
    }

    /// Whether the experiment draws random data and therefore must be seeded.
    pub fn requires_seed(&self) -> bool {
        !matches!(self, Experiment::EulerTop)
    }
}

impl std::str::FromStr for Experiment {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "euler-top" => Ok(Experiment::EulerTop),
            "bracket-check" => Ok(Experiment::BracketCheck),
            "reduce-check" => Ok(Experiment::ReduceCheck),
            "vortex" => Ok(Experiment::Vortex),
            "fluid" => Ok(Experiment::Fluid),
            "clebsch-fluid" => Ok(Experiment::ClebschFluid),
            "nls" => Ok(Experiment::Nls),
            "correspondence" => Ok(Experiment::Correspondence),
            other => Err(Error::Config(format!("unknown experiment \"{other}\""))),
        }
    }
}

/// Fully validated run parameters.
#[derive(Debug, Clone, Serialize)]
pub struct RunConfig {
    pub experiment: Experiment,
    pub dt: f64,
    pub steps: usize,
    pub grid_n: usize,
    pub hbar: f64,
    pub seed: Option<u64>,
    pub out: Option<PathBuf>,
    pub method: Method,
    pub moments: [f64; 3],
    pub xi0: [f64; 3],
    /// Isothermal sound speed for the fluid experiments.
    pub sound_speed: f64,
    /// Self-interaction coupling for the Schroedinger experiments.
    pub coupling: f64,
    /// Initial perturbation amplitude for field experiments.
    pub amplitude: f64,
    /// Spinor components for the Schroedinger experiments.
    pub components: usize,
    /// Sample count for randomized residual checks.
    pub samples: usize,
}

impl RunConfig {
    pub fn defaults(experiment: Experiment) -> Self {
        let mut cfg = RunConfig {
            experiment,
            dt: 1e-2,
            steps: 100,
            grid_n: 16,
            hbar: 1.0,
            seed: None,
            out: None,
            method: Method::Rk4,
            moments: [1.0, 2.0, 3.0],
            xi0: [1.0, 0.1, 0.1],
            sound_speed: 1.0,
            coupling: 0.5,
            amplitude: 0.02,
            components: 2,
            samples: 100,
        };
        match experiment {
            Experiment::EulerTop => {
                cfg.dt = 1e-2;
                cfg.steps = 10_000;
                cfg.method = Method::Midpoint;
            }
            Experiment::BracketCheck => {}
            Experiment::ReduceCheck => {
                cfg.dt = 1e-3;
                cfg.steps = 1000;
            }
            Experiment::Vortex => {
                cfg.dt = 0.02;
                cfg.steps = 100;
                cfg.amplitude = 0.2;
            }
            Experiment::Fluid => {
                cfg.dt = 0.01;
                cfg.steps = 100;
            }
            Experiment::ClebschFluid => {
                cfg.dt = 0.01;
                cfg.steps = 50;
                cfg.amplitude = 0.01;
            }
            Experiment::Nls => {
                cfg.dt = 1e-3;
                cfg.steps = 100;
                cfg.amplitude = 0.1;
            }
            Experiment::Correspondence => {}
        }
        cfg
    }

    fn validate(&self) -> Result<()> {
        if self.dt <= 0.0 {
            return Err(Error::Config(format!("dt must be positive, got {}", self.dt)));
        }
        if self.steps < 1 {
            return Err(Error::Config("steps must be at least 1".into()));
        }
        if self.grid_n < 8 || !self.grid_n.is_power_of_two() {
            return Err(Error::Config(format!(
                "grid-n must be a power of two >= 8, got {}",
                self.grid_n
            )));
        }
        if self.hbar <= 0.0 {
            return Err(Error::Config(format!(
                "hbar must be positive, got {}",
                self.hbar
            )));
        }
        if self.moments.iter().any(|&m| m <= 0.0) {
            return Err(Error::Config("moments of inertia must be positive".into()));
        }
        if self.sound_speed <= 0.0 {
            return Err(Error::Config("c must be positive".into()));
        }
        if self.coupling < 0.0 {
            return Err(Error::Config("g must be nonnegative".into()));
        }
        if self.amplitude <= 0.0 || self.amplitude > 0.5 {
            return Err(Error::Config(
                "amplitude must lie in (0, 0.5] to keep densities positive".into(),
            ));
        }
        if !(1..=3).contains(&self.components) {
            return Err(Error::Config(format!(
                "components must be 1..=3, got {}",
                self.components
            )));
        }
        if self.samples < 1 {
            return Err(Error::Config("samples must be at least 1".into()));
        }
        if self.experiment.requires_seed() && self.seed.is_none() {
            return Err(Error::Config(format!(
                "experiment \"{}\" draws random data; a seed is required",
                self.experiment.name()
            )));
        }
        Ok(())
    }
}

/// Command-line overrides; every field beats the file value when present.
#[derive(Debug, Clone, Default)]
pub struct Overrides {
    pub out: Option<PathBuf>,
    pub seed: Option<u64>,
    pub dt: Option<f64>,
    pub steps: Option<usize>,
    pub grid_n: Option<usize>,
    pub hbar: Option<f64>,
    pub method: Option<Method>,
}

fn parse_triple(key: &str, value: &str) -> Result<[f64; 3]> {
    let parts: Vec<&str> = value.split_whitespace().collect();
    if parts.len() != 3 {
        return Err(Error::Config(format!(
            "key \"{key}\" needs exactly 3 numbers, got {}",
            parts.len()
        )));
    }
    let mut out = [0.0; 3];
    for (slot, part) in out.iter_mut().zip(&parts) {
        *slot = part
            .parse()
            .map_err(|e| Error::Config(format!("key \"{key}\": bad number \"{part}\": {e}")))?;
    }
    Ok(out)
}

fn parse_scalar<T: std::str::FromStr>(key: &str, value: &str) -> Result<T>
where
    T::Err: std::fmt::Display,
{
    value
        .parse()
        .map_err(|e| Error::Config(format!("key \"{key}\": bad value \"{value}\": {e}")))
}

fn apply_entry(cfg: &mut RunConfig, key: &str, value: &str) -> Result<()> {
    match key {
        "experiment" => {
            let named: Experiment = value.parse()?;
            if named != cfg.experiment {
                return Err(Error::Config(format!(
                    "config file names experiment \"{value}\" but the subcommand is \"{}\"",
                    cfg.experiment.name()
                )));
            }
        }
        "dt" => cfg.dt = parse_scalar(key, value)?,
        "steps" => cfg.steps = parse_scalar(key, value)?,
        "grid-n" | "grid_n" => cfg.grid_n = parse_scalar(key, value)?,
        "hbar" => cfg.hbar = parse_scalar(key, value)?,
        "seed" => cfg.seed = Some(parse_scalar(key, value)?),
        "out" => cfg.out = Some(PathBuf::from(value)),
        "method" => cfg.method = value.parse()?,
        "i" | "moments" => cfg.moments = parse_triple(key, value)?,
        "xi0" => cfg.xi0 = parse_triple(key, value)?,
        "c" | "sound-speed" => cfg.sound_speed = parse_scalar(key, value)?,
        "g" | "coupling" => cfg.coupling = parse_scalar(key, value)?,
        "amplitude" => cfg.amplitude = parse_scalar(key, value)?,
        "components" => cfg.components = parse_scalar(key, value)?,
        "samples" => cfg.samples = parse_scalar(key, value)?,
        other => {
            return Err(Error::Config(format!("unknown key \"{other}\"")));
        }
    }
    Ok(())
}

fn entries_from_text(text: &str) -> Result<Vec<(String, String)>> {
    let mut entries = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, value) = line.split_once('=').ok_or_else(|| {
            Error::Config(format!("line {}: expected key = value", lineno + 1))
        })?;
        entries.push((key.trim().to_string(), value.trim().to_string()));
    }
    Ok(entries)
}

fn entries_from_json(text: &str) -> Result<Vec<(String, String)>> {
    let map: BTreeMap<String, serde_json::Value> = serde_json::from_str(text)?;
    map.into_iter()
        .map(|(k, v)| {
            let rendered = match v {
                serde_json::Value::String(s) => s,
                serde_json::Value::Number(n) => n.to_string(),
                serde_json::Value::Array(items) => items
                    .iter()
                    .map(|x| match x {
                        serde_json::Value::Number(n) => Ok(n.to_string()),
                        _ => Err(Error::Config(format!(
                            "key \"{k}\": arrays may hold numbers only"
                        ))),
                    })
                    .collect::<Result<Vec<_>>>()?
                    .join(" "),
                other => {
                    return Err(Error::Config(format!(
                        "key \"{k}\": unsupported JSON value {other}"
                    )))
                }
            };
            Ok((k, rendered))
        })
        .collect()
}

/// Build the run configuration: experiment defaults, then the optional
/// config file (text `key = value` or JSON by extension), then flag
/// overrides; unknown keys and out-of-range values are errors.
pub fn parse_config(
    experiment: Experiment,
    path: Option<&Path>,
    overrides: &Overrides,
) -> Result<RunConfig> {
    let mut cfg = RunConfig::defaults(experiment);

    if let Some(path) = path {
        let text = std::fs::read_to_string(path)?;
        let entries = if path.extension().is_some_and(|e| e == "json") {
            entries_from_json(&text)?
        } else {
            entries_from_text(&text)?
        };
        for (key, value) in entries {
            apply_entry(&mut cfg, &key, &value)?;
        }
    }

    if let Some(out) = &overrides.out {
        cfg.out = Some(out.clone());
    }
    if let Some(seed) = overrides.seed {
        cfg.seed = Some(seed);
    }
    if let Some(dt) = overrides.dt {
        cfg.dt = dt;
    }
    if let Some(steps) = overrides.steps {
        cfg.steps = steps;
    }
    if let Some(grid_n) = overrides.grid_n {
        cfg.grid_n = grid_n;
    }
    if let Some(hbar) = overrides.hbar {
        cfg.hbar = hbar;
    }
    if let Some(method) = overrides.method {
        cfg.method = method;
    }

    cfg.validate()?;
    Ok(cfg)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_populate_a_minimal_config() {
        let cfg = parse_config(Experiment::EulerTop, None, &Overrides::default()).unwrap();
        assert_eq!(cfg.dt, 1e-2);
        assert_eq!(cfg.steps, 10_000);
        assert_eq!(cfg.moments, [1.0, 2.0, 3.0]);
        assert_eq!(cfg.method, Method::Midpoint);
    }

    #[test]
    fn negative_dt_is_a_range_error() {
        let overrides = Overrides {
            dt: Some(-1.0),
            ..Default::default()
        };
        let err = parse_config(Experiment::EulerTop, None, &overrides).unwrap_err();
        assert!(err.to_string().contains("dt"));
    }

    #[test]
    fn unknown_key_is_named_in_the_error() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("run.cfg");
        std::fs::write(&path, "foo = 1\n").unwrap();
        let err =
            parse_config(Experiment::EulerTop, Some(&path), &Overrides::default()).unwrap_err();
        assert!(err.to_string().contains("foo"), "{err}");
    }

    #[test]
    fn file_values_are_applied_and_flags_win() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("run.cfg");
        std::fs::write(&path, "dt = 0.5\nsteps = 7\nxi0 = 0 0 2\n# comment\n").unwrap();
        let overrides = Overrides {
            dt: Some(0.25),
            ..Default::default()
        };
        let cfg = parse_config(Experiment::EulerTop, Some(&path), &overrides).unwrap();
        assert_eq!(cfg.dt, 0.25);
        assert_eq!(cfg.steps, 7);
        assert_eq!(cfg.xi0, [0.0, 0.0, 2.0]);
    }

    #[test]
    fn json_config_is_equivalent() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("run.json");
        std::fs::write(&path, r#"{"dt": 0.5, "steps": 7, "xi0": [0, 0, 2]}"#).unwrap();
        let cfg = parse_config(Experiment::EulerTop, Some(&path), &Overrides::default()).unwrap();
        assert_eq!(cfg.dt, 0.5);
        assert_eq!(cfg.steps, 7);
        assert_eq!(cfg.xi0, [0.0, 0.0, 2.0]);
    }

    #[test]
    fn randomized_experiments_require_a_seed() {
        let err = parse_config(Experiment::BracketCheck, None, &Overrides::default()).unwrap_err();
        assert!(err.to_string().contains("seed"));
        let overrides = Overrides {
            seed: Some(1),
            ..Default::default()
        };
        assert!(parse_config(Experiment::BracketCheck, None, &overrides).is_ok());
    }

    #[test]
    fn experiment_name_mismatch_is_rejected() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("run.cfg");
        std::fs::write(&path, "experiment = vortex\n").unwrap();
        assert!(parse_config(Experiment::EulerTop, Some(&path), &Overrides::default()).is_err());
    }
}
