//! Flat `key = value` run configuration.
//!
//! ```text
//! # beam
//! lambda  = 1.0
//! u0      = 1.0
//! b0      = 1.0
//! rho_bar = 1.0
//! # external field
//! b_ext = 0.5
//! theta = 0.0     # radians
//! l     = 1.0
//! tau   = 1.0
//! mode  = neutral
//! output_dir = runs/today
//! ```

use std::collections::HashMap;
use std::path::{Path, PathBuf};

use spinterf_core::model::{ExternalField, MediumMode, NeutronBeam};
use spinterf_core::sweep::{Parameter, ParameterSet};
use spinterf_core::Error as CoreError;

use crate::error::CliError;

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub params: ParameterSet,
    pub mode: MediumMode,
    pub output_dir: Option<PathBuf>,
    /// Where each parameter was set, for error messages.
    origin: HashMap<Parameter, String>,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            params: ParameterSet::default(),
            mode: MediumMode::Neutral,
            output_dir: None,
            origin: HashMap::new(),
        }
    }
}

impl RunConfig {
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Config(format!("cannot read config {}: {e}", path.display())))?;
        let config = RunConfig::parse(&text, &path.display().to_string())?;
        config.validate()?;
        Ok(config)
    }

    /// Parses config text; `source` names the file in error messages.
    pub fn parse(text: &str, source: &str) -> Result<Self, CliError> {
        let mut config = RunConfig::default();
        let mut seen: HashMap<String, usize> = HashMap::new();
        for (idx, raw) in text.lines().enumerate() {
            let lineno = idx + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let at = |msg: String| CliError::Config(format!("{source}:{lineno}: {msg}"));
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| at(format!("expected `key = value`, got `{line}`")))?;
            let (key, value) = (key.trim(), value.trim());
            if value.is_empty() {
                return Err(at(format!("`{key}` has no value")));
            }
            if let Some(prev) = seen.insert(key.to_owned(), lineno) {
                return Err(at(format!("`{key}` already set on line {prev}")));
            }
            match key {
                "mode" => config.mode = value.parse().map_err(at)?,
                "output_dir" => config.output_dir = Some(PathBuf::from(value)),
                _ => {
                    let param: Parameter = key.parse().map_err(|_| {
                        at(format!(
                            "unknown key `{key}` (expected lambda, u0, b0, rho_bar, b_ext, theta, l, tau, mode or output_dir)"
                        ))
                    })?;
                    let v: f64 = value
                        .parse()
                        .map_err(|_| at(format!("`{key}` = `{value}` is not a number")))?;
                    config.params.set(param, v);
                    config.origin.insert(param, format!("{source}:{lineno}"));
                }
            }
        }
        Ok(config)
    }

    /// Applies a command-line override.
    pub fn set(&mut self, param: Parameter, value: f64, flag: &str) {
        self.params.set(param, value);
        self.origin.insert(param, flag.to_owned());
    }

    /// Builds beam and field, naming where an offending value came from.
    pub fn build(&self) -> Result<(NeutronBeam, ExternalField), CliError> {
        self.params.build().map_err(|e| self.locate(e))
    }

    pub fn validate(&self) -> Result<(), CliError> {
        self.build().map(|_| ())
    }

    fn locate(&self, err: CoreError) -> CliError {
        if let CoreError::InvalidParameter { name, .. } = &err {
            let origin = match name.parse::<Parameter>() {
                Ok(p) => self
                    .origin
                    .get(&p)
                    .map_or("built-in default", String::as_str),
                Err(_) => "derived value",
            };
            return CliError::Config(format!("{origin}: {err}"));
        }
        CliError::from(err)
    }
}
