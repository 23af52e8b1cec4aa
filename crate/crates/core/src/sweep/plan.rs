use std::collections::BTreeMap;
use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::model::{ExternalField, MediumMode, NeutronBeam};
use crate::units::Dimension;

/// Model inputs that a plan can bind or sweep.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Parameter {
    BExt,
    Theta,
    Lambda,
    RhoBar,
    B0,
    U0,
    L,
    Tau,
}

impl Parameter {
    pub const ALL: [Parameter; 8] = [
        Parameter::BExt,
        Parameter::Theta,
        Parameter::Lambda,
        Parameter::RhoBar,
        Parameter::B0,
        Parameter::U0,
        Parameter::L,
        Parameter::Tau,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Parameter::BExt => "b_ext",
            Parameter::Theta => "theta",
            Parameter::Lambda => "lambda",
            Parameter::RhoBar => "rho_bar",
            Parameter::B0 => "b0",
            Parameter::U0 => "u0",
            Parameter::L => "l",
            Parameter::Tau => "tau",
        }
    }

    pub fn dimension(self) -> Dimension {
        match self {
            Parameter::BExt | Parameter::B0 => Dimension::Field,
            Parameter::Theta => Dimension::Angle,
            Parameter::Lambda | Parameter::L => Dimension::Length,
            Parameter::RhoBar => Dimension::Density,
            Parameter::U0 => Dimension::Speed,
            Parameter::Tau => Dimension::Time,
        }
    }
}

impl fmt::Display for Parameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Parameter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Parameter::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| {
                Error::Plan(format!(
                    "unknown parameter `{s}` (expected one of b_ext, theta, lambda, rho_bar, b0, u0, l, tau)"
                ))
            })
    }
}

/// Complete set of beam and external-field inputs.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ParameterSet {
    pub lambda: f64,
    pub u0: f64,
    pub b0: f64,
    pub rho_bar: f64,
    pub b_ext: f64,
    pub theta: f64,
    pub l: f64,
    pub tau: f64,
}

impl Default for ParameterSet {
    fn default() -> Self {
        ParameterSet {
            lambda: 1.0,
            u0: 1.0,
            b0: 1.0,
            rho_bar: 1.0,
            b_ext: 0.0,
            theta: 0.0,
            l: 1.0,
            tau: 1.0,
        }
    }
}

impl ParameterSet {
    pub fn get(&self, p: Parameter) -> f64 {
        match p {
            Parameter::BExt => self.b_ext,
            Parameter::Theta => self.theta,
            Parameter::Lambda => self.lambda,
            Parameter::RhoBar => self.rho_bar,
            Parameter::B0 => self.b0,
            Parameter::U0 => self.u0,
            Parameter::L => self.l,
            Parameter::Tau => self.tau,
        }
    }

    pub fn set(&mut self, p: Parameter, value: f64) {
        let slot = match p {
            Parameter::BExt => &mut self.b_ext,
            Parameter::Theta => &mut self.theta,
            Parameter::Lambda => &mut self.lambda,
            Parameter::RhoBar => &mut self.rho_bar,
            Parameter::B0 => &mut self.b0,
            Parameter::U0 => &mut self.u0,
            Parameter::L => &mut self.l,
            Parameter::Tau => &mut self.tau,
        };
        *slot = value;
    }

    pub fn beam(&self) -> Result<NeutronBeam> {
        NeutronBeam::new(self.lambda, self.u0, self.b0, self.rho_bar)
    }

    pub fn external_field(&self) -> Result<ExternalField> {
        ExternalField::new(self.b_ext, self.theta, self.l, self.tau)
    }

    pub fn build(&self) -> Result<(NeutronBeam, ExternalField)> {
        Ok((self.beam()?, self.external_field()?))
    }
}

/// Quantity evaluated at each grid point.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Quantity {
    /// φ_em from the end-of-ramp fields at x = u₀τ, t = τ.
    EmPotential,
    /// `B₀²cos²(k₀u₀τ − ω₀τ) + B_ext²`
    EmPotentialCollapsed,
    KineticShift,
    /// Unwrapped phase.
    Phase,
    /// Wrapped phase α.
    Alpha,
    Intensity,
}

impl Quantity {
    pub fn name(self) -> &'static str {
        match self {
            Quantity::EmPotential => "em_potential",
            Quantity::EmPotentialCollapsed => "em_potential_collapsed",
            Quantity::KineticShift => "kinetic_shift",
            Quantity::Phase => "phase",
            Quantity::Alpha => "alpha",
            Quantity::Intensity => "intensity",
        }
    }
}

impl FromStr for Quantity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        [
            Quantity::EmPotential,
            Quantity::EmPotentialCollapsed,
            Quantity::KineticShift,
            Quantity::Phase,
            Quantity::Alpha,
            Quantity::Intensity,
        ]
        .into_iter()
        .find(|q| q.name() == s)
        .ok_or_else(|| {
            Error::Plan(format!(
                "unknown quantity `{s}` (expected em_potential, em_potential_collapsed, kinetic_shift, phase, alpha or intensity)"
            ))
        })
    }
}

/// One linearly spaced sweep axis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Axis {
    pub parameter: Parameter,
    pub min: f64,
    pub max: f64,
    pub count: usize,
}

impl Axis {
    pub fn new(parameter: Parameter, min: f64, max: f64, count: usize) -> Result<Self> {
        if count < 2 {
            return Err(Error::Plan(format!(
                "axis `{parameter}` needs count ≥ 2, got {count}"
            )));
        }
        if !(min.is_finite() && max.is_finite() && min < max) {
            return Err(Error::Plan(format!(
                "axis `{parameter}` needs finite min < max, got [{min}, {max}]"
            )));
        }
        Ok(Axis {
            parameter,
            min,
            max,
            count,
        })
    }

    pub fn values(&self) -> Vec<f64> {
        crate::interferometer::linspace(self.min, self.max, self.count)
    }
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct OutputSpec {
    pub csv: Option<PathBuf>,
    pub svg: Option<PathBuf>,
    pub x_axis: Option<Parameter>,
    pub series_axis: Option<Parameter>,
}

/// Validated sweep description.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepPlan {
    pub quantity: Quantity,
    pub axes: Vec<Axis>,
    /// Bindings for every parameter that is not swept.
    pub base: ParameterSet,
    pub fixed: BTreeMap<Parameter, f64>,
    pub mode: MediumMode,
    pub output: OutputSpec,
}

impl SweepPlan {
    /// Checks axis and binding consistency; `base` supplies every parameter
    /// that is neither fixed nor swept.
    pub fn new(
        quantity: Quantity,
        axes: Vec<Axis>,
        fixed: BTreeMap<Parameter, f64>,
        base: ParameterSet,
        mode: MediumMode,
        output: OutputSpec,
    ) -> Result<Self> {
        if axes.is_empty() {
            return Err(Error::Plan("a plan needs at least one axis".into()));
        }
        for (k, axis) in axes.iter().enumerate() {
            if axes[..k].iter().any(|a| a.parameter == axis.parameter) {
                return Err(Error::Plan(format!(
                    "axis `{}` is declared twice",
                    axis.parameter
                )));
            }
            if fixed.contains_key(&axis.parameter) {
                return Err(Error::Plan(format!(
                    "parameter `{}` is both fixed and swept",
                    axis.parameter
                )));
            }
        }
        let mut base = base;
        for (&p, &v) in &fixed {
            if !v.is_finite() {
                return Err(Error::Plan(format!("fixed `{p}` = {v} is not finite")));
            }
            base.set(p, v);
        }
        let swept = |p: Parameter| axes.iter().any(|a| a.parameter == p);
        if let Some(x) = output.x_axis {
            if !swept(x) {
                return Err(Error::Plan(format!(
                    "plot x axis `{x}` is not a swept parameter"
                )));
            }
        }
        if let Some(s) = output.series_axis {
            if !swept(s) || Some(s) == output.x_axis {
                return Err(Error::Plan(format!(
                    "plot series axis `{s}` must be a swept parameter other than the x axis"
                )));
            }
        }
        if output.svg.is_some() {
            let x = output
                .x_axis
                .or_else(|| axes.first().map(|a| a.parameter))
                .expect("at least one axis");
            let uncovered = axes
                .iter()
                .filter(|a| a.parameter != x && Some(a.parameter) != output.series_axis)
                .count();
            // without an explicit series axis the remaining axis becomes the series
            let allowed = usize::from(output.series_axis.is_none());
            if uncovered > allowed {
                return Err(Error::Plan(
                    "an svg plot covers at most two swept axes (x_axis and series_axis)".into(),
                ));
            }
        }
        Ok(SweepPlan {
            quantity,
            axes,
            base,
            fixed,
            mode,
            output,
        })
    }

    pub fn grid_size(&self) -> usize {
        self.axes.iter().map(|a| a.count).product()
    }

    /// Parses a TOML plan. `base` and `default_mode` apply where the plan
    /// is silent; relative output paths stay relative.
    pub fn from_toml_str(text: &str, base: ParameterSet, default_mode: MediumMode) -> Result<Self> {
        let raw: RawPlan = toml::from_str(text).map_err(|e| Error::Plan(e.to_string()))?;
        let quantity = raw.quantity.parse()?;
        let mode = match raw.mode {
            Some(m) => m.parse().map_err(Error::Plan)?,
            None => default_mode,
        };
        let mut fixed = BTreeMap::new();
        for (name, value) in raw.fixed {
            fixed.insert(name.parse::<Parameter>()?, value);
        }
        let axes = raw
            .axis
            .into_iter()
            .map(|a| Axis::new(a.name.parse()?, a.min, a.max, a.count))
            .collect::<Result<Vec<_>>>()?;
        let output = match raw.output {
            Some(o) => OutputSpec {
                csv: o.csv,
                svg: o.svg,
                x_axis: o.x_axis.as_deref().map(str::parse).transpose()?,
                series_axis: o.series_axis.as_deref().map(str::parse).transpose()?,
            },
            None => OutputSpec::default(),
        };
        SweepPlan::new(quantity, axes, fixed, base, mode, output)
    }

    pub fn from_toml_file(
        path: &Path,
        base: ParameterSet,
        default_mode: MediumMode,
    ) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        SweepPlan::from_toml_str(&text, base, default_mode).map_err(|e| match e {
            Error::Plan(msg) => Error::Plan(format!("{}: {msg}", path.display())),
            other => other,
        })
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawPlan {
    quantity: String,
    mode: Option<String>,
    #[serde(default)]
    fixed: BTreeMap<String, f64>,
    #[serde(default)]
    axis: Vec<RawAxis>,
    output: Option<RawOutput>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawAxis {
    name: String,
    min: f64,
    max: f64,
    count: usize,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawOutput {
    csv: Option<PathBuf>,
    svg: Option<PathBuf>,
    x_axis: Option<String>,
    series_axis: Option<String>,
}
