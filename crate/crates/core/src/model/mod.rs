//! Beam and field types together with the closed-form interaction physics.

mod energy;
mod fields;
mod phase;

use std::f64::consts::TAU;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

pub use energy::{
    classical_interaction_energy, em_potential, em_potential_collapsed, kinetic_shift,
    velocity_delta,
};
pub use fields::{intrinsic_fields, ramped_fields};
pub use phase::{phase_period, phase_shift, PhaseResult};

/// Cartesian three-vector.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Vec3 {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Vec3 {
    pub const ZERO: Vec3 = Vec3::new(0.0, 0.0, 0.0);

    pub const fn new(x: f64, y: f64, z: f64) -> Self {
        Vec3 { x, y, z }
    }

    pub fn dot(self, other: Vec3) -> f64 {
        self.x * other.x + self.y * other.y + self.z * other.z
    }

    pub fn norm_squared(self) -> f64 {
        self.dot(self)
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite() && self.z.is_finite()
    }
}

impl Add for Vec3 {
    type Output = Vec3;
    fn add(self, o: Vec3) -> Vec3 {
        Vec3::new(self.x + o.x, self.y + o.y, self.z + o.z)
    }
}

impl Sub for Vec3 {
    type Output = Vec3;
    fn sub(self, o: Vec3) -> Vec3 {
        Vec3::new(self.x - o.x, self.y - o.y, self.z - o.z)
    }
}

impl Neg for Vec3 {
    type Output = Vec3;
    fn neg(self) -> Vec3 {
        Vec3::new(-self.x, -self.y, -self.z)
    }
}

impl Mul<f64> for Vec3 {
    type Output = Vec3;
    fn mul(self, s: f64) -> Vec3 {
        Vec3::new(self.x * s, self.y * s, self.z * s)
    }
}

fn require(name: &'static str, value: f64, ok: bool, reason: &'static str) -> Result<()> {
    if value.is_finite() && ok {
        Ok(())
    } else {
        Err(Error::InvalidParameter {
            name,
            value,
            reason,
        })
    }
}

/// Monochromatic neutron beam.
///
/// The intrinsic fields are a plane wave along x with the magnetic field on
/// the z axis. The electric amplitude is always derived as `E₀ = u₀·B₀`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NeutronBeam {
    wavelength: f64,
    speed: f64,
    intrinsic_amplitude: f64,
    mean_density: f64,
    wavenumber: f64,
    angular_frequency: f64,
}

impl NeutronBeam {
    /// Requires `wavelength > 0`, `speed > 0`, `intrinsic_amplitude ≥ 0` and
    /// `mean_density > 0`, all finite.
    pub fn new(
        wavelength: f64,
        speed: f64,
        intrinsic_amplitude: f64,
        mean_density: f64,
    ) -> Result<Self> {
        require("lambda", wavelength, wavelength > 0.0, "must be > 0")?;
        require("u0", speed, speed > 0.0, "must be > 0")?;
        require(
            "b0",
            intrinsic_amplitude,
            intrinsic_amplitude >= 0.0,
            "must be ≥ 0",
        )?;
        require("rho_bar", mean_density, mean_density > 0.0, "must be > 0")?;
        let wavenumber = TAU / wavelength;
        let angular_frequency = speed * wavenumber;
        require(
            "k0",
            wavenumber,
            wavenumber > 0.0,
            "derived wavenumber must be finite",
        )?;
        require(
            "omega0",
            angular_frequency,
            angular_frequency > 0.0,
            "derived angular frequency must be finite",
        )?;
        Ok(NeutronBeam {
            wavelength,
            speed,
            intrinsic_amplitude,
            mean_density,
            wavenumber,
            angular_frequency,
        })
    }

    /// λ
    pub fn wavelength(&self) -> f64 {
        self.wavelength
    }

    /// u₀
    pub fn speed(&self) -> f64 {
        self.speed
    }

    /// B₀
    pub fn intrinsic_amplitude(&self) -> f64 {
        self.intrinsic_amplitude
    }

    /// E₀ = u₀·B₀
    pub fn electric_amplitude(&self) -> f64 {
        self.speed * self.intrinsic_amplitude
    }

    /// ρ̄
    pub fn mean_density(&self) -> f64 {
        self.mean_density
    }

    /// k₀ = 2π/λ
    pub fn wavenumber(&self) -> f64 {
        self.wavenumber
    }

    /// ω₀ = u₀·k₀
    pub fn angular_frequency(&self) -> f64 {
        self.angular_frequency
    }

    /// Temporal period of the intrinsic wave, 2π/ω₀.
    pub fn wave_period(&self) -> f64 {
        TAU / self.angular_frequency
    }

    /// Wave phase `k₀x − ω₀t`.
    pub fn phase_argument(&self, x: f64, t: f64) -> f64 {
        self.wavenumber * x - self.angular_frequency * t
    }

    /// Re-expresses the beam in field units scaled by `s`: B₀ → sB₀ and
    /// ρ̄ → s²ρ̄ (ρ̄ carries field² per speed²).
    pub fn with_field_scale(&self, s: f64) -> Result<Self> {
        require("s", s, s > 0.0, "field scale must be > 0")?;
        NeutronBeam::new(
            self.wavelength,
            self.speed,
            self.intrinsic_amplitude * s,
            self.mean_density * s * s,
        )
    }
}

/// Static external field on one beam path, ramped on over `[0, τ]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExternalField {
    magnitude: f64,
    orientation: f64,
    magnet_length: f64,
    ramp_time: f64,
}

impl ExternalField {
    /// Requires `magnitude ≥ 0`, finite `orientation`, `magnet_length > 0`
    /// and `ramp_time > 0`. The orientation is kept unreduced.
    pub fn new(
        magnitude: f64,
        orientation: f64,
        magnet_length: f64,
        ramp_time: f64,
    ) -> Result<Self> {
        require("b_ext", magnitude, magnitude >= 0.0, "must be ≥ 0")?;
        require("theta", orientation, true, "must be finite")?;
        require("l", magnet_length, magnet_length > 0.0, "must be > 0")?;
        require("tau", ramp_time, ramp_time > 0.0, "must be > 0")?;
        Ok(ExternalField {
            magnitude,
            orientation,
            magnet_length,
            ramp_time,
        })
    }

    /// B_ext
    pub fn magnitude(&self) -> f64 {
        self.magnitude
    }

    /// ϑ
    pub fn orientation(&self) -> f64 {
        self.orientation
    }

    /// l
    pub fn magnet_length(&self) -> f64 {
        self.magnet_length
    }

    /// τ
    pub fn ramp_time(&self) -> f64 {
        self.ramp_time
    }

    /// `(0, −sinϑ, cosϑ)·B_ext`
    pub fn vector(&self) -> Vec3 {
        let (sin, cos) = self.orientation.sin_cos();
        Vec3::new(0.0, -sin * self.magnitude, cos * self.magnitude)
    }

    pub fn with_magnitude(&self, magnitude: f64) -> Result<Self> {
        ExternalField::new(
            magnitude,
            self.orientation,
            self.magnet_length,
            self.ramp_time,
        )
    }

    pub fn with_orientation(&self, orientation: f64) -> Result<Self> {
        ExternalField::new(
            self.magnitude,
            orientation,
            self.magnet_length,
            self.ramp_time,
        )
    }

    /// B_ext → sB_ext; companion of [`NeutronBeam::with_field_scale`].
    pub fn with_field_scale(&self, s: f64) -> Result<Self> {
        require("s", s, s > 0.0, "field scale must be > 0")?;
        self.with_magnitude(self.magnitude * s)
    }
}

/// Electric and magnetic field at one space-time point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FieldState {
    pub e: Vec3,
    pub b: Vec3,
    pub x: f64,
    pub t: f64,
}

impl FieldState {
    pub fn is_finite(&self) -> bool {
        self.e.is_finite() && self.b.is_finite() && self.x.is_finite() && self.t.is_finite()
    }
}

/// Which sign the kinetic-potential shift takes during the interaction.
///
/// A neutral particle keeps its total energy density, so the kinetic part
/// drops by exactly the electromagnetic gain.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum MediumMode {
    #[default]
    Neutral,
    ChargedPlus,
    ChargedMinus,
}

impl MediumMode {
    pub fn sign(self) -> f64 {
        match self {
            MediumMode::Neutral | MediumMode::ChargedMinus => -1.0,
            MediumMode::ChargedPlus => 1.0,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            MediumMode::Neutral => "neutral",
            MediumMode::ChargedPlus => "charged_plus",
            MediumMode::ChargedMinus => "charged_minus",
        }
    }
}

impl std::str::FromStr for MediumMode {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.to_ascii_lowercase().replace('-', "_").as_str() {
            "neutral" => Ok(MediumMode::Neutral),
            "charged_plus" | "chargedplus" | "plus" => Ok(MediumMode::ChargedPlus),
            "charged_minus" | "chargedminus" | "minus" => Ok(MediumMode::ChargedMinus),
            other => Err(format!(
                "unknown mode `{other}` (expected neutral, charged_plus or charged_minus)"
            )),
        }
    }
}
