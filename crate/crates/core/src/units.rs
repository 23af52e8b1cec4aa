//! Natural-unit annotations.
//!
//! Every quantity is a plain `f64` in a Gaussian-like natural unit system in
//! which an energy density and the square of a magnetic field share units, so
//! `ρ̄ (Δu)² = B_ext²` holds without conversion constants. The labels here
//! document the intended dimension of each input; nothing is converted.

/// Dimension of a model quantity, for labels and help text.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Dimension {
    Length,
    Time,
    Speed,
    Field,
    Density,
    Angle,
    EnergyDensity,
    Dimensionless,
}

impl Dimension {
    pub fn label(self) -> &'static str {
        match self {
            Dimension::Length => "length",
            Dimension::Time => "time",
            Dimension::Speed => "length/time",
            Dimension::Field => "field",
            Dimension::Density => "field²·time²/length²",
            Dimension::Angle => "rad",
            Dimension::EnergyDensity => "field²",
            Dimension::Dimensionless => "1",
        }
    }
}
