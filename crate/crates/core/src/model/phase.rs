use std::f64::consts::TAU;

use super::{velocity_delta, ExternalField, NeutronBeam};
use crate::error::{Error, Result};

/// Phase picked up by the beam that crosses the magnet.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhaseResult {
    /// Velocity change Δu (magnitude).
    pub delta_u: f64,
    /// Unwrapped phase `2π·(l/λ)·B_ext/√(ρ̄u₀²)`.
    pub phase_raw: f64,
    /// `floor(phase_raw / 2π)`
    pub wrap_count: u64,
    /// `phase_raw − 2π·wrap_count`, in `[0, 2π)`.
    pub alpha: f64,
}

/// Phase difference of the disturbed beam after crossing a magnet of length
/// `l` in time `t₁ = l/u₀`.
pub fn phase_shift(beam: &NeutronBeam, ext: &ExternalField) -> PhaseResult {
    let delta_u = velocity_delta(beam, ext);
    let u0 = beam.speed();
    let phase_raw = TAU
        * (ext.magnet_length() / beam.wavelength())
        * (ext.magnitude() / (beam.mean_density() * u0 * u0).sqrt());
    let (wrap_count, alpha) = wrap(phase_raw);
    PhaseResult {
        delta_u,
        phase_raw,
        wrap_count,
        alpha,
    }
}

/// Splits a nonnegative phase into whole turns and a remainder in `[0, 2π)`.
fn wrap(phase_raw: f64) -> (u64, f64) {
    let mut turns = (phase_raw / TAU).floor();
    let mut alpha = phase_raw - TAU * turns;
    // floor of a rounded quotient can be one turn off
    if alpha < 0.0 {
        turns -= 1.0;
        alpha += TAU;
    } else if alpha >= TAU {
        turns += 1.0;
        alpha -= TAU;
    }
    (turns.max(0.0) as u64, alpha.max(0.0))
}

/// B_ext increment that advances the unwrapped phase by `k·2π`:
/// `ΔB = k·λ·√ρ̄·u₀ / l`.
pub fn phase_period(beam: &NeutronBeam, ext: &ExternalField, k: f64) -> Result<f64> {
    if !(k.is_finite() && k > 0.0) {
        return Err(Error::InvalidParameter {
            name: "k",
            value: k,
            reason: "phase multiple must be > 0",
        });
    }
    Ok(k * beam.wavelength() * beam.mean_density().sqrt() * beam.speed() / ext.magnet_length())
}
