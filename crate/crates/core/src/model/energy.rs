use super::{ExternalField, FieldState, MediumMode, NeutronBeam, Vec3};
use crate::error::{Error, Result};

/// Electromagnetic energy density `½(|E|²/u² + |B|²)`.
pub fn em_potential(state: &FieldState, u: f64) -> Result<f64> {
    if !(u.is_finite() && u > 0.0) {
        return Err(Error::Domain(format!(
            "propagation speed u = {u} must be > 0"
        )));
    }
    Ok(0.5 * (state.e.norm_squared() / (u * u) + state.b.norm_squared()))
}

/// Interaction potential in collapsed form, `B₀²cos²(phase_arg) + B_ext²`.
///
/// The field orientation does not enter.
pub fn em_potential_collapsed(beam: &NeutronBeam, ext: &ExternalField, phase_arg: f64) -> f64 {
    let wave = beam.intrinsic_amplitude() * phase_arg.cos();
    let b_ext = ext.magnitude();
    wave * wave + b_ext * b_ext
}

/// Classical moment energy `−μ·B_ext`, which does depend on ϑ.
pub fn classical_interaction_energy(mu: Vec3, ext: &ExternalField) -> f64 {
    -mu.dot(ext.vector())
}

/// Magnitude of the velocity change, `Δu = B_ext/√ρ̄`, from `ρ̄(Δu)² = B_ext²`.
pub fn velocity_delta(beam: &NeutronBeam, ext: &ExternalField) -> f64 {
    ext.magnitude() / beam.mean_density().sqrt()
}

/// Shift of the kinetic potential during the interaction, `±ρ̄(Δu)²`.
///
/// Neutral and negatively charged media take the minus branch, giving
/// `−B_ext²`.
pub fn kinetic_shift(beam: &NeutronBeam, ext: &ExternalField, mode: MediumMode) -> f64 {
    let du = velocity_delta(beam, ext);
    mode.sign() * beam.mean_density() * du * du
}
