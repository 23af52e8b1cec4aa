use super::{ExternalField, FieldState, NeutronBeam, Vec3};
use crate::error::{Error, Result};

/// Intrinsic plane-wave fields of the beam:
/// `E = (0, E₀, 0)·cos(k₀x − ω₀t)`, `B = (0, 0, B₀)·cos(k₀x − ω₀t)`.
pub fn intrinsic_fields(beam: &NeutronBeam, x: f64, t: f64) -> FieldState {
    let c = beam.phase_argument(x, t).cos();
    FieldState {
        e: Vec3::new(0.0, beam.electric_amplitude() * c, 0.0),
        b: Vec3::new(0.0, 0.0, beam.intrinsic_amplitude() * c),
        x,
        t,
    }
}

/// Intrinsic fields modified by the linearly ramped external field.
///
/// At `t = τ` this is the end-of-ramp state
///
/// ```text
/// E_y' = E₀cos(k₀x − ω₀t) − B_ext·(cosϑ/τ)·x
/// E_z' = −B_ext·(sinϑ/τ)·x
/// B_y' = −B_ext·sinϑ
/// B_z' = B₀cos(k₀x − ω₀t) + B_ext·cosϑ
/// ```
///
/// For `t < τ` the external contribution to B is scaled by `t/τ`; the
/// induced E terms keep their end-of-ramp form. Queries are restricted to
/// the interaction region `0 ≤ x ≤ u₀τ`, `0 ≤ t ≤ τ`.
pub fn ramped_fields(
    beam: &NeutronBeam,
    ext: &ExternalField,
    x: f64,
    t: f64,
) -> Result<FieldState> {
    let tau = ext.ramp_time();
    let x_max = beam.speed() * tau;
    if !(0.0..=tau).contains(&t) {
        return Err(Error::Domain(format!(
            "t = {t} lies outside the ramp interval 0 ≤ t ≤ tau = {tau}"
        )));
    }
    if !(0.0..=x_max).contains(&x) {
        return Err(Error::Domain(format!(
            "x = {x} lies outside the interaction region 0 ≤ x ≤ u0·tau = {x_max}"
        )));
    }

    let intrinsic = intrinsic_fields(beam, x, t);
    let (sin, cos) = ext.orientation().sin_cos();
    let b_ext = ext.magnitude();
    let ramp = t / tau;

    let induced_e = Vec3::new(0.0, -b_ext * (cos / tau) * x, -b_ext * (sin / tau) * x);
    let applied_b = Vec3::new(0.0, -b_ext * sin * ramp, b_ext * cos * ramp);

    Ok(FieldState {
        e: intrinsic.e + induced_e,
        b: intrinsic.b + applied_b,
        x,
        t,
    })
}
