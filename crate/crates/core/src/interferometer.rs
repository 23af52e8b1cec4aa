//! Two-path recombination.
//!
//! Beam I crosses the magnet and picks up the phase of
//! [`phase_shift`](crate::model::phase_shift); beam II is undisturbed. The
//! ideal interferometer recombines equal amplitudes, so the normalized
//! output intensity is `cos²(α/2)`.

use std::f64::consts::TAU;
use std::path::Path;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::model::{
    classical_interaction_energy, em_potential, phase_shift, ramped_fields, ExternalField,
    NeutronBeam, Vec3,
};
use crate::table::{emit_csv, Table};

/// Normalized two-beam intensity `cos²(phase/2)`, evaluated as
/// `(1 + cos phase)/2` so the constructive and destructive points are exact.
pub fn recombine_intensity(phase: f64) -> f64 {
    0.5 * (1.0 + phase.cos())
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InterferogramSample {
    pub b_ext: f64,
    pub phase_raw: f64,
    pub alpha: f64,
    pub intensity: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Interferogram {
    pub samples: Vec<InterferogramSample>,
    pub beam: NeutronBeam,
    /// Orientation, magnet length and ramp time; the magnitude is swept.
    pub ext_template: ExternalField,
    pub b_min: f64,
    pub b_max: f64,
    pub count: usize,
}

impl Interferogram {
    pub fn b_values(&self) -> Vec<f64> {
        self.samples.iter().map(|s| s.b_ext).collect()
    }

    pub fn intensities(&self) -> Vec<f64> {
        self.samples.iter().map(|s| s.intensity).collect()
    }

    /// Fringe period in B_ext recovered from the samples: `2π` over the
    /// least-squares slope of the unwrapped phase.
    pub fn measured_period(&self) -> f64 {
        let xs = self.b_values();
        let ys: Vec<f64> = self.samples.iter().map(|s| s.phase_raw).collect();
        let fit = LineFit::least_squares(&xs, &ys);
        TAU / fit.slope
    }

    /// B_ext of interior samples that are local intensity minima.
    pub fn intensity_minima(&self) -> Vec<f64> {
        self.samples
            .windows(3)
            .filter(|w| w[1].intensity < w[0].intensity && w[1].intensity <= w[2].intensity)
            .map(|w| w[1].b_ext)
            .collect()
    }

    pub fn to_table(&self) -> Table {
        let columns = ["b_ext", "phase_raw", "alpha_wrapped", "intensity"]
            .map(String::from)
            .to_vec();
        let rows = self
            .samples
            .iter()
            .map(|s| vec![s.b_ext, s.phase_raw, s.alpha, s.intensity])
            .collect();
        Table::from_rows(columns, rows).expect("four columns per row")
    }

    pub fn write_csv(&self, path: &Path) -> Result<()> {
        emit_csv(&self.to_table(), path)
    }
}

/// Ordinary least-squares line `y = slope·x + intercept`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LineFit {
    pub slope: f64,
    pub intercept: f64,
    /// Euclidean norm of the residuals.
    pub residual_norm: f64,
}

impl LineFit {
    pub fn least_squares(xs: &[f64], ys: &[f64]) -> LineFit {
        assert_eq!(xs.len(), ys.len());
        let n = xs.len() as f64;
        let mean_x = xs.iter().sum::<f64>() / n;
        let mean_y = ys.iter().sum::<f64>() / n;
        let (mut sxy, mut sxx) = (0.0, 0.0);
        for (x, y) in xs.iter().zip(ys) {
            sxy += (x - mean_x) * (y - mean_y);
            sxx += (x - mean_x) * (x - mean_x);
        }
        let slope = sxy / sxx;
        let intercept = mean_y - slope * mean_x;
        let residual_norm = xs
            .iter()
            .zip(ys)
            .map(|(x, y)| {
                let r = y - (slope * x + intercept);
                r * r
            })
            .sum::<f64>()
            .sqrt();
        LineFit {
            slope,
            intercept,
            residual_norm,
        }
    }
}

/// `count` equally spaced values on `[min, max]`, endpoints exact.
pub(crate) fn linspace(min: f64, max: f64, count: usize) -> Vec<f64> {
    let span = max - min;
    (0..count)
        .map(|i| {
            if i + 1 == count {
                max
            } else {
                min + span * (i as f64 / (count - 1) as f64)
            }
        })
        .collect()
}

/// Interferogram over `count` equally spaced external field magnitudes.
pub fn sweep_interferogram(
    beam: &NeutronBeam,
    ext_template: &ExternalField,
    b_min: f64,
    b_max: f64,
    count: usize,
) -> Result<Interferogram> {
    if count < 2 {
        return Err(Error::InsufficientData(format!(
            "an interferogram needs at least 2 samples, got {count}"
        )));
    }
    if !(b_min.is_finite() && b_max.is_finite() && 0.0 <= b_min && b_min < b_max) {
        return Err(Error::Domain(format!(
            "field sweep needs 0 ≤ b_min < b_max, got [{b_min}, {b_max}]"
        )));
    }
    let fields = linspace(b_min, b_max, count);
    if fields.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::Domain(format!(
            "{count} samples on [{b_min}, {b_max}] are not distinct in f64"
        )));
    }
    let samples = fields
        .par_iter()
        .map(|&b_ext| {
            let ext = ext_template.with_magnitude(b_ext)?;
            let phase = phase_shift(beam, &ext);
            Ok(InterferogramSample {
                b_ext,
                phase_raw: phase.phase_raw,
                alpha: phase.alpha,
                intensity: recombine_intensity(phase.alpha),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Interferogram {
        samples,
        beam: *beam,
        ext_template: *ext_template,
        b_min,
        b_max,
        count,
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OrientationRow {
    pub theta: f64,
    pub em_potential: f64,
    pub classical_energy: f64,
}

/// Interaction potential and classical moment energy across orientations.
///
/// The potential comes from the full end-of-ramp fields at `x = u₀τ`,
/// `t = τ`; the classical energy uses `μ = (0, 0, moment)`.
pub fn orientation_sweep(
    beam: &NeutronBeam,
    ext: &ExternalField,
    thetas: &[f64],
    moment: f64,
) -> Result<Vec<OrientationRow>> {
    if thetas.is_empty() {
        return Err(Error::InsufficientData(
            "orientation sweep needs at least one angle".into(),
        ));
    }
    let tau = ext.ramp_time();
    let x = beam.speed() * tau;
    let mu = Vec3::new(0.0, 0.0, moment);
    thetas
        .par_iter()
        .map(|&theta| {
            let rotated = ext.with_orientation(theta)?;
            let state = ramped_fields(beam, &rotated, x, tau)?;
            Ok(OrientationRow {
                theta,
                em_potential: em_potential(&state, beam.speed())?,
                classical_energy: classical_interaction_energy(mu, &rotated),
            })
        })
        .collect()
}

pub fn orientation_table(rows: &[OrientationRow]) -> Table {
    let columns = ["theta", "em_potential", "classical_energy"]
        .map(String::from)
        .to_vec();
    let rows = rows
        .iter()
        .map(|r| vec![r.theta, r.em_potential, r.classical_energy])
        .collect();
    Table::from_rows(columns, rows).expect("three columns per row")
}

pub fn write_orientation_csv(rows: &[OrientationRow], path: &Path) -> Result<()> {
    emit_csv(&orientation_table(rows), path)
}

/// Equally spaced orientations on `[0, theta_max]`.
pub fn orientation_grid(theta_max: f64, count: usize) -> Result<Vec<f64>> {
    if count == 0 {
        return Err(Error::InsufficientData(
            "need at least one orientation".into(),
        ));
    }
    if !theta_max.is_finite() {
        return Err(Error::Domain(format!(
            "theta_max = {theta_max} must be finite"
        )));
    }
    Ok(if count == 1 {
        vec![0.0]
    } else {
        linspace(0.0, theta_max, count)
    })
}
